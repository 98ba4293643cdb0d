#include "pgturan/collineation.hpp"

#include <stdexcept>

namespace pgturan {

namespace {

Elem frob_pow(const FieldTable& f, Elem a, int power)
{
    for (int i = 0; i < power; ++i)
        a = f.frobenius(a);
    return a;
}

void require_plane(const Geometry& g)
{
    if (g.m() != 2)
        throw std::invalid_argument("collineations are implemented for planes only");
}

} // namespace

Mat3 mat_mul(const FieldTable& f, const Mat3& a, const Mat3& b)
{
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s = 0;
            for (int k = 0; k < 3; ++k)
                s = f.add(s, f.mul(a[static_cast<std::size_t>(3 * i + k)], b[static_cast<std::size_t>(3 * k + j)]));
            r[static_cast<std::size_t>(3 * i + j)] = s;
        }
    return r;
}

std::optional<Mat3> mat_inverse(const FieldTable& f, const Mat3& a)
{
    // Gauss-Jordan on [a | I].
    std::array<std::array<Elem, 6>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(3 * i + j)];
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(3 + j)] = i == j ? 1 : 0;
        }
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        while (pivot < 3 && m[pivot][col] == 0)
            ++pivot;
        if (pivot == 3)
            return std::nullopt;
        std::swap(m[pivot], m[col]);
        const Elem s = f.inv(m[col][col]);
        for (auto& x : m[col])
            x = f.mul(x, s);
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Elem factor = m[r][col];
            for (std::size_t c = 0; c < 6; ++c)
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
        }
    }
    Mat3 inv{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            inv[3 * i + j] = m[i][3 + j];
    return inv;
}

std::optional<Mat3> frame_matrix(const Geometry& g, std::array<PointId, 4> pts)
{
    require_plane(g);
    const auto& f = g.field();
    // Columns are the first three points; solve for the scalars giving the fourth.
    Mat3 basis{};
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t r = 0; r < 3; ++r)
            basis[3 * r + c] = g.point(pts[c]).coords[r];
    const auto binv = mat_inverse(f, basis);
    if (!binv)
        return std::nullopt;
    const auto& p4 = g.point(pts[3]).coords;
    std::array<Elem, 3> lambda{};
    for (std::size_t r = 0; r < 3; ++r) {
        Elem s = 0;
        for (std::size_t k = 0; k < 3; ++k)
            s = f.add(s, f.mul((*binv)[3 * r + k], p4[k]));
        if (s == 0)
            return std::nullopt;
        lambda[r] = s;
    }
    Mat3 m{};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            m[3 * r + c] = f.mul(basis[3 * r + c], lambda[c]);
    return m;
}

std::optional<Collineation> projectivity(const Geometry& g, std::array<PointId, 4> from, std::array<PointId, 4> to)
{
    const auto a = frame_matrix(g, from);
    const auto b = frame_matrix(g, to);
    if (!a || !b)
        return std::nullopt;
    const auto ainv = mat_inverse(g.field(), *a);
    Collineation c;
    c.matrix = mat_mul(g.field(), *b, *ainv);
    return c;
}

std::array<PointId, 4> standard_frame(const Geometry& g)
{
    require_plane(g);
    const std::array<Elem, 3> e[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    return {g.find_point(e[0]), g.find_point(e[1]), g.find_point(e[2]), g.find_point(e[3])};
}

int automorphism_count(const FieldTable& f)
{
    return f.k();
}

PointId Collineation::apply(const Geometry& g, PointId p) const
{
    require_plane(g);
    const auto& f = g.field();
    const auto& c = g.point(p).coords;
    std::array<Elem, 3> s{};
    for (std::size_t i = 0; i < 3; ++i)
        s[i] = frob_pow(f, c[i], frobenius_power);
    std::array<Elem, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) {
        Elem acc = 0;
        for (std::size_t k = 0; k < 3; ++k)
            acc = f.add(acc, f.mul(matrix[3 * i + k], s[k]));
        r[i] = acc;
    }
    return g.find_point(r);
}

std::vector<PointId> Collineation::apply(const Geometry& g, std::span<const PointId> pts) const
{
    std::vector<PointId> out;
    out.reserve(pts.size());
    for (auto p : pts)
        out.push_back(apply(g, p));
    return out;
}

BitSet Collineation::apply(const Geometry& g, const BitSet& pts) const
{
    BitSet out(pts.size());
    pts.for_each([&](int p) { out.set(static_cast<std::size_t>(apply(g, p))); });
    return out;
}

} // namespace pgturan
