#include "pgturan/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pgturan {

namespace {

constexpr std::size_t max_coordinate_codes = std::size_t{1} << 24;

std::array<Elem, 3> cross(const FieldTable& f, std::span<const Elem> a, std::span<const Elem> b)
{
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

/// Splits "a,b,c" (already stripped of brackets) on commas.
std::vector<std::string_view> split_commas(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            out.push_back(strip(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

std::vector<std::string_view> bracketed_groups(std::string_view text, char open, char close)
{
    std::vector<std::string_view> groups;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto a = text.find(open, i);
        if (a == std::string_view::npos)
            break;
        const auto b = text.find(close, a);
        if (b == std::string_view::npos)
            throw std::invalid_argument("unbalanced '" + std::string(1, open) + "' in: " + std::string(text));
        groups.push_back(text.substr(a, b - a + 1));
        i = b + 1;
    }
    return groups;
}

std::vector<Elem> parse_tuple(const FieldTable& f, std::string_view text, char open, char close)
{
    text = strip(text);
    if (text.size() < 2 || text.front() != open || text.back() != close)
        throw std::invalid_argument("expected " + std::string(1, open) + "..." + std::string(1, close) + ": " + std::string(text));
    std::vector<Elem> coords;
    for (auto part : split_commas(text.substr(1, text.size() - 2)))
        coords.push_back(parse_element(f, part));
    return coords;
}

} // namespace

long long projective_point_count(int m, int q)
{
    long long s = 0;
    long long p = 1;
    for (int i = 0; i <= m; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

long long projective_line_count(int m, int q)
{
    // Gaussian binomial [m+1 choose 2]_q = (q^{m+1}-1)(q^{m+1}-q) / ((q^2-1)(q^2-q)).
    long long qm1 = 1;
    for (int i = 0; i <= m; ++i)
        qm1 *= q;
    return (qm1 - 1) * (qm1 - q) / ((static_cast<long long>(q) * q - 1) * (static_cast<long long>(q) * q - q));
}

Geometry::Geometry(int m, FieldTable field) : m_(m), field_(std::move(field))
{
    if (m < 2)
        throw std::invalid_argument("projective dimension must be at least 2");
    const auto q = static_cast<std::size_t>(field_.q());
    const auto dim = static_cast<std::size_t>(m) + 1;
    std::size_t codes = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        codes *= q;
        if (codes > max_coordinate_codes)
            throw std::invalid_argument("PG_" + std::to_string(m) + "(" + std::to_string(q) + ") is too large");
    }

    code_to_point_.assign(codes, -1);
    std::vector<Elem> v(dim, 0);
    for (std::size_t code = 0; code < codes; ++code) {
        std::size_t c = code;
        for (std::size_t i = dim; i-- > 0;) {
            v[i] = static_cast<Elem>(c % q);
            c /= q;
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
        if (lead == v.end() || *lead != 1)
            continue;
        code_to_point_[code] = static_cast<PointId>(points_.size());
        points_.push_back(ProjPoint{v});
    }

    const auto n = points_.size();
    pair_line_.assign(n * n, -1);
    std::vector<Elem> w(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pair_line_[i * n + j] >= 0)
                continue;
            const auto id = static_cast<LineId>(lines_.size());
            ProjLine line;
            line.points.push_back(static_cast<PointId>(i));
            for (Elem c = 0; c < field_.q(); ++c) {
                for (std::size_t t = 0; t < dim; ++t)
                    w[t] = field_.add(points_[j].coords[t], field_.mul(c, points_[i].coords[t]));
                line.points.push_back(find_point(w));
            }
            std::sort(line.points.begin(), line.points.end());
            line.points.erase(std::unique(line.points.begin(), line.points.end()), line.points.end());
            for (std::size_t a = 0; a < line.points.size(); ++a)
                for (std::size_t b = 0; b < line.points.size(); ++b)
                    if (a != b) {
                        auto& slot = pair_line_[static_cast<std::size_t>(line.points[a]) * n + static_cast<std::size_t>(line.points[b])];
                        if (slot < 0)
                            slot = id;
                    }
            if (m_ == 2)
                line.dual = cross(field_, points_[i].coords, points_[j].coords);
            lines_.push_back(std::move(line));
        }
    }

    line_points_.reserve(lines_.size());
    point_lines_.assign(n, BitSet(lines_.size()));
    lines_through_.assign(n, {});
    for (std::size_t l = 0; l < lines_.size(); ++l) {
        line_points_.push_back(BitSet::from_indices(n, lines_[l].points));
        for (auto p : lines_[l].points) {
            point_lines_[static_cast<std::size_t>(p)].set(l);
            lines_through_[static_cast<std::size_t>(p)].push_back(static_cast<LineId>(l));
        }
    }

    if (m_ == 2) {
        dual_to_line_.assign(codes, -1);
        for (std::size_t l = 0; l < lines_.size(); ++l) {
            auto d = normalize(*lines_[l].dual);
            lines_[l].dual = std::array<Elem, 3>{d[0], d[1], d[2]};
            dual_to_line_[encode(d)] = static_cast<LineId>(l);
        }
    }
}

std::size_t Geometry::encode(std::span<const Elem> coords) const
{
    std::size_t code = 0;
    for (auto c : coords)
        code = code * static_cast<std::size_t>(field_.q()) + static_cast<std::size_t>(c);
    return code;
}

std::vector<Elem> Geometry::normalize(std::span<const Elem> coords) const
{
    if (coords.size() != static_cast<std::size_t>(m_) + 1)
        throw std::invalid_argument("expected " + std::to_string(m_ + 1) + " coordinates, got " + std::to_string(coords.size()));
    std::vector<Elem> v(coords.begin(), coords.end());
    for (auto c : v)
        if (c < 0 || c >= field_.q())
            throw std::invalid_argument("coordinate out of field range");
    const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (lead == v.end())
        throw std::invalid_argument("the zero vector is not a projective point");
    const Elem s = field_.inv(*lead);
    for (auto& c : v)
        c = field_.mul(c, s);
    return v;
}

PointId Geometry::find_point(std::span<const Elem> coords) const
{
    const auto p = code_to_point_[encode(normalize(coords))];
    if (p < 0)
        throw std::logic_error("normalized coordinates not indexed");
    return p;
}

LineId Geometry::find_line(std::array<Elem, 3> dual) const
{
    if (m_ != 2)
        throw std::invalid_argument("line coordinates are only defined for planes");
    const auto l = dual_to_line_[encode(normalize(dual))];
    if (l < 0)
        throw std::logic_error("line coordinates not indexed");
    return l;
}

LineId Geometry::line_through(PointId a, PointId b) const
{
    const auto n = static_cast<PointId>(points_.size());
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::out_of_range("point id out of range");
    if (a == b)
        throw std::invalid_argument("line_through needs two distinct points");
    return pair_line_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
}

std::string Geometry::check_invariants() const
{
    std::ostringstream err;
    const int q = field_.q();
    if (num_points() != projective_point_count(m_, q)) {
        err << "point count " << num_points() << " != " << projective_point_count(m_, q);
        return err.str();
    }
    if (num_lines() != projective_line_count(m_, q)) {
        err << "line count " << num_lines() << " != " << projective_line_count(m_, q);
        return err.str();
    }
    const auto n = points_.size();
    std::vector<std::uint8_t> pair_count(n * n, 0);
    for (std::size_t l = 0; l < lines_.size(); ++l) {
        const auto& pts = lines_[l].points;
        if (static_cast<int>(pts.size()) != q + 1) {
            err << "line " << l << " has " << pts.size() << " points";
            return err.str();
        }
        for (auto a : pts)
            for (auto b : pts)
                if (a < b)
                    ++pair_count[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
        if (m_ == 2) {
            const auto& d = *lines_[l].dual;
            for (PointId p = 0; p < num_points(); ++p) {
                const auto& c = points_[static_cast<std::size_t>(p)].coords;
                const Elem dot = field_.add(field_.add(field_.mul(c[0], d[0]), field_.mul(c[1], d[1])), field_.mul(c[2], d[2]));
                if ((dot == 0) != incident(p, static_cast<LineId>(l))) {
                    err << "line coordinates of line " << l << " disagree with incidence at point " << p;
                    return err.str();
                }
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (pair_count[a * n + b] != 1) {
                err << "points " << a << "," << b << " lie on " << int(pair_count[a * n + b]) << " common lines";
                return err.str();
            }
    long long degree = 0;
    long long qp = 1;
    for (int i = 0; i < m_; ++i) {
        degree += qp;
        qp *= q;
    }
    for (std::size_t p = 0; p < n; ++p)
        if (static_cast<long long>(lines_through_[p].size()) != degree) {
            err << "point " << p << " lies on " << lines_through_[p].size() << " lines, expected " << degree;
            return err.str();
        }
    return {};
}

Geometry build_geometry(int m, int q)
{
    return Geometry(m, FieldTable::of_order(q));
}

std::string format_element(const FieldTable& f, Elem a)
{
    if (f.is_prime_field() || a == 0 || a == 1)
        return std::to_string(a);
    const int e = f.log(a);
    return e == 1 ? std::string("ω") : "ω^" + std::to_string(e);
}

Elem parse_element(const FieldTable& f, std::string_view text)
{
    text = strip(text);
    if (text.empty())
        throw std::invalid_argument("empty field element");
    static constexpr std::string_view superscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    static constexpr std::string_view unicode_minus = "−";

    bool negative = false;
    if (text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    } else if (text.starts_with(unicode_minus)) {
        negative = true;
        text.remove_prefix(unicode_minus.size());
    }
    text = strip(text);

    Elem value = 0;
    if (text.starts_with("ω") || text.starts_with("w")) {
        if (f.primitive() < 0)
            throw std::invalid_argument("powers of ω need a field");
        text.remove_prefix(text.starts_with("w") ? 1 : std::string_view("ω").size());
        long long e = 1;
        if (!text.empty()) {
            if (text.front() == '^') {
                text.remove_prefix(1);
                if (text.empty())
                    throw std::invalid_argument("missing exponent");
                e = 0;
                for (char ch : text) {
                    if (!std::isdigit(static_cast<unsigned char>(ch)))
                        throw std::invalid_argument("malformed exponent");
                    e = e * 10 + (ch - '0');
                }
            } else {
                e = 0;
                while (!text.empty()) {
                    bool matched = false;
                    for (int d = 0; d < 10; ++d)
                        if (text.starts_with(superscripts[d])) {
                            e = e * 10 + d;
                            text.remove_prefix(superscripts[d].size());
                            matched = true;
                            break;
                        }
                    if (!matched)
                        throw std::invalid_argument("malformed field element");
                }
            }
        }
        value = f.exp(static_cast<int>(e % (f.q() - 1)));
    } else {
        long long n = 0;
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("malformed field element: " + std::string(text));
            n = n * 10 + (ch - '0');
            if (n > 1'000'000)
                throw std::invalid_argument("integer label too large");
        }
        if (!f.is_prime_field() && n > 1)
            throw std::invalid_argument("integer labels other than 0 and 1 are ambiguous in GF(" + std::to_string(f.q()) + ")");
        value = f.from_integer(n);
    }
    return negative ? f.neg(value) : value;
}

std::string format_point(const Geometry& g, PointId p)
{
    std::string s = "(";
    const auto& c = g.point(p).coords;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            s += ',';
        s += format_element(g.field(), c[i]);
    }
    return s + ")";
}

std::string format_line(const Geometry& g, LineId l)
{
    const auto& line = g.line(l);
    if (line.dual) {
        std::string s = "[";
        for (std::size_t i = 0; i < 3; ++i) {
            if (i)
                s += ',';
            s += format_element(g.field(), (*line.dual)[i]);
        }
        return s + "]";
    }
    std::string s = "{";
    for (std::size_t i = 0; i < line.points.size(); ++i) {
        if (i)
            s += ',';
        s += format_point(g, line.points[i]);
    }
    return s + "}";
}

PointId parse_point(const Geometry& g, std::string_view text)
{
    return g.find_point(parse_tuple(g.field(), text, '(', ')'));
}

LineId parse_line(const Geometry& g, std::string_view text)
{
    if (g.m() != 2)
        throw std::invalid_argument("line coordinates are only defined for planes");
    auto c = parse_tuple(g.field(), text, '[', ']');
    if (c.size() != 3)
        throw std::invalid_argument("line coordinates need three entries");
    return g.find_line({c[0], c[1], c[2]});
}

std::vector<PointId> parse_point_list(const Geometry& g, std::string_view text)
{
    std::vector<PointId> out;
    for (auto group : bracketed_groups(text, '(', ')'))
        out.push_back(parse_point(g, group));
    return out;
}

std::vector<LineId> parse_line_list(const Geometry& g, std::string_view text)
{
    std::vector<LineId> out;
    for (auto group : bracketed_groups(text, '[', ']'))
        out.push_back(parse_line(g, group));
    return out;
}

} // namespace pgturan
