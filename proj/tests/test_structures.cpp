#include "doctest.h"

#include "pgturan/structures.hpp"

#include <algorithm>

using namespace pgturan;

namespace {

// Direct definition, point lists only.
bool blocking_oracle(const Geometry& g, const std::vector<bool>& in)
{
    for (const auto& l : g.lines()) {
        int c = 0;
        for (auto p : l.points)
            c += in[static_cast<std::size_t>(p)] ? 1 : 0;
        if (c == 0 || c == static_cast<int>(l.points.size()))
            return false;
    }
    return true;
}

int max_blocking_oracle(const Geometry& g)
{
    const int n = g.num_points();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best)
            continue;
        std::vector<bool> in(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            in[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
        if (blocking_oracle(g, in))
            best = size;
    }
    return best;
}

bool collinear_triple(const Geometry& g, const std::vector<PointId>& pts)
{
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c)
                if (g.incident(pts[c], g.line_through(pts[a], pts[b])))
                    return true;
    return false;
}

} // namespace

TEST_CASE("blocking sets of PG_2(2) and PG_2(3) against exhaustive scan")
{
    const auto g2 = build_geometry(2, 2);
    CHECK(max_blocking_oracle(g2) == -1);
    CHECK_FALSE(max_blocking_set_size(g2).size.has_value());
    CHECK(max_blocking_set_size(g2).exact);

    const auto g3 = build_geometry(2, 3);
    const int oracle = max_blocking_oracle(g3);
    CHECK(oracle == 7);
    const auto r = max_blocking_set_size(g3);
    REQUIRE(r.size.has_value());
    CHECK(*r.size == oracle);
    CHECK(is_blocking_set(g3, r.witness));
    CHECK(static_cast<int>(r.witness.count()) == oracle);
}

TEST_CASE("is_blocking_set matches the definition on random subsets")
{
    const auto g = build_geometry(2, 4);
    std::uint64_t state = 12345;
    for (int trial = 0; trial < 300; ++trial) {
        auto s = g.empty_point_set();
        std::vector<bool> in(static_cast<std::size_t>(g.num_points()));
        for (int p = 0; p < g.num_points(); ++p) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            if ((state >> 33) % 2) {
                s.set(static_cast<std::size_t>(p));
                in[static_cast<std::size_t>(p)] = true;
            }
        }
        CHECK(is_blocking_set(g, s) == blocking_oracle(g, in));
    }
}

TEST_CASE("symmetry reduction does not change the smallest blocking set")
{
    for (int q : {3, 4}) {
        const auto g = build_geometry(2, q);
        const auto with = min_blocking_set_branch_and_bound(g, {}, true);
        const auto without = min_blocking_set_branch_and_bound(g, {}, false);
        REQUIRE(with.size.has_value());
        REQUIRE(without.size.has_value());
        CHECK(*with.size == *without.size);
        CHECK(is_blocking_set(g, with.witness));
        // complement of a blocking set is a blocking set
        CHECK(is_blocking_set(g, with.witness.complement()));
    }
}

TEST_CASE("blocking maxima for q = 4, 5 and none in PG_3(2)")
{
    CHECK(*max_blocking_set_size(build_geometry(2, 4)).size == 14);
    CHECK(*max_blocking_set_size(build_geometry(2, 5)).size == 22);
    CHECK_FALSE(max_blocking_set_size(build_geometry(3, 2)).size.has_value());
}

TEST_CASE("arc predicate against collinear triples")
{
    const auto g = build_geometry(2, 5);
    std::uint64_t state = 99;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<PointId> pts;
        for (int p = 0; p < g.num_points(); ++p) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            if ((state >> 33) % 6 == 0)
                pts.push_back(p);
        }
        CHECK(is_arc(g, make_point_set(g, pts)) == !collinear_triple(g, pts));
    }
}

TEST_CASE("complete arcs: sizes, passants and classes")
{
    struct Expect
    {
        int q;
        int smallest;
        int largest;
    };
    for (auto e : {Expect{3, 4, 4}, Expect{4, 6, 6}, Expect{5, 6, 6}, Expect{7, 6, 8}, Expect{8, 6, 10}}) {
        CAPTURE(e.q);
        const auto g = build_geometry(2, e.q);
        const auto en = enumerate_complete_arcs(g);
        REQUIRE(en.complete);
        REQUIRE_FALSE(en.arcs.empty());
        CHECK(en.arcs.front().size() == e.smallest);
        int largest = 0;
        for (const auto& a : en.arcs) {
            CHECK(is_complete_arc(g, a.points));
            CHECK(a.secant_counts[0] + a.secant_counts[1] + a.secant_counts[2] == g.num_lines());
            const int k = a.size();
            CHECK(a.secant_counts[2] == k * (k - 1) / 2);
            CHECK(a.secant_counts[1] == k * (e.q + 1 - (k - 1)));
            largest = std::max(largest, k);
        }
        CHECK(largest == e.largest);
    }
}

TEST_CASE("complete 6-arcs of PG_2(7) and PG_2(8) fall into 2 and 1 classes")
{
    for (auto [q, expected] : {std::pair{7, 2}, std::pair{8, 1}}) {
        const auto g = build_geometry(2, q);
        const auto en = enumerate_complete_arcs(g);
        std::vector<PointSet> six;
        for (const auto& a : en.arcs)
            if (a.size() == 6)
                six.push_back(a.points);
        const auto cls = classify_up_to_collineation(g, six);
        CHECK(static_cast<int>(cls.classes.size()) == expected);
        for (std::size_t i = 0; i < six.size(); ++i) {
            std::size_t c = 0;
            while (std::find(cls.classes[c].begin(), cls.classes[c].end(), i) == cls.classes[c].end())
                ++c;
            const auto& rep = six[cls.classes[c].front()];
            CHECK(cls.to_member[i].apply(g, rep) == six[i]);
        }
    }
}

TEST_CASE("find_collineation on a projective image")
{
    const auto g = build_geometry(2, 7);
    const auto en = enumerate_complete_arcs(g);
    const auto& arc = en.arcs.front().points;
    Collineation c;
    c.matrix = {1, 2, 0, 0, 1, 3, 4, 0, 1};
    const auto image = c.apply(g, arc);
    const auto found = find_collineation(g, arc, image);
    REQUIRE(found.has_value());
    CHECK(found->apply(g, arc) == image);
}

TEST_CASE("max_concurrency counts lines through a point")
{
    const auto g = build_geometry(2, 3);
    const auto& through = g.lines_through(0);
    CHECK(max_concurrency(g, through) == 4);
    std::vector<LineId> two = {through[0], through[1]};
    CHECK(max_concurrency(g, two) == 2);
}

TEST_CASE("arc routines refuse non-planar geometry")
{
    const auto g = build_geometry(3, 2);
    CHECK_THROWS(is_arc(g, g.empty_point_set()));
}
