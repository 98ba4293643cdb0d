#include "doctest.h"

#include "pgturan/covering.hpp"

#include <algorithm>

using namespace pgturan;

namespace {

// Smallest hitting set by increasing subset size; universe of at most 20 points.
int hitting_oracle(std::uint32_t universe, const std::vector<std::uint32_t>& family)
{
    int best = 99;
    for (std::uint32_t s = universe;; s = (s - 1) & universe) {
        const int size = std::popcount(s);
        if (size < best && std::all_of(family.begin(), family.end(), [&](std::uint32_t f) { return (f & s) != 0; }))
            best = size;
        if (s == 0)
            break;
    }
    return best;
}

// Is there a set of k points off the arc meeting every passant?
bool covers_with(const Geometry& g, const std::vector<PointId>& candidates, const std::vector<LineId>& passants, int k,
                 std::vector<PointId>& chosen, std::size_t from = 0)
{
    if (static_cast<int>(chosen.size()) == k) {
        for (auto l : passants)
            if (std::none_of(chosen.begin(), chosen.end(), [&](PointId p) { return g.incident(p, l); }))
                return false;
        return true;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
        chosen.push_back(candidates[i]);
        if (covers_with(g, candidates, passants, k, chosen, i + 1))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

TEST_CASE("hitting set matches exhaustive search on random families")
{
    std::uint64_t state = 2024;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state >> 33);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + static_cast<int>(next() % 11);
        const std::uint32_t universe = (next() | next()) & ((1U << n) - 1);
        const int members = 1 + static_cast<int>(next() % 9);
        std::vector<std::uint32_t> fam;
        for (int i = 0; i < members; ++i) {
            std::uint32_t f = next() & next() & universe;
            if (f == 0)
                f = universe & (~universe + 1U); // lowest universe point
            if (f == 0)
                continue;
            fam.push_back(f);
        }
        if (universe == 0)
            continue;
        PointSet u(static_cast<std::size_t>(n));
        std::vector<PointSet> family;
        for (int i = 0; i < n; ++i)
            if ((universe >> i) & 1U)
                u.set(static_cast<std::size_t>(i));
        for (auto f : fam) {
            PointSet s(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                if ((f >> i) & 1U)
                    s.set(static_cast<std::size_t>(i));
            family.push_back(s);
        }
        const auto r = min_hitting_set(u, family);
        CAPTURE(trial);
        CHECK(r.optimal);
        CHECK(r.minimum_size == (fam.empty() ? 0 : hitting_oracle(universe, fam)));
        CHECK(static_cast<int>(r.witness.count()) == r.minimum_size);
        CHECK(r.witness.is_subset_of(u));
        for (const auto& f : family)
            CHECK(f.intersects(r.witness));
    }
}

TEST_CASE("hitting set rejects a member outside the universe")
{
    PointSet u(4);
    u.set(0);
    PointSet f(4);
    f.set(2);
    std::vector<PointSet> fam = {f};
    CHECK_THROWS(min_hitting_set(u, fam));
    CHECK(min_hitting_set(u, {}).minimum_size == 0);
}

TEST_CASE("m(K) for the complete arcs of PG_2(5) against exhaustive covers")
{
    const auto g = build_geometry(2, 5);
    const auto en = enumerate_complete_arcs(g);
    for (const auto& arc : en.arcs) {
        const auto r = m_of_arc(g, arc);
        REQUIRE(r.optimal);
        std::vector<PointId> off;
        for (PointId p = 0; p < g.num_points(); ++p)
            if (!arc.points.test(static_cast<std::size_t>(p)))
                off.push_back(p);
        std::vector<PointId> chosen;
        CHECK(covers_with(g, off, arc.passant_ids, r.minimum_size, chosen));
        chosen.clear();
        CHECK_FALSE(covers_with(g, off, arc.passant_ids, r.minimum_size - 1, chosen));
    }
}

TEST_CASE("m(K) is invariant under collineations")
{
    const auto g = build_geometry(2, 7);
    const auto en = enumerate_complete_arcs(g);
    Collineation c;
    c.matrix = {2, 1, 0, 0, 3, 1, 1, 0, 2};
    for (const auto& arc : en.arcs) {
        if (arc.size() != 6)
            continue;
        const auto image = secant_profile(g, c.apply(g, arc.points));
        CHECK(m_of_arc(g, arc).minimum_size == m_of_arc(g, image).minimum_size);
    }
}

TEST_CASE("m(K) needs a complete arc")
{
    const auto g = build_geometry(2, 5);
    std::vector<PointId> two = {0, 1};
    CHECK_THROWS(m_of_arc(g, secant_profile(g, make_point_set(g, two))));
}

TEST_CASE("M(q) for q = 3, 4, 5, 7")
{
    for (auto [q, expected] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 4}, std::pair{7, 6}}) {
        CAPTURE(q);
        const auto rep = compute_Mq(build_geometry(2, q));
        CHECK(rep.optimal);
        CHECK(rep.M == expected);
        CHECK(rep.M <= q - 1);
        CHECK(rep.max_over_classes >= rep.M);
        for (const auto& c : rep.classes)
            CHECK(c.m_consistent);
    }
}

TEST_CASE("passant analysis is consistent with the secant profile")
{
    const auto g = build_geometry(2, 8);
    const auto en = enumerate_complete_arcs(g);
    for (const auto& arc : en.arcs) {
        const auto a = passant_analysis(g, arc.points);
        CHECK(a.passant_count == arc.passants());
        CHECK(a.passants == arc.passant_ids);
        int incidences = 0;
        for (auto t : a.through)
            incidences += t;
        CHECK(incidences == a.passant_count * (g.q() + 1));
        for (auto p : a.peak_points)
            CHECK(static_cast<int>(passants_through(g, a, p).size()) == a.peak);
    }
}

TEST_CASE("published case analyses for the 6-arcs check out")
{
    const auto a = verify_appendix(build_geometry(2, 7), 'A');
    CHECK(a.all_passed());
    CHECK(a.checks.size() >= 40);
    const auto b = verify_appendix(build_geometry(2, 8), 'B');
    CHECK(b.all_passed());
    for (const auto& c : a.checks)
        if (!c.passed)
            MESSAGE(c.id << " expected " << c.expected << " computed " << c.computed);
    CHECK_THROWS(verify_appendix(build_geometry(2, 5), 'A'));
}
