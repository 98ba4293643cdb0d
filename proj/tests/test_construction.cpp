#include "doctest.h"

#include "pgturan/construction.hpp"

#include <algorithm>
#include <set>

using namespace pgturan;

namespace {

struct Oracle
{
    long count = 0;
    std::vector<std::vector<int>> edges;
};

// Every r-subset in lex order, filtered by per-part intersection sizes.
Oracle enumerate_oracle(const PartitionSpec& s)
{
    std::vector<int> label;
    const auto sizes = s.layout();
    for (std::size_t p = 0; p < sizes.size(); ++p)
        label.insert(label.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
    const int n = static_cast<int>(label.size());
    const int r = s.q + 1;
    Oracle out;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    if (n < r)
        return out;
    while (true) {
        std::vector<int> per(sizes.size(), 0);
        for (int v : idx)
            ++per[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
        bool ok = per[0] >= 1 && per[0] <= s.q;
        std::size_t first_small = 1;
        if (s.scheme == Scheme::ArcCover) {
            ok = ok && per[1] <= 2;
            first_small = 2;
        }
        for (std::size_t p = first_small; p < per.size(); ++p)
            ok = ok && per[p] <= 1;
        if (ok) {
            ++out.count;
            out.edges.push_back(idx);
        }
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void check_witness(const Hypergraph& h, const Geometry& g, const EmbeddingResult& r)
{
    REQUIRE(r.witness.size() == static_cast<std::size_t>(g.num_points()));
    std::set<int> image(r.witness.begin(), r.witness.end());
    CHECK(image.size() == r.witness.size());
    std::set<std::vector<int>> edges(h.edges.begin(), h.edges.end());
    for (const auto& l : g.lines()) {
        std::vector<int> e;
        for (auto p : l.points)
            e.push_back(r.witness[static_cast<std::size_t>(p)]);
        std::sort(e.begin(), e.end());
        CHECK(edges.count(e) == 1);
    }
}

} // namespace

TEST_CASE("exact edge counts agree with enumeration on random part sizes")
{
    std::uint64_t state = 77;
    auto next = [&](int mod) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(mod));
    };
    int tested = 0;
    while (tested < 60) {
        const int q = 2 + next(3);
        const auto scheme = next(2) == 0 ? Scheme::BlockingSet : Scheme::ArcCover;
        const int nparts = next(6);
        std::vector<int> parts;
        for (int i = 0; i < nparts; ++i)
            parts.push_back(next(4));
        const int x = next(8);
        const int y = scheme == Scheme::ArcCover ? next(6) : 0;
        const auto spec = make_partition_from_sizes(scheme, q, 2, x, y, parts);
        if (spec.n > 20)
            continue;
        ++tested;
        CAPTURE(spec.n);
        CAPTURE(q);
        const auto oracle = enumerate_oracle(spec);
        CHECK(count_edges_exact(spec) == oracle.count);
        const auto h = build_hypergraph(spec);
        CHECK(h.edges == oracle.edges);
        for (const auto& e : h.edges)
            CHECK(edge_satisfies_scheme(spec, e));
    }
}

TEST_CASE("partition rounding")
{
    const std::vector<double> rates{1.0 / 7.0};
    const auto s = make_partition(14, 2, 2, Scheme::BlockingSet, rates, 6);
    CHECK(s.x_size == 2);
    CHECK(s.parts == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(s.rates.size() == 2);

    const std::vector<double> uneven{0.25, 0.25, 0.25};
    const auto a = make_partition(10, 3, 2, Scheme::ArcCover, uneven, 2);
    const auto sizes = a.layout();
    CHECK(sizes == std::vector<int>{3, 3, 2, 2});

    const std::vector<double> bad{0.5};
    CHECK_THROWS_AS(make_partition(10, 2, 2, Scheme::BlockingSet, bad, 6), std::invalid_argument);
    const std::vector<double> off{0.5, 0.5, 0.5};
    CHECK_THROWS_AS(make_partition(10, 3, 2, Scheme::ArcCover, off, 1), std::invalid_argument);
}

TEST_CASE("blocking scheme part count")
{
    CHECK(blocking_scheme_parts(2, 2, 0) == 6);
    CHECK(blocking_scheme_parts(2, 3, 7) == 5);
    CHECK(blocking_scheme_parts(3, 2, 0) == 14);
    CHECK_THROWS(blocking_scheme_parts(2, 3, 13));
}

TEST_CASE("counts beyond enumeration and the displayed lower bound")
{
    const std::vector<double> rates{0.1};
    const auto s = make_partition(1000, 3, 2, Scheme::BlockingSet, rates, 5);
    CHECK(displayed_edge_lower_bound(s) <= count_edges_exact(s));
    CHECK(count_edges_exact(s) > 0);
    CHECK_THROWS_AS(build_hypergraph(s), std::length_error);
    CHECK(build_hypergraph(make_partition(22, 3, 2, Scheme::BlockingSet, rates, 5), 22).n == 22);
}

TEST_CASE("complete hypergraph")
{
    const auto h = make_complete_hypergraph(8, 3);
    CHECK(h.edges.size() == 56);
    CHECK(std::is_sorted(h.edges.begin(), h.edges.end()));
}

TEST_CASE("embedding: complete and planted copies are found")
{
    const auto fano = build_geometry(2, 2);
    const auto k7 = make_complete_hypergraph(7, 3);
    const auto r = contains_subgeometry(k7, fano);
    CHECK(r.verdict == EmbeddingVerdict::Yes);
    check_witness(k7, fano, r);

    // Plant PG_2(3) on a shuffled vertex set among noise edges.
    const auto g3 = build_geometry(2, 3);
    Hypergraph h;
    h.n = 20;
    h.r = 4;
    h.part.assign(20, 0);
    std::vector<int> place = {17, 3, 11, 0, 6, 19, 8, 14, 2, 9, 12, 5, 15};
    std::set<std::vector<int>> edges;
    for (const auto& l : g3.lines()) {
        std::vector<int> e;
        for (auto p : l.points)
            e.push_back(place[static_cast<std::size_t>(p)]);
        std::sort(e.begin(), e.end());
        edges.insert(e);
    }
    std::uint64_t state = 5;
    while (edges.size() < 200) {
        std::set<int> e;
        while (e.size() < 4) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            e.insert(static_cast<int>((state >> 33) % 20));
        }
        edges.insert(std::vector<int>(e.begin(), e.end()));
    }
    h.edges.assign(edges.begin(), edges.end());
    const auto planted = contains_subgeometry(h, g3);
    CHECK(planted.verdict == EmbeddingVerdict::Yes);
    check_witness(h, g3, planted);

    // fewer vertices than points
    CHECK(contains_subgeometry(make_complete_hypergraph(12, 4), g3).verdict == EmbeddingVerdict::No);
}

TEST_CASE("embedding: the constructions are free of the geometry")
{
    {
        const std::vector<double> rates{1.0 / 7.0};
        const auto spec = make_partition(14, 2, 2, Scheme::BlockingSet, rates, 6);
        const auto h = build_hypergraph(spec);
        CHECK(h.edges.size() == 132);
        CHECK(contains_subgeometry(h, build_geometry(2, 2)).verdict == EmbeddingVerdict::No);
    }
    {
        const std::vector<double> rates{0.5948588940, 0.3216013121, 0.0835397939};
        const auto spec = make_partition(16, 3, 2, Scheme::ArcCover, rates, 1);
        const auto h = build_hypergraph(spec);
        CHECK(contains_subgeometry(h, build_geometry(2, 3)).verdict == EmbeddingVerdict::No);
    }
}

TEST_CASE("embedding respects the deadline and the uniformity")
{
    const auto fano = build_geometry(2, 2);
    const auto r = contains_subgeometry(make_complete_hypergraph(7, 3), fano, Deadline::after(0));
    CHECK(r.verdict == EmbeddingVerdict::Timeout);
    CHECK_THROWS(contains_subgeometry(make_complete_hypergraph(7, 4), fano));
}
