#include "pgturan/construction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace pgturan {

namespace {

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// e_0..e_kmax of the given sizes.
std::vector<mpz_class> elementary_symmetric(std::span<const int> sizes, int kmax)
{
    std::vector<mpz_class> e(static_cast<std::size_t>(kmax) + 1, 0);
    e[0] = 1;
    for (auto s : sizes)
        for (int k = kmax; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * s;
    return e;
}

std::vector<int> largest_remainder(int n, std::span<const double> shares)
{
    std::vector<int> sizes(shares.size());
    std::vector<std::pair<double, std::size_t>> rem;
    int assigned = 0;
    for (std::size_t i = 0; i < shares.size(); ++i) {
        const double target = shares[i] * n;
        sizes[i] = static_cast<int>(std::floor(target + 1e-9));
        assigned += sizes[i];
        rem.emplace_back(target - sizes[i], i);
    }
    // Ties go to the earlier part so the result is deterministic.
    std::stable_sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t j = 0; assigned < n; ++j, ++assigned)
        ++sizes[rem[j % rem.size()].second];
    return sizes;
}

/// Per-part upper bound on |e ∩ part| in vertex layout order.
std::vector<int> part_caps(const PartitionSpec& spec)
{
    std::vector<int> caps{spec.q};
    if (spec.scheme == Scheme::ArcCover)
        caps.push_back(2);
    caps.insert(caps.end(), spec.parts.size(), 1);
    return caps;
}

} // namespace

const char* scheme_name(Scheme s)
{
    return s == Scheme::BlockingSet ? "t2" : "t3";
}

std::vector<int> PartitionSpec::layout() const
{
    std::vector<int> out{x_size};
    if (scheme == Scheme::ArcCover)
        out.push_back(y_size);
    out.insert(out.end(), parts.begin(), parts.end());
    return out;
}

void PartitionSpec::validate() const
{
    if (q < 2)
        throw std::invalid_argument("q must be at least 2");
    const auto sizes = layout();
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 0; }))
        throw std::invalid_argument("part sizes must be nonnegative");
    if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
        throw std::invalid_argument("part sizes must sum to n");
    if (scheme == Scheme::BlockingSet && y_size != 0)
        throw std::invalid_argument("the blocking-set scheme has no Y part");
}

int blocking_scheme_parts(int m, int q, int k)
{
    int s = 0;
    int pw = 1;
    for (int i = 1; i <= m; ++i) {
        pw *= q;
        s += pw;
    }
    if (k < 0 || k > s)
        throw std::invalid_argument("blocking-set size out of range");
    return s - k;
}

PartitionSpec make_partition(int n, int q, int m, Scheme scheme, std::span<const double> rates, int parts)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    if (parts < 0)
        throw std::invalid_argument("number of parts must be nonnegative");
    for (auto r : rates)
        if (!(r >= 0.0))
            throw std::invalid_argument("rates must be nonnegative");

    PartitionSpec spec;
    spec.scheme = scheme;
    spec.n = n;
    spec.q = q;
    spec.m = m;
    spec.rates.assign(rates.begin(), rates.end());

    std::vector<double> shares;
    if (scheme == Scheme::BlockingSet) {
        if (rates.empty() || rates.size() > 2)
            throw std::invalid_argument("blocking-set scheme takes alpha or alpha,beta");
        const double alpha = rates[0];
        const double beta = rates.size() == 2 ? rates[1] : 1.0 - parts * alpha;
        if (beta < -1e-9 || std::abs(beta + parts * alpha - 1.0) > 1e-9)
            throw std::invalid_argument("infeasible rates: need beta = 1 - t*alpha >= 0");
        spec.rates = {alpha, std::max(beta, 0.0)};
        shares.push_back(std::max(beta, 0.0));
        shares.insert(shares.end(), static_cast<std::size_t>(parts), alpha);
    } else {
        if (rates.size() != 3)
            throw std::invalid_argument("arc-cover scheme takes alpha,beta,gamma");
        if (std::abs(rates[0] + rates[1] + parts * rates[2] - 1.0) > 1e-9)
            throw std::invalid_argument("infeasible rates: need alpha + beta + (M-1)*gamma = 1");
        shares = {rates[0], rates[1]};
        shares.insert(shares.end(), static_cast<std::size_t>(parts), rates[2]);
    }

    const auto sizes = largest_remainder(n, shares);
    spec.x_size = sizes[0];
    std::size_t next = 1;
    if (scheme == Scheme::ArcCover)
        spec.y_size = sizes[next++];
    spec.parts.assign(sizes.begin() + static_cast<std::ptrdiff_t>(next), sizes.end());
    spec.validate();
    return spec;
}

PartitionSpec make_partition_from_sizes(Scheme scheme, int q, int m, int x_size, int y_size, std::vector<int> parts)
{
    PartitionSpec spec;
    spec.scheme = scheme;
    spec.q = q;
    spec.m = m;
    spec.x_size = x_size;
    spec.y_size = scheme == Scheme::ArcCover ? y_size : 0;
    spec.parts = std::move(parts);
    const auto sizes = spec.layout();
    spec.n = std::accumulate(sizes.begin(), sizes.end(), 0);
    spec.validate();
    return spec;
}

int default_enumeration_limit(int q)
{
    return q == 2 ? 40 : q == 3 ? 25 : 20;
}

Hypergraph build_hypergraph(const PartitionSpec& spec, std::optional<int> limit)
{
    spec.validate();
    const int max_n = limit.value_or(default_enumeration_limit(spec.q));
    if (spec.n > max_n)
        throw std::length_error("n = " + std::to_string(spec.n) + " exceeds the enumeration limit " + std::to_string(max_n));

    Hypergraph h;
    h.n = spec.n;
    h.r = spec.uniformity();
    const auto sizes = spec.layout();
    const auto caps = part_caps(spec);
    for (std::size_t p = 0; p < sizes.size(); ++p)
        h.part.insert(h.part.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));

    // Vertices are contiguous per part, so a vertex-order DFS with part caps
    // emits edges in lexicographic order.
    std::vector<int> used(sizes.size(), 0);
    std::vector<int> edge;
    auto rec = [&](auto&& self, int v) -> void {
        if (static_cast<int>(edge.size()) == h.r) {
            if (used[0] >= 1)
                h.edges.push_back(edge);
            return;
        }
        if (h.n - v < h.r - static_cast<int>(edge.size()))
            return;
        for (int w = v; w < h.n; ++w) {
            const auto p = static_cast<std::size_t>(h.part[static_cast<std::size_t>(w)]);
            if (used[p] >= caps[p])
                continue;
            ++used[p];
            edge.push_back(w);
            self(self, w + 1);
            edge.pop_back();
            --used[p];
        }
    };
    rec(rec, 0);
    return h;
}

Hypergraph make_complete_hypergraph(int n, int r)
{
    if (n < 0 || r < 1)
        throw std::invalid_argument("need n >= 0 and r >= 1");
    Hypergraph h;
    h.n = n;
    h.r = r;
    h.part.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> edge;
    auto rec = [&](auto&& self, int v) -> void {
        if (static_cast<int>(edge.size()) == r) {
            h.edges.push_back(edge);
            return;
        }
        for (int w = v; w < n; ++w) {
            edge.push_back(w);
            self(self, w + 1);
            edge.pop_back();
        }
    };
    rec(rec, 0);
    return h;
}

bool edge_satisfies_scheme(const PartitionSpec& spec, std::span<const int> edge)
{
    if (static_cast<int>(edge.size()) != spec.uniformity())
        return false;
    const auto sizes = spec.layout();
    const auto caps = part_caps(spec);
    std::vector<int> start(sizes.size() + 1, 0);
    for (std::size_t p = 0; p < sizes.size(); ++p)
        start[p + 1] = start[p] + sizes[p];
    std::vector<int> hits(sizes.size(), 0);
    for (std::size_t i = 0; i < edge.size(); ++i) {
        const int v = edge[i];
        if (v < 0 || v >= spec.n || (i > 0 && edge[i - 1] >= v))
            return false;
        const auto p = static_cast<std::size_t>(std::upper_bound(start.begin(), start.end(), v) - start.begin() - 1);
        ++hits[p];
    }
    if (hits[0] < 1)
        return false;
    for (std::size_t p = 0; p < hits.size(); ++p)
        if (hits[p] > caps[p])
            return false;
    return true;
}

mpz_class count_edges_exact(const PartitionSpec& spec)
{
    spec.validate();
    const int r = spec.uniformity();
    const auto e = elementary_symmetric(spec.parts, r);
    mpz_class total = 0;
    for (int i = 1; i <= spec.q; ++i) {
        const mpz_class cx = binomial(spec.x_size, i);
        if (spec.scheme == Scheme::BlockingSet) {
            total += cx * e[static_cast<std::size_t>(r - i)];
        } else {
            for (int j = 0; j <= 2 && i + j <= r; ++j)
                total += cx * binomial(spec.y_size, j) * e[static_cast<std::size_t>(r - i - j)];
        }
    }
    return total;
}

mpz_class displayed_edge_lower_bound(const PartitionSpec& spec)
{
    if (spec.rates.size() < 2)
        throw std::invalid_argument("the floored estimate needs the generating rates");
    const long n = spec.n;
    const int r = spec.uniformity();
    const long t = static_cast<long>(spec.parts.size());
    auto fl = [n](double rate) { return static_cast<long>(std::floor(rate * n + 1e-9)); };
    mpz_class total = 0;
    if (spec.scheme == Scheme::BlockingSet) {
        const long a = fl(spec.rates[0]);
        const long b = fl(spec.rates[1]);
        for (int i = 1; i <= spec.q; ++i) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(r - i));
            total += binomial(b, i) * binomial(t, r - i) * pw;
        }
    } else {
        const long a = fl(spec.rates[0]);
        const long b = fl(spec.rates[1]);
        const long c = fl(spec.rates[2]);
        for (int i = 1; i <= spec.q; ++i)
            for (int j = 0; j <= 2 && i + j <= r; ++j) {
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(r - i - j));
                total += binomial(a, i) * binomial(b, j) * binomial(t, r - i - j) * pw;
            }
    }
    return total;
}

const char* verdict_name(EmbeddingVerdict v)
{
    switch (v) {
    case EmbeddingVerdict::Yes:
        return "yes";
    case EmbeddingVerdict::No:
        return "no";
    case EmbeddingVerdict::Timeout:
        return "timeout";
    }
    return "?";
}

namespace {

using Mask = std::uint64_t;

bool is_automorphism(const std::unordered_set<Mask>& edges, const std::vector<int>& perm)
{
    for (auto e : edges) {
        Mask img = 0;
        for (Mask w = e; w; w &= w - 1)
            img |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(w))];
        if (!edges.count(img))
            return false;
    }
    return true;
}

class EmbeddingSearch
{
public:
    EmbeddingSearch(const Hypergraph& h, const Geometry& pattern, Deadline deadline)
        : h_(h), g_(pattern), deadline_(deadline)
    {
        for (const auto& e : h.edges) {
            Mask m = 0;
            for (auto v : e)
                m |= Mask{1} << v;
            edges_.insert(m);
        }
        for (auto e : edges_) {
            // Every proper sub-mask with at least two vertices.
            for (Mask s = (e - 1) & e; s; s = (s - 1) & e)
                if (std::popcount(s) >= 2)
                    subedges_.insert(s);
        }
        build_order();
        build_classes();
    }

    EmbeddingResult run()
    {
        EmbeddingResult res;
        image_.assign(order_.size(), -1);
        const bool found = g_.num_points() <= h_.n && recurse(0);
        res.explored_nodes = nodes_;
        if (found) {
            res.verdict = EmbeddingVerdict::Yes;
            res.witness.assign(static_cast<std::size_t>(g_.num_points()), -1);
            for (std::size_t i = 0; i < order_.size(); ++i)
                res.witness[static_cast<std::size_t>(order_[i])] = image_[i];
        } else {
            res.verdict = timed_out_ ? EmbeddingVerdict::Timeout : EmbeddingVerdict::No;
        }
        return res;
    }

private:
    struct Check
    {
        std::vector<int> positions; // earlier positions of the line's mapped points
        bool closes = false;        // line fully mapped after this step
    };

    void build_order()
    {
        const int np = g_.num_points();
        std::vector<int> mapped_on_line(static_cast<std::size_t>(g_.num_lines()), 0);
        std::vector<bool> placed(static_cast<std::size_t>(np), false);
        std::vector<int> pos(static_cast<std::size_t>(np), -1);
        const int r = g_.q() + 1;
        for (int step = 0; step < np; ++step) {
            int best = -1;
            std::pair<int, int> best_key{-1, -1};
            for (PointId p = 0; p < np; ++p) {
                if (placed[static_cast<std::size_t>(p)])
                    continue;
                int closes = 0;
                int touches = 0;
                for (auto l : g_.lines_through(p)) {
                    const int c = mapped_on_line[static_cast<std::size_t>(l)];
                    closes += c == r - 1;
                    touches += c;
                }
                const std::pair<int, int> key{closes, touches};
                if (key > best_key) {
                    best_key = key;
                    best = p;
                }
            }
            placed[static_cast<std::size_t>(best)] = true;
            pos[static_cast<std::size_t>(best)] = step;
            order_.push_back(best);
            std::vector<Check> checks;
            for (auto l : g_.lines_through(best)) {
                Check c;
                for (auto x : g_.line(l).points)
                    if (x != best && placed[static_cast<std::size_t>(x)])
                        c.positions.push_back(pos[static_cast<std::size_t>(x)]);
                ++mapped_on_line[static_cast<std::size_t>(l)];
                c.closes = mapped_on_line[static_cast<std::size_t>(l)] == r;
                if (!c.positions.empty())
                    checks.push_back(std::move(c));
            }
            checks_.push_back(std::move(checks));
        }
    }

    /// Vertex classes: maximal runs of a part whose adjacent transpositions
    /// are automorphisms; parts are grouped when swapping them is one.
    void build_classes()
    {
        const int n = h_.n;
        std::vector<int> identity(static_cast<std::size_t>(n));
        std::iota(identity.begin(), identity.end(), 0);
        for (int v = 0; v < n;) {
            std::vector<int> cls{v};
            int w = v + 1;
            while (w < n && h_.part[static_cast<std::size_t>(w)] == h_.part[static_cast<std::size_t>(v)]) {
                auto perm = identity;
                std::swap(perm[static_cast<std::size_t>(w - 1)], perm[static_cast<std::size_t>(w)]);
                if (!is_automorphism(edges_, perm))
                    break;
                cls.push_back(w++);
            }
            classes_.push_back(std::move(cls));
            v = w;
        }
        swap_leader_.assign(classes_.size(), -1);
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            for (std::size_t d = 0; d < c; ++d) {
                if (swap_leader_[d] != -1 || classes_[d].size() != classes_[c].size())
                    continue;
                auto perm = identity;
                for (std::size_t i = 0; i < classes_[c].size(); ++i)
                    std::swap(perm[static_cast<std::size_t>(classes_[c][i])], perm[static_cast<std::size_t>(classes_[d][i])]);
                if (is_automorphism(edges_, perm)) {
                    swap_leader_[c] = static_cast<int>(d);
                    break;
                }
            }
        }
        class_used_.assign(classes_.size(), 0);
    }

    bool consistent(std::size_t step, int v) const
    {
        for (const auto& c : checks_[step]) {
            Mask m = Mask{1} << v;
            for (auto p : c.positions)
                m |= Mask{1} << image_[static_cast<std::size_t>(p)];
            if (c.closes ? !edges_.count(m) : !subedges_.count(m))
                return false;
        }
        return true;
    }

    bool recurse(std::size_t step)
    {
        ++nodes_;
        if (deadline_.poll()) {
            timed_out_ = true;
            return false;
        }
        if (step == order_.size())
            return true;
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            const auto used = static_cast<std::size_t>(class_used_[c]);
            if (used == classes_[c].size())
                continue;
            // An untouched class equivalent to an earlier untouched one adds nothing new.
            if (used == 0 && swap_leader_[c] != -1) {
                const int lead = swap_leader_[c];
                bool skip = class_used_[static_cast<std::size_t>(lead)] == 0;
                for (std::size_t d = static_cast<std::size_t>(lead) + 1; d < c && !skip; ++d)
                    skip = swap_leader_[d] == lead && class_used_[d] == 0;
                if (skip)
                    continue;
            }
            // Vertices of a class are taken in order, so the next one is classes_[c][used].
            const int v = classes_[c][used];
            if (!consistent(step, v))
                continue;
            image_[step] = v;
            ++class_used_[c];
            if (recurse(step + 1))
                return true;
            --class_used_[c];
            image_[step] = -1;
            if (timed_out_)
                return false;
        }
        return false;
    }

    const Hypergraph& h_;
    const Geometry& g_;
    Deadline deadline_;
    std::unordered_set<Mask> edges_;
    std::unordered_set<Mask> subedges_;
    std::vector<int> order_;
    std::vector<std::vector<Check>> checks_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> swap_leader_;
    std::vector<int> class_used_;
    std::vector<int> image_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
};

} // namespace

EmbeddingResult contains_subgeometry(const Hypergraph& h, const Geometry& pattern, Deadline deadline)
{
    if (h.n > 64)
        throw std::invalid_argument("embedding search supports at most 64 vertices");
    if (h.r != pattern.q() + 1)
        throw std::invalid_argument("pattern lines and hypergraph edges differ in size");
    EmbeddingSearch search(h, pattern, deadline);
    return search.run();
}

} // namespace pgturan
