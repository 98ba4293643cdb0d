#include "pgturan/structures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pgturan {

namespace {

void require_plane(const Geometry& g, const char* what)
{
    if (g.m() != 2)
        throw std::invalid_argument(std::string(what) + " is defined for planes (m = 2) only");
}

/// State for the smallest-blocking-set branch-and-bound.
class MinBlockingSearch
{
public:
    MinBlockingSearch(const Geometry& g, Deadline deadline)
        : g_(g), q_(g.q()), deadline_(deadline),
          hit_(static_cast<std::size_t>(g.num_lines()), 0),
          avail_(static_cast<std::size_t>(g.num_lines()), g.q() + 1),
          state_(static_cast<std::size_t>(g.num_points()), Free),
          unhit_(g.num_lines()),
          best_(g.num_points() + 1)
    {
    }

    bool can_choose(PointId p) const
    {
        for (auto l : g_.lines_through(p))
            if (hit_[static_cast<std::size_t>(l)] >= q_)
                return false;
        return true;
    }

    void choose(PointId p)
    {
        state_[static_cast<std::size_t>(p)] = Chosen;
        current_.push_back(p);
        for (auto l : g_.lines_through(p)) {
            auto& h = hit_[static_cast<std::size_t>(l)];
            if (h++ == 0)
                --unhit_;
            --avail_[static_cast<std::size_t>(l)];
        }
    }

    void unchoose(PointId p)
    {
        state_[static_cast<std::size_t>(p)] = Free;
        current_.pop_back();
        for (auto l : g_.lines_through(p)) {
            auto& h = hit_[static_cast<std::size_t>(l)];
            if (--h == 0)
                ++unhit_;
            ++avail_[static_cast<std::size_t>(l)];
        }
    }

    void exclude(PointId p)
    {
        state_[static_cast<std::size_t>(p)] = Excluded;
        for (auto l : g_.lines_through(p))
            --avail_[static_cast<std::size_t>(l)];
    }

    void include_back(PointId p)
    {
        state_[static_cast<std::size_t>(p)] = Free;
        for (auto l : g_.lines_through(p))
            ++avail_[static_cast<std::size_t>(l)];
    }

    void run()
    {
        recurse();
    }

    int best() const { return best_; }
    const std::vector<PointId>& best_set() const { return best_set_; }
    bool timed_out() const { return timed_out_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    enum State : std::uint8_t { Free, Chosen, Excluded };

    void recurse()
    {
        ++nodes_;
        if (deadline_.poll()) {
            timed_out_ = true;
            return;
        }
        const int chosen = static_cast<int>(current_.size());
        if (unhit_ == 0) {
            if (chosen < best_) {
                best_ = chosen;
                best_set_ = current_;
            }
            return;
        }
        // Each new point hits at most q+1 lines.
        if (chosen + (unhit_ + q_) / (q_ + 1) >= best_)
            return;

        LineId branch = -1;
        int fewest = q_ + 2;
        for (LineId l = 0; l < g_.num_lines(); ++l)
            if (hit_[static_cast<std::size_t>(l)] == 0 && avail_[static_cast<std::size_t>(l)] < fewest) {
                fewest = avail_[static_cast<std::size_t>(l)];
                branch = l;
            }
        if (fewest == 0)
            return;

        std::vector<PointId> excluded;
        for (auto p : g_.line(branch).points) {
            if (state_[static_cast<std::size_t>(p)] != Free)
                continue;
            if (can_choose(p)) {
                choose(p);
                recurse();
                unchoose(p);
                if (timed_out_)
                    break;
            }
            exclude(p);
            excluded.push_back(p);
        }
        for (auto p : excluded)
            include_back(p);
    }

    const Geometry& g_;
    int q_;
    Deadline deadline_;
    std::vector<int> hit_;
    std::vector<int> avail_;
    std::vector<State> state_;
    int unhit_;
    int best_;
    std::vector<PointId> current_;
    std::vector<PointId> best_set_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
};

/// Histogram of passants-through counts over points, plus the secant
/// profile; invariant under collineations.
std::vector<int> arc_invariant(const Geometry& g, const PointSet& arc)
{
    const auto rec = secant_profile(g, arc);
    std::vector<int> through(static_cast<std::size_t>(g.num_points()), 0);
    for (auto l : rec.passant_ids)
        for (auto p : g.line(l).points)
            ++through[static_cast<std::size_t>(p)];
    std::vector<int> hist(static_cast<std::size_t>(g.q()) + 2, 0);
    for (auto c : through)
        ++hist[static_cast<std::size_t>(c)];
    std::vector<int> inv{rec.size(), rec.secant_counts[0], rec.secant_counts[1], rec.secant_counts[2]};
    inv.insert(inv.end(), hist.begin(), hist.end());
    return inv;
}

} // namespace

PointSet make_point_set(const Geometry& g, std::span<const PointId> pts)
{
    PointSet s = g.empty_point_set();
    for (auto p : pts) {
        if (p < 0 || p >= g.num_points())
            throw std::out_of_range("point id out of range");
        s.set(static_cast<std::size_t>(p));
    }
    return s;
}

bool is_blocking_set(const Geometry& g, const PointSet& s)
{
    for (LineId l = 0; l < g.num_lines(); ++l) {
        const auto c = s.intersection_count(g.line_points(l));
        if (c < 1 || c > static_cast<std::size_t>(g.q()))
            return false;
    }
    return true;
}

BlockingSearchResult max_blocking_set_exhaustive(const Geometry& g, Deadline deadline)
{
    const int n = g.num_points();
    if (n > 24)
        throw std::invalid_argument("exhaustive blocking-set scan is limited to 24 points");
    std::vector<std::uint32_t> masks;
    for (LineId l = 0; l < g.num_lines(); ++l) {
        std::uint32_t m = 0;
        for (auto p : g.line(l).points)
            m |= std::uint32_t{1} << p;
        masks.push_back(m);
    }
    const auto q = static_cast<unsigned>(g.q());
    BlockingSearchResult res;
    res.witness = g.empty_point_set();
    int best = -1;
    std::uint32_t best_mask = 0;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t s = 0; s < total; ++s) {
        if ((s & 0xFFFU) == 0 && deadline.expired()) {
            res.explored_nodes = s;
            res.exact = false;
            if (best >= 0) {
                res.size = best;
                for (int p = 0; p < n; ++p)
                    if (best_mask >> p & 1U)
                        res.witness.set(static_cast<std::size_t>(p));
            }
            return res;
        }
        const int size = std::popcount(s);
        if (size <= best)
            continue;
        bool ok = true;
        for (auto m : masks) {
            const auto c = static_cast<unsigned>(std::popcount(s & m));
            if (c == 0 || c > q) {
                ok = false;
                break;
            }
        }
        if (ok) {
            best = size;
            best_mask = s;
        }
    }
    res.explored_nodes = total;
    res.exact = true;
    if (best >= 0) {
        res.size = best;
        for (int p = 0; p < n; ++p)
            if (best_mask >> p & 1U)
                res.witness.set(static_cast<std::size_t>(p));
    }
    return res;
}

BlockingSearchResult min_blocking_set_branch_and_bound(const Geometry& g, Deadline deadline, bool use_symmetry)
{
    MinBlockingSearch search(g, deadline);
    if (use_symmetry) {
        for (int axis = 0; axis < 3; ++axis) {
            std::vector<Elem> e(static_cast<std::size_t>(g.m()) + 1, 0);
            e[static_cast<std::size_t>(axis)] = 1;
            search.choose(g.find_point(e));
        }
    }
    search.run();
    BlockingSearchResult res;
    res.exact = !search.timed_out();
    res.explored_nodes = search.nodes();
    res.witness = g.empty_point_set();
    if (search.best() <= g.num_points()) {
        res.size = search.best(); // the size of the smallest set here
        for (auto p : search.best_set())
            res.witness.set(static_cast<std::size_t>(p));
    }
    return res;
}

BlockingSearchResult max_blocking_set_size(const Geometry& g, Deadline deadline)
{
    if (g.num_points() <= 16)
        return max_blocking_set_exhaustive(g, deadline);
    // The complement of a blocking set is a blocking set.
    auto res = min_blocking_set_branch_and_bound(g, deadline, true);
    if (res.size) {
        res.size = g.num_points() - *res.size;
        res.witness = res.witness.complement();
    }
    return res;
}

bool is_arc(const Geometry& g, const PointSet& s)
{
    require_plane(g, "is_arc");
    for (LineId l = 0; l < g.num_lines(); ++l)
        if (s.intersection_count(g.line_points(l)) > 2)
            return false;
    return true;
}

bool is_complete_arc(const Geometry& g, const PointSet& s)
{
    if (!is_arc(g, s))
        return false;
    PointSet covered = s;
    const auto pts = s.to_indices();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            covered |= g.line_points(g.line_through(pts[i], pts[j]));
    return covered.count() == static_cast<std::size_t>(g.num_points());
}

ArcRecord secant_profile(const Geometry& g, const PointSet& s)
{
    require_plane(g, "secant_profile");
    ArcRecord rec;
    rec.points = s;
    for (LineId l = 0; l < g.num_lines(); ++l) {
        const auto c = s.intersection_count(g.line_points(l));
        if (c > 2)
            throw std::invalid_argument("point set is not an arc: a line meets it in " + std::to_string(c) + " points");
        ++rec.secant_counts[c];
        if (c == 0)
            rec.passant_ids.push_back(l);
    }
    rec.is_complete = is_complete_arc(g, s);
    return rec;
}

ArcEnumeration enumerate_complete_arcs(const Geometry& g, ArcEnumerationOptions options)
{
    require_plane(g, "enumerate_complete_arcs");
    if (g.q() > 8 && !options.allow_large_q)
        throw std::invalid_argument("complete-arc enumeration for q > 8 needs allow_large_q");

    ArcEnumeration out;
    const auto frame = standard_frame(g);
    std::vector<PointId> arc(frame.begin(), frame.end());
    PointSet blocked = make_point_set(g, arc);
    for (std::size_t i = 0; i < arc.size(); ++i)
        for (std::size_t j = i + 1; j < arc.size(); ++j)
            blocked |= g.line_points(g.line_through(arc[i], arc[j]));

    const auto n = static_cast<std::size_t>(g.num_points());
    Deadline& deadline = options.deadline;
    std::vector<PointSet> found;

    auto recurse = [&](auto&& self, std::size_t min_index, const PointSet& blk) -> void {
        ++out.explored_nodes;
        if (deadline.poll()) {
            out.complete = false;
            return;
        }
        if (blk.count() == n) {
            found.push_back(make_point_set(g, arc));
            return;
        }
        const PointSet open = blk.complement();
        for (auto p = open.find_next(min_index); p != BitSet::npos; p = open.find_next(p + 1)) {
            PointSet next = blk;
            next.set(p);
            for (auto a : arc)
                next |= g.line_points(g.line_through(a, static_cast<PointId>(p)));
            arc.push_back(static_cast<PointId>(p));
            self(self, p + 1, next);
            arc.pop_back();
            if (!out.complete)
                return;
        }
    };
    recurse(recurse, 0, blocked);

    std::sort(found.begin(), found.end(), [](const PointSet& a, const PointSet& b) {
        const auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    for (auto& s : found)
        out.arcs.push_back(secant_profile(g, s));
    return out;
}

std::optional<Collineation> find_collineation(const Geometry& g, const PointSet& a, const PointSet& b)
{
    require_plane(g, "find_collineation");
    const auto pa = a.to_indices();
    const auto pb = b.to_indices();
    if (pa.size() != pb.size())
        return std::nullopt;
    if (pa.size() < 4)
        throw std::invalid_argument("collineation search needs point sets of size >= 4");
    const auto& f = g.field();
    const std::size_t k = pb.size();

    for (int s = 0; s < automorphism_count(f); ++s) {
        Collineation sigma;
        sigma.frobenius_power = s;
        const std::array<PointId, 4> src{sigma.apply(g, pa[0]), sigma.apply(g, pa[1]), sigma.apply(g, pa[2]), sigma.apply(g, pa[3])};
        const auto ms = frame_matrix(g, src);
        if (!ms)
            throw std::invalid_argument("first four points are not in general position");
        const auto ms_inv = *mat_inverse(f, *ms);
        for (std::size_t i0 = 0; i0 < k; ++i0)
            for (std::size_t i1 = 0; i1 < k; ++i1) {
                if (i1 == i0)
                    continue;
                for (std::size_t i2 = 0; i2 < k; ++i2) {
                    if (i2 == i0 || i2 == i1)
                        continue;
                    for (std::size_t i3 = 0; i3 < k; ++i3) {
                        if (i3 == i0 || i3 == i1 || i3 == i2)
                            continue;
                        const auto mt = frame_matrix(g, {pb[i0], pb[i1], pb[i2], pb[i3]});
                        if (!mt)
                            continue;
                        Collineation c;
                        c.matrix = mat_mul(f, *mt, ms_inv);
                        c.frobenius_power = s;
                        bool ok = true;
                        for (auto p : pa)
                            if (!b.test(static_cast<std::size_t>(c.apply(g, p)))) {
                                ok = false;
                                break;
                            }
                        if (ok)
                            return c;
                    }
                }
            }
    }
    return std::nullopt;
}

CollineationClasses classify_up_to_collineation(const Geometry& g, std::span<const PointSet> arcs)
{
    require_plane(g, "classify_up_to_collineation");
    CollineationClasses out;
    out.to_member.resize(arcs.size());
    std::map<std::vector<int>, std::vector<std::size_t>> class_by_invariant; // invariant -> class indices
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].count() < 4)
            throw std::invalid_argument("classification needs arcs of size >= 4");
        if (!is_arc(g, arcs[i]))
            throw std::invalid_argument("classification input is not an arc");
        const auto inv = arc_invariant(g, arcs[i]);
        auto& candidates = class_by_invariant[inv];
        bool placed = false;
        for (auto c : candidates) {
            const auto rep = out.classes[c].front();
            if (auto col = find_collineation(g, arcs[rep], arcs[i])) {
                out.classes[c].push_back(i);
                out.to_member[i] = *col;
                placed = true;
                break;
            }
        }
        if (!placed) {
            candidates.push_back(out.classes.size());
            out.classes.push_back({i});
            out.to_member[i] = Collineation{};
        }
    }
    return out;
}

int max_concurrency(const Geometry& g, std::span<const LineId> lines)
{
    std::vector<int> through(static_cast<std::size_t>(g.num_points()), 0);
    int best = 0;
    for (auto l : lines)
        for (auto p : g.line(l).points)
            best = std::max(best, ++through[static_cast<std::size_t>(p)]);
    return best;
}

} // namespace pgturan
