#include "pgturan/covering.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pgturan {

namespace {

class HittingSetSearch
{
public:
    HittingSetSearch(const PointSet& universe, std::span<const PointSet> family, Deadline deadline)
        : n_(universe.size()), deadline_(deadline)
    {
        members_.reserve(family.size());
        containing_.assign(n_, {});
        for (std::size_t f = 0; f < family.size(); ++f) {
            if (family[f].size() != n_)
                throw std::invalid_argument("family member has a different ground set size");
            auto pts = (family[f] & universe).to_indices();
            if (pts.empty())
                throw std::invalid_argument("family member " + std::to_string(f) + " is disjoint from the universe; no cover exists");
            for (auto p : pts)
                containing_[static_cast<std::size_t>(p)].push_back(static_cast<int>(f));
            members_.push_back(std::move(pts));
        }
        hits_.assign(members_.size(), 0);
        avail_.resize(members_.size());
        for (std::size_t f = 0; f < members_.size(); ++f)
            avail_[f] = static_cast<int>(members_[f].size());
        freq_.assign(n_, 0);
        state_.assign(n_, Excluded);
        for (std::size_t p = 0; p < n_; ++p) {
            freq_[p] = static_cast<int>(containing_[p].size());
            if (freq_[p] > 0)
                state_[p] = Free;
        }
        uncovered_ = static_cast<int>(members_.size());
    }

    HittingSetResult run()
    {
        seed_greedy();
        recurse();
        HittingSetResult r;
        r.minimum_size = static_cast<int>(best_.size());
        r.witness = PointSet(n_);
        for (auto p : best_)
            r.witness.set(static_cast<std::size_t>(p));
        r.optimal = !timed_out_;
        r.explored_nodes = nodes_;
        return r;
    }

private:
    enum State : std::uint8_t { Free, Chosen, Excluded };

    void choose(int p)
    {
        state_[static_cast<std::size_t>(p)] = Chosen;
        current_.push_back(p);
        for (auto f : containing_[static_cast<std::size_t>(p)]) {
            --avail_[static_cast<std::size_t>(f)];
            if (hits_[static_cast<std::size_t>(f)]++ == 0) {
                --uncovered_;
                for (auto x : members_[static_cast<std::size_t>(f)])
                    --freq_[static_cast<std::size_t>(x)];
            }
        }
    }

    void unchoose(int p)
    {
        state_[static_cast<std::size_t>(p)] = Free;
        current_.pop_back();
        for (auto f : containing_[static_cast<std::size_t>(p)]) {
            ++avail_[static_cast<std::size_t>(f)];
            if (--hits_[static_cast<std::size_t>(f)] == 0) {
                ++uncovered_;
                for (auto x : members_[static_cast<std::size_t>(f)])
                    ++freq_[static_cast<std::size_t>(x)];
            }
        }
    }

    void set_excluded(int p, bool excluded)
    {
        state_[static_cast<std::size_t>(p)] = excluded ? Excluded : Free;
        for (auto f : containing_[static_cast<std::size_t>(p)])
            avail_[static_cast<std::size_t>(f)] += excluded ? -1 : 1;
    }

    void seed_greedy()
    {
        std::vector<int> chosen;
        while (uncovered_ > 0) {
            int best_p = -1;
            for (std::size_t p = 0; p < n_; ++p)
                if (state_[p] == Free && (best_p < 0 || freq_[p] > freq_[static_cast<std::size_t>(best_p)]))
                    best_p = static_cast<int>(p);
            choose(best_p);
            chosen.push_back(best_p);
        }
        best_ = current_;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
            unchoose(*it);
    }

    /// Smallest k such that the k largest frequencies of usable points sum
    /// to at least the number of uncovered members. Dominates
    /// ceil(uncovered / max frequency).
    int lower_bound()
    {
        scratch_.clear();
        for (std::size_t p = 0; p < n_; ++p)
            if (state_[p] == Free && freq_[p] > 0)
                scratch_.push_back(freq_[p]);
        std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
        int covered = 0;
        int k = 0;
        for (auto f : scratch_) {
            if (covered >= uncovered_)
                break;
            covered += f;
            ++k;
        }
        return covered >= uncovered_ ? k : static_cast<int>(n_) + 1;
    }

    void recurse()
    {
        ++nodes_;
        if (deadline_.poll()) {
            timed_out_ = true;
            return;
        }
        const int chosen = static_cast<int>(current_.size());
        if (uncovered_ == 0) {
            if (chosen < static_cast<int>(best_.size()))
                best_ = current_;
            return;
        }
        if (chosen + lower_bound() >= static_cast<int>(best_.size()))
            return;

        int branch = -1;
        for (std::size_t f = 0; f < members_.size(); ++f)
            if (hits_[f] == 0 && (branch < 0 || avail_[f] < avail_[static_cast<std::size_t>(branch)]))
                branch = static_cast<int>(f);
        if (avail_[static_cast<std::size_t>(branch)] == 0)
            return;

        std::vector<int> excluded;
        for (auto p : members_[static_cast<std::size_t>(branch)]) {
            if (state_[static_cast<std::size_t>(p)] != Free)
                continue;
            choose(p);
            recurse();
            unchoose(p);
            if (timed_out_)
                break;
            set_excluded(p, true);
            excluded.push_back(p);
        }
        for (auto p : excluded)
            set_excluded(p, false);
    }

    std::size_t n_;
    Deadline deadline_;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<int>> containing_;
    std::vector<int> hits_;
    std::vector<int> avail_;
    std::vector<int> freq_;
    std::vector<State> state_;
    std::vector<int> scratch_;
    int uncovered_ = 0;
    std::vector<int> current_;
    std::vector<int> best_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
};

std::string format_set(const Geometry& g, const std::vector<LineId>& lines)
{
    std::string s = "{";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i)
            s += ',';
        s += format_line(g, lines[i]);
    }
    return s + "}";
}

std::string format_points(const Geometry& g, const std::vector<PointId>& pts)
{
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i)
            s += ',';
        s += format_point(g, pts[i]);
    }
    return s + "}";
}

std::vector<LineId> sorted(std::vector<LineId> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<LineId> intersect(const std::vector<LineId>& a, const std::vector<LineId>& b)
{
    std::vector<LineId> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

/// Reference data for one complete 6-arc: arc, peak points, their passant
/// sets, identities S(P_i) ∩ S(P_j) = {line} (grouped when several pairs
/// share the line), union bounds per subset size, and the cover size that
/// must be impossible.
struct CaseData
{
    std::string id;
    const char* arc;
    int passants;
    int peak;
    std::vector<const char*> peak_points;
    std::vector<const char*> passant_sets;
    std::vector<std::pair<std::vector<int>, const char*>> intersections; // 1-based indices, shared line
    std::vector<std::pair<int, int>> union_bounds;                       // (|I|, bound)
    int impossible_cover;
};

std::vector<CaseData> reference_cases(char which)
{
    if (which == 'A')
        return {
            {"appendix-a.k1",
             "(-1,1,1),(1,1,1),(1,-1,1),(-1,-1,1),(0,2,1),(0,3,1)",
             24,
             5,
             {"(0,1,0)", "(1,2,6)", "(1,6,5)", "(1,5,1)", "(0,0,1)", "(1,1,2)"},
             {"[1,0,4],[0,0,1],[1,0,3],[1,0,2],[1,0,5]",
              "[1,2,5],[1,3,0],[0,1,2],[1,6,6],[1,1,3]",
              "[1,0,4],[1,5,5],[0,1,3],[1,6,1],[1,3,6]",
              "[1,1,1],[0,1,2],[1,6,4],[1,5,2],[1,4,0]",
              "[1,3,0],[1,2,0],[0,1,0],[1,5,0],[1,4,0]",
              "[0,1,3],[1,0,3],[1,1,6],[1,2,2],[1,4,1]"},
             {{{1, 3}, "[1,0,4]"}, {{1, 6}, "[1,0,3]"}, {{2, 4}, "[0,1,2]"},
              {{2, 5}, "[1,3,0]"}, {{3, 6}, "[0,1,3]"}, {{4, 5}, "[1,4,0]"}},
             {{4, 19}, {5, 23}},
             5},
            {"appendix-a.k2",
             "(-1,1,1),(1,1,1),(1,-1,1),(-1,-1,1),(0,2,1),(0,-3,1)",
             24,
             5,
             {"(1,3,3)", "(0,1,0)", "(1,2,5)", "(1,5,2)", "(0,0,1)", "(1,4,4)"},
             {"[1,1,1],[1,6,3],[1,2,0],[1,0,2],[1,3,6]",
              "[1,0,4],[0,0,1],[1,0,3],[1,0,2],[1,0,5]",
              "[1,0,4],[1,3,0],[1,6,3],[1,5,2],[1,4,1]",
              "[1,2,5],[1,0,3],[1,1,4],[1,4,0],[1,3,6]",
              "[1,3,0],[1,2,0],[0,1,0],[1,5,0],[1,4,0]",
              "[1,6,6],[1,5,0],[1,1,4],[1,4,1],[1,0,5]"},
             {{{1, 2}, "[1,0,2]"}, {{1, 3}, "[1,6,3]"}, {{1, 4}, "[1,3,6]"},
              {{1, 5}, "[1,2,0]"}, {{2, 3}, "[1,0,4]"}, {{2, 4}, "[1,0,3]"},
              {{2, 6}, "[1,0,5]"}, {{3, 5}, "[1,3,0]"}, {{3, 6}, "[1,4,1]"},
              {{4, 5}, "[1,4,0]"}, {{4, 6}, "[1,1,4]"}, {{5, 6}, "[1,5,0]"}},
             {{4, 19}, {5, 23}},
             5},
        };
    return {
        {"appendix-b.k",
         "(1,0,0),(0,1,0),(0,0,1),(1,1,1),(ω^3,ω^2,1),(ω^2,ω^3,1)",
         34,
         6,
         {"(1,ω^6,0)", "(1,1,0)", "(1,1,ω^5)", "(1,1,ω^4)", "(1,ω,0)", "(1,0,1)", "(0,1,1)"},
         {"[1,ω,ω^4],[1,ω,ω^3],[1,ω,ω^2],[1,ω,ω],[1,ω,1],[1,ω,ω^6]",
          "[1,1,ω],[1,1,ω^6],[1,1,ω^5],[1,1,ω^4],[1,1,ω^3],[1,1,ω^2]",
          "[1,ω^5,ω^3],[1,ω^3,ω^4],[1,ω,1],[1,ω^6,ω^6],[1,ω^4,ω],[1,ω^2,ω^5]",
          "[1,ω^6,1],[1,ω^3,ω^5],[1,ω,ω],[1,ω^4,ω^2],[1,ω^5,ω^4],[1,ω^2,ω^6]",
          "[1,ω^6,1],[1,ω^6,ω^3],[1,ω^6,ω^2],[1,ω^6,ω^5],[1,ω^6,ω^6],[1,ω^6,ω]",
          "[1,ω^6,1],[1,ω^2,1],[1,ω^5,1],[1,ω,1],[1,ω^3,1],[1,ω^4,1]",
          "[1,ω^2,ω^2],[1,ω^4,ω^4],[1,ω,ω],[1,ω^6,ω^6],[1,ω^5,ω^5],[1,ω^3,ω^3]"},
         {{{1, 3, 6}, "[1,ω,1]"}, {{1, 4, 7}, "[1,ω,ω]"}, {{3, 5, 7}, "[1,ω^6,ω^6]"}, {{4, 5, 6}, "[1,ω^6,1]"}},
         {{4, 23}, {5, 28}, {6, 33}},
         6},
    };
}

void add_check(AppendixReport& rep, std::string id, std::string description, std::string expected, std::string computed, bool passed)
{
    rep.checks.push_back({std::move(id), std::move(description), std::move(expected), std::move(computed), passed, false});
}

void verify_case(const Geometry& g, const CaseData& c, AppendixReport& rep, Deadline deadline)
{
    const auto arc_pts = parse_point_list(g, c.arc);
    const auto arc = make_point_set(g, arc_pts);

    const bool complete = arc.count() == 6 && is_complete_arc(g, arc);
    add_check(rep, c.id + ".complete", "arc is a complete 6-arc", "complete 6-arc",
              std::to_string(arc.count()) + "-point set, " + (complete ? "complete arc" : (is_arc(g, arc) ? "incomplete arc" : "not an arc")), complete);
    if (!is_arc(g, arc))
        return;

    const auto pa = passant_analysis(g, arc);
    add_check(rep, c.id + ".passants", "number of passants", std::to_string(c.passants), std::to_string(pa.passant_count),
              pa.passant_count == c.passants);
    add_check(rep, c.id + ".peak", "largest number of passants through a point off the arc", std::to_string(c.peak),
              std::to_string(pa.peak), pa.peak == c.peak);

    std::vector<PointId> listed;
    for (auto s : c.peak_points)
        listed.push_back(parse_point(g, s));
    auto listed_sorted = listed;
    std::sort(listed_sorted.begin(), listed_sorted.end());
    add_check(rep, c.id + ".peak-points", "points carrying the peak number of passants", format_points(g, listed_sorted),
              format_points(g, pa.peak_points), listed_sorted == pa.peak_points);

    std::vector<std::vector<LineId>> computed_sets;
    for (std::size_t i = 0; i < listed.size(); ++i) {
        const auto expected = sorted(parse_line_list(g, c.passant_sets[i]));
        const auto got = passants_through(g, pa, listed[i]);
        computed_sets.push_back(got);
        add_check(rep, c.id + ".S" + std::to_string(i + 1), "passants through P" + std::to_string(i + 1) + " = " + format_point(g, listed[i]),
                  format_set(g, expected), format_set(g, got), expected == got);
    }

    for (const auto& [indices, line_text] : c.intersections) {
        const std::vector<LineId> expected{parse_line(g, line_text)};
        bool ok = true;
        std::string computed;
        std::string name;
        for (std::size_t a = 0; a < indices.size(); ++a)
            for (std::size_t b = a + 1; b < indices.size(); ++b) {
                const auto i = static_cast<std::size_t>(indices[a] - 1);
                const auto j = static_cast<std::size_t>(indices[b] - 1);
                const auto inter = intersect(computed_sets[i], computed_sets[j]);
                ok = ok && inter == expected;
                if (!computed.empty())
                    computed += "; ";
                computed += "S" + std::to_string(i + 1) + "∩S" + std::to_string(j + 1) + "=" + format_set(g, inter);
            }
        for (auto i : indices)
            name += std::to_string(i);
        add_check(rep, c.id + ".cap" + name, "pairwise intersections of the listed passant sets", format_set(g, expected), computed, ok);
    }

    const int k = static_cast<int>(listed.size());
    for (const auto& [subset_size, bound] : c.union_bounds) {
        int worst = 0;
        for (unsigned mask = 0; mask < (1U << k); ++mask) {
            if (std::popcount(mask) != subset_size)
                continue;
            std::vector<LineId> u;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1U)
                    u.insert(u.end(), computed_sets[static_cast<std::size_t>(i)].begin(), computed_sets[static_cast<std::size_t>(i)].end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            worst = std::max(worst, static_cast<int>(u.size()));
        }
        add_check(rep, c.id + ".union" + std::to_string(subset_size),
                  "max over |I|=" + std::to_string(subset_size) + " of |union of S(P_i)|", "<= " + std::to_string(bound),
                  std::to_string(worst), worst <= bound);
    }

    std::vector<PointSet> family;
    for (auto l : pa.passants)
        family.push_back(g.line_points(l));
    const auto hs = min_hitting_set(arc.complement(), family, deadline);
    CheckResult cover{c.id + ".no-cover" + std::to_string(c.impossible_cover),
                      "smallest point set meeting every passant (exhaustive search)",
                      ">= " + std::to_string(c.impossible_cover + 1),
                      std::to_string(hs.minimum_size) + (hs.optimal ? " (optimal)" : " (search interrupted)"),
                      hs.optimal && hs.minimum_size > c.impossible_cover,
                      !hs.optimal};
    rep.checks.push_back(std::move(cover));
}

} // namespace

HittingSetResult min_hitting_set(const PointSet& universe, std::span<const PointSet> family, Deadline deadline)
{
    if (family.empty()) {
        HittingSetResult r;
        r.witness = PointSet(universe.size());
        r.optimal = true;
        return r;
    }
    HittingSetSearch search(universe, family, deadline);
    return search.run();
}

HittingSetResult m_of_arc(const Geometry& g, const ArcRecord& arc, Deadline deadline)
{
    if (!is_complete_arc(g, arc.points))
        throw std::invalid_argument("m(K) is defined for complete arcs only");
    std::vector<PointSet> family;
    for (auto l : arc.passant_ids)
        family.push_back(g.line_points(l));
    return min_hitting_set(arc.points.complement(), family, deadline);
}

MqReport compute_Mq(const Geometry& g, MqOptions options)
{
    MqReport rep;
    rep.q = g.q();
    ArcEnumerationOptions eo;
    eo.deadline = options.deadline;
    const auto en = enumerate_complete_arcs(g, eo);
    rep.explored_nodes = en.explored_nodes;
    if (!en.complete) {
        rep.optimal = false;
        return rep;
    }

    std::vector<PointSet> sets;
    for (const auto& a : en.arcs)
        sets.push_back(a.points);
    const auto classes = classify_up_to_collineation(g, sets);

    // Which arcs need a hitting-set search.
    std::vector<std::size_t> jobs;
    for (const auto& cls : classes.classes) {
        if (options.check_every_member)
            jobs.insert(jobs.end(), cls.begin(), cls.end());
        else
            jobs.push_back(cls.front());
    }
    std::vector<HittingSetResult> results(en.arcs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++)
            results[jobs[j]] = m_of_arc(g, en.arcs[jobs[j]], options.deadline);
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(jobs.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }

    rep.optimal = true;
    for (const auto& cls : classes.classes) {
        ArcClassReport cr;
        cr.representative = en.arcs[cls.front()];
        cr.members = cls.size();
        cr.m = results[cls.front()];
        rep.optimal = rep.optimal && cr.m.optimal;
        if (options.check_every_member)
            for (auto i : cls) {
                rep.explored_nodes += results[i].explored_nodes;
                rep.optimal = rep.optimal && results[i].optimal;
                if (results[i].minimum_size != cr.m.minimum_size)
                    cr.m_consistent = false;
            }
        rep.classes.push_back(std::move(cr));
    }
    std::stable_sort(rep.classes.begin(), rep.classes.end(), [](const ArcClassReport& a, const ArcClassReport& b) {
        return a.representative.size() < b.representative.size();
    });
    rep.M = rep.classes.empty() ? 0 : rep.classes.front().m.minimum_size;
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        const int m = rep.classes[i].m.minimum_size;
        if (m < rep.M) {
            rep.M = m;
            rep.witness_class = i;
        } else if (i == 0) {
            rep.witness_class = 0;
        }
        rep.max_over_classes = std::max(rep.max_over_classes, m);
    }
    return rep;
}

PassantAnalysis passant_analysis(const Geometry& g, const PointSet& arc)
{
    const auto rec = secant_profile(g, arc);
    PassantAnalysis a;
    a.passants = rec.passant_ids;
    a.passant_count = static_cast<int>(a.passants.size());
    a.through.assign(static_cast<std::size_t>(g.num_points()), 0);
    for (auto l : a.passants)
        for (auto p : g.line(l).points)
            ++a.through[static_cast<std::size_t>(p)];
    for (PointId p = 0; p < g.num_points(); ++p)
        if (!arc.test(static_cast<std::size_t>(p)))
            a.peak = std::max(a.peak, a.through[static_cast<std::size_t>(p)]);
    for (PointId p = 0; p < g.num_points(); ++p)
        if (!arc.test(static_cast<std::size_t>(p)) && a.through[static_cast<std::size_t>(p)] == a.peak && a.peak > 0) {
            a.peak_points.push_back(p);
            a.peak_lines.push_back(passants_through(g, a, p));
        }
    return a;
}

std::vector<LineId> passants_through(const Geometry& g, const PassantAnalysis& a, PointId p)
{
    std::vector<LineId> out;
    for (auto l : a.passants)
        if (g.incident(p, l))
            out.push_back(l);
    return out;
}

bool AppendixReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

AppendixReport verify_appendix(const Geometry& g, char which, Deadline deadline)
{
    if (which != 'A' && which != 'B')
        throw std::invalid_argument("which must be 'A' or 'B'");
    const int needed_q = which == 'A' ? 7 : 8;
    if (g.m() != 2 || g.q() != needed_q)
        throw std::invalid_argument(std::string("case analysis ") + which + " needs PG_2(" + std::to_string(needed_q) + ")");
    AppendixReport rep;
    rep.which = which;
    for (const auto& c : reference_cases(which))
        verify_case(g, c, rep, deadline);
    return rep;
}

} // namespace pgturan
