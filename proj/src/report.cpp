#include "pgturan/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "pgturan/bounds.hpp"
#include "pgturan/construction.hpp"
#include "pgturan/covering.hpp"
#include "pgturan/geometry.hpp"
#include "pgturan/structures.hpp"

namespace pgturan {

const char* origin_name(ClaimOrigin o)
{
    switch (o) {
    case ClaimOrigin::Published:
        return "published";
    case ClaimOrigin::Trivial:
        return "trivial";
    case ClaimOrigin::Derived:
        return "derived";
    }
    return "?";
}

const char* status_name(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::Pass:
        return "pass";
    case ClaimStatus::Fail:
        return "fail";
    case ClaimStatus::Timeout:
        return "timeout";
    }
    return "?";
}

int VerificationReport::passed() const
{
    return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Pass; }));
}

int VerificationReport::failed() const
{
    return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; }));
}

int VerificationReport::timed_out() const
{
    return static_cast<int>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Timeout; }));
}

int VerificationReport::exit_code() const
{
    return failed() == 0 ? 0 : 1;
}

unsigned worker_count(unsigned requested)
{
    unsigned n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PGTURAN_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1)
            n = std::min(n, static_cast<unsigned>(cap));
    }
    return std::max(1U, n);
}

namespace {

using Claims = std::vector<Claim>;

struct TaskContext
{
    Deadline deadline;
    double budget_seconds;
    bool corrupt_modulus;
    unsigned inner_threads;
};

struct Task
{
    std::string name;
    std::function<Claims(const TaskContext&)> run;
};

ClaimStatus status_of(bool ok)
{
    return ok ? ClaimStatus::Pass : ClaimStatus::Fail;
}

Claim make_claim(std::string id, std::string anchor, ClaimOrigin origin, std::string expected, std::string computed, ClaimStatus status)
{
    Claim c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.origin = origin;
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.status = status;
    return c;
}

std::string fixed(long double x, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << x;
    return os.str();
}

std::string join_ints(const std::set<int>& s)
{
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin())
            out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

// A reducible modulus of the right degree for the negative control.
FieldTable corrupted_field(int q)
{
    const auto pk = prime_power(q);
    const int p = pk->first;
    const int k = pk->second;
    if (k == 1) {
        // Prime orders get x^2 over GF(p): a ring with nilpotents.
        return FieldTable::make_unchecked(p, 2, {0, 0, 1});
    }
    std::vector<int> modulus(static_cast<std::size_t>(k) + 1, 0);
    modulus[0] = 0; // x divides the modulus
    modulus[static_cast<std::size_t>(k)] = 1;
    return FieldTable::make_unchecked(p, k, modulus);
}

Claims geometry_task(const TaskContext& ctx)
{
    Claims out;
    const std::string anchor = "definition of PG_m(q): points, lines and incidence";
    const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 2}, {3, 3}};
    for (auto [m, q] : cases) {
        const std::string id = "geometry.m" + std::to_string(m) + ".q" + std::to_string(q);
        const std::string expected = std::to_string(projective_point_count(m, q)) + " points, " +
                                     std::to_string(projective_line_count(m, q)) + " lines, all incidence invariants hold";
        try {
            FieldTable f = ctx.corrupt_modulus ? corrupted_field(q) : FieldTable::of_order(q);
            const std::string axioms = f.check_axioms();
            if (!axioms.empty()) {
                out.push_back(make_claim(id, anchor, ClaimOrigin::Trivial, expected, "field axioms violated: " + axioms, ClaimStatus::Fail));
                continue;
            }
            Geometry g(m, std::move(f));
            const auto problem = g.check_invariants();
            const std::string computed = std::to_string(g.num_points()) + " points, " + std::to_string(g.num_lines()) + " lines, " +
                                         (problem.empty() ? "all incidence invariants hold" : problem);
            const bool ok = problem.empty() && g.num_points() == projective_point_count(m, q) &&
                            g.num_lines() == projective_line_count(m, q);
            out.push_back(make_claim(id, anchor, ClaimOrigin::Trivial, expected, computed, status_of(ok)));
        } catch (const std::exception& e) {
            out.push_back(make_claim(id, anchor, ClaimOrigin::Trivial, expected, std::string("construction failed: ") + e.what(), ClaimStatus::Fail));
        }
    }
    return out;
}

Claims blocking_task(const TaskContext& ctx)
{
    Claims out;
    {
        const auto g = build_geometry(2, 2);
        const auto r = max_blocking_set_exhaustive(g, ctx.deadline);
        const auto st = !r.exact ? ClaimStatus::Timeout : status_of(!r.size);
        out.push_back(make_claim("blocking.m2.q2", "PG_2(2) has no blocking set, so k = 0 in the blocking-set construction",
                                 ClaimOrigin::Derived, "none", r.exact ? (r.size ? std::to_string(*r.size) : "none") : "search interrupted", st));
    }
    {
        const auto g = build_geometry(3, 2);
        const auto r = max_blocking_set_exhaustive(g, ctx.deadline);
        const auto st = !r.exact ? ClaimStatus::Timeout : status_of(!r.size);
        out.push_back(make_claim("blocking.m3.q2", "PG_3(2) has no blocking set (blocking sets of PG_3(q) need q >= 5)",
                                 ClaimOrigin::Derived, "none", r.exact ? (r.size ? std::to_string(*r.size) : "none") : "search interrupted", st));
    }
    for (int q : {3, 4, 5}) {
        const auto g = build_geometry(2, q);
        const auto r = max_blocking_set_size(g, ctx.deadline);
        const long double bound = lemma1_blocking_bound(2, q);
        const int cap = static_cast<int>(std::floor(bound));
        const std::string id = "blocking.m2.q" + std::to_string(q);
        if (!r.exact) {
            out.push_back(make_claim(id, "largest blocking set of PG_2(q) is at most q^2 - sqrt(q)", ClaimOrigin::Published,
                                     "<= " + std::to_string(cap), "search interrupted", ClaimStatus::Timeout));
            continue;
        }
        const bool witness_ok = r.size && is_blocking_set(g, r.witness) && static_cast<int>(r.witness.count()) == *r.size;
        const bool ok = r.size && *r.size <= cap && witness_ok;
        out.push_back(make_claim(id, "largest blocking set of PG_2(q) is at most q^2 - sqrt(q)", ClaimOrigin::Published,
                                 "<= " + std::to_string(cap), r.size ? std::to_string(*r.size) + (witness_ok ? " (witness checked)" : " (witness invalid)") : "none",
                                 status_of(ok)));
    }
    return out;
}

struct ArcExpectation
{
    int q;
    std::set<int> sizes;
    int largest_passants;
    int concurrency_cap;
    std::optional<int> six_arc_classes;
};

Claims arcs_task(const TaskContext& ctx, const ArcExpectation& ex)
{
    Claims out;
    const std::string prefix = "arcs.q" + std::to_string(ex.q);
    const std::string anchor = "complete arcs of PG_2(" + std::to_string(ex.q) + ")";
    const auto g = build_geometry(2, ex.q);
    ArcEnumerationOptions opts;
    opts.deadline = ctx.deadline;
    const auto en = enumerate_complete_arcs(g, opts);
    if (!en.complete) {
        out.push_back(make_claim(prefix + ".sizes", anchor, ClaimOrigin::Published, join_ints(ex.sizes), "search interrupted", ClaimStatus::Timeout));
        out.push_back(make_claim(prefix + ".passants", anchor, ClaimOrigin::Published, std::to_string(ex.largest_passants), "search interrupted",
                                 ClaimStatus::Timeout));
        out.push_back(make_claim(prefix + ".concurrency", anchor, ClaimOrigin::Published, "<= " + std::to_string(ex.concurrency_cap),
                                 "search interrupted", ClaimStatus::Timeout));
        if (ex.six_arc_classes)
            out.push_back(make_claim(prefix + ".classes6", anchor, ClaimOrigin::Published, std::to_string(*ex.six_arc_classes),
                                     "search interrupted", ClaimStatus::Timeout));
        return out;
    }
    std::set<int> sizes;
    for (const auto& a : en.arcs)
        sizes.insert(a.size());
    out.push_back(make_claim(prefix + ".sizes", anchor, ClaimOrigin::Published, join_ints(ex.sizes), join_ints(sizes), status_of(sizes == ex.sizes)));

    const int largest = sizes.empty() ? 0 : *sizes.rbegin();
    std::set<int> passants;
    int concurrency = 0;
    for (const auto& a : en.arcs)
        if (a.size() == largest) {
            passants.insert(a.passants());
            concurrency = std::max(concurrency, max_concurrency(g, a.passant_ids));
        }
    out.push_back(make_claim(prefix + ".passants", anchor + ": passants of the largest complete arc", ClaimOrigin::Published,
                             std::to_string(ex.largest_passants), join_ints(passants),
                             status_of(passants == std::set<int>{ex.largest_passants})));
    out.push_back(make_claim(prefix + ".concurrency", anchor + ": most passants of the largest complete arc through one point",
                             ClaimOrigin::Published, "<= " + std::to_string(ex.concurrency_cap), std::to_string(concurrency),
                             status_of(concurrency <= ex.concurrency_cap)));
    if (ex.six_arc_classes) {
        std::vector<PointSet> six;
        for (const auto& a : en.arcs)
            if (a.size() == 6)
                six.push_back(a.points);
        const auto cls = classify_up_to_collineation(g, six);
        out.push_back(make_claim(prefix + ".classes6", anchor + ": complete 6-arcs up to collineation", ClaimOrigin::Published,
                                 std::to_string(*ex.six_arc_classes), std::to_string(cls.classes.size()),
                                 status_of(static_cast<int>(cls.classes.size()) == *ex.six_arc_classes)));
    }
    return out;
}

Claims mq_task(const TaskContext& ctx, int q, int expected)
{
    Claims out;
    const auto g = build_geometry(2, q);
    MqOptions opts;
    opts.deadline = ctx.deadline;
    opts.threads = ctx.inner_threads;
    const auto r = compute_Mq(g, opts);
    const std::string id = "M.q" + std::to_string(q);
    const std::string anchor = "M(" + std::to_string(q) + "), fewest extra points leaving no line outside a complete arc";
    if (!r.optimal) {
        out.push_back(make_claim(id, anchor, ClaimOrigin::Published, std::to_string(expected), "search interrupted", ClaimStatus::Timeout));
        return out;
    }
    bool consistent = true;
    for (const auto& c : r.classes)
        consistent = consistent && c.m_consistent;
    std::string computed = std::to_string(r.M) + " (over " + std::to_string(r.classes.size()) + " classes, max " + std::to_string(r.max_over_classes) +
                           (consistent ? "" : ", inconsistent within a class") + ")";
    out.push_back(make_claim(id, anchor, ClaimOrigin::Published, std::to_string(expected), computed, status_of(r.M == expected && consistent)));
    out.push_back(make_claim(id + ".le-q-1", "M(q) <= q - 1", ClaimOrigin::Published, "<= " + std::to_string(q - 1), std::to_string(r.M),
                             status_of(r.M <= q - 1)));
    return out;
}

Claims appendix_task(const TaskContext& ctx, char which)
{
    Claims out;
    const int q = which == 'A' ? 7 : 8;
    const auto g = build_geometry(2, q);
    const auto rep = verify_appendix(g, which, ctx.deadline);
    const std::string anchor = std::string("case analysis of the complete 6-arcs of PG_2(") + std::to_string(q) + ")";
    for (const auto& c : rep.checks) {
        const auto st = c.timed_out ? ClaimStatus::Timeout : status_of(c.passed);
        const bool derived = c.id.find("no-cover") != std::string::npos;
        out.push_back(make_claim(c.id, anchor + ": " + c.description, derived ? ClaimOrigin::Derived : ClaimOrigin::Published, c.expected,
                                 c.computed, st));
    }
    return out;
}

Claims polynomial_task(const TaskContext&)
{
    Claims out;
    for (const auto& ref : arc_cover_references()) {
        const auto poly = theorem3_polynomial(ref.q, ref.M);
        const auto printed = parse_polynomial_text(ref.polynomial_text);
        const bool equal = printed == poly.coefficient_map();
        out.push_back(make_claim("poly.q" + std::to_string(ref.q), "arc-cover bound polynomial for q=" + std::to_string(ref.q) + ", M=" + std::to_string(ref.M),
                                 ClaimOrigin::Published, std::to_string(printed.size()) + " printed monomials",
                                 std::to_string(poly.monomials.size()) + " generated monomials, " + (equal ? "all coefficients equal" : "coefficients differ"),
                                 status_of(equal)));
    }
    return out;
}

Claims optima_task(const TaskContext&)
{
    Claims out;
    static const char* names[] = {"alpha", "beta", "gamma"};
    for (const auto& row : reproduce_arc_cover_optima()) {
        const std::string prefix = "optimum.q" + std::to_string(row.ref.q);
        const std::string anchor = "maximum of the arc-cover bound for PG_2(" + std::to_string(row.ref.q) + ")";
        out.push_back(make_claim(prefix + ".value", anchor, ClaimOrigin::Published, row.ref.value.text + " +- 1e-8", fixed(row.opt.value, 10),
                                 status_of(row.value_ok)));
        const std::array<const PrintedValue*, 3> printed{&row.ref.alpha, &row.ref.beta, &row.ref.gamma};
        for (std::size_t c = 0; c < 3; ++c)
            out.push_back(make_claim(prefix + "." + names[c], anchor + ": optimal " + names[c], ClaimOrigin::Published,
                                     printed[c]->text + " +- 1e-4", fixed(row.opt.argmax[c], 10), status_of(row.argmax_ok[c])));
        if (row.printed_point_feasible) {
            const bool ok = row.opt.value >= row.value_at_printed;
            out.push_back(make_claim(prefix + ".not-below-printed-point", anchor + ": optimum is at least the bound at the printed parameters",
                                     ClaimOrigin::Derived, ">= " + fixed(row.value_at_printed, 12), fixed(row.opt.value, 12), status_of(ok)));
        }
    }
    return out;
}

Claims tables_task(const TaskContext&)
{
    Claims out;
    for (const auto& row : reproduce_tables()) {
        const std::string prefix = "table" + std::to_string(row.table) + ".q" + std::to_string(row.q);
        const std::string anchor = "comparison table for PG_" + std::to_string(row.m) + "(" + std::to_string(row.q) + ")";
        out.push_back(make_claim(prefix + ".thm1", anchor + ": product lower bound", ClaimOrigin::Published, row.printed_thm1.text,
                                 fixed(row.thm1, 12), status_of(row.thm1_ok)));
        std::string note = " (t=" + std::to_string(row.t) + ")";
        if (row.t_matching_printed)
            note += "; the printed cell matches t=" + std::to_string(*row.t_matching_printed);
        out.push_back(make_claim(prefix + ".cor1", anchor + ": blocking-set lower bound", ClaimOrigin::Published, row.printed_cor1.text,
                                 fixed(row.cor1, 12) + note, status_of(row.cor1_ok)));
        out.push_back(make_claim(prefix + ".alpha", anchor + ": optimal alpha of the blocking-set bound", ClaimOrigin::Published,
                                 row.printed_alpha.text, fixed(row.alpha, 12), status_of(row.alpha_ok)));
        if (row.table == 2)
            out.push_back(make_claim(prefix + ".larger", anchor + ": which lower bound is larger", ClaimOrigin::Published,
                                     row.printed_favors_thm1 ? "product bound" : "blocking-set bound",
                                     row.thm1 >= row.cor1 ? "product bound" : "blocking-set bound", status_of(row.favors_ok)));
    }
    return out;
}

/// Integer square root for the t oracle.
long long isqrt(long long n)
{
    long long r = static_cast<long long>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

Claims closed_forms_task(const TaskContext&)
{
    Claims out;
    auto rational = [&](std::string id, std::string anchor, ClaimOrigin origin, const mpq_class& expected, const mpq_class& got) {
        out.push_back(make_claim(std::move(id), std::move(anchor), origin, expected.get_str(), got.get_str(), status_of(expected == got)));
    };
    rational("closed.thm1-lower.m2.q3", "product lower bound for PG_2(3)", ClaimOrigin::Published, mpq_class(55, 96), theorem1_lower(2, 3));
    rational("closed.chromatic.q3", "chromatic lower bound for PG_3(3) with chromatic number 3", ClaimOrigin::Published, mpq_class(7, 8),
             chromatic_lower(3, 3));
    rational("closed.chromatic.q4", "chromatic lower bound for PG_3(4) with chromatic number 3", ClaimOrigin::Published, mpq_class(15, 16),
             chromatic_lower(4, 3));
    rational("closed.pg2-upper.m3", "improved upper bound for q=2, odd m", ClaimOrigin::Trivial, mpq_class(20, 21), pg2_upper(3));
    {
        const int t = corollary1_t(2, 3);
        out.push_back(make_claim("closed.t.m2.q3", "number of parts for PG_2(3): q + ceil(sqrt q)", ClaimOrigin::Trivial, "5", std::to_string(t),
                                 status_of(t == 5)));
    }
    {
        // t = S q + ceil(sqrt(S^2 q)) with S = 1 + q.
        const long long s = 24;
        const long long n = s * s * 23;
        const long long root = isqrt(n);
        const long long expected = s * 23 + root + (root * root == n ? 0 : 1);
        const int t = corollary1_t(3, 23);
        out.push_back(make_claim("closed.t.m3.q23", "number of parts for PG_3(23), integer square-root oracle", ClaimOrigin::Derived,
                                 std::to_string(expected), std::to_string(t), status_of(t == expected)));
    }
    bool ordered = true;
    std::string worst;
    for (auto [m, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {2, 11}, {2, 13}, {2, 16}, {2, 17}, {2, 19},
                                                         {3, 17}, {3, 19}, {3, 23}, {3, 25}, {3, 27}, {3, 29}}) {
        const auto lo = theorem1_lower(m, q);
        const auto hi = theorem1_upper(m, q);
        if (!(0 <= lo && lo <= hi && hi <= 1)) {
            ordered = false;
            worst = "m=" + std::to_string(m) + ", q=" + std::to_string(q);
        }
    }
    out.push_back(make_claim("closed.thm1-ordered", "product lower bound <= binomial upper bound, both in [0,1], every table row",
                             ClaimOrigin::Trivial, "holds", ordered ? "holds" : "violated at " + worst, status_of(ordered)));
    return out;
}

Claims freeness_task(const TaskContext& ctx)
{
    Claims out;
    {
        const auto h = make_complete_hypergraph(7, 3);
        const auto r = contains_subgeometry(h, build_geometry(2, 2), ctx.deadline);
        const auto st = r.verdict == EmbeddingVerdict::Timeout ? ClaimStatus::Timeout : status_of(r.verdict == EmbeddingVerdict::Yes);
        out.push_back(make_claim("freeness.complete7", "the complete 3-graph on 7 vertices contains PG_2(2)", ClaimOrigin::Trivial, "yes",
                                 verdict_name(r.verdict), st));
    }
    {
        const int parts = blocking_scheme_parts(2, 2, 0);
        const std::vector<double> rates{1.0 / 7.0};
        const auto spec = make_partition(14, 2, 2, Scheme::BlockingSet, rates, parts);
        const auto h = build_hypergraph(spec);
        const auto r = contains_subgeometry(h, build_geometry(2, 2), ctx.deadline);
        const auto st = r.verdict == EmbeddingVerdict::Timeout ? ClaimStatus::Timeout : status_of(r.verdict == EmbeddingVerdict::No);
        out.push_back(make_claim("freeness.t2.q2.n14", "the blocking-set construction (q=2, k=0, n=14) contains no PG_2(2)", ClaimOrigin::Derived, "no",
                                 std::string(verdict_name(r.verdict)) + " (" + std::to_string(h.edges.size()) + " edges)", st));
    }
    {
        const std::vector<double> rates{0.5948588940, 0.3216013121, 0.0835397939};
        const auto spec = make_partition(16, 3, 2, Scheme::ArcCover, rates, 1);
        const auto h = build_hypergraph(spec);
        const auto r = contains_subgeometry(h, build_geometry(2, 3), ctx.deadline);
        const auto st = r.verdict == EmbeddingVerdict::Timeout ? ClaimStatus::Timeout : status_of(r.verdict == EmbeddingVerdict::No);
        out.push_back(make_claim("freeness.t3.q3.n16", "the arc-cover construction (q=3, M=2, n=16) contains no PG_2(3)", ClaimOrigin::Derived, "no",
                                 std::string(verdict_name(r.verdict)) + " (" + std::to_string(h.edges.size()) + " edges)", st));
    }
    return out;
}

std::vector<Task> all_tasks()
{
    std::vector<Task> tasks;
    tasks.push_back({"geometry", geometry_task});
    tasks.push_back({"blocking", blocking_task});
    const std::vector<ArcExpectation> arcs{
        {3, {4}, 3, 2, std::nullopt}, {4, {6}, 6, 2, std::nullopt}, {5, {6}, 10, 3, std::nullopt}, {7, {6, 8}, 21, 4, 2}, {8, {6, 10}, 28, 4, 1},
    };
    for (const auto& ex : arcs)
        tasks.push_back({"arcs.q" + std::to_string(ex.q), [ex](const TaskContext& c) { return arcs_task(c, ex); }});
    for (auto [q, m] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}, {7, 6}, {8, 7}})
        tasks.push_back({"M.q" + std::to_string(q), [q, m](const TaskContext& c) { return mq_task(c, q, m); }});
    tasks.push_back({"appendix-a", [](const TaskContext& c) { return appendix_task(c, 'A'); }});
    tasks.push_back({"appendix-b", [](const TaskContext& c) { return appendix_task(c, 'B'); }});
    tasks.push_back({"poly", polynomial_task});
    tasks.push_back({"optimum", optima_task});
    tasks.push_back({"table", tables_task});
    tasks.push_back({"closed", closed_forms_task});
    tasks.push_back({"freeness", freeness_task});
    return tasks;
}

bool selected(const std::string& name, const std::vector<std::string>& only)
{
    if (only.empty())
        return true;
    return std::any_of(only.begin(), only.end(), [&](const std::string& p) { return name.rfind(p, 0) == 0 || p.rfind(name, 0) == 0; });
}

} // namespace

std::vector<std::string> task_names()
{
    std::vector<std::string> out;
    for (const auto& t : all_tasks())
        out.push_back(t.name);
    return out;
}

VerificationReport run_all(const RunOptions& options)
{
    auto tasks = all_tasks();
    std::erase_if(tasks, [&](const Task& t) { return !selected(t.name, options.only); });
    VerificationReport report;
    report.budget_seconds = options.budget_seconds;
    report.corrupt_modulus = options.corrupt_modulus;

    const unsigned workers = std::min<unsigned>(worker_count(options.threads), static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            TaskContext ctx{Deadline::after(options.budget_seconds), options.budget_seconds, options.corrupt_modulus, 1};
            const auto start = std::chrono::steady_clock::now();
            Claims claims;
            try {
                claims = tasks[i].run(ctx);
            } catch (const std::exception& e) {
                claims.push_back(make_claim(tasks[i].name + ".error", "task " + tasks[i].name, ClaimOrigin::Trivial, "completes",
                                            std::string("exception: ") + e.what(), ClaimStatus::Fail));
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            for (auto& c : claims)
                c.runtime_seconds = secs;
            std::lock_guard lock(mu);
            report.claims.insert(report.claims.end(), claims.begin(), claims.end());
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t)
            pool.emplace_back(worker);
        worker();
    }
    std::sort(report.claims.begin(), report.claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return report;
}

std::string report_to_json(const VerificationReport& r, bool timings)
{
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["budget_seconds"] = r.budget_seconds;
    if (r.corrupt_modulus)
        j["corrupt_modulus"] = true;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.claims) {
        nlohmann::ordered_json o;
        o["id"] = c.id;
        o["anchor"] = c.anchor;
        o["origin"] = origin_name(c.origin);
        o["expected"] = c.expected;
        o["computed"] = c.computed;
        o["status"] = status_name(c.status);
        if (timings && c.runtime_seconds)
            o["runtime_seconds"] = *c.runtime_seconds;
        arr.push_back(std::move(o));
    }
    j["claims"] = std::move(arr);
    j["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}, {"timeout", r.timed_out()}};
    return j.dump(2) + "\n";
}

std::string report_to_markdown(const VerificationReport& r, bool timings)
{
    std::ostringstream os;
    os << "| claim | origin | expected | computed | status |" << (timings ? " seconds |" : "") << "\n";
    os << "|---|---|---|---|---|" << (timings ? "---|" : "") << "\n";
    auto cell = [](std::string s) {
        std::string out;
        for (char c : s)
            out += c == '|' ? std::string("\\|") : std::string(1, c);
        return out;
    };
    for (const auto& c : r.claims) {
        os << "| " << c.id << " | " << origin_name(c.origin) << " | " << cell(c.expected) << " | " << cell(c.computed) << " | " << status_name(c.status)
           << " |";
        if (timings)
            os << " " << (c.runtime_seconds ? fixed(*c.runtime_seconds, 2) : "") << " |";
        os << "\n";
    }
    os << "\n" << r.passed() << " pass, " << r.failed() << " fail, " << r.timed_out() << " timeout\n";
    return os.str();
}

} // namespace pgturan
