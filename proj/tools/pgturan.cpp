// pgturan: command-line front end for the geometry, covering and bound computations.

#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pgturan/bounds.hpp"
#include "pgturan/construction.hpp"
#include "pgturan/covering.hpp"
#include "pgturan/geometry.hpp"
#include "pgturan/report.hpp"
#include "pgturan/structures.hpp"

using json = nlohmann::ordered_json;
using namespace pgturan;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

Deadline budget_deadline(double seconds)
{
    return seconds < 0 ? Deadline::unlimited() : Deadline::after(seconds);
}

json point_list(const Geometry& g, const PointSet& s)
{
    json a = json::array();
    s.for_each([&](int p) { a.push_back(format_point(g, p)); });
    return a;
}

json line_list(const Geometry& g, const std::vector<LineId>& ls)
{
    json a = json::array();
    for (auto l : ls)
        a.push_back(format_line(g, l));
    return a;
}

std::string decimal(long double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
    return buf;
}

json rational(const mpq_class& x)
{
    return {{"exact", x.get_str()}, {"decimal", to_decimal(x, 12)}};
}

json polynomial_json(const BoundPolynomial& p)
{
    json j;
    j["variables"] = p.variables;
    j["constraint"] = p.constraint == ConstraintKind::Segment ? "beta = 1 - t*alpha, 0 <= alpha <= 1/t"
                                                              : "alpha + beta + (M-1)*gamma = 1, all >= 0";
    j["provenance"] = p.provenance;
    j["text"] = p.to_string();
    json ms = json::array();
    for (const auto& m : p.monomials)
        ms.push_back({{"coefficient", m.coefficient.get_str()}, {"exponents", m.exponents}});
    j["monomials"] = std::move(ms);
    return j;
}

json opt_json(const OptResult& r)
{
    auto vec = [](const std::vector<long double>& v) {
        json a = json::array();
        for (auto x : v)
            a.push_back(decimal(x, 12));
        return a;
    };
    return {{"value", decimal(r.value, 12)},
            {"argmax", vec(r.argmax)},
            {"grid_value", decimal(r.grid_value, 12)},
            {"grid_argmax", vec(r.grid_argmax)},
            {"final_step", static_cast<double>(r.final_step)},
            {"constraint_residual", static_cast<double>(r.constraint_residual)}};
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- subcommands

int cmd_geometry(int m, int q, bool list)
{
    const auto g = build_geometry(m, q);
    json j;
    j["m"] = m;
    j["q"] = q;
    j["modulus"] = g.field().modulus();
    j["primitive"] = format_element(g.field(), g.field().primitive());
    j["points"] = g.num_points();
    j["lines"] = g.num_lines();
    const auto problem = g.check_invariants();
    j["invariants"] = problem.empty() ? "ok" : problem;
    if (list) {
        json pts = json::array();
        for (PointId p = 0; p < g.num_points(); ++p)
            pts.push_back(format_point(g, p));
        j["point_list"] = std::move(pts);
        json ls = json::array();
        for (LineId l = 0; l < g.num_lines(); ++l)
            ls.push_back(format_line(g, l));
        j["line_list"] = std::move(ls);
    }
    emit(j);
    return problem.empty() ? 0 : 1;
}

int cmd_arcs(int q, bool classify, double budget)
{
    const auto g = build_geometry(2, q);
    ArcEnumerationOptions opts;
    opts.deadline = budget_deadline(budget);
    const auto en = enumerate_complete_arcs(g, opts);
    json j;
    j["q"] = q;
    j["complete_search"] = en.complete;
    j["explored_nodes"] = en.explored_nodes;
    json arcs = json::array();
    for (const auto& a : en.arcs)
        arcs.push_back({{"size", a.size()},
                        {"points", point_list(g, a.points)},
                        {"complete", a.is_complete},
                        {"passants", a.secant_counts[0]},
                        {"tangents", a.secant_counts[1]},
                        {"secants", a.secant_counts[2]},
                        {"max_passant_concurrency", max_concurrency(g, a.passant_ids)},
                        {"passant_lines", line_list(g, a.passant_ids)}});
    j["arcs"] = std::move(arcs);
    if (classify && en.complete) {
        std::vector<PointSet> sets;
        for (const auto& a : en.arcs)
            sets.push_back(a.points);
        const auto cls = classify_up_to_collineation(g, sets);
        json cs = json::array();
        for (const auto& c : cls.classes)
            cs.push_back({{"size", en.arcs[c.front()].size()}, {"representative", point_list(g, en.arcs[c.front()].points)}, {"members", c.size()}});
        j["classes"] = std::move(cs);
    }
    emit(j);
    return en.complete ? 0 : 1;
}

int cmd_blocking(int m, int q, bool want_min, double budget)
{
    const auto g = build_geometry(m, q);
    const auto d = budget_deadline(budget);
    const auto r = want_min ? min_blocking_set_branch_and_bound(g, d) : max_blocking_set_size(g, d);
    json j;
    j["m"] = m;
    j["q"] = q;
    j["kind"] = want_min ? "smallest" : "largest";
    j["exact"] = r.exact;
    if (!r.exact)
        j["status"] = "timeout";
    j["size"] = r.size ? json(*r.size) : json(nullptr);
    if (r.size)
        j["witness"] = point_list(g, r.witness);
    j["explored_nodes"] = r.explored_nodes;
    emit(j);
    return r.exact ? 0 : 1;
}

int cmd_mq(int q, double budget)
{
    const auto g = build_geometry(2, q);
    MqOptions opts;
    opts.deadline = budget_deadline(budget);
    opts.threads = worker_count(0);
    const auto r = compute_Mq(g, opts);
    json j;
    j["q"] = q;
    j["optimal"] = r.optimal;
    j["M"] = r.M;
    j["max_over_classes"] = r.max_over_classes;
    json cs = json::array();
    for (const auto& c : r.classes)
        cs.push_back({{"size", c.representative.size()},
                      {"representative", point_list(g, c.representative.points)},
                      {"members", c.members},
                      {"passants", c.representative.passants()},
                      {"m", c.m.minimum_size},
                      {"m_optimal", c.m.optimal},
                      {"m_consistent", c.m_consistent},
                      {"cover", point_list(g, c.m.witness)}});
    j["classes"] = std::move(cs);
    j["explored_nodes"] = r.explored_nodes;
    emit(j);
    return r.optimal ? 0 : 1;
}

int cmd_verify(const std::string& what, double budget, const std::string& format, bool timings, bool corrupt, const std::vector<std::string>& only)
{
    RunOptions opts;
    opts.budget_seconds = budget;
    opts.corrupt_modulus = corrupt;
    if (what == "appendix-a" || what == "appendix-b")
        opts.only = {what};
    else if (what == "all")
        opts.only = only;
    else
        throw UsageError("verify expects appendix-a, appendix-b or all");
    const auto r = run_all(opts);
    std::cout << (format == "md" ? report_to_markdown(r, timings) : report_to_json(r, timings));
    return r.exit_code();
}

std::vector<double> parse_rates(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad rate: " + item);
        }
    }
    return out;
}

int cmd_freeness(const std::string& scheme, int q, int n, std::optional<int> k, std::optional<int> M, const std::string& rates_text, double budget)
{
    const auto rates = parse_rates(rates_text);
    PartitionSpec spec;
    if (scheme == "t2") {
        if (M)
            throw UsageError("--M belongs to the t3 scheme");
        std::optional<int> kk = k;
        if (!kk) {
            const auto b = max_blocking_set_size(build_geometry(2, q), budget_deadline(budget));
            if (!b.exact)
                throw UsageError("largest blocking set unknown within the budget; pass --k");
            kk = b.size.value_or(0);
        }
        spec = make_partition(n, q, 2, Scheme::BlockingSet, rates, blocking_scheme_parts(2, q, *kk));
    } else if (scheme == "t3") {
        if (k)
            throw UsageError("--k belongs to the t2 scheme");
        if (!M)
            throw UsageError("the t3 scheme needs --M");
        spec = make_partition(n, q, 2, Scheme::ArcCover, rates, *M - 1);
    } else {
        throw UsageError("--scheme must be t2 or t3");
    }
    const auto h = build_hypergraph(spec);
    const auto r = contains_subgeometry(h, build_geometry(2, q), budget_deadline(budget));
    json j;
    j["scheme"] = scheme;
    j["q"] = q;
    j["n"] = n;
    j["part_sizes"] = spec.layout();
    j["edges"] = h.edges.size();
    j["edges_exact_count"] = count_edges_exact(spec).get_str();
    j["contains_pg2"] = verdict_name(r.verdict);
    if (r.verdict == EmbeddingVerdict::Yes)
        j["witness"] = r.witness;
    j["explored_nodes"] = r.explored_nodes;
    emit(j);
    return r.verdict == EmbeddingVerdict::Timeout ? 1 : 0;
}

int cmd_bounds(int theorem, int m, int q, std::optional<int> t, std::optional<int> M, std::optional<int> chi)
{
    json j;
    j["theorem"] = theorem;
    j["m"] = m;
    j["q"] = q;
    if (theorem == 1) {
        j["lower"] = rational(theorem1_lower(m, q));
        j["upper"] = rational(theorem1_upper(m, q));
        if (q == 2)
            j["upper_q2"] = rational(pg2_upper(m));
        if (chi)
            j["chromatic_lower"] = rational(chromatic_lower(q, *chi));
    } else if (theorem == 2) {
        const int tt = t.value_or(corollary1_t(m, q));
        const auto p = theorem2_polynomial(q, tt);
        j["t"] = tt;
        j["polynomial"] = polynomial_json(p);
        json uni = json::array();
        for (const auto& c : theorem2_univariate(q, tt))
            uni.push_back(c.get_str());
        j["univariate_coefficients"] = std::move(uni);
        j["optimum"] = opt_json(optimize_bound(p));
    } else if (theorem == 3) {
        if (m != 2)
            throw UsageError("the arc-cover bound is for planes (m = 2)");
        if (!M)
            throw UsageError("the arc-cover bound needs --M-value");
        const auto p = theorem3_polynomial(q, *M);
        j["M"] = *M;
        j["polynomial"] = polynomial_json(p);
        j["optimum"] = opt_json(optimize_bound(p));
    } else {
        throw UsageError("--theorem must be 1, 2 or 3");
    }
    emit(j);
    return 0;
}

int cmd_tables(const std::string& which, const std::string& format)
{
    bool ok = true;
    if (which == "section4") {
        const auto rows = reproduce_arc_cover_optima();
        if (format == "json") {
            json a = json::array();
            for (const auto& r : rows) {
                a.push_back({{"q", r.ref.q},
                             {"M", r.ref.M},
                             {"printed", {{"value", r.ref.value.text}, {"alpha", r.ref.alpha.text}, {"beta", r.ref.beta.text}, {"gamma", r.ref.gamma.text}}},
                             {"polynomial", polynomial_json(r.poly)},
                             {"polynomial_equal", r.polynomial_equal},
                             {"optimum", opt_json(r.opt)},
                             {"value_ok", r.value_ok},
                             {"argmax_ok", r.argmax_ok},
                             {"printed_point_feasible", r.printed_point_feasible},
                             {"value_at_printed_point", decimal(r.value_at_printed, 12)}});
                ok = ok && r.polynomial_equal && r.value_ok && r.argmax_ok[0] && r.argmax_ok[1] && r.argmax_ok[2];
            }
            emit(a);
        } else {
            const char* sep = format == "csv" ? "," : " | ";
            if (format == "md")
                std::cout << "| q | M | value | alpha | beta | gamma | printed value | printed alpha | printed beta | printed gamma |\n"
                             "|---|---|---|---|---|---|---|---|---|---|\n";
            else
                std::cout << "q,M,value,alpha,beta,gamma,printed_value,printed_alpha,printed_beta,printed_gamma\n";
            for (const auto& r : rows) {
                std::cout << (format == "md" ? "| " : "") << r.ref.q << sep << r.ref.M << sep << decimal(r.opt.value, 10) << sep
                          << decimal(r.opt.argmax[0], 10) << sep << decimal(r.opt.argmax[1], 10) << sep << decimal(r.opt.argmax[2], 10) << sep
                          << r.ref.value.text << sep << r.ref.alpha.text << sep << r.ref.beta.text << sep << r.ref.gamma.text
                          << (format == "md" ? " |" : "") << "\n";
                ok = ok && r.polynomial_equal && r.value_ok && r.argmax_ok[0] && r.argmax_ok[1] && r.argmax_ok[2];
            }
        }
        return ok ? 0 : 1;
    }
    int table = 0;
    if (which == "1")
        table = 1;
    else if (which == "2")
        table = 2;
    else
        throw UsageError("--which must be 1, 2 or section4");
    const auto rows = reproduce_tables(table);
    const int digits = table == 1 ? 6 : 10;
    if (format == "json") {
        json a = json::array();
        for (const auto& r : rows) {
            json o{{"m", r.m},
                   {"q", r.q},
                   {"t", r.t},
                   {"product_bound", decimal(r.thm1, 12)},
                   {"blocking_set_bound", decimal(r.cor1, 12)},
                   {"alpha", decimal(r.alpha, 12)},
                   {"printed", {{"product_bound", r.printed_thm1.text}, {"blocking_set_bound", r.printed_cor1.text}, {"alpha", r.printed_alpha.text}}},
                   {"ok", {{"product_bound", r.thm1_ok}, {"blocking_set_bound", r.cor1_ok}, {"alpha", r.alpha_ok}, {"larger", r.favors_ok}}}};
            if (r.t_matching_printed)
                o["t_matching_printed"] = *r.t_matching_printed;
            a.push_back(std::move(o));
            ok = ok && r.all_ok();
        }
        emit(a);
    } else {
        const char* sep = format == "csv" ? "," : " | ";
        if (format == "md")
            std::cout << "| q | t | product bound | blocking-set bound | alpha | printed | match |\n|---|---|---|---|---|---|---|\n";
        else
            std::cout << "q,t,product_bound,blocking_set_bound,alpha,printed_product,printed_blocking,printed_alpha,match\n";
        for (const auto& r : rows) {
            std::cout << (format == "md" ? "| " : "") << r.q << sep << r.t << sep << decimal(r.thm1, digits) << sep << decimal(r.cor1, digits) << sep
                      << decimal(r.alpha, digits) << sep;
            if (format == "md")
                std::cout << r.printed_thm1.text << " / " << r.printed_cor1.text << " / " << r.printed_alpha.text;
            else
                std::cout << r.printed_thm1.text << sep << r.printed_cor1.text << sep << r.printed_alpha.text;
            std::cout << sep << (r.all_ok() ? "yes" : "no") << (format == "md" ? " |" : "") << "\n";
            ok = ok && r.all_ok();
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Projective geometry Turán-density computations"};
    app.set_version_flag("--version", std::string("pgturan ") + kVersion);
    app.require_subcommand(1);

    int m = 2;
    int q = 3;
    double budget = 900;
    std::string format = "json";

    auto* geo = app.add_subcommand("geometry", "PG_m(q) counts and invariants");
    bool list = false;
    geo->add_option("--m", m, "dimension")->check(CLI::Range(2, 8));
    geo->add_option("--q", q, "field order")->required();
    geo->add_flag("--list", list, "list points and lines");

    auto* arcs = app.add_subcommand("arcs", "complete arcs containing the standard frame");
    bool classify = false;
    arcs->add_option("--q", q, "field order")->required();
    arcs->add_flag("--classify", classify, "group arcs into collineation classes");
    arcs->add_option("--budget", budget, "seconds");
    arcs->add_option("--format", format)->check(CLI::IsMember({"json"}));

    auto* blocking = app.add_subcommand("blocking", "largest or smallest blocking set");
    bool want_max = false;
    bool want_min = false;
    blocking->add_option("--m", m, "dimension");
    blocking->add_option("--q", q, "field order")->required();
    auto* fmax = blocking->add_flag("--max", want_max, "largest blocking set (default)");
    blocking->add_flag("--min", want_min, "smallest blocking set")->excludes(fmax);
    blocking->add_option("--budget", budget, "seconds");

    auto* mq = app.add_subcommand("mq", "M(q) over all complete arcs");
    mq->add_option("--q", q, "field order")->required();
    mq->add_option("--budget", budget, "seconds");
    mq->add_option("--format", format)->check(CLI::IsMember({"json"}));

    auto* verify = app.add_subcommand("verify", "check the published claims");
    std::string what;
    bool timings = false;
    bool corrupt = false;
    std::vector<std::string> only;
    verify->add_option("what", what, "appendix-a | appendix-b | all")->required()->check(CLI::IsMember({"appendix-a", "appendix-b", "all"}));
    verify->add_option("--budget", budget, "seconds per task (0 = searches time out)")->check(CLI::NonNegativeNumber);
    verify->add_option("--format", format, "json | md")->check(CLI::IsMember({"json", "md"}));
    verify->add_flag("--timings", timings, "include per-task runtimes (output no longer byte-stable)");
    verify->add_flag("--corrupt-modulus", corrupt, "negative control: geometries over a reducible modulus");
    verify->add_option("--only", only, "task-name prefixes to run");

    auto* freeness = app.add_subcommand("freeness", "search a construction for a copy of PG_2(q)");
    std::string scheme;
    int n = 0;
    std::optional<int> k;
    std::optional<int> Mopt;
    std::string rates;
    freeness->add_option("--scheme", scheme, "t2 | t3")->required()->check(CLI::IsMember({"t2", "t3"}));
    freeness->add_option("--q", q, "field order")->required();
    freeness->add_option("--n", n, "vertices")->required()->check(CLI::Range(0, 64));
    freeness->add_option("--k", k, "largest blocking-set size (t2; default: computed)");
    freeness->add_option("--M", Mopt, "M(q) (t3)");
    freeness->add_option("--rates", rates, "alpha[,beta[,gamma]]")->required();
    freeness->add_option("--budget", budget, "seconds");
    freeness->add_option("--format", format)->check(CLI::IsMember({"json"}));

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds and bound polynomials");
    int theorem = 1;
    std::optional<int> t;
    std::optional<int> Mval;
    std::optional<int> chi;
    bounds->add_option("--theorem", theorem, "1 | 2 | 3")->required()->check(CLI::IsMember({1, 2, 3}));
    bounds->add_option("--m", m, "dimension");
    bounds->add_option("--q", q, "field order")->required();
    bounds->add_option("--t", t, "number of parts (theorem 2; default from q)");
    bounds->add_option("--M-value", Mval, "M(q) (theorem 3)");
    bounds->add_option("--chi", chi, "chromatic number (theorem 1)");

    auto* tables = app.add_subcommand("tables", "reproduce the comparison tables or the arc-cover optima");
    std::string which;
    std::string table_format = "md";
    tables->add_option("--which", which, "1 | 2 | section4")->required()->check(CLI::IsMember({"1", "2", "section4"}));
    tables->add_option("--format", table_format, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*geo)
            return cmd_geometry(m, q, list);
        if (*arcs)
            return cmd_arcs(q, classify, budget);
        if (*blocking)
            return cmd_blocking(m, q, want_min, budget);
        if (*mq)
            return cmd_mq(q, budget);
        if (*verify)
            return cmd_verify(what, budget, format, timings, corrupt, only);
        if (*freeness)
            return cmd_freeness(scheme, q, n, k, Mopt, rates, budget);
        if (*bounds)
            return cmd_bounds(theorem, m, q, t, Mval, chi);
        if (*tables)
            return cmd_tables(which, table_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
