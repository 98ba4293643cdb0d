#include "doctest.h"

#include "pgturan/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace pgturan;

namespace {

bool is_search_claim(const std::string& id)
{
    for (const char* p : {"blocking", "arcs.", "M.", "appendix-", "freeness"})
        if (id.rfind(p, 0) == 0)
            return true;
    return false;
}

} // namespace

TEST_CASE("report is byte-identical across runs")
{
    RunOptions o;
    o.only = {"geometry", "closed", "poly", "blocking"};
    o.budget_seconds = 120;
    const auto a = report_to_json(run_all(o));
    o.threads = 1;
    const auto b = report_to_json(run_all(o));
    CHECK(a == b);
    CHECK(report_to_markdown(run_all(o)) == report_to_markdown(run_all(o)));
}

TEST_CASE("claims are sorted, unique and well formed")
{
    RunOptions o;
    o.only = {"geometry", "closed", "arcs.q5", "M.q5"};
    const auto r = run_all(o);
    CHECK_FALSE(r.claims.empty());
    std::set<std::string> ids;
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
        ids.insert(r.claims[i].id);
        if (i > 0)
            CHECK(r.claims[i - 1].id < r.claims[i].id);
        CHECK_FALSE(r.claims[i].anchor.empty());
    }
    CHECK(ids.size() == r.claims.size());
    CHECK(r.failed() == 0);
    CHECK(r.exit_code() == 0);

    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["claims"].size() == r.claims.size());
    CHECK_FALSE(j["claims"][0].contains("runtime_seconds"));
    const auto jt = nlohmann::json::parse(report_to_json(r, true));
    CHECK(jt["claims"][0].contains("runtime_seconds"));
}

TEST_CASE("zero budget: searches time out, formulas still pass")
{
    RunOptions o;
    o.budget_seconds = 0;
    const auto r = run_all(o);
    int timeouts = 0;
    for (const auto& c : r.claims) {
        CAPTURE(c.id);
        if (c.status == ClaimStatus::Timeout) {
            ++timeouts;
            CHECK(is_search_claim(c.id));
        }
        if (!is_search_claim(c.id) && c.id.rfind("geometry", 0) != 0)
            CHECK(c.status != ClaimStatus::Timeout);
    }
    CHECK(timeouts > 0);
    CHECK(timeouts == r.timed_out());
}

TEST_CASE("corrupted modulus makes the geometry claims fail")
{
    RunOptions o;
    o.only = {"geometry"};
    o.corrupt_modulus = true;
    const auto r = run_all(o);
    CHECK(r.failed() > 0);
    CHECK(r.exit_code() != 0);

    o.corrupt_modulus = false;
    CHECK(run_all(o).exit_code() == 0);
}

TEST_CASE("worker count honours the environment cap")
{
    setenv("PGTURAN_THREADS", "2", 1);
    CHECK(worker_count(8) == 2);
    CHECK(worker_count(1) == 1);
    setenv("PGTURAN_THREADS", "1", 1);
    CHECK(worker_count(0) == 1);
    unsetenv("PGTURAN_THREADS");
    CHECK(worker_count(3) == 3);
    CHECK(worker_count(0) >= 1);
}

TEST_CASE("task names cover every claim family")
{
    const auto names = task_names();
    for (const char* n : {"geometry", "blocking", "appendix-a", "appendix-b", "poly", "optimum", "table", "closed", "freeness"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
}
