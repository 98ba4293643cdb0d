#include "doctest.h"

#include "pgturan/bounds.hpp"

#include <cmath>

using namespace pgturan;

namespace {

long long isqrt(long long n)
{
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

long long ceil_sqrt(long long n)
{
    const auto r = isqrt(n);
    return r * r == n ? r : r + 1;
}

// ceil(S (q + sqrt q)) = S q + ceil(sqrt(S^2 q)), S = sum_{i<=m-2} q^i.
long long t_oracle(int m, int q)
{
    long long s = 0;
    long long pw = 1;
    for (int i = 0; i <= m - 2; ++i) {
        s += pw;
        pw *= q;
    }
    return s * q + ceil_sqrt(s * s * q);
}

long long factorial(int n)
{
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

long long choose(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

} // namespace

TEST_CASE("closed forms")
{
    CHECK(theorem1_lower(2, 3) == mpq_class(55, 96));
    CHECK(theorem1_upper(2, 2) == mpq_class(5, 6));
    CHECK(pg2_upper(2) == mpq_class(7, 9));
    CHECK(pg2_upper(3) == mpq_class(20, 21));
    CHECK(chromatic_lower(2, 4) == mpq_class(8, 9));
    CHECK(chromatic_lower(3, 3) == mpq_class(7, 8));
    CHECK(chromatic_lower(4, 3) == mpq_class(15, 16));
    for (int m : {2, 3, 4})
        for (int q : {2, 3, 4, 5, 7}) {
            CHECK(theorem1_lower(m, q) < theorem1_upper(m, q));
            CHECK(theorem1_lower(m, q) > 0);
        }
}

TEST_CASE("product lower bound against a direct product")
{
    for (int m : {2, 3})
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            long long s = 0;
            long long pw = 1;
            for (int j = 1; j <= m; ++j) {
                pw *= q;
                s += pw;
            }
            mpq_class prod = 1;
            for (int i = 1; i <= q; ++i)
                prod *= mpq_class(static_cast<long>(s - i), static_cast<long>(s));
            prod.canonicalize();
            CHECK(theorem1_lower(m, q) == prod);
        }
}

TEST_CASE("number of parts against an integer square-root oracle")
{
    for (int q = 2; q <= 200; ++q) {
        CAPTURE(q);
        CHECK(corollary1_t(2, q) == t_oracle(2, q));
        if (q >= 5) {
            CHECK(corollary1_t(3, q) == t_oracle(3, q));
            if (q <= 60)
                CHECK(corollary1_t(4, q) == t_oracle(4, q));
        }
    }
    CHECK(corollary1_t(2, 23) == 28);
    CHECK(corollary1_t(3, 23) == t_oracle(3, 23));
    CHECK_THROWS(corollary1_t(3, 4));
}

TEST_CASE("blocking bound is consistent with the computed maxima")
{
    CHECK(static_cast<int>(std::floor(lemma1_blocking_bound(2, 3))) == 7);
    CHECK(static_cast<int>(std::floor(lemma1_blocking_bound(2, 4))) == 14);
    CHECK(static_cast<int>(std::floor(lemma1_blocking_bound(2, 5))) == 22);
    CHECK_THROWS(lemma1_blocking_bound(2, 2));
    CHECK_THROWS(lemma1_blocking_bound(3, 3));
}

TEST_CASE("blocking-set polynomial: expanded and unexpanded forms agree")
{
    for (int q : {2, 3, 5, 9, 16, 23})
        for (int t : {q + 1, q + 3, 2 * q}) {
            const auto c = theorem2_univariate(q, t);
            const auto poly = theorem2_polynomial(q, t);
            for (int k = 0; k <= 20; ++k) {
                const long double a = std::fmod(0.6180339887498948L * (k + 1), 1.0L) / t; // scattered feasible points
                const long double direct = theorem2_evaluate(q, t, a);
                CAPTURE(q);
                CAPTURE(t);
                CAPTURE(k);
                CHECK(std::fabs(evaluate_univariate(c, a) - direct) <= 1e-18L + 1e-14L * std::fabs(direct));
                const long double x[2] = {a, 1 - t * a};
                CHECK(std::fabs(poly.evaluate(x) - direct) <= 1e-18L + 1e-14L * std::fabs(direct));
            }
        }
}

TEST_CASE("arc-cover polynomial coefficients")
{
    for (int q : {3, 4, 5, 7, 8})
        for (int M : {2, 3, 5}) {
            const auto poly = theorem3_polynomial(q, M);
            const auto map = poly.coefficient_map();
            for (int i = 1; i <= q; ++i)
                for (int j = 0; j <= 2; ++j) {
                    const int k = q + 1 - i - j;
                    if (k < 0)
                        continue;
                    const long long c = factorial(q + 1) / (factorial(i) * factorial(j)) * choose(M - 1, k);
                    const auto it = map.find({i, j, k});
                    if (c == 0)
                        CHECK(it == map.end());
                    else {
                        REQUIRE(it != map.end());
                        CHECK(it->second == static_cast<long>(c));
                    }
                }
        }
    const auto p = theorem3_polynomial(3, 2).coefficient_map();
    CHECK(p.at({1, 2, 1}) == 12);
    CHECK(p.at({3, 1, 0}) == 4);
}

TEST_CASE("polynomial text parser")
{
    const auto m = parse_polynomial_text("4\\alpha^{3}\\beta+12\\alpha\\beta^{2}\\gamma & \\\\ + \\alpha^2");
    CHECK(m.size() == 3);
    CHECK(m.at({3, 1, 0}) == 4);
    CHECK(m.at({1, 2, 1}) == 12);
    CHECK(m.at({2, 0, 0}) == 1);
    const auto g = parse_polynomial_text("6 α β γ + beta^4");
    CHECK(g.at({1, 1, 1}) == 6);
    CHECK(g.at({0, 4, 0}) == 1);
    for (const auto& ref : arc_cover_references()) {
        CAPTURE(ref.q);
        CHECK(parse_polynomial_text(ref.polynomial_text) == theorem3_polynomial(ref.q, ref.M).coefficient_map());
    }
}

TEST_CASE("segment optimum against a dense scan")
{
    for (auto [q, t] : {std::pair{3, 5}, std::pair{5, 8}, std::pair{7, 10}}) {
        const auto poly = theorem2_polynomial(q, t);
        const auto r = optimize_bound(poly);
        long double best = -1;
        long double best_a = 0;
        const int steps = 2'000'000;
        for (int k = 0; k <= steps; ++k) {
            const long double a = static_cast<long double>(k) / (static_cast<long double>(steps) * t);
            const auto v = theorem2_evaluate(q, t, a);
            if (v > best) {
                best = v;
                best_a = a;
            }
        }
        CHECK(r.value >= best - 1e-15L);
        CHECK(std::fabs(r.argmax[0] - best_a) < 1e-6L);
        CHECK(r.constraint_residual <= 1e-15L);
        CHECK(r.final_step < 1e-12L);
    }
}

TEST_CASE("simplex optimum dominates the grid and stays feasible")
{
    for (int q : {3, 5, 7}) {
        const auto poly = theorem3_polynomial(q, q - 1);
        const auto r = optimize_bound(poly);
        CHECK(r.value >= r.grid_value);
        CHECK(r.constraint_residual <= 1e-15L);
        // no random feasible point beats the optimum
        std::uint64_t state = 31;
        for (int trial = 0; trial < 2000; ++trial) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            const long double a = static_cast<long double>(state >> 11) / 9007199254740992.0L;
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            const long double b = (1 - a) * static_cast<long double>(state >> 11) / 9007199254740992.0L;
            const long double free[2] = {a, b};
            const auto x = poly.complete(free);
            CHECK(poly.evaluate(x) <= r.value + 1e-15L);
        }
    }
}

TEST_CASE("printed value tolerance is one unit in the last digit")
{
    PrintedValue v{"0.4444"};
    CHECK(v.value() == doctest::Approx(0.4444));
    CHECK(v.tolerance() == doctest::Approx(1e-4));
    CHECK(v.matches(0.44449L));
    CHECK_FALSE(v.matches(0.44460L));
}

TEST_CASE("tables: reproduced cells")
{
    for (const auto& row : reproduce_tables(1)) {
        CAPTURE(row.q);
        CHECK(row.all_ok());
    }
    for (const auto& row : reproduce_tables(2)) {
        CAPTURE(row.q);
        CHECK(row.thm1_ok);
        CHECK(row.favors_ok);
        if (row.q == 23) {
            // the printed blocking-set bound and alpha cells belong to t = 670
            CHECK(row.t == corollary1_t(3, 23));
            REQUIRE(row.t_matching_printed.has_value());
            CHECK(*row.t_matching_printed == 670);
        } else {
            CHECK(row.all_ok());
        }
    }
}

TEST_CASE("arc-cover optima")
{
    for (const auto& row : reproduce_arc_cover_optima()) {
        CAPTURE(row.ref.q);
        CHECK(row.polynomial_equal);
        CHECK(row.value_ok);
        CHECK(row.argmax_ok[0]);
        CHECK(row.argmax_ok[1]);
        if (row.printed_point_feasible) {
            CHECK(row.argmax_ok[2]);
            CHECK(row.value_at_printed <= row.opt.value + 1e-12L);
        } else {
            // printed gamma off the simplex by a factor of two
            CHECK(row.ref.q == 4);
        }
    }
}

TEST_CASE("decimal rendering")
{
    CHECK(to_decimal(mpq_class(55, 96), 6) == "0.572917");
    CHECK(to_decimal(mpq_class(1, 3), 3) == "0.333");
}
