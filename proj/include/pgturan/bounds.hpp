#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pgturan {

// ---------------------------------------------------------------- closed forms

/// prod_{i=1}^q (1 - i / sum_{j=1}^m q^j)
mpq_class theorem1_lower(int m, int q);
/// 1 - 1/C(q^m, q)
mpq_class theorem1_upper(int m, int q);
/// Improved upper bound for q = 2: 1 - 3/(2^{2m}-1) for odd m, 1 - 6/((2^m-1)(2^{m+1}+1)) for even m.
mpq_class pg2_upper(int m);
/// 1 - 1/(chi-1)^q
mpq_class chromatic_lower(int q, int chi);

/// Number of parts t in the blocking-set bound: q + ceil(sqrt q) for m = 2,
/// ceil(sum_{i=0}^{m-2} q^i (q + sqrt q)) for m >= 3 (q >= 5 required there).
int corollary1_t(int m, int q);

/// Upper bound on the size of a blocking set of PG_m(q):
/// q^m - sqrt(q) (q^{m-2} + ... + 1), for m = 2 with q > 2 and for m >= 3 with q >= 5.
long double lemma1_blocking_bound(int m, int q);

// ---------------------------------------------------------------- polynomials

struct Monomial
{
    mpq_class coefficient;
    std::vector<int> exponents;
};

enum class ConstraintKind {
    /// variables (alpha, beta), beta = 1 - t*alpha, 0 <= alpha <= 1/t
    Segment,
    /// variables (alpha, beta, gamma) >= 0, alpha + beta + (M-1) gamma = 1
    Simplex,
};

struct BoundPolynomial
{
    std::vector<std::string> variables;
    std::vector<Monomial> monomials; // sorted by exponent vector, descending
    ConstraintKind constraint = ConstraintKind::Segment;
    int q = 0;
    int t = 0; // Segment
    int M = 0; // Simplex
    std::string provenance;

    long double evaluate(std::span<const long double> x) const;
    /// Exponent vector -> coefficient.
    std::map<std::vector<int>, mpq_class> coefficient_map() const;
    /// e.g. "4 a^3 b + 4 a^3 g + ..." in the ordering of monomials.
    std::string to_string() const;
    /// Appends the dependent coordinates to a free-parameter vector:
    /// Segment alpha -> (alpha, beta); Simplex (alpha, beta) -> (alpha, beta, gamma).
    std::vector<long double> complete(std::span<const long double> free) const;
    /// Largest violation of the constraint (equality and sign) at x.
    long double constraint_residual(std::span<const long double> x) const;
};

/// Blocking-set bound in (alpha, beta):
/// (q+1)!/i! C(t, q+1-i) alpha^{q+1-i} beta^i, i = 1..q.
BoundPolynomial theorem2_polynomial(int q, int t);

/// Exact univariate expansion in alpha after beta = 1 - t*alpha; index = power of alpha.
std::vector<mpq_class> theorem2_univariate(int q, int t);

/// Unexpanded evaluator (1 - t*alpha)^i form, long double.
long double theorem2_evaluate(int q, int t, long double alpha);

/// Expanded polynomial evaluated at alpha in high-precision floating point.
long double evaluate_univariate(std::span<const mpq_class> coefficients, long double alpha);

/// Arc-cover bound: (q+1)!/(i! j!) C(M-1, q+1-i-j) alpha^i beta^j gamma^{q+1-i-j},
/// 1 <= i <= q, 0 <= j <= 2.
BoundPolynomial theorem3_polynomial(int q, int M);

/// Parses sums like "4\alpha^{3}\beta+12\alpha\beta^{2}\gamma" (LaTeX macros or
/// plain alpha/beta/gamma, '&' and "\\" ignored) into exponent -> coefficient.
std::map<std::vector<int>, mpq_class> parse_polynomial_text(std::string_view text);

// ---------------------------------------------------------------- optimizer

struct OptResult
{
    std::vector<long double> argmax; // all variables, dependent ones included
    long double value = 0;
    std::vector<long double> grid_argmax;
    long double grid_value = 0;
    long double final_step = 0;
    long double constraint_residual = 0;
    int refinement_rounds = 0;
};

/// Grid (10^5 samples on a segment, step-1/2000 triangular grid on a
/// simplex) followed by windowed golden-section refinement along the
/// coordinate directions until the window is below 1e-12.
OptResult optimize_bound(const BoundPolynomial& poly);

// ---------------------------------------------------------------- reference data

/// A value printed with a fixed number of decimals; the tolerance is one
/// unit in the last printed digit.
struct PrintedValue
{
    std::string text;
    long double value() const;
    long double tolerance() const;
    bool matches(long double x) const;
};

struct TableRow
{
    int table = 1;
    int m = 2;
    int q = 0;
    int t = 0;
    PrintedValue printed_thm1;
    PrintedValue printed_cor1;
    PrintedValue printed_alpha;
    bool printed_favors_thm1 = false; // bold column

    long double thm1 = 0;
    long double cor1 = 0;
    long double alpha = 0;
    bool thm1_ok = false;
    bool cor1_ok = false;
    bool alpha_ok = false;
    bool favors_ok = false;
    /// Nearest t whose optimum reproduces the printed blocking-set bound and alpha
    /// cells, when t itself does not.
    std::optional<int> t_matching_printed;

    bool all_ok() const { return thm1_ok && cor1_ok && alpha_ok && favors_ok; }
};

std::vector<TableRow> reproduce_tables(int which = 0); // 0 = both

struct ArcCoverReference
{
    int q = 0;
    int M = 0;
    std::string polynomial_text;
    PrintedValue alpha, beta, gamma;
    PrintedValue value;
};

const std::vector<ArcCoverReference>& arc_cover_references();

struct ArcCoverRow
{
    ArcCoverReference ref;
    BoundPolynomial poly;
    bool polynomial_equal = false;
    std::vector<std::string> polynomial_differences;
    OptResult opt;
    bool value_ok = false;              // |value - printed| <= 1e-8
    std::array<bool, 3> argmax_ok{};    // per coordinate, |x - printed| <= 1e-4
    bool printed_point_feasible = false;
    long double value_at_printed = 0;   // polynomial at the printed point
};

inline constexpr long double kArcCoverValueTolerance = 1e-8L;
inline constexpr long double kArcCoverArgmaxTolerance = 1e-4L;

std::vector<ArcCoverRow> reproduce_arc_cover_optima();

std::string to_decimal(const mpq_class& x, int digits);

} // namespace pgturan
