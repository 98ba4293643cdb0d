#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgturan {

/// Raised for arithmetic that has no value in the field (inverse of zero).
class FieldDomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Element of a finite field, stored as a dense index into the field's
/// tables. The index is the base-p encoding of the residue polynomial's
/// coefficients (constant term first), so index 0 is the zero and index 1
/// the one.
using Elem = int;

/**
 * Arithmetic tables for GF(p^k), q = p^k <= 256.
 *
 * The modulus is stored as ascending coefficients c_0..c_k with c_k = 1.
 * Tables are built once; lookups are branch-free.
 */
class FieldTable
{
public:
    /// Builds GF(p^k). Without a modulus the defaults are x^2+x+1 for q=4,
    /// x^3+x^2+1 for q=8, x^2+1 for q=9, and otherwise the first primitive
    /// polynomial in ascending coefficient order.
    static FieldTable make(int p, int k, std::optional<std::vector<int>> modulus = std::nullopt);

    /// Convenience: make(p, k) for a prime power q.
    static FieldTable of_order(int q);

    /// Builds the tables without checking that the modulus is irreducible.
    /// The result is a ring, not a field; used only for negative controls.
    static FieldTable make_unchecked(int p, int k, std::vector<int> modulus);

    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    bool is_prime_field() const noexcept { return k_ == 1; }

    /// Index of a generator of the multiplicative group (-1 when the tables
    /// do not form a field).
    Elem primitive() const noexcept { return primitive_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[idx(a, b)]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const noexcept { return neg_[static_cast<std::size_t>(a)]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    /// a -> a^p.
    Elem frobenius(Elem a) const { return pow(a, p_); }

    /// primitive^i, i taken mod q-1.
    Elem exp(int i) const;
    /// Discrete log base primitive(); a must be nonzero.
    int log(Elem a) const;

    /// Base-p coefficients of the residue polynomial, constant term first.
    std::vector<int> coefficients(Elem a) const;
    Elem from_coefficients(const std::vector<int>& coeffs) const;

    /// Maps an integer to the prime subfield (n mod p).
    Elem from_integer(long long n) const;

    /// Exhaustive check of the field axioms (associativity, commutativity,
    /// distributivity, identities, inverses). Returns a description of the
    /// first violation, or an empty string.
    std::string check_axioms() const;

private:
    FieldTable() = default;
    static FieldTable build(int p, int k, std::vector<int> modulus, bool checked);

    std::size_t idx(Elem a, Elem b) const noexcept
    {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
    }

    int p_ = 0;
    int k_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::int16_t> inv_;
    std::vector<std::uint8_t> exp_;
    std::vector<std::int16_t> log_;
    Elem primitive_ = -1;
};

bool is_prime(int n) noexcept;

/// Returns (p, k) with p^k = q, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q) noexcept;

/// True iff the monic polynomial (ascending coefficients) of degree >= 1 is
/// irreducible over GF(p).
bool is_irreducible(int p, const std::vector<int>& modulus);

} // namespace pgturan
