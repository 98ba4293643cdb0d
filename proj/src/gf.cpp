#include "pgturan/gf.hpp"

#include <sstream>

namespace pgturan {

namespace {

using Poly = std::vector<int>; // ascending coefficients mod p

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

/// Remainder of a modulo the monic polynomial m, coefficients mod p.
Poly poly_mod(Poly a, const Poly& m, int p)
{
    trim(a);
    const auto dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const auto shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

int ipow(int b, int e)
{
    int r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of code.
Poly monic_from_code(int p, int degree, int code)
{
    Poly m(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) {
        m[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    m.back() = 1;
    return m;
}

} // namespace

bool is_prime(int n) noexcept
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(int q) noexcept
{
    if (q < 2)
        return std::nullopt;
    int p = 2;
    while (q % p != 0)
        ++p;
    int k = 0;
    int r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1)
        return std::nullopt;
    return std::make_pair(p, k);
}

bool is_irreducible(int p, const std::vector<int>& modulus)
{
    Poly m = modulus;
    trim(m);
    if (m.size() < 2)
        return false;
    const int degree = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= degree; ++d) {
        const int count = ipow(p, d);
        for (int code = 0; code < count; ++code)
            if (poly_mod(m, monic_from_code(p, d, code), p).empty())
                return false;
    }
    return true;
}

FieldTable FieldTable::make(int p, int k, std::optional<std::vector<int>> modulus)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw std::invalid_argument("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i)
        q *= p;
    if (q > 256)
        throw std::invalid_argument("field order " + std::to_string(q) + " exceeds 256");

    if (modulus) {
        Poly m = *modulus;
        for (auto& c : m)
            c = ((c % p) + p) % p;
        trim(m);
        if (static_cast<int>(m.size()) - 1 != k)
            throw std::invalid_argument("modulus degree does not match extension degree");
        if (m.back() != 1)
            throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(p, m))
            throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
        return build(p, k, m, true);
    }

    if (k == 1)
        return build(p, 1, Poly{0, 1}, true);
    if (p == 2 && k == 2)
        return build(p, k, Poly{1, 1, 1}, true);
    if (p == 2 && k == 3)
        return build(p, k, Poly{1, 0, 1, 1}, true);
    if (p == 3 && k == 2)
        return build(p, k, Poly{1, 0, 1}, true);

    const int count = ipow(p, k);
    for (int code = 0; code < count; ++code) {
        Poly m = monic_from_code(p, k, code);
        if (m[0] == 0 || !is_irreducible(p, m))
            continue;
        FieldTable f = build(p, k, m, true);
        // x is the element with index p; take the first modulus for which it generates.
        Elem x = p;
        int order = 1;
        while (x != 1) {
            x = f.mul(x, p);
            ++order;
        }
        if (order == f.q_ - 1)
            return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

FieldTable FieldTable::of_order(int q)
{
    const auto pk = prime_power(q);
    if (!pk)
        throw std::invalid_argument("unsupported field order " + std::to_string(q) + " (not a prime power)");
    return make(pk->first, pk->second);
}

FieldTable FieldTable::make_unchecked(int p, int k, std::vector<int> modulus)
{
    for (auto& c : modulus)
        c = ((c % p) + p) % p;
    trim(modulus);
    if (static_cast<int>(modulus.size()) - 1 != k || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    return build(p, k, std::move(modulus), false);
}

FieldTable FieldTable::build(int p, int k, std::vector<int> modulus, bool checked)
{
    FieldTable f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = ipow(p, k);
    f.modulus_ = std::move(modulus);
    const auto q = static_cast<std::size_t>(f.q_);

    std::vector<Poly> polys(q);
    for (std::size_t a = 0; a < q; ++a) {
        polys[a] = f.coefficients(static_cast<Elem>(a));
        trim(polys[a]);
    }

    f.add_.assign(q * q, 0);
    f.mul_.assign(q * q, 0);
    f.neg_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) {
        auto ca = f.coefficients(static_cast<Elem>(a));
        Poly na(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i)
            na[i] = (p - ca[i]) % p;
        f.neg_[a] = static_cast<std::uint8_t>(f.from_coefficients(na));
        for (std::size_t b = 0; b < q; ++b) {
            auto cb = f.coefficients(static_cast<Elem>(b));
            Poly s(static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] = (ca[i] + cb[i]) % p;
            f.add_[a * q + b] = static_cast<std::uint8_t>(f.from_coefficients(s));
            Poly prod = poly_mod(poly_mul(polys[a], polys[b], p), f.modulus_, p);
            f.mul_[a * q + b] = static_cast<std::uint8_t>(f.from_coefficients(prod));
        }
    }

    f.inv_.assign(q, -1);
    for (std::size_t a = 1; a < q; ++a)
        for (std::size_t b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) {
                f.inv_[a] = static_cast<std::int16_t>(b);
                break;
            }

    // Smallest element of multiplicative order q-1.
    f.log_.assign(q, -1);
    f.exp_.assign(q > 1 ? q - 1 : 1, 0);
    for (std::size_t g = 1; g < q && f.primitive_ < 0; ++g) {
        std::vector<std::int16_t> lg(q, -1);
        std::size_t x = 1;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < q; ++i) {
            if (lg[x] >= 0) {
                ok = false;
                break;
            }
            lg[x] = static_cast<std::int16_t>(i);
            f.exp_[i] = static_cast<std::uint8_t>(x);
            x = f.mul_[x * q + g];
        }
        if (ok && x == 1) {
            f.primitive_ = static_cast<Elem>(g);
            f.log_ = std::move(lg);
        }
    }
    if (checked && f.primitive_ < 0)
        throw std::logic_error("multiplicative group is not cyclic; tables are inconsistent");
    return f;
}

Elem FieldTable::inv(Elem a) const
{
    if (a == 0)
        throw FieldDomainError("inverse of zero");
    const auto r = inv_[static_cast<std::size_t>(a)];
    if (r < 0)
        throw FieldDomainError("element " + std::to_string(a) + " has no inverse (modulus is reducible)");
    return r;
}

Elem FieldTable::pow(Elem a, long long e) const
{
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem r = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem FieldTable::exp(int i) const
{
    if (primitive_ < 0)
        throw FieldDomainError("tables do not form a field");
    const int n = q_ - 1;
    return exp_[static_cast<std::size_t>(((i % n) + n) % n)];
}

int FieldTable::log(Elem a) const
{
    if (a == 0)
        throw FieldDomainError("logarithm of zero");
    const int r = log_[static_cast<std::size_t>(a)];
    if (r < 0)
        throw FieldDomainError("element has no logarithm (tables do not form a field)");
    return r;
}

std::vector<int> FieldTable::coefficients(Elem a) const
{
    std::vector<int> c(static_cast<std::size_t>(k_));
    for (auto& d : c) {
        d = a % p_;
        a /= p_;
    }
    return c;
}

Elem FieldTable::from_coefficients(const std::vector<int>& coeffs) const
{
    Elem r = 0;
    Elem scale = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k_); ++i) {
        const int c = i < coeffs.size() ? ((coeffs[i] % p_) + p_) % p_ : 0;
        r += c * scale;
        scale *= p_;
    }
    return r;
}

Elem FieldTable::from_integer(long long n) const
{
    return static_cast<Elem>(((n % p_) + p_) % p_);
}

std::string FieldTable::check_axioms() const
{
    std::ostringstream err;
    const Elem q = q_;
    for (Elem a = 0; a < q; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a) {
            err << "identity fails at " << a;
            return err.str();
        }
        if (add(a, neg(a)) != 0) {
            err << "additive inverse fails at " << a;
            return err.str();
        }
        if (a != 0 && (inv_[static_cast<std::size_t>(a)] < 0 || mul(a, inv_[static_cast<std::size_t>(a)]) != 1)) {
            err << "no multiplicative inverse for " << a;
            return err.str();
        }
        for (Elem b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) {
                err << "commutativity fails at (" << a << "," << b << ")";
                return err.str();
            }
            for (Elem c = 0; c < q; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    err << "associativity fails at (" << a << "," << b << "," << c << ")";
                    return err.str();
                }
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
                    err << "distributivity fails at (" << a << "," << b << "," << c << ")";
                    return err.str();
                }
            }
        }
    }
    return {};
}

} // namespace pgturan
