#include "doctest.h"

#include "pgturan/gf.hpp"

#include <set>
#include <vector>

using namespace pgturan;

namespace {

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 32};

// Degree <= 3 polynomials are irreducible iff they have no root.
bool has_root(int p, const std::vector<int>& c)
{
    for (int x = 0; x < p; ++x) {
        long long v = 0;
        long long xp = 1;
        for (int ci : c) {
            v += ci * xp;
            xp = xp * x % p;
        }
        if (v % p == 0)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("prime powers")
{
    CHECK(prime_power(1) == std::nullopt);
    CHECK(prime_power(6) == std::nullopt);
    CHECK(prime_power(12) == std::nullopt);
    CHECK(*prime_power(8) == std::pair{2, 3});
    CHECK(*prime_power(9) == std::pair{3, 2});
    CHECK(*prime_power(23) == std::pair{23, 1});
    CHECK(*prime_power(243) == std::pair{3, 5});
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("field axioms hold for every supported small order")
{
    for (int q : kOrders) {
        CAPTURE(q);
        const auto f = FieldTable::of_order(q);
        CHECK(f.q() == q);
        CHECK(f.check_axioms().empty());
    }
}

TEST_CASE("default moduli")
{
    CHECK(FieldTable::of_order(4).modulus() == std::vector<int>{1, 1, 1});
    CHECK(FieldTable::of_order(8).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(FieldTable::of_order(9).modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("primitive element generates the multiplicative group")
{
    for (int q : kOrders) {
        CAPTURE(q);
        const auto f = FieldTable::of_order(q);
        std::set<Elem> seen;
        Elem x = 1;
        for (int i = 0; i < q - 1; ++i) {
            seen.insert(x);
            CHECK(f.exp(i) == x);
            CHECK(f.log(x) == i);
            x = f.mul(x, f.primitive());
        }
        CHECK(x == 1);
        CHECK(seen.size() == static_cast<std::size_t>(q - 1));
    }
}

TEST_CASE("inverse of zero is a domain error")
{
    const auto f = FieldTable::of_order(7);
    CHECK_THROWS_AS(f.inv(0), FieldDomainError);
    CHECK(f.mul(3, f.inv(3)) == 1);
    CHECK(f.pow(3, 6) == 1);
    CHECK(f.pow(0, 0) == 1);
}

TEST_CASE("irreducibility agrees with the root test in degrees 2 and 3")
{
    for (int p : {2, 3, 5}) {
        for (int deg : {2, 3}) {
            int total = 1;
            for (int i = 0; i < deg; ++i)
                total *= p;
            for (int code = 0; code < total; ++code) {
                std::vector<int> c(static_cast<std::size_t>(deg) + 1);
                int v = code;
                for (int i = 0; i < deg; ++i) {
                    c[static_cast<std::size_t>(i)] = v % p;
                    v /= p;
                }
                c.back() = 1;
                CAPTURE(p);
                CAPTURE(code);
                CHECK(is_irreducible(p, c) == !has_root(p, c));
            }
        }
    }
}

TEST_CASE("reducible modulus is rejected by make and breaks the axioms unchecked")
{
    CHECK_THROWS(FieldTable::make(2, 2, std::vector<int>{1, 0, 1}));
    const auto ring = FieldTable::make_unchecked(2, 2, {1, 0, 1});
    CHECK_FALSE(ring.check_axioms().empty());
    CHECK(ring.primitive() == -1);
}

TEST_CASE("frobenius is an additive and multiplicative automorphism")
{
    for (int q : {4, 8, 9, 16, 27}) {
        const auto f = FieldTable::of_order(q);
        std::set<Elem> image;
        for (Elem a = 0; a < q; ++a) {
            image.insert(f.frobenius(a));
            for (Elem b = 0; b < q; ++b) {
                CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
                CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
            }
        }
        CHECK(image.size() == static_cast<std::size_t>(q));
    }
}

TEST_CASE("coefficient encoding round trip")
{
    const auto f = FieldTable::of_order(27);
    for (Elem a = 0; a < 27; ++a)
        CHECK(f.from_coefficients(f.coefficients(a)) == a);
    CHECK(f.from_integer(-1) == f.neg(1));
    CHECK(f.from_integer(4) == 1);
}
