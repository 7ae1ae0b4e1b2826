#include "msp/errors.hpp"
#include "msp/polynomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace msp;

TEST_CASE("ring operations")
{
    const IntPolynomial xm1{-1, 1}, xp1{1, 1};
    CHECK(xm1 * xp1 == IntPolynomial{-1, 0, 1});
    CHECK(xm1 + xp1 == IntPolynomial{0, 2});
    CHECK((xm1 - xm1).is_zero());
    CHECK((xm1 - xm1).degree() == -1);
    CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(IntPolynomial{-1, 0, 1}.to_string() == "x^2 - 1");
    CHECK(IntPolynomial{1, -1, 1}.to_string() == "x^2 - x + 1");
}

TEST_CASE("divmod")
{
    const IntPolynomial x2m1{-1, 0, 1};
    auto d = poly_divmod(x2m1, IntPolynomial{-1, 1});
    CHECK(d.quotient == IntPolynomial{1, 1});
    CHECK(d.remainder.is_zero());

    d = poly_divmod(x2m1, IntPolynomial{1, 0, 1});
    CHECK(d.quotient == IntPolynomial{1});
    CHECK(d.remainder == IntPolynomial{-2});

    CHECK_THROWS_AS(poly_divmod(x2m1, IntPolynomial{}), DivisionByZero);
    CHECK_THROWS_AS(poly_divmod(IntPolynomial{0, 1}, IntPolynomial{1, 2}), ExactnessError);

    const auto r = poly_divmod_rational(IntPolynomial{0, 1}, IntPolynomial{1, 2});
    REQUIRE(r.quotient.size() == 1);
    CHECK(r.quotient[0] == BigRational(1, 2));
    REQUIRE(r.remainder.size() == 1);
    CHECK(r.remainder[0] == BigRational(-1, 2));

    // non-monic but exact
    d = poly_divmod(IntPolynomial{2, 6, 4}, IntPolynomial{1, 2});
    CHECK(d.quotient == IntPolynomial{2, 2});
    CHECK(d.remainder.is_zero());
}

TEST_CASE("divmod reconstructs the dividend")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int t = 0; t < 100; ++t) {
        std::vector<BigInt> pv(1 + t % 9), qv(1 + t % 4);
        for (auto& x : pv) x = c(rng);
        for (auto& x : qv) x = c(rng);
        qv.back() = 1;
        const IntPolynomial p(pv), q(qv);
        const auto d = poly_divmod(p, q);
        CHECK(d.quotient * q + d.remainder == p);
        CHECK(d.remainder.degree() < q.degree());
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic(2) == IntPolynomial{1, 1});
    CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient -2
    bool has_minus_two = false;
    for (const auto& c : cyclotomic(105).coefficients()) has_minus_two |= c == -2;
    CHECK(has_minus_two);
}

TEST_CASE("x^n - 1 is the product of Phi_d over d | n")
{
    for (Period n = 1; n <= 200; ++n) {
        IntPolynomial prod{1};
        for (Period d : divisors(n)) prod = prod * cyclotomic(d);
        CHECK(prod == IntPolynomial::x_pow_minus_one(n));
        CHECK(cyclotomic(n).degree() == static_cast<long>(euler_phi(n)));
    }
}

TEST_CASE("cyclotomic root sums equal the Moebius function")
{
    CHECK(cyclotomic_root_sum(1) == 1);
    CHECK(cyclotomic_root_sum(2) == -1);
    CHECK(cyclotomic_root_sum(12) == 0);
    for (Period m = 1; m <= 500; ++m) CHECK(cyclotomic_root_sum(m) == moebius(m));
}

TEST_CASE("concurrent cyclotomic memo fill")
{
    std::vector<std::thread> threads;
    std::vector<IntPolynomial> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] { results[static_cast<std::size_t>(t)] = cyclotomic(700 + 30 * (t % 2)); });
    for (auto& th : threads) th.join();
    for (int t = 2; t < 8; ++t) CHECK(results[static_cast<std::size_t>(t)] == results[static_cast<std::size_t>(t % 2)]);
}

TEST_CASE("cyclotomic factorization examples")
{
    const IntPolynomial x2m1{-1, 0, 1};
    CHECK(cyclotomic_factorization(x2m1 * x2m1) == CyclotomicFactorization{{1, 2}, {2, 2}});
    CHECK(cyclotomic_factorization(IntPolynomial::x_pow_minus_one(3)) == CyclotomicFactorization{{1, 1}, {3, 1}});
    CHECK(cyclotomic_factorization(IntPolynomial{1}).empty());
    try {
        cyclotomic_factorization(IntPolynomial{1, -3, 1});
        FAIL("expected NotQuasiUnipotent");
    } catch (const NotQuasiUnipotent& e) {
        CHECK(e.residual() == IntPolynomial{1, -3, 1});
    }
    CHECK_THROWS_AS(cyclotomic_factorization(IntPolynomial{1, 2}), NonMonicInput);
    CHECK_THROWS_AS(cyclotomic_factorization(IntPolynomial{}), NonMonicInput);
}

TEST_CASE("partial factorization is reported with the residual")
{
    const IntPolynomial p = cyclotomic(5) * IntPolynomial{-2, 1};
    try {
        cyclotomic_factorization(p);
        FAIL("expected NotQuasiUnipotent");
    } catch (const NotQuasiUnipotent& e) {
        CHECK(e.residual() == IntPolynomial{-2, 1});
        CHECK(e.partial() == CyclotomicFactorization{{5, 1}});
    }
}

TEST_CASE("quasi-unipotence agrees with a root-modulus oracle")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> deg(1, 6);
    const std::vector<Period> small_orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18};
    int qu_count = 0;
    for (int t = 0; t < 300; ++t) {
        IntPolynomial p{1};
        if (t % 2 == 0) {
            // random product of cyclotomics, degree <= 6
            std::uniform_int_distribution<std::size_t> pick(0, small_orders.size() - 1);
            for (int k = 0; k < 4; ++k) {
                const IntPolynomial& phi = cyclotomic(small_orders[pick(rng)]);
                if (p.degree() + phi.degree() <= 6) p = p * phi;
            }
        } else {
            std::vector<BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& x : v) x = coeff(rng);
            v.back() = 1;
            p = IntPolynomial(v);
        }
        bool library = true;
        try {
            cyclotomic_factorization(p);
        } catch (const NotQuasiUnipotent&) {
            library = false;
        }
        qu_count += library;
        CHECK_MESSAGE(library == oracle::all_roots_on_unit_circle(p, 1e-2L), p.to_string());
    }
    CHECK(qu_count > 150);
}

TEST_CASE("Newton power sums")
{
    using V = std::vector<BigInt>;
    CHECK(trace_sequence_from_charpoly(IntPolynomial::x_pow_minus_one(3), 6) == V{0, 0, 3, 0, 0, 3});
    CHECK(trace_sequence_from_charpoly(IntPolynomial{-1, 1}, 4) == V{1, 1, 1, 1});
    const IntPolynomial x2m1{-1, 0, 1};
    CHECK(trace_sequence_from_charpoly(x2m1 * x2m1, 4) == V{0, 4, 0, 4});
    CHECK_THROWS_AS(trace_sequence_from_charpoly(IntPolynomial{1, 2}, 3), NonMonicInput);
}

TEST_CASE("power sums of products of x^n - 1 are sums of reg")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Period> order(1, 9);
    std::uniform_int_distribution<unsigned> mult(1, 3);
    for (int t = 0; t < 50; ++t) {
        std::map<Period, unsigned> m;
        IntPolynomial p{1};
        for (int k = 0; k < 3; ++k) {
            const Period n = order(rng);
            const unsigned e = mult(rng);
            m[n] += e;
            p = p * IntPolynomial::x_pow_minus_one(n).pow(e);
        }
        const auto s = trace_sequence_from_charpoly(p, 40);
        for (Period l = 1; l <= 40; ++l) {
            BigInt expected = 0;
            for (const auto& [n, e] : m) expected += BigInt(e) * reg(n, l);
            CHECK(s[l - 1] == expected);
        }
    }
}

TEST_CASE("power sums of cyclotomic products are sums of primitive root power sums")
{
    // primitive d-th root power sums via Moebius: s_l(Phi_d) = sum_{e | gcd(l,d)} e mu(d/e)
    auto primitive_sum = [](Period d, Period l) {
        long s = 0;
        for (Period e : divisors(d))
            if (l % e == 0) s += static_cast<long>(e) * moebius(d / e);
        return s;
    };
    const CyclotomicFactorization f{{1, 1}, {4, 2}, {6, 1}, {15, 1}};
    IntPolynomial p{1};
    for (const auto& [d, m] : f) p = p * cyclotomic(d).pow(m);
    const auto s = trace_sequence_from_charpoly(p, 60);
    for (Period l = 1; l <= 60; ++l) {
        long expected = 0;
        for (const auto& [d, m] : f) expected += static_cast<long>(m) * primitive_sum(d, l);
        CHECK(s[l - 1] == expected);
    }
}
