#include "msp/errors.hpp"
#include "msp/lefschetz.hpp"
#include "msp/zeta.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace msp;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parsing")
{
    const auto f = ZetaFactorization::parse(" -,1,-1 ; +,2, 3;-,1,2 ");
    CHECK(f.exponent(-1, 1) == 1);
    CHECK(f.exponent(1, 2) == 3);
    CHECK(f.exponent(1, 1) == 0);
    CHECK(f.to_string() == "-,1,1;+,2,3");
    CHECK(ZetaFactorization::parse(f.to_string()) == f);
    CHECK(ZetaFactorization::parse("\xE2\x88\x92,3,2").exponent(-1, 3) == 2);
    CHECK(ZetaFactorization::parse("-,1,1;-,1,-1").empty());
    CHECK(ZetaFactorization::parse("").empty());
    CHECK(ZetaFactorization::parse("+,1,123456789012345678901234567890").exponent(1, 1) ==
          BigInt("123456789012345678901234567890"));

    CHECK_THROWS_AS(ZetaFactorization::parse("*,1,1"), ParseError);
    CHECK_THROWS_AS(ZetaFactorization::parse("-,0,1"), ParseError);
    CHECK_THROWS_AS(ZetaFactorization::parse("-,1"), ParseError);
    CHECK_THROWS_AS(ZetaFactorization::parse("-,x,1"), ParseError);
    CHECK_THROWS_AS(ZetaFactorization::parse("-,1,1,1"), ParseError);
    CHECK_THROWS_AS(ZetaFactorization(std::vector<ZetaFactor>{{2, 1, BigInt(1)}}), InvalidArgument);
}

TEST_CASE("series examples")
{
    CHECK(series_expand(ZetaFactorization::parse("-,1,-1"), 4) == ints({1, 1, 1, 1, 1}));
    CHECK(series_expand(ZetaFactorization::parse("+,1,2"), 3) == ints({1, 2, 1, 0}));
    CHECK(series_expand(ZetaFactorization::parse("-,1,-1;-,2,-1"), 4) == ints({1, 1, 2, 2, 3}));
    CHECK(series_expand(ZetaFactorization(), 3) == ints({1, 0, 0, 0}));
    CHECK(series_expand(ZetaFactorization::parse("+,1,-1"), 4) == ints({1, -1, 1, -1, 1}));
}

TEST_CASE("Lefschetz numbers from zeta")
{
    CHECK(lefschetz_from_zeta(ZetaFactorization::parse("-,1,-1"), 4) == ints({1, 1, 1, 1}));
    CHECK(lefschetz_from_zeta(ZetaFactorization::parse("+,1,1"), 4) == ints({1, -1, 1, -1}));
    CHECK(lefschetz_from_zeta(ZetaFactorization::parse("-,2,3"), 6) == ints({0, -6, 0, -6, 0, -6}));
    CHECK(lefschetz_from_zeta(ZetaFactorization::parse("+,2,1"), 6) == ints({0, 2, 0, -2, 0, 2}));

    const DoldClass d({{1, 2}, {3, -2}, {4, 5}});
    const auto ls = lefschetz_from_zeta(zeta_from_dold(d), 24);
    for (Period n = 1; n <= 24; ++n) CHECK(ls[n - 1] == lefschetz_from_dold(d, n));
}

TEST_CASE("canonical form")
{
    using M = std::map<Period, BigInt>;
    CHECK(canonicalize(ZetaFactorization::parse("+,1,1")) == M{{1, -1}, {2, 1}});
    CHECK(canonicalize(ZetaFactorization::parse("-,3,2")) == M{{3, 2}});
    CHECK(canonicalize(ZetaFactorization::parse("+,2,5")) == M{{2, -5}, {4, 5}});
    CHECK(canonicalize(ZetaFactorization::parse("+,1,1;-,1,1;-,2,-1")).empty());

    CHECK(mper_from_factorization(ZetaFactorization::parse("+,1,1")) == std::set<Period>{1});
    CHECK(mper_from_factorization(ZetaFactorization::parse("+,2,5;-,6,1")).empty());
    CHECK(mper_from_factorization(ZetaFactorization::parse("-,3,2;-,5,-1")) == std::set<Period>{3, 5});

    const DoldClass d({{1, 2}, {2, -1}, {6, 4}});
    const auto e = canonicalize(zeta_from_dold(d));
    for (const auto& [k, a] : d.coefficients()) CHECK(e.at(k) == -a);
}

TEST_CASE("random factorizations")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> count(1, 5), sign(0, 1), deg(1, 7), mult(-3, 3);
    constexpr std::size_t degree = 60;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ZetaFactor> fs;
        std::vector<oracle::RawFactor> raw;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            const int delta = sign(rng) ? 1 : -1;
            const unsigned long r = deg(rng);
            const long m = mult(rng);
            fs.push_back({delta, r, BigInt(m)});
            raw.push_back({delta, r, m});
        }
        const ZetaFactorization f(fs);
        const auto series = series_expand(f, degree);
        CHECK(series == oracle::convolution_series(raw, degree));

        // the canonical form describes the same series
        std::vector<ZetaFactor> canon;
        for (const auto& [r, e] : canonicalize(f)) canon.push_back({-1, r, e});
        const ZetaFactorization g(canon);
        CHECK(series_expand(g, degree) == series);
        CHECK(canonicalize(g) == canonicalize(f));
        CHECK(lefschetz_from_zeta(g, degree) == lefschetz_from_zeta(f, degree));
        for (Period n : mper_from_factorization(f)) CHECK(n % 2 == 1);
    }
}
