#pragma once

// Lefschetz zeta functions as finite products of binomials (1 + delta z^r)^m.

#include "msp/arith.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace msp {

struct ZetaFactor {
    int delta;  // +1 or -1
    Period r;
    BigInt m;

    friend bool operator==(const ZetaFactor&, const ZetaFactor&) = default;
};

/// prod (1 + delta z^r)^m, normalized: equal (delta, r) merged, zero
/// exponents dropped, factors sorted by (r, delta).
class ZetaFactorization {
public:
    ZetaFactorization() = default;
    explicit ZetaFactorization(const std::vector<ZetaFactor>& factors);

    /// Parses "SIGN,r,m;SIGN,r,m;..." with SIGN in {+,-}; whitespace is
    /// ignored and repeated terms are merged. Throws ParseError.
    static ZetaFactorization parse(const std::string& text);

    std::vector<ZetaFactor> factors() const;
    /// Exponent of (1 + delta z^r), 0 when absent.
    BigInt exponent(int delta, Period r) const;
    bool empty() const { return exps_.empty(); }

    /// Same grammar as parse().
    std::string to_string() const;

    friend bool operator==(const ZetaFactorization&, const ZetaFactorization&) = default;

private:
    // key (r, delta)
    std::map<std::pair<Period, int>, BigInt> exps_;
};

/// Truncated power series; coefficient i is the z^i term, i = 0..N.
using PowerSeries = std::vector<BigInt>;

/// prod_k (1 - z^k)^{-a_k}.
ZetaFactorization zeta_from_dold(const DoldClass& d);

/// Exact coefficients through degree N.
PowerSeries series_expand(const ZetaFactorization& f, std::size_t degree);

/// L_1..L_N from z d/dz log zeta = sum L_n z^n.
std::vector<BigInt> lefschetz_from_zeta(const ZetaFactorization& f, std::size_t count);

/// Exponents e_k of the unique representation prod (1 - z^k)^{e_k}:
/// e_k = c_k + d_{k/2} - d_k (k even), c_k - d_k (k odd), where c and d
/// are the exponents of (1 - z^k) and (1 + z^k). Zero exponents omitted.
std::map<Period, BigInt> canonicalize(const ZetaFactorization& f);

/// {odd k : e_k != 0}.
std::set<Period> mper_from_factorization(const ZetaFactorization& f);

}  // namespace msp
