#pragma once

// Number-theoretic kernel: Moebius function, divisors, the elementary
// periodic functions reg_k, and the transform between Lefschetz sequences
// and their periodic-expansion (Dold) coefficients.

#include "msp/bigint.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <vector>

namespace msp {

using Period = std::uint64_t;

int moebius(Period n);

/// Positive divisors of n in increasing order.
std::vector<Period> divisors(Period n);

/// Euler's totient.
Period euler_phi(Period n);

Period gcd(Period a, Period b);
Period lcm(Period a, Period b);

/// Elementary periodic function: k if k divides n, else 0.
inline Period reg(Period k, Period n) { return (n % k == 0) ? k : 0; }

/// Values L_n on a finite, nonempty, divisor-closed set of indices.
class LefschetzSequence {
public:
    /// Throws InvalidDomain if the domain is empty, contains 0, or is not
    /// closed under taking divisors.
    explicit LefschetzSequence(std::map<Period, BigInt> values);
    LefschetzSequence(std::initializer_list<std::pair<const Period, BigInt>> values)
        : LefschetzSequence(std::map<Period, BigInt>(values)) {}

    /// The prefix 1..values.size().
    static LefschetzSequence from_prefix(const std::vector<BigInt>& values);

    const BigInt& at(Period n) const;
    bool contains(Period n) const { return values_.count(n) != 0; }
    std::set<Period> domain() const;
    const std::map<Period, BigInt>& values() const { return values_; }

private:
    std::map<Period, BigInt> values_;
};

/// Finitely supported coefficients n -> a_n of a periodic expansion.
/// Zero coefficients are never stored, so equality is equality of maps.
class DoldClass {
public:
    DoldClass() = default;
    explicit DoldClass(const std::map<Period, BigInt>& coefficients);
    DoldClass(std::initializer_list<std::pair<const Period, BigInt>> coefficients)
        : DoldClass(std::map<Period, BigInt>(coefficients)) {}

    BigInt operator[](Period n) const;
    void set(Period n, const BigInt& value);

    std::set<Period> support() const;
    std::set<Period> odd_support() const;
    const std::map<Period, BigInt>& coefficients() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    /// sum_n n * a_n; the value of L at any common multiple of the support.
    BigInt weighted_sum() const;

    friend bool operator==(const DoldClass&, const DoldClass&) = default;

private:
    std::map<Period, BigInt> coeffs_;
};

/// a_n = (1/n) sum_{k|n} mu(n/k) L_k on every n of the domain.
/// Throws DoldViolation when some a_n is not an integer.
DoldClass dold_coefficients(const LefschetzSequence& seq);

/// sum_{k|n} k a_k.
BigInt lefschetz_from_dold(const DoldClass& d, Period n);

/// True iff n divides sum_{k|n} mu(n/k) L_k. Throws InvalidDomain when n is
/// not in the domain.
bool dold_congruence_check(const LefschetzSequence& seq, Period n);

}  // namespace msp
