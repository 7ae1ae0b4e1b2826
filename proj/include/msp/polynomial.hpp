#pragma once

#include "msp/arith.hpp"
#include "msp/bigint.hpp"
#include "msp/errors.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace msp {

/// Dense integer polynomial, coefficients indexed by degree. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(std::size_t degree, const BigInt& c = 1);
    /// x^n - 1
    static IntPolynomial x_pow_minus_one(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    BigInt coefficient(std::size_t i) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& q);
    IntPolynomial& operator-=(const IntPolynomial& q);
    IntPolynomial operator-() const;

    friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
    friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// p(x) raised to a nonnegative power.
    IntPolynomial pow(unsigned e) const;

    /// Human-readable form, highest degree first, e.g. "x^2 - x + 1".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

struct IntDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

struct RationalDivision {
    std::vector<BigRational> quotient;
    std::vector<BigRational> remainder;
};

/// Long division over the rationals. Throws DivisionByZero.
RationalDivision poly_divmod_rational(const IntPolynomial& p, const IntPolynomial& q);

/// Long division with integral quotient and remainder. Throws DivisionByZero,
/// or ExactnessError if a coefficient of either result is not an integer.
IntDivision poly_divmod(const IntPolynomial& p, const IntPolynomial& q);

/// The d-th cyclotomic polynomial. Memoized; safe to call concurrently.
const IntPolynomial& cyclotomic(Period d);

/// Negated second-highest coefficient of Phi_m: the sum of its roots.
BigInt cyclotomic_root_sum(Period m);

/// Multiplicity map d -> m_d with p = prod Phi_d^{m_d}.
using CyclotomicFactorization = std::map<Period, unsigned>;

class NotQuasiUnipotent : public Error {
public:
    NotQuasiUnipotent(IntPolynomial residual, CyclotomicFactorization partial);
    const IntPolynomial& residual() const { return residual_; }
    const CyclotomicFactorization& partial() const { return partial_; }

private:
    IntPolynomial residual_;
    CyclotomicFactorization partial_;
};

/// Decomposes a monic polynomial into cyclotomic factors by trial division.
/// Throws NonMonicInput, or NotQuasiUnipotent carrying the non-cyclotomic
/// residual factor.
CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& p);

/// Least common multiple of the orders present (1 for an empty map).
Period cyclotomic_period(const CyclotomicFactorization& f);

/// Power sums s_1..s_count of the roots of a monic p (Newton's identities).
std::vector<BigInt> trace_sequence_from_charpoly(const IntPolynomial& p, std::size_t count);

}  // namespace msp
