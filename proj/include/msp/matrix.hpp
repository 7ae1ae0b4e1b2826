#pragma once

#include "msp/bigint.hpp"
#include "msp/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace msp {

/// Square matrix of arbitrary-precision integers, row-major. Dimension 0 is
/// a valid (empty) matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim);
    IntMatrix(std::size_t dim, std::vector<BigInt> entries);

    static IntMatrix identity(std::size_t dim);
    /// Throws DimensionMismatch unless every row has rows.size() entries.
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix diagonal(std::span<const BigInt> diag);

    std::size_t dim() const { return dim_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    std::span<const BigInt> row(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }
    const std::vector<BigInt>& entries() const { return entries_; }

    IntMatrix transpose() const;
    IntMatrix operator-() const;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<BigInt> entries_;
};

/// Exact product; uses the OpenMP kernel for large operands.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

/// Binary exponentiation; mat_pow(A, 0) is the identity.
IntMatrix mat_pow(const IntMatrix& a, unsigned long exponent);

BigInt trace(const IntMatrix& a);

/// tr(A), tr(A^2), ..., tr(A^count) by repeated multiplication.
std::vector<BigInt> trace_powers(const IntMatrix& a, std::size_t count);

/// det(xI - A) via the Faddeev-LeVerrier recurrence (all divisions exact).
IntPolynomial charpoly(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);

/// n x n permutation matrix of the cycle e_i -> e_{i+1 mod n}.
IntMatrix cyclic_permutation(std::size_t n);

/// Companion matrix of 1 + x + ... + x^{n-1}: ones on the subdiagonal and
/// -1 throughout the last column. Size (n-1) x (n-1), n >= 2.
IntMatrix companion_cycle_quotient(std::size_t n);

IntMatrix block_diag(std::span<const IntMatrix> blocks);

/// Direct sum of blocks each written in its own symplectic basis
/// (a_1..a_h, b_1..b_h). The result is expressed in the global basis
/// (a-coordinates of all blocks, then b-coordinates of all blocks), so
/// (anti)symplectic blocks assemble to an (anti)symplectic matrix for the
/// standard form. Throws OddDimension.
IntMatrix symplectic_sum(std::span<const IntMatrix> blocks);

struct SymplecticForm {
    std::size_t genus = 0;
    IntMatrix matrix;
};

/// [[0, I_g], [-I_g, 0]] in the basis (a_1..a_g, b_1..b_g).
SymplecticForm standard_symplectic_form(std::size_t genus);

/// A^T Omega A == Omega. Throws OddDimension.
bool is_symplectic(const IntMatrix& a);
/// A^T Omega A == -Omega. Throws OddDimension.
bool is_antisymplectic(const IntMatrix& a);

/// Checks chi_A(x) = (-1)^g x^{2g} chi_A(-1/x) coefficientwise:
/// c_i = (-1)^{g+i} c_{2g-i}. Throws NotAntisymplectic.
bool antisymplectic_charpoly_identity_check(const IntMatrix& a);

/// The symplectic transvection x -> x + lambda <v, x> v, i.e.
/// I + lambda v v^T Omega. Its inverse is the transvection with -lambda.
IntMatrix symplectic_transvection(std::span<const BigInt> v, const BigInt& lambda);

}  // namespace msp
