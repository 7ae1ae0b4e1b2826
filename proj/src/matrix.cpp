#include "msp/matrix.hpp"

#include "msp/errors.hpp"
#include "msp/kernels.hpp"

#include <string>

namespace msp {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

IntMatrix::IntMatrix(std::size_t dim, std::vector<BigInt> entries)
    : dim_(dim), entries_(std::move(entries))
{
    if (entries_.size() != dim * dim)
        throw DimensionMismatch("matrix of dimension " + std::to_string(dim) + " needs " +
                                std::to_string(dim * dim) + " entries");
}

IntMatrix IntMatrix::identity(std::size_t dim)
{
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows)
{
    const std::size_t n = rows.size();
    std::vector<BigInt> entries;
    entries.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw DimensionMismatch("matrix rows must have length " + std::to_string(n));
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return IntMatrix(n, std::move(entries));
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<BigInt>> v;
    for (const auto& r : rows) {
        std::vector<BigInt>& row = v.emplace_back();
        for (long x : r) row.emplace_back(x);
    }
    return from_rows(v);
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> diag)
{
    IntMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix sum of unequal dimensions");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.dim() >= kernels::parallel_threshold && kernels::openmp_enabled())
        return kernels::mat_mul_parallel(a, b);
    return kernels::mat_mul_serial(a, b);
}

IntMatrix mat_pow(const IntMatrix& a, unsigned long exponent)
{
    IntMatrix result = IntMatrix::identity(a.dim());
    IntMatrix base = a;
    while (exponent) {
        if (exponent & 1ul) result = mat_mul(result, base);
        exponent >>= 1;
        if (exponent) base = mat_mul(base, base);
    }
    return result;
}

BigInt trace(const IntMatrix& a)
{
    BigInt t = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

std::vector<BigInt> trace_powers(const IntMatrix& a, std::size_t count)
{
    if (a.dim() >= kernels::parallel_threshold && kernels::openmp_enabled())
        return kernels::trace_powers_parallel(a, count);
    return kernels::trace_powers_serial(a, count);
}

IntPolynomial charpoly(const IntMatrix& a)
{
    const std::size_t n = a.dim();
    // coefficients c_0..c_n of det(xI - A), c_n = 1
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        IntMatrix next = mat_mul(a, m);
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = std::move(next);
        // tr(A M_k) without forming the product
        BigInt t;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(a(i, j)) != 0) mpz_addmul(t.get_mpz_t(), a(i, j).get_mpz_t(), m(j, i).get_mpz_t());
        BigInt q;
        mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), k);
        c[n - k] = -q;
    }
    return IntPolynomial(std::move(c));
}

BigInt determinant(const IntMatrix& a)
{
    BigInt c0 = charpoly(a).coefficient(0);
    return a.dim() % 2 == 0 ? c0 : BigInt(-c0);
}

IntMatrix cyclic_permutation(std::size_t n)
{
    if (n == 0) throw InvalidArgument("cyclic_permutation: n must be positive");
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m((i + 1) % n, i) = 1;
    return m;
}

IntMatrix companion_cycle_quotient(std::size_t n)
{
    if (n < 2) throw InvalidArgument("companion_cycle_quotient: n must be at least 2");
    const std::size_t d = n - 1;
    IntMatrix m(d);
    for (std::size_t i = 0; i + 1 < d; ++i) m(i + 1, i) = 1;
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -1;
    return m;
}

IntMatrix block_diag(std::span<const IntMatrix> blocks)
{
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    IntMatrix out(n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) out(offset + i, offset + j) = b(i, j);
        offset += b.dim();
    }
    return out;
}

IntMatrix symplectic_sum(std::span<const IntMatrix> blocks)
{
    std::size_t g = 0;
    for (const auto& b : blocks) {
        if (b.dim() % 2 != 0) throw OddDimension("symplectic_sum: block of odd dimension");
        g += b.dim() / 2;
    }
    IntMatrix out(2 * g);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        const std::size_t h = b.dim() / 2;
        // local index -> global index
        auto place = [&](std::size_t local) { return local < h ? offset + local : g + offset + (local - h); };
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) out(place(i), place(j)) = b(i, j);
        offset += h;
    }
    return out;
}

SymplecticForm standard_symplectic_form(std::size_t genus)
{
    IntMatrix omega(2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        omega(i, genus + i) = 1;
        omega(genus + i, i) = -1;
    }
    return {genus, std::move(omega)};
}

namespace {

IntMatrix form_pullback(const IntMatrix& a)
{
    if (a.dim() % 2 != 0)
        throw OddDimension("symplectic predicates need even dimension, got " + std::to_string(a.dim()));
    const IntMatrix& omega = standard_symplectic_form(a.dim() / 2).matrix;
    return mat_mul(a.transpose(), mat_mul(omega, a));
}

}  // namespace

bool is_symplectic(const IntMatrix& a)
{
    return form_pullback(a) == standard_symplectic_form(a.dim() / 2).matrix;
}

bool is_antisymplectic(const IntMatrix& a)
{
    return form_pullback(a) == -standard_symplectic_form(a.dim() / 2).matrix;
}

bool antisymplectic_charpoly_identity_check(const IntMatrix& a)
{
    if (!is_antisymplectic(a)) throw NotAntisymplectic("matrix is not antisymplectic");
    const std::size_t two_g = a.dim();
    const std::size_t g = two_g / 2;
    IntPolynomial chi = charpoly(a);
    for (std::size_t i = 0; i <= two_g; ++i) {
        BigInt rhs = chi.coefficient(two_g - i);
        if ((g + i) % 2 == 1) rhs = -rhs;
        if (chi.coefficient(i) != rhs) return false;
    }
    return true;
}

IntMatrix symplectic_transvection(std::span<const BigInt> v, const BigInt& lambda)
{
    const std::size_t n = v.size();
    if (n % 2 != 0) throw OddDimension("transvection vector must have even length");
    const std::size_t g = n / 2;
    // row vector w = v^T Omega: w_j = sum_i v_i Omega_ij
    std::vector<BigInt> w(n);
    for (std::size_t j = 0; j < g; ++j) {
        w[j] = -v[g + j];
        w[g + j] = v[j];
    }
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) t(i, j) += lambda * v[i] * w[j];
    }
    return t;
}

}  // namespace msp
