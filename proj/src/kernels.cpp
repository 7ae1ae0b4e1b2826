#include "msp/kernels.hpp"

#include "msp/errors.hpp"
#include "msp/matrix.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace msp::kernels {

bool openmp_enabled()
{
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

int max_threads()
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

void check_conformable(const IntMatrix& a, const IntMatrix& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("matrix product of dimensions " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
}

// One output row; k-outer order so zero entries of a skip a whole row of b.
void multiply_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& c, std::size_t i)
{
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt& bkj = b(k, j);
            if (bkj != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
        }
    }
}

}  // namespace

IntMatrix mat_mul_serial(const IntMatrix& a, const IntMatrix& b)
{
    check_conformable(a, b);
    IntMatrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) multiply_row(a, b, c, i);
    return c;
}

IntMatrix mat_mul_parallel(const IntMatrix& a, const IntMatrix& b)
{
    check_conformable(a, b);
    IntMatrix c(a.dim());
    const long n = static_cast<long>(a.dim());
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (n >= 2)
#endif
    for (long i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

std::vector<BigInt> trace_powers_serial(const IntMatrix& a, std::size_t count)
{
    std::vector<BigInt> out;
    out.reserve(count);
    IntMatrix power = IntMatrix::identity(a.dim());
    for (std::size_t l = 1; l <= count; ++l) {
        power = mat_mul_serial(power, a);
        out.push_back(trace(power));
    }
    return out;
}

std::vector<BigInt> trace_powers_parallel(const IntMatrix& a, std::size_t count)
{
    std::vector<BigInt> out;
    out.reserve(count);
    IntMatrix power = IntMatrix::identity(a.dim());
    for (std::size_t l = 1; l <= count; ++l) {
        power = mat_mul_parallel(power, a);
        out.push_back(trace(power));
    }
    return out;
}

}  // namespace msp::kernels
