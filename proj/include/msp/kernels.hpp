#pragma once

// Data-parallel kernels. Each parallel kernel has a serial reference that
// computes bit-identical results; tests and bench/ compare the two.

#include "msp/bigint.hpp"

#include <cstddef>
#include <vector>

namespace msp {
class IntMatrix;
}

namespace msp::kernels {

/// Operands below this dimension are multiplied serially.
inline constexpr std::size_t parallel_threshold = 32;

bool openmp_enabled();
int max_threads();

IntMatrix mat_mul_serial(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_mul_parallel(const IntMatrix& a, const IntMatrix& b);

std::vector<BigInt> trace_powers_serial(const IntMatrix& a, std::size_t count);
std::vector<BigInt> trace_powers_parallel(const IntMatrix& a, std::size_t count);

/// Runs body(i) for i in [0, count), in parallel when OpenMP is available.
/// body must not touch shared mutable state.
template <class F>
void parallel_for(std::size_t count, F&& body)
{
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(count); ++i) body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

}  // namespace msp::kernels
