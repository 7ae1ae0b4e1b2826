#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace msp {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace msp
