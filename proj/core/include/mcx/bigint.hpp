#pragma once

#include <gmpxx.h>

#include <string>

namespace mcx {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt binomial(long n, long k);

}  // namespace mcx
