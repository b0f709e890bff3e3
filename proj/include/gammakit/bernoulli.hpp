#pragma once

#include <gmpxx.h>

#include "gammakit/precision.hpp"

namespace gammakit {

// Largest Bernoulli index the cache covers (B_2 .. B_120 for even indices).
inline constexpr int kMaxBernoulliIndex = 120;

// Exact Bernoulli number B_index as a rational.  The full table is computed
// once from the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 (B_0 = 1)
// on first use; afterwards reads are lock-free.
const mpq_class& bernoulli_rational(int index);

// B_{two_k} rounded to the context precision.  two_k must be even and in
// [2, 120].
BigReal bernoulli(int two_k, PrecisionContext ctx);

// Rounds an exact rational to a context-precision value.
BigReal to_bigreal(const mpq_class& q, PrecisionContext ctx);

}  // namespace gammakit
