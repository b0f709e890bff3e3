#pragma once

#include <vector>

#include "gammakit/precision.hpp"

namespace gammakit::linalg {

// Gaussian elimination with partial pivoting at extended precision.
// Throws conditioning_error when the best available pivot falls below
// 10^(5 - ctx.digits) relative to the largest entry of the input matrix.
std::vector<BigReal> solve_dense(std::vector<std::vector<BigReal>> a,
                                 std::vector<BigReal> rhs, PrecisionContext ctx);

// Unweighted least squares min ||A x - b||_2 via Householder QR; A is
// M x n with M >= n and full column rank.
std::vector<BigReal> solve_least_squares(std::vector<std::vector<BigReal>> a,
                                         std::vector<BigReal> rhs, PrecisionContext ctx);

}  // namespace gammakit::linalg
