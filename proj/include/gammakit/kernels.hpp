#pragma once

#include <span>
#include <vector>

#include "gammakit/bigcomplex.hpp"

namespace gammakit {

bool is_nonpositive_integer(const BigComplex& z);

// sin(pi z) with the argument reduced about the nearest integer:
// z = k + dz, sin(pi z) = (-1)^k sin(pi dz).  The reduction is exact, so
// accuracy near integers does not degrade with |z|.
BigComplex sin_pi(const BigComplex& z);

// High-accuracy log-gamma used as "exact" by every error measurement.
// For Re(z) >= 1/2 the Stirling series is applied at w = z + shift and the
// rising product z (z+1) ... (z+shift-1) is divided back out; for
// Re(z) < 1/2 the reflection formula continues the result.  The imaginary
// part is exp-faithful but not branch-continuous.
class ReferenceOracle {
public:
    ReferenceOracle() : ReferenceOracle(30, 30, PrecisionContext{}) {}
    ReferenceOracle(int shift, int terms, PrecisionContext ctx);

    int shift() const noexcept { return shift_; }
    int terms() const noexcept { return terms_; }
    PrecisionContext context() const noexcept { return ctx_; }

    BigComplex log_gamma(const BigComplex& z) const;
    BigComplex gamma(const BigComplex& z) const;

private:
    BigComplex log_gamma_right(const BigComplex& z) const;

    int shift_;
    int terms_;
    PrecisionContext ctx_;
    std::vector<BigReal> series_;  // B_{2k} / (2k (2k-1)), k = 1..terms
};

// Gamma scaled by its Stirling envelope: Gamma(z) e^{z+r} / (z+r)^{z-1/2}.
// Meromorphic on Re(z+r) > 0; tends to sqrt(2 pi) as |z| grows.
BigComplex scaled_gamma(const BigComplex& z, const BigReal& r, const ReferenceOracle& oracle);

// z (z+1) ... (z+count-1); empty product is 1.
BigComplex rising_factorial(const BigComplex& z, int count);

// Monic node polynomial prod_k (z - z_k).
BigComplex node_polynomial(const BigComplex& z, std::span<const BigReal> nodes);

// Rational basis functions of the classic interpolating gamma series:
// H_0 = 1, H_n(z) = (z-1)...(z-n) / (z (z+1) ... (z+n-1)).  Computed from
// the product form; poles at z = 0, -1, ..., -(n-1), zeros at z = 1..n.
BigComplex lanczos_rational(int n, const BigComplex& z);

// First `count` coefficients a_0..a_{count-1} of the Stirling series
//   Gamma(w) ~ w^{w-1/2} e^{-w} (a_0 + a_1/w + a_2/w^2 + ...),
// obtained by exact rational exponentiation of the Bernoulli log series and
// rounded to the context only at the end.  a_0 = sqrt(2 pi).
std::vector<BigReal> stirling_series_coeffs(int count, PrecisionContext ctx);

}  // namespace gammakit
