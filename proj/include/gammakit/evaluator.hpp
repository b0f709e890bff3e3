#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "gammakit/schemes.hpp"

namespace gammakit {

// Pole expansion downcast to native doubles for production evaluation.
// Immutable after construction; evaluation is reentrant and lock-free.
struct GammaApproximation {
    int n_poles = 0;
    double r = 0.0;
    double c_inf = 0.0;
    std::vector<double> c;

    static GammaApproximation from_expansion(const PoleExpansion& e);
};

// Evaluation hit a pole of gamma at z = -index; residue = (-1)^index / index!.
struct PoleHit {
    long index;
    double residue;
};

// |Gamma(z)| falls outside double range; log_gamma is still computable and
// carried here (imaginary part exp-faithful, not branch-continuous).
struct Overflow {
    std::complex<double> log_gamma;
};

using EvalOutcome = std::variant<std::complex<double>, PoleHit, Overflow>;

// Gamma_N(z) over the whole plane.  Right of Re(z) = 1/2 the log form
// exp(phi(z)) F_N(z) is used, phi(z) = (z - 1/2) log(z + r) - z - r; left of
// it the reflection formula, with sin(pi z) reduced about the nearest
// integer so accuracy survives next to the poles.
EvalOutcome evaluate(const GammaApproximation& g, std::complex<double> z);

// log Gamma_N(z) = phi(z) + log F_N(z), never exponentiated.
// Requires Re(z) >= 1/2; callers left of the seam must reflect themselves.
std::complex<double> evaluate_log(const GammaApproximation& g, std::complex<double> z);

// The same algorithm as evaluate, at extended precision.  Lets analysis
// separate method error from double rounding.  Throws pole_error at exact
// nonpositive integers.
BigComplex evaluate_extended(const PoleExpansion& e, const BigComplex& z, PrecisionContext ctx);

}  // namespace gammakit
