#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gammakit/evaluator.hpp"

namespace gammakit {

enum class SweepAxis { real_line, critical_line };  // z = x, or z = 1/2 + iy

struct SweepSample {
    double coord;
    double rel_err;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::real_line;
    std::vector<SweepSample> samples;  // coordinates strictly increasing
    std::string expansion_label;
};

// |1 - Gamma_N(z)/Gamma_ref(z)| at context precision.  z must keep a
// distance of more than 1e-30 from every nonpositive integer.
BigReal relative_error(const PoleExpansion& e, const BigComplex& z,
                       const ReferenceOracle& oracle, PrecisionContext ctx);

// count samples over [lo, hi] on the chosen axis, log- or linearly spaced.
SweepResult sweep(const PoleExpansion& e, SweepAxis axis, double lo, double hi, int count,
                  bool log_spacing, const ReferenceOracle& oracle, PrecisionContext ctx);

// Large-|z| behavior of the relative error, 1 - Gamma_N/Gamma ~ plateau + D/z:
//   plateau = 1 - c_inf/sqrt(2 pi)
//   alpha   = (sum c_n)/c_inf
//   decay D = (c_inf/sqrt(2 pi)) (1/12 + r(r+1)/2 - alpha)
// The 1/z coefficient of the scaled gamma's own expansion is
// 1/12 + r(r+1)/2, so D vanishes exactly for the truncated Stirling form.
struct AsymptoticParams {
    BigReal plateau;
    BigReal alpha;
    BigReal decay;
};

AsymptoticParams asymptotic_params(const PoleExpansion& e);

// Checks |1 - Gamma_S/Gamma| <= sqrt(r+1) / (2 pi)^(r+3/2) / Re(z+r) on the
// grid; worst_margin is the minimum of bound/error.
struct BoundCheck {
    bool holds;
    double worst_margin;
};

BoundCheck spouge_bound_check(int N, const BigReal& r, std::span<const BigComplex> grid,
                              const ReferenceOracle& oracle, PrecisionContext ctx);

// Empirical constant of the interpolation error model: the supremum of
//   |eps(z)| |phi(z)| / (|1/z - 1/zbar| |psi(z)|)
// over the grid, with phi the rising product over the poles and psi the node
// polynomial.  Grid points touching a node (0/0) are skipped and counted.
struct ErrorModelDiagnostic {
    BigReal sup_ratio;
    size_t points_used;
    size_t points_skipped;
};

ErrorModelDiagnostic error_model_fit(const PoleExpansion& e, const NodeSet& nodes,
                                     const RTarget& target, std::span<const BigComplex> grid,
                                     const ReferenceOracle& oracle, PrecisionContext ctx);

// CSV: header "coord,rel_err", coordinates %.17g, errors %.5e.
void write_csv(const SweepResult& result, std::ostream& out);

}  // namespace gammakit
