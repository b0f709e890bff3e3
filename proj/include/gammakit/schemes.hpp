#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/kernels.hpp"

namespace gammakit {

enum class Method { spouge, lanczos, nodes, svd, chebyshev, geometric, stirling };

std::string method_name(Method m);
Method method_from_name(std::string_view name);

// Calibration target for the shift parameter r: either a finite extra
// interpolation point zbar, or infinity (which forces c_inf = sqrt(2 pi)).
class RTarget {
public:
    static RTarget finite(BigReal zbar);
    static RTarget infinity() { return RTarget(); }

    bool is_infinity() const noexcept { return !zbar_.has_value(); }
    const BigReal& zbar() const;

private:
    RTarget() = default;
    std::optional<BigReal> zbar_;
};

// Interpolation abscissae plus the generator that produced them.  Points are
// kept in generation order and must be pairwise distinct.
class NodeSet {
public:
    enum class Generator { integers, custom, chebyshev_mapped, geometric, least_squares_range };

    NodeSet(std::vector<BigReal> points, Generator generator);

    std::span<const BigReal> points() const noexcept { return points_; }
    Generator generator() const noexcept { return generator_; }
    size_t size() const noexcept { return points_.size(); }
    bool contains(const BigReal& x) const;

private:
    std::vector<BigReal> points_;
    Generator generator_;
};

NodeSet integer_nodes(int N);  // 1, 2, ..., N+1

// Chebyshev points mapped onto [1/2, inf):
//   z_k = ((3 + cos t_k) / (1 - cos t_k)) / 2,  t_k = (k - 1/2) pi / (N+1),
// for k = 1..N+1 (decreasing).
NodeSet chebyshev_mapped_nodes(int N, PrecisionContext ctx = {});

// Powers of two 2^(k-2), k = 1..N+1: 1/2, 1, 2, 4, ...
NodeSet geometric_nodes(int N, PrecisionContext ctx = {});

// The pole-expansion object:
//   Gamma(z) ~ (z+r)^(z-1/2) e^-(z+r) [c_inf + sum_{n=0}^{N-1} c_n/(z+n)].
// Coefficient indexing starts at 0 (c_0 pairs with the pole at z = 0); the
// serialized table labels are 1-based (c_1..c_N).
struct PoleExpansion {
    int n_poles = 0;  // N
    BigReal r;
    BigReal c_inf;
    std::vector<BigReal> c;  // c_0 .. c_{N-1}
    Method method = Method::lanczos;
    std::optional<NodeSet> nodes;
    std::optional<RTarget> r_target;  // nullopt: r was supplied explicitly

    void validate() const;  // r > N-1, matching sizes, finite values
};

// Residue closed form with c_inf pinned at sqrt(2 pi):
//   c_n = (-1)^n / n! * e^(r-n) (r-n)^(n+1/2),  requires r > N-1.
PoleExpansion spouge_coefficients(int N, const BigReal& r, PrecisionContext ctx);

// The linear system matching the expansion at the node set: row k is
// [1, 1/z_k, ..., 1/(z_k+N-1)] with right-hand side F(z_k; r).
struct InterpolationSystem {
    std::vector<std::vector<BigReal>> matrix;  // M x (N+1)
    std::vector<BigReal> rhs;
    int n_poles;
    BigReal r;
    NodeSet nodes;
};

InterpolationSystem build_interpolation_system(const NodeSet& nodes, const BigReal& r, int N,
                                               const ReferenceOracle& oracle);

// Square solve (M = N+1), Gaussian elimination at context precision.
PoleExpansion solve_square_system(const InterpolationSystem& sys, PrecisionContext ctx);

// Overdetermined fit at the integers 1..range_end, unweighted Householder
// least squares.  range_end defaults to 170, past which the samples overflow
// double anyway and add nothing.
PoleExpansion least_squares_fit(int range_end, int N, const BigReal& r,
                                const ReferenceOracle& oracle, PrecisionContext ctx);

// Transformed coefficients of the H_n-basis form of the interpolant:
//   b_0 = e^(r+1)/sqrt(r+1),
//   b_n = 2n sum_{k=0}^n (-1)^(n-k) (n+k-1)! / ((k!)^2 (n-k)!) F(k+1; r).
// Kept as an independent route for cross-checking the pole form.
struct LanczosChebCoefficients {
    std::vector<BigReal> b;  // b_0 .. b_N
    BigReal r;
};

LanczosChebCoefficients lanczos_b_coefficients(int N, const BigReal& r,
                                               const ReferenceOracle& oracle,
                                               PrecisionContext ctx);

// (z+r)^(z-1/2) e^-(z+r) [b_0 + sum_n b_n H_n(z)]
BigComplex eval_lanczos_b_form(const LanczosChebCoefficients& lc, const BigComplex& z);

// Partial-fraction form of the 9-term shifted Stirling series (N = 8, r = 8):
//   c_inf = a_0,  c_n = sum_p a_p (8-n)^(8-p) / prod_{m != n} (m - n).
PoleExpansion stirling_pole_expansion(PrecisionContext ctx);

// A coefficient path plus the data it needs.
struct SchemeSpec {
    Method method = Method::lanczos;
    std::optional<NodeSet> custom_nodes;  // required for Method::nodes
    int svd_range_end = 170;
};

// Nodes for the method, system assembly, solve: one call per candidate r.
PoleExpansion build_expansion(const SchemeSpec& scheme, int N, const BigReal& r,
                              const ReferenceOracle& oracle, PrecisionContext ctx);

// Like build_expansion but solves for r first and records the target.
PoleExpansion build_expansion_for_target(const SchemeSpec& scheme, int N, const RTarget& target,
                                         const ReferenceOracle& oracle, PrecisionContext ctx);

// r making the approximation exact at zbar: the residual
// Gamma_N(zbar; r)/Gamma(zbar) - 1 is bracketed over (max(N-1,0)+1e-6, N+4),
// the bracket doubling in width when no sign change is found, then refined
// until |residual| < 1e-12.
BigReal solve_r_finite(const SchemeSpec& scheme, int N, const BigReal& zbar,
                       const ReferenceOracle& oracle, PrecisionContext ctx);

// r solving c_inf(r) = sqrt(2 pi), same bracketing.  Rejects the Spouge
// scheme, where the condition holds identically.
BigReal solve_r_infinity(const SchemeSpec& scheme, int N, const ReferenceOracle& oracle,
                         PrecisionContext ctx);

}  // namespace gammakit
