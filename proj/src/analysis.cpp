#include "gammakit/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace gammakit {

namespace {

void require_pole_distance(const BigComplex& z) {
    BigReal k = round_nearest(z.real());
    if (k.sign() > 0) return;
    BigReal d2 = (z.real() - k) * (z.real() - k) + z.imag() * z.imag();
    if (!(d2 > BigReal::from_string("1e-60", PrecisionContext{})))
        throw domain_error("relative_error: z is within 1e-30 of a gamma pole");
}

std::string expansion_label(const PoleExpansion& e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " N=%d r=%.8f", e.n_poles, e.r.to_double());
    return method_name(e.method) + buf;
}

}  // namespace

BigReal relative_error(const PoleExpansion& e, const BigComplex& z,
                       const ReferenceOracle& oracle, PrecisionContext ctx) {
    require_pole_distance(z);
    BigComplex approx = evaluate_extended(e, z, ctx);
    BigComplex exact = oracle.gamma(z);
    return abs(BigComplex(1L, ctx) - approx / exact);
}

SweepResult sweep(const PoleExpansion& e, SweepAxis axis, double lo, double hi, int count,
                  bool log_spacing, const ReferenceOracle& oracle, PrecisionContext ctx) {
    if (count < 2) throw argument_error("sweep: need at least 2 samples");
    if (!(lo < hi)) throw argument_error("sweep: requires lo < hi");
    if (log_spacing && !(lo > 0.0))
        throw argument_error("sweep: log spacing requires lo > 0");

    SweepResult result;
    result.axis = axis;
    result.expansion_label = expansion_label(e);
    result.samples.reserve(static_cast<size_t>(count));

    BigReal half = BigReal(1, ctx) / 2;
    for (int i = 0; i < count; ++i) {
        double t = static_cast<double>(i) / (count - 1);
        double coord = log_spacing ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
        BigReal c = BigReal::from_double(coord, ctx);
        BigComplex z = axis == SweepAxis::real_line ? BigComplex(c)
                                                    : BigComplex(half, c);
        result.samples.push_back({coord, relative_error(e, z, oracle, ctx).to_double()});
    }
    return result;
}

AsymptoticParams asymptotic_params(const PoleExpansion& e) {
    PrecisionContext ctx{50};
    BigReal root = sqrt_two_pi(ctx);
    BigReal sum(0, ctx);
    for (const BigReal& cn : e.c) sum += cn;

    AsymptoticParams out{BigReal(ctx), BigReal(ctx), BigReal(ctx)};
    out.plateau = 1 - e.c_inf / root;
    out.alpha = sum / e.c_inf;
    BigReal twelfth = BigReal(1, ctx) / 12;
    out.decay = (e.c_inf / root) * (twelfth + e.r * (e.r + 1) / 2 - out.alpha);
    return out;
}

BoundCheck spouge_bound_check(int N, const BigReal& r, std::span<const BigComplex> grid,
                              const ReferenceOracle& oracle, PrecisionContext ctx) {
    PoleExpansion e = spouge_coefficients(N, r, ctx);
    BigReal two_pi = pi(ctx) * 2;
    BigReal prefactor = sqrt(r + 1) / pow(two_pi, r + BigReal(3, ctx) / 2);

    BoundCheck out{true, std::numeric_limits<double>::infinity()};
    for (const BigComplex& z : grid) {
        if (!(z.real().sign() > 0))
            throw argument_error("spouge_bound_check: grid must lie in Re(z) > 0");
        BigReal err = relative_error(e, z, oracle, ctx);
        if (err.is_zero()) continue;
        BigReal bound = prefactor / (z.real() + r);
        double margin = (bound / err).to_double();
        if (margin < out.worst_margin) out.worst_margin = margin;
        if (!(bound >= err)) out.holds = false;
    }
    return out;
}

ErrorModelDiagnostic error_model_fit(const PoleExpansion& e, const NodeSet& nodes,
                                     const RTarget& target, std::span<const BigComplex> grid,
                                     const ReferenceOracle& oracle, PrecisionContext ctx) {
    ErrorModelDiagnostic out{BigReal(0, ctx), 0, 0};
    BigReal one(1, ctx);
    for (const BigComplex& z : grid) {
        bool touches_node = false;
        for (const BigReal& zk : nodes.points()) {
            BigReal d = abs(z - BigComplex(zk));
            if (!(d > BigReal::from_string("1e-12", ctx) * (1 + abs(zk)))) {
                touches_node = true;
                break;
            }
        }
        if (touches_node) {
            ++out.points_skipped;
            continue;
        }

        BigReal eps = relative_error(e, z, oracle, ctx);
        BigComplex factor = BigComplex(one) / z;
        if (!target.is_infinity())
            factor = factor - BigComplex(one) / BigComplex(target.zbar());
        BigReal denom = abs(factor) * abs(node_polynomial(z, nodes.points()));
        if (denom.is_zero()) {
            ++out.points_skipped;
            continue;
        }
        BigReal ratio = eps * abs(rising_factorial(z, e.n_poles)) / denom;
        if (ratio > out.sup_ratio) out.sup_ratio = ratio;
        ++out.points_used;
    }
    return out;
}

void write_csv(const SweepResult& result, std::ostream& out) {
    out << "coord,rel_err\n";
    char buf[64];
    for (const SweepSample& s : result.samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.5e\n", s.coord, s.rel_err);
        out << buf;
    }
}

}  // namespace gammakit
