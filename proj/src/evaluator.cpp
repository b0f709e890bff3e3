#include "gammakit/evaluator.hpp"

#include <cmath>

namespace gammakit {

namespace {

using cdouble = std::complex<double>;

// exp() leaves double range beyond this magnitude of Re(log Gamma).
constexpr double kExpLimit = 709.0;

bool exact_nonpositive_integer(cdouble z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

double residue_at(long m) {
    double fac = 1.0;
    for (long k = 2; k <= m; ++k) {
        fac *= static_cast<double>(k);
        if (std::isinf(fac)) break;  // residue underflows to zero
    }
    double res = 1.0 / fac;
    return m % 2 == 0 ? res : -res;
}

struct Core {
    cdouble phi;  // (z - 1/2) log(z + r) - z - r
    cdouble fn;   // c_inf + sum c_n / (z + n)
};

Core core(const GammaApproximation& g, cdouble z) {
    cdouble zr = z + g.r;
    Core out;
    out.phi = (z - 0.5) * std::log(zr) - zr;
    out.fn = g.c_inf;
    for (int n = 0; n < g.n_poles; ++n)
        out.fn += g.c[static_cast<size_t>(n)] / (z + static_cast<double>(n));
    return out;
}

// sin(pi z) via z = k + dz with k the nearest integer to Re(z):
// sin(pi z) = (-1)^k sin(pi dz).  Exact reduction; the naive product pi*z
// would lose all accuracy next to far-out integers.
cdouble sin_pi_value(cdouble z) {
    double k = std::round(z.real());
    cdouble dz(z.real() - k, z.imag());
    cdouble s = std::sin(cdouble(M_PI, 0.0) * dz);
    bool odd = std::fmod(std::fabs(k), 2.0) == 1.0;
    return odd ? -s : s;
}

// log(sin(pi z)) up to multiples of 2 pi i, stable for any |Im z|.
cdouble log_sin_pi(cdouble z) {
    double k = std::round(z.real());
    cdouble dz(z.real() - k, z.imag());
    cdouble w = cdouble(M_PI, 0.0) * dz;
    cdouble ls;
    if (std::fabs(dz.imag()) <= 20.0) {
        ls = std::log(std::sin(w));
    } else if (dz.imag() > 0.0) {
        // sin w ~ (i/2) e^{-iw}; the e^{+iw} half is below 1e-54 of it
        ls = cdouble(0.0, -1.0) * w + std::log(cdouble(0.0, 0.5));
    } else {
        ls = cdouble(0.0, 1.0) * w + std::log(cdouble(0.0, -0.5));
    }
    bool odd = std::fmod(std::fabs(k), 2.0) == 1.0;
    if (odd) ls += cdouble(0.0, M_PI);
    return ls;
}

}  // namespace

GammaApproximation GammaApproximation::from_expansion(const PoleExpansion& e) {
    e.validate();
    GammaApproximation g;
    g.n_poles = e.n_poles;
    g.r = e.r.to_double();
    g.c_inf = e.c_inf.to_double();
    g.c.reserve(e.c.size());
    for (const BigReal& cn : e.c) g.c.push_back(cn.to_double());
    if (!(g.c_inf > 0.0) || !std::isfinite(g.r))
        throw argument_error("GammaApproximation: expansion does not fit in doubles");
    for (double cn : g.c)
        if (!std::isfinite(cn))
            throw argument_error("GammaApproximation: coefficient not finite in double");
    return g;
}

EvalOutcome evaluate(const GammaApproximation& g, cdouble z) {
    if (exact_nonpositive_integer(z)) {
        if (z.real() < -9.0e18) return PoleHit{9000000000000000000L, 0.0};
        long m = static_cast<long>(-z.real());
        return PoleHit{m, residue_at(m)};
    }

    if (z.real() >= 0.5) {
        Core c = core(g, z);
        cdouble lg = c.phi + std::log(c.fn);
        if (std::fabs(lg.real()) > kExpLimit) return Overflow{lg};
        return std::exp(c.phi) * c.fn;
    }

    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)), Re(1 - z) >= 1/2.
    Core c = core(g, 1.0 - z);
    cdouble lgw = c.phi + std::log(c.fn);
    cdouble t = std::log(M_PI) - log_sin_pi(z) - lgw;
    if (std::fabs(t.real()) > kExpLimit) return Overflow{t};
    if (lgw.real() < kExpLimit && std::fabs(z.imag()) * M_PI < 700.0) {
        cdouble s = sin_pi_value(z);
        return M_PI / (s * (std::exp(c.phi) * c.fn));
    }
    return std::exp(t);  // pieces out of double range individually; combine in logs
}

std::complex<double> evaluate_log(const GammaApproximation& g, cdouble z) {
    if (!(z.real() >= 0.5))
        throw domain_error("evaluate_log: requires Re(z) >= 1/2; reflect explicitly below the seam");
    Core c = core(g, z);
    return c.phi + std::log(c.fn);
}

BigComplex evaluate_extended(const PoleExpansion& e, const BigComplex& z, PrecisionContext ctx) {
    e.validate();
    if (is_nonpositive_integer(z)) {
        long m = -z.real().to_long();
        throw pole_error(m, "evaluate_extended: gamma pole at z = -" + std::to_string(m));
    }

    BigReal half = BigReal(1, ctx) / 2;
    auto right = [&](const BigComplex& w) {
        BigComplex wr = w + BigComplex(e.r);
        BigComplex phi = (w - BigComplex(half)) * log(wr) - wr;
        BigComplex fn(e.c_inf);
        for (int n = 0; n < e.n_poles; ++n)
            fn = fn + BigComplex(e.c[static_cast<size_t>(n)]) / (w + n);
        return exp(phi) * fn;
    };

    if (z.real() >= half) return right(z);
    BigReal p = pi(ctx);
    return BigComplex(p) / (sin_pi(z) * right(1 - z));
}

}  // namespace gammakit
