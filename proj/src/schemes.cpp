#include "gammakit/schemes.hpp"

#include <algorithm>
#include <functional>

#include "gammakit/bernoulli.hpp"
#include "gammakit/linalg.hpp"

namespace gammakit {

namespace {

void require_coefficient_context(PrecisionContext ctx) {
    if (ctx.digits < 30)
        throw argument_error("coefficient generation requires a context of at least 30 digits");
}

BigReal half_at(PrecisionContext ctx) { return BigReal(1, ctx) / 2; }

// Gamma_N(x; r) for real x with x > 0 and x + r > 0; all-real arithmetic.
BigReal eval_expansion_real(const PoleExpansion& e, const BigReal& x, PrecisionContext ctx) {
    BigReal xr = x + e.r;
    BigReal phi = (x - half_at(ctx)) * log(xr) - xr;
    BigReal fn = e.c_inf;
    for (int n = 0; n < e.n_poles; ++n) fn += e.c[static_cast<size_t>(n)] / (x + n);
    return exp(phi) * fn;
}

std::optional<NodeSet> nodes_for(const SchemeSpec& scheme, int N, PrecisionContext ctx) {
    switch (scheme.method) {
        case Method::lanczos:
            return integer_nodes(N);
        case Method::nodes:
            if (!scheme.custom_nodes)
                throw argument_error("scheme 'nodes' requires an explicit node list");
            return scheme.custom_nodes;
        case Method::chebyshev:
            return chebyshev_mapped_nodes(N, ctx);
        case Method::geometric:
            return geometric_nodes(N, ctx);
        case Method::svd: {
            std::vector<BigReal> pts;
            pts.reserve(static_cast<size_t>(scheme.svd_range_end));
            for (int k = 1; k <= scheme.svd_range_end; ++k) pts.emplace_back(k, ctx);
            return NodeSet(std::move(pts), NodeSet::Generator::least_squares_range);
        }
        case Method::spouge:
        case Method::stirling:
            return std::nullopt;
    }
    throw argument_error("unknown method");
}

Method method_for_generator(NodeSet::Generator g) {
    switch (g) {
        case NodeSet::Generator::integers: return Method::lanczos;
        case NodeSet::Generator::custom: return Method::nodes;
        case NodeSet::Generator::chebyshev_mapped: return Method::chebyshev;
        case NodeSet::Generator::geometric: return Method::geometric;
        case NodeSet::Generator::least_squares_range: return Method::svd;
    }
    throw argument_error("unknown node generator");
}

// Illinois regula falsi inside a sign-change bracket.
BigReal refine_root(const std::function<BigReal(const BigReal&)>& f, BigReal a, BigReal fa,
                    BigReal b, BigReal fb, const BigReal& f_tol, const BigReal& x_tol,
                    const char* what) {
    int side = 0;
    for (int iter = 0; iter < 300; ++iter) {
        BigReal x = (a * fb - b * fa) / (fb - fa);
        if (!(x > a && x < b)) x = (a + b) / 2;
        BigReal fx = f(x);
        if (fx.is_zero()) return x;
        if (abs(fx) < f_tol && (b - a) < x_tol) return x;
        if (fx.sign() == fa.sign()) {
            a = x;
            fa = fx;
            if (side == -1) fb = fb / 2;
            side = -1;
        } else {
            b = x;
            fb = fx;
            if (side == 1) fa = fa / 2;
            side = 1;
        }
    }
    throw no_root_error(std::string(what) + ": refinement did not converge");
}

// The calibration residual oscillates in r, so the bracket usually holds
// several sign changes; the tabulated parameters correspond to the largest
// root of the main ladder.  The decaying envelope can also graze zero, which
// shows up as a pair of crossings only a few hundredths apart; those dips
// are not calibration roots.  Genuine adjacent ladder roots stay >= ~0.18
// apart for N <= 10 while grazing pairs sit under ~0.04, so a root is
// accepted only if the residual still has opposite signs 0.06 to either
// side of it.  The scan walks from the top of the bracket down and returns
// the first accepted root.  The lower bracket edge is pinned (r must stay
// above N-1); only the top expands when no sign change is found at all.
BigReal find_calibration_root(const std::function<BigReal(const BigReal&)>& f, BigReal lo,
                              BigReal hi, const BigReal& f_tol, const BigReal& x_tol,
                              const char* what) {
    constexpr int kScanPoints = 160;
    constexpr int kMaxExpansions = 10;
    const BigReal wing = BigReal(6) / 100;

    for (int attempt = 0; attempt <= kMaxExpansions; ++attempt) {
        BigReal step = (hi - lo) / kScanPoints;
        bool saw_crossing = false;
        BigReal b = hi;
        BigReal fb = f(b);
        for (int i = kScanPoints - 1; i >= 0; --i) {
            BigReal a = (i == 0) ? lo : lo + step * i;
            BigReal fa = f(a);
            if (fb.is_zero() || (!fa.is_zero() && fa.sign() != fb.sign())) {
                saw_crossing = true;
                BigReal root = fb.is_zero()
                                   ? b
                                   : refine_root(f, a, fa, b, fb, f_tol, x_tol, what);
                BigReal left = max(root - wing, lo);
                BigReal right = min(root + wing, hi);
                if (f(left).sign() != f(right).sign()) return root;
            }
            b = a;
            fb = fa;
        }
        if (!saw_crossing) {
            hi = lo + (hi - lo) * 2;
            continue;
        }
        throw no_root_error(std::string(what) +
                            ": only grazing sign changes found in the bracket");
    }
    throw no_root_error(std::string(what) + ": no sign change after expanding the bracket");
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::spouge: return "spouge";
        case Method::lanczos: return "lanczos";
        case Method::nodes: return "nodes";
        case Method::svd: return "svd";
        case Method::chebyshev: return "chebyshev";
        case Method::geometric: return "geometric";
        case Method::stirling: return "stirling";
    }
    throw argument_error("unknown method");
}

Method method_from_name(std::string_view name) {
    for (Method m : {Method::spouge, Method::lanczos, Method::nodes, Method::svd,
                     Method::chebyshev, Method::geometric, Method::stirling})
        if (method_name(m) == name) return m;
    throw argument_error("unknown method '" + std::string(name) + "'");
}

RTarget RTarget::finite(BigReal zbar) {
    if (!zbar.is_finite() || !(zbar > 0))
        throw argument_error("RTarget: zbar must be a positive finite real");
    RTarget t;
    t.zbar_ = std::move(zbar);
    return t;
}

const BigReal& RTarget::zbar() const {
    if (is_infinity()) throw argument_error("RTarget: no zbar on an infinity target");
    return *zbar_;
}

NodeSet::NodeSet(std::vector<BigReal> points, Generator generator)
    : points_(std::move(points)), generator_(generator) {
    if (points_.empty()) throw argument_error("NodeSet: empty point list");
    for (const auto& p : points_)
        if (!p.is_finite()) throw argument_error("NodeSet: nodes must be finite");
    for (size_t i = 0; i < points_.size(); ++i)
        for (size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j])
                throw argument_error("NodeSet: nodes must be pairwise distinct");
}

bool NodeSet::contains(const BigReal& x) const {
    for (const auto& p : points_)
        if (p == x) return true;
    return false;
}

NodeSet integer_nodes(int N) {
    if (N < 1) throw argument_error("integer_nodes: N must be >= 1");
    std::vector<BigReal> pts;
    pts.reserve(static_cast<size_t>(N) + 1);
    for (int k = 1; k <= N + 1; ++k) pts.emplace_back(k);
    return {std::move(pts), NodeSet::Generator::integers};
}

NodeSet chebyshev_mapped_nodes(int N, PrecisionContext ctx) {
    if (N < 1) throw argument_error("chebyshev_mapped_nodes: N must be >= 1");
    std::vector<BigReal> pts;
    pts.reserve(static_cast<size_t>(N) + 1);
    BigReal p = pi(ctx);
    for (int k = 1; k <= N + 1; ++k) {
        BigReal angle = p * (2 * k - 1) / (2 * (N + 1));
        BigReal c = cos(angle);
        pts.push_back(((c + 3) / (1 - c)) / 2);
    }
    return {std::move(pts), NodeSet::Generator::chebyshev_mapped};
}

NodeSet geometric_nodes(int N, PrecisionContext ctx) {
    if (N < 1) throw argument_error("geometric_nodes: N must be >= 1");
    std::vector<BigReal> pts;
    pts.reserve(static_cast<size_t>(N) + 1);
    for (int k = 1; k <= N + 1; ++k) pts.push_back(exp2_int(k - 2, ctx));
    return {std::move(pts), NodeSet::Generator::geometric};
}

void PoleExpansion::validate() const {
    if (n_poles < 1) throw argument_error("PoleExpansion: N must be >= 1");
    if (c.size() != static_cast<size_t>(n_poles))
        throw argument_error("PoleExpansion: coefficient count must equal N");
    if (!(r > BigReal(n_poles - 1)))
        throw argument_error("PoleExpansion: requires r > N - 1");
    if (!c_inf.is_finite()) throw argument_error("PoleExpansion: c_inf must be finite");
    for (const auto& cn : c)
        if (!cn.is_finite()) throw argument_error("PoleExpansion: coefficients must be finite");
}

PoleExpansion spouge_coefficients(int N, const BigReal& r, PrecisionContext ctx) {
    require_coefficient_context(ctx);
    if (N < 1) throw argument_error("spouge_coefficients: N must be >= 1");
    if (!(r > BigReal(N - 1, ctx)))
        throw argument_error("spouge_coefficients: requires r > N - 1");

    PoleExpansion e;
    e.n_poles = N;
    e.r = r;
    e.c_inf = sqrt_two_pi(ctx);
    e.method = Method::spouge;
    BigReal half = half_at(ctx);
    e.c.reserve(static_cast<size_t>(N));
    for (int n = 0; n < N; ++n) {
        BigReal rn = r - n;
        BigReal cn = exp(rn) * pow(rn, BigReal(n, ctx) + half) / factorial(static_cast<unsigned long>(n), ctx);
        e.c.push_back(n % 2 == 0 ? cn : -cn);
    }
    e.validate();
    return e;
}

InterpolationSystem build_interpolation_system(const NodeSet& nodes, const BigReal& r, int N,
                                               const ReferenceOracle& oracle) {
    if (N < 1) throw argument_error("build_interpolation_system: N must be >= 1");
    if (nodes.size() < static_cast<size_t>(N) + 1)
        throw argument_error("build_interpolation_system: need at least N + 1 nodes");

    InterpolationSystem sys{{}, {}, N, r, nodes};
    sys.matrix.reserve(nodes.size());
    sys.rhs.reserve(nodes.size());
    for (const BigReal& zk : nodes.points()) {
        if (zk.is_integer() && zk.sign() <= 0)
            throw argument_error("build_interpolation_system: node collides with a gamma pole");
        if (!(zk + r > 0))
            throw argument_error("build_interpolation_system: node violates z_k + r > 0");
        std::vector<BigReal> row;
        row.reserve(static_cast<size_t>(N) + 1);
        row.emplace_back(1);
        for (int n = 0; n < N; ++n) row.push_back(1 / (zk + n));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(scaled_gamma(BigComplex(zk), r, oracle).real());
    }
    return sys;
}

PoleExpansion solve_square_system(const InterpolationSystem& sys, PrecisionContext ctx) {
    require_coefficient_context(ctx);
    if (sys.matrix.size() != static_cast<size_t>(sys.n_poles) + 1)
        throw argument_error("solve_square_system: system is not square (M must be N + 1)");

    std::vector<BigReal> x = linalg::solve_dense(sys.matrix, sys.rhs, ctx);
    PoleExpansion e;
    e.n_poles = sys.n_poles;
    e.r = sys.r;
    e.c_inf = x.front();
    e.c.assign(x.begin() + 1, x.end());
    e.method = method_for_generator(sys.nodes.generator());
    e.nodes = sys.nodes;
    e.validate();
    return e;
}

PoleExpansion least_squares_fit(int range_end, int N, const BigReal& r,
                                const ReferenceOracle& oracle, PrecisionContext ctx) {
    require_coefficient_context(ctx);
    if (N < 1) throw argument_error("least_squares_fit: N must be >= 1");
    if (range_end < N + 2)
        throw argument_error("least_squares_fit: range_end must be >= N + 2");

    std::vector<BigReal> pts;
    pts.reserve(static_cast<size_t>(range_end));
    for (int k = 1; k <= range_end; ++k) pts.emplace_back(k, ctx);
    NodeSet nodes(std::move(pts), NodeSet::Generator::least_squares_range);

    InterpolationSystem sys = build_interpolation_system(nodes, r, N, oracle);
    std::vector<BigReal> x = linalg::solve_least_squares(sys.matrix, sys.rhs, ctx);

    PoleExpansion e;
    e.n_poles = N;
    e.r = r;
    e.c_inf = x.front();
    e.c.assign(x.begin() + 1, x.end());
    e.method = Method::svd;
    e.nodes = std::move(nodes);
    e.validate();
    return e;
}

LanczosChebCoefficients lanczos_b_coefficients(int N, const BigReal& r,
                                               const ReferenceOracle& oracle,
                                               PrecisionContext ctx) {
    require_coefficient_context(ctx);
    if (N < 1) throw argument_error("lanczos_b_coefficients: N must be >= 1");
    if (!(r > -1)) throw argument_error("lanczos_b_coefficients: requires r > -1");

    std::vector<BigReal> f_values;  // F(1; r) .. F(N+1; r)
    f_values.reserve(static_cast<size_t>(N) + 1);
    for (int j = 1; j <= N + 1; ++j)
        f_values.push_back(scaled_gamma(BigComplex(static_cast<long>(j), ctx), r, oracle).real());

    LanczosChebCoefficients lc;
    lc.r = r;
    lc.b.reserve(static_cast<size_t>(N) + 1);
    lc.b.push_back(exp(r + 1) / sqrt(r + 1));
    mpz_class fac_n, fac_k, fac_nk;
    for (int n = 1; n <= N; ++n) {
        BigReal acc(0, ctx);
        for (int k = 0; k <= n; ++k) {
            mpz_fac_ui(fac_n.get_mpz_t(), static_cast<unsigned long>(n + k - 1));
            mpz_fac_ui(fac_k.get_mpz_t(), static_cast<unsigned long>(k));
            mpz_fac_ui(fac_nk.get_mpz_t(), static_cast<unsigned long>(n - k));
            mpq_class weight(fac_n, fac_k * fac_k * fac_nk);
            weight.canonicalize();
            BigReal term = to_bigreal(weight, ctx) * f_values[static_cast<size_t>(k)];
            acc += (n - k) % 2 == 0 ? term : -term;
        }
        lc.b.push_back(acc * (2 * n));
    }
    return lc;
}

BigComplex eval_lanczos_b_form(const LanczosChebCoefficients& lc, const BigComplex& z) {
    const int N = static_cast<int>(lc.b.size()) - 1;
    BigComplex bracket(lc.b.front());
    for (int n = 1; n <= N; ++n)
        bracket = bracket + BigComplex(lc.b[static_cast<size_t>(n)]) * lanczos_rational(n, z);
    BigReal half = BigReal(1, PrecisionContext{}) / 2;
    BigComplex zr = z + BigComplex(lc.r);
    return exp((z - BigComplex(half)) * log(zr) - zr) * bracket;
}

PoleExpansion stirling_pole_expansion(PrecisionContext ctx) {
    require_coefficient_context(ctx);
    constexpr int N = 8;
    std::vector<BigReal> a = stirling_series_coeffs(N + 1, ctx);

    PoleExpansion e;
    e.n_poles = N;
    e.r = BigReal(N, ctx);
    e.c_inf = a.front();
    e.method = Method::stirling;
    e.c.reserve(N);
    for (int n = 0; n < N; ++n) {
        // numerator sum_p a_p (8-n)^(8-p); denominator prod_{m != n} (m-n)
        BigReal num(0, ctx);
        for (int p = 0; p <= N; ++p)
            num += a[static_cast<size_t>(p)] * pow(BigReal(N - n, ctx), static_cast<long>(N - p));
        BigReal den = factorial(static_cast<unsigned long>(n), ctx) *
                      factorial(static_cast<unsigned long>(N - 1 - n), ctx);
        BigReal cn = num / den;
        e.c.push_back(n % 2 == 0 ? cn : -cn);
    }
    e.validate();
    return e;
}

PoleExpansion build_expansion(const SchemeSpec& scheme, int N, const BigReal& r,
                              const ReferenceOracle& oracle, PrecisionContext ctx) {
    switch (scheme.method) {
        case Method::spouge:
            return spouge_coefficients(N, r, ctx);
        case Method::stirling:
            if (N != 8 || !(r == BigReal(8)))
                throw argument_error("the stirling scheme is fixed at N = 8, r = 8");
            return stirling_pole_expansion(ctx);
        case Method::svd:
            return least_squares_fit(scheme.svd_range_end, N, r, oracle, ctx);
        case Method::lanczos:
        case Method::nodes:
        case Method::chebyshev:
        case Method::geometric: {
            std::optional<NodeSet> nodes = nodes_for(scheme, N, ctx);
            if (scheme.method == Method::nodes && nodes->size() != static_cast<size_t>(N) + 1)
                throw argument_error("custom node list must have exactly N + 1 points");
            return solve_square_system(build_interpolation_system(*nodes, r, N, oracle), ctx);
        }
    }
    throw argument_error("unknown method");
}

PoleExpansion build_expansion_for_target(const SchemeSpec& scheme, int N, const RTarget& target,
                                         const ReferenceOracle& oracle, PrecisionContext ctx) {
    BigReal r = target.is_infinity() ? solve_r_infinity(scheme, N, oracle, ctx)
                                     : solve_r_finite(scheme, N, target.zbar(), oracle, ctx);
    PoleExpansion e = build_expansion(scheme, N, r, oracle, ctx);
    e.r_target = target;
    return e;
}

BigReal solve_r_finite(const SchemeSpec& scheme, int N, const BigReal& zbar,
                       const ReferenceOracle& oracle, PrecisionContext ctx) {
    require_coefficient_context(ctx);
    if (scheme.method == Method::stirling)
        throw unsupported_error("solve_r_finite: the stirling scheme has a fixed r");
    if (!(zbar > 0)) throw argument_error("solve_r_finite: zbar must be positive");
    if (auto nodes = nodes_for(scheme, N, ctx); nodes && nodes->contains(zbar))
        throw argument_error("solve_r_finite: zbar coincides with an interpolation node");

    BigReal gamma_ref = exp(oracle.log_gamma(BigComplex(zbar)).real());
    auto residual = [&](const BigReal& r) {
        PoleExpansion e = build_expansion(scheme, N, r, oracle, ctx);
        return eval_expansion_real(e, zbar, ctx) / gamma_ref - 1;
    };

    BigReal lo = BigReal(std::max(N - 1, 0), ctx) + BigReal::from_string("1e-6", ctx);
    BigReal hi(N + 4, ctx);
    BigReal f_tol = BigReal::from_string("1e-12", ctx);
    BigReal x_tol = BigReal::from_string("1e-13", ctx);
    return find_calibration_root(residual, lo, hi, f_tol, x_tol, "solve_r_finite");
}

BigReal solve_r_infinity(const SchemeSpec& scheme, int N, const ReferenceOracle& oracle,
                         PrecisionContext ctx) {
    require_coefficient_context(ctx);
    if (scheme.method == Method::spouge)
        throw unsupported_error(
            "solve_r_infinity: c_inf = sqrt(2 pi) holds identically for the Spouge scheme");
    if (scheme.method == Method::stirling)
        throw unsupported_error("solve_r_infinity: the stirling scheme has a fixed r");

    BigReal root_two_pi = sqrt_two_pi(ctx);
    auto residual = [&](const BigReal& r) {
        return build_expansion(scheme, N, r, oracle, ctx).c_inf / root_two_pi - 1;
    };

    BigReal lo = BigReal(std::max(N - 1, 0), ctx) + BigReal::from_string("1e-6", ctx);
    BigReal hi(N + 4, ctx);
    BigReal f_tol = BigReal::from_string("1e-12", ctx);
    BigReal x_tol = BigReal::from_string("1e-13", ctx);
    return find_calibration_root(residual, lo, hi, f_tol, x_tol, "solve_r_infinity");
}

}  // namespace gammakit
