#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>
#include <vector>

#include "doctest.h"
#include "gammakit/analysis.hpp"
#include "test_util.hpp"

using namespace gammakit;
using gammakit::testing::big;
using gammakit::testing::rel_diff;

namespace {

const PrecisionContext ctx{50};
const PrecisionContext actx{40};

const ReferenceOracle& oracle() {
    static ReferenceOracle o(30, 30, ctx);
    return o;
}

const PoleExpansion& lanczos_inf() {
    static PoleExpansion e = build_expansion_for_target(SchemeSpec{Method::lanczos, {}, 170}, 8,
                                                        RTarget::infinity(), oracle(), ctx);
    return e;
}

const PoleExpansion& lanczos_100() {
    static PoleExpansion e = build_expansion_for_target(
        SchemeSpec{Method::lanczos, {}, 170}, 8, RTarget::finite(BigReal(100, ctx)), oracle(), ctx);
    return e;
}

const PoleExpansion& spouge_100() {
    static PoleExpansion e = build_expansion_for_target(
        SchemeSpec{Method::spouge, {}, 170}, 8, RTarget::finite(BigReal(100, ctx)), oracle(), ctx);
    return e;
}

double max_err(const SweepResult& s) {
    double m = 0;
    for (const auto& p : s.samples) m = std::max(m, p.rel_err);
    return m;
}

}  // namespace

TEST_CASE("relative error basics") {
    // exact at interpolation nodes
    for (int k = 1; k <= 9; ++k)
        CHECK(relative_error(lanczos_inf(), BigComplex(k, ctx), oracle(), ctx).to_double() < 1e-35);
    // exact at the calibration point
    CHECK(relative_error(lanczos_100(), BigComplex(100, ctx), oracle(), ctx).to_double() < 1e-12);
    // frozen regression anchor at z = 1/2 (computed by this artifact)
    double v = relative_error(lanczos_inf(), BigComplex(big("0.5", 40)), oracle(), actx).to_double();
    CHECK(v > 1e-18 / 4);
    CHECK(v < 4 * 4.44e-18);
    // pole proximity guard
    CHECK_THROWS_AS(
        relative_error(lanczos_inf(), BigComplex(BigReal(-3, ctx) + big("1e-31")), oracle(), ctx),
        domain_error);
}

TEST_CASE("sweep mechanics and CSV format") {
    CHECK_THROWS_AS(sweep(lanczos_inf(), SweepAxis::real_line, 1, 9, 1, false, oracle(), actx),
                    argument_error);
    CHECK_THROWS_AS(sweep(lanczos_inf(), SweepAxis::real_line, 9, 1, 10, false, oracle(), actx),
                    argument_error);
    CHECK_THROWS_AS(sweep(lanczos_inf(), SweepAxis::real_line, 0, 9, 10, true, oracle(), actx),
                    argument_error);

    SweepResult s = sweep(lanczos_inf(), SweepAxis::real_line, 0.5, 20, 25, true, oracle(), actx);
    CHECK(s.samples.size() == 25);
    CHECK(s.samples.front().coord == 0.5);
    CHECK(s.samples.back().coord == doctest::Approx(20.0));
    for (size_t i = 1; i < s.samples.size(); ++i) {
        CHECK(s.samples[i].coord > s.samples[i - 1].coord);
        CHECK(s.samples[i].rel_err >= 0.0);
    }

    std::ostringstream out;
    write_csv(s, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "coord,rel_err");
    std::getline(in, line);
    // coordinate printed plain, error in scientific notation with 6 significant digits
    CHECK(line.substr(0, 4) == "0.5,");
    CHECK(line.find('e') != std::string::npos);
    CHECK(line.size() - line.find(',') == 1 + 11);  // ",d.ddddde-xx"
    CHECK(std::stod(line.substr(4)) == doctest::Approx(4.4364e-18).epsilon(0.02));
}

TEST_CASE("sweep shapes from the figures") {
    // the closed-pole scheme: error humps near z ~ 10, vanishes at the
    // calibration point, then decays slowly (1/z, the bound's rate)
    SweepResult sp = sweep(spouge_100(), SweepAxis::real_line, 1, 1e4, 160, true, oracle(), actx);
    double hump = 0, at_edge = sp.samples.back().rel_err;
    for (const auto& s : sp.samples)
        if (s.coord <= 100.0) hump = std::max(hump, s.rel_err);
    CHECK(hump > 50.0 * at_edge);
    CHECK(relative_error(spouge_100(), BigComplex(100, actx), oracle(), actx).to_double() < 1e-12);
    BigReal t3 = relative_error(spouge_100(), BigComplex(1000, actx), oracle(), actx);
    BigReal t4 = relative_error(spouge_100(), BigComplex(10000, actx), oracle(), actx);
    CHECK((t3 * 1000 / (t4 * 10000)).to_double() == doctest::Approx(1.0).epsilon(0.15));

    // interpolation dips at the integer nodes
    SweepResult sl = sweep(lanczos_100(), SweepAxis::real_line, 1, 9, 401, false, oracle(), actx);
    for (int k = 1; k <= 9; ++k) {
        const SweepSample& at_node = sl.samples[static_cast<size_t>((k - 1) * 50)];
        CHECK(at_node.coord == doctest::Approx(static_cast<double>(k)));
        CHECK(at_node.rel_err < 1e-13);
    }

    // critical-line maximum dominates the real-line maximum
    SweepResult sr = sweep(lanczos_inf(), SweepAxis::real_line, 0.5, 100, 120, true, oracle(), actx);
    SweepResult sc = sweep(lanczos_inf(), SweepAxis::critical_line, 0, 100, 120, false, oracle(), actx);
    CHECK(max_err(sc) >= max_err(sr));
}

TEST_CASE("asymptotic parameters") {
    AsymptoticParams sp = asymptotic_params(spouge_100());
    CHECK(sp.plateau.is_zero());  // c_inf is sqrt(2 pi) by construction

    // finite calibration: plateau shows up as the error at large x
    AsymptoticParams lp = asymptotic_params(lanczos_100());
    CHECK(!lp.plateau.is_zero());
    BigReal err6 = relative_error(lanczos_100(), BigComplex(1000000, actx), oracle(), actx);
    CHECK(rel_diff(err6, abs(lp.plateau)) < 0.05);

    // infinity calibration: plateau vanishes and x * err approaches |D|
    AsymptoticParams li = asymptotic_params(lanczos_inf());
    CHECK(abs(li.plateau).to_double() < 1e-12);
    for (long x : {10000L, 100000L, 1000000L}) {
        BigReal err = relative_error(lanczos_inf(), BigComplex(x, actx), oracle(), actx);
        CHECK(rel_diff(err * BigReal(x, actx), abs(li.decay)) < 0.10);
    }

    // the truncated Stirling form matches the scaled gamma through 1/z^8,
    // so its decay constant cancels exactly
    AsymptoticParams st = asymptotic_params(stirling_pole_expansion(ctx));
    CHECK(abs(st.decay).to_double() < 1e-40);
    CHECK(abs(st.plateau).to_double() < 1e-45);
}

TEST_CASE("stirling comparator decays at least like x^-7") {
    PoleExpansion st = stirling_pole_expansion(ctx);
    BigReal e2 = relative_error(st, BigComplex(100, ctx), oracle(), ctx);
    BigReal e4 = relative_error(st, BigComplex(10000, ctx), oracle(), ctx);
    CHECK((e4 / e2).to_double() < 1e-14);
}

TEST_CASE("error shrinks geometrically in N") {
    SchemeSpec lanczos{Method::lanczos, {}, 170};
    double prev = 0;
    for (int N = 4; N <= 10; ++N) {
        PoleExpansion e = build_expansion_for_target(lanczos, N, RTarget::finite(BigReal(100, ctx)),
                                                     oracle(), ctx);
        double m = max_err(sweep(e, SweepAxis::real_line, 1, 20, 150, true, oracle(), actx));
        if (N > 4) CHECK(m * 2.0 <= prev);
        prev = m;
    }
}

TEST_CASE("spouge bound holds with margin") {
    std::vector<BigComplex> grid;
    for (int i = 0; i < 60; ++i) {
        double x = 0.5 + 99.5 * i / 59.0;
        double y = (i % 6) * 18.0;
        grid.push_back(BigComplex::from_doubles({x, y}, actx));
    }
    BigReal r8 = spouge_100().r;
    BoundCheck b8 = spouge_bound_check(8, r8, grid, oracle(), actx);
    CHECK(b8.holds);
    CHECK(b8.worst_margin > 1.0);

    std::vector<BigComplex> bad{BigComplex(-1, ctx)};
    CHECK_THROWS_AS(spouge_bound_check(8, r8, bad, oracle(), actx), argument_error);
}

TEST_CASE("interpolation error model diagnostic") {
    const NodeSet& nodes = *lanczos_inf().nodes;
    std::vector<BigComplex> grid;
    for (int i = 0; i < 160; ++i) {
        double x = 0.5 * std::pow(1000.0, i / 159.0);
        grid.push_back(BigComplex(BigReal::from_double(x, actx)));
    }
    ErrorModelDiagnostic d = error_model_fit(lanczos_inf(), nodes, RTarget::infinity(), grid,
                                             oracle(), actx);
    CHECK(d.points_used > 150);
    CHECK(d.sup_ratio.is_finite());
    CHECK(d.sup_ratio.sign() > 0);

    // doubling the grid density barely moves the supremum
    std::vector<BigComplex> dense;
    for (int i = 0; i < 320; ++i) {
        double x = 0.5 * std::pow(1000.0, i / 319.0);
        dense.push_back(BigComplex(BigReal::from_double(x, actx)));
    }
    ErrorModelDiagnostic d2 = error_model_fit(lanczos_inf(), nodes, RTarget::infinity(), dense,
                                              oracle(), actx);
    CHECK(rel_diff(d2.sup_ratio, d.sup_ratio) < 0.10);

    // both eps and psi vanish to first order at a node: the ratio stays put
    std::vector<BigComplex> g1{BigComplex(BigReal(4, actx) + big("1e-6", 40))};
    std::vector<BigComplex> g2{BigComplex(BigReal(4, actx) + big("1e-3", 40))};
    BigReal r1 = error_model_fit(lanczos_inf(), nodes, RTarget::infinity(), g1, oracle(), actx).sup_ratio;
    BigReal r2 = error_model_fit(lanczos_inf(), nodes, RTarget::infinity(), g2, oracle(), actx).sup_ratio;
    CHECK((r1 / r2).to_double() > 0.5);
    CHECK((r1 / r2).to_double() < 2.0);

    // grid points touching a node are skipped and counted
    std::vector<BigComplex> touching{BigComplex(4, actx), BigComplex(big("7.25", 40))};
    ErrorModelDiagnostic dt = error_model_fit(lanczos_inf(), nodes, RTarget::infinity(), touching,
                                              oracle(), actx);
    CHECK(dt.points_skipped == 1);
    CHECK(dt.points_used == 1);
}

TEST_CASE("headline comparison: geometric nodes vs integer nodes") {
    PoleExpansion geo = build_expansion_for_target(SchemeSpec{Method::geometric, {}, 170}, 8,
                                                   RTarget::infinity(), oracle(), ctx);
    double m_lan = max_err(sweep(lanczos_inf(), SweepAxis::real_line, 0.5, 1e3, 300, true, oracle(), actx));
    double m_geo = max_err(sweep(geo, SweepAxis::real_line, 0.5, 1e3, 300, true, oracle(), actx));
    CHECK(m_lan >= 100.0 * m_geo);
}
