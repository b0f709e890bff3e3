#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "gammakit/bernoulli.hpp"
#include "gammakit/bigcomplex.hpp"
#include "test_util.hpp"

using namespace gammakit;
using gammakit::testing::big;
using gammakit::testing::rel_diff;

TEST_CASE("context validation") {
    CHECK_THROWS_AS(PrecisionContext{0}, argument_error);
    CHECK_THROWS_AS(PrecisionContext{-3}, argument_error);
    CHECK(PrecisionContext{}.digits == 50);
}

TEST_CASE("exact integers and string round trip") {
    PrecisionContext ctx{50};
    BigReal x(123456789, ctx);
    CHECK(x.to_long() == 123456789);
    CHECK(x.is_integer());
    BigReal y = BigReal::from_string("1234567890123456789012345678901234567890", ctx);
    CHECK(rel_diff(y, BigReal::from_string(y.str(45), ctx)) < 1e-44);
    CHECK_THROWS_AS(BigReal::from_string("not-a-number", ctx), argument_error);
}

TEST_CASE("comparisons are total on non-NaN values") {
    PrecisionContext ctx{40};
    BigReal a(-2, ctx), b(0, ctx), c(7, ctx);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a < c);
    CHECK(c > a);
    CHECK(a == a);
    CHECK(a != b);
    CHECK(BigReal(ctx).is_nan());
}

TEST_CASE("complex_pow examples") {
    PrecisionContext ctx{50};
    // (4,0)^(0.5,0) = 2
    BigComplex root = pow(BigComplex(4, ctx), BigComplex(big("0.5")));
    CHECK(rel_diff(root.real(), BigReal(2, ctx)) < 1e-48);
    CHECK(root.imag().is_zero());

    // (e,0)^(0,pi) = -1
    BigComplex e(exp(BigReal(1, ctx)));
    BigComplex euler = pow(e, BigComplex(BigReal(0, ctx), pi(ctx)));
    CHECK(abs(euler - BigComplex(-1, ctx)).to_double() < 1e-48);

    // (2,0)^(10,0) = 1024 exactly at 50 digits
    BigComplex p = pow(BigComplex(2, ctx), BigComplex(10, ctx));
    CHECK(p.real() == BigReal(1024, ctx));
    CHECK(p.imag().is_zero());
}

TEST_CASE("complex_pow domain errors") {
    PrecisionContext ctx{50};
    CHECK_THROWS_AS(pow(BigComplex(0, ctx), BigComplex(-1, ctx)), domain_error);
    CHECK_THROWS_AS(pow(BigComplex(0, ctx), BigComplex(BigReal(0, ctx), BigReal(1, ctx))),
                    domain_error);
    CHECK(pow(BigComplex(0, ctx), BigComplex(3, ctx)).real().is_zero());
}

TEST_CASE("complex_pow identities over random points") {
    PrecisionContext ctx{50};
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> coord(-30.0, 30.0);
    for (int i = 0; i < 40; ++i) {
        double re = coord(rng), im = coord(rng);
        if (re == 0.0 && im == 0.0) continue;
        BigComplex x = BigComplex::from_doubles({re, im}, ctx);
        CHECK(rel_diff(pow(x, BigComplex(1, ctx)), x) < 1e-46);
        CHECK(abs(pow(x, BigComplex(0, ctx)) - BigComplex(1, ctx)).to_double() < 1e-48);
    }
}

TEST_CASE("bernoulli values from the defining recurrence") {
    PrecisionContext ctx{50};
    CHECK(bernoulli_rational(2) == mpq_class(1, 6));
    CHECK(bernoulli_rational(4) == mpq_class(-1, 30));
    CHECK(bernoulli_rational(12) == mpq_class(-691, 2730));
    CHECK(rel_diff(bernoulli(2, ctx), BigReal(1, ctx) / 6) < 1e-49);
    CHECK(rel_diff(bernoulli(12, ctx), to_bigreal(mpq_class(-691, 2730), ctx)) < 1e-49);
}

TEST_CASE("bernoulli argument validation") {
    PrecisionContext ctx{50};
    CHECK_THROWS_AS(bernoulli(3, ctx), argument_error);
    CHECK_THROWS_AS(bernoulli(0, ctx), argument_error);
    CHECK_THROWS_AS(bernoulli(-2, ctx), argument_error);
    CHECK_THROWS_AS(bernoulli(122, ctx), argument_error);
}

TEST_CASE("bernoulli recurrence closes exactly") {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for every even m up to 60
    for (int m = 2; m <= 60; m += 2) {
        mpq_class acc(0);
        mpz_class binom;
        for (int j = 0; j <= m; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
            acc += mpq_class(binom) * bernoulli_rational(j);
        }
        CHECK(acc == 0);
    }
}

TEST_CASE("elementary suite") {
    PrecisionContext ctx{50};
    CHECK(rel_diff(log(exp(BigReal(1, ctx))), BigReal(1, ctx)) < 1e-48);
    CHECK(abs(sin(pi(ctx))).to_double() < 1e-48);
    CHECK_THROWS_AS(log(BigReal(0, ctx)), domain_error);
    CHECK_THROWS_AS(log(BigReal(-1, ctx)), domain_error);
    CHECK_THROWS_AS(sqrt(BigReal(-4, ctx)), domain_error);
    CHECK(BigReal::from_double(0.5, ctx).to_double() == 0.5);

    // sqrt(pi) stable under digit increase
    BigReal a = sqrt(pi(PrecisionContext{40}));
    BigReal b = sqrt(pi(PrecisionContext{50}));
    CHECK(rel_diff(a, b) < 1e-38);
    CHECK(a.str(11) == "1.7724538509e+00");
}

TEST_CASE("precision refinement consistency") {
    // results at d1 < d2 digits agree to ~10^(2-d1)
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 40.0);
    PrecisionContext lo_ctx{30}, hi_ctx{50};
    for (int i = 0; i < 25; ++i) {
        double v = u(rng);
        BigReal xl = BigReal::from_double(v, lo_ctx);
        BigReal xh = BigReal::from_double(v, hi_ctx);
        CHECK(rel_diff(exp(xl), exp(xh)) < 1e-28);
        CHECK(rel_diff(log(xl), log(xh)) < 1e-28);
        CHECK(rel_diff(sqrt(xl), sqrt(xh)) < 1e-28);
        CHECK(std::fabs((sin(xl) - sin(xh)).to_double()) < 1e-28);
    }
}

TEST_CASE("bigcomplex arithmetic and principal branch") {
    PrecisionContext ctx{50};
    BigComplex z(BigReal(3, ctx), BigReal(4, ctx));
    CHECK(rel_diff(abs(z), BigReal(5, ctx)) < 1e-48);
    CHECK(rel_diff(z / z, BigComplex(1, ctx)) < 1e-48);
    CHECK_THROWS_AS(z / BigComplex(0, ctx), domain_error);

    // principal argument in (-pi, pi]: arg(-1) = +pi
    CHECK(rel_diff(arg(BigComplex(-1, ctx)), pi(ctx)) < 1e-48);
    CHECK(arg(BigComplex(BigReal(-1, ctx), BigReal::from_string("-1e-40", ctx))).sign() < 0);

    // log/exp inverse pair away from the cut
    BigComplex w(BigReal::from_string("0.7", ctx), BigReal(-2, ctx));
    CHECK(rel_diff(exp(log(w)), w) < 1e-47);
    CHECK(rel_diff(conj(exp(w)), exp(conj(w))) < 1e-48);
}
