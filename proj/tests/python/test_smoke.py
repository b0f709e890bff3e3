import cmath
import math

import pytest

import gammakit as gk


@pytest.fixture(scope="module")
def lanczos_inf():
    return gk.make_expansion("lanczos", n=8, inf=True)


def test_solver_matches_published_values(lanczos_inf):
    assert abs(lanczos_inf.r - 7.90609386) < 5e-8
    assert lanczos_inf.r_target == "inf"
    assert abs(gk.solve_r("spouge", 2, zbar=15) - 2.10115467) < 5e-8
    assert abs(gk.solve_r("geometric", 8, inf=True) - 7.87294863) < 5e-8


def test_spouge_closed_form():
    e = gk.make_expansion("spouge", n=8, zbar=100)
    assert e.method == "spouge"
    assert abs(e.c_inf - math.sqrt(2 * math.pi)) < 1e-15
    assert abs(e.c[0] - 9.9957e3) < 0.5


def test_eval_paths(lanczos_inf):
    g = gk.GammaApproximation.from_expansion(lanczos_inf)

    v = g.eval(5)
    assert isinstance(v, complex)
    assert abs(v - 24.0) < 1e-11

    pole = g.eval(-3)
    assert pole["kind"] == "pole"
    assert pole["index"] == 3
    assert pole["residue"] == pytest.approx(-1.0 / 6.0, rel=1e-15)

    big = g.eval(201.5)
    assert big["kind"] == "out_of_range"
    assert big["log_gamma"].real == pytest.approx(math.lgamma(201.5), rel=1e-10)

    assert g.eval_log(21).real == pytest.approx(math.lgamma(21.0), rel=1e-10)

    zv = g.eval(1.5 + 2.0j)
    ref = gk.reference_gamma(1.5 + 2.0j)
    assert abs(zv - ref) / abs(ref) < 1e-12


def test_reference_oracle():
    assert gk.reference_gamma(21).real == pytest.approx(math.factorial(20), rel=1e-14)
    lg = gk.reference_log_gamma(0.5 + 10j)
    assert cmath.isfinite(lg)


def test_sweep_and_analysis(lanczos_inf):
    samples = gk.sweep(lanczos_inf, "real", 0.5, 100.0, 20)
    assert len(samples) == 20
    coords = [c for c, _ in samples]
    assert coords == sorted(coords)
    assert all(err >= 0 for _, err in samples)

    ap = gk.asymptotic_params(lanczos_inf)
    assert abs(ap["plateau"]) < 1e-12
    err = gk.relative_error(lanczos_inf, 1e5)
    assert err * 1e5 == pytest.approx(abs(ap["decay"]), rel=0.1)


def test_record_round_trip(lanczos_inf):
    text = lanczos_inf.record()
    assert text.splitlines()[0] == "gammakit-coefficients v1"
    back = gk.PoleExpansion.from_record(text)
    assert back.n == lanczos_inf.n
    assert back.c == lanczos_inf.c
    assert back.method == "lanczos"


def test_errors_are_typed():
    with pytest.raises(gk.PoleError):
        gk.eval_extended(gk.make_expansion("stirling"), -4.0)
    with pytest.raises(ValueError):
        gk.make_expansion("lanczos", n=8)  # no r, zbar, or inf


def test_utility_values():
    assert gk.bernoulli(2) == pytest.approx(1.0 / 6.0, rel=1e-15)
    a = gk.stirling_series_coeffs(3)
    root = math.sqrt(2 * math.pi)
    assert a[0] == pytest.approx(root, rel=1e-15)
    assert a[1] == pytest.approx(root / 12, rel=1e-15)
    assert a[2] == pytest.approx(root / 288, rel=1e-15)
