import math

import pytest

import photofpt as pf


def test_slab_closed_form():
    assert pf.mean_fpt_1d(pf.DetectorParams()) == 1.0
    assert pf.rate_1d(pf.DetectorParams(i_s=1.0)) == pytest.approx(1.0 / math.tanh(1.0), rel=1e-15)
    assert pf.mean_fpt_1d(pf.DetectorParams(i_s=2.0)) == pytest.approx(0.5 * math.tanh(2.0), rel=1e-15)


def test_cube_series():
    f0 = pf.f3_series(0.0)
    assert f0.converged
    assert f0.value == pytest.approx(0.342227541133397, rel=1e-12)
    assert float(pf.mean_fpt_3d(pf.DetectorParams.from_x(50.0))) * 50.0 == pytest.approx(1.0, rel=1e-2)
    assert pf.rate_3d(pf.DetectorParams()).value > pf.rate_1d(pf.DetectorParams())


def test_survival_forms_agree():
    p = pf.DetectorParams()
    for t in (0.05, 0.5, 2.0, 10.0):
        assert abs(pf.axis_survival_image(t, 0.0, p).value - pf.axis_survival_spectral(t, p).value) < 1e-10
    s = pf.survival_3d(0.5, p)
    assert s.survival == pytest.approx(s.k_axis**3, rel=1e-15)


def test_field():
    assert pf.g_tau(0.0).value == pytest.approx(1.0 / (18.0 * math.pi), rel=1e-12)
    assert pf.moment_integral()["agree"]
    assert pf.sigma_const()["agree"]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        pf.DetectorParams(e_m=-1.0)
    with pytest.raises(ValueError):
        pf.dark_fraction(0.0)
    with pytest.raises(ValueError):
        pf.simulate_fpt(pf.DetectorParams(), dt=0.5)


def test_monte_carlo_is_reproducible():
    p = pf.DetectorParams.from_x(1.0)
    a = pf.simulate_fpt_richardson(p, n_paths=2000, seed=3, workers=1)
    b = pf.simulate_fpt_richardson(p, n_paths=2000, seed=3, workers=2)
    assert a.extrapolated.mean == b.extrapolated.mean
    assert abs(pf.zscore(pf.mean_fpt_1d(p), a.extrapolated)) < 5.0
