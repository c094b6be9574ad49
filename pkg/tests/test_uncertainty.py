"""Monte Carlo rate-ratio bands over dressing-parameter uncertainty."""
import numpy as np
import pytest

from ramanpa.dressed_states import RamanParams, find_band_minimum
from ramanpa.interference import rate_ratio, rate_ratio_no_interference
from ramanpa.uncertainty import (
    RatioBand,
    UncertaintySpec,
    ratio_band_vs_delta,
    ratio_band_vs_omega,
    sample_parameters,
    write_ratio_band_csv,
)

ZERO = UncertaintySpec(omega_rel_sigma=0.0, delta_sigma=0.0, n_samples=100, seed=0)
NOMINAL_MC = UncertaintySpec(omega_rel_sigma=0.10, delta_sigma=0.5,
                             n_samples=2000, seed=0)


# ------------------------------------------------------------------ sampling

def test_spec_validation():
    with pytest.raises(ValueError):
        UncertaintySpec(omega_rel_sigma=-0.1)
    with pytest.raises(ValueError):
        UncertaintySpec(n_samples=50)
    with pytest.raises(ValueError):
        UncertaintySpec(seed=-1)
    assert ZERO.is_zero and not NOMINAL_MC.is_zero


def test_sample_parameters_deterministic():
    nominal = RamanParams(omega_r=5.4, delta=0.0)
    a = sample_parameters(nominal, NOMINAL_MC)
    b = sample_parameters(nominal, NOMINAL_MC)
    assert len(a) == NOMINAL_MC.n_samples
    assert all(x == y for x, y in zip(a, b))


def test_sample_parameters_mean_tracks_nominal():
    spec = UncertaintySpec(omega_rel_sigma=0.10, delta_sigma=0.5,
                           n_samples=10000, seed=3)
    draws = sample_parameters(RamanParams(omega_r=5.4, delta=-1.0), spec)
    omegas = np.array([p.omega_r for p in draws])
    deltas = np.array([p.delta for p in draws])
    assert abs(np.mean(omegas) / 5.4 - 1.0) < 0.01
    assert abs(np.mean(deltas) + 1.0) < 0.02
    assert np.all(np.array([p.epsilon_q for p in draws]) == draws[0].epsilon_q)


def test_sample_parameters_redraws_negative_couplings():
    spec = UncertaintySpec(omega_rel_sigma=1.0, delta_sigma=0.0,
                           n_samples=5000, seed=1)
    draws = sample_parameters(RamanParams(omega_r=0.5, delta=0.0), spec)
    assert min(p.omega_r for p in draws) >= 0.0


# ----------------------------------------------------------- zero-width band

def test_zero_sigma_band_equals_single_minimum_solve():
    omegas = [1.1, 5.4, 8.0, 12.0]
    band = ratio_band_vs_omega(omegas, 0.0, ZERO)
    for i, om in enumerate(omegas):
        state = find_band_minimum(RamanParams(omega_r=om, delta=0.0))
        assert band.mean[i] == rate_ratio(tuple(state.coeffs))
    assert np.all(band.std == 0.0)
    assert np.array_equal(band.lower, band.mean)
    assert np.array_equal(band.upper, band.mean)
    assert band.n_samples == 1


def test_zero_sigma_frozen_endpoints():
    band = ratio_band_vs_omega([0.001, 12.0], 0.0, ZERO)
    assert band.mean[0] == pytest.approx(1.0, abs=1e-6)
    assert band.mean[1] == pytest.approx(0.06983504105806265, rel=1e-12)
    noint = ratio_band_vs_omega([12.0], 0.0, ZERO, interference=False)
    assert noint.mean[0] == pytest.approx(0.5349175205290313, rel=1e-12)


def test_zero_sigma_delta_sweep_is_symmetric():
    deltas = np.linspace(0.0, 3.0, 7)
    plus = ratio_band_vs_delta(deltas, 5.4, ZERO)
    minus = ratio_band_vs_delta(-deltas, 5.4, ZERO)
    assert np.max(np.abs(plus.mean - minus.mean)) < 1e-12


# -------------------------------------------------------------- MC bands

def test_band_envelope_invariants():
    band = ratio_band_vs_omega(np.linspace(0.5, 12.0, 9), 0.0, NOMINAL_MC)
    assert np.all(band.lower <= band.mean + 1e-15)
    assert np.all(band.mean <= band.upper + 1e-15)
    assert np.all(band.lower >= 0.0) and np.all(band.upper <= 1.05)
    assert np.all(band.std > 0.0)
    assert band.n_samples == NOMINAL_MC.n_samples


def test_band_interference_below_no_interference():
    axis = np.linspace(1.0, 12.0, 6)
    full = ratio_band_vs_omega(axis, 0.0, NOMINAL_MC)
    noint = ratio_band_vs_omega(axis, 0.0, NOMINAL_MC, interference=False)
    assert full.variant == "with-interference"
    assert noint.variant == "without-interference"
    assert np.all(full.mean <= noint.mean + 1e-12)


def test_band_deterministic():
    axis = [2.0, 5.4, 9.0]
    a = ratio_band_vs_omega(axis, 0.0, NOMINAL_MC)
    b = ratio_band_vs_omega(axis, 0.0, NOMINAL_MC)
    assert np.array_equal(a.mean, b.mean)
    assert np.array_equal(a.std, b.std)


def test_band_mirrored_delta_sweep_symmetric_to_mc_error():
    """Per-point substreams reuse the same draws at equal indices, so the
    mirror asymmetry is set by the sampling noise alone."""
    deltas = np.linspace(0.0, 3.0, 7)
    plus = ratio_band_vs_delta(deltas, 5.4, NOMINAL_MC)
    minus = ratio_band_vs_delta(-deltas, 5.4, NOMINAL_MC)
    assert np.max(np.abs(plus.mean - minus.mean)) < 0.02


def test_band_strong_coupling_suppression_with_spread():
    band = ratio_band_vs_omega([5.4], 0.0, NOMINAL_MC)
    assert 0.2 < band.mean[0] < 0.35
    assert 0.0 < band.std[0] < 0.2


def test_band_rejects_empty_axis():
    with pytest.raises(ValueError):
        ratio_band_vs_omega([], 0.0, ZERO)


def test_band_dressed_minimum_ratio_ordering_per_draw():
    # same coefficients feed both variants, so the ordering survives averaging
    state = find_band_minimum(RamanParams(omega_r=7.0, delta=1.0))
    c = tuple(state.coeffs)
    assert rate_ratio(c) <= rate_ratio_no_interference(c) + 1e-12


# ------------------------------------------------------------------- CSV out

def test_write_ratio_band_csv(tmp_path):
    axis = [1.0, 5.4]
    full = ratio_band_vs_omega(axis, 0.0, ZERO)
    noint = ratio_band_vs_omega(axis, 0.0, ZERO, interference=False)
    path = tmp_path / "bands.csv"
    write_ratio_band_csv(path, [full, noint])
    lines = path.read_text(encoding="ascii").splitlines()
    assert lines[0] == "axis_value_Er,mean,lower,upper,variant"
    assert len(lines) == 1 + 2 * len(axis)
    assert sum(ln.endswith(",with-interference") for ln in lines[1:]) == 2
    assert sum(ln.endswith(",without-interference") for ln in lines[1:]) == 2
    row = lines[1].split(",")
    assert float(row[1]) == pytest.approx(full.mean[0], rel=1e-10)


def test_write_single_band_csv(tmp_path):
    band = ratio_band_vs_omega([5.4], 0.0, ZERO)
    path = tmp_path / "one.csv"
    write_ratio_band_csv(path, band)
    assert len(path.read_text(encoding="ascii").splitlines()) == 2
