"""Monte Carlo propagation of dressing-parameter uncertainties.

The measured Raman coupling and detuning carry experimental uncertainties
(10% relative and 0.5 E_r by default). Sampling both, re-solving the band
minimum per sample, and evaluating the PA rate ratio yields the mean +- one
standard deviation prediction bands drawn around the nominal theory curves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import EPSILON_Q_ER
from .dressed_states import RamanParams, band_minima
from .interference import _batch_ratios

__all__ = [
    "UncertaintySpec",
    "RatioBand",
    "sample_parameters",
    "ratio_band_vs_omega",
    "ratio_band_vs_delta",
    "write_ratio_band_csv",
]

# coarse scan is enough for sampling: wells are ~1 k_r wide, and every local
# minimum is refined by derivative bisection afterwards
_MC_SCAN_STEP = 0.02
_EXACT_SCAN_STEP = 1e-3
VARIANT_WITH = "with-interference"
VARIANT_WITHOUT = "without-interference"


@dataclass(frozen=True)
class UncertaintySpec:
    """Sampling plan: relative sigma of Omega_R, absolute sigma of delta (E_r),
    optional absolute sigma of epsilon_q, sample count, and the seed."""

    omega_rel_sigma: float = 0.10
    delta_sigma: float = 0.5
    n_samples: int = 2000
    seed: int = 0
    epsilon_q_sigma: float = 0.0

    def __post_init__(self):
        if self.omega_rel_sigma < 0 or self.delta_sigma < 0 or self.epsilon_q_sigma < 0:
            raise ValueError("sigmas must be >= 0")
        if self.n_samples < 100:
            raise ValueError("n_samples must be >= 100")
        if self.seed < 0:
            raise ValueError("seed must be >= 0")

    @property
    def is_zero(self) -> bool:
        return self.omega_rel_sigma == 0 and self.delta_sigma == 0 and self.epsilon_q_sigma == 0


@dataclass
class RatioBand:
    """Rate-ratio band along one sweep axis.

    lower/upper are mean -+ one standard deviation, clipped to [0, 1.05] for
    display; std holds the unclipped per-point standard deviation.
    """

    sweep_axis: np.ndarray
    mean: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    variant: str
    std: np.ndarray
    n_samples: int


def _draw_positive(rng, nominal: float, sigma: float, n: int) -> np.ndarray:
    """Gaussian draws with negative values redrawn until none remain."""
    if sigma == 0:
        return np.full(n, nominal)
    out = rng.normal(nominal, sigma, n)
    while np.any(out < 0):
        bad = out < 0
        out[bad] = rng.normal(nominal, sigma, int(bad.sum()))
    return out


def _draw_samples(rng, omega_nom, delta_nom, epsilon_nom, spec: UncertaintySpec):
    omegas = _draw_positive(rng, omega_nom, spec.omega_rel_sigma * omega_nom,
                            spec.n_samples)
    if spec.delta_sigma > 0:
        deltas = rng.normal(delta_nom, spec.delta_sigma, spec.n_samples)
    else:
        deltas = np.full(spec.n_samples, delta_nom)
    epsilons = _draw_positive(rng, epsilon_nom, spec.epsilon_q_sigma, spec.n_samples)
    return omegas, deltas, epsilons


def sample_parameters(nominal: RamanParams, spec: UncertaintySpec) -> list[RamanParams]:
    """Draw n_samples parameter sets around the nominal values."""
    rng = np.random.default_rng(spec.seed)
    omegas, deltas, epsilons = _draw_samples(
        rng, nominal.omega_r, nominal.delta, nominal.epsilon_q, spec)
    return [RamanParams(omega_r=float(o), delta=float(d), epsilon_q=float(e),
                        recoil_energy_hz=nominal.recoil_energy_hz)
            for o, d, e in zip(omegas, deltas, epsilons)]


def _band(axis_values, omega_of, delta_of, spec: UncertaintySpec,
          interference: bool, epsilon_q: float) -> RatioBand:
    """Shared sweep driver; omega_of/delta_of map a sweep value to nominals."""
    axis = np.asarray(axis_values, dtype=float)
    if axis.size == 0:
        raise ValueError("sweep axis must be non-empty")
    means = np.empty(axis.size)
    stds = np.zeros(axis.size)
    if spec.is_zero:
        # zero-width band: one solve per point on the fine production grid
        om = np.array([omega_of(v) for v in axis])
        de = np.array([delta_of(v) for v in axis])
        _, _, coeffs = band_minima(om, de, epsilon_q, scan_step=_EXACT_SCAN_STEP)
        full, no_int = _batch_ratios(coeffs)
        means[:] = full if interference else no_int
        n_eff = 1
    else:
        for i, v in enumerate(axis):
            # one independent substream per sweep point: mirrored or reordered
            # sweeps reuse identical draws at equal indices
            rng = np.random.default_rng([spec.seed, i])
            omegas, deltas, epsilons = _draw_samples(
                rng, omega_of(v), delta_of(v), epsilon_q, spec)
            _, _, coeffs = band_minima(omegas, deltas, epsilons,
                                       scan_step=_MC_SCAN_STEP)
            full, no_int = _batch_ratios(coeffs)
            ratios = full if interference else no_int
            means[i] = float(np.mean(ratios))
            stds[i] = float(np.std(ratios, ddof=1))
        n_eff = spec.n_samples
    lower = np.clip(means - stds, 0.0, 1.05)
    upper = np.clip(means + stds, 0.0, 1.05)
    return RatioBand(sweep_axis=axis, mean=means, lower=lower, upper=upper,
                     variant=VARIANT_WITH if interference else VARIANT_WITHOUT,
                     std=stds, n_samples=n_eff)


def ratio_band_vs_omega(omega_list, delta_nominal: float, spec: UncertaintySpec,
                        interference: bool = True,
                        epsilon_q: float = EPSILON_Q_ER) -> RatioBand:
    """Rate-ratio band swept over the Raman coupling at fixed nominal delta."""
    return _band(omega_list, omega_of=lambda v: v,
                 delta_of=lambda v: delta_nominal,
                 spec=spec, interference=interference, epsilon_q=epsilon_q)


def ratio_band_vs_delta(delta_list, omega_nominal: float, spec: UncertaintySpec,
                        interference: bool = True,
                        epsilon_q: float = EPSILON_Q_ER) -> RatioBand:
    """Rate-ratio band swept over the detuning at fixed nominal coupling."""
    return _band(delta_list, omega_of=lambda v: omega_nominal,
                 delta_of=lambda v: v,
                 spec=spec, interference=interference, epsilon_q=epsilon_q)


def write_ratio_band_csv(path, bands) -> None:
    """Write one or more bands as CSV rows tagged by variant."""
    if isinstance(bands, RatioBand):
        bands = [bands]
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("axis_value_Er,mean,lower,upper,variant\n")
        for band in bands:
            for i, v in enumerate(band.sweep_axis):
                fh.write(f"{v:.12g},{band.mean[i]:.12g},{band.lower[i]:.12g},"
                         f"{band.upper[i]:.12g},{band.variant}\n")
