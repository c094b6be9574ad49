"""Two-body photoassociation loss kinetics in a Thomas-Fermi condensate.

Local two-body loss d(rho)/dt = -k rho^2 integrated over an inverted-parabola
density profile gives the closed-form remaining fraction N(eta)/N_0 in terms
of the dimensionless pulse strength eta = k_PA rho_0 t_PA. The module also
carries an independent shell-integration oracle for that formula, the
Lorentzian lineshape of k_PA versus detuning, peak-density helpers, and a
coupled-channel integrator for spin-mixture losses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .constants import M3_TO_CM3, TRAP_OMEGA_BAR

__all__ = [
    "PulseParams",
    "LorentzianLine",
    "MixtureState",
    "MixtureSeries",
    "remaining_fraction",
    "remaining_fraction_oracle",
    "invert_remaining_fraction",
    "eta_from_rate",
    "rate_from_eta",
    "lorentzian_eta",
    "thomas_fermi_peak_density",
    "simulate_mixture",
    "write_mixture_csv",
]

# below this eta the closed form cancels to O(eta^{5/2}); switch to the series
_SERIES_SWITCH = 1e-4
_SERIES_TERMS = 12


@dataclass(frozen=True)
class PulseParams:
    """PA pulse context: duration t_pa (s), peak density rho0 (cm^-3),
    off-resonant atom count n0, and the nominal intensity (W/cm^2, metadata)."""

    t_pa: float
    rho0: float
    n0: float
    intensity: float = 0.0

    def __post_init__(self):
        if self.t_pa <= 0:
            raise ValueError("t_pa must be > 0")
        if self.rho0 <= 0:
            raise ValueError("rho0 must be > 0")
        if self.n0 <= 0:
            raise ValueError("n0 must be > 0")
        if self.intensity < 0:
            raise ValueError("intensity must be >= 0")


@dataclass(frozen=True)
class LorentzianLine:
    """PA line: peak pulse strength eta_res, center nu0 (kHz), FWHM gamma (kHz)."""

    eta_res: float
    nu0: float
    gamma: float

    def __post_init__(self):
        if self.eta_res < 0:
            raise ValueError("eta_res must be >= 0")
        if self.gamma <= 0:
            raise ValueError("gamma must be > 0")


@dataclass(frozen=True)
class MixtureState:
    """Spin-component atom numbers (N_-1, N_0, N_+1) sharing one trap.

    n_total fixes the frozen Thomas-Fermi shape (defaults to sum of counts);
    omega_bar is the geometric-mean trap frequency in rad/s.
    """

    counts: tuple[float, float, float]
    n_total: float | None = None
    omega_bar: float = TRAP_OMEGA_BAR

    def __post_init__(self):
        if len(self.counts) != 3 or any(c < 0 for c in self.counts):
            raise ValueError("counts must be three numbers >= 0")
        if self.n_total is None:
            object.__setattr__(self, "n_total", float(sum(self.counts)))
        if self.n_total <= 0:
            raise ValueError("n_total must be > 0")


@dataclass
class MixtureSeries:
    """Mixture-loss time series with event bookkeeping.

    counts[i] is (N_-1, N_0, N_+1) at times[i]; events_00 and events_pm are the
    cumulative (0,0) and (+1,-1) PA event counts, so N_0 drops by 2 per (0,0)
    event and N_-1, N_+1 by 1 each per (+1,-1) event.
    """

    times: np.ndarray
    counts: np.ndarray
    events_00: np.ndarray
    events_pm: np.ndarray
    clamped: bool = False
    final_state: MixtureState | None = None

    @property
    def molecules_cumulative(self) -> np.ndarray:
        return self.events_00 + self.events_pm


def _series_fraction(eta):
    """Small-eta power series of the remaining fraction.

    Coefficients obey c_0 = 1, c_{n+1}/c_n = (n+2)/(n+3.5), giving
    f = 1 - (4/7) eta + ...; truncation error is far below 1e-16 at the
    switch point.
    """
    out = np.ones_like(eta)
    term = np.ones_like(eta)
    c = 1.0
    for n in range(_SERIES_TERMS):
        c *= (n + 2.0) / (n + 3.5)
        term = term * (-eta)
        out = out + c * term
    return out


def remaining_fraction(eta):
    """Fraction of atoms remaining after a pulse of strength eta.

    Closed form (15/2) eta^{-5/2} [sqrt(eta) + eta^{3/2}/3
    - sqrt(1+eta) asinh(sqrt(eta))]; strictly decreasing, 1 at eta = 0,
    asymptotically (5/2)/eta. Accepts scalars or arrays.
    """
    arr = np.asarray(eta, dtype=float)
    if np.any(arr < 0):
        raise ValueError("eta must be >= 0")
    small = arr < _SERIES_SWITCH
    if not small.any():
        root = np.sqrt(arr)
        out = 7.5 * arr**-2.5 * (root + arr * root / 3.0 - np.sqrt(1.0 + arr) * np.arcsinh(root))
    else:
        safe = np.where(small, 1.0, arr)  # keep the closed form off eta=0
        root = np.sqrt(safe)
        closed = 7.5 * safe**-2.5 * (root + safe * root / 3.0 - np.sqrt(1.0 + safe) * np.arcsinh(root))
        out = np.where(small, _series_fraction(arr), closed)
    return float(out) if np.ndim(eta) == 0 else out


def remaining_fraction_oracle(eta: float, n_shells: int) -> float:
    """Shell-integration check of remaining_fraction.

    Applies the local solution rho(t) = rho(0)/(1 + k rho(0) t) on midpoint
    shells of the parabolic profile rho(0, r) = rho_0 (1 - r^2/R^2) and sums
    atom numbers; converges to the closed form as n_shells grows.
    """
    if eta < 0:
        raise ValueError("eta must be >= 0")
    if n_shells < 100:
        raise ValueError("n_shells must be >= 100")
    x = (np.arange(n_shells) + 0.5) / n_shells
    shape = 1.0 - x * x
    w = x * x * shape  # r^2 dr volume weight times initial density
    return float(np.sum(w / (1.0 + eta * shape)) / np.sum(w))


def invert_remaining_fraction(fraction: float) -> float:
    """Pulse strength eta that leaves the given remaining fraction.

    Inverse of remaining_fraction on (0, 1]; fraction 1 maps to 0.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError("fraction must be in (0, 1]")
    if fraction >= 1.0:
        return 0.0
    hi = 1.0
    while remaining_fraction(hi) > fraction:
        hi *= 2.0
        if hi > 1e15:
            raise ValueError("fraction too small to invert")
    return float(brentq(lambda e: remaining_fraction(e) - fraction, 0.0, hi,
                        xtol=1e-12, rtol=1e-14))


def eta_from_rate(k_pa: float, pulse: PulseParams) -> float:
    """eta = k_pa * rho0 * t_pa with k_pa in cm^3/s."""
    if k_pa < 0:
        raise ValueError("k_pa must be >= 0")
    return k_pa * pulse.rho0 * pulse.t_pa


def rate_from_eta(eta: float, pulse: PulseParams) -> float:
    """Inverse of eta_from_rate: k_pa = eta / (rho0 * t_pa)."""
    if eta < 0:
        raise ValueError("eta must be >= 0")
    return eta / (pulse.rho0 * pulse.t_pa)


def lorentzian_eta(delta_nu, line: LorentzianLine):
    """Pulse strength versus PA detuning (kHz): a Lorentzian peaking at nu0."""
    half = 0.5 * line.gamma
    d = np.asarray(delta_nu, dtype=float) - line.nu0
    out = line.eta_res * half * half / (d * d + half * half)
    return float(out) if np.ndim(delta_nu) == 0 else out


def thomas_fermi_peak_density(n_atoms: float, omega_bar: float,
                              scattering_length: float, mass: float) -> float:
    """Peak density (cm^-3) of a Thomas-Fermi condensate.

    rho_0 = (15 N / 8 pi) Rbar^-3 with Rbar = a_ho (15 N a_s / a_ho)^{1/5}
    and a_ho = sqrt(hbar / (m omega_bar)); SI inputs (rad/s, m, kg).
    """
    from scipy.constants import hbar

    if n_atoms <= 0 or omega_bar <= 0 or scattering_length <= 0 or mass <= 0:
        raise ValueError("all Thomas-Fermi inputs must be > 0")
    a_ho = math.sqrt(hbar / (mass * omega_bar))
    rbar = a_ho * (15.0 * n_atoms * scattering_length / a_ho) ** 0.2
    return (15.0 * n_atoms / (8.0 * math.pi)) / rbar**3 * M3_TO_CM3


def simulate_mixture(initial: MixtureState, k00: float, pulse: PulseParams,
                     dt: float, cross_weight: float = 2.0,
                     n_shells: int = 400) -> MixtureSeries:
    """Integrate two-channel PA losses of a spin mixture.

    Local channel ODEs on each density shell:

        d rho_0 / dt = -k00 rho_0^2
        d rho_+ / dt = d rho_- / dt = -cross_weight * k00 rho_+ rho_-

    cross_weight defaults to 2, the Clebsch-Gordan strength ratio of the
    (+1,-1) channel to the (0,0) channel. Components share one frozen
    Thomas-Fermi shape scaled by their initial fractions; shells evolve
    independently (no hydrodynamic rearrangement). Classical 4th-order
    fixed-step integration with step <= dt; cumulative (0,0) and (+1,-1)
    event counts ride along as extra state.
    """
    if dt <= 0:
        raise ValueError("dt must be > 0")
    if dt > pulse.t_pa / 100.0:
        raise ValueError("dt must be <= t_pa/100")
    if k00 < 0:
        raise ValueError("k00 must be >= 0")
    if cross_weight < 0:
        raise ValueError("cross_weight must be >= 0")
    if n_shells < 1:
        raise ValueError("n_shells must be >= 1")

    counts0 = np.asarray(initial.counts, dtype=float)
    n_tot = float(counts0.sum())
    if n_tot <= 0:
        raise ValueError("mixture must contain atoms")
    fractions = counts0 / n_tot

    x = (np.arange(n_shells) + 0.5) / n_shells
    shape = 1.0 - x * x
    u = x * x  # shell volume weight, common factor absorbed in the norm
    # count normalization ties shell sums back to absolute atom numbers
    norm = n_tot / (pulse.rho0 * float(np.sum(u * shape)))

    rho = fractions[:, None] * pulse.rho0 * shape[None, :]  # (component, shell)

    def rates(r):
        rm, r0, rp = r
        cross = cross_weight * k00 * rm * rp
        drho = np.stack([-cross, -k00 * r0 * r0, -cross])
        e00_rate = norm * float(np.sum(u * 0.5 * k00 * r0 * r0))
        epm_rate = norm * float(np.sum(u * cross))
        return drho, e00_rate, epm_rate

    n_steps = math.ceil(pulse.t_pa / dt)  # >= 100 by the dt precondition
    h = pulse.t_pa / n_steps
    times = np.linspace(0.0, pulse.t_pa, n_steps + 1)
    counts = np.empty((n_steps + 1, 3))
    e00 = np.zeros(n_steps + 1)
    epm = np.zeros(n_steps + 1)
    counts[0] = norm * np.sum(u * rho, axis=1)
    clamped = False

    for i in range(n_steps):
        k1, a1, b1 = rates(rho)
        k2, a2, b2 = rates(rho + 0.5 * h * k1)
        k3, a3, b3 = rates(rho + 0.5 * h * k2)
        k4, a4, b4 = rates(rho + h * k3)
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if np.any(rho < 0):
            clamped = True
            rho = np.maximum(rho, 0.0)
        e00[i + 1] = e00[i] + (h / 6.0) * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        epm[i + 1] = epm[i] + (h / 6.0) * (b1 + 2.0 * b2 + 2.0 * b3 + b4)
        counts[i + 1] = norm * np.sum(u * rho, axis=1)

    final = MixtureState(counts=tuple(float(c) for c in counts[-1]),
                         n_total=initial.n_total, omega_bar=initial.omega_bar)
    return MixtureSeries(times=times, counts=counts, events_00=e00,
                         events_pm=epm, clamped=clamped, final_state=final)


def write_mixture_csv(path, series: MixtureSeries) -> None:
    """Write a mixture time series as CSV, one row per stored step."""
    mol = series.molecules_cumulative
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("t_s,N_m-1,N_m0,N_m+1,molecules_cumulative\n")
        for i, t in enumerate(series.times):
            row = (t, *series.counts[i], mol[i])
            fh.write(",".join(f"{v:.12g}" for v in row) + "\n")
