"""Dressed-state band structure of Raman-coupled spin-1 atoms.

Single-particle Hamiltonian in the bare basis
|m_f=-1, q+2>, |m_f=0, q>, |m_f=+1, q-2> (quasimomentum in k_r, energy in E_r):

    H(q) = [[(q+2)^2 - delta,  w,              0             ],
            [w,                q^2 - eps_q,    w             ],
            [0,                w,              (q-2)^2 + delta]]

with w = Omega_R / 2. The lowest-band eigenvector at the band minimum is the
spin-momentum superposition (C_-1, C_0, C_+1) consumed by the interference and
kinetics modules. Sign convention: C_0 >= 0; if C_0 = 0 then C_+1 >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .constants import EPSILON_Q_ER, RECOIL_ENERGY_HZ

__all__ = [
    "RamanParams",
    "DressedState",
    "BandCurve",
    "build_hamiltonian",
    "eigensystem",
    "band_curve",
    "find_band_minimum",
    "coefficients_vs_delta",
    "band_minima",
    "write_band_csv",
]

_TWO_PI_THIRD = 2.0943951023931953
Q_WINDOW = (-3.0, 3.0)  # search window in k_r; all physical minima sit inside |q| <= 2


@dataclass(frozen=True)
class RamanParams:
    """Dressing parameters in recoil units.

    omega_r : Raman coupling Omega_R in E_r
    delta : two-photon detuning in E_r
    epsilon_q : quadratic Zeeman shift of m_f=0 in E_r
    recoil_energy_hz : E_r/h in Hz, used only for unit conversions
    """

    omega_r: float
    delta: float = 0.0
    epsilon_q: float = EPSILON_Q_ER
    recoil_energy_hz: float = RECOIL_ENERGY_HZ

    def __post_init__(self):
        if self.omega_r < 0:
            raise ValueError("omega_r must be >= 0")
        if self.epsilon_q < 0:
            raise ValueError("epsilon_q must be >= 0")
        if self.recoil_energy_hz <= 0:
            raise ValueError("recoil_energy_hz must be > 0")


@dataclass(frozen=True)
class DressedState:
    """Lowest-band state at one quasimomentum: q (k_r), energy (E_r), (C_-1, C_0, C_+1)."""

    q: float
    energy: float
    coeffs: tuple[float, float, float]

    def __post_init__(self):
        norm = sum(c * c for c in self.coeffs)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"coefficients not normalized: |c|^2 = {norm!r}")

    @property
    def weights(self) -> tuple[float, float, float]:
        """Spin populations (|C_-1|^2, |C_0|^2, |C_+1|^2)."""
        return tuple(c * c for c in self.coeffs)


@dataclass
class BandCurve:
    """Three dressed bands on a q grid.

    energies[i, b] is band b at q_grid[i], sorted ascending in b;
    spin_weights[i, b, m] is the population of component m (-1, 0, +1).
    """

    q_grid: np.ndarray
    energies: np.ndarray
    spin_weights: np.ndarray


def build_hamiltonian(q: float, params: RamanParams) -> np.ndarray:
    """Return the 3x3 Hamiltonian at quasimomentum q (k_r), in E_r units."""
    w = 0.5 * params.omega_r
    return np.array(
        [
            [(q + 2.0) ** 2 - params.delta, w, 0.0],
            [w, q * q - params.epsilon_q, w],
            [0.0, w, (q - 2.0) ** 2 + params.delta],
        ]
    )


def _fix_vector_sign(vec: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Flip the global sign so the first component with |x| > tol is positive."""
    for x in vec:
        if abs(x) > tol:
            return vec if x > 0 else -vec
    return vec


def eigensystem(h) -> list[tuple[float, np.ndarray]]:
    """Diagonalize a real symmetric 3x3 matrix.

    Returns three (eigenvalue, unit eigenvector) pairs sorted by ascending
    eigenvalue. Eigenvectors are sign-fixed (first non-negligible component
    positive); degenerate pairs are ordered deterministically by descending
    lexicographic comparison of the sign-fixed vectors.
    """
    h = np.asarray(h, dtype=float)
    if h.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    scale = max(1.0, float(np.max(np.abs(h))))
    if np.max(np.abs(h - h.T)) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric within 1e-12")
    vals, vecs = np.linalg.eigh(h)
    pairs = [(float(vals[k]), _fix_vector_sign(vecs[:, k].copy())) for k in range(3)]
    # deterministic order inside degenerate groups
    out: list[tuple[float, np.ndarray]] = []
    k = 0
    while k < 3:
        j = k + 1
        while j < 3 and abs(pairs[j][0] - pairs[k][0]) <= 1e-12 * scale:
            j += 1
        group = sorted(pairs[k:j], key=lambda p: tuple(np.round(p[1], 10)), reverse=True)
        out.extend(group)
        k = j
    return out


def band_curve(params: RamanParams, q_min: float, q_max: float, n_points: int) -> BandCurve:
    """Sample all three dressed bands on a uniform q grid."""
    if not q_min < q_max:
        raise ValueError("require q_min < q_max")
    if n_points < 2:
        raise ValueError("require n_points >= 2")
    qs = np.linspace(q_min, q_max, n_points)
    w = 0.5 * params.omega_r
    h = np.zeros((n_points, 3, 3))
    h[:, 0, 0] = (qs + 2.0) ** 2 - params.delta
    h[:, 1, 1] = qs * qs - params.epsilon_q
    h[:, 2, 2] = (qs - 2.0) ** 2 + params.delta
    h[:, 0, 1] = h[:, 1, 0] = h[:, 1, 2] = h[:, 2, 1] = w
    vals, vecs = np.linalg.eigh(h)
    weights = np.swapaxes(vecs, 1, 2) ** 2  # [i, band, component]
    return BandCurve(q_grid=qs, energies=vals, spin_weights=weights)


def _lowest_eigenvalue(q, omega, delta, epsilon_q):
    """Lowest eigenvalue of H(q), broadcasting over array arguments.

    Closed-form trigonometric solution of the characteristic cubic; for the
    tridiagonal H the determinant reduces to a0*b0*c0 - w^2*(a0 + c0).
    """
    a = (q + 2.0) ** 2 - delta
    b = q * q - epsilon_q
    c = (q - 2.0) ** 2 + delta
    w = 0.5 * omega
    mean = (a + b + c) / 3.0
    a0 = a - mean
    b0 = b - mean
    c0 = c - mean
    p2 = a0 * a0 + b0 * b0 + c0 * c0 + 4.0 * w * w
    p = np.sqrt(p2 / 6.0)
    det = a0 * b0 * c0 - w * w * (a0 + c0)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = det / (2.0 * p * p * p)
    lam = mean + 2.0 * p * np.cos(np.arccos(np.clip(r, -1.0, 1.0)) / 3.0 + _TWO_PI_THIRD)
    return np.where(p2 > 0.0, lam, mean)


def _ground_vector(q, omega, delta, epsilon_q, lam):
    """Unit eigenvector for the known lowest eigenvalue, broadcasting like q.

    The eigenvector spans the null space of H - lam*I; it is recovered from the
    cross product of the two most independent rows (largest-norm choice keeps
    the construction stable). Sign convention applied at the end.
    """
    al = (q + 2.0) ** 2 - delta - lam
    bl = q * q - epsilon_q - lam
    cl = (q - 2.0) ** 2 + delta - lam
    w = 0.5 * omega + np.zeros_like(al)
    w2 = w * w
    cand = np.stack(
        [
            np.stack([w2, -al * w, al * bl - w2], axis=-1),        # row1 x row2
            np.stack([bl * cl - w2, -w * cl, w2], axis=-1),        # row2 x row3
            np.stack([w * cl, -al * cl, al * w], axis=-1),         # row1 x row3
        ],
        axis=-2,
    )
    norms = np.linalg.norm(cand, axis=-1)
    best = np.argmax(norms, axis=-1)
    vec = np.take_along_axis(cand, best[..., None, None], axis=-2)[..., 0, :]
    nrm = np.linalg.norm(vec, axis=-1, keepdims=True)
    # all rows parallel happens only for a diagonal matrix with a repeated
    # eigenvalue; fall back to the bare component closest to lam
    diag = np.stack([al, bl, cl], axis=-1)
    fallback = (np.abs(diag) == np.min(np.abs(diag), axis=-1, keepdims=True)).astype(float)
    fallback /= np.linalg.norm(fallback, axis=-1, keepdims=True)
    ok = nrm > 1e-9 * np.maximum(1.0, np.abs(lam))[..., None]
    with np.errstate(divide="ignore", invalid="ignore"):
        vec = np.where(ok, vec / np.where(nrm > 0, nrm, 1.0), fallback)
    return _apply_sign_convention(vec)


def _apply_sign_convention(vec):
    """C_0 >= 0; if C_0 = 0 then C_+1 >= 0; if both vanish, C_-1 >= 0."""
    cm, c0, cp = vec[..., 0], vec[..., 1], vec[..., 2]
    flip = (c0 < 0) | ((c0 == 0) & ((cp < 0) | ((cp == 0) & (cm < 0))))
    return np.where(flip[..., None], -vec, vec)


def _dedq(q, omega, delta, epsilon_q):
    """dE/dq of the lowest band via the Hellmann-Feynman theorem."""
    lam = _lowest_eigenvalue(q, omega, delta, epsilon_q)
    v = _ground_vector(q, omega, delta, epsilon_q, lam)
    return (
        v[..., 0] ** 2 * 2.0 * (q + 2.0)
        + v[..., 1] ** 2 * 2.0 * q
        + v[..., 2] ** 2 * 2.0 * (q - 2.0)
    )


def _dedq_sign(q, omega, delta, epsilon_q):
    """Sign-equivalent of dE/dq for the lowest band, cheap enough for bisection.

    Implicit differentiation of the characteristic polynomial p(lam, q) = 0
    gives dE/dq = -(dp/dq)/(dp/dlam); dp/dlam < 0 at the lowest root, so
    dp/dq alone carries the sign of the slope.
    """
    lam = _lowest_eigenvalue(q, omega, delta, epsilon_q)
    a = (q + 2.0) ** 2 - delta - lam
    b = q * q - epsilon_q - lam
    c = (q - 2.0) ** 2 + delta - lam
    w = 0.5 * omega
    w2 = w * w
    pa = b * c - w2
    pb = a * c
    pc = a * b - w2
    return pa * 2.0 * (q + 2.0) + pb * 2.0 * q + pc * 2.0 * (q - 2.0)


def band_minima(omega, delta, epsilon_q=EPSILON_Q_ER, scan_step=1e-3, q_window=Q_WINDOW):
    """Global lowest-band minima over broadcast (omega, delta, epsilon_q) arrays.

    Vectorized core of find_band_minimum: a shared grid scan locates every
    discrete local minimum, each candidate is refined by bisection on the
    analytic dE/dq, and the lowest refined energy wins. Exactly degenerate
    minima resolve to smallest |q|, preferring q >= 0.

    Returns (q_star, energy, coeffs) with shapes (n,), (n,), (n, 3).
    """
    om = np.atleast_1d(np.asarray(omega, dtype=float))
    de = np.atleast_1d(np.asarray(delta, dtype=float))
    ep = np.atleast_1d(np.asarray(epsilon_q, dtype=float))
    om, de, ep = np.broadcast_arrays(om, de, ep)
    q_lo, q_hi = float(q_window[0]), float(q_window[1])
    n_q = int(round((q_hi - q_lo) / scan_step)) + 1
    qs = np.linspace(q_lo, q_hi, n_q)

    energy = _lowest_eigenvalue(qs[None, :], om[:, None], de[:, None], ep[:, None])
    padded = np.pad(energy, ((0, 0), (1, 1)), constant_values=np.inf)
    is_min = (padded[:, 1:-1] <= padded[:, :-2]) & (padded[:, 1:-1] <= padded[:, 2:])
    masked = np.where(is_min, energy, np.inf)

    n_cand = min(4, n_q)
    cand_idx = np.argpartition(masked, n_cand - 1, axis=1)[:, :n_cand]
    cand_valid = np.take_along_axis(masked, cand_idx, axis=1) < np.inf
    # guarantee at least the global grid argmin is a candidate everywhere
    fallback_idx = np.argmin(energy, axis=1)
    cand_idx = np.where(cand_valid, cand_idx, fallback_idx[:, None])

    qc = qs[cand_idx]
    om_c = np.broadcast_to(om[:, None], qc.shape)
    de_c = np.broadcast_to(de[:, None], qc.shape)
    ep_c = np.broadcast_to(ep[:, None], qc.shape)

    lo = np.clip(qc - scan_step, q_lo, q_hi)
    hi = np.clip(qc + scan_step, q_lo, q_hi)
    g_lo = _dedq_sign(lo, om_c, de_c, ep_c)
    g_hi = _dedq_sign(hi, om_c, de_c, ep_c)
    blo, bhi = lo.copy(), hi.copy()
    for _ in range(36):  # bracket width ends below 1e-12 k_r for step 0.02
        mid = 0.5 * (blo + bhi)
        g_mid = _dedq_sign(mid, om_c, de_c, ep_c)
        exact = g_mid == 0.0  # stationary point hit head-on (symmetric cases)
        left = g_mid > 0.0
        bhi = np.where(exact, mid, np.where(left, mid, bhi))
        blo = np.where(exact, mid, np.where(left, blo, mid))
    q_ref = 0.5 * (blo + bhi)
    # unbracketed candidates: rising at the left edge or falling at the right
    # edge of the window mean the extremum is the edge itself
    q_ref = np.where(g_lo > 0.0, lo, q_ref)
    q_ref = np.where(g_hi < 0.0, hi, q_ref)

    e_ref = _lowest_eigenvalue(q_ref, om_c, de_c, ep_c)
    # tie-break keys: energy (1e-12 bins), then |q| (1e-9 bins), then q >= 0
    e_key = np.round(e_ref * 1e12)
    absq_key = np.round(np.abs(q_ref) * 1e9)
    sign_key = (q_ref < 0.0).astype(np.int64)
    order = np.lexsort((sign_key, absq_key, e_key), axis=1)
    pick = order[:, :1]
    q_star = np.take_along_axis(q_ref, pick, axis=1)[:, 0]

    # final eigensolve at the minima for full-precision energies and vectors
    h = np.zeros(q_star.shape + (3, 3))
    h[..., 0, 0] = (q_star + 2.0) ** 2 - de
    h[..., 1, 1] = q_star * q_star - ep
    h[..., 2, 2] = (q_star - 2.0) ** 2 + de
    h[..., 0, 1] = h[..., 1, 0] = h[..., 1, 2] = h[..., 2, 1] = 0.5 * om
    vals, vecs = np.linalg.eigh(h)
    coeffs = _apply_sign_convention(vecs[..., :, 0])
    return q_star, vals[..., 0], coeffs


def find_band_minimum(params: RamanParams, scan_step: float = 1e-3) -> DressedState:
    """Global minimum of the lowest band over q in [-3, 3] k_r.

    Dense grid scan (step <= 0.001 k_r) plus derivative bisection brings
    |dE/dq| below 1e-8 E_r/k_r at the returned point.
    """
    if scan_step > 1e-3:
        raise ValueError("scan_step must be <= 1e-3 k_r")
    q, e, c = band_minima(params.omega_r, params.delta, params.epsilon_q, scan_step)
    return DressedState(q=float(q[0]), energy=float(e[0]), coeffs=tuple(float(x) for x in c[0]))


def coefficients_vs_delta(params: RamanParams, delta_list: Sequence[float]) -> list[DressedState]:
    """Band-minimum dressed states for each detuning in delta_list."""
    if len(delta_list) == 0:
        raise ValueError("delta_list must be non-empty")
    states = []
    for d in delta_list:
        states.append(find_band_minimum(replace(params, delta=float(d))))
    return states


def write_band_csv(path, curve: BandCurve) -> None:
    """Write a band curve as CSV, one row per grid point.

    Columns: q, the three band energies, then the three spin weights per band.
    """
    header = ["q_kr", "E1_Er", "E2_Er", "E3_Er"]
    for b in (1, 2, 3):
        header += [f"w{b}_m-1", f"w{b}_m0", f"w{b}_m+1"]
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for i, q in enumerate(curve.q_grid):
            row = [q, *curve.energies[i]]
            for b in range(3):
                row.extend(curve.spin_weights[i, b])
            fh.write(",".join(f"{x:.12g}" for x in row) + "\n")
