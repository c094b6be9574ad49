"""Statistical mixture versus coherent superposition under one PA pulse.

Both clouds hold the same three spin populations. In the incoherent mixture
each collision channel burns independently, so the m0 pairs (strongest
channel) deplete hardest. In the dressed superposition every atom carries
the full spinor, all components share one suppressed loss rate, and the
per-component losses come out equal.
"""
import numpy as np

from ramanpa.dressed_states import RamanParams, find_band_minimum
from ramanpa.interference import rate_ratio
from ramanpa.pa_kinetics import (
    LorentzianLine,
    MixtureState,
    PulseParams,
    invert_remaining_fraction,
    remaining_fraction,
    simulate_mixture,
)
from ramanpa.spectra import component_spectrum, fit_spectrum, synthesize_spectrum

GRID = np.sort(np.concatenate([
    np.linspace(-60.0, -50.0, 6),
    np.linspace(-6.0, 6.0, 16),
    [-20.0, 20.0],
    np.linspace(50.0, 60.0, 6),
]))


def main():
    rho0, t_pa = 1.0e14, 0.01

    counts = (1200.0, 7000.0, 1100.0)
    frac0 = counts[1] / sum(counts)
    k00 = invert_remaining_fraction(0.21) / (t_pa * frac0 * rho0)
    pulse = PulseParams(t_pa=t_pa, rho0=rho0, n0=float(sum(counts)))
    series = simulate_mixture(MixtureState(counts=counts), k00, pulse,
                              dt=t_pa / 2000.0)
    losses = 1.0 - series.counts[-1] / np.array(counts)
    print(f"mixture, k00 calibrated so the m0 loss hits 79%:")
    print(f"  losses: m-1 {losses[0]:.1%}, m0 {losses[1]:.1%}, "
          f"m+1 {losses[2]:.1%}")
    print(f"  molecules formed: {series.molecules_cumulative[-1]:.0f}")
    print("  the edge components burn through the cross channel alone, yet")
    print("  still lose more than half at this calibration.")

    state = find_band_minimum(RamanParams(omega_r=8.0, delta=0.0))
    ratio = rate_ratio(tuple(state.coeffs))
    eta_sup = invert_remaining_fraction(0.64)
    line = LorentzianLine(eta_res=eta_sup, nu0=0.0, gamma=20.0)
    sup_pulse = PulseParams(t_pa=5e-3, rho0=rho0, n0=9300.0)
    spec = synthesize_spectrum(line, sup_pulse, GRID, 0.005, 0,
                               component_weights=tuple(state.weights))
    print(f"\nsuperposition at omega_R = 8 (suppression ratio {ratio:.3f}),")
    print("resonant loss pinned at 36% by construction; per-component fits:")
    for m in (-1, 0, 1):
        fit = fit_spectrum(component_spectrum(spec, m))
        print(f"  m{m:+d}: eta = {fit.eta_res:.4f}, "
              f"loss = {1.0 - remaining_fraction(fit.eta_res):.1%}")
    print("  equal within the fit noise: the dressed state loses atoms as")
    print("  one object instead of channel by channel.")


if __name__ == "__main__":
    main()
