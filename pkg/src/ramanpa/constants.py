"""Physical constants and the unit conversions used across the toolkit.

Internal unit policy: energies in recoil units E_r, quasimomentum in k_r,
frequencies in kHz, densities in cm^-3, times in seconds inside the library
(milliseconds only at the CLI surface).
"""

import math

import scipy.constants as _cts

HBAR = _cts.hbar                       # J s
ATOMIC_MASS_KG = _cts.atomic_mass      # kg per u
BOHR_RADIUS_M = _cts.value("Bohr radius")

# Default experimental scales. Overridable through RamanParams / RunConfig;
# formulas never hard-code these.
RECOIL_ENERGY_HZ = 3680.0              # E_r/h for the Raman laser pair
EPSILON_Q_ER = 0.65                    # quadratic Zeeman shift, E_r
TRAP_OMEGA_BAR = 2.0 * math.pi * 90.0  # geometric-mean trap frequency, rad/s
SCATTERING_LENGTH_A0 = 100.4           # f=1 s-wave scattering length, Bohr radii
RB87_MASS_AMU = 86.909180527

# Conversions
MS = 1e-3                              # s per ms
M3_TO_CM3 = 1e-6                       # density m^-3 -> cm^-3


def er_to_khz(energy_er, recoil_energy_hz=RECOIL_ENERGY_HZ):
    """Convert an energy in E_r to a frequency in kHz."""
    return energy_er * recoil_energy_hz / 1e3


def khz_to_er(freq_khz, recoil_energy_hz=RECOIL_ENERGY_HZ):
    """Convert a frequency in kHz to an energy in E_r."""
    return freq_khz * 1e3 / recoil_energy_hz
