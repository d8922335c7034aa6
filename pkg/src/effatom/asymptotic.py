"""Large-Z behaviour of the model binding energy and the beta calibration.

Replacing the shell sums by integrals for a fully occupied atom gives a
screened charge Z_n = Z - c(beta) n^3 with c = 2/3 - beta/5, and integrating
the hydrogen-like energies up to the shell cutoff n_max = (3Z/2)^(1/3) yields
E ~ -C(beta) Z^(7/3).  Matching C to the Thomas-Fermi constant 0.768745
fixes beta.

Note: the screening coefficient is implemented with the minus sign that a
direct evaluation of the shell integral produces; the same sign keeps the
Z^(7/3) polynomial consistent with the 0.768745 target.
"""

from __future__ import annotations

from scipy.optimize import brentq

from .errors import CalibrationError

#: Thomas-Fermi coefficient of the exact nonrelativistic binding asymptote.
THOMAS_FERMI_COEFFICIENT = 0.768745


def screening_integral_coefficient(beta: float) -> float:
    """Coefficient c in the continuum screening law Z_n = Z - c n^3."""
    return 2.0 / 3.0 - beta / 5.0


def asymptotic_binding_coefficient(beta: float) -> float:
    """C(beta) such that the binding energy behaves as C * Z^(7/3) for large Z."""
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    c = screening_integral_coefficient(beta)
    r = 1.5  # n_max^3 / Z
    return (c * c / 7.0) * r ** (7.0 / 3.0) - (c / 2.0) * r ** (4.0 / 3.0) + r ** (1.0 / 3.0)


def calibrate_beta(target: float = THOMAS_FERMI_COEFFICIENT) -> float:
    """Solve asymptotic_binding_coefficient(beta) = target on beta in [0, 1]."""
    lo = asymptotic_binding_coefficient(0.0) - target
    hi = asymptotic_binding_coefficient(1.0) - target
    if lo * hi > 0.0:
        raise CalibrationError(
            f"no root: target {target} outside coefficient range "
            f"[{lo + target:.6f}, {hi + target:.6f}]"
        )
    return float(brentq(lambda b: asymptotic_binding_coefficient(b) - target, 0.0, 1.0, xtol=1e-12))
