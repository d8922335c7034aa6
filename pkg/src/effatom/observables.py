"""Electron density and analytic X-ray scattering factors.

The density is a sum of spherically averaged orbital densities weighted by
occupancy, each orbital evaluated at its own effective charge.  Only s
states reach the nucleus, giving the closed form rho(0) = sum g (Z_n0/n)^3 / pi.

The per-subshell scattering factor is the spherical Fourier transform of one
normalized orbital density.  Squaring the terminating orbital polynomial and
transforming term by term turns it into a finite double sum over derivative
kernels d^p/dxi^p 1/(xi^2 + q^2) with xi = 2 Z_nl / n; normalizing the sum
by its q = 0 value (where the kernel reduces to derivatives of 1/xi^2) pins
F_nl(0) = 1 exactly, so f(0) = N by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .atom import AtomModel
from .orbitals import RadialOrbital
from .subshells import Subshell

#: Bohr radius in Angstrom, for the s = sin(theta)/lambda grid conversion.
BOHR_ANGSTROM = 0.529177

FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class DensityProfile:
    """Sampled rho(r) and the radial density D(r) = r^2 rho(r)."""

    grid: np.ndarray
    rho: np.ndarray
    d_radial: np.ndarray


@dataclass(frozen=True)
class FormFactorCurve:
    """Scattering factor sampled on an s grid (inverse Angstrom)."""

    s_grid: np.ndarray
    q_grid: np.ndarray
    f: np.ndarray
    xi: dict[Subshell, float]


def density(atom: AtomModel, r):
    """Electron density at radius ``r`` (scalar or array), electrons/bohr^3.

    Open subshells are spherically averaged: each contributes
    g |N R(r)|^2 / (4 pi) regardless of which m, s states are occupied.
    """
    r = np.asarray(r, dtype=float)
    out = np.zeros_like(r)
    for sub, g in atom.config.items():
        orb = RadialOrbital(sub.n, sub.l, atom.charges[sub])
        amp = np.asarray(orb.value(r))
        out = out + g * amp * amp / FOUR_PI
    if out.ndim == 0:
        return float(out)
    return out


def density_profile(
    atom: AtomModel,
    r_min: float = 1e-4,
    r_max: float = 50.0,
    points: int = 400,
) -> DensityProfile:
    """Log-spaced density samples covering the cusp region and the tail."""
    grid = np.geomspace(r_min, r_max, points)
    rho = density(atom, grid)
    return DensityProfile(grid=grid, rho=rho, d_radial=grid * grid * rho)


def rho_at_nucleus(atom: AtomModel) -> float:
    """Density at r = 0; only s subshells contribute."""
    total = 0.0
    for sub, g in atom.config.items():
        if sub.l == 0:
            total += g * (atom.charges[sub] / sub.n) ** 3 / math.pi
    return total


def inverse_power_derivative(p: int, xi: float, q: float) -> float:
    """d^p/dxi^p of 1/(xi^2 + q^2), in closed form.

    For q > 0 the partial-fraction identity gives
    (-1)^p p! Im[(xi - iq)^-(p+1)] / q, evaluated with modulus and phase so
    no complex arithmetic is needed; q = 0 reduces to derivatives of xi^-2.
    """
    if p < 0:
        raise ValueError(f"derivative order must be >= 0, got {p}")
    if xi <= 0.0:
        raise ValueError(f"xi must be positive, got {xi}")
    if q < 0.0:
        raise ValueError(f"q must be >= 0, got {q}")
    sign = -1.0 if p % 2 else 1.0
    if q == 0.0:
        return sign * math.factorial(p + 1) * xi ** (-(p + 2))
    modulus = math.hypot(xi, q)
    phase = math.atan2(q, xi)
    return sign * math.factorial(p) * math.sin((p + 1) * phase) / (q * modulus ** (p + 1))


def _kernel_sum(n: int, l: int, xi: float, q: float) -> float:
    """Finite double sum of derivative kernels for one squared orbital."""
    n_r = n - l - 1
    weights = [
        1.0 / (math.factorial(n_r - k) * math.factorial(2 * l + 1 + k) * math.factorial(k))
        for k in range(n_r + 1)
    ]
    total = 0.0
    for k in range(n_r + 1):
        for m in range(n_r + 1):
            total += (
                weights[k]
                * weights[m]
                * xi ** (2 * l + k + m)
                * inverse_power_derivative(2 * l + 1 + k + m, xi, q)
            )
    return total


def subshell_form_factor(n: int, l: int, z_eff: float, q: float) -> float:
    """Normalized scattering factor of one (n, l) orbital; F(0) = 1 exactly."""
    xi = 2.0 * z_eff / n
    return _kernel_sum(n, l, xi, q) / _kernel_sum(n, l, xi, 0.0)


def form_factor(atom: AtomModel, q: float) -> float:
    """Atomic scattering factor at momentum transfer ``q`` (inverse bohr)."""
    if q < 0.0:
        raise ValueError(f"q must be >= 0, got {q}")
    total = 0.0
    for sub, g in atom.config.items():
        total += g * subshell_form_factor(sub.n, sub.l, atom.charges[sub], q)
    return total


def form_factor_curve(atom: AtomModel, s_grid) -> FormFactorCurve:
    """Evaluate f on an s = sin(theta)/lambda grid given in inverse Angstrom."""
    s = np.asarray(s_grid, dtype=float)
    if np.any(s < 0.0):
        raise ValueError("s values must be >= 0")
    q = FOUR_PI * s * BOHR_ANGSTROM
    f = np.array([form_factor(atom, qi) for qi in q])
    xi = {sub: 2.0 * atom.charges[sub] / sub.n for sub in atom.config}
    return FormFactorCurve(s_grid=s, q_grid=q, f=f, xi=xi)
