"""Normalized hydrogen-like radial orbitals.

R_nl(r) = (2Zr/n)^l exp(-Zr/n) F(-(n-l-1), 2l+2, 2Zr/n) with the terminating
confluent-hypergeometric polynomial F, and the closed-form normalization

    N_nl = 1/(2l+1)! * sqrt((n+l)! / (2n (n-l-1)!)) * (2Z/n)^(3/2),

so that the radial probability density (N R)^2 r^2 integrates to one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .subshells import Subshell, subshell


def confluent_poly(a: int, c: int, x):
    """Terminating confluent series sum_k (a)_k / (c)_k x^k / k! for a <= 0.

    Accepts scalar or ndarray ``x``.  A positive ``a`` would not terminate
    and is rejected.
    """
    if a > 0:
        raise ValueError(f"series terminates only for a <= 0, got a={a}")
    if c < 1:
        raise ValueError(f"c must be a positive integer, got c={c}")
    x = np.asarray(x, dtype=float)
    total = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(-a):
        term = term * ((a + k) / ((c + k) * (k + 1.0))) * x
        total = total + term
    if total.ndim == 0:
        return float(total)
    return total


def radial_norm(n: int, l: int, z_eff: float) -> float:
    """Closed-form normalization constant N_nl."""
    return (
        1.0
        / math.factorial(2 * l + 1)
        * math.sqrt(math.factorial(n + l) / (2.0 * n * math.factorial(n - l - 1)))
        * (2.0 * z_eff / n) ** 1.5
    )


@dataclass(frozen=True)
class RadialOrbital:
    """A bound (n, l) orbital with effective charge ``z_eff``."""

    n: int
    l: int
    z_eff: float

    def __post_init__(self) -> None:
        subshell(self.n, self.l)  # validates quantum numbers
        if self.z_eff <= 0.0:
            raise ValueError(f"effective charge must be positive, got {self.z_eff}")

    @property
    def key(self) -> Subshell:
        return Subshell(self.n, self.l)

    @property
    def norm(self) -> float:
        return radial_norm(self.n, self.l, self.z_eff)

    def value(self, r, include_norm: bool = True):
        """Radial amplitude at ``r`` (scalar or array), optionally normalized."""
        r = np.asarray(r, dtype=float)
        x = 2.0 * self.z_eff * r / self.n
        amp = x**self.l * np.exp(-x / 2.0) * confluent_poly(-(self.n - self.l - 1), 2 * self.l + 2, x)
        if include_norm:
            amp = self.norm * amp
        if amp.ndim == 0:
            return float(amp)
        return amp

    def probability_density(self) -> Callable:
        """P(r) = (N R(r))^2 r^2, the normalized radial probability density."""
        def p(r):
            r = np.asarray(r, dtype=float)
            out = (self.value(r) * r) ** 2
            if out.ndim == 0:
                return float(out)
            return out

        return p


def radial_value(n: int, l: int, z_eff: float, r, include_norm: bool = True):
    """Convenience wrapper around RadialOrbital.value."""
    return RadialOrbital(n, l, z_eff).value(r, include_norm=include_norm)
