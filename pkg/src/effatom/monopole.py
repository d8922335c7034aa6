"""Two-electron monopole integrals: exact quadrature vs the screening ansatz.

The "exact" element between subshells a and b is the spherically averaged
repulsion integral of unit-charge orbital densities,

    M(a, b) = integral P_a(r1) P_b(r2) / max(r1, r2) dr1 dr2,

evaluated by adaptive quadrature with the kernel split at r1 = r2.  The
closed hydrogenic fractions (5/8, 17/81, ...) serve as an independent check
of this quadrature path in the test suite; they are never substituted for it.

The approximate elements mirror the single-particle reduction used by the
screening model: kappa(n, l)/n^2 of the outer subshell for unequal shells,
and the symmetrized 5/16-weighted intra coefficient for equal shells.  Note
the grid convention: the inter-shell approximation carries the *outer
orbital's own* angular momentum, unlike the energy formula where the
screening electron's l enters.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

from .errors import NumericalError
from .orbitals import RadialOrbital
from .screening import DEFAULT_PARAMS, ScreeningParams, kappa_inter, kappa_intra
from .subshells import Subshell

_QUAD_LIMIT = 300


@dataclass(frozen=True)
class MatrixElementRecord:
    """One grid entry: exact and approximate elements and their gap."""

    a: Subshell
    b: Subshell
    exact: float
    approx: float

    @property
    def diff(self) -> float:
        return abs(self.exact - self.approx)


def _pair(a: Subshell, b: Subshell) -> tuple[Subshell, Subshell]:
    """Normalized ordering so the symmetric grid is stored once."""
    return (a, b) if a <= b else (b, a)


@lru_cache(maxsize=None)
def _exact_monopole_cached(a: Subshell, b: Subshell) -> float:
    pa = RadialOrbital(a.n, a.l, 1.0).probability_density()
    pb = RadialOrbital(b.n, b.l, 1.0).probability_density()
    upper_a = 60.0 * a.n
    upper_b = 60.0 * b.n

    def shielded(r1: float) -> float:
        # potential of density b felt at radius r1, kernel 1/r_>
        if r1 <= 0.0:
            return quad(lambda r: pb(r) / r, 1e-12, upper_b, limit=_QUAD_LIMIT)[0]
        inner, _ = quad(pb, 0.0, r1, limit=_QUAD_LIMIT, epsabs=1e-13)
        outer, _ = quad(lambda r: pb(r) / r, r1, upper_b, limit=_QUAD_LIMIT, epsabs=1e-13)
        return inner / r1 + outer

    value, err = quad(
        lambda r1: pa(r1) * shielded(r1),
        0.0,
        upper_a,
        limit=_QUAD_LIMIT,
        epsabs=1e-11,
        epsrel=1e-10,
    )
    if err > max(1e-9, 1e-8 * abs(value)):
        raise NumericalError(
            f"monopole quadrature for ({a.label},{b.label}) stalled at estimated error {err:.2e}"
        )
    return value


def exact_monopole(a: Subshell, b: Subshell) -> float:
    """Spherically averaged repulsion integral, unit effective charge."""
    return _exact_monopole_cached(*_pair(a, b))


def approx_inter(outer: Subshell, inner: Subshell, params: ScreeningParams = DEFAULT_PARAMS) -> float:
    """Single-particle reduction for unequal shells: kappa(n, l)/n^2 of the outer."""
    if inner.n >= outer.n:
        raise ValueError(
            f"inner shell must be deeper than outer, got inner={inner.label}, outer={outer.label}"
        )
    return kappa_inter(outer.n, outer.l, params) / outer.n**2


def approx_intra(a: Subshell, b: Subshell, params: ScreeningParams = DEFAULT_PARAMS) -> float:
    """Symmetrized same-shell reduction: 5/16 (kappa'_a + kappa'_b)/n^2."""
    if a.n != b.n:
        raise ValueError(f"intra form needs equal shells, got {a.label} and {b.label}")
    return params.intra_factor * (kappa_intra(a.n, a.l, params) + kappa_intra(b.n, b.l, params)) / a.n**2


def approx_element(a: Subshell, b: Subshell, params: ScreeningParams = DEFAULT_PARAMS) -> float:
    """Dispatch to the inter or intra approximation by shell comparison."""
    if a.n == b.n:
        return approx_intra(a, b, params)
    outer, inner = (a, b) if a.n > b.n else (b, a)
    return approx_inter(outer, inner, params)


def matrix_element(a: Subshell, b: Subshell, params: ScreeningParams = DEFAULT_PARAMS) -> MatrixElementRecord:
    a, b = _pair(a, b)
    return MatrixElementRecord(a=a, b=b, exact=exact_monopole(a, b), approx=approx_element(a, b, params))


def difference_grid(n_max: int, params: ScreeningParams = DEFAULT_PARAMS) -> list[MatrixElementRecord]:
    """All unique subshell pairs with n, n' <= n_max, in (a, b) order."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    shells = [Subshell(n, l) for n in range(1, n_max + 1) for l in range(n)]
    records = []
    for i, a in enumerate(shells):
        for b in shells[i:]:
            records.append(matrix_element(a, b, params))
    return records


def mean_abs_difference(records: list[MatrixElementRecord]) -> float:
    return statistics.fmean(r.diff for r in records)


def median_abs_difference(records: list[MatrixElementRecord]) -> float:
    return statistics.median(r.diff for r in records)


def calibrate_alpha() -> float:
    """Alpha that makes the (1s, 2s) approximation exact.

    The approximate element (1 - alpha/2)/4 is linear in alpha, so the
    calibration condition solves directly against the quadrature value.
    """
    m = exact_monopole(Subshell(1, 0), Subshell(2, 0))
    return 2.0 * (1.0 - 4.0 * m)
