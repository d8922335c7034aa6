"""Screened effective charges and the algebraic total energy.

Every electron in subshell (n, l) moves in a Coulomb field with an effective
charge Z_nl obtained from the bare nuclear charge by subtracting screening
contributions: each electron in a deeper shell (n' < n) takes away
``kappa_inter(n, l')`` and each other electron in the same shell takes away
``5/16 * kappa_intra(n, l'')``.  The inter-shell coefficient is evaluated
with the host's principal quantum number and the screening electron's
angular momentum; the screened electron excludes exactly one self term from
the intra-shell sum.  The total energy is then a plain sum of hydrogen-like
terms -g Z_nl^2 / (2 n^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnoccupiedSubshellError
from .subshells import Configuration, Subshell

#: Exact calibration of the inter-shell screening strength; 0.321 rounded.
ALPHA_EXACT = 26.0 / 81.0
#: Rounded value quoted alongside the model constants.
ALPHA_ROUNDED = 0.321
#: Calibrated against the heavy-atom binding asymptote.
BETA_DEFAULT = 0.412
#: Intra-shell mutual screening strength (the variational helium value).
INTRA_FACTOR = 5.0 / 16.0

#: CODATA hartree-to-electronvolt conversion.
HARTREE_EV = 27.211386


@dataclass(frozen=True)
class ScreeningParams:
    """Model constants.  ``intra_factor`` is fixed except for calibration studies."""

    alpha: float = ALPHA_EXACT
    beta: float = BETA_DEFAULT
    intra_factor: float = INTRA_FACTOR

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must lie in (0, 1), got {self.beta}")
        if self.intra_factor <= 0.0:
            raise ValueError(f"intra_factor must be positive, got {self.intra_factor}")

    @classmethod
    def rounded(cls) -> "ScreeningParams":
        """The three-digit preset (alpha = 0.321)."""
        return cls(alpha=ALPHA_ROUNDED)


DEFAULT_PARAMS = ScreeningParams()


def kappa_inter(n_host: int, l_inner: int, params: ScreeningParams = DEFAULT_PARAMS) -> float:
    """Screening coefficient exerted on an electron in shell ``n_host`` by one
    deeper electron of angular momentum ``l_inner``."""
    if n_host < 1:
        raise ValueError(f"n_host must be >= 1, got {n_host}")
    if l_inner < 0:
        raise ValueError(f"l_inner must be >= 0, got {l_inner}")
    return 1.0 - params.alpha / n_host - params.beta * l_inner * (l_inner + 1) / n_host**2


def kappa_intra(n: int, l: int, params: ScreeningParams = DEFAULT_PARAMS) -> float:
    """Coefficient weighting the mutual screening of same-shell electrons."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if l < 0 or l >= n:
        raise ValueError(f"l must satisfy 0 <= l < n, got l={l}, n={n}")
    return 1.0 + params.beta * l * (l + 1) / n**2


def effective_charge(
    z_nuclear: float,
    config: Configuration,
    key: Subshell,
    params: ScreeningParams = DEFAULT_PARAMS,
) -> float:
    """Effective charge seen by an electron in ``key``.

    May come out zero or negative for pathological configurations; callers
    decide how to flag that (see :func:`effective_charge_table`).
    """
    if config.occupancy(key) < 1:
        raise UnoccupiedSubshellError(f"subshell {key.label} is not occupied")
    n = key.n
    inner = 0.0
    intra = 0.0
    for other, g in config.items():
        if other.n < n:
            inner += g * kappa_inter(n, other.l, params)
        elif other.n == n:
            intra += g * kappa_intra(n, other.l, params)
    intra -= kappa_intra(n, key.l, params)
    return z_nuclear - inner - params.intra_factor * intra


@dataclass(frozen=True)
class EffectiveChargeTable:
    """Per-subshell effective charges plus warnings for unbound entries."""

    charges: dict[Subshell, float]
    warnings: tuple[str, ...] = ()

    def __getitem__(self, key: Subshell) -> float:
        return self.charges[key]


def effective_charge_table(
    z_nuclear: float,
    config: Configuration,
    params: ScreeningParams = DEFAULT_PARAMS,
) -> EffectiveChargeTable:
    """Effective charges for every occupied subshell.

    Non-positive charges are reported via warnings, never clamped, so a
    configuration search can penalise them explicitly.
    """
    charges: dict[Subshell, float] = {}
    warnings: list[str] = []
    for key in config:
        z = effective_charge(z_nuclear, config, key, params)
        charges[key] = z
        if z <= 0.0:
            warnings.append(f"unbound subshell {key.label}: effective charge {z:.6g}")
    return EffectiveChargeTable(charges=charges, warnings=tuple(warnings))


@dataclass(frozen=True)
class EnergyBreakdown:
    """Total energy split per subshell, in hartree.

    ``total`` is negative for bound atoms, ``binding`` is its positive
    counterpart (the convention used for tabulated binding energies).
    """

    per_subshell: dict[Subshell, float]
    total: float
    binding: float
    warnings: tuple[str, ...] = ()


def total_energy(
    z_nuclear: float,
    config: Configuration,
    params: ScreeningParams = DEFAULT_PARAMS,
) -> EnergyBreakdown:
    """Algebraic total energy of a configuration.

    Each occupied subshell contributes -g * Z_nl^2 / (2 n^2) hartree with the
    screened charge from :func:`effective_charge`.
    """
    table = effective_charge_table(z_nuclear, config, params)
    per: dict[Subshell, float] = {}
    for key, g in config.items():
        z = table.charges[key]
        per[key] = -g * z * z / (2.0 * key.n**2)
    total = sum(per.values())
    return EnergyBreakdown(per_subshell=per, total=total, binding=-total, warnings=table.warnings)


def binding_energy(
    z_nuclear: float,
    config: Configuration,
    params: ScreeningParams = DEFAULT_PARAMS,
) -> float:
    """Positive binding energy in hartree (shortcut around total_energy)."""
    return total_energy(z_nuclear, config, params).binding
