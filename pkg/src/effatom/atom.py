"""Atom construction, configuration search, and ionization potentials.

The ground-state search minimizes the algebraic total energy over occupancy
vectors.  Deeper shells never feel outer ones, and a future shell n' sees the
shells below it only through two aggregates: the inner electron count U and
the occupancy-weighted sum V = sum g l(l+1).  The exhaustive mode exploits
this by enumerating shell blocks with state merging on (U, V) plus an
admissible bound for pruning, which keeps the enumeration exact while
avoiding the combinatorial blowup of raw occupancy vectors.

Ionization potentials follow the frozen-configuration convention: the ion
keeps the neutral occupancies minus one electron, with no re-relaxation
(an explicit ``relax`` flag re-minimizes for comparison studies).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InfeasibleSearchError, UnoccupiedSubshellError
from .screening import (
    DEFAULT_PARAMS,
    HARTREE_EV,
    EffectiveChargeTable,
    EnergyBreakdown,
    ScreeningParams,
    effective_charge_table,
    total_energy,
)
from .subshells import Configuration, Subshell, madelung_order

_TIE_TOL = 1e-10


@dataclass(frozen=True)
class AtomModel:
    """A fully evaluated atom: configuration, charges, energy."""

    z_nuclear: float
    config: Configuration
    charges: EffectiveChargeTable
    energy: EnergyBreakdown
    params: ScreeningParams
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class SearchSpec:
    """Ground-state search request; ``n_electrons=None`` means neutral."""

    z_nuclear: float
    n_electrons: int | None = None
    n_cap: int = 7
    l_cap: int = 4
    mode: str = "exhaustive"

    def __post_init__(self) -> None:
        if self.n_cap < 1:
            raise ValueError(f"n_cap must be >= 1, got {self.n_cap}")
        if self.l_cap < 0:
            raise ValueError(f"l_cap must be >= 0, got {self.l_cap}")
        if self.mode not in ("exhaustive", "local"):
            raise ValueError(f"mode must be 'exhaustive' or 'local', got {self.mode!r}")
        if self.n_electrons is not None and self.n_electrons < 0:
            raise ValueError(f"n_electrons must be >= 0, got {self.n_electrons}")

    @property
    def electrons(self) -> int:
        return int(round(self.z_nuclear)) if self.n_electrons is None else self.n_electrons


@dataclass(frozen=True)
class IonizationRecord:
    """Energy to remove one electron from ``shell`` at frozen configuration."""

    shell: Subshell
    ip_hartree: float
    ip_ev: float


def make_atom(
    z_nuclear: float,
    config: Configuration,
    params: ScreeningParams = DEFAULT_PARAMS,
    notes: tuple[str, ...] = (),
) -> AtomModel:
    charges = effective_charge_table(z_nuclear, config, params)
    energy = total_energy(z_nuclear, config, params)
    return AtomModel(
        z_nuclear=z_nuclear,
        config=config,
        charges=charges,
        energy=energy,
        params=params,
        notes=notes + charges.warnings,
    )


def aufbau_configuration(n_electrons: int, n_cap: int = 7, l_cap: int = 4) -> Configuration:
    """Fill subshells by increasing n + l (ties by n) up to capacity."""
    if n_electrons < 0:
        raise ValueError(f"n_electrons must be >= 0, got {n_electrons}")
    occ: dict[Subshell, int] = {}
    left = n_electrons
    for sub in madelung_order(n_cap, l_cap):
        if left <= 0:
            break
        take = min(left, sub.capacity)
        occ[sub] = take
        left -= take
    if left > 0:
        raise InfeasibleSearchError(
            f"{n_electrons} electrons exceed the capacity of shells with n <= {n_cap}, l <= {l_cap}"
        )
    return Configuration(occ)


# ---------------------------------------------------------------------------
# fast energy kernel shared by both search modes
# ---------------------------------------------------------------------------

def _fast_binding(z: float, occ: dict[Subshell, int], params: ScreeningParams) -> float:
    """Binding energy on a plain dict, bypassing Configuration overhead.

    Same algebra as screening.total_energy; equality is pinned by tests.
    """
    alpha, beta, f = params.alpha, params.beta, params.intra_factor
    by_shell: dict[int, list[tuple[int, int]]] = {}
    for sub, g in occ.items():
        if g:
            by_shell.setdefault(sub.n, []).append((sub.l, g))
    u = 0.0
    v = 0.0
    binding = 0.0
    for n in sorted(by_shell):
        lgs = by_shell[n]
        a = z - ((1.0 - alpha / n) * u - beta * v / (n * n))
        t_sum = 0.0
        for l, g in lgs:
            t_sum += g * (1.0 + beta * l * (l + 1) / (n * n))
        for l, g in lgs:
            kp = 1.0 + beta * l * (l + 1) / (n * n)
            z_nl = a - f * (t_sum - kp)
            binding += g * z_nl * z_nl / (2.0 * n * n)
            u += g
            v += g * l * (l + 1)
    return binding


def _shell_binding(a: float, n: int, split: tuple[int, ...], beta: float, f: float) -> float:
    """Binding contribution of one shell given the unscreened charge ``a``."""
    t_sum = 0.0
    for l, g in enumerate(split):
        if g:
            t_sum += g * (1.0 + beta * l * (l + 1) / (n * n))
    binding = 0.0
    for l, g in enumerate(split):
        if g:
            kp = 1.0 + beta * l * (l + 1) / (n * n)
            z_nl = a - f * (t_sum - kp)
            binding += g * z_nl * z_nl / (2.0 * n * n)
    return binding


@lru_cache(maxsize=None)
def _shell_splits(n: int, l_cap: int) -> dict[int, list[tuple[tuple[int, ...], int]]]:
    """All occupancy splits of shell n, grouped by electron count.

    Each entry is (g_by_l, w) with w = sum g l(l+1).
    """
    caps = [2 * (2 * l + 1) for l in range(min(n, l_cap + 1))]
    grouped: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for split in itertools.product(*(range(c + 1) for c in caps)):
        t = sum(split)
        w = sum(g * l * (l + 1) for l, g in enumerate(split))
        grouped.setdefault(t, []).append((split, w))
    return grouped


def _shell_capacity(n: int, l_cap: int) -> int:
    return sum(2 * (2 * l + 1) for l in range(min(n, l_cap + 1)))


# ---------------------------------------------------------------------------
# local search
# ---------------------------------------------------------------------------

def _local_minimize(
    z: float,
    start: dict[Subshell, int],
    n_cap: int,
    l_cap: int,
    params: ScreeningParams,
) -> tuple[dict[Subshell, int], float]:
    """Steepest-descent single-electron moves until no move improves."""
    subshells = [Subshell(n, l) for n in range(1, n_cap + 1) for l in range(min(n, l_cap + 1))]
    occ = {k: g for k, g in start.items() if g}
    best = _fast_binding(z, occ, params)
    improved = True
    while improved:
        improved = False
        best_move: tuple[float, Subshell, Subshell] | None = None
        for src, g in occ.items():
            if g < 1:
                continue
            for dst in subshells:
                if dst == src or occ.get(dst, 0) >= dst.capacity:
                    continue
                occ[src] -= 1
                occ[dst] = occ.get(dst, 0) + 1
                b = _fast_binding(z, occ, params)
                occ[dst] -= 1
                occ[src] += 1
                if b > best + 1e-12 and (best_move is None or b > best_move[0]):
                    best_move = (b, src, dst)
        if best_move is not None:
            b, src, dst = best_move
            occ[src] -= 1
            if occ[src] == 0:
                del occ[src]
            occ[dst] = occ.get(dst, 0) + 1
            best = b
            improved = True
    return occ, best


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

def _future_bound(
    z: float,
    n_electrons: int,
    used: int,
    v: float,
    next_shell: int,
    n_cap: int,
    l_cap: int,
    params: ScreeningParams,
) -> float | None:
    """Upper bound on the binding the remaining electrons can still add.

    Screening only ever lowers an effective charge below the value set by
    the already-placed inner electrons, so filling lowest shells first at
    that unscreened charge is admissible.  The floor term guards anionic
    cases where charges can go negative.
    """
    remaining = n_electrons - used
    if remaining <= 0:
        return 0.0
    alpha, beta = params.alpha, params.beta
    floor = z - (n_electrons - 1)
    bound = 0.0
    for n in range(next_shell, n_cap + 1):
        a = z - ((1.0 - alpha / n) * used - beta * v / (n * n))
        per = max(a, 0.0) ** 2
        if floor < 0.0:
            per = max(per, floor * floor)
        take = min(remaining, _shell_capacity(n, l_cap))
        bound += take * per / (2.0 * n * n)
        remaining -= take
        if remaining == 0:
            return bound
    return None  # does not fit


def _madelung_key(occ: dict[Subshell, int], order: list[Subshell]) -> tuple[int, ...]:
    return tuple(occ.get(sub, 0) for sub in order)


def _exhaustive_minimize(
    z: float,
    n_electrons: int,
    n_cap: int,
    l_cap: int,
    params: ScreeningParams,
) -> tuple[dict[Subshell, int], float, list[dict[Subshell, int]]]:
    """Exact minimum over all occupancy vectors; returns (occ, binding, ties)."""
    order = madelung_order(n_cap, l_cap)
    beta, f = params.beta, params.intra_factor

    seed_occ, seed_binding = _local_minimize(
        z, dict(aufbau_configuration(n_electrons, n_cap, l_cap)), n_cap, l_cap, params
    )
    best_binding = seed_binding

    # state: (used, V) -> (binding_so_far, occ_dict, madelung_key)
    states: dict[tuple[int, int], tuple[float, dict[Subshell, int], tuple[int, ...]]] = {
        (0, 0): (0.0, {}, _madelung_key({}, order))
    }
    for n in range(1, n_cap + 1):
        grouped = _shell_splits(n, l_cap)
        tail_capacity = sum(_shell_capacity(m, l_cap) for m in range(n + 1, n_cap + 1))
        new_states: dict[tuple[int, int], tuple[float, dict[Subshell, int], tuple[int, ...]]] = {}
        for (used, v), (acc, occ, _key) in states.items():
            remaining = n_electrons - used
            opt = _future_bound(z, n_electrons, used, v, n, n_cap, l_cap, params)
            if opt is None or acc + opt < best_binding - 1e-9:
                continue
            a = z - ((1.0 - params.alpha / n) * used - beta * v / (n * n))
            for t in range(0, min(remaining, _shell_capacity(n, l_cap)) + 1):
                if remaining - t > tail_capacity:
                    continue  # cannot place the rest later
                for split, w in grouped.get(t, ()):
                    nb = acc + _shell_binding(a, n, split, beta, f)
                    used2, v2 = used + t, v + w
                    opt2 = _future_bound(z, n_electrons, used2, v2, n + 1, n_cap, l_cap, params)
                    if opt2 is None or nb + opt2 < best_binding - 1e-9:
                        continue
                    occ2 = dict(occ)
                    for l, g in enumerate(split):
                        if g:
                            occ2[Subshell(n, l)] = g
                    key2 = _madelung_key(occ2, order)
                    state = (used2, v2)
                    held = new_states.get(state)
                    if (
                        held is None
                        or nb > held[0] + _TIE_TOL
                        or (abs(nb - held[0]) <= _TIE_TOL and key2 > held[2])
                    ):
                        new_states[state] = (nb, occ2, key2)
                    if used2 == n_electrons and nb > best_binding:
                        best_binding = nb
        states = new_states
        if not states:
            break

    terminals = [
        (acc, occ, key)
        for (used, _v), (acc, occ, key) in states.items()
        if used == n_electrons
    ]
    if not terminals:
        raise InfeasibleSearchError(
            f"{n_electrons} electrons exceed the capacity of shells with n <= {n_cap}, l <= {l_cap}"
        )
    top = max(acc for acc, _occ, _key in terminals)
    tied = sorted(
        (t for t in terminals if top - t[0] <= _TIE_TOL),
        key=lambda t: t[2],
        reverse=True,
    )
    winner = tied[0]
    others = [occ for _acc, occ, _key in tied[1:]]
    return winner[1], winner[0], others


def ground_state(spec: SearchSpec, params: ScreeningParams = DEFAULT_PARAMS) -> AtomModel:
    """Configuration minimizing the total energy, as an evaluated AtomModel.

    Exhaustive mode is an exact enumeration (the reference); local mode runs
    steepest-descent single-electron moves from the aufbau configuration.
    Exact ties are broken toward the aufbau filling order and reported in
    the model notes.
    """
    n_electrons = spec.electrons
    notes: list[str] = []
    if n_electrons == 0:
        return make_atom(spec.z_nuclear, Configuration({}), params)
    capacity = sum(_shell_capacity(n, spec.l_cap) for n in range(1, spec.n_cap + 1))
    if n_electrons > capacity:
        raise InfeasibleSearchError(
            f"{n_electrons} electrons exceed the capacity {capacity} of shells "
            f"with n <= {spec.n_cap}, l <= {spec.l_cap}"
        )
    if spec.mode == "local":
        occ, _binding = _local_minimize(
            spec.z_nuclear,
            dict(aufbau_configuration(n_electrons, spec.n_cap, spec.l_cap)),
            spec.n_cap,
            spec.l_cap,
            params,
        )
    else:
        occ, _binding, ties = _exhaustive_minimize(
            spec.z_nuclear, n_electrons, spec.n_cap, spec.l_cap, params
        )
        for other in ties:
            notes.append(
                "degenerate minimum: " + Configuration(other).to_string()
            )
    return make_atom(spec.z_nuclear, Configuration(occ), params, notes=tuple(notes))


# ---------------------------------------------------------------------------
# ionization
# ---------------------------------------------------------------------------

def ionization_potential(
    z_nuclear: float,
    config: Configuration,
    shell: Subshell,
    params: ScreeningParams = DEFAULT_PARAMS,
    relax: bool = False,
) -> IonizationRecord:
    """IP for removing one ``shell`` electron: E(ion) - E(neutral).

    The default keeps the ion frozen at the decremented configuration.  With
    ``relax=True`` the ion is re-minimized by local search before comparing.
    """
    if config.occupancy(shell) < 1:
        raise UnoccupiedSubshellError(f"subshell {shell.label} is not occupied")
    ion = config.removed(shell)
    if relax and ion.total_electrons > 0:
        occ, _b = _local_minimize(z_nuclear, dict(ion), 7, 4, params)
        ion = Configuration(occ)
    e_neutral = total_energy(z_nuclear, config, params).total
    e_ion = total_energy(z_nuclear, ion, params).total if len(ion) else 0.0
    ip = e_ion - e_neutral
    return IonizationRecord(shell=shell, ip_hartree=ip, ip_ev=ip * HARTREE_EV)


def ip_table(z: int, params: ScreeningParams = DEFAULT_PARAMS) -> list[IonizationRecord]:
    """IPs for the tabulated shells of element ``z`` at its reference configuration."""
    from .refdata import ip_shells, reference_configuration

    config = reference_configuration(z)
    return [ionization_potential(float(z), config, shell, params) for shell in ip_shells(z)]
