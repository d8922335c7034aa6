"""Subshell bookkeeping: (n, l) keys, electron configurations, filling order.

A configuration is a map from (n, l) subshells to integer occupancies.  Spin
and magnetic quantum numbers never appear explicitly; they only enter through
the subshell capacity 2(2l + 1).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import InvalidConfigurationError

L_SYMBOLS = "spdfghi"
L_OF_SYMBOL = {sym: l for l, sym in enumerate(L_SYMBOLS)}

_TOKEN_RE = re.compile(r"^(\d+)([a-z])(\d*)$")


class Subshell(NamedTuple):
    """An (n, l) subshell.  Tuple order gives the natural (n, l) sort."""

    n: int
    l: int

    @property
    def capacity(self) -> int:
        return 2 * (2 * self.l + 1)

    @property
    def label(self) -> str:
        return f"{self.n}{L_SYMBOLS[self.l]}"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.label


def subshell(n: int, l: int) -> Subshell:
    """Validated Subshell constructor: requires n >= 1 and 0 <= l < n."""
    if n < 1:
        raise InvalidConfigurationError(f"principal quantum number must be >= 1, got {n}")
    if l < 0 or l >= n:
        raise InvalidConfigurationError(f"angular momentum must satisfy 0 <= l < n, got l={l}, n={n}")
    return Subshell(n, l)


def parse_subshell(token: str) -> Subshell:
    """Parse a label like ``3d`` into a Subshell."""
    token = token.strip().lower()
    if len(token) < 2 or token[-1] not in L_OF_SYMBOL:
        raise InvalidConfigurationError(f"cannot parse subshell label {token!r}")
    try:
        n = int(token[:-1])
    except ValueError as exc:
        raise InvalidConfigurationError(f"cannot parse subshell label {token!r}") from exc
    return subshell(n, L_OF_SYMBOL[token[-1]])


def madelung_order(n_cap: int = 7, l_cap: int = 4) -> list[Subshell]:
    """Subshells sorted by increasing n + l, ties broken by increasing n."""
    shells = [
        Subshell(n, l)
        for n in range(1, n_cap + 1)
        for l in range(0, min(n, l_cap + 1))
    ]
    shells.sort(key=lambda s: (s.n + s.l, s.n))
    return shells


class Configuration(Mapping[Subshell, int]):
    """Immutable occupancy map with validated electron counts."""

    __slots__ = ("_occ", "_hash")

    def __init__(self, occupancy: Mapping[Subshell, int] | Iterable[tuple[Subshell, int]]):
        items = dict(occupancy)
        occ: dict[Subshell, int] = {}
        for key, g in items.items():
            if not isinstance(key, Subshell):
                key = Subshell(*key)
            sub = subshell(key.n, key.l)
            if not isinstance(g, int):
                raise InvalidConfigurationError(f"occupancy of {sub.label} must be an integer, got {g!r}")
            if g < 0 or g > sub.capacity:
                raise InvalidConfigurationError(
                    f"occupancy of {sub.label} must lie in [0, {sub.capacity}], got {g}"
                )
            if g > 0:
                occ[sub] = g
        self._occ = dict(sorted(occ.items()))
        self._hash: int | None = None

    # -- Mapping interface -------------------------------------------------
    def __getitem__(self, key: Subshell) -> int:
        return self._occ[key]

    def __iter__(self) -> Iterator[Subshell]:
        return iter(self._occ)

    def __len__(self) -> int:
        return len(self._occ)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._occ.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Configuration):
            return self._occ == other._occ
        return NotImplemented

    def __repr__(self) -> str:
        return f"Configuration({self.to_string()!r})"

    # -- helpers -----------------------------------------------------------
    @property
    def total_electrons(self) -> int:
        return sum(self._occ.values())

    def occupancy(self, key: Subshell) -> int:
        return self._occ.get(key, 0)

    def with_occupancy(self, key: Subshell, g: int) -> "Configuration":
        occ = dict(self._occ)
        occ[key] = g
        return Configuration(occ)

    def removed(self, key: Subshell) -> "Configuration":
        """One electron removed from ``key``; occupancy must be positive."""
        from .errors import UnoccupiedSubshellError

        g = self._occ.get(key, 0)
        if g < 1:
            raise UnoccupiedSubshellError(f"subshell {key.label} is not occupied")
        return self.with_occupancy(key, g - 1)

    def added(self, key: Subshell) -> "Configuration":
        return self.with_occupancy(key, self._occ.get(key, 0) + 1)

    def to_string(self) -> str:
        return " ".join(f"{s.label}{g}" for s, g in self._occ.items())

    @classmethod
    def from_string(cls, text: str) -> "Configuration":
        """Parse ``1s2 2s2 2p6`` style strings.  A missing count means 1."""
        occ: dict[Subshell, int] = {}
        for token in text.split():
            m = _TOKEN_RE.match(token.strip().lower())
            if m is None or m.group(2) not in L_OF_SYMBOL:
                raise InvalidConfigurationError(f"cannot parse configuration token {token!r}")
            sub = subshell(int(m.group(1)), L_OF_SYMBOL[m.group(2)])
            g = int(m.group(3)) if m.group(3) else 1
            occ[sub] = occ.get(sub, 0) + g
        return cls(occ)
