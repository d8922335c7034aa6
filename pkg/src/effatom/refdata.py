"""Bundled reference data: ground configurations, tabulated ionization
shells, and the transcribed Hartree-Fock comparison values.

The Hartree-Fock numbers are a transcription of published reference results;
the tool never computes or fabricates them.  Reference rows follow a simple
(Z, label, value, unit) schema so external files with the same header can be
ingested in their place.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from .subshells import Configuration, Subshell, parse_subshell

VALID_UNITS = ("hartree", "eV", "dimensionless")

Z_MIN, Z_MAX = 1, 60


@dataclass(frozen=True)
class ReferenceRow:
    z: int
    label: str
    value: float
    unit: str


@dataclass(frozen=True)
class ReferenceDataset:
    """Rows keyed by (Z, label); duplicate keys are rejected on load."""

    rows: tuple[ReferenceRow, ...]

    def __post_init__(self) -> None:
        seen = set()
        for row in self.rows:
            key = (row.z, row.label)
            if key in seen:
                raise ValueError(f"duplicate reference row {key}")
            if row.unit not in VALID_UNITS:
                raise ValueError(f"unknown unit {row.unit!r} in row {key}")
            seen.add(key)

    def get(self, z: int, label: str) -> float | None:
        for row in self.rows:
            if row.z == z and row.label == label:
                return row.value
        return None

    @classmethod
    def from_csv(cls, path: str | Path) -> "ReferenceDataset":
        with open(path, newline="") as fh:
            return cls(rows=tuple(_parse_rows(csv.DictReader(fh))))


def _parse_rows(reader: Iterable[dict]) -> Iterable[ReferenceRow]:
    for rec in reader:
        yield ReferenceRow(
            z=int(rec["Z"]), label=rec["label"].strip(),
            value=float(rec["value"]), unit=rec["unit"].strip(),
        )


def _data_text(name: str) -> str:
    return resources.files("effatom.data").joinpath(name).read_text()


@lru_cache(maxsize=1)
def _configurations() -> dict[int, Configuration]:
    table: dict[int, Configuration] = {}
    for line in _data_text("ground_configs.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        z_text, _, config_text = line.partition(" ")
        table[int(z_text)] = Configuration.from_string(config_text)
    return table


@lru_cache(maxsize=1)
def _ip_shells() -> dict[int, tuple[Subshell, ...]]:
    table: dict[int, tuple[Subshell, ...]] = {}
    for line in _data_text("ip_shells.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        table[int(parts[0])] = tuple(parse_subshell(tok) for tok in parts[1:])
    return table


@lru_cache(maxsize=1)
def hf_reference() -> ReferenceDataset:
    """The bundled Hartree-Fock transcription (binding in hartree, IPs in eV)."""
    with resources.files("effatom.data").joinpath("hf_reference.csv").open() as fh:
        return ReferenceDataset(rows=tuple(_parse_rows(csv.DictReader(fh))))


def reference_configuration(z: int) -> Configuration:
    """Tabulated ground configuration for element ``z`` (1 <= z <= 60)."""
    if z not in _configurations():
        raise ValueError(f"no reference configuration for Z={z}; supported range {Z_MIN}..{Z_MAX}")
    return _configurations()[z]


def ip_shells(z: int) -> tuple[Subshell, ...]:
    """Shells whose ionization potentials are tabulated for element ``z``."""
    if z not in _ip_shells():
        raise ValueError(f"no tabulated ionization shells for Z={z}; supported range {Z_MIN}..{Z_MAX}")
    return _ip_shells()[z]
