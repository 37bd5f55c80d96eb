"""Candidate modular data (S, T), its JSON format, and the built-in catalog."""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .cycmat import CycMatrix, RelationError, classify
from .cyclotomic import CycNumber, GaloisIndex, apply_galois, units
from .verdicts import CheckVerdict, Status

__all__ = [
    "CATALOG_NAMES",
    "CheckConfig",
    "ModularData",
    "ModularDataError",
    "catalog",
    "conductor",
    "dumps",
    "field_containment",
    "load",
    "parse",
    "serialize",
]


class ModularDataError(ValueError):
    """Malformed input document; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class ModularData:
    """Modular data with T = diag(zeta_M ** e_p) stored by exponents.

    Label 0 is the vacuum.  Derived matrices are computed lazily and cached.
    """

    name: str
    rank: int
    root_order: int
    t_exponents: tuple[int, ...]
    s: CycMatrix

    def __post_init__(self):
        M = self.root_order
        if M < 1:
            raise ModularDataError("root_order", "must be >= 1")
        if self.rank < 1:
            raise ModularDataError("rank", "must be >= 1")
        if len(self.t_exponents) != self.rank:
            raise ModularDataError("t_exponents", f"length {len(self.t_exponents)} != rank {self.rank}")
        if self.s.dim != self.rank:
            raise ModularDataError("s_matrix", f"dimension {self.s.dim} != rank {self.rank}")
        if M % self.s.root_order:
            raise ModularDataError("s_matrix", f"entries need order {self.s.root_order}, not within Q(zeta_{M})")
        object.__setattr__(self, "t_exponents", tuple(int(e) % M for e in self.t_exponents))
        object.__setattr__(self, "s", self.s.lift(M))

    def t_exponents_power(self, k: int) -> tuple[int, ...]:
        """Exponents of T^k (any integer k)."""
        M = self.root_order
        return tuple((k * e) % M for e in self.t_exponents)

    def t_matrix(self, k: int = 1) -> CycMatrix:
        return CycMatrix.diagonal_roots(self.t_exponents_power(k), self.root_order)

    @cached_property
    def conductor(self) -> int:
        return conductor(self)

    @cached_property
    def charge_conjugation(self) -> CycMatrix:
        return self.s @ self.s

    @cached_property
    def s_cubed(self) -> CycMatrix:
        return self.charge_conjugation @ self.s

    @cached_property
    def relations(self) -> dict[str, bool]:
        """Whether S^4 = 1 and STS = T^-1 S T^-1 hold exactly."""
        s4 = classify(self.s_cubed @ self.s).is_identity
        e = self.t_exponents
        neg = [-x for x in e]
        lhs = self.s.scale_columns(e) @ self.s
        rhs = self.s.scale_rows(neg).scale_columns(neg)
        return {"s_fourth_power": s4, "modular_relation": lhs == rhs}

    def require_relations(self) -> None:
        bad = [k for k, ok in self.relations.items() if not ok]
        if bad:
            raise RelationError(f"{self.name}: relations fail: {', '.join(bad)}")

    @property
    def s_inverse(self) -> CycMatrix:
        """S^3; only meaningful when S^4 = 1."""
        return self.s_cubed

    def with_s(self, s: CycMatrix, name: Optional[str] = None) -> "ModularData":
        return ModularData(name or self.name, self.rank, self.root_order, self.t_exponents, s)

    def with_t(self, t_exponents: Sequence[int], name: Optional[str] = None) -> "ModularData":
        return ModularData(name or self.name, self.rank, self.root_order, tuple(t_exponents), self.s)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModularData):
            return NotImplemented
        return (
            self.name == other.name
            and self.rank == other.rank
            and self.root_order == other.root_order
            and self.t_exponents == other.t_exponents
            and self.s == other.s
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class CheckConfig:
    genus_max: int = 5
    samples: int = 100
    seed: int = 0
    positivity_tolerance: float = 1e-9
    checks: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.genus_max < 0:
            raise ValueError("genus_max must be >= 0")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.positivity_tolerance > 0:
            raise ValueError("positivity_tolerance must be > 0")


def conductor(md: ModularData) -> int:
    """Order of T: lcm over p of the order of zeta_M ** e_p."""
    M = md.root_order
    return math.lcm(1, *(M // math.gcd(M, e) for e in md.t_exponents))


def field_containment(md: ModularData) -> CheckVerdict:
    """All S entries lie in Q(zeta_N), N the conductor."""
    t0 = time.perf_counter()
    M, N = md.root_order, md.conductor
    fixers = [l for l in units(M) if (l - 1) % N == 0 and l != 1]
    for l in fixers:
        g = GaloisIndex(l, M)
        for i, row in enumerate(md.s.rows):
            for j, x in enumerate(row):
                y = apply_galois(x, g)
                if y != x:
                    return CheckVerdict(
                        "field_containment",
                        Status.FAIL,
                        {"entry": [i, j], "l": l, "value": x.to_triples(), "image": y.to_triples(),
                         "conductor": N, "root_order": M},
                        time.perf_counter() - t0,
                    )
    return CheckVerdict("field_containment", Status.PASS, None, time.perf_counter() - t0)


# serialization


def _entry(raw: Any, path: str, M: int) -> CycNumber:
    if not isinstance(raw, list):
        raise ModularDataError(path, "entry must be a list of [num, den, exp] triples")
    triples = []
    for k, t in enumerate(raw):
        p = f"{path}[{k}]"
        if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, int) and not isinstance(x, bool) for x in t)):
            raise ModularDataError(p, "triple must be three integers [num, den, exp]")
        if t[1] == 0:
            raise ModularDataError(p, "zero denominator")
        triples.append(t)
    return CycNumber.from_triples(triples, M)


def parse(document: Union[str, bytes, dict]) -> ModularData:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ModularDataError("$", f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise ModularDataError("$", "document must be a JSON object")
    for key in ("name", "rank", "root_order", "t_exponents", "s_matrix"):
        if key not in document:
            raise ModularDataError(key, "missing field")
    name, rank, M = document["name"], document["rank"], document["root_order"]
    if not isinstance(name, str):
        raise ModularDataError("name", "must be a string")
    for key, val in (("rank", rank), ("root_order", M)):
        if not isinstance(val, int) or isinstance(val, bool):
            raise ModularDataError(key, "must be an integer")
    if M < 1:
        raise ModularDataError("root_order", "must be >= 1")
    if rank < 1:
        raise ModularDataError("rank", "must be >= 1")
    t = document["t_exponents"]
    if not isinstance(t, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in t):
        raise ModularDataError("t_exponents", "must be a list of integers")
    if len(t) != rank:
        raise ModularDataError("t_exponents", f"length {len(t)} != rank {rank}")
    rows = document["s_matrix"]
    if not isinstance(rows, list) or len(rows) != rank:
        raise ModularDataError("s_matrix", f"must have {rank} rows")
    entries = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != rank:
            raise ModularDataError(f"s_matrix[{i}]", f"non-square: expected {rank} entries")
        entries.append([_entry(x, f"s_matrix[{i}][{j}]", M) for j, x in enumerate(row)])
    return ModularData(name, rank, M, tuple(t), CycMatrix(entries, M))


def serialize(md: ModularData) -> dict[str, Any]:
    return {
        "name": md.name,
        "rank": md.rank,
        "root_order": md.root_order,
        "t_exponents": list(md.t_exponents),
        "s_matrix": [[x.to_triples() for x in row] for row in md.s.rows],
    }


def dumps(md: ModularData, indent: Optional[int] = None) -> str:
    return json.dumps(serialize(md), indent=indent)


def load(source: str) -> ModularData:
    """Load from a JSON file path, or ``@name`` for a catalog entry."""
    if source.startswith("@"):
        return catalog(source[1:])
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ModularDataError("source", f"cannot read {source}: {exc.strerror}") from None
    return parse(text)


# catalog


def _z(M: int, k: int = 1) -> CycNumber:
    return CycNumber.root(M, k)


def _trivial() -> ModularData:
    return ModularData("trivial", 1, 1, (0,), CycMatrix([[1]], 1))


def _semion() -> ModularData:
    # T = zeta_24^-1 diag(1, i); 1/sqrt2 = (zeta_8 - zeta_8^3)/2
    M = 24
    r = (_z(8) - _z(8, 3)) / 2
    return ModularData("semion", 2, M, (-1, -1 + 6), CycMatrix([[r, r], [r, -r]], M))


def _fibonacci() -> ModularData:
    # T = zeta_60^-7 diag(1, zeta_5^2); phi = 1 + zeta_5 + zeta_5^4,
    # sqrt(2 + phi) = 2 sin(2pi/5) = -i (zeta_5 - zeta_5^4)
    M = 60
    golden = 1 + _z(5) + _z(5, 4)
    dim = -_z(4) * (_z(5) - _z(5, 4))
    inv = dim.inverse()
    s = CycMatrix([[inv, golden * inv], [golden * inv, -inv]], M)
    return ModularData("fibonacci", 2, M, (-7, -7 + 24), s)


def _ising() -> ModularData:
    # T = zeta_48^-1 diag(1, zeta_16, -1); sqrt2 = zeta_8 + zeta_8^-1
    M = 48
    half = Fraction(1, 2)
    r2 = _z(8) + _z(8, 7)
    s = CycMatrix(
        [
            [half, r2 * half, half],
            [r2 * half, 0, -r2 * half],
            [half, -r2 * half, half],
        ],
        M,
    )
    return ModularData("ising", 3, M, (-1, -1 + 3, -1 + 24), s)


_BUILDERS = {
    "trivial": _trivial,
    "semion": _semion,
    "fibonacci": _fibonacci,
    "ising": _ising,
}
CATALOG_NAMES = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def catalog(name: str) -> ModularData:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ModularDataError("catalog", f"unknown entry {name!r}; available: {', '.join(CATALOG_NAMES)}") from None
    return builder()
