"""The modular group SL(2, Z): elements, generator words, congruence subgroups."""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Union

from .cycmat import CycMatrix

if TYPE_CHECKING:
    from .modular_data import ModularData

__all__ = [
    "GammaKH",
    "GenWord",
    "PrincipalCongruence",
    "S",
    "SL2Elem",
    "SamplingError",
    "SubgroupSpec",
    "T",
    "decompose",
    "evaluate",
    "evaluate_word",
    "is_member",
    "parse_element",
    "random_element",
    "sample_member",
]


@dataclass(frozen=True)
class SL2Elem:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of [[{self.a},{self.b}],[{self.c},{self.d}]] is not 1")

    def __matmul__(self, o: "SL2Elem") -> "SL2Elem":
        return SL2Elem(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> "SL2Elem":
        return SL2Elem(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "SL2Elem":
        base = self if k >= 0 else self.inverse()
        result = SL2Elem(1, 0, 0, 1)
        for _ in range(abs(k)):
            result = result @ base
        return result

    def to_list(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = SL2Elem(1, 0, 0, 1)
S = SL2Elem(0, -1, 1, 0)
T = SL2Elem(1, 1, 0, 1)


def _t(k: int) -> SL2Elem:
    return SL2Elem(1, k, 0, 1)


Letter = Union[tuple[str], tuple[str, int]]


@dataclass(frozen=True)
class GenWord:
    """Product of letters ``("S",)`` and ``("T", k)``, read left to right.

    ``negated`` multiplies the whole word by -1 = S^2.
    """

    letters: tuple = ()
    negated: bool = False

    def to_matrix(self) -> SL2Elem:
        out = IDENTITY
        for letter in self.letters:
            out = out @ (S if letter[0] == "S" else _t(letter[1]))
        if self.negated:
            out = SL2Elem(-out.a, -out.b, -out.c, -out.d)
        return out

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        toks = ["S" if l[0] == "S" else ("T" if l[1] == 1 else f"T^{l[1]}") for l in self.letters]
        if self.negated:
            toks += ["S", "S"]
        return " ".join(toks)

    @classmethod
    def parse(cls, text: str) -> "GenWord":
        """Parse whitespace-separated ``S``, ``T``, ``T^k`` (also ``S^k``)."""
        letters: list = []
        for tok in text.split():
            m = re.fullmatch(r"([ST])(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad word token {tok!r}")
            k = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(1) == "T":
                if k == 0:
                    raise ValueError("T^0 is not a letter")
                letters.append(("T", k))
            else:
                letters.extend([("S",)] * (k % 4))
        return cls(tuple(letters))


def _round_div(a: int, c: int) -> int:
    # nearest integer to a/c, halves rounded up; |a - q*c| <= |c|/2
    if c < 0:
        a, c = -a, -c
    return (2 * a + c) // (2 * c)


def decompose(A: SL2Elem) -> GenWord:
    """Write A as a word in S and powers of T.

    Euclidean descent on the first column: with q the nearest integer to a/c,
    S T^-q A has lower-left entry a - qc, of absolute value at most |c|/2.
    Since S^-1 = -S, peeling S T^-q off the left gives A = T^q S (-A').
    """
    letters: list = []
    negated = False
    a, b, c, d = A.a, A.b, A.c, A.d
    while c != 0:
        q = _round_div(a, c)
        if q:
            letters.append(("T", q))
        letters.append(("S",))
        # A' = S T^-q A
        a, b, c, d = -c, -d, a - q * c, b - q * d
        negated = not negated
    # now A' = [[a, b], [0, d]] with a = d = +-1
    if a == -1:
        negated = not negated
        b = -b
    if b:
        letters.append(("T", b))
    return GenWord(tuple(letters), negated)


def evaluate_word(w: GenWord, md: "ModularData") -> CycMatrix:
    """rho(w) in the simple-object basis of md.

    Raises RelationError unless S^4 = 1 and STS = T^-1 S T^-1 hold for md.
    """
    md.require_relations()
    s = md.s
    mat = None
    for letter in w.letters:
        if letter[0] == "S":
            mat = s if mat is None else mat @ s
        else:
            exps = md.t_exponents_power(letter[1])
            mat = CycMatrix.diagonal_roots(exps, md.root_order) if mat is None else mat.scale_columns(exps)
    if mat is None:
        mat = CycMatrix.identity(md.rank, md.root_order)
    if w.negated:
        mat = mat @ md.charge_conjugation
    return mat


def evaluate(A: Union[SL2Elem, GenWord], md: "ModularData") -> CycMatrix:
    w = decompose(A) if isinstance(A, SL2Elem) else A
    return evaluate_word(w, md)


def parse_element(text: str) -> Union[SL2Elem, GenWord]:
    """Either a word like ``"S T^3 S"`` or a matrix ``"[[a,b],[c,d]]"``."""
    stripped = text.strip()
    if stripped.startswith("["):
        nums = [int(x) for x in re.findall(r"-?\d+", stripped)]
        if len(nums) != 4:
            raise ValueError(f"matrix literal needs 4 integers: {text!r}")
        return SL2Elem(*nums)
    return GenWord.parse(stripped)


@dataclass(frozen=True)
class PrincipalCongruence:
    """Gamma(n): matrices congruent to the identity mod n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("level must be >= 1")

    @property
    def level(self) -> int:
        return self.n


@dataclass(frozen=True)
class GammaKH:
    """Gamma(K, h): b = c = 0 mod K and a, d mod K in the residue set h."""

    K: int
    h: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("K must be >= 1")
        h = frozenset(x % self.K for x in self.h)
        object.__setattr__(self, "h", h)
        for x in h:
            if math.gcd(x, self.K) != 1:
                raise ValueError(f"{x} is not a unit mod {self.K}")
        for x in h:
            for y in h:
                if (x * y) % self.K not in h:
                    raise ValueError("h is not closed under multiplication")

    @property
    def level(self) -> int:
        return self.K


SubgroupSpec = Union[PrincipalCongruence, GammaKH]


def is_member(A: SL2Elem, spec: SubgroupSpec) -> bool:
    if isinstance(spec, PrincipalCongruence):
        n = spec.n
        return (A.a - 1) % n == 0 and (A.d - 1) % n == 0 and A.b % n == 0 and A.c % n == 0
    K = spec.K
    return A.b % K == 0 and A.c % K == 0 and A.a % K in spec.h and A.d % K in spec.h


class SamplingError(RuntimeError):
    pass


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def sample_member(spec: SubgroupSpec, seed: int, bound: int = 50, retries: int = 1000) -> SL2Elem:
    """Deterministic pseudo-random element of the subgroup for a given seed.

    Draws a = alpha (mod level) and c = 0 (mod level) with gcd(a, c) = 1,
    completes to determinant one, then right-multiplies by the power of T
    that clears b modulo the level.
    """
    rng = random.Random(seed)
    L = spec.level
    if isinstance(spec, PrincipalCongruence):
        alphas = [1 % L]
    else:
        alphas = sorted(spec.h)
        if not alphas:
            raise SamplingError("empty residue set h")
    for _ in range(retries):
        alpha = rng.choice(alphas)
        a = alpha + L * rng.randint(-bound, bound)
        c = L * rng.randint(-bound, bound)
        g, x, y = _ext_gcd(a, c)
        if abs(g) != 1:
            continue
        # a*x + c*y = g
        d0, b0 = x * g, -y * g
        k = (-b0 * pow(a, -1, L)) % L if L > 1 else 0
        k += L * rng.randint(-bound, bound)
        A = SL2Elem(a, b0, c, d0) @ _t(k)
        if is_member(A, spec):
            return A
    raise SamplingError(f"no member of {spec} found after {retries} draws")


def random_element(rng: random.Random, bound: int) -> SL2Elem:
    """Random unimodular matrix with |a|, |c| <= bound (b, d from Euclid)."""
    while True:
        a = rng.randint(-bound, bound)
        c = rng.randint(-bound, bound)
        g, x, y = _ext_gcd(a, c)
        if abs(g) != 1:
            continue
        A = SL2Elem(a, -y * g, c, x * g)
        k = rng.randint(-bound, bound)
        return A @ _t(k)
