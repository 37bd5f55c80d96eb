"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are stored in the power basis 1, x, ..., x^(phi(M)-1) modulo the
M-th cyclotomic polynomial, as integer numerators over one positive common
denominator.  Reduction happens on construction, so equality of two elements
of the same order is coefficient comparison.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "CycNumber",
    "Embedding",
    "GaloisIndex",
    "apply_galois",
    "as_rational",
    "cyclotomic_poly",
    "dot",
    "embed_complex",
    "euler_phi",
    "lift_unit",
    "reduce",
    "units",
]

Scalar = Union["CycNumber", int, Fraction]

_UNIT_ROUNDOFF = 2.0 ** -53


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def units(n: int) -> list[int]:
    """Residues in [1, n) coprime to n (``[1]`` for n = 1)."""
    if n == 1:
        return [1]
    return [k for k in range(1, n) if math.gcd(k, n) == 1]


def lift_unit(l: int, n: int, m: int) -> int:
    """Smallest positive l' = l (mod n) with gcd(l', m) = 1.

    Requires gcd(l, n) = 1 and n | m.  Such a lift always exists because the
    reduction map (Z/m)* -> (Z/n)* is onto.
    """
    if math.gcd(l, n) != 1:
        raise ValueError(f"{l} is not a unit modulo {n}")
    if m % n:
        raise ValueError(f"{n} does not divide {m}")
    base = l % n if n > 1 else 1
    for j in range(m // n + 1):
        cand = base + j * n
        if cand > 0 and math.gcd(cand, m) == 1:
            return cand
    raise AssertionError("unreachable: unit lift not found")


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials, den monic; low-to-high coefficients
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + dn]
        out[i] = coef
        if coef:
            for j, dc in enumerate(den):
                num[i + j] -= coef * dc
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    if m < 1:
        raise ValueError("cyclotomic_poly requires m >= 1")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


class _Field:
    __slots__ = ("order", "phi", "powers")

    def __init__(self, m: int):
        poly = cyclotomic_poly(m)
        phi = len(poly) - 1
        self.order = m
        self.phi = phi
        # powers[k] = x^k mod Phi_m for 0 <= k < m
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(m):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * poly[i]
        self.powers = tuple(powers)

    def fold(self, raw: Sequence[int]) -> list[int]:
        """Reduce an integer coefficient vector indexed by exponent mod Phi_m."""
        phi, m, powers = self.phi, self.order, self.powers
        out = list(raw[:phi]) + [0] * max(0, phi - len(raw))
        for k in range(phi, len(raw)):
            c = raw[k]
            if c:
                row = powers[k % m]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return out


@lru_cache(maxsize=None)
def _field(m: int) -> _Field:
    return _Field(m)


def _normalized(m: int, num: Sequence[int], den: int) -> "CycNumber":
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    obj = object.__new__(CycNumber)
    obj.root_order = m
    obj._num = tuple(num)
    obj._den = den
    return obj


class CycNumber:
    """An element of Q(zeta_M), immutable.

    Arithmetic with a CycNumber of another order lifts both operands to the
    least common multiple of the two orders.  Plain ints and Fractions are
    accepted as operands.
    """

    __slots__ = ("root_order", "_num", "_den")

    root_order: int
    _num: tuple[int, ...]
    _den: int

    def __init__(self, root_order: int, coeffs: Iterable[Rational]):
        coeffs = [Fraction(c) for c in coeffs]
        f = _field(root_order)
        if len(coeffs) != f.phi:
            raise ValueError(f"expected {f.phi} coefficients for order {root_order}, got {len(coeffs)}")
        den = math.lcm(1, *(c.denominator for c in coeffs))
        num = [c.numerator * (den // c.denominator) for c in coeffs]
        other = _normalized(root_order, num, den)
        self.root_order = root_order
        self._num = other._num
        self._den = other._den

    # constructors

    @classmethod
    def rational(cls, q: Rational, root_order: int = 1) -> "CycNumber":
        q = Fraction(q)
        num = [0] * _field(root_order).phi
        num[0] = q.numerator
        return _normalized(root_order, num, q.denominator)

    @classmethod
    def zero(cls, root_order: int = 1) -> "CycNumber":
        return cls.rational(0, root_order)

    @classmethod
    def one(cls, root_order: int = 1) -> "CycNumber":
        return cls.rational(1, root_order)

    @classmethod
    def root(cls, root_order: int, k: int = 1) -> "CycNumber":
        """zeta_M ** k."""
        f = _field(root_order)
        return _normalized(root_order, f.powers[k % root_order], 1)

    @classmethod
    def coerce(cls, value: Scalar, root_order: int = 1) -> "CycNumber":
        if isinstance(value, CycNumber):
            return value.lift(math.lcm(value.root_order, root_order))
        if isinstance(value, (int, Fraction)):
            return cls.rational(value, root_order)
        raise TypeError(f"cannot coerce {type(value).__name__} to CycNumber")

    # accessors

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # order changes

    def lift(self, root_order: int) -> "CycNumber":
        """Re-express in Q(zeta_root_order); root_order must be a multiple."""
        if root_order == self.root_order:
            return self
        if root_order % self.root_order:
            raise ValueError(f"cannot lift order {self.root_order} to {root_order}")
        step = root_order // self.root_order
        f = _field(root_order)
        acc = [0] * f.phi
        for k, c in enumerate(self._num):
            if c:
                row = f.powers[(k * step) % root_order]
                for i in range(f.phi):
                    if row[i]:
                        acc[i] += c * row[i]
        return _normalized(root_order, acc, self._den)

    def _common(self, other: Scalar) -> tuple["CycNumber", "CycNumber"]:
        if not isinstance(other, CycNumber):
            return self, CycNumber.coerce(other, self.root_order)
        if other.root_order == self.root_order:
            return self, other
        m = math.lcm(self.root_order, other.root_order)
        return self.lift(m), other.lift(m)

    # arithmetic

    def __add__(self, other: Scalar) -> "CycNumber":
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        if a._den == b._den:
            return _normalized(a.root_order, [x + y for x, y in zip(a._num, b._num)], a._den)
        return _normalized(
            a.root_order,
            [x * b._den + y * a._den for x, y in zip(a._num, b._num)],
            a._den * b._den,
        )

    __radd__ = __add__

    def __neg__(self) -> "CycNumber":
        return _normalized(self.root_order, [-c for c in self._num], self._den)

    def __sub__(self, other: Scalar) -> "CycNumber":
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other: Scalar) -> "CycNumber":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "CycNumber":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return _normalized(
                self.root_order, [c * q.numerator for c in self._num], self._den * q.denominator
            )
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        f = _field(a.root_order)
        raw = _convolve(a._num, b._num)
        return _normalized(a.root_order, f.fold(raw), a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "CycNumber":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta)")
            return self * (1 / Fraction(other))
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "CycNumber":
        return CycNumber.coerce(other, self.root_order) * self.inverse()

    def __pow__(self, k: int) -> "CycNumber":
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = CycNumber.one(self.root_order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_root(self, k: int) -> "CycNumber":
        """Multiply by zeta_M ** k (exponent shift, no general product)."""
        m = self.root_order
        f = _field(m)
        acc = [0] * f.phi
        for i, c in enumerate(self._num):
            if c:
                row = f.powers[(i + k) % m]
                for j in range(f.phi):
                    if row[j]:
                        acc[j] += c * row[j]
        return _normalized(m, acc, self._den)

    def inverse(self) -> "CycNumber":
        """Multiplicative inverse by the extended Euclidean algorithm mod Phi_M."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        m = self.root_order
        a = _trim([Fraction(c) for c in self._num])
        p = _trim([Fraction(c) for c in cyclotomic_poly(m)])
        # invariant: s0*a = r0, s1*a = r1 (mod p)
        r0, r1 = p, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant because Phi_m is irreducible
        c = r1[0]
        s = [x / c for x in s1]
        # scale by the denominator of self: (num/den)^-1 = den * num^-1
        _, s = _poly_divmod(s, p)
        s = s + [Fraction(0)] * (_field(m).phi - len(s))
        s = [x * self._den for x in s]
        return CycNumber(m, s)

    def conjugate(self) -> "CycNumber":
        """Complex conjugation, i.e. the Galois automorphism with l = M - 1."""
        return apply_galois(self, GaloisIndex(self.root_order - 1, self.root_order))

    def abs2(self) -> "CycNumber":
        return self * self.conjugate()

    # comparison and display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNumber.rational(other, self.root_order)
        if not isinstance(other, CycNumber):
            return NotImplemented
        if other.root_order == self.root_order:
            return self._den == other._den and self._num == other._num
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    __hash__ = None  # type: ignore[assignment]

    def to_triples(self) -> list[list[int]]:
        """Nonzero terms as [num, den, exp] triples sorted by exponent."""
        out = []
        for k, c in enumerate(self._num):
            if c:
                q = Fraction(c, self._den)
                out.append([q.numerator, q.denominator, k])
        return out

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]], root_order: int) -> "CycNumber":
        raw: dict[int, Fraction] = {}
        for num, den, exp in triples:
            raw[exp] = raw.get(exp, Fraction(0)) + Fraction(num, den)
        return reduce(raw, root_order)

    def __repr__(self) -> str:
        terms = []
        for num, den, k in self.to_triples():
            coef = str(Fraction(num, den))
            terms.append(coef if k == 0 else f"{coef}*z{self.root_order}^{k}")
        return "CycNumber(" + (" + ".join(terms) if terms else "0") + ")"

    def __complex__(self) -> complex:
        return embed_complex(self).value


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def dot(xs: Sequence[CycNumber], ys: Sequence[CycNumber]) -> CycNumber:
    """Sum of x*y over paired entries, all of one root order, reduced once."""
    m = xs[0].root_order
    f = _field(m)
    acc = [0] * (2 * f.phi - 1)
    den = 1
    for x, y in zip(xs, ys):
        if x.root_order != m or y.root_order != m:
            raise ValueError("dot requires a common root order")
        if not any(x._num) or not any(y._num):
            continue
        tden = x._den * y._den
        if tden != den:
            new = math.lcm(den, tden)
            if new != den:
                scale = new // den
                acc = [c * scale for c in acc]
                den = new
        scale = den // tden
        for i, a in enumerate(x._num):
            if a:
                a *= scale
                for j, b in enumerate(y._num):
                    if b:
                        acc[i + j] += a * b
    return _normalized(m, f.fold(acc), den)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(list(a))
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        coef = a[i + len(b) - 1] / lead
        q[i] = coef
        if coef:
            for j, y in enumerate(b):
                a[i + j] -= coef * y
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def reduce(raw: Mapping[int, Rational], root_order: int) -> CycNumber:
    """Canonical element for sum(c * zeta_M**k for k, c in raw.items())."""
    f = _field(root_order)
    den = math.lcm(1, *(Fraction(c).denominator for c in raw.values()))
    vec = [0] * root_order
    for k, c in raw.items():
        c = Fraction(c)
        vec[k % root_order] += c.numerator * (den // c.denominator)
    return _normalized(root_order, f.fold(vec), den)


@dataclass(frozen=True)
class GaloisIndex:
    """The automorphism sigma_l of Q(zeta_modulus), zeta -> zeta**l."""

    l: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if math.gcd(self.l, self.modulus) != 1:
            raise ValueError(f"l={self.l} is not coprime to {self.modulus}")
        canon = self.l % self.modulus if self.modulus > 1 else 1
        object.__setattr__(self, "l", canon)

    def inverse(self) -> "GaloisIndex":
        if self.modulus == 1:
            return self
        return GaloisIndex(pow(self.l, -1, self.modulus), self.modulus)

    def __mul__(self, other: "GaloisIndex") -> "GaloisIndex":
        if self.modulus != other.modulus:
            raise ValueError("moduli differ")
        return GaloisIndex(self.l * other.l, self.modulus)


def apply_galois(a: CycNumber, g: Union[GaloisIndex, int]) -> CycNumber:
    """Apply sigma_l to a.

    If the modulus of ``g`` differs from ``a.root_order`` both are moved to
    their lcm, with l lifted to a unit there that agrees with l modulo
    ``g.modulus``.  The result is independent of the lift whenever ``a`` lies in
    Q(zeta_modulus).
    """
    if isinstance(g, int):
        g = GaloisIndex(g, a.root_order)
    m = math.lcm(a.root_order, g.modulus)
    a = a.lift(m)
    l = lift_unit(g.l, g.modulus, m)
    if l % m == 1 or m == 1:
        return a
    f = _field(m)
    acc = [0] * f.phi
    for k, c in enumerate(a._num):
        if c:
            row = f.powers[(k * l) % m]
            for i in range(f.phi):
                if row[i]:
                    acc[i] += c * row[i]
    return _normalized(m, acc, a._den)


def as_rational(a: CycNumber) -> Fraction | None:
    if any(a._num[1:]):
        return None
    return Fraction(a._num[0], a._den)


class Embedding(NamedTuple):
    """Floating-point value under zeta_M -> exp(2 pi i / M) with an error bound."""

    real: float
    imag: float
    error: float

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)


@lru_cache(maxsize=None)
def _unit_circle(m: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * math.pi * k / m) for k in range(m))


def embed_complex(a: CycNumber) -> Embedding:
    """Evaluate a numerically.

    The bound is a generous a-priori estimate: each term carries relative
    error at most 8u from converting the coefficient and evaluating the
    root of unity, and summing n terms adds at most n*u times the sum of
    magnitudes (u = 2**-53), all doubled for safety.
    """
    circle = _unit_circle(a.root_order)
    terms = []
    mag = 0.0
    for k, c in enumerate(a._num):
        if c:
            q = c / a._den
            terms.append(q * circle[k])
            mag += abs(q)
    re = math.fsum(t.real for t in terms)
    im = math.fsum(t.imag for t in terms)
    err = 2.0 * (8 + len(terms)) * _UNIT_ROUNDOFF * mag
    return Embedding(re, im, err)
