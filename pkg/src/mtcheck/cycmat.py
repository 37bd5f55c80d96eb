"""Dense square matrices over a cyclotomic field."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cyclotomic import CycNumber, GaloisIndex, Scalar, apply_galois, dot

__all__ = [
    "CycMatrix",
    "MatrixClass",
    "RelationError",
    "apply_galois_mat",
    "classify",
    "mat_mul",
    "mat_pow",
    "mat_trace",
    "s_inverse",
]


class RelationError(ValueError):
    """A group relation required by an operation does not hold."""


class CycMatrix:
    """Immutable r x r matrix; all entries share one root order."""

    __slots__ = ("dim", "root_order", "rows")

    def __init__(self, rows: Iterable[Iterable[Scalar]], root_order: int = 1):
        raw = [list(r) for r in rows]
        dim = len(raw)
        if dim == 0 or any(len(r) != dim for r in raw):
            raise ValueError("CycMatrix must be square and nonempty")
        m = root_order
        for r in raw:
            for x in r:
                if isinstance(x, CycNumber):
                    m = math.lcm(m, x.root_order)
        self.dim = dim
        self.root_order = m
        self.rows = tuple(tuple(CycNumber.coerce(x, m) for x in r) for r in raw)

    @classmethod
    def _wrap(cls, rows: Sequence[Sequence[CycNumber]], root_order: int) -> "CycMatrix":
        obj = object.__new__(cls)
        obj.dim = len(rows)
        obj.root_order = root_order
        obj.rows = tuple(tuple(r) for r in rows)
        return obj

    @classmethod
    def identity(cls, dim: int, root_order: int = 1) -> "CycMatrix":
        one, zero = CycNumber.one(root_order), CycNumber.zero(root_order)
        return cls._wrap([[one if i == j else zero for j in range(dim)] for i in range(dim)], root_order)

    @classmethod
    def diagonal_roots(cls, exponents: Sequence[int], root_order: int) -> "CycMatrix":
        """diag(zeta_M ** e for e in exponents)."""
        zero = CycNumber.zero(root_order)
        n = len(exponents)
        return cls._wrap(
            [[CycNumber.root(root_order, exponents[i]) if i == j else zero for j in range(n)] for i in range(n)],
            root_order,
        )

    def __getitem__(self, ij: tuple[int, int]) -> CycNumber:
        i, j = ij
        return self.rows[i][j]

    def lift(self, root_order: int) -> "CycMatrix":
        if root_order == self.root_order:
            return self
        return CycMatrix._wrap([[x.lift(root_order) for x in r] for r in self.rows], root_order)

    def _align(self, other: "CycMatrix") -> tuple["CycMatrix", "CycMatrix"]:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        m = math.lcm(self.root_order, other.root_order)
        return self.lift(m), other.lift(m)

    def transpose(self) -> "CycMatrix":
        return CycMatrix._wrap(list(zip(*self.rows)), self.root_order)

    def replace(self, i: int, j: int, value: Scalar) -> "CycMatrix":
        """Copy with entry (i, j) replaced."""
        rows = [list(r) for r in self.rows]
        rows[i][j] = value
        return CycMatrix(rows, self.root_order)

    def scale_columns(self, exponents: Sequence[int]) -> "CycMatrix":
        """self @ diag(zeta_M ** e)."""
        return CycMatrix._wrap(
            [[x.mul_root(e) for x, e in zip(r, exponents)] for r in self.rows], self.root_order
        )

    def scale_rows(self, exponents: Sequence[int]) -> "CycMatrix":
        """diag(zeta_M ** e) @ self."""
        return CycMatrix._wrap(
            [[x.mul_root(e) for x in r] for r, e in zip(self.rows, exponents)], self.root_order
        )

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        return mat_mul(self, other)

    def __mul__(self, c: Scalar) -> "CycMatrix":
        return CycMatrix([[x * c for x in r] for r in self.rows], self.root_order)

    __rmul__ = __mul__

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        a, b = self._align(other)
        return CycMatrix._wrap([[x + y for x, y in zip(r, s)] for r, s in zip(a.rows, b.rows)], a.root_order)

    def __neg__(self) -> "CycMatrix":
        return CycMatrix._wrap([[-x for x in r] for r in self.rows], self.root_order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        a, b = self._align(other)
        return a.rows == b.rows

    __hash__ = None  # type: ignore[assignment]

    def to_complex(self) -> list[list[complex]]:
        return [[complex(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        return f"CycMatrix(dim={self.dim}, root_order={self.root_order})"


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    a, b = a._align(b)
    cols = list(zip(*b.rows))
    return CycMatrix._wrap([[dot(r, c) for c in cols] for r in a.rows], a.root_order)


def mat_pow(a: CycMatrix, k: int) -> CycMatrix:
    if k < 0:
        raise ValueError("mat_pow requires k >= 0; use group relations for inverses")
    result = CycMatrix.identity(a.dim, a.root_order)
    base = a
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def mat_trace(a: CycMatrix) -> CycNumber:
    total = CycNumber.zero(a.root_order)
    for i in range(a.dim):
        total = total + a.rows[i][i]
    return total


def apply_galois_mat(a: CycMatrix, g: GaloisIndex | int) -> CycMatrix:
    rows = [[apply_galois(x, g) for x in r] for r in a.rows]
    return CycMatrix(rows, a.root_order)


@dataclass(frozen=True)
class MatrixClass:
    """Structural flags of a matrix, computed in one pass.

    For a signed permutation, ``perm[q]`` is the row holding the single nonzero
    entry of column q and ``signs[q]`` its value, i.e.
    ``A[p][q] = signs[q] * (p == perm[q])``.
    """

    is_identity: bool
    scalar: Optional[CycNumber]
    is_permutation: bool
    signed_permutation: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    is_symmetric: bool
    order_divides: tuple[int, ...] = ()

    @property
    def is_signed_permutation(self) -> bool:
        return self.signed_permutation is not None

    @property
    def is_scalar(self) -> bool:
        return self.scalar is not None


_ORDER_PROBES = (1, 2, 3, 4, 6, 8, 12)


def _signed_perm_power_is_identity(perm: Sequence[int], signs: Sequence[int], k: int) -> bool:
    n = len(perm)
    # compose column maps: column q of A^k has its entry in row perm^k(q)
    for q in range(n):
        row, sign = q, 1
        for _ in range(k):
            sign *= signs[row]
            row = perm[row]
        if row != q or sign != 1:
            return False
    return True


def classify(a: CycMatrix) -> MatrixClass:
    n = a.dim
    rows = a.rows
    diag0 = rows[0][0]
    off_zero = True
    symmetric = True
    diag_const = True
    perm = [-1] * n
    signs = [0] * n
    monomial = True
    row_hits = [0] * n
    for i in range(n):
        for j in range(n):
            x = rows[i][j]
            if i == j:
                if x != diag0:
                    diag_const = False
            elif x:
                off_zero = False
            if j > i and x != rows[j][i]:
                symmetric = False
            if x and monomial:
                if x == 1 or x == -1:
                    if perm[j] != -1:
                        monomial = False
                    else:
                        perm[j] = i
                        signs[j] = 1 if x == 1 else -1
                        row_hits[i] += 1
                else:
                    monomial = False
    if monomial and (any(p == -1 for p in perm) or any(h != 1 for h in row_hits)):
        monomial = False
    scalar = diag0 if off_zero and diag_const else None
    signed = (tuple(perm), tuple(signs)) if monomial else None
    is_perm = signed is not None and all(s == 1 for s in signs)
    is_id = scalar is not None and scalar == 1
    orders: tuple[int, ...] = ()
    if signed is not None:
        orders = tuple(k for k in _ORDER_PROBES if _signed_perm_power_is_identity(perm, signs, k))
    return MatrixClass(
        is_identity=is_id,
        scalar=scalar,
        is_permutation=is_perm,
        signed_permutation=signed,
        is_symmetric=symmetric,
        order_divides=orders,
    )


def s_inverse(s: CycMatrix) -> CycMatrix:
    """S^-1 = S^3, valid only when S^4 = 1."""
    s2 = s @ s
    s3 = s2 @ s
    if not classify(s3 @ s).is_identity:
        raise RelationError("S^4 != 1, so S^3 is not the inverse of S")
    return s3
