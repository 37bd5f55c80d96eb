"""Floating-point reconstruction of the built-in catalog.

Each entry is rebuilt from its textbook closed form (conformal weights h_p,
central charge c, real S matrix) with numpy, independently of the exact
cyclotomic construction in mtcheck.modular_data.  The derived quantities
(fusion coefficients, indicators, dimensions, trace identity, projective
order) are then evaluated numerically.

Run:  python scripts/catalog_oracle.py
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

import numpy as np

SQRT2 = math.sqrt(2.0)
GOLDEN = (1 + math.sqrt(5.0)) / 2

# name -> (central charge, conformal weights, S)
CLOSED_FORMS = {
    "trivial": (Fraction(0), [Fraction(0)], np.array([[1.0]])),
    "semion": (Fraction(1), [Fraction(0), Fraction(1, 4)], np.array([[1, 1], [1, -1]]) / SQRT2),
    "fibonacci": (
        Fraction(14, 5),
        [Fraction(0), Fraction(2, 5)],
        np.array([[1, GOLDEN], [GOLDEN, -1]]) / math.sqrt(2 + GOLDEN),
    ),
    "ising": (
        Fraction(1, 2),
        [Fraction(0), Fraction(1, 16), Fraction(1, 2)],
        np.array([[1, SQRT2, 1], [SQRT2, 0, -SQRT2], [1, -SQRT2, 1]]) / 2,
    ),
}


def t_phases(name: str) -> list[Fraction]:
    """T_p = exp(2 pi i (h_p - c/24)), as fractions of a full turn."""
    c, hs, _ = CLOSED_FORMS[name]
    return [(h - c / 24) % 1 for h in hs]


def float_data(name: str) -> tuple[np.ndarray, np.ndarray]:
    _, _, S = CLOSED_FORMS[name]
    T = np.diag([np.exp(2j * np.pi * float(x)) for x in t_phases(name)])
    return S.astype(complex), T


def conductor(name: str) -> int:
    return reduce(math.lcm, (x.denominator for x in t_phases(name)), 1)


def projective_order(name: str) -> int:
    ph = t_phases(name)
    return reduce(math.lcm, (((x - ph[0]) % 1).denominator for x in ph), 1)


def verlinde(name: str) -> np.ndarray:
    S, _ = float_data(name)
    r = len(S)
    N = np.zeros((r, r, r), dtype=complex)
    for p in range(r):
        for q in range(r):
            for s in range(r):
                N[p, q, s] = sum(S[p, k] * S[q, k] * S[s, k] / S[0, k] for k in range(r))
    return N


def _m(name: str, k: int) -> np.ndarray:
    S, T = float_data(name)
    Tk = np.diag(np.diag(T) ** k)
    return np.linalg.inv(S) @ Tk @ S


def fs_indicators(name: str) -> np.ndarray:
    S, _ = float_data(name)
    M2 = _m(name, 2)
    r = len(S)
    return np.array([sum(S[p, q] * abs(M2[0, q]) ** 2 / S[0, q] for q in range(r)) for p in range(r)])


def genus_dimension(name: str, g: int) -> complex:
    S, _ = float_data(name)
    return complex(sum(S[0, p] ** (2 - 2 * g) for p in range(len(S))))


def trace_identity(name: str) -> tuple[complex, complex]:
    S, _ = float_data(name)
    M4, Mm2 = _m(name, 4), _m(name, -2)
    lhs = sum(M4[0, p] ** 2 * Mm2[0, p] / S[0, p] for p in range(len(S)))
    return complex(lhs), complex(np.trace(S))


def main() -> None:
    from mtcheck.modular_data import catalog

    for name in CLOSED_FORMS:
        md = catalog(name)
        S, T = float_data(name)
        dev_s = np.max(np.abs(np.array(md.s.to_complex()) - S))
        dev_t = np.max(np.abs(np.diag(md.t_matrix().to_complex()) - np.diag(T)))
        N = verlinde(name)
        print(f"{name}: |S-S_float|={dev_s:.1e} |T-T_float|={dev_t:.1e} "
              f"N={conductor(name)} K={projective_order(name)}")
        print(f"  fusion max dev from integers {np.max(np.abs(N - np.round(N.real))):.1e}")
        print(f"  FS indicators {np.round(fs_indicators(name).real, 12)}")
        print(f"  dims g=0..5 {[round(genus_dimension(name, g).real, 9) for g in range(6)]}")
        lhs, rhs = trace_identity(name)
        print(f"  trace identity lhs={lhs:.12f} rhs={rhs:.12f}")


if __name__ == "__main__":
    main()
