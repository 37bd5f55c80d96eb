"""Negative controls: documented corruptions of the Ising modular data.

Every mutation below yields data that is *not* modular data of any modular
tensor category, so the full battery must report an overall failure.
Labels: 0 = vacuum, 1 = sigma, 2 = psi.
"""
from __future__ import annotations

from typing import Callable

from .cycmat import CycMatrix, apply_galois_mat
from .modular_data import ModularData, catalog

__all__ = ["MUTATIONS", "mutate"]

VAC, SIGMA, PSI = 0, 1, 2


def _negate_vacuum_sigma(md: ModularData) -> ModularData:
    """S_{0,sigma} and S_{sigma,0} negated (symmetry kept, positivity lost)."""
    s = md.s
    return md.with_s(s.replace(VAC, SIGMA, -s[VAC, SIGMA]).replace(SIGMA, VAC, -s[SIGMA, VAC]))


def _swap_t_exponents(md: ModularData) -> ModularData:
    """T exponents of sigma and psi exchanged."""
    e = list(md.t_exponents)
    e[SIGMA], e[PSI] = e[PSI], e[SIGMA]
    return md.with_t(e)


def _scale_s(md: ModularData) -> ModularData:
    """S replaced by 2S."""
    return md.with_s(md.s * 2)


def _break_symmetry(md: ModularData) -> ModularData:
    """S_{0,sigma} increased by 1, S_{sigma,0} untouched."""
    return md.with_s(md.s.replace(VAC, SIGMA, md.s[VAC, SIGMA] + 1))


def _sigma_sigma_one(md: ModularData) -> ModularData:
    """S_{sigma,sigma} set to 1."""
    return md.with_s(md.s.replace(SIGMA, SIGMA, 1))


def _perturb_psi_psi(md: ModularData) -> ModularData:
    """S_{psi,psi} increased by 1."""
    return md.with_s(md.s.replace(PSI, PSI, md.s[PSI, PSI] + 1))


def _shift_t_phase(md: ModularData) -> ModularData:
    """T multiplied by zeta_48 (wrong central phase)."""
    return md.with_t([e + 1 for e in md.t_exponents])


def _swap_s_rows(md: ModularData) -> ModularData:
    """Rows sigma and psi of S exchanged."""
    rows = list(md.s.rows)
    rows[SIGMA], rows[PSI] = rows[PSI], rows[SIGMA]
    return md.with_s(CycMatrix(rows, md.root_order))


def _galois_conjugate_s(md: ModularData) -> ModularData:
    """S conjugated by sigma_5 (sqrt2 -> -sqrt2) while T is kept."""
    return md.with_s(apply_galois_mat(md.s, 5))


def _negate_psi_basis(md: ModularData) -> ModularData:
    """Row and column psi of S negated (a sign change of one basis vector)."""
    s = md.s
    for j in range(md.rank):
        if j != PSI:
            s = s.replace(PSI, j, -s[PSI, j]).replace(j, PSI, -s[j, PSI])
    return md.with_s(s)


MUTATIONS: dict[str, Callable[[ModularData], ModularData]] = {
    "negate_vacuum_sigma": _negate_vacuum_sigma,
    "swap_t_exponents": _swap_t_exponents,
    "scale_s_by_2": _scale_s,
    "break_symmetry": _break_symmetry,
    "sigma_sigma_one": _sigma_sigma_one,
    "perturb_psi_psi": _perturb_psi_psi,
    "shift_t_phase": _shift_t_phase,
    "swap_s_rows": _swap_s_rows,
    "galois_conjugate_s": _galois_conjugate_s,
    "negate_psi_basis": _negate_psi_basis,
}


def mutate(name: str, base: str = "ising") -> ModularData:
    md = MUTATIONS[name](catalog(base))
    return md.with_s(md.s, name=f"{base}:{name}")
