"""Exact verification of candidate modular data (S, T) of modular tensor categories."""
from .checks import run_all
from .cycmat import CycMatrix
from .cyclotomic import CycNumber, GaloisIndex
from .modular_data import CheckConfig, ModularData, catalog, load, parse, serialize
from .sl2z import GenWord, SL2Elem, decompose

__all__ = [
    "CheckConfig",
    "CycMatrix",
    "CycNumber",
    "GaloisIndex",
    "GenWord",
    "ModularData",
    "SL2Elem",
    "catalog",
    "decompose",
    "load",
    "parse",
    "run_all",
    "serialize",
]
