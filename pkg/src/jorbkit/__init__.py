"""Algebra of m-words (jorbs) for describing and synthesising RLC one-port networks."""

from .alphabet import Alphabet, AlphabetMismatch, Symbol, gamma2, gamma3, gamma5, get_alphabet
from .compose import parallel, parallel_reduced, series, series_reduced
from .ops import op_D, op_E, op_F, op_I, op_K
from .spexpr import eval_jorb, parse_sp, print_sp
from .word import MWord, Quadruple, lam, parse, phi, render, zip_reduce

__all__ = [
    "Alphabet",
    "AlphabetMismatch",
    "MWord",
    "Quadruple",
    "Symbol",
    "eval_jorb",
    "gamma2",
    "gamma3",
    "gamma5",
    "get_alphabet",
    "lam",
    "op_D",
    "op_E",
    "op_F",
    "op_I",
    "op_K",
    "parallel",
    "parallel_reduced",
    "parse",
    "parse_sp",
    "phi",
    "print_sp",
    "render",
    "series",
    "series_reduced",
    "zip_reduce",
]
