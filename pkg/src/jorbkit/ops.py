"""Unary word operators: dual, reverse, their product, negation and endpoint padding."""

from __future__ import annotations

from .word import MWord


def op_D(x: MWord) -> MWord:
    """Letterwise dual."""
    a = x.alphabet
    return MWord(a, tuple(a.dual_index(i) for i in x.letters))


def op_E(x: MWord) -> MWord:
    """Reverse the word."""
    return MWord(x.alphabet, x.letters[::-1])


def op_F(x: MWord) -> MWord:
    """Dual of the reversal (equal to the reversal of the dual)."""
    return op_D(op_E(x))


def op_K(x: MWord) -> MWord:
    """Negation: wrap the word in the duals of its endpoints."""
    a = x.alphabet
    return MWord(a, (a.dual_index(x.letters[0]),) + x.letters + (a.dual_index(x.letters[-1]),))


def op_I(x: MWord) -> MWord:
    """Wrap the word in copies of its own endpoints."""
    return MWord(x.alphabet, (x.letters[0],) + x.letters + (x.letters[-1],))


def identity(x: MWord) -> MWord:
    return x


KLEIN = {"1": identity, "D": op_D, "E": op_E, "F": op_F}

OPS = {"D": op_D, "E": op_E, "F": op_F, "K": op_K, "I": op_I}


def klein_product(g: str, h: str) -> str:
    """Name of g∘h in the group {1, D, E, F} (each element its own inverse)."""
    if g == "1":
        return h
    if h == "1":
        return g
    if g == h:
        return "1"
    return ({"D", "E", "F"} - {g, h}).pop()


def cayley_table() -> dict[tuple[str, str], str]:
    names = list(KLEIN)
    return {(g, h): klein_product(g, h) for g in names for h in names}
