"""Shells as logical values: connectives, truth tables and the three-symbol reading."""

from __future__ import annotations

from .alphabet import Alphabet, Symbol, dual, join, meet
from .word import MWord, as_word


def shell_of(x) -> MWord:
    """Logic values are shells; longer words are cut down to their endpoints."""
    return MWord(x.alphabet, (x.letters[0], x.letters[-1]))


def _v(l: Symbol, r: Symbol) -> MWord:
    return MWord(l.alphabet, (l.id, r.id))


def lnot(x: MWord) -> MWord:
    return _v(dual(x.l), dual(x.r))


def land(x: MWord, y: MWord) -> MWord:
    return _v(meet(x.l, y.l), join(x.r, y.r))


def lor(x: MWord, y: MWord) -> MWord:
    return _v(join(x.l, y.l), meet(x.r, y.r))


def impl_p(x: MWord, y: MWord) -> MWord:
    return _v(join(dual(x.l), y.l), meet(dual(x.r), y.r))


def impl_s(x: MWord, y: MWord) -> MWord:
    return _v(meet(dual(x.l), y.l), join(dual(x.r), y.r))


def equiv_p(x: MWord, y: MWord) -> MWord:
    l = meet(join(dual(x.l), y.l), join(x.l, dual(y.l)))
    r = join(meet(dual(x.r), y.r), meet(x.r, dual(y.r)))
    return _v(l, r)


def equiv_s(x: MWord, y: MWord) -> MWord:
    l = join(meet(dual(x.l), y.l), meet(x.l, dual(y.l)))
    r = meet(join(dual(x.r), y.r), join(x.r, dual(y.r)))
    return _v(l, r)


OPERATORS = {
    "and": land,
    "or": lor,
    "not": lnot,
    "implp": impl_p,
    "impls": impl_s,
    "eqvp": equiv_p,
    "eqvs": equiv_s,
}


def not_then_and(x: MWord, y: MWord) -> MWord:
    """Conjunction of the negated first argument with the second."""
    return land(lnot(x), y)


def not_then_or(x: MWord, y: MWord) -> MWord:
    return lor(lnot(x), y)


def values(alphabet: Alphabet) -> list[MWord]:
    """All n*n shells, ordered by first then last symbol."""
    n = len(alphabet)
    return [MWord(alphabet, (i, j)) for i in range(n) for j in range(n)]


# endpoint readings over three symbols: left endpoint a/b/c is bottom/bar/top,
# right endpoint a/b/c is top/bar/bottom
_LEFT3 = {"a": "⊥", "b": "∣", "c": "⊤"}
_RIGHT3 = {"a": "⊤", "b": "∣", "c": "⊥"}
# the two-symbol reading
_GAMMA2 = {"ba": "⊤", "ab": "⊥", "aa": "B", "bb": "N"}


def label(x: MWord) -> str:
    """Human reading of a shell: ⊤/⊥/B/N over two symbols, an endpoint pair
    such as ``[⊥,⊤]`` over three."""
    s = shell_of(x)
    a = s.alphabet
    key = a.names[s.letters[0]] + a.names[s.letters[1]]
    if a.names == ("a", "b") and len(a) == 2:
        return _GAMMA2[key]
    if a.names == ("a", "b", "c"):
        return f"[{_LEFT3[key[0]]},{_RIGHT3[key[1]]}]"
    return key


def truth_table(op: str, alphabet: Alphabet) -> list[dict]:
    """Every entry of a connective over all shells, as row dictionaries."""
    f = OPERATORS[op]
    vals = values(alphabet)
    rows = []
    if op == "not":
        for x in vals:
            rows.append({"x": x.text, "result": f(x).text, "x_label": label(x), "result_label": label(f(x))})
        return rows
    for x in vals:
        for y in vals:
            z = f(x, y)
            rows.append(
                {
                    "x": x.text,
                    "y": y.text,
                    "result": z.text,
                    "x_label": label(x),
                    "y_label": label(y),
                    "result_label": label(z),
                }
            )
    return rows


def apply(op: str, *args, alphabet=None) -> MWord:
    """Apply a named connective to words given as text or MWord."""
    from .alphabet import gamma3

    alphabet = alphabet or gamma3
    ws = [shell_of(as_word(a, alphabet)) for a in args]
    return OPERATORS[op](*ws)
