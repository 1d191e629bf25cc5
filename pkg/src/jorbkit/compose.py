"""Series and parallel composition, zeros, cores, shells and the s/p bases."""

from __future__ import annotations

import logging

from .alphabet import Alphabet, join, meet
from .word import MWord, _check_same, phi, zip_reduce

log = logging.getLogger(__name__)


def _w(alphabet, *syms) -> tuple[int, ...]:
    return tuple(s.id for s in syms)


def series(x: MWord, y: MWord) -> MWord:
    """Raw series connection of two jorbs (no compression)."""
    _check_same(x, y)
    lo = meet(x.l, y.l)
    mid_hi, mid_lo = join(x.r, y.l), meet(x.r, y.l)
    hi = join(x.r, y.r)
    letters = (lo.id, lo.id) + x.letters + (mid_hi.id, mid_lo.id) + y.letters + (hi.id, hi.id)
    return MWord(x.alphabet, letters)


def parallel(x: MWord, y: MWord) -> MWord:
    """Raw parallel connection of two jorbs (no compression)."""
    _check_same(x, y)
    hi = join(x.l, y.l)
    mid_lo, mid_hi = meet(x.r, y.l), join(x.r, y.l)
    lo = meet(x.r, y.r)
    letters = (hi.id, hi.id) + x.letters + (mid_lo.id, mid_hi.id) + y.letters + (lo.id, lo.id)
    return MWord(x.alphabet, letters)


def series_reduced(x: MWord, y: MWord) -> MWord:
    return zip_reduce(series(x, y))


def parallel_reduced(x: MWord, y: MWord) -> MWord:
    return zip_reduce(parallel(x, y))


def s_zero(alphabet: Alphabet) -> MWord:
    """omega alpha: the identity of series connection."""
    return MWord(alphabet, (alphabet.omega.id, alphabet.alpha.id))


def p_zero(alphabet: Alphabet) -> MWord:
    """alpha omega: the identity of parallel connection."""
    return MWord(alphabet, (alphabet.alpha.id, alphabet.omega.id))


def s_core(x: MWord) -> MWord:
    z = s_zero(x.alphabet)
    return z + x + z


def p_core(x: MWord) -> MWord:
    z = p_zero(x.alphabet)
    return z + x + z


def s_core_reduced(x: MWord) -> MWord:
    return zip_reduce(s_core(x))


def p_core_reduced(x: MWord) -> MWord:
    return zip_reduce(p_core(x))


def s_shell(x: MWord) -> MWord:
    """l (l meet r) (l join r) r."""
    l, r = x.l, x.r
    return MWord(x.alphabet, (l.id, meet(l, r).id, join(l, r).id, r.id))


def p_shell(x: MWord) -> MWord:
    """l (l join r) (l meet r) r."""
    l, r = x.l, x.r
    return MWord(x.alphabet, (l.id, join(l, r).id, meet(l, r).id, r.id))


def _all_shells(alphabet: Alphabet):
    n = len(alphabet)
    for i in range(n):
        for j in range(n):
            yield MWord(alphabet, (i, j))


def omega_s(alphabet: Alphabet) -> list[MWord]:
    """The s-basis: the reduced s-shell of every 2-letter shell, in shell order."""
    return [zip_reduce(s_shell(u)) for u in _all_shells(alphabet)]


def omega_p(alphabet: Alphabet) -> list[MWord]:
    """The p-basis, reduced, in shell order."""
    return [zip_reduce(p_shell(u)) for u in _all_shells(alphabet)]


def compare(x: MWord, y: MWord) -> str:
    """How two words agree: ``"reduced"``, ``"phi"`` or ``"none"``.

    Reduced-string equality is tried first; Phi agreement alone is logged,
    since several identities only hold up to Phi.
    """
    if zip_reduce(x) == zip_reduce(y):
        return "reduced"
    if x.alphabet.is_symmetric and phi(x) == phi(y):
        log.warning("%s and %s agree only up to Phi", zip_reduce(x).compact, zip_reduce(y).compact)
        return "phi"
    return "none"
