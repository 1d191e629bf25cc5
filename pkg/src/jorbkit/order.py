"""Shell quasi-orders, shell classes, one-sided ideals and Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet, AlphabetMismatch, Symbol
from .compose import omega_p, omega_s
from .word import MWord, render, zip_reduce


def _same(x: MWord, y: MWord):
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch("words belong to different alphabets")


def leq_q(x: MWord, y: MWord) -> bool:
    """x <=_q y: x starts no lower and ends no higher than y."""
    _same(x, y)
    return x.letters[0] >= y.letters[0] and x.letters[-1] <= y.letters[-1]


def geq_q(x: MWord, y: MWord) -> bool:
    _same(x, y)
    return x.letters[0] <= y.letters[0] and x.letters[-1] >= y.letters[-1]


def eq_q(x: MWord, y: MWord) -> bool:
    """Same shell."""
    _same(x, y)
    return x.letters[0] == y.letters[0] and x.letters[-1] == y.letters[-1]


@dataclass(frozen=True)
class ShellClass:
    """The class [st] of all words with shell st."""

    s: Symbol
    t: Symbol

    def __post_init__(self):
        if self.s.alphabet != self.t.alphabet:
            raise AlphabetMismatch("shell symbols from different alphabets")

    @property
    def alphabet(self) -> Alphabet:
        return self.s.alphabet

    @property
    def key(self) -> str:
        return self.s.name + self.t.name

    def __contains__(self, x: MWord) -> bool:
        return x.alphabet == self.alphabet and x.letters[0] == self.s.id and x.letters[-1] == self.t.id

    def __str__(self):
        return f"[{self.key}]"

    def word(self) -> MWord:
        return MWord(self.alphabet, (self.s.id, self.t.id))


def class_of(x: MWord) -> ShellClass:
    return ShellClass(x.l, x.r)


def all_classes(alphabet: Alphabet) -> list[ShellClass]:
    return [ShellClass(s, t) for s in alphabet for t in alphabet]


def lideal(s: Symbol):
    """Membership predicate for the words starting with ``s``."""
    return lambda x: x.alphabet == s.alphabet and x.letters[0] == s.id


def rideal(t: Symbol):
    """Membership predicate for the words ending with ``t``."""
    return lambda x: x.alphabet == t.alphabet and x.letters[-1] == t.id


def class_leq(c: ShellClass, d: ShellClass) -> bool:
    return leq_q(c.word(), d.word())


# --- Hasse diagrams ---------------------------------------------------------------

def _grid_edges(n: int):
    """Covering pairs of the shell order on an n x n grid of shells (i, j).

    A shell covers another when it ends one symbol higher (same start) or
    starts one symbol lower (same end).  Edges of the first kind join words
    of one left ideal, edges of the second kind words of one right ideal.
    """
    for i in range(n):
        for j in range(n):
            if j + 1 < n:
                yield (i, j), (i, j + 1), "lideal"
            if i > 0:
                yield (i, j), (i - 1, j), "rideal"


def hasse_edges(alphabet: Alphabet) -> list[tuple[tuple[int, int], tuple[int, int], str]]:
    return list(_grid_edges(len(alphabet)))


def hasse(kind: str, alphabet: Alphabet) -> str:
    """DOT text for the Hasse diagram of shell classes or of a shell basis.

    Nodes sit on a diamond grid: the bottom is the shell omega-alpha (the
    q-least shell), the top alpha-omega.  Right ideals are joined by solid
    lines, left ideals by dashed ones.  For ``omega_p`` the order is reversed
    (the basis is ordered by >=_q) so the picture is turned upside down.
    """
    if kind not in ("classes", "omega_s", "omega_p"):
        raise ValueError(f"unknown diagram kind {kind!r}")
    n = len(alphabet)
    names = alphabet.names
    if kind == "classes":
        label = {(i, j): f"[{names[i]}{names[j]}]" for i in range(n) for j in range(n)}
    else:
        basis = omega_s(alphabet) if kind == "omega_s" else omega_p(alphabet)
        label = {(i, j): render(zip_reduce(basis[i * n + j]), "lower") for i in range(n) for j in range(n)}
    flip = -1 if kind == "omega_p" else 1
    lines = [f'digraph "{kind}" {{', "  edge [dir=none];", "  node [shape=plaintext];"]
    for (i, j), text in label.items():
        # height grows with the rank in the order: lower start, higher end
        x = j + i
        y = flip * ((n - 1 - i) + j)
        lines.append(f'  "n{i}_{j}" [label="{text}", pos="{x},{y}!"];')
    for a, b, ideal in _grid_edges(n):
        style = "solid" if ideal == "rideal" else "dashed"
        lines.append(f'  "n{a[0]}_{a[1]}" -> "n{b[0]}_{b[1]}" [style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
