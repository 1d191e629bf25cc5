"""m-words (jorbs): concatenation, lambda-length, shells, zip compression and Phi."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .alphabet import Alphabet, AlphabetMismatch, Symbol, gamma3


class WordError(ValueError):
    pass


class _Settings:
    # R2 windows restricted to even offsets unless switched off
    aligned = True


settings = _Settings()


@dataclass(frozen=True)
class MWord:
    """An even-length word over one alphabet.

    Letters are stored as 0-based symbol indices into ``alphabet``.
    """

    alphabet: Alphabet
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if len(letters) < 2 or len(letters) % 2:
            raise WordError(f"an m-word needs an even number (>= 2) of letters, got {len(letters)}")
        n = len(self.alphabet)
        if any(not 0 <= i < n for i in letters):
            raise WordError("letter index out of range")

    @classmethod
    def from_symbols(cls, symbols) -> "MWord":
        symbols = list(symbols)
        if not symbols:
            raise WordError("empty word")
        alpha = symbols[0].alphabet
        for s in symbols:
            if s.alphabet != alpha:
                raise AlphabetMismatch("symbols from different alphabets")
        return cls(alpha, tuple(s.id for s in symbols))

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Symbol]:
        return (Symbol(self.alphabet, i) for i in self.letters)

    def __getitem__(self, i) -> Symbol:
        return Symbol(self.alphabet, self.letters[i])

    def __add__(self, other: "MWord") -> "MWord":
        return concat(self, other)

    def __str__(self):
        return render(self, "lower")

    def __repr__(self):
        return f"MWord({render(self, 'lower')!r})"

    @property
    def l(self) -> Symbol:
        return Symbol(self.alphabet, self.letters[0])

    @property
    def r(self) -> Symbol:
        return Symbol(self.alphabet, self.letters[-1])

    @property
    def text(self) -> str:
        return render(self, "lower")

    @property
    def compact(self) -> str:
        return render(self, "compact")


class Quadruple(NamedTuple):
    """(v(l), lambda_s, lambda_p, v(r)) of a jorb."""

    vl: int
    ls: int
    lp: int
    vr: int

    @property
    def triplet(self) -> tuple[int, int, int]:
        """The triplet form (v(l), lambda_s, v(r)); lambda_p follows from the other three."""
        return (self.vl, self.ls, self.vr)

    @classmethod
    def from_triplet(cls, vl: int, ls: int, vr: int) -> "Quadruple":
        return cls(vl, ls, ls - (vl - vr), vr)

    def to_json(self) -> str:
        return json.dumps(list(self))

    def __str__(self):
        return "({}, {}, {}, {})".format(*self)


def _check_same(x: MWord, y: MWord):
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch("words belong to different alphabets")


# --- parsing and rendering -------------------------------------------------

def parse(text: str, alphabet: Alphabet = gamma3) -> MWord:
    """Read jorb notation: lowercase letters are symbols, an uppercase letter
    stands for its lowercase symbol written twice."""
    text = text.strip()
    letters: list[int] = []
    for ch in text:
        if ch in alphabet.names:
            letters.append(alphabet.index(ch))
        elif ch.isupper() and ch.lower() in alphabet.names:
            i = alphabet.index(ch.lower())
            letters += [i, i]
        else:
            raise WordError(f"unknown character {ch!r} in {text!r}")
    if len(letters) < 2 or len(letters) % 2:
        raise WordError(f"{text!r} expands to {len(letters)} letters; an m-word needs an even count")
    return MWord(alphabet, tuple(letters))


def as_word(x, alphabet: Alphabet = gamma3) -> MWord:
    if isinstance(x, MWord):
        return x
    return parse(x, alphabet)


def render(x: MWord, style: str = "compact") -> str:
    """``lower`` spells every letter; ``compact`` writes each pair of equal
    adjacent letters (taken greedily from the left) as one uppercase letter."""
    names = x.alphabet.names
    if style == "lower":
        return "".join(names[i] for i in x.letters)
    if style != "compact":
        raise ValueError(f"unknown render style {style!r}")
    can_upper = all(ch.upper() != ch and ch.upper() not in names for ch in names)
    out = []
    i, n = 0, len(x.letters)
    while i < n:
        ch = names[x.letters[i]]
        if can_upper and i + 1 < n and x.letters[i + 1] == x.letters[i]:
            out.append(ch.upper())
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


# --- basic measures ---------------------------------------------------------

def concat(x: MWord, y: MWord) -> MWord:
    _check_same(x, y)
    return MWord(x.alphabet, x.letters + y.letters)


def concat_sets(xs, ys) -> set[MWord]:
    """Element-wise concatenation of two sets of words."""
    return {concat(x, y) for x in xs for y in ys}


def _lam(alphabet: Alphabet, letters) -> int:
    v = alphabet.valuation
    total = 0
    for k in range(len(letters) - 1):
        d = abs(v[letters[k]] - v[letters[k + 1]])
        total += -d if k % 2 == 0 else d
    return total


def lam(x: MWord) -> int:
    """lambda-length: the alternating sum of adjacent distances, first term negative."""
    return _lam(x.alphabet, x.letters)


def defect(x: MWord) -> int:
    """v(r) - v(l)."""
    return x.r.value - x.l.value


def shell(x: MWord) -> MWord:
    return MWord(x.alphabet, (x.letters[0], x.letters[-1]))


# --- zip compression ---------------------------------------------------------

def rewrites(x: MWord, aligned: bool | None = None):
    """Every one-step compression of ``x`` as ``(rule, position, result)``.

    Rule ``R1`` deletes the middle and last letter of a ``p r p`` triple at any
    position.  Rule ``R2`` shortens a window ``p r s t`` to ``p t`` when the
    lambda-length of the window equals that of ``p t``; with ``aligned`` only
    windows starting at an even 0-based offset are used, otherwise every
    offset is tried.
    """
    a, w = x.alphabet, x.letters
    n = len(w)
    if aligned is None:
        aligned = settings.aligned
    for i in range(n - 2):
        if w[i] == w[i + 2]:
            yield "R1", i, MWord(a, w[: i + 1] + w[i + 3:])
    step = 2 if aligned else 1
    for i in range(0, n - 3, step):
        p, r, s, t = w[i: i + 4]
        if -a.dist(p, r) + a.dist(r, s) - a.dist(s, t) == -a.dist(p, t):
            yield "R2", i, MWord(a, w[:i] + (p, t) + w[i + 4:])


def zip_step(x: MWord, aligned: bool | None = None) -> MWord | None:
    """One rewrite of the deterministic strategy: leftmost R1, else leftmost R2."""
    if aligned is None:
        aligned = settings.aligned
    a, w = x.alphabet, x.letters
    for i in range(len(w) - 2):
        if w[i] == w[i + 2]:
            return MWord(a, w[: i + 1] + w[i + 3:])
    step = 2 if aligned else 1
    for i in range(0, len(w) - 3, step):
        p, r, s, t = w[i: i + 4]
        if -a.dist(p, r) + a.dist(r, s) - a.dist(s, t) == -a.dist(p, t):
            return MWord(a, w[:i] + (p, t) + w[i + 4:])
    return None


def zip_trace(x: MWord, aligned: bool | None = None) -> list[MWord]:
    """The sequence of words visited by :func:`zip_reduce`, input first."""
    trace = [x]
    lam0 = lam(x)
    while (nxt := zip_step(trace[-1], aligned)) is not None:
        assert nxt.letters[0] == x.letters[0] and nxt.letters[-1] == x.letters[-1]
        assert lam(nxt) == lam0
        trace.append(nxt)
    return trace


def zip_reduce(x: MWord, aligned: bool | None = None) -> MWord:
    """Compress ``x`` to its reduced form.

    The result has the same endpoints and lambda-length as ``x``.
    """
    return zip_trace(x, aligned)[-1]


def is_reduced(x: MWord, aligned: bool | None = None) -> bool:
    return zip_step(x, aligned) is None


def normal_forms(x: MWord, aligned: bool | None = None) -> set[MWord]:
    """All irreducible words reachable from ``x`` under every rule order."""
    memo: dict[MWord, frozenset] = {}

    def go(w):
        if w in memo:
            return memo[w]
        succ = {r for _, _, r in rewrites(w, aligned)}
        if not succ:
            res = frozenset([w])
        else:
            res = frozenset().union(*(go(s) for s in succ))
        memo[w] = res
        return res

    return set(go(x))


def expand_pair(x: MWord, at: int, r: Symbol | str, s: Symbol | str, aligned: bool | None = None) -> MWord:
    """Insert ``r s`` inside the 2-letter window starting at letter ``at``.

    The window ``p t`` becomes ``p r s t``; the insertion must keep the
    lambda-length of the window.  With ``aligned`` (the default setting)
    ``at`` must be even so the window is an m-atom of ``x``.
    """
    if aligned is None:
        aligned = settings.aligned
    a = x.alphabet
    ri = a.index(r) if isinstance(r, str) else r.id
    si = a.index(s) if isinstance(s, str) else s.id
    if not 0 <= at < len(x) - 1:
        raise WordError(f"window start {at} is outside the word")
    if aligned and at % 2:
        raise WordError(f"window start {at} is not an even letter offset of the word")
    p, t = x.letters[at], x.letters[at + 1]
    if -a.dist(p, ri) + a.dist(ri, si) - a.dist(si, t) != -a.dist(p, t):
        raise WordError("insertion changes the lambda-length of the window")
    return MWord(a, x.letters[: at + 1] + (ri, si) + x.letters[at + 1:])


# --- valuation morphism ------------------------------------------------------

def lambda_s(x: MWord) -> int:
    return (lam(x) - defect(x)) // 2


def lambda_p(x: MWord) -> int:
    return (lam(x) + defect(x)) // 2


def phi(x: MWord) -> Quadruple:
    """The quadruple (v(l), lambda_s, lambda_p, v(r)).

    Needs an alphabet valued symmetrically about zero.
    """
    if not x.alphabet.is_symmetric:
        raise WordError("phi needs a valuation symmetric about 0")
    L, D = lam(x), defect(x)
    if (L - D) % 2:
        raise WordError(f"lambda - defect is odd for {x}")
    return Quadruple(x.l.value, (L - D) // 2, (L + D) // 2, x.r.value)


def phi_equivalent(x: MWord, y: MWord) -> bool:
    _check_same(x, y)
    return phi(x) == phi(y)


def reduced_equal(x: MWord, y: MWord, aligned: bool | None = None) -> bool:
    _check_same(x, y)
    return zip_reduce(x, aligned) == zip_reduce(y, aligned)
