"""Ordered m-alphabets: valuation, duality, distance and the symbol lattice."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class AlphabetMismatch(ValueError):
    """Raised when symbols or words from different alphabets are combined."""


@dataclass(frozen=True)
class Alphabet:
    """A finite, totally ordered alphabet with an integer valuation.

    ``names`` lists the symbol characters in increasing order and
    ``valuation`` gives the integer value of each one.  The order of the
    alphabet is the order induced by the valuation, so the valuation must be
    strictly increasing.
    """

    names: tuple[str, ...]
    valuation: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        valuation = tuple(int(v) for v in self.valuation)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "valuation", valuation)
        if len(names) < 2:
            raise ValueError("an alphabet needs at least two symbols")
        if len(names) != len(valuation):
            raise ValueError("names and valuation differ in length")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate symbol names in {names!r}")
        for ch in names:
            if len(ch) != 1 or not ch.isprintable() or ch.isspace():
                raise ValueError(f"symbol names must be single printable characters, got {ch!r}")
        if any(b <= a for a, b in zip(valuation, valuation[1:])):
            raise ValueError("valuation must be strictly increasing")
        object.__setattr__(self, "_index", {ch: i for i, ch in enumerate(names)})

    @classmethod
    def from_chars(cls, chars: str, valuation=None, label: str = "") -> "Alphabet":
        """Build an alphabet from a string of characters.

        Without an explicit valuation, digit alphabets are valued by their
        digit and everything else by position, centred on zero when that is
        possible with integers.
        """
        if valuation is None:
            if all(ch.isdigit() for ch in chars):
                valuation = [int(ch) for ch in chars]
            elif len(chars) % 2:
                half = len(chars) // 2
                valuation = range(-half, half + 1)
            else:
                valuation = range(len(chars))
        return cls(tuple(chars), tuple(valuation), label)

    @classmethod
    def load(cls, path) -> "Alphabet":
        """Read an alphabet definition file (``<char> <valuation>`` per line)."""
        names, vals = [], []
        for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected '<char> <valuation>'")
            names.append(parts[0])
            vals.append(int(parts[1]))
        pairs = sorted(zip(vals, names))
        return cls(tuple(n for _, n in pairs), tuple(v for v, _ in pairs), Path(path).stem)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return (Symbol(self, i) for i in range(len(self.names)))

    def __repr__(self):
        if self.label:
            return f"Alphabet<{self.label}>"
        return f"Alphabet({''.join(self.names)!r}, {self.valuation})"

    def index(self, ch: str) -> int:
        try:
            return self._index[ch]
        except KeyError:
            raise ValueError(f"unknown symbol {ch!r} for alphabet {''.join(self.names)!r}") from None

    def symbol(self, ch: str) -> "Symbol":
        return Symbol(self, self.index(ch))

    def __getitem__(self, ch: str) -> "Symbol":
        return self.symbol(ch)

    @property
    def alpha(self) -> "Symbol":
        """The initial (smallest) symbol."""
        return Symbol(self, 0)

    @property
    def omega(self) -> "Symbol":
        """The last (largest) symbol."""
        return Symbol(self, len(self.names) - 1)

    @property
    def is_symmetric(self) -> bool:
        """True when the valuation is symmetric about zero."""
        return all(a == -b for a, b in zip(self.valuation, reversed(self.valuation)))

    @property
    def is_unit_spaced(self) -> bool:
        return all(b - a == 1 for a, b in zip(self.valuation, self.valuation[1:]))

    # index-level helpers used by the word algebra
    def dual_index(self, i: int) -> int:
        return len(self.names) - 1 - i

    def dist(self, i: int, j: int) -> int:
        return abs(self.valuation[i] - self.valuation[j])


@dataclass(frozen=True, order=False)
class Symbol:
    """One symbol of an alphabet, identified by its 0-based position."""

    alphabet: Alphabet
    id: int

    def __post_init__(self):
        if not 0 <= self.id < len(self.alphabet):
            raise ValueError(f"symbol index {self.id} out of range")

    @property
    def name(self) -> str:
        return self.alphabet.names[self.id]

    @property
    def value(self) -> int:
        return self.alphabet.valuation[self.id]

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Symbol({self.name!r})"

    def _check(self, other: "Symbol"):
        if not isinstance(other, Symbol):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise AlphabetMismatch(f"{self!r} and {other!r} belong to different alphabets")
        return None

    def __lt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.id < other.id

    def __le__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.id <= other.id

    def __gt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.id > other.id

    def __ge__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.id >= other.id


def _same(a: Symbol, b: Symbol):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a!r} and {b!r} belong to different alphabets")


def dual(a: Symbol) -> Symbol:
    """Mirror a symbol about the centre of its alphabet (a_k -> a_{n+1-k})."""
    return Symbol(a.alphabet, a.alphabet.dual_index(a.id))


def delta(r: Symbol, s: Symbol) -> int:
    """Distance |v(r) - v(s)|."""
    _same(r, s)
    return abs(r.value - s.value)


def meet(a: Symbol, b: Symbol) -> Symbol:
    """The smaller of two symbols."""
    _same(a, b)
    return a if a.id < b.id else b


def join(a: Symbol, b: Symbol) -> Symbol:
    """The larger of two symbols."""
    _same(a, b)
    return b if a.id < b.id else a


# Γ2 is valued {-1, 1} so that its quadruples come out symmetric about 0.
gamma2 = Alphabet(("a", "b"), (-1, 1), "gamma2")
gamma3 = Alphabet(("a", "b", "c"), (-1, 0, 1), "gamma3")
gamma5 = Alphabet(("a", "b", "c", "d", "e"), (-2, -1, 0, 1, 2), "gamma5")

BUILTIN = {"gamma2": gamma2, "gamma3": gamma3, "gamma5": gamma5}


def get_alphabet(spec) -> Alphabet:
    """Resolve a built-in name, an alphabet file path, or an Alphabet."""
    if isinstance(spec, Alphabet):
        return spec
    if spec in BUILTIN:
        return BUILTIN[spec]
    path = Path(spec)
    if path.exists():
        return Alphabet.load(path)
    raise ValueError(f"unknown alphabet {spec!r}; choose one of {sorted(BUILTIN)} or a file")
