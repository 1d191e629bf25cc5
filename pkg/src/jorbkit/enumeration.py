"""Generation of alternating jorbs, quadruple tables and the catalogue of network classes."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources

from .alphabet import Alphabet, gamma3
from .spexpr import SPExpr, eval_jorb, parse_sp
from .word import MWord, Quadruple, as_word, phi, render, zip_reduce


def letters_for(k: int) -> str:
    if not 1 <= k <= 26:
        raise ValueError("k must be between 1 and 26")
    return "ABCDEFGHIJKLMNOPQRSTUVWXYZ"[:k]


def generate_count(k: int, n: int) -> int:
    """Strings of length n over k letters with no two equal neighbours."""
    return k * (k - 1) ** (n - 1)


def generate(k: int, n: int, start: str | None = None, end: str | None = None) -> list[str]:
    """Uppercase strings of length ``n`` over the first ``k`` letters with no
    repeated neighbours, optionally fixed at the first and last letter.
    Strings come in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alphabet = letters_for(k)
    for x in (start, end):
        if x is not None and x not in alphabet:
            raise ValueError(f"{x!r} is not one of the first {k} letters")
    out = []

    def go(prefix):
        if len(prefix) == n:
            if end is None or prefix[-1] == end:
                out.append("".join(prefix))
            return
        for ch in alphabet:
            if prefix and prefix[-1] == ch:
                continue
            if not prefix and start is not None and ch != start:
                continue
            prefix.append(ch)
            go(prefix)
            prefix.pop()

    go([])
    return out


def alphabet_for(k: int) -> Alphabet:
    """The lowercase alphabet of the first k letters, valued symmetrically when k is odd."""
    return Alphabet.from_chars(letters_for(k).lower())


def tabulate(words, alphabet: Alphabet = gamma3) -> dict[str, Quadruple]:
    return {w: phi(as_word(w, alphabet)) for w in words}


def table_by_ends(words, alphabet: Alphabet = gamma3) -> dict[tuple[str, str], list[tuple[str, Quadruple]]]:
    """Quadruples grouped into cells by first and last letter."""
    cells: dict[tuple[str, str], list] = {}
    for w, q in tabulate(words, alphabet).items():
        cells.setdefault((w[0], w[-1]), []).append((w, q))
    return cells


def reactive_count(x) -> tuple[int, int]:
    """Numbers of capacitor (A) and inductor (C) letters in the compact form."""
    text = render(zip_reduce(as_word(x, gamma3)), "compact")
    return text.count("A"), text.count("C")


def in_catalogue_scope(x, max_reactive: int = 2) -> bool:
    a, c = reactive_count(x)
    return a + c <= max_reactive


# --- catalogue ---------------------------------------------------------------------------

@dataclass
class CatalogueRow:
    jorb: str
    quadruple: Quadruple
    schemes: list[str] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.jorb)

    @property
    def bridges(self) -> list[str]:
        return [s for s in self.schemes if s.startswith("*")]


def _scheme_number(sid: str) -> int:
    return int(sid.lstrip("*"))


def _data(name: str) -> str:
    return resources.files("jorbkit").joinpath("data", name).read_text(encoding="utf-8")


def _parse_quadruple(text: str) -> Quadruple:
    return Quadruple(*(int(x) for x in text.strip("() ").split(",")))


def read_catalogue(text: str | None = None) -> list[CatalogueRow]:
    """Rows of the shipped catalogue (or of CSV text in the same format)."""
    text = _data("catalogue.csv") if text is None else text
    rows = []
    for rec in csv.DictReader(io.StringIO(text)):
        rows.append(CatalogueRow(rec["jorb"], _parse_quadruple(rec["quadruple"]), rec["schemes"].split()))
    return rows


def write_catalogue(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["jorb", "quadruple", "schemes"])
    for r in rows:
        w.writerow([r.jorb, str(r.quadruple), " ".join(r.schemes)])
    return buf.getvalue()


def read_schemes() -> list[tuple[str, SPExpr]]:
    """Scheme expressions shipped with the package, as (id, expression)."""
    return [(r["id"], parse_sp(r["expression"])) for r in csv.DictReader(io.StringIO(_data("schemes.csv")))]


def read_realizations() -> dict[str, list[SPExpr]]:
    """Shipped series-parallel realizations keyed by target jorb."""
    out: dict[str, list[SPExpr]] = {}
    for r in csv.DictReader(io.StringIO(_data("realizations.csv"))):
        out.setdefault(r["target"], []).append(parse_sp(r["expression"]))
    return out


def catalogue_items() -> list[tuple[str, object]]:
    """Every catalogued scheme as (id, expression or jorb text).

    Schemes with a shipped expression are given by the expression; all
    others by the jorb of their catalogue row.
    """
    exprs = dict(read_schemes())
    items = []
    for row in read_catalogue():
        for sid in row.schemes:
            items.append((sid, exprs.get(sid.lstrip("*"), row.jorb)))
    return items


def classify(schemes) -> list[CatalogueRow]:
    """Group schemes by the reduced jorb of each.

    ``schemes`` holds (id, item) pairs where the item is an SPExpr, a jorb
    text or an MWord.  Rows come ordered by jorb length, then
    lexicographically; scheme ids within a row by number.
    """
    groups: dict[str, list[str]] = {}
    quads: dict[str, Quadruple] = {}
    for sid, item in schemes:
        if isinstance(item, (str, MWord)):
            w = zip_reduce(as_word(item, gamma3))
        else:
            w = eval_jorb(item, gamma3)
        key = render(w, "compact")
        groups.setdefault(key, []).append(str(sid))
        quads[key] = phi(w)
    rows = [
        CatalogueRow(j, quads[j], sorted(ids, key=lambda s: (_scheme_number(s), s)))
        for j, ids in groups.items()
    ]
    rows.sort(key=lambda r: (len(r.jorb), r.jorb))
    return rows


def totals(rows) -> dict[int, tuple[int, int]]:
    """Per jorb length: (number of rows, number of schemes)."""
    out: dict[int, list[int]] = {}
    for r in rows:
        t = out.setdefault(r.length, [0, 0])
        t[0] += 1
        t[1] += len(r.schemes)
    return {k: tuple(v) for k, v in sorted(out.items())}


def merged_by_quadruple(rows) -> dict[tuple[int, Quadruple], list[CatalogueRow]]:
    """Rows of equal length sharing a quadruple, the coarser reading of the catalogue."""
    out: dict[tuple[int, Quadruple], list[CatalogueRow]] = {}
    for r in rows:
        out.setdefault((r.length, r.quadruple), []).append(r)
    return out


__all__ = [
    "CatalogueRow",
    "alphabet_for",
    "catalogue_items",
    "classify",
    "generate",
    "generate_count",
    "in_catalogue_scope",
    "merged_by_quadruple",
    "reactive_count",
    "read_catalogue",
    "read_realizations",
    "read_schemes",
    "table_by_ends",
    "tabulate",
    "totals",
    "write_catalogue",
]
