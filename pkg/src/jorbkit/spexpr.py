"""Series-parallel expression trees over typed circuit elements."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import permutations, product

from .alphabet import gamma3
from .compose import parallel_reduced, series_reduced
from .word import MWord, parse, zip_reduce


class SPSyntaxError(ValueError):
    pass


# element kind -> jorb letter (capacitor A, resistor B, inductor C)
KIND_LETTER = {"C": "A", "R": "B", "L": "C"}
LETTER_KIND = {v: k for k, v in KIND_LETTER.items()}
KIND_NAMES = {"C": "capacitor", "R": "resistor", "L": "inductor"}


@dataclass(frozen=True)
class Leaf:
    """A circuit element (kind ``C``, ``R`` or ``L``) or a literal jorb (kind ``J``).

    ``label`` is the element name such as ``"R1"`` (empty for unlabeled
    elements) or, for literal jorbs, the jorb text.  ``admittance`` only records
    the ``*`` marker of ladder notation.
    """

    kind: str
    label: str = ""
    admittance: bool = False

    @property
    def letter(self) -> str:
        return KIND_LETTER.get(self.kind, self.label)


@dataclass(frozen=True)
class Node:
    op: str  # "s" or "p"
    children: tuple

    def __post_init__(self):
        if self.op not in ("s", "p"):
            raise ValueError(f"unknown operator {self.op!r}")
        if len(self.children) < 2:
            raise ValueError("a node needs at least two children")


SPExpr = Leaf | Node


def series_of(*children) -> Node:
    return Node("s", tuple(children))


def parallel_of(*children) -> Node:
    return Node("p", tuple(children))


# --- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([RLC]\d+\*?)|([A-Za-z]+\*?))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SPSyntaxError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


def _atom(tok: str) -> Leaf:
    star = tok.endswith("*")
    body = tok.rstrip("*")
    if re.fullmatch(r"[RLC]\d+", body):
        return Leaf(body[0], body, star)
    if body in LETTER_KIND:
        return Leaf(LETTER_KIND[body], "", star)
    try:
        parse(body)
    except ValueError:
        raise SPSyntaxError(f"unknown atom {tok!r}") from None
    return Leaf("J", body, star)


def parse_sp(text: str) -> SPExpr:
    """Parse ``s``/``p`` notation, e.g. ``"(C1 p (R2 s (R1 p L1)))"``.

    Operators at one parenthesis level must all be the same; a single
    parenthesised term is allowed, as in ladder notation ``p(R3)``.
    """
    toks = _tokenize(text)
    if not toks:
        raise SPSyntaxError("empty expression")
    pos = 0

    def term():
        nonlocal pos
        if pos >= len(toks):
            raise SPSyntaxError(f"unexpected end of {text!r}")
        tok = toks[pos]
        if tok == "(":
            pos += 1
            e = seq()
            if pos >= len(toks) or toks[pos] != ")":
                raise SPSyntaxError(f"missing ')' in {text!r}")
            pos += 1
            return e
        if tok in (")", "s", "p"):
            raise SPSyntaxError(f"unexpected {tok!r} in {text!r}")
        pos += 1
        return _atom(tok)

    def seq():
        nonlocal pos
        items = [term()]
        op = None
        while pos < len(toks) and toks[pos] in ("s", "p"):
            if op is not None and toks[pos] != op:
                raise SPSyntaxError(f"mixed operators without parentheses in {text!r}")
            op = toks[pos]
            pos += 1
            items.append(term())
        if op is None:
            return items[0]
        return Node(op, tuple(items))

    e = seq()
    if pos != len(toks):
        raise SPSyntaxError(f"trailing input {' '.join(toks[pos:])!r} in {text!r}")
    return e


# --- printing ----------------------------------------------------------------------

def print_sp(e: SPExpr, style: str = "label", star: bool = False) -> str:
    """Render an expression.

    ``label`` prints element labels where present, ``letter`` prints the jorb
    letters A/B/C only.  Every node is parenthesised.
    """
    if isinstance(e, Leaf):
        if e.kind == "J":
            txt = e.label
        elif style == "letter" or not e.label:
            txt = e.letter
        else:
            txt = e.label
        return txt + ("*" if star and e.admittance else "")
    inner = f" {e.op} ".join(print_sp(c, style, star) for c in e.children)
    return f"({inner})"


def __str__(self):
    return print_sp(self)


Leaf.__str__ = __str__
Node.__str__ = __str__


# --- structure ------------------------------------------------------------------

def leaves(e: SPExpr):
    if isinstance(e, Leaf):
        yield e
    else:
        for c in e.children:
            yield from leaves(c)


def flatten(e: SPExpr) -> SPExpr:
    """Merge nested nodes that use the same operator."""
    if isinstance(e, Leaf):
        return e
    kids = []
    for c in e.children:
        c = flatten(c)
        if isinstance(c, Node) and c.op == e.op:
            kids.extend(c.children)
        else:
            kids.append(c)
    return Node(e.op, tuple(kids))


def _shape_key(e: SPExpr) -> str:
    return print_sp(e, "letter")


def canonical(e: SPExpr, keep_labels: bool = True) -> SPExpr:
    """Flatten and sort children into a canonical order.

    Children are ordered by their letter-only print first, then by labels,
    so same-kind elements are interchangeable for the ordering.
    """
    e = flatten(e)
    if isinstance(e, Leaf):
        return e if keep_labels else Leaf(e.kind, "" if e.kind != "J" else e.label)
    kids = [canonical(c, keep_labels) for c in e.children]
    kids.sort(key=lambda c: (_shape_key(c), print_sp(c)))
    return Node(e.op, tuple(kids))


def relabel(e: SPExpr) -> SPExpr:
    """Number the elements of each kind depth-first: C1, C2, ..., R1, ..."""
    counters: dict[str, int] = {}

    def go(x):
        if isinstance(x, Leaf):
            if x.kind == "J":
                return x
            counters[x.kind] = counters.get(x.kind, 0) + 1
            return Leaf(x.kind, f"{x.kind}{counters[x.kind]}", x.admittance)
        return Node(x.op, tuple(go(c) for c in x.children))

    return go(e)


# --- evaluation -------------------------------------------------------------------

def leaf_word(leaf: Leaf, alphabet=gamma3) -> MWord:
    if leaf.kind == "J":
        return parse(leaf.label, alphabet)
    return parse(KIND_LETTER[leaf.kind], alphabet)


def _operands(e: Node) -> list:
    """Children of ``e`` with nested nodes of the same operator spliced in."""
    out = []
    for c in e.children:
        if isinstance(c, Node) and c.op == e.op:
            out.extend(_operands(c))
        else:
            out.append(c)
    return out


def eval_jorb(e: SPExpr, alphabet=gamma3) -> MWord:
    """Fold the tree with reduced series/parallel connection.

    Runs of the same operator are read as one n-ary connection folded left to
    right, so the result does not depend on how such a run is bracketed.
    """
    if isinstance(e, Leaf):
        return zip_reduce(leaf_word(e, alphabet))
    words = [eval_jorb(c, alphabet) for c in _operands(e)]
    op = series_reduced if e.op == "s" else parallel_reduced
    return reduce(op, words)


def eval_orders(e: SPExpr, alphabet=gamma3) -> frozenset:
    """Reduced jorbs reachable by evaluating the children of every node in
    every order.

    Reduced connection is not commutative at the string level (only up to
    Phi), so one topology can name more than one reduced jorb.
    """
    return _eval_orders(e, alphabet)


@lru_cache(maxsize=65536)
def _eval_orders(e, alphabet):
    if isinstance(e, Leaf):
        return frozenset([eval_jorb(e, alphabet)])
    kids = [_eval_orders(c, alphabet) for c in _operands(e)]
    op = series_reduced if e.op == "s" else parallel_reduced
    out = set()
    for perm in permutations(kids):
        for combo in product(*perm):
            out.add(reduce(op, combo))
    return frozenset(out)
