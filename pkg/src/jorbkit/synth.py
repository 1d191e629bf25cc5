"""Series-parallel topology enumeration, target matching and ladder forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .alphabet import gamma3
from .spexpr import (
    KIND_LETTER,
    LETTER_KIND,
    Leaf,
    Node,
    SPExpr,
    canonical,
    eval_jorb,
    eval_orders,
    parse_sp,
    print_sp,
    relabel,
)
from .word import MWord, Quadruple, as_word, phi

KINDS = ("C", "R", "L")


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ElementBag:
    """Counts of capacitors, resistors and inductors."""

    i: int = 0  # capacitors
    j: int = 0  # resistors
    k: int = 0  # inductors

    def __post_init__(self):
        if min(self.i, self.j, self.k) < 0 or self.n < 1:
            raise ValueError("an element bag needs non-negative counts and at least one element")

    @property
    def n(self) -> int:
        return self.i + self.j + self.k

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def kinds(self) -> list[str]:
        return ["C"] * self.i + ["R"] * self.j + ["L"] * self.k

    @classmethod
    def of(cls, e: SPExpr) -> "ElementBag":
        from .spexpr import leaves

        counts = {"C": 0, "R": 0, "L": 0}
        for leaf in leaves(e):
            counts[leaf.kind] += 1
        return cls(counts["C"], counts["R"], counts["L"])


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def count_sp(bag: ElementBag) -> int:
    """Number of binary series/parallel trees with labelled leaf positions.

    Leaf-kind arrangements times binary tree shapes times operator choices.
    """
    n = bag.n
    return factorial(n) // (factorial(bag.i) * factorial(bag.j) * factorial(bag.k)) * catalan(n - 1) * 2 ** (n - 1)


# --- raw enumeration -----------------------------------------------------------

def _binary_shapes(n: int):
    """All full binary trees with n leaves; leaves are None, nodes are pairs."""
    if n == 1:
        yield None
        return
    for left in range(1, n):
        for a in _binary_shapes(left):
            for b in _binary_shapes(n - left):
                yield (a, b)


def _fill(shape, kinds, ops):
    """Place leaf kinds (in order) and operators (in preorder) onto a shape."""
    kinds, ops = iter(kinds), iter(ops)

    def go(s):
        if s is None:
            return Leaf(next(kinds))
        op = next(ops)
        return Node(op, (go(s[0]), go(s[1])))

    return go(shape)


def _kind_arrangements(bag: ElementBag):
    """Distinct orderings of the multiset of element kinds."""
    counts = dict(zip(KINDS, bag.as_tuple()))
    n = bag.n

    def go(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for kd in KINDS:
            if counts[kd]:
                counts[kd] -= 1
                prefix.append(kd)
                yield from go(prefix)
                prefix.pop()
                counts[kd] += 1

    yield from go([])


def enumerate_raw(bag: ElementBag, bound: int = 7):
    """Every binary series/parallel tree over the bag (no deduplication)."""
    if bag.n > bound:
        raise BoundExceeded(f"{bag.n} elements exceed the enumeration bound {bound}")
    shapes = list(_binary_shapes(bag.n))
    arrangements = list(_kind_arrangements(bag))
    for shape in shapes:
        for ops in itertools.product("sp", repeat=bag.n - 1):
            for kinds in arrangements:
                yield _fill(shape, kinds, ops)


# --- deduplicated enumeration ----------------------------------------------------

def _sub_bags(bag):
    """All non-empty proper sub-multisets of a count vector."""
    ranges = [range(c + 1) for c in bag]
    for sub in itertools.product(*ranges):
        if 0 < sum(sub) < sum(bag):
            yield sub


def _bag_partitions(bag):
    """Multiset partitions of a count vector into >= 2 parts, parts non-increasing."""

    def go(rest, maxpart):
        if sum(rest) == 0:
            yield []
            return
        ranges = [range(c + 1) for c in rest]
        for part in itertools.product(*ranges):
            if sum(part) == 0 or part > maxpart:
                continue
            remaining = tuple(a - b for a, b in zip(rest, part))
            for tail in go(remaining, part):
                yield [part] + tail

    for parts in go(tuple(bag), tuple(bag)):
        if len(parts) >= 2:
            yield parts


@lru_cache(maxsize=None)
def _trees(bag: tuple[int, int, int], op: str) -> frozenset:
    """Canonical unlabeled trees over ``bag`` whose root is an ``op`` node."""
    other = "p" if op == "s" else "s"
    out = set()
    for parts in _bag_partitions(bag):
        choices = [_child_trees(p, other) for p in parts]
        for kids in itertools.product(*choices):
            out.add(canonical(Node(op, tuple(kids)), keep_labels=False))
    return frozenset(out)


@lru_cache(maxsize=None)
def _child_trees(bag: tuple[int, int, int], op: str) -> frozenset:
    if sum(bag) == 1:
        return frozenset([Leaf(KINDS[bag.index(1)])])
    return _trees(bag, op)


def _sort_key(e: SPExpr):
    return print_sp(e, "letter")


def enumerate_sp(bag: ElementBag, dedup: bool = True, bound: int = 7) -> list[SPExpr]:
    """All series/parallel expressions over the bag.

    Without ``dedup`` this is the raw binary enumeration whose size is
    :func:`count_sp`.  With ``dedup`` the result holds one canonical
    representative per topology up to commutativity, associativity and
    renaming of same-kind elements; elements are then numbered per kind.
    """
    if bag.n > bound:
        raise BoundExceeded(f"{bag.n} elements exceed the enumeration bound {bound}")
    if not dedup:
        return list(enumerate_raw(bag, bound))
    t = bag.as_tuple()
    if bag.n == 1:
        found = {Leaf(KINDS[t.index(1)])}
    else:
        found = set(_trees(t, "s")) | set(_trees(t, "p"))
    return [relabel(e) for e in sorted(found, key=_sort_key)]


def dedup_by_canonical(exprs) -> set[SPExpr]:
    """Reference deduplication: canonicalise each expression independently."""
    return {canonical(e, keep_labels=False) for e in exprs}


# --- target matching -----------------------------------------------------------------

def synthesize(target, bag: ElementBag, match: str = "reduced", bound: int = 7) -> list[SPExpr]:
    """Expressions over ``bag`` whose jorb matches ``target``.

    A topology matches when evaluating its children in some order yields the
    target.  ``target`` is a jorb (text or MWord) or a Quadruple.  ``match`` selects
    reduced-string equality or Phi equality; a Quadruple target always
    matches on Phi.  An empty list means no topology over the bag realises
    the target.
    """
    if match not in ("reduced", "phi"):
        raise ValueError("match must be 'reduced' or 'phi'")
    if isinstance(target, Quadruple) or (isinstance(target, tuple) and len(target) == 4):
        want_phi = Quadruple(*target)
        match = "phi"
        want = None
    else:
        want = as_word(target, gamma3)
        from .word import zip_reduce

        want = zip_reduce(want)
        want_phi = phi(want)
    out = []
    for e in enumerate_sp(bag, dedup=True, bound=bound):
        if not _degree_feasible(e, want_phi):
            continue
        names = eval_orders(e, gamma3)
        if match == "reduced" and want in names:
            out.append(e)
        elif match == "phi" and any(phi(j) == want_phi for j in names):
            out.append(e)
    return out


def _degree_feasible(e: SPExpr, want: Quadruple) -> bool:
    """Cheap pruning: lambda_s and lambda_p of an SP network are bounded by
    the number of reactive elements, since each of them raises the degree of
    the impedance numerator or denominator by at most one."""
    reactive = sum(1 for leaf in _leaves(e) if leaf.kind in ("C", "L"))
    return want.ls <= reactive + 1 and want.lp <= reactive + 1


def _leaves(e):
    from .spexpr import leaves

    return leaves(e)


# --- ladders -------------------------------------------------------------------------------

@dataclass
class LadderResult:
    expr: SPExpr
    text: str
    verdict: str  # "reduced", "phi", "reversed" or "mismatch"
    evaluated: MWord

    @property
    def ok(self) -> bool:
        return self.verdict in ("reduced", "phi", "reversed")


def _letters(jorb) -> list[str]:
    text = as_word(jorb, gamma3).compact
    if not all(ch in LETTER_KIND for ch in text):
        raise ValueError(f"ladder forms need a jorb written in uppercase letters, got {text!r}")
    return list(text)


def _nest(items, ops):
    """Right-nested chain: items[0] ops[0] (items[1] ops[1] (...))."""
    expr = items[-1]
    for item, op in zip(reversed(items[:-1]), reversed(ops)):
        expr = Node(op, (item, expr))
    return expr


def _verdict(expr: SPExpr, want: MWord) -> tuple[str, MWord]:
    from .ops import op_E
    from .word import zip_reduce

    got = eval_jorb(expr)
    want = zip_reduce(want)
    if got == want:
        return "reduced", got
    if phi(got) == phi(want):
        if got == zip_reduce(op_E(want)):
            return "reversed", got
        return "phi", got
    return "mismatch", got


def ladder(jorb, form: str = "cauer1", labelled: bool = False, reverse: bool | None = None) -> LadderResult:
    """Emit a Cauer or Foster ladder for a jorb and check it.

    Cauer forms turn the letters of the jorb into ladder branches joined
    alternately in series and in parallel, ``Z1 s(Y2 p(Z3 s(...)))``.  The two
    Cauer forms differ in which branches are read as admittances (marked
    ``*`` in labelled output).  ``reverse`` picks the reading direction of the
    letters; by default the unlabelled Cauer I ladder is read from the last
    letter and every other Cauer ladder from the first.

    Foster I is a series chain ``A s BA s BA s B`` and Foster II a parallel
    bank ``AB p AB p AB``; both need a jorb alternating between two letters.

    The emitted expression is evaluated and compared with the requested
    jorb; the verdict is part of the result.
    """
    letters = _letters(jorb)
    want = as_word(jorb, gamma3)
    if form in ("cauer1", "cauer2"):
        if reverse is None:
            reverse = form == "cauer1" and not labelled
        branch = letters[::-1] if reverse else letters
        ops = ["s" if i % 2 == 0 else "p" for i in range(len(branch) - 1)]
        if labelled:
            shunt = 1 if form == "cauer1" else 0
            leaves_ = [
                Leaf(lf.kind, lf.label, i % 2 == shunt) for i, lf in enumerate(_labelled_leaves(branch))
            ]
        else:
            leaves_ = [Leaf(LETTER_KIND[ch]) for ch in branch]
        expr = _nest(leaves_, ops) if len(leaves_) > 1 else leaves_[0]
        text = _ladder_text(leaves_, ops, letter=not labelled)
    elif form in ("foster1", "foster2"):
        expr, text = _foster(letters, form)
    else:
        raise ValueError(f"unknown ladder form {form!r}")
    verdict, got = _verdict(expr, want)
    return LadderResult(expr, text, verdict, got)


def _labelled_leaves(letters):
    counters: dict[str, int] = {}
    out = []
    for ch in letters:
        kind = LETTER_KIND[ch]
        counters[kind] = counters.get(kind, 0) + 1
        out.append(Leaf(kind, f"{kind}{counters[kind]}"))
    return out


def _ladder_text(leaves_, ops, letter: bool = False) -> str:
    """Ladder notation ``Z1 s(Y2 p(Z3 s(...)))``."""
    def name(lf):
        base = lf.letter if letter else lf.label
        return base + ("*" if lf.admittance and not letter else "")

    if len(leaves_) == 1:
        return name(leaves_[0])
    if letter:
        text = name(leaves_[-1])
        for lf, op in zip(reversed(leaves_[:-1]), reversed(ops)):
            text = f"{name(lf)} {op} ({text})" if text.count(" ") else f"{name(lf)} {op} {text}"
        return text
    text = f"({name(leaves_[-1])})"
    for lf, op in zip(reversed(leaves_[:-1]), reversed(ops)):
        text = f"{name(lf)} {op}{text}"
        text = f"({text})"
    return text[1:-1]


def _foster(letters, form):
    pair = letters[:2]
    if len(set(pair)) != 2 or any(ch != pair[i % 2] for i, ch in enumerate(letters)):
        raise ValueError("Foster forms need a jorb alternating between two letters")
    a, b = pair
    if form == "foster2":
        if len(letters) % 2:
            raise ValueError("Foster II needs an even number of letters")
        k = len(letters) // 2
        unit = a + b
        expr = Node("p", tuple(Leaf("J", unit) for _ in range(k)))
        text = " p ".join([unit] * k)
        return expr, text
    # Foster I: first letter, the interior letter pairs, then the last letter
    if len(letters) < 3:
        raise ValueError("Foster I needs at least three letters")
    inner = letters[1:-1]
    if len(inner) % 2:
        raise ValueError("Foster I needs an even number of letters")
    units = [inner[i] + inner[i + 1] for i in range(0, len(inner), 2)]
    items = [letters[0]] + units + [letters[-1]]
    expr = Node("s", tuple(Leaf(LETTER_KIND[x]) if len(x) == 1 else Leaf("J", x) for x in items))
    return expr, " s ".join(items)
