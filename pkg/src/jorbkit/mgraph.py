"""Two-terminal graphs with jorb-named edges and their reduction to a single jorb."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .alphabet import gamma3
from .compose import parallel_reduced, s_core_reduced, s_zero, series_reduced
from .order import geq_q
from .spexpr import Leaf, Node, SPExpr, leaf_word, leaves
from .word import MWord, as_word, render, zip_reduce


class GraphError(ValueError):
    pass


class SlideError(GraphError):
    pass


class NotReduced(GraphError):
    """The search budget ran out before the graph became a single edge."""


# --- terms -----------------------------------------------------------------------
# An edge carries a term: the series/parallel history of the original edges it
# was merged from.  Series children run from the edge's first vertex to its
# second; parallel children are kept sorted by ``key`` (the smallest original
# edge index below them), so the term does not depend on the merge order.


@dataclass(frozen=True)
class Term:
    op: str  # "x" for an original edge, "s" or "p"
    kids: tuple = ()
    word: MWord | None = None
    key: int = 0

    @staticmethod
    def leaf(word: MWord, key: int) -> "Term":
        return Term("x", (), word, key)

    def reversed(self) -> "Term":
        if self.op == "x":
            return self
        kids = tuple(k.reversed() for k in self.kids)
        if self.op == "s":
            kids = kids[::-1]
        return Term(self.op, kids, None, self.key)

    @property
    def label(self) -> MWord:
        return _eval_term(self)


def t_series(a: Term, b: Term) -> Term:
    kids = (a.kids if a.op == "s" else (a,)) + (b.kids if b.op == "s" else (b,))
    return Term("s", kids, None, min(a.key, b.key))


def t_parallel(terms) -> Term:
    kids = []
    for t in terms:
        kids.extend(t.kids if t.op == "p" else (t,))
    kids.sort(key=lambda t: t.key)
    return Term("p", tuple(kids), None, kids[0].key)


@lru_cache(maxsize=None)
def _eval_term(t: Term) -> MWord:
    if t.op == "x":
        return zip_reduce(t.word)
    words = [_eval_term(k) for k in t.kids]
    op = series_reduced if t.op == "s" else parallel_reduced
    acc = words[0]
    for w in words[1:]:
        acc = op(acc, w)
    return acc


def term_text(t: Term) -> str:
    if t.op == "x":
        return render(t.word, "compact")
    inner = f" {t.op} ".join(term_text(k) for k in t.kids)
    return f"({inner})"


# --- graphs ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    term: Term

    @property
    def label(self) -> MWord:
        return self.term.label

    def ends(self) -> frozenset:
        return frozenset((self.u, self.v))

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x} is not an end of edge {self.u}-{self.v}")

    def oriented_from(self, x: str) -> Term:
        """The edge's term read starting at vertex ``x``."""
        return self.term if x == self.u else self.term.reversed()

    def __str__(self):
        return f"{self.u} {self.v} {render(self.label, 'compact')}"


@dataclass(frozen=True)
class MGraph:
    """An undirected multigraph whose edges are named by jorbs."""

    edges: tuple[Edge, ...]
    terminals: tuple[str, str] | None = None
    next_key: int = 0
    fresh: int = field(default=0, compare=False)

    @classmethod
    def from_edges(cls, triples, terminals=None, alphabet=gamma3) -> "MGraph":
        edges = []
        for k, (u, v, label) in enumerate(triples):
            edges.append(Edge(str(u), str(v), Term.leaf(as_word(label, alphabet), k)))
        term = tuple(str(t) for t in terminals) if terminals else None
        return cls(tuple(edges), term, len(edges))

    @property
    def vertices(self) -> list[str]:
        seen: dict[str, None] = {}
        for e in self.edges:
            seen.setdefault(e.u)
            seen.setdefault(e.v)
        for t in self.terminals or ():
            seen.setdefault(t)
        return list(seen)

    def incident(self, x: str) -> list[int]:
        return [i for i, e in enumerate(self.edges) if x in (e.u, e.v)]

    def degree(self, x: str) -> int:
        return sum((e.u == x) + (e.v == x) for e in self.edges)

    def with_terminals(self, a: str, b: str) -> "MGraph":
        return MGraph(self.edges, (str(a), str(b)), self.next_key, self.fresh)

    def _replace(self, edges, next_key=None, fresh=None) -> "MGraph":
        return MGraph(
            tuple(edges),
            self.terminals,
            self.next_key if next_key is None else next_key,
            self.fresh if fresh is None else fresh,
        )

    def state_key(self):
        """Hashable description used to recognise repeated search states."""
        return (
            self.terminals,
            frozenset(itertools.chain.from_iterable(
                [((e.ends(), e.term if e.u <= e.v else e.term.reversed()),) for e in self.edges]
            )),
            len(self.edges),
        )

    def connected(self, a: str, b: str, skip=()) -> bool:
        adj: dict[str, set] = {}
        for i, e in enumerate(self.edges):
            if i in skip:
                continue
            adj.setdefault(e.u, set()).add(e.v)
            adj.setdefault(e.v, set()).add(e.u)
        todo, seen = [a], {a}
        while todo:
            x = todo.pop()
            if x == b:
                return True
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return False

    def to_text(self) -> str:
        lines = [str(e) for e in self.edges]
        if self.terminals:
            lines.append("terminals {} {}".format(*self.terminals))
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        out = ["graph m {"]
        for t in self.terminals or ():
            out.append(f'  "{t}" [shape=doublecircle];')
        for e in self.edges:
            out.append(f'  "{e.u}" -- "{e.v}" [label="{render(e.label, "compact")}"];')
        out.append("}")
        return "\n".join(out) + "\n"


def parse_graph(text: str, alphabet=gamma3) -> MGraph:
    """Read the edge-list format: ``u v <jorb>`` lines and one ``terminals u v`` line."""
    triples, terminals = [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "terminals":
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'terminals u v'")
            terminals = (parts[1], parts[2])
        elif len(parts) == 3:
            triples.append(tuple(parts))
        else:
            raise GraphError(f"line {lineno}: expected 'u v <jorb>'")
    if not triples:
        raise GraphError("graph has no edges")
    return MGraph.from_edges(triples, terminals, alphabet)


def load_graph(path, alphabet=gamma3) -> MGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"), alphabet)


def from_sp(e: SPExpr, alphabet=gamma3) -> MGraph:
    """The two-terminal graph of a series-parallel expression, terminals ``s`` and ``t``."""
    triples = []
    count = itertools.count()

    def build(x, a, b):
        if isinstance(x, Leaf):
            triples.append((a, b, leaf_word(x, alphabet)))
        elif x.op == "p":
            for c in x.children:
                build(c, a, b)
        else:
            nodes = [a] + [f"v{next(count)}" for _ in x.children[:-1]] + [b]
            for c, p, q in zip(x.children, nodes, nodes[1:]):
                build(c, p, q)

    build(e, "s", "t")
    return MGraph.from_edges(triples, ("s", "t"), alphabet)


# --- series/parallel reduction ----------------------------------------------------------

def _terminal_set(g: MGraph) -> set:
    return set(g.terminals or ())


def reduce_parallel(g: MGraph) -> tuple[MGraph, bool]:
    """Merge the first group of edges sharing both ends into one edge."""
    groups: dict[frozenset, list[int]] = {}
    for i, e in enumerate(g.edges):
        if e.u != e.v:
            groups.setdefault(e.ends(), []).append(i)
    for idx in groups.values():
        if len(idx) > 1:
            first = g.edges[idx[0]]
            term = t_parallel([g.edges[i].oriented_from(first.u) for i in idx])
            edges = [e for i, e in enumerate(g.edges) if i not in idx[1:]]
            edges[idx[0]] = Edge(first.u, first.v, term)
            return g._replace(edges), True
    return g, False


def reduce_series(g: MGraph) -> tuple[MGraph, bool]:
    """Merge the two edges at the first non-terminal vertex of degree two."""
    terms = _terminal_set(g)
    for x in g.vertices:
        if x in terms:
            continue
        inc = g.incident(x)
        if len(inc) != 2 or g.degree(x) != 2:
            continue
        i, j = inc
        e1, e2 = g.edges[i], g.edges[j]
        a, b = e1.other(x), e2.other(x)
        term = t_series(e1.oriented_from(a), e2.oriented_from(x))
        edges = list(g.edges)
        edges[i] = Edge(a, b, term)
        del edges[j]
        return g._replace(edges), True
    return g, False


def prune(g: MGraph) -> MGraph:
    """Drop self-loops and dangling non-terminal branches; they carry no current."""
    terms = _terminal_set(g)
    edges = [e for e in g.edges if e.u != e.v]
    changed = True
    while changed:
        changed = False
        deg: dict[str, int] = {}
        for e in edges:
            deg[e.u] = deg.get(e.u, 0) + 1
            deg[e.v] = deg.get(e.v, 0) + 1
        keep = [e for e in edges if not any(deg[x] == 1 and x not in terms for x in (e.u, e.v))]
        if len(keep) != len(edges):
            edges, changed = keep, True
    if g.terminals:
        a = g.terminals[0]
        h = g._replace(edges)
        edges = [e for e in edges if h.connected(a, e.u)]
    return g._replace(edges)


def sp_reduce(g: MGraph) -> MGraph:
    """Apply series and parallel merges until neither applies."""
    g = prune(g)
    while True:
        g, c1 = reduce_parallel(g)
        g, c2 = reduce_series(g)
        if not (c1 or c2):
            return g


def _single_edge_value(g: MGraph) -> MWord | None:
    if g.terminals is None or len(g.edges) != 1:
        return None
    e = g.edges[0]
    a, b = g.terminals
    if e.ends() != frozenset((a, b)):
        return None
    return e.oriented_from(a).label


# --- topological moves ------------------------------------------------------------------

def slide(g: MGraph, movable: int, along: int, detach: bool = False) -> MGraph:
    """Move one end of edge ``movable`` across the adjacent edge ``along``.

    Attach: ``movable`` joins x to z and ``along`` joins y to z; the end at z
    moves to y.  Detach is the reverse: ``movable`` joins x to y, ``along``
    joins y to z, and the end at y moves to z.  Either way the move keeps the
    graph's value only when movable >=_q along, and x must stay connected to
    the inner vertex by the rest of the graph (the branch the two edges were
    spanning).
    """
    u, w = g.edges[movable], g.edges[along]
    if movable == along:
        raise SlideError("an edge cannot slide along itself")
    shared = u.ends() & w.ends()
    if len(shared) != 1 or u.u == u.v or w.u == w.v:
        raise SlideError("the two edges must share exactly one vertex")
    (z,) = shared
    x, y = u.other(z), w.other(z)
    if not geq_q(u.label, w.label):
        raise SlideError(
            f"{render(u.label, 'compact')} is not >=_q {render(w.label, 'compact')}: "
            "needs l(u) <= l(w) and r(u) >= r(w)"
        )
    if detach:
        # movable spans x..z where z is the inner vertex; it moves to y
        inner, dest = z, y
        if not g.connected(x, inner, skip=(movable, along)):
            raise SlideError("no branch joins the fixed end to the inner vertex")
    else:
        inner, dest = y, y
        if not g.connected(x, inner, skip=(movable, along)):
            raise SlideError("no branch joins the fixed end to the far vertex of the path")
    if dest == x:
        raise SlideError("the move would turn the edge into a loop")
    term = u.term
    moved = Edge(u.u, dest, term) if u.v == z else Edge(dest, u.v, term)
    edges = list(g.edges)
    edges[movable] = moved
    return g._replace(edges)


def subdivide(g: MGraph, edge: int, left, right, vertex: str | None = None) -> tuple[MGraph, str]:
    """Split an edge into two series edges meeting at a new vertex.

    ``left`` sits at the edge's first vertex.  The series connection of the
    two new names must reduce to the reduced name of the edge.
    """
    e = g.edges[edge]
    a = e.label.alphabet
    lw, rw = zip_reduce(as_word(left, a)), zip_reduce(as_word(right, a))
    if series_reduced(lw, rw) != zip_reduce(e.label):
        raise GraphError(
            f"{render(lw, 'compact')} in series with {render(rw, 'compact')} "
            f"does not give {render(e.label, 'compact')}"
        )
    name = vertex or f"_{g.fresh}"
    if name in g.vertices:
        raise GraphError(f"vertex {name} already exists")
    edges = list(g.edges)
    edges[edge] = Edge(e.u, name, Term.leaf(lw, g.next_key))
    edges.insert(edge + 1, Edge(name, e.v, Term.leaf(rw, g.next_key + 1)))
    return g._replace(edges, g.next_key + 2, g.fresh + 1), name


def split_candidates(x: MWord) -> list[tuple[MWord, MWord]]:
    """Two-letter splits whose series connection reduces to ``x``, then the s-zero splits."""
    a = x.alphabet
    target = zip_reduce(x)
    atoms = [MWord(a, (i, j)) for i in range(len(a)) for j in range(len(a))]
    out = [(p, q) for p in atoms for q in atoms if series_reduced(p, q) == target]
    z = s_zero(a)
    for pair in ((target, z), (z, target)):
        if pair not in out and series_reduced(*pair) == target:
            out.append(pair)
    return out


def _find_edge(g: MGraph, a: str, b: str) -> int:
    for i, e in enumerate(g.edges):
        if e.ends() == frozenset((a, b)):
            return i
    raise GraphError(f"no edge between {a} and {b}")


def delta_to_star(g: MGraph, triangle, pivot: tuple[str, str], split) -> MGraph:
    """Turn the triangle on ``triangle`` into a star.

    The pivot edge i-j is split (``split`` = names on the i side and j side)
    at a new vertex m; the edge i-k then slides from i to m and j-k from j to
    m, and the two now-parallel edges m-k are merged.
    """
    i, j = pivot
    (k,) = set(triangle) - {i, j}
    pe = _find_edge(g, i, j)
    left, right = split
    if g.edges[pe].u != i:
        left, right = right, left
    g, m = subdivide(g, pe, left, right)
    half_i = next(n for n, e in enumerate(g.edges) if e.ends() == frozenset((i, m)))
    half_j = next(n for n, e in enumerate(g.edges) if e.ends() == frozenset((j, m)))
    g = slide(g, _find_edge(g, i, k), half_i)
    g = slide(g, _find_edge(g, j, k), half_j)
    g, _ = reduce_parallel(g)
    return g


# --- search -------------------------------------------------------------------------------

def _moves(g: MGraph):
    """Every admissible single move, in a fixed order."""
    n = len(g.edges)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for detach in (False, True):
                try:
                    yield ("slide", i, j, detach), slide(g, i, j, detach)
                except GraphError:
                    pass
    verts = g.vertices
    for tri in itertools.combinations(verts, 3):
        try:
            for a, b in itertools.combinations(tri, 2):
                _find_edge(g, a, b)
        except GraphError:
            continue
        for pivot in itertools.permutations(tri, 2):
            pe = g.edges[_find_edge(g, *pivot)]
            for split in split_candidates(pe.label):
                try:
                    yield ("delta", tri, pivot, split), delta_to_star(g, tri, pivot, split)
                except GraphError:
                    pass


@dataclass
class ThetaResult:
    value: MWord
    moves: list
    graph: MGraph

    @property
    def text(self) -> str:
        return render(self.value, "compact")


def reduce_graph(g: MGraph, pair=None, depth: int = 6, collect: bool = False):
    """Search for a move sequence that makes ``g`` series-parallel between the pair.

    Series/parallel merges run to a fixpoint after every move; then slides and
    triangle-to-star moves are tried breadth by breadth up to ``depth``.  The
    first success at the smallest depth is returned (or, with ``collect``, all
    successes at that depth).
    """
    if pair is not None:
        g = g.with_terminals(*pair)
    if g.terminals is None:
        raise GraphError("no terminals given")
    start = sp_reduce(g)
    v = _single_edge_value(start)
    if v is not None:
        return [ThetaResult(v, [], start)] if collect else ThetaResult(v, [], start)
    frontier = [(start, [])]
    seen = {start.state_key()}
    for _ in range(depth):
        found, nxt = [], []
        for h, path in frontier:
            for move, h2 in _moves(h):
                h2 = sp_reduce(h2)
                key = h2.state_key()
                if key in seen:
                    continue
                seen.add(key)
                v = _single_edge_value(h2)
                if v is not None:
                    res = ThetaResult(v, path + [move], h2)
                    if not collect:
                        return res
                    found.append(res)
                else:
                    nxt.append((h2, path + [move]))
        if found:
            return found
        frontier = nxt
        if not frontier:
            break
    raise NotReduced(f"not reduced within depth {depth}")


def theta(g: MGraph, pair=None, depth: int = 6) -> MWord:
    """The jorb of the two-pole between ``pair`` (default: the graph's terminals).

    For a pair (u, u) the value is the reduced s-core of the two-pole between
    u and the first other vertex.
    """
    pair = tuple(pair) if pair is not None else g.terminals
    if pair is None:
        raise GraphError("no terminals given")
    a, b = str(pair[0]), str(pair[1])
    if a == b:
        others = [x for x in g.vertices if x != a]
        if not others:
            raise GraphError("graph has a single vertex")
        return s_core_reduced(theta(g, (a, others[0]), depth))
    return reduce_graph(g, (a, b), depth).value


def theta_sp_expr(g: MGraph, pair=None) -> SPExpr | None:
    """The series-parallel expression (over edge names) found by plain reduction, if any."""
    h = sp_reduce(g.with_terminals(*pair) if pair else g)
    if _single_edge_value(h) is None:
        return None
    return _term_to_sp(h.edges[0].oriented_from(h.terminals[0]))


def _term_to_sp(t: Term) -> SPExpr:
    if t.op == "x":
        return Leaf("J", render(t.word, "compact"))
    return Node(t.op, tuple(_term_to_sp(k) for k in t.kids))


__all__ = [
    "Edge",
    "GraphError",
    "MGraph",
    "NotReduced",
    "SlideError",
    "Term",
    "ThetaResult",
    "delta_to_star",
    "from_sp",
    "load_graph",
    "parse_graph",
    "prune",
    "reduce_graph",
    "reduce_parallel",
    "reduce_series",
    "slide",
    "sp_reduce",
    "split_candidates",
    "subdivide",
    "term_text",
    "theta",
    "theta_sp_expr",
]
