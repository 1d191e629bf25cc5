"""Reduce non-series-parallel graphs (bridges, K4) to a single jorb.

Edges carry jorbs; plain series/parallel merging is tried first, then slides
and triangle-to-star moves are searched breadth-first.
"""

from pathlib import Path

from jorbkit import phi, render
from jorbkit.mgraph import load_graph, reduce_graph, theta

HERE = Path(__file__).parent / "graphs"

for name in ("ladder_bridge", "double_bridge", "k4"):
    g = load_graph(HERE / f"{name}.txt")
    res = reduce_graph(g)
    print(f"{name}: {render(res.value)} {tuple(phi(res.value))} after {len(res.moves)} move(s)")
    for move in res.moves:
        print("   ", move)

# Every terminal pair of K4, plus a single vertex (its s-core).
k4 = load_graph(HERE / "k4.txt")
vertices = sorted(k4.vertices)
for i, a in enumerate(vertices):
    for b in vertices[i:]:
        v = theta(k4, (a, b))
        print(f"K4 ({a},{b}) {render(v):10} {tuple(phi(v))}")
