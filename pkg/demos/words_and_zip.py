"""Walk through m-words: parsing, zip reduction, the quadruple and the operators.

Run with ``python3 demos/words_and_zip.py``.
"""

from jorbkit import op_D, op_E, op_F, op_K, parse, phi, render, zip_reduce
from jorbkit.word import lam, normal_forms, zip_trace

# A raw word lists the value at each end of every element, so "baabbcca"
# is the chain b..a, a..b, b..c, c..a. Capital letters abbreviate doubled ones.
w = parse("baabbcca")
print("raw        ", render(w, "lower"))
print("compact    ", render(w, "compact"))

# Zip removes stutters (p r p) and back-and-forth pairs. Each step is kept.
for step in zip_trace(parse("AAbaBB")):
    print("  zip ->", render(step))

# The quadruple is what survives every admissible rewrite.
for text in ("BCBA", "CABA", "BACAB", "BABCAB"):
    x = parse(text)
    print(f"{text:8} lambda={lam(x):+d}  phi={tuple(phi(x))}")

# A word can have more than one normal form; they always share a quadruple.
forms = normal_forms(parse("aabacb"))
print("normal forms:", sorted(render(f) for f in forms))
print("same quadruple:", len({phi(f) for f in forms}) == 1)

# The four symmetry operators act on the jorb of a network.
x = parse("BCBA")
for name, op in (("D (dual)", op_D), ("E (reverse)", op_E), ("F", op_F), ("K", op_K)):
    print(f"{name:12}", render(zip_reduce(op(x))))
