"""Build jorbs of networks by composing element words in series and parallel."""

from jorbkit import eval_jorb, parse, parse_sp, phi, render
from jorbkit.compose import parallel_reduced, s_core_reduced, series_reduced
from jorbkit.spexpr import eval_orders

A, B, C = (parse(ch) for ch in "ABC")

# R in series with C, then the pair in parallel with L.
rc = series_reduced(B, C)
print("R s C        =", render(rc))
print("(R s C) p L  =", render(parallel_reduced(rc, A)))

# Composition only commutes up to the quadruple.
x, y = parse("BCA"), parse("AB")
left, right = series_reduced(x, y), series_reduced(y, x)
print(f"BCA s AB = {render(left)}, AB s BCA = {render(right)}, same phi: {phi(left) == phi(right)}")

# Whole expressions evaluate directly. Letters or labelled elements both work.
for text in ("(A p (B s (C p A) s B))", "(((R1 p L1) s R2) p C1)", "(R2 p (R1 s L1) p C1)"):
    e = parse_sp(text)
    j = eval_jorb(e)
    print(f"{text:28} -> {render(j):7} {tuple(phi(j))}")

# Changing the order of children can change the string but never the quadruple.
e = parse_sp("((A s B) p (B s (C p A)))")
orders = sorted(render(w) for w in eval_orders(e))
print("all child orders:", orders, {tuple(phi(parse(w))) for w in orders})

print("s-core of BCABA:", render(s_core_reduced(parse("BCABA"))))
