"""Find every series-parallel network over a bag of elements that has a given jorb."""

from jorbkit import print_sp, render
from jorbkit.spexpr import eval_orders
from jorbkit.synth import ElementBag, count_sp, ladder, synthesize

bag = ElementBag(2, 3, 1)  # capacitors, resistors, inductors
print("raw series-parallel trees over 2C 3R 1L:", count_sp(bag))

# Three capacitors and two resistors; ten distinct networks give ABABA.
for e in synthesize("ABABA", ElementBag(3, 2, 0)):
    print("  ", print_sp(e))

# One of each reactive element and two resistors yields the BCBA family.
# A network matches when some ordering of its branches evaluates to the target.
for e in synthesize("BCBA", ElementBag(1, 2, 1)):
    print("BCBA:", print_sp(e), "->", sorted(render(w) for w in eval_orders(e)))

# Ladders come straight from the letters.
for form in ("cauer1", "cauer2", "foster1", "foster2"):
    r = ladder("ABABAB", form)
    print(f"{form:8} {r.text:24} {r.verdict}")
r = ladder("BABCB", "cauer1", labelled=True)
print("labelled Cauer I for BABCB:", r.text, r.verdict)
