"""Group the shipped two-reactance schemes by jorb and print the summary table."""

from jorbkit.enumeration import catalogue_items, classify, merged_by_quadruple, totals

rows = classify(catalogue_items())
for r in rows:
    print(f"{r.jorb:6} {str(tuple(r.quadruple)):16} {' '.join(r.schemes)}")

print()
for length, (n_rows, n_schemes) in totals(rows).items():
    print(f"length {length}: {n_rows} jorbs, {n_schemes} schemes")

# Rows that share a quadruple but not a string.
for (length, q), group in merged_by_quadruple(rows).items():
    if len(group) > 1:
        print("shared quadruple", q, [g.jorb for g in group])
