"""Impedance functions behind two networks that share the jorb BCBA.

The two schemes have different topologies but realise the same family of
impedances once the element values are mapped. Networks with a different
quadruple can never do that.
"""

import sympy as sp

from jorbkit.enumeration import read_schemes
from jorbkit.impedance import degree_check, equiv_test, phi_necessary, z_of
from jorbkit.synth import ElementBag, synthesize

schemes = dict(read_schemes())
first, second = schemes["47"], schemes["48"]

for sid, e in (("47", first), ("48", second)):
    z = z_of(e)
    print(f"#{sid}: Z(s) = {sp.factor(z.expr())}")

value_map = {
    "R1": "R_2**2/(R_1+R_2)",
    "R2": "R_1*R_2/(R_1+R_2)",
    "L1": "L_1*R_2**2/(R_1+R_2)**2",
    "C1": "C_1",
}
verdict = equiv_test(first, None, second, value_map)
print("mapped #48 reproduces #47:", bool(verdict))

# A network in a different jorb class is ruled out before any algebra.
other = synthesize("CBAB", ElementBag(1, 2, 1))[0]
print("same quadruple as a CBAB network:", phi_necessary(first, other))

# The jorb predicts the degrees of Z(s).
r = degree_check(first)
print(f"power {r.power}, numerator degree {r.deg_num}, denominator degree {r.deg_den}, quadruple {tuple(r.quadruple)}")
