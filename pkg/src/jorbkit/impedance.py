"""Exact impedance functions of valued series-parallel networks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import sympy as sp

from .spexpr import Leaf, Node, SPExpr, eval_jorb, leaves
from .word import Quadruple, phi

s = sp.Symbol("s")


@dataclass(frozen=True)
class ValuedElement:
    kind: str  # "R", "L" or "C"
    value: object  # positive rational or sympy expression

    def __post_init__(self):
        if self.kind not in ("R", "L", "C"):
            raise ValueError(f"unknown element kind {self.kind!r}")
        v = sp.sympify(self.value)
        if v.is_number and not v.is_positive:
            raise ValueError(f"element values must be positive, got {self.value}")

    def impedance(self):
        v = sp.sympify(self.value)
        if self.kind == "R":
            return v
        if self.kind == "L":
            return v * s
        return 1 / (v * s)


@dataclass(frozen=True)
class RationalZ:
    """Z(s) = s**power * num(s) / den(s).

    ``num`` and ``den`` are coefficient lists in ascending powers of s with
    nonzero constant terms, coprime, and the leading denominator coefficient
    positive.
    """

    num: tuple
    den: tuple
    power: int

    @classmethod
    def from_expr(cls, expr) -> "RationalZ":
        expr = sp.cancel(sp.together(expr))
        n, d = sp.fraction(expr)
        return cls._from_polys(sp.Poly(sp.expand(n), s), sp.Poly(sp.expand(d), s))

    @classmethod
    def _from_polys(cls, pn, pd) -> "RationalZ":
        if pd.is_zero:
            raise ZeroDivisionError("denominator vanishes")
        g = sp.gcd(pn, pd)
        pn, pd = sp.div(pn, g)[0], sp.div(pd, g)[0]
        if pn.is_zero:
            return cls((sp.Integer(0),), (sp.Integer(1),), 0)
        num = list(reversed(pn.all_coeffs()))
        den = list(reversed(pd.all_coeffs()))
        # factor out the powers of s so both constant terms are nonzero
        power = 0
        while num[0] == 0:
            num.pop(0)
            power += 1
        while den[0] == 0:
            den.pop(0)
            power -= 1
        lead = den[-1]
        if lead.is_number and lead < 0 or (not lead.is_number and sp.simplify(lead).could_extract_minus_sign()):
            num = [-c for c in num]
            den = [-c for c in den]
        tidy = lambda c: c if c.is_number else sp.simplify(c)  # noqa: E731
        return cls(tuple(map(tidy, num)), tuple(map(tidy, den)), power)

    @property
    def deg_num(self) -> int:
        return len(self.num) - 1

    @property
    def deg_den(self) -> int:
        return len(self.den) - 1

    def expr(self):
        n = sum(c * s**i for i, c in enumerate(self.num))
        d = sum(c * s**i for i, c in enumerate(self.den))
        return s**self.power * n / d

    def __call__(self, x):
        return self.expr().subs(s, x)

    def to_json(self) -> dict:
        return {
            "power": self.power,
            "numerator": [str(c) for c in self.num],
            "denominator": [str(c) for c in self.den],
        }

    def __str__(self):
        return str(sp.simplify(self.expr()))


def element_symbols(e: SPExpr) -> dict[str, ValuedElement]:
    """Symbolic values named after the labels (R1 -> symbol R_1, ...)."""
    out = {}
    for leaf in leaves(e):
        if leaf.kind == "J":
            raise ValueError("impedance needs element leaves, not jorb literals")
        if not leaf.label:
            raise ValueError("impedance needs labelled elements (R1, C2, ...)")
        name = f"{leaf.label[0]}_{leaf.label[1:]}"
        out[leaf.label] = ValuedElement(leaf.kind, sp.Symbol(name, positive=True))
    return out


def _z_expr(e: SPExpr, values):
    if isinstance(e, Leaf):
        if e.kind == "J":
            raise ValueError("impedance needs element leaves, not jorb literals")
        try:
            el = values[e.label]
        except KeyError:
            raise ValueError(f"missing value for {e.label or e.kind}") from None
        if not isinstance(el, ValuedElement):
            el = ValuedElement(e.kind, el)
        if el.kind != e.kind:
            raise ValueError(f"value for {e.label} is a {el.kind}, the leaf is a {e.kind}")
        return el.impedance()
    parts = [_z_expr(c, values) for c in e.children]
    if e.op == "s":
        return sp.Add(*parts)
    return 1 / sp.Add(*[1 / p for p in parts])


def _z_polys(e: SPExpr, values):
    """(numerator, denominator) over the rationals; numeric values only."""
    if isinstance(e, Leaf):
        el = values[e.label]
        v = sp.Rational(el.value if isinstance(el, ValuedElement) else el)
        one = sp.Poly(1, s, domain="QQ")
        if e.kind == "R":
            return sp.Poly(v, s, domain="QQ"), one
        if e.kind == "L":
            return sp.Poly(v * s, s, domain="QQ"), one
        return one, sp.Poly(v * s, s, domain="QQ")
    n, d = _z_polys(e.children[0], values)
    for c in e.children[1:]:
        n2, d2 = _z_polys(c, values)
        if e.op == "s":
            n, d = n * d2 + n2 * d, d * d2
        else:
            n, d = n * n2, d * n2 + d2 * n
        g = n.gcd(d)
        n, d = n.exquo(g), d.exquo(g)
    return n, d


def _numeric(e: SPExpr, values) -> bool:
    for leaf in leaves(e):
        el = values.get(leaf.label) if leaf.kind != "J" else None
        if el is None:
            return False
        if isinstance(el, ValuedElement):
            if el.kind != leaf.kind:
                return False
            el = el.value
        if not sp.sympify(el).is_Rational:
            return False
    return True


def z_of(e: SPExpr, values=None) -> RationalZ:
    """Impedance of an expression; without ``values`` the labels become symbols."""
    if values is None:
        values = element_symbols(e)
    elif _numeric(e, values):
        return RationalZ._from_polys(*_z_polys(e, values))
    return RationalZ.from_expr(_z_expr(e, values))


def z_expr(e: SPExpr, values=None):
    if values is None:
        values = element_symbols(e)
    return sp.cancel(sp.together(_z_expr(e, values)))


def random_values(e: SPExpr, rng: random.Random) -> dict[str, ValuedElement]:
    """Generic positive rationals with large prime denominators."""
    primes = [1000003, 1000033, 1000037, 1000039, 1000081, 1000099]
    out = {}
    for leaf in leaves(e):
        key = leaf.label
        if key in out:
            continue
        num = rng.randint(1, 10**6)
        out[key] = ValuedElement(leaf.kind, sp.Rational(num, rng.choice(primes)))
    return out


@dataclass
class DegreeReport:
    quadruple: Quadruple
    power: int
    deg_num: int
    deg_den: int
    draws: int
    cancellation: bool

    @property
    def ok(self) -> bool:
        """Prefactor v(l), numerator degree lambda_s, denominator degree lambda_p."""
        return (self.power, self.deg_num, self.deg_den) == (self.quadruple.vl, self.quadruple.ls, self.quadruple.lp)

    @property
    def ok_swapped(self) -> bool:
        """The same with the two degrees exchanged (numerator lambda_p)."""
        return (self.power, self.deg_num, self.deg_den) == (self.quadruple.vl, self.quadruple.lp, self.quadruple.ls)

    def to_json(self) -> dict:
        return {
            "quadruple": list(self.quadruple),
            "power": self.power,
            "deg_num": self.deg_num,
            "deg_den": self.deg_den,
            "ok": self.ok,
            "ok_swapped": self.ok_swapped,
            "cancellation": self.cancellation,
        }


def degree_check(e: SPExpr, values=None, seed: int = 0, draws: int = 3) -> DegreeReport:
    """Compare (power of s, numerator degree, denominator degree) of Z(s) with
    (v(l), lambda_s, lambda_p) of the expression's jorb.

    Without values, ``draws`` independent generic value sets are used; a
    disagreement between draws marks an accidental cancellation and the
    largest degrees seen are reported.
    """
    e = _labelled(e)
    q = phi(eval_jorb(e))
    if values is not None:
        z = z_of(e, values)
        return DegreeReport(q, z.power, z.deg_num, z.deg_den, 1, False)
    rng = random.Random(seed)
    seen = []
    for _ in range(draws):
        z = z_of(e, random_values(e, rng))
        seen.append((z.power, z.deg_num, z.deg_den))
    best = max(seen, key=lambda t: (t[1] + t[2], t))
    return DegreeReport(q, best[0], best[1], best[2], draws, len(set(seen)) > 1)


def _labelled(e: SPExpr) -> SPExpr:
    if all(leaf.label for leaf in leaves(e) if leaf.kind != "J"):
        return e
    from .spexpr import relabel

    return relabel(e)


@dataclass
class EquivVerdict:
    identical: bool
    difference: object

    def __bool__(self):
        return self.identical


def equiv_test(e1: SPExpr, values1, e2: SPExpr, param_map, reciprocal: bool = False) -> EquivVerdict:
    """Substitute ``param_map`` (labels of e2 -> expressions in e1's symbols)
    and decide whether the two impedances are the same rational function.

    With ``reciprocal`` the second network is compared as an admittance,
    i.e. 1/Z2 against Z1.
    """
    if values1 is None:
        values1 = element_symbols(e1)
    z1 = _z_expr(e1, values1)
    sym1 = {lab: sp.Symbol(f"{lab[0]}_{lab[1:]}", positive=True) for lab in values1}
    values2 = {}
    for leaf in leaves(e2):
        if leaf.label not in param_map:
            raise ValueError(f"parameter map has no entry for {leaf.label}")
        expr = param_map[leaf.label]
        if isinstance(expr, str):
            expr = sp.sympify(expr, locals={**sym1, **{str(v): v for v in sym1.values()}})
        values2[leaf.label] = ValuedElement(leaf.kind, expr)
    z2 = _z_expr(e2, values2)
    if reciprocal:
        z2 = 1 / z2
    diff = sp.cancel(sp.together(z1 - z2))
    return EquivVerdict(diff == 0, diff)


def phi_necessary(e1: SPExpr, e2: SPExpr) -> bool:
    """Equal quadruples, a necessary condition for impedance equivalence."""
    return phi(eval_jorb(e1)) == phi(eval_jorb(e2))


def read_values(path) -> dict[str, ValuedElement]:
    """Read ``label = value`` lines (values may be fractions such as 3/2)."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'label = value'")
        label, value = (x.strip() for x in line.split("=", 1))
        out[label] = ValuedElement(label[0], sp.Rational(str(Fraction(value.strip('"')))))
    return out


def read_map(path) -> dict[str, str]:
    """Read ``label = expression`` lines for equiv_test."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'label = expression'")
        label, value = (x.strip() for x in line.split("=", 1))
        out[label] = value.strip('"')
    return out
