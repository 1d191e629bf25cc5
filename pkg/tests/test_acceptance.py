"""Acceptance criteria 1-11, one PASS/FAIL line each.

Every criterion collects named checks; the reported line lists the checks
that failed, and the test fails when any did.  Run with ``pytest -v`` (the
lines are written straight to the terminal) or ``pytest -s``.
"""

import itertools
import random
import time

import pytest
import sympy as sp

import oracles
from jorbkit.alphabet import gamma2, gamma3, gamma5
from jorbkit.compose import parallel, parallel_reduced, s_core_reduced, series_reduced
from jorbkit.enumeration import catalogue_items, classify, generate, read_realizations, read_schemes, tabulate, totals
from jorbkit.impedance import degree_check, equiv_test, phi_necessary, z_of
from jorbkit.logic import equiv_p, impl_p, land, lnot, lor, values
from jorbkit.mgraph import load_graph, reduce_graph, theta
from jorbkit.ops import KLEIN, OPS, cayley_table, op_D
from jorbkit.spexpr import KIND_LETTER, Leaf, Node, canonical, eval_jorb, eval_orders, parse_sp, print_sp
from jorbkit.synth import ElementBag, count_sp, enumerate_sp, ladder, synthesize
from jorbkit.word import MWord, is_reduced, lam, normal_forms, parse, phi, render, zip_reduce, zip_trace

R1, R2, L1, C1 = sp.symbols("R_1 R_2 L_1 C_1", positive=True)


def compact(w):
    return render(w, "compact")


@pytest.fixture
def report(capsys):
    def emit(n, title, checks):
        failed = [name for name, ok in checks if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"AC{n:<2} {status}  {title} ({len(checks) - len(failed)}/{len(checks)} checks)"
        if failed:
            line += "; failed: " + ", ".join(failed)
        with capsys.disabled():
            print("\n" + line)
        assert not failed, line

    return emit


def zips_to(text, want, alphabet=gamma3):
    """Exact reduced string plus endpoint, lambda and Phi preservation at every step."""
    w = parse(text, alphabet)
    trace = zip_trace(w)
    steady = all(
        (t.letters[0], t.letters[-1], lam(t), phi(t)) == (w.letters[0], w.letters[-1], lam(w), phi(w)) for t in trace
    )
    got = trace[-1]
    return steady and (got == parse(want, alphabet))


def test_ac01_zip_goldens(report):
    checks = [
        ("baba->ba", zips_to("baba", "ba", gamma2)),
        ("aaaaabbb->AB", zips_to("aaaaabbb", "AB", gamma2)),
        ("bcbaac->bAc", zips_to("bcbaac", "bAc")),
        ("ABC->AC", zips_to("ABC", "AC")),
        ("AAbaBB->AB", zips_to("AAbaBB", "AB")),
        ("ABbAaB->AB", zips_to("ABbAaB", "AB")),
        ("cabbccaabbaaca->CABA", zips_to("cabbccaabbaaca", "CABA")),
        ("cbbabbccbbaabbaaca->CABA", zips_to("cbbabbccbbaabbaaca", "CABA")),
        ("cbbabbaabbccbbaabbcbba->CABA", zips_to("cbbabbaabbccbbaabbcbba", "CABA")),
        ("J_s(BCABA)=CABA", s_core_reduced(parse("BCABA")) == parse("CABA")),
        ("J_s(BACAB)=CABA", s_core_reduced(parse("BACAB")) == parse("CABA")),
    ]
    report(1, "zip reproduces the reference compressions", checks)


def test_ac02_composition(report):
    P = parse
    z12 = parse_sp("A p (B s (C p A) s B)")
    z14 = parse_sp("(A s B) p (B s (C p A))")
    z14_short = parse_sp("(A s B) p (B s (C p A p ca))")
    checks = [
        ("A s B=AB", series_reduced(P("A"), P("B")) == P("AB")),
        ("B s A=AB", series_reduced(P("B"), P("A")) == P("AB")),
        ("A p B=BA", parallel_reduced(P("A"), P("B")) == P("BA")),
        ("B p A=BA", parallel_reduced(P("B"), P("A")) == P("BA")),
        ("A p ab=AAAabA=A", compact(parallel(P("A"), P("ab"))) == "AAAabA" and parallel_reduced(P("A"), P("ab")) == P("A")),
        ("B p ab=B", parallel_reduced(P("B"), P("ab")) == P("B")),
        ("A p ba=BAaBAa=ba", compact(parallel(P("A"), P("ba"))) == "BAaBAa" and parallel_reduced(P("A"), P("ba")) == P("ba")),
        ("B p ba=ba", parallel_reduced(P("B"), P("ba")) == P("ba")),
        ("Z(1,2)=BCABA", P("BCABA") in eval_orders(z12)),
        ("Z(1,4)=BACAB", P("BACAB") in eval_orders(z14)),
        ("Z(1,4) with ca=cbA", P("cbA") in eval_orders(z14_short)),
    ]
    report(2, "reduced series/parallel results", checks)


def test_ac03_operators(report):
    table = cayley_table()
    extensional = all(
        KLEIN[g](KLEIN[h](w)) == KLEIN[table[g, h]](w)
        for n in (2, 4, 6)
        for w in (MWord(gamma3, t) for t in itertools.product(range(3), repeat=n))
        for g, h in itertools.product(KLEIN, repeat=2)
    )
    orbit = {compact(OPS[g](parse("ABAB"))) for g in ("D", "E", "F")} | {"ABAB"}
    pair = {compact(OPS[g](parse("BACB"))) for g in ("D", "E", "F")} | {"BACB"}
    checks = [
        ("Klein table", all(table[g, g] == "1" for g in KLEIN) and table["D", "E"] == "F"),
        ("extensional on length<=6", extensional),
        ("orbit of ABAB", orbit == {"ABAB", "CBCB", "BABA", "BCBC"}),
        ("pair BACB/BCAB", pair == {"BACB", "BCAB"}),
    ]
    report(3, "Klein group of word operators", checks)


TABLE5 = {
    "ABA": (-1, 1, 1, -1), "ACA": (-1, 2, 2, -1), "ACB": (-1, 1, 2, 0), "ABC": (-1, 0, 2, 1),
    "BCA": (0, 2, 1, -1), "BAB": (0, 1, 1, 0), "BCB": (0, 1, 1, 0), "BAC": (0, 1, 2, 1),
    "CBA": (1, 2, 0, -1), "CAB": (1, 2, 1, 0), "CAC": (1, 2, 2, 1), "CBC": (1, 1, 1, 1),
    "ABCA": (-1, 2, 2, -1), "ACBA": (-1, 2, 2, -1), "ABAB": (-1, 1, 2, 0), "ABCB": (-1, 1, 2, 0),
    "ACAB": (-1, 2, 3, 0), "ABAC": (-1, 1, 3, 1), "ACAC": (-1, 2, 4, 1), "ACBC": (-1, 1, 3, 1),
    "BABA": (0, 2, 1, -1), "BACA": (0, 3, 2, -1), "BCBA": (0, 2, 1, -1), "BACB": (0, 2, 2, 0),
    "BCAB": (0, 2, 2, 0), "BABC": (0, 1, 2, 1), "BCAC": (0, 2, 3, 1), "BCBC": (0, 1, 2, 1),
    "CABA": (1, 3, 1, -1), "CACA": (1, 4, 2, -1), "CBCA": (1, 3, 1, -1), "CACB": (1, 3, 2, 0),
    "CBAB": (1, 2, 1, 0), "CBCB": (1, 2, 1, 0), "CABC": (1, 2, 2, 1), "CBAC": (1, 2, 2, 1),
}
TABLE6 = {
    "BABAB": (0, 2, 2, 0), "BABCB": (0, 2, 2, 0), "BACAB": (0, 3, 3, 0),
    "BCACB": (0, 3, 3, 0), "BCBAB": (0, 2, 2, 0), "BCBCB": (0, 2, 2, 0),
}


def test_ac04_quadruples(report):
    t5 = {**tabulate(generate(3, 3)), **tabulate(generate(3, 4))}
    t6 = tabulate(generate(3, 5, "B", "B"))
    family = {phi(parse(x)) for x in ("CABA", "CAbcaa", "CAbcbbA", "CBABA")}
    checks = [
        ("three- and four-letter tables (12+24 rows)", t5 == TABLE5 and len(t5) == 36),
        ("B...B five-letter cell (6 rows)", t6 == TABLE6),
        ("BABA over two symbols", phi(parse("BABA", gamma2)) == (1, 4, 2, -1)),
        ("BABA over three symbols", phi(parse("BABA")) == (0, 2, 1, -1)),
        ("CABA family shares Phi", len(family) == 1),
    ]
    report(4, "quadruple tables", checks)


def test_ac05_counting(report):
    brute = True
    for n in range(1, 6):
        for i in range(n + 1):
            for j in range(n - i + 1):
                bag = ElementBag(i, j, n - i - j)
                raw = enumerate_sp(bag, dedup=False)
                if len(raw) != count_sp(bag):
                    brute = False
                if n <= 4:
                    letters = [KIND_LETTER[k] for k in bag.kinds()]
                    if {print_sp(e, "letter") for e in raw} != oracles.raw_tree_strings(letters):
                        brute = False
    checks = [
        ("N(3)=12", len(generate(3, 3)) == 12),
        ("N(4)=24", len(generate(3, 4)) == 24),
        ("T_SP(2,3,1)=80640", count_sp(ElementBag(2, 3, 1)) == 80640),
        ("raw enumeration = count_sp for N<=5", brute),
    ]
    report(5, "closed-form counts", checks)


ABABA = [
    "(((A s B) p A p B) s A)", "(((A p B) s A s B) p A)", "((A s B) p (A s B) p A)",
    "((A p B) s (A p B) s A)", "((((A s B) p A) s B) p A)", "((((A p B) s A) p B) s A)",
    "((((A s B) p B) s A) p A)", "((((A p B) s B) p A) s A)", "(((A s B) p A) s (A p B))",
    "(((A p B) s A) p (A s B))",
]


def _shapes(exprs):
    return {canonical(e, keep_labels=False) for e in exprs}


def _swap_reactive(e):
    if isinstance(e, Leaf):
        return Leaf({"C": "L", "L": "C"}.get(e.kind, e.kind), e.label)
    return Node(e.op, tuple(_swap_reactive(c) for c in e.children))


def test_ac06_synthesis(report):
    shipped = read_realizations()
    ababa = _shapes(synthesize("ABABA", ElementBag(3, 2, 0)))
    babab = _shapes(synthesize("BABAB", ElementBag(2, 3, 0)))
    bcbcb = _shapes(synthesize("BCBCB", ElementBag(0, 3, 2)))
    checks = [
        ("ABABA: 10 listed", ababa == _shapes(parse_sp(x) for x in ABABA) and len(ababa) == 10),
        ("BABAB column", babab == _shapes(shipped["BABAB"]) and len(babab) == 10),
        ("BCBCB column", bcbcb == _shapes(shipped["BCBCB"]) and len(bcbcb) == 10),
        ("dual mapping", compact(op_D(parse("BABAB"))) == "BCBCB" and _shapes(map(_swap_reactive, babab)) == bcbcb),
    ]
    report(6, "series-parallel synthesis", checks)


def test_ac07_ladders(report):
    forms = {
        "cauer1": "B s (A p (B s (A p (B s A))))",
        "cauer2": "A s (B p (A s (B p (A s B))))",
        "foster1": "A s BA s BA s B",
        "foster2": "AB p AB p AB",
    }
    checks = [(f"ABABAB {f}", ladder("ABABAB", f).text == t) for f, t in forms.items()]
    checks.append(("Cauer I evaluates to ABABAB", eval_jorb(ladder("ABABAB", "cauer1").expr) == parse("ABABAB")))
    r = ladder("BABCB", "cauer1", labelled=True)
    with_verdict = r.verdict in ("reduced", "phi", "reversed", "mismatch")
    checks.append((f"BABCB verdict '{r.verdict}' Phi-equivalent", with_verdict and phi(r.evaluated) == phi(parse("BABCB"))))
    report(7, "Cauer and Foster forms", checks)


def test_ac08_graphs(report, graphs_dir):
    bridge = load_graph(graphs_dir / "ladder_bridge.txt")
    k4 = load_graph(graphs_dir / "k4.txt")
    bridge = load_graph(graphs_dir / "double_bridge.txt")
    t0 = time.perf_counter()
    k4_want = {
        ("1", "4"): "ACACB", ("1", "2"): "BCACA", ("1", "3"): "CBACA",
        ("2", "3"): "BCACA", ("2", "4"): "CBACA", ("3", "4"): "BCACA",
    }
    k4_got = {p: compact(theta(k4, p, depth=6)) for p in k4_want}
    loop = theta(k4, ("1", "1"), depth=6)
    k4_time = time.perf_counter() - t0

    def invariant(g):
        pairs = itertools.combinations(sorted(g.vertices), 2)
        return len({s_core_reduced(theta(g, p, depth=6)) for p in pairs}) == 1

    checks = [
        ("ladder bridge (1,2)=BCABA", compact(theta(bridge, ("1", "2"))) == "BCABA"),
        ("ladder bridge (1,4)=BACAB", compact(theta(bridge, ("1", "4"))) == "BACAB"),
        ("double bridge=BABABABAB", compact(reduce_graph(bridge, ("1", "4"), depth=6).value) == "BABABABAB"),
    ]
    checks += [(f"K4 {a},{b}={w}", k4_got[a, b] == w) for (a, b), w in k4_want.items()]
    checks += [
        ("K4 (1,1)=CACA", compact(loop) == "CACA"),
        ("K4 (1,1) lambda_s=4", phi(loop).ls == 4),
        ("s-core invariant on ladder bridge", invariant(bridge)),
        ("s-core invariant on K4", invariant(k4)),
        ("K4 under 60 s", k4_time < 60),
    ]
    report(8, "m-graph reduction", checks)


def _coeffs(z):
    return [sp.expand(c) for c in z.num], [sp.expand(c) for c in z.den], z.power


def test_ac09_impedance(report):
    schemes = dict(read_schemes())
    z47, z48 = z_of(schemes["47"]), z_of(schemes["48"])
    ref47 = ([R1 * R2, R1 * L1], [R1 + R2, L1 + C1 * R1 * R2, C1 * R1 * L1], 0)
    ref48 = ([R1 * R2, sp.expand(L1 * (R1 + R2))], [R1, L1 + C1 * R1 * R2, sp.expand(C1 * L1 * (R1 + R2))], 0)
    ref_map = {
        "R1": "R_1**2/(R_1+R_2)", "R2": "R_1*R_2/(R_1+R_2)",
        "L1": "L_1*R_1**2/(R_1+R_2)**2", "C1": "C_1",
    }
    cbab = synthesize("CBAB", ElementBag(1, 2, 1))
    checks = [
        ("Z47 coefficients", _coeffs(z47) == ref47),
        ("Z48 coefficients", _coeffs(z48) == ref48),
        ("reference map: Z48' = Z47", bool(equiv_test(schemes["47"], None, schemes["48"], ref_map))),
        ("Phi necessary #47/#48", phi_necessary(schemes["47"], schemes["48"])),
        ("#47 vs #39 family obstructed", bool(cbab) and not any(phi_necessary(schemes["47"], e) for e in cbab)),
    ]
    report(9, "exact impedance functions", checks)


def _random_sp(rng, n):
    if n == 1:
        return Leaf(rng.choice("CRL"))
    k = rng.randint(1, n - 1)
    return Node(rng.choice("sp"), (_random_sp(rng, k), _random_sp(rng, n - k)))


def test_ac10_properties(report, capsys):
    rng = random.Random(0)
    alphabets = [gamma2, gamma3, gamma5]
    zip_ok = True
    for _ in range(10**5):
        a = rng.choice(alphabets)
        w = MWord(a, tuple(rng.randrange(len(a)) for _ in range(2 * rng.randint(1, 6))))
        r = zip_reduce(w)
        if not (is_reduced(r) and phi(r) == phi(w) and len(r) <= len(w)):
            zip_ok = False

    divergent, consistent = 0, True
    for n in (2, 4, 6, 8):
        for letters in itertools.product(range(3), repeat=n):
            forms = normal_forms(MWord(gamma3, letters))
            if len(forms) > 1:
                divergent += 1
                consistent &= len({phi(f) for f in forms}) == 1

    logic_ok = True
    for a in alphabets:
        for x, y in itertools.product(values(a), repeat=2):
            logic_ok &= lnot(land(x, y)) == lor(lnot(x), lnot(y)) and lnot(lor(x, y)) == land(lnot(x), lnot(y))
    T, F = parse("ba", gamma2), parse("ab", gamma2)
    for x, y in itertools.product((T, F), repeat=2):
        a, b = x == T, y == T
        logic_ok &= (land(x, y) == T) == (a and b) and (lor(x, y) == T) == (a or b)
        logic_ok &= (impl_p(x, y) == T) == ((not a) or b) and (equiv_p(x, y) == T) == (a == b)

    literal = swapped = 0
    for _ in range(1000):
        e = _random_sp(rng, rng.randint(1, 5))
        seed = rng.randrange(10**9)
        rep = degree_check(e, seed=seed)
        if rep.cancellation:
            rep = degree_check(e, seed=seed + 1)
        literal += rep.ok
        swapped += rep.ok_swapped
    with capsys.disabled():
        print(f"\n  zip divergences up to length 8: {divergent}; degree_check literal {literal}/1000, "
              f"with the degrees exchanged {swapped}/1000")
    checks = [
        ("zip terminates and keeps Phi on 1e5 words", zip_ok),
        ("confluence probe Phi-consistent", consistent),
        ("De Morgan and two-valued restriction", logic_ok),
        ("degree_check on 1000 expressions", literal == 1000),
    ]
    report(10, "property suites", checks)


def test_ac11_catalogue(report):
    rows = classify(catalogue_items())
    per_length = [t[0] for t in totals(rows).values()]
    listed = classify(read_schemes())
    realizations = read_realizations()
    membership = all(
        [r.jorb for r in classify([(str(i), e) for i, e in enumerate(exprs, 1)])] == [target]
        for target, exprs in realizations.items()
    )
    by_id = {s: r.jorb for r in rows for s in r.schemes}
    checks = [
        ("33 jorbs", len(rows) == 33),
        ("108 schemes", sum(len(r.schemes) for r in rows) == 108),
        ("per-length 3/6/10/10/4", per_length == [3, 6, 10, 10, 4]),
        ("#47 and #48 in BCBA", [(r.jorb, r.schemes) for r in listed] == [("BCBA", ["47", "48"])]
         and by_id["47"] == by_id["48"] == "BCBA"),
        ("shipped realizations land in their rows", membership),
    ]
    report(11, "catalogue of network classes", checks)
