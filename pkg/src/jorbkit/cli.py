"""Command-line front end: ``jorbkit <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import compose, logic, ops, order
from .alphabet import get_alphabet
from .enumeration import (
    catalogue_items,
    classify,
    generate,
    generate_count,
    tabulate,
    totals,
    write_catalogue,
)
from .mgraph import GraphError, load_graph, reduce_graph, theta
from .spexpr import SPSyntaxError, eval_jorb, parse_sp, print_sp
from .synth import BoundExceeded, ElementBag, count_sp, enumerate_sp, ladder, synthesize
from .word import WordError, lam, parse, phi, render, zip_reduce, zip_trace

log = logging.getLogger("jorbkit")


class DomainError(Exception):
    pass


def _word(text, args):
    return parse(text, args.alphabet_obj)


def _show(w, args=None) -> str:
    return render(w, "compact")


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _quad(w):
    try:
        return list(phi(w))
    except WordError:
        return None


# --- subcommands ------------------------------------------------------------------------

def cmd_zip(args):
    w = _word(args.word, args)
    trace = zip_trace(w)
    red = trace[-1]
    data = {"input": _show(w, args), "reduced": _show(red, args), "lambda": lam(red), "quadruple": _quad(red)}
    if args.trace:
        data["trace"] = [_show(x, args) for x in trace]
        text = "\n".join(data["trace"])
    else:
        text = data["reduced"]
    _emit(args, data, text)


def cmd_eval(args):
    if args.expr:
        e = parse_sp(args.expr)
        w = eval_jorb(e, args.alphabet_obj)
        src = print_sp(e)
    else:
        w = zip_reduce(_word(args.word, args))
        src = args.word
    q = _quad(w)
    data = {"input": src, "jorb": _show(w, args), "quadruple": q, "lambda": lam(w)}
    text = data["jorb"] + (" ({}, {}, {}, {})".format(*q) if q else "")
    _emit(args, data, text)


def cmd_op(args):
    w = _word(args.word, args)
    out = ops.OPS[args.op](w)
    if args.reduce:
        out = zip_reduce(out)
    data = {"op": args.op, "input": _show(w, args), "result": _show(out, args)}
    _emit(args, data, data["result"])


def cmd_compose(args):
    x, y = _word(args.x, args), _word(args.y, args)
    mode = {"s": "series", "p": "parallel"}.get(args.mode, args.mode)
    raw = compose.series(x, y) if mode == "series" else compose.parallel(x, y)
    red = zip_reduce(raw)
    data = {
        "mode": mode,
        "raw": render(raw, "lower"),
        "reduced": _show(red, args),
        "quadruple": _quad(red),
    }
    _emit(args, data, data["reduced"])


def cmd_order(args):
    x, y = _word(args.x, args), _word(args.y, args)
    data = {
        "leq_q": order.leq_q(x, y),
        "geq_q": order.geq_q(x, y),
        "eq_q": order.eq_q(x, y),
        "class_x": str(order.class_of(x)),
        "class_y": str(order.class_of(y)),
    }
    text = " ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in data.items())
    _emit(args, data, text)


def cmd_hasse(args):
    dot = order.hasse(args.kind, args.alphabet_obj)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dot)
    n = len(args.alphabet_obj)
    data = {"kind": args.kind, "nodes": n * n, "edges": 2 * n * (n - 1), "dot": dot}
    _emit(args, data, dot.rstrip("\n") if not args.output else f"wrote {args.output}")


def cmd_logic(args):
    a = args.alphabet_obj
    if args.table:
        rows = logic.truth_table(args.op, a)
        if args.json:
            print(json.dumps({"op": args.op, "rows": rows}, sort_keys=True))
        else:
            cols = list(rows[0])
            print(",".join(cols))
            for r in rows:
                print(",".join(r[c] for c in cols))
        return
    need = 1 if args.op == "not" else 2
    if len(args.operands) != need:
        raise DomainError(f"{args.op} takes {need} operand(s)")
    res = logic.apply(args.op, *args.operands, alphabet=a)
    data = {"op": args.op, "operands": args.operands, "result": res.text, "label": logic.label(res)}
    _emit(args, data, res.text)


def cmd_graph(args):
    g = load_graph(args.file, args.alphabet_obj)
    if args.dot:
        print(g.to_dot(), end="")
        return
    pair = tuple(args.pair.split(",")) if args.pair else g.terminals
    if pair is None:
        raise DomainError("no terminals: give --pair u,v or a 'terminals' line")
    if pair[0] == pair[1]:
        w = theta(g, pair, args.depth)
        moves = []
    else:
        res = reduce_graph(g, pair, args.depth)
        w, moves = res.value, [list(map(str, m)) for m in res.moves]
    data = {"pair": list(pair), "theta": _show(w, args), "quadruple": _quad(w), "moves": moves}
    _emit(args, data, data["theta"])


def cmd_enumerate(args):
    words = generate(args.k, args.n, args.start, args.end)
    k = args.k
    if k == 3:
        table = tabulate(words)
        rows = [{"jorb": w, "quadruple": list(q)} for w, q in table.items()]
    else:
        rows = [{"jorb": w, "quadruple": None} for w in words]
    data = {"k": k, "n": args.n, "count": len(words), "expected": generate_count(k, args.n), "words": rows}
    text = "\n".join(
        f"{r['jorb']} ({', '.join(map(str, r['quadruple']))})" if r["quadruple"] else r["jorb"] for r in rows
    )
    _emit(args, data, text)


def _match_chunk(payload):
    target, bag, match, exprs = payload
    from .spexpr import eval_orders
    from .word import phi as _phi

    want = zip_reduce(parse(target))
    out = []
    for text in exprs:
        e = parse_sp(text)
        names = eval_orders(e)
        if (match == "reduced" and want in names) or (match == "phi" and any(_phi(j) == _phi(want) for j in names)):
            out.append(text)
    return out


def _parse_bag(text: str) -> ElementBag:
    m = re.fullmatch(r"(?:(\d+)([CRL]))+", text.replace(" ", "").upper())
    if not m:
        raise DomainError(f"bad element bag {text!r}; expected something like 2C3R1L")
    counts = {"C": 0, "R": 0, "L": 0}
    for n, kind in re.findall(r"(\d+)([CRL])", text.upper()):
        counts[kind] += int(n)
    return ElementBag(counts["C"], counts["R"], counts["L"])


def cmd_synth(args):
    if args.form:
        if not args.target:
            raise DomainError("--form needs --target")
        r = ladder(args.target, args.form, labelled=args.labelled)
        data = {"target": args.target, "form": args.form, "expression": r.text,
                "verdict": r.verdict, "evaluated": _show(r.evaluated, args)}
        _emit(args, data, f"{r.text}\t{r.verdict}\t{data['evaluated']}")
        return
    bag = _parse_bag(args.bag) if args.bag else ElementBag(args.cap, args.res, args.ind)
    if args.count_only:
        n = count_sp(bag)
        _emit(args, {"bag": list(bag.as_tuple()), "count": n}, str(n))
        return
    if not args.target:
        exprs = enumerate_sp(bag, dedup=not args.raw, bound=args.bound)
        found = [print_sp(e) for e in exprs]
    elif args.jobs > 1:
        exprs = [print_sp(e) for e in enumerate_sp(bag, bound=args.bound)]
        chunks = [exprs[i:: args.jobs] for i in range(args.jobs)]
        with ProcessPoolExecutor(args.jobs) as ex:
            parts = ex.map(_match_chunk, [(args.target, bag, args.match, c) for c in chunks])
        keep = set().union(*map(set, parts))
        found = [x for x in exprs if x in keep]
    else:
        found = [print_sp(e) for e in synthesize(args.target, bag, args.match, args.bound)]
    data = {"bag": list(bag.as_tuple()), "target": args.target, "match": args.match,
            "count": len(found), "expressions": found}
    _emit(args, data, "\n".join(found) if found else "(none)")


def cmd_z(args):
    from . import impedance

    e = parse_sp(args.expr)
    values = impedance.read_values(args.values) if args.values else None
    z = impedance.z_of(e, values)
    data = {"expression": print_sp(e), "z": z.to_json(), "text": str(z)}
    lines = [f"Z(s) = {z}"]
    if args.check_phi:
        rep = impedance.degree_check(e, values, seed=args.seed)
        data["degree_check"] = rep.to_json()
        lines.append(
            f"quadruple {tuple(rep.quadruple)}; s^{rep.power}, deg num {rep.deg_num}, deg den {rep.deg_den}; "
            f"ok={rep.ok} ok_swapped={rep.ok_swapped}"
        )
    if args.equiv:
        other = parse_sp(open(args.equiv, encoding="utf-8").read().strip())
        if not args.map:
            raise DomainError("--equiv needs --map")
        verdict = impedance.equiv_test(e, values, other, impedance.read_map(args.map), args.reciprocal)
        data["equivalent"] = verdict.identical
        data["phi_necessary"] = impedance.phi_necessary(e, other)
        lines.append(f"equivalent={verdict.identical}")
    _emit(args, data, "\n".join(lines))


def cmd_classify(args):
    if args.file:
        items = []
        with open(args.file, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                sid, _, rest = line.partition(" ")
                rest = rest.strip()
                items.append((sid, parse_sp(rest) if rest.startswith("(") or " " in rest else rest))
        rows = classify(items)
    else:
        rows = classify(catalogue_items())
    if args.json:
        data = {
            "rows": [{"jorb": r.jorb, "quadruple": list(r.quadruple), "schemes": r.schemes} for r in rows],
            "totals": {str(k): list(v) for k, v in totals(rows).items()},
        }
        print(json.dumps(data, sort_keys=True))
    else:
        print(write_catalogue(rows), end="")


# --- parser -------------------------------------------------------------------------------------

def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the copy attached to subcommands must not overwrite flags given before them
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--alphabet", default=d("gamma3"), help="gamma2, gamma3, gamma5 or an alphabet file")
    g.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    g.add_argument("--seed", type=int, default=d(0))
    g.add_argument("--jobs", type=int, default=d(1))
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    p = argparse.ArgumentParser(prog="jorbkit", description=__doc__, parents=[_global_flags(suppress=False)])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("zip", parents=[common], help="compress a word")
    q.add_argument("word")
    q.add_argument("--trace", action="store_true")
    q.set_defaults(func=cmd_zip)

    q = sub.add_parser("eval", parents=[common], help="jorb and quadruple of an expression or word")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--expr")
    g.add_argument("--word")
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("op", parents=[common], help="apply D, E, F, K or I")
    q.add_argument("--op", choices=sorted(ops.OPS), required=True)
    q.add_argument("--reduce", action="store_true")
    q.add_argument("word")
    q.set_defaults(func=cmd_op)

    q = sub.add_parser("compose", parents=[common], help="series or parallel connection")
    q.add_argument("--mode", choices=["s", "p", "series", "parallel"], required=True)
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(func=cmd_compose)

    q = sub.add_parser("order", parents=[common], help="compare shells")
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(func=cmd_order)

    q = sub.add_parser("hasse", parents=[common], help="Hasse diagram as DOT")
    q.add_argument("--kind", choices=["classes", "omega_s", "omega_p"], default="classes")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_hasse)

    q = sub.add_parser("logic", parents=[common], help="connectives on shells")
    q.add_argument("--op", choices=sorted(logic.OPERATORS), required=True)
    q.add_argument("--table", action="store_true")
    q.add_argument("operands", nargs="*")
    q.set_defaults(func=cmd_logic)

    q = sub.add_parser("graph", parents=[common], help="reduce an m-graph")
    q.add_argument("action", choices=["reduce"])
    q.add_argument("file")
    q.add_argument("--pair")
    q.add_argument("--depth", type=int, default=6)
    q.add_argument("--dot", action="store_true")
    q.set_defaults(func=cmd_graph)

    q = sub.add_parser("enumerate", parents=[common], help="generate alternating jorbs")
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--start")
    q.add_argument("--end")
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("synth", parents=[common], help="series-parallel synthesis")
    q.add_argument("--target")
    q.add_argument("--bag", help="element counts such as 2C3R1L (overrides --cap/--res/--ind)")
    q.add_argument("--cap", type=int, default=0)
    q.add_argument("--res", type=int, default=0)
    q.add_argument("--ind", type=int, default=0)
    q.add_argument("--match", choices=["reduced", "phi"], default="reduced")
    q.add_argument("--form", choices=["cauer1", "cauer2", "foster1", "foster2"])
    q.add_argument("--labelled", action="store_true")
    q.add_argument("--count-only", action="store_true")
    q.add_argument("--raw", action="store_true", help="list without deduplication")
    q.add_argument("--bound", type=int, default=7)
    q.set_defaults(func=cmd_synth)

    q = sub.add_parser("z", parents=[common], help="impedance of a valued expression")
    q.add_argument("--expr", required=True)
    q.add_argument("--values")
    q.add_argument("--check-phi", action="store_true")
    q.add_argument("--equiv")
    q.add_argument("--map")
    q.add_argument("--reciprocal", action="store_true")
    q.set_defaults(func=cmd_z)

    q = sub.add_parser("classify", parents=[common], help="group schemes into jorb classes")
    q.add_argument("file", nargs="?", help="lines '<id> <expression or jorb>'; default: shipped catalogue")
    q.set_defaults(func=cmd_classify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args.alphabet_obj = get_alphabet(args.alphabet)
        args.func(args)
    except (DomainError, WordError, SPSyntaxError, GraphError, BoundExceeded, ValueError, OSError) as exc:
        print(f"jorbkit: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
