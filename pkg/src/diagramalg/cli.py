"""Command-line interface: diagramalg <verb> [options].

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration bound exceeded (see DIAGRAMALG_MAX_BASIS).
"""

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import families as fam
from . import linalg, wreath
from .diagram import from_json, split
from .errors import DiagramAlgError, ResourceError

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational(text):
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError("%r is not an exact rational (use p or p/q)" % text)
    return Fraction(text.strip())


def int_range(text):
    m = re.match(r"^(\d+)(?:\.\.(\d+))?$", text.strip())
    if not m:
        raise argparse.ArgumentTypeError("%r is not n or a..b" % text)
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise argparse.ArgumentTypeError("empty range %r" % text)
    return list(range(lo, hi + 1))


def fmt(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return fmt(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


def emit(rows, columns, style, out):
    if style == "json":
        for r in rows:
            out.write(json.dumps({c: _jsonable(r.get(c)) for c in columns}, separators=(",", ":")) + "\n")
        return
    cells = [[fmt(r.get(c)) if not isinstance(r.get(c), (list, tuple, dict)) else json.dumps(_jsonable(r.get(c)), separators=(",", ":"))
              for c in columns] for r in rows]
    if style == "tsv":
        out.write("\t".join(columns) + "\n")
        for row in cells:
            out.write("\t".join(row) + "\n")
        return
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def pmap(func, tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(func, tasks))


def _spec(args, n=None):
    return fam.FamilySpec(args.family, args.n[0] if n is None else n, args.r, getattr(args, "m", None))


def _params(args):
    return linalg.Params(args.beta, args.gamma)


def _element(spec, text):
    """A diagram (list of blocks) or a list of [coefficient, diagram] pairs."""
    data = json.loads(text)
    if data and isinstance(data[0], list) and len(data[0]) == 2 and isinstance(data[0][1], list):
        terms = {}
        for coeff, d in data:
            dd = from_json(d, spec.n)
            terms[dd] = terms.get(dd, 0) + rational(str(coeff))
        return linalg.Element(spec, terms)
    return linalg.Element(spec, {from_json(data, spec.n): 1})


# ---------------------------------------------------------------- verbs

def cmd_basis(args):
    spec = _spec(args)
    rows = [{"index": i, "diagram": json.loads(d.to_json()), "propagating": d.propagating_count}
            for i, d in enumerate(fam.enumerate_basis(spec))]
    return rows, ["index", "diagram", "propagating"], 0


def cmd_mul(args):
    spec = _spec(args)
    x, y = _element(spec, args.x), _element(spec, args.y)
    prod = linalg.multiply(x, y, _params(args))
    rows = [{"coeff": c, "diagram": json.loads(d.to_json())} for d, c in prod.sorted_terms()]
    return rows, ["coeff", "diagram"], 0


def _dims_task(t):
    family, n, r, m, check = t
    spec = fam.FamilySpec(family, n, r, m)
    row = {"family": family, "r": r, "n": n, "dim": fam.algebra_dim(spec)}
    if check:
        row["enumerated"] = len(fam.enumerate_basis(spec))
    return row


def cmd_dims(args):
    tasks = [(args.family, n, args.r, args.m, args.enumerate) for n in args.n]
    rows = pmap(_dims_task, tasks, args.jobs)
    cols = ["family", "r", "n", "dim"] + (["enumerated"] if args.enumerate else [])
    bad = any(r["dim"] != r.get("enumerated", r["dim"]) for r in rows)
    return rows, cols, 1 if bad else 0


def _cells_task(t):
    family, n, r, m, check = t
    spec = fam.FamilySpec(family, n, r, m)
    rows = []
    for lam in fam.cell_labels(spec):
        row = {"n": n, "label": fam.label_to_json(lam), "dim": fam.cell_dim(spec, lam)}
        if check:
            row["enumerated"] = len(fam.enumerate_cell_basis(spec, lam))
        rows.append(row)
    return rows


def cmd_cells(args):
    tasks = [(args.family, n, args.r, args.m, args.enumerate) for n in args.n]
    rows = [r for part in pmap(_cells_task, tasks, args.jobs) for r in part]
    cols = ["n", "label", "dim"] + (["enumerated"] if args.enumerate else [])
    bad = any(r["dim"] != r.get("enumerated", r["dim"]) for r in rows)
    return rows, cols, 1 if bad else 0


def _labels(spec, args):
    if args.label is None:
        return fam.cell_labels(spec)
    return [fam.normalize_label(spec, args.label)]


def _gram_task(t):
    spec, lam, p, with_matrix = t
    rep = linalg.gram_matrix(spec, lam, p)
    row = {"label": fam.label_to_json(lam), "dim": rep.dim, "rank": rep.rank, "det": rep.det,
           "nondegenerate": rep.nondegenerate}
    if with_matrix:
        row["matrix"] = [list(r) for r in rep.matrix]
    return row


def cmd_gram(args):
    spec = _spec(args)
    tasks = [(spec, lam, _params(args), args.matrix) for lam in _labels(spec, args)]
    rows = pmap(_gram_task, tasks, args.jobs)
    return rows, ["label", "dim", "rank", "det", "nondegenerate"] + (["matrix"] if args.matrix else []), 0


def _gramdet_task(t):
    spec, lam, gamma = t
    poly = linalg.gram_det_poly(spec, lam, gamma)
    return {"label": fam.label_to_json(lam), "degree": poly.degree, "det": str(poly),
            "coefficients": list(poly.coeffs), "rational_roots": poly.rational_roots() if poly.coeffs else []}


def cmd_gramdet(args):
    spec = _spec(args)
    tasks = [(spec, lam, args.gamma) for lam in _labels(spec, args)]
    rows = pmap(_gramdet_task, tasks, args.jobs)
    return rows, ["label", "degree", "det", "rational_roots"], 0


def cmd_semisimple(args):
    spec = _spec(args)
    rep = linalg.is_semisimple_at(spec, _params(args))
    rows = [{"label": fam.label_to_json(r.label), "dim": r.dim, "rank": r.rank, "nondegenerate": r.nondegenerate}
            for r in rep.reports]
    rows.append({"label": "ALL", "nondegenerate": rep.semisimple})
    return rows, ["label", "dim", "rank", "nondegenerate"], 0


def _verify_specs(args):
    if not args.all:
        return [_spec(args, n) for n in args.n]
    specs = []
    for f in fam.FAMILIES:
        for n in range(1, args.max_n + 1):
            if f == "g_r1m":
                specs.append(fam.FamilySpec(f, n, n + 1))
            elif f in fam.NEEDS_R:
                specs.extend(fam.FamilySpec(f, n, r) for r in (2, 3))
            else:
                specs.append(fam.FamilySpec(f, n))
    return specs


def _verify_task(t):
    spec, seed = t
    rep = linalg.verify_family(spec, seed=seed)
    return [{"family": spec.family, "n": spec.n, "r": spec.r, "check": name, "ok": ok, "detail": detail}
            for name, (ok, detail) in rep.checks.items()]


def cmd_verify(args):
    rows = [r for part in pmap(_verify_task, [(s, args.seed) for s in _verify_specs(args)], args.jobs) for r in part]
    return rows, ["family", "n", "r", "check", "ok", "detail"], 0 if all(r["ok"] for r in rows) else 1


def _algebra(args):
    if args.algebra:
        with open(args.algebra) as fh:
            return wreath.parse_algebra(fh.read())
    return wreath.cyclic_group(args.b)


def cmd_wreath_dim(args):
    A = _algebra(args)
    rows = []
    for n in args.n:
        spec = _spec(args, n)
        labels = wreath.wreath_cell_labels(spec, A) if A.cells is not None else []
        rows.append({"n": n, "b": A.b, "dim": wreath.wreath_dim(spec, A), "labels": len(labels),
                     "cell_sum": sum(m * m for _, m in labels) if labels else None})
    bad = any(r["cell_sum"] is not None and r["cell_sum"] != r["dim"] for r in rows)
    return rows, ["n", "b", "dim", "labels", "cell_sum"], 1 if bad else 0


def cmd_split(args):
    d = from_json(args.diagram, args.n[0] if args.n else None)
    s = split(d)
    row = {"lower": json.loads(s.lower.to_json()), "perm": list(s.perm), "upper": json.loads(s.upper.to_json())}
    return [row], ["lower", "perm", "upper"], 0


def cmd_table(args):
    rows = []
    if args.name == "planar_r_color":
        for r in range(1, 9):
            row = {"r": r}
            for n in range(1, args.max_n + 1):
                row[str(n)] = fam.algebra_dim(fam.FamilySpec("planar_r_color", n, r))
            rows.append(row)
        return rows, ["r"] + [str(n) for n in range(1, args.max_n + 1)], 0
    if args.name == "planar_even":
        for n in range(1, args.max_n + 1):
            spec = fam.FamilySpec("planar_even", n)
            for lam in fam.cell_labels(spec):
                rows.append({"n": n, "ones": lam.count(1), "twos": lam.count(2),
                             "word": fam.label_to_json(lam), "dim": fam.cell_dim(spec, lam)})
        return rows, ["n", "ones", "twos", "word", "dim"], 0
    raise DiagramAlgError("unknown table %r" % args.name)


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="diagramalg", description="Exact computations in diagram algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, family=True, params=False, n_required=True):
        if family:
            sp.add_argument("--family", choices=fam.FAMILIES, required=True)
            sp.add_argument("--r", type=int)
            sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int_range, required=n_required, help="n or a range a..b")
        if params:
            sp.add_argument("--beta", type=rational, required=True)
            sp.add_argument("--gamma", type=rational, help="defaults to beta")
        sp.add_argument("--format", choices=("human", "json", "tsv"), default="human")
        sp.add_argument("--jobs", type=int, default=1)

    common(sub.add_parser("basis", help="list basis diagrams"))
    sp = sub.add_parser("mul", help="multiply two elements")
    common(sp, params=True)
    sp.add_argument("--x", required=True, help="diagram JSON or [[coeff, diagram], ...]")
    sp.add_argument("--y", required=True)
    for verb in ("dims", "cells"):
        sp = sub.add_parser(verb, help="algebra dimensions" if verb == "dims" else "cell module dimensions")
        common(sp)
        sp.add_argument("--enumerate", action="store_true", help="cross-check by enumeration")
    sp = sub.add_parser("gram", help="Gram matrices of the cell forms")
    common(sp, params=True)
    sp.add_argument("--label")
    sp.add_argument("--matrix", action="store_true")
    sp = sub.add_parser("gramdet", help="Gram determinant as a polynomial in beta")
    common(sp)
    sp.add_argument("--label")
    sp.add_argument("--gamma", type=rational, help="hold gamma fixed (default: gamma = beta)")
    sp = sub.add_parser("semisimple", help="semisimplicity verdict at (beta, gamma)")
    common(sp, params=True)
    sp = sub.add_parser("verify", help="structural checks")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--family", choices=fam.FAMILIES)
    sp.add_argument("--r", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int_range)
    sp.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    sp.add_argument("--jobs", type=int, default=1)
    sp = sub.add_parser("wreath-dim", help="wreath product dimensions and cell sums")
    common(sp)
    sp.add_argument("--b", type=int, default=2, help="use the group algebra of Z_b")
    sp.add_argument("--algebra", help="decoration algebra description file")
    sp = sub.add_parser("split", help="decompose a diagram into halves")
    common(sp, family=False, n_required=False)
    sp.add_argument("--diagram", required=True)
    sp = sub.add_parser("table", help="reproduce a dimension table")
    sp.add_argument("--name", choices=("planar_r_color", "planar_even"), required=True)
    sp.add_argument("--max-n", type=int, default=7)
    sp.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    sp.add_argument("--jobs", type=int, default=1)
    return p


VERBS = {"basis": cmd_basis, "mul": cmd_mul, "dims": cmd_dims, "cells": cmd_cells, "gram": cmd_gram,
         "gramdet": cmd_gramdet, "semisimple": cmd_semisimple, "verify": cmd_verify,
         "wreath-dim": cmd_wreath_dim, "split": cmd_split, "table": cmd_table}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.verb == "verify" and not args.all and (args.family is None or args.n is None):
        err.write("verify needs --all or both --family and --n\n")
        return 2
    try:
        rows, cols, code = VERBS[args.verb](args)
    except ResourceError as exc:
        err.write("resource bound: %s\n" % exc)
        return 3
    except (DiagramAlgError, ValueError, argparse.ArgumentTypeError, json.JSONDecodeError) as exc:
        err.write("error: %s\n" % exc)
        return 2
    emit(rows, cols, args.format, out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
