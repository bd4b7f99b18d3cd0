"""Command-line driver.

Subcommands:
  eval        evaluate a diagram expression, optionally on one tabloid
  kron        tensor-product block decomposition and block generators
  relations   run a relation suite; nonzero exit on any failure
  schur-dims  hom-space dimension table (CSV on stdout)
  doty-check  saturation reports
  brauer      diagram-algebra products and duality reports

Reports accept --report-dir to also write a CSV and a PNG figure.
All scalars printed are exact; exit codes: 0 ok, 1 failed checks,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combinatorics import kappa, multinomial
from .errors import PermwebError, SizeGuardError
from .exact import format_rational, linmap_to_json
from .tabloids import (format_image, format_tabloid, module_dim,
                       morphism_to_json, parse_tabloid, perm_module)

DEFAULT_MAX_DIM = 5000


def _max_dim(args) -> int:
    if args.max_dim is not None:
        return args.max_dim
    env = os.environ.get("SWW_MAX_DIM")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SizeGuardError(f"bad SWW_MAX_DIM value {env!r}")
    return DEFAULT_MAX_DIM


def _guard(shape, limit, max_d=None):
    if max_d is not None and sum(p for p in shape if p > 0) > max_d:
        raise SizeGuardError(
            f"degree {sum(shape)} exceeds the --max-d guard {max_d}")
    dim = module_dim(tuple(shape))
    if dim > limit:
        raise SizeGuardError(
            f"basis of M^{tuple(shape)} has {dim} elements, over the "
            f"--max-dim guard {limit}")


def _parse_shape(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PermwebError(f"bad shape {text!r} (want comma-separated integers)")


def cmd_eval(args) -> int:
    from .spiders import evaluate, parse_linear
    text = args.expr
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    expr = parse_linear(text)
    limit = _max_dim(args)
    for boundary in (expr.bottom, expr.top):
        _guard([p for p in boundary if p > 0], limit, args.max_d)
    morphism = evaluate(expr)
    if args.apply is not None:
        tab = parse_tabloid(args.apply)
        terms = morphism.apply(tab)
        if args.json:
            payload = [{"coeff": format_rational(c), "tabloid": format_tabloid(t)}
                       for c, t in terms]
            print(json.dumps(payload, sort_keys=True))
        else:
            print(format_image(terms))
        return 0
    if args.json:
        print(json.dumps(morphism_to_json(morphism), sort_keys=True))
    else:
        obj = morphism_to_json(morphism)
        print(f"source {tuple(obj['source'])} -> target {tuple(obj['target'])}, "
              f"{obj['rows']}x{obj['cols']}")
        for r, c, v in obj["entries"]:
            print(f"  [{r},{c}] = {v}")
    return 0


def cmd_kron(args) -> int:
    from .kron import decompose_tensor, tensor_generator
    lhs = _parse_shape(args.lhs)
    rhs = _parse_shape(args.rhs)
    limit = _max_dim(args)
    _guard(lhs, limit, args.max_d)
    _guard(rhs, limit, args.max_d)
    if module_dim(lhs) * module_dim(rhs) > limit:
        raise SizeGuardError("tensor basis exceeds the --max-dim guard")

    side = "right"
    gen_payload = None
    row_blocks = None
    if args.gen:
        try:
            gen, side_name, j = args.gen.split(",")
            j = int(j)
        except ValueError:
            raise PermwebError("--gen wants '<E|F>,<left|right>,<j>'")
        if gen not in ("E", "F") or side_name not in ("left", "right"):
            raise PermwebError("--gen wants '<E|F>,<left|right>,<j>'")
        side = side_name
        block = tensor_generator(side_name, gen, j, lhs, rhs)
        row_blocks = block.row_blocks
        gen_payload = [
            {"row": r, "col": c, **morphism_to_json(m)}
            for (r, c), m in sorted(block.blocks.items())
        ]
    dec = decompose_tensor(lhs, rhs, side)
    if row_blocks is None:
        row_blocks = dec.blocks
    payload = {
        "lhs": list(lhs),
        "rhs": list(rhs),
        "side": side,
        "blocks_row": [[list(row) for row in a] for a in row_blocks],
        "blocks_col": [[list(row) for row in a] for a in dec.blocks],
        "block_shapes": [list(kappa(s)) for s in dec.flat_shapes],
        "basis_bijection": dec.bijection,
    }
    if gen_payload is not None:
        payload["blocks"] = gen_payload
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        shapes = ", ".join(str(tuple(kappa(s))) for s in dec.flat_shapes)
        print(f"M^{lhs} (x) M^{rhs} = {shapes}")
        for a in dec.blocks:
            print("  block " + " / ".join(",".join(map(str, row)) for row in a))
        if gen_payload is not None:
            print(f"generator blocks: {len(gen_payload)} nonzero")
    return 0


def cmd_relations(args) -> int:
    from .relations import gl_suite, perm_suite
    if args.suite == "perm":
        report = perm_suite(args.max)
    elif args.suite == "gl":
        report = gl_suite(args.max, args.max)
    elif args.suite == "sp":
        from .brauer import sp_ladder_relation_suite
        report = None
        for d in range(0, min(args.max, 3) + 1):
            part = sp_ladder_relation_suite(args.n, d)
            if report is None:
                report = part
                report.suite = f"sp(n={args.n},d<={min(args.max, 3)})"
            else:
                report.instances.extend(part.instances)
    else:
        raise PermwebError(f"unknown suite {args.suite!r}")

    for inst in report.instances:
        status = "PASS" if inst.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(inst.params.items()))
        print(f"{status} {inst.relation} {params}")
    print(report.summary())
    if args.report_dir:
        from .reports import relation_report_files
        files = relation_report_files(report, args.report_dir,
                                      f"relations_{args.suite}")
        for path in files:
            print(f"wrote {path}")
    return 0 if report.passed else 1


def cmd_schur_dims(args) -> int:
    from .saturation import schur_block_dims
    table = schur_block_dims(args.n, args.d)
    out = sys.stdout
    for row in table.csv_rows():
        out.write(",".join(str(x) for x in row) + "\n")
    ok = (table.all_match
          and table.total_span == table.expected_total
          and table.irrep_square_sum == table.expected_total)
    print(f"# total span {table.total_span}, expected "
          f"{table.expected_total}, irrep square sum {table.irrep_square_sum}, "
          f"{'OK' if ok else 'MISMATCH'}")
    if args.report_dir:
        from .reports import schur_table_files
        for path in schur_table_files(table, args.report_dir,
                                      f"schur_dims_n{args.n}_d{args.d}"):
            print(f"wrote {path}")
    return 0 if ok else 1


def cmd_doty_check(args) -> int:
    from .saturation import is_saturated_gl, sl2_doty_demo
    if args.demo == "sl2":
        rep = sl2_doty_demo()
        print(rep.summary())
        ok = (rep.annihilates_irreducible and not rep.annihilates_saturated
              and rep.words_stay_inside and not rep.saturated_flag)
        return 0 if ok else 1
    if args.module:
        with open(args.module) as fh:
            spec = json.load(fh)
        hw = [tuple(w) for w in spec["highest_weights"]]
        n = spec["n"]
        flag, witness = is_saturated_gl(hw, n)
        if flag:
            print(f"saturated: highest weights {hw} over gl_{n}")
            return 0
        print(f"unsaturated: witness {witness}")
        return 1
    raise PermwebError("doty-check wants --demo sl2 or --module <weights.json>")


def cmd_brauer(args) -> int:
    from .brauer import (BrauerElement, duality_check, format_diagram,
                         multiply, parse_diagram_text)
    if args.mult:
        x_text, y_text = args.mult
        x = parse_diagram_text(x_text)
        y = parse_diagram_text(y_text)
        delta = args.delta if args.delta is not None else 0
        prod = multiply(BrauerElement.from_diagram(x, delta),
                        BrauerElement.from_diagram(y, delta))
        from .brauer import multiply_diagrams
        loops, z = multiply_diagrams(x, y)
        payload = {
            "delta": delta,
            "loops": loops,
            "result": format_diagram(z),
            "coefficient": format_rational(prod.terms.get(z, 0)),
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    if args.duality:
        reports = []
        if args.duality == "mixed":
            if args.r is None or args.s is None:
                raise PermwebError("mixed duality wants --r and --s")
            reports.append(duality_check("mixed", args.n, r=args.r, s=args.s))
        else:
            if args.d is None:
                raise PermwebError("sp/o duality wants --d")
            reports.append(duality_check(args.duality, args.n, d=args.d))
        ok = True
        for rep in reports:
            print(rep.summary())
            ok = ok and rep.commutators_zero
            if rep.threshold_holds:
                ok = ok and rep.equal
        if args.report_dir:
            from .reports import duality_report_files
            for path in duality_report_files(reports, args.report_dir,
                                             "duality"):
                print(f"wrote {path}")
        return 0 if ok else 1
    raise PermwebError("brauer wants --mult X Y or --duality <sp|o|mixed>")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permweb",
        description="exact diagram calculus on permutation modules",
        allow_abbrev=False)
    parser.add_argument("--max-dim", type=int, default=None,
                        help=f"basis size guard (default {DEFAULT_MAX_DIM}; "
                             "or env SWW_MAX_DIM)")
    parser.add_argument("--max-d", type=int, default=8,
                        help="degree guard for eval/kron inputs (default 8)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker pool size for suite subcommands "
                             "(results merged deterministically)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a diagram expression")
    p.add_argument("--expr", required=True,
                   help="DSL text or @file; linear combinations allowed")
    p.add_argument("--apply", help="tabloid like '1,2|3' to map through")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("kron", help="tensor-product block decomposition")
    p.add_argument("--lhs", required=True, help="left shape, e.g. 3,1")
    p.add_argument("--rhs", required=True, help="right shape, e.g. 2,2")
    p.add_argument("--gen", help="generator spec '<E|F>,<left|right>,<j>'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("relations", help="run a relation suite")
    p.add_argument("--suite", required=True, choices=("perm", "gl", "sp"))
    p.add_argument("--max", type=int, required=True,
                   help="label bound (perm), weight bound (gl), degree (sp)")
    p.add_argument("--n", type=int, default=2,
                   help="rank for the sp suite (default 2)")
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("schur-dims", help="hom-space dimension table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_schur_dims)

    p = sub.add_parser("doty-check", help="saturation reports")
    p.add_argument("--demo", choices=("sl2",))
    p.add_argument("--module", help="JSON file with n and highest_weights")
    p.set_defaults(func=cmd_doty_check)

    p = sub.add_parser("brauer", help="diagram algebra and duality")
    p.add_argument("--mult", nargs=2, metavar=("X", "Y"),
                   help="two diagrams in 'd; t1-b2, ...' form")
    p.add_argument("--delta", type=int)
    p.add_argument("--duality", choices=("sp", "o", "mixed"))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--report-dir")
    p.set_defaults(func=cmd_brauer)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PermwebError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
