"""Command-line interface: ``gbgrank {rank,decompose,core,genfun,verify}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .genfun import ALIASES, FORMULAS, FormulaParams, formula, resolve
from .littlewood import core_norm_from_n, decompose, t_core_by_rim_hooks
from .partitions import format_partition, parse_partition
from .residue import as_integer, as_k_omega_j, chi, gbg_rank, n_vector, residue_counts
from .verify import Cell, expand_grid, load_config, summarize, verify_grid, write_csv, write_jsonl

log = logging.getLogger("gbgrank")

FORMULA_CHOICES = list(ALIASES) + list(FORMULAS)


def _vec(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_rank(args):
    pi = parse_partition(args.partition)
    rc = residue_counts(pi, args.t)
    n = n_vector(rc)
    rank = gbg_rank(pi, args.t)
    k = as_integer(rank)
    kj = as_k_omega_j(rank)
    if k is not None:
        kind = f"integer k={k}"
    elif kj is not None:
        kind = f"k*w^j with k={kj[0]} j={kj[1]}"
    else:
        kind = "other"
    if args.json:
        print(json.dumps({
            "partition": format_partition(pi), "t": args.t, "r": list(rc.r), "n": list(n.n),
            "canon": list(rank.canon), "integer": k,
            "k_omega_j": list(kj) if kj is not None else None,
            "chi": [chi(pi, args.t, i) for i in range(args.t)],
        }))
        return 0
    print(f"partition  {format_partition(pi)}")
    print(f"r          {_vec(rc.r)}")
    print(f"n          {_vec(n.n)}")
    print(f"canon      {_vec(rank.canon)}")
    print(f"GBG-rank   {rank}")
    print(f"class      {kind}")
    print(f"chi        {_vec(chi(pi, args.t, i) for i in range(args.t))}")
    return 0


def cmd_decompose(args):
    pi = parse_partition(args.partition)
    d = decompose(pi, args.t)
    n = n_vector(residue_counts(pi, args.t))
    quotient_norm = sum(q.norm for q in d.quotient)
    ok = pi.norm == d.core.norm + args.t * quotient_norm
    if args.json:
        print(json.dumps({
            "partition": format_partition(pi), "t": args.t, "core": format_partition(d.core),
            "quotient": [format_partition(q) for q in d.quotient], "n": list(n.n),
            "norm_identity": ok, "core_norm_formula": core_norm_from_n(n),
        }))
        return 0 if ok else 1
    print(f"partition  {format_partition(pi)}  (norm {pi.norm})")
    print(f"core       {format_partition(d.core)}  (norm {d.core.norm}, from n: {core_norm_from_n(n)})")
    for i, q in enumerate(d.quotient):
        print(f"quotient[{i}] {format_partition(q)}")
    print(f"n          {_vec(n.n)}")
    status = "ok" if ok else "FAILED"
    print(f"norm       {pi.norm} = {d.core.norm} + {args.t}*{quotient_norm}  {status}")
    return 0 if ok else 1


def cmd_core(args):
    pi = parse_partition(args.partition)
    print(format_partition(t_core_by_rim_hooks(pi, args.t)))
    return 0


def cmd_genfun(args):
    p = FormulaParams(args.t, args.N, args.nu, args.k, args.order, args.j)
    s = formula(args.theorem, p)
    if args.json:
        print(json.dumps(s.to_json()))
    else:
        print(s)
    return 0


def cmd_verify(args):
    if args.config:
        cells = expand_grid(load_config(args.config))
    else:
        missing = [name for name in ("theorem", "t", "N", "nu", "k") if getattr(args, name) is None]
        if missing:
            raise SystemExit(f"verify: need --config or all of --theorem --t --N --nu --k (missing {missing})")
        cells = [Cell(resolve(args.theorem), args.t, args.N, args.nu, args.k, args.order, args.j)]
    log.info("verifying %d cells", len(cells))
    reports = verify_grid(cells, workers=args.workers)
    summary = summarize(reports)

    if args.json:
        for r in reports:
            print(json.dumps(r.to_json()))
    else:
        for r in reports:
            c = r.cell
            j = "" if c.j is None else c.j
            status = "ok" if r.matched else f"MISMATCH at q^{r.first_divergence}"
            print(f"{c.formula}\t{c.t}\t{c.N}\t{c.nu}\t{c.k}\t{j}\t{c.order}\t{status}")
        print(f"# {summary['matched']}/{summary['cells']} cells matched", file=sys.stderr)
    if args.csv:
        write_csv(reports, args.csv)
    if args.jsonl:
        write_jsonl(reports, args.jsonl)
    if args.plot_dir and reports:
        from .plotting import plot_coefficients, plot_grid_status

        out = Path(args.plot_dir)
        out.mkdir(parents=True, exist_ok=True)
        plot_grid_status(reports, out / "grid_status.png")
        shown = [r for r in reports if not r.matched] or reports[:1]
        for r in shown[:20]:
            c = r.cell
            stem = f"coeffs_{c.formula}_t{c.t}_N{c.N}_nu{c.nu}_k{c.k}" + ("" if c.j is None else f"_j{c.j}")
            plot_coefficients(r, out / f"{stem}.png")
    return 0 if summary["mismatched"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbgrank", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="residue counts, n-vector and GBG-rank of a partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--partition", required=True, help='e.g. "[10,7,4,3]"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("decompose", help="t-core and t-quotient")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("core", help="t-core by successive rim-hook removal")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("genfun", help="print a closed-form generating function")
    p.add_argument("--theorem", required=True, choices=FORMULA_CHOICES)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", help="compare closed forms with enumeration")
    p.add_argument("--config", help="JSON grid config")
    p.add_argument("--theorem", choices=FORMULA_CHOICES)
    p.add_argument("--t", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true", help="JSON lines on stdout")
    p.add_argument("--csv", help="write a CSV summary here")
    p.add_argument("--jsonl", help="write JSON-lines reports here")
    p.add_argument("--plot-dir", help="render figures into this directory")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ValueError as exc:
        parser.exit(2, f"gbgrank: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
