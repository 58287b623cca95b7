"""Command-line interface: ``ncgs <subcommand> ...``.

Every subcommand writes one JSON report (stable key order, no
timestamps) to stdout or ``--output``.  Exit codes: 0 success,
1 usage or input error, 2 refuted, 3 inconclusive, 4 resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .certify import CERTIFIED, INCONCLUSIVE, REFUTED, certify_residual_nilpotence
from .gsbases import check_gs_classical, check_gs_series, complete_classical, normal_word_counts
from .parse import ParseError
from .presentation import (
    BUNDLED,
    PresentationError,
    bundled_examples,
    bundled_text,
    parse_presentation,
)
from .quotients import gr1_dependence, hopf_h2_graded, quotient_dims
from .rewrite import CapExceeded
from .words import OrderError, check_admissible

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _load(source: str):
    """Read a presentation from a path or a bundled name; return it with a digest."""
    path = Path(source)
    if path.exists():
        text = path.read_text(encoding="utf-8")
    elif source in BUNDLED:
        text = bundled_text(source)
    else:
        raise UsageError(f"{source}: no such file or bundled example")
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return parse_presentation(text), {"source": source, "sha256": digest}


def _report(command: str, args, inputs, result: dict, status: str) -> dict:
    flags = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("func", "command", "output", "csv", "file") and v is not None
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "ncgs",
        "version": __version__,
        "command": command,
        "flags": flags,
        "input": inputs,
        "status": status,
        "result": result,
    }


# -- subcommands -----------------------------------------------------------------


def cmd_order_check(args):
    p, inputs = _load(args.file)
    order = p.order_max if args.which == "classical" else p.order_min
    rep = check_admissible(order, args.max_length)
    result = rep.to_dict(p.alphabet)
    result["n_order"] = order.n_order
    status = "admissible" if rep.passed else "not-admissible"
    return _report("order-check", args, inputs, result, status), EXIT_OK if rep.passed else EXIT_REFUTED


def cmd_gs_check(args):
    p, inputs = _load(args.file)
    rep = check_gs_classical(p.relations, p.order_max, trace=args.trace)
    code = EXIT_OK if rep.is_gs else EXIT_REFUTED
    return _report("gs-check", args, inputs, rep.to_dict(args.trace), rep.verdict), code


def cmd_series_gs_check(args):
    p, inputs = _load(args.file)
    if not p.order_min.n_order:
        raise OrderError(f"{p.order_min.describe()} is not an N-order")
    rep = check_gs_series(p.relations, p.order_min, args.weight_bound, trace=args.trace)
    code = {"is-GS": EXIT_OK, "not-GS": EXIT_REFUTED}.get(rep.verdict, EXIT_INCONCLUSIVE)
    return _report("series-gs-check", args, inputs, rep.to_dict(args.trace), rep.verdict), code


def cmd_gs_complete(args):
    p, inputs = _load(args.file)
    n = _need_trunc(args)
    comp = complete_classical(p.relations, p.order_max, n, max_rules=args.max_rules)
    fmt = p.alphabet.format
    leads = {r.max_term(p.order_max)[0] for r in comp.rules}
    result = {
        "degree_cap": n,
        "rules": [str(r) for r in comp.rules],
        "leading_words": sorted(fmt(w) for w in leads),
        "normal_word_counts": normal_word_counts(p.alphabet, leads, n - 1),
        "quotient_dim": len(comp.normal_words()),
    }
    return _report("gs-complete", args, inputs, result, comp.verdict), EXIT_OK


def cmd_certify(args):
    p, inputs = _load(args.file)
    cert = certify_residual_nilpotence(p, args.weight_bound, trace=args.trace)
    code = {CERTIFIED: EXIT_OK, REFUTED: EXIT_REFUTED, INCONCLUSIVE: EXIT_INCONCLUSIVE}[cert.verdict]
    return _report("certify", args, inputs, cert.to_dict(args.trace), cert.verdict), code


def cmd_quotient_dims(args):
    p, inputs = _load(args.file)
    n = _need_trunc(args)
    dims, gr = quotient_dims(p, n, max_rules=args.max_rules)
    result = {
        "n": n,
        "table": [{"n": m, "dim": dims[m - 1], "gr_dim": gr[m - 1]} for m in range(1, n + 1)],
        "quotient_dims": dims,
        "gr_dims": gr,
    }
    status, code = "ok", EXIT_OK
    if args.free_rank is not None:
        expected = [args.free_rank**k for k in range(n)]
        ok = gr == expected
        result["paraequivalence"] = {"free_rank": args.free_rank, "expected_gr_dims": expected, "passed": ok}
        status, code = ("paraequivalent", EXIT_OK) if ok else ("not-paraequivalent", EXIT_REFUTED)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "dim", "gr_dim"])
            for m in range(1, n + 1):
                w.writerow([m, dims[m - 1], gr[m - 1]])
    return _report("quotient-dims", args, inputs, result, status), code


def cmd_h2(args):
    p, inputs = _load(args.file)
    dims = {str(d): hopf_h2_graded(p, d) for d in range(1, args.max_weight + 1)}
    return _report("h2", args, inputs, {"h2_by_weight": dims}, "ok"), EXIT_OK


def cmd_example(args):
    if args.name is None:
        listing = [{k: v for k, v in e.items() if k != "path"} for e in bundled_examples()]
        return _report("example", args, None, {"examples": listing}, "ok"), EXIT_OK
    if args.name not in BUNDLED:
        raise UsageError(f"no bundled example {args.name!r}; choose from {sorted(BUNDLED)}")
    text = bundled_text(args.name)
    if args.write:
        Path(args.write).write_text(text, encoding="utf-8")
    result = {"presentation": json.loads(text)}
    code = EXIT_OK
    status = "ok"
    if args.resolution:
        if args.name != "main":
            raise UsageError("--resolution is only available for the main example")
        from . import resolution as res

        alg = res.MainExampleAlgebra()
        d = args.slice_length
        checks = [
            res.verify_c0_identity(d, alg),
            res.verify_c_equations(d, alg),
            res.verify_complex(6, alg),
            res.verify_homotopy(5, min(d, 5), alg),
            res.verify_ext_steps(d, alg),
        ]
        iomega = res.verify_iomega_identities(alg=alg)
        result["resolution"] = {
            "stage_parity": "stage 1 is the row (x1, x2, y1, y2); even stages >= 2 share one matrix, odd stages >= 3 the other",
            "checks": [c.to_dict() for c in checks],
            "iomega": iomega,
        }
        ok = all(c.passed for c in checks) and iomega["passed"]
        status, code = ("verified", EXIT_OK) if ok else ("failed", EXIT_REFUTED)
    return _report("example", args, {"source": args.name}, result, status), code


def cmd_counterexample(args):
    if args.which == "one":
        try:
            parse_presentation(bundled_text("counterexample-one"))
        except OrderError as e:
            result = {"rejected": True, "reason": str(e)}
            return _report("counterexample", args, {"source": "counterexample-one"}, result, "rejected-order"), EXIT_OK
        raise AssertionError("counterexample-one should be rejected")
    p, inputs = _load("counterexample-two")
    series = check_gs_series(p.relations, p.order_min, args.weight_bound)
    elements = [p.letter("x3"), p.letter("x4")]
    rk = gr1_dependence(p, elements)
    result = {
        "series_gs": series.verdict,
        "elements": ["x3", "x4"],
        "gr1_rank": rk,
        "normal_words_are_I_basis": rk == len(elements),
    }
    return _report("counterexample", args, inputs, result, "ok"), EXIT_OK


def _need_trunc(args) -> int:
    if args.trunc is None:
        raise UsageError("this subcommand needs --trunc/-n")
    if args.trunc < 1:
        raise UsageError("--trunc must be >= 1")
    return args.trunc


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weight-bound", type=int, default=30, help="series reduction weight bound (default 30)")
    common.add_argument("-n", "--trunc", type=int, default=None, help="truncation degree n for A/I^n")
    common.add_argument("--trace", action="store_true", default=None, help="include reduction traces")
    common.add_argument("--max-rules", type=int, default=100_000, help="completion rule cap")
    common.add_argument("--slice-length", type=int, default=6, help="word-length slice for resolution checks")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="ncgs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ncgs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file:
            sp.add_argument("file", help="presentation file or bundled example name")
        sp.set_defaults(func=func)
        return sp

    sp = add("order-check", cmd_order_check, "exhaustively test an order for admissibility")
    sp.add_argument("--which", choices=("classical", "series"), default="classical")
    sp.add_argument("--max-length", type=int, default=4)
    add("gs-check", cmd_gs_check, "classical Gröbner–Shirshov check (max terms)")
    add("gs-complete", cmd_gs_complete, "completion modulo words of length n")
    add("series-gs-check", cmd_series_gs_check, "series Gröbner–Shirshov check (min terms)")
    add("certify", cmd_certify, "residual-nilpotence certificate")
    sp = add("quotient-dims", cmd_quotient_dims, "dimensions of A/I^m and of the graded pieces")
    sp.add_argument("--free-rank", type=int, default=None, help="also compare with a free algebra of this rank")
    sp.add_argument("--csv", help="write the dimension table as CSV")
    sp = add("h2", cmd_h2, "weight slices of H_2 for homogeneous presentations")
    sp.add_argument("--max-weight", type=int, default=6)
    sp = add("example", cmd_example, "list, print or verify bundled examples", file=False)
    sp.add_argument("name", nargs="?", default=None)
    sp.add_argument("--write", help="copy the presentation file to this path")
    sp.add_argument("--resolution", action="store_true", default=None, help="run the resolution checks (main only)")
    sp = add("counterexample", cmd_counterexample, "regression examples for the series lemma", file=False)
    sp.add_argument("which", choices=("one", "two"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        report, code = args.func(args)
    except (UsageError, ParseError, PresentationError, OrderError, FileNotFoundError) as e:
        print(f"ncgs: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"ncgs: cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
