"""Command-line driver.

Exit codes: 0 success, 1 computation refused (oracle limits, non-split
input), 2 usage or parse error, 3 formula/oracle mismatch in ``compare``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .catalog import FAMILIES, MatroidSpec, build_matroid
from .errors import FormulaError, InputError, NotSplitError, OracleLimitError
from .formulas import matroid_f, profile_of
from .matroid import Matroid, connected_components, is_split
from .oracle import f_vector_oracle
from .shape import is_log_concave, is_unimodal

EXIT_OK, EXIT_REFUSED, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


def parse_params(text: str) -> list:
    """``"3,6"`` -> ``[3, 6]``; tokens with ``:`` are subsets, e.g. ``0:1:2``."""
    if text is None or text.strip() == "":
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            if ":" in tok:
                out.append([int(x) for x in tok.split(":") if x != ""])
            else:
                out.append(int(tok))
        except ValueError:
            raise InputError(f"cannot parse parameter {tok!r}") from None
    # sparse_paving takes its subsets as one trailing list
    if any(isinstance(x, list) for x in out):
        head = [x for x in out if not isinstance(x, list)]
        return head + [[x for x in out if isinstance(x, list)]]
    return out


def load_spec(args) -> MatroidSpec:
    if args.input is not None:
        try:
            obj = json.loads(Path(args.input).read_text())
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON in {args.input}: {exc}") from None
        return MatroidSpec.from_json(obj)
    if args.family is None:
        raise InputError("give --input FILE or --family NAME")
    if args.family == "direct_sum":
        raise InputError("direct_sum is only available through --input")
    return MatroidSpec.from_json({"family": args.family, "params": parse_params(args.params)})


def _fvec(poly) -> list[str]:
    return [str(c) for c in poly]


def _tables(m: Matroid):
    if len(connected_components(m)) != 1 or not is_split(m):
        return None, None
    prof = profile_of(m)
    lam = {f"{r},{h}": c for (r, h), c in prof.lam.items()}
    mu = {",".join(map(str, key)): c for key, c in prof.mu.items()}
    return lam, mu


def result_document(m: Matroid, method: str = "formula") -> dict:
    comps = connected_components(m)
    split = is_split(m)
    timing = {}
    formula = oracle = None
    if method in ("formula", "both"):
        t0 = time.perf_counter()
        formula = matroid_f(m)
        timing["formula_seconds"] = time.perf_counter() - t0
    if method in ("oracle", "both"):
        t0 = time.perf_counter()
        oracle = f_vector_oracle(m)
        timing["oracle_seconds"] = time.perf_counter() - t0
    main = formula if formula is not None else oracle
    lam, mu = _tables(m)
    doc = {
        "n": m.n,
        "rank": m.k,
        "components": len(comps),
        "dimension": m.n - len(comps),
        "f_vector": _fvec(main),
        "method": method,
        "lambda": lam,
        "mu": mu,
        "split": bool(split),
        "unimodal": is_unimodal(main),
        "log_concave": is_log_concave(main),
        "timing": timing,
    }
    if method == "both":
        doc["f_vector_oracle"] = _fvec(oracle)
        doc["agree"] = formula == oracle
    return doc


def _emit(doc: dict, fmt: str, out):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if "f_vector_oracle" in doc:
            w.writerow(["dimension", "formula", "oracle"])
            for i, (a, b) in enumerate(zip(doc["f_vector"], doc["f_vector_oracle"])):
                w.writerow([i, a, b])
        else:
            w.writerow(["dimension", "faces"])
            for i, a in enumerate(doc["f_vector"]):
                w.writerow([i, a])
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(doc, indent=2) + "\n")


def cmd_fvector(args, out):
    m = build_matroid(load_spec(args))
    doc = result_document(m, args.method)
    _emit(doc, args.format, out)
    return EXIT_OK


def cmd_compare(args, out):
    m = build_matroid(load_spec(args))
    doc = result_document(m, "both")
    _emit(doc, args.format, out)
    return EXIT_OK if doc["agree"] else EXIT_MISMATCH


def cmd_invariants(args, out):
    m = build_matroid(load_spec(args))
    comps = connected_components(m)
    split = is_split(m)
    lam, mu = _tables(m)
    doc = {
        "n": m.n,
        "rank": m.k,
        "bases": len(m.bases),
        "components": [sorted(c) for c in comps],
        "split": bool(split),
        "certificate": None if split else [sorted(s) for s in split.certificate],
        "lambda": lam,
        "mu": mu,
    }
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_check(args, out):
    m = build_matroid(load_spec(args))
    poly = matroid_f(m) if args.method == "formula" else f_vector_oracle(m)
    want_all = not (args.unimodal or args.log_concave)
    doc = {"f_vector": _fvec(poly)}
    if args.unimodal or want_all:
        doc["unimodal"] = is_unimodal(poly)
    if args.log_concave or want_all:
        doc["log_concave"] = is_log_concave(poly)
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_catalog(args, out):
    for name, (sig, _) in sorted(FAMILIES.items()):
        out.write(f"{name}\t{sig}\n")
    out.write("direct_sum\t(JSON input only)\n")
    return EXIT_OK


def _batch_one(path: Path, method: str) -> dict:
    try:
        obj = json.loads(path.read_text())
        m = build_matroid(MatroidSpec.from_json(obj))
        doc = result_document(m, method)
    except json.JSONDecodeError as exc:
        return {"file": path.name, "error": f"malformed JSON: {exc}", "exit": EXIT_USAGE}
    except InputError as exc:
        return {"file": path.name, "error": str(exc), "exit": EXIT_USAGE}
    except (OracleLimitError, NotSplitError) as exc:
        return {"file": path.name, "error": str(exc), "exit": EXIT_REFUSED}
    doc["file"] = path.name
    return doc


def cmd_batch(args, out):
    root = Path(args.dir)
    if not root.is_dir():
        raise InputError(f"{args.dir} is not a directory")
    files = sorted(root.glob("*.json"))
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        docs = list(pool.map(lambda p: _batch_one(p, args.method), files))
    out.write(json.dumps(docs, indent=2) + "\n")
    codes = [d.get("exit", EXIT_OK) for d in docs]
    if args.method == "both" and any(d.get("agree") is False for d in docs):
        return EXIT_MISMATCH
    return max(codes, default=EXIT_OK)


def _add_input(p, methods=("formula", "oracle", "both"), default="formula"):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE", help="JSON matroid description")
    src.add_argument("--family", metavar="NAME", help="named family, see `catalog list`")
    p.add_argument("--params", metavar="CSV", default="", help="family parameters, e.g. 3,6")
    if methods:
        p.add_argument("--method", choices=methods, default=default)


def _add_format(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.set_defaults(format="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyface", description="Face numbers of matroid base polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fvector", help="f-vector by formula, oracle, or both")
    _add_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("invariants", help="components, split test, lambda/mu tables")
    _add_input(p, methods=())
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("compare", help="formula vs oracle; exit 3 on mismatch")
    _add_input(p, methods=())
    _add_format(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check", help="unimodality / log-concavity of the f-vector")
    _add_input(p, methods=("formula", "oracle"))
    p.add_argument("--unimodal", action="store_true")
    p.add_argument("--log-concave", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("catalog", help="named families")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("batch", help="fvector for every *.json in a directory")
    p.add_argument("--dir", required=True, metavar="PATH")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)
    return parser


def run_command(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"polyface: error: {exc}\n")
        return EXIT_USAGE
    except (OracleLimitError, NotSplitError) as exc:
        err.write(f"polyface: refused: {exc}\n")
        return EXIT_REFUSED
    except FormulaError as exc:
        err.write(f"polyface: internal check failed: {exc}\n")
        return EXIT_REFUSED


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
