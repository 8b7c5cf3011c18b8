"""Command-line front end: parse system files, solve, check the corpus.

System files declare a variable order and up to four constraint blocks:

    # when does z^3+az+b have a non-real root x+iy with xy < 1
    vars y > x > b > a;
    eq: x^3-3*x*y^2+a*x+b, 3*x^2-y^2+a;
    gt: 1-x*y;
    ne: y;

`eq` polynomials vanish, `ge` are nonnegative, `gt` strictly positive,
`ne` nonzero.  Blocks may repeat and appear in any order after the
`vars` declaration; `#` starts a comment.  The solver itself is
deterministic, so JSON output is byte-stable across runs; timings are
printed to the text stream only and never serialized.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import logging
import os
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from .chains import RegularChain
from .driver import (
    LazyOutput,
    RecursionDepthExceeded,
    RegularSAS,
    SemiAlgebraicSystem,
    lazy_real_triangularize,
    real_triangularize,
)
from .opencad import SamplePoint, SignAtom, SignFormula
from .polyarith import PolyParseError, VarOrder, format_poly, parse_poly
from .realroots import SignUndecidable

log = logging.getLogger("semialg.cli")

SCHEMA_VERSION = 1

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_BLOCKS = {"eq": "F", "ge": "N", "gt": "P", "ne": "H"}


class SystemFileError(ValueError):
    """The system file does not follow the grammar."""


def parse_system_file(text: str) -> SemiAlgebraicSystem:
    """Parse the system-file grammar into a SemiAlgebraicSystem."""
    stripped = re.sub(r"#[^\n]*", "", text)
    statements = [s.strip() for s in stripped.split(";")]
    statements = [s for s in statements if s]
    if not statements:
        raise SystemFileError("empty file: expected a `vars` declaration")
    head = statements[0]
    if not head.startswith("vars"):
        raise SystemFileError("first statement must declare `vars n1 > n2 > ...`")
    names_desc = [n.strip() for n in head[len("vars"):].split(">")]
    if not all(_IDENT.match(n) for n in names_desc):
        raise SystemFileError(f"bad variable declaration: {head!r}")
    if len(set(names_desc)) != len(names_desc):
        raise SystemFileError("duplicate variable in declaration")
    order = VarOrder(tuple(reversed(names_desc)))

    buckets: dict[str, list] = {"F": [], "N": [], "P": [], "H": []}
    for stmt in statements[1:]:
        label, sep, body = stmt.partition(":")
        label = label.strip()
        if not sep or label not in _BLOCKS:
            raise SystemFileError(
                f"expected one of {sorted(_BLOCKS)} followed by ':', got {stmt!r}"
            )
        for chunk in body.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                buckets[_BLOCKS[label]].append(parse_poly(chunk, order))
            except PolyParseError as e:
                raise SystemFileError(f"in `{label}` block: {e}") from e
    return SemiAlgebraicSystem(
        order,
        F=tuple(buckets["F"]),
        N=tuple(buckets["N"]),
        P=tuple(buckets["P"]),
        H=tuple(buckets["H"]),
    )


# ---------------------------------------------------------------------------
# JSON serialization (schema 1)


def formula_to_obj(Q: SignFormula) -> dict:
    return {
        "clauses": [
            [{"poly": format_poly(a.poly), "sign": a.sign} for a in clause]
            for clause in Q.clauses
        ]
    }


def obj_to_formula(obj: dict, order: VarOrder) -> SignFormula:
    return SignFormula.of(
        tuple(
            SignAtom(parse_poly(a["poly"], order), int(a["sign"])) for a in clause
        )
        for clause in obj["clauses"]
    ) if obj["clauses"] else SignFormula.false()


def component_to_obj(r: RegularSAS) -> dict:
    return {
        "formula": formula_to_obj(r.Q),
        "chain": [format_poly(t) for t in r.T.polys],
        "positive": [format_poly(p) for p in r.P],
        "witness": {
            "names": list(r.witness.names),
            "coords": [str(c) for c in r.witness.coords],
        },
    }


def obj_to_component(obj: dict, order: VarOrder) -> RegularSAS:
    chain = RegularChain(order, tuple(parse_poly(s, order) for s in obj["chain"]))
    return RegularSAS(
        Q=obj_to_formula(obj["formula"], order),
        T=chain,
        P=tuple(parse_poly(s, order) for s in obj["positive"]),
        witness=SamplePoint(
            tuple(obj["witness"]["names"]),
            tuple(Fraction(c) for c in obj["witness"]["coords"]),
        ),
    )


def system_to_obj(S: SemiAlgebraicSystem) -> dict:
    return {
        "eq": [format_poly(p) for p in S.F],
        "ge": [format_poly(p) for p in S.N],
        "gt": [format_poly(p) for p in S.P],
        "ne": [format_poly(p) for p in S.H],
    }


def obj_to_system(obj: dict, order: VarOrder) -> SemiAlgebraicSystem:
    return SemiAlgebraicSystem(
        order,
        F=tuple(parse_poly(s, order) for s in obj["eq"]),
        N=tuple(parse_poly(s, order) for s in obj["ge"]),
        P=tuple(parse_poly(s, order) for s in obj["gt"]),
        H=tuple(parse_poly(s, order) for s in obj["ne"]),
    )


def solve_document(
    S: SemiAlgebraicSystem, mode: str, max_depth: int
) -> dict:
    """Run the requested decomposition and build the output document."""
    if mode == "full":
        comps = real_triangularize(S, max_depth=max_depth)
        lazy = LazyOutput(tuple(comps), ())
    else:
        lazy = lazy_real_triangularize(S)
    return {
        "schema": SCHEMA_VERSION,
        "order": list(S.order.names),
        "mode": mode,
        "components": [component_to_obj(r) for r in lazy.components],
        "deferred": [system_to_obj(d) for d in lazy.deferred],
    }


# ---------------------------------------------------------------------------
# solve


def _print_text(doc: dict, out) -> None:
    n = len(doc["components"])
    print(f"{n} component{'s' if n != 1 else ''}", file=out)
    for i, c in enumerate(doc["components"], 1):
        clauses = c["formula"]["clauses"]
        if not clauses:
            formula = "false"
        elif clauses == [[]]:
            formula = "true"
        else:
            formula = " or ".join(
                " and ".join(
                    f"{a['poly']} {'>' if a['sign'] > 0 else '<'} 0" for a in cl
                )
                or "true"
                for cl in clauses
            )
        print(f"component {i}:", file=out)
        print(f"  formula: {formula}", file=out)
        for t in c["chain"]:
            print(f"  chain:   {t} = 0", file=out)
        for p in c["positive"]:
            print(f"  where:   {p} > 0", file=out)
        w = c["witness"]
        if w["names"]:
            pairs = ", ".join(f"{n}={v}" for n, v in zip(w["names"], w["coords"]))
            print(f"  witness: {pairs}", file=out)
    for i, d in enumerate(doc["deferred"], 1):
        parts = (
            [f"{p} = 0" for p in d["eq"]]
            + [f"{p} >= 0" for p in d["ge"]]
            + [f"{p} > 0" for p in d["gt"]]
            + [f"{p} != 0" for p in d["ne"]]
        )
        print(f"deferred {i}: [{', '.join(parts)}]", file=out)


def cmd_solve(
    path: str,
    mode: str = "lazy",
    fmt: str = "text",
    evaluate: bool = False,
    max_depth: int = 32,
    out=None,
) -> int:
    """Solve one system file; returns the process exit code."""
    out = out if out is not None else sys.stdout
    try:
        S = parse_system_file(Path(path).read_text())
    except (OSError, SystemFileError, PolyParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    run_mode = "full" if (mode == "full" or evaluate) else "lazy"
    log.debug("solving %s in %s mode", path, run_mode)
    t0 = time.monotonic()
    try:
        doc = solve_document(S, run_mode, max_depth)
    except (SignUndecidable, RecursionDepthExceeded) as e:
        print(f"solver error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    elapsed = time.monotonic() - t0
    if fmt == "json":
        json.dump(doc, out, indent=2)
        print(file=out)
    else:
        _print_text(doc, out)
        print(f"wall time: {elapsed:.2f} s", file=out)
    return 0


# ---------------------------------------------------------------------------
# corpus


def _corpus_one(path_str: str) -> tuple[str, bool, float, str]:
    """Run one corpus entry against its golden file; picklable worker."""
    path = Path(path_str)
    golden_path = path.with_suffix(".json")
    t0 = time.monotonic()
    try:
        golden = json.loads(golden_path.read_text())
        S = parse_system_file(path.read_text())
        doc = solve_document(S, golden.get("mode", "full"), 32)
        ok = doc == golden
        detail = "" if ok else "output differs from golden"
    except FileNotFoundError:
        ok, detail = False, f"missing golden {golden_path.name}"
    except Exception as e:
        ok, detail = False, f"{type(e).__name__}: {e}"
    return path.name, ok, time.monotonic() - t0, detail


def cmd_corpus(directory: str, jobs: int | None = None, out=None) -> int:
    """Run every .sas file in a directory against its golden output."""
    out = out if out is not None else sys.stdout
    files = sorted(str(p) for p in Path(directory).glob("*.sas"))
    if not files:
        print("no .sas files found; trivially passing", file=out)
        return 0
    jobs = jobs or min(len(files), os.cpu_count() or 1)
    results = []
    if jobs == 1:
        results = [_corpus_one(f) for f in files]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_corpus_one, files))
    failures = 0
    for name, ok, seconds, detail in sorted(results):
        status = "pass" if ok else "FAIL"
        line = f"{status}  {name}  ({seconds:.2f} s)"
        if detail:
            line += f"  {detail}"
        print(line, file=out)
        failures += 0 if ok else 1
    print(f"{len(results) - failures}/{len(results)} passed", file=out)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# entry point


def _setup_logging() -> None:
    level_name = os.environ.get("RT_LOG", "")
    if level_name:
        level = getattr(logging, level_name.upper(), logging.DEBUG)
        logging.basicConfig(
            level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s"
        )


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    parser = argparse.ArgumentParser(
        prog="semialg",
        description="Decompose semi-algebraic systems into regular pieces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one system file")
    p_solve.add_argument("path")
    p_solve.add_argument("--mode", choices=("lazy", "full"), default="lazy")
    p_solve.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    p_solve.add_argument(
        "--evaluate",
        action="store_true",
        help="resolve deferred systems recursively (same as --mode full)",
    )
    p_solve.add_argument("--max-depth", type=int, default=32)
    p_solve.add_argument("--seed", type=int, default=None, help="accepted for "
                         "interface stability; the solver is deterministic")

    p_corpus = sub.add_parser("corpus", help="run a directory of system files "
                              "against golden outputs")
    p_corpus.add_argument("directory")
    p_corpus.add_argument("--jobs", type=int, default=None)
    p_corpus.add_argument("--seed", type=int, default=None)

    args = parser.parse_args(argv)
    if args.seed is not None:
        log.debug("seed %d noted; no randomized paths in the solver", args.seed)
    if args.command == "solve":
        return cmd_solve(
            args.path,
            mode=args.mode,
            fmt=args.fmt,
            evaluate=args.evaluate,
            max_depth=args.max_depth,
        )
    return cmd_corpus(args.directory, jobs=args.jobs)


if __name__ == "__main__":
    sys.exit(main())
