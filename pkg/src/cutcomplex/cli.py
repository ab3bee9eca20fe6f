"""Command-line front end.

Subcommands::

    build       write the facet file of a cut complex
    betti       exact reduced Betti numbers of a complex
    shelling    verify a facet order (explicit, reversed, or from a file)
    conjecture  per-n verification table: shelling + three-way spanning census
    export      re-emit a complex in canonical facet-file form

Exit status: 0 when every requested mathematical check passed, 1 when a
check failed (invalid shelling, census mismatch), 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cut3_shelling import shelling_order, verify_conjecture
from .graphs import EdgeListError, Graph, parse_edge_list, squared_cycle
from .homology import Field, betti, parse_field
from .simplicial import (
    FacetFileError,
    SimplicialComplex,
    cut_complex,
    export_complex,
    from_facets,
    parse_facet_file,
    verify_shelling,
)

OK, CHECK_FAILED, USAGE = 0, 1, 2


class _CliError(Exception):
    """Usage or input problem; message goes to stderr, exit status 2."""


def _parse_n_range(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            start, stop = int(lo), int(hi)
        except ValueError:
            raise _CliError(f"bad range {text!r}; expected e.g. 9..13") from None
        if start > stop:
            raise _CliError(f"empty range {text!r}")
        return list(range(start, stop + 1))
    try:
        return [int(text)]
    except ValueError:
        raise _CliError(f"bad value {text!r} for --n") from None


def _single_n(text: str) -> int:
    ns = _parse_n_range(text)
    if len(ns) != 1:
        raise _CliError("this command expects a single --n, not a range")
    return ns[0]


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_graph(args) -> Graph:
    if args.graph is not None:
        if args.n is not None:
            raise _CliError("give either --n or --graph, not both")
        try:
            return parse_edge_list(_read_text(args.graph))
        except EdgeListError as exc:
            raise _CliError(f"{args.graph}: {exc}") from None
    if args.n is None:
        raise _CliError("one of --n or --graph is required")
    return squared_cycle(_single_n(args.n))


def _load_complex(args) -> SimplicialComplex:
    if getattr(args, "complex", None) is not None:
        if args.graph is not None or args.n is not None:
            raise _CliError("--complex excludes --n and --graph")
        try:
            n, facets = parse_facet_file(_read_text(args.complex))
        except FacetFileError as exc:
            raise _CliError(f"{args.complex}: {exc}") from None
        return from_facets(n, facets)
    g = _load_graph(args)
    try:
        return cut_complex(g, args.k)
    except ValueError as exc:
        raise _CliError(str(exc)) from None


class _Output:
    def __init__(self, path: str | None):
        self._handle = open(path, "w") if path else sys.stdout
        self._owned = path is not None

    def line(self, text: str) -> None:
        self._handle.write(text + "\n")
        self._handle.flush()

    def close(self) -> None:
        if self._owned:
            self._handle.close()


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_build(args, out: _Output) -> int:
    cx = _load_complex(args)
    out.line(export_complex(cx).rstrip("\n"))
    return OK


def _cmd_export(args, out: _Output) -> int:
    return _cmd_build(args, out)


def _cmd_betti(args, out: _Output) -> int:
    cx = _load_complex(args)
    field = parse_field(args.field)
    try:
        bv = betti(cx, field)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    if args.format == "json-lines":
        out.line(json.dumps({"command": "betti", **bv.to_record()}))
    else:
        vals = " ".join(str(v) for v in bv.values)
        out.line(f"field={field.name} start_dim=-1 betti= {vals}")
    return OK


def _resolve_order(args, cx: SimplicialComplex):
    spec = args.order
    if spec in ("prec", "reversed"):
        if args.n is None or args.k != 3 or getattr(args, "complex", None) or args.graph:
            raise _CliError(
                "--order prec/reversed needs --n with --k 3 "
                "(no explicit order is provided otherwise)"
            )
        order = shelling_order(_single_n(args.n))
        return order if spec == "prec" else list(reversed(order))
    if spec.startswith("file:"):
        path = spec[len("file:") :]
        try:
            n, facets = parse_facet_file(_read_text(path))
        except FacetFileError as exc:
            raise _CliError(f"{path}: {exc}") from None
        if n != cx.n:
            raise _CliError(f"{path}: order is on {n} vertices, complex on {cx.n}")
        return facets
    raise _CliError(f"bad --order {spec!r}; expected prec, reversed or file:<path>")


def _cmd_shelling(args, out: _Output) -> int:
    cx = _load_complex(args)
    order = _resolve_order(args, cx)
    try:
        report = verify_shelling(cx, order)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    spanning = sum(report.spanning_flags)
    if args.format == "json-lines":
        record = {
            "command": "shelling",
            "facet_count": len(report.order),
            "order": args.order,
            "valid": report.valid,
            "witness": list(report.witness) if report.witness else None,
            "spanning": spanning,
        }
        out.line(json.dumps(record))
    else:
        verdict = "valid" if report.valid else "invalid"
        out.line(
            f"facets={len(report.order)} order={args.order} "
            f"shelling={verdict} spanning={spanning}"
        )
        if report.witness is not None:
            i, j = report.witness
            fi = " ".join(map(str, sorted(report.order[i - 1])))
            fj = " ".join(map(str, sorted(report.order[j - 1])))
            lj = " ".join(map(str, sorted(report.removable[j - 1])))
            out.line(f"witness: i={i} j={j}")
            out.line(f"  F_i: {fi}")
            out.line(f"  F_j: {fj}")
            out.line(f"  removable(F_j): {lj}")
    return OK if report.valid else CHECK_FAILED


def _conjecture_row(record: dict, fmt: str) -> str:
    if fmt == "json-lines":
        return json.dumps(record)
    top = record["betti"]["values"][-1] if record["betti"] else "-"
    return (
        f"n={record['n']} facets={record['facet_count']} "
        f"shelling={'valid' if record['shelling_valid'] else 'invalid'} "
        f"spanning={record['spanning_from_order']}/{record['spanning_from_S']}"
        f"/{record['spanning_from_formula']} "
        f"betti_top={top} pass={'yes' if record['all_pass'] else 'no'}"
    )


def _verify_one(n: int, field: Field, homology: bool, cap: int) -> dict:
    return verify_conjecture(n, field, with_homology=homology, homology_cap=cap).to_record()


def _cmd_conjecture(args, out: _Output) -> int:
    if args.k != 3:
        raise _CliError("the verification pipeline covers k=3 only")
    ns = _parse_n_range(args.n)
    field = parse_field(args.field)
    if args.jobs is not None and args.jobs < 1:
        raise _CliError("--jobs must be at least 1")
    jobs = args.jobs or os.cpu_count() or 1
    all_pass = True
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(ns))) as pool:
            futures = {
                n: pool.submit(_verify_one, n, field, args.homology, args.homology_cap)
                for n in ns
            }
            for n in ns:
                record = futures[n].result()
                all_pass &= record["all_pass"]
                out.line(_conjecture_row(record, args.format))
    else:
        for n in ns:
            record = _verify_one(n, field, args.homology, args.homology_cap)
            all_pass &= record["all_pass"]
            out.line(_conjecture_row(record, args.format))
    return OK if all_pass else CHECK_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_input_options(sub, with_complex: bool = True) -> None:
    sub.add_argument("--n", help="vertex count of a squared cycle (or a..b range where supported)")
    sub.add_argument("--k", type=int, default=3, help="cut parameter (default 3)")
    sub.add_argument("--graph", help="edge-list file to use instead of a squared cycle")
    if with_complex:
        sub.add_argument("--complex", help="facet file to load directly")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutcomplex",
        description="Cut complexes of graphs: shelling certificates, spanning census, exact homology.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("build", help="write the facet file of a cut complex")
    _add_input_options(p)
    p.add_argument("--out", help="output path (default: stdout)")

    p = subs.add_parser("export", help="canonicalise a complex as a facet file")
    _add_input_options(p)
    p.add_argument("--out", help="output path (default: stdout)")

    p = subs.add_parser("betti", help="exact reduced Betti numbers")
    _add_input_options(p)
    p.add_argument("--field", choices=["gf2", "gf3", "gf5", "rational"], default="gf2")
    p.add_argument("--format", choices=["text", "json-lines"], default="text")
    p.add_argument("--out", help="output path (default: stdout)")

    p = subs.add_parser("shelling", help="verify a facet order")
    _add_input_options(p)
    p.add_argument(
        "--order",
        default="prec",
        help="prec (explicit order), reversed, or file:<path> (default: prec)",
    )
    p.add_argument("--format", choices=["text", "json-lines"], default="text")
    p.add_argument("--out", help="output path (default: stdout)")

    p = subs.add_parser("conjecture", help="per-n verification table over an n range")
    p.add_argument("--n", help="single n or range a..b", required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--field", choices=["gf2", "gf3", "gf5", "rational"], default="gf2")
    p.add_argument("--homology", action="store_true", help="also compute Betti numbers")
    p.add_argument(
        "--homology-cap",
        type=int,
        default=14,
        help="skip homology above this n even with --homology (default 14)",
    )
    p.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    p.add_argument("--format", choices=["text", "json-lines"], default="text")
    p.add_argument("--out", help="output path (default: stdout)")

    return parser


_HANDLERS = {
    "build": _cmd_build,
    "export": _cmd_export,
    "betti": _cmd_betti,
    "shelling": _cmd_shelling,
    "conjecture": _cmd_conjecture,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    out = _Output(getattr(args, "out", None))
    try:
        return _HANDLERS[args.command](args, out)
    except (_CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    finally:
        out.close()


def entry() -> None:
    sys.exit(main())
