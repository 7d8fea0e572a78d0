"""``hodgedeg`` command line.

Exit status: 0 ok, 1 negative verdict (relation fails, check fails, golden differs),
2 invalid input. Errors go to stderr as ``hodgedeg: error[CODE]: message``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diamonds import (
    Diamond,
    HodgeNumbers,
    InvalidDiamond,
    InvalidHodgeNumbers,
    WeightMismatch,
    enumerate_diamonds,
    is_valid_diamond,
    validate_hodge_numbers,
)
from .documents import DocumentError, diamond_to_doc, dumps, load_diamond, witness_from_doc, witness_to_doc
from .linalg.pmhs import check_pmhs, diamond_of, orbit_probe, realize_diamond
from .linalg.scalar import format_scalar, parse_complex
from .relation import DEFAULT_NODE_CAP, NodeCapExceeded, polarized_leq, relation_digraph
from .render import diamond_label, entry_summary, render_dot, render_json
from .scenarios import SCENARIOS, golden_text

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID = 0, 1, 2


class CliError(Exception):
    def __init__(self, code: str, message: str) -> None:
        super().__init__(message)
        self.code = code


def _hodge(text: str, weight: int | None) -> HodgeNumbers:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError("E_HODGE", f"--hodge expects comma-separated integers, got {text!r}") from None
    if weight is not None and weight != len(values) - 1:
        raise CliError("E_HODGE", f"--weight {weight} needs {weight + 1} Hodge numbers, got {len(values)}")
    h = HodgeNumbers.from_tuple(values)
    verdict = validate_hodge_numbers(h)
    if not verdict:
        raise CliError("E_HODGE", "; ".join(map(str, verdict.violations)))
    return h


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError("E_IO", str(exc)) from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError("E_IO", str(exc)) from None


def _load_diamond(ref: str) -> tuple[HodgeNumbers, Diamond]:
    """``FILE`` or ``FILE#INDEX`` (index into a JSON array of documents)."""
    path, _, idx = ref.rpartition("#") if "#" in ref else (ref, "", "")
    index = None
    if idx:
        if not idx.isdigit():
            raise CliError("E_PARSE", f"bad index in {ref!r}")
        index = int(idx)
    try:
        h, f = load_diamond(_read(path), index)
    except DocumentError as exc:
        raise CliError("E_PARSE", f"{ref}: {exc}") from None
    verdict = validate_hodge_numbers(h)
    if not verdict:
        raise CliError("E_HODGE", f"{ref}: " + "; ".join(map(str, verdict.violations)))
    check = is_valid_diamond(h, f)
    if not check:
        raise CliError("E_DIAMOND", f"{ref}: " + "; ".join(map(str, check.violations)))
    return h, f


def cmd_enumerate(args: argparse.Namespace) -> int:
    h = _hodge(args.hodge, args.weight)
    diamonds = enumerate_diamonds(h)
    docs = [diamond_to_doc(h, f) for f in diamonds]
    if args.split_dir:
        out = Path(args.split_dir)
        out.mkdir(parents=True, exist_ok=True)
        width = len(str(len(docs) - 1))
        for i, doc in enumerate(docs):
            (out / f"diamond-{i:0{width}d}.json").write_text(dumps(doc), encoding="utf-8")
    report = sys.stderr if args.output in (None, "-") else sys.stdout
    _write(args.output, dumps(docs))
    print(f"{len(docs)} diamond{'' if len(docs) == 1 else 's'} for h={h}", file=report)
    return EXIT_OK


def cmd_relate(args: argparse.Namespace) -> int:
    h1, f1 = _load_diamond(args.a)
    h2, f2 = _load_diamond(args.b)
    if h1 != h2:
        raise CliError("E_DOMAIN", f"Hodge numbers differ: {h1} vs {h2}")
    result = polarized_leq(f1, f2, h1)
    print(f"{args.a} {'⪯' if result.holds else '⋠'} {args.b}")
    if args.witness and result.holds:
        for level, g in result.witness:
            print(f"  level {level}: weight {g.weight} diamond {entry_summary(g) or '(empty)'}, shifted 0..{level}")
    return EXIT_OK if result.holds else EXIT_NEGATIVE


def cmd_digraph(args: argparse.Namespace) -> int:
    h = _hodge(args.hodge, args.weight)
    g = relation_digraph(h, node_cap=args.max_nodes)
    text = render_dot(g, args.covers_only) if args.format == "dot" else render_json(g, args.covers_only)
    _write(args.output, text)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    h, f = _load_diamond(args.diamond)
    w = realize_diamond(h, f)
    report = check_pmhs(w)
    recovered = diamond_of(w.weight_filtration(), w.hodge, h.weight)
    out = sys.stderr if args.output in (None, "-") else sys.stdout
    _write(args.output, dumps(witness_to_doc(w)))
    print(f"witness: dimension {w.dimension}, weight {w.weight}, {diamond_label(h, f)}", file=out)
    print(report.summary(), file=out)
    same = recovered == f
    print(f"{'PASS' if same else 'FAIL'} recovered diamond equals input", file=out)
    if args.probe:
        for r in orbit_probe(w, [parse_complex(z) for z in args.probe.split(",")]):
            verdict = "member" if r.member else "not member"
            print(f"probe z={format_scalar(r.z)}: exp(zN)F {verdict} of D", file=out)
    return EXIT_OK if report.passed and same else EXIT_NEGATIVE


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        w = witness_from_doc(json.loads(_read(args.witness)))
    except (DocumentError, json.JSONDecodeError) as exc:
        raise CliError("E_PARSE", f"{args.witness}: {exc}") from None
    report = check_pmhs(w)
    print(report.summary())
    if report.passed:
        f = diamond_of(w.weight_filtration(), w.hodge, w.weight)
        print(f"diamond: {entry_summary(f)}")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_examples(args: argparse.Namespace) -> int:
    selected = [s for s in SCENARIOS if not args.only or s.name in args.only]
    unknown = set(args.only or ()) - {s.name for s in SCENARIOS}
    if unknown:
        raise CliError("E_SCENARIO", f"unknown scenarios {sorted(unknown)}")
    if args.list:
        for s in selected:
            print(f"{s.name:<18} {s.filename:<22} {s.summary}")
        return EXIT_OK
    status = EXIT_OK
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    check = args.check or not out_dir
    golden_dir = Path(args.golden_dir) if args.golden_dir else None
    for s in selected:
        text = s.build()
        if out_dir:
            (out_dir / s.filename).write_bytes(text.encode("utf-8"))
        if check:
            golden = golden_text(s.filename, golden_dir)
            if golden is None:
                print(f"MISSING {s.name} ({s.filename})")
                status = EXIT_NEGATIVE
            elif golden != text:
                print(f"DIFF    {s.name} ({s.filename})")
                status = EXIT_NEGATIVE
            else:
                print(f"ok      {s.name} ({s.filename})")
        else:
            print(f"wrote   {s.name} ({s.filename})")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodgedeg", description="Hodge diamonds, polarized relations and PMHS witnesses.")
    sub = parser.add_subparsers(dest="command", required=True)

    def domain(p: argparse.ArgumentParser) -> None:
        p.add_argument("--hodge", required=True, help="h^{n,0},...,h^{0,n}, e.g. 2,4,2")
        p.add_argument("--weight", type=int, help="weight n (default: number of Hodge numbers minus one)")

    p = sub.add_parser("enumerate", help="list every Hodge diamond of a period domain")
    domain(p)
    p.add_argument("-o", "--output", help="JSON array of diamond documents (default: stdout)")
    p.add_argument("--split-dir", help="also write one document per diamond into this directory")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("relate", help="decide the polarized relation A ⪯ B")
    p.add_argument("a", metavar="A", help="diamond document, or FILE#INDEX into an array")
    p.add_argument("b", metavar="B")
    p.add_argument("--witness", action="store_true", help="print the subdomain decomposition")
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("digraph", help="relation digraph as DOT or JSON")
    domain(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--covers-only", action="store_true", help="keep only edges without an intermediate node")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("realize", help="build and verify an R-split PMHS with the given diamond")
    p.add_argument("diamond", help="diamond document, or FILE#INDEX")
    p.add_argument("-o", "--output", help="witness document (default: stdout)")
    p.add_argument("--probe", help="comma-separated z values for exp(zN)F membership, e.g. i,2i,1+i")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="check a witness document against the PMHS axioms")
    p.add_argument("witness")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="regenerate the reference scenarios and compare with goldens")
    p.add_argument("--out", help="write scenario outputs into this directory")
    p.add_argument("--check", action="store_true", help="compare with goldens (default when --out is absent)")
    p.add_argument("--golden-dir", help="compare against this directory instead of the packaged goldens")
    p.add_argument("--only", nargs="+", metavar="NAME")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_examples)
    return parser


_ERROR_CODES = (
    (InvalidHodgeNumbers, "E_HODGE"),
    (WeightMismatch, "E_DOMAIN"),
    (InvalidDiamond, "E_DIAMOND"),
    (NodeCapExceeded, "E_NODE_CAP"),
    (DocumentError, "E_PARSE"),
)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        code, message = exc.code, str(exc)
    except ValueError as exc:
        code = next((c for t, c in _ERROR_CODES if isinstance(exc, t)), "E_INPUT")
        message = str(exc)
    print(f"hodgedeg: error[{code}]: {message}", file=sys.stderr)
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
