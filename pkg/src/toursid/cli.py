"""Command-line surface binding the library into reproducible runs.

Subcommands: construct, count, check, quasi. Reports are canonical JSON
(identical inputs and seeds give byte-identical output); exact rationals are
emitted as {"num": ..., "den": ...} string pairs and every floating-point
field is suffixed "_approx". Exit codes: 0 = holds / success, 2 = violated,
1 = error. Randomized runs require an explicit --seed; the work budget can be
overridden with the TOURSID_BUDGET environment variable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import constructions as cons
from .counting import (
    BudgetExceededError,
    PinnedPattern,
    count_homomorphisms,
    count_labeled,
    count_labeled_pinned,
)
from .digraph import Digraph, Tournament
from .formats import FormatError, dgf_dumps, dgf_loads, trn_loads
from .properties import (
    PropertyReport,
    check_anti_exhaustive,
    check_anti_on_family,
    check_strong_anti,
    impartiality_report,
    quasirandom_epsilon,
    sidorenko_scan_exhaustive,
    two_block_tournament,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2


@dataclass(frozen=True)
class RunConfig:
    """A validated job description; identical configs give byte-identical
    reports. Round-trips exactly through its JSON form."""

    command: str
    options: dict
    seed: Optional[int]
    out: Optional[str]
    fmt: str

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        skip = {"func", "command", "seed", "out", "fmt"}
        options = {
            k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None
        }
        return RunConfig(
            command=args.command,
            options=options,
            seed=getattr(args, "seed", None),
            out=getattr(args, "out", None),
            fmt=getattr(args, "fmt", "json"),
        )

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "options": self.options,
            "seed": self.seed,
            "out": self.out,
            "format": self.fmt,
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def from_json(text: str) -> "RunConfig":
        doc = json.loads(text)
        return RunConfig(
            command=doc["command"],
            options=doc["options"],
            seed=doc["seed"],
            out=doc["out"],
            fmt=doc["format"],
        )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _rational_str(doc) -> str:
    if doc is None:
        return "n/a"
    return f"{doc['num']}/{doc['den']}"


def _render_report_text(doc: dict) -> str:
    lines = [
        f"property: {doc['property']}",
        f"verdict: {doc['verdict']}",
        f"extremal ratio: {_rational_str(doc['extremal_ratio'])}"
        + (
            f" (~{doc['extremal_ratio_approx']:.6g})"
            if doc["extremal_ratio_approx"] is not None
            else ""
        ),
    ]
    for row in doc["curve"]:
        key = "max_ratio" if "max_ratio" in row else "min_ratio"
        label = row.get("n", row.get("value"))
        if key in row:
            flag = " VIOLATED" if row.get("violated") else ""
            lines.append(f"  n={label}: {key}={_rational_str(row[key])}{flag}")
    if doc["witness_trn"]:
        n = doc["witness_trn"].splitlines()[0]
        lines.append(f"witness: {n}-vertex tournament (TRN/1 embedded in JSON report)")
    return "\n".join(lines) + "\n"


def _render_count_text(doc: dict) -> str:
    return (
        f"mode: {doc['mode']}\n"
        f"value: {doc['value']}\n"
        f"bound: {_rational_str(doc['bound'])}\n"
        f"ratio: {_rational_str(doc['ratio'])} (~{doc['ratio_approx']:.6g})\n"
    )


def _render_quasi_text(doc: dict) -> str:
    return (
        f"host: {doc['host']} (n={doc['n']})\n"
        f"mode: {doc['mode']['kind']}\n"
        f"epsilon: {_rational_str(doc['epsilon'])} (~{doc['epsilon_approx']:.6g})\n"
    )


def _load_pattern(path: str) -> Digraph:
    return dgf_loads(Path(path).read_text())


def _load_host(path: str) -> Tournament:
    text = Path(path).read_text()
    try:
        return trn_loads(text)
    except FormatError:
        d = dgf_loads(text)
        return Tournament.from_rows(d.out_rows())


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(piece) for piece in spec.split(",")]


def _parse_pins(spec: str) -> dict[int, int]:
    pins = {}
    for piece in spec.split(","):
        k, v = piece.split(":")
        pins[int(k)] = int(v)
    return pins


_FAMILIES = {
    "directed-path": (cons.directed_path, 1),
    "directed-cycle": (cons.directed_cycle, 1),
    "transitive-tournament": (cons.transitive_tournament, 1),
    "transitive-minus-edge": (cons.transitive_minus_edge, 3),
    "star": (cons.star, 2),
    "iterated-balanced-star": (cons.iterated_balanced_star, 1),
    "subset-bipartite": (lambda k: cons.subset_bipartite(k)[0], 1),
    "d-family": (cons.d_family, 1),
    "cycle-with-chord": (cons.cycle_with_chord, 1),
    "unique-hom-digraph": (cons.unique_hom_digraph, 1),
    "subdivided-star": (cons.subdivided_star_orientation, 1),
    "impartial-four-tree": (cons.impartial_four_tree, 0),
    "all-orientations-union": (None, 0),  # needs --graph
    "tree-orientation": (None, 0),  # needs --graph
}


def _cmd_construct(args) -> int:
    family = args.family
    if family not in _FAMILIES:
        print(f"error: unknown family {family!r}", file=sys.stderr)
        return EXIT_ERROR
    builder, arity = _FAMILIES[family]
    if builder is None:
        if not args.graph:
            print(f"error: {family} needs --graph FILE", file=sys.stderr)
            return EXIT_ERROR
        base = _load_pattern(args.graph).underlying()
        if family == "all-orientations-union":
            d = cons.all_orientations_union(base)
        else:
            d = cons.tree_anti_orientation(base)
    else:
        if len(args.params) != arity:
            print(
                f"error: {family} takes {arity} integer parameter(s)",
                file=sys.stderr,
            )
            return EXIT_ERROR
        d = builder(*args.params)
    cfg = args.run_config
    if d.meta and d.meta.get("eligible") is False:
        print(
            "warning: j-i == 2; this deletion is outside the over-representation guarantee",
            file=sys.stderr,
        )
    header = None
    if d.meta:
        params = d.meta.get("params", {})
        rendered = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
        header = f"constructed: {d.meta['family']} {rendered}".rstrip()
    _emit(dgf_dumps(d, header=header), cfg.out)
    return EXIT_OK


def _cmd_count(args) -> int:
    cfg = args.run_config
    pattern = _load_pattern(args.pattern)
    host = _load_host(args.host)
    if args.pins:
        pins = _parse_pins(args.pins)
        pat = PinnedPattern(pattern, tuple(pins))
        res = count_labeled_pinned(pat, host, pins)
        doc = res.to_json_dict()
        doc["mode"] = "labeled-pinned"
        doc["pins"] = {str(k): v for k, v in sorted(pins.items())}
    elif args.mode == "homs":
        value = count_homomorphisms(pattern, host)
        bound = Fraction(host.n**pattern.n, 1 << pattern.edge_count)
        ratio = Fraction(value) / bound
        doc = {
            "mode": "homs",
            "value": str(value),
            "bound": {"num": str(bound.numerator), "den": str(bound.denominator)},
            "ratio": {"num": str(ratio.numerator), "den": str(ratio.denominator)},
            "ratio_approx": float(ratio),
        }
    else:
        res = count_labeled(pattern, host)
        doc = res.to_json_dict()
        doc["mode"] = "labeled"
    if cfg.fmt == "text":
        _emit(_render_count_text(doc), cfg.out)
    else:
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", cfg.out)
    return EXIT_OK


def _report_exit(report: PropertyReport, out: str | None, fmt: str = "json") -> int:
    if fmt == "text":
        _emit(_render_report_text(report.to_json_dict()), out)
    else:
        _emit(report.to_json(), out)
    return EXIT_VIOLATED if report.verdict == "violated" else EXIT_OK


def _cmd_check(args) -> int:
    cfg = args.run_config
    pattern = _load_pattern(args.pattern)
    if args.property == "anti":
        if args.exhaustive is not None:
            report = check_anti_exhaustive(
                pattern, args.exhaustive, dedup=args.dedup, jobs=args.jobs
            )
        elif args.family:
            values = _parse_range(args.n)
            base = _load_pattern(args.base) if args.base else None
            report = check_anti_on_family(
                pattern,
                args.family,
                values,
                base=base,
                c=Fraction(args.c) if args.c else None,
                seed=args.seed,
                samples=args.samples,
            )
        else:
            print("error: check anti needs --exhaustive or --family", file=sys.stderr)
            return EXIT_ERROR
    elif args.property == "strong-anti":
        if args.exhaustive is None or not args.pins_set:
            print(
                "error: check strong-anti needs --pins-set and --exhaustive",
                file=sys.stderr,
            )
            return EXIT_ERROR
        pinned = tuple(int(v) for v in args.pins_set.split(","))
        report = check_strong_anti(
            PinnedPattern(pattern, pinned), args.exhaustive, dedup=args.dedup
        )
    elif args.property == "impartial":
        report = impartiality_report(pattern, int(args.n))
    elif args.property == "sidorenko-scan":
        report = sidorenko_scan_exhaustive(
            pattern, args.exhaustive, dedup=args.dedup
        )
    else:
        print(f"error: unknown property {args.property!r}", file=sys.stderr)
        return EXIT_ERROR
    return _report_exit(report, cfg.out, cfg.fmt)


def _cmd_quasi(args) -> int:
    cfg = args.run_config
    if args.two_block:
        if args.seed is None:
            print("error: --two-block requires --seed", file=sys.stderr)
            return EXIT_ERROR
        c, n = Fraction(args.two_block[0]), int(args.two_block[1])
        host = two_block_tournament(n, c, args.seed)
        label = f"two-block(c={c},n={n},seed={args.seed})"
    elif args.host:
        host = _load_host(args.host)
        label = args.host
    else:
        print("error: quasi needs --host or --two-block", file=sys.stderr)
        return EXIT_ERROR
    if args.samples:
        if args.seed is None:
            print("error: sampled mode requires --seed", file=sys.stderr)
            return EXIT_ERROR
        eps = quasirandom_epsilon(
            host, "sampled", samples=args.samples, seed=args.seed
        )
        mode = {"kind": "sampled", "samples": args.samples, "seed": args.seed}
    else:
        eps = quasirandom_epsilon(host)
        mode = {"kind": "exact"}
    doc = {
        "schema": "toursid/quasi-v1",
        "host": label,
        "n": host.n,
        "mode": mode,
        "epsilon": {"num": str(eps.numerator), "den": str(eps.denominator)},
        "epsilon_approx": float(eps),
    }
    if cfg.fmt == "text":
        _emit(_render_quasi_text(doc), cfg.out)
    else:
        _emit(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n", cfg.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toursid",
        description="Exact counting and extremal search in tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cons = sub.add_parser("construct", help="emit a catalog digraph as DGF/1")
    p_cons.add_argument("family", help="family name, e.g. d-family")
    p_cons.add_argument("params", nargs="*", type=int, help="family parameters")
    p_cons.add_argument("--graph", help="DGF/1 input for graph-valued families")
    p_cons.add_argument("--out", help="output path (default stdout)")
    p_cons.set_defaults(func=_cmd_construct)

    p_count = sub.add_parser("count", help="count pattern copies in a host")
    p_count.add_argument("--pattern", required=True, help="pattern DGF/1 file")
    p_count.add_argument("--host", required=True, help="host TRN/1 (or DGF/1) file")
    p_count.add_argument("--mode", choices=("homs", "labeled"), default="labeled")
    p_count.add_argument("--pins", help="anchor as 'pv:hv,pv:hv' (labeled only)")
    p_count.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    p_count.add_argument("--out")
    p_count.set_defaults(func=_cmd_count)

    p_check = sub.add_parser("check", help="run a property verdict engine")
    p_check.add_argument(
        "property",
        choices=("anti", "strong-anti", "impartial", "sidorenko-scan"),
    )
    p_check.add_argument("--pattern", required=True)
    p_check.add_argument("--exhaustive", type=int, help="scan all hosts up to n")
    p_check.add_argument("--dedup", action="store_true", help="scan isomorphism classes")
    p_check.add_argument("--family", choices=("transitive", "blowup", "two-block"))
    p_check.add_argument("--n", help="host sizes or multipliers, e.g. 4..14 or 2,3")
    p_check.add_argument("--base", help="blowup base pattern (default: the pattern)")
    p_check.add_argument("--c", help="two-block left fraction, e.g. 1/10")
    p_check.add_argument("--seed", type=int)
    p_check.add_argument("--samples", type=int)
    p_check.add_argument("--pins-set", help="pinned pattern vertices, e.g. 0,2")
    p_check.add_argument("--jobs", "--threads", type=int, default=1, dest="jobs")
    p_check.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    p_check.add_argument("--out")
    p_check.set_defaults(func=_cmd_check)

    p_quasi = sub.add_parser("quasi", help="quasirandom-direction epsilon")
    p_quasi.add_argument("--host", help="host TRN/1 (or DGF/1) file")
    p_quasi.add_argument(
        "--two-block", nargs=2, metavar=("C", "N"), help="generate the host instead"
    )
    p_quasi.add_argument("--seed", type=int)
    p_quasi.add_argument("--samples", type=int)
    p_quasi.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")
    p_quasi.add_argument("--out")
    p_quasi.set_defaults(func=_cmd_quasi)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # the validated job description; persisting it reproduces the run exactly
    args.run_config = RunConfig.from_args(args)
    try:
        return args.func(args)
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceededError as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
