"""Command-line interface.

Commands: generate, spectrum, verify, diameter, drcheck, cayley-check.
Each prints one JSON envelope on stdout (``generate`` without ``--out``
prints the graph file itself).  Exit codes: 0 pass, 1 verification
mismatch, 2 I/O failure, 3 invalid input or budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from exthamming import __version__
from exthamming.cayley import build_phi_map, cayley_graph, connection_set_eh, verify_isomorphism
from exthamming.families import (
    Family,
    GraphSpec,
    build,
    expected_diameter,
    expected_distance_regular,
    extended_hamming,
)
from exthamming.metrics import diameter, distance_regularity_check
from exthamming.oracle import ALL_ORACLES, verify_family_spectrum
from exthamming.spectra import Spectrum, spectrum_extended_hamming_fine, spectrum_for
from exthamming.writers import FORMATS, format_graph

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with 2, reserved for I/O
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, default=0, help="alphabet size (Hamming only, default 2^n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="exthamming", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("generate", parents=[common], help="write a family instance to a file")
    p = sub.add_parser("spectrum", parents=[common], help="closed-form spectrum")
    p.add_argument("--fine", action="store_true", help="also emit the (i, t) table (EH only)")
    p = sub.add_parser("verify", parents=[common], help="check the closed form with oracles")
    p.add_argument("--oracle", default=",".join(ALL_ORACLES),
                   help="comma-separated subset of character,moments,rank")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--perturb", action="store_true",
                   help="test hook: bump the last multiplicity by one before checking")
    p = sub.add_parser("diameter", parents=[common], help="exact diameter by BFS")
    p.add_argument("--all-pairs", action="store_true")
    p = sub.add_parser("drcheck", parents=[common], help="distance-regularity test")
    p.add_argument("--sample", type=int, default=None)
    sub.add_parser("cayley-check", parents=[common], help="audit the Cayley map Phi for EH(n, 2^n)")
    return parser


def _spec(args) -> GraphSpec:
    if args.family is None or args.n is None:
        raise ValueError("--family and --n are required")
    if args.m and args.family != Family.HAMMING.value:
        raise ValueError("--m applies to the Hamming family only")
    return GraphSpec(Family(args.family), args.n, args.m)


def _perturbed(s: Spectrum) -> Spectrum:
    entries = list(s.entries)
    value, mult = entries[-1]
    entries[-1] = (value, mult + 1)
    return Spectrum(tuple(entries))


def _run(args) -> tuple[int, dict, Optional[GraphSpec]]:
    cmd = args.command
    if cmd == "cayley-check":
        if args.n is None:
            raise ValueError("--n is required")
        spec = GraphSpec(Family.EXTENDED_HAMMING, args.n)
        report = verify_isomorphism(
            extended_hamming(args.n),
            cayley_graph(args.n * args.n, connection_set_eh(args.n)),
            build_phi_map(args.n),
        )
        return (EXIT_OK if report.ok else EXIT_FAIL), report.to_json(), spec

    spec = _spec(args)
    if cmd == "generate":
        text = format_graph(build(spec), args.format)
        if args.out is None:
            sys.stdout.write(text)
            return EXIT_OK, {}, spec
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
        return EXIT_OK, {"path": args.out, "format": args.format, "lines": text.count("\n")}, spec
    if cmd == "spectrum":
        if args.fine and spec.family is not Family.EXTENDED_HAMMING:
            raise ValueError("--fine is only available for the eh family")
        payload = spectrum_for(spec).to_json()
        if args.fine:
            payload.update(spectrum_extended_hamming_fine(spec.n).to_json())
        return EXIT_OK, payload, spec
    if cmd == "verify":
        oracles = [o.strip() for o in args.oracle.split(",") if o.strip()]
        claimed = _perturbed(spectrum_for(spec)) if args.perturb else None
        report = verify_family_spectrum(spec, oracles, kmax=args.kmax, seed=args.seed,
                                        claimed=claimed)
        payload = {"spectrum": (claimed or spectrum_for(spec)).to_json()["eigenvalues"],
                   **report.to_json()}
        return (EXIT_OK if report.overall else EXIT_FAIL), payload, spec
    if cmd == "diameter":
        d = diameter(build(spec), all_pairs=args.all_pairs)
        expected = expected_diameter(spec)
        return (EXIT_OK if d == expected else EXIT_FAIL), {"diameter": d, "expected": expected}, spec
    if cmd == "drcheck":
        report = distance_regularity_check(build(spec), sample=args.sample, seed=args.seed)
        expected = expected_distance_regular(spec)
        payload = {**report.to_json(), "expected_is_dr": expected}
        return (EXIT_OK if report.is_dr == expected else EXIT_FAIL), payload, spec
    raise ValueError(f"unknown command {cmd}")


def _envelope(command: str, spec: Optional[GraphSpec], status: str, payload: dict) -> str:
    doc = {
        "tool_version": __version__,
        "command": command,
        "spec": spec.to_json() if spec is not None else None,
        "status": status,
        "payload": payload,
    }
    return json.dumps(doc)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    command = "?"
    try:
        args = parser.parse_args(argv)
        command = args.command
        code, payload, spec = _run(args)
    except (UsageError, ValueError, OverflowError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(_envelope(command, None, "error", {"message": str(exc)}))
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(_envelope(command, None, "error", {"message": str(exc)}))
        return EXIT_IO
    if command == "generate" and args.out is None:
        return code
    status = "ok" if code == EXIT_OK else "fail"
    print(_envelope(command, spec, status, payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
