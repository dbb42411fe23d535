"""Command-line front end.

Exit codes: 0 success (or decomposition holds), 1 parse/config error or a
failed self-check, 2 size cap or search budget exceeded, 3 decomposition fails
and a non-diagonal automorphism was found.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from . import report
from .catalog import catalog_rows
from .errors import RingAutError, SearchBudgetExceeded, SizeCapExceeded
from .homs import DEFAULT_BUDGET, enumerate_automorphisms, enumerate_homs
from .ring import construct_ring
from .rigidity import verify_decomposition
from .spec import DEFAULT_MAX_SIZE, Product, RingSpec, parse_spec

EXIT_OK, EXIT_ERROR, EXIT_BUDGET, EXIT_WITNESS = 0, 1, 2, 3

ARITY = {"classify": (1, 1), "aut": (1, 1), "homs": (2, 2), "verify": (1, None), "catalog": (0, 0)}


class UsageError(RingAutError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; that code is reserved here
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliCommand:
    verb: str
    ring_specs: List[RingSpec] = field(default_factory=list)
    format: str = "text"
    max_size: int = DEFAULT_MAX_SIZE
    budget: int = DEFAULT_BUDGET
    max_order: int = 32
    seed: int = 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ringaut",
                description="Multiplicative monoids of finite commutative rings and their automorphisms.")
    p.add_argument("verb", choices=sorted(ARITY))
    p.add_argument("specs", nargs="*", metavar="RING",
                   help='ring specification, e.g. "Z/4" or "Z/2[x]/(x^2+x+1)"')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE, help="ring size cap")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    p.add_argument("--max-order", type=int, default=32, help="largest n for the catalog")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    return p


def parse_command(argv) -> CliCommand:
    ns = build_parser().parse_args(argv)
    lo, hi = ARITY[ns.verb]
    if len(ns.specs) < lo or (hi is not None and len(ns.specs) > hi):
        want = str(lo) if lo == hi else f"at least {lo}"
        raise UsageError(f"{ns.verb} takes {want} ring specification(s), got {len(ns.specs)}")
    for name in ("max_size", "budget", "max_order"):
        if getattr(ns, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    specs = [parse_spec(s, max_size=ns.max_size) for s in ns.specs]
    if ns.verb == "verify" and len(specs) == 1:
        # a single product spec is split into its factors
        if not isinstance(specs[0], Product):
            raise UsageError("verify needs at least two factor rings")
        specs = list(specs[0].factors)
    return CliCommand(ns.verb, specs, ns.format, ns.max_size, ns.budget, ns.max_order, ns.seed)


def run(cmd: CliCommand):
    """Execute a parsed command; returns ``(exit_code, output_text)``."""
    json_mode = cmd.format == "json"
    code = EXIT_OK
    if cmd.verb == "classify":
        R = construct_ring(cmd.ring_specs[0], max_size=cmd.max_size)
        out = report.to_json(report.classify_data(R)) if json_mode else report.classify_text(R)
    elif cmd.verb == "homs":
        R, S = (construct_ring(s, max_size=cmd.max_size) for s in cmd.ring_specs)
        homs = enumerate_homs(R.monoid, S.monoid, budget=cmd.budget)
        out = (report.to_json(report.homs_data(R, S, homs)) if json_mode
               else report.homs_text(R, S, homs))
    elif cmd.verb == "aut":
        R = construct_ring(cmd.ring_specs[0], max_size=cmd.max_size)
        auts = enumerate_automorphisms(R.monoid, budget=cmd.budget)
        out = report.to_json(report.aut_data(R, auts)) if json_mode else report.aut_text(R, auts)
    elif cmd.verb == "verify":
        rep = verify_decomposition(cmd.ring_specs, max_size=cmd.max_size, budget=cmd.budget,
                                   seed=cmd.seed)
        out = report.to_json(report.rigidity_data(rep)) if json_mode else report.rigidity_text(rep)
        if rep.violations:
            code = EXIT_ERROR
        elif not rep.decomposition_holds and rep.nondiagonal_witnesses:
            code = EXIT_WITNESS
    else:
        rows = catalog_rows(cmd.max_order, max_size=cmd.max_size)
        out = report.to_json(report.catalog_data(rows)) if json_mode else report.catalog_text(rows)
        if not all(r["agree"] for r in rows):
            code = EXIT_ERROR
    return code, out


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        code, out = run(parse_command(sys.argv[1:] if argv is None else argv))
    except (SizeCapExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_BUDGET
    except RingAutError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
