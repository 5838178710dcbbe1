"""Command line interface.

Commands::

    supdeform validate --config PATH
    supdeform axioms   --config PATH
    supdeform chain    --config PATH [--weight W ...]
    supdeform betti    --config PATH [--weight W ...]
    supdeform ffamily  (--closed | --nonclosed) [--grid N]
    supdeform schouten --config PATH

Exit codes: 0 success, 1 axiom or internal-consistency failure,
2 configuration error.  ``--format json`` emits a single JSON object whose
serialization is stable (sorted keys), so reports round-trip byte-identically.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms as axioms_mod
from . import homology
from .brackets import deformed_schouten, solve_g0_doubleprime, solve_g0_prime
from .chains import ChainComplexSystem
from .config import ConfigError, RunConfig, load_config
from .exterior import schouten as plain_schouten
from .liealg import OneForm


def _emit(payload: dict, fmt: str, text_renderer):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_renderer())


def _resolved_format(config: RunConfig, args) -> str:
    return args.format if args.format else config.output_format


def _weights(config: RunConfig, args) -> list[int]:
    if getattr(args, "weight", None):
        return list(args.weight)
    if config.weights:
        return config.weights
    raise ConfigError("no weights given: set [run] weights or pass --weight")


def cmd_validate(config: RunConfig, args) -> int:
    g0p = solve_g0_prime(config.algebra, config.phi)
    g0pp = solve_g0_doubleprime(config.algebra, config.phi)
    payload = {
        "command": "validate",
        "algebra": repr(config.algebra),
        "jacobi": "ok",
        "phi_closed": config.deformation.phi_closed,
        "deformation": config.deformation.describe(),
        "g0prime_dim": g0p.dim,
        "g0prime_bracket_closed": g0p.bracket_closed,
        "g0doubleprime_dim": g0pp.dim,
    }

    def text():
        lines = [
            f"algebra: {payload['algebra']}",
            "jacobi: ok",
            f"phi closed: {payload['phi_closed']}",
            f"deformation: {payload['deformation']}",
            f"dim g0' = {g0p.dim} (bracket closed: {g0p.bracket_closed}), dim g0'' = {g0pp.dim}",
        ]
        return "\n".join(lines)

    _emit(payload, _resolved_format(config, args), text)
    return 0


def _axiom_systems(config: RunConfig):
    systems = [axioms_mod.form_system(config.deformation)]
    if config.extension != "none":
        solver = solve_g0_prime if config.extension == "g0prime" else solve_g0_doubleprime
        vectors = solver(config.algebra, config.phi).vectors
        systems.append(axioms_mod.extension_system(config.deformation, vectors))
    return systems


def cmd_axioms(config: RunConfig, args) -> int:
    reports = []
    for system in _axiom_systems(config):
        reports.append(axioms_mod.check_supersymmetry(system))
        reports.append(axioms_mod.check_superjacobi(system))
    payload = {"command": "axioms", "reports": [r.to_json() for r in reports]}
    _emit(payload, _resolved_format(config, args), lambda: "\n".join(str(r) for r in reports))
    return 0 if all(r.passed for r in reports) else 1


def cmd_chain(config: RunConfig, args) -> int:
    system = ChainComplexSystem(config.deformation, config.extension)
    blocks = []
    for w in _weights(config, args):
        bound = system.max_length(w)
        if config.max_degree is not None:
            bound = min(bound, config.max_degree)
        per_degree = []
        for m in range(1, bound + 1):
            M = homology.boundary_matrix(system, m, w)
            per_degree.append(
                {
                    "m": m,
                    "basis": [system.word_label(word) for word in M.cols],
                    "boundary": [[str(e) for e in row] for row in M.entries],
                }
            )
        blocks.append({"weight": w, "chain": per_degree})
    payload = {"command": "chain", "weights": blocks}

    def text():
        lines = []
        for block in blocks:
            lines.append(f"weight {block['weight']}")
            for entry in block["chain"]:
                lines.append(f"  C_{entry['m']}: dim {len(entry['basis'])}  basis {', '.join(entry['basis']) or '(none)'}")
                for row in entry["boundary"]:
                    lines.append("    [" + ", ".join(row) + "]")
        return "\n".join(lines)

    _emit(payload, _resolved_format(config, args), text)
    return 0


def cmd_betti(config: RunConfig, args) -> int:
    system = ChainComplexSystem(config.deformation, config.extension)
    try:
        reports = [homology.betti_piecewise(system, w, config.max_degree) for w in _weights(config, args)]
    except RuntimeError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    payload = {"command": "betti", "reports": [r.to_json() for r in reports]}
    _emit(payload, _resolved_format(config, args), lambda: "\n\n".join(r.to_text() for r in reports))
    return 0


def cmd_ffamily(args) -> int:
    solver = axioms_mod.solve_F_closed if args.closed else axioms_mod.solve_F_nonclosed
    space = solver(args.grid)
    payload = {"command": "ffamily", "space": space.to_json()}

    def text():
        lines = [
            f"constraints: {space.constraints}, grid {space.grid}",
            f"solution dimension: {space.dimension}",
        ]
        for idx, table in enumerate(space.basis):
            entries = ", ".join(f"F({a},{b})={v}" for (a, b), v in sorted(table.items()) if a <= b)
            lines.append(f"basis[{idx}]: {entries}")
        return "\n".join(lines)

    _emit(payload, args.format or "text", text)
    return 0


def cmd_schouten(config: RunConfig, args) -> int:
    algebra, phi = config.algebra, config.phi
    system = axioms_mod.multivector_system(algebra, phi)
    reports = [axioms_mod.check_supersymmetry(system), axioms_mod.check_superjacobi(system)]
    # structural reductions of the deformed bracket
    degree_one_ok = True
    zero_phi_ok = True
    zero_form = OneForm.zero(algebra.n)
    for x in system.items:
        for y in system.items:
            if x.superdegree == 0 and y.superdegree == 0:
                lie = plain_schouten(algebra, x.element, y.element)
                if deformed_schouten(algebra, x.element, y.element, phi) != lie:
                    degree_one_ok = False
            if deformed_schouten(algebra, x.element, y.element, zero_form) != plain_schouten(
                algebra, x.element, y.element
            ):
                zero_phi_ok = False
    cocycle = config.deformation.phi_closed
    payload = {
        "command": "schouten",
        "phi_is_cocycle": cocycle,
        "degree_one_reduces_to_lie": degree_one_ok,
        "zero_phi_reduces_to_schouten": zero_phi_ok,
        "reports": [r.to_json() for r in reports],
    }

    def text():
        lines = [
            f"phi is a 1-cocycle: {cocycle}",
            f"degree-1 case reduces to the Lie bracket: {degree_one_ok}",
            f"phi = 0 reduces to the plain Schouten bracket: {zero_phi_ok}",
        ]
        lines.extend(str(r) for r in reports)
        return "\n".join(lines)

    _emit(payload, _resolved_format(config, args), text)
    ok = all(r.passed for r in reports) and degree_one_ok and zero_phi_ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supdeform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_config(p):
        p.add_argument("--config", required=True, help="path to a run configuration file")
        p.add_argument("--format", choices=("text", "json"), default=None)
        return p

    with_config(sub.add_parser("validate", help="parse the config and report the setup"))
    with_config(sub.add_parser("axioms", help="check super symmetry and super Jacobi"))
    p_chain = with_config(sub.add_parser("chain", help="dump chain bases and boundary matrices"))
    p_chain.add_argument("--weight", type=int, action="append")
    p_betti = with_config(sub.add_parser("betti", help="piecewise Betti numbers per weight"))
    p_betti.add_argument("--weight", type=int, action="append")
    p_ff = sub.add_parser("ffamily", help="solve the admissibility conditions on F")
    group = p_ff.add_mutually_exclusive_group(required=True)
    group.add_argument("--closed", action="store_true")
    group.add_argument("--nonclosed", action="store_true")
    p_ff.add_argument("--grid", type=int, default=8)
    p_ff.add_argument("--format", choices=("text", "json"), default=None)
    with_config(sub.add_parser("schouten", help="deformed-Schouten axiom run"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "ffamily":
            return cmd_ffamily(args)
        config = load_config(args.config)
        if args.command == "validate":
            return cmd_validate(config, args)
        if args.command == "axioms":
            return cmd_axioms(config, args)
        if args.command == "chain":
            return cmd_chain(config, args)
        if args.command == "betti":
            return cmd_betti(config, args)
        if args.command == "schouten":
            return cmd_schouten(config, args)
        raise AssertionError(f"unhandled command {args.command}")
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read configuration: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
