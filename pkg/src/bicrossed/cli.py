"""Command-line interface: deterministic JSON reports over one config.

Commands: verify, simples, character, fuse, dual, indicators,
fusion-table, cqg-check.  Exit codes: 0 success, 1 verification failure
(the report carries witnesses), 2 invalid config or usage, 3 internal
inconsistency.  JSON is the machine output; text rendering is a view of
the same payload.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certs import dimension_audit, direct_sum_check
from .cocycles import is_unitary, verify_cocycles
from .comodules import SimpleIndex
from .config import Build, build_config, load_config_file
from .cyclotomic import rational
from .errors import (
    BallTooSmallError,
    ConfigError,
    InternalInconsistencyError,
    VerificationFailure,
)
from .fusion import FusionRing
from .hopf import HElem, verify_hopf, verify_star
from .matched_pair import verify_matched_pair
from .presets import resolve_preset

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_CONFIG = 2
EXIT_INTERNAL = 3


def _report(build: Build, command: str, status: str, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": build.name,
        "config_hash": build.config_hash,
        "level": build.level,
        "status": status,
        "payload": payload,
    }


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(_render_text(report))


def _render_text(report: dict) -> str:
    lines = [
        f"command:  {report['command']}",
        f"config:   {report['config']} (hash {report['config_hash']}, level {report['level']})",
        f"status:   {report['status']}",
    ]
    payload = report["payload"]
    lines.extend(_render_value(payload, indent=0))
    return "\n".join(lines) + "\n"


def _render_value(value, indent: int) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(value, dict):
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)):
                out.append(f"{pad}{k}:")
                out.extend(_render_value(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {v}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                out.append(f"{pad}-")
                out.extend(_render_value(v, indent + 1))
            else:
                out.append(f"{pad}- {v}")
    else:
        out.append(f"{pad}{value}")
    return out


def _character_terms(build: Build, elem: HElem) -> list[dict]:
    F = build.hopf.F
    terms = sorted(elem.terms.items(), key=lambda kv: (F.order_key(kv[0][1]), kv[0][0]))
    return [
        {"g": g, "f": F.label(f), "coeff": v.literal()}
        for (g, f), v in terms
    ]


def _simple_payload(build: Build, ring: FusionRing, d) -> dict:
    return {
        "id": d.uid,
        "orbit_rep": build.hopf.F.label(d.orbit.representative),
        "orbit_size": d.orbit.size,
        "stabilizer_order": len(d.orbit.stabilizer),
        "dim_v": d.dim_v,
        "dim_total": d.dim_total,
    }


# --------------------------------------------------------------------------
# Command implementations: each returns (status, payload, exit_code)
# --------------------------------------------------------------------------


def cmd_verify(build: Build, radius: int) -> tuple[str, dict, int]:
    reports = [
        verify_matched_pair(build.ctx, radius),
        verify_cocycles(build.ctx, build.sigma, build.tau, radius),
        verify_hopf(build.hopf, radius),
    ]
    ok = all(r.ok for r in reports)
    payload = {"radius": radius, "reports": [r.to_payload() for r in reports]}
    return ("pass" if ok else "fail"), payload, (EXIT_OK if ok else EXIT_VERIFICATION)


def _require_verified(build: Build, radius: int) -> None:
    mp = verify_matched_pair(build.ctx, radius)
    if not mp.ok:
        raise VerificationFailure("matched-pair laws fail", mp.to_payload())
    cc = verify_cocycles(build.ctx, build.sigma, build.tau, radius)
    if not cc.ok:
        raise VerificationFailure("cocycle laws fail", cc.to_payload())


def cmd_simples(build: Build, radius: int) -> tuple[str, dict, int]:
    _require_verified(build, radius)
    index = SimpleIndex(build.hopf)
    ring = FusionRing(build.hopf, index)
    simples = index.enumerate(radius)
    audit = dimension_audit(build.hopf, index, radius)
    cert = direct_sum_check(build.hopf, index, radius)
    payload = {
        "radius": radius,
        "count": len(simples),
        "simples": [_simple_payload(build, ring, d) for d in simples],
        "dimension_audit": audit,
        "direct_sum": cert.to_payload(),
    }
    ok = audit["ok"] and cert.ok
    return ("pass" if ok else "fail"), payload, (EXIT_OK if ok else EXIT_VERIFICATION)


def cmd_character(build: Build, f_label: str, chi_index: int, radius: int) -> tuple[str, dict, int]:
    _require_verified(build, radius)
    index = SimpleIndex(build.hopf)
    f = build.hopf.F.parse_label(f_label)
    simples = index.simples_for_f(f)
    if not 0 <= chi_index < len(simples):
        raise ConfigError(
            f"character index {chi_index} out of range; the orbit of {f_label} "
            f"has {len(simples)} simples"
        )
    d = simples[chi_index]
    chi = index.character(d)
    counit = build.hopf.counit(chi)
    payload = {
        "id": d.uid,
        "dim_total": d.dim_total,
        "counit": counit.literal(),
        "terms": _character_terms(build, chi),
    }
    return "pass", payload, EXIT_OK


def cmd_fuse(build: Build, id1: str, id2: str, radius: int) -> tuple[str, dict, int]:
    _require_verified(build, radius)
    index = SimpleIndex(build.hopf)
    ring = FusionRing(build.hopf, index)
    d1, d2 = index.find(id1), index.find(id2)
    row = ring.decompose_product(d1, d2, radius=None)
    payload = {
        "row": row.to_payload(),
        "dimension_product": d1.dim_total * d2.dim_total,
    }
    return "pass", payload, EXIT_OK


def cmd_dual(build: Build, uid: str, radius: int) -> tuple[str, dict, int]:
    _require_verified(build, radius)
    index = SimpleIndex(build.hopf)
    ring = FusionRing(build.hopf, index)
    d = index.find(uid)
    dual = ring.dual_of(d)
    payload = {"id": d.uid, "dual": dual.uid, "self_dual": dual.uid == d.uid}
    return "pass", payload, EXIT_OK


def cmd_indicators(build: Build, radius: int) -> tuple[str, dict, int]:
    _require_verified(build, radius)
    index = SimpleIndex(build.hopf)
    ring = FusionRing(build.hopf, index)
    items = []
    for d in index.enumerate(radius):
        items.append(
            {
                "id": d.uid,
                "nu2": ring.fs_indicator(d),
                "self_dual": ring.is_self_dual(d),
                "dual": ring.dual_of(d).uid,
            }
        )
    payload = {"radius": radius, "items": items}
    return "pass", payload, EXIT_OK


def cmd_fusion_table(build: Build, radius: int) -> tuple[str, dict, int]:
    _require_verified(build, radius)
    index = SimpleIndex(build.hopf)
    ring = FusionRing(build.hopf, index)
    table = ring.fusion_table(radius)
    based = ring.verify_based_ring(table)
    payload = {
        "radius": radius,
        "simples": [_simple_payload(build, ring, d) for d in table.simples],
        "rows": [r.to_payload() for r in table.rows],
        "duals": table.duals,
        "indicators": table.indicators,
        "noncommutative_pairs": table.noncommutative_pairs,
        "based_ring": based,
    }
    ok = based["ok"]
    return ("pass" if ok else "fail"), payload, (EXIT_OK if ok else EXIT_VERIFICATION)


def cmd_cqg_check(build: Build, radius: int) -> tuple[str, dict, int]:
    # Unitarity is the gate: report its witness before any law sweep, so
    # non-modulus-one data is rejected with the offending tuple.
    ok, witness = is_unitary(build.sigma, build.tau, build.ctx, radius)
    if not ok:
        payload = {"unitary": False, "witness": witness}
        return "fail", payload, EXIT_VERIFICATION
    _require_verified(build, radius)
    star = verify_star(build.hopf, radius)
    unit = build.hopf.unit()
    haar_unit = build.hopf.integral(unit)
    gram_expected = rational(1) / rational(build.hopf.G.order)
    payload = {
        "unitary": True,
        "radius": radius,
        "star_checks": star.to_payload(),
        "haar_unit": haar_unit.literal(),
        "gram_diagonal_expected": gram_expected.literal(),
        "gram_certified": "exact (rational coefficients)",
    }
    ok = star.ok and haar_unit.is_one()
    return ("pass" if ok else "fail"), payload, (EXIT_OK if ok else EXIT_VERIFICATION)


# --------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps subcommand-level flags from clobbering values parsed
    # at the top level when they are omitted after the subcommand.
    p.add_argument("--radius", type=int, default=argparse.SUPPRESS, help="ball radius override")
    p.add_argument(
        "--format", choices=("json", "text"), default=argparse.SUPPRESS, dest="format"
    )


_COMMANDS = (
    "verify",
    "simples",
    "character",
    "fuse",
    "dual",
    "indicators",
    "fusion-table",
    "cqg-check",
)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicrossed",
        description="Exact bicrossed-product Hopf algebras: construction, "
        "verification, simple comodules, fusion rings.",
    )
    parser.add_argument("--preset", help="named preset (e.g. h_z_z2, h_z_z2n:2, drinfeld:S3)")
    parser.add_argument(
        "--config", help="path to a JSON config file (may also be given positionally)"
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--radius", type=int, default=None, help="ball radius override")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("verify", help="matched pair + cocycles + Hopf axioms"))
    _add_common(sub.add_parser("simples", help="enumerate simple comodules in the ball"))
    p = sub.add_parser("character", help="irreducible character of one simple")
    p.add_argument("f", help="F element label (e.g. 3, -1, (1,0,2), or a finite index)")
    p.add_argument("chi_index", type=int, help="index into the stabilizer character table")
    _add_common(p)
    p = sub.add_parser("fuse", help="decompose a product of two simples")
    p.add_argument("id1", help="simple id '<f>:<index>'")
    p.add_argument("id2", help="simple id '<f>:<index>'")
    _add_common(p)
    p = sub.add_parser("dual", help="dual of a simple")
    p.add_argument("id", help="simple id '<f>:<index>'")
    _add_common(p)
    _add_common(sub.add_parser("indicators", help="Frobenius-Schur indicators in the ball"))
    _add_common(sub.add_parser("fusion-table", help="all pairwise products in the ball"))
    _add_common(sub.add_parser("cqg-check", help="compact-quantum-group certification"))
    return parser


def _shield_negative_ids(argv):
    """Insert '--' before the first id-like token starting with '-'
    (orbit representatives of free-abelian F are canonically negative),
    so argparse reads it as a positional.  Flags must precede such ids."""
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # leading positional config path, per the CLI contract
    if argv and not argv[0].startswith("-") and argv[0] not in _COMMANDS:
        argv = ["--config", argv[0]] + argv[1:]
    if "--" in argv:
        return argv
    for i, tok in enumerate(argv):
        if len(tok) > 1 and tok[0] == "-" and (tok[1].isdigit() or tok[1] == "("):
            return argv[:i] + ["--"] + argv[i:]
    return argv


def run(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(_shield_negative_ids(argv))
    fmt = args.format
    try:
        if bool(args.preset) == bool(args.config):
            raise ConfigError("choose exactly one of --preset NAME or --config PATH")
        cfg = resolve_preset(args.preset) if args.preset else load_config_file(args.config)
        build = build_config(cfg)
        radius = args.radius if args.radius is not None else build.radius
        if args.command == "verify":
            status, payload, code = cmd_verify(build, radius)
        elif args.command == "simples":
            status, payload, code = cmd_simples(build, radius)
        elif args.command == "character":
            status, payload, code = cmd_character(build, args.f, args.chi_index, radius)
        elif args.command == "fuse":
            status, payload, code = cmd_fuse(build, args.id1, args.id2, radius)
        elif args.command == "dual":
            status, payload, code = cmd_dual(build, args.id, radius)
        elif args.command == "indicators":
            status, payload, code = cmd_indicators(build, radius)
        elif args.command == "fusion-table":
            status, payload, code = cmd_fusion_table(build, radius)
        elif args.command == "cqg-check":
            status, payload, code = cmd_cqg_check(build, radius)
        else:  # pragma: no cover - argparse guards this
            raise ConfigError(f"unknown command {args.command!r}")
        _emit(_report(build, args.command, status, payload), fmt)
        return code
    except (ConfigError, BallTooSmallError) as exc:
        _emit_error(args, fmt, "invalid-config", str(exc), getattr(exc, "representative", None))
        return EXIT_CONFIG
    except VerificationFailure as exc:
        _emit_error(args, fmt, "verification-failure", str(exc), exc.witness)
        return EXIT_VERIFICATION
    except InternalInconsistencyError as exc:
        _emit_error(args, fmt, "internal-inconsistency", str(exc), None)
        return EXIT_INTERNAL


def _emit_error(args, fmt: str, status: str, message: str, witness) -> None:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": getattr(args, "command", None),
        "status": status,
        "error": message,
    }
    if witness is not None:
        report["witness"] = witness
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(f"status: {status}\nerror:  {message}\nwitness: {witness}\n")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
