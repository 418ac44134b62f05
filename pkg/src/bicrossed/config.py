"""Declarative configuration: parsing, validation, and the build pipeline.

A config names the finite group G (table or permutation generators), the
F backend (finite table or free-abelian rank), the actions (tables or
integer matrices), the two cocycles, a default ball radius and an
optional scalar level.  Scalars in cocycle tables are cyclotomic
literals: rationals, z^k@N, and sums/products of those.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import gcd

from .cocycles import SigmaCocycle, TauCocycle
from .cyclotomic import CycNum, rational, root_of_unity
from .errors import ConfigError
from .groups import FiniteF, FreeAbelianF, finite_group, permutation_group
from .hopf import BicrossedHopf
from .matched_pair import LinearAction, MatchedPairCtx, TableActions

DEFAULT_RADIUS = 4


# --------------------------------------------------------------------------
# Cyclotomic literal grammar:
#   expr   := term (('+' | '-') term)*
#   term   := atom ('*' atom)*
#   atom   := '-' atom | '(' expr ')' | zeta | rational
#   zeta   := 'z' ['^' int] '@' posint
#   rational := int ['/' posint]
# --------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ConfigError(f"expected {ch!r} at position {self.pos} in {self.text!r}")

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            raise ConfigError(f"expected an integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])


def parse_scalar(text) -> CycNum:
    """Parse a cyclotomic literal; ints and Fractions pass through."""
    if isinstance(text, CycNum):
        return text
    if isinstance(text, int):
        return rational(text)
    if not isinstance(text, str):
        raise ConfigError(f"cannot parse scalar from {type(text).__name__}")
    sc = _Scanner(text)
    value = _parse_expr(sc)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ConfigError(f"trailing input at position {sc.pos} in {text!r}")
    return value


def _parse_expr(sc: _Scanner) -> CycNum:
    value = _parse_term(sc)
    while True:
        if sc.take("+"):
            value = value + _parse_term(sc)
        elif sc.take("-"):
            value = value - _parse_term(sc)
        else:
            return value


def _parse_term(sc: _Scanner) -> CycNum:
    value = _parse_atom(sc)
    while sc.take("*"):
        value = value * _parse_atom(sc)
    return value


def _parse_atom(sc: _Scanner) -> CycNum:
    ch = sc.peek()
    if ch == "-":
        sc.take("-")
        return -_parse_atom(sc)
    if ch == "(":
        sc.take("(")
        value = _parse_expr(sc)
        sc.expect(")")
        return value
    if ch == "z":
        sc.take("z")
        k = 1
        if sc.take("^"):
            k = sc.integer()
        sc.expect("@")
        n = sc.integer()
        if n < 1:
            raise ConfigError("root-of-unity level must be positive")
        return root_of_unity(k, n)
    if ch.isdigit() or ch in "+-":
        num = sc.integer()
        if sc.take("/"):
            den = sc.integer()
            if den <= 0:
                raise ConfigError("denominators must be positive")
            from fractions import Fraction

            return rational(Fraction(num, den))
        return rational(num)
    raise ConfigError(f"unexpected character {ch!r} at position {sc.pos} in {sc.text!r}")


# --------------------------------------------------------------------------
# Config and build
# --------------------------------------------------------------------------


@dataclass
class Build:
    config: dict
    config_hash: str
    ctx: MatchedPairCtx
    sigma: SigmaCocycle
    tau: TauCocycle
    hopf: BicrossedHopf
    level: int
    radius: int
    name: str


def config_hash(cfg: dict) -> str:
    canon = json.dumps(cfg, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()[:16]


def _build_group(spec: dict):
    if not isinstance(spec, dict) or "type" not in spec:
        raise ConfigError("group spec must be an object with a 'type'")
    kind = spec["type"]
    if kind == "table":
        return finite_group(spec["table"], name=spec.get("name", "G"))
    if kind == "permutations":
        return permutation_group(spec["generators"], name=spec.get("name", "G"))
    raise ConfigError(f"unknown group type {kind!r}")


def _build_f(spec: dict):
    if not isinstance(spec, dict) or "type" not in spec:
        raise ConfigError("f_group spec must be an object with a 'type'")
    kind = spec["type"]
    if kind == "finite":
        return FiniteF(finite_group(spec["table"], name=spec.get("name", "F")))
    if kind == "free_abelian":
        rank = int(spec["rank"])
        if rank < 1:
            raise ConfigError("free abelian rank must be >= 1")
        return FreeAbelianF(rank)
    raise ConfigError(f"unknown f_group type {kind!r}")


def _build_action(spec: dict, G, F):
    if not isinstance(spec, dict) or "type" not in spec:
        raise ConfigError("action spec must be an object with a 'type'")
    kind = spec["type"]
    if kind == "tables":
        return TableActions(
            right=tuple(tuple(int(x) for x in row) for row in spec["right"]),
            left=tuple(tuple(int(x) for x in row) for row in spec["left"]),
        )
    if kind == "linear":
        mats = tuple(
            tuple(tuple(int(x) for x in row) for row in M) for M in spec["matrices"]
        )
        return LinearAction(matrices=mats)
    raise ConfigError(f"unknown action type {kind!r}")


def _parse_table_scalars(values, levels: list):
    out = []
    for block in values:
        rows = []
        for row in block:
            vals = []
            for v in row:
                c = parse_scalar(v)
                levels.append(c.level)
                vals.append(c)
            rows.append(vals)
        out.append(rows)
    return out


def _build_sigma(spec: dict | None, ctx, levels: list) -> SigmaCocycle:
    if spec is None or spec.get("type", "trivial") == "trivial":
        return SigmaCocycle.trivial()
    kind = spec["type"]
    if kind == "table":
        return SigmaCocycle.finite_table(ctx, _parse_table_scalars(spec["values"], levels))
    if kind == "quotient_lift":
        return SigmaCocycle.quotient_lift(
            ctx, tuple(int(m) for m in spec["moduli"]), _parse_table_scalars(spec["values"], levels)
        )
    raise ConfigError(f"unknown sigma type {kind!r}")


def _build_tau(spec: dict | None, ctx, levels: list) -> TauCocycle:
    if spec is None or spec.get("type", "trivial") == "trivial":
        return TauCocycle.trivial()
    kind = spec["type"]
    if kind == "table":
        return TauCocycle.finite_table(ctx, _parse_table_scalars(spec["values"], levels))
    if kind == "quotient_lift":
        return TauCocycle.quotient_lift(
            ctx, tuple(int(m) for m in spec["moduli"]), _parse_table_scalars(spec["values"], levels)
        )
    raise ConfigError(f"unknown tau type {kind!r}")


def build_config(cfg: dict) -> Build:
    """Validate a parsed config dict and construct the Hopf context.

    The working scalar level is lcm(exp(G), levels of all cocycle
    literals); declaring a smaller level in the config fails fast."""
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    for key in cfg:
        if key not in {"name", "level", "group", "f_group", "action", "sigma", "tau", "radius"}:
            raise ConfigError(f"unknown config field {key!r}")
    for key in ("group", "f_group", "action"):
        if key not in cfg:
            raise ConfigError(f"config is missing the {key!r} field")
    G = _build_group(cfg["group"])
    F = _build_f(cfg["f_group"])
    ctx = MatchedPairCtx(G, F, _build_action(cfg["action"], G, F))
    levels: list[int] = []
    sigma = _build_sigma(cfg.get("sigma"), ctx, levels)
    tau = _build_tau(cfg.get("tau"), ctx, levels)
    level = G.exponent()
    for lv in levels:
        level = level // gcd(level, lv) * lv
    declared = cfg.get("level")
    if declared is not None:
        declared = int(declared)
        if declared % level != 0:
            raise ConfigError(
                f"declared level {declared} cannot hold the session scalars "
                f"(need a multiple of {level})"
            )
        level = declared
    radius = int(cfg.get("radius", DEFAULT_RADIUS))
    if radius < 0:
        raise ConfigError("radius must be >= 0")
    hopf = BicrossedHopf(ctx, sigma, tau)
    return Build(
        config=cfg,
        config_hash=config_hash(cfg),
        ctx=ctx,
        sigma=sigma,
        tau=tau,
        hopf=hopf,
        level=level,
        radius=radius,
        name=str(cfg.get("name", "config")),
    )


def load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
