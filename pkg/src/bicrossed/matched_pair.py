"""Matched pairs of groups (F, G) with mutual actions, and orbit machinery.

The right action sends (g, f) to an element of F, the left action sends
(g, f) to an element of G.  Two backends describe the actions: dense
tables for finite F, and a homomorphism G -> GL_r(Z) for free-abelian F
(with the left action constantly trivial, the only decidable shape the
matched-pair laws leave open on Z^r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigError
from .groups import FiniteGroup, FiniteF, FreeAbelianF, f_ball


@dataclass(frozen=True)
class TableActions:
    """Dense action tables over a finite F: right[g][f] is an F index,
    left[g][f] is a G index."""

    right: tuple[tuple[int, ...], ...]
    left: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LinearAction:
    """Right action by integer matrices M_g (one per G element, acting on
    column vectors of Z^r); the left action is trivial."""

    matrices: tuple[tuple[tuple[int, ...], ...], ...]


def _int_det(mat) -> int:
    n = len(mat)
    rows = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    assert det.denominator == 1
    return int(det)


class MatchedPairCtx:
    """Validated matched-pair context: G finite, F finite or Z^r, actions.

    Construction checks shapes and basic sanity; the matched-pair laws
    themselves are checked by verify_matched_pair, whose report states
    whether the verification is global or ball-bounded.
    """

    def __init__(self, G: FiniteGroup, F, action):
        self.G = G
        self.F = F
        self.action = action
        self._orbit_cache: dict = {}
        if isinstance(action, TableActions):
            if not isinstance(F, FiniteF):
                raise ConfigError("table actions require a finite F")
            n, m = G.order, F.group.order
            for tbl, rng, what in (
                (action.right, m, "right"),
                (action.left, n, "left"),
            ):
                if len(tbl) != n or any(len(row) != m for row in tbl):
                    raise ConfigError(f"{what} action table must be {n}x{m}")
                for row in tbl:
                    for x in row:
                        if not 0 <= x < rng:
                            raise ConfigError(f"{what} action table entry {x} out of range")
        elif isinstance(action, LinearAction):
            if not isinstance(F, FreeAbelianF):
                raise ConfigError("linear actions require a free-abelian F")
            if len(action.matrices) != G.order:
                raise ConfigError("need one matrix per G element")
            r = F.rank
            for M in action.matrices:
                if len(M) != r or any(len(row) != r for row in M):
                    raise ConfigError(f"action matrices must be {r}x{r}")
                if _int_det(M) not in (1, -1):
                    raise ConfigError("action matrix is not invertible over the integers")
        else:
            raise ConfigError(f"unknown action spec {type(action).__name__}")

    # -- the two actions ----------------------------------------------------

    def act_right(self, g: int, f):
        if isinstance(self.action, TableActions):
            return self.action.right[g][f]
        M = self.action.matrices[g]
        return tuple(sum(M[i][j] * f[j] for j in range(len(f))) for i in range(len(f)))

    def act_left(self, g: int, f) -> int:
        if isinstance(self.action, TableActions):
            return self.action.left[g][f]
        return g

    @property
    def left_action_trivial(self) -> bool:
        if isinstance(self.action, LinearAction):
            return True
        return all(
            self.action.left[g][f] == g
            for g in self.G.elements()
            for f in range(self.F.group.order)
        )

    # -- orbits -------------------------------------------------------------

    def orbit_of(self, f) -> "Orbit":
        elems = sorted({self.act_right(g, f) for g in self.G.elements()}, key=self.F.order_key)
        rep = elems[0]
        key = rep
        cached = self._orbit_cache.get(key)
        if cached is not None:
            return cached
        stab = tuple(g for g in self.G.elements() if self.act_right(g, rep) == rep)
        stab_set = set(stab)
        transversal = []
        seen = set()
        order = [self.G.identity] + [g for g in self.G.elements() if g != self.G.identity]
        for x in order:
            coset = frozenset(self.G.mul(h, x) for h in stab)
            if coset not in seen:
                seen.add(coset)
                transversal.append(x)
        if len(elems) * len(stab) != self.G.order:
            raise ConfigError(
                "orbit-stabilizer count violated; the action tables do not define an action"
            )
        coset_map = {}
        for x in self.G.elements():
            for z in transversal:
                h = self.G.mul(x, self.G.inv(z))
                if h in stab_set:
                    coset_map[x] = (h, z)
                    break
        orbit = Orbit(
            representative=rep,
            elements=tuple(elems),
            stabilizer=stab,
            transversal=tuple(transversal),
            coset_map=coset_map,
        )
        self._orbit_cache[key] = orbit
        return orbit


@dataclass(frozen=True)
class Orbit:
    """A G-orbit in F, anchored at its canonical representative.

    The stabilizer, transversal (first entry 1_G) and coset decomposition
    x = g_x * z_x all refer to the representative.
    """

    representative: object
    elements: tuple
    stabilizer: tuple[int, ...]
    transversal: tuple[int, ...]
    coset_map: dict = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __hash__(self):
        return hash((self.representative, self.elements))


def g_f_finv(ctx: MatchedPairCtx, f) -> tuple[int, ...]:
    """All g with g acting on f giving f^-1; empty iff f^-1 is outside O_f."""
    finv = ctx.F.inv(f)
    return tuple(g for g in ctx.G.elements() if ctx.act_right(g, f) == finv)


def orbit_product(ctx: MatchedPairCtx, o1: Orbit, o2: Orbit) -> list[Orbit]:
    """Decompose {x*y : x in O1, y in O2} into orbits, sorted by representative."""
    prods = {ctx.F.mul(x, y) for x in o1.elements for y in o2.elements}
    out = {}
    while prods:
        f = next(iter(prods))
        orb = ctx.orbit_of(f)
        if not set(orb.elements) <= prods:
            missing = set(orb.elements) - prods
            raise AssertionError(f"orbit product is not orbit-closed, missing {missing}")
        prods -= set(orb.elements)
        out[orb.representative] = orb
    return [out[k] for k in sorted(out, key=ctx.F.order_key)]


# --------------------------------------------------------------------------
# Verification
# --------------------------------------------------------------------------


@dataclass
class CheckResult:
    """One verified law: every instance is counted, the first few violated
    instances are listed as witnesses."""

    name: str
    scope: str
    instances: int
    violations: list
    violation_count: int = -1

    def __post_init__(self):
        if self.violation_count < 0:
            self.violation_count = len(self.violations)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_payload(self) -> dict:
        return {
            "name": self.name,
            "scope": self.scope,
            "instances": self.instances,
            "violation_count": self.violation_count,
            "violations": self.violations[:20],
        }


@dataclass
class VerifyReport:
    title: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_payload(self) -> dict:
        return {
            "title": self.title,
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_payload() for c in self.checks],
        }


def verify_matched_pair(ctx: MatchedPairCtx, radius: int = 4, max_violations: int = 20) -> VerifyReport:
    """Check the action laws, the two matched-pair laws and the derived
    inverse identities.

    Linear actions with trivial left action are certified globally by the
    homomorphism property of g -> M_g; table actions over finite F are
    checked exhaustively.  Only genuinely infinite enumerations fall back
    to the ball and say so in the scope.
    """
    G, F = ctx.G, ctx.F
    checks: list[CheckResult] = []

    if isinstance(ctx.action, LinearAction):
        viols = []
        nviol = 0
        r = F.rank
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        if ctx.action.matrices[G.identity] != ident:
            nviol += 1
            viols.append({"law": "identity matrix", "g": G.identity})
        count = 0
        for g in G.elements():
            for g2 in G.elements():
                count += 1
                Mg = ctx.action.matrices[g]
                Mg2 = ctx.action.matrices[g2]
                prod = tuple(
                    tuple(sum(Mg[i][k] * Mg2[k][j] for k in range(r)) for j in range(r))
                    for i in range(r)
                )
                if prod != ctx.action.matrices[G.mul(g, g2)]:
                    nviol += 1
                    if len(viols) < max_violations:
                        viols.append({"law": "matrix homomorphism", "g": g, "g2": g2})
        checks.append(
            CheckResult(
                "linear action homomorphism (implies all laws globally)",
                "global",
                count,
                viols,
                nviol,
            )
        )
        ball = f_ball(F, min(radius, 2))
        scope = "global (spot ball)"
    else:
        ball = f_ball(F, radius)
        scope = "global" if F.is_finite else f"ball radius {radius}"

    lab = F.label

    def check(name, gen):
        viols = []
        nviol = 0
        count = 0
        for witness in gen:
            count += 1
            if witness is not None:
                nviol += 1
                if len(viols) < max_violations:
                    viols.append(witness)
        checks.append(CheckResult(name, scope, count, viols, nviol))

    check(
        "right action law",
        (
            None
            if ctx.act_right(G.identity, f) == f
            and ctx.act_right(G.mul(g, g2), f) == ctx.act_right(g, ctx.act_right(g2, f))
            else {"g": g, "g2": g2, "f": lab(f)}
            for g in G.elements()
            for g2 in G.elements()
            for f in ball
        ),
    )
    check(
        "left action law",
        (
            None
            if ctx.act_left(g, F.identity) == g
            and ctx.act_left(g, F.mul(f, f2)) == ctx.act_left(ctx.act_left(g, f), f2)
            else {"g": g, "f": lab(f), "f2": lab(f2)}
            for g in G.elements()
            for f in ball
            for f2 in ball
        ),
    )
    check(
        "compatibility: g>(f f') = (g>f)((g<f)>f')",
        (
            None
            if ctx.act_right(g, F.mul(f, f2))
            == F.mul(ctx.act_right(g, f), ctx.act_right(ctx.act_left(g, f), f2))
            else {"g": g, "f": lab(f), "f2": lab(f2)}
            for g in G.elements()
            for f in ball
            for f2 in ball
        ),
    )
    check(
        "compatibility: (g g')<f = (g<(g'>f))(g'<f)",
        (
            None
            if ctx.act_left(G.mul(g, g2), f)
            == G.mul(ctx.act_left(g, ctx.act_right(g2, f)), ctx.act_left(g2, f))
            else {"g": g, "g2": g2, "f": lab(f)}
            for g in G.elements()
            for g2 in G.elements()
            for f in ball
        ),
    )
    check(
        "inverse identities",
        (
            None
            if ctx.act_right(g, F.identity) == F.identity
            and ctx.act_left(g, F.identity) == g
            and F.inv(ctx.act_right(g, f)) == ctx.act_right(ctx.act_left(g, f), F.inv(f))
            and G.inv(ctx.act_left(g, f)) == ctx.act_left(G.inv(g), ctx.act_right(g, f))
            else {"g": g, "f": lab(f)}
            for g in G.elements()
            for f in ball
        ),
    )
    return VerifyReport("matched pair", checks)
