"""Cocycle data (sigma, tau) for the crossed product and coproduct.

sigma takes (g; f, f') to a nonzero scalar, tau takes (g, g'; f).  Three
spec shapes are supported: Trivial, dense tables over a finite F, and
quotient lifts for free-abelian F (values factor through F -> prod Z_mi).
All values are exact cyclotomic numbers.
"""

from __future__ import annotations

from .cyclotomic import CycNum, one
from .errors import ConfigError, InternalInconsistencyError
from .groups import f_ball
from .matched_pair import CheckResult, LinearAction, MatchedPairCtx, Orbit, VerifyReport

_ONE = one()


class _QuotientIndexer:
    """Indexes the finite quotient prod Z_mi of Z^r by mixed radix."""

    def __init__(self, moduli):
        self.moduli = tuple(int(m) for m in moduli)
        if any(m < 1 for m in self.moduli):
            raise ConfigError("quotient moduli must be >= 1")
        self.size = 1
        for m in self.moduli:
            self.size *= m

    def index(self, f) -> int:
        idx = 0
        for x, m in zip(f, self.moduli):
            idx = idx * m + (x % m)
        return idx

    def representatives(self):
        reps = [()]
        for m in self.moduli:
            reps = [r + (x,) for r in reps for x in range(m)]
        return [tuple(r) for r in reps]

    def descends_through(self, ctx: MatchedPairCtx) -> bool:
        """True when every action matrix maps the kernel lattice into
        itself, so g > f mod m depends only on f mod m."""
        if not isinstance(ctx.action, LinearAction):
            return False
        r = len(self.moduli)
        for M in ctx.action.matrices:
            for i in range(r):
                for j in range(r):
                    if (M[i][j] * self.moduli[j]) % self.moduli[i] != 0:
                        return False
        return True


class SigmaCocycle:
    """sigma(g; f, f') with the normalizations sigma(g;1,f) = sigma(g;f,1)
    = sigma(1;f,f') = 1 enforced at construction."""

    def __init__(self, kind: str, table=None, moduli=None, ctx_hint=None):
        self.kind = kind
        self.table = table
        self.quot = _QuotientIndexer(moduli) if moduli is not None else None

    @staticmethod
    def trivial() -> "SigmaCocycle":
        return SigmaCocycle("trivial")

    @staticmethod
    def finite_table(ctx: MatchedPairCtx, values) -> "SigmaCocycle":
        n, m = ctx.G.order, ctx.F.group.order
        table = _check_3d_table(values, n, m, m, "sigma")
        s = SigmaCocycle("table", table=table)
        _check_sigma_normalization(s, ctx, range(m), ctx.F.group.identity)
        return s

    @staticmethod
    def quotient_lift(ctx: MatchedPairCtx, moduli, values) -> "SigmaCocycle":
        if ctx.F.is_finite:
            raise ConfigError("quotient-lift cocycles are for free-abelian F; use a table")
        quot = _QuotientIndexer(moduli)
        if len(moduli) != ctx.F.rank:
            raise ConfigError("moduli vector length must equal the free-abelian rank")
        table = _check_3d_table(values, ctx.G.order, quot.size, quot.size, "sigma")
        s = SigmaCocycle("quotient", table=table, moduli=moduli)
        reps = quot.representatives()
        _check_sigma_normalization(s, ctx, reps, ctx.F.identity)
        return s

    def eval(self, ctx: MatchedPairCtx, g: int, f, f2) -> CycNum:
        if self.kind == "trivial":
            return _ONE
        if self.kind == "table":
            return self.table[g][f][f2]
        q = self.quot
        return self.table[g][q.index(f)][q.index(f2)]

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"


class TauCocycle:
    """tau(g, g'; f) with tau(1,g;f) = tau(g,1;f) = tau(g,g';1) = 1."""

    def __init__(self, kind: str, table=None, moduli=None):
        self.kind = kind
        self.table = table
        self.quot = _QuotientIndexer(moduli) if moduli is not None else None

    @staticmethod
    def trivial() -> "TauCocycle":
        return TauCocycle("trivial")

    @staticmethod
    def finite_table(ctx: MatchedPairCtx, values) -> "TauCocycle":
        n, m = ctx.G.order, ctx.F.group.order
        table = _check_3d_table(values, n, n, m, "tau")
        t = TauCocycle("table", table=table)
        _check_tau_normalization(t, ctx, range(m), ctx.F.group.identity)
        return t

    @staticmethod
    def quotient_lift(ctx: MatchedPairCtx, moduli, values) -> "TauCocycle":
        if ctx.F.is_finite:
            raise ConfigError("quotient-lift cocycles are for free-abelian F; use a table")
        quot = _QuotientIndexer(moduli)
        if len(moduli) != ctx.F.rank:
            raise ConfigError("moduli vector length must equal the free-abelian rank")
        table = _check_3d_table(values, ctx.G.order, ctx.G.order, quot.size, "tau")
        t = TauCocycle("quotient", table=table, moduli=moduli)
        _check_tau_normalization(t, ctx, quot.representatives(), ctx.F.identity)
        return t

    def eval(self, ctx: MatchedPairCtx, g: int, g2: int, f) -> CycNum:
        if self.kind == "trivial":
            return _ONE
        if self.kind == "table":
            return self.table[g][g2][f]
        return self.table[g][g2][self.quot.index(f)]

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"


def _check_3d_table(values, n1, n2, n3, what):
    if len(values) != n1:
        raise ConfigError(f"{what} table must have {n1} outer entries")
    out = []
    for block in values:
        if len(block) != n2:
            raise ConfigError(f"{what} table block must have {n2} rows")
        rows = []
        for row in block:
            if len(row) != n3:
                raise ConfigError(f"{what} table row must have {n3} entries")
            vals = []
            for v in row:
                if not isinstance(v, CycNum):
                    raise ConfigError(f"{what} table entries must be cyclotomic numbers")
                if v.is_zero():
                    raise ConfigError(f"{what} values must be nonzero")
                vals.append(v)
            rows.append(tuple(vals))
        out.append(tuple(rows))
    return tuple(out)


def _check_sigma_normalization(s: SigmaCocycle, ctx, f_domain, f_identity):
    for g in ctx.G.elements():
        for f in f_domain:
            if not s.eval(ctx, g, f_identity, f).is_one():
                raise ConfigError(f"sigma(g; 1, f) must be 1, violated at g={g}")
            if not s.eval(ctx, g, f, f_identity).is_one():
                raise ConfigError(f"sigma(g; f, 1) must be 1, violated at g={g}")
    for f in f_domain:
        for f2 in f_domain:
            if not s.eval(ctx, ctx.G.identity, f, f2).is_one():
                raise ConfigError("sigma(1; f, f') must be 1")


def _check_tau_normalization(t: TauCocycle, ctx, f_domain, f_identity):
    for g in ctx.G.elements():
        for f in f_domain:
            if not t.eval(ctx, ctx.G.identity, g, f).is_one():
                raise ConfigError(f"tau(1, g; f) must be 1, violated at g={g}")
            if not t.eval(ctx, g, ctx.G.identity, f).is_one():
                raise ConfigError(f"tau(g, 1; f) must be 1, violated at g={g}")
        for g2 in ctx.G.elements():
            if not t.eval(ctx, g, g2, f_identity).is_one():
                raise ConfigError(f"tau(g, g'; 1) must be 1, violated at ({g},{g2})")


def _verification_domain(ctx: MatchedPairCtx, spec_kinds, quots, radius: int):
    """The f-enumeration for cocycle-law checks and its scope label.

    Finite F: everything.  Trivial specs: the laws hold identically, a
    one-element domain documents that.  Quotient lifts whose quotient the
    action descends to: one representative per quotient class is complete
    for all of F.  Otherwise: ball-bounded.
    """
    if ctx.F.is_finite:
        return list(ctx.F.ball(0)), "global"
    if all(k == "trivial" for k in spec_kinds):
        return [ctx.F.identity], "global (trivial cocycles)"
    quots = [q for q in quots if q is not None]
    if quots and all(q.descends_through(ctx) for q in quots):
        moduli = quots[0].moduli
        if all(q.moduli == moduli for q in quots):
            reps = _QuotientIndexer(moduli).representatives()
            return reps, "global (quotient representatives)"
    return list(f_ball(ctx.F, radius)), f"ball radius {radius}"


def verify_cocycles(
    ctx: MatchedPairCtx,
    sigma: SigmaCocycle,
    tau: TauCocycle,
    radius: int = 4,
    max_violations: int = 20,
) -> VerifyReport:
    """Check the sigma law, the tau law and the sigma/tau compatibility
    condition that together make the crossed (co)product a bialgebra."""
    G, F = ctx.G, ctx.F
    domain, scope = _verification_domain(
        ctx, (sigma.kind, tau.kind), (sigma.quot, tau.quot), radius
    )
    lab = F.label
    checks: list[CheckResult] = []

    viols = []
    nviol = 0
    count = 0
    for g in G.elements():
        for f in domain:
            gf = ctx.act_left(g, f)
            for f2 in domain:
                sf = sigma.eval(ctx, g, f, f2)
                ff2 = F.mul(f, f2)
                for f3 in domain:
                    count += 1
                    lhs = sigma.eval(ctx, gf, f2, f3) * sigma.eval(ctx, g, f, F.mul(f2, f3))
                    rhs = sf * sigma.eval(ctx, g, ff2, f3)
                    if lhs != rhs:
                        nviol += 1
                        if len(viols) < max_violations:
                            viols.append({"g": g, "f": lab(f), "f2": lab(f2), "f3": lab(f3)})
    checks.append(CheckResult("sigma cocycle law", scope, count, viols, nviol))

    viols = []
    nviol = 0
    count = 0
    for g in G.elements():
        for g2 in G.elements():
            gg2 = G.mul(g, g2)
            for g3 in G.elements():
                g2g3 = G.mul(g2, g3)
                for f in domain:
                    count += 1
                    lhs = tau.eval(ctx, g, g2, ctx.act_right(g3, f)) * tau.eval(ctx, gg2, g3, f)
                    rhs = tau.eval(ctx, g, g2g3, f) * tau.eval(ctx, g2, g3, f)
                    if lhs != rhs:
                        nviol += 1
                        if len(viols) < max_violations:
                            viols.append({"g": g, "g2": g2, "g3": g3, "f": lab(f)})
    checks.append(CheckResult("tau cocycle law", scope, count, viols, nviol))

    viols = []
    nviol = 0
    count = 0
    for g in G.elements():
        for g2 in G.elements():
            gg2 = G.mul(g, g2)
            for f in domain:
                g2f_r = ctx.act_right(g2, f)
                g2f_l = ctx.act_left(g2, f)
                for f2 in domain:
                    count += 1
                    lhs = sigma.eval(ctx, gg2, f, f2) * tau.eval(ctx, g, g2, F.mul(f, f2))
                    rhs = (
                        sigma.eval(ctx, g, g2f_r, ctx.act_right(g2f_l, f2))
                        * sigma.eval(ctx, g2, f, f2)
                        * tau.eval(ctx, g, g2, f)
                        * tau.eval(ctx, ctx.act_left(g, g2f_r), g2f_l, f2)
                    )
                    if lhs != rhs:
                        nviol += 1
                        if len(viols) < max_violations:
                            viols.append({"g": g, "g2": g2, "f": lab(f), "f2": lab(f2)})
    checks.append(CheckResult("sigma/tau compatibility", scope, count, viols, nviol))
    return VerifyReport("cocycles", checks)


class Beta2Cocycle:
    """The 2-cocycle on a stabilizer subgroup: values on pairs of parent
    G-indices, normalized, satisfying b(a,b)b(ab,c) = b(a,bc)b(b,c)."""

    def __init__(self, group: "FiniteGroup", elements: tuple[int, ...], values: dict):
        self.group = group
        self.elements = tuple(elements)
        self.values = values

    def eval(self, a: int, b: int) -> CycNum:
        return self.values[(a, b)]

    @property
    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values.values())

    def verify(self) -> None:
        ident = self.group.identity
        for a in self.elements:
            if not self.eval(ident, a).is_one() or not self.eval(a, ident).is_one():
                raise InternalInconsistencyError(f"2-cocycle not normalized at {a}")
        for a in self.elements:
            for b in self.elements:
                ab = self.group.mul(a, b)
                for c in self.elements:
                    lhs = self.eval(a, b) * self.eval(ab, c)
                    rhs = self.eval(a, self.group.mul(b, c)) * self.eval(b, c)
                    if lhs != rhs:
                        raise InternalInconsistencyError(
                            f"2-cocycle identity fails at ({a},{b},{c})"
                        )

    @staticmethod
    def from_table(group, elements, values: dict) -> "Beta2Cocycle":
        beta = Beta2Cocycle(group, elements, dict(values))
        beta.verify()
        return beta


def beta_for_orbit(ctx: MatchedPairCtx, tau: TauCocycle, orbit: Orbit) -> Beta2Cocycle:
    """Restrict tau(.,.;f) to the stabilizer of the orbit representative.

    Within the stabilizer the tau law specializes to the 2-cocycle
    identity, which is re-verified here as a guard against inconsistent
    table data."""
    f = orbit.representative
    values = {
        (a, b): tau.eval(ctx, a, b, f) for a in orbit.stabilizer for b in orbit.stabilizer
    }
    beta = Beta2Cocycle(ctx.G, orbit.stabilizer, values)
    beta.verify()
    return beta


def is_unitary(
    sigma: SigmaCocycle,
    tau: TauCocycle,
    ctx: MatchedPairCtx,
    radius: int = 4,
) -> tuple[bool, dict | None]:
    """All cocycle values have modulus one on the evaluated domain.

    Returns (True, None) or (False, witness); the witness names the first
    offending tuple in enumeration order."""
    domain, scope = _verification_domain(
        ctx, (sigma.kind, tau.kind), (sigma.quot, tau.quot), radius
    )
    lab = ctx.F.label
    for g in ctx.G.elements():
        for f in domain:
            for f2 in domain:
                v = sigma.eval(ctx, g, f, f2)
                if not v.is_modulus_one():
                    return False, {
                        "kind": "sigma",
                        "g": g,
                        "f": lab(f),
                        "f2": lab(f2),
                        "value": v.literal(),
                        "scope": scope,
                    }
    for g in ctx.G.elements():
        for g2 in ctx.G.elements():
            for f in domain:
                v = tau.eval(ctx, g, g2, f)
                if not v.is_modulus_one():
                    return False, {
                        "kind": "tau",
                        "g": g,
                        "g2": g2,
                        "f": lab(f),
                        "value": v.literal(),
                        "scope": scope,
                    }
    return True, None
