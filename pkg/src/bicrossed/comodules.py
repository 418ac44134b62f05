"""Simple right comodules of the bicrossed product, via induction.

Each G-orbit in F contributes one simple comodule per irreducible
(twisted) character of the stabilizer of its canonical representative;
the induced comodule has dimension |T_f| * dim V.  Only character data
is needed for enumeration and fusion; explicit coaction matrices enter
solely through the optional coefficient-basis construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycles import Beta2Cocycle, beta_for_orbit
from .cyclotomic import CycNum, rational
from .errors import BallTooSmallError, ConfigError, InternalInconsistencyError
from .groups import f_ball, subgroup_of
from .hopf import BicrossedHopf, HElem
from .matched_pair import Orbit
from .reps import CharTable, TwistedChar, abelian_char_table, ordinary_char_table, twisted_char_table


@dataclass(frozen=True)
class SimpleDesc:
    """Descriptor of a simple comodule: orbit + stabilizer character."""

    orbit: Orbit
    chi: TwistedChar
    chi_index: int
    dim_v: int
    dim_total: int
    uid: str

    def __repr__(self):
        return f"SimpleDesc({self.uid}, dim={self.dim_total})"


@dataclass(frozen=True)
class CfBasis:
    """Basis bookkeeping for the coefficient subcoalgebra of one orbit."""

    orbit: Orbit
    keys: tuple
    dimension: int
    is_simple: bool
    antipode_stable: bool


def cf_subcoalgebra(ctx, orbit: Orbit) -> CfBasis:
    """Span{p_g # x : g in G, x in O_f}; dimension |G| * |O_f|.

    Simple iff the stabilizer is trivial; antipode-stable iff the orbit
    contains the inverse of its representative."""
    keys = tuple((g, x) for g in ctx.G.elements() for x in orbit.elements)
    finv = ctx.F.inv(orbit.representative)
    stable = any(ctx.act_right(g, orbit.representative) == finv for g in ctx.G.elements())
    return CfBasis(
        orbit=orbit,
        keys=keys,
        dimension=ctx.G.order * orbit.size,
        is_simple=len(orbit.stabilizer) == 1,
        antipode_stable=stable,
    )


def stabilizer_char_table(hopf: BicrossedHopf, orbit: Orbit) -> tuple[CharTable, Beta2Cocycle]:
    """Character table of the twisted stabilizer algebra of the orbit."""
    beta = beta_for_orbit(hopf.ctx, hopf.tau, orbit)
    sub, to_parent = subgroup_of(hopf.G, orbit.stabilizer)
    if beta.is_trivial:
        if sub.is_abelian():
            table = abelian_char_table(sub, to_parent)
        else:
            table = ordinary_char_table(sub, to_parent)
    else:
        table = twisted_char_table(hopf.G, orbit.stabilizer, beta)
    return table, beta


def simples_for_orbit(hopf: BicrossedHopf, orbit: Orbit) -> tuple[SimpleDesc, ...]:
    """One SimpleDesc per stabilizer character, in table order.

    Asserts the counting identity: the squared total dimensions add up to
    dim C_f = |G| * |O_f|."""
    table, _beta = stabilizer_char_table(hopf, orbit)
    t_len = len(orbit.transversal)
    out = []
    rep_label = hopf.F.label(orbit.representative)
    for i, chi in enumerate(table.chars):
        out.append(
            SimpleDesc(
                orbit=orbit,
                chi=chi,
                chi_index=i,
                dim_v=chi.dim,
                dim_total=t_len * chi.dim,
                uid=f"{rep_label}:{i}",
            )
        )
    total = sum(d.dim_total**2 for d in out)
    if total != hopf.G.order * orbit.size:
        raise InternalInconsistencyError(
            f"orbit {rep_label}: sum dim^2 = {total} != |G|*|O_f| = {hopf.G.order * orbit.size}"
        )
    return tuple(out)


def irreducible_character(hopf: BicrossedHopf, d: SimpleDesc) -> HElem:
    """The induced-comodule character.

    Sums tau(z^-1, g; f)^-1 tau(z^-1 g z, z^-1; f) chi(g) p_{z^-1 g z}
    over the transversal and the stabilizer, placed at f-part z^-1 > f."""
    ctx, G, F = hopf.ctx, hopf.G, hopf.F
    f = d.orbit.representative
    chimap = d.chi.value_map()
    acc: dict = {}
    for z in d.orbit.transversal:
        zinv = G.inv(z)
        fz = ctx.act_right(zinv, f)
        for g in d.orbit.stabilizer:
            val = chimap[g]
            if val.is_zero():
                continue
            zgz = G.mul(G.mul(zinv, g), z)
            coeff = hopf.tau_at(zinv, g, f).inv() * hopf.tau_at(zgz, zinv, f) * val
            key = (zgz, fz)
            acc[key] = acc[key] + coeff if key in acc else coeff
    return HElem(acc)


def coefficient_basis(hopf: BicrossedHopf, d: SimpleDesc, matrices=None) -> list[HElem]:
    """The dim_total^2 spanning elements of the coefficient subcoalgebra.

    For dim_v = 1 the single coaction entry is the character itself; for
    higher dimensions explicit coaction matrices must be supplied as a
    map from stabilizer elements to square matrices of scalars.  The
    matrices are checked against the stabilizer cocycle (projective
    multiplicativity) and the character (traces) before use, and the
    result is certified linearly independent.
    """
    from .certs import exact_rank

    ctx, G = hopf.ctx, hopf.G
    f = d.orbit.representative
    beta = beta_for_orbit(ctx, hopf.tau, d.orbit)
    m = d.dim_v
    if matrices is None:
        if m != 1:
            raise ConfigError(
                "coaction matrices are required for characters of dimension > 1"
            )
        matrices = {g: ((d.chi.value_map()[g],),) for g in d.orbit.stabilizer}
    _check_coaction_matrices(hopf, d, beta, matrices)
    out = []
    for z2 in d.orbit.transversal:
        z2inv = G.inv(z2)
        for z in d.orbit.transversal:
            zinv = G.inv(z)
            fz = ctx.act_right(zinv, f)
            for j in range(m):
                for i in range(m):
                    acc: dict = {}
                    for g in d.orbit.stabilizer:
                        a = matrices[g][j][i]
                        if not isinstance(a, CycNum):
                            a = rational(a)
                        if a.is_zero():
                            continue
                        zgz = G.mul(G.mul(z2inv, g), z)
                        coeff = (
                            hopf.tau_at(z2inv, g, f).inv()
                            * hopf.tau_at(zgz, zinv, f)
                            * a
                        )
                        key = (zgz, fz)
                        acc[key] = acc[key] + coeff if key in acc else coeff
                    out.append(HElem(acc))
    cert = exact_rank(out, f"coefficient basis of {d.uid}")
    if cert.rank != d.dim_total**2 or len(out) != d.dim_total**2:
        raise InternalInconsistencyError(
            f"coefficient basis of {d.uid} has rank {cert.rank}, expected {d.dim_total ** 2}"
        )
    return out


def _check_coaction_matrices(hopf, d, beta: Beta2Cocycle, matrices):
    G = hopf.G
    m = d.dim_v
    chimap = d.chi.value_map()
    for g in d.orbit.stabilizer:
        if g not in matrices:
            raise ConfigError(f"missing coaction matrix for stabilizer element {g}")
        M = matrices[g]
        if len(M) != m or any(len(row) != m for row in M):
            raise ConfigError("coaction matrices must be dim_v x dim_v")
        tr = rational(0)
        for i in range(m):
            v = M[i][i]
            tr = tr + (v if isinstance(v, CycNum) else rational(v))
        if tr != chimap[g]:
            raise ConfigError(f"coaction trace at {g} disagrees with the character")
    ident = G.identity
    for i in range(m):
        for j in range(m):
            v = matrices[ident][i][j]
            want = rational(1 if i == j else 0)
            if (v if isinstance(v, CycNum) else rational(v)) != want:
                raise ConfigError("coaction matrix at the identity must be the unit matrix")
    for a in d.orbit.stabilizer:
        for b in d.orbit.stabilizer:
            ab = G.mul(a, b)
            lam = beta.eval(a, b)
            for i in range(m):
                for j in range(m):
                    s = rational(0)
                    for t in range(m):
                        x = matrices[a][i][t]
                        y = matrices[b][t][j]
                        x = x if isinstance(x, CycNum) else rational(x)
                        y = y if isinstance(y, CycNum) else rational(y)
                        s = s + x * y
                    w = matrices[ab][i][j]
                    w = w if isinstance(w, CycNum) else rational(w)
                    if s != lam * w:
                        raise ConfigError(
                            f"coaction matrices are not projectively multiplicative at ({a},{b})"
                        )


def enumerate_simples(hopf: BicrossedHopf, radius: int) -> list[SimpleDesc]:
    """Deduplicated simples over every orbit meeting the ball, sorted by
    (orbit representative, character index).  Complete for finite F."""
    return SimpleIndex(hopf).enumerate(radius)


class SimpleIndex:
    """Cache of orbits and their simples; the uid -> descriptor registry.

    Computation is on demand per orbit, so fusion candidates outside any
    enumerated ball still resolve unless the caller pins a radius."""

    def __init__(self, hopf: BicrossedHopf):
        self.hopf = hopf
        self._by_rep: dict = {}
        self._by_uid: dict = {}
        self._char_cache: dict = {}

    def simples_for_orbit(self, orbit: Orbit) -> tuple[SimpleDesc, ...]:
        rep = orbit.representative
        if rep not in self._by_rep:
            simples = simples_for_orbit(self.hopf, orbit)
            self._by_rep[rep] = simples
            for d in simples:
                self._by_uid[d.uid] = d
        return self._by_rep[rep]

    def simples_for_f(self, f) -> tuple[SimpleDesc, ...]:
        return self.simples_for_orbit(self.hopf.ctx.orbit_of(f))

    def orbits_in_ball(self, radius: int) -> list[Orbit]:
        ctx = self.hopf.ctx
        seen = set()
        orbits = []
        for f in f_ball(self.hopf.F, radius):
            if f in seen:
                continue
            orb = ctx.orbit_of(f)
            seen |= set(orb.elements)
            orbits.append(orb)
        orbits.sort(key=lambda o: self.hopf.F.order_key(o.representative))
        return orbits

    def enumerate(self, radius: int) -> list[SimpleDesc]:
        out = []
        for orb in self.orbits_in_ball(radius):
            out.extend(self.simples_for_orbit(orb))
        return out

    def find(self, uid: str) -> SimpleDesc:
        if uid in self._by_uid:
            return self._by_uid[uid]
        f_label, _, idx = uid.rpartition(":")
        if not f_label:
            raise ConfigError(f"malformed simple id {uid!r}; expected '<f>:<index>'")
        f = self.hopf.F.parse_label(f_label)
        simples = self.simples_for_f(f)
        try:
            return simples[int(idx)]
        except (IndexError, ValueError):
            raise ConfigError(
                f"no character index {idx!r} over the orbit of {f_label}"
            ) from None

    def character(self, d: SimpleDesc) -> HElem:
        if d.uid not in self._char_cache:
            self._char_cache[d.uid] = irreducible_character(self.hopf, d)
        return self._char_cache[d.uid]

    def unit_simple(self) -> SimpleDesc:
        unit = self.hopf.unit()
        for d in self.simples_for_f(self.hopf.F.identity):
            if self.character(d) == unit:
                return d
        raise InternalInconsistencyError("no simple with the unit character")

    def require_in_ball(self, orbit: Orbit, radius: int | None):
        if radius is None or self.hopf.F.is_finite:
            return
        rep = orbit.representative
        norm = max(abs(x) for x in rep)
        if norm > radius:
            raise BallTooSmallError(
                f"orbit of {self.hopf.F.label(rep)} lies outside the radius-{radius} ball",
                representative=rep,
            )
