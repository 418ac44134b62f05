"""The Grothendieck ring on irreducible characters.

Products decompose by an exact linear solve of the character product
against the candidate characters supplied by the orbit product; the
multiplicities must come out as nonnegative integers with zero residual,
and violations abort loudly.  Duality goes through the antipode, the
degree-2 indicator through the integral of m(Delta(chi)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .certs import solve_in_span
from .comodules import SimpleDesc, SimpleIndex
from .cyclotomic import rational
from .errors import InternalInconsistencyError
from .hopf import BicrossedHopf
from .matched_pair import orbit_product


@dataclass(frozen=True)
class FusionRow:
    left: str
    right: str
    summands: tuple[tuple[str, int], ...]

    def to_payload(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "summands": [{"id": uid, "multiplicity": m} for uid, m in self.summands],
        }


@dataclass
class FusionTable:
    simples: list[SimpleDesc]
    rows: list[FusionRow]
    duals: dict
    indicators: dict
    radius: int
    noncommutative_pairs: list = field(default_factory=list)


class FusionRing:
    """Fusion computations over a SimpleIndex, with a pure row memo."""

    def __init__(self, hopf: BicrossedHopf, index: SimpleIndex | None = None):
        self.hopf = hopf
        self.index = index if index is not None else SimpleIndex(hopf)
        self._row_cache: dict = {}
        self._dual_cache: dict = {}

    # -- product decomposition ------------------------------------------------

    def decompose_product(self, d1: SimpleDesc, d2: SimpleDesc, radius: int | None = None) -> FusionRow:
        key = (d1.uid, d2.uid)
        if key in self._row_cache:
            return self._row_cache[key]
        H, index = self.hopf, self.index
        product = H.mul(index.character(d1), index.character(d2))
        candidates: list[SimpleDesc] = []
        for orb in orbit_product(H.ctx, d1.orbit, d2.orbit):
            index.require_in_ball(orb, radius)
            candidates.extend(index.simples_for_orbit(orb))
        coeffs = solve_in_span(
            [index.character(c) for c in candidates],
            product,
            description=f"fusion {d1.uid} * {d2.uid}",
        )
        summands = []
        for c, x in zip(candidates, coeffs):
            if x.is_zero():
                continue
            if not x.is_integer() or x.as_fraction() < 0:
                raise InternalInconsistencyError(
                    f"fusion multiplicity of {c.uid} in {d1.uid} * {d2.uid} "
                    f"is {x.literal()}, not a nonnegative integer"
                )
            summands.append((c.uid, int(x.as_fraction())))
        row = FusionRow(d1.uid, d2.uid, tuple(sorted(summands)))
        total = sum(m * index.find(uid).dim_total for uid, m in row.summands)
        if total != d1.dim_total * d2.dim_total:
            raise InternalInconsistencyError(
                f"dimension check fails for {d1.uid} * {d2.uid}: {total} != "
                f"{d1.dim_total * d2.dim_total}"
            )
        self._row_cache[key] = row
        return row

    # -- duality ---------------------------------------------------------------

    def dual_of(self, d: SimpleDesc) -> SimpleDesc:
        if d.uid in self._dual_cache:
            return self._dual_cache[d.uid]
        H, index = self.hopf, self.index
        target = H.antipode(index.character(d))
        finv = H.F.inv(d.orbit.representative)
        match = None
        for cand in index.simples_for_f(finv):
            if index.character(cand) == target:
                match = cand
                break
        if match is None:
            raise InternalInconsistencyError(
                f"no simple matches the antipode of the character of {d.uid}"
            )
        self._dual_cache[d.uid] = match
        return match

    def is_self_dual(self, d: SimpleDesc) -> bool:
        return self.dual_of(d).uid == d.uid

    # -- Frobenius-Schur -----------------------------------------------------

    def fs_indicator(self, d: SimpleDesc) -> int:
        """nu_2 = <T, m(Delta(chi))>, asserted to land in {-1, 0, 1} and to
        vanish exactly off the self-dual simples."""
        H = self.hopf
        chi = self.index.character(d)
        total = rational(0)
        for key, v in chi.terms.items():
            for (k1, k2), c in H.comul_basis(key):
                prod = H.basis_mul(k1, k2)
                if prod is None:
                    continue
                (g_out, f_out), w = prod
                if f_out == H.F.identity:
                    total = total + v * c * w * rational(H._inv_g_order)
        if not total.is_integer():
            raise InternalInconsistencyError(
                f"indicator of {d.uid} is not an integer: {total.literal()}"
            )
        nu = int(total.as_fraction())
        if nu not in (-1, 0, 1):
            raise InternalInconsistencyError(f"indicator of {d.uid} is {nu}")
        if (nu != 0) != self.is_self_dual(d):
            raise InternalInconsistencyError(
                f"indicator of {d.uid} is {nu} but self-duality is {self.is_self_dual(d)}"
            )
        return nu

    # -- tables and the based-ring laws ---------------------------------------

    def fusion_table(self, radius: int) -> FusionTable:
        simples = self.index.enumerate(radius)
        rows = []
        asym = []
        row_of = {}
        for d1 in simples:
            for d2 in simples:
                # candidates resolve on demand beyond the ball; the radius
                # only selects which simples get rows
                row = self.decompose_product(d1, d2, radius=None)
                rows.append(row)
                row_of[(d1.uid, d2.uid)] = row.summands
        for d1 in simples:
            for d2 in simples:
                if d1.uid < d2.uid and row_of[(d1.uid, d2.uid)] != row_of[(d2.uid, d1.uid)]:
                    asym.append([d1.uid, d2.uid])
        duals = {d.uid: self.dual_of(d).uid for d in simples}
        indicators = {d.uid: self.fs_indicator(d) for d in simples}
        return FusionTable(
            simples=simples,
            rows=rows,
            duals=duals,
            indicators=indicators,
            radius=radius,
            noncommutative_pairs=asym,
        )

    def verify_based_ring(self, table: FusionTable, sample_triples: int = 60) -> dict:
        """Unit laws, the unit-multiplicity/duality pairing, duality as an
        anti-involution, and associativity on sampled triples."""
        unit_uid = self.index.unit_simple().uid
        problems = []
        row_of = {(r.left, r.right): dict(r.summands) for r in table.rows}
        uids = [d.uid for d in table.simples]
        for uid in uids:
            if row_of.get((unit_uid, uid)) != {uid: 1}:
                problems.append({"law": "left unit", "id": uid})
            if row_of.get((uid, unit_uid)) != {uid: 1}:
                problems.append({"law": "right unit", "id": uid})
        for r in table.rows:
            mult = dict(r.summands).get(unit_uid, 0)
            want = 1 if table.duals[r.left] == r.right else 0
            if mult != want:
                problems.append({"law": "unit multiplicity", "left": r.left, "right": r.right})
        for uid in uids:
            if table.duals[table.duals[uid]] != uid:
                problems.append({"law": "duality involution", "id": uid})
        # (x y)* = y* x* at the level of rows; summands may lie outside
        # the tabulated ball, so their duals resolve through the ring
        for r in table.rows:
            dual_sum = sorted(
                (self.dual_of(self.index.find(u)).uid, m) for u, m in r.summands
            )
            other = row_of.get((table.duals[r.right], table.duals[r.left]))
            if other is None or sorted(other.items()) != dual_sum:
                problems.append({"law": "duality antihomomorphism", "left": r.left, "right": r.right})
        # associativity on a deterministic sample of triples
        count = 0
        n = len(uids)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if (a * 7 + b * 3 + c) % max(1, (n * n * n) // sample_triples + 1):
                        continue
                    count += 1
                    da, db, dc = (self.index.find(uids[x]) for x in (a, b, c))
                    lhs: dict = {}
                    for u, m in self.decompose_product(da, db).summands:
                        for u2, m2 in self.decompose_product(self.index.find(u), dc).summands:
                            lhs[u2] = lhs.get(u2, 0) + m * m2
                    rhs: dict = {}
                    for u, m in self.decompose_product(db, dc).summands:
                        for u2, m2 in self.decompose_product(da, self.index.find(u)).summands:
                            rhs[u2] = rhs.get(u2, 0) + m * m2
                    if lhs != rhs:
                        problems.append(
                            {"law": "associativity", "triple": [uids[a], uids[b], uids[c]]}
                        )
        return {
            "ok": not problems,
            "problems": problems[:20],
            "associativity_triples": count,
        }

    # -- smash-product closed forms --------------------------------------------

    def smash_applicable(self) -> bool:
        H = self.hopf
        return (
            H.sigma.is_trivial
            and H.tau.is_trivial
            and H.G.is_abelian()
            and H.ctx.left_action_trivial
        )

    def smash_shortcuts(self, d1: SimpleDesc, d2: SimpleDesc) -> FusionRow | None:
        """Closed-form product rows in the smash case (trivial cocycles,
        abelian G, trivial left action, matching stabilizers).

        Returns None when a hypothesis fails; otherwise the row, verified
        against the generic exact solve."""
        if not self.smash_applicable():
            return None
        H, index = self.hopf, self.index
        G, F, ctx = H.G, H.F, H.ctx
        x = d1.orbit.representative
        y = d2.orbit.representative
        unit_f = F.identity
        x_unit = x == unit_f
        y_unit = y == unit_f

        def match_on(elements, values, orbit) -> SimpleDesc:
            for cand in index.simples_for_orbit(orbit):
                cm = cand.chi.value_map()
                if all(cm[g] == values[g] for g in elements):
                    return cand
            raise InternalInconsistencyError("no stabilizer character matches the product")

        c1 = d1.chi.value_map()
        c2 = d2.chi.value_map()
        if x_unit and y_unit:
            values = {g: c1[g] * c2[g] for g in G.elements()}
            row = [(match_on(tuple(G.elements()), values, d1.orbit).uid, 1)]
        elif x_unit or y_unit:
            dn = d2 if x_unit else d1
            cu, cn = (c1, c2) if x_unit else (c2, c1)
            stab = dn.orbit.stabilizer
            values = {g: cu[g] * cn[g] for g in stab}
            row = [(match_on(stab, values, dn.orbit).uid, 1)]
        else:
            if set(d1.orbit.stabilizer) != set(d2.orbit.stabilizer):
                return None
            stab = d1.orbit.stabilizer
            values = {g: c1[g] * c2[g] for g in stab}
            orbs = orbit_product(ctx, d1.orbit, d2.orbit)
            has_unit = any(o.representative == unit_f for o in orbs)
            # Hypothesis: every product value is hit once, except that the
            # unit element is hit |O_x| times (diagonal transversal pairs).
            expected = sum(o.size for o in orbs if o.representative != unit_f)
            if has_unit:
                expected += d1.orbit.size
            if expected != d1.orbit.size * d2.orbit.size:
                return None
            row = []
            for orb in orbs:
                if orb.representative == unit_f:
                    # the |O_x| G-characters restricting to the product character
                    hits = []
                    for cand in index.simples_for_orbit(orb):
                        cm = cand.chi.value_map()
                        if all(cm[g] == values[g] for g in stab):
                            hits.append((cand.uid, 1))
                    if len(hits) != d1.orbit.size:
                        return None
                    row.extend(hits)
                else:
                    if set(orb.stabilizer) != set(stab):
                        return None
                    row.append((match_on(stab, values, orb).uid, 1))
        shortcut = FusionRow(d1.uid, d2.uid, tuple(sorted(row)))
        generic = self.decompose_product(d1, d2)
        if shortcut.summands != generic.summands:
            raise InternalInconsistencyError(
                f"smash closed form disagrees with the exact solve on {d1.uid} * {d2.uid}"
            )
        return shortcut
