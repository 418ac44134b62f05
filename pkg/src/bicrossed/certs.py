"""Exact linear-algebra certifications over Q(zeta_N).

These back the counting and independence claims used elsewhere: rank by
exact Gaussian elimination on finite supports, exact solves against an
independent candidate set, direct-sum bookkeeping of the coefficient
subcoalgebras, and the per-orbit dimension audit.  No numeric fallback
is permitted in this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import rational
from .errors import InternalInconsistencyError
from .groups import f_ball
from .hopf import HElem


@dataclass
class LinearCert:
    description: str
    rows: int
    cols: int
    rank: int
    ok: bool
    details: dict | None = None

    def to_payload(self) -> dict:
        return {
            "description": self.description,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "ok": self.ok,
            "details": self.details or {},
        }


def _sorted_support(vectors, key_order=None):
    keys = set()
    for v in vectors:
        keys |= v.support()
    if key_order is None:
        return sorted(keys)
    return sorted(keys, key=key_order)


def exact_rank(vectors, description: str = "exact rank", key_order=None) -> LinearCert:
    """Rank of a list of H-elements by exact elimination."""
    vectors = list(vectors)
    keys = _sorted_support(vectors, key_order)
    pos = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [rational(0)] * len(keys)
        for k, c in v.terms.items():
            row[pos[k]] = c
        rows.append(row)
    rank = _eliminate(rows)
    return LinearCert(description, len(vectors), len(keys), rank, ok=True)


def _eliminate(rows) -> int:
    """In-place row echelon; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_in_span(basis, target: HElem, description: str = "solve"):
    """Solve sum_i c_i b_i = target exactly.

    The basis vectors must be linearly independent; raises
    InternalInconsistencyError when the system is inconsistent (nonzero
    residual) or the basis is dependent.  Returns the coefficient list.
    """
    basis = list(basis)
    keys = _sorted_support(list(basis) + [target])
    pos = {k: i for i, k in enumerate(keys)}
    n = len(basis)
    rows = []
    for k in keys:
        row = [b.coeff(k) for b in basis]
        row.append(target.coeff(k))
        rows.append(row)
    # Eliminate on the first n columns of the augmented matrix.
    rank = 0
    pivots = []
    for col in range(n):
        pivot = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    if rank < n:
        raise InternalInconsistencyError(f"{description}: candidate set is linearly dependent")
    for r in range(rank, len(rows)):
        if not rows[r][n].is_zero():
            raise InternalInconsistencyError(f"{description}: nonzero residual")
    coeffs = [rational(0)] * n
    for r, col in enumerate(pivots):
        coeffs[col] = rows[r][n]
    return coeffs


def direct_sum_check(hopf, index, radius: int) -> LinearCert:
    """The coefficient coalgebras of distinct orbits in the ball have
    pairwise disjoint basis support; for finite F they exhaust the basis.

    Disjoint sets of basis keys are automatically jointly independent, so
    the certificate records supports and, in the finite case, coverage.
    """
    from .comodules import cf_subcoalgebra

    ctx = hopf.ctx
    orbits = index.orbits_in_ball(radius)
    seen: dict = {}
    blocks = []
    ok = True
    details: dict = {"blocks": blocks}
    for orb in orbits:
        basis = cf_subcoalgebra(ctx, orb)
        blocks.append(
            {
                "orbit": ctx.F.label(orb.representative),
                "dimension": basis.dimension,
            }
        )
        for key in basis.keys:
            if key in seen:
                ok = False
                details["overlap"] = {
                    "key": [key[0], ctx.F.label(key[1])],
                    "orbits": [ctx.F.label(seen[key]), ctx.F.label(orb.representative)],
                }
            seen[key] = orb.representative
    total = len(seen)
    if ctx.F.is_finite:
        full = ctx.G.order * ctx.F.group.order
        details["covers_full_basis"] = total == full
        if total != full:
            ok = False
    else:
        ball_keys = {(g, f) for f in f_ball(ctx.F, radius) for g in ctx.G.elements()}
        details["covers_ball"] = ball_keys <= set(seen)
    return LinearCert(
        "direct sum of coefficient subcoalgebras",
        rows=len(orbits),
        cols=total,
        rank=total,
        ok=ok,
        details=details,
    )


def dimension_audit(hopf, index, radius: int) -> dict:
    """Per orbit: sum of dim_total^2 equals |G| * |O_f| exactly."""
    ctx = hopf.ctx
    rows = []
    ok = True
    for orb in index.orbits_in_ball(radius):
        simples = index.simples_for_orbit(orb)
        lhs = sum(d.dim_total**2 for d in simples)
        rhs = ctx.G.order * orb.size
        good = lhs == rhs
        ok = ok and good
        rows.append(
            {
                "orbit": ctx.F.label(orb.representative),
                "orbit_size": orb.size,
                "sum_dim_sq": lhs,
                "expected": rhs,
                "ok": good,
            }
        )
    return {"ok": ok, "rows": rows}
