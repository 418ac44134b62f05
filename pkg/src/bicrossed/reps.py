"""Irreducible characters of the (possibly twisted) stabilizer groups.

Three providers build CharTables: a direct construction for abelian
groups via invariant factors, a Burnside-Dixon computation over F_p with
exact lifting to Q(zeta_exp) for the general case, and a parser/verifier
for user-supplied tables.  Twisted tables reduce to ordinary ones of a
central extension by the group generated by the cocycle values.

Whatever the search path, every table is verified exactly before it is
returned: dimension sum, linear independence, and (untwisted) the two
orthogonality relations.  The verification is the correctness contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .cyclotomic import CycNum, rational, root_of_unity
from .errors import ConfigError, InternalInconsistencyError
from .groups import (
    FiniteGroup,
    abelian_invariants,
    conjugacy_classes,
    finite_group,
    subgroup_of,
)

MAX_EXTENSION_ORDER = 256


@dataclass(frozen=True)
class TwistedChar:
    """A character of a (twisted) group algebra of a subgroup of G.

    values maps parent G-indices to exact scalars; dim is the value at
    the identity, always a positive rational integer.
    """

    elements: tuple[int, ...]
    values: tuple[CycNum, ...]
    dim: int

    def value(self, g: int) -> CycNum:
        return self.values[self.elements.index(g)]

    def value_map(self) -> dict:
        return dict(zip(self.elements, self.values))

    def sort_key(self):
        return (self.dim, tuple(v.literal() for v in self.values))

    def restrict(self, sub_elements) -> "TwistedChar":
        sub = tuple(sorted(sub_elements))
        vals = tuple(self.value(g) for g in sub)
        return TwistedChar(sub, vals, self.dim)


@dataclass(frozen=True)
class CharTable:
    chars: tuple[TwistedChar, ...]
    provenance: str

    def __len__(self):
        return len(self.chars)


def _sorted_table(chars, provenance: str) -> CharTable:
    return CharTable(tuple(sorted(chars, key=lambda c: c.sort_key())), provenance)


# --------------------------------------------------------------------------
# Abelian provider
# --------------------------------------------------------------------------


def abelian_char_table(group: FiniteGroup, to_parent=None) -> CharTable:
    """All |A| linear characters from an invariant-factor decomposition."""
    if not group.is_abelian():
        raise ConfigError("abelian character table requested for a non-abelian group")
    factors, gens = abelian_invariants(group)
    n = group.order
    parent = tuple(to_parent) if to_parent is not None else tuple(range(n))
    # Exponent vector of every element in the chosen generators.
    exps = {group.identity: (0,) * len(gens)}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            ex = exps[x]
            for i, g in enumerate(gens):
                y = group.mul(x, g)
                if y not in exps:
                    ey = list(ex)
                    ey[i] = (ey[i] + 1) % factors[i]
                    exps[y] = tuple(ey)
                    nxt.append(y)
        frontier = nxt
    if len(exps) != n:
        raise InternalInconsistencyError("invariant-factor generators do not generate")
    chars = []
    ks = [()]
    for d in factors:
        ks = [k + (j,) for k in ks for j in range(d)]
    for k in ks:
        vals = [None] * n
        for x, ex in exps.items():
            v = rational(1)
            for d, ki, ei in zip(factors, k, ex):
                if (ki * ei) % d:
                    v = v * root_of_unity(ki * ei, d)
            vals[x] = v
        pairs = sorted(zip(parent, vals))
        chars.append(TwistedChar(tuple(p for p, _ in pairs), tuple(v for _, v in pairs), 1))
    table = _sorted_table(chars, "abelian-direct")
    verify_char_table(group, table, to_parent=parent, twisted=False)
    return table


# --------------------------------------------------------------------------
# Burnside-Dixon provider
# --------------------------------------------------------------------------


def _find_dixon_prime(order: int, exponent: int) -> int:
    p = max(2 * isqrt(order) + 1, exponent + 1, 3)
    while True:
        if p % exponent == 1 and all(p % q for q in range(2, isqrt(p) + 1)):
            return p
        p += 1


def _primitive_root(p: int) -> int:
    factors = []
    m = p - 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            factors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InternalInconsistencyError("no primitive root found")


def _matmul_fp(A, B, p):
    n, m, k = len(A), len(B[0]), len(B)
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] = (row[j] + a * Bt[j]) % p
    return out

def _nullspace_fp(A, p):
    """Basis of the right nullspace of A over F_p (rows of the result)."""
    n = len(A)
    m = len(A[0]) if n else 0
    rows = [row[:] for row in A]
    pivots = {}
    rank = 0
    for col in range(m):
        piv = None
        for r in range(rank, n):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        pivots[col] = rank
        rank += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * m
        vec[fc] = 1
        for col, r in pivots.items():
            vec[col] = (-rows[r][fc]) % p
        basis.append(vec)
    return basis


def _solve_fp(B, rhs_list, p):
    """Solve B x = rhs for each rhs (columns); B has full column rank."""
    n = len(B)
    m = len(B[0])
    k = len(rhs_list)
    aug = [[B[i][j] for j in range(m)] + [rhs[i] for rhs in rhs_list] for i in range(n)]
    rank = 0
    pivots = []
    for col in range(m):
        piv = None
        for r in range(rank, n):
            if aug[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], p - 2, p)
        aug[rank] = [(x * inv) % p for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(a - f * b) % p for a, b in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    if rank < m:
        raise InternalInconsistencyError("dependent basis in F_p solve")
    sols = [[0] * m for _ in range(k)]
    for r, col in enumerate(pivots):
        for t in range(k):
            sols[t][col] = aug[r][m + t]
    return sols


def _class_matrices(G: FiniteGroup, classes):
    """M_i with (M_i)[j][k] = #{(x,y) in C_i x C_j : xy = rep_k}."""
    r = len(classes)
    class_of = {}
    for idx, cls in enumerate(classes):
        for g in cls:
            class_of[g] = idx
    reps = [cls[0] for cls in classes]
    mats = []
    for i in range(r):
        M = [[0] * r for _ in range(r)]
        for k, z in enumerate(reps):
            for x in classes[i]:
                y = G.mul(G.inv(x), z)
                j = class_of[y]
                M[j][k] += 1
        mats.append(M)
    return mats, class_of, reps


def dixon_char_table(G: FiniteGroup, to_parent=None) -> CharTable:
    """Ordinary irreducible characters over Q(zeta_exp(G)), Burnside-Dixon.

    Common eigenvectors of the class multiplication matrices over F_p
    give the central characters; degrees come from the orthogonality
    normalization, and values lift exactly through eigenvalue-multiplicity
    recovery (a discrete Fourier inversion over F_p).
    """
    classes = conjugacy_classes(G)
    r = len(classes)
    e = G.exponent()
    p = _find_dixon_prime(G.order, e)
    mats, class_of, reps = _class_matrices(G, classes)

    # Split into common eigenspaces of all class matrices.  Blocks stay
    # whole until an eigen-decomposition of some restriction separates
    # them; the class matrices commute, so every block is invariant.
    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    for M in mats[1:]:
        if all(len(S) == 1 for S in spaces):
            break
        new_spaces = []
        for S in spaces:
            d = len(S)
            if d == 1:
                new_spaces.append(S)
                continue
            # Restriction A of M to span(S): column j solves St a = M b_j,
            # where the b_j (rows of S) are the block basis.
            St = [[S[j][i] for j in range(d)] for i in range(r)]
            MSt = _matmul_fp(M, St, p)
            rhs_cols = [[MSt[i][j] for i in range(r)] for j in range(d)]
            A_cols = _solve_fp(St, rhs_cols, p)
            A = [[A_cols[j][i] for j in range(d)] for i in range(d)]
            found = 0
            for lam in range(p):
                B = [[(A[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
                null = _nullspace_fp(B, p)
                if null:
                    block = []
                    for vec in null:
                        w = [0] * r
                        for t, c in enumerate(vec):
                            if c:
                                for i in range(r):
                                    w[i] = (w[i] + c * S[t][i]) % p
                        block.append(w)
                    new_spaces.append(block)
                    found += len(null)
                    if found == d:
                        break
            if found != d:
                raise InternalInconsistencyError(
                    "class-matrix restriction not diagonalizable over F_p"
                )
        spaces = new_spaces
    if any(len(S) > 1 for S in spaces) or len(spaces) != r:
        raise InternalInconsistencyError("class matrices failed to separate characters")

    omegas = []
    ident_class = class_of[G.identity]
    for S in spaces:
        v = S[0]
        if v[ident_class] % p == 0:
            raise InternalInconsistencyError("eigenvector vanishes at the identity class")
        inv = pow(v[ident_class], p - 2, p)
        omegas.append([(x * inv) % p for x in v])

    inv_class = [class_of[G.inv(reps[k])] for k in range(r)]
    class_sizes = [len(c) for c in classes]
    chars_fp = []
    for om in omegas:
        s = 0
        for k in range(r):
            s = (s + om[k] * om[inv_class[k]] * pow(class_sizes[k], p - 2, p)) % p
        if s == 0:
            raise InternalInconsistencyError("degenerate norm in Dixon normalization")
        chi1_sq = (G.order * pow(s, p - 2, p)) % p
        chi1 = None
        for cand in range(1, p):
            if cand * cand % p == chi1_sq:
                chi1 = min(cand, p - cand)
                break
        if chi1 is None:
            raise InternalInconsistencyError("character degree is not a square mod p")
        row = [(om[k] * chi1 * pow(class_sizes[k], p - 2, p)) % p for k in range(r)]
        chars_fp.append((chi1, row))

    # Exact lift. chi(g) = sum_t mu_t zeta_e^t with mu_t the multiplicity
    # of the eigenvalue zeta_e^t; mu_t < p recovers exactly.
    omega = pow(_primitive_root(p), (p - 1) // e, p)
    power_class = {}
    for k in range(r):
        g = reps[k]
        cur = G.identity
        lst = []
        for _a in range(e):
            lst.append(class_of[cur])
            cur = G.mul(cur, g)
        power_class[k] = lst
    e_inv = pow(e, p - 2, p)
    n = G.order
    parent = tuple(to_parent) if to_parent is not None else tuple(range(n))
    chars = []
    for chi1, row in chars_fp:
        values_by_class = []
        for k in range(r):
            val = rational(0)
            for t in range(e):
                mu = 0
                wat = pow(omega, (-t) % (p - 1), p)
                acc = 1
                for a in range(e):
                    mu = (mu + row[power_class[k][a]] * acc) % p
                    acc = (acc * wat) % p
                mu = (mu * e_inv) % p  # true multiplicity: 0 <= mu <= dim < p
                if mu:
                    val = val + rational(mu) * root_of_unity(t, e)
            values_by_class.append(val)
        vals = [None] * n
        for k, cls in enumerate(classes):
            for g in cls:
                vals[g] = values_by_class[k]
        pairs = sorted(zip(parent, range(n)))
        chars.append(
            TwistedChar(
                tuple(pid for pid, _gi in pairs),
                tuple(vals[gi] for _pid, gi in pairs),
                chi1,
            )
        )
    table = _sorted_table(chars, "burnside-dixon")
    verify_char_table(G, table, to_parent=parent, twisted=False)
    return table


# --------------------------------------------------------------------------
# Verification and front-end providers
# --------------------------------------------------------------------------


def verify_char_table(group: FiniteGroup, table: CharTable, to_parent=None, twisted: bool = False):
    """Exact postconditions: dimension sum, linear independence and, for
    untwisted tables, the row orthogonality relations."""
    n = group.order
    parent = tuple(to_parent) if to_parent is not None else tuple(range(n))
    total = sum(c.dim * c.dim for c in table.chars)
    if total != n:
        raise InternalInconsistencyError(
            f"dimension sum {total} != group order {n} ({table.provenance})"
        )
    # Value matrix indexed by subgroup element, computed once.
    rows = []
    for c in table.chars:
        vmap = c.value_map()
        rows.append([vmap[parent[g]] for g in range(n)])
    for c, row in zip(table.chars, rows):
        if row[group.identity] != rational(c.dim):
            raise InternalInconsistencyError("character value at identity differs from dim")
    if _cyc_rank([list(r) for r in rows]) != len(table.chars):
        raise InternalInconsistencyError("characters are linearly dependent")
    if not twisted:
        inv_g = [group.inv(g) for g in range(n)]
        for i, ri in enumerate(rows):
            for j, rj in enumerate(rows):
                s = rational(0)
                for g in range(n):
                    s = s + ri[g] * rj[inv_g[g]]
                expect = rational(n if i == j else 0)
                if s != expect:
                    raise InternalInconsistencyError(
                        f"orthogonality fails for characters {i},{j} ({table.provenance})"
                    )


def _cyc_rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for rr in range(len(rows)):
            if rr != rank and not rows[rr][col].is_zero():
                f = rows[rr][col]
                rows[rr] = [a - f * b for a, b in zip(rows[rr], rows[rank])]
        rank += 1
    return rank


def ordinary_char_table(G: FiniteGroup, to_parent=None) -> CharTable:
    if G.is_abelian():
        return abelian_char_table(G, to_parent)
    return dixon_char_table(G, to_parent)


@dataclass(frozen=True)
class CentralExtension:
    """The subgroup extended by the cyclic group the cocycle values
    generate: elements (a, j) with (a, j)(b, l) = (ab, j + l + ind(a, b))
    where beta(a, b) = zeta_m^ind(a, b).  Index of (a, j) is a*m + j;
    the section {(1_G, j)} is central of order m and the quotient by it
    is the original subgroup.
    """

    group: FiniteGroup
    m: int
    sub_order: int

    def index_of(self, a: int, j: int) -> int:
        return a * self.m + j


def central_extension(sub: FiniteGroup, beta, to_parent) -> CentralExtension:
    """Build the extension of sub by the values of beta (parent-indexed)."""
    orders = []
    for v in beta.values.values():
        o = v.root_of_unity_order()
        if o is None:
            raise ConfigError("twisted character tables need root-of-unity cocycle values")
        orders.append(o)
    m = 1
    for o in orders:
        m = m // gcd(m, o) * o
    ns = sub.order
    if m * ns > MAX_EXTENSION_ORDER:
        raise ConfigError(
            f"central extension order {m * ns} exceeds {MAX_EXTENSION_ORDER}; "
            "supply the table via user_char_table"
        )
    powers = [root_of_unity(t, m) for t in range(m)]

    def dlog(v: CycNum) -> int:
        for t, w in enumerate(powers):
            if v == w:
                return t
        raise ConfigError("cocycle value is not a power of zeta_m")

    ind = {}
    for i, a in enumerate(to_parent):
        for j, b in enumerate(to_parent):
            ind[(i, j)] = dlog(beta.eval(a, b))
    order = m * ns
    rows = []
    for x in range(order):
        a, j = divmod(x, m)
        row = []
        for y in range(order):
            b, l = divmod(y, m)
            ab = sub.mul(a, b)
            row.append(ab * m + (j + l + ind[(a, b)]) % m)
        rows.append(row)
    ext = finite_group(
        rows,
        name=f"{sub.name}~beta",
        max_order=MAX_EXTENSION_ORDER,
        check_associativity=order <= 64,
    )
    return CentralExtension(group=ext, m=m, sub_order=ns)


def twisted_char_table(G: FiniteGroup, elements, beta) -> CharTable:
    """Characters of the beta-twisted group algebra of the subgroup.

    elements are parent G-indices of the subgroup, beta a verified
    2-cocycle on them with root-of-unity values.  Reduces to ordinary
    characters of the central extension by <zeta_m>, keeping those where
    the central generator acts by zeta_m itself, restricted back to the
    (a, 0) section.
    """
    sub, to_parent = subgroup_of(G, elements)
    if beta.is_trivial:
        return ordinary_char_table(sub, to_parent)
    extension = central_extension(sub, beta, to_parent)
    ext, m, ns = extension.group, extension.m, extension.sub_order
    ext_table = ordinary_char_table(ext)
    central = extension.index_of(sub.identity, 1)  # (1_G, 1)
    zeta_m = root_of_unity(1, m)
    kept = []
    for c in ext_table.chars:
        if c.value(central) == rational(c.dim) * zeta_m:
            vals = {to_parent[a]: c.value(extension.index_of(a, 0)) for a in range(ns)}
            elems = tuple(sorted(vals))
            kept.append(TwistedChar(elems, tuple(vals[g] for g in elems), c.dim))
    table = _sorted_table(kept, "central-extension")
    total = sum(c.dim * c.dim for c in table.chars)
    if total != ns:
        raise InternalInconsistencyError(
            f"twisted table dimension sum {total} != |G_f| {ns}"
        )
    rows_vals = [[c.value(g) for g in c.elements] for c in table.chars]
    if _cyc_rank(rows_vals) != len(table.chars):
        raise InternalInconsistencyError("twisted characters are linearly dependent")
    return table


def user_char_table(G: FiniteGroup, elements, data, twisted: bool = False) -> CharTable:
    """Accept an externally supplied character table after verification.

    data is a JSON-style list of {"dim": int, "values": {element index:
    scalar}} rows; scalars may be CycNum, integers, or cyclotomic literal
    strings such as "1/2 + z^3@8".  The table is rejected with a precise
    reason unless the dimension sum, linear independence and (untwisted)
    orthogonality all verify.
    """
    elems = tuple(sorted(int(x) for x in elements))
    chars = []
    for row in data:
        dim = int(row["dim"])
        if dim < 1:
            raise ConfigError("character dimension must be positive")
        values = row["values"]
        vals = []
        for g in elems:
            if g not in values and str(g) not in values:
                raise ConfigError(f"missing character value at element {g}")
            v = values.get(g, values.get(str(g)))
            if not isinstance(v, CycNum):
                if isinstance(v, str):
                    from .config import parse_scalar

                    v = parse_scalar(v)
                else:
                    v = rational(v)
            vals.append(v)
        chars.append(TwistedChar(elems, tuple(vals), dim))
    table = _sorted_table(chars, "user-supplied")
    sub, to_parent = subgroup_of(G, elems)
    verify_char_table(sub, table, to_parent=to_parent, twisted=twisted)
    return table
