from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicrossed.errors import ConfigError
from bicrossed.groups import FiniteF, FreeAbelianF, cyclic_group, f_ball, permutation_group
from bicrossed.matched_pair import (
    LinearAction,
    MatchedPairCtx,
    TableActions,
    g_f_finv,
    orbit_product,
    verify_matched_pair,
)


def make_h_z_z2():
    G = cyclic_group(2)
    F = FreeAbelianF(1)
    return MatchedPairCtx(G, F, LinearAction(matrices=(((1,),), ((-1,),))))


def make_conjugation(G):
    n = G.order
    right = tuple(tuple(G.mul(G.mul(g, f), G.inv(g)) for f in range(n)) for g in range(n))
    left = tuple(tuple(g for _ in range(n)) for g in range(n))
    return MatchedPairCtx(G, FiniteF(G), TableActions(right=right, left=left))


def make_z_poly(p):
    G = cyclic_group(p)
    F = FreeAbelianF(p)
    shift = tuple(
        tuple(1 if i == (j + 1) % p else 0 for j in range(p)) for i in range(p)
    )

    def matpow(k):
        M = tuple(tuple(1 if i == j else 0 for j in range(p)) for i in range(p))
        for _ in range(k):
            M = tuple(
                tuple(sum(shift[i][t] * M[t][j] for t in range(p)) for j in range(p))
                for i in range(p)
            )
        return M

    return MatchedPairCtx(G, F, LinearAction(matrices=tuple(matpow(k) for k in range(p))))


def test_actions_h_z_z2():
    ctx = make_h_z_z2()
    assert ctx.act_right(1, (5,)) == (-5,)
    assert ctx.act_right(0, (7,)) == (7,)
    assert ctx.act_left(1, (5,)) == 1


def test_actions_z_poly():
    ctx = make_z_poly(3)
    assert ctx.act_right(1, (1, 2, 3)) == (3, 1, 2)
    assert ctx.act_right(2, (1, 2, 3)) == (2, 3, 1)
    assert ctx.act_left(2, (1, 2, 3)) == 2


def test_verify_matched_pair_pass():
    assert verify_matched_pair(make_h_z_z2(), 3).ok
    S3 = permutation_group([(1, 0, 2), (1, 2, 0)])
    assert verify_matched_pair(make_conjugation(S3), 0).ok
    assert verify_matched_pair(make_z_poly(3), 2).ok


def test_verify_matched_pair_linear_scope_global():
    rep = verify_matched_pair(make_z_poly(3), 2)
    assert any("global" in c.scope for c in rep.checks)


def test_verify_matched_pair_fail_lists_witnesses():
    # right action table that is not a homomorphic action
    Z2 = cyclic_group(2)
    F = FiniteF(cyclic_group(4))
    right = ((0, 1, 2, 3), (0, 3, 1, 2))  # g acts by a 3-cycle: not an involution
    left = ((0, 0, 0, 0), (1, 1, 1, 1))
    ctx = MatchedPairCtx(Z2, F, TableActions(right=right, left=left))
    rep = verify_matched_pair(ctx, 0)
    assert not rep.ok
    bad = [c for c in rep.checks if c.violations]
    assert bad and all(isinstance(v, dict) for c in bad for v in c.violations)


def test_linear_action_rejects_non_invertible():
    G = cyclic_group(2)
    F = FreeAbelianF(1)
    with pytest.raises(ConfigError):
        MatchedPairCtx(G, F, LinearAction(matrices=(((1,),), ((2,),))))


def test_orbit_h_z_z2():
    ctx = make_h_z_z2()
    orb = ctx.orbit_of((1,))
    assert orb.representative == (-1,)
    assert orb.elements == ((-1,), (1,))
    assert orb.stabilizer == (0,)
    assert orb.transversal == (0, 1)
    orb0 = ctx.orbit_of((0,))
    assert orb0.elements == ((0,),)
    assert orb0.stabilizer == (0, 1)
    assert orb0.transversal == (0,)


def test_orbit_z_poly_constant_is_fixed():
    ctx = make_z_poly(3)
    orb = ctx.orbit_of((2, 2, 2))
    assert orb.size == 1
    assert len(orb.stabilizer) == 3
    orb2 = ctx.orbit_of((1, 0, 0))
    assert orb2.size == 3
    assert orb2.stabilizer == (0,)


def test_orbit_invariants():
    ctx = make_conjugation(permutation_group([(1, 0, 2), (1, 2, 0)]))
    for f in range(6):
        orb = ctx.orbit_of(f)
        assert orb.size * len(orb.stabilizer) == 6
        assert len(orb.transversal) == orb.size
        assert orb.transversal[0] == ctx.G.identity
        # z -> z^-1 > f is a bijection from the transversal onto the orbit
        rep = orb.representative
        image = {ctx.act_right(ctx.G.inv(z), rep) for z in orb.transversal}
        assert image == set(orb.elements)
        # coset decomposition is exact
        for x in ctx.G.elements():
            h, z = orb.coset_map[x]
            assert h in set(orb.stabilizer)
            assert ctx.G.mul(h, z) == x


def test_g_f_finv():
    ctx = make_h_z_z2()
    assert g_f_finv(ctx, (1,)) == (1,)
    assert g_f_finv(ctx, (0,)) == (0, 1)
    S3 = permutation_group([(1, 0, 2), (1, 2, 0)])
    ctx2 = make_conjugation(S3)
    # a transposition conjugates a 3-cycle to its inverse
    three_cycle = next(f for f in range(6) if S3.element_order(f) == 3)
    assert g_f_finv(ctx2, three_cycle)


def test_g_f_finv_equivalences():
    # nonempty iff f^-1 in O_f iff every orbit member has its inverse there
    for ctx, fs in [
        (make_h_z_z2(), [(j,) for j in range(-3, 4)]),
        (make_z_poly(3), [(1, 0, 0), (1, 2, 0), (2, 2, 2), (1, -1, 0)]),
    ]:
        for f in fs:
            orb = ctx.orbit_of(f)
            nonempty = bool(g_f_finv(ctx, f))
            finv_in = ctx.F.inv(f) in set(orb.elements)
            all_in = all(ctx.F.inv(x) in set(orb.elements) for x in orb.elements)
            assert nonempty == finv_in == all_in


def test_orbit_product_examples():
    ctx = make_h_z_z2()
    o1 = ctx.orbit_of((1,))
    o2 = ctx.orbit_of((2,))
    o0 = ctx.orbit_of((0,))
    assert [o.representative for o in orbit_product(ctx, o1, o1)] == [(0,), (-2,)]
    assert [o.representative for o in orbit_product(ctx, o1, o2)] == [(-1,), (-3,)]
    assert [o.representative for o in orbit_product(ctx, o1, o0)] == [(-1,)]


@given(st.integers(min_value=-3, max_value=3), st.integers(min_value=-3, max_value=3))
def test_orbit_product_partition(j, k):
    ctx = make_h_z_z2()
    o1, o2 = ctx.orbit_of((j,)), ctx.orbit_of((k,))
    prods = {ctx.F.mul(x, y) for x in o1.elements for y in o2.elements}
    orbs = orbit_product(ctx, o1, o2)
    union = set()
    for o in orbs:
        assert not (union & set(o.elements))
        union |= set(o.elements)
    assert union == prods


def test_inverse_lemma_identities():
    ctx = make_z_poly(3)
    ball = f_ball(ctx.F, 1)
    G, F = ctx.G, ctx.F
    for g in G.elements():
        for f in ball:
            assert ctx.act_right(G.identity, f) == f
            assert ctx.act_right(g, F.identity) == F.identity
            assert ctx.act_left(g, F.identity) == g
            assert F.inv(ctx.act_right(g, f)) == ctx.act_right(ctx.act_left(g, f), F.inv(f))
            assert G.inv(ctx.act_left(g, f)) == ctx.act_left(G.inv(g), ctx.act_right(g, f))
