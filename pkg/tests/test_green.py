"""Green instances: cross/act/mul laws, axiom checkers, the three
instances."""

from fractions import Fraction

import pytest

from bisetfun import bisets as bs
from bisetfun import green as gn
from bisetfun import groups as gr
from bisetfun.catalog import BUILTIN, TRIVIAL

B = gn.burnside_functor("int")
M2 = gn.matrix_functor(B, 2)
Bop = gn.opposite_functor(B)


def test_functor_interning():
    assert gn.burnside_functor("int") is B
    assert gn.matrix_functor(B, 2) is M2
    assert gn.opposite_functor(B) is Bop
    assert gn.burnside_functor("rat") is not B


def test_one_and_unit(C2, S3):
    for G in (C2, S3):
        one = B.one(G)
        assert one.payload.terms[0][0] == tuple(range(G.order))
        for a in B.basis(G):
            assert B.mul(one, a) == a == B.mul(a, one)


def test_burnside_mul_example(C2):
    free = B.basis(C2)[0]
    assert B.mul(free, free) == free.scale(2)


def test_mul_matches_marks_pointwise(S3):
    basis = B.basis(S3)
    mk = [bs.marks(b.payload) for b in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            got = bs.marks(B.mul(a, b).payload)
            assert got == [x * y for x, y in zip(mk[i], mk[j])]


def test_cross_of_transitive_sets(C2):
    free = B.basis(C2)[0]
    crossed = B.cross(free, free)
    assert crossed.group is gr.direct_product([C2, C2])
    assert crossed.payload.terms[0][0] == (0,)


def test_cross_unit_identification(C3):
    b = B.basis(C3)[0]
    crossed = B.cross(B.unit(), b)
    moved = B.act(bs.iso_biset(gr.unit_identification(
        gr.direct_product([TRIVIAL, C3]), C3)), crossed)
    assert moved == b


def test_cross_associativity_is_literal(C2, C3):
    a, b, c = B.basis(C2)[0], B.basis(C3)[0], B.basis(C2)[1]
    assert B.cross(B.cross(a, b), c) == B.cross(a, B.cross(b, c))


def test_act_functoriality_small(C2, C3):
    P = gr.pair_group(C2, C3)
    x = bs.element_from_subgroup(C2, C3,
                                 gr.subgroup_classes(P)[0].representative)
    Q = gr.pair_group(C3, C2)
    y = bs.element_from_subgroup(C3, C2,
                                 gr.subgroup_classes(Q)[1].representative)
    for a in B.basis(C3):
        assert B.act(bs.compose(y, x), a) == B.act(y, B.act(x, a))
        assert B.act(bs.identity_element(C3), a) == a


def test_act_requires_matching_group(C2, C3):
    x = bs.identity_element(C2)
    with pytest.raises(gr.GroupError):
        B.act(x, B.one(C3))


def test_frobenius_identity_hom(C2):
    phi = gr.identity_hom(C2)
    for a in B.basis(C2):
        for b in B.basis(C2):
            assert gn.frobenius_check(B, phi, a, b)


def test_frobenius_inclusion_and_projection(S3, C2):
    c2 = next(s for s in gr.all_subgroups(S3) if len(s) == 2)
    Sub, incl = gr.subgroup_as_group(S3, c2)
    for a in B.basis(S3):
        for b in B.basis(Sub):
            assert gn.frobenius_check(B, incl, a, b)
    c3 = next(s for s in gr.all_subgroups(S3) if len(s) == 3)
    Q, proj = gr.quotient(S3, c3)
    for a in B.basis(Q):
        for b in B.basis(S3):
            assert gn.frobenius_check(B, proj, a, b)
    # matrix instance over the same homomorphisms
    for a in M2.basis(Q)[:4]:
        for b in M2.basis(S3)[:4]:
            assert gn.frobenius_check(M2, proj, a, b)


def test_res_is_algebra_hom(S3):
    c3 = next(s for s in gr.all_subgroups(S3) if len(s) == 3)
    _, incl = gr.subgroup_as_group(S3, c3)
    assert gn.res_is_algebra_hom_check(B, incl)
    Q, proj = gr.quotient(S3, c3)
    assert gn.res_is_algebra_hom_check(M2, proj)


def test_initial_morphism_on_burnside_is_identity(S3):
    for x in B.basis(S3):
        assert gn.initial_morphism(B, x.payload) == x


def test_initial_morphism_on_matrix_is_scalar_matrix(C2):
    for x in B.basis(C2):
        e = gn.initial_morphism(M2, x.payload)
        p = e.payload
        assert p[0][0] == x and p[1][1] == x
        assert p[0][1].is_zero() and p[1][0].is_zero()
    assert gn.initial_morphism(M2, B.basis(C2)[-1].payload) == M2.one(C2)


def test_matrix_mul_is_matrix_multiplication(C2):
    a = M2.elementary(C2, 0, 1, B.basis(C2)[0])
    b = M2.elementary(C2, 1, 0, B.basis(C2)[0])
    prod = M2.mul(a, b)
    assert M2.entry(prod, 0, 0) == B.mul(B.basis(C2)[0], B.basis(C2)[0])
    assert M2.entry(prod, 1, 1).is_zero()
    assert M2.mul(b, a) != prod


def test_matrix_act_entrywise(C2, S3):
    c2 = next(s for s in gr.all_subgroups(S3) if len(s) == 2)
    _, incl = gr.subgroup_as_group(S3, c2)
    x = bs.ind_biset(incl)
    m = M2.elementary(incl.source, 0, 1, B.one(incl.source))
    out = M2.act(x, m)
    assert M2.entry(out, 0, 1) == B.act(x, B.one(incl.source))
    assert M2.entry(out, 0, 0).is_zero()


def test_matrix_functor_rejects_zero_size():
    with pytest.raises(gr.GroupError):
        gn.matrix_functor(B, 0)


def test_opposite_reverses_mul_and_is_involutive(S3):
    Bopop = gn.opposite_functor(Bop)
    for a in B.basis(S3)[:3]:
        for b in B.basis(S3)[:3]:
            assert Bop.mul(Bop.wrap(a), Bop.wrap(b)).payload == B.mul(b, a)
            outer = Bopop.mul(Bopop.wrap(Bop.wrap(a)),
                              Bopop.wrap(Bop.wrap(b)))
            assert outer.payload.payload == B.mul(a, b)


def test_opposite_cross_follows_swap_formula(C2, C3):
    a, b = Bop.wrap(B.basis(C2)[0]), Bop.wrap(B.basis(C3)[1])
    lhs = Bop.cross(a, b).payload
    rhs = B.act(bs.iso_biset(gr.swap(C3, C2)),
                B.cross(b.payload, a.payload))
    assert lhs == rhs


def test_matrix_opposite_noncommutativity_witness():
    e12 = M2.elementary(TRIVIAL, 0, 1, B.one(TRIVIAL))
    e21 = M2.elementary(TRIVIAL, 1, 0, B.one(TRIVIAL))
    assert M2.mul(e12, e21) != M2.mul(e21, e12)


def test_commutant_checks(C2, C3):
    witnesses = [(H, b) for H in (C2, C3) for b in B.basis(H)]
    assert gn.commutant_check(B, B.one(C2), witnesses)
    for a in B.basis(C2):
        assert gn.commutant_check(B, a, witnesses)
    off = M2.elementary(TRIVIAL, 0, 1, B.one(TRIVIAL))
    fail_wit = [(TRIVIAL, M2.elementary(TRIVIAL, 1, 0, B.one(TRIVIAL)))]
    assert not gn.commutant_check(M2, off, fail_wit)


def test_coords_roundtrip(S3):
    a = B.basis(S3)[0] + B.basis(S3)[2].scale(-3)
    assert B.from_coords(S3, B.coords(a)) == a
    m = M2.elementary(S3, 1, 0, B.basis(S3)[1])
    assert M2.from_coords(S3, M2.coords(m)) == m
    assert len(M2.coords(m)) == 4 * len(B.coords(a))


def test_act_matrix_shape(C2, C3):
    x = bs.res_biset(gr.projection([C2, C3], 0))  # B(C2xC3, C2)
    mat = B.act_matrix(x)
    assert len(mat) == B.dim(gr.direct_product([C2, C3]))
    assert len(mat[0]) == B.dim(C2)


def test_rational_ring_instances(C2):
    Brat = gn.burnside_functor("rat")
    a = Brat.basis(C2)[0].scale(Fraction(1, 2))
    assert Brat.mul(a, a) == Brat.basis(C2)[0].scale(Fraction(1, 2))
    with pytest.raises(gr.GroupError):
        B.mul(B.basis(C2)[0], Brat.basis(C2)[0])
