"""Biset layer: oracle classification, Mackey composition, marks, units."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as hst

from bisetfun import bisets as bs
from bisetfun import groups as gr
from bisetfun.catalog import BUILTIN, TRIVIAL


def basis_pairs(H, G):
    P = gr.pair_group(H, G)
    return [c.representative for c in gr.subgroup_classes(P)]


def random_element(rng, H, G, span=2):
    subs = basis_pairs(H, G)
    coeffs = {}
    for s in rng.sample(range(len(subs)), k=min(span, len(subs))):
        key = gr.minimal_conjugate(gr.pair_group(H, G), subs[s])
        coeffs[key] = rng.randint(-3, 3)
    return bs.BurnsideElement(H, G, coeffs)


# -- concrete layer ------------------------------------------------------------

def test_classify_regular_biset_is_diagonal_class(C2, S3):
    for G in (C2, S3):
        e = bs.classify(bs.regular_biset(G))
        diag = gr.diagonal(G)
        key = gr.minimal_conjugate(gr.pair_group(G, G), tuple(diag.images))
        assert e.terms == ((key, 1),)


def test_classify_disjoint_union_doubles_coefficient(C2):
    X = bs.transitive_biset(C2, C2, (0,))
    e = bs.classify(bs.disjoint_union(X, X))
    assert e.num_terms() == 1
    assert e.terms[0][1] == 2


def test_classify_rejects_broken_action(C2):
    lt = np.zeros((2, 2), dtype=np.int64)  # left identity moves points
    rt = np.array([[0, 0], [1, 1]])
    X = bs.ConcreteBiset(C2, C2, lt, rt, trusted=False)
    with pytest.raises(gr.GroupError):
        bs.classify(X)


def test_transitive_classify_roundtrip_all_window_pairs(C2, C3, V4):
    for H, G in [(C2, C2), (C2, C3), (V4, C2)]:
        P = gr.pair_group(H, G)
        for cls in gr.subgroup_classes(P):
            X = bs.transitive_biset(H, G, cls.representative)
            assert bs.classify(X).terms == ((cls.key, 1),)


def test_s3_mod_c2_times_s3_biset_matches_mackey(S3):
    # decomposition of a non-transitive concrete biset against the
    # symbolic product route
    c2 = next(s for s in gr.all_subgroups(S3) if len(s) == 2)
    P = gr.pair_group(S3, TRIVIAL)
    left_set = bs.transitive_biset(
        S3, TRIVIAL, gr.minimal_conjugate(P, c2))
    X = bs.external_biset(left_set, bs.regular_biset(S3))
    got = bs.classify(X)
    # same thing symbolically: [S3/C2] x [free (S3,S3)-biset]
    sym = bs.external(bs.classify(left_set),
                      bs.classify(bs.regular_biset(S3)))
    assert got == sym


# -- symbolic layer -------------------------------------------------------------

def test_identity_law_and_mismatch_errors(C2, C3):
    ident = bs.identity_element(C2)
    for rep in basis_pairs(C2, C3):
        a = bs.element_from_subgroup(C2, C3, rep)
        assert bs.compose(ident, a) == a
    with pytest.raises(gr.GroupError):
        bs.compose(a, a)  # middle groups differ (C3 vs C2)


def test_mackey_equals_concrete_oracle_on_c2_pairs(C2):
    reps = basis_pairs(C2, C2)
    count = 0
    for L in reps:
        for M in reps:
            sym = bs.compose(bs.element_from_subgroup(C2, C2, L),
                             bs.element_from_subgroup(C2, C2, M))
            conc = bs.classify(bs.concrete_compose(
                bs.transitive_biset(C2, C2, L),
                bs.transitive_biset(C2, C2, M)))
            assert sym == conc
            count += 1
    assert count == 25


def test_compose_bilinear(C2, C3):
    import random
    rng = random.Random(3)
    a = random_element(rng, C2, C3)
    b = random_element(rng, C2, C3)
    c = random_element(rng, C3, C2)
    lhs = bs.compose(a + b, c)
    assert lhs == bs.compose(a, c) + bs.compose(b, c)
    assert bs.compose(a.scale(2), c) == bs.compose(a, c).scale(2)


def test_concrete_compose_with_regular_biset_is_identity(C3):
    X = bs.transitive_biset(C3, C3, (0,))
    comp = bs.concrete_compose(bs.regular_biset(C3), X)
    assert bs.classify(comp) == bs.classify(X)


def test_concrete_associativity_small():
    import random
    C2, C3 = BUILTIN["C2"], BUILTIN["C3"]
    rng = random.Random(11)
    for _ in range(5):
        L = rng.choice(basis_pairs(C2, C3))
        M = rng.choice(basis_pairs(C3, C2))
        N = rng.choice(basis_pairs(C2, C2))
        X = bs.transitive_biset(C2, C3, L)
        Y = bs.transitive_biset(C3, C2, M)
        Z = bs.transitive_biset(C2, C2, N)
        one = bs.classify(bs.concrete_compose(bs.concrete_compose(X, Y), Z))
        two = bs.classify(bs.concrete_compose(X, bs.concrete_compose(Y, Z)))
        assert one == two


def test_opposite_laws(C2, S3):
    ident = bs.identity_element(S3)
    assert bs.opposite(ident) == ident
    for rep in basis_pairs(S3, C2):
        a = bs.element_from_subgroup(S3, C2, rep)
        assert bs.opposite(bs.opposite(a)) == a
    for L in basis_pairs(C2, S3):
        for M in basis_pairs(S3, C2):
            y = bs.element_from_subgroup(C2, S3, L)
            x = bs.element_from_subgroup(S3, C2, M)
            assert bs.opposite(bs.compose(y, x)) == \
                bs.compose(bs.opposite(x), bs.opposite(y))


def test_external_product_of_one_sided_sets(C2, C3):
    # [G/U] x [H/V] has stabilizer U x V
    U = (0,)
    V = (0, 1, 2)
    a = bs.element_from_subgroup(C2, TRIVIAL, U)
    b = bs.element_from_subgroup(C3, TRIVIAL, V)
    e = bs.external(a, b)
    P = gr.pair_group(gr.direct_product([C2, C3]),
                      gr.direct_product([TRIVIAL, TRIVIAL]))
    expected = gr.minimal_conjugate(
        P, tuple(sorted(u * 3 + v for u in U for v in V)))
    assert e.terms == ((expected, 1),)


def test_arrow_roundtrip_and_identity(C2, C3):
    for rep in basis_pairs(C2, C3):
        a = bs.element_from_subgroup(C2, C3, rep)
        assert bs.arrow_inverse(bs.arrow(a), C2, C3) == a
    ar = bs.arrow(bs.identity_element(C3))
    diag_key = gr.minimal_conjugate(gr.pair_group(C3, C3),
                                    tuple(gr.diagonal(C3).images))
    assert ar.terms == ((diag_key, 1),)
    assert ar.left is gr.direct_product([C3, C3])
    assert ar.right is TRIVIAL


def test_standard_bisets(S3, C2):
    c3 = next(s for s in gr.all_subgroups(S3) if len(s) == 3)
    Q, proj = gr.quotient(S3, c3)
    ind = bs.ind_biset(proj)
    res = bs.res_biset(proj)
    # collapse-then-lift along a surjection is the identity downstairs
    assert bs.compose(ind, res) == bs.identity_element(Q)
    assert bs.opposite(ind) == res
    assert bs.iso_biset(gr.identity_hom(S3)) == bs.identity_element(S3)
    with pytest.raises(gr.GroupError):
        incl = gr.subgroup_as_group(S3, c3)[1]
        bs.iso_biset(incl)


def test_right_arrow_is_arrow_of_identity(S3):
    lhs = bs.arrow(bs.identity_element(S3))
    rhs = bs.compose(bs.right_arrow(S3), bs.identity_element(TRIVIAL))
    assert lhs == rhs


def test_ring_handling(C2):
    a = bs.element_from_subgroup(C2, TRIVIAL, (0,), ring="int")
    b = bs.convert_ring(a, "rat")
    assert b.ring == "rat"
    with pytest.raises(bs.RingError):
        a + b
    half = b.scale(Fraction(1, 2))
    with pytest.raises(bs.RingError):
        bs.convert_ring(half, "int")
    with pytest.raises(bs.RingError):
        a.scale(Fraction(1, 2))


# -- marks and units -------------------------------------------------------------

def test_marks_examples(C2, S3):
    free = bs.element_from_subgroup(C2, TRIVIAL, (0,))
    whole = bs.element_from_subgroup(C2, TRIVIAL, (0, 1))
    assert bs.marks(free) == [2, 0]
    assert bs.marks(whole) == [1, 1]
    whole_s3 = bs.element_from_subgroup(S3, TRIVIAL, tuple(range(6)))
    assert bs.marks(whole_s3) == [1, 1, 1, 1]


def test_table_of_marks_s3_triangular(S3):
    tom = bs.table_of_marks(S3)
    assert tom == [[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]


def test_marks_is_injective_on_random_elements(C2):
    import random
    rng = random.Random(5)
    for _ in range(10):
        a = random_element(rng, C2, TRIVIAL)
        b = random_element(rng, C2, TRIVIAL)
        if bs.marks(a) == bs.marks(b):
            assert a == b


def test_burnside_units_golden(C2):
    units = bs.burnside_units(C2)
    assert len(units) == 4
    ghost = bs.element_from_subgroup(C2, TRIVIAL, (0,)) - \
        bs.element_from_subgroup(C2, TRIVIAL, (0, 1))
    assert ghost in units
    for u in units:
        assert all(abs(m) == 1 for m in bs.marks(u))


def test_burnside_units_trivial_group():
    units = bs.burnside_units(TRIVIAL)
    one = bs.identity_element(TRIVIAL)
    assert len(units) == 2
    assert one in units and one.scale(-1) in units


@given(hst.sampled_from(["C2", "C3", "C4", "V4", "S3"]), hst.data())
def test_marks_additive(name, data):
    import random
    G = BUILTIN[name]
    seed = data.draw(hst.integers(min_value=0, max_value=10 ** 6))
    rng = random.Random(seed)
    a = random_element(rng, G, TRIVIAL)
    b = random_element(rng, G, TRIVIAL)
    ma, mb = bs.marks(a), bs.marks(b)
    assert bs.marks(a + b) == [x + y for x, y in zip(ma, mb)]


def test_element_json_roundtrip(S3, C2):
    a = bs.element_from_subgroup(S3, C2, (0,)) + \
        bs.element_from_subgroup(
            S3, C2, gr.subgroup_classes(gr.pair_group(S3, C2))[3].key
        ).scale(-2)
    data = bs.element_to_json(a)
    back = bs.element_from_json(data, {"S3": S3, "C2": C2})
    assert back == a
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
