"""Concrete bisets and exact Burnside bimodule arithmetic.

Two layers live here.  `ConcreteBiset` is the brute-force layer: explicit
finite sets with verified commuting left/right actions, decomposed into
transitive classes by `classify` (orbits and point stabilizers).  It is the
independent oracle for everything symbolic.

`BurnsideElement` is the symbolic layer: a sparse exact linear combination
of transitive classes, keyed by the canonical (lexicographically minimal)
conjugate of the stabilizer subgroup inside `pair_group(left, right)`.
Keying by canonical representative instead of a dense class index keeps
composition exact on pair groups far too large to enumerate; class indices
are materialized lazily where a full basis is actually wanted (marks,
serialization, functor coordinates).

Composition of transitive elements follows the double-coset expansion

    [(KxH)/L] o [(HxG)/M] = sum over x in p2(L)\\H/p1(M) of
                            [(KxG)/(L * (x,1)M)]

where ``L * M = {(k,g) | exists h: (k,h) in L, (h,g) in M}`` and ``(x,1)M``
conjugates the first coordinate by x.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .catalog import TRIVIAL
from .groups import (FiniteGroup, GroupError, Subgroup, minimal_conjugate,
                     double_cosets, direct_product, pair_group,
                     subgroup_classes, subgroup_class_index)

RINGS = ("int", "rat")


class RingError(ValueError):
    """Mixed or unsupported coefficient rings."""


def _check_ring(ring):
    if ring not in RINGS:
        raise RingError(f"unknown coefficient ring {ring!r}")


def _coerce(c, ring):
    if ring == "int":
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise RingError(f"non-integer coefficient {c} over the "
                                "integer ring")
            return int(c)
        if isinstance(c, (int, np.integer)):
            return int(c)
        raise RingError(f"bad integer-ring coefficient {c!r}")
    return Fraction(c)


def partition_points(n, edge_groups):
    """Labels of the finest partition merging each (rows, cols) edge family."""
    if n == 0:
        return np.zeros(0, dtype=np.int64), 0
    if not edge_groups:
        return np.arange(n, dtype=np.int64), n
    rows = np.concatenate([np.asarray(r, dtype=np.int64)
                           for r, _ in edge_groups])
    cols = np.concatenate([np.asarray(c, dtype=np.int64)
                           for _, c in edge_groups])
    graph = coo_matrix((np.ones(rows.shape[0], dtype=np.int8), (rows, cols)),
                       shape=(n, n))
    ncomp, labels = connected_components(graph, directed=False)
    return labels.astype(np.int64), ncomp


# -- concrete bisets ----------------------------------------------------------

class ConcreteBiset:
    """Finite (H,G)-biset with explicit one-sided action tables.

    ``left_table[h, x] = h.x`` and ``right_table[x, g] = x.g``; the two-sided
    action is ``h.x.g = left_table[h, right_table[x, g]]``.
    """

    def __init__(self, left, right, left_table, right_table, trusted=False,
                 name=""):
        self.left = left
        self.right = right
        self.left_table = np.asarray(left_table, dtype=np.int64)
        self.right_table = np.asarray(right_table, dtype=np.int64)
        self.size = self.left_table.shape[1]
        self.name = name
        self._trusted = trusted
        if self.left_table.shape != (left.order, self.size) or \
                self.right_table.shape != (self.size, right.order):
            raise GroupError("biset action tables have inconsistent shapes")

    def act(self, h, x, g):
        return int(self.left_table[h, self.right_table[x, g]])

    def validate(self):
        """Check both action axioms and that the actions commute."""
        H, G, n = self.left, self.right, self.size
        lt, rt = self.left_table, self.right_table
        if not np.array_equal(lt[0], np.arange(n)):
            raise GroupError(f"biset {self.name!r}: left identity moves "
                             "points")
        if not np.array_equal(rt[:, 0], np.arange(n)):
            raise GroupError(f"biset {self.name!r}: right identity moves "
                             "points")
        hh = np.arange(H.order)
        lhs = lt[H.mul_vec(hh[:, None], hh[None, :])]
        rhs = lt[hh[:, None, None], lt[hh[None, :, None], np.arange(n)]]
        if not np.array_equal(lhs, rhs):
            raise GroupError(f"biset {self.name!r}: left action is not an "
                             "action")
        gg = np.arange(G.order)
        lhs = rt[:, G.mul_vec(gg[:, None], gg[None, :])]
        rhs = rt[rt[:, gg], :][:, :, gg]
        if not np.array_equal(lhs, np.swapaxes(rhs, 1, 2)):
            raise GroupError(f"biset {self.name!r}: right action is not an "
                             "action")
        mixed1 = lt[:, rt]                       # h.(x.g) -> (|H|, n, |G|)
        mixed2 = rt[lt, :]                       # (h.x).g -> (|H|, n, |G|)
        if not np.array_equal(mixed1, mixed2):
            raise GroupError(f"biset {self.name!r}: left and right actions "
                             "do not commute")
        self._trusted = True

    def __repr__(self):
        return (f"<ConcreteBiset {self.name or '?'} ({self.left.name},"
                f"{self.right.name}) |{self.size}|>")


def transitive_biset(H, G, L):
    """The (H,G)-biset (HxG)/L with h.(xL).g = ((h, g^-1) x) L."""
    P = pair_group(H, G)
    Larr = np.asarray(L.elements if isinstance(L, Subgroup) else L,
                      dtype=np.int64)
    if Larr.max(initial=0) >= P.order:
        raise GroupError("stabilizer is not inside the pair group")
    allp = np.arange(P.order)
    rep_of = P.mul_vec(allp[:, None], Larr[None, :]).min(axis=1)
    reps = np.unique(rep_of)
    index_of = np.full(P.order, -1, dtype=np.int64)
    index_of[reps] = np.arange(reps.shape[0])
    coset = index_of[rep_of]
    # left mult by (h, 1): pair index h*|G|; right mult by (1, g^-1)
    hh = np.arange(H.order) * G.order
    left_table = coset[P.mul_vec(hh[:, None], reps[None, :])]
    gg = G.inv_vec(np.arange(G.order))
    right_table = coset[P.mul_vec(gg[None, :], reps[:, None])]
    return ConcreteBiset(H, G, left_table, right_table, trusted=True,
                         name=f"({H.name}x{G.name})/L{Larr.shape[0]}")


def regular_biset(G):
    """G acting on itself on both sides."""
    return ConcreteBiset(G, G, G.table, G.table, trusted=True,
                         name=f"reg({G.name})")


def point_biset(H, G):
    """The one-point (H,G)-biset."""
    return ConcreteBiset(H, G, np.zeros((H.order, 1), dtype=np.int64),
                         np.zeros((1, G.order), dtype=np.int64),
                         trusted=True, name="point")


def opposite_biset(X):
    """X as a (G,H)-biset via g.x.h = h^-1 x g^-1."""
    H, G = X.left, X.right
    # g.x in X^op is x.g^-1 in X; x.h in X^op is h^-1.x in X
    left_table = X.right_table[:, G.inv_vec(np.arange(G.order))].T
    right_table = X.left_table[H.inv_vec(np.arange(H.order)), :].T
    return ConcreteBiset(G, H, left_table, right_table, trusted=True,
                         name=f"op({X.name})")


def external_biset(X, Y):
    """Cartesian product of an (H,G)- and an (L,K)-biset, as an
    (HxL, GxK)-biset."""
    HL = direct_product([X.left, Y.left])
    GK = direct_product([X.right, Y.right])
    p, q = X.size, Y.size
    lt = (X.left_table[:, None, :, None] * q +
          Y.left_table[None, :, None, :]).reshape(HL.order, p * q)
    # axes: (x, g, y, k) -> point (x,y), group (g,k)
    rt = (X.right_table[:, None, :, None] * q +
          Y.right_table[None, :, None, :]).transpose(0, 2, 1, 3)
    rt = rt.reshape(p * q, GK.order)
    return ConcreteBiset(HL, GK, lt, rt, trusted=True,
                         name=f"{X.name}*{Y.name}")


def disjoint_union(X, Y):
    if X.left is not Y.left or X.right is not Y.right:
        raise GroupError("disjoint union needs matching groups")
    lt = np.concatenate([X.left_table, Y.left_table + X.size], axis=1)
    rt = np.concatenate([X.right_table, Y.right_table + X.size], axis=0)
    return ConcreteBiset(X.left, X.right, lt, rt, trusted=True,
                         name=f"{X.name}+{Y.name}")


def concrete_compose(Y, X):
    """Y x_H X: pairs modulo (y.h, x) ~ (y, h.x), with inherited actions."""
    if Y.right is not X.left:
        raise GroupError(f"middle groups differ: {Y.right.name} vs "
                         f"{X.left.name}")
    H = Y.right
    p, q = Y.size, X.size
    n = p * q
    nodes = np.arange(n)
    ys, xs = nodes // q, nodes % q
    edges = []
    for h in H.generators():
        a = Y.right_table[ys, h] * q + xs
        b = ys * q + X.left_table[h, xs]
        edges.append((a, b))
    labels, ncomp = partition_points(n, edges)
    _, first = np.unique(labels, return_index=True)
    yr, xr = first // q, first % q
    K, G = Y.left, X.right
    left_table = labels[Y.left_table[:, yr] * q + xr[None, :]]
    right_table = labels[yr[:, None] * q + X.right_table[xr, :]]
    return ConcreteBiset(K, G, left_table, right_table, trusted=True,
                         name=f"{Y.name}o{X.name}")


# -- Burnside elements --------------------------------------------------------

class BurnsideElement:
    """Sparse exact element of B(left, right).

    Terms map canonical stabilizer-class representatives (minimal-conjugate
    element tuples in ``pair_group(left, right)``) to nonzero coefficients.
    """

    __slots__ = ("left", "right", "ring", "_terms", "_hash")

    def __init__(self, left, right, coeffs, ring="int", _canonical=False):
        _check_ring(ring)
        self.left = left
        self.right = right
        self.ring = ring
        items = []
        for key, c in coeffs.items():
            c = _coerce(c, ring)
            if c != 0:
                items.append((tuple(key), c))
        items.sort(key=lambda kv: (len(kv[0]), kv[0]))
        self._terms = tuple(items)
        self._hash = None

    @property
    def terms(self):
        return self._terms

    def num_terms(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, key):
        key = tuple(key)
        for k, c in self._terms:
            if k == key:
                return c
        return 0 if self.ring == "int" else Fraction(0)

    def pair_parent(self):
        return pair_group(self.left, self.right)

    def _require_compatible(self, other):
        if self.left is not other.left or self.right is not other.right:
            raise GroupError("Burnside elements live over different group "
                             "pairs")
        if self.ring != other.ring:
            raise RingError(f"mixed coefficient rings {self.ring}/"
                            f"{other.ring}")

    def __add__(self, other):
        self._require_compatible(other)
        out = dict(self._terms)
        for k, c in other._terms:
            out[k] = out.get(k, 0) + c
        return BurnsideElement(self.left, self.right, out, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = _coerce(c, self.ring)
        return BurnsideElement(self.left, self.right,
                               {k: c * v for k, v in self._terms}, self.ring)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return (self.left is other.left and self.right is other.right and
                self.ring == other.ring and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.left.uid, self.right.uid, self.ring,
                               self._terms))
        return self._hash

    def __repr__(self):
        if not self._terms:
            body = "0"
        else:
            body = " + ".join(f"{c}*[|{len(k)}|]" for k, c in self._terms)
        return f"B({self.left.name},{self.right.name}): {body}"

    def describe(self):
        """Deterministic readable form with class indices (small groups)."""
        P = self.pair_parent()
        parts = []
        for k, c in self._terms:
            idx = subgroup_class_index(P, k)
            parts.append(f"{c}*[{P.name}/o{len(k)}c{idx}]")
        return " + ".join(parts) if parts else "0"


def burnside_zero(H, G, ring="int"):
    return BurnsideElement(H, G, {}, ring)


def element_from_subgroup(H, G, L, coeff=1, ring="int"):
    """The class of the transitive biset (HxG)/L, canonicalized."""
    P = pair_group(H, G)
    key = minimal_conjugate(P, L.elements if isinstance(L, Subgroup) else L)
    return BurnsideElement(H, G, {key: coeff}, ring)


def convert_ring(a, ring):
    """Explicit exact ring change; int -> rat embeds, rat -> int must be
    integral."""
    _check_ring(ring)
    if ring == a.ring:
        return a
    return BurnsideElement(a.left, a.right, dict(a._terms), ring)


# -- classification oracle ----------------------------------------------------

def classify(X, ring="int"):
    """Decompose a concrete biset into transitive classes.

    Orbits under (h,g).x = h.x.g^-1; each orbit contributes the class of its
    point stabilizer in the pair group, with integer multiplicity.
    """
    if not X._trusted:
        X.validate()
    H, G, n = X.left, X.right, X.size
    edges = []
    for h in H.generators():
        edges.append((np.arange(n), X.left_table[h]))
    for g in G.generators():
        edges.append((np.arange(n), X.right_table[:, g]))
    labels, _ = partition_points(n, edges)
    _, reps = np.unique(labels, return_index=True)
    P = pair_group(H, G)
    ginv = G.inv_vec(np.arange(G.order))
    coeffs = {}
    for rep in reps:
        moved = X.left_table[:, X.right_table[rep, ginv]]   # (|H|, |G|)
        hh, gg = np.nonzero(moved == rep)
        stab = tuple(int(v) for v in np.sort(hh * G.order + gg))
        key = minimal_conjugate(P, stab)
        coeffs[key] = coeffs.get(key, 0) + 1
    return BurnsideElement(H, G, coeffs, ring)


# -- symbolic operations ------------------------------------------------------

_COMPOSE_MEMO = {}


def _star_product(H, G, K, L, M, x):
    """Elements of L * (x,1)M inside pair_group(K, G).

    L <= KxH and M <= HxG as canonical index tuples; the middle coordinate
    of M is conjugated by x before matching.  Both middle projections have
    constant fiber size (fibers are kernel cosets), so the join reshapes
    into uniform blocks and needs no per-value loop.
    """
    Larr = np.asarray(L, dtype=np.int64)
    Marr = np.asarray(M, dtype=np.int64)
    Lk, Lh = Larr // H.order, Larr % H.order
    Mh, Mg = Marr // G.order, Marr % G.order
    Mh = H.mul_vec(H.mul_vec(x, Mh), H.inv(x))
    o1 = np.argsort(Lh, kind="stable")
    Lh, Lk = Lh[o1], Lk[o1]
    o2 = np.argsort(Mh, kind="stable")
    Mh, Mg = Mh[o2], Mg[o2]
    uh_l = np.unique(Lh)
    uh_m = np.unique(Mh)
    fib_l = Lh.shape[0] // uh_l.shape[0]
    fib_m = Mh.shape[0] // uh_m.shape[0]
    common, il, im = np.intersect1d(uh_l, uh_m, assume_unique=True,
                                    return_indices=True)
    if common.shape[0] == 0:
        return ()
    ks = Lk.reshape(uh_l.shape[0], fib_l)[il]
    gs = Mg.reshape(uh_m.shape[0], fib_m)[im]
    pairs = ks[:, :, None] * G.order + gs[:, None, :]
    return tuple(int(v) for v in np.unique(pairs))


def _compose_transitive(K, H, G, L, M):
    """Double-coset expansion of [(KxH)/L] o [(HxG)/M]; list of
    (canonical key, multiplicity)."""
    memo_key = (K.uid, H.uid, G.uid, L, M)
    got = _COMPOSE_MEMO.get(memo_key)
    if got is not None:
        return got
    Larr = np.asarray(L, dtype=np.int64)
    Marr = np.asarray(M, dtype=np.int64)
    p2L = tuple(int(v) for v in np.unique(Larr % H.order))
    p1M = tuple(int(v) for v in np.unique(Marr // G.order))
    PKG = pair_group(K, G)
    acc = {}
    for x in double_cosets(H, p2L, p1M):
        star = _star_product(H, G, K, L, M, x)
        key = minimal_conjugate(PKG, star)
        acc[key] = acc.get(key, 0) + 1
    result = tuple(sorted(acc.items()))
    _COMPOSE_MEMO[memo_key] = result
    return result


def compose(beta, alpha):
    """Bilinear Mackey composition B(K,H) x B(H,G) -> B(K,G)."""
    if beta.right is not alpha.left:
        raise GroupError(f"cannot compose: middle groups {beta.right.name} "
                         f"and {alpha.left.name} differ")
    if beta.ring != alpha.ring:
        raise RingError(f"mixed coefficient rings {beta.ring}/{alpha.ring}")
    K, H, G = beta.left, beta.right, alpha.right
    out = {}
    for L, cL in beta.terms:
        for M, cM in alpha.terms:
            c = cL * cM
            for key, mult in _compose_transitive(K, H, G, L, M):
                out[key] = out.get(key, 0) + c * mult
    return BurnsideElement(K, G, out, beta.ring)


def opposite(a):
    """Class of L goes to the class of L^op = {(g,h) | (h,g) in L}."""
    H, G = a.left, a.right
    P = pair_group(G, H)
    out = {}
    for key, c in a.terms:
        arr = np.asarray(key, dtype=np.int64)
        flipped = (arr % G.order) * H.order + arr // G.order
        rep = minimal_conjugate(P, tuple(int(v) for v in np.sort(flipped)))
        out[rep] = out.get(rep, 0) + c
    return BurnsideElement(G, H, out, a.ring)


def external(a, b):
    """External product B(H,G) x B(L,K) -> B(HxL, GxK).

    Stabilizers multiply blockwise after the coordinate reorder
    (h,g,l,k) -> (h,l,g,k).  When both right-hand groups are trivial the
    reorder keeps the two blocks contiguous and the product of canonical
    keys is itself canonical; otherwise a conjugacy sweep canonicalizes.
    """
    if a.ring != b.ring:
        raise RingError(f"mixed coefficient rings {a.ring}/{b.ring}")
    H, G = a.left, a.right
    L, K = b.left, b.right
    HL = direct_product([H, L])
    GK = direct_product([G, K])
    P = pair_group(HL, GK)
    one_sided = G.order == 1 and K.order == 1
    out = {}
    for U, cU in a.terms:
        Ua = np.asarray(U, dtype=np.int64)
        hU, gU = Ua // G.order, Ua % G.order
        for V, cV in b.terms:
            Va = np.asarray(V, dtype=np.int64)
            lV, kV = Va // K.order, Va % K.order
            comb = ((hU[:, None] * L.order + lV[None, :]) * GK.order +
                    gU[:, None] * K.order + kV[None, :]).ravel()
            if one_sided:
                rep = tuple(int(v) for v in comb)  # already sorted
            else:
                rep = minimal_conjugate(
                    P, tuple(int(v) for v in np.sort(comb)))
            out[rep] = out.get(rep, 0) + cU * cV
    return BurnsideElement(HL, GK, out, a.ring)


def arrow(a):
    """Reindex B(H,G) as B(HxG, 1): same stabilizers, one-sided reading.

    The pair groups (HxG) and (HxG)x1 have identical index arithmetic, so
    canonical keys carry over unchanged.
    """
    P = pair_group(a.left, a.right)
    return BurnsideElement(P, TRIVIAL, dict(a.terms), a.ring)


def arrow_inverse(x, H, G):
    """Inverse reindexing; (H, G) fixes the biset reading of B(HxG, 1)."""
    P = pair_group(H, G)
    if x.left is not P or x.right.order != 1:
        raise GroupError("arrow_inverse: element does not live in "
                         f"B({P.name}, 1)")
    return BurnsideElement(H, G, dict(x.terms), x.ring)


# -- standard bisets ----------------------------------------------------------

_STD_CACHE = {}


def _hom_key(phi):
    return (phi.source.uid, phi.target.uid, phi.images)


def ind_biset(phi, ring="int"):
    """Induction along phi: G -> H, i.e. H as an (H,G)-biset."""
    key = ("ind", _hom_key(phi), ring)
    got = _STD_CACHE.get(key)
    if got is None:
        H, G = phi.target, phi.source
        X = ConcreteBiset(H, G, H.table, H.table[:, phi.as_array()],
                          trusted=True, name=f"ind({G.name}->{H.name})")
        got = classify(X, ring)
        _STD_CACHE[key] = got
    return got


def res_biset(phi, ring="int"):
    """Restriction along phi: G -> H, i.e. H as a (G,H)-biset."""
    key = ("res", _hom_key(phi), ring)
    got = _STD_CACHE.get(key)
    if got is None:
        H, G = phi.target, phi.source
        X = ConcreteBiset(G, H, H.table[phi.as_array(), :], H.table,
                          trusted=True, name=f"res({G.name}->{H.name})")
        got = classify(X, ring)
        _STD_CACHE[key] = got
    return got


def iso_biset(phi, ring="int"):
    if not phi.is_isomorphism():
        raise GroupError("iso_biset needs a bijective homomorphism")
    return ind_biset(phi, ring)


def inf_biset(G, N, ring="int"):
    """Inflation from G/N, an element of B(G, G/N)."""
    from .groups import quotient
    _, proj = quotient(G, N)
    return res_biset(proj, ring)


def deflate_biset(G, N, ring="int"):
    """Deflation to G/N, an element of B(G/N, G)."""
    from .groups import quotient
    _, proj = quotient(G, N)
    return ind_biset(proj, ring)


def identity_element(G, ring="int"):
    """Class of the regular (G,G)-biset: [(GxG)/diagonal]."""
    key = ("id", G.uid, ring)
    got = _STD_CACHE.get(key)
    if got is None:
        got = classify(regular_biset(G), ring)
        _STD_CACHE[key] = got
    return got


def right_arrow(G, ring="int"):
    """G with the two-sided translation action, read in B(GxG, 1)."""
    key = ("rarrow", G.uid, ring)
    got = _STD_CACHE.get(key)
    if got is None:
        P = direct_product([G, G])
        pp = np.arange(P.order)
        g1, g2 = pp // G.order, pp % G.order
        lt = G.mul_vec(G.mul_vec(g1[:, None], np.arange(G.order)[None, :]),
                       G.inv_vec(g2)[:, None])
        rt = np.arange(G.order, dtype=np.int64)[:, None]
        X = ConcreteBiset(P, TRIVIAL, lt, rt, trusted=True,
                          name=f"->{G.name}")
        got = classify(X, ring)
        _STD_CACHE[key] = got
    return got


def left_arrow(G, ring="int"):
    """Opposite of right_arrow, in B(1, GxG)."""
    key = ("larrow", G.uid, ring)
    got = _STD_CACHE.get(key)
    if got is None:
        P = direct_product([G, G])
        pp = np.arange(P.order)
        g1, g2 = pp // G.order, pp % G.order
        # x.(g1,g2) = g1^-1 x g2
        rt = G.mul_vec(G.mul_vec(G.inv_vec(g1)[None, :],
                                 np.arange(G.order)[:, None]),
                       g2[None, :])
        lt = np.arange(G.order, dtype=np.int64)[None, :]
        X = ConcreteBiset(TRIVIAL, P, lt, rt, trusted=True,
                          name=f"<-{G.name}")
        got = classify(X, ring)
        _STD_CACHE[key] = got
    return got


# -- marks and units ----------------------------------------------------------

def _require_one_sided(a):
    if a.right.order != 1:
        raise GroupError("marks need a one-sided element of B(G, 1)")


def fixed_points(G, U, S):
    """Number of U-fixed points of the transitive G-set G/S."""
    Ua = np.asarray(U.elements if isinstance(U, Subgroup) else U,
                    dtype=np.int64)
    Sset = np.zeros(G.order, dtype=bool)
    Sarr = np.asarray(S.elements if isinstance(S, Subgroup) else S,
                      dtype=np.int64)
    Sset[Sarr] = True
    allg = np.arange(G.order)
    conj = G.mul_vec(G.mul_vec(G.inv_vec(allg)[:, None], Ua[None, :]),
                     allg[:, None])
    good = np.all(Sset[conj], axis=1)
    return int(np.count_nonzero(good)) // Sarr.shape[0]


def marks(a):
    """Ghost vector: U-fixed-point counts indexed by subgroup_classes(G)."""
    _require_one_sided(a)
    if a.ring != "int":
        raise RingError("marks are defined over integer coefficients")
    G = a.left
    classes = subgroup_classes(G)
    out = [0] * len(classes)
    for key, c in a.terms:
        for cls in classes:
            out[cls.index] += c * fixed_points(G, cls.representative, key)
    return out


def table_of_marks(G):
    """Rows: transitive sets [G/V]; columns: classes U; entries: fixed
    points."""
    cached = G._caches.get("tom")
    if cached is not None:
        return cached
    classes = subgroup_classes(G)
    tom = [[fixed_points(G, U.representative, V.representative)
            for U in classes] for V in classes]
    G._caches["tom"] = tom
    return tom


def basis_element_of_class(G, cls, ring="int"):
    """[G/V] as an element of B(G, 1) for a class of G itself."""
    P = pair_group(G, TRIVIAL)
    key = minimal_conjugate(P, cls.representative.elements)
    return BurnsideElement(G, TRIVIAL, {key: 1}, ring)


def burnside_units(G):
    """All units of B(G), by exact solve of marks = sign vector.

    Units are exactly the elements whose ghost vector lies in {+1,-1} on
    every class; each candidate sign vector is pulled back through the
    (triangular) table of marks and kept when the solution is integral.
    """
    from .linalg import solve_exact
    from itertools import product as iproduct
    classes = subgroup_classes(G)
    tom = table_of_marks(G)
    c = len(classes)
    # marks(sum u_V [G/V])[U] = sum_V u_V tom[V][U]: solve tom^T u = s
    tom_t = [[Fraction(tom[v][u]) for v in range(c)] for u in range(c)]
    units = []
    for signs in iproduct((1, -1), repeat=c):
        sol = solve_exact(tom_t, [Fraction(s) for s in signs])
        if sol is None or any(x.denominator != 1 for x in sol):
            continue
        coeffs = {}
        for v, x in enumerate(sol):
            if x != 0:
                key = minimal_conjugate(pair_group(G, TRIVIAL),
                                        classes[v].representative.elements)
                coeffs[key] = coeffs.get(key, 0) + int(x)
        units.append(BurnsideElement(G, TRIVIAL, coeffs, "int"))
    units.sort(key=lambda u: u.terms)
    return units


# -- serialization ------------------------------------------------------------

def element_to_json(a):
    """Deterministic JSON form with canonical class indices."""
    P = a.pair_parent()
    terms = []
    for key, c in a.terms:
        terms.append({"classIndex": subgroup_class_index(P, key),
                      "subgroupOrder": len(key),
                      "coeff": str(c)})
    terms.sort(key=lambda t: t["classIndex"])
    return {"left": a.left.name, "right": a.right.name, "ring": a.ring,
            "terms": terms}


def element_from_json(data, groups, ring=None):
    """Rebuild an element from its JSON form, resolving names in
    ``groups``."""
    left = groups[data["left"]]
    right = groups[data["right"]]
    ring = ring or data.get("ring", "int")
    P = pair_group(left, right)
    classes = subgroup_classes(P)
    coeffs = {}
    for t in data["terms"]:
        cls = classes[t["classIndex"]]
        coeffs[cls.key] = Fraction(t["coeff"]) if ring == "rat" \
            else int(t["coeff"])
    return BurnsideElement(left, right, coeffs, ring)
