"""Green functor instances: evaluations with biset action, cross product
and an internal algebra product.

A functor instance supplies sparse element payloads, the cross product,
and the action of Burnside elements; the internal product is always the
derived one,

    a. b = act(res(diagonal))(a x b),    1 = act(inf from 1)(unit),

so the algebra structure of every instance is pinned to its cross product.
Instances are interned by tag, which makes element compatibility an
identity check on the functor.
"""

from __future__ import annotations

from fractions import Fraction

from .bisets import (BurnsideElement, RingError, burnside_zero, compose,
                     convert_ring, element_from_subgroup, identity_element,
                     ind_biset, iso_biset, res_biset, _coerce)
from .catalog import TRIVIAL
from .groups import (GroupError, diagonal, direct_product, hom_to_trivial,
                     minimal_conjugate, pair_group, subgroup_classes,
                     subgroup_class_index, swap)


class GreenElement:
    """An element of A(G) for a Green functor instance A."""

    __slots__ = ("functor", "group", "payload")

    def __init__(self, functor, group, payload):
        self.functor = functor
        self.group = group
        self.payload = payload

    def _compat(self, other):
        if self.functor is not other.functor:
            raise GroupError(f"elements of different functors "
                             f"{self.functor.tag} / {other.functor.tag}")
        if self.group is not other.group:
            raise GroupError("elements over different groups "
                             f"{self.group.name} / {other.group.name}")

    def __add__(self, other):
        self._compat(other)
        return self.functor._wrap(self.group,
                                  self.functor._add(self.group, self.payload,
                                                    other.payload))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return self.functor._wrap(self.group,
                                  self.functor._smul(self.group, c,
                                                     self.payload))

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GreenElement):
            return self.functor.mul(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GreenElement):
            return NotImplemented
        return (self.functor is other.functor and self.group is other.group
                and self.functor._eq(self.group, self.payload, other.payload))

    def __hash__(self):
        return hash((self.functor.tag, self.group.uid, self.payload))

    def is_zero(self):
        return self.functor._is_zero(self.group, self.payload)

    def __repr__(self):
        return f"<{self.functor.tag}({self.group.name}): {self.payload!r}>"


class GreenFunctor:
    """Shared derived operations; subclasses provide the payload layer."""

    tag = "?"
    ring = "int"

    def _wrap(self, G, payload):
        return GreenElement(self, G, payload)

    def element(self, G, payload):
        return self._wrap(G, payload)

    def zero(self, G):
        return self._wrap(G, self._zero(G))

    def unit(self):
        """The identity element of A(1)."""
        raise NotImplementedError

    def cross(self, a, b):
        """Bilinear product A(G) x A(H) -> A(GxH)."""
        if a.functor is not self or b.functor is not self:
            raise GroupError("cross: elements of a different functor")
        G, H = a.group, b.group
        return self._wrap(direct_product([G, H]),
                          self._cross(G, a.payload, H, b.payload))

    def act(self, x, a):
        """Action of x in B(H,G) on A(G), landing in A(H)."""
        if a.functor is not self:
            raise GroupError("act: element of a different functor")
        if x.right is not a.group:
            raise GroupError(f"act: biset right group {x.right.name} does "
                             f"not match element group {a.group.name}")
        return self._wrap(x.left, self._act(x, a.group, a.payload))

    def one(self, G):
        cached = G._caches.get(("green_one", self.tag))
        if cached is None:
            inf1 = res_biset(hom_to_trivial(G, TRIVIAL))
            cached = self.act(inf1, self.unit())
            G._caches[("green_one", self.tag)] = cached
        return cached

    def mul(self, a, b):
        if a.functor is not self or b.functor is not self:
            raise GroupError("mul: elements of a different functor")
        if a.group is not b.group:
            raise GroupError("mul: elements over different groups")
        G = a.group
        res_delta = res_biset(diagonal(G))
        return self.act(res_delta, self.cross(a, b))

    # -- coordinates over the canonical basis (window-scale groups) ----------

    def basis(self, G):
        key = ("green_basis", self.tag)
        cached = G._caches.get(key)
        if cached is None:
            cached = [self._wrap(G, p) for p in self._basis_payloads(G)]
            G._caches[key] = cached
        return cached

    def dim(self, G):
        return len(self._basis_payloads(G))

    def basis_labels(self, G):
        raise NotImplementedError

    def coords(self, a):
        return self._coords(a.group, a.payload)

    def from_coords(self, G, vec):
        basis = self.basis(G)
        if len(vec) != len(basis):
            raise GroupError("coordinate length does not match basis size")
        out = self.zero(G)
        for c, b in zip(vec, basis):
            if c:
                out = out + b.scale(c)
        return out

    def act_matrix(self, x):
        """Exact matrix of act(x): A(G) -> A(H) over the canonical bases."""
        cols = [self.coords(self.act(x, b)) for b in self.basis(x.right)]
        dim_h = self.dim(x.left)
        return [tuple(cols[j][i] for j in range(len(cols)))
                for i in range(dim_h)]

    def with_ring(self, ring):
        raise NotImplementedError

    def __repr__(self):
        return f"<GreenFunctor {self.tag}>"


# -- Burnside functor ---------------------------------------------------------

class BurnsideGreenFunctor(GreenFunctor):
    """B_k: evaluations are one-sided Burnside modules B(G) = B(G,1)."""

    def __init__(self, ring="int"):
        self.ring = ring
        self.tag = f"B[{ring}]"

    def _zero(self, G):
        return burnside_zero(G, TRIVIAL, self.ring)

    def _add(self, G, p, q):
        return p + q

    def _smul(self, G, c, p):
        return p.scale(c)

    def _eq(self, G, p, q):
        return p == q

    def _is_zero(self, G, p):
        return p.is_zero()

    def _cross(self, G, p, H, q):
        # stabilizer of a product of transitive sets is the block product
        # U x V; blockwise conjugation makes the product of canonical keys
        # canonical, so no conjugacy sweep is needed here
        GH = direct_product([G, H])
        out = {}
        for U, cU in p.terms:
            for V, cV in q.terms:
                rep = tuple(u * H.order + v for u in U for v in V)
                out[rep] = out.get(rep, 0) + cU * cV
        return BurnsideElement(GH, TRIVIAL, out, self.ring)

    def _act(self, x, G, p):
        return compose(convert_ring(x, self.ring), p)

    def unit(self):
        return self._wrap(TRIVIAL, identity_element(TRIVIAL, self.ring))

    def _basis_payloads(self, G):
        P = pair_group(G, TRIVIAL)
        out = []
        for cls in subgroup_classes(G):
            key = minimal_conjugate(P, cls.representative.elements)
            out.append(BurnsideElement(G, TRIVIAL, {key: 1}, self.ring))
        return out

    def basis_labels(self, G):
        return [f"[{G.name}/{c.label}]" for c in subgroup_classes(G)]

    def _coords(self, G, p):
        zero = 0 if self.ring == "int" else Fraction(0)
        vec = [zero] * len(subgroup_classes(G))
        for key, c in p.terms:
            vec[subgroup_class_index(G, key)] = c
        return tuple(vec)

    def with_ring(self, ring):
        return burnside_functor(ring)

    def wrap_biset(self, x):
        """A one-sided Burnside element as a functor element."""
        if x.right is not TRIVIAL:
            raise GroupError("expected an element of B(G, 1)")
        return self._wrap(x.left, convert_ring(x, self.ring))


# -- matrix functor -----------------------------------------------------------

class MatrixGreenFunctor(GreenFunctor):
    """M_n(A): square matrices over a base instance, with matrix product."""

    def __init__(self, base, n):
        if n < 1:
            raise GroupError("matrix functor needs n >= 1")
        self.base = base
        self.n = n
        self.ring = base.ring
        self.tag = f"M{n}({base.tag})"

    def _zero(self, G):
        z = self.base.zero(G)
        return tuple(tuple(z for _ in range(self.n))
                     for _ in range(self.n))

    def _add(self, G, p, q):
        return tuple(tuple(p[i][j] + q[i][j] for j in range(self.n))
                     for i in range(self.n))

    def _smul(self, G, c, p):
        return tuple(tuple(p[i][j].scale(c) for j in range(self.n))
                     for i in range(self.n))

    def _eq(self, G, p, q):
        return all(p[i][j] == q[i][j] for i in range(self.n)
                   for j in range(self.n))

    def _is_zero(self, G, p):
        return all(p[i][j].is_zero() for i in range(self.n)
                   for j in range(self.n))

    def _cross(self, G, p, H, q):
        out = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc = None
                for k in range(self.n):
                    term = self.base.cross(p[i][k], q[k][j])
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def _act(self, x, G, p):
        return tuple(tuple(self.base.act(x, p[i][j]) for j in range(self.n))
                     for i in range(self.n))

    def unit(self):
        e = self.base.unit()
        z = self.base.zero(TRIVIAL)
        return self._wrap(TRIVIAL,
                          tuple(tuple(e if i == j else z
                                      for j in range(self.n))
                                for i in range(self.n)))

    def matrix(self, G, entries):
        """Element from an n x n grid of base elements over G."""
        rows = tuple(tuple(entries[i][j] for j in range(self.n))
                     for i in range(self.n))
        for row in rows:
            for e in row:
                if e.functor is not self.base or e.group is not G:
                    raise GroupError("matrix entries must be base elements "
                                     "over the same group")
        return self._wrap(G, rows)

    def elementary(self, G, i, j, a):
        """Matrix with a single (i,j) entry."""
        z = self.base.zero(G)
        return self.matrix(G, [[a if (r, c) == (i, j) else z
                                for c in range(self.n)]
                               for r in range(self.n)])

    def entry(self, m, i, j):
        return m.payload[i][j]

    def _basis_payloads(self, G):
        out = []
        z = self.base.zero(G)
        for b in self.base.basis(G):
            for i in range(self.n):
                for j in range(self.n):
                    out.append(tuple(tuple(b if (r, c) == (i, j) else z
                                           for c in range(self.n))
                                     for r in range(self.n)))
        return out

    def basis_labels(self, G):
        out = []
        for lbl in self.base.basis_labels(G):
            for i in range(self.n):
                for j in range(self.n):
                    out.append(f"{lbl}@{i}{j}")
        return out

    def _coords(self, G, p):
        vec = []
        for idx in range(self.base.dim(G)):
            for i in range(self.n):
                for j in range(self.n):
                    vec.append(self.base.coords(p[i][j])[idx])
        return tuple(vec)

    def with_ring(self, ring):
        return matrix_functor(self.base.with_ring(ring), self.n)


# -- opposite functor ---------------------------------------------------------

class OppositeGreenFunctor(GreenFunctor):
    """A^op: same module data, cross product twisted through the swap iso."""

    def __init__(self, base):
        self.base = base
        self.ring = base.ring
        self.tag = f"op({base.tag})"

    def _zero(self, G):
        return self.base.zero(G)

    def _add(self, G, p, q):
        return p + q

    def _smul(self, G, c, p):
        return p.scale(c)

    def _eq(self, G, p, q):
        return p == q

    def _is_zero(self, G, p):
        return p.is_zero()

    def _cross(self, G, p, H, q):
        # a x' b = A(Iso(tau_{H,G}))(b x a)
        twisted = self.base.cross(q, p)
        tau = swap(H, G)
        return self.base.act(iso_biset(tau), twisted)

    def _act(self, x, G, p):
        return self.base.act(x, p)

    def unit(self):
        return self._wrap(TRIVIAL, self.base.unit())

    def wrap(self, a):
        """View a base element as an element of the opposite functor."""
        if a.functor is not self.base:
            raise GroupError("expected a base-functor element")
        return self._wrap(a.group, a)

    def unwrap(self, a):
        if a.functor is not self:
            raise GroupError("expected an opposite-functor element")
        return a.payload

    def _basis_payloads(self, G):
        return list(self.base.basis(G))

    def basis_labels(self, G):
        return self.base.basis_labels(G)

    def _coords(self, G, p):
        return self.base.coords(p)

    def with_ring(self, ring):
        return opposite_functor(self.base.with_ring(ring))


_FUNCTOR_CACHE = {}


def burnside_functor(ring="int"):
    key = ("B", ring)
    if key not in _FUNCTOR_CACHE:
        _FUNCTOR_CACHE[key] = BurnsideGreenFunctor(ring)
    return _FUNCTOR_CACHE[key]


def matrix_functor(base, n):
    key = ("M", base.tag, n)
    if key not in _FUNCTOR_CACHE:
        _FUNCTOR_CACHE[key] = MatrixGreenFunctor(base, n)
    return _FUNCTOR_CACHE[key]


def opposite_functor(base):
    key = ("op", base.tag)
    if key not in _FUNCTOR_CACHE:
        _FUNCTOR_CACHE[key] = OppositeGreenFunctor(base)
    return _FUNCTOR_CACHE[key]


# -- initial morphism and axiom checkers --------------------------------------

def initial_morphism(A, x):
    """e_G(x) for x in B(G, 1): act x (as a morphism 1 -> G) on the unit."""
    if x.right is not TRIVIAL:
        raise GroupError("initial morphism expects an element of B(G, 1)")
    return A.act(x, A.unit())


def frobenius_check(A, phi, a, b):
    """Both projection identities along phi: G -> H for a over H, b over G."""
    if a.group is not phi.target or b.group is not phi.source:
        raise GroupError("frobenius_check: group mismatch")
    ind = ind_biset(phi)
    res = res_biset(phi)
    ind_b = A.act(ind, b)
    res_a = A.act(res, a)
    left = A.mul(a, ind_b) == A.act(ind, A.mul(res_a, b))
    right = A.mul(ind_b, a) == A.act(ind, A.mul(b, res_a))
    return left and right


def res_is_algebra_hom_check(A, phi):
    """act(res(phi)) is unital and multiplicative on the basis of A(H)."""
    res = res_biset(phi)
    H, G = phi.target, phi.source
    if A.act(res, A.one(H)) != A.one(G):
        return False
    basis = A.basis(H)
    for a in basis:
        ra = A.act(res, a)
        for b in basis:
            if A.act(res, A.mul(a, b)) != A.mul(ra, A.act(res, b)):
                return False
    return True


def commutant_check(A, a, witnesses):
    """Necessary commutant-membership condition against supplied witnesses.

    True iff a x b = act(iso(swap))(b x a) for every witness (H, b); the
    full membership condition quantifies over all groups, so this bounded
    check can only refute.
    """
    G = a.group
    for H, b in witnesses:
        if b.group is not H:
            raise GroupError("witness element over the wrong group")
        lhs = A.cross(a, b)
        rhs = A.act(iso_biset(swap(H, G)), A.cross(b, a))
        if lhs != rhs:
            return False
    return True
