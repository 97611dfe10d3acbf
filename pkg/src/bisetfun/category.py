"""The category attached to a Green functor instance.

Morphisms G -> H are elements of A(HxG); composition contracts the middle
coordinate pair with an explicit biset,

    alpha o beta = A(K x <-H x G)(alpha x beta),

followed by the explicit unit identification K x 1 x G -> K x G.  Identity
morphisms come from the two-sided translation set of G applied to the unit.
Everything here works uniformly over the Burnside, matrix and opposite
instances.
"""

from __future__ import annotations

from fractions import Fraction

from .bisets import (RingError, arrow, compose, convert_ring, external,
                     identity_element, ind_biset, iso_biset, left_arrow,
                     opposite, res_biset, right_arrow)
from .catalog import TRIVIAL
from .green import (GreenElement, GreenFunctor, initial_morphism,
                    opposite_functor)
from .groups import (GroupError, diagonal, direct_product,
                     unit_identification, projection, swap)
from .linalg import solve_exact


class CatMorphism:
    """A morphism source -> target, housed in A(target x source)."""

    __slots__ = ("functor", "source", "target", "value")

    def __init__(self, functor, source, target, value):
        if value.functor is not functor:
            raise GroupError("morphism value belongs to a different functor")
        if value.group is not direct_product([target, source]):
            raise GroupError("morphism value must live over target x source")
        self.functor = functor
        self.source = source
        self.target = target
        self.value = value

    def _compat(self, other):
        if self.functor is not other.functor or \
                self.source is not other.source or \
                self.target is not other.target:
            raise GroupError("morphisms of different hom-sets")

    def __add__(self, other):
        self._compat(other)
        return CatMorphism(self.functor, self.source, self.target,
                           self.value + other.value)

    def __sub__(self, other):
        self._compat(other)
        return CatMorphism(self.functor, self.source, self.target,
                           self.value - other.value)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return CatMorphism(self.functor, self.source, self.target,
                           self.value.scale(c))

    def __eq__(self, other):
        if not isinstance(other, CatMorphism):
            return NotImplemented
        return (self.functor is other.functor and
                self.source is other.source and
                self.target is other.target and self.value == other.value)

    def __hash__(self):
        return hash((self.source.uid, self.target.uid, self.value))

    def __repr__(self):
        return (f"<CatMorphism {self.source.name}->{self.target.name} over "
                f"{self.functor.tag}>")


_MIDDLE_CACHE = {}


def _middle_contraction(K, H, G):
    """The contraction biset K x <-H x G in B(Kx1xG, KxHxHxG)."""
    key = (K.uid, H.uid, G.uid)
    got = _MIDDLE_CACHE.get(key)
    if got is None:
        got = external(external(identity_element(K), left_arrow(H)),
                       identity_element(G))
        _MIDDLE_CACHE[key] = got
    return got


def _drop_unit_iso(P, Q):
    """Iso biset for the canonical identification P -> Q (trivial factors)."""
    return iso_biset(unit_identification(P, Q))


def cat_compose(alpha, beta):
    """alpha o beta for alpha: H -> K and beta: G -> H."""
    if alpha.functor is not beta.functor:
        raise GroupError("composition across different functors")
    if alpha.source is not beta.target:
        raise GroupError(f"cannot compose: middle groups "
                         f"{alpha.source.name} / {beta.target.name}")
    A = alpha.functor
    K, H, G = alpha.target, alpha.source, beta.source
    crossed = A.cross(alpha.value, beta.value)
    raw = A.act(_middle_contraction(K, H, G), crossed)
    P = direct_product([K, TRIVIAL, G])
    Q = direct_product([K, G])
    out = A.act(_drop_unit_iso(P, Q), raw)
    return CatMorphism(A, G, K, out)


def cat_identity(A, G):
    """Id_G = A(->G)(unit)."""
    cached = G._caches.get(("cat_id", A.tag))
    if cached is None:
        cached = CatMorphism(A, G, G, A.act(right_arrow(G), A.unit()))
        G._caches[("cat_id", A.tag)] = cached
    return cached


def cat_zero(A, G, H):
    return CatMorphism(A, G, H, A.zero(direct_product([H, G])))


def hom_basis(A, G, H):
    """Basis morphisms of Hom(G, H) = A(HxG), cached per hom-set."""
    P = direct_product([H, G])
    key = ("hom_basis", A.tag, G.uid, H.uid)
    cached = P._caches.get(key)
    if cached is None:
        cached = [CatMorphism(A, G, H, b) for b in A.basis(P)]
        P._caches[key] = cached
    return cached


def tilde(A, a):
    """The algebra embedding A(G) -> End(G), via induction along the
    diagonal."""
    G = a.group
    value = A.act(ind_biset(diagonal(G)), a)
    return CatMorphism(A, G, G, value)


def tilde_retract(A, m):
    """Left inverse of tilde: act by induction along the first projection."""
    G = m.source
    if m.target is not G:
        raise GroupError("tilde_retract expects an endomorphism")
    p1 = projection([G, G], 0)
    return A.act(ind_biset(p1), m.value)


def cat_apply(xi, b):
    """Apply a morphism xi: G -> H to b in A(G), landing in A(H).

    This is the module structure of A over its category: contract the
    spare coordinate of xi x b with <-G, then drop the trivial factor.
    """
    A = xi.functor
    if b.functor is not A or b.group is not xi.source:
        raise GroupError("cat_apply: element incompatible with morphism")
    H, G = xi.target, xi.source
    crossed = A.cross(xi.value, b)
    u = external(identity_element(H), left_arrow(G))
    raw = A.act(u, crossed)
    P = direct_product([H, TRIVIAL])
    out = A.act(_drop_unit_iso(P, H), raw)
    return out


def tilde_cross_check(A, a, b):
    """tilde(a) o (b x unit) = (ab) x unit, as morphisms 1 -> G."""
    G = a.group
    lhs = cat_compose(tilde(A, a),
                      CatMorphism(A, TRIVIAL, G, A.cross(b, A.unit())))
    rhs = CatMorphism(A, TRIVIAL, G, A.cross(A.mul(a, b), A.unit()))
    return lhs == rhs


def _require_pure(x):
    if len(x.terms) != 1 or x.terms[0][1] != 1:
        raise GroupError("double algebra maps take a single biset class, "
                         "not a formal sum")


def double_algebra(A, x, alpha):
    """E(x): End(G) -> End(H) for a pure biset class x in B(H,G).

    E(x)(alpha) = e(->x) o alpha o e(->x^op); linear in alpha only.
    """
    _require_pure(x)
    if alpha.source is not alpha.target or alpha.source is not x.right:
        raise GroupError("double algebra acts on End(right group of x)")
    ex = CatMorphism(A, x.right, x.left, initial_morphism(A, arrow(x)))
    exop = CatMorphism(A, x.left, x.right,
                       initial_morphism(A, arrow(opposite(x))))
    return cat_compose(ex, cat_compose(alpha, exop))


def endo_structure(A, G):
    """(basis of End(G), d x d composition table of coordinate vectors)."""
    key = ("endo_structure", A.tag)
    cached = G._caches.get(key)
    if cached is None:
        basis = hom_basis(A, G, G)
        table = [[A.coords(cat_compose(bi, bj).value) for bj in basis]
                 for bi in basis]
        cached = (basis, table)
        G._caches[key] = cached
    return cached


def endo_inverse(alpha):
    """Two-sided inverse in End(G) by exact linear solve; None if absent.

    Over the integer ring the solution must be integral; two-sidedness is
    always verified, never assumed.
    """
    A = alpha.functor
    if alpha.source is not alpha.target:
        raise GroupError("endo_inverse expects an endomorphism")
    G = alpha.source
    basis, _ = endo_structure(A, G)
    d = len(basis)
    lmat = [[None] * d for _ in range(d)]
    for j, bj in enumerate(basis):
        col = A.coords(cat_compose(alpha, bj).value)
        for i in range(d):
            lmat[i][j] = col[i]
    target = A.coords(cat_identity(A, G).value)
    sol = solve_exact(lmat, list(target))
    if sol is None:
        return None
    if A.ring == "int" and any(x.denominator != 1 for x in sol):
        return None
    coeffs = [int(x) if A.ring == "int" else x for x in sol]
    value = A.from_coords(direct_product([G, G]), coeffs)
    cand = CatMorphism(A, G, G, value)
    ident = cat_identity(A, G)
    if cat_compose(alpha, cand) == ident and \
            cat_compose(cand, alpha) == ident:
        return cand
    return None


# -- opposite category --------------------------------------------------------

def op_morphism(Aop, m):
    """View a base-functor morphism as a morphism of the opposite
    instance."""
    return CatMorphism(Aop, m.source, m.target,
                       Aop.wrap(m.value) if hasattr(Aop, "wrap") else m.value)


def T_iso(alpha):
    """T: morphisms over A^op from G to H map to base morphisms H -> G.

    T_{G,H} acts by the coordinate swap iso on the underlying value, and
    reverses composition.
    """
    Aop = alpha.functor
    base = Aop.base
    G, H = alpha.source, alpha.target
    val = base.act(iso_biset(swap(H, G)), Aop.unwrap(alpha.value))
    return CatMorphism(base, H, G, val)


def T_iso_inv(beta):
    """Inverse of T: base morphisms H -> G back to opposite morphisms
    G -> H."""
    base = beta.functor
    Aop = opposite_functor(base)
    H, G2 = beta.source, beta.target
    val = base.act(iso_biset(swap(G2, H)), beta.value)
    return CatMorphism(Aop, G2, H, Aop.wrap(val))


# -- morphisms of Green functor instances --------------------------------------

class GreenFunctorMorphism:
    """Natural family of algebra maps f_G: A(G) -> C(G)."""

    def __init__(self, source, target, apply_fn, name="f"):
        self.source = source
        self.target = target
        self._apply = apply_fn
        self.name = name

    def apply(self, a):
        if a.functor is not self.source:
            raise GroupError(f"morphism {self.name} expects "
                             f"{self.source.tag} elements")
        out = self._apply(a)
        if out.functor is not self.target or out.group is not a.group:
            raise GroupError(f"morphism {self.name} produced an element of "
                             "the wrong functor or group")
        return out

    def apply_cat(self, m):
        """The induced linear functor between the categories."""
        return CatMorphism(self.target, m.source, m.target,
                           self.apply(m.value))

    def matrix(self, G):
        """Exact matrix of f_G over the canonical bases."""
        cols = [self.target.coords(self.apply(b))
                for b in self.source.basis(G)]
        rows = self.target.dim(G)
        return [tuple(cols[j][i] for j in range(len(cols)))
                for i in range(rows)]

    def validate(self, groups, bisets):
        """Check unital algebra maps and naturality; list of failure tags."""
        failures = []
        for G in groups:
            if self.apply(self.source.one(G)) != self.target.one(G):
                failures.append(f"unit@{G.name}")
            basis = self.source.basis(G)
            for a in basis:
                fa = self.apply(a)
                for b in basis:
                    if self.apply(self.source.mul(a, b)) != \
                            self.target.mul(fa, self.apply(b)):
                        failures.append(f"multiplicative@{G.name}")
                        break
                else:
                    continue
                break
        for x in bisets:
            for a in self.source.basis(x.right):
                if self.apply(self.source.act(x, a)) != \
                        self.target.act(x, self.apply(a)):
                    failures.append(f"naturality@B({x.left.name},"
                                    f"{x.right.name})")
                    break
        return failures

    def __repr__(self):
        return (f"<GreenFunctorMorphism {self.name}: {self.source.tag} -> "
                f"{self.target.tag}>")


def identity_morphism(A):
    return GreenFunctorMorphism(A, A, lambda a: a, name="id")


def compose_morphisms(g, f):
    if f.target is not g.source:
        raise GroupError("functor morphisms not composable")
    return GreenFunctorMorphism(f.source, g.target,
                                lambda a: g.apply(f.apply(a)),
                                name=f"{g.name}o{f.name}")


def diagonal_embedding(base, matrix):
    """a -> a . Id, the scalar-matrix embedding of A into M_n(A)."""
    if matrix.base is not base:
        raise GroupError("matrix functor is not over the given base")

    def apply_fn(a):
        z = base.zero(a.group)
        n = matrix.n
        return matrix.matrix(a.group, [[a if i == j else z
                                        for j in range(n)]
                                       for i in range(n)])

    return GreenFunctorMorphism(base, matrix, apply_fn, name="diag")


def lift_criterion_check(A, C, hom_map, biset_family):
    """Biset-equivariance test for a hom-set-indexed family of linear maps.

    ``hom_map(G, H, elem)`` sends elements of A(HxG) to C(HxG); the family
    entries are ``(x, (G, H), (K, L))`` with x in B(LxK, HxG).  True iff
    every entry commutes with the action of x.  This is the executable
    criterion for the family to come from a morphism of instances.
    """
    for x, (G, H), (K, L) in biset_family:
        src = direct_product([H, G])
        if x.right is not src or x.left is not direct_product([L, K]):
            raise GroupError("biset family entry does not match its "
                             "hom-sets")
        for a in A.basis(src):
            lhs = hom_map(K, L, A.act(x, a))
            rhs = C.act(x, hom_map(G, H, a))
            if lhs != rhs:
                return False
    return True
