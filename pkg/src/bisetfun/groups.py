"""Finite groups as explicit multiplication tables.

Everything downstream (bisets, functor evaluations, categories) works with
plain integer element indices, and the identity element is always index 0.
Direct products are flattened and interned, so equal factor sequences yield
the *same* group object and group compatibility is an identity test.
Canonical identifications (dropping trivial factors, regrouping) are never
silent: they are explicit `GroupHom` isomorphisms built by the helpers at
the bottom of this module.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field

import numpy as np

# Products of this order or less get a materialized Cayley table; larger
# products multiply through their factor decomposition.
_TABLE_LIMIT = 1400

_intern_lock = threading.Lock()

# tables shared between products that differ only by trivial factors
# (their index arithmetic is identical)
_shared_tables = {}


class GroupError(ValueError):
    """Invalid group data or incompatible group arguments."""


class FiniteGroup:
    """A finite group on element indices ``0..order-1`` with identity 0.

    Atomic groups carry an explicit Cayley table.  Product groups may skip
    the table (beyond ``_TABLE_LIMIT``) and multiply via the flattened
    factor list with mixed-radix index arithmetic.
    """

    _uid_counter = itertools.count()

    def __init__(self, name, order, table=None, factors=(), element_names=None,
                 validate=True):
        self.uid = next(FiniteGroup._uid_counter)
        self.name = name
        self.order = int(order)
        self.factors = tuple(factors)  # flattened; () means atomic
        self._element_names = element_names
        if self.order <= 0:
            raise GroupError(f"group {name!r}: order must be positive")
        if table is not None:
            table = np.asarray(table, dtype=np.int64)
            if table.shape != (self.order, self.order):
                raise GroupError(f"group {name!r}: table shape {table.shape} "
                                 f"does not match order {self.order}")
            self._table = table
        else:
            if not self.factors:
                raise GroupError(f"group {name!r}: atomic group needs a table")
            self._table = None
        if self.factors:
            strides = []
            acc = 1
            for g in reversed(self.factors):
                strides.append(acc)
                acc *= g.order
            self._strides = tuple(reversed(strides))
            if acc != self.order:
                raise GroupError(f"group {name!r}: factor orders do not "
                                 f"multiply to {self.order}")
        else:
            self._strides = ()
        if validate and self._table is not None:
            self._validate_table()
        self._inv = self._build_inverse()
        # lazily populated caches (safe to recompute; see module docstring)
        self._caches = {}

    # -- construction helpers ------------------------------------------------

    def _validate_table(self):
        t = self._table
        n = self.order
        if t.min() < 0 or t.max() >= n:
            raise GroupError(f"group {self.name!r}: table entries out of range")
        if not (np.array_equal(t[0], np.arange(n)) and
                np.array_equal(t[:, 0], np.arange(n))):
            raise GroupError(f"group {self.name!r}: index 0 is not a "
                             "two-sided identity")
        # full associativity sweep; fine at catalog scale
        lhs = t[t, :]    # lhs[a,b,c] = (ab)c
        rhs = t[:, t]    # rhs[a,b,c] = a(bc)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b, c = (int(v) for v in bad[0])
            raise GroupError(f"group {self.name!r}: associativity fails at "
                             f"triple ({a},{b},{c})")

    def _build_inverse(self):
        if self._table is not None:
            rows, cols = np.nonzero(self._table == 0)
            inv = np.empty(self.order, dtype=np.int64)
            inv[rows] = cols
            if np.any(self._table[np.arange(self.order), inv] != 0) or \
               np.any(self._table[inv, np.arange(self.order)] != 0):
                raise GroupError(f"group {self.name!r}: missing two-sided "
                                 "inverses")
            return inv
        return None

    # -- arithmetic ----------------------------------------------------------

    def mul_vec(self, a, b):
        """Vectorized multiplication of index arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._table is not None:
            return self._table[a, b]
        out = 0
        for g, stride in zip(self.factors, self._strides):
            da = (a // stride) % g.order
            db = (b // stride) % g.order
            out = out + g.mul_vec(da, db) * stride
        return out

    def inv_vec(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self._inv is not None:
            return self._inv[a]
        out = 0
        for g, stride in zip(self.factors, self._strides):
            out = out + g.inv_vec((a // stride) % g.order) * stride
        return out

    def mul(self, a, b):
        if self._table is not None:
            return int(self._table[a, b])
        return int(self.mul_vec(a, b))

    def inv(self, a):
        if self._inv is not None:
            return int(self._inv[a])
        return int(self.inv_vec(a))

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    @property
    def table(self):
        """Cayley table; materialized on demand for product groups."""
        if self._table is None:
            share_key = (self.order,
                         tuple(g.uid for g in self.factors if g.order > 1))
            got = _shared_tables.get(share_key)
            if got is None:
                idx = np.arange(self.order)
                got = self.mul_vec(idx[:, None],
                                   idx[None, :]).astype(np.int32)
                _shared_tables[share_key] = got
            self._table = got
            self._inv = self._build_inverse()
        return self._table

    def elements(self):
        return range(self.order)

    def element_name(self, i):
        if self._element_names is not None:
            return self._element_names[i]
        if self.factors:
            parts = []
            for g, stride in zip(self.factors, self._strides):
                parts.append(g.element_name((i // stride) % g.order))
            return "(" + ",".join(parts) + ")"
        return str(i)

    def generators(self):
        """A small generating set (greedy); for products, per-factor gens."""
        cached = self._caches.get("gens")
        if cached is not None:
            return cached
        if self.factors:
            gens = []
            for g, stride in zip(self.factors, self._strides):
                gens.extend(h * stride for h in g.generators())
        else:
            gens = []
            known = {0}
            for i in range(1, self.order):
                if i in known:
                    continue
                gens.append(i)
                known = set(_closure(self, list(known | {i})))
                if len(known) == self.order:
                    break
        self._caches["gens"] = gens
        return gens

    def is_abelian(self):
        cached = self._caches.get("abelian")
        if cached is None:
            t = self.table
            cached = bool(np.array_equal(t, t.T))
            self._caches["abelian"] = cached
        return cached

    def __repr__(self):
        return f"<FiniteGroup {self.name} |{self.order}|>"

    def __hash__(self):
        return self.uid

    def __eq__(self, other):
        return self is other


def build_group(name, table, element_names=None, validate=True):
    """Atomic group from an explicit Cayley table."""
    table = np.asarray(table, dtype=np.int64)
    return FiniteGroup(name, table.shape[0], table=table,
                       element_names=element_names, validate=validate)


# -- direct products ---------------------------------------------------------

_product_cache = {}


def _flat_factors(g):
    return g.factors if g.factors else (g,)


def direct_product(groups):
    """Interned direct product with tuple-lexicographic element indexing.

    Nested products flatten, so ``(G x H) x K`` and ``G x (H x K)`` are the
    same object.  A single factor returns the factor itself.  Trivial
    factors are kept (identifications with them are explicit isos).
    """
    groups = list(groups)
    if not groups:
        raise GroupError("direct_product: need at least one factor")
    flat = tuple(f for g in groups for f in _flat_factors(g))
    if len(flat) == 1:
        return flat[0]
    key = tuple(g.uid for g in flat)
    got = _product_cache.get(key)
    if got is not None:
        return got
    with _intern_lock:
        got = _product_cache.get(key)
        if got is not None:
            return got
        order = 1
        for g in flat:
            order *= g.order
        name = "x".join(g.name for g in flat)
        prod = FiniteGroup(name, order, table=None, factors=flat,
                           validate=False)
        if order <= _TABLE_LIMIT:
            prod.table  # materialize for fast scalar ops
        _product_cache[key] = prod
        return prod


def pair_group(left, right):
    """The product group housing subgroups that index B(left, right)."""
    return direct_product([left, right])


# -- subgroups ---------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element-index tuple."""
    group: FiniteGroup
    elements: tuple

    def __post_init__(self):
        if not self.elements or self.elements[0] != 0:
            raise GroupError("subgroup must contain the identity")

    @property
    def order(self):
        return len(self.elements)

    def as_array(self):
        return np.asarray(self.elements, dtype=np.int64)

    def __contains__(self, i):
        return i in set(self.elements)

    def __repr__(self):
        return f"<Subgroup |{self.order}| of {self.group.name}>"


def _elems(s):
    """Accept a Subgroup or a bare element tuple."""
    return s.elements if isinstance(s, Subgroup) else tuple(s)


def _closure(G, gens):
    """Sorted tuple of the subgroup generated by ``gens``."""
    known = {0}
    frontier = [0]
    gens = [g for g in gens if g != 0]
    for g in gens:
        if g not in known:
            known.add(g)
            frontier.append(g)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in known:
                    known.add(y)
                    new.append(y)
                y = G.mul(g, x)
                if y not in known:
                    known.add(y)
                    new.append(y)
        frontier = new
    return tuple(sorted(known))


def generated_subgroup(G, gens):
    return Subgroup(G, _closure(G, list(gens)))


def subgroup(G, elements):
    """Validated subgroup from an explicit element set."""
    elems = tuple(sorted(set(elements)))
    if not elems or elems[0] != 0:
        raise GroupError("subgroup must contain the identity (index 0)")
    arr = np.asarray(elems, dtype=np.int64)
    prods = np.unique(G.mul_vec(arr[:, None], arr[None, :]))
    if prods.shape[0] != arr.shape[0] or np.any(prods != arr):
        raise GroupError("element set is not closed under multiplication")
    return Subgroup(G, elems)


def is_subgroup_set(G, elements):
    try:
        subgroup(G, elements)
        return True
    except GroupError:
        return False


def whole_subgroup(G):
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G):
    return Subgroup(G, (0,))


def conjugate_subgroup(G, U, g):
    """The subgroup g U g^-1."""
    arr = np.asarray(_elems(U), dtype=np.int64)
    out = G.mul_vec(G.mul_vec(g, arr), G.inv(g))
    return Subgroup(G, tuple(sorted(int(v) for v in out)))


def minimal_conjugate(G, U):
    """Lexicographically minimal element tuple among all conjugates of U.

    This is the canonical representative used to key Burnside-module
    coefficients; conjugators only need to run over coset representatives
    of U, which keeps the sweep linear in |G|.
    """
    U = _elems(U)
    cache = G._caches.setdefault("minconj", {})
    got = cache.get(U)
    if got is not None:
        return got
    arr = np.asarray(U, dtype=np.int64)
    n = G.order
    if len(U) == n or len(U) == 1:
        cache[U] = U
        return U
    allg = np.arange(n)
    cosets = G.mul_vec(allg[:, None], arr[None, :])
    rep_min = cosets.min(axis=1)
    reps = np.flatnonzero(rep_min == allg)
    conj = G.mul_vec(cosets[reps], G.inv_vec(reps)[:, None])
    conj.sort(axis=1)
    best = conj[np.lexsort(conj.T[::-1])[0]]
    result = tuple(int(v) for v in best)
    cache[U] = result
    for row in np.unique(conj, axis=0):
        cache[tuple(int(v) for v in row)] = result
    return result


def are_conjugate(G, U, V):
    U, V = _elems(U), _elems(V)
    if len(U) != len(V):
        return False
    return minimal_conjugate(G, U) == minimal_conjugate(G, V)


def normalizer(G, U):
    """N_G(U), by direct sweep over the group."""
    arr = np.asarray(_elems(U), dtype=np.int64)
    n = G.order
    allg = np.arange(n)
    conj = G.mul_vec(G.mul_vec(allg[:, None], arr[None, :]),
                     G.inv_vec(allg)[:, None])
    conj.sort(axis=1)
    ok = np.all(conj == arr[None, :], axis=1)
    return Subgroup(G, tuple(int(v) for v in np.flatnonzero(ok)))


def is_normal(G, N):
    return normalizer(G, N).order == G.order


def all_subgroups(G):
    """Every subgroup of G, as sorted element tuples (cached).

    Breadth-first closure: extend each known subgroup by one extra
    generator until nothing new appears.
    """
    cached = G._caches.get("all_subgroups")
    if cached is not None:
        return cached
    triv = (0,)
    subs = {triv}
    frontier = [triv]
    while frontier:
        new = []
        for S in frontier:
            inside = set(S)
            for g in range(1, G.order):
                if g in inside:
                    continue
                T = _closure(G, list(S) + [g])
                if T not in subs:
                    subs.add(T)
                    new.append(T)
        frontier = new
    result = sorted(subs, key=lambda s: (len(s), s))
    G._caches["all_subgroups"] = result
    return result


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups, keyed by its minimal representative."""
    group: FiniteGroup
    representative: Subgroup
    index: int

    @property
    def order(self):
        return self.representative.order

    @property
    def key(self):
        return self.representative.elements

    @property
    def label(self):
        return f"o{self.order}c{self.index}"

    def __repr__(self):
        return f"<SubgroupClass {self.label} of {self.group.name}>"


def subgroup_classes(G):
    """Conjugacy classes of subgroups in canonical (order, lex) order."""
    cached = G._caches.get("classes")
    if cached is not None:
        return cached
    reps = sorted({minimal_conjugate(G, s) for s in all_subgroups(G)},
                  key=lambda s: (len(s), s))
    classes = [SubgroupClass(G, Subgroup(G, rep), i)
               for i, rep in enumerate(reps)]
    G._caches["classes"] = classes
    G._caches["class_index"] = {c.key: c.index for c in classes}
    return classes


def subgroup_class_index(G, U):
    """Canonical class index of a subgroup (enumerates classes of G)."""
    subgroup_classes(G)
    rep = minimal_conjugate(G, _elems(U))
    idx = G._caches["class_index"].get(rep)
    if idx is None:
        raise GroupError(f"subgroup not found among classes of {G.name}")
    return idx


def _closure_mask(G, gens):
    """Boolean membership mask of the subgroup generated by ``gens``."""
    known = np.zeros(G.order, dtype=bool)
    known[0] = True
    if not gens:
        return known
    garr = np.asarray(gens, dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        prods = np.concatenate(
            [G.mul_vec(frontier[:, None], garr[None, :]).ravel(),
             G.mul_vec(garr[:, None], frontier[None, :]).ravel()])
        prods = np.unique(prods)
        new = prods[~known[prods]]
        known[new] = True
        frontier = new
    return known


def subgroup_generators(G, U):
    """Small generating set of a subgroup (greedy, cached)."""
    U = _elems(U)
    cache = G._caches.setdefault("subgens", {})
    got = cache.get(U)
    if got is not None:
        return got
    gens = []
    known = _closure_mask(G, gens)
    size = 1
    for u in U:
        if not known[u]:
            gens.append(u)
            known = _closure_mask(G, gens)
            size = int(np.count_nonzero(known))
            if size == len(U):
                break
    cache[U] = gens
    return gens


def double_cosets(G, U, V):
    """Minimal representatives of the U\\G/V double cosets, ascending.

    Small cases sweep U x V orbits directly; larger ones partition the
    group by generator translations.
    """
    U, V = _elems(U), _elems(V)
    for S in (U, V):
        arr = np.asarray(S, dtype=np.int64)
        if arr.max(initial=0) >= G.order:
            raise GroupError("subgroup not contained in the group")
    n = G.order
    if n * (len(U) + len(V)) > 200_000:
        from scipy.sparse import coo_matrix
        from scipy.sparse.csgraph import connected_components
        allg = np.arange(n)
        rows, cols = [], []
        for u in subgroup_generators(G, U):
            rows.append(allg)
            cols.append(G.mul_vec(u, allg))
        for v in subgroup_generators(G, V):
            rows.append(allg)
            cols.append(G.mul_vec(allg, v))
        graph = coo_matrix(
            (np.ones(sum(r.shape[0] for r in rows), dtype=np.int8),
             (np.concatenate(rows), np.concatenate(cols))), shape=(n, n))
        _, labels = connected_components(graph, directed=False)
        order = np.lexsort((allg, labels))
        firsts = np.ones(n, dtype=bool)
        firsts[1:] = labels[order][1:] != labels[order][:-1]
        return sorted(int(x) for x in allg[order][firsts])
    Ua = np.asarray(U, dtype=np.int64)
    Va = np.asarray(V, dtype=np.int64)
    seen = np.zeros(n, dtype=bool)
    reps = []
    for x in range(n):
        if seen[x]:
            continue
        reps.append(x)
        coset = G.mul_vec(Ua[:, None], G.mul_vec(x, Va)[None, :])
        seen[coset.ravel()] = True
    return reps


def center(G):
    """Element tuple of the center (full sweep: row i equals column i)."""
    t = G.table
    ok = np.all(t == t.T, axis=1)
    return tuple(int(v) for v in np.flatnonzero(ok))


# -- homomorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    """Total map on element indices, verified multiplicative and unital."""
    source: FiniteGroup
    target: FiniteGroup
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise GroupError("homomorphism must be total on the source")
        if self.images[0] != 0:
            raise GroupError("homomorphism must send identity to identity")
        img = np.asarray(self.images, dtype=np.int64)
        idx = np.arange(self.source.order)
        lhs = img[self.source.mul_vec(idx[:, None], idx[None, :])]
        rhs = self.target.mul_vec(img[:, None], img[None, :])
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b = (int(v) for v in bad[0])
            raise GroupError(f"not a homomorphism: fails at pair ({a},{b})")

    def __call__(self, i):
        return self.images[i]

    def as_array(self):
        return np.asarray(self.images, dtype=np.int64)

    def is_surjective(self):
        return len(set(self.images)) == self.target.order

    def is_injective(self):
        return len(set(self.images)) == self.source.order

    def is_isomorphism(self):
        return self.source.order == self.target.order and self.is_injective()

    def kernel(self):
        return Subgroup(self.source,
                        tuple(i for i, v in enumerate(self.images) if v == 0))

    def __repr__(self):
        return f"<GroupHom {self.source.name} -> {self.target.name}>"


def identity_hom(G):
    return GroupHom(G, G, tuple(range(G.order)))


def compose_homs(second, first):
    """second o first."""
    if first.target is not second.source:
        raise GroupError("homomorphisms not composable")
    return GroupHom(first.source, second.target,
                    tuple(second.images[v] for v in first.images))


def inverse_hom(phi):
    if not phi.is_isomorphism():
        raise GroupError("cannot invert a non-bijective homomorphism")
    inv = [0] * phi.target.order
    for i, v in enumerate(phi.images):
        inv[v] = i
    return GroupHom(phi.target, phi.source, tuple(inv))


def _block_decode(idx, orders):
    digits = []
    for o in reversed(orders):
        digits.append(idx % o)
        idx //= o
    return list(reversed(digits))


def _block_encode(digits, orders):
    idx = 0
    for d, o in zip(digits, orders):
        idx = idx * o + d
    return idx


def diagonal(G):
    """G -> G x G, g |-> (g, g)."""
    P = direct_product([G, G])
    return GroupHom(G, P, tuple(g * G.order + g for g in range(G.order)))


def reversal(groups):
    """prod(groups) -> prod(reversed(groups)), reversing the listed blocks."""
    groups = list(groups)
    src = direct_product(groups)
    tgt = direct_product(list(reversed(groups)))
    orders = [g.order for g in groups]
    images = []
    for i in range(src.order):
        digits = _block_decode(i, orders)
        images.append(_block_encode(list(reversed(digits)),
                                    list(reversed(orders))))
    return GroupHom(src, tgt, tuple(images))


def swap(G, H):
    """tau: G x H -> H x G."""
    return reversal([G, H])


def projection(groups, i):
    """prod(groups) -> groups[i]."""
    groups = list(groups)
    src = direct_product(groups)
    orders = [g.order for g in groups]
    images = tuple(_block_decode(x, orders)[i] for x in range(src.order))
    return GroupHom(src, groups[i], images)


def inclusion(groups, i):
    """groups[i] -> prod(groups), identity elsewhere."""
    groups = list(groups)
    tgt = direct_product(groups)
    orders = [g.order for g in groups]
    images = []
    for x in range(groups[i].order):
        digits = [0] * len(groups)
        digits[i] = x
        images.append(_block_encode(digits, orders))
    return GroupHom(groups[i], tgt, tuple(images))


def hom_to_trivial(G, trivial):
    return GroupHom(G, trivial, tuple([0] * G.order))


_unit_iso_cache = {}


def unit_identification(P, Q):
    """Canonical isomorphism between products differing by trivial factors.

    With flattened tuple-lexicographic indexing the index map is the
    identity; it is still returned (and verified once) as an explicit hom.
    """
    if P.order != Q.order:
        raise GroupError("unit identification needs equal orders")
    key = (P.uid, Q.uid)
    got = _unit_iso_cache.get(key)
    if got is None:
        got = GroupHom(P, Q, tuple(range(P.order)))
        _unit_iso_cache[key] = got
    return got


def find_isomorphism(G, H):
    """Brute-force isomorphism search for small groups; None if none exists.

    Backtracks on generator images only; intended for catalog-scale orders.
    """
    if G.order != H.order:
        return None
    gens = G.generators()
    if not gens:  # trivial group
        return GroupHom(G, H, (0,))
    h_orders = {}
    for x in range(H.order):
        k, y = 1, x
        while y != 0:
            y = H.mul(y, x)
            k += 1
        h_orders[x] = k

    def elem_order(Grp, x):
        k, y = 1, x
        while y != 0:
            y = Grp.mul(y, x)
            k += 1
        return k

    g_orders = [elem_order(G, g) for g in gens]

    def extend(assign):
        # rebuild the partial map from generator images
        images = {0: 0}
        frontier = [0]
        pairs = list(zip(gens[: len(assign)], assign))
        while frontier:
            new = []
            for x in frontier:
                for g, h in pairs:
                    for xx, hh in ((G.mul(x, g), H.mul(images[x], h)),
                                   (G.mul(g, x), H.mul(h, images[x]))):
                        prev = images.get(xx)
                        if prev is None:
                            images[xx] = hh
                            new.append(xx)
                        elif prev != hh:
                            return None
            frontier = new
        if len(set(images.values())) != len(images):
            return None
        return images

    def search(assign):
        images = extend(assign)
        if images is None:
            return None
        if len(assign) == len(gens):
            if len(images) != G.order:
                return None
            return GroupHom(G, H, tuple(images[i] for i in range(G.order)))
        k = len(assign)
        for cand in range(H.order):
            if h_orders[cand] != g_orders[k]:
                continue
            got = search(assign + [cand])
            if got is not None:
                return got
        return None

    try:
        return search([])
    except GroupError:
        return None


# -- quotients and subgroup realizations --------------------------------------

def quotient(G, N):
    """(G/N, projection hom); cosets indexed by ascending minimal element."""
    N = _elems(N)
    key = ("quotient", N)
    got = G._caches.get(key)
    if got is not None:
        return got
    if not is_normal(G, Subgroup(G, N)):
        raise GroupError(f"subgroup is not normal in {G.name}")
    arr = np.asarray(N, dtype=np.int64)
    allg = np.arange(G.order)
    rep_of = G.mul_vec(allg[:, None], arr[None, :]).min(axis=1)
    reps = np.unique(rep_of)
    index_of = {int(r): i for i, r in enumerate(reps)}
    q = len(reps)
    table = np.empty((q, q), dtype=np.int64)
    for i, a in enumerate(reps):
        table[i] = [index_of[int(rep_of[G.mul(int(a), int(b))])] for b in reps]
    Q = FiniteGroup(f"{G.name}/N{len(N)}", q, table=table, validate=True)
    proj = GroupHom(G, Q, tuple(index_of[int(r)] for r in rep_of))
    G._caches[key] = (Q, proj)
    return Q, proj


def subgroup_as_group(G, U):
    """(U as an abstract group, inclusion hom into G)."""
    U = _elems(U)
    key = ("subgroup_group", U)
    got = G._caches.get(key)
    if got is not None:
        return got
    index_of = {u: i for i, u in enumerate(U)}
    arr = np.asarray(U, dtype=np.int64)
    prods = G.mul_vec(arr[:, None], arr[None, :])
    try:
        table = np.vectorize(index_of.__getitem__)(prods)
    except KeyError:
        raise GroupError("element set is not closed under multiplication")
    S = FiniteGroup(f"{G.name}|sub{len(U)}", len(U), table=table,
                    validate=True)
    incl = GroupHom(S, G, U)
    G._caches[key] = (S, incl)
    return S, incl
