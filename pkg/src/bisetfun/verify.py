"""Executable law suites over a window of small groups.

Every universally quantified statement the library implements becomes a
check here, quantified over the configured window (exhaustively where the
combinatorics allow, with seeded sampling where they explode; each check
records which).  Suites are deterministic: same window, same seed, same
report bytes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from . import bisets as bs
from . import category as ct
from . import green as gn
from . import star as st
from .catalog import BUILTIN, DEFAULT_WINDOW, TRIVIAL, resolve_window
from .groups import (GroupError, all_subgroups, diagonal, direct_product,
                     double_cosets, identity_hom, inclusion, is_normal,
                     minimal_conjugate, pair_group, projection, quotient,
                     reversal, subgroup_as_group, subgroup_classes, swap,
                     unit_identification, whole_subgroup)

SUITES = ("biset-identities", "green-axioms", "category", "star",
          "orthogonal")


@dataclass
class Check:
    tag: str
    ok: bool
    witness: str = ""
    mode: str = "exhaustive"

    def to_json(self):
        out = {"tag": self.tag, "ok": self.ok, "mode": self.mode}
        if not self.ok:
            out["witness"] = self.witness
        return out


def _subset_closure_oracle(G):
    """Independent subgroup enumeration: filter all identity-containing
    subsets for closure.  Exponential; only for tiny groups."""
    elems = list(range(1, G.order))
    found = []
    for mask in range(1 << len(elems)):
        cand = {0} | {elems[i] for i in range(len(elems))
                      if mask & (1 << i)}
        ok = all(G.mul(a, b) in cand for a in cand for b in cand)
        if ok:
            found.append(tuple(sorted(cand)))
    return sorted(found)


class Verifier:
    """Runs suites over a window and collects Check records."""

    def __init__(self, window=None, bound=2, max_order=6,
                 high_arity_order=3, seed=0, sample_size=40, ring="int",
                 corrupt=None, groups=None):
        groups = groups or BUILTIN
        names = list(window or DEFAULT_WINDOW)
        self.window = resolve_window(groups, names)
        self.window_names = names
        self.bound = bound
        self.max_order = max_order
        self.high_arity_order = high_arity_order
        self.seed = seed
        self.sample_size = sample_size
        self.ring = ring
        self.corrupt = corrupt or ()
        self.checks = []
        self.B = gn.burnside_functor("int")
        self.M2 = gn.matrix_functor(self.B, 2)
        self.Bop = gn.opposite_functor(self.B)

    # -- bookkeeping ----------------------------------------------------------

    def check(self, tag, ok, witness="", mode="exhaustive"):
        self.checks.append(Check(tag, bool(ok), witness, mode))

    def rng(self, salt):
        return random.Random(f"{self.seed}:{salt}")

    def small_window(self, max_order):
        return [G for G in self.window if G.order <= max_order]

    def basis_elements(self, H, G):
        """Transitive classes of B(H, G), cached per pair."""
        P = pair_group(H, G)
        key = "verify_basis"
        cached = P._caches.get(key)
        if cached is None:
            cached = [bs.element_from_subgroup(H, G, c.representative)
                      for c in subgroup_classes(P)]
            P._caches[key] = cached
        return cached

    def window_homs(self):
        """Identity, subgroup inclusions and quotient projections for each
        window group."""
        homs = []
        for G in self.window:
            homs.append(("id", identity_hom(G)))
            for cls in subgroup_classes(G):
                S, incl = subgroup_as_group(G, cls.representative)
                homs.append(("incl", incl))
                if is_normal(G, cls.representative):
                    Q, proj = quotient(G, cls.representative)
                    homs.append(("proj", proj))
        return homs

    def window_surjections(self):
        return [phi for kind, phi in self.window_homs()
                if kind in ("id", "proj")]

    def generator_bisets(self):
        """Standard bisets along window homomorphisms (pure classes)."""
        out = []
        for kind, phi in self.window_homs():
            out.append(bs.ind_biset(phi))
            out.append(bs.res_biset(phi))
        for G in self.window:
            out.append(bs.identity_element(G))
        return out

    # -- suite: biset-identities ----------------------------------------------

    def suite_biset_identities(self):
        self._group_axioms()
        self._subgroup_machinery()
        self._oracle_equivalence()
        self._compose_associativity()
        self._opposite_laws()
        self._external_laws()
        self._reflection_identities()
        self._arrow_identities()
        self._marks_and_units()

    def _group_axioms(self):
        for G in self.window:
            t = G.table
            import numpy as np
            lhs = t[t, :]    # (ab)c
            rhs = t[:, t]    # a(bc)
            self.check(f"group-associativity@{G.name}",
                       bool(np.array_equal(lhs, rhs)))
            inv = G.inv_vec(np.arange(G.order))
            self.check(f"group-inverse-involution@{G.name}",
                       bool(np.array_equal(inv[inv], np.arange(G.order))))

    def _subgroup_machinery(self):
        import numpy as np
        for G in self.window:
            classes = subgroup_classes(G)
            subs = all_subgroups(G)
            covered = {minimal_conjugate(G, s) for s in subs}
            self.check(f"subgroup-classes-exhaustive@{G.name}",
                       covered == {c.key for c in classes})
            pairwise = all(minimal_conjugate(G, a.key) !=
                           minimal_conjugate(G, b.key)
                           for i, a in enumerate(classes)
                           for b in classes[i + 1:])
            self.check(f"subgroup-classes-distinct@{G.name}", pairwise)
            if G.order <= 8:
                oracle = _subset_closure_oracle(G)
                self.check(f"subgroup-enumeration-vs-subset-oracle@{G.name}",
                           sorted(subs) == oracle)
            for U in classes:
                for V in classes:
                    reps = double_cosets(G, U.representative,
                                         V.representative)
                    seen = np.zeros(G.order, dtype=np.int64)
                    Ua = U.representative.as_array()
                    Va = V.representative.as_array()
                    for x in reps:
                        coset = G.mul_vec(Ua[:, None],
                                          G.mul_vec(x, Va)[None, :])
                        seen[np.unique(coset.ravel())] += 1
                    if not (seen == 1).all():
                        self.check(f"double-cosets-partition@{G.name}",
                                   False,
                                   f"U={U.label},V={V.label}")
                        break
            else:
                self.check(f"double-cosets-partition@{G.name}", True)
            for cls in classes:
                if is_normal(G, cls.representative):
                    Q, proj = quotient(G, cls.representative)
                    ok = (proj.is_surjective() and
                          proj.kernel().elements ==
                          cls.representative.elements)
                    if not ok:
                        self.check(f"quotient-projection@{G.name}", False,
                                   cls.label)
                        break
            else:
                self.check(f"quotient-projection@{G.name}", True)

    def _oracle_equivalence(self):
        for K in self.window:
            for H in self.window:
                bL = self.basis_elements(K, H)
                for G in self.window:
                    bM = self.basis_elements(H, G)
                    ok, witness = True, ""
                    for i, y in enumerate(bL):
                        Ty = bs.transitive_biset(K, H, y.terms[0][0])
                        for j, x in enumerate(bM):
                            Tx = bs.transitive_biset(H, G, x.terms[0][0])
                            sym = bs.compose(y, x)
                            con = bs.classify(bs.concrete_compose(Ty, Tx))
                            if sym != con:
                                ok, witness = False, f"pair ({i},{j})"
                                break
                        if not ok:
                            break
                    self.check("mackey-vs-concrete@"
                               f"{K.name},{H.name},{G.name}", ok, witness)

    def _compose_associativity(self):
        small = self.small_window(self.high_arity_order)
        for L in small:
            for K in small:
                for H in small:
                    for G in small:
                        ok, witness = True, ""
                        for z in self.basis_elements(L, K):
                            for y in self.basis_elements(K, H):
                                for x in self.basis_elements(H, G):
                                    lhs = bs.compose(bs.compose(z, y), x)
                                    rhs = bs.compose(z, bs.compose(y, x))
                                    if lhs != rhs:
                                        ok = False
                                        witness = "triple mismatch"
                                        break
                                if not ok:
                                    break
                            if not ok:
                                break
                        self.check("compose-associative@"
                                   f"{L.name},{K.name},{H.name},{G.name}",
                                   ok, witness)
        rng = self.rng("assoc")
        names = [G.name for G in self.window]
        ok, witness = True, ""
        for _ in range(self.sample_size):
            L, K, H, G = (self.window[rng.randrange(len(self.window))]
                          for _ in range(4))
            z = rng.choice(self.basis_elements(L, K))
            y = rng.choice(self.basis_elements(K, H))
            x = rng.choice(self.basis_elements(H, G))
            if bs.compose(bs.compose(z, y), x) != \
                    bs.compose(z, bs.compose(y, x)):
                ok, witness = False, (f"{L.name},{K.name},{H.name},{G.name}")
                break
        self.check(f"compose-associative-sampled@{','.join(names)}", ok,
                   witness, mode="sampled")

    def _opposite_laws(self):
        for H in self.window:
            for G in self.window:
                basis = self.basis_elements(H, G)
                ok = all(bs.opposite(bs.opposite(x)) == x for x in basis)
                self.check(f"opposite-involutive@{H.name},{G.name}", ok)
            self.check(f"opposite-fixes-identity@{H.name}",
                       bs.opposite(bs.identity_element(H)) ==
                       bs.identity_element(H))
        for K in self.window:
            for H in self.window:
                for G in self.window:
                    ok, witness = True, ""
                    for i, y in enumerate(self.basis_elements(K, H)):
                        for j, x in enumerate(self.basis_elements(H, G)):
                            lhs = bs.opposite(bs.compose(y, x))
                            rhs = bs.compose(bs.opposite(x), bs.opposite(y))
                            if lhs != rhs:
                                ok, witness = False, f"pair ({i},{j})"
                                break
                        if not ok:
                            break
                    self.check("opposite-contravariant@"
                               f"{K.name},{H.name},{G.name}", ok, witness)

    def _external_laws(self):
        point = bs.identity_element(TRIVIAL)
        for H in self.window:
            for G in self.window:
                ok, witness = True, ""
                for i, x in enumerate(self.basis_elements(H, G)):
                    ext = bs.external(x, point)
                    lhs = bs.compose(
                        bs.iso_biset(unit_identification(
                            direct_product([H, TRIVIAL]), H)),
                        bs.compose(ext, bs.iso_biset(unit_identification(
                            G, direct_product([G, TRIVIAL])))))
                    if lhs != x:
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"external-unit@{H.name},{G.name}", ok, witness)
        rng = self.rng("bifunctorial")
        ok, witness = True, ""
        for _ in range(self.sample_size):
            K, H, G, Lg, Kg, Gg = (self.window[rng.randrange(
                len(self.window))] for _ in range(6))
            y = rng.choice(self.basis_elements(K, H))
            x = rng.choice(self.basis_elements(H, G))
            d = rng.choice(self.basis_elements(Lg, Kg))
            c = rng.choice(self.basis_elements(Kg, Gg))
            lhs = bs.external(bs.compose(y, x), bs.compose(d, c))
            rhs = bs.compose(bs.external(y, d), bs.external(x, c))
            if lhs != rhs:
                ok, witness = False, (f"{K.name},{H.name},{G.name}/"
                                      f"{Lg.name},{Kg.name},{Gg.name}")
                break
        self.check("external-bifunctorial-sampled", ok, witness,
                   mode="sampled")

    def _reflection_identities(self):
        win = self.small_window(self.max_order)
        for G in win:
            for H in win:
                lhs = bs.compose(bs.iso_biset(swap(G, H)),
                                 bs.iso_biset(swap(H, G)))
                self.check(f"swap-involution@{G.name},{H.name}",
                           lhs == bs.identity_element(
                               direct_product([H, G])))
                inf1 = bs.res_biset(projection([G, H], 0))
                inf2 = bs.res_biset(projection([H, G], 1))
                okA = bs.compose(bs.iso_biset(swap(G, H)), inf1) == inf2
                r2 = bs.res_biset(inclusion([H, G], 1))
                r1 = bs.res_biset(inclusion([G, H], 0))
                okB = bs.compose(r2, bs.iso_biset(swap(G, H))) == r1
                self.check(f"swap-inflation@{G.name},{H.name}", okA)
                self.check(f"swap-restriction@{G.name},{H.name}", okB)
            d = diagonal(G)
            okA = bs.compose(bs.iso_biset(swap(G, G)), bs.ind_biset(d)) == \
                bs.ind_biset(d)
            okB = bs.compose(bs.res_biset(d), bs.iso_biset(swap(G, G))) == \
                bs.res_biset(d)
            self.check(f"swap-diagonal@{G.name}", okA and okB)
            self.check(f"swap-fixes-translation-set@{G.name}",
                       bs.compose(bs.iso_biset(swap(G, G)),
                                  bs.right_arrow(G)) == bs.right_arrow(G))
        high = self.small_window(self.high_arity_order)
        for G in high:
            for H in high:
                for K in high:
                    for L in high:
                        lhs = bs.iso_biset(reversal([G, H, K, L]))
                        m1 = bs.compose(
                            bs.iso_biset(swap(direct_product([H, G]),
                                              direct_product([L, K]))),
                            bs.external(bs.iso_biset(swap(G, H)),
                                        bs.iso_biset(swap(K, L))))
                        m2 = bs.compose(
                            bs.external(bs.iso_biset(swap(K, L)),
                                        bs.iso_biset(swap(G, H))),
                            bs.iso_biset(swap(direct_product([G, H]),
                                              direct_product([K, L]))))
                        ok = (lhs == m1 and lhs == m2)
                        self.check("reversal-via-swaps@"
                                   f"{G.name},{H.name},{K.name},{L.name}",
                                   ok)
        for G in high:
            for H in high:
                for K in high:
                    self.check(f"swap-middle-contraction@{G.name},{H.name},"
                               f"{K.name}", self._middle_swap_law(G, H, K))

    def _middle_swap_law(self, G, H, K):
        u_ghk = bs.external(bs.external(bs.identity_element(G),
                                        bs.left_arrow(H)),
                            bs.identity_element(K))
        drop1 = bs.iso_biset(unit_identification(
            direct_product([G, TRIVIAL, K]), direct_product([G, K])))
        lhs = bs.compose(bs.iso_biset(swap(G, K)),
                         bs.compose(drop1, u_ghk))
        u_khg = bs.external(bs.external(bs.identity_element(K),
                                        bs.left_arrow(H)),
                            bs.identity_element(G))
        rho = bs.iso_biset(reversal([G, H, H, K]))
        drop2 = bs.iso_biset(unit_identification(
            direct_product([K, TRIVIAL, G]), direct_product([K, G])))
        rhs = bs.compose(drop2, bs.compose(u_khg, rho))
        return lhs == rhs

    def _arrow_identities(self):
        for K in self.window:
            for H in self.window:
                for G in self.window:
                    ok, witness = True, ""
                    for i, y in enumerate(self.basis_elements(K, H)):
                        for j, x in enumerate(self.basis_elements(H, G)):
                            if not self._arrow_of_composite(K, H, G, y, x):
                                ok, witness = False, f"pair ({i},{j})"
                                break
                        if not ok:
                            break
                    self.check("arrow-of-composite@"
                               f"{K.name},{H.name},{G.name}", ok, witness)
        for G in self.window:
            self.check(f"arrow-of-identity@{G.name}",
                       bs.arrow(bs.identity_element(G)) ==
                       bs.compose(bs.right_arrow(G),
                                  bs.identity_element(TRIVIAL)))
        for H in self.window:
            for G in self.window:
                ok, witness = True, ""
                for i, x in enumerate(self.basis_elements(H, G)):
                    lhs = bs.arrow(bs.opposite(x))
                    rhs = bs.compose(bs.iso_biset(swap(H, G)), bs.arrow(x))
                    if lhs != rhs:
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"arrow-of-opposite@{H.name},{G.name}", ok,
                           witness)

    def _arrow_of_composite(self, K, H, G, y, x):
        lhs = bs.arrow(bs.compose(y, x))
        u = bs.external(bs.external(bs.identity_element(K),
                                    bs.left_arrow(H)),
                        bs.identity_element(G))
        raw = bs.compose(u, bs.external(bs.arrow(y), bs.arrow(x)))
        P11 = direct_product([TRIVIAL, TRIVIAL])
        fix_right = bs.compose(raw, bs.iso_biset(
            unit_identification(TRIVIAL, P11)))
        rhs = bs.compose(bs.iso_biset(unit_identification(
            direct_product([K, TRIVIAL, G]), direct_product([K, G]))),
            fix_right)
        return lhs == rhs

    def _marks_and_units(self):
        B = self.B
        for G in self.window:
            classes = subgroup_classes(G)
            tom = bs.table_of_marks(G)
            tri = all(tom[v][u] == 0
                      for v in range(len(classes))
                      for u in range(len(classes))
                      if classes[u].order > classes[v].order)
            self.check(f"marks-triangular@{G.name}", tri)
            ones = bs.marks(B.basis(G)[-1].payload)
            self.check(f"marks-whole-set-all-ones@{G.name}",
                       all(m == 1 for m in ones))
            units = bs.burnside_units(G)
            ok = all(all(abs(m) == 1 for m in bs.marks(u)) for u in units)
            self.check(f"unit-ghost-signs@{G.name}", ok)
            wrapped = [B.element(G, u) for u in units]
            pool = {B.coords(u) for u in wrapped}
            closed = all(B.coords(u.scale(-1)) in pool and
                         B.coords(B.mul(u, v)) in pool
                         for u in wrapped for v in wrapped)
            self.check(f"unit-group-closed@{G.name}", closed)
            sq = all(B.mul(u, u) == B.one(G) for u in wrapped)
            self.check(f"unit-self-inverse@{G.name}", sq)

    # -- suite: green-axioms ----------------------------------------------------

    def suite_green_axioms(self):
        self._act_functorial()
        self._frobenius_and_res()
        self._product_roundtrips()
        self._cross_laws()
        self._initial_morphism_checks()
        self._opposite_and_matrix_instances()
        self._commutant_checks()

    def _act_functorial(self):
        B = self.B
        for A, name, max_o in ((self.B, "B", self.max_order),
                               (self.M2, "M2", 3),
                               (self.Bop, "Bop", 3)):
            win = self.small_window(max_o)
            for G in win:
                ok = all(A.act(bs.identity_element(G), a) == a
                         for a in A.basis(G))
                self.check(f"act-identity[{name}]@{G.name}", ok)
            for K in win:
                for H in win:
                    for G in win:
                        ok, witness = True, ""
                        for i, y in enumerate(self.basis_elements(K, H)):
                            for j, x in enumerate(
                                    self.basis_elements(H, G)):
                                yx = bs.compose(y, x)
                                for k, a in enumerate(A.basis(G)):
                                    if A.act(yx, a) != \
                                            A.act(y, A.act(x, a)):
                                        ok = False
                                        witness = f"({i},{j},{k})"
                                        break
                                if not ok:
                                    break
                            if not ok:
                                break
                        self.check(f"act-functorial[{name}]@"
                                   f"{K.name},{H.name},{G.name}", ok,
                                   witness)

    def _frobenius_and_res(self):
        for A, name in ((self.B, "B"), (self.M2, "M2"), (self.Bop, "Bop")):
            for kind, phi in self.window_homs():
                H, G = phi.target, phi.source
                if H.order > self.max_order or G.order > self.max_order:
                    continue
                ok, witness = True, ""
                for i, a in enumerate(A.basis(H)):
                    for j, b in enumerate(A.basis(G)):
                        if not gn.frobenius_check(A, phi, a, b):
                            ok, witness = False, f"basis ({i},{j})"
                            break
                    if not ok:
                        break
                self.check(f"frobenius[{name}]@{kind}:{G.name}->{H.name}",
                           ok, witness)
                self.check(f"restriction-algebra-hom[{name}]@{kind}:"
                           f"{G.name}->{H.name}",
                           gn.res_is_algebra_hom_check(A, phi))

    def _product_roundtrips(self):
        # cross rebuilt from mul via the two inflations reproduces cross
        for A, name in ((self.B, "B"), (self.M2, "M2")):
            win = self.small_window(4 if A is self.M2 else self.max_order)
            for G in win:
                for H in win:
                    GH = direct_product([G, H])
                    inf1 = bs.res_biset(projection([G, H], 0))
                    inf2 = bs.res_biset(projection([G, H], 1))
                    ok, witness = True, ""
                    for i, a in enumerate(A.basis(G)):
                        for j, b in enumerate(A.basis(H)):
                            rebuilt = A.mul(A.act(inf1, a), A.act(inf2, b))
                            if rebuilt != A.cross(a, b):
                                ok, witness = False, f"basis ({i},{j})"
                                break
                        if not ok:
                            break
                    self.check(f"cross-from-mul[{name}]@{G.name},{H.name}",
                               ok, witness)
        # independent oracle for the Burnside product: diagonal restriction
        # of the concrete cartesian G-set
        B = self.B
        for G in self.window:
            classes = subgroup_classes(G)
            ok, witness = True, ""
            for i, U in enumerate(classes):
                XU = bs.transitive_biset(
                    G, TRIVIAL, minimal_conjugate(
                        pair_group(G, TRIVIAL), U.representative.elements))
                for j, V in enumerate(classes):
                    XV = bs.transitive_biset(
                        G, TRIVIAL, minimal_conjugate(
                            pair_group(G, TRIVIAL),
                            V.representative.elements))
                    prod = bs.external_biset(XU, XV)
                    # pull back along the diagonal: points keep both
                    # coordinates, G acts diagonally, right side trivial
                    dd = diagonal(G).as_array()
                    lt = prod.left_table[dd, :]
                    import numpy as np
                    rt = np.arange(prod.size, dtype=np.int64)[:, None]
                    diag_set = bs.ConcreteBiset(G, TRIVIAL, lt, rt,
                                                trusted=True)
                    oracle = bs.classify(diag_set)
                    sym = B.mul(B.basis(G)[i], B.basis(G)[j]).payload
                    if oracle != sym:
                        ok, witness = False, f"classes ({i},{j})"
                        break
                if not ok:
                    break
            self.check(f"mul-vs-diagonal-oracle@{G.name}", ok, witness)
            mk = [bs.marks(b.payload) for b in B.basis(G)]
            ok = True
            for i, a in enumerate(B.basis(G)):
                for j, b in enumerate(B.basis(G)):
                    prod_marks = bs.marks(B.mul(a, b).payload)
                    if prod_marks != [x * y for x, y in zip(mk[i], mk[j])]:
                        ok = False
                        break
                if not ok:
                    break
            self.check(f"marks-ring-homomorphism@{G.name}", ok)

    def _cross_laws(self):
        for A, name in ((self.B, "B"), (self.M2, "M2")):
            for H in self.small_window(4):
                ok, witness = True, ""
                for i, b in enumerate(A.basis(H)):
                    crossed = A.cross(A.unit(), b)
                    moved = A.act(bs.iso_biset(unit_identification(
                        direct_product([TRIVIAL, H]), H)), crossed)
                    if moved != b:
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"cross-unit[{name}]@{H.name}", ok, witness)
        rng = self.rng("cross-assoc")
        B = self.B
        ok, witness = True, ""
        for _ in range(self.sample_size):
            G, H, K = (self.window[rng.randrange(len(self.window))]
                       for _ in range(3))
            a = rng.choice(B.basis(G))
            b = rng.choice(B.basis(H))
            c = rng.choice(B.basis(K))
            if B.cross(B.cross(a, b), c) != B.cross(a, B.cross(b, c)):
                ok, witness = False, f"{G.name},{H.name},{K.name}"
                break
        self.check("cross-associative-sampled[B]", ok, witness,
                   mode="sampled")

    def _initial_morphism_checks(self):
        B = self.B
        for G in self.window:
            ok = all(gn.initial_morphism(B, x.payload) == x
                     for x in B.basis(G))
            self.check(f"initial-morphism-identity-on-burnside@{G.name}",
                       ok)
        for A, name in ((self.M2, "M2"), (self.Bop, "Bop")):
            for G in self.small_window(4):
                # the class of the one-point G-set is 1 in B(G)
                ok = gn.initial_morphism(A, B.basis(G)[-1].payload) == \
                    A.one(G)
                self.check(f"initial-morphism-unital[{name}]@{G.name}", ok)
                okm = True
                for a in B.basis(G):
                    for b in B.basis(G):
                        lhs = gn.initial_morphism(A, B.mul(a, b).payload)
                        rhs = A.mul(gn.initial_morphism(A, a.payload),
                                    gn.initial_morphism(A, b.payload))
                        if lhs != rhs:
                            okm = False
                            break
                    if not okm:
                        break
                self.check(f"initial-morphism-multiplicative[{name}]@"
                           f"{G.name}", okm)
        for A, name in ((self.B, "B"), (self.M2, "M2")):
            for x in self.generator_bisets():
                H, G = x.left, x.right
                if max(H.order, G.order) > 6:
                    continue
                ok, witness = True, ""
                for i, y in enumerate(self.B.basis(G)):
                    lhs = gn.initial_morphism(A, self.B.act(x, y).payload)
                    rhs = A.act(x, gn.initial_morphism(A, y.payload))
                    if lhs != rhs:
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"initial-morphism-natural[{name}]@"
                           f"B({H.name},{G.name})", ok, witness)

    def _opposite_and_matrix_instances(self):
        B, Bop, M2 = self.B, self.Bop, self.M2
        Bopop = gn.opposite_functor(Bop)
        for G in self.window:
            ok = True
            for a in B.basis(G):
                for b in B.basis(G):
                    x2 = Bopop.wrap(Bop.wrap(a))
                    y2 = Bopop.wrap(Bop.wrap(b))
                    if Bopop.mul(x2, y2).payload.payload != B.mul(a, b):
                        ok = False
                        break
                if not ok:
                    break
            self.check(f"double-opposite-restores-mul@{G.name}", ok)
            okc = all(Bop.mul(Bop.wrap(a), Bop.wrap(b)).payload ==
                      B.mul(b, a)
                      for a in B.basis(G) for b in B.basis(G))
            self.check(f"opposite-reverses-mul@{G.name}", okc)
            okb = all(Bop.mul(Bop.wrap(a), Bop.wrap(b)).payload ==
                      B.mul(a, b)
                      for a in B.basis(G) for b in B.basis(G))
            self.check(f"burnside-commutative@{G.name}", okb)
        e12 = M2.elementary(TRIVIAL, 0, 1, B.one(TRIVIAL))
        e21 = M2.elementary(TRIVIAL, 1, 0, B.one(TRIVIAL))
        self.check("matrix-noncommutative@1",
                   M2.mul(e12, e21) != M2.mul(e21, e12),
                   "elementary matrices commute")

    def _commutant_checks(self):
        B, M2 = self.B, self.M2
        witnesses = [(H, b) for H in self.small_window(4)
                     for b in B.basis(H)]
        for G in self.window:
            self.check(f"commutant-unit@{G.name}",
                       gn.commutant_check(B, B.one(G), witnesses))
            ok = all(gn.commutant_check(B, a, witnesses)
                     for a in B.basis(G))
            self.check(f"commutant-burnside-full@{G.name}", ok)
        m_wit = [(TRIVIAL, M2.elementary(TRIVIAL, 1, 0, B.one(TRIVIAL)))]
        off = M2.elementary(TRIVIAL, 0, 1, B.one(TRIVIAL))
        self.check("commutant-matrix-counterexample@1",
                   not gn.commutant_check(M2, off, m_wit))

    # -- suite: category ---------------------------------------------------------

    def suite_category(self):
        self._pb_consistency()
        self._tilde_suite()
        self._double_algebra_suite()
        self._t_iso_suite()
        self._endo_inverse_suite()
        self._induced_functor_suite()

    def _as_mor(self, x):
        return ct.CatMorphism(self.B, x.right, x.left,
                              self.B.wrap_biset(bs.arrow(x)))

    def _pb_consistency(self):
        for K in self.window:
            for H in self.window:
                for G in self.window:
                    ok, witness = True, ""
                    for i, y in enumerate(self.basis_elements(K, H)):
                        my = self._as_mor(y)
                        for j, x in enumerate(self.basis_elements(H, G)):
                            lhs = ct.cat_compose(my, self._as_mor(x))
                            rhs = self._as_mor(bs.compose(y, x))
                            if lhs != rhs:
                                ok, witness = False, f"pair ({i},{j})"
                                break
                        if not ok:
                            break
                    self.check("category-composition-matches-mackey@"
                               f"{K.name},{H.name},{G.name}", ok, witness)
        for G in self.window:
            self.check(f"category-identity-is-diagonal-class@{G.name}",
                       ct.cat_identity(self.B, G).value.payload ==
                       bs.arrow(bs.identity_element(G)))

    def _tilde_suite(self):
        for A, name, max_o in ((self.B, "B", self.max_order),
                               (self.M2, "M2", 4)):
            for G in self.small_window(max_o):
                basis = A.basis(G)
                ident = ct.cat_identity(A, G)
                self.check(f"tilde-unit[{name}]@{G.name}",
                           ct.tilde(A, A.one(G)) == ident)
                ok, witness = True, ""
                for i, a in enumerate(basis):
                    ta = ct.tilde(A, a)
                    if ct.tilde_retract(A, ta) != a:
                        self.check(f"tilde-retraction[{name}]@{G.name}",
                                   False, f"basis {i}")
                        break
                    for j, b in enumerate(basis):
                        if ct.tilde(A, A.mul(a, b)) != \
                                ct.cat_compose(ta, ct.tilde(A, b)):
                            ok, witness = False, f"({i},{j}) mult"
                            break
                        if ct.cat_apply(ta, b) != A.mul(a, b):
                            ok, witness = False, f"({i},{j}) action"
                            break
                        if not ct.tilde_cross_check(A, a, b):
                            ok, witness = False, f"({i},{j}) cross"
                            break
                    if not ok:
                        break
                else:
                    self.check(f"tilde-retraction[{name}]@{G.name}", True)
                self.check(f"tilde-multiplicative-and-acting[{name}]@"
                           f"{G.name}", ok, witness)
            for kind, phi in self.window_homs():
                H, G = phi.target, phi.source
                if max(H.order, G.order) > max_o:
                    continue
                ok, witness = True, ""
                indp = bs.ind_biset(phi)
                for i, a in enumerate(A.basis(G)):
                    lhs = ct.tilde(A, A.act(indp, a))
                    rhs = ct.double_algebra(A, indp, ct.tilde(A, a))
                    if lhs != rhs:
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"tilde-induction-transport[{name}]@{kind}:"
                           f"{G.name}->{H.name}", ok, witness)

    def _double_algebra_suite(self):
        A = self.B
        for G in self.small_window(4):
            ident = ct.cat_identity(A, G)
            basis, _ = ct.endo_structure(A, G)
            ok = all(ct.double_algebra(A, bs.identity_element(G), m) == m
                     for m in basis)
            self.check(f"double-algebra-identity@{G.name}", ok)
        # functoriality over composable standard bisets
        gens = [x for x in self.generator_bisets()
                if max(x.left.order, x.right.order) <= 4]
        ok, witness = True, ""
        for y in gens:
            for x in gens:
                if y.right is not x.left:
                    continue
                yx = bs.compose(y, x)
                if len(yx.terms) != 1 or yx.terms[0][1] != 1:
                    continue  # composite leaves the pure-class domain
                basis, _ = ct.endo_structure(A, x.right)
                for i, m in enumerate(basis):
                    lhs = ct.double_algebra(A, yx, m)
                    rhs = ct.double_algebra(A, y,
                                            ct.double_algebra(A, x, m))
                    if lhs != rhs:
                        ok = False
                        witness = (f"B({y.left.name},{y.right.name})o"
                                   f"B({x.left.name},{x.right.name}) "
                                   f"basis {i}")
                        break
                if not ok:
                    break
            if not ok:
                break
        self.check("double-algebra-functorial", ok, witness)
        for phi in self.window_surjections():
            H, G = phi.target, phi.source
            if max(H.order, G.order) > 4:
                continue
            resp = bs.res_biset(phi)
            basis, _ = ct.endo_structure(A, H)
            ok, witness = True, ""
            for i, m in enumerate(basis):
                fm = ct.double_algebra(A, resp, m)
                for j, m2 in enumerate(basis):
                    lhs = ct.double_algebra(A, resp,
                                            ct.cat_compose(m, m2))
                    rhs = ct.cat_compose(fm,
                                         ct.double_algebra(A, resp, m2))
                    if lhs != rhs:
                        ok, witness = False, f"({i},{j})"
                        break
                if not ok:
                    break
            self.check("double-algebra-restriction-multiplicative@"
                       f"{G.name}->{H.name}", ok, witness)
            mat = [[x for x in row] for row in _cat_matrix(
                A, lambda m: ct.double_algebra(A, resp, m), H, H, G, G)]
            from .linalg import kernel_is_trivial
            self.check("double-algebra-restriction-injective@"
                       f"{G.name}->{H.name}", kernel_is_trivial(mat))

    def _t_iso_suite(self):
        for A, Aop, name in ((self.B, self.Bop, "B"),
                             (self.M2, gn.opposite_functor(self.M2),
                              "M2")):
            win = self.window if A is self.B else self.small_window(3)
            for G in win:
                ident_op = ct.CatMorphism(
                    Aop, G, G, Aop.wrap(ct.cat_identity(A, G).value))
                self.check(f"t-iso-identity[{name}]@{G.name}",
                           ct.T_iso(ident_op) == ct.cat_identity(A, G))
            for K in win:
                for H in win:
                    for G in win:
                        ok, witness = True, ""
                        alphas = ct.hom_basis(Aop, H, K)
                        betas = ct.hom_basis(Aop, G, H)
                        for i, am in enumerate(alphas):
                            for j, bm in enumerate(betas):
                                lhs = ct.T_iso(ct.cat_compose(am, bm))
                                rhs = ct.cat_compose(ct.T_iso(bm),
                                                     ct.T_iso(am))
                                if lhs != rhs:
                                    ok, witness = False, f"({i},{j})"
                                    break
                            if not ok:
                                break
                        self.check(f"t-iso-contravariant[{name}]@"
                                   f"{K.name},{H.name},{G.name}", ok,
                                   witness)
            for G in win:
                for H in win:
                    ok = all(ct.T_iso_inv(ct.T_iso(m)) == m
                             for m in ct.hom_basis(Aop, G, H))
                    self.check(f"t-iso-invertible[{name}]@{G.name},"
                               f"{H.name}", ok)

    def _endo_inverse_suite(self):
        B = self.B
        for G in self.small_window(4):
            ident = ct.cat_identity(B, G)
            self.check(f"endo-inverse-identity@{G.name}",
                       ct.endo_inverse(ident) == ident)
            self.check(f"endo-inverse-zero-absent@{G.name}",
                       ct.endo_inverse(ct.cat_zero(B, G, G)) is None)
        C2 = BUILTIN["C2"]
        u = B.basis(C2)[0] - B.basis(C2)[1]
        tu = ct.tilde(B, u)
        self.check("endo-inverse-ghost-unit@C2",
                   ct.endo_inverse(tu) == tu)

    def _induced_functor_suite(self):
        B, M2 = self.B, self.M2
        f = ct.diagonal_embedding(B, M2)
        gens = [x for x in self.generator_bisets()
                if max(x.left.order, x.right.order) <= 4]
        self.check("instance-morphism-valid@diag",
                   not f.validate(self.small_window(4), gens))
        idf = ct.identity_morphism(B)
        for G in self.small_window(4):
            self.check(f"induced-functor-identity@{G.name}",
                       idf.apply_cat(ct.cat_identity(B, G)) ==
                       ct.cat_identity(B, G))
            self.check(f"induced-functor-preserves-identity@{G.name}",
                       f.apply_cat(ct.cat_identity(B, G)) ==
                       ct.cat_identity(M2, G))
        rng = self.rng("pf")
        win = self.small_window(4)
        ok, witness = True, ""
        for _ in range(self.sample_size):
            K, H, G = (win[rng.randrange(len(win))] for _ in range(3))
            am = rng.choice(ct.hom_basis(B, H, K))
            bm = rng.choice(ct.hom_basis(B, G, H))
            if f.apply_cat(ct.cat_compose(am, bm)) != \
                    ct.cat_compose(f.apply_cat(am), f.apply_cat(bm)):
                ok, witness = False, f"{K.name},{H.name},{G.name}"
                break
        self.check("induced-functor-preserves-composition-sampled@diag",
                   ok, witness, mode="sampled")
        # lift criterion: the induced family passes, a scaled family fails
        family = self._hom_biset_family(max_pair_order=4)
        self.check("lift-criterion-accepts-induced@diag",
                   ct.lift_criterion_check(
                       B, M2, lambda G, H, a: f.apply(a), family))
        bad = ct.lift_criterion_check(
            B, B,
            lambda G, H, a: a.scale(2) if G is TRIVIAL and H is TRIVIAL
            else a,
            family)
        self.check("lift-criterion-rejects-scaled", not bad)

    def _hom_biset_family(self, max_pair_order=4):
        """Transitive bisets between pair products of bounded order, plus
        external products of standard generating bisets.

        The externally-multiplied ind/res/iso bisets generate all
        transitive ones under composition, so equivariance laws checked on
        this family extend to the whole window by functoriality.
        """
        key = ("hom_family", max_pair_order, self.high_arity_order)
        cached = getattr(self, "_family_cache", {}).get(key)
        if cached is not None:
            return cached
        pairs = [(G, H) for G in self.window for H in self.window
                 if G.order * H.order <= max_pair_order]
        family = []
        for (G, H) in pairs:
            for (K, L) in pairs:
                src = direct_product([H, G])
                dst = direct_product([L, K])
                for x in self.basis_elements(dst, src):
                    family.append((x, (G, H), (K, L)))
        gens = [x for x in self.generator_bisets()
                if max(x.left.order, x.right.order) <=
                self.high_arity_order]
        for y in gens:
            for z in gens:
                x = bs.external(y, z)
                family.append((x, (z.right, y.right), (z.left, y.left)))
        if not hasattr(self, "_family_cache"):
            self._family_cache = {}
        self._family_cache[key] = family
        return family

    # -- suite: star --------------------------------------------------------------

    def _stars(self):
        """Burnside and matrix stars (optionally corrupted via test hook)."""
        SB = st.make_star_burnside(validate=False)
        SM = st.make_star_matrix(SB, 2, validate=False)
        if "star-negate" in self.corrupt:
            C2 = BUILTIN["C2"]

            def bad_star(a, _inner=SM._star_fn):
                out = _inner(a)
                return out.scale(-1) if a.group is C2 else out

            SM = st.StarGreenFunctor(self.M2, bad_star, "corrupt(M2)",
                                     validate=False)
        return SB, SM

    def suite_star(self):
        SB, SM = self._stars()
        gens = [x for x in self.generator_bisets()
                if max(x.left.order, x.right.order) <= 4]
        win4 = self.small_window(4)
        for S, name, groups in ((SB, "B", self.window), (SM, "M2", win4)):
            failures = S.validate(groups, gens)
            self.check(f"star-laws[{name}]", not failures,
                       "; ".join(failures[:3]))
        # the untwisted cross-compatibility form, valid on the commutative
        # Burnside instance
        B = self.B
        bad = next(
            ((G, H) for G in win4 for H in win4
             for a in B.basis(G) for b in B.basis(H)
             if B.cross(SB.star(a), b) !=
             SB.star(B.cross(a, SB.star(b)))), None)
        self.check("star-cross-untwisted[B]", bad is None,
                   "" if bad is None else f"{bad[0].name},{bad[1].name}")
        self._theorem_equivalence(SB, SM)
        self._re_im_checks(SM)
        self._e_fixed_checks(SB, SM)
        self._bullet_checks(SB, SM)

    def _theorem_equivalence(self, SB, SM):
        family = self._hom_biset_family(max_pair_order=4)
        for S, name, groups in ((SB, "B", self.window),
                                (SM, "M2", self.small_window(4))):
            for tag, ok, witness in st.theorem_equivalence_check(
                    S, groups, family):
                self.check(f"{tag}[{name}]", ok, witness)

    def _re_im_checks(self, SM):
        SBr = st.make_star_burnside("rat", validate=False)
        SMr = st.make_star_matrix(SBr, 2, validate=False)
        A = SMr.base
        for G in self.small_window(4):
            basis = A.basis(G)
            ok = True
            for a in basis:
                re, im = st.re_part(SMr, a), st.im_part(SMr, a)
                if re + im != a or SMr.star(re) != re or \
                        SMr.star(im) != im.scale(-1):
                    ok = False
                    break
            self.check(f"real-imaginary-split@{G.name}", ok)
            mat = SMr.star_matrix(G)
            d = len(mat)
            half = Fraction(1, 2)
            P = [[half * ((1 if i == j else 0) + mat[i][j])
                  for j in range(d)] for i in range(d)]
            Q = [[half * ((1 if i == j else 0) - mat[i][j])
                  for j in range(d)] for i in range(d)]
            from .linalg import mat_mul
            idm = [[Fraction(int(i == j)) for j in range(d)]
                   for i in range(d)]
            okp = (mat_mul(P, P) == P and mat_mul(Q, Q) == Q and
                   mat_mul(P, Q) == [[Fraction(0)] * d for _ in range(d)]
                   and [[P[i][j] + Q[i][j] for j in range(d)]
                        for i in range(d)] == idm)
            self.check(f"split-projectors@{G.name}", okp)
            # intersection of the symmetric and antisymmetric parts is 0
            stacked = [[P[i][j] - idm[i][j] for j in range(d)]
                       for i in range(d)] + \
                      [[Q[i][j] - idm[i][j] for j in range(d)]
                       for i in range(d)]
            from .linalg import kernel_is_trivial
            self.check(f"split-intersection-zero@{G.name}",
                       kernel_is_trivial(stacked))

    def _e_fixed_checks(self, SB, SM):
        pairs = [(G, H) for G in self.small_window(3)
                 for H in self.small_window(3)]
        for S, name, groups in ((SB, "B", self.window),
                                (SM, "M2", self.small_window(4))):
            for tag, ok, witness in st.e_fixed_check(
                    S, groups, pairs if S is SM else ()):
                self.check(f"{tag}[{name}]", ok, witness)

    def _bullet_checks(self, SB, SM):
        B = self.B
        for H in self.window:
            for G in self.window:
                ok, witness = True, ""
                for i, x in enumerate(self.basis_elements(H, G)):
                    lhs = st.bullet(SB, self._as_mor(x))
                    rhs = self._as_mor(bs.opposite(x))
                    if lhs != rhs:
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"duality-is-opposite-on-burnside@{H.name},"
                           f"{G.name}", ok, witness)
        for S, A, name in ((SB, self.B, "B"), (SM, self.M2, "M2")):
            for G in self.small_window(4):
                ok, witness = True, ""
                for i, a in enumerate(A.basis(G)):
                    if ct.tilde(A, S.star(a)) != \
                            st.bullet(S, ct.tilde(A, a)):
                        ok, witness = False, f"basis {i}"
                        break
                self.check(f"tilde-star-transport[{name}]@{G.name}", ok,
                           witness)
        rng = self.rng("bullet-contra")
        win = self.small_window(4)
        ok, witness = True, ""
        for _ in range(self.sample_size):
            K, H, G = (win[rng.randrange(len(win))] for _ in range(3))
            am = rng.choice(ct.hom_basis(self.B, H, K))
            bm = rng.choice(ct.hom_basis(self.B, G, H))
            lhs = st.bullet(SB, ct.cat_compose(am, bm))
            rhs = ct.cat_compose(st.bullet(SB, bm), st.bullet(SB, am))
            if lhs != rhs:
                ok, witness = False, f"{K.name},{H.name},{G.name}"
                break
        self.check("duality-contravariant-sampled[B]", ok, witness,
                   mode="sampled")

    # -- suite: orthogonal ---------------------------------------------------------

    def suite_orthogonal(self):
        SB, SM = self._stars()
        self._unit_goldens(SB)
        self._orthogonal_automorphism_checks(SB)
        self._restriction_transfer(SB)
        self._inflation_correction_suite(SB)
        self._star_morphism_suite(SB, SM)

    def _unit_goldens(self, SB):
        B = self.B
        C2 = BUILTIN["C2"]
        units = bs.burnside_units(C2)
        self.check("units-burnside-c2-count", len(units) == 4,
                   f"got {len(units)}")
        u = B.basis(C2)[0] - B.basis(C2)[1]
        self.check("units-burnside-c2-contains-ghost-unit",
                   any(B.element(C2, w) == u for w in units))
        rep = st.orthogonal_units(SB, TRIVIAL)
        self.check("orthogonal-units-trivial-group",
                   len(rep["elements"]) == 2 and
                   rep["groupTableVerified"])
        rep2 = st.orthogonal_units(SB, C2)
        self.check("orthogonal-units-c2-all-units",
                   len(rep2["elements"]) == 4 and
                   rep2["groupTableVerified"])
        # agreement between the 1x1 matrix instance and the base
        SM1 = st.make_star_matrix(SB, 1, validate=False)
        M1 = SM1.base
        for G in self.small_window(4):
            base_units = {B.coords(e) for e in
                          st.orthogonal_units(SB, G)["elements"]}
            m1_units = {M1.coords(e) for e in
                        st.orthogonal_units(SM1, G, bound=2)["elements"]}
            self.check(f"orthogonal-units-m1-agrees@{G.name}",
                       base_units == m1_units)

    def _orthogonal_automorphism_checks(self, SB):
        B = self.B
        C2 = BUILTIN["C2"]
        rep1 = st.orthogonal_automorphisms(SB, TRIVIAL, bound=1)
        idt = ct.cat_identity(B, TRIVIAL)
        self.check("orthogonal-automorphisms-trivial-group",
                   [B.coords(m.value) for m in rep1["elements"]] ==
                   sorted([B.coords(idt.value),
                           B.coords(idt.scale(-1).value)]) and
                   rep1["groupTableVerified"])
        rep2 = st.orthogonal_automorphisms(SB, C2, bound=self.bound)
        vals = {B.coords(m.value) for m in rep2["elements"]}
        idm = ct.cat_identity(B, C2)
        u = B.basis(C2)[0] - B.basis(C2)[1]
        tu = ct.tilde(B, u)
        need = [idm, idm.scale(-1), tu, tu.scale(-1)]
        self.check("orthogonal-automorphisms-c2-contains-required",
                   all(B.coords(m.value) in vals for m in need))
        self.check("orthogonal-automorphisms-c2-group-closed",
                   rep2["groupTableVerified"])
        for G in self.small_window(2):
            units = st.orthogonal_units(SB, G)["elements"]
            auts = {B.coords(m.value) for m in
                    st.orthogonal_automorphisms(SB, G,
                                                bound=self.bound)
                    ["elements"]}
            ok = all(B.coords(ct.tilde(B, w).value) in auts
                     for w in units)
            self.check(f"tilde-embeds-orthogonal-units@{G.name}", ok)
            distinct = len({B.coords(ct.tilde(B, w).value)
                            for w in units}) == len(units)
            self.check(f"tilde-injective-on-units@{G.name}", distinct)
        for G in self.window:
            units = st.orthogonal_units(SB, G)["elements"]
            ok = all(st.is_orthogonal_automorphism(SB, ct.tilde(B, w))
                     for w in units)
            self.check(f"tilde-image-orthogonal@{G.name}", ok)
            back = all(st.is_orthogonal_unit(SB, w) for w in units)
            self.check(f"orthogonality-reflects-to-units@{G.name}", back)

    def _restriction_transfer(self, SB):
        B = self.B
        for phi in self.window_surjections():
            H, G = phi.target, phi.source
            units = st.orthogonal_units(SB, H)["elements"]
            images = []
            ok_orth = True
            for u in units:
                img = st.restrict_units(SB, phi, u)
                images.append(img)
                if not st.is_orthogonal_unit(SB, img):
                    ok_orth = False
            self.check(f"unit-restriction-orthogonal@{G.name}->{H.name}",
                       ok_orth)
            okm = all(st.restrict_units(SB, phi, B.mul(u, v)) ==
                      B.mul(st.restrict_units(SB, phi, u),
                            st.restrict_units(SB, phi, v))
                      for u in units for v in units)
            self.check(f"unit-restriction-multiplicative@{G.name}->"
                       f"{H.name}", okm)
            if phi.is_surjective():
                distinct = len({B.coords(i) for i in images}) == \
                    len(units)
                self.check(f"unit-restriction-injective@{G.name}->"
                           f"{H.name}", distinct)
                # reflection: an orthogonal image forces an orthogonal
                # source among all units of B(H)
                all_units = [B.element(H, w)
                             for w in bs.burnside_units(H)]
                ok = all(st.is_orthogonal_unit(SB, u)
                         for u in all_units
                         if st.is_orthogonal_unit(
                             SB, st.restrict_units(SB, phi, u)))
                self.check(f"unit-restriction-reflects-orthogonality@"
                           f"{G.name}->{H.name}", ok)

    def _inflation_correction_suite(self, SB):
        from .groups import GroupHom
        B = self.B
        C2, C4 = BUILTIN["C2"], BUILTIN["C4"]
        # identity-kernel case degenerates to the double-algebra transport
        for G in self.small_window(4):
            trivN = subgroup_classes(G)[0].representative
            Q, proj = quotient(G, trivN)
            infb = bs.inf_biset(G, trivN)
            auts = st.orthogonal_automorphisms(SB, Q, bound=1)["elements"]
            ok = all(st.dAInf(B, G, trivN, w) ==
                     ct.double_algebra(B, infb, w) for w in auts)
            self.check(f"inflation-correction-trivial-kernel@{G.name}",
                       ok)
        N = subgroup_classes(C4)[1].representative
        Q, _ = quotient(C4, N)
        wset = st.orthogonal_automorphisms(SB, Q, bound=self.bound)
        images = [st.dAInf(B, C4, N, w) for w in wset["elements"]]
        self.check("inflation-correction-injective@C4/C2",
                   len({B.coords(m.value) for m in images}) ==
                   len(images))
        ok = all(ct.endo_inverse(m) is not None for m in images)
        self.check("inflation-correction-invertible@C4/C2", ok)
        okh = all(st.dAInf(B, C4, N, ct.cat_compose(w1, w2)) ==
                  ct.cat_compose(st.dAInf(B, C4, N, w1),
                                 st.dAInf(B, C4, N, w2))
                  for w1 in wset["elements"] for w2 in wset["elements"])
        self.check("inflation-correction-homomorphism@C4/C2", okh)
        okb = all(st.dAInf(B, C4, N, st.bullet(SB, w)) ==
                  st.bullet(SB, st.dAInf(B, C4, N, w))
                  for w in wset["elements"])
        self.check("inflation-correction-duality@C4/C2", okb)
        ok_orth = all(st.is_orthogonal_automorphism(SB,
                                                    st.dAInf(B, C4, N, w))
                      for w in wset["elements"])
        self.check("inflation-correction-preserves-orthogonality@C4/C2",
                   ok_orth)
        # reflection direction over bounded invertible endomorphisms
        refl = True
        for w in _bounded_invertibles(B, Q, self.bound):
            if st.is_orthogonal_automorphism(SB, st.dAInf(B, C4, N, w)) \
                    and not st.is_orthogonal_automorphism(SB, w):
                refl = False
                break
        self.check("inflation-correction-reflects-orthogonality@C4/C2",
                   refl)
        # transitivity along 1 <= C2 <= C4
        M = whole_subgroup(C4)
        okt = self._inflation_transitivity(B, SB, C4, N, M)
        self.check("inflation-correction-transitive@1,C2,C4", okt)

    def _inflation_transitivity(self, B, SB, G, N, M):
        """dAInf over G/N composed with dAInf over (G/N)/(M/N) equals
        dAInf over G/M, through the canonical quotient identification."""
        from .groups import GroupHom, inverse_hom
        QN, projN = quotient(G, N)
        QM, projM = quotient(G, M.elements)
        MN = tuple(sorted({projN(m) for m in M.elements}))
        QNM, projNM = quotient(QN, MN)
        images = [None] * QM.order
        for g in range(G.order):
            images[projM(g)] = projNM(projN(g))
        psi = GroupHom(QM, QNM, tuple(images))  # canonical iso
        auts = st.orthogonal_automorphisms(SB, QM,
                                           bound=self.bound)["elements"]
        for w in auts:
            w_up = ct.double_algebra(B, bs.iso_biset(psi), w)
            lhs = st.dAInf(B, G, N,
                           st.dAInf(B, QN, MN, w_up))
            rhs = st.dAInf(B, G, M.elements, w)
            if lhs != rhs:
                return False
        return True

    def _star_morphism_suite(self, SB, SM):
        B, M2 = self.B, self.M2
        f = ct.diagonal_embedding(B, M2)
        sm = st.StarMorphism(f, SB, SM)
        groups = self.small_window(4)
        self.check("star-morphism-compatible@diag",
                   not sm.validate(groups))
        qpairs = []
        for G in groups:
            for cls in subgroup_classes(G):
                if 1 < cls.order and is_normal(G, cls.representative):
                    qpairs.append((G, cls.representative))
        for tag, ok, witness in st.star_morphism_diagrams(
                sm, groups, qpairs, unit_bound=self.bound):
            self.check(f"{tag}", ok, witness)

    # -- runner ---------------------------------------------------------------

    def run(self, suite):
        fns = {"biset-identities": self.suite_biset_identities,
               "green-axioms": self.suite_green_axioms,
               "category": self.suite_category,
               "star": self.suite_star,
               "orthogonal": self.suite_orthogonal}
        if suite == "all":
            order = list(SUITES)
        elif suite in fns:
            order = [suite]
        else:
            raise ValueError(f"unknown suite {suite!r} (choose from "
                             f"{', '.join(SUITES)} or 'all')")
        for name in order:
            fns[name]()
        return self.checks

    def report(self, suite):
        checks = self.run(suite)
        failures = [c for c in checks if not c.ok]
        return {
            "suite": suite,
            "window": list(self.window_names),
            "seed": self.seed,
            "bound": self.bound,
            "maxOrder": self.max_order,
            "highArityOrder": self.high_arity_order,
            "sampleSize": self.sample_size,
            "checks": [c.to_json() for c in checks],
            "failureCount": len(failures),
            "passed": not failures,
        }


def _cat_matrix(A, fn, Gs, Hs, Gt, Ht):
    """Matrix of a linear map Hom(Gs,Hs) -> Hom(Gt,Ht) on hom bases."""
    cols = [A.coords(fn(m).value) for m in ct.hom_basis(A, Gs, Hs)]
    rows = A.dim(direct_product([Ht, Gt]))
    return [[cols[j][i] for j in range(len(cols))] for i in range(rows)]


def _bounded_invertibles(A, G, bound):
    """All invertible endomorphisms with coordinates in the box."""
    basis, _ = ct.endo_structure(A, G)
    d = len(basis)
    out = []
    for vec in iproduct(range(-bound, bound + 1), repeat=d):
        if all(v == 0 for v in vec):
            continue
        m = ct.CatMorphism(
            A, G, G, A.from_coords(direct_product([G, G]), list(vec)))
        if ct.endo_inverse(m) is not None:
            out.append(m)
    return out
