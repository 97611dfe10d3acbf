"""Exact biset calculus for finite groups.

Burnside bimodules with double-coset composition, Green functor instances
(Burnside, matrix, opposite), their attached categories, anti-involutions
and orthogonality searches, all over exact integer or rational
coefficients and checked against a brute-force orbit oracle.
"""

from .catalog import BUILTIN, DEFAULT_WINDOW, TRIVIAL, load_catalog
from .groups import (FiniteGroup, GroupError, GroupHom, Subgroup,
                     SubgroupClass, direct_product, double_cosets,
                     quotient, subgroup_classes)
from .bisets import (BurnsideElement, ConcreteBiset, RingError, arrow,
                     arrow_inverse, burnside_units, classify, compose,
                     concrete_compose, external, identity_element, marks,
                     opposite, table_of_marks, transitive_biset)
from .green import (GreenElement, burnside_functor, initial_morphism,
                    matrix_functor, opposite_functor)
from .category import (CatMorphism, GreenFunctorMorphism, T_iso,
                       cat_compose, cat_identity, diagonal_embedding,
                       double_algebra, endo_inverse, tilde)
from .star import (StarGreenFunctor, StarMorphism, bullet, dAInf,
                   make_star_burnside, make_star_matrix,
                   orthogonal_automorphisms, orthogonal_units, re_part,
                   im_part)

__version__ = "0.1.0"
