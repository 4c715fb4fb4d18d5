"""Hurwitz-orbit invariants of braid monodromy factorizations."""

from .braids import (BraidWord, FreeWord, artin_act, braid_compose, braid_eq,
                     braid_inverse, braid_permutation, check_braid_candidate,
                     conjugate, free_reduce)
from .groups import (ElementSet, Matrix2ModM, Permutation, ResourceCapExceeded,
                     centralizer, closure, find_conjugator)
from .hurwitz import (LabeledTuple, MonodromyFactorization, OrbitConfig, OrbitReport,
                      apply_rep_tuple, compare_monodromies, compare_tuples,
                      hurwitz_move, hurwitz_unmove, orbit, orbit_size,
                      pseudo_coxeter, q1, q2)
from .representations import (Representation, apply_rep, hurwitz_rep,
                              make_representation, sl2_mod_rep, sym_rep)
from .zvk import (Presentation, abelianization, export_presentation,
                  meridian_infinity_relator, presentation_affine,
                  presentation_fibered, presentation_projective)

__version__ = "0.1.0"
