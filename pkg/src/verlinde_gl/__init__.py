"""Exact combinatorics of general linear groups in the Verlinde category.

Modules:
    fusion        fusion rules and parity of the simples of Ver_p
    alcove        admissible GL_n weights, box moves, invertibles, level-rank
    superweights  pairs (mu | nu), bilinear form, atypicality, Casimir
    diagrams      the circular weight-diagram codec
    translation   translation functors on diagrams and the loop-module oracle
    caps          cap diagrams, projective filtrations, lowest weights
    serganova     the classical-root-subtraction algorithm
    borel         tuple weights and Borel relabeling via odd reflections
    cli           command-line surface and batch self-checks
"""

__version__ = "0.1.0"

from .alcove import GLWeight, WedgeVector, add_box, chi_rotate, is_admissible, level_rank_D, level_rank_D_inverse, phi_wedge, psi_data, remove_box, tensor_with_V
from .caps import Cap, CapDiagram, cap_diagram, dual_simple, dual_simple_label, hat, is_inner, kac_composition, lowest_weight, p_set, projective_filtration, projective_word, render_caps, replay_word, sigma_to_standard, standard_to_sigma
from .borel import BorelPermutation, GLXShape, TupleWeight, borel_translate, conjugate_relabel, is_w_dominant, odd_reflect_pair, w_dominance_leq, w_integrable
from .diagrams import WeightDiagram, cut, decode, encode, from_json, permute, render_ascii, to_json
from .errors import ContractError, ValidationError
from .fusion import PrimeP, fuse_simples, is_even_object
from .serganova import check_oddroot_lemma, odd_root_order, serganova_hat, sh_nonzero
from .superweights import SuperShape, SuperWeight, atypicality, beta, casimir_scalar, casimir_unsuper, dominance_leq, form, is_typical, kac_irreducible, residue_data, rho2, super_weight
from .translation import DiagramSum, KacExtension, LoopVector, apply_E, apply_F, loop_e, loop_f, loop_vector, phi_equivariance_check, translate_kac, translate_projective, translate_simple
