"""Generalized Reed-Muller codes and the radical filtration of F_q[X_1..X_m]/(X_l^q - 1)."""

from .algebra import (
    AlgebraElement,
    alg_mul,
    b_poly,
    code_dim_count,
    monomial_rank,
    monomial_unrank,
    phi,
    phi_inv,
    radical_basis,
    radical_dim,
    radical_matrix,
)
from .codes import CodeSpec, GeneratorMatrix, code_contains, grm_generator, inclusion_chain
from .gf import FieldElement, FieldSpec, beta, beta_index, binom_mod_p, ff_arith, field_of_order, make_field
from .interp import a_coeff_table, h_closed, h_multi, h_poly, h_prime_forms, indicator_poly
from .linalg import MatrixGF, in_rowspace, rank, rowspace_leq, rref, same_rowspace
from .poly import NEG_INF, ReducedPoly, UniPoly, tensor_product
from .verify import CheckReport

__version__ = "0.1.0"
