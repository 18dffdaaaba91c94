"""Equations and Hilbert functions of the symmetric locus of points in
affine d-space, with representation-theoretic lower bounds and the
ideal families that make the locus reducible for d >= 13."""

from .bounds import (BoundReport, bound_scan, corollary_bound, module_31,
                     module_4321, remark_multiplicities, tensor_tail_check)
from .elimination import (EliminatedSystem, QuadricSystem, check_pivots,
                          default_pivots, eliminate_p0, final_system,
                          q_substitution, to_q_variables)
from .hilbert import (GradedPiece, d3_polynomial, final_system_cached,
                      h2_formula, h3_conjecture, hilbert_function,
                      hilbert_table, pluecker_system)
from .linalg import ExactEchelon, exact_rank, sparse_modular_rank, stream_rank
from .partitions import (Partition, lr_product, partitions_of, schur_dim,
                         ssyt_count)
from .polyring import MPoly, VarId, pvar, pzero, qvar, span_rank, xvar
from .projector import (CGenerator, ProjectorSpec, apply_projector, closed_c,
                        generate_C, generator_span_rank, points_to_projector,
                        verify_c_zero, verify_relations)
from .reducibility import (FamilySpec, TruncatedIdeal, build_family_ideal,
                           colength_check, family_dimension,
                           ideal_from_projector, non_radical_check,
                           random_family, recover_family, reducibility_witness,
                           translated_family_ideal)
from .symfun import SchurExpansion, SymPoly, schur_decompose, schur_poly, sym_plethysm

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CGenerator", "EliminatedSystem", "ExactEchelon",
    "FamilySpec", "GradedPiece", "MPoly", "Partition", "ProjectorSpec",
    "QuadricSystem", "SchurExpansion", "SymPoly", "TruncatedIdeal", "VarId",
    "apply_projector", "bound_scan", "build_family_ideal", "check_pivots",
    "closed_c", "colength_check", "corollary_bound", "d3_polynomial",
    "default_pivots", "eliminate_p0", "exact_rank", "family_dimension",
    "final_system", "final_system_cached", "generate_C",
    "generator_span_rank", "h2_formula", "h3_conjecture", "hilbert_function",
    "hilbert_table", "ideal_from_projector", "lr_product", "module_31",
    "module_4321", "non_radical_check", "partitions_of", "pluecker_system",
    "points_to_projector", "pvar", "pzero", "q_substitution", "qvar",
    "random_family", "recover_family", "reducibility_witness",
    "remark_multiplicities", "schur_decompose", "schur_dim", "schur_poly",
    "span_rank", "sparse_modular_rank", "ssyt_count", "stream_rank",
    "sym_plethysm", "tensor_tail_check", "to_q_variables",
    "translated_family_ideal", "verify_c_zero", "verify_relations", "xvar",
]
