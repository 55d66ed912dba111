"""Exact computation of torsion and adic-completion functors on finitely
presented modules over Z, Z/n and polynomial rings, with verification
harnesses for the laws governing reduced and coreduced modules."""

__version__ = "0.1.0"

from .errors import (BadExponents, BoundExceeded, EmptySequence, IllFormed,
                     InfiniteModule, MixedRings, OutOfRange, ParseError,
                     PredicateFailed, RedcorError, SchemaVersionMismatch,
                     TooLarge, UnsupportedQuery, UnsupportedRing)
from .rings import (IntegerRing, ModularRing, PolynomialRing, PrimeField,
                    RationalField, parse_ring_spec, ring_from_json,
                    ring_to_json)
from .ideals import (Ideal, groebner_basis, ideal, ideal_contains,
                     ideal_equal, ideal_power, ideal_product, is_unit_ideal,
                     is_zero_ideal, normal_form)
from .modules import (HomModule, MapAnalysis, ModuleMap, Presentation,
                      SmithForm, Submodule, colon_annihilator, compose,
                      cyclic_module, describe_module, direct_sum,
                      free_module, hom_module, identity_map, invert_iso,
                      is_zero_map, is_zero_module, iso_invariants,
                      kernel_of_map, map_analyze, maps_equal, module_map,
                      module_order, presentation, quotient_by_ideal,
                      same_iso_class, scalar_map, scalar_submodule,
                      monomial_basis, smith_invariants, submodule_from_rows,
                      submodules_equal, syzygies, tensor_hom_currying,
                      tensor_product, zero_map, zero_module)
from .torsion import (CompletenessVerdict, CompletionResult, TorsionResult,
                      completion, cyclic_ideals, is_complete, is_coreduced,
                      is_coreduced_all, is_reduced, is_reduced_all,
                      is_torsion, representability_report, torsion_part)
from .complexes import (ChainComplex, ChainMap, Cohomology, ProZeroVerdict,
                        StrongIdempotencyVerdict, cohomology, free_resolution,
                        idempotent, induced_cohomology_map, koszul_complex,
                        koszul_transition, strongly_idempotent_check, tor,
                        weak_proregularity_check)
from .duality import (AdjunctionReport, MatlisDual, MgmReport,
                      SemigroupReport, SquaresReport, TransferReport,
                      YonedaReport, dual_map, duality_square_check,
                      gm_adjunction_check, gm_naturality_square, matlis_dual,
                      matlis_transfer_check, mgm_check,
                      semigroup_table_check, yoneda_value)
from .oracle import (FiniteModuleTable, brute_force_homs,
                     coreduced_ring_is_reduced_check,
                     elementwise_coreduced_check, elementwise_reduced_check,
                     enumerate_module, ideal_residues)
from .workspace import Workspace, load_workspace, save_workspace
