"""Finite symmetric and cartesian multicategories: constructions, internal
homs, products and models, checked exhaustively within a budget."""
from .core import (Arrow, Budget, BudgetError, DEFAULT_BUDGET, FamilyMap, HomSet, InputError,
                   McatError, Multicategory, PreconditionError, Signature, UnsupportedAction,
                   ValidationReport, cart_act, cart_act_factored, compose, contract,
                   factor_family_map, hom, sym_act, weaken)
from .laws import replay, validate_all, validate_cartesian, validate_multicat, validate_symmetric
from .categories import (CMonEnrichment, ChosenProducts, FiniteCategory, StrictMonoidalData,
                         boolean_rig, product_category, terminal_category, walking_arrow,
                         z2_category)
from .constructions import (bv_tensor_seq, bv_tensor_unary, discrete_monoid_mcat, extract_enrichment,
                            finite_sets, fp_category_to_mcat, free_preadditive, free_preadditive_seq,
                            frobenius_check, monoidal_to_mcat, nat_rig_seq, product, seq,
                            seq_cartesian, table_from_backend, terminal_mcat, unary, underlying)
from .homs import (enumerate_functors, fp_hom, internal_hom, iso_unaryhom_seqexp, monoid_mcat,
                   pointwise_universal, seq_exponent)
from .analysis import (algebraic_product_search, biproduct_view, cocartesian_check,
                       coreflection_check, find_central_monoid, find_preuniversal, is_representable,
                       sequentiality_report, universal_product_search)
from .models import enumerate_models, kronecker_semantics_check
from .fixtures import catalog, fixture

__version__ = "0.1.0"
