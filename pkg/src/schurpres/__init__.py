"""Exact computations in the Schur algebra S(n, d) and its quantum analogue.

Both algebras are realised as operator algebras on d-fold tensor space with
exact scalars (rationals, or rational functions in v).  On top of that sit
the integral bases, a straightening procedure, the Borel and Hecke
subalgebras, and verification harnesses for the presentations.
"""

from .algebra import (CartanBinomial, Idempotent, KostantMonomial, KPower, LinearCombination,
                      RootKBinomial, RootPower, SchurAlgebra, X, format_monomial, get_algebra,
                      monomial, parse_monomial)
from .basisgen import (BasisElement, CoordinateVector, SchurBasis, card_bijection,
                       card_bijection_inverse, enumerate_basis, enumerate_conjecture_sets,
                       express_in_basis, get_basis, schur_dimension, verify_basis)
from .errors import (BoundExceeded, ConventionFailure, DimensionMismatch, InexactDivision,
                     IntegralityFailure, NoRule, NonTermination, NotInSpan, SchurError)
from .harness import (StructureConstants, VerificationReport, conjecture_report, mutation_control,
                      structure_constants, verify_idempotent_presentation, verify_presentation)
from .rootdata import Root, RootOrder, enumerate_compositions, parse_order_spec, positive_roots, roots
from .rules import commute_pair, derive_rule_variants, rule_table
from .scalars import (CLASSICAL, QUANTUM, LaurentPolynomial, RationalFunction, quantum_binomial,
                      quantum_factorial, quantum_integer)
from .straighten import Straightener, move_idempotents_right, straighten
from .subalg import (borel_idempotent_basis, borel_plus_basis, borel_vanishing_check, hecke_basis,
                     hecke_build, hecke_symmetry_check)
from .tensorrep import ExactOperator, GeneratorSet, build_generators, minimal_polynomial

__version__ = "0.1.0"
