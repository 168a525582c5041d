"""Homogeneous Khovanskii bases and MUVAK bases of polynomial subalgebras."""

from .grading import DeltaGrading, DeltaGroup, GradedTagRing, delta_degree, homogeneous_components
from .groebner import (Ideal, PairLimitExceeded, RingMap, eliminate, ideal_containment,
                       ideal_quotient_saturation, kernel_of_map, normal_form, standard_basis)
from .homogenize import (BayerPreconditionError, WeightSystem, dehomogenize, homogenize_ideal,
                         homogenize_poly, initial_ideal, mindeg, multi_homogenize)
from .kernels import BACKEND
from .khovanskii import KhovanskiiRun, RunStatus, khovanskii_basis, verify_khovanskii
from .muvak import MuvakRun, faithfully_representable, muvak_basis, verify_muvak
from .orderings import MonomialOrdering, bayer_matrix, compare_monomials, is_global, leading_term
from .parse import ParseError, parse_ordering, parse_poly, parse_valuation
from .poly import Poly, PolyRing, arith, format_poly, substitute, support
from .subduction import Status, SubductionResult, TaggedAlgebra, homogeneous_preimage, subduct
from .valuation import MonomialValuation, gamma_compare, initial_form, value

__version__ = "0.1.0"
