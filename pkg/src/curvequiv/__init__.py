"""Deciding and refuting equivalences of closed curves on surfaces."""

from .fricke import TracePolynomial, evaluate_polynomial, trace_polynomial, trace_square_equivalent
from .heights import (PointList, breakpoints_and_jumps, canonicalize, developed_length,
                      finite_difference_jump, height_at)
from .homology import GeneratorImageMap, homology_class, plus_minus_equal
from .pants import SixTuple, arc_tuple, si_equivalent_in_pants, syllable_decomposition
from .pit import PitVerdict, diagonal_witness, pit_trace_equiv
from .sl2 import Mat2, RepAssignment, SamplerConfig, evaluate_word, random_sl2, trace_identity_residual
from .words import CyclicWord, Substitution, Word, are_conjugate, cyclic_reduce, parse_word, substitute

__version__ = "0.1.0"
