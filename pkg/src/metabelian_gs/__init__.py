"""Groebner-Shirshov bases for metabelian Lie algebras over Q and GF(p)."""

from .completion import (
    CompletionResult,
    Presentation,
    check_prop42,
    is_gs_basis,
    monomial_complete,
    oracle_quotient_dims,
    preprocess_lemma41,
    reduce_basis,
    shirshov_complete,
)
from .compositions import CompositionInstance, compose, enumerate_compositions, is_trivial
from .kernels import BACKEND
from .poly import MPoly, bracket_left_normed, mul
from .reduction import SWordI, SWordII, find_reducer, irr_up_to, is_irreducible, normal_form
from .scalars import Field
from .words import Alphabet

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "BACKEND", "CompletionResult", "CompositionInstance", "Field", "MPoly",
    "Presentation", "SWordI", "SWordII", "bracket_left_normed", "check_prop42", "compose",
    "enumerate_compositions", "find_reducer", "irr_up_to", "is_gs_basis", "is_irreducible",
    "is_trivial", "monomial_complete", "mul", "normal_form", "oracle_quotient_dims",
    "preprocess_lemma41", "reduce_basis", "shirshov_complete",
]
