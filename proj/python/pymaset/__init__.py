"""Exact expected-case analysis of Mastermind and AB games.

Thin wrapper over the C++ core: derivation of the recurrence system for
the minimal external path length, the brute-force optimal solver, and the
closed-form evaluators.  Rationals are returned as fractions.Fraction.
"""

from fractions import Fraction

from ._core import (
    Derivation,
    answer_count,
    answer_index,
    derive,
    index_to_answer,
    parse_document,
    run_verify,
    solve,
)
from ._core import closed_form_raw as _closed_form_raw
from ._core import expected_raw as _expected_raw

__all__ = [
    "Derivation",
    "answer_count",
    "answer_index",
    "closed_form",
    "derive",
    "expected",
    "index_to_answer",
    "parse_document",
    "run_verify",
    "solve",
]

__version__ = "0.1.0"


def expected(game, pegs, colors, additional=True):
    """Minimal expected number of questions for the full game, exact."""
    num, den = _expected_raw(game, pegs, colors, additional)
    return Fraction(num, den)


def closed_form(game, colors):
    """Closed-form expected number of questions for the two-peg games."""
    num, den = _closed_form_raw(game, colors)
    return Fraction(num, den)
