"""Exact realization and certification of a sparse spectrally arbitrary zero pattern.

Thin convenience layer over the compiled ``_specarb`` module.  Exact rational
values cross the boundary as ``"p/q"`` strings; the helpers here also accept
``int`` and :class:`fractions.Fraction` and stringify them for you.
"""

from fractions import Fraction
from typing import Iterable, Optional, Union

import _specarb
from _specarb import (
    ParseError,
    check_binomial_witness,
    check_nilpotent_witness,
    obstruction_quotient,
    pi_term_count,
    pi_total_degree,
    pi_weighted_degree,
    psi_gaussian,
    realize_gaussian,
    solution,
    solution_json,
)

__all__ = [
    "ParseError",
    "check_binomial_witness",
    "check_nilpotent_witness",
    "obstruction_quotient",
    "pi_term_count",
    "pi_total_degree",
    "pi_weighted_degree",
    "psi",
    "psi_gaussian",
    "realize",
    "realize_gaussian",
    "assemble",
    "solution",
    "solution_json",
    "verify_matrix",
]

RationalLike = Union[str, int, Fraction]


def _ratstr(value: RationalLike) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    raise TypeError(f"expected str, int, or Fraction, got {type(value).__name__}")


def psi(values: Iterable[RationalLike]) -> str:
    """Realizability certificate of an 8-value rational spectrum, as ``"p/q"``."""
    return _specarb.psi([_ratstr(v) for v in values])


def realize(values: Iterable[RationalLike]) -> Optional[dict]:
    """Parameters realizing an 8-value rational spectrum, or ``None``."""
    return _specarb.realize([_ratstr(v) for v in values])


def assemble(values: Iterable[RationalLike], seed: int = 0, retries: int = 10000) -> dict:
    """Realize a full rational spectrum as a block-diagonal matrix."""
    return _specarb.assemble([_ratstr(v) for v in values], seed=seed, retries=retries)


def verify_matrix(matrix_json: str, values: Iterable[RationalLike]) -> dict:
    """Independently verify a serialized matrix against a target spectrum."""
    return _specarb.verify_matrix(matrix_json, [_ratstr(v) for v in values])
