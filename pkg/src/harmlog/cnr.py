"""Exponential-form approximations of numbers and consecutive-number ratios.

A consecutive-number ratio (CNR) is x/(x-1); multiplying the CNRs
(2/1)(3/2)...(n/(n-1)) rebuilds the integer n, which is why they are also
called number building blocks (NBBs).  Each approximation here replaces a
number or a CNR with a closed exponential form; the scaled variant pushes
the argument out of the ill-conditioned band |x| <= 2 by an integer
multiplier m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError
from .oracle import percent_error

# Scaled-variant default; matches the multiplier used throughout the
# reference tables for arguments near 1.
DEFAULT_SCALE = 100


class CnrTag(Enum):
    LEMMA11 = "lemma11"
    POW2 = "pow2"
    EXP_FULL = "exp_full"
    EXP_SCALED = "exp_scaled"
    EXP_LARGE = "exp_large"


@dataclass(frozen=True)
class CnrMethod:
    """Which exponential form produced a value; m only applies to EXP_SCALED."""

    tag: CnrTag
    m: int | None = None

    def __post_init__(self) -> None:
        if self.tag is CnrTag.EXP_SCALED:
            if self.m is None or self.m < 1:
                raise DomainError("EXP_SCALED requires an integer m >= 1")
        elif self.m is not None:
            raise DomainError(f"{self.tag.value} does not take a multiplier")


@dataclass(frozen=True)
class ApproxValue:
    """An approximation bundled with its method and signed percentage error."""

    input: float
    method: CnrMethod
    value: float
    reference: float
    percent_error: float


def approx_lemma11(x: float) -> float:
    """Crude form (x - 1) * 2**(1/(x-1)); degenerates to 0 at x = 1."""
    if x == 1:
        raise DomainError("approx_lemma11 degenerates to 0 at x = 1")
    return (x - 1.0) * 2.0 ** (1.0 / (x - 1.0))


def approx_cnr_pow2(x: float) -> float:
    """CNR estimate 2**(3/(2x-1)) for x/(x-1)."""
    if 2.0 * x - 1.0 == 0:
        raise DomainError("approx_cnr_pow2 undefined at x = 1/2")
    return 2.0 ** (3.0 / (2.0 * x - 1.0))


def approx_number_scaled(x: float, m: int = DEFAULT_SCALE) -> float:
    """(x - 1/m) * e**(2/(2mx - 1 - 1/(mx)**3)); larger m shrinks the error."""
    if m < 1:
        raise DomainError(f"multiplier m must be >= 1, got {m}")
    if x == 0:
        raise DomainError("approx_number_scaled undefined at x = 0")
    mx = m * x
    denom = 2.0 * mx - 1.0 - 1.0 / mx**3
    if denom == 0:
        raise DomainError(f"exponent denominator vanishes at x = {x}, m = {m}")
    if mx == 1:
        raise DomainError(f"result degenerates to 0 at x = 1/{m}")
    return (x - 1.0 / m) * math.exp(2.0 / denom)


def approx_number_exp(x: float) -> float:
    """(x - 1) * e**(2/(2x - 1 - 1/x**3)); the m = 1 case of the scaled form."""
    if x == 1:
        raise DomainError("approx_number_exp degenerates to 0 at x = 1")
    return approx_number_scaled(x, 1)


def approx_number_large(x: float) -> float:
    """(x - 1) * e**(2/(2x-1)); valid once 1/x**3 is negligible."""
    if 2.0 * x - 1.0 == 0:
        raise DomainError("approx_number_large undefined at x = 1/2")
    return (x - 1.0) * math.exp(2.0 / (2.0 * x - 1.0))


def evaluate(x: float, method: CnrMethod) -> ApproxValue:
    """Run one approximation and package it with its signed percent error.

    The reference is x itself for the number forms and x/(x-1) for the
    CNR form.
    """
    if method.tag is CnrTag.LEMMA11:
        value, reference = approx_lemma11(x), x
    elif method.tag is CnrTag.POW2:
        if x == 1:
            raise DomainError("CNR x/(x-1) is singular at x = 1")
        value, reference = approx_cnr_pow2(x), x / (x - 1.0)
    elif method.tag is CnrTag.EXP_FULL:
        value, reference = approx_number_exp(x), x
    elif method.tag is CnrTag.EXP_SCALED:
        value, reference = approx_number_scaled(x, method.m), x
    else:
        value, reference = approx_number_large(x), x
    return ApproxValue(
        input=x,
        method=method,
        value=value,
        reference=reference,
        percent_error=percent_error(value, reference),
    )


def nbb_decompose(n: int) -> list[Fraction]:
    """The n-1 building blocks (2/1), (3/2), ..., (n/(n-1)) of an integer."""
    if n < 2:
        raise DomainError(f"nbb_decompose requires n >= 2, got {n}")
    return [Fraction(k, k - 1) for k in range(2, n + 1)]
