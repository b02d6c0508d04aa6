"""Which classes contain a smooth irreducible rational curve, and what the
corresponding spaces of maps from P^1 look like.

The decision rule: ``beta`` qualifies iff it is a (-1)-class, or it is
non-zero, of arithmetic genus 0, meets every (-1)-class non-negatively and has
``beta^2 >= 0``.  For ``r <= 7`` this has been checked against the cubic
surface listing; ``r = 8`` is accepted only with ``allow_unvalidated=True``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import UnsupportedRangeError
from .lattice import (
    DivisorClass,
    Surface,
    anticanonical_degree,
    arithmetic_genus,
    dim_linear_system,
    dim_mor,
    format_class,
    intersect,
    is_minus_one_class,
    self_intersection,
)
from .search import degree_window, nonincreasing_solutions
from .weyl import enumerate_minus_one_classes

MAX_VALIDATED_POINTS = 7
DEGREE_MARGIN = 2


class Reason(str, enum.Enum):
    MINUS_ONE_CLASS = "minus-one-class"
    GENUS_NONZERO = "genus-nonzero"
    NEGATIVE_ON_EXCEPTIONAL = "negative-on-exceptional"
    NOT_EFFECTIVE_FAMILY = "not-effective-family"
    PASSES_ALL_CHECKS = "passes-all-checks"
    ZERO_CLASS = "zero-class"


@dataclass(frozen=True)
class Verdict:
    smooth_rational: bool
    reason: Reason


@dataclass(frozen=True)
class ClassReport:
    """Numerical invariants of a class.  Dimension fields are ``None`` when
    the class has no smooth rational representative."""

    beta: DivisorClass
    self_int: int
    anticanonical_degree: int
    arithmetic_genus: int
    smooth_rational: bool
    reason: Reason
    dim_linear_system: Optional[int]
    dim_mor: Optional[int]

    def to_dict(self) -> dict:
        return {
            "beta": format_class(self.beta),
            "d": self.beta.d,
            "m": list(self.beta.m),
            "self_int": self.self_int,
            "anticanonical_degree": self.anticanonical_degree,
            "arithmetic_genus": self.arithmetic_genus,
            "smooth_rational": self.smooth_rational,
            "reason": self.reason.value,
            "dim_linear_system": self.dim_linear_system,
            "dim_mor": self.dim_mor,
        }


def _check_range(s: Surface, allow_unvalidated: bool) -> None:
    if s.r > MAX_VALIDATED_POINTS and not allow_unvalidated:
        raise UnsupportedRangeError(
            f"classification for r={s.r} is unvalidated; pass allow_unvalidated=True to use it"
        )


@lru_cache(maxsize=None)
def _exceptional(r: int) -> tuple[DivisorClass, ...]:
    return tuple(enumerate_minus_one_classes(Surface(r)))


def has_smooth_rational_representative(
    s: Surface, beta: DivisorClass, *, allow_unvalidated: bool = False
) -> Verdict:
    _check_range(s, allow_unvalidated)
    if beta.is_zero():
        self_intersection(s, beta)
        return Verdict(False, Reason.ZERO_CLASS)
    if is_minus_one_class(s, beta):
        return Verdict(True, Reason.MINUS_ONE_CLASS)
    if arithmetic_genus(s, beta) != 0:
        return Verdict(False, Reason.GENUS_NONZERO)
    if any(intersect(s, beta, e) < 0 for e in _exceptional(s.r)):
        return Verdict(False, Reason.NEGATIVE_ON_EXCEPTIONAL)
    if self_intersection(s, beta) < 0:
        return Verdict(False, Reason.NOT_EFFECTIVE_FAMILY)
    return Verdict(True, Reason.PASSES_ALL_CHECKS)


def degree_bound(s: Surface, self_int: int) -> int:
    """Largest degree a genus-0 class with square ``self_int`` can have, plus a margin."""
    window = degree_window(s.r, self_int, self_int + 2)
    if window is None:
        return -1
    return math.floor(window[1]) + DEGREE_MARGIN


def enumerate_by_self_intersection(
    s: Surface, target: int, *, allow_unvalidated: bool = False
) -> list[DivisorClass]:
    """Smooth-rational classes with ``beta^2 = target``, one per permutation
    class, sorted by ``(d, m)``."""
    _check_range(s, allow_unvalidated)
    if target < -1:
        return []
    if target == -1:
        return sorted({e.permutation_key() for e in _exceptional(s.r)})
    # A qualifying class with beta^2 >= 0 meets each E_i non-negatively, so
    # all m_i >= 0; genus 0 then fixes sum(m) and sum(m^2) for each d.
    found = []
    for d in range(1, degree_bound(s, target) + 1):
        total = 3 * d - target - 2
        squares = d * d - target
        for m in nonincreasing_solutions(s.r, total, squares, 0, d):
            beta = DivisorClass(d, m)
            if has_smooth_rational_representative(s, beta, allow_unvalidated=allow_unvalidated).smooth_rational:
                found.append(beta)
    return sorted(found)


def report(s: Surface, beta: DivisorClass, *, allow_unvalidated: bool = False) -> ClassReport:
    verdict = has_smooth_rational_representative(s, beta, allow_unvalidated=allow_unvalidated)
    if verdict.smooth_rational:
        lin = dim_linear_system(s, beta, allow_unvalidated=allow_unvalidated)
        mor = dim_mor(s, beta, allow_unvalidated=allow_unvalidated)
    else:
        lin = mor = None
    return ClassReport(
        beta=beta,
        self_int=self_intersection(s, beta),
        anticanonical_degree=anticanonical_degree(s, beta),
        arithmetic_genus=arithmetic_genus(s, beta),
        smooth_rational=verdict.smooth_rational,
        reason=verdict.reason,
        dim_linear_system=lin,
        dim_mor=mor,
    )
