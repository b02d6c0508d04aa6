"""Picard lattice of the plane blown up at ``r`` points.

Classes are written ``beta = d*H - sum(m_i * E_i)`` where ``H`` is the pullback
of a line and ``E_i`` are the exceptional curves.  Multiplicities are stored
exactly as they appear in that expression, so ``E_1`` is ``(0; -1, 0, ...)``.
The intersection form is ``diag(1, -1, ..., -1)`` on ``(H, E_1, ..., E_r)``,
which in multiplicity coordinates reads ``a.b = d_a*d_b - sum(m_a,i * m_b,i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ClassParseError,
    DimensionMismatchError,
    InconsistentClassError,
    UnsupportedRangeError,
)

MIN_POINTS = 1
MAX_POINTS = 8

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def _checked(value: int) -> int:
    if not _INT64_MIN <= value <= _INT64_MAX:
        raise OverflowError(f"lattice arithmetic left the 64-bit range: {value}")
    return value


@dataclass(frozen=True)
class Surface:
    """Blow-up of the plane at ``r`` general points, ``1 <= r <= 8``."""

    r: int

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int):
            raise TypeError(f"r must be an int, got {self.r!r}")
        if not MIN_POINTS <= self.r <= MAX_POINTS:
            raise UnsupportedRangeError(
                f"r={self.r} is outside the supported range {MIN_POINTS}..{MAX_POINTS}"
            )

    def degree(self) -> int:
        return 9 - self.r

    def zero(self) -> DivisorClass:
        return DivisorClass(0, (0,) * self.r)

    def hyperplane(self) -> DivisorClass:
        return DivisorClass(1, (0,) * self.r)

    def exceptional(self, i: int) -> DivisorClass:
        """Class of the i-th exceptional curve, 1-based."""
        if not 1 <= i <= self.r:
            raise IndexError(f"exceptional index {i} not in 1..{self.r}")
        m = [0] * self.r
        m[i - 1] = -1
        return DivisorClass(0, tuple(m))

    def canonical_class(self) -> DivisorClass:
        return canonical_class(self)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """Integer class ``d*H - sum(m_i E_i)``.

    Ordering is lexicographic on ``(d, m)``; this is the canonical order used
    for every sorted output in the package.
    """

    d: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        for x in (self.d, *self.m):
            _checked(x)

    @property
    def r(self) -> int:
        return len(self.m)

    @classmethod
    def from_vector(cls, vector: Sequence[int]) -> DivisorClass:
        """Build from lattice coordinates ``(d, c_1, ..., c_r)`` with ``beta = d*H + sum(c_i E_i)``."""
        return cls(vector[0], tuple(-int(c) for c in vector[1:]))

    def vector(self) -> tuple[int, ...]:
        return (self.d, *(-x for x in self.m))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _same_length(self, other)
        return DivisorClass(_checked(self.d + other.d), tuple(_checked(a + b) for a, b in zip(self.m, other.m)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        _same_length(self, other)
        return DivisorClass(_checked(self.d - other.d), tuple(_checked(a - b) for a, b in zip(self.m, other.m)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.d, tuple(-x for x in self.m))

    def scale(self, k: int) -> DivisorClass:
        return DivisorClass(_checked(k * self.d), tuple(_checked(k * x) for x in self.m))

    def is_zero(self) -> bool:
        return self.d == 0 and not any(self.m)

    def permutation_key(self) -> DivisorClass:
        """Representative of the class up to permuting the multiplicities.

        Multiplicities are ordered by decreasing absolute value (ties: positive
        first), which keeps non-negative tuples non-increasing and writes the
        exceptional class as ``(0; -1, 0, ..., 0)``.
        """
        return DivisorClass(self.d, tuple(sorted(self.m, key=lambda x: (abs(x), x), reverse=True)))

    def __str__(self) -> str:
        return format_class(self)


def _same_length(a: DivisorClass, b: DivisorClass) -> None:
    if len(a.m) != len(b.m):
        raise DimensionMismatchError(f"classes have {len(a.m)} and {len(b.m)} multiplicities")


def _check_on(s: Surface, *classes: DivisorClass) -> None:
    for beta in classes:
        if len(beta.m) != s.r:
            raise DimensionMismatchError(
                f"class {format_class(beta)} has {len(beta.m)} multiplicities, surface has r={s.r}"
            )


def intersect(s: Surface, a: DivisorClass, b: DivisorClass) -> int:
    _check_on(s, a, b)
    total = a.d * b.d
    for x, y in zip(a.m, b.m):
        total -= x * y
    return _checked(total)


def self_intersection(s: Surface, beta: DivisorClass) -> int:
    return intersect(s, beta, beta)


def canonical_class(s: Surface) -> DivisorClass:
    """``K = -3H + sum(E_i)``, i.e. ``(-3; -1, ..., -1)``."""
    return DivisorClass(-3, (-1,) * s.r)


def anticanonical_degree(s: Surface, beta: DivisorClass) -> int:
    """``-K.beta = 3d - sum(m_i)``."""
    _check_on(s, beta)
    return _checked(3 * beta.d - sum(beta.m))


def arithmetic_genus(s: Surface, beta: DivisorClass) -> int:
    """Adjunction: ``p_a = (beta^2 + K.beta)/2 + 1``."""
    twice = self_intersection(s, beta) - anticanonical_degree(s, beta)
    if twice % 2:
        raise InconsistentClassError(
            f"beta^2 + K.beta = {twice} is odd for {format_class(beta)}"
        )
    return twice // 2 + 1


def is_minus_one_class(s: Surface, beta: DivisorClass) -> bool:
    return self_intersection(s, beta) == -1 and anticanonical_degree(s, beta) == 1


def dim_linear_system(s: Surface, beta: DivisorClass, *, allow_unvalidated: bool = False) -> int:
    """Dimension of ``|beta|`` for a class containing a smooth rational curve.

    Equals ``beta^2 + 1 = -K.beta - 1``; a (-1)-class gives a single point.
    Raises :class:`NotSmoothRationalError` for any other class.
    """
    _require_smooth_rational(s, beta, allow_unvalidated)
    n = self_intersection(s, beta)
    if n < 0:
        return 0
    dim = n + 1
    if dim != anticanonical_degree(s, beta) - 1:
        raise InconsistentClassError(f"beta^2 + 1 != -K.beta - 1 for {format_class(beta)}")
    return dim


def dim_mor(s: Surface, beta: DivisorClass, *, allow_unvalidated: bool = False) -> int:
    """Dimension of the space of maps ``P^1 -> X`` with image in class ``beta``.

    3 when ``beta^2 < 0`` (a rigid curve, reparametrised by ``Aut(P^1)``),
    otherwise ``-K.beta + 2``.
    """
    _require_smooth_rational(s, beta, allow_unvalidated)
    if self_intersection(s, beta) < 0:
        return 3
    return anticanonical_degree(s, beta) + 2


def _require_smooth_rational(s: Surface, beta: DivisorClass, allow_unvalidated: bool) -> None:
    from .classifier import has_smooth_rational_representative
    from .errors import NotSmoothRationalError

    verdict = has_smooth_rational_representative(s, beta, allow_unvalidated=allow_unvalidated)
    if not verdict.smooth_rational:
        raise NotSmoothRationalError(
            f"{format_class(beta)} contains no smooth rational curve ({verdict.reason.value})"
        )


# -- text format -------------------------------------------------------------

def format_class(beta: DivisorClass) -> str:
    return f"{beta.d};" + ",".join(str(x) for x in beta.m)


def _parse_int(token: str) -> int:
    # ASCII digits with an optional leading minus only; int() alone would accept "+3", "٣", "1_0".
    body = token[1:] if token.startswith("-") else token
    if not body or not body.isascii() or not body.isdigit():
        raise ClassParseError(f"not an integer: {token!r}", token)
    return int(token)


def parse_class(text: str, s: Surface) -> DivisorClass:
    """Parse ``"d;m1,m2,...,mr"``.  Spaces are tolerated only after commas."""
    if not text:
        raise ClassParseError("empty class text", "")
    head, sep, tail = text.partition(";")
    if not sep:
        raise ClassParseError(f"missing ';' in {text!r}", text)
    d = _parse_int(head)
    tokens = tail.split(",")
    m = []
    for i, token in enumerate(tokens):
        if i > 0:
            token = token.lstrip(" ")
        m.append(_parse_int(token))
    if len(m) != s.r:
        raise ClassParseError(f"expected {s.r} multiplicities, got {len(m)} in {text!r}", tail)
    return DivisorClass(d, tuple(m))


# -- vectorised helpers --------------------------------------------------------
# Arrays hold one class per row in multiplicity coordinates: column 0 is d,
# columns 1..r are m_1..m_r.  The integer dtype of the input is kept; callers
# choosing a narrow dtype are responsible for the range.

def as_array(classes: Iterable[DivisorClass]) -> np.ndarray:
    return np.array([(c.d, *c.m) for c in classes], dtype=np.int64)


def _rows(rows) -> np.ndarray:
    rows = np.asarray(rows)
    if rows.dtype.kind not in "iu":
        raise TypeError(f"expected an integer array, got {rows.dtype}")
    return rows


def self_intersection_many(rows: np.ndarray) -> np.ndarray:
    rows = _rows(rows)
    m = rows[:, 1:]
    return rows[:, 0] * rows[:, 0] - np.einsum("ij,ij->i", m, m)


def intersect_many(rows: np.ndarray, other: DivisorClass) -> np.ndarray:
    rows = _rows(rows)
    return rows[:, 0] * other.d - rows[:, 1:] @ np.asarray(other.m, dtype=rows.dtype)


def anticanonical_degree_many(rows: np.ndarray) -> np.ndarray:
    rows = _rows(rows)
    return 3 * rows[:, 0] - rows[:, 1:].sum(axis=1, dtype=rows.dtype)
