"""Reflection group generated by the simple roots of type E_r, and the
enumeration of exceptional (-1)-classes and conic classes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import LatticeError, OrbitOverflowError
from .lattice import (
    DivisorClass,
    Surface,
    anticanonical_degree,
    format_class,
    intersect,
    self_intersection,
)
from .search import degree_window, distinct_permutations, nonincreasing_solutions

DEFAULT_ORBIT_CAP = 10**7

# Search box for (-1)-classes.  The equations force -1 <= d <= 7 and
# |m_i| <= 7 for r <= 8, so this box is exhaustive with room to spare.
EXCEPTIONAL_BOX = (-3, 8)


@dataclass(frozen=True)
class Root:
    """A class ``rho`` with ``rho^2 = -2`` and ``K.rho = 0``."""

    surface: Surface
    vector: DivisorClass

    def __post_init__(self):
        s, rho = self.surface, self.vector
        if self_intersection(s, rho) != -2:
            raise LatticeError(f"{format_class(rho)} has square {self_intersection(s, rho)}, not -2")
        if anticanonical_degree(s, rho) != 0:
            raise LatticeError(f"{format_class(rho)} is not orthogonal to K")


@dataclass(frozen=True)
class OrbitResult:
    representatives: tuple[DivisorClass, ...]
    size: int
    generator_count: int


def simple_roots(s: Surface) -> list[Root]:
    """``H - E1 - E2 - E3`` (when r >= 3) followed by ``E_i - E_{i+1}``."""
    r = s.r
    roots = []
    if r >= 3:
        roots.append(Root(s, DivisorClass(1, (1, 1, 1) + (0,) * (r - 3))))
    for i in range(r - 1):
        m = [0] * r
        # E_i - E_{i+1} has m_i = -1, m_{i+1} = +1 in the subtracted convention
        m[i], m[i + 1] = -1, 1
        roots.append(Root(s, DivisorClass(0, tuple(m))))
    return roots


def reflect(s: Surface, root: Root, beta: DivisorClass) -> DivisorClass:
    """``beta + (beta.rho) rho``."""
    k = intersect(s, beta, root.vector)
    if k == 0:
        return beta
    return beta + root.vector.scale(k)


def reflect_many(root: Root, rows: np.ndarray) -> np.ndarray:
    """Vectorised :func:`reflect` over rows ``(d, m_1, ..., m_r)``.

    Only the columns where the root is non-zero are touched, so column-major
    input is fastest.  The result keeps the input dtype and memory order.
    """
    rows = np.asarray(rows)
    rho = (root.vector.d, *root.vector.m)
    support = [j for j, c in enumerate(rho) if c]
    k = np.zeros(len(rows), dtype=rows.dtype)
    for j in support:
        # H.H = 1, E_i.E_i = -1, and m-coordinates carry the opposite sign of E_i
        if j == 0:
            k += rho[j] * rows[:, j]
        else:
            k -= rho[j] * rows[:, j]
    out = rows.copy(order="K")
    for j in support:
        out[:, j] += rho[j] * k
    return out


def orbit(s: Surface, seed: DivisorClass, cap: int = DEFAULT_ORBIT_CAP) -> OrbitResult:
    """Breadth-first closure of ``seed`` under the simple reflections.

    Raises :class:`OrbitOverflowError` as soon as more than ``cap`` distinct
    elements have been found.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    roots = simple_roots(s)
    self_intersection(s, seed)  # validates arity
    seen = {seed}
    queue = deque([seed])
    while queue:
        beta = queue.popleft()
        for root in roots:
            image = reflect(s, root, beta)
            if image not in seen:
                seen.add(image)
                if len(seen) > cap:
                    raise OrbitOverflowError(cap, len(seen))
                queue.append(image)
    return OrbitResult(tuple(sorted(seen)), len(seen), len(roots))


def _solve(s: Surface, self_int: int, antican: int, d_lo: int, d_hi: int, m_lo: int, m_hi: int) -> list[DivisorClass]:
    found = set()
    for d in range(d_lo, d_hi + 1):
        total = 3 * d - antican
        squares = d * d - self_int
        for sol in nonincreasing_solutions(s.r, total, squares, m_lo, m_hi):
            for m in distinct_permutations(sol):
                found.add(DivisorClass(d, m))
    return sorted(found)


def enumerate_minus_one_classes(s: Surface) -> list[DivisorClass]:
    """All ``E`` with ``E^2 = -1`` and ``-K.E = 1``, sorted."""
    lo, hi = EXCEPTIONAL_BOX
    return _solve(s, -1, 1, lo, hi, lo, hi)


def enumerate_conic_classes(s: Surface) -> list[DivisorClass]:
    """All classes with ``beta^2 = 0`` and ``-K.beta = 2``, sorted."""
    window = degree_window(s.r, 0, 2)
    if window is None:
        return []
    d_lo, d_hi = int(np.floor(window[0])), int(np.ceil(window[1]))
    # sum(m^2) = d^2 bounds every |m_i| by |d|
    bound = max(abs(d_lo), abs(d_hi))
    return _solve(s, 0, 2, d_lo, d_hi, -bound, bound)


def is_fixed_by_all(s: Surface, beta: DivisorClass) -> bool:
    return all(reflect(s, root, beta) == beta for root in simple_roots(s))


__all__ = [
    "DEFAULT_ORBIT_CAP",
    "OrbitResult",
    "Root",
    "enumerate_conic_classes",
    "enumerate_minus_one_classes",
    "is_fixed_by_all",
    "orbit",
    "reflect",
    "reflect_many",
    "simple_roots",
]
