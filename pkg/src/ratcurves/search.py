"""Bounded search for multiplicity vectors with prescribed sum and sum of squares.

Both enumerations in the package reduce to the same problem: for fixed ``d``
find every ``m`` with ``sum(m) = S`` and ``sum(m^2) = Q`` inside a box.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterator


def nonincreasing_solutions(r: int, total: int, squares: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing ``r``-tuples in ``[lo, hi]`` with the given sum and sum of squares."""
    if r <= 0 or squares < 0:
        return
    prefix: list[int] = []

    def rec(k: int, cap: int, rest: int, rest_sq: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            if lo <= rest <= cap and rest * rest == rest_sq:
                yield (*prefix, rest)
            return
        top = min(cap, math.isqrt(rest_sq))
        bottom = max(lo, -math.isqrt(rest_sq))
        for v in range(top, bottom - 1, -1):
            k1 = k - 1
            s1 = rest - v
            q1 = rest_sq - v * v
            # remaining entries lie in [lo, v]
            if s1 > k1 * v:
                break
            if s1 < k1 * lo or q1 < 0:
                continue
            # Cauchy-Schwarz: k1 * q1 >= s1^2
            if k1 * q1 < s1 * s1:
                continue
            if q1 > k1 * max(v * v, lo * lo):
                continue
            prefix.append(v)
            yield from rec(k1, v, s1, q1)
            prefix.pop()

    yield from rec(r, hi, total, squares)


def distinct_permutations(values: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(permutations(values))


def degree_window(r: int, self_int: int, anticanonical_degree: int) -> tuple[float, float] | None:
    """Real interval of ``d`` allowed by Cauchy-Schwarz.

    From ``sum(m) = 3d - k`` and ``sum(m^2) = d^2 - n`` with ``k = -K.beta``,
    ``n = beta^2``, the inequality ``(3d - k)^2 <= r (d^2 - n)`` is the quadratic
    ``(9 - r) d^2 - 6 k d + (k^2 + r n) <= 0``.  Returns ``None`` when empty.
    """
    a = 9 - r
    b = -6 * anticanonical_degree
    c = anticanonical_degree**2 + r * self_int
    disc = b * b - 4 * a * c
    if disc < 0:
        return None
    root = math.sqrt(disc)
    return ((-b - root) / (2 * a), (-b + root) / (2 * a))
