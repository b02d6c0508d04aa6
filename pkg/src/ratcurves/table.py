"""Regenerate the cubic-surface table of smooth rational classes.

Classes are grouped by self-intersection: ``-1``, ``0``, the odd series
``1 + 2t``, the even series ``2 + 2t`` and the leftover classes of square 4.
Inside each series, classes that recur affinely in ``t`` are fitted into
families; anything that does not continue becomes a standalone row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .classifier import enumerate_by_self_intersection
from .lattice import DivisorClass, Surface, dim_mor, self_intersection

TABLE_POINTS = 6
DEFAULT_T_MAX = 5
# Families are fitted on t = 1, 2 and checked on 0..max(t_max, FIT_HORIZON).
FIT_HORIZON = 3


@dataclass(frozen=True, order=True)
class AffineForm:
    """``const + slope * t``."""

    const: int
    slope: int = 0

    def __call__(self, t: int) -> int:
        return self.const + self.slope * t

    def render(self) -> str:
        if self.slope == 0:
            return str(self.const)
        term = ("" if abs(self.slope) == 1 else str(abs(self.slope))) + "t"
        sign = "+" if self.slope > 0 else "-"
        if self.const == 0:
            return term if self.slope > 0 else sign + term
        return f"{self.const}{sign}{term}"


@dataclass(frozen=True)
class TableRow:
    """One line of the table: a family in ``t``, or a single class when every
    form is constant."""

    group: str
    self_int_family: AffineForm
    degree_family: AffineForm
    multiplicity_family: tuple[AffineForm, ...]
    dim_family: AffineForm

    @property
    def is_family(self) -> bool:
        return self.degree_family.slope != 0 or any(f.slope for f in self.multiplicity_family)

    def instantiate(self, t: int) -> DivisorClass:
        return DivisorClass(self.degree_family(t), tuple(f(t) for f in self.multiplicity_family))

    def instances(self, t_max: int) -> Iterator[tuple[int, DivisorClass]]:
        ts = range(t_max + 1) if self.is_family else (0,)
        for t in ts:
            yield t, self.instantiate(t)

    def sort_key(self) -> tuple:
        return (
            self.degree_family.const,
            tuple(f.const for f in self.multiplicity_family),
            self.degree_family.slope,
            tuple(f.slope for f in self.multiplicity_family),
        )


# (label, constant part of beta^2, step in t); None step means a single value.
GROUPS = (
    ("-1", -1, None),
    ("0", 0, None),
    ("1+2t", 1, 2),
    ("2+2t", 2, 2),
    ("4", 4, None),
)


def _constant_row(s: Surface, group: str, beta: DivisorClass) -> TableRow:
    return TableRow(
        group=group,
        self_int_family=AffineForm(self_intersection(s, beta)),
        degree_family=AffineForm(beta.d),
        multiplicity_family=tuple(AffineForm(x) for x in beta.m),
        dim_family=AffineForm(dim_mor(s, beta)),
    )


def _fit_series(s: Surface, group: str, base: int, step: int, horizon: int) -> tuple[list[TableRow], dict[int, list[DivisorClass]]]:
    """Fit affine families to the classes of square ``base + step*t``.

    Returns the fitted rows and, per t, the classes no family covers.
    """
    by_t = {t: set(enumerate_by_self_intersection(s, base + step * t)) for t in range(horizon + 1)}
    rows = []
    covered: set[DivisorClass] = set()
    # t = 0 members of distinct families may coincide, so fit on t = 1, 2.
    for c1 in sorted(by_t[1]):
        for c2 in sorted(by_t[2]):
            delta_d = c2.d - c1.d
            delta_m = tuple(b - a for a, b in zip(c1.m, c2.m))
            members = [
                DivisorClass(c1.d + (t - 1) * delta_d, tuple(a + (t - 1) * k for a, k in zip(c1.m, delta_m)))
                for t in range(horizon + 1)
            ]
            if not all(m.permutation_key() == m and m in by_t[t] for t, m in enumerate(members)):
                continue
            dims = [dim_mor(s, m) for m in members]
            dim_slope = dims[1] - dims[0]
            if any(dims[t] != dims[0] + dim_slope * t for t in range(horizon + 1)):
                continue
            rows.append(
                TableRow(
                    group=group,
                    self_int_family=AffineForm(base, step),
                    degree_family=AffineForm(members[0].d, delta_d),
                    multiplicity_family=tuple(AffineForm(a, k) for a, k in zip(members[0].m, delta_m)),
                    dim_family=AffineForm(dims[0], dim_slope),
                )
            )
            covered.update(members)
    leftovers = {t: sorted(by_t[t] - covered) for t in range(horizon + 1)}
    return rows, leftovers


def generate_table(s: Surface | None = None, t_max: int = DEFAULT_T_MAX) -> list[TableRow]:
    """Rows in display order: grouped by square, then by degree form and tuple.

    Classes of square 4 outside every ``2+2t`` family form the standalone
    ``4`` block; any other class a series cannot fit becomes a constant row
    of its series.
    """
    if s is None:
        s = Surface(TABLE_POINTS)
    if s.r != TABLE_POINTS:
        raise ValueError(f"the table is defined for r={TABLE_POINTS} only")
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    horizon = max(t_max, FIT_HORIZON)
    out: list[TableRow] = []
    standalone: dict[int, list[DivisorClass]] = {}
    for label, base, step in GROUPS:
        if step is None:
            if label in ("-1", "0"):
                classes = enumerate_by_self_intersection(s, base)
            else:
                classes = standalone.pop(base, [])
            rows = [_constant_row(s, label, b) for b in classes]
        else:
            rows, leftovers = _fit_series(s, label, base, step, horizon)
            for t in range(t_max + 1):
                n = base + step * t
                if n in (-1, 0, 4):
                    standalone.setdefault(n, []).extend(leftovers[t])
                else:
                    rows.extend(_constant_row(s, label, b) for b in leftovers[t])
        out.extend(sorted(rows, key=TableRow.sort_key))
    return out


def instantiated_rows(rows: list[TableRow], t_max: int) -> Iterator[tuple[TableRow, int, DivisorClass]]:
    for row in rows:
        for t, beta in row.instances(t_max):
            yield row, t, beta
