import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ratcurves import (
    DivisorClass,
    OrbitOverflowError,
    Surface,
    anticanonical_degree,
    arithmetic_genus,
    canonical_class,
    enumerate_conic_classes,
    enumerate_minus_one_classes,
    orbit,
    reflect,
    self_intersection,
    simple_roots,
)
from ratcurves.errors import LatticeError
from ratcurves.weyl import Root, reflect_many

MINUS_ONE_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


def cls(d, *m):
    return DivisorClass(d, m)


def box_brute_force(r, square, antican, lo, hi):
    """Every class in the box [lo, hi]^(1+r) with the given invariants."""
    s = Surface(r)
    out = []
    for d in range(lo, hi + 1):
        for m in itertools.product(range(lo, hi + 1), repeat=r):
            beta = DivisorClass(d, m)
            if self_intersection(s, beta) == square and anticanonical_degree(s, beta) == antican:
                out.append(beta)
    return sorted(out)


# -- roots -------------------------------------------------------------------------

def test_simple_roots_cubic(cubic):
    roots = simple_roots(cubic)
    assert len(roots) == 6
    assert roots[0].vector == cls(1, 1, 1, 1, 0, 0, 0)
    for root in roots:
        assert self_intersection(cubic, root.vector) == -2
        assert anticanonical_degree(cubic, root.vector) == 0


def test_simple_roots_small_r():
    assert [root.vector for root in simple_roots(Surface(2))] == [cls(0, -1, 1)]
    assert simple_roots(Surface(1)) == []
    assert len(simple_roots(Surface(8))) == 8


def test_root_validation(cubic):
    with pytest.raises(LatticeError):
        Root(cubic, cls(1, 1, 1, 0, 0, 0, 0))
    with pytest.raises(LatticeError):
        Root(cubic, cls(1, 1, 1, 1, 1, 0, 0))


# -- reflections -------------------------------------------------------------------

def test_reflect_hyperplane_by_first_root(cubic):
    rho0 = simple_roots(cubic)[0]
    image = reflect(cubic, rho0, cubic.hyperplane())
    assert image == cls(2, 1, 1, 1, 0, 0, 0)
    assert reflect(cubic, rho0, image) == cubic.hyperplane()
    assert self_intersection(cubic, image) == 1


def test_reflect_fixes_canonical(cubic):
    k = canonical_class(cubic)
    for root in simple_roots(cubic):
        assert reflect(cubic, root, k) == k


def test_reflect_is_involutive_isometry_on_random_classes(cubic):
    rng = random.Random(11)
    roots = simple_roots(cubic)
    for _ in range(10_000):
        beta = DivisorClass(rng.randint(-40, 40), tuple(rng.randint(-40, 40) for _ in range(6)))
        root = rng.choice(roots)
        image = reflect(cubic, root, beta)
        assert reflect(cubic, root, image) == beta
        assert self_intersection(cubic, image) == self_intersection(cubic, beta)
        assert anticanonical_degree(cubic, image) == anticanonical_degree(cubic, beta)


@settings(max_examples=200)
@given(st.integers(2, 8), st.data())
def test_reflect_property_all_r(r, data):
    s = Surface(r)
    coeff = st.integers(-20, 20)
    beta = DivisorClass(data.draw(coeff), tuple(data.draw(coeff) for _ in range(r)))
    root = data.draw(st.sampled_from(simple_roots(s)))
    image = reflect(s, root, beta)
    assert reflect(s, root, image) == beta
    assert self_intersection(s, image) == self_intersection(s, beta)
    assert anticanonical_degree(s, image) == anticanonical_degree(s, beta)


def test_reflect_many_matches_scalar(cubic):
    rng = random.Random(3)
    sample = [DivisorClass(rng.randint(-9, 9), tuple(rng.randint(-9, 9) for _ in range(6))) for _ in range(300)]
    rows = np.array([(b.d, *b.m) for b in sample])
    for root in simple_roots(cubic):
        expected = [(c.d, *c.m) for c in (reflect(cubic, root, b) for b in sample)]
        assert reflect_many(root, rows).tolist() == [list(e) for e in expected]


# -- orbits ------------------------------------------------------------------------

def test_orbit_of_exceptional_curve_is_the_27_lines(cubic):
    res = orbit(cubic, cubic.exceptional(1), cap=100)
    assert res.size == 27
    assert list(res.representatives) == enumerate_minus_one_classes(cubic)
    assert res.generator_count == 6


def test_orbit_of_canonical_class(cubic):
    assert orbit(cubic, canonical_class(cubic)).size == 1


def test_orbit_of_hyperplane_preserves_invariants(cubic):
    res = orbit(cubic, cubic.hyperplane(), cap=10**6)
    assert res.size == 72
    for beta in res.representatives:
        assert self_intersection(cubic, beta) == 1
        assert arithmetic_genus(cubic, beta) == 0


def test_orbit_is_closed_and_sorted(cubic):
    res = orbit(cubic, cls(2, 1, 1, 0, 0, 0, 0))
    members = set(res.representatives)
    assert list(res.representatives) == sorted(members)
    for beta in members:
        for root in simple_roots(cubic):
            assert reflect(cubic, root, beta) in members


def test_orbit_cap_overflow():
    s = Surface(8)
    with pytest.raises(OrbitOverflowError) as info:
        orbit(s, cls(5, 3, 2, 1, 1, 0, 0, 0, 0), cap=10)
    assert info.value.partial_count == 11
    with pytest.raises(ValueError):
        orbit(s, s.hyperplane(), cap=0)


# -- exceptional and conic classes -----------------------------------------------------

@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_minus_one_classes_match_full_box(r):
    assert enumerate_minus_one_classes(Surface(r)) == box_brute_force(r, -1, 1, -3, 8)


@pytest.mark.parametrize("r", range(1, 9))
def test_minus_one_counts(r):
    s = Surface(r)
    found = enumerate_minus_one_classes(s)
    assert len(found) == MINUS_ONE_COUNTS[r]
    assert len(set(found)) == len(found)
    assert found == sorted(found)
    for e in found:
        assert self_intersection(s, e) == -1
        assert anticanonical_degree(s, e) == 1
        assert arithmetic_genus(s, e) == 0


@pytest.mark.parametrize("r", range(3, 9))
def test_minus_one_classes_are_one_orbit(r):
    s = Surface(r)
    assert list(orbit(s, s.exceptional(1)).representatives) == enumerate_minus_one_classes(s)


def test_minus_one_classes_cubic_shape(cubic):
    by_degree = {}
    for e in enumerate_minus_one_classes(cubic):
        by_degree.setdefault(e.d, []).append(e)
    assert {d: len(v) for d, v in by_degree.items()} == {0: 6, 1: 15, 2: 6}


def test_conic_classes_cubic(cubic):
    conics = enumerate_conic_classes(cubic)
    assert len(conics) == 27
    keys = {}
    for c in conics:
        keys[c.permutation_key()] = keys.get(c.permutation_key(), 0) + 1
        assert self_intersection(cubic, c) == 0
        assert anticanonical_degree(cubic, c) == 2
        assert arithmetic_genus(cubic, c) == 0
    assert keys == {
        cls(1, 1, 0, 0, 0, 0, 0): 6,
        cls(2, 1, 1, 1, 1, 0, 0): 15,
        cls(3, 2, 1, 1, 1, 1, 1): 6,
    }


@pytest.mark.parametrize("r", [2, 3])
def test_conic_classes_match_box(r):
    s = Surface(r)
    found = enumerate_conic_classes(s)
    assert found == box_brute_force(r, 0, 2, -8, 8)
    if r == 2:
        assert cls(1, 1, 0) in found and cls(1, 0, 1) in found


def test_conic_counts_larger_r():
    # one W(E_r)-orbit in each case
    for r, expected in [(7, 126), (8, 2160)]:
        s = Surface(r)
        conics = enumerate_conic_classes(s)
        assert len(conics) == expected
        assert orbit(s, DivisorClass(1, (1,) + (0,) * (r - 1))).size == expected
