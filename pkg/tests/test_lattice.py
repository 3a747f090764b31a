from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest

from arborlat.arbor import enumerate_arbors, linear, make_arbor, octopus
from arborlat.lattice import (
    composition_ehrhart_oracle,
    count_dilate,
    ehrhart_interpolated,
    enumerate_points,
    h_vector,
    hstar,
    normalized_volume,
    polytope_Qndk,
    polytope_of_arbor,
    weak_compositions,
)
from arborlat.polyalg import Poly


def test_polytope_of_arbor_constraints():
    p = polytope_of_arbor(octopus(2, 1))
    assert p.n == 2 and p.upper_unit == ()
    assert p.sum_constraints == (((1,), 1), ((1, 2), 2))
    p = polytope_of_arbor(make_arbor(3, [(1, 2, 3)], [-1]))
    assert p.sum_constraints == (((1, 2, 3), 3),)
    p = polytope_of_arbor(linear(3))
    assert p.sum_constraints == (((1,), 1), ((1, 2), 2), ((1, 2, 3), 3))


def test_polytope_Qndk():
    p = polytope_Qndk(2, 2, 1)
    assert p.upper_unit == (1,) and p.sum_constraints == (((1, 2), 2),)
    p = polytope_Qndk(3, 3, 3)
    assert p.upper_unit == (1, 2, 3)
    p = polytope_Qndk(3, 2, 0)
    assert p.upper_unit == () and p.sum_constraints == (((1, 2, 3), 2),)
    for bad in [(0, 1, 0), (1, 0, 0), (2, 2, 3), (3, 1, 2)]:
        with pytest.raises(ValueError):
            polytope_Qndk(*bad)


def test_count_dilate_examples():
    assert count_dilate(polytope_Qndk(2, 2, 0), 1) == 6
    for p in [polytope_Qndk(3, 3, 1), polytope_of_arbor(linear(4))]:
        assert count_dilate(p, 0) == 1
    assert count_dilate(polytope_Qndk(2, 2, 1), 2) == 12


def _brute_count(p, m):
    caps = []
    for i in range(1, p.n + 1):
        c = m if i in p.upper_unit else m * max(b for _, b in p.sum_constraints)
        caps.append(c)
    total = 0
    for x in product(*(range(c + 1) for c in caps)):
        if all(sum(x[i - 1] for i in idxs) <= m * b for idxs, b in p.sum_constraints):
            total += 1
    return total


def test_count_dilate_brute_force_grid():
    for n, d, k in [(2, 2, 1), (3, 2, 0), (3, 4, 2), (4, 4, 4)]:
        p = polytope_Qndk(n, d, k)
        for m in range(4):
            assert count_dilate(p, m) == _brute_count(p, m)


def test_h_vector_examples():
    assert h_vector(polytope_Qndk(2, 2, 0)).hs == (1, 4, 1)
    for n in (1, 2, 3, 4, 5):
        cube = polytope_Qndk(n, n, n)
        assert h_vector(cube).hs == tuple(comb(n, i) for i in range(n + 1))
    assert h_vector(polytope_Qndk(3, 3, 1)).hs == (1, 7, 7, 1)


def test_h_vector_oracle_and_sum():
    for a in enumerate_arbors(3):
        p = polytope_of_arbor(a)
        h = h_vector(p)
        assert h.hs[0] == 1 and h.hs[a.n] >= 1
        assert h.total == count_dilate(p, 1)
        brute = [0] * (a.n + 1)
        for pt in enumerate_points(p, 1):
            brute[sum(v > 0 for v in pt)] += 1
        assert list(h.hs) == brute


def test_ehrhart_interpolated_examples():
    assert ehrhart_interpolated(polytope_Qndk(1, 1, 0)) == Poly([1, 1])
    assert ehrhart_interpolated(polytope_Qndk(2, 2, 1)) == Poly(
        [1, Fraction(5, 2), Fraction(3, 2)]
    )
    assert ehrhart_interpolated(polytope_Qndk(2, 3, 1)) == Poly(
        [1, Fraction(7, 2), Fraction(5, 2)]
    )


def test_ehrhart_matches_counts_beyond_nodes():
    for p in [polytope_Qndk(3, 2, 1), polytope_of_arbor(octopus(4, 2))]:
        e = ehrhart_interpolated(p)
        for m in (p.n + 1, p.n + 2):
            assert e(m) == count_dilate(p, m)


def test_hstar_examples():
    assert hstar(polytope_Qndk(2, 2, 2)) == Poly([1, 1])
    assert hstar(polytope_Qndk(2, 2, 1)) == Poly([1, 2])
    # counts 1, 6, 15 pin down the quadratic, whose transform is 1 + 3t
    p = polytope_Qndk(2, 2, 0)
    assert [count_dilate(p, m) for m in (0, 1, 2)] == [1, 6, 15]
    assert ehrhart_interpolated(p) == Poly([1, 3, 2])
    assert hstar(p) == Poly([1, 3])


def test_hstar_at_one_is_normalized_volume():
    for a in enumerate_arbors(3):
        p = polytope_of_arbor(a)
        assert hstar(p)(1) == normalized_volume(p)


def test_weak_compositions():
    comps = list(weak_compositions(2, 2))
    assert comps == [(0, 2), (1, 1), (2, 0)]
    assert len(list(weak_compositions(5, 5))) == comb(9, 4)
    assert all(sum(c) == 5 for c in weak_compositions(5, 5))


def test_composition_oracle_examples():
    # (1,1) contributes C(2,1)^2 = 4 and (2,0) contributes C(2,2) = 1
    assert composition_ehrhart_oracle(2, 1, 1) == 5
    for n in (2, 3):
        for k in range(n + 1):
            assert composition_ehrhart_oracle(n, k, 0) == 1
    assert composition_ehrhart_oracle(3, 1, 1) == count_dilate(polytope_Qndk(3, 3, 1), 1) == 16


def test_composition_oracle_equals_counts():
    for n in range(1, 6):
        for k in range(n + 1):
            p = polytope_Qndk(n, n, k)
            for m in range(4):
                assert composition_ehrhart_oracle(n, k, m) == count_dilate(p, m)


def test_enumerate_points_lexicographic_and_capped():
    p = polytope_Qndk(2, 2, 1)
    pts = list(enumerate_points(p, 1))
    assert pts == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]
    assert pts == sorted(pts)
    with pytest.raises(ValueError):
        list(enumerate_points(p, 1, limit=3))


def test_unbounded_polytope_rejected():
    from arborlat.lattice import HPolytope

    with pytest.raises(ValueError):
        count_dilate(HPolytope(2, (1,), ()), 1)  # x_2 unconstrained
