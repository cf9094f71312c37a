from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hypersurface_euler, hypersurface_middle_row
from randspec import random_rows
from sncspectrum.errors import DimensionMismatch, InvalidHodgeData, NegativeHodgeNumber
from sncspectrum.hodge import (
    EMPTY,
    HodgeData,
    composition_counts,
    curve,
    disjoint_union,
    from_catalog,
    hypersurface_in_projective_space,
    points,
    product,
    projective_space,
    toric_from_cone_counts,
)


def diag(*values):
    n = len(values) - 1
    return HodgeData(n, [[values[p] if p == q else 0 for q in range(n + 1)] for p in range(n + 1)])


def test_projective_space():
    assert projective_space(2) == diag(1, 1, 1)
    assert projective_space(0) == points(1)
    assert projective_space(1) == diag(1, 1)


def test_points():
    assert points(3).h == ((3,),) and points(3).components == 3
    assert points(9)[0, 0] == 9
    assert points(0) is EMPTY and points(0).is_empty


def test_curve():
    assert curve(1).h == ((1, 1), (1, 1))
    assert curve(0) == projective_space(1)
    assert curve(2)[1, 0] == 2


@pytest.mark.parametrize(
    "f, n, expected",
    [([1, 3, 3], 2, (1, 1, 1)), ([1, 4, 4], 2, (1, 2, 1)), ([1, 2], 1, (1, 1))],
)
def test_toric(f, n, expected):
    assert toric_from_cone_counts(f, n) == diag(*expected)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_toric_projective_fan(n):
    assert toric_from_cone_counts([comb(n + 1, k) for k in range(n + 1)], n) == projective_space(n)


def test_toric_bad_fan():
    with pytest.raises(NegativeHodgeNumber):
        toric_from_cone_counts([1, 3], 2)
    with pytest.raises(ValueError):
        toric_from_cone_counts([2, 3, 3], 2)


def test_hypersurface_examples():
    assert hypersurface_in_projective_space(2, 3) == curve(1)
    k3 = hypersurface_in_projective_space(3, 4)
    assert k3.h == ((1, 0, 1), (0, 20, 0), (1, 0, 1))
    quintic = hypersurface_in_projective_space(4, 5)
    assert quintic[2, 1] == 101 and quintic[1, 1] == 1 and quintic[3, 0] == 1
    assert hypersurface_in_projective_space(3, 3)[1, 1] == 7
    assert hypersurface_in_projective_space(3, 2) == product(projective_space(1), projective_space(1))
    assert hypersurface_in_projective_space(1, 4) == points(4)


@pytest.mark.parametrize("n, d", [(n, d) for n in range(1, 5) for d in range(1, 6)])
def test_hypersurface_against_brute_force(n, d):
    h = hypersurface_in_projective_space(n, d)
    m = n - 1
    assert [h[m - q, q] for q in range(m + 1)] == hypersurface_middle_row(n, d)
    assert h.euler() == hypersurface_euler(n, d)


@pytest.mark.parametrize("n", range(1, 6))
def test_linear_hypersurface_is_projective_space(n):
    assert hypersurface_in_projective_space(n, 1) == projective_space(n - 1)


def test_composition_counts():
    assert composition_counts(4, 1, 3)[8] == 19
    assert composition_counts(5, 1, 4)[10] == comb(9, 4) - 5 * comb(5, 4)


def test_product():
    assert product(projective_space(1), projective_space(1)) == toric_from_cone_counts([1, 4, 4], 2)
    assert product(curve(2), points(1)) == curve(2)
    assert product(curve(2), EMPTY) is EMPTY
    assert product(points(2), points(3)) == points(6)


def test_disjoint_union():
    assert disjoint_union(points(3), points(6)) == points(9)
    assert disjoint_union(curve(3), EMPTY) == curve(3)
    two = disjoint_union(curve(1), curve(1))
    assert (two[0, 0], two[1, 0], two[1, 1], two.components) == (2, 2, 2, 2)
    with pytest.raises(DimensionMismatch):
        disjoint_union(curve(1), points(1))


@pytest.mark.parametrize(
    "dim, rows, components",
    [
        (1, [[1, 2], [1, 1]], -1),  # Hodge symmetry
        (2, [[1, 0, 0], [0, 1, 0], [0, 0, 2]], -1),  # Serre duality
        (0, [[2]], 1),  # components != h^{0,0}
        (0, [[-1]], -1),
        (1, [[1]], -1),
        (-1, [[1]], -1),
    ],
)
def test_invalid_tables(dim, rows, components):
    with pytest.raises(InvalidHodgeData):
        HodgeData(dim, rows, components)


def test_catalog_lookup():
    assert from_catalog("P2") == projective_space(2)
    assert from_catalog("hypersurface", n=4, d=5)[2, 1] == 101
    assert from_catalog("toric", f=[1, 4, 4], n=2)[1, 1] == 2
    with pytest.raises(KeyError):
        from_catalog("grassmannian")
    with pytest.raises(ValueError):
        from_catalog("points")


def test_diamond_render():
    text = hypersurface_in_projective_space(3, 4).diamond()
    assert text.splitlines()[2].split() == ["1", "20", "1"]
    assert EMPTY.diamond() == "(empty)"


hodge_tables = st.tuples(st.integers(0, 3), st.randoms(use_true_random=False)).map(
    lambda x: HodgeData(x[0], random_rows(x[1].randint, x[0]))
)


@settings(max_examples=60)
@given(hodge_tables, hodge_tables, hodge_tables)
def test_product_commutative_associative(a, b, c):
    assert product(a, b) == product(b, a)
    assert product(product(a, b), c) == product(a, product(b, c))
    assert product(a, b).euler() == a.euler() * b.euler()
