from fractions import Fraction

import pytest

from partition_ot import (
    DiscreteMeasure,
    Permutation,
    all_permutations,
    decompose,
    enumerate_partitions,
    measure_of,
    measure_to_json,
    symmetrize,
    validate_array,
)

SWAP = Permutation.from_one_line("2 1")


def test_measure_of_flat():
    mu = measure_of(validate_array([4, 2], 1))
    assert mu.dimension == 2
    assert mu.points() == ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (3, 0))
    assert all(w == Fraction(1, 6) for _, w in mu.atoms)


def test_measure_of_single_cell():
    mu = measure_of(validate_array([1], 1))
    assert mu.atoms == (((0, 0), Fraction(1)),)


def test_measure_of_plane_example():
    mu = measure_of(validate_array([[3, 2], [1]], 2))
    assert mu.points() == (
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1), (2, 0, 0),
    )
    assert all(w == Fraction(1, 6) for _, w in mu.atoms)


def test_total_mass_is_exactly_one():
    for n in range(1, 7):
        for p in enumerate_partitions(2, n):
            mu = measure_of(p)
            assert sum((w for _, w in mu.atoms), Fraction(0)) == 1
            assert len(mu.atoms) == n


def test_support_is_equivariant():
    for n in range(1, 6):
        for p in enumerate_partitions(2, n):
            for sigma in all_permutations(3):
                image = {sigma.apply_to_cell(pt) for pt in measure_of(p).support}
                assert measure_of(symmetrize(p, sigma)).support == image


def test_measure_validation():
    w = Fraction(1, 2)
    with pytest.raises(ValueError):
        DiscreteMeasure(dimension=2, atoms=(((0, 0), w), ((0, 0), w)))
    with pytest.raises(ValueError):
        DiscreteMeasure(dimension=2, atoms=(((0, 0), Fraction(1, 3)),))
    with pytest.raises(ValueError):
        DiscreteMeasure(dimension=2, atoms=(((0, 0), Fraction(-1)), ((1, 0), Fraction(2))))


def test_decompose_flat():
    dec = decompose(validate_array([4, 2], 1), SWAP)
    assert dec.common == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert dec.source_only == {(2, 0), (3, 0)}
    assert dec.target_only == {(0, 2), (0, 3)}


def test_decompose_self_symmetric():
    dec = decompose(validate_array([2, 1], 1), SWAP)
    assert dec.source_only == frozenset() and dec.target_only == frozenset()
    assert len(dec.common) == 3


def test_decompose_plane_example():
    p = validate_array([[3, 2], [1]], 2)
    dec = decompose(p, Permutation.from_one_line("1 3 2"))
    assert len(dec.common) == 5
    assert dec.source_only == {(1, 0, 1)}
    assert dec.target_only == {(1, 1, 0)}


def test_decompose_cardinalities():
    for n in range(1, 6):
        for p in enumerate_partitions(2, n):
            for sigma in all_permutations(3):
                dec = decompose(p, sigma)
                assert len(dec.common) + len(dec.source_only) == p.n
                assert len(dec.source_only) == len(dec.target_only)


def test_measure_json():
    assert measure_to_json(measure_of(validate_array([2, 1], 1))) == {
        "dimension": 2,
        "atoms": [
            {"point": [0, 0], "num": 1, "den": 3},
            {"point": [0, 1], "num": 1, "den": 3},
            {"point": [1, 0], "num": 1, "den": 3},
        ],
    }
