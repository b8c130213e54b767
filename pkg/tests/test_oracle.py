"""Independent counting routes and their agreement with the path engine."""

import pytest

from simphom.hom import enumerate_hom_simplices
from simphom.oracle import (
    OracleBudgetExceeded,
    brute_force_hom_count,
    count_monotone_lattice_maps,
    count_simplicial_maps,
)
from simphom.simpset import boundary_delta, delta, horn, product, quotient


class TestLatticeCounts:
    def test_frozen_values(self):
        assert count_monotone_lattice_maps(0, 0, 1) == 2
        assert count_monotone_lattice_maps(1, 1, 1) == 6
        assert count_monotone_lattice_maps(2, 1, 1) == 10
        assert count_monotone_lattice_maps(3, 1, 1) == 15
        assert count_monotone_lattice_maps(9, 1, 1) == 66
        assert count_monotone_lattice_maps(6, 2, 1) == 120

    def test_symmetry_in_grid_axes(self):
        # transposing the grid swaps p and n
        for p in range(4):
            for n in range(4):
                for q in range(1, 3):
                    assert count_monotone_lattice_maps(p, n, q) == (
                        count_monotone_lattice_maps(n, p, q)
                    )

    def test_height_zero_counts_simplices(self):
        for p in range(5):
            for q in range(3):
                assert count_monotone_lattice_maps(p, 0, q) == len(delta(q).simplices(p))


class TestBruteForce:
    def test_self_maps_of_interval(self):
        # simplicial maps delta(1) -> delta(1): one per 1-simplex of the target
        assert count_simplicial_maps(delta(1), delta(1)) == 3

    def test_maps_to_point(self):
        for domain in [delta(2), boundary_delta(2), product(delta(1), delta(1))]:
            assert count_simplicial_maps(domain, delta(0)) == 1

    def test_maps_from_point(self):
        assert count_simplicial_maps(delta(0), delta(2)) == 3

    def test_boundary_into_interval(self):
        # triangle boundary -> interval: a map is a monotone 0/1 labelling
        # of the three vertices, extended uniquely over each edge
        assert count_simplicial_maps(boundary_delta(2), delta(1)) == 4

    def test_budget_exhaustion(self):
        with pytest.raises(OracleBudgetExceeded):
            count_simplicial_maps(product(delta(2), delta(2)), delta(2), node_budget=10)


class TestAgreement:
    def test_interval_case_three_ways(self):
        space = delta(1)
        for p in range(3):
            engine = len(enumerate_hom_simplices(space, 1, p))
            brute = brute_force_hom_count(space, space, p)
            lattice = count_monotone_lattice_maps(p, 1, 1)
            assert engine == brute == lattice

    def test_triangle_target_two_ways(self):
        space = delta(2)
        for (n, p) in [(1, 0), (1, 1), (2, 0), (2, 1)]:
            engine = len(enumerate_hom_simplices(space, n, p))
            brute = brute_force_hom_count(delta(n), space, p)
            lattice = count_monotone_lattice_maps(p, n, 2)
            assert engine == brute == lattice

    def test_irregular_target_two_ways(self):
        space = quotient(delta(2), ["0,2"])
        for (n, p) in [(1, 0), (1, 1), (1, 2), (2, 1)]:
            engine = len(enumerate_hom_simplices(space, n, p))
            brute = brute_force_hom_count(delta(n), space, p)
            assert engine == brute

    def test_horn_target_two_ways(self):
        space = horn(2, 1)
        for (n, p) in [(1, 1), (1, 2), (2, 1)]:
            engine = len(enumerate_hom_simplices(space, n, p))
            brute = brute_force_hom_count(delta(n), space, p)
            assert engine == brute
