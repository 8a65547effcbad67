from math import gcd

import pytest

from simflow import (
    BadModulusError,
    boundary_matrix,
    build_complex,
    homology_summary,
    kernel_count_mod_q,
    subset_profile,
    torsion_weight,
)
from simflow.complexes import restrict_columns
from simflow.fixtures import cycle, rp2, rp2_disjoint_pair, simplex_boundary, standard_corpus
from simflow.homology import codim1_cycle_rank, t_q_of


def test_sphere_homology():
    summary = homology_summary(simplex_boundary(2))
    assert summary.betti == {2: 1, 1: 0, 0: 0}
    assert summary.torsion[1] == []


def test_rp2_homology():
    summary = homology_summary(rp2())
    assert summary.betti == {2: 0, 1: 0, 0: 0}
    assert summary.torsion[1] == [2]


def test_path_subset_of_cycle():
    summary = homology_summary(cycle(3), 0b011)
    assert summary.betti[1] == 0
    assert summary.betti[0] == 0


def test_disjoint_pair_has_two_components():
    summary = homology_summary(rp2_disjoint_pair())
    assert summary.betti[0] == 1
    assert summary.torsion[1] == [2, 2]


def test_zero_dimensional_points():
    pts = build_complex([[0], [1], [2]])
    summary = homology_summary(pts)
    assert summary.betti == {0: 2}


def test_euler_characteristic_identity():
    for _, delta in standard_corpus():
        summary = homology_summary(delta)
        combinatorial = sum(
            (-1) ** n * len(delta.faces(n)) for n in range(delta.dimension + 1)
        ) - 1
        homological = sum(
            (-1) ** n * b for n, b in summary.betti.items()
        )
        assert combinatorial == homological, delta


def test_betti_matches_subset_rank_formula():
    """|X| - beta_d(X) equals the rank of the restricted boundary map."""
    from simflow.linalg import rational_rank

    for _, delta in standard_corpus():
        if len(delta.facets) > 8:
            continue
        for mask in range(1 << len(delta.facets)):
            summary = homology_summary(delta, mask)
            rank = rational_rank(restrict_columns(delta, mask).matrix)
            assert mask.bit_count() - summary.betti[delta.dimension] == rank


def test_universal_coefficient_count():
    """Kernel size mod q is q^beta_d times the torsion weight."""
    for _, delta in standard_corpus():
        if len(delta.facets) > 6:
            continue
        d = delta.dimension
        for mask in (0, 1, delta.full_mask, delta.full_mask >> 1):
            summary = homology_summary(delta, mask)
            for q in range(1, 7):
                count = kernel_count_mod_q(restrict_columns(delta, mask).matrix, q)
                assert count == q ** summary.betti[d] * torsion_weight(delta, mask, q)
    # and the torsion case itself
    for q in range(1, 8):
        count = kernel_count_mod_q(boundary_matrix(rp2(), 2).matrix, q)
        assert count == torsion_weight(rp2(), rp2().full_mask, q)


def test_torsion_weight_examples():
    full = rp2().full_mask
    assert torsion_weight(rp2(), full, 2) == 2
    assert torsion_weight(rp2(), full, 3) == 1
    assert torsion_weight(simplex_boundary(2), simplex_boundary(2).full_mask, 5) == 1
    with pytest.raises(BadModulusError):
        torsion_weight(rp2(), full, 0)


def test_betti_difference_identity_on_subset_pairs():
    """|Y| - |X| = beta_d(Y) - beta_{d-1}(Y) - beta_d(X) + beta_{d-1}(X)."""
    for delta in (cycle(4), simplex_boundary(2)):
        d = delta.dimension
        stats = {}
        for mask in range(1 << len(delta.facets)):
            summary = homology_summary(delta, mask)
            stats[mask] = (
                mask.bit_count(),
                summary.betti[d],
                summary.betti[d - 1],
            )
        for sx, bdx, brx in stats.values():
            for sy, bdy, bry in stats.values():
                assert sy - sx == bdy - bry - bdx + brx


def test_profile_matches_direct_homology():
    for _, delta in standard_corpus():
        if len(delta.facets) > 8:
            continue
        profile = subset_profile(delta)
        z = codim1_cycle_rank(delta)
        for mask in range(1 << len(delta.facets)):
            summary = homology_summary(delta, mask)
            rank = profile.rank(mask)
            assert summary.betti[delta.dimension] == mask.bit_count() - rank
            if delta.dimension >= 1:
                assert summary.betti[delta.dimension - 1] == z - rank
                assert sorted(summary.torsion[delta.dimension - 1]) == sorted(
                    profile.torsion(mask)
                )


def test_profile_histogram_total():
    for _, delta in standard_corpus():
        profile = subset_profile(delta)
        assert sum(profile.histogram.values()) == 1 << len(delta.facets)


def test_profile_torsion_period():
    assert subset_profile(rp2()).torsion_period() == 2
    assert subset_profile(cycle(4)).torsion_period() == 1


def test_t_q_of():
    assert t_q_of((2, 4), 6) == gcd(2, 6) * gcd(4, 6)
    assert t_q_of((), 5) == 1
