from itertools import product
from math import prod

import pytest

from simflow import (
    BadModulusError,
    BadParamsError,
    GroupFlow2r,
    HasBridgeError,
    ModularFlow,
    NotAFlowError,
    boundary_matrix,
    build_complex,
    count_nz_flows,
    count_nz_group_flows_2r,
    count_nz_tensions,
    count_proper_colorings,
    flow_quasipolynomial,
    jaeger_flow,
    lift_z2r_flow,
    min_flow_number,
)
from simflow.fixtures import complete, cycle, petersen, rp2, rp2_disjoint_pair, simplex_boundary, standard_corpus
from simflow.flows import circuits, is_modular_flow
from simflow.verify import PETERSEN_FLOWS_AT_5


def brute_count_flows(delta, q):
    top = boundary_matrix(delta, delta.dimension).matrix
    count = 0
    for v in product(range(1, q), repeat=top.cols):
        if all(s % q == 0 for s in top.mat_vec(v)):
            count += 1
    return count


def test_flow_count_examples():
    assert count_nz_flows(complete(4, 2), 4) == 6
    assert count_nz_flows(complete(5, 3), 5) == 24
    assert count_nz_flows(rp2(), 2) == 1
    assert count_nz_flows(rp2(), 3) == 0
    assert count_nz_flows(petersen(), 4) == 0


def test_flow_count_against_brute_force():
    for delta, q in [(cycle(3), 4), (cycle(4), 3), (complete(4, 2), 3), (simplex_boundary(2), 4)]:
        want = brute_count_flows(delta, q)
        assert count_nz_flows(delta, q, method="kernel_enum") == want
        assert count_nz_flows(delta, q, method="subset_expansion") == want


def test_flow_count_modulus_one():
    assert count_nz_flows(cycle(3), 1) == 0
    with pytest.raises(BadModulusError):
        count_nz_flows(cycle(3), 0)
    with pytest.raises(BadParamsError):
        count_nz_flows(cycle(3), 3, method="nonsense")


def test_method_agreement_on_corpus():
    for _, delta in standard_corpus():
        for q in range(2, 9):
            enum = count_nz_flows(delta, q, method="kernel_enum")
            expand = count_nz_flows(delta, q, method="subset_expansion")
            assert enum == expand, (delta, q)


def test_falling_factorial_family():
    for n in (4, 5, 6):
        delta = complete(n, n - 2)
        for q in range(2, 9):
            assert count_nz_flows(delta, q) == prod(q - i for i in range(1, n))


def test_coloring_examples():
    assert count_proper_colorings(build_complex([[0, 1]]), 3) == 6
    assert count_proper_colorings(cycle(3), 3, method="brute") == 6
    assert count_proper_colorings(cycle(3), 1) == 0


def test_coloring_methods_agree():
    for delta in (cycle(3), cycle(4), complete(4, 2), simplex_boundary(2), build_complex([[0], [1], [2]])):
        for k in range(2, 6):
            brute = count_proper_colorings(delta, k, method="brute")
            expansion = count_proper_colorings(delta, k, method="subset_expansion")
            assert brute == expansion, (delta, k)


def test_coloring_chromatic_polynomials():
    # classical values: chromatic polynomial of the n-cycle is
    # (k-1)^n + (-1)^n (k-1)
    for n in (3, 4, 5):
        for k in (2, 3, 4):
            want = (k - 1) ** n + (-1) ** n * (k - 1)
            assert count_proper_colorings(cycle(n), k) == want
    for k in (3, 4, 5):
        assert count_proper_colorings(complete(4, 2), k) == k * (k - 1) * (k - 2) * (k - 3)


def test_tension_examples():
    assert count_nz_tensions(build_complex([[0, 1]]), 4) == 3
    assert count_nz_tensions(cycle(3), 3) == 2
    assert count_nz_tensions(cycle(3), 1) == 0


def test_tension_brute_force_small():
    """Direct definition: nowhere-zero weightings orthogonal to every
    signed circuit relation."""
    from simflow.matroid import circuit_kernel_vector

    for delta, k in [(cycle(3), 4), (cycle(4), 3), (simplex_boundary(2), 3)]:
        masks = circuits(delta)
        n = len(delta.facets)
        relations = []
        for mask in masks:
            vec = circuit_kernel_vector(delta, mask)
            row = [0] * n
            for coeff, fi in zip(vec, delta.facets_of_mask(mask)):
                row[fi] = coeff
            relations.append(row)
        brute = 0
        for w in product(range(1, k), repeat=n):
            if all(sum(c * x for c, x in zip(row, w)) % k == 0 for row in relations):
                brute += 1
        assert count_nz_tensions(delta, k) == brute


def test_circuit_enumeration():
    assert circuits(cycle(3)) == [0b111]
    assert circuits(simplex_boundary(2)) == [0b1111]
    assert len(circuits(complete(4, 2))) == 7  # 4 triangles and 3 quadrilaterals


def test_quasipolynomial_rp2():
    quasi = flow_quasipolynomial(rp2())
    assert quasi.period == 2
    assert list(quasi.constituents[0]) == [1]
    assert list(quasi.constituents[1]) in ([], [0])
    for q in range(2, 10):
        assert quasi.evaluate(q) == count_nz_flows(rp2(), q)


def test_quasipolynomial_cycle_and_k4():
    quasi = flow_quasipolynomial(cycle(3))
    assert quasi.period == 1
    assert list(quasi.constituents[0]) == [-1, 1]
    k4 = flow_quasipolynomial(complete(4, 2))
    assert k4.period == 1
    assert list(k4.constituents[0]) == [-6, 11, -6, 1]


def test_quasipolynomial_matches_fresh_moduli():
    for _, delta in standard_corpus():
        if len(delta.facets) > 10:
            continue
        quasi = flow_quasipolynomial(delta)
        for q in range(2, 11):
            assert quasi.evaluate(q) == count_nz_flows(delta, q), (delta, q)


def test_group_flows_rp2_pair():
    pair = rp2_disjoint_pair()
    assert count_nz_group_flows_2r(pair, 2) == 9
    assert count_nz_flows(pair, 4) == 1


def test_group_flows_cycle():
    assert count_nz_group_flows_2r(cycle(3), 1) == 1
    # r = 1 always coincides with the modular 2-flow count
    for _, delta in standard_corpus():
        if len(delta.facets) > 10:
            continue
        assert count_nz_group_flows_2r(delta, 1) == count_nz_flows(delta, 2)


def test_lift_single_layer():
    flow = lift_z2r_flow(cycle(3), GroupFlow2r(r=1, words=(1, 1, 1)))
    assert flow.q == 2 and flow.values == (1, 1, 1)
    assert flow.nowhere_zero


def test_lift_three_layers_all_odd():
    flow = lift_z2r_flow(cycle(3), GroupFlow2r(r=3, words=(7, 7, 7)))
    assert flow.q == 8
    assert all(v % 2 == 1 for v in flow.values)
    assert is_modular_flow(cycle(3), flow)


def test_lift_zero_flow():
    flow = lift_z2r_flow(cycle(3), GroupFlow2r(r=2, words=(0, 0, 0)))
    assert flow.values == (0, 0, 0)
    assert not flow.nowhere_zero


def test_lift_rejects_non_flow():
    with pytest.raises(NotAFlowError):
        lift_z2r_flow(cycle(3), GroupFlow2r(r=1, words=(1, 1, 0)))


def test_jaeger_cycle_trace():
    flow = jaeger_flow(cycle(3))
    assert flow.q == 8
    assert all(v % 2 == 1 for v in flow.values)
    assert is_modular_flow(cycle(3), flow)


def test_jaeger_sphere_not_minimal():
    tetra = simplex_boundary(2)
    flow = jaeger_flow(tetra)
    assert flow.q == 16
    assert flow.nowhere_zero and is_modular_flow(tetra, flow)
    # the sphere nevertheless carries a 2-flow
    assert min_flow_number(tetra, 8) == 2


def test_jaeger_rejects_bridges():
    with pytest.raises(HasBridgeError):
        jaeger_flow(build_complex([[0, 1, 2]]))
    with pytest.raises(HasBridgeError):
        jaeger_flow(rp2())


def test_jaeger_on_bridgeless_corpus():
    from simflow.matroid import bridges, coarboricity

    for _, delta in standard_corpus():
        if bridges(delta):
            continue
        flow = jaeger_flow(delta)
        assert flow.q == 1 << coarboricity(delta)
        assert flow.nowhere_zero
        assert is_modular_flow(delta, flow)


def test_min_flow_number_examples():
    assert min_flow_number(simplex_boundary(2), 8) == 2
    assert min_flow_number(complete(6, 4), 12) == 6
    assert min_flow_number(petersen(), 4) is None
    assert min_flow_number(petersen(), 5) == 5
    with pytest.raises(BadParamsError):
        min_flow_number(cycle(3), 1)


def test_petersen_regression():
    assert count_nz_flows(petersen(), 5, method="kernel_enum") == PETERSEN_FLOWS_AT_5
    assert count_nz_flows(petersen(), 5, method="subset_expansion") == PETERSEN_FLOWS_AT_5


def test_bridge_forces_zero_flow_count():
    bridged = [
        build_complex([[0, 1], [1, 2]]),
        build_complex([[0, 1], [1, 2], [0, 2], [2, 3]]),
        build_complex([[0, 1, 2]]),
        build_complex([[0, 1, 2], [1, 2, 3]]),
    ]
    for delta in bridged:
        for q in range(2, 9):
            assert count_nz_flows(delta, q) == 0


def test_modular_flow_invariants():
    flow = ModularFlow(q=5, values=(1, 4, 1, 0))
    assert not flow.nowhere_zero
    assert ModularFlow(q=3, values=(1, 2, 1)).nowhere_zero


def test_bridgeless_existence_bound():
    """Every bridgeless fixture admits some flow with modulus at most 2^c."""
    from simflow.matroid import bridges, coarboricity

    for _, delta in standard_corpus():
        if bridges(delta):
            continue
        c = coarboricity(delta)
        found = min_flow_number(delta, 1 << c)
        assert found is not None and found <= 1 << c
