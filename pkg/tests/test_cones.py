"""State cells, fans, minimal generators, criticality."""

import random

import pytest

from conftest import oracle_state_cell_rays
from decostab import (
    ChiNotInAError,
    Cone,
    Std,
    Sym,
    TooManyStatesError,
    Trivial,
    ValidationError,
    corner_rays,
    critical_weight_vectors,
    is_critical,
    primitive_vector,
    rays,
    state_cell,
    state_fan,
    weight_cone,
)

G1_R3 = (-2, 1, 1)
G2_R3 = (-1, -1, 2)
G12_R3 = (-1, 0, 1)  # primitive representative of their sum (-3, 0, 3)


def test_weight_cone_rays():
    assert weight_cone(2).rays == ((-1, 1),)
    assert weight_cone(3).rays == (G1_R3, G2_R3)
    # corner vectors with content > 1 are emitted as primitive representatives
    assert weight_cone(4).rays == ((-3, 1, 1, 1), (-1, -1, -1, 3), (-1, -1, 1, 1))
    assert weight_cone(4).rays == corner_rays(4)


def test_corner_rays_are_primitive():
    import math

    for r in range(2, 7):
        for ray in corner_rays(r):
            assert math.gcd(*(abs(c) for c in ray)) == 1
            assert ray[0] < 0 and sum(ray) == 0


def test_state_cell_conic_r3():
    A = [(1, 0, 1), (0, 2, 0)]
    assert state_cell(A, (1, 0, 1), 3).rays == tuple(sorted([G1_R3, G12_R3]))
    assert state_cell(A, (0, 2, 0), 3).rays == tuple(sorted([G2_R3, G12_R3]))


def test_state_cell_singleton_is_full_cone():
    assert state_cell([(1, 0, 0)], (1, 0, 0), 3).rays == weight_cone(3).rays


def test_state_cell_chi_not_in_A():
    with pytest.raises(ChiNotInAError):
        state_cell([(1, 0, 1)], (0, 2, 0), 3)


def test_rays_of_halfspace_cut():
    # {gamma in C(3) : gamma_1 + gamma_3 <= 2 gamma_2}
    cone = Cone.from_halfspaces(3, [(1, -2, 1)])
    assert cone.rays == tuple(sorted([G1_R3, G12_R3]))


def test_zero_cone_has_no_rays():
    # gamma_3 <= 0 forces gamma = 0 inside C
    cone = Cone.from_halfspaces(3, [(0, 0, 1)])
    assert cone.rays == ()
    assert cone.contains([0, 0, 0])
    assert not cone.contains([-2, 1, 1])


def test_state_fan_conic_r3():
    fan = state_fan([(1, 0, 1), (0, 2, 0)], 3)
    assert fan.K_A == tuple(sorted([G1_R3, G2_R3, G12_R3]))
    assert fan.is_critical
    assert fan.K[(1, 0, 1)] == state_cell(fan.A, (1, 0, 1), 3).rays


def test_state_fan_singleton():
    fan = state_fan([(1, 1, 0)], 3)
    assert fan.K_A == corner_rays(3)
    assert not fan.is_critical


def test_state_fan_r4_case1():
    fan = state_fan([(1, 0, 1, 0), (0, 2, 0, 0)], 4)
    g1, g2, g3 = (-3, 1, 1, 1), (-1, -1, 1, 1), (-1, -1, -1, 3)
    g12 = (-5, -1, 3, 3)
    assert set(fan.K[(1, 0, 1, 0)]) == {g1, g3, g12}
    assert set(fan.K[(0, 2, 0, 0)]) == {g2, g3, g12}
    assert set(fan.K_A) == {g1, g2, g3, g12}


def test_is_critical_examples():
    assert is_critical([(1, 0, 1), (0, 2, 0)], 3)
    for r in (2, 3, 4):
        std_states = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
        assert not is_critical(std_states, r)
    assert not is_critical([(2, 0, 0)], 3)


def test_cells_match_brute_force_oracle():
    rng = random.Random(23)
    for _ in range(60):
        r = rng.randint(2, 4)
        A = {tuple(rng.randint(-3, 3) for _ in range(r))
             for _ in range(rng.randint(1, 5))}
        for chi in A:
            cell = state_cell(A, chi, r)
            assert list(cell.rays) == oracle_state_cell_rays(A, chi, r)


def test_cone_validate_consistency():
    cone = state_cell([(1, 0, 1), (0, 2, 0)], (1, 0, 1), 3)
    cone.validate()
    broken = Cone(r=3, rays=((-2, 1, 1),), halfspaces=cone.halfspaces)
    with pytest.raises(ValidationError):
        broken.validate()


def test_cone_membership_and_dimension():
    cone = state_cell([(1, 0, 1), (0, 2, 0)], (1, 0, 1), 3)
    assert cone.contains([-3, 0, 3])
    assert cone.contains([-2, 1, 1])
    assert not cone.contains([-1, -1, 2])
    assert not cone.contains([1, 0, -1])
    assert cone.is_full_dim()
    edge = Cone.from_halfspaces(3, [(1, -2, 1), (-1, 2, -1)])
    assert edge.rays == (G12_R3,)
    assert not edge.is_full_dim()


def test_critical_vectors_of_plain_representations():
    for r in (2, 3, 4):
        assert critical_weight_vectors(Std(r)) == corner_rays(r)
        assert critical_weight_vectors(Trivial(r)) == corner_rays(r)


def test_critical_vectors_sym2():
    K = critical_weight_vectors(Sym(2, Std(3)))
    assert set(K) >= {G1_R3, G2_R3, G12_R3}
    assert set(K) - set(corner_rays(3)) == {G12_R3}


def test_critical_vectors_budget():
    with pytest.raises(TooManyStatesError):
        critical_weight_vectors(Sym(2, Std(3)), budget=10)


def test_primitive_vector():
    assert primitive_vector((-3, 0, 3)) == (-1, 0, 1)
    assert primitive_vector((-2, -2, 2, 2)) == (-1, -1, 1, 1)
    with pytest.raises(ValidationError):
        primitive_vector((0, 0, 0))
