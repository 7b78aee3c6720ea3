"""Representation expressions and state enumeration."""

import itertools
from collections import Counter

import pytest

from decostab import (
    DetPow,
    DirectSum,
    Dual,
    InhomogeneousError,
    MixedRankError,
    NoSolutionsError,
    StateSet,
    Std,
    Sym,
    Tensor,
    Trivial,
    ValidationError,
    Wedge,
    enumerate_states,
    envelope,
    homogeneity_degree,
    homogenize,
    state_containment,
)


def counter(states: StateSet) -> Counter:
    return states.counter()


def test_states_std():
    assert counter(enumerate_states(Std(3))) == Counter(
        {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
    )


def test_states_sym2_std3():
    expected = Counter(
        {(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (0, 2, 0): 1, (0, 1, 1): 1, (0, 0, 2): 1}
    )
    assert counter(enumerate_states(Sym(2, Std(3)))) == expected


def test_states_end_of_std2():
    # basis e_i (x) e_j-dual, enumerated by hand
    end = Tensor(Std(2), Dual(Std(2)))
    assert counter(enumerate_states(end)) == Counter({(0, 0): 2, (1, -1): 1, (-1, 1): 1})


def test_states_top_wedge_is_determinant():
    assert counter(enumerate_states(Wedge(3, Std(3)))) == Counter({(1, 1, 1): 1})
    assert counter(enumerate_states(DetPow(3, 1))) == Counter({(1, 1, 1): 1})
    assert counter(enumerate_states(DetPow(3, -2))) == Counter({(-2, -2, -2): 1})


def test_wedge_with_repeated_inner_weights():
    # Lambda^2 of 2 x (C^2): the set-based recursion would miss repeats
    rep = Wedge(2, DirectSum([Std(2), Std(2)]))
    got = counter(enumerate_states(rep))
    # pairs of the four basis vectors with weights e1, e2, e1, e2
    assert got == Counter({(2, 0): 1, (1, 1): 4, (0, 2): 1})
    assert sum(got.values()) == rep.dim() == 6


@pytest.mark.parametrize(
    "rep",
    [
        Std(4),
        Sym(3, Std(3)),
        Wedge(2, Sym(2, Std(3))),
        Tensor(Sym(2, Std(3)), Dual(Std(3))),
        DirectSum([Std(2), Wedge(2, Std(2)), Trivial(2)]),
        Sym(2, DirectSum([Std(2), Dual(Std(2))])),
        Tensor(Tensor(Std(3), Std(3)), DetPow(3, -1)),
    ],
)
def test_total_multiplicity_matches_dimension_formulas(rep):
    assert enumerate_states(rep).total() == rep.dim()


def test_dual_is_an_involution():
    for rep in (Sym(2, Std(3)), Wedge(2, Std(4)), Tensor(Std(2), Dual(Std(2)))):
        assert enumerate_states(Dual(Dual(rep))) == enumerate_states(rep)


@pytest.mark.parametrize(
    "left,right",
    [
        (Std(2), Std(2)),
        (Sym(2, Std(3)), Dual(Std(3))),
        (Wedge(2, Std(3)), Std(3)),
    ],
)
def test_tensor_states_are_minkowski_sums(left, right):
    got = counter(enumerate_states(Tensor(left, right)))
    brute = Counter()
    for u in left.weighted_basis():
        for v in right.weighted_basis():
            brute[tuple(a + b for a, b in zip(u, v))] += 1
    assert got == brute


def test_sym_wedge_against_index_enumeration():
    # independent basis: monomials / index subsets over the standard weights
    r, k = 3, 2
    std = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    sym_brute = Counter(
        tuple(a + b for a, b in zip(std[i], std[j]))
        for i, j in itertools.combinations_with_replacement(range(r), k)
    )
    wedge_brute = Counter(
        tuple(a + b for a, b in zip(std[i], std[j]))
        for i, j in itertools.combinations(range(r), k)
    )
    assert counter(enumerate_states(Sym(k, Std(r)))) == sym_brute
    assert counter(enumerate_states(Wedge(k, Std(r)))) == wedge_brute


def test_mixed_rank_rejected():
    with pytest.raises(MixedRankError):
        Tensor(Std(2), Std(3))
    with pytest.raises(MixedRankError):
        DirectSum([Std(2), Trivial(3)])


def test_oversized_wedge_rejected():
    with pytest.raises(ValidationError):
        Wedge(4, Std(3))
    # dimension is that of the weighted basis, not the rank
    Wedge(4, DirectSum([Std(2), Std(2)]))  # dim 4, fine


def test_homogeneity_degree():
    assert homogeneity_degree(Sym(2, Std(3))) == 2
    assert homogeneity_degree(DirectSum([Tensor(Std(2), Dual(Std(2))), Trivial(2)])) == 0
    with pytest.raises(InhomogeneousError) as exc:
        homogeneity_degree(DirectSum([Std(2), Wedge(2, Std(2))]))
    assert exc.value.degrees == {1, 2}


def test_homogeneity_additive_under_tensor():
    cases = [(Std(3), Sym(2, Std(3))), (Wedge(2, Std(3)), Dual(Std(3)))]
    for a, b in cases:
        assert homogeneity_degree(Tensor(a, b)) == \
            homogeneity_degree(a) + homogeneity_degree(b)


def test_homogenize_mixed_degrees():
    rho1, rho2 = Std(2), Sym(2, Std(2))  # degrees 1 and 2
    result = homogenize([rho1, rho2], kappa=2)
    # solutions nu in {(2,0), (0,1)}: S^2 rho1 (+) rho2
    assert isinstance(result, DirectSum)
    assert set(result.summands) == {Sym(2, rho1), rho2}
    assert homogeneity_degree(result) == 2


def test_homogenize_identity_case():
    rho = Std(3)
    assert homogenize([rho], kappa=1) == rho


def test_homogenize_no_solutions():
    with pytest.raises(NoSolutionsError):
        homogenize([Sym(2, Std(2)), Sym(3, Std(2))], kappa=1)


def test_envelope_states():
    # ((C^2)^{x2} (x) det^{-1})^{+2}: tensor-square states shifted by (-1,-1), twice
    env = envelope(2, a=2, b=1, c=2)
    assert counter(enumerate_states(env)) == Counter(
        {(1, -1): 2, (0, 0): 4, (-1, 1): 2}
    )


def test_state_containment():
    assert state_containment(Sym(2, Std(3)), a=2, b=0, c=1)
    assert state_containment(
        DirectSum([Tensor(Std(2), Dual(Std(2))), Trivial(2)]), a=2, b=1, c=2
    )
    assert not state_containment(Std(2), a=0, b=0, c=1)
    # multiplicity matters: End needs (0,0) twice, one envelope copy has it twice
    assert state_containment(Tensor(Std(2), Dual(Std(2))), a=2, b=1, c=1)
    assert not state_containment(
        DirectSum([Trivial(2)] * 5), a=2, b=1, c=2
    )


def test_stateset_validation():
    with pytest.raises(MixedRankError):
        StateSet([(1, 0), (1, 0, 0)])
    with pytest.raises(ValidationError):
        StateSet([((1, 0), 0)])
