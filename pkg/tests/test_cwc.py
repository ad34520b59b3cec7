import random
from fractions import Fraction

import pytest

from whamming.cwc import (
    RankDeficientError,
    check_subcode_criterion,
    is_constant_weight_bruteforce,
    multiset_condition_check,
    sigma_check,
    simplex_generator,
    subspace_weight_formula,
    subspace_weights_match_formula,
    weighted_constant_builder,
)
from whamming.extension import udp_check
from whamming.generators import random_full_rank, random_space
from whamming.gf import field_create, field_from_q
from whamming.linalg import projective_points, subspaces
from whamming.wspace import CodeMatrix, WeightedSpace, Wt

from oracles import span_set

GF2, GF3 = field_create(2), field_create(3)
H3 = WeightedSpace.hamming(3)
NONCONST = CodeMatrix(GF2, H3, [[1, 0, 0], [0, 1, 1]])


def gap_instance():
    return weighted_constant_builder(GF2, 2, {(1, 0): [2], (0, 1): [1, 1], (1, 1): [2]})


def test_bruteforce_examples():
    assert is_constant_weight_bruteforce(CodeMatrix(GF3, H3, [[1, 2, 0]])).holds
    res = is_constant_weight_bruteforce(simplex_generator(GF2, 2))
    assert res.holds and res.witness == 2
    res = is_constant_weight_bruteforce(NONCONST)
    assert not res.holds
    g1, w1, g2, w2 = res.witness
    assert w1 != w2


def test_rank_deficient_rejected():
    g = CodeMatrix(GF2, H3, [[1, 1, 0], [1, 1, 0]])
    for fn in (is_constant_weight_bruteforce, sigma_check, multiset_condition_check, check_subcode_criterion):
        with pytest.raises(RankDeficientError):
            fn(g)


def test_sigma_examples():
    assert sigma_check(simplex_generator(GF2, 2)).sigma == 1
    assert sigma_check(simplex_generator(GF3, 2, 3)).sigma == 3
    rep = sigma_check(NONCONST)
    assert not rep.is_constant and rep.sigma is None
    assert rep.per_point == {(1, 0): 1, (0, 1): 2, (1, 1): 0}
    assert rep.violating_point == (1, 1)


def test_formula_examples():
    assert subspace_weight_formula(2, 0, 1, 2) == 0
    assert subspace_weight_formula(2, 1, 1, 2) == 2
    assert subspace_weight_formula(2, 2, 1, 2) == 3
    with pytest.raises(ValueError):
        subspace_weight_formula(2, 3, 1, 2)


@pytest.mark.parametrize("q,k,r,n,weight", [(2, 2, 1, 3, 2), (2, 3, 1, 7, 4), (3, 2, 2, 8, 6), (4, 2, 1, 5, 4)])
def test_simplex(q, k, r, n, weight):
    g = simplex_generator(field_from_q(q), k, r)
    assert g.n == n
    assert g.space.labels[0] == "P0_0"
    assert sigma_check(g).sigma == r
    assert is_constant_weight_bruteforce(g).witness == weight
    assert multiset_condition_check(g).holds
    assert subspace_weights_match_formula(g, r).holds


def test_strict_gap_fixture():
    g = gap_instance()
    rep = sigma_check(g)
    assert rep.is_constant and rep.sigma == 2
    assert is_constant_weight_bruteforce(g).holds
    res = multiset_condition_check(g)
    assert not res.holds
    assert res.witness[2] in (1, 2)
    assert not udp_check(g.space.labels, g.space.labels, g.space).holds


def test_builder_examples_and_errors():
    ones = weighted_constant_builder(GF2, 2, {(1, 0): [1], (0, 1): [1], (1, 1): [1]})
    assert ones.grid == simplex_generator(GF2, 2).grid
    with pytest.raises(ValueError):
        weighted_constant_builder(GF2, 2, {(1, 0): [1], (0, 1): [1], (1, 1): [2]})
    with pytest.raises(ValueError):
        weighted_constant_builder(GF2, 2, {(1, 0): [0], (0, 1): [0], (1, 1): [0]})
    with pytest.raises(ValueError):
        weighted_constant_builder(GF2, 2, {(1, 0): ["3", "-1"], (0, 1): [2], (1, 1): [2]})
    with pytest.raises(ValueError):
        weighted_constant_builder(GF3, 2, {(2, 0): [1]})


def test_subcode_criterion():
    crit = check_subcode_criterion(simplex_generator(GF2, 3))
    assert crit.holds and crit.constant_weight and crit.forward and crit.converse
    crit = check_subcode_criterion(NONCONST)
    assert crit.holds and not crit.constant_weight and not crit.equal_by_dimension[1]
    crit = check_subcode_criterion(CodeMatrix(GF2, H3, [[1, 1, 0]]))
    assert crit.converse is None and crit.holds


def test_point_sums_agree_with_enumerated_line_weights():
    rng = random.Random(2)
    for _ in range(30):
        field = field_from_q(rng.choice([2, 3, 4]))
        space = random_space(rng, rng.randint(2, 6), palette=2)
        g = random_full_rank(rng, field, space, 2)
        if g is None:
            continue
        cw = is_constant_weight_bruteforce(g).holds
        assert sigma_check(g).is_constant == cw
        if multiset_condition_check(g).holds:
            assert cw


@pytest.mark.parametrize("seed", range(60))
def test_udp_converse(seed):
    rng = random.Random(seed)
    field = field_from_q(rng.choice([2, 3]))
    k = rng.choice([1, 2])
    if rng.random() < 0.5:
        sigma = rng.randint(1, 3)
        g = weighted_constant_builder(field, k, {p: [sigma] for p in projective_points(k, field)})
    else:
        g = random_full_rank(rng, field, random_space(rng, rng.randint(k, 6), palette=2), k)
        if g is None:
            return
    if sigma_check(g).is_constant and udp_check(g.space.labels, g.space.labels, g.space).holds:
        assert multiset_condition_check(g).holds


def test_formula_against_closure_enumeration():
    g = gap_instance()
    assert subspace_weights_match_formula(g, 2).holds
    for s in range(3):
        for b in subspaces(2, s, GF2):
            gens = [list(v) for v in g.image(b)] or [[0] * g.n]
            assert Wt(span_set(GF2, gens, g.n), g.space) == subspace_weight_formula(2, s, 2, 2)
