import itertools
import random

import pytest

from whamming import kernels
from whamming.extension import all_monomial_maps
from whamming.gf import field_create
from whamming.wspace import WeightedSpace

from oracles import vec_times_matrix


@pytest.mark.parametrize("pm", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)])
def test_codeword_weights_against_direct_enumeration(backend, pm):
    f = field_create(*pm)
    rng = random.Random(7)
    for k in (0, 1, 2, 3):
        n = rng.randint(1, 6)
        rows = [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)]
        weights = [rng.randint(1, 20) for _ in range(n)]
        got = kernels.codeword_weights(f, rows, weights, backend)
        expected = []
        for gamma in itertools.product(range(f.q), repeat=k):
            v = vec_times_matrix(f, gamma, rows) if k else (0,) * n
            expected.append(sum(w for x, w in zip(v, weights) if x))
        assert got == expected


def test_multiset_sums_against_product(backend):
    values, tops = [3, 5, 11, 2], [2, 0, 3, 1]
    got = kernels.multiset_sums(values, tops, backend)
    expected = [0] * len(got)
    radices = [t + 1 for t in tops]
    for counts in itertools.product(*(range(r) for r in radices)):
        code, mult = 0, 1
        for c, r in zip(counts, radices):
            code += c * mult
            mult *= r
        expected[code] = sum(c * v for c, v in zip(counts, values))
    assert got == expected


@pytest.mark.parametrize("pm,n", [((2, 1), 4), ((3, 1), 4), ((2, 2), 3)])
def test_monomial_count_against_object_enumeration(backend, pm, n):
    f = field_create(*pm)
    rng = random.Random(11)
    for _ in range(5):
        space = WeightedSpace.from_weights([rng.choice([1, 2]) for _ in range(n)])
        alpha = tuple(rng.randrange(f.q) for _ in range(n))
        # beta is either an image of alpha under a random monomial map or random
        maps = list(all_monomial_maps(space, f))
        beta = rng.choice(maps).apply(f, space, alpha) if rng.random() < 0.5 else tuple(
            rng.randrange(f.q) for _ in range(n))
        tested, matches = kernels.count_monomial_matches(f, alpha, beta, space.int_weights, backend)
        assert tested == len(list(itertools.permutations(range(n)))) * (f.q - 1) ** n
        assert matches == sum(phi.apply(f, space, alpha) == beta for phi in maps)


def test_backend_overflow_falls_back():
    f = field_create(2)
    huge = [2**62, 2**62]
    assert kernels.codeword_weights(f, [[1, 1]], huge) == [0, 2**63]


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.codeword_weights(field_create(2), [[1]], [1], "fortran")
