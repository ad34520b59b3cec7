"""Seeded random instances for verification sweeps.

Every helper takes a ``random.Random``; sweeps derive one 64-bit seed per
instance from the master seed so a failing instance can be regenerated on
its own.
"""

from __future__ import annotations

import random
from fractions import Fraction

from whamming.gf import FieldSpec, field_from_q
from whamming.linalg import Subspace, rank, subspaces
from whamming.wspace import CodeMatrix, WeightedSpace

DESK_QS = (2, 3, 4, 5)


def derive_seeds(seed: int, count: int) -> list[int]:
    master = random.Random(seed)
    return [master.getrandbits(64) for _ in range(count)]


def random_field(rng: random.Random, qs=DESK_QS) -> FieldSpec:
    return field_from_q(rng.choice(qs))


def random_weight(rng: random.Random, max_num: int = 10, max_den: int = 10) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_space(rng: random.Random, n: int, max_num: int = 10, max_den: int = 10,
                 palette: int | None = None) -> WeightedSpace:
    """Random rational weights; ``palette`` limits the number of distinct values
    so that repeated weights (and UDP failures) show up often."""
    if palette is None:
        weights = [random_weight(rng, max_num, max_den) for _ in range(n)]
    else:
        choices = [random_weight(rng, max_num, max_den) for _ in range(palette)]
        weights = [rng.choice(choices) for _ in range(n)]
    return WeightedSpace.from_weights(weights)


def random_grid(rng: random.Random, field: FieldSpec, k: int, n: int, density: float = 1.0):
    def entry():
        if density >= 1.0:
            return rng.randrange(field.q)
        return rng.randrange(1, field.q) if rng.random() < density else 0

    return tuple(tuple(entry() for _ in range(n)) for _ in range(k))


def random_matrix(rng: random.Random, field: FieldSpec, space: WeightedSpace, k: int) -> CodeMatrix:
    density = rng.choice((1.0, 1.0, 0.6, 0.3))
    return CodeMatrix(field, space, random_grid(rng, field, k, len(space), density))


def random_full_rank(rng: random.Random, field: FieldSpec, space: WeightedSpace, k: int,
                     tries: int = 200) -> CodeMatrix | None:
    if k > len(space):
        return None
    for _ in range(tries):
        c = random_matrix(rng, field, space, k)
        if rank(field, c.grid) == k:
            return c
    return None


def random_subspace(rng: random.Random, field: FieldSpec, k: int, m: int) -> Subspace:
    return rng.choice(subspaces(k, m, field))


def random_invertible(rng: random.Random, field: FieldSpec, k: int):
    while True:
        a = random_grid(rng, field, k, k)
        if rank(field, a) == k:
            return a


def identity_instance(seed: int, qs=DESK_QS, max_k: int = 3, max_n: int = 6) -> CodeMatrix:
    """The randomized family for the subspace-weight identities."""
    rng = random.Random(seed)
    field = random_field(rng, qs)
    n = rng.randint(1, max_n)
    k = rng.randint(1, max_k)
    space = random_space(rng, n, palette=rng.choice((None, 2, 3)))
    return random_matrix(rng, field, space, k)
