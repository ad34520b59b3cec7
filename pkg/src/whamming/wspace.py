"""Weighted coordinate spaces and the weighted Hamming weight.

A :class:`WeightedSpace` is an ordered list of coordinate labels with a
strictly positive rational weight on each.  Vectors over it are plain
tuples of field-element indices in label order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from whamming import kernels
from whamming.gf import FieldSpec
from whamming.linalg import Matrix, Row, Subspace, as_matrix, mat_mul, rank, transpose, vec_sub


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions or strings ``"a"`` / ``"a/b"``."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            return Fraction(int(num), int(den) if sep else 1)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {value!r}") from None
    raise ValueError(f"not a rational: {value!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class WeightedSpace:
    labels: tuple[str, ...]
    omega: Mapping[str, Fraction]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if not labels:
            raise ValueError("a weighted space needs at least one coordinate")
        if len(set(labels)) != len(labels):
            raise ValueError("coordinate labels must be distinct")
        omega = {}
        for lab in labels:
            if lab not in self.omega:
                raise ValueError(f"no weight for coordinate {lab!r}")
            w = parse_rational(self.omega[lab])
            if w <= 0:
                raise ValueError(f"weight of {lab!r} must be positive, got {w}")
            omega[lab] = w
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "omega", omega)

    def __hash__(self):
        return hash((self.labels, tuple(self.omega[x] for x in self.labels)))

    @classmethod
    def from_weights(cls, weights: Sequence, labels: Sequence[str] | None = None) -> WeightedSpace:
        if labels is None:
            labels = [str(i + 1) for i in range(len(weights))]
        return cls(tuple(labels), dict(zip(labels, weights)))

    @classmethod
    def hamming(cls, n: int) -> WeightedSpace:
        return cls.from_weights([1] * n)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(self.omega[x] for x in self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def scale(self) -> int:
        """Common denominator turning every weight into an integer."""
        return math.lcm(*(w.denominator for w in self.weights))

    @cached_property
    def int_weights(self) -> tuple[int, ...]:
        return tuple(int(w * self.scale) for w in self.weights)

    def total(self, labels: Iterable[str] | None = None) -> Fraction:
        if labels is None:
            return sum(self.weights, Fraction(0))
        return sum((self.omega[x] for x in labels), Fraction(0))

    def to_json(self) -> dict:
        return {lab: format_rational(self.omega[lab]) for lab in self.labels}


@dataclass(frozen=True)
class CodeMatrix:
    """A k x |Omega| matrix over ``field``; row space = image of gamma -> gamma G."""

    field: FieldSpec
    space: WeightedSpace
    grid: Matrix

    def __post_init__(self):
        grid = as_matrix(self.grid)
        if not grid:
            raise ValueError("a code matrix needs at least one row")
        n = len(self.space)
        for row in grid:
            if len(row) != n:
                raise ValueError(f"row {list(row)} has length {len(row)}, expected {n}")
            for x in row:
                if not 0 <= x < self.field.q:
                    raise ValueError(f"entry {x} outside [0, {self.field.q})")
        object.__setattr__(self, "grid", grid)

    @property
    def k(self) -> int:
        return len(self.grid)

    @property
    def n(self) -> int:
        return len(self.space)

    def rank(self) -> int:
        return rank(self.field, self.grid)

    def column(self, label: str) -> Row:
        j = self.space.index[label]
        return tuple(row[j] for row in self.grid)

    def image(self, u: Subspace) -> Matrix:
        """Generators of {gamma G : gamma in u}."""
        return mat_mul(self.field, u.basis, self.grid, self.n)

    def codeword_weights(self, backend: str | None = None) -> list[Fraction]:
        """wt(gamma G) for every gamma in ``itertools.product`` order."""
        raw = kernels.codeword_weights(self.field, self.grid, self.space.int_weights, backend)
        return [Fraction(w, self.space.scale) for w in raw]


def supp(v: Sequence[int], space: WeightedSpace) -> frozenset[str]:
    return frozenset(lab for lab, x in zip(space.labels, v) if x)


def chi(vectors: Iterable[Sequence[int]] | Subspace, space: WeightedSpace) -> frozenset[str]:
    """Union of supports; for a subspace its generators suffice."""
    if isinstance(vectors, Subspace):
        vectors = vectors.basis
    out = set()
    for v in vectors:
        out |= supp(v, space)
    return frozenset(out)


def wt(v: Sequence[int], space: WeightedSpace) -> Fraction:
    return sum((w for x, w in zip(v, space.weights) if x), Fraction(0))


def Wt(vectors: Iterable[Sequence[int]] | Subspace, space: WeightedSpace) -> Fraction:
    return space.total(chi(vectors, space))


def dist(field: FieldSpec, alpha: Sequence[int], beta: Sequence[int], space: WeightedSpace) -> Fraction:
    return wt(vec_sub(field, beta, alpha), space)


def column_map(c: CodeMatrix) -> dict[str, Row]:
    """label -> column of the matrix, as a vector of F^[k]."""
    return dict(zip(c.space.labels, transpose(c.grid, c.n)))
