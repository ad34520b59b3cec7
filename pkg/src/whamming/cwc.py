"""Constant-weight codes from the column structure of a generator matrix.

A full-rank generator G spans a constant-weight code exactly when the
nonzero columns carry the same total weight on every projective point.
This module recognises such codes, evaluates the closed-form weight of
their subspaces, and builds new ones (repeated simplex codes, or arbitrary
per-point weight budgets with a common sum).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping, Sequence

from whamming.errors import WhammingError, check_cap
from whamming.extension import CheckResult, decode_gamma, point_classes, point_sums
from whamming.gf import FieldSpec
from whamming.linalg import Row, projective_points, subspaces
from whamming.wspace import CodeMatrix, WeightedSpace, Wt, format_rational, parse_rational


class RankDeficientError(WhammingError):
    pass


def _require_full_rank(g: CodeMatrix) -> None:
    r = g.rank()
    if r != g.k:
        raise RankDeficientError(f"generator has rank {r} < k = {g.k}")


def is_constant_weight_bruteforce(g: CodeMatrix, cap: int | None = None, backend: str | None = None) -> CheckResult:
    """Enumerate all q^k codewords.

    On failure the witness is two messages ``(gamma1, w1, gamma2, w2)`` whose
    nonzero codewords have different weights.
    """
    _require_full_rank(g)
    q, k = g.field.q, g.k
    check_cap("constant-weight enumeration", q**k, cap)
    weights = g.codeword_weights(backend)
    first = weights[1]
    for idx in range(2, len(weights)):
        if weights[idx] != first:
            return CheckResult(False, (decode_gamma(1, k, q), first, decode_gamma(idx, k, q), weights[idx]))
    return CheckResult(True, first)


@dataclass(frozen=True)
class SigmaReport:
    is_constant: bool
    sigma: Fraction | None
    per_point: dict = dc_field(repr=False)
    violating_point: Row | None = None

    def to_json(self) -> dict:
        doc = {
            "is_constant": self.is_constant,
            "sigma": None if self.sigma is None else format_rational(self.sigma),
            "per_point": [{"point": list(p), "sum": format_rational(s)} for p, s in self.per_point.items()],
        }
        if self.violating_point is not None:
            doc["violating_point"] = list(self.violating_point)
        return doc


def sigma_check(g: CodeMatrix) -> SigmaReport:
    """Per-point column weight sums; constant weight iff they all agree."""
    _require_full_rank(g)
    sums = point_sums(g)
    per_point = {p: sums.get(p, Fraction(0)) for p in projective_points(g.k, g.field)}
    first = next(iter(per_point.values()))
    for p, s in per_point.items():
        if s != first:
            return SigmaReport(False, None, per_point, p)
    return SigmaReport(True, first, per_point)


def subspace_weight_formula(k: int, s: int, sigma, q: int) -> Fraction:
    """Wt of any s-dimensional subcode of a constant-weight code with point sum sigma."""
    if not 0 <= s <= k:
        raise ValueError(f"s = {s} outside [0, {k}]")
    return Fraction((q**k - q ** (k - s)) * Fraction(sigma), q - 1)


def multiset_condition_check(g: CodeMatrix) -> CheckResult:
    """Every projective point sees the same multiset of column weights.

    Witness: ``(I, J, b)`` with different counts of weight b on points I, J.
    """
    _require_full_rank(g)
    classes = point_classes(g)
    points = projective_points(g.k, g.field)
    counts = [Counter({b: len(labs) for b, labs in classes.get(p, {}).items()}) for p in points]
    base = counts[0]
    for p, c in zip(points[1:], counts[1:]):
        if c != base:
            b = min(w for w in set(c) | set(base) if c[w] != base[w])
            return CheckResult(False, (points[0], p, b))
    return CheckResult(True)


def _subcode_weights(g: CodeMatrix, d: int, cap: int | None) -> set[Fraction]:
    return {Wt(g.image(b), g.space) for b in subspaces(g.k, d, g.field, cap=cap)}


@dataclass(frozen=True)
class SubcodeCriterion:
    constant_weight: bool
    equal_by_dimension: dict
    forward: bool
    converse: bool | None

    @property
    def holds(self) -> bool:
        return self.forward and self.converse is not False


def check_subcode_criterion(g: CodeMatrix, m: int | None = None, cap: int | None = None) -> SubcodeCriterion:
    """Relate constant weight to equal subcode weights, both by enumeration.

    ``forward``: constant weight implies all subcodes of each dimension have
    one weight.  ``converse``: equal weights at dimension ``m`` imply
    constant weight (``None`` when k = 1, where no admissible m exists).
    """
    _require_full_rank(g)
    cw = is_constant_weight_bruteforce(g, cap).holds
    equal = {d: len(_subcode_weights(g, d, cap)) == 1 for d in range(1, g.k + 1)}
    forward = (not cw) or all(equal.values())
    if g.k == 1:
        converse = None
    else:
        if m is None:
            m = 1
        if not 1 <= m <= g.k - 1:
            raise ValueError(f"m = {m} outside [1, {g.k - 1}]")
        converse = (not equal[m]) or cw
    return SubcodeCriterion(cw, equal, forward, converse)


def simplex_generator(field: FieldSpec, k: int, r: int = 1) -> CodeMatrix:
    """Each projective point of F^[k] repeated r times, all weights 1."""
    if k < 1 or r < 1:
        raise ValueError("k and r must be positive")
    points = projective_points(k, field)
    labels, cols = [], []
    for pi, p in enumerate(points):
        for copy in range(r):
            labels.append(f"P{pi}_{copy}")
            cols.append(p)
    space = WeightedSpace.from_weights([1] * len(labels), labels)
    grid = tuple(tuple(c[row] for c in cols) for row in range(k))
    return CodeMatrix(field, space, grid)


def weighted_constant_builder(field: FieldSpec, k: int,
                              class_budget: Mapping[Sequence[int], Sequence]) -> CodeMatrix:
    """One coordinate per (point, weight) entry; every point's weights must share a sum."""
    points = projective_points(k, field)
    budget = {}
    for p, ws in class_budget.items():
        p = tuple(p)
        if p not in points:
            raise ValueError(f"{list(p)} is not a normalized projective point of F^[{k}]")
        budget[p] = [parse_rational(w) for w in ws]
    labels, cols, weights = [], [], []
    sums = set()
    for pi, p in enumerate(points):
        ws = budget.get(p, [])
        for w in ws:
            if w <= 0:
                raise ValueError(f"nonpositive weight {w} on point {list(p)}")
        sums.add(sum(ws, Fraction(0)))
        for copy, w in enumerate(ws):
            labels.append(f"P{pi}_{copy}")
            cols.append(p)
            weights.append(w)
    if len(sums) != 1:
        raise ValueError("per-point weight sums differ: " + ", ".join(sorted(format_rational(s) for s in sums)))
    if not labels:
        raise ValueError("empty class budget")
    space = WeightedSpace.from_weights(weights, labels)
    grid = tuple(tuple(c[row] for c in cols) for row in range(k))
    return CodeMatrix(field, space, grid)


def subspace_weights_match_formula(g: CodeMatrix, sigma, cap: int | None = None) -> CheckResult:
    """Compare enumerated Wt(D) with the closed form for every subcode D."""
    q = g.field.q
    for s in range(g.k + 1):
        expected = subspace_weight_formula(g.k, s, sigma, q)
        for b in subspaces(g.k, s, g.field, cap=cap):
            got = Wt(g.image(b), g.space)
            if got != expected:
                return CheckResult(False, (b, got, expected))
    return CheckResult(True)

