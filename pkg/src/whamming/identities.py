"""Two-sided checks of the subspace-weight identities.

Each check evaluates one side by enumeration and the other by the closed
form, with no shared code between them beyond the weight function, and
compares exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from whamming import kernels
from whamming.errors import PreconditionError, check_cap
from whamming.cwc import sigma_check
from whamming.generators import derive_seeds, identity_instance
from whamming.linalg import COL, Subspace, dual, mat_mul, qbinom, subspaces, subspaces_containing
from whamming.wspace import CodeMatrix, Wt, column_map


class IdentityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def _check(lhs, rhs) -> IdentityCheck:
    return IdentityCheck(lhs, rhs, lhs == rhs)


def _image_weight(c: CodeMatrix, basis) -> Fraction:
    return Wt(mat_mul(c.field, basis, c.grid, c.n), c.space)


def check_vector_sum(c: CodeMatrix, b: Subspace, cap: int | None = None) -> IdentityCheck:
    """Sum of wt(theta L) over theta in B against (q^m - q^(m-1)) Wt(B L)."""
    q, m = c.field.q, b.dim
    check_cap("vectors of B", q**m, cap)
    images = mat_mul(c.field, b.basis, c.grid, c.n)
    raw = kernels.codeword_weights(c.field, images, c.space.int_weights)
    lhs = Fraction(sum(raw), c.space.scale)
    rhs = (Fraction(q) ** m - Fraction(q) ** (m - 1)) * Wt(images, c.space)
    return _check(lhs, rhs)


def check_containing_sum(c: CodeMatrix, a: Subspace, m: int, cap: int | None = None) -> IdentityCheck:
    """Sum of Wt(B L) over m-dim B containing A against the q-binomial closed form."""
    q, k, dim_a = c.field.q, c.k, a.dim
    if not dim_a <= k - 1:
        raise ValueError(f"dim A = {dim_a} must be at most k - 1 = {k - 1}")
    if not dim_a + 1 <= m <= k:
        raise ValueError(f"m = {m} outside [{dim_a + 1}, {k}]")
    lhs = sum((_image_weight(c, bsp.basis) for bsp in subspaces_containing(a, m, cap)), Fraction(0))
    rhs = (q ** (k - m) * qbinom(k - dim_a - 1, m - dim_a - 1, q) * Wt(c.grid, c.space)
           + qbinom(k - dim_a - 1, m - dim_a, q) * _image_weight(c, a.basis))
    return _check(lhs, rhs)


def check_dual_complement(c: CodeMatrix, u: Subspace) -> IdentityCheck:
    """Wt(U L) directly versus total weight minus the columns lying in U-perp."""
    direct = _image_weight(c, u.basis)
    perp = dual(u)
    omega = c.space.omega
    inside = sum((omega[x] for x, col in column_map(c).items() if any(col) and col in perp), Fraction(0))
    return _check(direct, Wt(c.grid, c.space) - inside)


def check_point_subspace_sum(g: CodeMatrix, u: Subspace, sigma: Fraction | None = None) -> IdentityCheck:
    """Column weight inside a subspace U of F^[k] against (|U| - 1) sigma / (q - 1)."""
    if u.side != COL:
        raise ValueError("U must be a subspace of column vectors")
    if sigma is None:
        report = sigma_check(g)
        if not report.is_constant:
            raise PreconditionError("per-point sums are not constant", report.violating_point)
        sigma = report.sigma
    omega = g.space.omega
    lhs = sum((omega[x] for x, col in column_map(g).items() if any(col) and col in u), Fraction(0))
    rhs = Fraction((len(u) - 1) * Fraction(sigma), g.field.q - 1)
    return _check(lhs, rhs)


def sweep_instance(c: CodeMatrix, cap: int | None = None) -> dict[str, tuple[int, int]]:
    """Run every identity on every admissible subspace of one instance.

    Returns ``{name: (passed, total)}``.
    """
    k, field = c.k, c.field
    out = {"vector_sum": [0, 0], "containing_sum": [0, 0], "dual_complement": [0, 0]}
    by_dim = {d: subspaces(k, d, field, cap=cap) for d in range(k + 1)}
    for d, subs in by_dim.items():
        for b in subs:
            r = check_vector_sum(c, b, cap)
            out["vector_sum"][0] += r.equal
            out["vector_sum"][1] += 1
            r = check_dual_complement(c, b)
            out["dual_complement"][0] += r.equal
            out["dual_complement"][1] += 1
            if d <= k - 1:
                for m in range(d + 1, k + 1):
                    r = check_containing_sum(c, b, m, cap)
                    out["containing_sum"][0] += r.equal
                    out["containing_sum"][1] += 1
    return {name: tuple(v) for name, v in out.items()}


def random_trials(trials: int, seed: int = 0, cap: int | None = None):
    """Seeded sweep over the random identity family.

    Returns ``(counts, failure)`` where counts maps each identity to
    ``[instances passed, instances run]`` and failure is ``(seed, instance)``
    for the first instance with any violated identity, else None.
    """
    counts = {"vector_sum": [0, 0], "containing_sum": [0, 0], "dual_complement": [0, 0]}
    failure = None
    for s in derive_seeds(seed, trials):
        c = identity_instance(s)
        result = sweep_instance(c, cap)
        for name, (ok, total) in result.items():
            if total:
                counts[name][1] += 1
                counts[name][0] += ok == total
        if failure is None and any(ok != total for ok, total in result.values()):
            failure = (s, c)
    return counts, failure

