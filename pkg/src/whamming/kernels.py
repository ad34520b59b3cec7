"""Backend selection for the enumeration kernels.

The compiled extension is preferred; the pure-Python module is used when it
is missing or when ``WHAMMING_PURE_PYTHON`` is set to a non-empty value.
Every wrapper takes integer weights, so callers scale exact rationals to a
common denominator first.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from whamming import _pykernels

try:
    from whamming import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_INT64_HEADROOM = 2**62

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("WHAMMING_PURE_PYTHON"):
    BACKEND = "cython"
else:
    BACKEND = "python"


def _pick(backend: str | None, magnitude: int):
    name = backend or BACKEND
    if name not in BACKENDS:
        raise ValueError(f"kernel backend {name!r} is not available")
    if name == "cython" and magnitude >= _INT64_HEADROOM:
        name = "python"
    return name, BACKENDS[name]


@lru_cache(maxsize=None)
def _tables(field):
    return (np.ascontiguousarray(field.add_table, dtype=np.int64),
            np.ascontiguousarray(field.mul_table, dtype=np.int64))


def codeword_weights(field, rows, weights, backend: str | None = None) -> list[int]:
    """Weight of ``gamma @ rows`` for each gamma in ``itertools.product`` order."""
    name, impl = _pick(backend, sum(abs(w) for w in weights))
    if name == "python":
        return impl.codeword_weights(rows, list(weights), field.add_table, field.mul_table, field.q)
    add, mul = _tables(field)
    k, n = len(rows), len(weights)
    grid = np.asarray(rows, dtype=np.int64).reshape(k, n)
    out = impl.codeword_weights(np.ascontiguousarray(grid), np.asarray(weights, dtype=np.int64), add, mul, field.q)
    return out.tolist()


def multiset_sums(values, maxcounts, backend: str | None = None) -> list[int]:
    """Sums of every count vector bounded by ``maxcounts`` (digit 0 fastest)."""
    name, impl = _pick(backend, sum(abs(v) * c for v, c in zip(values, maxcounts)))
    if name == "python":
        return impl.multiset_sums(list(values), list(maxcounts))
    out = impl.multiset_sums(np.asarray(values, dtype=np.int64), np.asarray(maxcounts, dtype=np.int64))
    return out.tolist()


def count_monomial_matches(field, alpha, beta, weights, backend: str | None = None) -> tuple[int, int]:
    """``(tested, matches)`` over all permutation-with-scaling maps."""
    name, impl = _pick(backend, 0)
    if name == "python":
        return impl.count_monomial_matches(list(alpha), list(beta), list(weights), field.mul_table, field.q)
    _, mul = _tables(field)
    # Weights only get compared for equality here; rank-encode them so huge
    # numerators cannot overflow.
    ranks = {w: r for r, w in enumerate(sorted(set(weights)))}
    tested, matches = impl.count_monomial_matches(
        np.asarray(alpha, dtype=np.int64),
        np.asarray(beta, dtype=np.int64),
        np.asarray([ranks[w] for w in weights], dtype=np.int64),
        mul,
        field.q,
    )
    return int(tested), int(matches)
