"""Pure-Python enumeration kernels.

Same signatures and output order as the compiled ``_ckernels`` module; this
one is used when the extension is not built (or when forced through the
``WHAMMING_PURE_PYTHON`` environment variable).
"""

from __future__ import annotations

import itertools


def codeword_weights(rows, weights, add, mul, q):
    """Integer weight of ``gamma @ rows`` for every gamma in product order."""
    k = len(rows)
    n = len(weights)
    scaled = [[[mul[c][x] for x in row] for c in range(q)] for row in rows]
    out = []

    def walk(j, partial):
        if j == k:
            out.append(sum(w for x, w in zip(partial, weights) if x))
            return
        for c in range(q):
            s = scaled[j][c]
            walk(j + 1, [add[a][b] for a, b in zip(partial, s)])

    walk(0, [0] * n)
    return out


def multiset_sums(values, maxcounts):
    """Sum of every count vector ``c <= maxcounts``; digit 0 varies fastest."""
    out = [0]
    for v, top in zip(values, maxcounts):
        size = len(out)
        for c in range(1, top + 1):
            shift = c * v
            out.extend(s + shift for s in out[:size])
    return out


def count_monomial_matches(alpha, beta, weights, mul, q):
    """Enumerate every permutation-with-scaling; count the weight-preserving
    ones that send ``alpha`` to ``beta``.  Returns ``(tested, matches)``."""
    n = len(alpha)
    tested = matches = 0
    for perm in itertools.permutations(range(n)):
        preserves = all(weights[i] == weights[perm[i]] for i in range(n))
        for scal in itertools.product(range(1, q), repeat=n):
            tested += 1
            if preserves and all(mul[alpha[i]][scal[i]] == beta[perm[i]] for i in range(n)):
                matches += 1
    return tested, matches
