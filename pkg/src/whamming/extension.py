"""Local and global weight-equivalence of linear maps, the unique
decomposition property, and explicit monomial isometries.

Linear maps F^k -> F^Omega are given as :class:`CodeMatrix` objects
(gamma -> gamma L).  Every weight isometry of F^Omega is monomial: a
permutation of the coordinates that preserves omega, times nonzero scalars.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from whamming import kernels
from whamming.errors import PreconditionError, WhammingError, check_cap
from whamming.gf import FieldSpec
from whamming.linalg import Row, Subspace, point_of, subspaces
from whamming.wspace import CodeMatrix, WeightedSpace, Wt, column_map, format_rational, supp, wt

UDP_MAX = 24
MITM_THRESHOLD = 20


class CheckResult(NamedTuple):
    holds: bool
    witness: Any = None


def decode_gamma(index: int, k: int, q: int) -> Row:
    """Inverse of the ``itertools.product(range(q), repeat=k)`` enumeration."""
    digits = []
    for _ in range(k):
        index, d = divmod(index, q)
        digits.append(d)
    return tuple(reversed(digits))


def point_key(point: Sequence[int]) -> tuple:
    """Sort key reproducing :func:`whamming.linalg.projective_points` order."""
    lead = next(i for i, x in enumerate(point) if x)
    return (lead, tuple(point[lead + 1:]))


def _check_pair(left: CodeMatrix, right: CodeMatrix) -> None:
    if left.field != right.field or left.space != right.space:
        raise WhammingError("matrices must share field and weighted space")
    if left.k != right.k:
        raise WhammingError(f"row counts differ: {left.k} vs {right.k}")


# -- local equivalence -------------------------------------------------------

def locally_equivalent_bruteforce(left: CodeMatrix, right: CodeMatrix, cap: int | None = None,
                                  backend: str | None = None) -> CheckResult:
    """Compare wt(gamma L) and wt(gamma M) over all of F^k.

    The witness is ``(gamma, wt(gamma L), wt(gamma M))`` for the first
    disagreement.
    """
    _check_pair(left, right)
    q, k = left.field.q, left.k
    check_cap("brute-force local equivalence", q**k, cap)
    wl = left.codeword_weights(backend)
    wr = right.codeword_weights(backend)
    for idx, (a, b) in enumerate(zip(wl, wr)):
        if a != b:
            return CheckResult(False, (decode_gamma(idx, k, q), a, b))
    return CheckResult(True)


def point_sums(c: CodeMatrix) -> dict[Row, Fraction]:
    """Total weight of the nonzero columns falling on each projective point."""
    sums: dict[Row, Fraction] = defaultdict(Fraction)
    omega = c.space.omega
    for label, col in column_map(c).items():
        if any(col):
            sums[point_of(c.field, col)] += omega[label]
    return dict(sums)


def point_classes(c: CodeMatrix) -> dict[Row, dict[Fraction, list[str]]]:
    """point -> weight value -> labels (in label order) of nonzero columns."""
    classes: dict[Row, dict[Fraction, list[str]]] = defaultdict(lambda: defaultdict(list))
    omega = c.space.omega
    for label, col in column_map(c).items():
        if any(col):
            classes[point_of(c.field, col)][omega[label]].append(label)
    return classes


def locally_equivalent_projective(left: CodeMatrix, right: CodeMatrix) -> CheckResult:
    """Compare per-projective-point column weight sums of L and M.

    Witness: ``(point, sum for L, sum for M)`` at the first point (canonical
    order) where they differ.
    """
    _check_pair(left, right)
    sl, sr = point_sums(left), point_sums(right)
    bad = [p for p in set(sl) | set(sr) if sl.get(p, 0) != sr.get(p, 0)]
    if not bad:
        return CheckResult(True)
    p = min(bad, key=point_key)
    return CheckResult(False, (p, sl.get(p, Fraction(0)), sr.get(p, Fraction(0))))


def subspace_weight_profile(c: CodeMatrix, m: int, cap: int | None = None) -> dict[Subspace, Fraction]:
    """Wt of the image of every m-dimensional subspace of F^k."""
    if not 1 <= m <= c.k:
        raise ValueError(f"m = {m} outside [1, {c.k}]")
    return {b: Wt(c.image(b), c.space) for b in subspaces(c.k, m, c.field, cap=cap)}


def profiles_agree(left: CodeMatrix, right: CodeMatrix, m: int, cap: int | None = None) -> CheckResult:
    _check_pair(left, right)
    pl = subspace_weight_profile(left, m, cap)
    pr = subspace_weight_profile(right, m, cap)
    for b, w in pl.items():
        if pr[b] != w:
            return CheckResult(False, (b, w, pr[b]))
    return CheckResult(True)


# -- unique decomposition property --------------------------------------------

@dataclass(frozen=True)
class UDPCounterexample:
    I: tuple[str, ...]
    J: tuple[str, ...]
    total: Fraction
    multiset_I: tuple[Fraction, ...]
    multiset_J: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "I": list(self.I),
            "J": list(self.J),
            "sum": format_rational(self.total),
            "weights_I": [format_rational(w) for w in self.multiset_I],
            "weights_J": [format_rational(w) for w in self.multiset_J],
        }


@dataclass(frozen=True)
class UDPReport:
    holds: bool
    counterexample: UDPCounterexample | None = None

    def to_json(self) -> dict:
        doc: dict = {"holds": self.holds}
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample.to_json()
        return doc


def _pick_labels(labels: Sequence[str], space: WeightedSpace, counts: Mapping[Fraction, int]) -> tuple[str, ...]:
    need = dict(counts)
    out = []
    for lab in labels:
        w = space.omega[lab]
        if need.get(w, 0) > 0:
            out.append(lab)
            need[w] -= 1
    return tuple(out)


def _counterexample(space, h_labels, k_labels, values, p_counts, r_counts) -> UDPCounterexample:
    pc = {v: c for v, c in zip(values, p_counts) if c}
    rc = {v: c for v, c in zip(values, r_counts) if c}
    I = _pick_labels(h_labels, space, pc)
    J = _pick_labels(k_labels, space, rc)
    total = space.total(I)
    assert total == space.total(J)
    ms = lambda labs: tuple(sorted(space.omega[x] for x in labs))
    return UDPCounterexample(I, J, total, ms(I), ms(J))


def _decode(code: int, radices: Sequence[int]) -> tuple[int, ...]:
    out = []
    for r in radices:
        code, c = divmod(code, r)
        out.append(c)
    return tuple(out)


def _udp_grouped(values_int, hc, kc, backend):
    """Group multisets of each side by sum.  Returns the chosen (P, R) counts
    at the smallest conflicting sum, or None."""
    rad_h = [c + 1 for c in hc]
    rad_k = [c + 1 for c in kc]
    by_sum_h: dict[int, list[int]] = defaultdict(list)
    for code, s in enumerate(kernels.multiset_sums(values_int, hc, backend)):
        by_sum_h[s].append(code)
    by_sum_k: dict[int, list[int]] = defaultdict(list)
    for code, s in enumerate(kernels.multiset_sums(values_int, kc, backend)):
        if s in by_sum_h:
            by_sum_k[s].append(code)
    for s in sorted(by_sum_k):
        fh = {_decode(c, rad_h) for c in by_sum_h[s]}
        fk = {_decode(c, rad_k) for c in by_sum_k[s]}
        if len(fh | fk) > 1:
            key = lambda cnt: (sum(cnt), cnt)
            p = min(fh, key=key)
            rest = fk - {p}
            if rest:
                return p, min(rest, key=key)
            # fk == {p}: the conflict comes from another multiset on the H side
            return min(fh - fk, key=key), p
    return None


def _udp_meet_in_middle(values_int, hc, kc, backend):
    """Search a nonzero difference vector d, -kc <= d <= hc, with sum(d*v) = 0.

    Splits the distinct values in two halves and matches half-sums.
    """
    d = len(values_int)
    half = (d + 1) // 2
    halves = [range(0, half), range(half, d)]
    sums, offsets, zero_codes, radices = [], [], [], []
    for part in halves:
        vals = [values_int[i] for i in part]
        tops = [hc[i] + kc[i] for i in part]
        rad = [t + 1 for t in tops]
        offsets.append(sum(kc[i] * values_int[i] for i in part))
        sums.append(kernels.multiset_sums(vals, tops, backend))
        zero = 0
        mult = 1
        for i, r in zip(part, rad):
            zero += kc[i] * mult
            mult *= r
        zero_codes.append(zero)
        radices.append(rad)
    left: dict[int, list[int]] = {}
    for code, s in enumerate(sums[0]):
        bucket = left.setdefault(s - offsets[0], [])
        if len(bucket) < 2:
            bucket.append(code)
    for code_r, s in enumerate(sums[1]):
        bucket = left.get(-(s - offsets[1]))
        if not bucket:
            continue
        for code_l in bucket:
            if code_l == zero_codes[0] and code_r == zero_codes[1]:
                continue
            diff = [c - kc[i] for i, c in zip(halves[0], _decode(code_l, radices[0]))]
            diff += [c - kc[i] for i, c in zip(halves[1], _decode(code_r, radices[1]))]
            return tuple(max(x, 0) for x in diff), tuple(max(-x, 0) for x in diff)
    return None


def udp_check(h: Iterable[str], k: Iterable[str], space: WeightedSpace, method: str | None = None,
              backend: str | None = None) -> UDPReport:
    """Decide whether (H, K, omega) has the unique decomposition property.

    ``method`` is ``"enumerate"`` or ``"mitm"``; by default the plain
    enumeration is used unless a side has more than 20 coordinates.
    """
    order = space.index
    h_labels = sorted(set(h), key=order.__getitem__)
    k_labels = sorted(set(k), key=order.__getitem__)
    if len(h_labels) > UDP_MAX or len(k_labels) > UDP_MAX:
        raise WhammingError(f"UDP check limited to {UDP_MAX} coordinates per side")
    if not h_labels or not k_labels:
        return UDPReport(True)
    ch = Counter(space.omega[x] for x in h_labels)
    ck = Counter(space.omega[x] for x in k_labels)
    values = sorted(set(ch) | set(ck))
    denom = math.lcm(*(v.denominator for v in values))
    values_int = [int(v * denom) for v in values]
    hc = [ch.get(v, 0) for v in values]
    kc = [ck.get(v, 0) for v in values]
    if method is None:
        method = "mitm" if max(len(h_labels), len(k_labels)) > MITM_THRESHOLD else "enumerate"
    if method == "enumerate":
        found = _udp_grouped(values_int, hc, kc, backend)
    elif method == "mitm":
        found = _udp_meet_in_middle(values_int, hc, kc, backend)
    else:
        raise ValueError(f"unknown UDP method {method!r}")
    if found is None:
        return UDPReport(True)
    return UDPReport(False, _counterexample(space, h_labels, k_labels, values, *found))


# -- isometries ---------------------------------------------------------------

@dataclass(frozen=True)
class MonomialIsometry:
    """alpha -> alpha Q with Q[i, perm[i]] = scalars[i]."""

    perm: Mapping[str, str]
    scalars: Mapping[str, int]

    def __post_init__(self):
        if set(self.perm) != set(self.perm.values()):
            raise WhammingError("perm is not a bijection of the coordinate labels")
        if set(self.scalars) != set(self.perm):
            raise WhammingError("scalars must be given for exactly the permuted labels")
        if any(c == 0 for c in self.scalars.values()):
            raise WhammingError("monomial scalars must be nonzero")

    def __hash__(self):
        return hash((tuple(sorted(self.perm.items())), tuple(sorted(self.scalars.items()))))

    @classmethod
    def identity(cls, space: WeightedSpace) -> MonomialIsometry:
        return cls({x: x for x in space.labels}, {x: 1 for x in space.labels})

    def apply(self, field: FieldSpec, space: WeightedSpace, alpha: Sequence[int]) -> Row:
        out = [0] * len(space)
        idx = space.index
        for lab, x in zip(space.labels, alpha):
            out[idx[self.perm[lab]]] = field.mul(x, self.scalars[lab])
        return tuple(out)

    def matrix(self, space: WeightedSpace) -> tuple[Row, ...]:
        idx = space.index
        rows = []
        for lab in space.labels:
            row = [0] * len(space)
            row[idx[self.perm[lab]]] = self.scalars[lab]
            rows.append(tuple(row))
        return tuple(rows)

    def apply_matrix(self, c: CodeMatrix) -> CodeMatrix:
        """The matrix L Q, i.e. the composition of this isometry after L."""
        return CodeMatrix(c.field, c.space, tuple(self.apply(c.field, c.space, row) for row in c.grid))

    def to_json(self, space: WeightedSpace | None = None) -> dict:
        labels = space.labels if space is not None else sorted(self.perm)
        return {"perm": {x: self.perm[x] for x in labels}, "scalars": {x: self.scalars[x] for x in labels}}

    @classmethod
    def from_json(cls, doc: Mapping) -> MonomialIsometry:
        return cls(dict(doc["perm"]), {k: int(v) for k, v in doc["scalars"].items()})


def is_isometry(phi: MonomialIsometry, space: WeightedSpace, field: FieldSpec | None = None,
                brute_force: bool = False, cap: int | None = None, backend: str | None = None) -> bool:
    """omega(perm(i)) == omega(i) for every coordinate.

    With ``brute_force`` (requires ``field``) also checks wt(phi(a)) = wt(a)
    for every a in F^Omega.
    """
    if set(phi.perm) != set(space.labels):
        return False
    if field is not None and any(not 0 < c < field.q for c in phi.scalars.values()):
        return False
    structural = all(space.omega[i] == space.omega[j] for i, j in phi.perm.items())
    if not brute_force:
        return structural
    if field is None:
        raise ValueError("brute-force isometry check needs the field")
    check_cap("brute-force isometry check", field.q ** len(space), cap)
    eye = CodeMatrix(field, space, tuple(tuple(int(i == j) for j in range(len(space))) for i in range(len(space))))
    mapped = CodeMatrix(field, space, phi.matrix(space))
    return eye.codeword_weights(backend) == mapped.codeword_weights(backend)


def extend_to_isometry(left: CodeMatrix, right: CodeMatrix) -> MonomialIsometry:
    """Build a weight isometry phi with right = left Q.

    Requires the per-point criterion and UDP on the two image supports;
    otherwise raises PreconditionError whose ``witness`` is the violating
    point triple or the UDP counterexample.
    """
    local = locally_equivalent_projective(left, right)
    if not local.holds:
        raise PreconditionError("maps are not locally equivalent", local.witness)
    tau, eta = column_map(left), column_map(right)
    labels = left.space.labels
    chi_f = [x for x in labels if any(tau[x])]
    chi_g = [x for x in labels if any(eta[x])]
    udp = udp_check(chi_f, chi_g, left.space)
    if not udp.holds:
        raise PreconditionError("image supports fail the unique decomposition property", udp.counterexample)

    field = left.field
    perm: dict[str, str] = {}
    scalars: dict[str, int] = {}
    cf, cg = point_classes(left), point_classes(right)
    for point in sorted(cf, key=point_key):
        for b in sorted(cf[point]):
            src, dst = cf[point][b], cg.get(point, {}).get(b, [])
            if len(src) != len(dst):  # unreachable when both preconditions hold
                raise PreconditionError("column classes differ", (point, b))
            for i, j in zip(src, dst):
                t = tau[i]
                lead = next(n for n, x in enumerate(t) if x)
                perm[i] = j
                scalars[i] = field.div(eta[j][lead], t[lead])
    # Off-support coordinates pair up weight class by weight class.
    off_f = defaultdict(list)
    off_g = defaultdict(list)
    for x in labels:
        if not any(tau[x]):
            off_f[left.space.omega[x]].append(x)
        if not any(eta[x]):
            off_g[left.space.omega[x]].append(x)
    for b, src in off_f.items():
        dst = off_g.get(b, [])
        if len(src) != len(dst):
            raise PreconditionError("off-support weight classes differ", b)
        for i, j in zip(src, dst):
            perm[i] = j
            scalars[i] = 1
    return MonomialIsometry(perm, scalars)


@dataclass(frozen=True)
class MEPVerdict:
    holds: bool
    udp: UDPReport
    alpha: Row | None = None
    beta: Row | None = None

    def to_json(self) -> dict:
        doc = {"holds": self.holds, "udp": self.udp.to_json()}
        if self.alpha is not None:
            doc["alpha"] = list(self.alpha)
            doc["beta"] = list(self.beta)
        return doc


def indicator(labels: Iterable[str], space: WeightedSpace) -> Row:
    s = set(labels)
    return tuple(int(x in s) for x in space.labels)


def mep_check(space: WeightedSpace, method: str | None = None) -> MEPVerdict:
    """Extension property of F^Omega, decided through UDP on (Omega, Omega).

    On failure alpha/beta are 0/1 vectors supported on the UDP witness sets:
    equal weight, but no weight isometry sends one to the other.
    """
    if len(space) > UDP_MAX:
        raise WhammingError(f"MEP check limited to {UDP_MAX} coordinates")
    udp = udp_check(space.labels, space.labels, space, method)
    if udp.holds:
        return MEPVerdict(True, udp)
    ce = udp.counterexample
    return MEPVerdict(False, udp, indicator(ce.I, space), indicator(ce.J, space))


def transitivity_map(field: FieldSpec, alpha: Sequence[int], beta: Sequence[int],
                     space: WeightedSpace) -> MonomialIsometry:
    """An isometry sending alpha to beta, via extension of the 1 x |Omega| maps."""
    wa, wb = wt(alpha, space), wt(beta, space)
    if wa != wb:
        raise PreconditionError(f"weights differ: {wa} vs {wb}", (wa, wb))
    udp = udp_check(supp(alpha, space), supp(beta, space), space)
    if not udp.holds:
        raise PreconditionError("supports fail the unique decomposition property", udp.counterexample)
    return extend_to_isometry(CodeMatrix(field, space, (tuple(alpha),)), CodeMatrix(field, space, (tuple(beta),)))


def monomial_search(field: FieldSpec, alpha: Sequence[int], beta: Sequence[int], space: WeightedSpace,
                    budget: int = 10**6, backend: str | None = None) -> tuple[int, int]:
    """Exhaustively try every permutation-with-scaling on alpha.

    Returns ``(maps tested, weight isometries sending alpha to beta)``.
    """
    n = len(space)
    check_cap("monomial map search", math.factorial(n) * (field.q - 1) ** n, budget)
    return kernels.count_monomial_matches(field, alpha, beta, space.int_weights, backend)


def random_isometry(rng, space: WeightedSpace, field: FieldSpec) -> MonomialIsometry:
    """Uniform omega-preserving permutation with random nonzero scalars."""
    classes = defaultdict(list)
    for x in space.labels:
        classes[space.omega[x]].append(x)
    perm = {}
    for labs in classes.values():
        shuffled = list(labs)
        rng.shuffle(shuffled)
        perm.update(zip(labs, shuffled))
    scalars = {x: rng.randrange(1, field.q) for x in space.labels}
    return MonomialIsometry(perm, scalars)


def all_monomial_maps(space: WeightedSpace, field: FieldSpec):
    """Every omega-preserving monomial map (small spaces only)."""
    labels = space.labels
    for image in itertools.permutations(labels):
        perm = dict(zip(labels, image))
        if all(space.omega[i] == space.omega[j] for i, j in perm.items()):
            for sc in itertools.product(range(1, field.q), repeat=len(labels)):
                yield MonomialIsometry(perm, dict(zip(labels, sc)))
