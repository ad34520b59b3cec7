"""Exact arithmetic in GF(p^m) for small fields.

Elements are integers in ``[0, q)`` whose base-p digits, read low-to-high,
are the coefficients of a polynomial reduced modulo the field's defining
polynomial.  Index 0 is zero and index 1 is one.  All arithmetic goes
through tables built once when the field is created.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from whamming.errors import FieldError

MAX_Q = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**m``; raise FieldError if it is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1 or not is_prime(p):
                break
            return p, m
    raise FieldError(f"{q} is not a prime power")


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); den must be monic."""
    num = list(num)
    dd = len(den) - 1
    for shift in range(len(num) - 1 - dd, -1, -1):
        c = num[shift + dd] % p
        if c:
            for i, d in enumerate(den):
                num[shift + i] = (num[shift + i] - c * d) % p
    rem = num[:dd] if dd > 0 else []
    return [c % p for c in rem]


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_rem(modulus, list(low) + [1], p)):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m (low-to-high)."""
    for low in itertools.product(range(p), repeat=m):
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


def _digits(index: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(index % p)
        index //= p
    return out


def _undigits(coeffs, p: int) -> int:
    index = 0
    for c in reversed(coeffs):
        index = index * p + c
    return index


def _poly_mulmod(a: int, b: int, p: int, modulus: tuple[int, ...]) -> int:
    m = len(modulus) - 1
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    if m == 1:
        return prod[0] % p
    return _undigits(_poly_rem(prod, list(modulus), p), p)


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with its defining polynomial and arithmetic tables.

    Build with :func:`field_create`; equality compares ``(p, m, modulus)``.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int
    add_table: tuple[tuple[int, ...], ...] = dc_field(compare=False, repr=False)
    mul_table: tuple[tuple[int, ...], ...] = dc_field(compare=False, repr=False)
    neg_table: tuple[int, ...] = dc_field(compare=False, repr=False)
    inv_table: tuple[int, ...] = dc_field(compare=False, repr=False)
    exp_table: tuple[int, ...] = dc_field(compare=False, repr=False)
    log_table: tuple[int, ...] = dc_field(compare=False, repr=False)

    def __str__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # Raw index arithmetic: used by every hot path.
    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + str(self))
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero in " + str(self))
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise FieldError(f"index {index} out of range for {self}")
        return FieldElement(self, index)

    def to_json(self) -> dict:
        doc = {"p": self.p, "m": self.m}
        if self.m > 1:
            doc["modulus"] = list(self.modulus)
        return doc


@lru_cache(maxsize=None)
def _build(p: int, m: int, modulus: tuple[int, ...]) -> FieldSpec:
    q = p**m
    if m == 1:
        add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
    else:
        digits = [_digits(a, p, m) for a in range(q)]
        add = tuple(
            tuple(_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
            for a in range(q)
        )
    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))

    # Log/antilog tables from the first primitive element.
    exp = log = None
    for g in range(1, q):
        powers = [1]
        x = g
        while x != 1:
            powers.append(x)
            x = _poly_mulmod(x, g, p, modulus)
        if len(powers) == q - 1:
            exp = tuple(powers)
            log_list = [0] * q
            for i, v in enumerate(powers):
                log_list[v] = i
            log = tuple(log_list)
            break
    assert exp is not None and log is not None

    def mul(a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return exp[(log[a] + log[b]) % (q - 1)]

    mul_t = tuple(tuple(mul(a, b) for b in range(q)) for a in range(q))
    inv = (0,) + tuple(exp[(-log[a]) % (q - 1)] for a in range(1, q))
    return FieldSpec(p, m, modulus, q, add, mul_t, neg, inv, exp, log)


def field_create(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Return GF(p^m).

    If ``modulus`` (low-to-high coefficients, monic, degree m) is omitted and
    ``m > 1`` the lexicographically smallest monic irreducible is used.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p!r} is not prime")
    if not isinstance(m, int) or m < 1:
        raise FieldError(f"extension degree {m!r} must be a positive integer")
    if p**m > MAX_Q:
        raise FieldError(f"q = {p}^{m} exceeds the supported maximum {MAX_Q}")
    if modulus is None:
        modulus = (0, 1) if m == 1 else default_modulus(p, m)
    else:
        modulus = tuple(modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {list(modulus)} must be monic of degree {m}")
        if any(not isinstance(c, int) or not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {p})")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
    if m == 1:
        # Every monic linear polynomial defines the same prime field.
        modulus = (0, 1)
    return _build(p, m, modulus)


def field_from_q(q: int) -> FieldSpec:
    p, m = prime_power(q)
    return field_create(p, m)


def elements(field: FieldSpec) -> list[FieldElement]:
    return [FieldElement(field, i) for i in range(field.q)]


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    index: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"operands from {self.field} and {other.field}")
            return other.index
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.index, b))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.index, b))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.index, b))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.index, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.index))

    def __bool__(self) -> bool:
        return self.index != 0

    def __int__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        return f"{self.field}({self.index})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e
