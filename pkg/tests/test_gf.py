import itertools

import pytest

from whamming.errors import FieldError
from whamming.gf import elements, field_create, field_from_q, inv, mul

from conftest import SMALL_FIELDS


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def reducible_monics(p, m):
    """Every monic degree-m polynomial that factors, by multiplying out all pairs."""
    out = set()
    for d in range(1, m):
        for low_a in itertools.product(range(p), repeat=d):
            for low_b in itertools.product(range(p), repeat=m - d):
                out.add(poly_mul(low_a + (1,), low_b + (1,), p))
    return out


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3)])
def test_default_modulus_is_smallest_irreducible(p, m):
    red = reducible_monics(p, m)
    expected = next(low + (1,) for low in itertools.product(range(p), repeat=m) if low + (1,) not in red)
    assert field_create(p, m).modulus == expected


def test_gf4_modulus_and_product():
    f = field_create(2, 2)
    assert f.q == 4
    assert f.modulus == (1, 1, 1)
    # x * x = x^2 = x + 1 modulo x^2 + x + 1
    assert f.mul(2, 2) == 3


def test_prime_fields():
    assert field_create(2, 1).q == 2
    assert [e.index for e in elements(field_create(3))] == [0, 1, 2]
    assert [e.index for e in elements(field_create(2, 2))] == [0, 1, 2, 3]
    assert (field_create(2).element(1) + field_create(2).element(1)).index == 0


@pytest.mark.parametrize("args", [(4, 1), (1, 1), (2, 0), (2, 9), (17, 2)])
def test_bad_parameters(args):
    with pytest.raises(FieldError):
        field_create(*args)


def test_bad_modulus():
    with pytest.raises(FieldError):
        field_create(2, 2, [1, 0, 1])  # (x+1)^2
    with pytest.raises(FieldError):
        field_create(2, 2, [1, 1])
    with pytest.raises(FieldError):
        field_create(2, 2, [1, 1, 2])


def test_explicit_modulus_matches_default_tables():
    f = field_create(2, 3, [1, 0, 1, 1])
    assert f == field_create(2, 3)
    g = field_create(2, 3, [1, 1, 0, 1])
    assert g != f and g.q == 8


def test_prime_power_parsing():
    assert field_from_q(9).p == 3 and field_from_q(9).m == 2
    with pytest.raises(FieldError):
        field_from_q(6)


@pytest.mark.parametrize("p,m", SMALL_FIELDS, ids=lambda x: str(x))
def test_field_axioms_exhaustive(p, m):
    f = field_create(p, m)
    q = f.q
    add, mul_ = f.add, f.mul
    els = range(q)
    for a in els:
        assert add(a, 0) == a and mul_(a, 1) == a and mul_(a, 0) == 0
        assert add(a, f.neg(a)) == 0
        if a:
            assert mul_(a, f.inv(a)) == 1
            assert f.pow(a, q - 1) == 1
        for b in els:
            assert add(a, b) == add(b, a)
            assert mul_(a, b) == mul_(b, a)
            # Frobenius
            assert f.pow(add(a, b), p) == add(f.pow(a, p), f.pow(b, p))
    if q <= 16:
        for a, b, c in itertools.product(els, repeat=3):
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul_(mul_(a, b), c) == mul_(a, mul_(b, c))
            assert mul_(a, add(b, c)) == add(mul_(a, b), mul_(a, c))


def test_table_multiplication_matches_polynomial_product():
    f = field_create(3, 2)  # modulus x^2 + 1
    def poly(i):
        return (i % 3, i // 3)
    for a, b in itertools.product(range(9), repeat=2):
        c0, c1, c2 = poly_mul(poly(a), poly(b), 3)
        # x^2 = -1
        r0, r1 = (c0 - c2) % 3, c1
        assert f.mul(a, b) == r0 + 3 * r1


def test_element_wrappers():
    f = field_create(5)
    a, b = f.element(2), f.element(4)
    assert (a + b).index == 1
    assert (a - b).index == 3
    assert mul(a, inv(a)).index == 1
    assert (a ** 4).index == 1
    assert (-a).index == 3
    assert (a / b).index == 3


def test_errors_on_elements():
    f, g = field_create(2), field_create(3)
    with pytest.raises(ZeroDivisionError):
        f.element(0).inverse()
    with pytest.raises(FieldError):
        f.element(1) + g.element(1)
    with pytest.raises(FieldError):
        f.element(2)
