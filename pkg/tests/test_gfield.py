from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from genturan.gfield import (
    FieldError,
    field_make,
    field_of_order,
    is_irreducible,
    least_irreducible,
    norm_map,
    unit_subgroup,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (3, 3), (13, 1), (17, 1)]


def poly_mulmod(a, b, mod, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    k = len(mod) - 1
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
    return (prod + [0] * k)[:k]


def brute_irreducible(poly, p):
    """No monic factor of degree 1..deg/2, by trial division over all monics."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in product(range(p), repeat=d):
            f = list(tail) + [1]
            r = list(poly)
            for top in range(k, d - 1, -1):
                c = r[top]
                if c:
                    for i in range(d + 1):
                        r[top - d + i] = (r[top - d + i] - c * f[i]) % p
            if not any(r[:d]):
                return False
    return True


def test_gf3_arithmetic():
    F = field_make(3, 1)
    assert F(1) + F(2) == F(0)
    assert F(2) * F(2) == F(1)


def test_gf8_lagrange():
    F = field_make(2, 3)
    assert all(x**7 == F.one for x in F.elements() if x)


def test_gf9_frobenius_fixes_prime_field():
    F = field_make(3, 2)
    assert len(F.elements()) == 9
    fixed = [x for x in F.elements() if x**3 == x]
    assert len(fixed) == 3 and set(fixed) == {F(0), F(1), F(2)}


def test_rejects_composite_characteristic():
    with pytest.raises(FieldError):
        field_make(4, 1)
    with pytest.raises(FieldError):
        field_of_order(12)


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_least_irreducible(p, k):
    mod = least_irreducible(p, k)
    assert is_irreducible(mod, p) and brute_irreducible(mod, p)
    # order: coefficients read from degree k-1 down to 0, lexicographically
    first = None
    for high_to_low in product(range(p), repeat=k):
        cand = list(reversed(high_to_low)) + [1]
        if brute_irreducible(cand, p):
            first = cand
            break
    assert mod == first


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplication_matches_schoolbook(p, k):
    F = field_make(p, k)
    for a in range(F.q):
        for b in range(0, F.q, max(1, F.q // 9)):
            want = poly_mulmod(F.coeffs(a), F.coeffs(b), F.modulus, p) if k > 1 else [(a * b) % p]
            assert F.coeffs(F.mul(a, b)) == want


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms(p, k):
    F = field_make(p, k)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, F.q - 1), st.integers(0, F.q - 1), st.integers(0, F.q - 1))
    def check(a, b, c):
        x, y, z = F(a), F(b), F(c)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x
        assert x - x == F.zero
        if x:
            assert x * x.inverse() == F.one

    check()


def test_norm_s2_is_identity():
    F = field_make(5, 1)
    assert all(norm_map(F, x, 2, 5) == x for x in F.elements())


def test_norm_gf9_fibres():
    F = field_make(3, 2)
    values = [norm_map(F, x, 3, 3) for x in F.elements() if x]
    assert all(v == x**4 for v, x in zip(values, [x for x in F.elements() if x]))
    assert sorted(int(v) for v in set(values)) == [1, 2]
    assert all(values.count(v) == 4 for v in set(values))


@pytest.mark.parametrize("q,s", [(2, 3), (3, 3), (4, 3), (5, 3), (2, 4), (3, 4), (5, 2)])
def test_norm_lands_in_subfield_with_uniform_fibres(q, s):
    F = field_of_order(q ** (s - 1))
    counts = {}
    for x in F.elements():
        if not x:
            continue
        v = norm_map(F, x, s, q)
        assert v**q == v and v
        counts[v] = counts.get(v, 0) + 1
    assert len(counts) == q - 1
    assert set(counts.values()) == {(q ** (s - 1) - 1) // (q - 1)}


def test_norm_multiplicative_gf25():
    F = field_of_order(25)
    rng = __import__("random").Random(0)
    for _ in range(100):
        a, b = F(rng.randrange(25)), F(rng.randrange(25))
        assert norm_map(F, a * b, 3, 5) == norm_map(F, a, 3, 5) * norm_map(F, b, 3, 5)


def test_unit_subgroup_examples():
    F5, F7, F9 = field_make(5), field_make(7), field_make(3, 2)
    assert {int(x) for x in unit_subgroup(F5, 2)} == {1, 4}
    assert {int(x) for x in unit_subgroup(F7, 3)} == {1, 2, 4}
    A = unit_subgroup(F9, 4)
    assert len(A) == 4 and all(x**4 == F9.one for x in A)
    with pytest.raises(FieldError):
        unit_subgroup(F7, 4)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 13, 16, 17, 25])
def test_unit_subgroups_closed(q):
    F = field_of_order(q)
    for d in range(1, q):
        if (q - 1) % d:
            continue
        A = unit_subgroup(F, d)
        assert len(A) == d and F.one in A
        assert all(x * y in A and x.inverse() in A for x in A for y in A)


def test_cross_field_arithmetic_is_an_error():
    with pytest.raises(FieldError):
        field_make(3, 2)(1) + field_make(3, 3)(1)
