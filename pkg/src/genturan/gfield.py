"""Exact arithmetic in GF(p^k).

Elements are stored as integers ``sum(c_i * p**i)`` over the coefficient
vector ``(c_0, ..., c_{k-1})`` of a polynomial reduced modulo a monic
irreducible.  The modulus is the least monic irreducible of degree k in
that same integer order, so field tables are reproducible.  Log/antilog
tables make multiplication a table lookup.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """(p, k) with q = p**k, or FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


# -- polynomials over GF(p) as coefficient lists, lowest degree first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    for code in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _polymod(poly, f, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> list[int]:
    for f in _monic_polys(p, k):
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


class FiniteField:
    """GF(p^k) with integer-coded elements in ``range(q)``."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        q = p**k
        if q > 10**6:
            raise FieldError(f"field order {q} exceeds desk-scale limit 10^6")
        self.p, self.k, self.q = p, k, q
        self.modulus = least_irreducible(p, k) if k > 1 else [0, 1]
        self._build_tables()

    # integer <-> coefficient vector
    def coeffs(self, x: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def from_coeffs(self, c: Iterable[int]) -> int:
        x = 0
        for i, ci in enumerate(c):
            x += (ci % self.p) * self.p**i
        return x

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_coeffs(_polymod(prod, self.modulus, p) if k > 1 else prod)

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        # additive tables via digit-wise addition
        p, k = self.p, self.k
        digits = [self.coeffs(x) for x in range(q)]
        self._digits = digits
        self._neg = [self.from_coeffs([-d for d in dg]) for dg in digits]
        # generator search
        for g in range(2 if q > 2 else 1, q):
            exp = [1] * order
            x = 1
            ok = True
            for i in range(1, order):
                x = self._mul_slow(x, g)
                if x == 1:
                    ok = False
                    break
                exp[i] = x
            if ok:
                break
        else:  # pragma: no cover
            raise FieldError("no primitive element found")
        self.generator = g if q > 2 else 1
        self._exp = exp + exp  # doubled to skip a modulo in mul
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i
        del p, k

    # -- integer-level arithmetic (hot paths) ---------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits[a], self._digits[b]
        p = self.p
        x, mul = 0, 1
        for u, v in zip(da, db):
            x += ((u + v) % p) * mul
            mul *= p
        return x

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("log of 0")
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    # -- element objects ------------------------------------------------------

    def __call__(self, value: int | Iterable[int]) -> "FieldElement":
        if isinstance(value, int):
            if self.k == 1:
                value %= self.p
            elif not 0 <= value < self.q:
                raise FieldError(f"element code {value} out of range for GF({self.q})")
            return FieldElement(self, value)
        return FieldElement(self, self.from_coeffs(value))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, x) for x in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def in_subfield(self, a: int, r: int) -> bool:
        """a lies in the subfield of order r (test a^r == a)."""
        return self.power(a, r) == a if a else True

    def subfield(self, r: int) -> list[int]:
        """Elements of the subfield of order r, as integer codes."""
        if (self.q - 1) % (r - 1) or prime_power(r)[0] != self.p:
            raise FieldError(f"GF({self.q}) has no subfield of order {r}")
        return [x for x in range(self.q) if self.in_subfield(x, r)]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "q": self.q,
            "modulus": self.modulus,
            "generator": self.generator,
            "exp": self._exp[: self.q - 1],
            "elements": [self.coeffs(x) for x in range(self.q)],
        }

    def dump_json(self) -> str:
        return json.dumps(self.to_dict())

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError(f"cannot combine elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int) and self.field.k == 1:
            return other % self.field.p
        raise FieldError(f"cannot combine {type(other).__name__} with an element of {self.field}")

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int) and self.field.k == 1:
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.field), self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"{self.value}"
        return f"<{'+'.join(f'{c}x^{i}' for i, c in enumerate(self.coeffs) if c) or '0'} in {self.field}>"


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> FiniteField:
    """Cached constructor; fields are immutable after construction."""
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    p, k = prime_power(q)
    return field_make(p, k)


def norm_exponent(q: int, s: int) -> int:
    """1 + q + ... + q^(s-2)."""
    return sum(q**i for i in range(s - 1))


def norm_map(field: FiniteField, a: FieldElement | int, s: int, q: int) -> FieldElement:
    """Field norm from GF(q^(s-1)) down to GF(q): A * A^q * ... * A^(q^(s-2))."""
    if s < 2:
        raise FieldError("norm needs s >= 2")
    if field.q != q ** (s - 1):
        raise FieldError(f"field order {field.q} is not q^(s-1) = {q}^{s - 1}")
    x = a.value if isinstance(a, FieldElement) else a
    if isinstance(a, FieldElement) and a.field is not field:
        raise FieldError("element belongs to a different field")
    return FieldElement(field, field.power(x, norm_exponent(q, s)))


def unit_subgroup(field: FiniteField, d: int) -> set[FieldElement]:
    """The multiplicative subgroup of order d (requires d | q-1)."""
    if d < 1 or (field.q - 1) % d:
        raise FieldError(f"{d} does not divide {field.q - 1}")
    step = (field.q - 1) // d
    return {FieldElement(field, field.exp(step * i)) for i in range(d)}
