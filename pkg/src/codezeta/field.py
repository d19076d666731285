"""Finite fields GF(p^m).

Elements are stored canonically as coefficient vectors over GF(p) (ascending
powers of the adjoined root ``x``) and encoded as integers
``sum(c_i * p**i)`` for table lookups and vectorised code enumeration.
Multiplication goes through discrete log/antilog tables built once per field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .errors import MixedFields, NonPrime, ReducibleModulus, UnsupportedSize, ZeroInverse

MAX_FIELD_SIZE = 2**16

# Monic irreducible moduli, ascending coefficients including the leading 1.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    64: (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
    128: (1, 1, 0, 0, 0, 0, 0, 1),  # x^7 + x + 1
    256: (1, 0, 1, 1, 1, 0, 0, 0, 1),  # x^8 + x^4 + x^3 + x^2 + 1
    9: (2, 2, 1),  # x^2 + 2x + 2
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
    81: (2, 1, 0, 0, 1),  # x^4 + x + 2
    243: (1, 2, 0, 0, 0, 1),  # x^5 + 2x + 1
    25: (2, 4, 1),  # x^2 + 4x + 2
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b in GF(p)[x]; b must have nonzero leading coefficient."""
    r = _trim([x % p for x in a])
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db and r:
        coef = r[-1] * lead_inv % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - coef * bc) % p
        _trim(r)
    return r


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over GF(p)."""
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _polymod_p(modulus, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) described by a prime, an exponent and a monic irreducible modulus.

    ``modulus`` is empty for prime fields.
    """

    p: int
    m: int
    modulus: tuple[int, ...] = dc_field(default=())

    @property
    def q(self) -> int:
        return self.p**self.m

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # -- integer-encoded scalar arithmetic -----------------------------------
    def to_coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            raise ValueError(f"{len(coeffs)} coefficients for a degree-{self.m} extension")
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + (c % self.p)
        return value

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self.from_coeffs([(x + y) % self.p for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.from_coeffs([(-x) % self.p for x in self.to_coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        exp, log = self._tables
        return int(exp[(int(log[a]) + int(log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables
        return int(exp[(-int(log[a])) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_coeffs(_polymod_p(prod, self.modulus, self.p))

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Antilog/log tables w.r.t. a primitive element."""
        q, order = self.q, self.q - 1
        primes = _prime_factors(order)

        def slow_pow(a: int, e: int) -> int:
            r = 1
            while e:
                if e & 1:
                    r = self._mul_slow(r, a)
                a = self._mul_slow(a, a)
                e >>= 1
            return r

        gen = next(
            g for g in range(2, q) if all(slow_pow(g, order // ell) != 1 for ell in primes)
        )
        exp = np.zeros(order, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = 1
        for i in range(order):
            exp[i] = cur
            log[cur] = i
            cur = self._mul_slow(cur, gen)
        return exp, log

    # -- vectorised helpers for enumeration ------------------------------------
    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += ((a // scale % self.p + b // scale % self.p) % self.p) * scale
            scale *= self.p
        return out

    def scale_vector(self, c: int, vec: Sequence[int]) -> list[int]:
        return [self.mul(c, v) for v in vec]

    # -- elements ----------------------------------------------------------------
    def element(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.q:
                raise ValueError(f"{value} is not an encoded element of {self!r}")
            return FieldElement(self, self.to_coeffs(value))
        return FieldElement(self, self.to_coeffs(self.from_coeffs(list(value))))

    def elements(self) -> Iterator["FieldElement"]:
        for a in range(self.q):
            yield FieldElement(self, self.to_coeffs(a))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        modulus = data.get("modulus") or None
        return make_field(int(data["p"]), int(data.get("m", 1)), modulus)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def value(self) -> int:
        return self.field.from_coeffs(self.coeffs)

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            # integers embed through the prime subfield
            return self.field.from_coeffs([other % self.field.p])
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, self.field.to_coeffs(v))

    def __add__(self, other):
        o = self._other(other)
        return self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        return self._wrap(self.field.mul(self.value, self.field.inv(o)))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        if self.field.m == 1:
            return f"{self.coeffs[0]}"
        return f"{self.field!r}{list(self.coeffs)}"


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m).

    For m > 1 without an explicit modulus the built-in table is consulted.
    A user modulus may omit the leading 1 (length m) or include it (length m+1).
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"exponent must be >= 1, got {m}")
    q = p**m
    if q > MAX_FIELD_SIZE:
        raise UnsupportedSize(f"q = {q} exceeds {MAX_FIELD_SIZE}")
    if m == 1:
        if modulus and len(_trim([c % p for c in modulus])) > 2:
            raise ReducibleModulus("prime fields take no modulus of degree > 1")
        return FieldSpec(p, 1, ())
    if modulus is None:
        if q not in DEFAULT_MODULI:
            raise UnsupportedSize(f"no built-in modulus for q = {q}; supply one")
        coeffs = DEFAULT_MODULI[q]
    else:
        coeffs = tuple(c % p for c in modulus)
        if len(coeffs) == m:
            coeffs = coeffs + (1,)
        if len(coeffs) != m + 1 or coeffs[-1] == 0:
            raise ReducibleModulus(f"modulus {list(modulus)} does not have degree {m}")
        if coeffs[-1] != 1:
            lead_inv = pow(coeffs[-1], p - 2, p)
            coeffs = tuple(c * lead_inv % p for c in coeffs)
    if not is_irreducible(coeffs, p):
        raise ReducibleModulus(f"{list(coeffs)} is reducible over GF({p})")
    return FieldSpec(p, m, tuple(coeffs))


def field_of_size(q: int | None) -> FieldSpec:
    if q is None or q < 2:
        raise UnsupportedSize(f"invalid field size {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            m, rest = 0, q
            while rest % p == 0:
                rest //= p
                m += 1
            if rest != 1:
                raise UnsupportedSize(f"{q} is not a prime power")
            return make_field(p, m)
    raise UnsupportedSize(f"invalid field size {q}")
