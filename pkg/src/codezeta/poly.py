"""Dense univariate polynomials and truncated power series over Q.

Coefficients are :class:`fractions.Fraction`, stored in ascending order with
trailing zeros trimmed; the zero polynomial has no coefficients and degree -1
(standing in for minus infinity).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DegreeOverflow, InexactDivision, NonUnitDenominator, ZeroPolynomial

Rational = Union[int, Fraction]


def to_fraction(x) -> Fraction:
    """Parse ints, Fractions and "num/den" strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class RationalPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    # -- constructors
    @classmethod
    def constant(cls, c: Rational) -> "RationalPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Rational = 1) -> "RationalPoly":
        return cls([0] * degree + [c])

    @classmethod
    def one_minus_t_one_minus_qt(cls, q: Rational) -> "RationalPoly":
        """(1 - t)(1 - qt), the denominator shared by every zeta function here."""
        q = to_fraction(q)
        return cls([1, -(q + 1), q])

    # -- basic protocol
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "RationalPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "*t" if i == 1 else f"*t^{i}"))
        return "RationalPoly(" + " + ".join(terms) + ")"

    def __str__(self) -> str:
        return repr(self)[len("RationalPoly(") : -1]

    # -- arithmetic
    @staticmethod
    def _coerce(x) -> "RationalPoly":
        if isinstance(x, RationalPoly):
            return x
        return RationalPoly([x])

    def __add__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return RationalPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPoly":
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RationalPoly":
        if e < 0:
            raise ValueError("negative power")
        result, base = RationalPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other) -> tuple["RationalPoly", "RationalPoly"]:
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for shift in range(len(rem) - 1 - dq, -1, -1):
            c = rem[shift + dq] / lead
            quot[shift] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[shift + j] -= c * b
        return RationalPoly(quot), RationalPoly(rem[:dq] if dq > 0 else [])

    def exact_div(self, other) -> "RationalPoly":
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise InexactDivision(f"{self} is not divisible by {other}")
        return quot

    def __floordiv__(self, other) -> "RationalPoly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "RationalPoly":
        return self.divmod(other)[1]

    def __call__(self, x):
        """Horner evaluation: exact for int/Fraction, floating for float/complex."""
        if isinstance(x, (float, complex)):
            coeffs = [float(c) for c in self.coeffs]
            acc = 0.0 * x
        else:
            x = to_fraction(x)
            coeffs = self.coeffs
            acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def scale(self, c: Rational) -> "RationalPoly":
        """P(c t)."""
        c = to_fraction(c)
        return RationalPoly(a * c**i for i, a in enumerate(self.coeffs))

    def shift_up(self, k: int) -> "RationalPoly":
        """t^k P(t)."""
        if not self.coeffs:
            return self
        return RationalPoly([0] * k + list(self.coeffs))

    def monic(self) -> "RationalPoly":
        lead = self.leading()
        return RationalPoly(c / lead for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> dict:
        return {"coeffs": [fraction_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "RationalPoly":
        if isinstance(data, dict):
            data = data["coeffs"]
        return cls(data)


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd (the zero polynomial if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: RationalPoly) -> RationalPoly:
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of zero")
    if p.degree <= 0:
        return RationalPoly([1])
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def q_reciprocal_transform(p: RationalPoly, q: Rational, g: int, g_total: int) -> RationalPoly:
    """Return t^g_total * q^g * P(1/(q t)).

    Coefficient a_i moves to position g_total - i and picks up q^(g - i).
    Applying the transform again with (g_total - g, g_total) undoes it.
    """
    if p.degree > g_total:
        raise DegreeOverflow(f"degree {p.degree} exceeds {g_total}")
    q = to_fraction(q)
    out = [Fraction(0)] * (g_total + 1)
    for i, a in enumerate(p.coeffs):
        out[g_total - i] = a * q ** (g - i)
    return RationalPoly(out)


# -- Sturm sequences ------------------------------------------------------------


def sturm_chain(p: RationalPoly) -> list[RationalPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs_at(chain: Sequence[RationalPoly], x) -> list[int]:
    if x == "+inf":
        return [_sign(c.leading()) for c in chain]
    if x == "-inf":
        return [_sign(c.leading()) * (-1) ** c.degree for c in chain]
    return [_sign(c(x)) for c in chain]


def sturm_count(p: RationalPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in (lo, hi].

    ``lo=None`` / ``hi=None`` stand for -inf / +inf.  The chain is built on the
    squarefree part, so multiplicities never affect the count.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    chain = sturm_chain(sf)
    a = "-inf" if lo is None else to_fraction(lo)
    b = "+inf" if hi is None else to_fraction(hi)
    if lo is not None and hi is not None and a >= b:
        return 0
    # With a squarefree chain, V(a) - V(b) counts the roots in (a, b] even when
    # a or b is itself a root.
    count = _variations(_signs_at(chain, a)) - _variations(_signs_at(chain, b))
    return count


def count_roots_closed(p: RationalPoly, lo: Rational, hi: Rational) -> int:
    """Distinct real roots in [lo, hi]: the (lo, hi] count plus a direct test at lo."""
    n = sturm_count(p, lo, hi)
    if p(to_fraction(lo)) == 0:
        n += 1
    return n


# -- truncated power series -------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known through t^order."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    @classmethod
    def from_poly(cls, p: RationalPoly, order: int) -> "TruncatedSeries":
        return cls(tuple(p[i] for i in range(order + 1)), order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        out = [sum((self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
        return TruncatedSeries(tuple(out), n)

    def inverse(self) -> "TruncatedSeries":
        if self.coeffs[0] == 0:
            raise NonUnitDenominator("series with zero constant term is not invertible")
        inv = [Fraction(1) / self.coeffs[0]]
        for k in range(1, self.order + 1):
            s = sum((self.coeffs[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv.append(-s * inv[0])
        return TruncatedSeries(tuple(inv), self.order)

    def as_list(self) -> list[Fraction]:
        return list(self.coeffs)


def series_div(num: RationalPoly, den: RationalPoly, order: int) -> TruncatedSeries:
    """Coefficients of num/den through t^order; den(0) must be nonzero."""
    if order < 0:
        raise ValueError("order must be non-negative")
    if den[0] == 0:
        raise NonUnitDenominator("denominator vanishes at t = 0")
    d0 = den[0]
    out: list[Fraction] = []
    for k in range(order + 1):
        s = num[k] - sum((den[i] * out[k - i] for i in range(1, min(k, den.degree) + 1)), Fraction(0))
        out.append(s / d0)
    return TruncatedSeries(tuple(out), order)
