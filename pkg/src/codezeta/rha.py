"""Riemann hypothesis analogue: are all roots of P on |t| = 1/sqrt(q)?

The verdict is exact.  For a self-q-reciprocal P of degree 2m the
substitution u = 1/t + q t turns P(t) / (a_0 t^m) into a degree-m polynomial
G(u); the roots of P lie on the circle exactly when every root of G is real
with u^2 <= 4q.  Both facts are decided with Sturm counts, the second on
G2(s) where G2(u^2) = G(u) G(-u), so no irrational endpoints appear.

Numerical roots (mpmath, 50 digits) are attached as diagnostics only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Sequence

import mpmath

from .errors import DivisibilityViolation, GenusZero, HypothesisViolation, ZeroConstantTerm, ZeroPolynomial
from .poly import RationalPoly, count_roots_closed, squarefree_part, sturm_count, to_fraction

RESIDUAL_TOL = 1e-9

ODD_DEGREE = "OddDegreeReject"
RECIPROCITY = "ReciprocityReject"
EXACT_STURM = "ExactSturm"
CLOSED_DEG2 = "ClosedFormDeg2"
CLOSED_DEG4 = "ClosedFormDeg4"
DEGENERATE = "Degenerate"


class QuadRingElement:
    """a + b*sqrt(q) with rational a, b, compared exactly."""

    __slots__ = ("a", "b", "q")

    def __init__(self, a, b, q: int):
        self.a = to_fraction(a)
        self.b = to_fraction(b)
        self.q = q
        root = isqrt(q)
        if root * root == q:
            self.a, self.b = self.a + self.b * root, Fraction(0)

    @classmethod
    def sqrt_q(cls, q: int) -> "QuadRingElement":
        return cls(0, 1, q)

    def _lift(self, other) -> "QuadRingElement":
        if isinstance(other, QuadRingElement):
            if other.q != self.q:
                raise ValueError("elements of different quadratic rings")
            return other
        return QuadRingElement(other, 0, self.q)

    def __add__(self, other):
        o = self._lift(other)
        return QuadRingElement(self.a + o.a, self.b + o.b, self.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadRingElement(-self.a, -self.b, self.q)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QuadRingElement(self.a * o.a + self.b * o.b * self.q, self.a * o.b + self.b * o.a, self.q)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = QuadRingElement(1, 0, self.q)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self) -> "QuadRingElement":
        norm = self.a * self.a - self.b * self.b * self.q
        if norm == 0:
            raise ZeroDivisionError("zero in the quadratic ring")
        return QuadRingElement(self.a / norm, -self.b / norm, self.q)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 q
        diff = self.a * self.a - self.b * self.b * self.q
        return sa if diff > 0 else -sa if diff < 0 else 0

    def __eq__(self, other):
        return (self - other).sign() == 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __hash__(self):
        return hash((self.a, self.b, self.q))

    def __float__(self) -> float:
        return float(mpmath.mpf(self.a.numerator) / self.a.denominator + mpmath.mpf(self.b.numerator) / self.b.denominator * mpmath.sqrt(self.q))

    def __repr__(self) -> str:
        return f"({self.a} + {self.b}*sqrt({self.q}))"


@dataclass
class RhaVerdict:
    holds: bool
    method: str
    root_diagnostics: list[tuple[complex, float]] = field(default_factory=list)
    exact_certificate: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max((abs(r) for _, r in self.root_diagnostics), default=0.0)

    def to_json(self) -> dict:
        cert = {}
        for key, val in self.exact_certificate.items():
            cert[key] = val.to_json() if isinstance(val, RationalPoly) else val
        return {
            "holds": self.holds,
            "method": self.method,
            "root_diagnostics": [
                {"root": [z.real, z.imag], "residual": r} for z, r in self.root_diagnostics
            ],
            "exact_certificate": cert,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RhaVerdict":
        cert = {}
        for key, val in data["exact_certificate"].items():
            cert[key] = RationalPoly.from_json(val) if isinstance(val, dict) and "coeffs" in val else val
        diags = [(complex(*d["root"]), d["residual"]) for d in data["root_diagnostics"]]
        return cls(data["holds"], data["method"], diags, cert)


def root_diagnostics(p: RationalPoly, q: int) -> list[tuple[complex, float]]:
    """(root, |root| sqrt(q) - 1) for every root, computed in high precision."""
    if p.degree < 1:
        return []
    out = []
    with mpmath.workdps(50):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=200)
        except mpmath.libmp.NoConvergence:
            roots = mpmath.polyroots(coeffs, maxsteps=4000, extraprec=800)
        for z in roots:
            out.append((complex(z), float(abs(z) * mpmath.sqrt(q) - 1)))
    return out


def is_self_reciprocal(p: RationalPoly, q: int) -> bool:
    """a_{r-i} == q^(m-i) a_i for r = 2m = deg p."""
    r = p.degree
    if r % 2:
        return False
    m = r // 2
    q = Fraction(q)
    return all(p[r - i] == q ** (m - i) * p[i] for i in range(m + 1))


def u_polynomial(p: RationalPoly, q: int) -> RationalPoly:
    """G(u) with P(t) = a_0 t^m G(1/t + q t); requires self-reciprocity."""
    m = p.degree // 2
    # V_j(u) = x^j + y^j with x + y = u, x y = q
    v = [RationalPoly([2]), RationalPoly([0, 1])]
    for _ in range(2, m + 1):
        v.append(RationalPoly([0, 1]) * v[-1] - q * v[-2])
    g = RationalPoly([p[m]])
    for j in range(1, m + 1):
        g = g + p[m - j] * v[j]
    return g * (Fraction(1) / p[0])


def even_square_polynomial(g: RationalPoly) -> RationalPoly:
    """G2 with G2(u^2) = G(u) G(-u) * (-1)^deg G."""
    h = g * g.scale(-1)
    if g.degree % 2:
        h = -h
    return RationalPoly(h[2 * i] for i in range(h.degree // 2 + 1))


def rha_check(p: RationalPoly, q: int, diagnostics: bool = True) -> RhaVerdict:
    if p.is_zero():
        raise ZeroPolynomial("RHA is undefined for the zero polynomial")
    diags = root_diagnostics(p, q) if diagnostics else []
    r = p.degree
    if r == 0:
        return RhaVerdict(True, DEGENERATE, diags, {})
    if r % 2:
        return RhaVerdict(False, ODD_DEGREE, diags, {"degree": r})
    if not is_self_reciprocal(p, q):
        return RhaVerdict(False, RECIPROCITY, diags, {"degree": r})
    g = u_polynomial(p, q)
    g2 = even_square_polynomial(g)
    sf_g = squarefree_part(g)
    sf_g2 = squarefree_part(g2)
    real_roots = sturm_count(g)
    in_band = count_roots_closed(g2, 0, 4 * q)
    holds = real_roots == sf_g.degree and in_band == sf_g2.degree
    cert = {
        "G": g,
        "G2": g2,
        "distinct_roots_G": sf_g.degree,
        "real_roots_G": real_roots,
        "distinct_roots_G2": sf_g2.degree,
        "roots_G2_in_0_4q": in_band,
    }
    return RhaVerdict(holds, EXACT_STURM, diags, cert)


def rha_deg2(c0, q: int) -> bool:
    """1/(sqrt q + 1)^2 <= c0 <= 1/(sqrt q - 1)^2, decided exactly."""
    c0 = to_fraction(c0)
    if c0 <= 0:
        raise HypothesisViolation(f"c0 = {c0} must be positive")
    s = QuadRingElement.sqrt_q(q)
    lower = ((s + 1) ** 2).inverse()
    upper = ((s - 1) ** 2).inverse()
    return lower <= c0 <= upper


def rha_deg4(c0, c1, q: int) -> bool:
    """Closed-form criterion for D = c0 + c1 t + q c0 t^2 with 0 < c0 < 1."""
    c0, c1 = to_fraction(c0), to_fraction(c1)
    if not 0 < c0 < 1:
        raise HypothesisViolation(f"c0 = {c0} must lie in (0, 1)")
    s = QuadRingElement.sqrt_q(q)
    discriminant = ((q + 1) * c0 + c1) ** 2 >= 4 * c0
    ratio = c1 / c0
    vertex = q - 4 * s + 1 <= ratio <= q + 4 * s + 1
    ends = (c1 <= ((s - 1) ** 2).inverse() - 2 * s * c0) and (c1 <= ((s + 1) ** 2).inverse() + 2 * s * c0)
    return discriminant and vertex and ends


def deg2_zeta(c0, q: int) -> RationalPoly:
    return RationalPoly.one_minus_t_one_minus_qt(q) * to_fraction(c0) + RationalPoly.monomial(1)


def deg4_zeta(c0, c1, q: int) -> RationalPoly:
    c0, c1 = to_fraction(c0), to_fraction(c1)
    dc = RationalPoly([c0, c1, q * c0])
    return RationalPoly.one_minus_t_one_minus_qt(q) * dc + RationalPoly.monomial(2)


def field_bound(k: int, d: int, g: int, w_d: int, q: int) -> tuple[bool, int]:
    """Check nu (sqrt q - 1)^(2g) <= C(2k, d), nu = W_d / (q - 1)."""
    if g < 1:
        raise GenusZero("the field-size bound needs g >= 1")
    if w_d % (q - 1):
        raise DivisibilityViolation(f"W_d = {w_d} not divisible by q-1 = {q - 1}")
    nu = w_d // (q - 1)
    lhs = nu * (QuadRingElement.sqrt_q(q) - 1) ** (2 * g)
    return lhs <= comb(2 * k, d), nu


def log_coefficients(p: RationalPoly, n_terms: int) -> list[Fraction]:
    """S_1..S_N with log(P(t)/P(0)) = sum S_v t^v / v (Newton's identities)."""
    if p[0] == 0:
        raise ZeroConstantTerm("log needs P(0) != 0")
    b = [c / p[0] for c in (p[i] for i in range(n_terms + 1))]
    s: list[Fraction] = []
    for v in range(1, n_terms + 1):
        s.append(v * b[v] - sum((s[i - 1] * b[v - i] for i in range(1, v)), Fraction(0)))
    return s


def log_coefficient_growth(s: Sequence[Fraction], q: int) -> float:
    """max_v |S_v| q^(-v/2); at most deg P when the RHA holds."""
    with mpmath.workdps(30):
        return float(max((abs(mpmath.mpf(x.numerator) / x.denominator) * mpmath.power(q, -mpmath.mpf(v) / 2)
                          for v, x in enumerate(s, start=1)), default=0))


def rha_closed_form(dc: RationalPoly, q: int) -> RhaVerdict | None:
    """Closed-form verdict when D is constant or of the shape c0 + c1 t + q c0 t^2.

    Returns None when neither shape applies.
    """
    if dc.degree == 0 and dc[0] > 0:
        return RhaVerdict(rha_deg2(dc[0], q), CLOSED_DEG2, [], {"c0": str(dc[0])})
    if dc.degree == 2 and dc[2] == q * dc[0] and 0 < dc[0] < 1:
        return RhaVerdict(rha_deg4(dc[0], dc[1], q), CLOSED_DEG4, [], {"c0": str(dc[0]), "c1": str(dc[1])})
    return None
