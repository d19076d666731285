"""Function fields of curves over GF(q), seen only through their L-polynomials.

For a genus-g function field F::

    Z_F(t) = L(t) / ((1 - t)(1 - q t)) = sum A_i t^i,      h = L(1),
    L(t)   = (1 - t)(1 - q t) D_F(t) + h t^g,
    D_F(t) / ((1 - t)(1 - q t)) = sum B_i t^i.

Profiles are built from L or from point counts N_1..N_g.  A small brute-force
point counter for curves y^2 + h(x) y = f(x) supplies the curve fixtures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .code import weight_distribution_any_side
from .errors import (
    BadConstantTerm,
    ConsistencyFailure,
    FunctionalEquationViolation,
    InconsistentCounts,
    OddDegree,
    ValidationError,
)
from .field import FieldSpec, field_of_size, make_field
from .fixtures import reed_solomon
from .poly import RationalPoly, fraction_str, q_reciprocal_transform, series_div
from .rha import QuadRingElement
from .zeta import zeta_profile


def _geom(q: int, e: int) -> int:
    """(q^e - 1)/(q - 1), which is 0 for e = 0."""
    return (q**e - 1) // (q - 1)


def _functional(p: RationalPoly, q: int, g: int) -> bool:
    return p.degree <= 2 * g and q_reciprocal_transform(p, q, g, 2 * g) == p


@dataclass(frozen=True)
class FunctionFieldProfile:
    q: int
    g: int
    L: RationalPoly
    A: tuple[int, ...]
    h: int
    D_F: RationalPoly
    h_seq: tuple[Fraction, ...]

    @property
    def virtual(self) -> bool:
        """True when some A_i is negative, so no actual curve has this L."""
        return any(a < 0 for a in self.A)

    def zeta_series(self, order: int) -> list[Fraction]:
        return series_div(self.L, RationalPoly.one_minus_t_one_minus_qt(self.q), order).as_list()

    def violations(self) -> list[str]:
        out = []
        if not _functional(self.L, self.q, self.g):
            out.append("functional equation")
        if self.L[0] != 1 or self.L.degree != 2 * self.g or not self.L.is_integral():
            out.append("L shape")
        if not self.A or self.A[0] != 1 or any(a < 0 for a in self.A):
            out.append("A_0 = 1, A_i >= 0")
        if tuple(self.zeta_series(self.g - 1)) != tuple(Fraction(a) for a in self.A):
            out.append("A differs from the zeta series")
        if self.h <= 0 or self.L(1) != self.h:
            out.append("h = L(1) > 0")
        if not self.D_F.is_integral():
            out.append("D_F not integral")
        if any(b < 1 for b in b_sequence(self, 3 * self.g)):
            out.append("B_i >= 1")
        return out

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "g": self.g,
            "L": self.L.int_coeffs(),
            "A": list(self.A),
            "h": self.h,
            "D_F": self.D_F.int_coeffs(),
            "h_seq": [fraction_str(x) for x in self.h_seq],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FunctionFieldProfile":
        return cls(
            int(data["q"]),
            int(data["g"]),
            RationalPoly(data["L"]),
            tuple(int(a) for a in data["A"]),
            int(data["h"]),
            RationalPoly(data["D_F"]),
            tuple(Fraction(x) for x in data["h_seq"]),
        )


# -- genus reduction and class numbers -----------------------------------------


def reduce_genus(L: RationalPoly, q: int, g: int) -> RationalPoly:
    """(L - L(1) t^g) / ((1 - t)(1 - q t)); raises InexactDivision on bad input."""
    return (L - RationalPoly.monomial(g, L(1))).exact_div(RationalPoly.one_minus_t_one_minus_qt(q))


def h_decomposition(L: RationalPoly, q: int, g: int) -> list[Fraction]:
    """h_0..h_g with L = sum h_i t^i ((1-t)(1-qt))^(g-i)."""
    out = [Fraction(0)] * (g + 1)
    cur = L
    for i in range(g, -1, -1):
        out[i] = cur(1)
        if i:
            cur = reduce_genus(cur, q, i)
    return out


def from_h_decomposition(h_seq: Sequence, q: int) -> RationalPoly:
    g = len(h_seq) - 1
    base = RationalPoly.one_minus_t_one_minus_qt(q)
    total = RationalPoly()
    for i, hi in enumerate(h_seq):
        total = total + RationalPoly.monomial(i, Fraction(hi)) * base ** (g - i)
    return total


def duursma_reduced_ff(profile: FunctionFieldProfile) -> RationalPoly:
    """D_F from A_0..A_{g-1}, checked against L."""
    return _dc_from_counts(profile.A, profile.q, profile.g, profile.L, profile.h)


def _dc_from_counts(A: Sequence[int], q: int, g: int, L: RationalPoly | None, h: int) -> RationalPoly:
    coeffs = [0] * (2 * g - 1)
    for i in range(g - 1):
        coeffs[i] += A[i]
        coeffs[2 * g - 2 - i] += q ** (g - 1 - i) * A[i]
    coeffs[g - 1] += A[g - 1]
    dc = RationalPoly(coeffs)
    if L is not None and RationalPoly.one_minus_t_one_minus_qt(q) * dc + RationalPoly.monomial(g, h) != L:
        raise ConsistencyFailure("(1-t)(1-qt) D_F + h t^g differs from L")
    return dc


# -- profile construction ----------------------------------------------------------


def profile_from_lpoly(L: RationalPoly | Sequence[int], q: int) -> FunctionFieldProfile:
    L = L if isinstance(L, RationalPoly) else RationalPoly(L)
    if not L.is_integral():
        raise ValidationError("L must have integer coefficients")
    if L[0] != 1:
        raise BadConstantTerm(f"L(0) = {L[0]}, expected 1")
    if L.degree % 2:
        raise OddDegree(f"deg L = {L.degree} is odd")
    g = L.degree // 2
    if g < 1:
        raise ValidationError("genus must be at least 1")
    if not _functional(L, q, g):
        raise FunctionalEquationViolation("L(t) != L(1/(qt)) q^g t^(2g)")
    h = int(L(1))
    if h <= 0:
        raise InconsistentCounts(f"class number L(1) = {h} is not positive")
    series = series_div(L, RationalPoly.one_minus_t_one_minus_qt(q), g - 1).as_list()
    A = tuple(int(a) for a in series)
    dc = _dc_from_counts(A, q, g, L, h)
    if dc != reduce_genus(L, q, g):
        raise ConsistencyFailure("D_F differs from the genus reduction of L")
    return FunctionFieldProfile(q, g, L, A, h, dc, tuple(h_decomposition(L, q, g)))


def lpoly_from_point_counts(N: Sequence[int], q: int) -> RationalPoly:
    """L of degree 2g from N_1..N_g via log L = sum (N_s - 1 - q^s) t^s / s."""
    g = len(N)
    if g < 1:
        raise ValidationError("need at least one point count")
    S = [0] + [N[s - 1] - 1 - q**s for s in range(1, g + 1)]
    b = [Fraction(1)]
    for k in range(1, g + 1):
        b.append(sum((S[s] * b[k - s] for s in range(1, k + 1)), Fraction(0)) / k)
    if any(x.denominator != 1 for x in b):
        raise InconsistentCounts(f"non-integral L coefficients {b}")
    full = b + [Fraction(0)] * g
    for i in range(g):
        full[2 * g - i] = q ** (g - i) * b[i]
    return RationalPoly(full)


def profile_from_point_counts(N: Sequence[int], q: int) -> FunctionFieldProfile:
    L = lpoly_from_point_counts(N, q)
    if L.degree != 2 * len(N):
        raise InconsistentCounts("reconstructed L has the wrong degree")
    try:
        return profile_from_lpoly(L, q)
    except InconsistentCounts:
        raise
    except ValidationError as exc:
        raise InconsistentCounts(str(exc)) from exc


def profile_from_effective_counts(A: Sequence[int], h: int, q: int) -> FunctionFieldProfile:
    """Profile with prescribed A_0..A_{g-1} and class number h (possibly virtual)."""
    g = len(A)
    dc = _dc_from_counts(A, q, g, None, h)
    L = RationalPoly.one_minus_t_one_minus_qt(q) * dc + RationalPoly.monomial(g, h)
    return profile_from_lpoly(L, q)


# -- B sequence and relations ------------------------------------------------------


def b_piecewise(profile: FunctionFieldProfile, i: int) -> list[int]:
    """Every closed-form value of B_i whose index range contains i."""
    q, g, A = profile.q, profile.g, profile.A
    out = []
    if i <= g - 1:
        out.append(sum(A[j] * _geom(q, i - j + 1) for j in range(i + 1)))
    if g <= i <= 2 * g - 3:
        low = sum(A[j] * _geom(q, i - j + 1) for j in range(g))
        mid = sum(A[2 * g - 2 - j] * (q ** (i - g + 2) - q ** (j - g + 1)) // (q - 1) for j in range(g, i + 1))
        out.append(low + mid)
    if i >= 2 * g - 2:
        out.append(int(profile.D_F(1)) * _geom(q, i - g + 2))
    return out


def b_sequence(profile: FunctionFieldProfile, n: int) -> list[int]:
    """B_0..B_n, checked against the series of D_F / ((1-t)(1-qt))."""
    series = series_div(profile.D_F, RationalPoly.one_minus_t_one_minus_qt(profile.q), n).as_list()
    out = []
    for i, s in enumerate(series):
        for v in b_piecewise(profile, i):
            if v != s:
                raise ConsistencyFailure(f"closed form B_{i} = {v} but the series gives {s}")
        out.append(int(s))
    return out


@dataclass(frozen=True)
class RelationCheck:
    holds: bool
    failures: tuple[str, ...] = ()


def check_b_relations(B: Sequence[int], q: int, g: int, d1: int) -> RelationCheck:
    fails = []
    for i in range(len(B)):
        if g - 1 <= i <= 2 * g - 4:
            want = q ** (i - g + 2) * B[2 * g - 4 - i] + d1 * _geom(q, i - g + 2)
            if B[i] != want:
                fails.append(f"B_{i}: reflection relation")
        if i >= max(2 * g - 3, 0) and B[i] != d1 * _geom(q, i - g + 2):
            fails.append(f"B_{i}: stable relation")
    return RelationCheck(not fails, tuple(fails))


def check_a_relations(A: Sequence, q: int, g: int, h: int) -> RelationCheck:
    fails = []
    for j in range(len(A)):
        if g <= j <= 2 * g - 2:
            if A[j] != q ** (j - g + 1) * A[2 * g - 2 - j] + h * _geom(q, j - g + 1):
                fails.append(f"A_{j}: reflection relation")
        if j >= 2 * g - 1 and A[j] != h * _geom(q, j - g + 1):
            fails.append(f"A_{j}: stable relation")
    return RelationCheck(not fails, tuple(fails))


def b_relations_report(profile: FunctionFieldProfile, n: int) -> RelationCheck:
    B = b_sequence(profile, n)
    rb = check_b_relations(B, profile.q, profile.g, int(profile.D_F(1)))
    ra = check_a_relations(profile.zeta_series(n), profile.q, profile.g, profile.h)
    fails = rb.failures + ra.failures
    return RelationCheck(not fails, fails)


def b_relations_check(profile: FunctionFieldProfile, n: int) -> bool:
    return b_relations_report(profile, n).holds


# -- class number ------------------------------------------------------------------


def class_number_bounds(profile: FunctionFieldProfile) -> bool:
    """(sqrt(q) - 1)^(2g) <= h <= (sqrt(q) + 1)^(2g), compared exactly."""
    return hasse_weil_class_bounds(profile.h, profile.q, profile.g)


def hasse_weil_class_bounds(h: int, q: int, g: int) -> bool:
    s = QuadRingElement.sqrt_q(q)
    return (s - 1) ** (2 * g) <= h <= (s + 1) ** (2 * g)


# -- genus 0 -----------------------------------------------------------------------


def genus0_ag_identity(q: int, n: int, m: int) -> bool:
    """RS code [n, m+1, n-m] from the rational function field has P_C = 1 = L_F."""
    if not 0 <= m < n:
        raise ValidationError(f"need 0 <= m < n, got m={m}, n={n}")
    code = reed_solomon(field_of_size(q), n, m + 1)
    zp = zeta_profile(weight_distribution_any_side(code))
    return zp.profile.g == 0 and zp.P == RationalPoly([1])


# -- curves and synthetic L --------------------------------------------------------


def count_points(hx: Sequence[int], fx: Sequence[int], field: FieldSpec) -> int:
    """Projective points of y^2 + h(x) y = f(x) over ``field``.

    h and f have prime-field coefficients (ascending) and deg f = 2g + 1 odd,
    so there is exactly one point at infinity.
    """
    if len(fx) % 2 != 0 or fx[-1] % field.p == 0:
        raise ValidationError("f must have odd degree")

    def ev(coeffs: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = field.add(field.mul(acc, x), c % field.p)
        return acc

    total = 1
    for x in range(field.q):
        hv, fv = ev(hx, x), ev(fx, x)
        for y in range(field.q):
            if field.add(field.mul(y, y), field.mul(hv, y)) == fv:
                total += 1
    return total


def curve_point_counts(hx: Sequence[int], fx: Sequence[int], p: int, g: int) -> list[int]:
    return [count_points(hx, fx, make_field(p, s)) for s in range(1, g + 1)]


CURVES = {
    # name: (h, f, p, genus)
    "elliptic_gf2": ([1], [0, 0, 0, 1], 2, 1),  # y^2 + y = x^3
    "elliptic_gf3": ([], [0, -1, 0, 1], 3, 1),  # y^2 = x^3 - x
    "genus2_gf2": ([1], [0, 0, 0, 0, 0, 1], 2, 2),  # y^2 + y = x^5
}


def curve_profile(name: str) -> FunctionFieldProfile:
    hx, fx, p, g = CURVES[name]
    return profile_from_point_counts(curve_point_counts(hx, fx, p, g), p)


def synthetic_lpoly(q: int, g: int, rng: random.Random) -> RationalPoly:
    """Product of g factors q t^2 - beta t + 1 with integer beta^2 <= 4q."""
    bound = isqrt(4 * q)
    L = RationalPoly([1])
    for _ in range(g):
        beta = rng.randint(-bound, bound)
        L = L * RationalPoly([1, -beta, q])
    return L
