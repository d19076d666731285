"""Weight distribution <-> zeta polynomial <-> Duursma's reduced polynomial.

Homogeneous enumerators are handled only through their coefficient vectors:
entry ``w`` of a vector is the coefficient of x^(n-w) y^w.

For a code with genus g and dual genus g_dual (r = g + g_dual)::

    P(t) = (1 - t)(1 - q t) D(t) + t^g,     deg P <= r,  deg D <= r - 2,

and the MDS case (g = 0) has P = 1, D = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .code import CodeProfile, WeightDistribution, profile_from_weights
from .errors import (
    InconsistentProfile,
    NegativeWeight,
    NonIntegerWeight,
    NormalizationFailure,
    RangeError,
    SingularSystem,
)
from .poly import RationalPoly, fraction_str, q_reciprocal_transform, series_div


def mds_weight(n: int, s: int, q: int, w: int) -> int:
    """Number of weight-w words in an MDS code of length n and minimum distance s."""
    if not 1 <= s <= n + 1 or not 0 <= w <= n:
        raise RangeError(f"invalid (n, s, w) = ({n}, {s}, {w})")
    if w == 0:
        return 1
    if w < s:
        return 0
    return comb(n, w) * sum((-1) ** i * comb(w, i) * (q ** (w + 1 - s - i) - 1) for i in range(w - s + 1))


def mds_distribution(n: int, s: int, q: int) -> list[int]:
    return [mds_weight(n, s, q, w) for w in range(n + 1)]


def binomial_kernel(n: int, s: int) -> list[int]:
    """Coefficient vector of (x - y)^(n-s) y^s."""
    out = [0] * (n + 1)
    for j in range(n - s + 1):
        out[s + j] = (-1) ** j * comb(n - s, j)
    return out


def _check(wd: WeightDistribution, profile: CodeProfile) -> None:
    if (wd.n, wd.k, wd.q) != (profile.n, profile.k, profile.q):
        raise InconsistentProfile(f"distribution [{wd.n},{wd.k}]_{wd.q} vs profile {profile}")
    if wd.min_weight != profile.d:
        raise InconsistentProfile(f"minimum weight {wd.min_weight} != d = {profile.d}")
    if profile.g < 0 or profile.g_dual < 0:
        raise InconsistentProfile(f"negative genus in {profile}")


def _as_weights(values: Sequence[Fraction], profile: CodeProfile) -> WeightDistribution:
    counts = []
    for w, v in enumerate(values):
        if v.denominator != 1:
            raise NonIntegerWeight(f"W^({w}) = {v} is not an integer")
        if v < 0:
            raise NegativeWeight(f"W^({w}) = {v} is negative")
        counts.append(int(v))
    return WeightDistribution(tuple(counts), profile.n, profile.k, profile.q)


def dc_from_weights(wd: WeightDistribution, profile: CodeProfile | None = None) -> RationalPoly:
    """Reduced polynomial coefficients from the low-weight counts (triangular, no solve).

    MDS input (g = 0) gives the zero polynomial.
    """
    profile = profile or profile_from_weights(wd)
    _check(wd, profile)
    n, d, q, g = profile.n, profile.d, profile.q, profile.g
    if g == 0:
        return RationalPoly()
    mds = mds_distribution(n, n + 1 - profile.k, q)
    c = []
    for i in range(profile.r - 1):
        total = 0
        for w in range(d, d + i + 1):
            excess = wd[w] - (mds[w] if w >= d + g else 0)
            total += comb(n - w, n - d - i) * excess
        c.append(Fraction(total, (q - 1) * comb(n, d + i)))
    return RationalPoly(c)


def weights_from_dc(dc: RationalPoly, profile: CodeProfile) -> WeightDistribution:
    n, d, q, g, r = profile.n, profile.d, profile.q, profile.g, profile.r
    if not dc.is_zero() and dc.degree > r - 2:
        raise InconsistentProfile(f"deg D = {dc.degree} exceeds r - 2 = {r - 2}")
    mds = mds_distribution(n, n + 1 - profile.k, q)
    values = [Fraction(1)] + [Fraction(0)] * n
    for w in range(d, n + 1):
        s = sum(
            ((-1) ** (w - d - i) * comb(w, d + i) * dc[i] for i in range(min(w - d, r - 2) + 1)),
            Fraction(0),
        )
        values[w] = (q - 1) * comb(n, w) * s + (mds[w] if w >= d + g else 0)
    return _as_weights(values, profile)


def zeta_from_dc(dc: RationalPoly, g: int, q: int) -> RationalPoly:
    p = RationalPoly.one_minus_t_one_minus_qt(q) * dc + RationalPoly.monomial(g)
    if p(1) != 1:
        raise NormalizationFailure(f"P(1) = {p(1)}")
    return p


def dc_from_zeta(p: RationalPoly, g: int, q: int) -> RationalPoly:
    return (p - RationalPoly.monomial(g)).exact_div(RationalPoly.one_minus_t_one_minus_qt(q))


def zeta_gf_coefficients(p: RationalPoly, profile: CodeProfile) -> list[Fraction]:
    """Generating-function route: W^(s) = (q-1) C(n,s) [t^(s-d)] (1-t)^s P(t) / ((1-t)(1-qt)).

    Returns raw rationals, so formal (non-code) profiles can be compared too.
    """
    n, d, q = profile.n, profile.d, profile.q
    if p.degree > profile.r:
        raise InconsistentProfile(f"deg P = {p.degree} exceeds r = {profile.r}")
    den = RationalPoly.one_minus_t_one_minus_qt(q)
    values = [Fraction(1)] + [Fraction(0)] * n
    for s in range(d, n + 1):
        num = RationalPoly([1, -1]) ** s * p
        values[s] = (q - 1) * comb(n, s) * series_div(num, den, s - d)[s - d]
    return values


def weights_from_zeta_gf(p: RationalPoly, profile: CodeProfile) -> WeightDistribution:
    return _as_weights(zeta_gf_coefficients(p, profile), profile)


def mds_decomposition(wd: WeightDistribution, profile: CodeProfile | None = None) -> list[Fraction]:
    """Coefficients a_0..a_r expressing W as a combination of MDS enumerators M_{n,d+i}."""
    profile = profile or profile_from_weights(wd)
    _check(wd, profile)
    n, d, q, r = profile.n, profile.d, profile.q, profile.r
    if d + r > n:
        raise InconsistentProfile(f"d + r = {d + r} exceeds n = {n}")
    mds = [mds_distribution(n, d + i, q) for i in range(r + 1)]
    a: list[Fraction] = []
    for i in range(r + 1):
        w = d + i
        diag = mds[i][w]
        if diag == 0:
            raise SingularSystem(f"zero pivot at w = {w}")
        rest = sum((a[j] * mds[j][w] for j in range(i)), Fraction(0))
        a.append((wd[w] - rest) / diag)
    if sum(a) != 1:
        raise NormalizationFailure(f"sum of a_i = {sum(a)}")
    for w in range(n + 1):
        if sum((a[i] * mds[i][w] for i in range(r + 1)), Fraction(0)) != wd[w]:
            raise InconsistentProfile(f"MDS combination disagrees with W at weight {w}")
    return a


def reconstruct_general(low_weights: Sequence[int], profile: CodeProfile) -> WeightDistribution:
    """Full distribution from W^(d), ..., W^(d+r-2) via the lambda kernels.

    The MDS case takes an empty ``low_weights`` and returns the MDS enumerator.
    """
    n, d, q, g, r = profile.n, profile.d, profile.q, profile.g, profile.r
    top = d + r - 2
    if len(low_weights) != max(r - 1, 0):
        raise InconsistentProfile(f"expected {max(r - 1, 0)} low weights, got {len(low_weights)}")
    kernels = {s: binomial_kernel(n, s) for s in range(d, top + 1)}

    def lam(w: int) -> list[int]:
        out = [0] * (n + 1)
        for s in range(w, top + 1):
            c = comb(n - w, n - s)
            for j, v in enumerate(kernels[s]):
                out[j] += c * v
        return out

    mds = mds_distribution(n, n + 1 - profile.k, q)
    total = [Fraction(v) for v in mds]
    for w in range(d, top + 1):
        coeff = low_weights[w - d] - (mds[w] if w >= d + g else 0)
        for j, v in enumerate(lam(w)):
            total[j] += coeff * v
    return _as_weights(total, profile)


def dual_zeta(p: RationalPoly, q: int, g: int, r: int) -> RationalPoly:
    """Zeta polynomial of the dual code: t^r q^g P(1/(qt))."""
    return q_reciprocal_transform(p, q, g, r)


@dataclass(frozen=True)
class ZetaProfile:
    profile: CodeProfile
    P: RationalPoly
    D: RationalPoly
    a: tuple[Fraction, ...]

    @property
    def r(self) -> int:
        return self.profile.r

    @property
    def c(self) -> tuple[Fraction, ...]:
        return tuple(self.D[i] for i in range(max(self.r - 1, 0)))

    def violations(self) -> list[str]:
        pr = self.profile
        out = []
        if self.P(1) != 1:
            out.append("P(1) != 1")
        if self.P != zeta_from_dc(self.D, pr.g, pr.q):
            out.append("P != (1-t)(1-qt)D + t^g")
        if self.P.degree > pr.r or (not self.D.is_zero() and self.D.degree > pr.r - 2):
            out.append("degree bound violated")
        for i, ci in enumerate(self.c):
            if ((pr.q - 1) * comb(pr.n, pr.d + i) * ci).denominator != 1:
                out.append(f"(q-1)C(n,d+i)c_{i} not integral")
        if pr.g >= 1 and not 0 < self.D[0] < 1:
            out.append("c_0 outside (0, 1)")
        if tuple(self.P[i] for i in range(pr.r + 1)) != self.a:
            out.append("a-vector differs from P coefficients")
        return out

    def to_json(self) -> dict:
        return {
            "profile": self.profile.to_json(),
            "P": self.P.to_json(),
            "D": self.D.to_json(),
            "a": [fraction_str(x) for x in self.a],
            "c": [fraction_str(x) for x in self.c],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ZetaProfile":
        return cls(
            CodeProfile.from_json(data["profile"]),
            RationalPoly.from_json(data["P"]),
            RationalPoly.from_json(data["D"]),
            tuple(Fraction(x) for x in data["a"]),
        )


def zeta_profile(wd: WeightDistribution, profile: CodeProfile | None = None) -> ZetaProfile:
    profile = profile or profile_from_weights(wd)
    dc = dc_from_weights(wd, profile)
    p = zeta_from_dc(dc, profile.g, profile.q)
    a = tuple(mds_decomposition(wd, profile))
    return ZetaProfile(profile, p, dc, a)
