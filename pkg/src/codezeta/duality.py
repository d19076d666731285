"""Formal self-duality: the equivalent conditions and the two reconstructions.

The conditions are reported one by one (:class:`FsdReport`) because they
are only equivalent when n = 2k and d = d_dual.  The Hamming [7,4,3] code is
the standard counter-example: its zeta polynomial satisfies the functional
equation while its weight distribution differs from the dual's.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .code import CodeProfile, WeightDistribution
from .errors import DegreeOverflow, LengthMismatch, PreconditionViolation
from .poly import RationalPoly, q_reciprocal_transform
from .zeta import _as_weights, binomial_kernel, dc_from_zeta, mds_distribution


def check_fsd_definition(wc: WeightDistribution, wdual: WeightDistribution) -> bool:
    if wc.n != wdual.n:
        raise LengthMismatch(f"lengths {wc.n} and {wdual.n} differ")
    return wc.counts == wdual.counts


def _functional(p: RationalPoly, q: int, g: int) -> bool:
    if g < 0:
        return False
    try:
        return q_reciprocal_transform(p, q, g, 2 * g) == p
    except DegreeOverflow:
        return False


def check_zeta_functional(p: RationalPoly, q: int, g: int) -> bool:
    """P(t) == P(1/(qt)) q^g t^(2g)."""
    return _functional(p, q, g)


def check_d_functional(dc: RationalPoly, q: int, g: int) -> bool:
    """D(t) == D(1/(qt)) q^(g-1) t^(2g-2); the zero polynomial passes trivially."""
    if dc.is_zero():
        return True
    return _functional(dc, q, g - 1)


def check_coeff_relations(dc: RationalPoly, q: int, g: int) -> bool:
    """c_{g-1+i} == q^i c_{g-1-i} for 1 <= i <= g-1 (and nothing above degree 2g-2)."""
    if dc.degree > 2 * g - 2 and not dc.is_zero():
        return False
    return all(dc[g - 1 + i] == q**i * dc[g - 1 - i] for i in range(1, g))


def _require_fsd_shape(profile: CodeProfile) -> None:
    if profile.n != 2 * profile.k or profile.d != profile.d_dual:
        raise PreconditionViolation(
            f"needs n = 2k and d = d_dual, got n={profile.n}, k={profile.k}, d={profile.d}, d_dual={profile.d_dual}"
        )


def fsd_kernel(j: int, k: int, q: int) -> list[int]:
    """Coefficient vector of the j-th correction term added to M_{2k,k+1}."""
    n = 2 * k
    if j == 0:
        return [(q - 1) * comb(n, k) * v for v in binomial_kernel(n, k)]
    a = binomial_kernel(n, k - j)  # (x-y)^(k+j) y^(k-j)
    b = binomial_kernel(n, k + j)  # (x-y)^(k-j) y^(k+j)
    return [(q - 1) * comb(n, k + j) * (u + q**j * v) for u, v in zip(a, b)]


def fsd_reconstruct_from_half(c_low: Sequence, profile: CodeProfile) -> WeightDistribution:
    """Distribution of a formally self-dual code from c_0, ..., c_{g-1}."""
    _require_fsd_shape(profile)
    k, q, g = profile.k, profile.q, profile.g
    if len(c_low) != g:
        raise PreconditionViolation(f"expected {g} coefficients, got {len(c_low)}")
    total = [Fraction(v) for v in mds_distribution(2 * k, k + 1, q)]
    for j in range(g):
        cj = Fraction(c_low[g - 1 - j])
        for w, v in enumerate(fsd_kernel(j, k, q)):
            total[w] += cj * v
    return _as_weights(total, profile)


def phi_kernel(w: int, k: int, q: int) -> list[int]:
    n = 2 * k
    out = [comb(n - w, k) * v for v in binomial_kernel(n, k)]
    for s in range(w, k):
        c = comb(n - w, s - w)
        lo = binomial_kernel(n, s)  # (x-y)^(2k-s) y^s
        hi = binomial_kernel(n, n - s)  # (x-y)^s y^(2k-s)
        for i in range(n + 1):
            out[i] += c * (lo[i] + q ** (k - s) * hi[i])
    return out


def fsd_reconstruct_from_low_weights(low: Sequence[int], profile: CodeProfile) -> WeightDistribution:
    """Distribution of a formally self-dual code from W^(d), ..., W^(k)."""
    if profile.n != 2 * profile.k:
        raise PreconditionViolation(f"needs n = 2k, got n={profile.n}, k={profile.k}")
    k, d, q = profile.k, profile.d, profile.q
    if d > k:
        raise PreconditionViolation(f"empty weight range d..k with d={d} > k={k}")
    if len(low) != k - d + 1:
        raise PreconditionViolation(f"expected {k - d + 1} weights, got {len(low)}")
    total = [Fraction(v) for v in mds_distribution(2 * k, k + 1, q)]
    for w in range(d, k):
        for i, v in enumerate(phi_kernel(w, k, q)):
            total[i] += low[w - d] * v
    for i, v in enumerate(binomial_kernel(2 * k, k)):
        total[i] += low[k - d] * v
    return _as_weights(total, profile)


@dataclass(frozen=True)
class FsdReport:
    weight_equal: bool
    zeta_fixed: bool
    d_fixed: bool
    coeff_relations: bool
    reconstruction_21: bool
    reconstruction_24: bool
    parameter_preconditions: bool
    n: int
    k: int
    d: int
    d_dual: int
    g: int
    g_dual: int
    q: int

    @property
    def conditions(self) -> dict[str, bool]:
        return {
            "weight_equal": self.weight_equal,
            "zeta_fixed": self.zeta_fixed,
            "d_fixed": self.d_fixed,
            "coeff_relations": self.coeff_relations,
            "reconstruction_21": self.reconstruction_21,
            "reconstruction_24": self.reconstruction_24,
        }

    @property
    def all_true(self) -> bool:
        return self.parameter_preconditions and all(self.conditions.values())

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "FsdReport":
        return cls(**data)


def fsd_report(wc: WeightDistribution, wdual: WeightDistribution, p: RationalPoly, profile: CodeProfile) -> FsdReport:
    q, g = profile.q, profile.g
    dc = dc_from_zeta(p, g, q)
    pre = profile.n == 2 * profile.k and profile.d == profile.d_dual and g == profile.g_dual
    rec21 = rec24 = False
    if pre:
        try:
            rec21 = fsd_reconstruct_from_half([dc[i] for i in range(g)], profile) == wc
        except (PreconditionViolation, ArithmeticError, ValueError):
            rec21 = False
        try:
            if profile.d > profile.k:
                # MDS: both sums are empty and only M_{2k,k+1} remains
                rec24 = list(wc.counts) == mds_distribution(profile.n, profile.k + 1, q)
            else:
                low = wc.counts[profile.d : profile.k + 1]
                rec24 = fsd_reconstruct_from_low_weights(low, profile) == wc
        except (PreconditionViolation, ArithmeticError, ValueError):
            rec24 = False
    return FsdReport(
        weight_equal=check_fsd_definition(wc, wdual),
        zeta_fixed=check_zeta_functional(p, q, g),
        d_fixed=check_d_functional(dc, q, g),
        coeff_relations=check_coeff_relations(dc, q, g),
        reconstruction_21=rec21,
        reconstruction_24=rec24,
        parameter_preconditions=pre,
        n=profile.n, k=profile.k, d=profile.d, d_dual=profile.d_dual,
        g=g, g_dual=profile.g_dual, q=q,
    )
