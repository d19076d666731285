"""Linear codes over GF(q).

Generator matrices are kept in reduced row echelon form with entries encoded
as integers (see :mod:`codezeta.field`).  Weight distributions come from
exhaustive enumeration of all q^k codewords.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Sequence

import numpy as np

from .errors import (
    BudgetExceeded,
    DivisibilityViolation,
    EmptyMatrix,
    MixedFields,
    NonIntegerResult,
    TrivialDual,
    ZeroColumn,
)
from .field import FieldElement, FieldSpec, field_of_size

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 2**20
# Size of the message-prefix block materialised at once during enumeration.
_BLOCK = 2**14


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    generator: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]
    rank_reduced: bool = False  # input rows were linearly dependent

    @property
    def n(self) -> int:
        return len(self.generator[0])

    @property
    def k(self) -> int:
        return len(self.generator)

    @property
    def q(self) -> int:
        return self.field.q

    def rows(self) -> list[list[FieldElement]]:
        return [[self.field.element(v) for v in row] for row in self.generator]

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "rows": [_row_json(self.field, r) for r in self.generator]}


def _row_json(field: FieldSpec, row: Sequence[int]) -> list:
    if field.m == 1:
        return list(row)
    return [list(field.to_coeffs(v)) for v in row]


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]
    n: int
    k: int
    q: int

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(self.counts)}")

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    @property
    def min_weight(self) -> int | None:
        return next((w for w in range(1, self.n + 1) if self.counts[w]), None)

    def violations(self) -> list[str]:
        out = []
        if self.counts[0] != 1:
            out.append("counts[0] != 1")
        if any(c < 0 for c in self.counts):
            out.append("negative count")
        if sum(self.counts) != self.q**self.k:
            out.append(f"total {sum(self.counts)} != q^k = {self.q ** self.k}")
        if any(c % (self.q - 1) for c in self.counts[1:]):
            out.append("count not divisible by q-1")
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "q": self.q, "counts": list(self.counts)}

    @classmethod
    def from_json(cls, data: dict) -> "WeightDistribution":
        return cls(tuple(int(c) for c in data["counts"]), int(data["n"]), int(data["k"]), int(data["q"]))


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    d: int
    d_dual: int
    q: int

    @property
    def g(self) -> int:
        return self.n + 1 - self.k - self.d

    @property
    def k_dual(self) -> int:
        return self.n - self.k

    @property
    def g_dual(self) -> int:
        return self.k + 1 - self.d_dual

    @property
    def r(self) -> int:
        return self.g + self.g_dual

    @property
    def is_mds(self) -> bool:
        return self.g == 0

    def to_json(self) -> dict:
        return {
            "n": self.n, "k": self.k, "d": self.d, "g": self.g,
            "k_dual": self.k_dual, "d_dual": self.d_dual, "g_dual": self.g_dual, "q": self.q,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CodeProfile":
        return cls(int(data["n"]), int(data["k"]), int(data["d"]), int(data["d_dual"]), int(data["q"]))


# -- linear algebra -----------------------------------------------------------------


def _rref(field: FieldSpec, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    n = len(rows[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = field.scale_vector(inv, rows[r])
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = field.neg(rows[i][col])
                rows[i] = [field.add(a, field.mul(c, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _encode_entry(field: FieldSpec, v) -> int:
    if isinstance(v, FieldElement):
        if v.field != field:
            raise MixedFields(f"{v.field!r} entry in a {field!r} matrix")
        return v.value
    if isinstance(v, (list, tuple)):
        return field.from_coeffs(v)
    v = int(v)
    if field.m == 1:
        return v % field.p
    if not 0 <= v < field.q:
        raise ValueError(f"{v} is not an element encoding of {field!r}")
    return v


def build_code(field: FieldSpec, rows: Sequence[Sequence]) -> LinearCode:
    """Row-reduce ``rows`` into a full-rank generator.

    Entries may be ints (residues for prime fields, integer encodings for
    extension fields), coefficient lists, or :class:`FieldElement`.
    """
    if not rows or not rows[0]:
        raise EmptyMatrix("generator matrix has no entries")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged generator matrix")
    encoded = [[_encode_entry(field, v) for v in r] for r in rows]
    zero_cols = [j for j in range(n) if not any(r[j] for r in encoded)]
    if zero_cols:
        raise ZeroColumn(f"code lies in the coordinate hyperplane(s) {zero_cols}")
    reduced, pivots = _rref(field, encoded)
    deficient = len(reduced) < len(encoded)
    if deficient:
        log.warning("generator had rank %d < %d rows; reduced to a basis", len(reduced), len(encoded))
    return LinearCode(field, tuple(tuple(r) for r in reduced), tuple(pivots), deficient)


def null_space(field: FieldSpec, code: LinearCode) -> list[list[int]]:
    n = code.n
    pivset = set(code.pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [0] * n
        v[f] = 1
        for row, pc in zip(code.generator, code.pivots):
            v[pc] = field.neg(row[f])
        basis.append(v)
    return basis


def dual_code(code: LinearCode) -> LinearCode:
    if code.k == code.n:
        raise TrivialDual("the full space has the zero code as its dual")
    # ZeroColumn here means the code contains a weight-1 word
    return build_code(code.field, null_space(code.field, code))


# -- enumeration --------------------------------------------------------------------


def _span(field: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> np.ndarray:
    words = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        multiples = np.array([field.scale_vector(a, row) for a in range(field.q)], dtype=np.int64)
        words = field.add_arrays(words[None, :, :], multiples[:, None, :]).reshape(-1, n)
    return words


def enumerate_weights(field: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> list[int]:
    """Weight histogram of the span of ``rows`` (assumed independent)."""
    k = len(rows)
    q = field.q
    split = 0
    while split < k and q ** (split + 1) <= _BLOCK:
        split += 1
    split = max(split, 1) if k else 0
    inner = _span(field, rows[:split], n)
    outer = _span(field, rows[split:], n)
    counts = np.zeros(n + 1, dtype=np.int64)
    for word in outer:
        w = np.count_nonzero(field.add_arrays(inner, word[None, :]), axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return [int(c) for c in counts]


def weight_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    size = code.q**code.k
    if size > budget:
        raise BudgetExceeded(f"q^k = {size} codewords exceeds the budget {budget}")
    counts = enumerate_weights(code.field, code.generator, code.n)
    return WeightDistribution(tuple(counts), code.n, code.k, code.q)


def weight_distribution_any_side(code: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Enumerate whichever of C and its dual is smaller, then MacWilliams if needed."""
    n, k, q = code.n, code.k, code.q
    if k <= n - k:
        return weight_distribution(code, budget)
    if min(q ** (n - k), q**k) > budget:
        raise BudgetExceeded(f"both C and its dual exceed the budget {budget}")
    counts = enumerate_weights(code.field, null_space(code.field, code), n) if k < n else [1] + [0] * n
    return macwilliams(WeightDistribution(tuple(counts), n, n - k, q))


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    return weight_distribution(code, budget).min_weight


def krawtchouk(j: int, w: int, n: int, q: int) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(w, s) * comb(n - w, j - s) for s in range(j + 1))


def macwilliams(wd: WeightDistribution) -> WeightDistribution:
    """Weight distribution of the dual: W_dual(x, y) = q^-k W(x + (q-1)y, x - y)."""
    n, q, k = wd.n, wd.q, wd.k
    scale = q**k
    out = []
    for j in range(n + 1):
        total = sum(c * krawtchouk(j, w, n, q) for w, c in enumerate(wd.counts) if c)
        if total % scale:
            raise NonIntegerResult(f"dual weight {j} is {total}/{scale}; input is not a code distribution")
        out.append(total // scale)
    return WeightDistribution(tuple(out), n, n - k, q)


def support_count(wd: WeightDistribution, d: int | None = None) -> int:
    """Number of d-subsets of coordinates that support a minimum-weight word."""
    if d is None:
        d = wd.min_weight
    if wd.counts[d] % (wd.q - 1):
        raise DivisibilityViolation(f"W^({d}) = {wd.counts[d]} is not divisible by q-1 = {wd.q - 1}")
    return wd.counts[d] // (wd.q - 1)


def profile_from_weights(wd: WeightDistribution) -> CodeProfile:
    """Parameters of a code and its dual; the dual side comes from MacWilliams.

    The dual of the full space is the zero code, treated as [n, 0, n+1]
    (MDS, genus 0).
    """
    d = wd.min_weight
    if d is None:
        raise ValueError("zero code has no minimum distance")
    if wd.k == wd.n:
        d_dual = wd.n + 1
    else:
        d_dual = macwilliams(wd).min_weight
    return CodeProfile(wd.n, wd.k, d, d_dual, wd.q)


def code_profile(code: LinearCode, budget: int = DEFAULT_BUDGET) -> CodeProfile:
    return profile_from_weights(weight_distribution(code, budget))


def code_from_json(data: dict) -> LinearCode:
    """Accepts ``{"field": {...}, "rows": ...}`` or the shorthand ``{"q": 7, "rows": ...}``."""
    field = FieldSpec.from_json(data["field"]) if "field" in data else field_of_size(int(data["q"]))
    return build_code(field, data["rows"])
