"""Seeded random instances for cross-validation runs."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator

from .code import LinearCode, build_code, null_space
from .errors import ConstructionFailure
from .field import FieldSpec, field_of_size
from .fixtures import random_code
from .poly import RationalPoly


def code_corpus(
    count: int,
    seed: int = 0,
    qs: tuple[int, ...] = (2, 3, 4),
    max_n: int = 16,
    max_side: int = 2**16,
    dual_full_support: bool = False,
) -> Iterator[LinearCode]:
    """Random codes with q^k and q^(n-k) both at most ``max_side``.

    With ``dual_full_support`` codes of minimum distance 1 are skipped, so the
    dual has no zero coordinate either.
    """
    rng = random.Random(seed)
    made = 0
    while made < count:
        q = rng.choice(qs)
        n = rng.randint(2, max_n)
        ks = [k for k in range(1, n) if q**k <= max_side and q ** (n - k) <= max_side]
        if not ks:
            continue
        k = rng.choice(ks)
        try:
            code = random_code(field_of_size(q), n, k, rng.randrange(2**32))
        except ConstructionFailure:
            continue
        if dual_full_support and _has_unit_vector(code):
            continue
        made += 1
        yield code


def _has_unit_vector(code: LinearCode) -> bool:
    basis = null_space(code.field, code)
    return any(not any(row[j] for row in basis) for j in range(code.n))


def self_reciprocal_poly(q: int, m: int, rng: random.Random, on_circle: bool) -> RationalPoly:
    """Degree-2m polynomial with a_{2m-i} = q^(m-i) a_i.

    With ``on_circle`` it is a product of factors q t^2 - beta t + 1 with
    rational beta^2 <= 4q.  Otherwise at least one factor has beta^2 > 4q or
    the coefficients are drawn freely (the result can still happen to satisfy
    the RHA, which the caller decides independently).
    """
    scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    if not on_circle and rng.random() < 0.5:
        half = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(m)]
        half[0] = Fraction(rng.randint(1, 9))
        mid = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
        coeffs = half + [mid] + [q ** (m - i) * half[i] for i in range(m - 1, -1, -1)]
        return RationalPoly(coeffs) * scale
    p = RationalPoly([scale])
    bad = rng.randrange(m) if not on_circle else -1
    for j in range(m):
        den = rng.randint(1, 10)
        limit = int(2 * den * q**0.5)  # floor of 2 sqrt(q) den, up to rounding
        while (limit + 1) ** 2 <= 4 * q * den * den:
            limit += 1
        while limit**2 > 4 * q * den * den:
            limit -= 1
        if j == bad:
            num = rng.choice([-1, 1]) * rng.randint(limit + 1, limit + 4 * den)
        else:
            num = rng.randint(-limit, limit)
        p = p * RationalPoly([1, -Fraction(num, den), q])
    return p


def self_dual_code(field: FieldSpec, blocks: int, rng: random.Random) -> LinearCode:
    """[I | A] with A A^T = -I, built from signed permutations of orthogonal blocks.

    Blocks are J_4 - I over GF(2) and [[1, 1], [1, -1]] over GF(3).
    """
    if field.q == 2:
        base = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
        signs = [1]
    elif field.q == 3:
        base = [[1, 1], [1, 2]]
        signs = [1, 2]
    else:
        raise ValueError("self-dual construction only over GF(2) and GF(3)")
    b = len(base)
    k = b * blocks
    A = [[0] * k for _ in range(k)]
    for s in range(blocks):
        for i in range(b):
            for j in range(b):
                A[s * b + i][s * b + j] = base[i][j]
    rows_perm = list(range(k))
    cols_perm = list(range(k))
    rng.shuffle(rows_perm)
    rng.shuffle(cols_perm)
    col_sign = [rng.choice(signs) for _ in range(k)]
    A = [[field.mul(A[rows_perm[i]][cols_perm[j]], col_sign[j]) for j in range(k)] for i in range(k)]
    rows = [[1 if i == j else 0 for j in range(k)] + A[i] for i in range(k)]
    order = list(range(2 * k))
    rng.shuffle(order)
    return build_code(field, [[r[c] for c in order] for r in rows])
