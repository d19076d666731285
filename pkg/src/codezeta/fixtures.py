"""Built-in generator matrices and seeded random codes."""

from __future__ import annotations

import random

from .code import LinearCode, _rref, build_code
from .errors import ConstructionFailure, ValidationError
from .field import FieldSpec, field_of_size, make_field

GF2 = make_field(2)

HAMMING74 = [
    [1, 0, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 1, 1, 0, 1],
]

SIMPLEX73 = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]

# generator polynomial of the binary quadratic-residue code of length 23
_GOLAY23_GEN = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11


def _with_parity(rows: list[list[int]]) -> list[list[int]]:
    return [r + [sum(r) % 2] for r in rows]


def hamming74() -> LinearCode:
    return build_code(GF2, HAMMING74)


def ext_hamming84() -> LinearCode:
    return build_code(GF2, _with_parity(HAMMING74))


def simplex73() -> LinearCode:
    return build_code(GF2, SIMPLEX73)


def golay24() -> LinearCode:
    rows = []
    for shift in range(12):
        row = [0] * 23
        for i, c in enumerate(_GOLAY23_GEN):
            row[shift + i] = c
        rows.append(row)
    return build_code(GF2, _with_parity(rows))


def reed_solomon(field: FieldSpec, n: int, k: int) -> LinearCode:
    """Evaluation code of polynomials of degree < k at the first n field elements."""
    if n > field.q:
        raise ConstructionFailure(f"only {field.q} evaluation points in {field!r}, need {n}")
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={n}")
    points = list(range(n))
    rows = [[field.pow(a, i) if (a or i) else 1 for a in points] for i in range(k)]
    return build_code(field, rows)


def full_space(n: int, field: FieldSpec) -> LinearCode:
    return build_code(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def random_code(field: FieldSpec, n: int, k: int, seed: int, max_tries: int = 1000) -> LinearCode:
    """Uniform random rank-k generator without zero columns; reproducible per seed."""
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    for _ in range(max_tries):
        rows = [[rng.randrange(field.q) for _ in range(n)] for _ in range(k)]
        if any(not any(r[j] for r in rows) for j in range(n)):
            continue
        if len(_rref(field, rows)[0]) < k:
            continue
        return build_code(field, rows)
    raise ConstructionFailure(f"no rank-{k} code without zero columns after {max_tries} draws")


FIXTURES = {
    "hamming74": hamming74,
    "ext_hamming84": ext_hamming84,
    "golay24": golay24,
    "simplex73": simplex73,
}


def fixture(name: str, q: int | None = None, n: int | None = None, k: int | None = None) -> LinearCode:
    if name in FIXTURES:
        return FIXTURES[name]()
    if name == "rs":
        return reed_solomon(field_of_size(q), n, k)
    if name == "full":
        return full_space(n, field_of_size(q))
    raise ValidationError(f"unknown fixture {name!r}")
