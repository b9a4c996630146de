"""Caterpillar-bond graphs ``D_n(x_1..x_n; y_1..y_{n-1})``.

Spine vertex ``i`` carries ``x_i - 1`` pendant leaves and spine bond ``i``
has order ``y_i``.  The Hosoya index obeys

    Z_1 = x_1,  Z_2 = x_1 x_2 + y_1,  Z_k = x_k Z_{k-1} + y_{k-1} Z_{k-2},

which is the numerator recurrence of the continued fraction
``[x_1; y_1/x_2, ..., y_{n-1}/x_n]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .contfrac import GeneralizedCF
from .errors import NotApplicableError, ParseError
from .multigraph import Multigraph

__all__ = [
    "CaterpillarBondSpec",
    "expand_spec",
    "z_fast",
    "z_prefixes",
    "tridiagonal_matrix",
    "continuant",
    "spec_from_cf",
    "cf_from_spec",
    "rewrite_head",
    "rewrite_tail",
    "contract_head",
    "contract_tail_spec",
    "reverse_spec",
    "canonical_spec",
    "parse_spec",
    "format_spec",
]


@dataclass(frozen=True, order=True)
class CaterpillarBondSpec:
    """Spine sizes ``x`` (length n >= 1) and spine bond orders ``y`` (length n - 1)."""

    x: tuple[int, ...]
    y: tuple[int, ...] = ()

    def __post_init__(self):
        x, y = tuple(self.x), tuple(self.y)
        if not x:
            raise ValueError("a caterpillar-bond spec needs at least one spine vertex")
        if len(y) != len(x) - 1:
            raise ValueError(f"expected {len(x) - 1} spine bonds, got {len(y)}")
        for name, seq in (("x", x), ("y", y)):
            for value in seq:
                if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                    raise ValueError(f"{name} entries must be positive integers, got {value!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def vertex_count(self) -> int:
        return sum(self.x)

    def __str__(self) -> str:
        return format_spec(self)


def expand_spec(s: CaterpillarBondSpec) -> Multigraph:
    """Spine vertices are ``0 .. n-1``; leaves follow, grouped by spine vertex."""
    n = s.n
    bonds = [(i, i + 1, s.y[i]) for i in range(n - 1)]
    leaf = n
    for i, xi in enumerate(s.x):
        for _ in range(xi - 1):
            bonds.append((i, leaf, 1))
            leaf += 1
    return Multigraph(leaf, tuple(bonds))


def z_prefixes(s: CaterpillarBondSpec) -> list[int]:
    """``[Z(D_1), Z(D_2), ..., Z(D_n)]`` for the prefixes of ``s``."""
    out = [s.x[0]]
    prev = 1
    for xk, yk in zip(s.x[1:], s.y):
        out.append(xk * out[-1] + yk * prev)
        prev = out[-2]
    return out


def z_fast(s: CaterpillarBondSpec) -> int:
    """Hosoya index of ``expand_spec(s)`` in O(n) big-integer steps."""
    return z_prefixes(s)[-1]


def tridiagonal_matrix(s: CaterpillarBondSpec) -> list[list[int]]:
    """Diagonal ``x``, superdiagonal ``y``, subdiagonal ``-1``."""
    n = s.n
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = s.x[i]
        if i + 1 < n:
            mat[i][i + 1] = s.y[i]
            mat[i + 1][i] = -1
    return mat


def _bareiss_determinant(mat: list[list[int]]) -> int:
    a = [row[:] for row in mat]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def continuant(s: CaterpillarBondSpec) -> int:
    """Determinant of :func:`tridiagonal_matrix` by fraction-free elimination."""
    return _bareiss_determinant(tridiagonal_matrix(s))


def spec_from_cf(cf: GeneralizedCF) -> CaterpillarBondSpec:
    """``[a0; b1/a1, ...]`` maps to ``D(a0, a1, ...; b1, b2, ...)``."""
    return CaterpillarBondSpec(
        (cf.a0,) + tuple(a for _, a in cf.terms), tuple(b for b, _ in cf.terms)
    )


def cf_from_spec(s: CaterpillarBondSpec) -> GeneralizedCF:
    return GeneralizedCF(s.x[0], tuple(zip(s.y, s.x[1:])))


def rewrite_head(s: CaterpillarBondSpec) -> CaterpillarBondSpec:
    """``D(2, x2, ...; y...)`` -> ``D(1, 1, x2, ...; 1, y...)``."""
    if s.x[0] != 2:
        raise NotApplicableError(f"rewrite_head needs x_1 = 2: {s}")
    return CaterpillarBondSpec((1, 1) + s.x[1:], (1,) + s.y)


def rewrite_tail(s: CaterpillarBondSpec) -> CaterpillarBondSpec:
    """``D(..., x_{n-1}, 2; ...)`` -> ``D(..., x_{n-1}, 1, 1; ..., 1)``."""
    if s.x[-1] != 2:
        raise NotApplicableError(f"rewrite_tail needs x_n = 2: {s}")
    return CaterpillarBondSpec(s.x[:-1] + (1, 1), s.y + (1,))


def contract_head(s: CaterpillarBondSpec) -> CaterpillarBondSpec:
    if s.n < 2 or s.x[:2] != (1, 1) or s.y[0] != 1:
        raise NotApplicableError(f"contract_head needs the pattern D(1, 1, ...; 1, ...): {s}")
    return CaterpillarBondSpec((2,) + s.x[2:], s.y[1:])


def contract_tail_spec(s: CaterpillarBondSpec) -> CaterpillarBondSpec:
    if s.n < 2 or s.x[-2:] != (1, 1) or s.y[-1] != 1:
        raise NotApplicableError(f"contract_tail_spec needs the pattern D(..., 1, 1; ..., 1): {s}")
    return CaterpillarBondSpec(s.x[:-2] + (2,), s.y[:-1])


def reverse_spec(s: CaterpillarBondSpec) -> CaterpillarBondSpec:
    return CaterpillarBondSpec(s.x[::-1], s.y[::-1])


def canonical_spec(s: CaterpillarBondSpec) -> CaterpillarBondSpec:
    """Contract both ends to a fixpoint, then pick the smaller orientation.

    A cheap normal form only; distinct results may still expand to
    isomorphic graphs, so deduplication relies on canonical tree codes.
    """
    while True:
        if s.n >= 2 and s.x[:2] == (1, 1) and s.y[0] == 1:
            s = contract_head(s)
        elif s.n >= 2 and s.x[-2:] == (1, 1) and s.y[-1] == 1:
            s = contract_tail_spec(s)
        else:
            break
    r = reverse_spec(s)
    return min(s, r, key=lambda t: (t.x, t.y))


_SPEC_RE = re.compile(
    r"\s*D\s*\[\s*(?P<x>\d+(?:\s*,\s*\d+)*)\s*(?:;\s*(?P<y>\d+(?:\s*,\s*\d+)*)?\s*)?\]\s*"
)


def parse_spec(text: str) -> CaterpillarBondSpec:
    """Parse ``D[x1,...,xn; y1,...,y(n-1)]`` or ``D[x1]``."""
    m = _SPEC_RE.fullmatch(text)
    if not m:
        # report the first offset where the literal stops matching any prefix
        pos = 0
        for end in range(len(text), -1, -1):
            if _SPEC_PREFIX_RE.fullmatch(text[:end]):
                pos = end
                break
        raise ParseError("malformed caterpillar spec literal", text, pos)
    x = tuple(int(v) for v in m.group("x").split(","))
    y = tuple(int(v) for v in m.group("y").split(",")) if m.group("y") else ()
    try:
        return CaterpillarBondSpec(x, y)
    except ValueError as exc:
        raise ParseError(str(exc), text, m.start("x")) from None


_SPEC_PREFIX_RE = re.compile(r"\s*(?:D\s*(?:\[[\d\s,]*(?:;[\d\s,]*)?)?)?")


def format_spec(s: CaterpillarBondSpec) -> str:
    x = ",".join(map(str, s.x))
    if not s.y:
        return f"D[{x}]"
    return f"D[{x}; " + ",".join(map(str, s.y)) + "]"
