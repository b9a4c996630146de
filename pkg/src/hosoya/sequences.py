"""Two-term linear recurrences and caterpillar-bond graphs that realise them.

``u_n = a u_{n-1} + b u_{n-2}`` with positive ``a``, ``b``.  The graph
builders rely on two facts about ``z_fast``:

* ``D_n(a,...,a; b,...,b)`` has index ``u_{n+1}`` when ``u_0 = 0, u_1 = 1``;
* ``D_n(v_1, a,...,a; b v_0, b,...,b)`` has index ``v_n`` for any seeds
  with ``v_0 >= 1``.

Index labels
------------
Named families follow the labels used in the source identities.  For
Fibonacci, Lucas, Pell and Jacobsthal the first term is index 0.  Pell-Lucas
is labelled from 1 (``Q_1 = Q_2 = 2, Q_3 = 6, Q_4 = 14, Q_5 = 34``) so that
``Z(D_n(2,...,2; 2,1,...,1)) = Q_{n+1}`` holds as stated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .caterpillar import CaterpillarBondSpec

__all__ = [
    "RecurrenceDef",
    "Family",
    "FAMILIES",
    "terms",
    "bond_graph_spec",
    "uniform_spec",
    "seeded_spec",
    "spec_for_term",
    "get_family",
]


@dataclass(frozen=True)
class RecurrenceDef:
    a: int
    b: int
    u0: int
    u1: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("coefficients a and b must be positive")
        if self.u0 < 0 or self.u1 < 1:
            raise ValueError("seeds need u0 >= 0 and u1 >= 1")


def terms(d: RecurrenceDef, count: int) -> list[int]:
    """``u_0 .. u_{count-1}``."""
    if count < 1:
        raise ValueError("count must be at least 1")
    out = [d.u0, d.u1][:count]
    while len(out) < count:
        out.append(d.a * out[-1] + d.b * out[-2])
    return out


def bond_graph_spec(n: int) -> CaterpillarBondSpec:
    """``B_n``: a path of ``n + 1`` vertices with every bond doubled."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return CaterpillarBondSpec((1,) * (n + 1), (2,) * n)


def uniform_spec(a: int, b: int, n: int) -> CaterpillarBondSpec:
    if min(a, b, n) < 1:
        raise ValueError("a, b and n must be positive")
    return CaterpillarBondSpec((a,) * n, (b,) * (n - 1))


def seeded_spec(v0: int, v1: int, a: int, b: int, n: int) -> CaterpillarBondSpec:
    """Spec whose index is ``v_n`` of the recurrence seeded by ``v0, v1``."""
    if n < 2:
        raise ValueError("seeded_spec needs n >= 2")
    if v0 < 1:
        raise ValueError("v0 must be >= 1 so that the first spine bond has positive order")
    if min(v1, a, b) < 1:
        raise ValueError("v1, a and b must be positive")
    return CaterpillarBondSpec((v1,) + (a,) * (n - 1), (b * v0,) + (b,) * (n - 2))


def spec_for_term(d: RecurrenceDef, index: int) -> CaterpillarBondSpec | None:
    """A spec whose index equals ``u_index``, or None when ``u_index`` is 0.

    With ``u_0 >= 1`` the seeded construction applies directly.  Otherwise
    the sequence is shifted by one so that ``u_1, u_2`` act as seeds.
    """
    if index < 0:
        raise ValueError("index must be nonnegative")
    if index == 0:
        return CaterpillarBondSpec((d.u0,)) if d.u0 >= 1 else None
    u2 = d.a * d.u1 + d.b * d.u0
    if index == 1:
        return CaterpillarBondSpec((d.u1,))
    if d.u0 >= 1:
        return seeded_spec(d.u0, d.u1, d.a, d.b, index)
    if index == 2:
        return CaterpillarBondSpec((u2,))
    return seeded_spec(d.u1, u2, d.a, d.b, index - 1)


@dataclass(frozen=True)
class Family:
    name: str
    symbol: str
    recurrence: RecurrenceDef
    first_index: int = 0

    def labelled_terms(self, count: int) -> list[tuple[int, int]]:
        """``(label, value)`` pairs for the first ``count`` terms."""
        return [(self.first_index + i, v) for i, v in enumerate(terms(self.recurrence, count))]

    def value(self, label: int) -> int:
        return terms(self.recurrence, label - self.first_index + 1)[-1]

    def spec(self, label: int) -> CaterpillarBondSpec | None:
        return spec_for_term(self.recurrence, label - self.first_index)


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("fibonacci", "F", RecurrenceDef(1, 1, 0, 1)),
        Family("lucas", "L", RecurrenceDef(1, 1, 2, 1)),
        Family("pell", "P", RecurrenceDef(2, 1, 0, 1)),
        Family("pell-lucas", "Q", RecurrenceDef(2, 1, 2, 2), first_index=1),
        Family("jacobsthal", "J", RecurrenceDef(1, 2, 0, 1)),
    )
}

_CUSTOM_RE = re.compile(r"custom\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def get_family(name: str) -> Family:
    """Look up a named family or parse ``custom(a,b,u0,u1)``."""
    key = name.strip().lower()
    if key in FAMILIES:
        return FAMILIES[key]
    m = _CUSTOM_RE.fullmatch(key)
    if m:
        a, b, u0, u1 = (int(g) for g in m.groups())
        return Family(key, "u", RecurrenceDef(a, b, u0, u1))
    raise KeyError(f"unknown sequence family {name!r}")
