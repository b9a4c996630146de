"""Exact rationals and generalised continued fractions with positive entries.

A generalised continued fraction ``[a0; b1/a1, b2/a2, ...]`` stands for::

    a0 + b1 / (a1 + b2 / (a2 + ...))

Convergents are kept *unreduced*: the numerator produced by the three-term
recurrence is what equals the Hosoya index of the matching caterpillar-bond
graph, and it is generally not coprime with the denominator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError

__all__ = [
    "Rational",
    "GeneralizedCF",
    "convergents",
    "evaluate",
    "reduce",
    "simple_cf_expand",
    "contract_tail",
    "parse_cf",
    "format_cf",
]


def _check_positive(name: str, value) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class Rational:
    """A pair ``p/q`` of positive integers, not necessarily in lowest terms."""

    p: int
    q: int

    def __post_init__(self):
        _check_positive("numerator", self.p)
        _check_positive("denominator", self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def to_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    @classmethod
    def parse(cls, text: str) -> "Rational":
        m = re.fullmatch(r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?", text)
        if not m:
            raise ParseError("expected 'p/q' with positive integers", text, 0)
        return cls(int(m.group(1)), int(m.group(2) or 1))


def reduce(r: Rational) -> Rational:
    g = math.gcd(r.p, r.q)
    return Rational(r.p // g, r.q // g)


@dataclass(frozen=True)
class GeneralizedCF:
    """``a0`` followed by ``(b_i, a_i)`` pairs, every entry a positive integer."""

    a0: int
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _check_positive("a0", self.a0)
        terms = tuple(tuple(t) for t in self.terms)
        for i, pair in enumerate(terms, start=1):
            if len(pair) != 2:
                raise ValueError(f"term {i} must be a (b, a) pair, got {pair!r}")
            _check_positive(f"b{i}", pair[0])
            _check_positive(f"a{i}", pair[1])
        object.__setattr__(self, "terms", terms)

    @classmethod
    def simple(cls, quotients) -> "GeneralizedCF":
        """Regular continued fraction ``[q0; q1, q2, ...]`` (all numerators 1)."""
        quotients = list(quotients)
        return cls(quotients[0], tuple((1, a) for a in quotients[1:]))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return format_cf(self)


def convergents(cf: GeneralizedCF) -> list[Rational]:
    """Unreduced convergents ``p_k/q_k`` for ``k = 0 .. len(cf)``."""
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    out = [Rational(p, q)]
    for b, a in cf.terms:
        p, p_prev = a * p + b * p_prev, p
        q, q_prev = a * q + b * q_prev, q
        out.append(Rational(p, q))
    return out


def evaluate(cf: GeneralizedCF) -> Rational:
    """Final convergent of ``cf``, unreduced."""
    return convergents(cf)[-1]


def simple_cf_expand(r: Rational | Fraction) -> list[int]:
    """Euclidean expansion of a positive rational.

    The last partial quotient is at least 2 unless the value is an integer.
    """
    p, q = (r.numerator, r.denominator) if isinstance(r, Fraction) else (r.p, r.q)
    if p < 1 or q < 1:
        raise ValueError("only positive rationals are supported")
    out = []
    while q:
        a, rem = divmod(p, q)
        out.append(a)
        p, q = q, rem
    return out


def contract_tail(cf: GeneralizedCF, k: int) -> GeneralizedCF:
    """Fold the last ``k + 1`` levels of ``cf`` into one ``(b', a')`` pair.

    With ``j = n - k`` the tail ``a_j + b_{j+1}/(a_{j+1} + ...)`` evaluates to
    an unreduced ``P/Q``; the pair ``(b_j, a_j) ... (b_n, a_n)`` becomes
    ``(b_j * Q, P)``.  Numerator and denominator of the whole fraction are
    unchanged.
    """
    n = len(cf.terms)
    if not isinstance(k, int) or not (1 <= k < n):
        raise ValueError(f"k must satisfy 1 <= k < {n}, got {k!r}")
    j = n - k
    b_j, a_j = cf.terms[j - 1]
    tail = evaluate(GeneralizedCF(a_j, cf.terms[j:]))
    return GeneralizedCF(cf.a0, cf.terms[: j - 1] + ((b_j * tail.q, tail.p),))


_CF_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def parse_cf(text: str) -> GeneralizedCF:
    """Parse ``[a0]`` or ``[a0; b1/a1, b2/a2, ...]`` (whitespace-insensitive)."""
    tokens = []
    for m in _CF_TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append((int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append((m.group(2), m.start(2)))
    tokens.append((None, len(text)))
    i = 0

    def expect(kind):
        nonlocal i
        tok, pos = tokens[i]
        if kind == "int":
            if not isinstance(tok, int):
                raise ParseError("expected an integer", text, pos)
            if tok < 1:
                raise ParseError("entries must be positive", text, pos)
        elif tok != kind:
            raise ParseError(f"expected {kind!r}", text, pos)
        i += 1
        return tok

    expect("[")
    a0 = expect("int")
    terms = []
    if tokens[i][0] == ";":
        i += 1
        while True:
            b = expect("int")
            expect("/")
            a = expect("int")
            terms.append((b, a))
            if tokens[i][0] != ",":
                break
            i += 1
    expect("]")
    tok, pos = tokens[i]
    if tok is not None:
        raise ParseError("trailing characters", text, pos)
    return GeneralizedCF(a0, tuple(terms))


def format_cf(cf: GeneralizedCF) -> str:
    if not cf.terms:
        return f"[{cf.a0}]"
    return f"[{cf.a0}; " + ", ".join(f"{b}/{a}" for b, a in cf.terms) + "]"
