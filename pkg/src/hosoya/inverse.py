"""Caterpillar-bond graphs with a prescribed Hosoya index.

Two constructions are offered:

``inverse_paper``
    One continued fraction per ``N/q`` (``q = 1 .. N-1``) built by
    :func:`paper_expansion`, grouped into isomorphism classes.

``inverse_exhaustive``
    Every spec ``D(x; y)`` with index ``N``, found by depth-first search.
    ``Z_k`` grows strictly along the spine, so a branch dies as soon as it
    overshoots ``N``.

Classes are keyed by the canonical code of the expanded multigraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caterpillar import (
    CaterpillarBondSpec,
    canonical_spec,
    expand_spec,
    spec_from_cf,
    z_fast,
)
from .contfrac import GeneralizedCF
from .multigraph import canonical_tree_code

__all__ = ["InverseClass", "paper_expansion", "inverse_paper", "inverse_exhaustive", "enumerate_specs"]


@dataclass(frozen=True)
class InverseClass:
    """One isomorphism class of caterpillar-bond graphs with index ``z``.

    ``members`` lists the ``(q, cf)`` witnesses in paper mode and is empty in
    exhaustive mode.
    """

    representative: CaterpillarBondSpec
    z: int
    code: bytes
    members: tuple[tuple[int, GeneralizedCF], ...] = ()

    @property
    def member_qs(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.members)

    @property
    def vertex_count(self) -> int:
        return self.representative.vertex_count


def paper_expansion(N: int, q: int) -> GeneralizedCF:
    """The continued fraction used for ``N/q``, with numerator exactly ``N``.

    ``q = 1`` gives ``[N]``.  For ``q <= N/2`` the integer part is split off
    once; a remainder of zero borrows one unit (``[a0 - 1; q/q]``).  For
    ``q > N/2`` the expansion is ``1 + 1/(q/(N - q))`` with the inner
    fraction split once the same way, including the borrow when ``N - q``
    divides ``q``.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    if not isinstance(q, int) or not (1 <= q <= max(1, N - 1)):
        raise ValueError(f"q must satisfy 1 <= q <= {max(1, N - 1)}, got {q!r}")
    if q == 1:
        return GeneralizedCF(N)
    if 2 * q <= N:
        a0, r = divmod(N, q)
        if r:
            return GeneralizedCF(a0, ((r, q),))
        return GeneralizedCF(a0 - 1, ((q, q),))
    d = N - q
    a1, r1 = divmod(q, d)
    if r1:
        return GeneralizedCF(1, ((1, a1), (r1, d)))
    if d == 1:
        return GeneralizedCF(1, ((1, a1),))
    # [1; 1/a1] would only reach N/d here, so borrow a unit as above
    return GeneralizedCF(1, ((1, a1 - 1), (d, d)))


def inverse_paper(N: int) -> list[InverseClass]:
    """Group the ``paper_expansion(N, q)`` graphs into isomorphism classes.

    Classes come out ordered by their smallest member ``q``.
    """
    groups: dict[bytes, list[tuple[int, GeneralizedCF, CaterpillarBondSpec]]] = {}
    for q in range(1, max(1, N - 1) + 1):
        cf = paper_expansion(N, q)
        spec = spec_from_cf(cf)
        code = canonical_tree_code(expand_spec(spec))
        groups.setdefault(code, []).append((q, cf, spec))
    classes = []
    for code, items in groups.items():
        rep = min((canonical_spec(s) for _, _, s in items), key=_spec_order)
        classes.append(
            InverseClass(rep, z_fast(rep), code, tuple((q, cf) for q, cf, _ in items))
        )
    classes.sort(key=lambda c: c.member_qs[0])
    return classes


def _spec_order(s: CaterpillarBondSpec) -> tuple:
    return (s.vertex_count, s.n, s.x, s.y)


def enumerate_specs(N: int, max_spine: int | None = None):
    """Yield every spec with ``z_fast == N`` (and spine length <= ``max_spine``)."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    x: list[int] = []
    y: list[int] = []

    def extend(z_prev: int, z_cur: int):
        # z_cur < N here; Z_{k+1} = x * z_cur + y * z_prev is increasing in x and y
        if max_spine is not None and len(x) >= max_spine:
            return
        for yk in range(1, (N - z_cur) // z_prev + 1):
            if z_cur + yk * z_prev > N:
                break
            for xk in range(1, (N - yk * z_prev) // z_cur + 1):
                z_next = xk * z_cur + yk * z_prev
                x.append(xk)
                y.append(yk)
                if z_next == N:
                    yield CaterpillarBondSpec(tuple(x), tuple(y))
                else:
                    yield from extend(z_cur, z_next)
                x.pop()
                y.pop()

    for x1 in range(1, N + 1):
        x.append(x1)
        if x1 == N:
            yield CaterpillarBondSpec((x1,))
        else:
            yield from extend(1, x1)
        x.pop()


def inverse_exhaustive(N: int, max_spine: int | None = None) -> list[InverseClass]:
    """All isomorphism classes of caterpillar-bond graphs with index ``N``.

    Classes are sorted by vertex count, then spine length, then entries of
    the representative.
    """
    reps: dict[bytes, CaterpillarBondSpec] = {}
    for spec in enumerate_specs(N, max_spine):
        code = canonical_tree_code(expand_spec(spec))
        cand = canonical_spec(spec)
        best = reps.get(code)
        if best is None or _spec_order(cand) < _spec_order(best):
            reps[code] = cand
    classes = [InverseClass(rep, z_fast(rep), code) for code, rep in reps.items()]
    classes.sort(key=lambda c: _spec_order(c.representative))
    return classes
