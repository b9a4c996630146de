"""Small undirected multigraphs and the Hosoya index engine.

Parallel edges between the same two vertices are stored as one *bond* that
carries a positive integer multiplicity (the bond order).  A matching may use
a bond at most once; choosing a bond of multiplicity ``m`` counts as ``m``
different choices, one per parallel strand.

Two independent routes compute the Hosoya index:

* :func:`matching_counts` enumerates matchings vertex by vertex over bitmasks
  and is exponential, so it refuses graphs above :data:`ORACLE_VERTEX_CAP`.
* :func:`hosoya_index` applies the bond-deletion recurrence
  ``Z(G) = Z(G - e) + m * Z(G - {u, v})`` with a memo keyed on canonical
  codes, and multiplies over connected components.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError, SizeLimitError, UnsupportedStructureError

__all__ = [
    "ORACLE_VERTEX_CAP",
    "ISOMORPHISM_VERTEX_CAP",
    "Multigraph",
    "matching_counts",
    "hosoya_index",
    "remove_bond",
    "remove_vertices",
    "disjoint_union",
    "path_graph",
    "cycle_graph",
    "canonical_tree_code",
    "is_isomorphic",
    "isomorphic_by_search",
    "parse_edgelist",
    "format_edgelist",
    "to_dot",
]

ORACLE_VERTEX_CAP = 24
ISOMORPHISM_VERTEX_CAP = 12

Bond = tuple[int, int, int]


@dataclass(frozen=True)
class Multigraph:
    """Immutable multigraph on vertices ``0 .. vertex_count - 1``.

    ``bonds`` holds ``(u, v, m)`` triples.  They are normalised on
    construction to ``u < v`` and sorted, so two graphs with the same labelled
    bonds compare equal.
    """

    vertex_count: int
    bonds: tuple[Bond, ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex_count must be a nonnegative integer, got {n!r}")
        seen: dict[tuple[int, int], int] = {}
        for bond in self.bonds:
            u, v, m = bond
            for item in (u, v, m):
                if not isinstance(item, int) or isinstance(item, bool):
                    raise ValueError(f"bond entries must be integers: {bond!r}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bond {bond!r} references a vertex outside 0..{n - 1}")
            if m < 1:
                raise ValueError(f"bond multiplicity must be >= 1: {bond!r}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate bond record for pair {key}")
            seen[key] = m
        object.__setattr__(
            self, "bonds", tuple(sorted((u, v, m) for (u, v), m in seen.items()))
        )

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        """Build from ``(u, v)`` or ``(u, v, m)`` items, summing repeated pairs."""
        merged: dict[tuple[int, int], int] = {}
        for edge in edges:
            u, v = edge[0], edge[1]
            m = edge[2] if len(edge) > 2 else 1
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + m
        return cls(vertex_count, tuple((u, v, m) for (u, v), m in merged.items()))

    @classmethod
    def _trusted(cls, vertex_count: int, bonds: tuple[Bond, ...]) -> "Multigraph":
        # bonds already normalised and sorted by the caller
        g = object.__new__(cls)
        object.__setattr__(g, "vertex_count", vertex_count)
        object.__setattr__(g, "bonds", bonds)
        return g

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        """Per-vertex map of neighbour to bond multiplicity."""
        adj: list[dict[int, int]] = [{} for _ in range(self.vertex_count)]
        for u, v, m in self.bonds:
            adj[u][v] = m
            adj[v][u] = m
        return tuple(adj)

    def multiplicity(self, u: int, v: int) -> int:
        """Bond order between ``u`` and ``v``; 0 when they are not bonded."""
        return self.adjacency[u].get(v, 0)

    def degree(self, v: int) -> int:
        """Number of distinct neighbours of ``v`` (bundles count once)."""
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return sum(m for _, _, m in self.bonds)

    def components(self) -> list[list[int]]:
        """Vertex sets of connected components, each sorted, ordered by min vertex."""
        return [list(c) for c in self._components]

    @cached_property
    def _components(self) -> tuple[tuple[int, ...], ...]:
        adj = self.adjacency
        seen = [False] * self.vertex_count
        comps = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self._components) <= 1

    def is_multitree(self) -> bool:
        """Connected, non-empty, and acyclic once bundles collapse to single edges."""
        n = self.vertex_count
        return n >= 1 and len(self.bonds) == n - 1 and self.is_connected()

    def induced(self, vertices: Iterable[int]) -> "Multigraph":
        """Subgraph on ``vertices``, renumbered in increasing id order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        bonds = tuple(
            (index[u], index[v], m)
            for u, v, m in self.bonds
            if u in index and v in index
        )
        return Multigraph._trusted(len(keep), bonds)


def remove_bond(g: Multigraph, u: int, v: int) -> Multigraph:
    """Delete the whole bundle between ``u`` and ``v``; vertex ids are unchanged."""
    if g.multiplicity(u, v) == 0:
        raise ValueError(f"no bond between {u} and {v}")
    a, b = min(u, v), max(u, v)
    return Multigraph._trusted(
        g.vertex_count, tuple(bd for bd in g.bonds if (bd[0], bd[1]) != (a, b))
    )


def remove_vertices(g: Multigraph, vertices: Iterable[int]) -> Multigraph:
    """Delete ``vertices`` and their bonds; survivors keep their relative order."""
    drop = set(vertices)
    for v in drop:
        if not (0 <= v < g.vertex_count):
            raise ValueError(f"vertex {v} not in graph")
    return g.induced(v for v in range(g.vertex_count) if v not in drop)


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    bonds = []
    offset = 0
    for g in graphs:
        bonds.extend((u + offset, v + offset, m) for u, v, m in g.bonds)
        offset += g.vertex_count
    return Multigraph(offset, tuple(bonds))


def path_graph(n: int, multiplicity: int = 1) -> Multigraph:
    """Path on ``n`` vertices with every bond of the given order."""
    return Multigraph(n, tuple((i, i + 1, multiplicity) for i in range(n - 1)))


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Multigraph(n, tuple((i, (i + 1) % n, 1) for i in range(n)))


# ---------------------------------------------------------------------------
# Matching counts (exhaustive oracle)
# ---------------------------------------------------------------------------

def matching_counts(g: Multigraph, cap: int = ORACLE_VERTEX_CAP) -> list[int]:
    """Return ``[p(G,0), p(G,1), ...]``, trailing zeros stripped.

    The lowest free vertex is either left unmatched or matched along one of
    its bonds (``m`` ways for a bond of order ``m``).  Subproblems are keyed on
    the bitmask of free vertices.
    """
    n = g.vertex_count
    if n > cap:
        raise SizeLimitError(f"matching_counts is capped at {cap} vertices, graph has {n}")
    adj = [sorted(d.items()) for d in g.adjacency]
    memo: dict[int, list[int]] = {0: [1]}

    def count(mask: int) -> list[int]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        total = list(count(rest))
        for u, m in adj[v]:
            if rest >> u & 1:
                sub = count(rest & ~(1 << u))
                if len(total) < len(sub) + 1:
                    total.extend([0] * (len(sub) + 1 - len(total)))
                for k, c in enumerate(sub):
                    total[k + 1] += m * c
        memo[mask] = total
        return total

    return count((1 << n) - 1)


# ---------------------------------------------------------------------------
# Hosoya index via bond deletion
# ---------------------------------------------------------------------------

def hosoya_index(g: Multigraph) -> int:
    """Hosoya index Z of ``g``; the empty graph has Z = 1."""
    return _index(g, {})


def _index(g: Multigraph, memo: dict) -> int:
    if not g.bonds:
        return 1
    comps = g._components
    if len(comps) == 1:
        return _connected_index(g, memo)
    z = 1
    for comp in comps:
        if len(comp) > 1:
            z *= _connected_index(g.induced(comp), memo)
    return z


def _connected_index(g: Multigraph, memo: dict) -> int:
    if len(g.bonds) == 1:
        return 1 + g.bonds[0][2]
    # g is connected here, so it is a multitree iff it has n - 1 bonds
    if len(g.bonds) == g.vertex_count - 1:
        key = _tree_code(g)
    else:
        key = (g.vertex_count, g.bonds)
    hit = memo.get(key)
    if hit is not None:
        return hit
    u, v, m = _pick_bond(g)
    z = _index(remove_bond(g, u, v), memo) + m * _index(remove_vertices(g, (u, v)), memo)
    memo[key] = z
    return z


def _pick_bond(g: Multigraph) -> Bond:
    # highest order first; among ties prefer pendant bonds, which keep trees shallow
    return max(
        g.bonds,
        key=lambda b: (b[2], -min(g.degree(b[0]), g.degree(b[1])), -b[0], -b[1]),
    )


# ---------------------------------------------------------------------------
# Canonical codes and isomorphism
# ---------------------------------------------------------------------------

def _tree_centers(g: Multigraph) -> list[int]:
    n = g.vertex_count
    if n <= 2:
        return list(range(n))
    degree = [g.degree(v) for v in range(n)]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Multigraph, root: int, blocked: int | None = None) -> str:
    parent = {root: blocked}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w != parent[v] and w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    codes: dict[int, list[str]] = {v: [] for v in order}
    done: dict[int, str] = {}
    for v in reversed(order):
        done[v] = "(" + "".join(sorted(codes[v])) + ")"
        p = parent[v]
        if p is not None and p != blocked:
            codes[p].append(f"{g.multiplicity(p, v)}:{done[v]}")
    return done[root]


def canonical_tree_code(g: Multigraph) -> bytes:
    """Canonical AHU-style code of a multitree, rooted at its centre.

    Each child subtree is tagged with the order of the bond leading to it.
    Two-centre trees are encoded through the central bond, with the two
    halves in sorted order.  Equal codes hold exactly for isomorphic
    multitrees.
    """
    if not g.is_multitree():
        raise UnsupportedStructureError("canonical_tree_code needs a connected acyclic multigraph")
    return _tree_code(g)


def _tree_code(g: Multigraph) -> bytes:
    centers = _tree_centers(g)
    if len(centers) == 1:
        code = "V" + _rooted_code(g, centers[0])
    else:
        a, b = centers
        halves = sorted((_rooted_code(g, a, blocked=b), _rooted_code(g, b, blocked=a)))
        code = f"E{g.multiplicity(a, b)}" + halves[0] + halves[1]
    return code.encode("ascii")


def _vertex_signature(g: Multigraph, v: int) -> tuple:
    return (g.degree(v), tuple(sorted(g.adjacency[v].values())))


def _graph_invariants(g: Multigraph) -> tuple:
    return (
        g.vertex_count,
        tuple(sorted(m for _, _, m in g.bonds)),
        tuple(sorted(_vertex_signature(g, v) for v in range(g.vertex_count))),
    )


def isomorphic_by_search(
    g1: Multigraph, g2: Multigraph, cap: int = ISOMORPHISM_VERTEX_CAP
) -> bool:
    """Backtracking search for a multiplicity-preserving vertex bijection."""
    n = g1.vertex_count
    if n != g2.vertex_count:
        return False
    if n > cap:
        raise SizeLimitError(f"permutation isomorphism search is capped at {cap} vertices")
    if _graph_invariants(g1) != _graph_invariants(g2):
        return False

    sig2: dict[tuple, list[int]] = {}
    for w in range(n):
        sig2.setdefault(_vertex_signature(g2, w), []).append(w)
    # BFS order means most vertices have a mapped neighbour when placed
    order: list[int] = []
    placed = set()
    for start in sorted(range(n), key=lambda v: -g1.degree(v)):
        if start in placed:
            continue
        queue = deque([start])
        placed.add(start)
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g1.adjacency[v]):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in sig2[_vertex_signature(g1, v)]:
            if w in used:
                continue
            if all(g1.multiplicity(v, a) == g2.multiplicity(w, b) for a, b in mapping.items()):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def is_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    """Multigraph isomorphism: canonical codes for multitrees, search otherwise."""
    if _graph_invariants(g1) != _graph_invariants(g2):
        return False
    t1, t2 = g1.is_multitree(), g2.is_multitree()
    if t1 and t2:
        return canonical_tree_code(g1) == canonical_tree_code(g2)
    if t1 != t2:
        return False
    return isomorphic_by_search(g1, g2)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def parse_edgelist(text: str) -> Multigraph:
    """Parse the ``v <count>`` / ``e <u> <v> [m]`` edge-list format.

    ``#`` starts a comment.  Repeated pairs add their multiplicities.
    """
    vertex_count = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        fields = body.split()
        pos = offset + len(body) - len(body.lstrip())
        offset += len(line)
        if not fields:
            continue
        tag, args = fields[0], fields[1:]
        try:
            values = [int(a) for a in args]
        except ValueError:
            raise ParseError("non-integer field", text, pos) from None
        if vertex_count is None:
            if tag != "v" or len(values) != 1 or values[0] < 0:
                raise ParseError("expected 'v <count>' header", text, pos)
            vertex_count = values[0]
            continue
        if tag != "e" or len(values) not in (2, 3):
            raise ParseError("expected 'e <u> <v> [m]'", text, pos)
        u, v = values[0], values[1]
        m = values[2] if len(values) == 3 else 1
        if u == v or not (0 <= u < vertex_count and 0 <= v < vertex_count) or m < 1:
            raise ParseError("invalid bond", text, pos)
        edges.append((u, v, m))
    if vertex_count is None:
        raise ParseError("missing 'v <count>' header", text, len(text))
    return Multigraph.from_edges(vertex_count, edges)


def format_edgelist(g: Multigraph) -> str:
    lines = [f"v {g.vertex_count}"]
    lines.extend(f"e {u} {v} {m}" for u, v, m in g.bonds)
    return "\n".join(lines) + "\n"


def to_dot(g: Multigraph, name: str = "G") -> str:
    """Graphviz DOT text; a bond of order m becomes m parallel edges."""
    lines = [f"graph {name} {{", '  node [shape=circle, label=""];']
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    for u, v, m in g.bonds:
        lines.extend(f"  {u} -- {v};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"
