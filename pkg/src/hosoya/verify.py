"""Cross-checks between the fast recurrences and the general graph engine.

Each ``check_*`` function returns a list of human-readable discrepancy
messages; an empty list means every route agreed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .caterpillar import CaterpillarBondSpec, continuant, expand_spec, z_fast
from .multigraph import (
    ORACLE_VERTEX_CAP,
    Multigraph,
    disjoint_union,
    hosoya_index,
    matching_counts,
    remove_bond,
    remove_vertices,
)

__all__ = [
    "all_specs",
    "random_spec",
    "random_multigraph",
    "random_multitree",
    "check_spec",
    "check_lemma",
    "VerificationReport",
    "run_verification",
]


def all_specs(max_n: int, max_entry: int):
    """Every spec with spine length ``1..max_n`` and entries in ``1..max_entry``."""
    values = range(1, max_entry + 1)
    for n in range(1, max_n + 1):
        for x in itertools.product(values, repeat=n):
            for y in itertools.product(values, repeat=n - 1):
                yield CaterpillarBondSpec(x, y)


def random_spec(rng: random.Random, max_n: int, max_entry: int) -> CaterpillarBondSpec:
    n = rng.randint(1, max_n)
    return CaterpillarBondSpec(
        tuple(rng.randint(1, max_entry) for _ in range(n)),
        tuple(rng.randint(1, max_entry) for _ in range(n - 1)),
    )


def random_multigraph(
    rng: random.Random, max_vertices: int = 10, max_multiplicity: int = 4, density: float | None = None
) -> Multigraph:
    n = rng.randint(0, max_vertices)
    p = rng.uniform(0.1, 0.6) if density is None else density
    bonds = [
        (u, v, rng.randint(1, max_multiplicity))
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return Multigraph(n, tuple(bonds))


def random_multitree(rng: random.Random, n: int, max_multiplicity: int = 3) -> Multigraph:
    """Uniform random attachment tree on ``n`` vertices, shuffled labels."""
    labels = list(range(n))
    rng.shuffle(labels)
    bonds = [
        (labels[v], labels[rng.randrange(v)], rng.randint(1, max_multiplicity))
        for v in range(1, n)
    ]
    return Multigraph(n, tuple(bonds))


def check_spec(s: CaterpillarBondSpec, cap: int = ORACLE_VERTEX_CAP) -> list[str]:
    """Compare z_fast, the continuant, bond deletion and matching enumeration."""
    zf = z_fast(s)
    g = expand_spec(s)
    values = {"continuant": continuant(s), "hosoya_index": hosoya_index(g)}
    if g.vertex_count <= cap:
        values["matching_counts"] = sum(matching_counts(g, cap))
    return [f"{s}: z_fast={zf} but {name}={v}" for name, v in values.items() if v != zf]


def _oracle_index(g: Multigraph) -> int:
    if g.vertex_count <= ORACLE_VERTEX_CAP:
        return sum(matching_counts(g))
    return hosoya_index(g)


def check_lemma(g: Multigraph) -> list[str]:
    """Edge, vertex and component relations, evaluated with matching counts.

    Also confirms that :func:`hosoya_index` agrees with the matching sum.
    """
    problems = []
    z = _oracle_index(g)
    if hosoya_index(g) != z:
        problems.append(f"hosoya_index disagrees with matching counts on {g}")
    for u, v, m in g.bonds:
        rhs = _oracle_index(remove_bond(g, u, v)) + m * _oracle_index(remove_vertices(g, (u, v)))
        if rhs != z:
            problems.append(f"edge relation fails on bond {(u, v, m)} of {g}: {z} != {rhs}")
    for v in range(g.vertex_count):
        rhs = _oracle_index(remove_vertices(g, (v,))) + sum(
            m * _oracle_index(remove_vertices(g, (v, w))) for w, m in g.adjacency[v].items()
        )
        if rhs != z:
            problems.append(f"vertex relation fails at {v} of {g}: {z} != {rhs}")
    product = 1
    for comp in g.components():
        product *= _oracle_index(g.induced(comp))
    if product != z:
        problems.append(f"component product fails on {g}: {z} != {product}")
    return problems


@dataclass
class VerificationReport:
    specs_checked: int = 0
    graphs_checked: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def run_verification(
    max_n: int, max_entry: int, seed: int = 0, random_graphs: int = 0, stop_early: bool = True
) -> VerificationReport:
    """Exhaustive spec sweep plus ``random_graphs`` seeded multigraph checks."""
    report = VerificationReport()
    for s in all_specs(max_n, max_entry):
        report.specs_checked += 1
        report.problems.extend(check_spec(s))
        if stop_early and report.problems:
            return report
    rng = random.Random(seed)
    for _ in range(random_graphs):
        g = random_multigraph(rng)
        report.graphs_checked += 1
        report.problems.extend(check_lemma(g))
        # union with a second graph exercises the product rule across components
        h = random_multigraph(rng, max_vertices=4)
        if hosoya_index(disjoint_union(g, h)) != _oracle_index(g) * _oracle_index(h):
            report.problems.append(f"disjoint union product fails for {g} and {h}")
        if stop_early and report.problems:
            return report
    return report
