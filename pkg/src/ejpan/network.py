"""Construction and inspection of Eisenstein-Jacobi networks."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .eisenstein import (
    RHO,
    UNIT_OFFSETS,
    ZERO,
    EJInt,
    Generator,
    canonical_key,
    format_label,
    hex_weight,
    mul,
    reduce,
    sub,
)
from .errors import ConstructionMismatch, FormulaGap
from .path import Path


@dataclass(frozen=True, eq=False)
class EJNetwork:
    """Immutable EJ graph over canonical residues.

    ``adjacency[i]`` lists neighbour indices in ``UNIT_OFFSETS`` order.
    """

    generator: Generator
    nodes: tuple[EJInt, ...]
    index_of: dict[EJInt, int] = field(repr=False)
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def diameter(self) -> int:
        return self.generator.diameter

    def label(self, i: int) -> str:
        return format_label(self.nodes[i])

    def locate(self, p: EJInt) -> int:
        """Index of the node holding the residue class of ``p``."""
        return self.index_of[reduce(p, self.generator)]

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adjacency)

    def is_adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v)) for u, row in enumerate(self.adjacency) for v in row})

    @cached_property
    def _bfs_rows(self) -> dict[int, list[int]]:
        return {}

    def bfs_distances(self, source: int) -> list[int]:
        rows = self._bfs_rows
        if source not in rows:
            dist = [-1] * self.n
            dist[source] = 0
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        queue.append(v)
            rows[source] = dist
        return rows[source]


def build(g: Generator) -> EJNetwork:
    """BFS closure of the zero residue under the six unit offsets."""
    g.require_network()
    seen = {ZERO}
    queue = deque([ZERO])
    while queue:
        u = queue.popleft()
        for off in UNIT_OFFSETS:
            v = reduce(u + off, g)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    if len(seen) != g.norm:
        raise ConstructionMismatch(f"found {len(seen)} residues, expected N = {g.norm}")
    nodes = tuple(sorted(seen, key=canonical_key))
    index_of = {p: i for i, p in enumerate(nodes)}
    adjacency = tuple(
        tuple(index_of[reduce(p + off, g)] for off in UNIT_OFFSETS) for p in nodes
    )
    return EJNetwork(g, nodes, index_of, adjacency)


def neighbors(net: EJNetwork, v: int) -> list[int]:
    return list(net.adjacency[v])


def common_neighbors(net: EJNetwork, u: int, v: int) -> list[int]:
    """Sorted intersection of the two neighbour sets."""
    return sorted(net.neighbor_sets[u] & net.neighbor_sets[v])


def lemma_common_neighbors(net: EJNetwork, u: int, v: int) -> tuple[int, int]:
    """The algebraic pair ``(u + d*rho, u + d - d*rho)`` with ``d = v - u``.

    For an edge these two nodes are adjacent to both endpoints; in a
    non-degenerate network they are the only common neighbours.
    """
    pu = net.nodes[u]
    delta = sub(net.nodes[v], pu)
    turn = mul(delta, RHO)
    return net.locate(pu + turn), net.locate(pu + delta - turn)


def distance(net: EJNetwork, u: int, v: int) -> int:
    return net.bfs_distances(u)[v]


def algebraic_distance(net: EJNetwork, u: int, v: int) -> int:
    """Minimum hexagonal weight over representatives of ``v - u``.

    The residue class is infinite; translates of the canonical
    representative by up to two generator multiples in each coordinate
    contain every member short enough to matter.
    """
    g = net.generator
    r = reduce(sub(net.nodes[v], net.nodes[u]), g)
    return min(
        hex_weight(sub(r, mul(EJInt(i, j), g.value)))
        for i in range(-2, 3)
        for j in range(-2, 3)
    )


def eccentricity(net: EJNetwork, v: int = 0) -> int:
    return max(net.bfs_distances(v))


@dataclass(frozen=True)
class DistanceProfile:
    """Node counts per distance ``0..k`` from a fixed node."""

    w: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.w) - 1

    @property
    def total(self) -> int:
        return sum(self.w)


def distance_profile(net: EJNetwork, source: int = 0) -> DistanceProfile:
    dist = net.bfs_distances(source)
    w = [0] * (max(dist) + 1)
    for d in dist:
        w[d] += 1
    return DistanceProfile(tuple(w))


def distance_profile_formula(g: Generator) -> DistanceProfile:
    """Closed-form distance distribution.

    Branch precedence: s = 0; s > k; s = t (integer t only, the remainder
    N - R); s = k with b = a mod 3; 1 <= s < t; t < s < k. Anything else
    raises ``FormulaGap``.
    """
    g.require_network()
    a, b, k, n = g.a, g.b, g.diameter, g.norm
    t = Fraction(a + b, 2)
    t_int = t.numerator if t.denominator == 1 else None

    def closed(s: int) -> int:
        if s == 0:
            return 1
        if s > k:
            return 0
        if s == k and (b - a) % 3 == 0:
            return 2
        if 1 <= s < t:
            return 6 * s
        if t < s < k:
            return 18 * (k - s)
        raise FormulaGap(f"distance {s} of {a}+{b}*r matches no branch (t = {t}, k = {k})")

    w = []
    for s in range(k + 1):
        if s == t_int:
            rest = sum(closed(r) for r in range(k + 1) if r != t_int)
            w.append(n - rest)
        else:
            w.append(closed(s))
    return DistanceProfile(tuple(w))


def translate(net: EJNetwork, path: Path, base: int) -> Path:
    """Subtract the residue of node ``base`` from every node of ``path``.

    Translation is a graph automorphism, so the image is a path of the
    same length starting at ``start - base``.
    """
    shift = net.nodes[base]
    return Path(tuple(net.locate(sub(net.nodes[m], shift)) for m in path.nodes))


def translation_map(net: EJNetwork, base: int) -> list[int]:
    """Node permutation ``i -> index of (nodes[i] - nodes[base])``."""
    shift = net.nodes[base]
    return [net.locate(sub(p, shift)) for p in net.nodes]


def relocate(net: EJNetwork, path: Path, new_start: int) -> Path:
    """Translate ``path`` so that it starts at ``new_start``."""
    offset = sub(net.nodes[path.start], net.nodes[new_start])
    return translate(net, path, net.locate(offset))


# --- export -----------------------------------------------------------------

def is_wraparound(net: EJNetwork, u: int, v: int) -> bool:
    """True if no unit offset reaches ``v`` from ``u`` without reduction."""
    pu, pv = net.nodes[u], net.nodes[v]
    return all(pu + off != pv for off in UNIT_OFFSETS)


def to_json_dict(net: EJNetwork) -> dict:
    g = net.generator
    return {
        "alpha": {"a": g.a, "b": g.b},
        "n": net.n,
        "diameter": g.diameter,
        "nodes": [[p.x, p.y] for p in net.nodes],
        "edges": [list(e) for e in net.edges()],
    }


def to_json(net: EJNetwork) -> str:
    return json.dumps(to_json_dict(net), indent=1)


def to_dot(net: EJNetwork) -> str:
    g = net.generator
    lines = [f'graph "EJ({g.a}+{g.b}*r)" {{']
    for i in range(net.n):
        lines.append(f'  {i} [label="{net.label(i)}"];')
    for u, v in net.edges():
        style = " [style=dashed]" if is_wraparound(net, u, v) else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
