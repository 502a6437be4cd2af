"""Brute-force ground truth for small networks.

Exhaustive depth-first enumeration of simple paths, independent of the
chain construction, used to cross-check chain output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BudgetExceeded, NetworkTooLarge
from .network import EJNetwork
from .panconnectivity import PanTable, validate_path

DEFAULT_NODE_CAP = 13


@dataclass(frozen=True)
class LengthSpectrum:
    s: int
    d: int
    achievable: frozenset[int]


def enumerate_lengths(
    net: EJNetwork,
    s: int,
    d: int,
    node_cap: int = DEFAULT_NODE_CAP,
    budget: int | None = None,
) -> LengthSpectrum:
    """Set of lengths of all simple ``s -> d`` paths.

    The search stops early only once every length in
    ``[dist(s, d), n - 1]`` has been witnessed, since no simple path can
    fall outside that range; the result is exact either way. ``budget``
    caps the number of DFS nodes expanded.
    """
    if net.n > node_cap:
        raise NetworkTooLarge(f"n = {net.n} exceeds node cap {node_cap}")
    if s == d:
        raise ValueError("source and destination must differ")
    lo = net.bfs_distances(s)[d]
    full = net.n - 1 - lo + 1
    adjacency = net.adjacency
    found: set[int] = set()
    on_path = [False] * net.n
    on_path[s] = True
    expanded = 0

    # explicit stack of (node, depth, neighbour iterator)
    stack = [(s, 0, iter(adjacency[s]))]
    while stack and len(found) < full:
        u, depth, it = stack[-1]
        v = next(it, None)
        if v is None:
            on_path[u] = False
            stack.pop()
            continue
        if on_path[v]:
            continue
        if v == d:
            found.add(depth + 1)
            continue
        expanded += 1
        if budget is not None and expanded > budget:
            raise BudgetExceeded(f"more than {budget} partial paths expanded for ({s}, {d})")
        on_path[v] = True
        stack.append((v, depth + 1, iter(adjacency[v])))
    return LengthSpectrum(s, d, frozenset(found))


@dataclass
class CrossCheckReport:
    alpha: tuple[int, int]
    pairs_checked: int = 0
    discrepancies: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_text(self) -> str:
        a, b = self.alpha
        head = f"EJ({a}+{b}*r): {self.pairs_checked} pairs checked, {len(self.discrepancies)} discrepancies"
        return "\n".join([head, *("  " + d for d in self.discrepancies)])

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha": {"a": self.alpha[0], "b": self.alpha[1]},
                "pairs_checked": self.pairs_checked,
                "discrepancies": self.discrepancies,
                "ok": self.ok,
            },
            indent=1,
        )


def cross_check(
    net: EJNetwork,
    table: PanTable,
    node_cap: int = DEFAULT_NODE_CAP,
    budget: int | None = None,
) -> CrossCheckReport:
    g = net.generator
    report = CrossCheckReport((g.a, g.b))
    n = net.n
    for i in range(n):
        for j in range(i + 1, n):
            report.pairs_checked += 1
            entry = table.entries.get((i, j))
            tag = f"({net.label(i)}, {net.label(j)})"
            if entry is None:
                report.discrepancies.append(f"{tag}: missing from table")
                continue
            spectrum = enumerate_lengths(net, i, j, node_cap, budget)
            dist = net.bfs_distances(i)[j]
            chain_lengths = set()
            for p in entry.paths:
                chain_lengths.add(p.length)
                if not validate_path(net, p, i, j, p.length):
                    report.discrepancies.append(f"{tag}: invalid path of length {p.length}")
            if not chain_lengths <= spectrum.achievable:
                extra = sorted(chain_lengths - spectrum.achievable)
                report.discrepancies.append(f"{tag}: lengths {extra} not achievable")
            if chain_lengths != set(range(dist, n)):
                report.discrepancies.append(
                    f"{tag}: chain lengths {sorted(chain_lengths)} != {dist}..{n - 1}"
                )
            if spectrum.achievable != set(range(dist, n)):
                report.discrepancies.append(
                    f"{tag}: enumerated lengths {sorted(spectrum.achievable)} != {dist}..{n - 1}"
                )
    return report
