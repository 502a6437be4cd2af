"""Breadth-first shortest paths and the per-distance broadcast list.

Both routines are plain BFS with a visited set; neighbours are scanned in
the network's fixed offset order, so the first-discovered parent wins and
results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import IncompleteList
from .network import EJNetwork
from .path import Path


def _bfs_parents(net: EJNetwork, source: int, stop: int | None = None) -> dict[int, int | None]:
    parent: dict[int, int | None] = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in net.adjacency[u]:
            if v not in parent:
                parent[v] = u
                if v == stop:
                    return parent
                queue.append(v)
    return parent


def _trace(parent: dict[int, int | None], target: int) -> Path:
    out = [target]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return Path(tuple(reversed(out)))


def shortest_path(net: EJNetwork, s: int, d: int) -> Path:
    if s == d:
        return Path((s,))
    parent = _bfs_parents(net, s, stop=d)
    if d not in parent:
        raise ValueError(f"node {d} unreachable from {s}")
    return _trace(parent, d)


@dataclass(frozen=True)
class BroadcastEntry:
    node: int
    hops: int
    path: Path


def broadcast_list(net: EJNetwork, k: int | None = None) -> list[BroadcastEntry]:
    """First node discovered at each distance ``1..k`` from node 0."""
    if k is None:
        k = net.diameter
    parent: dict[int, int | None] = {0: None}
    hops = {0: 0}
    entries: list[BroadcastEntry] = []
    queue = deque([0])
    while queue and len(entries) < k:
        u = queue.popleft()
        for v in net.adjacency[u]:
            if v in parent:
                continue
            parent[v] = u
            hops[v] = hops[u] + 1
            if hops[v] == len(entries) + 1:
                entries.append(BroadcastEntry(v, hops[v], _trace(parent, v)))
            queue.append(v)
    if len(entries) < k:
        raise IncompleteList(f"no node found at distance {len(entries) + 1} (k = {k})")
    return entries
