"""Chain construction of paths of every length between node pairs.

Starting from a shortest path, each step scans consecutive pairs
``(p[i], p[i+1])`` from the source end and splices in the first common
neighbour of the pair that the path does not yet use. Every step adds one
edge, so a run that never gets stuck yields paths of all lengths from the
distance up to ``n - 1`` (the last one Hamiltonian).

Candidate order for a pair ``u -> v`` with ``d = v - u``:

``"lemma"`` (default)
    ``u + d - d*rho`` then ``u + d*rho``, followed by any further common
    neighbours in index order (only degenerate networks have them).
``"index"``
    all common neighbours in ascending node index.

Both orders reproduce the published rho -> 1 table on EJ(2+3rho); the
index order gets stuck on some distance-2 pairs of that network.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .eisenstein import format_label
from .errors import ChainStuck, NotAdjacent, PanconnectivityFailure
from .network import EJNetwork, eccentricity, lemma_common_neighbors, translation_map
from .path import Cycle, Path
from .pathfind import broadcast_list, shortest_path

ORDERS = ("lemma", "index")


@lru_cache(maxsize=16)
def _candidate_table(net: EJNetwork, order: str) -> dict[tuple[int, int], tuple[int, ...]]:
    if order not in ORDERS:
        raise ValueError(f"unknown candidate order {order!r}; expected one of {ORDERS}")
    sets = net.neighbor_sets
    table = {}
    for u, row in enumerate(net.adjacency):
        for v in row:
            common = sets[u] & sets[v]
            if order == "index":
                table[u, v] = tuple(sorted(common))
                continue
            cn1, cn2 = lemma_common_neighbors(net, u, v)
            head = tuple(dict.fromkeys(c for c in (cn2, cn1) if c in common))
            table[u, v] = head + tuple(sorted(common.difference(head)))
    return table


def prepare(net: EJNetwork, order: str = "lemma") -> None:
    """Precompute the per-edge candidate table (otherwise built on first use)."""
    _candidate_table(net, order)


def extension_candidates(net: EJNetwork, u: int, v: int, order: str = "lemma") -> tuple[int, ...]:
    return _candidate_table(net, order).get((u, v), ())


def _extend_in_place(table, nodes: list[int], used: set[int]) -> int:
    # returns insertion position, or -1 when stuck
    for i in range(len(nodes) - 1):
        for w in table.get((nodes[i], nodes[i + 1]), ()):
            if w not in used:
                nodes.insert(i + 1, w)
                used.add(w)
                return i + 1
    return -1


def chain_extend(net: EJNetwork, p: Path, order: str = "lemma") -> Path | None:
    """One chain step: the path lengthened by one node, or None if stuck."""
    nodes = list(p.nodes)
    pos = _extend_in_place(_candidate_table(net, order), nodes, set(nodes))
    return None if pos < 0 else Path(tuple(nodes))


@dataclass(frozen=True)
class PanEntry:
    """All chain paths between ``s`` and ``d``, stored compactly.

    Each chain step inserts exactly one node and never moves the others,
    so the whole ladder is recoverable from the final (Hamiltonian) path
    plus the step at which each of its nodes appeared.
    """

    s: int
    d: int
    final: tuple[int, ...]
    ranks: tuple[int, ...]

    @property
    def distance(self) -> int:
        return self.ranks.count(0) - 1

    @property
    def lengths(self) -> list[int]:
        return list(range(self.distance, len(self.final)))

    def path_of_length(self, length: int) -> Path:
        step = length - self.distance
        if not 0 <= step <= max(self.ranks):
            raise ValueError(f"no path of length {length} between {self.s} and {self.d}")
        return Path(tuple(v for v, r in zip(self.final, self.ranks) if r <= step))

    @property
    def paths(self) -> list[Path]:
        return [self.path_of_length(l) for l in self.lengths]

    def __len__(self):
        return len(self.final) - self.distance


def chain_algorithm(net: EJNetwork, shortest: Path, order: str = "lemma") -> PanEntry:
    """Grow ``shortest`` one node at a time up to a Hamiltonian path.

    Raises ``ChainStuck`` carrying the longest path reached when no
    consecutive pair has an unused common neighbour.
    """
    table = _candidate_table(net, order)
    nodes = list(shortest.nodes)
    ranks = [0] * len(nodes)
    used = set(nodes)
    if len(used) != len(nodes):
        raise ValueError("seed path is not simple")
    step = 0
    while len(nodes) < net.n:
        pos = _extend_in_place(table, nodes, used)
        if pos < 0:
            raise ChainStuck(Path(tuple(nodes)), net.n - 1)
        step += 1
        ranks.insert(pos, step)
    return PanEntry(shortest.start, shortest.end, tuple(nodes), tuple(ranks))


def chain_between(net: EJNetwork, s: int, d: int, order: str = "lemma") -> PanEntry:
    return chain_algorithm(net, shortest_path(net, s, d), order)


def transport(net: EJNetwork, entry: PanEntry, new_start: int) -> list[Path]:
    """Relocate every path of ``entry`` so that it starts at ``new_start``."""
    base = net.locate(net.nodes[entry.s] - net.nodes[new_start])
    perm = translation_map(net, base)
    return [Path(tuple(perm[v] for v in p.nodes)) for p in entry.paths]


@dataclass
class PanTable:
    net: EJNetwork
    entries: dict[tuple[int, int], PanEntry] = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, pair: tuple[int, int]) -> PanEntry:
        s, d = pair
        return self.entries[min(s, d), max(s, d)]

    def to_json_dict(self, lengths_only: bool = False) -> dict:
        g = self.net.generator
        return {
            "alpha": {"a": g.a, "b": g.b},
            "pairs": [entry_to_json_dict(self.net, e, lengths_only) for e in self.entries.values()],
        }

    def to_json(self, lengths_only: bool = False) -> str:
        return json.dumps(self.to_json_dict(lengths_only), separators=(",", ":"))


def _xy(net: EJNetwork, i: int) -> list[int]:
    p = net.nodes[i]
    return [p.x, p.y]


def entry_to_json_dict(net: EJNetwork, entry: PanEntry, lengths_only: bool = False) -> dict:
    out = {"s": _xy(net, entry.s), "d": _xy(net, entry.d), "lengths": entry.lengths}
    if not lengths_only:
        out["paths"] = [[_xy(net, v) for v in p.nodes] for p in entry.paths]
    return out


def _row(args) -> list[PanEntry] | PanconnectivityFailure:
    net, i, order = args
    row = []
    for j in range(i + 1, net.n):
        try:
            row.append(chain_between(net, i, j, order))
        except ChainStuck as exc:
            return PanconnectivityFailure((i, j), exc)
    return row


def panconnectivity_list(net: EJNetwork, order: str = "lemma", threads: int = 1) -> PanTable:
    """Chain entries for every unordered pair ``i < j``.

    With ``threads > 1`` rows are computed in worker processes; entries
    are merged in ``(i, j)`` order either way. Raises
    ``PanconnectivityFailure`` for the first failing pair.
    """
    table = PanTable(net)
    jobs = [(net, i, order) for i in range(net.n - 1)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_row, jobs))
    else:
        rows = map(_row, jobs)
    for i, row in enumerate(rows):
        if isinstance(row, PanconnectivityFailure):
            raise row
        for offset, entry in enumerate(row):
            table.entries[i, i + 1 + offset] = entry
    return table


@dataclass(frozen=True)
class RepresentativeOutcome:
    node: int
    hops: int
    ok: bool
    reached: int


@dataclass(frozen=True)
class CheckReport:
    panconnected: bool
    outcomes: tuple[RepresentativeOutcome, ...]

    def __bool__(self):
        return self.panconnected

    def lines(self, net: EJNetwork) -> list[str]:
        out = []
        for o in self.outcomes:
            status = "ok" if o.ok else f"STUCK at length {o.reached}"
            out.append(f"0 -> {net.label(o.node)} (distance {o.hops}): {status}")
        verdict = "PANCONNECTED" if self.panconnected else "NOT PANCONNECTED"
        out.append(f"{verdict} ({len(self.outcomes)} representatives)")
        return out


def check_panconnectivity(net: EJNetwork, order: str = "lemma") -> CheckReport:
    """Run the chain from node 0 to one representative per distance.

    Translation symmetry carries each successful ladder to every pair at
    the same difference, so this stands in for the all-pairs sweep.
    """
    outcomes = []
    for entry in broadcast_list(net, eccentricity(net)):
        try:
            chain_algorithm(net, entry.path, order)
            outcomes.append(RepresentativeOutcome(entry.node, entry.hops, True, net.n - 1))
        except ChainStuck as exc:
            outcomes.append(RepresentativeOutcome(entry.node, entry.hops, False, exc.path.length))
    return CheckReport(all(o.ok for o in outcomes), tuple(outcomes))


def pancycles(net: EJNetwork, s: int, d: int, order: str = "lemma") -> list[Cycle]:
    """Close every chain path of length >= 2 between adjacent s, d."""
    if not net.is_adjacent(s, d):
        raise NotAdjacent(f"{net.label(s)} and {net.label(d)} are not adjacent")
    entry = chain_algorithm(net, Path((s, d)), order)
    return [Cycle(p.nodes) for p in entry.paths if p.length >= 2]


def validate_path(net: EJNetwork, p: Path, s: int, d: int, length: int) -> bool:
    nodes = p.nodes
    if len(nodes) != length + 1 or nodes[0] != s or nodes[-1] != d:
        return False
    if len(set(nodes)) != len(nodes):
        return False
    return all(net.is_adjacent(u, v) for u, v in zip(nodes, nodes[1:]))


def validate_cycle(net: EJNetwork, c: Cycle) -> bool:
    nodes = c.nodes
    if len(nodes) < 3 or len(set(nodes)) != len(nodes):
        return False
    return all(net.is_adjacent(u, v) for u, v in zip(nodes, nodes[1:] + nodes[:1]))


def format_path(net: EJNetwork, p) -> str:
    return ", ".join(format_label(net.nodes[v]) for v in p.nodes)
