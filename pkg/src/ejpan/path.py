"""Path and cycle value types over dense node indices."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Path:
    """Ordered node indices; ``length`` counts edges."""

    nodes: tuple[int, ...]

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("a path needs at least one node")
        object.__setattr__(self, "nodes", tuple(self.nodes))

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def reversed(self) -> Path:
        return Path(self.nodes[::-1])


@dataclass(frozen=True)
class Cycle:
    """Closed walk stored without repeating the first node.

    ``length`` is the edge count including the closing edge, so it
    equals the number of nodes.
    """

    nodes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))

    @property
    def length(self) -> int:
        return len(self.nodes)
