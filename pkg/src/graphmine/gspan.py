"""Frequent subgraph mining by canonical DFS-code search.

The search tree has one node per DFS code; children are right-most
extensions sorted ascending, and a node is expanded only when its code is
minimal, so every frequent pattern is visited exactly once, at its
canonical form, in pre-order.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field

from .dfscode import DFSCode, is_min
from .embeddings import (
    child_sort_key,
    containing_graphs,
    frequent_single_edges,
    rightmost_extensions,
    support,
)
from .graphs import GraphDatabase

MODES = ("frequent", "closed", "closed_no_etf")


@dataclass
class MiningConfig:
    """Parameters shared by both miners.

    min_support: a float in (0, 1] is a fraction of the database (threshold
    ceil(fraction * |D|)); an int >= 1 is an absolute graph count.
    """

    min_support: float | int = 2
    mode: str = "frequent"
    emit_embeddings: bool = False
    max_pattern_edges: int | None = None
    # Closed mining keeps each stored pattern's embeddings for reuse in the
    # termination test; False trades that memory for reprojection time.
    cache_closed_embeddings: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        s = self.min_support
        if isinstance(s, bool) or not isinstance(s, (int, float)):
            raise ValueError(f"min_support must be int or float, got {s!r}")
        if isinstance(s, int):
            if s < 1:
                raise ValueError("absolute min_support must be >= 1")
        elif not 0.0 < s <= 1.0:
            raise ValueError("fractional min_support must be in (0, 1]")

    def min_frequency(self, db_size: int) -> int:
        if isinstance(self.min_support, int):
            return self.min_support
        return max(1, math.ceil(self.min_support * db_size))


@dataclass
class MinedPattern:
    """One emitted pattern: canonical code plus its database statistics.

    ``containing_graphs`` holds dense internal graph ids; serialization maps
    them back to the ids of the source file.
    """

    code: DFSCode
    support: int
    occurrence: int
    containing_graphs: list[int]
    discovery_index: int
    embeddings: list | None = None


@dataclass
class MiningStats:
    """Counters filled during one mining run."""

    visited_nodes: int = 0
    pattern_count: int = 0
    early_terminations_applied: int = 0
    early_terminations_rejected: int = 0
    trie_size: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class _GraphView:
    """A graph with part of its adjacency masked out."""

    __slots__ = ("gid", "vlabels", "edges", "adj")

    def __init__(self, g, adj):
        self.gid = g.gid
        self.vlabels = g.vlabels
        self.edges = g.edges
        self.adj = adj


class _DatabaseView:
    __slots__ = ("graphs", "original_ids")

    def __init__(self, graphs, original_ids):
        self.graphs = graphs
        self.original_ids = original_ids


def pruned_view(db: GraphDatabase, min_freq: int):
    """Mask edges whose 1-edge pattern is infrequent.

    A pattern containing an edge is at most as frequent as that edge's own
    1-edge pattern, so masked edges cannot occur in any frequent pattern and
    extension scans may skip them. Edge ids of surviving edges are untouched.
    """
    gids: dict[tuple, set[int]] = {}
    for g in db.graphs:
        vl = g.vlabels
        for u, v, elb in g.edges:
            lu, lv = vl[u], vl[v]
            trip = (lu, elb, lv) if lu <= lv else (lv, elb, lu)
            gids.setdefault(trip, set()).add(g.gid)
    frequent = {t for t, s in gids.items() if len(s) >= min_freq}

    graphs = []
    for g in db.graphs:
        vl = g.vlabels
        adj = []
        for u in range(len(vl)):
            lu = vl[u]
            kept = []
            for e in g.adj[u]:
                lv = vl[e[1]]
                trip = (lu, e[3], lv) if lu <= lv else (lv, e[3], lu)
                if trip in frequent:
                    kept.append(e)
            adj.append(kept)
        graphs.append(_GraphView(g, adj))
    return _DatabaseView(graphs, db.original_ids)


def _ensure_recursion_headroom():
    if sys.getrecursionlimit() < 20000:
        sys.setrecursionlimit(20000)


def mine_frequent(
    db: GraphDatabase,
    config: MiningConfig | None = None,
    stats: MiningStats | None = None,
) -> list[MinedPattern]:
    """All frequent connected patterns with >= 1 edge, in pre-order."""
    config = config or MiningConfig()
    stats = stats if stats is not None else MiningStats()
    min_freq = config.min_frequency(len(db.graphs))
    max_edges = config.max_pattern_edges
    view = pruned_view(db, min_freq)
    out: list[MinedPattern] = []
    _ensure_recursion_headroom()

    def emit(code: list, projected: list) -> None:
        pattern = MinedPattern(
            code=DFSCode(code),
            support=support(projected),
            occurrence=len(projected),
            containing_graphs=containing_graphs(projected),
            discovery_index=len(out),
            embeddings=list(projected) if config.emit_embeddings else None,
        )
        out.append(pattern)
        stats.pattern_count += 1

    def submine(code: list, projected: list) -> None:
        if not is_min(code):
            return
        stats.visited_nodes += 1
        emit(code, projected)
        if max_edges is not None and len(code) >= max_edges:
            return
        exts = rightmost_extensions(code, projected, view, restricted=True)
        children = sorted(
            (t for t, bucket in exts.items() if support(bucket) >= min_freq),
            key=child_sort_key,
        )
        for t in children:
            code.append(t)
            submine(code, exts[t])
            code.pop()

    for root_code, projected in frequent_single_edges(db, min_freq):
        submine(list(root_code), projected)
    return out
