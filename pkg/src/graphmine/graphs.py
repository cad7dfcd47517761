"""Labeled graph containers for transactional graph mining.

Graphs are simple and undirected, with integer labels on vertices and
edges. Vertices and edges carry dense 0-based ids. Adjacency stores one
directed half-edge per direction, as plain tuples ``(frm, to, eid, elb)``,
so traversal code can follow an orientation without re-deriving it.
"""

from __future__ import annotations

from typing import Iterator

# A label is a plain int. Datasets with string tokens are interned to ints
# by the parser; the database keeps the vocabulary for output.
Label = int


class LabeledGraph:
    """One transaction graph: vertex labels plus an edge list.

    Attributes:
        gid: dense 0-based id of the graph inside its database.
        vlabels: vertex label by vertex id.
        edges: ``(u, v, elb)`` per edge id, in insertion order.
        adj: per vertex, list of directed half-edges ``(frm, to, eid, elb)``.
    """

    __slots__ = ("gid", "vlabels", "edges", "adj", "_pairs")

    def __init__(self, gid: int = 0):
        self.gid = gid
        self.vlabels: list[Label] = []
        self.edges: list[tuple[int, int, Label]] = []
        self.adj: list[list[tuple[int, int, int, Label]]] = []
        self._pairs: set[tuple[int, int]] = set()

    def add_vertex(self, label: Label) -> int:
        self.vlabels.append(label)
        self.adj.append([])
        return len(self.vlabels) - 1

    def add_edge(self, u: int, v: int, label: Label) -> int:
        n = len(self.vlabels)
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) references a nonexistent vertex")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        pair = (u, v) if u < v else (v, u)
        if pair in self._pairs:
            raise ValueError(f"duplicate edge ({u}, {v})")
        self._pairs.add(pair)
        eid = len(self.edges)
        self.edges.append((u, v, label))
        self.adj[u].append((u, v, eid, label))
        self.adj[v].append((v, u, eid, label))
        return eid

    def has_edge(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in self._pairs

    @property
    def vertex_count(self) -> int:
        return len(self.vlabels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:
        return f"LabeledGraph(gid={self.gid}, |V|={self.vertex_count}, |E|={self.edge_count})"


class GraphDatabase:
    """An ordered collection of LabeledGraphs plus label vocabularies.

    ``original_ids`` maps the dense position back to the id found in the
    source file, so reports can name graphs the way the input did.
    ``vlabel_names`` / ``elabel_names`` translate interned labels back to
    their source tokens; they stay None for databases built from ints.
    """

    __slots__ = ("graphs", "original_ids", "vlabel_names", "elabel_names")

    def __init__(
        self,
        graphs: list[LabeledGraph] | None = None,
        original_ids: list[int] | None = None,
        vlabel_names: list[str] | None = None,
        elabel_names: list[str] | None = None,
    ):
        self.graphs: list[LabeledGraph] = graphs if graphs is not None else []
        if original_ids is None:
            original_ids = list(range(len(self.graphs)))
        self.original_ids = original_ids
        self.vlabel_names = vlabel_names
        self.elabel_names = elabel_names

    def append(self, g: LabeledGraph, original_id: int | None = None) -> None:
        g.gid = len(self.graphs)
        self.graphs.append(g)
        self.original_ids.append(original_id if original_id is not None else g.gid)

    def vertex_label_name(self, label: Label) -> str:
        if self.vlabel_names is not None:
            return self.vlabel_names[label]
        return str(label)

    def edge_label_name(self, label: Label) -> str:
        if self.elabel_names is not None:
            return self.elabel_names[label]
        return str(label)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[LabeledGraph]:
        return iter(self.graphs)

    def __repr__(self) -> str:
        return f"GraphDatabase({len(self.graphs)} graphs)"


class EdgeEnumeration:
    """Total index of every database edge as ``(graph_id, edge_id)`` pairs.

    Every edge of every graph is addressable by the canonical double index;
    the key of edge j in graph i is exactly ``(i, j)``. Hash keys built from
    embedding images use these pairs verbatim.
    """

    __slots__ = ("edge_counts", "total")

    def __init__(self, db: GraphDatabase):
        self.edge_counts = [g.edge_count for g in db.graphs]
        self.total = sum(self.edge_counts)

    def key(self, gid: int, eid: int) -> tuple[int, int]:
        if not (0 <= gid < len(self.edge_counts)) or not (0 <= eid < self.edge_counts[gid]):
            raise KeyError(f"no edge ({gid}, {eid}) in the database")
        return (gid, eid)

    def __len__(self) -> int:
        return self.total

    def __contains__(self, pair: tuple[int, int]) -> bool:
        gid, eid = pair
        return 0 <= gid < len(self.edge_counts) and 0 <= eid < self.edge_counts[gid]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for gid, count in enumerate(self.edge_counts):
            for eid in range(count):
                yield (gid, eid)


def enumerate_edges(db: GraphDatabase) -> EdgeEnumeration:
    """Build the total edge index of a database."""
    return EdgeEnumeration(db)


def load_database(path) -> GraphDatabase:
    """Parse a transactional graph file into a GraphDatabase."""
    from .datasets import parse_dataset

    return parse_dataset(path)


def component_of(g: LabeledGraph, start: int, removed: int | None = None) -> set[int]:
    """Vertices reachable from ``start``, optionally with one vertex deleted."""
    if start == removed:
        return set()
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for _, to, _, _ in g.adj[u]:
            if to != removed and to not in seen:
                seen.add(to)
                stack.append(to)
    return seen


def induced_subgraph(g: LabeledGraph, vertices: set[int]) -> LabeledGraph:
    """Subgraph on ``vertices`` with ids densified in ascending old-id order."""
    sub = LabeledGraph()
    remap: dict[int, int] = {}
    for v in sorted(vertices):
        remap[v] = sub.add_vertex(g.vlabels[v])
    for u, v, elb in g.edges:
        if u in vertices and v in vertices:
            sub.add_edge(remap[u], remap[v], elb)
    return sub
