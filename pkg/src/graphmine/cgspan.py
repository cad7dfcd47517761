"""Closed-pattern mining: gSpan pruned by closed-graph early termination.

A branch of the DFS code tree is cut when its pattern provably leads only
to already-discovered closed graphs: the pattern has equivalent occurrence,
directly or through a chain of one-edge extensions, with a closed graph
found earlier. Discovered closed graphs are indexed in a hash table (CGHT)
keyed by the database images of single pattern edges, so each test touches
few candidates. Known failure cases of that pruning rule are tracked in a
code trie and force the branch to be explored anyway.
"""

from __future__ import annotations

from typing import Sequence

from .dfscode import DFSCode, code_less_than_min, code_to_graph, is_min
from .embeddings import (
    chain_edges,
    child_sort_key,
    containing_graphs,
    equivalent_occurrence,
    frequent_single_edges,
    growth_permitted,
    project_code,
    rightmost_extensions,
    support,
    vertex_map,
)
from .graphs import EdgeEnumeration, GraphDatabase, LabeledGraph, component_of, enumerate_edges, induced_subgraph
from .gspan import MinedPattern, MiningConfig, MiningStats, _ensure_recursion_headroom, pruned_view

__all__ = [
    "ClosedGraphRecord",
    "ClosedGraphHashTable",
    "DFSCodeTrie",
    "create_edge_hash_key",
    "add_closed_graph",
    "early_termination",
    "detect_etf",
    "reject_early_termination",
    "mine_closed",
]


def create_edge_hash_key(
    ee: EdgeEnumeration,
    edge: tuple[int, int],
    code: Sequence[Sequence[int]],
    projected: list,
) -> frozenset:
    """The set of database images of one pattern edge under all embeddings.

    ``edge`` names the pattern edge by its dfs vertex pair, in either
    orientation. Keys are order-free, so patterns sharing an edge's entire
    image set collide regardless of their own shape.
    """
    want = frozenset(edge)
    for pos, t in enumerate(code):
        if frozenset((t[0], t[1])) == want:
            n = len(code)
            return frozenset(ee.key(c.gid, chain_edges(c, n)[pos][2]) for c in projected)
    raise ValueError(f"edge {edge!r} is not part of the code")


class ClosedGraphRecord:
    """One discovered closed graph: its code, embeddings, and cached maps.

    ``chains`` is None when the miner was configured not to retain
    embeddings; they are then rebuilt by projection on each use and the
    derived maps are not cached.
    """

    __slots__ = ("code", "chains", "discovery_index", "edge_pos", "_maps_by_gid", "_first")

    def __init__(self, code: DFSCode, chains: list | None, discovery_index: int):
        self.code = code
        self.chains = chains
        self.discovery_index = discovery_index
        self.edge_pos = {frozenset((t[0], t[1])): i for i, t in enumerate(code)}
        self._maps_by_gid = None
        self._first = None

    def materialize(self, db: GraphDatabase):
        """Vertex maps grouped by graph, plus one fixed reference embedding.

        Returns ({gid: [vertex tuple, ...]}, (gid, vertex tuple)).
        """
        if self._maps_by_gid is not None:
            return self._maps_by_gid, self._first
        chains = self.chains if self.chains is not None else project_code(self.code, db)
        by_gid: dict[int, list] = {}
        for c in chains:
            by_gid.setdefault(c.gid, []).append(tuple(vertex_map(self.code, c)))
        first = (chains[0].gid, by_gid[chains[0].gid][0])
        if self.chains is not None:
            self._maps_by_gid = by_gid
            self._first = first
        return by_gid, first

    def __repr__(self) -> str:
        return f"ClosedGraphRecord(#{self.discovery_index}, {self.code!r})"


class ClosedGraphHashTable:
    """Closed graphs indexed by the image sets of their single edges."""

    __slots__ = ("buckets", "records")

    def __init__(self):
        self.buckets: dict[frozenset, list[ClosedGraphRecord]] = {}
        self.records: list[ClosedGraphRecord] = []

    def __len__(self) -> int:
        return len(self.records)

    def get(self, key: frozenset) -> list[ClosedGraphRecord]:
        return self.buckets.get(key, [])


def add_closed_graph(
    cght: ClosedGraphHashTable,
    ee: EdgeEnumeration,
    record: ClosedGraphRecord,
    projected: list | None = None,
) -> None:
    """Index a closed graph under one key per pattern edge.

    ``projected`` supplies the embeddings when the record does not keep its
    own. A record is referenced at most once per bucket even if two of its
    edges happen to share an image set.
    """
    chains = record.chains if record.chains is not None else projected
    if chains is None:
        raise ValueError("embeddings required to compute hash keys")
    n = len(record.code)
    images: list[set] = [set() for _ in range(n)]
    for c in chains:
        edges = chain_edges(c, n)
        for pos in range(n):
            images[pos].add(ee.key(c.gid, edges[pos][2]))
    for img in images:
        bucket = cght.buckets.setdefault(frozenset(img), [])
        if not any(r is record for r in bucket):
            bucket.append(record)
    cght.records.append(record)


def early_termination(
    code: Sequence[Sequence[int]],
    projected: list,
    cght: ClosedGraphHashTable,
    ee: EdgeEnumeration,
    db: GraphDatabase,
) -> tuple[bool, ClosedGraphRecord | None, tuple[int, ...] | None]:
    """Test whether the pattern's branch can be cut.

    True when some stored closed graph g' occurs, through a single vertex
    mapping rho of the pattern into g', at every place the pattern occurs:
    each embedding f then satisfies f = f'' o rho for some embedding f'' of
    g'. Candidate graphs come from one hash lookup on the image set of the
    pattern's last edge; candidate rhos are read off the embeddings that
    fall inside one reference embedding of g'. A true result proves the
    pattern is not closed.
    """
    if not cght.records:
        return False, None, None
    key = frozenset(ee.key(c.gid, c.edge[2]) for c in projected)
    bucket = cght.buckets.get(key)
    if not bucket:
        return False, None, None

    pairs = [(t[0], t[1]) for t in code]
    fmaps = [(c.gid, tuple(vertex_map(code, c))) for c in projected]
    for record in bucket:
        by_gid, (ref_gid, ref_map) = record.materialize(db)
        image = set(ref_map)
        inverse = {v: i for i, v in enumerate(ref_map)}
        edge_pos = record.edge_pos
        rhos: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for gid, fmap in fmaps:
            if gid != ref_gid or not image.issuperset(fmap):
                continue
            rho = tuple(inverse[v] for v in fmap)
            if rho in seen:
                continue
            seen.add(rho)
            if all(frozenset((rho[a], rho[b])) in edge_pos for a, b in pairs):
                rhos.append(rho)
        for rho in rhos:
            for gid, fmap in fmaps:
                k = len(fmap)
                for m in by_gid.get(gid, ()):
                    if all(m[rho[i]] == fmap[i] for i in range(k)):
                        break
                else:
                    break
            else:
                return True, record, rho
    return False, None, None


class DFSCodeTrie:
    """Prefix store of DFS codes registered as unsafe termination sources.

    Membership is path existence: a code is contained when it is a prefix
    of (or equal to) some registered code.
    """

    __slots__ = ("_root", "_size")

    def __init__(self):
        self._root: dict = {}
        self._size = 0

    def __len__(self) -> int:
        return self._size

    def insert(self, code: Sequence[Sequence[int]]) -> None:
        node = self._root
        for t in code:
            t = tuple(t)
            child = node.get(t)
            if child is None:
                child = node[t] = {}
                self._size += 1
            node = child

    def walk_depth(self, code: Sequence[Sequence[int]]) -> int:
        """Length of the longest prefix of ``code`` present in the trie."""
        node = self._root
        depth = 0
        for t in code:
            node = node.get(tuple(t))
            if node is None:
                break
            depth += 1
        return depth

    def __contains__(self, code) -> bool:
        return len(code) > 0 and self.walk_depth(code) == len(code)


def _embeds_in(pattern: LabeledGraph, host: LabeledGraph) -> bool:
    """True iff some injective label-preserving map carries pattern edges
    into host edges. Both graphs are small; plain backtracking suffices."""
    if pattern.vertex_count > host.vertex_count or pattern.edge_count > host.edge_count:
        return False
    # Visit vertices component by component so every vertex after a
    # component's first touches an already-placed one.
    order: list[int] = []
    seen: set[int] = set()
    for start in range(pattern.vertex_count):
        if start in seen:
            continue
        seen.add(start)
        order.append(start)
        i = len(order) - 1
        while i < len(order):
            for e in pattern.adj[order[i]]:
                if e[1] not in seen:
                    seen.add(e[1])
                    order.append(e[1])
            i += 1
    pos = {v: i for i, v in enumerate(order)}
    anchors = [
        [(pos[e[1]], e[3]) for e in pattern.adj[v] if pos[e[1]] < i]
        for i, v in enumerate(order)
    ]

    hvl = host.vlabels
    assign = [-1] * len(order)
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        plbl = pattern.vlabels[order[i]]
        if anchors[i]:
            base, base_elb = anchors[i][0]
            cands = [e[1] for e in host.adj[assign[base]] if e[3] == base_elb]
            rest = anchors[i][1:]
        else:
            cands = list(range(host.vertex_count))
            rest = anchors[i]
        for cand in cands:
            if cand in used or hvl[cand] != plbl:
                continue
            ok = True
            for other, oelb in rest:
                img = assign[other]
                if not any(h[1] == img and h[3] == oelb for h in host.adj[cand]):
                    ok = False
                    break
            if ok:
                assign[i] = cand
                used.add(cand)
                if place(i + 1):
                    return True
                used.discard(cand)
        return False

    return place(0)


def detect_etf(code: Sequence[Sequence[int]], trie: DFSCodeTrie) -> bool:
    """Register the code when terminating through it could lose patterns.

    Witness search: deleting any vertex w other than the right-most one
    must leave a nonempty part beta around the right-most vertex such that
    beta is not contained in the code's parent pattern and beta's own
    canonical code sorts after this code, meaning beta's subtree has not
    been searched yet and never will be if branches equivalent to this one
    are cut. Leaf deletions count: a pattern one spoke short of this one
    can be exactly such a beta.
    """
    if len(code) < 2:
        return False
    g = code_to_graph(code)
    rm = g.vertex_count - 1
    parent = code_to_graph(code[:-1])
    for w in range(g.vertex_count):
        if w == rm:
            continue
        beta = induced_subgraph(g, component_of(g, rm, removed=w))
        if beta.edge_count == 0:
            continue
        if _embeds_in(beta, parent):
            continue
        if code_less_than_min(code, beta):
            trie.insert(code)
            return True
    return False


def reject_early_termination(
    code: Sequence[Sequence[int]],
    record: ClosedGraphRecord,
    rho: tuple[int, ...],
    trie: DFSCodeTrie,
) -> bool:
    """True when the planned termination must be abandoned.

    Projects the pattern's edges through rho into the terminating closed
    graph's code, takes the last covered position n, and rejects when any
    registered code starts with that code's first n+1 tuples.
    """
    if not len(trie):
        return False
    edge_pos = record.edge_pos
    n = max(edge_pos[frozenset((rho[t[0]], rho[t[1]]))] for t in code)
    return trie.walk_depth(record.code) >= n + 1


def mine_closed(
    db: GraphDatabase,
    config: MiningConfig | None = None,
    stats: MiningStats | None = None,
) -> list[MinedPattern]:
    """All closed frequent patterns, in completion order.

    A pattern is closed when no frequent proper supergraph occurs at every
    one of its occurrences. Each pattern is settled only after its branch
    is exhausted (its supergraphs are known by then), so the output order
    is the order branches complete, not the visit order.

    Mode ``closed_no_etf`` keeps the early-termination pruning but skips
    failure detection and rejection; it can lose closed patterns and
    exists to measure what the failure handling contributes.
    """
    config = config or MiningConfig(mode="closed")
    if config.mode not in ("closed", "closed_no_etf"):
        raise ValueError(f"mine_closed requires mode closed or closed_no_etf, got {config.mode!r}")
    stats = stats if stats is not None else MiningStats()
    min_freq = config.min_frequency(len(db.graphs))
    max_edges = config.max_pattern_edges
    use_etf = config.mode == "closed"
    keep_chains = config.cache_closed_embeddings
    ee = enumerate_edges(db)
    cght = ClosedGraphHashTable()
    trie = DFSCodeTrie()
    view = pruned_view(db, min_freq)
    out: list[MinedPattern] = []
    _ensure_recursion_headroom()

    def submine(code: list, projected: list) -> None:
        if not is_min(code):
            return
        stats.visited_nodes += 1
        terminate, record, rho = early_termination(code, projected, cght, ee, db)
        if terminate:
            if use_etf and reject_early_termination(code, record, rho, trie):
                stats.early_terminations_rejected += 1
            else:
                stats.early_terminations_applied += 1
                return
        if use_etf:
            detect_etf(code, trie)
        exts = rightmost_extensions(code, projected, view, restricted=False)
        if max_edges is None or len(code) < max_edges:
            children = sorted(
                (
                    t
                    for t, bucket in exts.items()
                    if growth_permitted(code, t) and support(bucket) >= min_freq
                ),
                key=child_sort_key,
            )
            for t in children:
                code.append(t)
                submine(code, exts[t])
                code.pop()
        # A pattern that triggered termination is covered by a stored
        # closed graph even when the trie forced its branch open.
        if terminate or any(equivalent_occurrence(projected, b) for b in exts.values()):
            return
        closed_code = DFSCode(code)
        rec = ClosedGraphRecord(closed_code, list(projected) if keep_chains else None, len(out))
        add_closed_graph(cght, ee, rec, projected)
        out.append(
            MinedPattern(
                code=closed_code,
                support=support(projected),
                occurrence=len(projected),
                containing_graphs=containing_graphs(projected),
                discovery_index=len(out),
                embeddings=list(projected) if config.emit_embeddings else None,
            )
        )
        stats.pattern_count += 1

    for root_code, projected in frequent_single_edges(db, min_freq):
        submine(list(root_code), projected)
    stats.trie_size = len(trie)
    return out
