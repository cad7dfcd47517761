"""Embedding lists: how patterns touch the database.

An Embedding is one link of a chain: the image of a code's last edge plus a
reference to the chain for the code's prefix. A pattern's EmbeddingList has
one chain per subgraph isomorphism of the pattern, so ``len`` is the
occurrence count I(g, D) and distinct graph ids give the support.

Edge images are the directed half-edge tuples ``(frm, to, eid, elb)`` of the
owning graph, oriented the way the code tuple at that position reads, which
is what makes vertex maps recoverable from a chain.
"""

from __future__ import annotations

from typing import Sequence

from .dfscode import DFSCode, EdgeTuple, rightmost_path
from .graphs import GraphDatabase


class Embedding:
    """One chain link: graph id, oriented image of the last code edge, and
    the parent chain (None for 1-edge codes)."""

    __slots__ = ("gid", "edge", "prev")

    def __init__(self, gid: int, edge: tuple[int, int, int, int], prev: "Embedding | None"):
        self.gid = gid
        self.edge = edge
        self.prev = prev

    def __repr__(self) -> str:
        return f"Embedding(gid={self.gid}, edge={self.edge})"


EmbeddingList = list


def chain_edges(emb: Embedding, length: int) -> list[tuple[int, int, int, int]]:
    """Materialize a chain into its edge images in code order."""
    edges = [None] * length
    node = emb
    for k in range(length - 1, -1, -1):
        edges[k] = node.edge
        node = node.prev
    return edges


def vertex_map(code: Sequence[Sequence[int]], emb: Embedding) -> list[int]:
    """dfs id -> graph vertex for one chain."""
    edges = chain_edges(emb, len(code))
    n = max(max(t[0], t[1]) for t in code) + 1
    vmap = [0] * n
    for t, e in zip(code, edges):
        vmap[t[0]] = e[0]
        vmap[t[1]] = e[1]
    return vmap


def vertex_maps(code: Sequence[Sequence[int]], projected: list) -> list[list[int]]:
    return [vertex_map(code, emb) for emb in projected]


def support(projected: list) -> int:
    """Number of distinct graphs the chains live in."""
    return len({e.gid for e in projected})


def occurrence(projected: list) -> int:
    """Number of subgraph isomorphisms, one per chain."""
    return len(projected)


def containing_graphs(projected: list) -> list[int]:
    return sorted({e.gid for e in projected})


def equivalent_occurrence(parent_projected: list, child_projected: list) -> bool:
    """True iff every parent chain extends into the child: L = I.

    L counts the distinct parent chains referenced by the child's chains,
    i.e. the parent isomorphisms extendable under the canonical inclusion
    of the parent pattern in the child.
    """
    covered = {id(e.prev) for e in child_projected}
    return len(covered) == len(parent_projected)


def frequent_single_edges(db: GraphDatabase, min_freq: int) -> list[tuple[DFSCode, list]]:
    """All frequent 1-edge codes with their embeddings, sorted ascending.

    An edge with distinct endpoint labels yields one chain in its canonical
    orientation; equal endpoint labels yield both orientations, matching the
    two isomorphisms of the pattern onto that edge.
    """
    gids: dict[tuple, set[int]] = {}
    for g in db.graphs:
        vl = g.vlabels
        for u, v, elb in g.edges:
            lu, lv = vl[u], vl[v]
            trip = (lu, elb, lv) if lu <= lv else (lv, elb, lu)
            gids.setdefault(trip, set()).add(g.gid)
    frequent = {t for t, s in gids.items() if len(s) >= min_freq}

    buckets: dict[tuple, list] = {t: [] for t in sorted(frequent)}
    for g in db.graphs:
        vl = g.vlabels
        gid = g.gid
        for u in range(len(vl)):
            lu = vl[u]
            for e in g.adj[u]:
                lv = vl[e[1]]
                if lu > lv:
                    continue
                trip = (lu, e[3], lv)
                if trip in frequent:
                    buckets[trip].append(Embedding(gid, e, None))
    return [(DFSCode([(0, 1) + trip]), chains) for trip, chains in buckets.items()]


def project_code(code: Sequence[Sequence[int]], db: GraphDatabase) -> list:
    """All embedding chains of a code, rebuilt from scratch.

    Complete for minimum codes; used where an EmbeddingList was not kept.
    """
    first = code[0]
    flbl, elbl, tlbl = first[2], first[3], first[4]
    states = []  # (chain, vertex images by dfs id, used edge ids)
    for g in db.graphs:
        vl = g.vlabels
        for v in range(g.vertex_count):
            if vl[v] != flbl:
                continue
            for e in g.adj[v]:
                if e[3] == elbl and vl[e[1]] == tlbl:
                    states.append((Embedding(g.gid, e, None), (e[0], e[1]), (e[2],)))
    for t in code[1:]:
        grown = []
        if t[0] < t[1]:
            for emb, verts, used in states:
                g = db.graphs[emb.gid]
                vl = g.vlabels
                for e in g.adj[verts[t[0]]]:
                    if e[1] not in verts and e[3] == t[3] and vl[e[1]] == t[4]:
                        grown.append((Embedding(emb.gid, e, emb), verts + (e[1],), used + (e[2],)))
        else:
            for emb, verts, used in states:
                g = db.graphs[emb.gid]
                w = verts[t[1]]
                for e in g.adj[verts[t[0]]]:
                    if e[1] == w and e[2] not in used and e[3] == t[3]:
                        grown.append((Embedding(emb.gid, e, emb), verts, used + (e[2],)))
                        break
        states = grown
    return [s[0] for s in states]


def _scan_levels(code: Sequence[Sequence[int]]):
    """Pattern-side constants for one extension scan."""
    rmp = rightmost_path(code)
    positions = rmp.positions
    maxtoc = rmp.vertices[-1]
    rm_pos = positions[-1]
    rmlbl = code[rm_pos][4]
    min_vlb = code[0][2]
    back = [
        (pos, code[pos][0], code[pos][3], code[pos][4] <= rmlbl, code[pos][2])
        for pos in positions[:-1]
    ]
    fwd = [
        (pos, code[pos][0], code[pos][3], code[pos][4], code[pos][2])
        for pos in reversed(positions)
    ]
    return positions, maxtoc, rm_pos, rmlbl, min_vlb, back, fwd


def rightmost_extensions(
    code: Sequence[Sequence[int]],
    projected: list,
    db: GraphDatabase,
    restricted: bool = True,
) -> dict[EdgeTuple, list]:
    """All right-most extension tuples with complete embedding buckets.

    Backward edges grow from the right-most vertex to right-most-path
    vertices (never the direct parent); forward edges grow from right-most
    path vertices and introduce the next dfs id. With ``restricted`` the
    tuple-level growth filters of canonical search are applied, dropping
    extension tuples that can never head a minimal code; each surviving
    bucket holds every embedding either way.
    """
    graphs = db.graphs
    m = len(code)
    positions, maxtoc, rm_pos, rmlbl, min_vlb, back, fwd = _scan_levels(code)
    newv = maxtoc + 1
    buckets: dict[tuple, list] = {}

    for emb in projected:
        gid = emb.gid
        g = graphs[gid]
        adj = g.adj
        vl = g.vlabels
        edges = chain_edges(emb, m)
        vused = set()
        eused = set()
        for e in edges:
            vused.add(e[0])
            vused.add(e[1])
            eused.add(e[2])
        rm_img = edges[rm_pos][1]

        for pos, tgt, e1lbl, alloweq, tgtlbl in back:
            w_img = edges[pos][0]
            for e in adj[rm_img]:
                if e[1] == w_img and e[2] not in eused:
                    if not restricted or e[3] > e1lbl or (e[3] == e1lbl and alloweq):
                        t = (maxtoc, tgt, rmlbl, e[3], tgtlbl)
                        bucket = buckets.get(t)
                        if bucket is None:
                            bucket = buckets[t] = []
                        bucket.append(Embedding(gid, e, emb))
                    break

        for e in adj[rm_img]:
            to = e[1]
            if to in vused:
                continue
            nlbl = vl[to]
            if restricted and nlbl < min_vlb:
                continue
            t = (maxtoc, newv, rmlbl, e[3], nlbl)
            bucket = buckets.get(t)
            if bucket is None:
                bucket = buckets[t] = []
            bucket.append(Embedding(gid, e, emb))

        for pos, frm_dfs, e1lbl, e1tolbl, frmlbl in fwd:
            u_img = edges[pos][0]
            for e in adj[u_img]:
                to = e[1]
                if to in vused:
                    continue
                nlbl = vl[to]
                if restricted and (
                    nlbl < min_vlb
                    or e[3] < e1lbl
                    or (e[3] == e1lbl and nlbl < e1tolbl)
                ):
                    continue
                t = (frm_dfs, newv, frmlbl, e[3], nlbl)
                bucket = buckets.get(t)
                if bucket is None:
                    bucket = buckets[t] = []
                bucket.append(Embedding(gid, e, emb))

    return {EdgeTuple._make(t): b for t, b in buckets.items()}


def growth_permitted(code: Sequence[Sequence[int]], t: Sequence[int]) -> bool:
    """The restricted-scan filter, applied to a single extension tuple."""
    positions, maxtoc, rm_pos, rmlbl, min_vlb, back, fwd = _scan_levels(code)
    if t[0] > t[1]:
        for pos, tgt, e1lbl, alloweq, _ in back:
            if tgt == t[1]:
                return t[3] > e1lbl or (t[3] == e1lbl and alloweq)
        return False
    if t[4] < min_vlb:
        return False
    if t[0] == maxtoc:
        return True
    for pos, frm_dfs, e1lbl, e1tolbl, _ in fwd:
        if frm_dfs == t[0]:
            return t[3] > e1lbl or (t[3] == e1lbl and t[4] >= e1tolbl)
    return False


def child_sort_key(t: Sequence[int]):
    """Sort key realizing tuple_less among extensions of one code."""
    if t[0] > t[1]:
        return (0, t[1], t[3], 0, 0)
    return (1, -t[0], t[2], t[3], t[4])
