"""DFS codes: canonical labeling of connected labeled graphs.

A DFS code is a sequence of 5-tuples ``(frm, to, lbl_frm, lbl_edge, lbl_to)``
over dfs vertex ids assigned in discovery order. A forward tuple (frm < to)
introduces vertex ``to``; a backward tuple (frm > to) closes a cycle between
known vertices. The minimum code under the lexicographic extension of the
tuple order below is the graph's canonical form.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

from .graphs import LabeledGraph


class EdgeTuple(NamedTuple):
    frm: int
    to: int
    lbl_frm: int
    lbl_edge: int
    lbl_to: int

    @property
    def is_forward(self) -> bool:
        return self.frm < self.to

    @property
    def is_backward(self) -> bool:
        return self.frm > self.to


# Any 5-tuple compares fine; EdgeTuple instances are plain tuples underneath.
Tuple5 = tuple


def tuple_less(a: Sequence[int], b: Sequence[int]) -> bool:
    """Strict order on tuples that can extend one common code position.

    Backward-before-forward from the same growth point; backward tuples by
    (to, lbl_edge); forward tuples by (deeper frm first, then the label
    triple). Total on tuples that are comparable at one position.
    """
    a_fwd = a[0] < a[1]
    b_fwd = b[0] < b[1]
    if a_fwd:
        if b_fwd:
            if a[1] != b[1]:
                return a[1] < b[1]
            if a[0] != b[0]:
                return a[0] > b[0]
            return a[2:] < b[2:]
        return a[1] <= b[0]
    if b_fwd:
        return a[0] < b[1]
    if a[0] != b[0]:
        return a[0] < b[0]
    if a[1] != b[1]:
        return a[1] < b[1]
    return a[3] < b[3]


def code_less(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Lexicographic extension of tuple_less; a proper prefix is smaller."""
    for ta, tb in zip(a, b):
        if ta != tb:
            return tuple_less(ta, tb)
    return len(a) < len(b)


class DFSCode(list):
    """A DFS code: a list of EdgeTuples with list semantics."""

    __slots__ = ()

    def __init__(self, tuples=()):
        super().__init__(EdgeTuple._make(t) for t in tuples)

    @property
    def vertex_count(self) -> int:
        return max((max(t[0], t[1]) for t in self), default=-1) + 1

    def to_graph(self) -> LabeledGraph:
        return code_to_graph(self)

    def rightmost_path(self) -> "RightMostPath":
        return rightmost_path(self)

    def __repr__(self) -> str:
        return "DFSCode(" + ", ".join(repr(tuple(t)) for t in self) + ")"


class RightMostPath(NamedTuple):
    """Forward-edge positions and dfs vertices from the root to the
    right-most vertex, root side first."""

    positions: tuple[int, ...]
    vertices: tuple[int, ...]


def rightmost_path(code: Sequence[Sequence[int]]) -> RightMostPath:
    if not code:
        raise ValueError("empty code has no right-most path")
    positions: list[int] = []
    old_frm = None
    for i in range(len(code) - 1, -1, -1):
        t = code[i]
        if t[0] < t[1] and (old_frm is None or t[1] == old_frm):
            positions.append(i)
            old_frm = t[0]
    positions.reverse()
    vertices = (code[positions[0]][0],) + tuple(code[i][1] for i in positions)
    return RightMostPath(tuple(positions), vertices)


def code_to_graph(code: Sequence[Sequence[int]]) -> LabeledGraph:
    """Materialize the pattern graph a code describes.

    Vertex ids are taken verbatim as dfs ids; a tuple whose endpoints both
    exist adds only the edge, regardless of written orientation. Raises on
    label clashes, id gaps, or repeated edges.
    """
    g = LabeledGraph()
    for t in code:
        frm, to, lfrm, ledge, lto = t
        for vid, lbl in ((frm, lfrm), (to, lto)):
            if vid == g.vertex_count:
                g.add_vertex(lbl)
            elif vid > g.vertex_count:
                raise ValueError(f"tuple {tuple(t)} skips over vertex ids")
            elif g.vlabels[vid] != lbl:
                raise ValueError(f"tuple {tuple(t)} relabels vertex {vid}")
        g.add_edge(frm, to, ledge)
    return g


def _min_code_stream(g: LabeledGraph) -> Iterator[tuple]:
    """Yield the tuples of g's minimum DFS code one position at a time.

    Greedy construction: every prefix yielded so far is the minimum code of
    some subgraph reachable by right-most extension, so the minimal next
    tuple over all embeddings of the prefix in g extends the global minimum.
    Consumers that only need a prefix can stop early.
    """
    adj = g.adj
    vl = g.vlabels
    m = g.edge_count
    if m == 0:
        return
    best = None
    for u in range(len(vl)):
        lu = vl[u]
        for e in adj[u]:
            trip = (lu, e[3], vl[e[1]])
            if best is None or trip < best:
                best = trip
    min_vlb = best[0]
    yield (0, 1, best[0], best[1], best[2])
    embs = [
        ((e,), frozenset((e[0], e[1])), frozenset((e[2],)))
        for u in range(len(vl))
        if vl[u] == best[0]
        for e in adj[u]
        if e[3] == best[1] and vl[e[1]] == best[2]
    ]
    code: list[tuple] = [(0, 1, best[0], best[1], best[2])]
    positions = [0]
    maxtoc = 1

    while len(code) < m:
        rm_pos = positions[-1]
        rmlbl = code[rm_pos][4]

        # Backward first: scan targets from the root side so the smallest
        # target wins; among hits at that target, the smallest edge label.
        emitted = False
        for pos in positions[:-1]:
            tgt_dfs = code[pos][0]
            e1lbl = code[pos][3]
            alloweq = code[pos][4] <= rmlbl
            hits = []
            for edges, vused, eused in embs:
                u_img = edges[rm_pos][1]
                w_img = edges[pos][0]
                for e in adj[u_img]:
                    if e[1] == w_img and e[2] not in eused:
                        if e[3] > e1lbl or (e[3] == e1lbl and alloweq):
                            hits.append((edges, vused, eused, e))
                        break
            if hits:
                min_elb = min(h[3][3] for h in hits)
                t = (maxtoc, tgt_dfs, rmlbl, min_elb, code[pos][2])
                yield t
                code.append(t)
                embs = [
                    (edges + (e,), vused, eused | {e[2]})
                    for edges, vused, eused, e in hits
                    if e[3] == min_elb
                ]
                emitted = True
                break
        if emitted:
            continue

        # Pure forward from the right-most vertex beats any forward edge
        # from deeper on the path (larger frm sorts first).
        hits = []
        for edges, vused, eused in embs:
            u_img = edges[rm_pos][1]
            for e in adj[u_img]:
                if e[1] not in vused and vl[e[1]] >= min_vlb:
                    hits.append((edges, vused, eused, e))
        if hits:
            pair = min((h[3][3], vl[h[3][1]]) for h in hits)
            t = (maxtoc, maxtoc + 1, rmlbl, pair[0], pair[1])
            yield t
            code.append(t)
            embs = [
                (edges + (e,), vused | {e[1]}, eused | {e[2]})
                for edges, vused, eused, e in hits
                if e[3] == pair[0] and vl[e[1]] == pair[1]
            ]
            positions.append(len(code) - 1)
            maxtoc += 1
            continue

        emitted = False
        for idx in range(len(positions) - 1, -1, -1):
            pos = positions[idx]
            frm_dfs = code[pos][0]
            e1lbl = code[pos][3]
            e1tolbl = code[pos][4]
            hits = []
            for edges, vused, eused in embs:
                u_img = edges[pos][0]
                for e in adj[u_img]:
                    if e[1] in vused:
                        continue
                    nlbl = vl[e[1]]
                    if nlbl < min_vlb:
                        continue
                    if e[3] > e1lbl or (e[3] == e1lbl and nlbl >= e1tolbl):
                        hits.append((edges, vused, eused, e))
            if hits:
                pair = min((h[3][3], vl[h[3][1]]) for h in hits)
                t = (frm_dfs, maxtoc + 1, code[pos][2], pair[0], pair[1])
                yield t
                code.append(t)
                embs = [
                    (edges + (e,), vused | {e[1]}, eused | {e[2]})
                    for edges, vused, eused, e in hits
                    if e[3] == pair[0] and vl[e[1]] == pair[1]
                ]
                positions = positions[:idx] + [len(code) - 1]
                maxtoc += 1
                emitted = True
                break
        if not emitted:
            raise ValueError("graph is not connected; no DFS code covers it")


def min_dfs_code(g: LabeledGraph) -> DFSCode:
    """The minimum DFS code of a connected graph with at least one edge."""
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    return DFSCode(_min_code_stream(g))


def is_min(code: Sequence[Sequence[int]], graph: LabeledGraph | None = None) -> bool:
    """True iff the code equals the minimum DFS code of its own graph.

    Fails fast: reconstruction stops at the first position where a smaller
    continuation exists.
    """
    if not code:
        raise ValueError("empty code")
    if graph is None:
        graph = code_to_graph(code)
    for k, t in enumerate(_min_code_stream(graph)):
        if tuple(code[k]) != t:
            return False
    return True


def code_less_than_min(code: Sequence[Sequence[int]], g: LabeledGraph) -> bool:
    """True iff ``code`` sorts strictly before min_dfs_code(g).

    Decided lazily from the minimum-code stream: the first differing
    position settles the comparison, so the full canonical form of g is
    rarely needed.
    """
    n = len(code)
    for k, t in enumerate(_min_code_stream(g)):
        if k >= n:
            return True
        ck = tuple(code[k])
        if ck != t:
            return tuple_less(ck, t)
    return False
