"""Brute-force closure oracle.

Everything here recomputes embeddings by plain backtracking over the
database, sharing nothing with the miners' projection or pruning machinery
beyond the graph containers and canonical forms. Intended for verification
at desk scale, not for large datasets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .dfscode import DFSCode, code_to_graph
from .graphs import GraphDatabase, LabeledGraph


def enumerate_embeddings(pattern: LabeledGraph, g: LabeledGraph) -> list[tuple[int, ...]]:
    """Every injective label-preserving map carrying pattern edges to edges.

    Pattern vertex k > 0 must be adjacent to some vertex < k, which holds
    for any graph built from a DFS code.
    """
    n = pattern.vertex_count
    anchors: list[list[tuple[int, int]]] = [[] for _ in range(n)]  # (earlier vertex, elb)
    for u, v, elb in pattern.edges:
        hi, lo = (u, v) if u > v else (v, u)
        anchors[hi].append((lo, elb))
    for k in range(1, n):
        if not anchors[k]:
            raise ValueError("pattern vertex ids do not follow discovery order")

    results: list[tuple[int, ...]] = []
    assign: list[int] = [-1] * n
    used: set[int] = set()
    vl = g.vlabels

    def place(k: int) -> None:
        if k == n:
            results.append(tuple(assign))
            return
        plbl = pattern.vlabels[k]
        base, base_elb = anchors[k][0]
        for frm, cand, eid, elb in g.adj[assign[base]]:
            if elb != base_elb or cand in used or vl[cand] != plbl:
                continue
            ok = True
            for other, oelb in anchors[k][1:]:
                img = assign[other]
                for e in g.adj[cand]:
                    if e[1] == img and e[3] == oelb:
                        break
                else:
                    ok = False
                    break
            if ok:
                assign[k] = cand
                used.add(cand)
                place(k + 1)
                used.discard(cand)
        assign[k] = -1

    p0 = pattern.vlabels[0]
    for v in range(g.vertex_count):
        if vl[v] == p0:
            assign[0] = v
            used.add(v)
            place(1)
            used.discard(v)
    return results


class ExtensionKey(NamedTuple):
    """Abstract description of a one-edge extension.

    kind 'f': a new vertex with label ``lbl_to`` hung on pattern vertex
    ``at`` by an edge labeled ``lbl_edge`` (``other`` is -1).
    kind 'b': a new edge labeled ``lbl_edge`` between pattern vertices
    ``at`` and ``other`` (at < other, ``lbl_to`` is -1).
    """

    kind: str
    at: int
    other: int
    lbl_edge: int
    lbl_to: int


@dataclass
class Extension:
    """One extension with the evidence found for it in the database."""

    key: ExtensionKey
    covered_parents: set = field(default_factory=set)  # (gid, parent map)
    child_count: int = 0


def all_extensions(code: Sequence[Sequence[int]], db: GraphDatabase) -> dict[ExtensionKey, Extension]:
    """Every realized one-edge extension of the pattern, from any vertex.

    For each extension the covered parents are the embeddings of the pattern
    that extend that way, under the identity inclusion of the pattern in its
    child; the extension has equivalent occurrence with the pattern iff it
    covers every embedding in the database.
    """
    pattern = code_to_graph(code)
    n = pattern.vertex_count
    existing = {frozenset((u, v)) for u, v, _ in pattern.edges}
    found: dict[ExtensionKey, Extension] = {}

    for g in db.graphs:
        vl = g.vlabels
        for fmap in enumerate_embeddings(pattern, g):
            parent = (g.gid, fmap)
            image = set(fmap)
            inverse = {img: k for k, img in enumerate(fmap)}
            for k in range(n):
                for frm, to, eid, elb in g.adj[fmap[k]]:
                    if to in image:
                        j = inverse[to]
                        if frozenset((k, j)) in existing or k > j:
                            continue
                        key = ExtensionKey("b", k, j, elb, -1)
                    else:
                        key = ExtensionKey("f", k, -1, elb, vl[to])
                    ext = found.get(key)
                    if ext is None:
                        ext = found[key] = Extension(key)
                    ext.covered_parents.add(parent)
                    ext.child_count += 1
    return found


def total_occurrence(code: Sequence[Sequence[int]], db: GraphDatabase) -> int:
    pattern = code_to_graph(code)
    return sum(len(enumerate_embeddings(pattern, g)) for g in db.graphs)


def is_closed(code: Sequence[Sequence[int]], db: GraphDatabase) -> bool:
    """True iff no one-edge extension has equivalent occurrence."""
    pattern = code_to_graph(code)
    total = sum(len(enumerate_embeddings(pattern, g)) for g in db.graphs)
    for ext in all_extensions(code, db).values():
        if len(ext.covered_parents) == total:
            return False
    return True


def filter_closed(patterns: Sequence, db: GraphDatabase) -> list:
    """The closed subset of mined patterns, order preserved."""
    return [p for p in patterns if is_closed(p.code, db)]


@dataclass
class VerifyReport:
    ok: bool
    mined_count: int
    oracle_count: int
    missing: list[DFSCode]  # closed per oracle, absent from the mined set
    extra: list[DFSCode]  # mined, not closed per oracle

    def lines(self) -> list[str]:
        out = [
            f"mined closed patterns:  {self.mined_count}",
            f"oracle closed patterns: {self.oracle_count}",
        ]
        for code in self.missing:
            out.append(f"missing: {code!r}")
        for code in self.extra:
            out.append(f"extra:   {code!r}")
        out.append("verdict: " + ("match" if self.ok else "MISMATCH"))
        return out


def verify_run(db: GraphDatabase, config=None) -> VerifyReport:
    """Compare mine_closed against the oracle filter over mine_frequent."""
    from .cgspan import mine_closed
    from .gspan import MiningConfig, mine_frequent

    config = config or MiningConfig(mode="closed")
    frequent_cfg = MiningConfig(
        min_support=config.min_support,
        mode="frequent",
        max_pattern_edges=config.max_pattern_edges,
    )
    mined = mine_closed(db, config)
    expected = filter_closed(mine_frequent(db, frequent_cfg), db)

    mined_keys = {tuple(map(tuple, p.code)) for p in mined}
    oracle_keys = {tuple(map(tuple, p.code)) for p in expected}
    missing = sorted(oracle_keys - mined_keys)
    extra = sorted(mined_keys - oracle_keys)
    return VerifyReport(
        ok=not missing and not extra,
        mined_count=len(mined),
        oracle_count=len(expected),
        missing=[DFSCode(c) for c in missing],
        extra=[DFSCode(c) for c in extra],
    )
