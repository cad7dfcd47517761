"""Shared fixtures: the two worked-example databases, a seeded random
database generator, and a brute-force DFS-code enumerator used as the
canonical-form oracle."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from graphmine.dfscode import DFSCode
from graphmine.graphs import GraphDatabase, LabeledGraph
from graphmine.datasets import parse_dataset_text

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# Two graphs whose closed patterns at support 2 are the 4-edge W-a-X(-b-Y)
# (-d-Z) + Z-f-W pattern and the 2-edge X-a-W-f-Z path. Edge lines follow
# the enumeration used by the hash-table checks. Interned ids: W=0 X=1 Y=2
# S=3 Z=4 T=5; a=0 b=1 c=2 d=3 f=4 e=5.
SAMPLE_TEXT = """t # 0
v 0 W
v 1 X
v 2 X
v 3 Y
v 4 S
v 5 Z
e 0 1 a
e 0 2 a
e 2 3 b
e 2 4 c
e 2 5 d
e 0 5 f
t # 1
v 0 W
v 1 X
v 2 Y
v 3 T
v 4 Z
e 0 1 a
e 1 2 b
e 1 3 e
e 1 4 d
e 0 4 f
"""

# Two graphs exhibiting the early-termination failure: without failure
# handling, the branch of X(-a-Y)(-c-Z) is cut by the closed graph
# X(-a-Y-b-X)(-c-Z) and the closed graph X(-a-Y)(-c-Z-d-X) is lost.
# Interned ids: X=0 Y=1 Z=2; a=0 b=1 c=2 d=3.
ETF_TEXT = """t # 0
v 0 X
v 1 Y
v 2 X
v 3 Z
e 0 1 a
e 1 2 b
e 0 3 c
e 2 3 d
t # 1
v 0 X
v 1 Y
v 2 X
v 3 Z
v 4 X
e 0 1 a
e 1 2 b
e 0 3 c
e 3 4 d
"""

# Interned label ids for the two fixtures.
W, X, Y, S, Z, T = 0, 1, 2, 3, 4, 5
EA, EB, EC, ED, EF, EE_ = 0, 1, 2, 3, 4, 5

P1 = DFSCode([(0, 1, W, EA, X), (1, 2, X, EB, Y), (1, 3, X, ED, Z), (3, 0, Z, EF, W)])
P2 = DFSCode([(0, 1, W, EA, X), (0, 2, W, EF, Z)])

CG1 = DFSCode([(0, 1, 0, 0, 1), (1, 2, 1, 1, 0), (0, 3, 0, 2, 2)])
CG2 = DFSCode([(0, 1, 0, 0, 1), (0, 2, 0, 2, 2), (2, 3, 2, 3, 0)])


def key_set(patterns) -> set[tuple]:
    """Canonical comparable form of a pattern list."""
    return {tuple(map(tuple, p.code)) for p in patterns}


@pytest.fixture
def sample_db() -> GraphDatabase:
    return parse_dataset_text(SAMPLE_TEXT)


@pytest.fixture
def etf_db() -> GraphDatabase:
    return parse_dataset_text(ETF_TEXT)


@pytest.fixture
def sample_file(tmp_path) -> Path:
    p = tmp_path / "sample.graphs"
    p.write_text(SAMPLE_TEXT)
    return p


@pytest.fixture
def etf_file(tmp_path) -> Path:
    p = tmp_path / "etf.graphs"
    p.write_text(ETF_TEXT)
    return p


def random_database(
    rng: random.Random,
    n_graphs: int | None = None,
    max_vertices: int = 8,
    n_vlabels: int = 3,
    n_elabels: int = 2,
) -> GraphDatabase:
    """A database of 5-10 small random graphs over a tiny label alphabet."""
    db = GraphDatabase()
    for _ in range(n_graphs if n_graphs is not None else rng.randint(5, 10)):
        nv = rng.randint(2, max_vertices)
        g = LabeledGraph()
        for _ in range(nv):
            g.add_vertex(rng.randrange(n_vlabels))
        pairs = [(i, j) for i in range(nv) for j in range(i + 1, nv)]
        rng.shuffle(pairs)
        for u, v in pairs[: rng.randint(1, min(len(pairs), nv + 2))]:
            g.add_edge(u, v, rng.randrange(n_elabels))
        db.append(g)
    return db


def all_dfs_codes(g: LabeledGraph) -> list[tuple]:
    """Every DFS code of a connected graph, by direct traversal simulation.

    A partial state is the discovery order, the right-most path, and the
    used edge set. Legal continuations are backward edges from the
    right-most vertex to right-most-path vertices in ascending target
    order, and forward edges from any right-most-path vertex to an
    undiscovered vertex. Complete codes use every edge.
    """
    m = g.edge_count
    out: list[tuple] = []

    def walk(code, disc, pos, rmpath, used):
        if len(code) == m:
            out.append(tuple(code))
            return
        rm = rmpath[-1]
        back_targets = []
        for e in g.adj[rm]:
            o = e[1]
            if o in pos and frozenset((rm, o)) not in used and o in rmpath[:-2]:
                back_targets.append(o)
        if back_targets:
            # A valid traversal emits the lowest backward target next.
            o = min(back_targets, key=lambda v: pos[v])
            elb = next(h[3] for h in g.adj[rm] if h[1] == o)
            t = (pos[rm], pos[o], g.vlabels[rm], elb, g.vlabels[o])
            walk(code + [t], disc, pos, rmpath, used | {frozenset((rm, o))})
            return
        for i in range(len(rmpath) - 1, -1, -1):
            v = rmpath[i]
            for e in g.adj[v]:
                o = e[1]
                if o in pos:
                    continue
                t = (pos[v], len(disc), g.vlabels[v], e[3], g.vlabels[o])
                walk(
                    code + [t],
                    disc + [o],
                    {**pos, o: len(disc)},
                    rmpath[: i + 1] + [o],
                    used | {frozenset((v, o))},
                )

    for start in range(g.vertex_count):
        walk([], [start], {start: 0}, [start], frozenset())
    return out


def extension_family(rng):
    """Draw tuples that can extend one shared prefix state, the domain on
    which the tuple order is total."""
    r = rng.randint(1, 4)  # right-most vertex id
    n = r + 1  # next fresh vertex id
    vlabels = [rng.randrange(3) for _ in range(n)]

    def draw() -> tuple:
        if r >= 2 and rng.random() < 0.5:
            j = rng.randrange(r - 1)  # backward target, parent excluded
            return (r, j, vlabels[r], rng.randrange(3), vlabels[j])
        i = rng.randrange(r + 1)  # forward growth point
        return (i, n, vlabels[i], rng.randrange(3), rng.randrange(3))

    return draw


def random_code_walk(rng, max_len: int = 4, prefix: list | None = None) -> list[tuple]:
    """A structurally valid random code: backward edges come right after
    their source vertex's discovery in ascending target order, forward
    growth only from the right-most path."""
    code = list(prefix) if prefix else []
    if not code:
        code = [(0, 1, rng.randrange(3), rng.randrange(3), rng.randrange(3))]
    vlabels: dict[int, int] = {}
    rmpath = [0]
    nverts = 1
    last_back = -1
    for t in code:  # replay to recover the walk state
        if t[0] < t[1]:
            i = rmpath.index(t[0])
            rmpath = rmpath[: i + 1] + [t[1]]
            vlabels[t[0]], vlabels[t[1]] = t[2], t[4]
            nverts = max(nverts, t[1] + 1)
            last_back = -1
        else:
            last_back = t[1]
    while len(code) < max_len and rng.random() < 0.75:
        r = rmpath[-1]
        back_opts = [j for j in rmpath[:-2] if j > last_back]
        if back_opts and rng.random() < 0.4:
            j = rng.choice(back_opts)
            code.append((r, j, vlabels[r], rng.randrange(3), vlabels[j]))
            last_back = j
        else:
            i = rng.choice(rmpath)
            lbl = rng.randrange(3)
            code.append((i, nverts, vlabels[i], rng.randrange(3), lbl))
            rmpath = rmpath[: rmpath.index(i) + 1] + [nverts]
            vlabels[nverts] = lbl
            nverts += 1
            last_back = -1
    return code


def tuple_precedes(a, b) -> bool:
    """Strict DFS-code tuple order, restated from its definition so the
    brute-force canonical form shares nothing with the library comparator.

    For tuples extending one prefix: among forwards, a smaller target wins,
    then a deeper source, then the label triple; among backwards, the
    earlier source wins, then the earlier target, then the edge label; a
    backward from source i precedes a forward to target j iff i < j, and a
    forward to j precedes a backward from i iff j <= i.
    """
    afwd, bfwd = a[0] < a[1], b[0] < b[1]
    if afwd and bfwd:
        if a[1] != b[1]:
            return a[1] < b[1]
        if a[0] != b[0]:
            return a[0] > b[0]
        return a[2:] < b[2:]
    if afwd:
        return a[1] <= b[0]
    if bfwd:
        return a[0] < b[1]
    if a[0] != b[0]:
        return a[0] < b[0]
    if a[1] != b[1]:
        return a[1] < b[1]
    return a[3] < b[3]


def code_precedes(a: tuple, b: tuple) -> bool:
    """First-divergence order on complete codes of one graph."""
    for ta, tb in zip(a, b):
        if ta != tb:
            return tuple_precedes(ta, tb)
    return len(a) < len(b)


def brute_min_code(g: LabeledGraph) -> tuple:
    codes = all_dfs_codes(g)
    if not codes:
        raise ValueError("graph has no edges")
    best = codes[0]
    for c in codes[1:]:
        if code_precedes(c, best):
            best = c
    return best


def connected_labeled_graphs(max_edges: int = 4, n_vlabels: int = 2, n_elabels: int = 2):
    """Every connected labeled graph with 1..max_edges edges, one instance
    per edge-set skeleton and labeling. Yields LabeledGraph."""
    from itertools import combinations, product

    for nv in range(2, max_edges + 2):
        all_pairs = list(combinations(range(nv), 2))
        for ne in range(max(1, nv - 1), max_edges + 1):
            if ne > len(all_pairs):
                continue
            for pairs in combinations(all_pairs, ne):
                # Connectivity over exactly nv vertices.
                seen = {0}
                frontier = [0]
                adj: dict[int, list[int]] = {}
                for u, v in pairs:
                    adj.setdefault(u, []).append(v)
                    adj.setdefault(v, []).append(u)
                while frontier:
                    nxt = frontier.pop()
                    for o in adj.get(nxt, ()):
                        if o not in seen:
                            seen.add(o)
                            frontier.append(o)
                if len(seen) != nv or any(v not in adj for v in range(nv)):
                    continue
                for vlabels in product(range(n_vlabels), repeat=nv):
                    for elabels in product(range(n_elabels), repeat=ne):
                        g = LabeledGraph()
                        for lbl in vlabels:
                            g.add_vertex(lbl)
                        for (u, v), lbl in zip(pairs, elabels):
                            g.add_edge(u, v, lbl)
                        yield g
