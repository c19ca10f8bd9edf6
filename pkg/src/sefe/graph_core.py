"""Edge-colored instance model plus the connectivity primitives everything
else is built on: graph views, block-cut decomposition, cutvertex
classification and planarity testing with an embedding witness.

An instance is a simple graph whose edges carry one of three labels.  The
two input graphs and their common graph are derived views: graph 1 consists
of the edges labeled ONLY1 or COMMON, graph 2 of those labeled ONLY2 or
COMMON, and the common graph of the COMMON edges.  A vertex belongs to a
view if an edge of the view touches it; vertices shared by both graphs
(isolated vertices, endpoints of common edges, and vertices meeting both
exclusive colors) form the vertex set of the common graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

import networkx as nx


class EdgeLabel(Enum):
    ONLY1 = "1"
    ONLY2 = "2"
    COMMON = "12"


class CutKind(Enum):
    UNION = "union"
    SIMULTANEOUS = "simultaneous"
    EXCLUSIVE1 = "exclusive1"
    EXCLUSIVE2 = "exclusive2"
    NONE = "none"


class InstanceError(ValueError):
    """Malformed instance text or construction that violates an invariant."""


Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GraphView:
    """A subgraph of an instance: explicit vertex set plus simple edges."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def adj(self) -> dict[int, tuple[int, ...]]:
        return self._adj()

    def _adj(self) -> dict[int, tuple[int, ...]]:
        cached = getattr(self, "_adj_cache", None)
        if cached is None:
            a: dict[int, list[int]] = {v: [] for v in self.vertices}
            for u, v in self.edges:
                a[u].append(v)
                a[v].append(u)
            cached = {v: tuple(sorted(ns)) for v, ns in a.items()}
            object.__setattr__(self, "_adj_cache", cached)
        return cached

    def degree(self, v: int) -> int:
        return len(self.adj.get(v, ()))

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            out.append(tuple(sorted(comp)))
        return sorted(out)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subview(self, vertices: Iterable[int]) -> "GraphView":
        vs = set(vertices)
        return GraphView(
            tuple(sorted(vs)),
            tuple(e for e in self.edges if e[0] in vs and e[1] in vs),
        )

    def without_vertices(self, removed: Iterable[int]) -> "GraphView":
        rm = set(removed)
        return self.subview(v for v in self.vertices if v not in rm)


@dataclass(frozen=True)
class UnionGraph:
    """A SEFE instance: dense vertex ids 0..n-1 and labeled simple edges."""

    n: int
    edges: tuple[tuple[int, int, EdgeLabel], ...]
    name: str = "instance"
    # original-instance vertex behind each id; None for vertices created by
    # preprocessing (subdivision points, attachment-cycle vertices).
    provenance: tuple[Optional[int], ...] = ()

    def __post_init__(self) -> None:
        seen: set[Edge] = set()
        for u, v, _label in self.edges:
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InstanceError(f"edge ({u},{v}) out of range")
            e = norm_edge(u, v)
            if e in seen:
                raise InstanceError(f"duplicate edge {e}")
            seen.add(e)
        if self.provenance and len(self.provenance) != self.n:
            raise InstanceError("provenance length mismatch")

    @property
    def vertices(self) -> range:
        return range(self.n)

    def label_of(self) -> dict[Edge, EdgeLabel]:
        return {norm_edge(u, v): lab for u, v, lab in self.edges}

    def _view(self, labels: frozenset[EdgeLabel], verts: tuple[int, ...]) -> GraphView:
        return GraphView(
            verts,
            tuple(
                norm_edge(u, v) for u, v, lab in self.edges if lab in labels
            ),
        )

    def union(self) -> GraphView:
        return self._cached("_union", lambda: self._view(
            frozenset(EdgeLabel), tuple(range(self.n))))

    def g1(self) -> GraphView:
        return self._cached("_g1", lambda: self._view(
            frozenset({EdgeLabel.ONLY1, EdgeLabel.COMMON}), self.vertices_of(1)))

    def g2(self) -> GraphView:
        return self._cached("_g2", lambda: self._view(
            frozenset({EdgeLabel.ONLY2, EdgeLabel.COMMON}), self.vertices_of(2)))

    def common(self) -> GraphView:
        return self._cached("_common", lambda: self._view(
            frozenset({EdgeLabel.COMMON}), self.shared_vertices()))

    def _cached(self, key, make):
        cached = getattr(self, key, None)
        if cached is None:
            cached = make()
            object.__setattr__(self, key, cached)
        return cached

    def vertices_of(self, which: int) -> tuple[int, ...]:
        """Vertex set of graph 1 or 2: endpoints of its edges plus vertices
        isolated in the whole instance (those belong to both graphs)."""
        mine = {EdgeLabel.COMMON, EdgeLabel.ONLY1 if which == 1 else EdgeLabel.ONLY2}
        touched = set()
        any_touched = set()
        for u, v, lab in self.edges:
            any_touched.update((u, v))
            if lab in mine:
                touched.update((u, v))
        touched.update(v for v in range(self.n) if v not in any_touched)
        return tuple(sorted(touched))

    def shared_vertices(self) -> tuple[int, ...]:
        v1 = set(self.vertices_of(1))
        v2 = set(self.vertices_of(2))
        return tuple(sorted(v1 & v2))

    def relabeled(self, keep: Iterable[int], name: str,
                  extra_edges: Iterable[tuple[int, int, EdgeLabel]] = ()) -> tuple["UnionGraph", dict[int, int]]:
        """Instance induced on `keep` (plus endpoints of `extra_edges`),
        with dense ids.  Returns the new instance and old->new vertex map."""
        order = sorted(set(keep))
        remap = {v: i for i, v in enumerate(order)}
        edges = [
            (remap[u], remap[v], lab)
            for u, v, lab in self.edges
            if u in remap and v in remap
        ]
        prov = list(self.provenance) if self.provenance else list(range(self.n))
        new_prov = [prov[v] for v in order]
        for u, v, lab in extra_edges:
            for x in (u, v):
                if x not in remap:
                    remap[x] = len(order)
                    order.append(x)
                    new_prov.append(None)
            edges.append((remap[u], remap[v], lab))
        return (
            UnionGraph(len(order), tuple(edges), name=name, provenance=tuple(new_prov)),
            remap,
        )


# ---------------------------------------------------------------------------
# Instance file format
# ---------------------------------------------------------------------------

_LABELS = {"1": EdgeLabel.ONLY1, "2": EdgeLabel.ONLY2, "12": EdgeLabel.COMMON}


def parse_instance(text: str, name: str = "instance") -> UnionGraph:
    """Parse the `n m` / `u v L` instance format; `#` starts a comment."""
    lines = text.splitlines()
    rows: list[tuple[int, str]] = []
    for i, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append((i, stripped))
    if not rows:
        raise InstanceError("empty instance file")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise InstanceError(f"line {lineno}: expected 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InstanceError(f"line {lineno}: expected integers in header") from exc
    if n < 0 or m < 0:
        raise InstanceError(f"line {lineno}: negative header values")
    if len(rows) - 1 != m:
        raise InstanceError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    seen: set[Edge] = set()
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 3:
            raise InstanceError(f"line {lineno}: expected 'u v L'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InstanceError(f"line {lineno}: bad vertex id") from exc
        if parts[2] not in _LABELS:
            raise InstanceError(f"line {lineno}: unknown label {parts[2]!r}")
        if u == v:
            raise InstanceError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InstanceError(f"line {lineno}: vertex out of range")
        e = norm_edge(u, v)
        if e in seen:
            raise InstanceError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append((e[0], e[1], _LABELS[parts[2]]))
    return UnionGraph(n, tuple(edges), name=name)


def format_instance(inst: UnionGraph) -> str:
    out = [f"{inst.n} {len(inst.edges)}"]
    for u, v, lab in sorted(inst.edges):
        out.append(f"{u} {v} {lab.value}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Blocks and cutvertices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockForest:
    """Block-cut decomposition of a graph view.

    Blocks are edge sets (plus single isolated vertices are not blocks);
    `incidence` maps each cutvertex to the blocks containing it.
    """

    blocks: tuple[tuple[Edge, ...], ...]
    cutvertices: frozenset[int]
    incidence: dict[int, tuple[int, ...]] = field(hash=False, default_factory=dict)

    def block_vertices(self, idx: int) -> tuple[int, ...]:
        vs: set[int] = set()
        for u, v in self.blocks[idx]:
            vs.update((u, v))
        return tuple(sorted(vs))

    def block_of_edge(self, e: Edge) -> int:
        for i, b in enumerate(self.blocks):
            if e in b:
                return i
        raise KeyError(e)


def blocks_and_cutvertices(g: GraphView) -> BlockForest:
    """Iterative Hopcroft-Tarjan block decomposition."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    stack: list[Edge] = []
    blocks: list[tuple[Edge, ...]] = []
    cuts: set[int] = set()
    timer = 0
    adj = g.adj

    for root in g.vertices:
        if root in disc:
            continue
        parent[root] = None
        work: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if w not in disc:
                    parent[w] = v
                    stack.append(norm_edge(v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, 0))
                    if v == root:
                        root_children += 1
                elif w != parent[v] and disc[w] < disc[v]:
                    stack.append(norm_edge(v, w))
                    low[v] = min(low[v], disc[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        if u != root or root_children >= 1:
                            # pop the block rooted at edge (u, v)
                            blk: list[Edge] = []
                            e = norm_edge(u, v)
                            while stack:
                                top = stack.pop()
                                blk.append(top)
                                if top == e:
                                    break
                            blocks.append(tuple(sorted(blk)))
                        if u != root:
                            cuts.add(u)
                if v == root and root_children >= 2:
                    cuts.add(root)
        if stack:
            blocks.append(tuple(sorted(stack)))
            stack.clear()

    blocks.sort(key=lambda b: b[0])
    incidence: dict[int, list[int]] = {c: [] for c in cuts}
    for i, b in enumerate(blocks):
        for u, v in b:
            for x in (u, v):
                if x in cuts and (not incidence[x] or incidence[x][-1] != i):
                    if i not in incidence[x]:
                        incidence[x].append(i)
    return BlockForest(
        tuple(blocks),
        frozenset(cuts),
        {c: tuple(sorted(bs)) for c, bs in incidence.items()},
    )


def cutvertices_of(g: GraphView) -> frozenset[int]:
    return blocks_and_cutvertices(g).cutvertices


@dataclass(frozen=True)
class CutvertexClass:
    vertex: int
    kind: CutKind
    common_degree: int


def classify_cutvertices(inst: UnionGraph) -> list[CutvertexClass]:
    """One record per vertex that cuts graph 1, graph 2, or the union."""
    cut1 = cutvertices_of(inst.g1())
    cut2 = cutvertices_of(inst.g2())
    cutu = cutvertices_of(inst.union())
    cdeg = {v: inst.common().degree(v) if v in inst.common().adj else 0
            for v in inst.vertices}
    out = []
    for v in sorted(cut1 | cut2 | cutu):
        if v in cutu:
            kind = CutKind.UNION
        elif v in cut1 and v in cut2:
            kind = CutKind.SIMULTANEOUS
        elif v in cut1:
            kind = CutKind.EXCLUSIVE1
        else:
            kind = CutKind.EXCLUSIVE2
        out.append(CutvertexClass(v, kind, cdeg[v]))
    return out


# ---------------------------------------------------------------------------
# Planarity
# ---------------------------------------------------------------------------

def planarity(g: GraphView) -> tuple[bool, Optional[dict[int, tuple[int, ...]]]]:
    """Planarity verdict plus, when planar, a rotation system (clockwise
    neighbor order per vertex) whose face count is Euler-consistent."""
    if not g.edges:
        return True, {v: () for v in g.vertices}
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        return False, None
    rot = {}
    for v in g.vertices:
        if g.degree(v) == 0:
            rot[v] = ()
        else:
            rot[v] = tuple(emb.neighbors_cw_order(v))
    return True, rot
