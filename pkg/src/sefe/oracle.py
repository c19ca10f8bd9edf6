"""Brute-force SEFE decision for tiny instances.

Enumerates genus-zero sphere embeddings of both input graphs.  An embedding
of a (possibly disconnected) graph is a rotation system per connected
component together with a placement: for every ordered component pair
(A, B), the face of A that contains B.  Placements are generated by
inserting components one at a time into a cell of the partial arrangement
and choosing, for each group of already-placed components visible from that
cell, the face of the new component that swallows it.

Two embeddings of graph 1 and graph 2 witness a SEFE iff they induce the
same combinatorial data on the common graph: identical clockwise orders of
common edges around shared vertices, and for every ordered pair of common
components (H, H'), the same face of H containing H'.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .embeddings import (
    DirEdge,
    Rotation,
    canonical_face,
    face_index_of_directed,
    mirror,
    trace_faces,
)
from .graph_core import GraphView, UnionGraph

DEFAULT_EDGE_BOUND = 14


class BoundExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Rotation systems of one connected component
# ---------------------------------------------------------------------------

def _vertex_rings(neighbors: Sequence[int]) -> list[tuple[int, ...]]:
    if len(neighbors) <= 2:
        return [tuple(neighbors)]
    first, rest = neighbors[0], neighbors[1:]
    return [(first,) + p for p in itertools.permutations(rest)]


def component_rotations(view: GraphView, comp: Sequence[int]) -> Iterator[Rotation]:
    """All genus-zero rotation systems of one connected component."""
    comp = list(comp)
    m = sum(1 for u, v in view.edges if u in set(comp) and v in set(comp))
    target_faces = m - len(comp) + 2
    ring_choices = [_vertex_rings(view.adj[v]) for v in comp]
    for rings in itertools.product(*ring_choices):
        rot = dict(zip(comp, rings))
        if m == 0 or len(trace_faces(rot)) == target_faces:
            yield rot


# ---------------------------------------------------------------------------
# Sphere embeddings of a whole view
# ---------------------------------------------------------------------------

@dataclass
class SphereEmbedding:
    rot: Rotation
    comps: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[tuple[DirEdge, ...], ...], ...]  # per comp; () for isolated
    pos: dict[tuple[int, int], int]  # (i, j) -> face index of comps[i] holding comps[j]

    def n_faces(self, i: int) -> int:
        return max(1, len(self.faces[i]))


def _compatible_cell(pos, placed, cell) -> bool:
    for a in range(len(placed)):
        i = placed[a]
        for b in range(a + 1, len(placed)):
            j = placed[b]
            if cell[a] != pos[(i, j)] and cell[b] != pos[(j, i)]:
                return False
    return True


def _cells(pos, placed, nfaces) -> Iterator[tuple[int, ...]]:
    """Cells of the arrangement of the placed components, as face vectors."""

    def extend(prefix: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
        if k == len(placed):
            yield prefix
            return
        j = placed[k]
        for f in range(nfaces[j]):
            ok = True
            for a in range(k):
                i = placed[a]
                if prefix[a] != pos[(i, j)] and f != pos[(j, i)]:
                    ok = False
                    break
            if ok:
                yield from extend(prefix + (f,), k + 1)

    yield from extend((), 0)


def _visibility_groups(pos, placed, cell) -> list[list[int]]:
    """Partition placed components into groups lying in a common part of the
    complement of the cell (each group is swallowed by one face of a newly
    inserted component)."""
    parent = {i: i for i in placed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(placed)):
        i = placed[a]
        for b in range(a + 1, len(placed)):
            j = placed[b]
            if pos[(i, j)] != cell[a] or pos[(j, i)] != cell[b]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in placed:
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def enumerate_embeddings(view: GraphView) -> Iterator[SphereEmbedding]:
    comps = tuple(view.components())
    comp_rotations = [list(component_rotations(view, c)) for c in comps]

    def place(k: int, pos: dict, nfaces: list[int]) -> Iterator[dict]:
        if k == len(comps):
            yield dict(pos)
            return
        placed = list(range(k))
        if not placed:
            yield from place(k + 1, pos, nfaces)
            return
        for cell in _cells(pos, placed, nfaces):
            groups = _visibility_groups(pos, placed, cell)
            for assign in itertools.product(range(nfaces[k]), repeat=len(groups)):
                ext = dict(pos)
                for a, i in enumerate(placed):
                    ext[(i, k)] = cell[a]
                for g, f in zip(groups, assign):
                    for i in g:
                        ext[(k, i)] = f
                yield from place(k + 1, ext, nfaces)

    for rots in itertools.product(*comp_rotations):
        rot: Rotation = {}
        for r in rots:
            rot.update(r)
        faces = tuple(
            tuple(trace_faces({v: rot[v] for v in c})) for c in comps
        )
        nfaces = [max(1, len(f)) for f in faces]
        for pos in place(0, {}, nfaces):
            yield SphereEmbedding(rot, comps, faces, pos)


def enumerate_planar_embeddings(view: GraphView, bound: int = DEFAULT_EDGE_BOUND) -> list[Rotation]:
    """Genus-zero rotation systems of the view, deduplicated up to
    reflection of the whole system."""
    if len(view.edges) > bound:
        raise BoundExceeded(f"{len(view.edges)} edges exceeds bound {bound}")
    seen = set()
    out = []
    comps = view.components()
    for rots in itertools.product(*[list(component_rotations(view, c)) for c in comps]):
        rot: Rotation = {}
        for r in rots:
            rot.update(r)
        key = tuple(sorted((v, _canon_ring(r)) for v, r in rot.items()))
        mkey = tuple(sorted((v, _canon_ring(r)) for v, r in mirror(rot).items()))
        if min(key, mkey) in seen:
            continue
        seen.add(min(key, mkey))
        out.append(rot)
    return out


# ---------------------------------------------------------------------------
# Induced common signature
# ---------------------------------------------------------------------------

def _canon_ring(ring: Sequence[int]) -> tuple[int, ...]:
    if len(ring) <= 2:
        return tuple(sorted(ring))
    k = ring.index(min(ring))
    return tuple(ring[k:]) + tuple(ring[:k])


def common_components(inst: UnionGraph) -> list[tuple[int, ...]]:
    return inst.common().components()


def induced_common_signature(inst: UnionGraph, emb: SphereEmbedding):
    """Rotations of common edges plus the relative-position table of common
    components, in a canonical, embedding-comparable form."""
    common = inst.common()
    common_edge_set = {frozenset(e) for e in common.edges}
    ccomps = common_components(inst)
    comp_id = {}
    for idx, h in enumerate(ccomps):
        for v in h:
            comp_id[v] = idx

    rings = []
    h_rot: list[Rotation] = [dict() for _ in ccomps]
    for v in common.vertices:
        ring = tuple(w for w in emb.rot.get(v, ()) if frozenset((v, w)) in common_edge_set)
        rings.append((v, _canon_ring(ring)))
        h_rot[comp_id[v]][v] = ring

    h_faces = [trace_faces(r) for r in h_rot]

    # map: which view component hosts each common component, and the
    # refinement classes of view faces into common-component faces
    vcomp_of = {}
    for ci, c in enumerate(emb.comps):
        for v in c:
            vcomp_of[v] = ci

    view_fidx = [face_index_of_directed(f) for f in emb.faces]

    def view_face_class(hi: int):
        """Union-find over the faces of H's host view component, merging
        across edges not in H; returns (find, face_of_H_face)."""
        host = vcomp_of[ccomps[hi][0]]
        faces = emb.faces[host]
        parent = list(range(len(faces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        h_edge_set = set()
        for v, ring in h_rot[hi].items():
            for w in ring:
                h_edge_set.add(frozenset((v, w)))
        fidx = view_fidx[host]
        for i, face in enumerate(faces):
            for (u, v) in face:
                if frozenset((u, v)) in h_edge_set:
                    continue
                j = fidx.get((v, u))
                if j is not None:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        rep_of_hface = {}
        for k, orbit in enumerate(h_faces[hi]):
            e0 = orbit[0]
            rep_of_hface[find(fidx[e0])] = k
        return host, find, rep_of_hface

    positions = []
    for hi, h in enumerate(ccomps):
        if len(h_faces[hi]) < 2:
            continue  # single face: relative positions carry no information
        host, find, rep_of = view_face_class(hi)
        face_keys = [canonical_face(f) for f in h_faces[hi]]
        for hj, h2 in enumerate(ccomps):
            if hj == hi:
                continue
            host2 = vcomp_of[h2[0]]
            if host2 == host:
                w = h2[0]
                ring = emb.rot.get(w, ())
                vface = view_fidx[host][(w, ring[0])]
            else:
                vface = emb.pos[(host, host2)]
            k = rep_of[find(vface)]
            positions.append(((hi, hj), face_keys[k]))

    return (tuple(sorted(rings)), tuple(sorted(positions)))


def _signature_face_sets(inst: UnionGraph, signature) -> list[list[frozenset[int]]]:
    """Per common component, the vertex sets of its faces under the
    signature's induced rotation."""
    rings, _pos = signature
    ring_of = dict(rings)
    out = []
    for h in common_components(inst):
        rot = {}
        for v in h:
            ring = ring_of[v]
            # canonical ring is a genuine cyclic order only for deg >= 3;
            # for deg <= 2 the rotation is unique anyway
            rot[v] = ring
        faces = trace_faces(rot)
        if not faces:
            out.append([frozenset(h)])
        else:
            out.append([frozenset(u for u, _ in f) for f in faces])
    return out


def satisfies_face_constraints(
    inst: UnionGraph,
    signature,
    face_constraints: Iterable[frozenset[int]],
) -> bool:
    constraints = [frozenset(c) for c in face_constraints]
    if not constraints:
        return True
    comp_of = {}
    ccomps = common_components(inst)
    for idx, h in enumerate(ccomps):
        for v in h:
            comp_of[v] = idx
    face_sets = _signature_face_sets(inst, signature)
    for group in constraints:
        owners = {comp_of.get(v) for v in group}
        if None in owners or len(owners) != 1:
            return False  # not within one common component: unsupported here
        hi = owners.pop()
        if not any(group <= fs for fs in face_sets[hi]):
            return False
    return True


# ---------------------------------------------------------------------------
# The oracle
# ---------------------------------------------------------------------------

def sefe_oracle(
    inst: UnionGraph,
    face_constraints: Iterable[frozenset[int]] = (),
    bound: int = DEFAULT_EDGE_BOUND,
) -> bool:
    if len(inst.edges) > bound:
        raise BoundExceeded(
            f"instance has {len(inst.edges)} union edges, bound is {bound}")
    from .graph_core import planarity

    constraints = [frozenset(c) for c in face_constraints]
    if not planarity(inst.g1())[0] or not planarity(inst.g2())[0]:
        return False

    sigs1 = set()
    for emb in enumerate_embeddings(inst.g1()):
        sig = induced_common_signature(inst, emb)
        if satisfies_face_constraints(inst, sig, constraints):
            sigs1.add(sig)
    if not sigs1:
        return False
    for emb in enumerate_embeddings(inst.g2()):
        sig = induced_common_signature(inst, emb)
        if sig in sigs1:
            return True
    return False
