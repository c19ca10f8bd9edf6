"""Rotation systems and face machinery.

A rotation system maps each vertex to the clockwise cyclic order of its
neighbors.  Faces are traced with the convention that the face lying to the
RIGHT of a directed edge (u, v) is the orbit of

    next(u, v) = (v, successor of u in the clockwise order around v).

Side computations (is an element left or right of an oriented cycle) are
done in the dual: two faces see the same side of a cycle iff they are
connected by dual edges not crossing the cycle.  Side 0 is the right side.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

Rotation = dict[int, tuple[int, ...]]
DirEdge = tuple[int, int]


def succ_cw(rot: Rotation, v: int, u: int) -> int:
    ring = rot[v]
    i = ring.index(u)
    return ring[(i + 1) % len(ring)]


def next_face_edge(rot: Rotation, e: DirEdge) -> DirEdge:
    u, v = e
    return (v, succ_cw(rot, v, u))


def trace_faces(rot: Rotation) -> list[tuple[DirEdge, ...]]:
    """All face orbits of the rotation system (isolated vertices ignored)."""
    remaining: set[DirEdge] = set()
    for v, ring in rot.items():
        for w in ring:
            remaining.add((v, w))
    faces = []
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        cur = next_face_edge(rot, start)
        while cur != start:
            walk.append(cur)
            remaining.discard(cur)
            cur = next_face_edge(rot, cur)
        faces.append(tuple(walk))
    return faces


def canonical_face(face: Sequence[DirEdge]) -> tuple[DirEdge, ...]:
    """Rotate the directed-edge walk so it starts at its smallest element."""
    k = face.index(min(face))
    return tuple(face[k:]) + tuple(face[:k])


def genus_zero(rot: Rotation, n_vertices: int, n_edges: int, n_components: int) -> bool:
    f = len(trace_faces(rot)) + sum(1 for v, ring in rot.items() if not ring)
    # per-component sphere condition summed: n - m + f = 2c
    return n_vertices - n_edges + f == 2 * n_components


def face_index_of_directed(faces: Sequence[Sequence[DirEdge]]) -> dict[DirEdge, int]:
    out: dict[DirEdge, int] = {}
    for i, face in enumerate(faces):
        for e in face:
            out[e] = i
    return out


def mirror(rot: Rotation) -> Rotation:
    return {v: tuple(reversed(ring)) for v, ring in rot.items()}


def cycle_directed_edges(cycle_vertices: Sequence[int]) -> list[DirEdge]:
    k = len(cycle_vertices)
    return [(cycle_vertices[i], cycle_vertices[(i + 1) % k]) for i in range(k)]


def face_sides_of_cycle(
    rot: Rotation,
    faces: Sequence[tuple[DirEdge, ...]],
    cycle: Iterable[DirEdge],
) -> dict[int, int]:
    """Map face index -> 0 (right of the oriented cycle) or 1 (left).

    The faces must belong to the connected component hosting the cycle;
    faces of other components get no entry.
    """
    cyc = set(cycle)
    cyc_undirected = {frozenset(e) for e in cyc}
    fidx = face_index_of_directed(faces)
    side: dict[int, int] = {}
    for e in cyc:
        side[fidx[e]] = 0
        back = (e[1], e[0])
        if back in fidx:
            side[fidx[back]] = 1
    # dual BFS across edges not on the cycle
    pending = list(side.items())
    while pending:
        f, s = pending.pop()
        for u, v in faces[f]:
            if frozenset((u, v)) in cyc_undirected:
                continue
            g = fidx.get((v, u))
            if g is not None and g not in side:
                side[g] = s
                pending.append((g, s))
    return side


def side_of_vertex(
    rot: Rotation,
    faces: Sequence[tuple[DirEdge, ...]],
    sides: dict[int, int],
    v: int,
) -> int:
    """Side of a vertex not on the cycle: all its incident faces agree."""
    ring = rot[v]
    if not ring:
        raise ValueError(f"vertex {v} is isolated; side undefined from rotation")
    fidx = face_index_of_directed(faces)
    return sides[fidx[(v, ring[0])]]


def side_of_edge(
    faces: Sequence[tuple[DirEdge, ...]],
    sides: dict[int, int],
    e: DirEdge,
) -> int:
    """Side of an (undirected) edge not on the cycle."""
    fidx = face_index_of_directed(faces)
    return sides[fidx[e]]


def rotation_restricted(rot: Rotation, vertices: Iterable[int], keep: set[frozenset[int]]) -> Rotation:
    """Induced rotation: drop neighbors whose edge is not in `keep`."""
    out = {}
    for v in vertices:
        out[v] = tuple(w for w in rot.get(v, ()) if frozenset((v, w)) in keep)
    return out


def face_vertex_sets(faces: Sequence[tuple[DirEdge, ...]]) -> list[frozenset[int]]:
    return [frozenset(u for u, _ in face) for face in faces]
