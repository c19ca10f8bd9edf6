"""Boolean equation/inequation system solved by union-find with parity.

The decision procedures only ever emit constraints of the form x = y or
x != y, so satisfiability reduces to checking that no cycle of the
constraint graph has odd parity.  Variables carry structured tags so a
constraint dump is self-describing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Optional

EQ = 0
NEQ = 1

UNSAT = "UNSAT"


@dataclass
class BoolSystem:
    tags: list[Hashable] = field(default_factory=list)
    constraints: list[tuple[int, int, int]] = field(default_factory=list)
    _index: dict[Hashable, int] = field(default_factory=dict)
    _parent: list[int] = field(default_factory=list)
    _parity: list[int] = field(default_factory=list)
    _rank: list[int] = field(default_factory=list)
    _conflict: Optional[tuple[int, int, int]] = None

    def variable(self, tag: Hashable) -> int:
        """Id of the variable with this tag, registering it if new."""
        i = self._index.get(tag)
        if i is None:
            i = len(self.tags)
            self._index[tag] = i
            self.tags.append(tag)
            self._parent.append(i)
            self._parity.append(0)
            self._rank.append(0)
        return i

    def has_variable(self, tag: Hashable) -> bool:
        return tag in self._index

    def _find_with_parity(self, x: int) -> tuple[int, int]:
        # parity of x relative to its root
        root = x
        p = 0
        while self._parent[root] != root:
            p ^= self._parity[root]
            root = self._parent[root]
        # path compression
        cur, cp = x, p
        while self._parent[cur] != root:
            nxt = self._parent[cur]
            nparity = cp ^ self._parity[cur]
            self._parent[cur] = root
            self._parity[cur], cp = cp, nparity
            cur = nxt
        return root, p

    def add_constraint(self, x: int, y: int, parity: int) -> None:
        if not (0 <= x < len(self.tags) and 0 <= y < len(self.tags)):
            raise KeyError("unknown variable id")
        self.constraints.append((x, y, parity))
        if self._conflict is not None:
            return
        rx, px = self._find_with_parity(x)
        ry, py = self._find_with_parity(y)
        if rx == ry:
            if px ^ py != parity:
                self._conflict = (x, y, parity)
            return
        if self._rank[rx] < self._rank[ry]:
            rx, ry, px, py = ry, rx, py, px
        self._parent[ry] = rx
        self._parity[ry] = px ^ py ^ parity
        if self._rank[rx] == self._rank[ry]:
            self._rank[rx] += 1

    def add(self, tag_x: Hashable, tag_y: Hashable, parity: int) -> None:
        self.add_constraint(self.variable(tag_x), self.variable(tag_y), parity)

    def connected(self, x: int, y: int) -> Optional[int]:
        """EQ/NEQ if x and y are parity-linked, None otherwise."""
        rx, px = self._find_with_parity(x)
        ry, py = self._find_with_parity(y)
        if rx != ry:
            return None
        return px ^ py

    def solve(self):
        """Assignment (component roots get 0) or UNSAT."""
        if self._conflict is not None:
            return UNSAT
        return {
            self.tags[i]: self._find_with_parity(i)[1]
            for i in range(len(self.tags))
        }

    def satisfiable(self) -> bool:
        return self._conflict is None

    def odd_cycle_witness(self) -> Optional[list[tuple[int, int, int]]]:
        """A parity-odd constraint cycle, present whenever UNSAT."""
        if self._conflict is None:
            return None
        cx, cy, cparity = self._conflict
        # BFS in the constraint graph, excluding the conflicting constraint
        # itself, from cx to cy; its parity plus cparity is odd.
        adj: dict[int, list[tuple[int, int, tuple[int, int, int]]]] = {}
        skip_once = True
        for (x, y, p) in self.constraints:
            if skip_once and (x, y, p) == self._conflict:
                skip_once = False
                continue
            adj.setdefault(x, []).append((y, p, (x, y, p)))
            adj.setdefault(y, []).append((x, p, (x, y, p)))
        prev: dict[int, tuple[int, tuple[int, int, int]]] = {cx: (cx, None)}
        frontier = [cx]
        while frontier and cy not in prev:
            nxt = []
            for v in frontier:
                for w, _p, c in adj.get(v, ()):
                    if w not in prev:
                        prev[w] = (v, c)
                        nxt.append(w)
            frontier = nxt
        path = []
        cur = cy
        while cur != cx:
            parent, c = prev[cur]
            path.append(c)
            cur = parent
        path.append(self._conflict)
        return path

    def dump(self) -> str:
        def fmt(tag: Hashable) -> str:
            if isinstance(tag, tuple):
                return tag[0] + "(" + ", ".join(str(t) for t in tag[1:]) + ")"
            return str(tag)

        lines = []
        for x, y, p in self.constraints:
            op = "<=>" if p == EQ else "<!=>"
            lines.append(f"{fmt(self.tags[x])} {op} {fmt(self.tags[y])}")
        return "\n".join(lines)
