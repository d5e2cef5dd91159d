"""Union-find over the integers ``0..n-1``."""

from __future__ import annotations

from typing import Iterable


class UnionFind:
    """Disjoint sets with path compression and union by size."""

    __slots__ = ("_parent", "_size")

    def __init__(self, n: int):
        self._parent = list(range(n))
        self._size = [1] * n

    def __len__(self) -> int:
        return len(self._parent)

    def find(self, x: int) -> int:
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``; return False if already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self._size[rx] < self._size[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        self._size[rx] += self._size[ry]
        return True

    def union_all(self, pairs: Iterable[tuple[int, int]]) -> None:
        for x, y in pairs:
            self.union(x, y)

    def connected(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def labels(self) -> tuple[int, ...]:
        """Component labels numbered by first appearance (restricted growth)."""
        seen: dict[int, int] = {}
        out = []
        for x in range(len(self._parent)):
            root = self.find(x)
            if root not in seen:
                seen[root] = len(seen)
            out.append(seen[root])
        return tuple(out)
