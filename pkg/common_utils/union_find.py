"""
Disjoint-set forest over the integers 0..size-1.

Used for orbit closure: coset orbits under coordinate permutations and
ordered-pair orbits under graph automorphisms.
"""

from typing import Dict, Iterable, List, Optional, Sequence


class UnionFind:
    """Union by rank with path halving, array backed."""

    def __init__(self, size: int):
        self.parent: List[int] = list(range(size))
        self.rank: List[int] = [0] * size
        self.size: List[int] = [1] * size
        self._components = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        self._components -= 1
        return True

    def __len__(self) -> int:
        return self._components

    def canonical_labels(self) -> List[int]:
        """
        Label every element by the smallest element of its class.

        The labeling depends only on the partition, not on the order in which
        unions were performed.
        """
        smallest: Dict[int, int] = {}
        labels = [0] * len(self.parent)
        for x in range(len(self.parent)):
            root = self.find(x)
            if root not in smallest:
                smallest[root] = x
            labels[x] = smallest[root]
        return labels


def find_orbits(size: int, image_maps: Iterable[Sequence[int]],
                points: Optional[Iterable[int]] = None) -> UnionFind:
    """
    Orbits of the group generated by some permutations of 0..size-1.

    The orbits of the generated group equal the classes of the closure
    x ~ g(x) over the generators, so the group is never materialized.

    Args:
        size: Number of points
        image_maps: One image sequence per generator (image_maps[g][x] = g(x))
        points: Optional subset of points to close over (default: all)

    Returns:
        The populated UnionFind
    """
    uf = UnionFind(size)
    domain = range(size) if points is None else list(points)
    for images in image_maps:
        for x in domain:
            uf.union(x, images[x])
    return uf
