"""Color-preserving isomorphism search for signed colored graphs.

The search maps vertices in breadth-first order, so after the first vertex
of a component every new vertex already has a mapped neighbour and its
image is confined to the matching neighbours on the other side.  For dual
equivalence graphs, where each color class is a matching, one root choice
per component fixes the whole map.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Hashable, Iterator, Optional, Sequence

from .graphs import SignedColoredGraph


@dataclass
class Structure:
    """Vertices with hashable keys and undirected colored adjacency lists."""

    keys: list[Hashable]
    adj: dict[int, list[list[int]]]

    @property
    def size(self) -> int:
        return len(self.keys)

    def invariant(self, v: int):
        return (self.keys[v], tuple(sorted((c, len(nb[v])) for c, nb in self.adj.items() if nb[v])))


def structure_of(g: SignedColoredGraph, vertices: Optional[Sequence[int]] = None,
                 colors=None, signed: bool = True) -> Structure:
    """The (induced, color-restricted) structure of ``g``, relabelled 0..k-1."""
    vertices = list(range(g.size)) if vertices is None else list(vertices)
    colors = list(g.colors) if colors is None else [c for c in colors if c in g.adj]
    local = {v: k for k, v in enumerate(vertices)}
    adj = {c: [[local[w] for w in g.adj[c][v] if w in local] for v in vertices] for c in colors}
    keys = [g.signatures[v] if signed else None for v in vertices]
    return Structure(keys, adj)


def make_structure(size: int, edges, colors=None) -> Structure:
    """Unsigned structure from ``(u, v, color)`` triples."""
    colors = sorted({c for _, _, c in edges}) if colors is None else list(colors)
    adj = {c: [[] for _ in range(size)] for c in colors}
    for u, v, c in edges:
        adj[c][u].append(v)
        adj[c][v].append(u)
    return Structure([None] * size, adj)


def _bfs_order(s: Structure) -> list[int]:
    seen = [False] * s.size
    order = []
    # start each component from its rarest vertex class to cut branching
    freq = Counter(s.invariant(v) for v in range(s.size))
    for root in sorted(range(s.size), key=lambda v: (freq[s.invariant(v)], v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for c in sorted(s.adj):
                for w in s.adj[c][v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
    return order


def isomorphisms(a: Structure, b: Structure) -> Iterator[tuple[int, ...]]:
    """Yield every color- and key-preserving bijection ``a -> b``."""
    if a.size != b.size or set(a.adj) != set(b.adj):
        return
    inv_a = [a.invariant(v) for v in range(a.size)]
    inv_b = [b.invariant(v) for v in range(b.size)]
    if Counter(inv_a) != Counter(inv_b):
        return
    by_inv: dict = {}
    for v, key in enumerate(inv_b):
        by_inv.setdefault(key, []).append(v)
    order = _bfs_order(a)
    colors = sorted(a.adj)
    fwd = [-1] * a.size
    used = [False] * b.size

    def candidates(v):
        for c in colors:
            for u in a.adj[c][v]:
                if fwd[u] >= 0:
                    return b.adj[c][fwd[u]]
        return by_inv[inv_a[v]]

    def consistent(v, x):
        if used[x] or inv_b[x] != inv_a[v]:
            return False
        for c in colors:
            mapped = [fwd[u] for u in a.adj[c][v] if fwd[u] >= 0]
            nbrs = b.adj[c][x]
            if any(y not in nbrs for y in mapped):
                return False
            if sum(1 for y in nbrs if used[y]) != len(mapped):
                return False
        return True

    def extend(k):
        if k == len(order):
            yield tuple(fwd)
            return
        v = order[k]
        for x in list(dict.fromkeys(candidates(v))):
            if consistent(v, x):
                fwd[v] = x
                used[x] = True
                yield from extend(k + 1)
                fwd[v] = -1
                used[x] = False

    yield from extend(0)


def find_isomorphism(a: Structure, b: Structure) -> Optional[tuple[int, ...]]:
    return next(isomorphisms(a, b), None)
