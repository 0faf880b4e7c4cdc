"""Graph containers for crystals and signed colored graphs.

Vertices are dense integer ids ``0..size-1``.  Either graph may carry a
tuple of tableau labels, one per vertex.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .tableaux import Tableau

Signature = tuple[int, ...]


class ColoredDigraph:
    """Directed graph with edge colors ``1..degree-1``.

    Arbitrary input is accepted, including graphs with several same-colored
    edges at a vertex or monochromatic cycles, so the axiom checkers can
    report on them.  ``f(x, i)`` and ``e(x, i)`` follow the first outgoing /
    incoming ``i``-edge; they are the crystal operators F_i and E_i whenever
    P2 holds.
    """

    def __init__(self, size: int, degree: int, edges: Iterable[tuple[int, int, int]],
                 labels: Optional[Sequence[Tableau]] = None):
        if size < 0:
            raise ValueError("vertex count must be non-negative")
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.size = size
        self.degree = degree
        self.colors = range(1, degree)
        self.succ = {c: [[] for _ in range(size)] for c in self.colors}
        self.pred = {c: [[] for _ in range(size)] for c in self.colors}
        for src, dst, color in edges:
            if color not in self.succ:
                raise ValueError(f"edge color {color} outside 1..{degree - 1}")
            if not (0 <= src < size and 0 <= dst < size):
                raise ValueError(f"edge ({src}, {dst}) references a missing vertex")
            self.succ[color][src].append(dst)
            self.pred[color][dst].append(src)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != size:
            raise ValueError("one label per vertex required")

    def f(self, x: int, i: int) -> Optional[int]:
        out = self.succ[i][x]
        return out[0] if out else None

    def e(self, x: int, i: int) -> Optional[int]:
        inc = self.pred[i][x]
        return inc[0] if inc else None

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges ``(source, target, color)``, sorted."""
        return sorted((s, t, c) for c in self.colors for s in range(self.size) for t in self.succ[c][s])

    def edge_count(self, color: Optional[int] = None) -> int:
        colors = self.colors if color is None else [color]
        return sum(len(out) for c in colors for out in self.succ[c])

    def without_edge(self, src: int, dst: int, color: int) -> ColoredDigraph:
        """Copy of the graph with one edge removed (used for mutation tests)."""
        edges = list(self.edges())
        edges.remove((src, dst, color))
        return ColoredDigraph(self.size, self.degree, edges, self.labels)

    def __repr__(self):
        return f"{type(self).__name__}(size={self.size}, degree={self.degree}, edges={self.edge_count()})"


class SignedColoredGraph:
    """Vertex-signed graph with undirected edges colored ``2..degree-1``.

    Each signature has length ``degree - 1`` with entries in ``{+1, -1}``.
    ``D_i`` is kept as adjacency lists so that inputs with a vertex carrying
    two ``i``-edges can still be represented and rejected by ax1.
    """

    def __init__(self, degree: int, signatures: Sequence[Sequence[int]],
                 edges: Iterable[tuple[int, int, int]],
                 labels: Optional[Sequence[Tableau]] = None):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self.signatures: tuple[Signature, ...] = tuple(tuple(s) for s in signatures)
        self.size = len(self.signatures)
        for v, sig in enumerate(self.signatures):
            if len(sig) != degree - 1:
                raise ValueError(f"vertex {v}: signature length {len(sig)} != degree-1 = {degree - 1}")
            if any(x not in (1, -1) for x in sig):
                raise ValueError(f"vertex {v}: signature entries must be +1 or -1")
        self.colors = range(2, degree)
        self.adj = {c: [[] for _ in range(self.size)] for c in self.colors}
        seen = set()
        for u, v, color in edges:
            if color not in self.adj:
                raise ValueError(f"edge color {color} outside 2..{degree - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.size and 0 <= v < self.size):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            key = (min(u, v), max(u, v), color)
            if key in seen:
                continue
            seen.add(key)
            self.adj[color][u].append(v)
            self.adj[color][v].append(u)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("one label per vertex required")

    def partner(self, v: int, i: int) -> Optional[int]:
        """``D_i(v)``: the first ``i``-neighbour of ``v``, if any."""
        if i not in self.adj:
            return None
        nbrs = self.adj[i][v]
        return nbrs[0] if nbrs else None

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges ``(u, v, color)`` with ``u < v``, sorted."""
        return sorted((u, v, c) for c in self.colors for u in range(self.size)
                      for v in self.adj[c][u] if u < v)

    def edge_colors(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Colors on each adjacent vertex pair; double edges list two colors."""
        out: dict[tuple[int, int], list[int]] = {}
        for u, v, c in self.edges():
            out.setdefault((u, v), []).append(c)
        return {pair: tuple(cs) for pair, cs in sorted(out.items())}

    def without_edge(self, u: int, v: int, color: int) -> SignedColoredGraph:
        edges = list(self.edges())
        edges.remove((min(u, v), max(u, v), color))
        return SignedColoredGraph(self.degree, self.signatures, edges, self.labels)

    def restricted(self, colors: Iterable[int]) -> list[list[int]]:
        """Connected components using only edges of the given colors."""
        colors = [c for c in colors if c in self.adj]
        comp = [-1] * self.size
        out = []
        for start in range(self.size):
            if comp[start] >= 0:
                continue
            comp[start] = len(out)
            members = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for c in colors:
                    for y in self.adj[c][x]:
                        if comp[y] < 0:
                            comp[y] = comp[start]
                            members.append(y)
                            stack.append(y)
            out.append(sorted(members))
        return out

    def __eq__(self, other):
        if not isinstance(other, SignedColoredGraph):
            return NotImplemented
        return (self.degree == other.degree and self.signatures == other.signatures
                and self.edges() == other.edges() and self.labels == other.labels)

    def __repr__(self):
        return f"SignedColoredGraph(size={self.size}, degree={self.degree}, edges={len(self.edges())})"


def signature_string(sig: Sequence[int]) -> str:
    return "".join("+" if x > 0 else "-" for x in sig)


def parse_signature(text: str) -> Signature:
    if any(ch not in "+-" for ch in text):
        raise ValueError(f"signature must be a string over '+-': {text!r}")
    return tuple(1 if ch == "+" else -1 for ch in text)
