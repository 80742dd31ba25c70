"""Simple undirected graphs, the see-relation on edges, and structural queries.

Vertices are ``0..n-1``; edges are identified by their index in ``Graph.edges``
and stored as ``(min, max)`` pairs in input order.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError

ACYCLIC = "acyclic"


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    incidence: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [set() for _ in range(vertex_count)]
        inc = [[] for _ in range(vertex_count)]
        norm = []
        for idx, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {idx} ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"edge {idx} is a loop at {u}")
            if v in adj[u]:
                raise ValueError(f"edge {idx} ({u}, {v}) is a duplicate")
            adj[u].add(v)
            adj[v].add(u)
            inc[u].append(idx)
            inc[v].append(idx)
            norm.append((min(u, v), max(u, v)))
        return cls(
            vertex_count,
            tuple(norm),
            tuple(frozenset(s) for s in adj),
            tuple(tuple(x) for x in inc),
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def edge_index(self, u: int, v: int) -> int:
        for e in self.incidence[u]:
            if v in self.edges[e]:
                return e
        raise KeyError((u, v))

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return len(bfs_distances(self, 0)) == self.vertex_count

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            comp = sorted(bfs_distances(self, s))
            for v in comp:
                seen[v] = True
            out.append(comp)
        return out

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Induced subgraph on ``vertices``, relabelled in ascending order.

        Returns ``(subgraph, vertex_map, edge_map)`` where the maps send new
        identifiers to identifiers in ``self``.
        """
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        emap = [e for e, (u, v) in enumerate(self.edges) if u in pos and v in pos]
        sub = Graph.from_edges(len(vs), [(pos[self.edges[e][0]], pos[self.edges[e][1]]) for e in emap])
        return sub, vs, emap

    def to_dict(self) -> dict:
        return {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges]}


def parse_graph(text: str) -> Graph:
    """Parse edge-list text: one ``u v`` pair per line, optional ``n m`` header.

    The first line is taken as a header when the remaining line count equals
    ``m`` and every remaining index is below ``n``. A lone line is an edge
    unless it reads ``n 0`` (an edgeless graph). Blank lines and ``#``
    comments are skipped.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise ParseError("negative vertex index", lineno)
        rows.append((lineno, a, b))

    n = None
    if rows:
        _, hn, hm = rows[0]
        rest = rows[1:]
        if (not rest and hm == 0) or (rest and hm == len(rest) and all(a < hn and b < hn for _, a, b in rest)):
            n = hn
            rows = rest
    if n is None:
        n = 1 + max((max(a, b) for _, a, b in rows), default=-1)

    seen = set()
    for lineno, a, b in rows:
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        if a >= n or b >= n:
            raise ParseError(f"vertex index out of range (n={n})", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph.from_edges(n, [(a, b) for _, a, b in rows])


def format_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ConflictGraph:
    """The see-relation: ``rows[e]`` holds every edge that ``e`` sees."""

    edge_count: int
    rows: tuple[frozenset[int], ...]

    def conflicts(self, e: int, f: int) -> bool:
        return f in self.rows[e]

    def pairs(self) -> list[tuple[int, int]]:
        return [(e, f) for e in range(self.edge_count) for f in sorted(self.rows[e]) if e < f]

    def restricted(self, keep: Iterable[int]) -> list[tuple[int, int]]:
        """Conflicting pairs among ``keep``, as positions into ``sorted(keep)``."""
        ks = sorted(keep)
        pos = {e: i for i, e in enumerate(ks)}
        return [(pos[e], pos[f]) for e in ks for f in self.rows[e] if f in pos and e < f]


def see_relation(g: Graph) -> ConflictGraph:
    """Edges sharing a vertex, or both touching a common third edge."""
    rows = []
    for e, (u, v) in enumerate(g.edges):
        near = set()
        for x in (u, v):
            near.update(g.incidence[x])
            for y in g.adjacency[x]:
                near.update(g.incidence[y])
        near.discard(e)
        rows.append(frozenset(near))
    return ConflictGraph(g.edge_count, tuple(rows))


def bfs_distances(g: Graph, source: int, alive=None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adjacency[x]):
            if y not in dist and (alive is None or y in alive):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def girth(g: Graph):
    """Length of a shortest cycle, or ``ACYCLIC`` for forests."""
    best = None
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


def find_short_cycle(g: Graph, max_len: int, alive=None):
    """Shortest cycle of length at most ``max_len`` as a vertex list, or None.

    Among shortest cycles the lexicographically least sequence is returned,
    normalised to start at its minimum vertex with ``seq[1] < seq[-1]``.
    ``alive`` optionally restricts the search to an induced subgraph.
    """
    ok = (lambda x: True) if alive is None else alive.__contains__
    order = [v for v in range(g.vertex_count) if ok(v)]

    def walk(path, length):
        x = path[-1]
        s = path[0]
        for y in sorted(g.adjacency[x]):
            if not ok(y):
                continue
            if len(path) == length:
                if y == s and path[1] < path[-1]:
                    return list(path)
                continue
            if y > s and y not in path:
                path.append(y)
                found = walk(path, length)
                path.pop()
                if found:
                    return found
        return None

    for length in range(3, max_len + 1):
        for s in order:
            found = walk([s], length)
            if found:
                return found
    return None


def edge_distance_order(g: Graph, v: int) -> list[int]:
    """Edges by non-increasing distance from ``v``; ties by edge identifier.

    The distance of an edge is the smaller of its endpoints' distances, so the
    edges at ``v`` come last.
    """
    if not 0 <= v < g.vertex_count:
        raise PreconditionError(f"vertex {v} not in graph")
    dist = bfs_distances(g, v)
    if len(dist) != g.vertex_count:
        raise PreconditionError("graph is disconnected; edge distances are not all finite")
    keyed = [(-min(dist[a], dist[b]), e) for e, (a, b) in enumerate(g.edges)]
    return [e for _, e in sorted(keyed)]


@dataclass(frozen=True)
class PlanarEmbedding:
    """A rotation system: ``rotation[v]`` is the cyclic order of edges at ``v``."""

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        g = self.graph
        if len(self.rotation) != g.vertex_count:
            raise ValueError("rotation must list every vertex")
        for v, rot in enumerate(self.rotation):
            if sorted(rot) != sorted(g.incidence[v]) or len(set(rot)) != len(rot):
                raise ValueError(f"rotation at vertex {v} must list its incident edges exactly once")

    def faces(self) -> list[list[tuple[int, int]]]:
        """Boundary walks as lists of darts ``(tail, head)``."""
        self.validate()
        g = self.graph
        succ = {}
        for v, rot in enumerate(self.rotation):
            for i, e in enumerate(rot):
                succ[(v, e)] = rot[(i + 1) % len(rot)]
        seen = set()
        out = []
        for e, (a, b) in enumerate(g.edges):
            for dart in ((a, b), (b, a)):
                if dart in seen:
                    continue
                face = []
                cur = dart
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    tail, head = cur
                    nxt = succ[(head, g.edge_index(tail, head))]
                    x, y = g.edges[nxt]
                    cur = (head, y if x == head else x)
                if cur != dart:
                    raise ValueError("face traversal did not close; inconsistent rotation")
                out.append(face)
        return out


def euler_discharge(emb: PlanarEmbedding) -> int:
    """Sum of ``2d(v) - 6`` over vertices plus ``d(f) - 6`` over faces.

    Equals -12 exactly when the rotation system is a connected planar embedding
    (each extra unit of genus adds 12).
    """
    g = emb.graph
    if not g.is_connected():
        raise ValueError("embedding graph must be connected")
    faces = emb.faces()
    vertex_charge = sum(2 * g.degree(v) - 6 for v in range(g.vertex_count))
    face_charge = sum(len(f) - 6 for f in faces)
    return vertex_charge + face_charge


def embedding_from_positions(g: Graph, pos: Sequence[tuple[float, float]]) -> PlanarEmbedding:
    """Rotation system read off a straight-line drawing (counter-clockwise)."""
    rotation = []
    for v in range(g.vertex_count):
        x0, y0 = pos[v]

        def angle(e):
            a, b = g.edges[e]
            w = b if a == v else a
            return math.atan2(pos[w][1] - y0, pos[w][0] - x0)

        rotation.append(tuple(sorted(g.incidence[v], key=angle)))
    return PlanarEmbedding(g, tuple(rotation))
