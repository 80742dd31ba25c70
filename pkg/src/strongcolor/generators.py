"""Graph families, random subcubic generators and the built-in named instances.

Planar families come with straight-line coordinates so that a rotation system
can be read off with :func:`embedding_from_positions`.
"""

from __future__ import annotations

import math
import random

from .graph import Graph, PlanarEmbedding, embedding_from_positions

MAX_SEED = 2**64 - 1


def _rng(seed) -> random.Random:
    if seed is None:
        seed = 0
    if not 0 <= int(seed) <= MAX_SEED:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return random.Random(int(seed))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs a, b >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def lcf(n: int, shifts, repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation ``[shifts]^repeats``."""
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    seq = list(shifts) * repeats
    for i, s in enumerate(seq):
        j = (i + s) % n
        edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def heawood() -> Graph:
    return lcf(14, [5, -5], 7)


def pappus() -> Graph:
    return lcf(18, [5, 7, -7, 7, -7, -5], 3)


def c5_blowup(t: int) -> Graph:
    """Each vertex of C5 becomes ``t`` independent copies; each edge a full join."""
    if t < 1:
        raise ValueError("blow-up factor must be >= 1")
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        for a in range(t):
            for b in range(t):
                edges.append((i * t + a, j * t + b))
    return Graph.from_edges(5 * t, edges)


def _ngon(n, radius, phase=0.0):
    return [(radius * math.cos(phase + 2 * math.pi * k / n), radius * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]


def prism_with_positions(n: int):
    if n < 3:
        raise ValueError("prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges), _ngon(n, 2.0) + _ngon(n, 1.0)


def prism(n: int) -> Graph:
    return prism_with_positions(n)[0]


def cube() -> Graph:
    return prism(4)


def k4_with_positions():
    g = complete(4)
    return g, [(0.0, 0.0)] + _ngon(3, 1.0, math.pi / 2)


def cycle_with_positions(n: int):
    return cycle(n), _ngon(n, 1.0)


def hex_grid_with_positions(rows: int, cols: int):
    """Honeycomb patch of ``rows`` x ``cols`` hexagons (brick-wall layout)."""
    if rows < 1 or cols < 1:
        raise ValueError("hex_grid needs rows, cols >= 1")
    height = 2 * rows + 2
    nodes = [(i, j) for i in range(cols + 1) for j in range(height)]
    drop = {(0, 2 * rows + 1), (cols, (2 * rows + 1) * (cols % 2))}
    nodes = [p for p in nodes if p not in drop]
    index = {p: k for k, p in enumerate(nodes)}
    edges = []
    for i in range(cols + 1):
        for j in range(2 * rows + 1):
            a, b = (i, j), (i, j + 1)
            if a in index and b in index:
                edges.append((index[a], index[b]))
    for i in range(cols):
        for j in range(height):
            if i % 2 == j % 2:
                a, b = (i, j), (i + 1, j)
                if a in index and b in index:
                    edges.append((index[a], index[b]))
    h = math.sqrt(3) / 2
    pos = [(0.5 + i + i // 2 + (j % 2) * ((i % 2) - 0.5), h * j) for i, j in nodes]
    return Graph.from_edges(len(nodes), edges), pos


def hex_grid(rows: int, cols: int) -> Graph:
    return hex_grid_with_positions(rows, cols)[0]


def dodecahedron_with_positions():
    # rings: outer pentagon, middle decagon, inner pentagon
    outer = list(range(5))
    mid = list(range(5, 15))
    inner = list(range(15, 20))
    edges = [(outer[k], outer[(k + 1) % 5]) for k in range(5)]
    edges += [(outer[k], mid[2 * k]) for k in range(5)]
    edges += [(mid[k], mid[(k + 1) % 10]) for k in range(10)]
    edges += [(mid[2 * k + 1], inner[k]) for k in range(5)]
    edges += [(inner[k], inner[(k + 1) % 5]) for k in range(5)]
    pos = _ngon(5, 3.0) + _ngon(10, 2.0) + _ngon(5, 1.0, math.pi / 5)
    return Graph.from_edges(20, edges), pos


def random_subcubic(n: int, seed=None, extra: float = 0.5) -> Graph:
    """Connected random graph with maximum degree 3.

    A random tree of degree at most 3 is grown first; then a random number of
    further edges (up to ``extra`` times the room left) is added between
    vertices that still have spare degree.
    """
    if n < 1:
        raise ValueError("random_subcubic needs n >= 1")
    rng = _rng(seed)
    deg = [0] * n
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        v = order[k]
        choices = [u for u in order[:k] if deg[u] < 3]
        u = rng.choice(choices)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    room = sum(3 - d for d in deg) // 2
    target = rng.randint(0, max(0, int(room * extra) + 1))
    tries = 0
    while target > 0 and tries < 50 * n:
        tries += 1
        open_ = [v for v in range(n) if deg[v] < 3]
        if len(open_) < 2:
            break
        u, v = rng.sample(open_, 2)
        key = (min(u, v), max(u, v))
        if key in edges:
            continue
        edges.add(key)
        deg[u] += 1
        deg[v] += 1
        target -= 1
    return Graph.from_edges(n, sorted(edges))


def random_cubic(n: int, seed=None, max_tries: int = 10_000) -> Graph:
    """Uniform-ish random 3-regular simple graph via the pairing model."""
    if n < 4 or n % 2:
        raise ValueError("random_cubic requires even n >= 4")
    rng = _rng(seed)
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for k in range(0, len(stubs), 2):
            u, v = stubs[k], stubs[k + 1]
            key = (min(u, v), max(u, v))
            if u == v or key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return Graph.from_edges(n, sorted(edges))
    raise RuntimeError("pairing model did not produce a simple graph")


def random_cubic_girth(n: int, min_girth: int = 6, seed=None, max_tries: int = 1000) -> Graph:
    """Random cubic graph of girth >= ``min_girth``.

    A Hamiltonian cycle in random order plus chords added greedily between
    vertices that are still at distance >= ``min_girth - 1``; restarts when
    it gets stuck.
    """
    if n < 4 or n % 2:
        raise ValueError("random_cubic_girth requires even n >= 4")
    rng = _rng(seed)
    for _ in range(max_tries):
        order = list(range(n))
        rng.shuffle(order)
        edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
        adj = {v: set() for v in range(n)}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        free = list(range(n))
        rng.shuffle(free)
        ok = True
        while free:
            u = free.pop()
            dist = {u: 0}
            frontier = [u]
            while frontier and dist[frontier[0]] < min_girth - 2:
                nxt = []
                for x in frontier:
                    for y in adj[x]:
                        if y not in dist:
                            dist[y] = dist[x] + 1
                            nxt.append(y)
                frontier = nxt
            far = [w for w in free if w not in dist]
            if not far:
                ok = False
                break
            w = rng.choice(far)
            free.remove(w)
            adj[u].add(w)
            adj[w].add(u)
            edges.append((u, w))
        if ok:
            return Graph.from_edges(n, edges)
    raise RuntimeError(f"no cubic graph of girth >= {min_girth} found on {n} vertices")


def subdivide(g: Graph, edge_ids, pos=None):
    """Insert a new degree-2 vertex in the middle of each listed edge."""
    chosen = set(edge_ids)
    n = g.vertex_count
    edges = []
    new_pos = list(pos) if pos is not None else None
    for e, (u, v) in enumerate(g.edges):
        if e in chosen:
            edges += [(u, n), (n, v)]
            if new_pos is not None:
                new_pos.append(((pos[u][0] + pos[v][0]) / 2, (pos[u][1] + pos[v][1]) / 2))
            n += 1
        else:
            edges.append((u, v))
    out = Graph.from_edges(n, edges)
    return out if pos is None else (out, new_pos)


def delete_edges(g: Graph, edge_ids) -> Graph:
    drop = set(edge_ids)
    return Graph.from_edges(g.vertex_count, [e for k, e in enumerate(g.edges) if k not in drop])


def random_planar_subcubic(seed=None) -> Graph:
    """A planar subcubic graph: a planar cubic base with random subdivisions and deletions."""
    rng = _rng(seed)
    kind = rng.choice(["prism", "hex", "cube", "k4", "dodecahedron"])
    if kind == "prism":
        g = prism(rng.randint(3, 9))
    elif kind == "hex":
        g = hex_grid(rng.randint(1, 3), rng.randint(1, 3))
    elif kind == "cube":
        g = cube()
    elif kind == "k4":
        g = complete(4)
    else:
        g = dodecahedron_with_positions()[0]
    m = g.edge_count
    g = subdivide(g, rng.sample(range(m), rng.randint(0, min(4, m))))
    m = g.edge_count
    if rng.random() < 0.5:
        g = delete_edges(g, rng.sample(range(m), rng.randint(0, min(3, m))))
    return g


def generate(kind: str, *params, seed=None) -> Graph:
    """Dispatch by family name; ``seed`` only matters for random kinds."""
    table = {
        "cycle": cycle,
        "path": path,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "petersen": petersen,
        "heawood": heawood,
        "pappus": pappus,
        "cube": cube,
        "prism": prism,
        "c5_blowup": c5_blowup,
        "hex_grid": hex_grid,
    }
    if kind in table:
        return table[kind](*params)
    if kind == "random_subcubic":
        return random_subcubic(*params, seed=seed)
    if kind == "random_cubic":
        return random_cubic(*params, seed=seed)
    if kind == "random_cubic_girth":
        return random_cubic_girth(*params, seed=seed)
    if kind == "random_planar_subcubic":
        return random_planar_subcubic(seed=seed)
    raise ValueError(f"unknown generator kind {kind!r}")


BUILTIN_GRAPHS = {
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "k4": lambda: complete(4),
    "k33": lambda: complete_bipartite(3, 3),
    "petersen": petersen,
    "heawood": heawood,
    "pappus": pappus,
    "cube": cube,
    "hex-grid-2x2": lambda: hex_grid(2, 2),
}


def builtin_graph(name: str) -> Graph:
    try:
        return BUILTIN_GRAPHS[name]()
    except KeyError:
        raise ValueError(f"unknown built-in graph {name!r}") from None


def builtin_embeddings() -> dict[str, PlanarEmbedding]:
    """Connected planar embeddings shipped with the package."""
    out = {}
    out["k4"] = embedding_from_positions(*k4_with_positions())
    out["cube"] = embedding_from_positions(*prism_with_positions(4))
    for n in (3, 5, 6, 8):
        out[f"prism-{n}"] = embedding_from_positions(*prism_with_positions(n))
    for r, c in ((1, 1), (2, 2), (2, 3), (3, 3)):
        out[f"hex-grid-{r}x{c}"] = embedding_from_positions(*hex_grid_with_positions(r, c))
    out["dodecahedron"] = embedding_from_positions(*dodecahedron_with_positions())
    out["c7"] = embedding_from_positions(*cycle_with_positions(7))
    return out


def embedding_for(name: str) -> PlanarEmbedding:
    emb = builtin_embeddings()
    if name not in emb:
        raise ValueError(f"no built-in embedding named {name!r}")
    return emb[name]
