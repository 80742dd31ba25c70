"""Reducible configurations as concrete host graphs, and randomized checks on them.

Each configuration is a small core (a short cycle, a low-degree vertex) whose
other vertices are completed to degree 3 with fresh tree-like branches, so no
extra short cycles appear near the deleted vertices. Residual edges are
labelled ``e1..em`` in a fixed order that the reference tables follow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable, Sequence

from .coloring import _check_neighbourhood, as_lists, greedy_far_to_near, neighbourhood_edges, plan_edges, seen_colors, verify
from .errors import InternalInvariantError, PreconditionError
from .graph import Graph, bfs_distances, girth, see_relation
from .hall import extendable, find_sdr
from .precoloring import BRANCHES, PrecoloringPlan, choose_precoloring, claim4_holds  # noqa: F401

KINDS = (
    "deg1",
    "deg2",
    "triangle",
    "c4_none",
    "c4_one",
    "c4_one_big",
    "c4_both_small",
    "c4_both_mid",
    "c4_both_big",
    "c5",
)

# Reference availability tables at list size 10. For c4_both_big and
# c4_both_small the outermost residual edges (PRECOLORED_FIRST) are coloured
# first and the remaining bounds are read with them coloured; those tables
# list only the remaining edges.
REFERENCE_BOUNDS = {
    "deg1": (4,),
    "deg2": (2, 2),
    "triangle": (3, 3, 1),
    "c4_none": (4, 4, 4, 4, 6, 6, 6, 6),
    "c4_one": (7, 4, 7, 4, 7, 7, 7, 7),
    "c4_one_big": (8, 4, 8, 4, 6, 8, 8, 8, 8, 4, 4),
    "c4_both_mid": (7, 7, 7, 7, 8, 8, 8, 8),
    "c4_both_big": (6, 6, 6, 6, 8, 8, 8, 8, 4, 4),
    "c4_both_small": (7, 6, 7, 6, 8, 8, 8, 8, 4),
    "c5": (5, 6, 5, 5, 5, 5, 5, 5, 5),
}
PRECOLORED_FIRST = {
    "c4_both_big": (11, 12, 13, 14),
    "c4_both_small": (10, 11),
}


@dataclass(frozen=True)
class Configuration:
    kind: str
    list_size: int
    host: Graph
    deleted: tuple[int, ...]
    edges: tuple[int, ...]
    bounds: tuple[int, ...]
    conflicts: tuple[tuple[int, int], ...]
    names: dict

    def edge_label(self, k: int) -> str:
        return f"e{k + 1}"

    def conflict_pairs_1based(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, j in self.conflicts]


def _cycle(names):
    return [(names[i], names[(i + 1) % len(names)]) for i in range(len(names))]


def _core(kind):
    """``(core_edges, deleted, fixed_degree, labelled_edges)`` in vertex names.

    Four-cycle kinds: ``u1..u4`` are the far ends of the pendant edges at
    ``v1..v4``; opposite ends either stay apart, coincide or are adjacent.
    """
    v = ["v1", "v2", "v3", "v4"]
    cyc = _cycle(v)
    if kind == "deg1":
        return [("v", "x")], ["v"], ["v"], [("v", "x")]
    if kind == "deg2":
        return [("v", "x"), ("v", "y")], ["v"], ["v"], [("v", "x"), ("v", "y")]
    if kind == "triangle":
        edges = _cycle(["v1", "v2", "v3"]) + [("v1", "u1")]
        return edges, ["v1"], [], [("v1", "v2"), ("v1", "v3"), ("v1", "u1")]
    if kind == "c5":
        c = ["c1", "c2", "c3", "c4", "c5"]
        pend = [(x, "u" + x[1]) for x in c]
        lab = _cycle(c) + pend[:4]
        return _cycle(c) + pend, c[:4], [], lab
    # 4-cycles: pendant ends u1..u4 at v1..v4; opposite ends may coincide
    # ("common") or be joined by an edge ("edge").
    shapes = {
        "c4_none": ("none", "none"),
        "c4_one": ("common", "none"),
        "c4_one_big": ("edge", "none"),
        "c4_both_mid": ("common", "common"),
        "c4_both_big": ("edge", "edge"),
        "c4_both_small": ("common", "edge"),
    }
    if kind not in shapes:
        raise ValueError(f"unknown configuration kind {kind!r}")
    odd, even = shapes[kind]
    end = {"v1": "u1", "v2": "u2", "v3": "u3", "v4": "u4"}
    if odd == "common":
        end["v1"] = end["v3"] = "w"
    if even == "common":
        end["v2"] = end["v4"] = "z"
    edges = cyc + [(x, end[x]) for x in v]
    deleted = list(v)
    extra = []
    for shape, (a, b) in ((odd, ("u1", "u3")), (even, ("u2", "u4"))):
        if shape == "edge":
            edges += [(a, b), (a, "x" + a[1]), (b, "x" + b[1])]
            deleted += [a, b]
            extra.append((a, b))
    pend = [(x, end[x]) for x in v]
    if kind == "c4_one_big":
        lab = pend + [("u1", "u3"), ("v1", "v2"), ("v3", "v4"), ("v2", "v3"), ("v4", "v1"), ("u1", "x1"), ("u3", "x3")]
    elif kind == "c4_both_big":
        lab = pend + cyc + [("u1", "u3"), ("u2", "u4")] + [("u1", "x1"), ("u2", "x2"), ("u3", "x3"), ("u4", "x4")]
    elif kind == "c4_both_small":
        lab = pend + cyc + [("u2", "u4"), ("u2", "x2"), ("u4", "x4")]
    else:
        lab = pend + cyc
    return edges, deleted, [], lab


def _complete(edges, deleted, fixed, radius=2):
    """Give every non-fixed vertex within ``radius`` of ``deleted`` degree 3 using fresh vertices."""
    adj: dict = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    edges = list(edges)
    fresh = 0
    while True:
        dist = {x: 0 for x in deleted}
        frontier = list(deleted)
        while frontier:
            nxt = []
            for x in frontier:
                for y in sorted(adj[x], key=str):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        todo = sorted((x for x, d in dist.items() if d <= radius and x not in fixed and len(adj[x]) < 3), key=str)
        if not todo:
            return edges
        for x in todo:
            while len(adj[x]) < 3:
                y = f"t{fresh}"
                fresh += 1
                adj[x].add(y)
                adj[y] = {x}
                edges.append((x, y))


def _host_graph(edges):
    names = {}
    for a, b in edges:
        for x in (a, b):
            if x not in names:
                names[x] = len(names)
    return Graph.from_edges(len(names), [(names[a], names[b]) for a, b in edges]), names


def residual_edges(g: Graph, deleted) -> list[int]:
    d = set(deleted)
    return [e for e, (a, b) in enumerate(g.edges) if a in d or b in d]


def residual_bounds(
    g: Graph,
    deleted,
    list_size: int,
    colored_predicate: Callable[[int], bool] | None = None,
    edges: Sequence[int] | None = None,
) -> list[int]:
    """``list_size`` minus the number of coloured edges each residual edge sees, floored at 0.

    By default every edge not touching ``deleted`` counts as coloured. Results
    follow ``edges`` (default: residual edges by identifier).
    """
    res = list(edges) if edges is not None else residual_edges(g, deleted)
    resset = set(residual_edges(g, deleted))
    colored = colored_predicate or (lambda f: f not in resset)
    conf = see_relation(g)
    return [max(0, list_size - sum(1 for f in conf.rows[e] if colored(f))) for e in res]


def build_configuration(kind: str, list_size: int = 10) -> Configuration:
    core, deleted, fixed, labelled = _core(kind)
    host, names = _host_graph(_complete(core, deleted, fixed))
    dele = tuple(sorted(names[x] for x in deleted))
    edges = tuple(host.edge_index(names[a], names[b]) for a, b in labelled)
    if sorted(edges) != residual_edges(host, dele):
        raise AssertionError(f"labelled edges of {kind} are not exactly the residual edges")
    bounds = tuple(residual_bounds(host, dele, list_size, edges=edges))
    conf = see_relation(host)
    pairs = tuple((i, j) for i, j in combinations(range(len(edges)), 2) if conf.conflicts(edges[i], edges[j]))
    return Configuration(kind, list_size, host, dele, edges, bounds, pairs, names)


def reference_view_bounds(config: Configuration) -> tuple[int, ...]:
    """Bounds with the PRECOLORED_FIRST edges counted as coloured.

    Those edges themselves are reported with their raw bound.
    """
    first = PRECOLORED_FIRST.get(config.kind, ())
    if not first:
        return config.bounds
    pre = {config.edges[k - 1] for k in first}
    resset = set(config.edges)
    view = residual_bounds(
        config.host, config.deleted, config.list_size, lambda f: f not in resset or f in pre, edges=config.edges
    )
    return tuple(b if k + 1 not in first else config.bounds[k] for k, b in enumerate(view))


def sabotaged(config: Configuration, bounds: Sequence[int], complete_conflicts: bool = True) -> Configuration:
    """Copy of ``config`` with overridden bounds (and all pairs conflicting); a harness control."""
    m = len(config.edges)
    if len(bounds) != m:
        raise ValueError("one bound per residual edge")
    pairs = tuple(combinations(range(m), 2)) if complete_conflicts else config.conflicts
    return replace(config, kind=config.kind + "-sabotaged", bounds=tuple(bounds), conflicts=pairs)


@dataclass(frozen=True)
class StressReport:
    kind: str
    list_size: int
    trials: int
    failures: int
    first_failure: list | None

    def summary(self) -> str:
        return f"kind={self.kind} size={self.list_size} trials={self.trials} failures={self.failures}"


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def stress_test(config: Configuration, trials: int, seed: int = 0, universe_size: int | None = None) -> StressReport:
    """Sample available-colour sets at the configuration's bounds and try to extend.

    Each residual edge gets a uniform random subset of ``{1..universe_size}`` of
    exactly its bound's size (default universe ``3 * list_size``).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    u = universe_size or 3 * config.list_size
    universe = range(1, u + 1)
    failures = 0
    first = None
    for t in range(trials):
        rng = trial_rng(seed, t)
        sets = [sorted(rng.sample(universe, min(b, u))) for b in config.bounds]
        if extendable(sets, config.conflicts) is None:
            failures += 1
            if first is None:
                first = sets
    return StressReport(config.kind, config.list_size, trials, failures, first)


def validate_plan(g: Graph, v: int, plan: PrecoloringPlan, lists) -> bool:
    """Apply ``plan``, extend far-to-near, then finish the edges at ``v`` by SDR.

    Returns whether a complete valid colouring from the lists resulted. Raises
    ``PreconditionError`` only when ``g`` itself is unsuitable (not connected
    cubic of girth >= 6, or lists shorter than 11).
    """
    ls = as_lists(g, lists)
    _check_neighbourhood(g, v, ls, 11)
    conf = see_relation(g)
    try:
        color = greedy_far_to_near(g, v, plan_edges(g, v, plan), ls, conf)
    except (InternalInvariantError, PreconditionError):
        # a plan that violates the greedy's preconditions is simply unsound
        return False
    inner, _ = neighbourhood_edges(g, v)
    sdr = find_sdr([ls[e] - seen_colors(conf, color, e) for e in inner])
    if not sdr.found:
        return False
    color.update(zip(inner, sdr.representatives))
    return len(color) == g.edge_count and verify(g, color, conf).valid and all(color[e] in ls[e] for e in color)


def neighbourhood_plan(g: Graph, v: int, lists) -> PrecoloringPlan:
    ls = as_lists(g, lists)
    inner, outer = neighbourhood_edges(g, v)
    return choose_precoloring([(ls[a], ls[b]) for a, b in outer], [ls[e] for e in inner])


def random_neighbourhood_lists(rng: random.Random, universe: int = 33, size: int = 11, structured: bool = False):
    """Six outer lists (as three pairs) and three inner lists.

    Plain mode draws every list uniformly from ``{1..universe}``, which almost
    always shares a colour among all three ``Bi``. Structured mode forces every
    pairwise ``Bi & Bj`` into a small core contained in all ``Li``, so the
    later branches of :func:`choose_precoloring` are reached.
    """
    if not structured:
        pool = range(1, universe + 1)
        outer = [(frozenset(rng.sample(pool, size)), frozenset(rng.sample(pool, size))) for _ in range(3)]
        inner = [frozenset(rng.sample(pool, size)) for _ in range(3)]
        return outer, inner
    u = rng.randint(3 * (size + 2) + 4, 9 * size)
    colours = list(range(1, u + 1))
    rng.shuffle(colours)
    core = colours[: rng.randint(0, 3)]
    rest = colours[len(core):]
    cut = sorted(rng.sample(range(size, len(rest) - size), 2))
    while cut[1] - cut[0] < size:
        cut = sorted(rng.sample(range(size, len(rest) - size), 2))
    blocks = [rest[: cut[0]], rest[cut[0]: cut[1]], rest[cut[1]:]]
    for k in core:
        for i in rng.sample(range(3), rng.randint(0, 2)):
            blocks[i].append(k)
    outer = []
    for i in range(3):
        src = blocks[i]
        a = frozenset(rng.sample(src, size))
        b = a if rng.random() < 0.2 else frozenset(rng.sample(src, size))
        outer.append((a, b))
    union_b = sorted(set().union(*(a | b for a, b in outer)))
    inner = []
    for i in range(3):
        src = rng.choice((union_b, sorted(outer[i][0] | outer[i][1]), colours))
        extra = [c for c in rng.sample(src, len(src)) if c not in core][: size - len(core)]
        if len(extra) < size - len(core):
            extra += [c for c in colours if c not in core and c not in extra][: size - len(core) - len(extra)]
        inner.append(frozenset(core) | frozenset(extra))
    return outer, inner


def embed_neighbourhood_lists(g: Graph, v: int, outer, inner, rng: random.Random, universe: int = 33):
    """Lists for all of ``g`` that carry ``outer``/``inner`` on the neighbourhood of ``v``.

    Every other edge gets a uniform random 11-subset of ``{1..universe}``.
    """
    ls = [frozenset(rng.sample(range(1, universe + 1), 11)) for _ in range(g.edge_count)]
    ins, outs = neighbourhood_edges(g, v)
    for e, a in zip(ins, inner):
        ls[e] = frozenset(a)
    for pair_edges, pair_lists in zip(outs, outer):
        for e, a in zip(pair_edges, pair_lists):
            ls[e] = frozenset(a)
    return ls


# Degenerate five-cycle hosts: pendant ends at non-adjacent cycle positions
# may be joined by an edge without creating a 3- or 4-cycle.
C5_JOINABLE = (("u1", "u3"), ("u1", "u4"), ("u2", "u4"), ("u2", "u5"), ("u3", "u5"))


def c5_degenerations(list_size: int = 10):
    """Yield ``(joined_pairs, Configuration)`` for every subset of joinable pendant pairs."""
    base_core, deleted, fixed, labelled = _core("c5")
    for r in range(len(C5_JOINABLE) + 1):
        for joined in combinations(C5_JOINABLE, r):
            core = base_core + list(joined)
            host, names = _host_graph(_complete(core, deleted, fixed))
            gi = girth(host)
            if host.max_degree() > 3 or (gi != "acyclic" and gi < 5):
                continue
            dele = tuple(sorted(names[x] for x in deleted))
            edges = tuple(host.edge_index(names[a], names[b]) for a, b in labelled)
            bounds = tuple(residual_bounds(host, dele, list_size, edges=edges))
            conf = see_relation(host)
            pairs = tuple((i, j) for i, j in combinations(range(9), 2) if conf.conflicts(edges[i], edges[j]))
            yield joined, Configuration("c5", list_size, host, dele, edges, bounds, pairs, names)


def host_is_cubic_near(config: Configuration) -> bool:
    """Every vertex within distance 2 of the deleted set has degree 3 (fixed-degree kinds excepted)."""
    g = config.host
    near = set()
    for x in config.deleted:
        near |= {y for y, d in bfs_distances(g, x).items() if d <= 2}
    skip = set(config.deleted) if config.kind in ("deg1", "deg2") else set()
    return all(g.degree(y) == 3 for y in near - skip)


def require_kind(kind: str) -> None:
    if kind not in KINDS:
        raise PreconditionError(f"unknown configuration kind {kind!r}; expected one of {', '.join(KINDS)}")
