"""Strong edge colourings: verification, exact solvers and constructive colouring.

A colouring is a ``dict`` from edge identifier to colour; a partial colouring
simply omits some edges. Lists are indexed by edge identifier (a sequence or a
mapping of colour collections).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

from .errors import BudgetExhausted, InternalInvariantError, ParseError, PreconditionError, PremiseViolated
from .graph import ConflictGraph, Graph, bfs_distances, edge_distance_order, find_short_cycle, format_graph, girth, see_relation
from .hall import DEFAULT_NODE_BUDGET, _search, extendable, find_sdr
from .precoloring import PrecoloringPlan, choose_precoloring


class VerifyResult(NamedTuple):
    valid: bool
    violations: list


def as_lists(g: Graph, lists) -> list[frozenset]:
    if isinstance(lists, Mapping):
        out = [frozenset(lists[e]) for e in range(g.edge_count)]
    else:
        out = [frozenset(a) for a in lists]
    if len(out) != g.edge_count:
        raise PreconditionError(f"expected lists for {g.edge_count} edges, got {len(out)}")
    return out


def uniform_lists(g: Graph, k: int, start: int = 1) -> list[frozenset]:
    return [frozenset(range(start, start + k))] * g.edge_count


def random_lists(g: Graph, size: int, universe: int | None = None, seed=0) -> list[frozenset]:
    """One uniform ``size``-subset of ``{1..universe}`` per edge (default universe ``3 * size``)."""
    u = universe or 3 * size
    if u < size:
        raise ValueError("universe smaller than list size")
    rng = random.Random(seed)
    pool = range(1, u + 1)
    return [frozenset(rng.sample(pool, size)) for _ in range(g.edge_count)]


def verify(g: Graph, coloring: Mapping[int, int], conflicts: ConflictGraph | None = None) -> VerifyResult:
    """Check that no two coloured edges that see each other share a colour."""
    conf = conflicts or see_relation(g)
    bad = []
    for e, c in coloring.items():
        for f in conf.rows[e]:
            if e < f and coloring.get(f) == c:
                bad.append((e, f))
    bad.sort()
    return VerifyResult(not bad, bad)


def respects_lists(coloring: Mapping[int, int], lists) -> bool:
    return all(c in lists[e] for e, c in coloring.items())


def seen_colors(conf: ConflictGraph, coloring: Mapping[int, int], e: int) -> set:
    return {coloring[f] for f in conf.rows[e] if f in coloring}


def available_colors(g: Graph, lists, partial: Mapping[int, int], e: int, conflicts=None) -> frozenset:
    """``L(e)`` minus every colour on a coloured edge that ``e`` sees."""
    if e in partial:
        raise PreconditionError(f"edge {e} is already coloured")
    conf = conflicts or see_relation(g)
    return frozenset(lists[e]) - seen_colors(conf, partial, e)


def exact_list_color(g: Graph, lists, node_budget: int = DEFAULT_NODE_BUDGET):
    """A strong colouring from ``lists`` or None if none exists.

    Deterministic backtracking: most-constrained edge first (ties by
    identifier), colours ascending. Raises ``BudgetExhausted`` rather than
    answering None when the budget runs out.
    """
    ls = as_lists(g, lists)
    conf = see_relation(g)
    nbrs = [sorted(r) for r in conf.rows]
    found = _search([sorted(a) for a in ls], nbrs, node_budget)
    return None if found is None else dict(enumerate(found))


def clique_lower_bound(g: Graph) -> int:
    """Edges at both ends of any edge pairwise see each other."""
    if g.edge_count == 0:
        return 0
    return max(g.degree(u) + g.degree(v) - 1 for u, v in g.edges)


def strong_chromatic_index(g: Graph, upper_bound_hint: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact strong chromatic index by increasing ``k`` from a clique bound.

    Uses the list solver with identical lists ``{1..k}`` plus colour-symmetry
    breaking. ``upper_bound_hint`` caps the search; exceeding it raises.
    """
    if g.edge_count == 0:
        return 0
    conf = see_relation(g)
    nbrs = [sorted(r) for r in conf.rows]
    k = max(1, clique_lower_bound(g))
    while True:
        if upper_bound_hint is not None and k > upper_bound_hint:
            raise ValueError(f"strong chromatic index exceeds hint {upper_bound_hint}")
        palette = list(range(1, k + 1))
        if _search([palette] * g.edge_count, nbrs, node_budget, symmetric_colors=k) is not None:
            return k
        k += 1


def _check_neighbourhood(g: Graph, v: int, lists, min_size: int):
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    if any(g.degree(x) != 3 for x in range(g.vertex_count)):
        raise PreconditionError("graph must be cubic")
    gi = girth(g)
    if gi != "acyclic" and gi < 6:
        raise PreconditionError(f"graph must have girth >= 6 (got {gi})")
    if any(len(a) < min_size for a in lists):
        raise PreconditionError(f"every list needs at least {min_size} colours")
    if not 0 <= v < g.vertex_count:
        raise PreconditionError(f"vertex {v} not in graph")


def neighbourhood_edges(g: Graph, v: int):
    """``(inner, outer)``: the edges ``v vi`` and, per ``vi``, the pair ``(vi wi, vi wi')``.

    Neighbours and their further neighbours are taken in ascending order.
    """
    nb = sorted(g.adjacency[v])
    inner = [g.edge_index(v, x) for x in nb]
    outer = []
    for x in nb:
        ws = sorted(g.adjacency[x] - {v})
        outer.append(tuple(g.edge_index(x, w) for w in ws))
    return inner, outer


def greedy_far_to_near(g: Graph, v: int, precoloring: Mapping[int, int], lists, conflicts=None) -> dict:
    """Extend ``precoloring`` to every edge not at ``v``, farthest edges first.

    Preconditions: ``g`` connected, cubic, girth >= 6, lists of size >= 11,
    and the precoloured edges are outer edges ``vi wi`` with at most one per
    neighbour ``vi``. Each edge reached sees at least two uncoloured edges, so
    it sees at most 10 colours and the greedy choice never gets stuck.
    """
    ls = as_lists(g, lists)
    _check_neighbourhood(g, v, ls, 11)
    inner, outer = neighbourhood_edges(g, v)
    slot_of = {e: i for i, pair in enumerate(outer) for e in pair}
    used = set()
    for e, c in precoloring.items():
        if e not in slot_of:
            raise PreconditionError(f"edge {e} is not an outer edge of the neighbourhood of {v}")
        if slot_of[e] in used:
            raise PreconditionError(f"two precoloured edges at neighbour index {slot_of[e]}")
        used.add(slot_of[e])
        if c not in ls[e]:
            raise PreconditionError(f"precolour {c} not in the list of edge {e}")
    conf = conflicts or see_relation(g)
    color = dict(precoloring)
    if not verify(g, color, conf).valid:
        raise PreconditionError("precolouring is not a valid partial strong colouring")
    skip = set(inner)
    for e in edge_distance_order(g, v):
        if e in skip or e in color:
            continue
        avail = ls[e] - seen_colors(conf, color, e)
        if not avail:
            raise InternalInvariantError(
                f"greedy far-to-near stuck at edge {e}",
                {"graph": format_graph(g), "v": v, "precoloring": dict(precoloring), "partial": dict(color), "edge": e},
            )
        color[e] = min(avail)
    return color


def plan_edges(g: Graph, v: int, plan: PrecoloringPlan) -> dict:
    _, outer = neighbourhood_edges(g, v)
    return {outer[i][slot]: c for (i, slot), c in plan.instructions}


def color_neighbourhood(g: Graph, v: int, lists, conflicts=None):
    """Colour a connected cubic girth >= 6 graph with 11-lists around ``v``.

    Returns ``(coloring, plan)``. The three edges at ``v`` are finished with a
    system of distinct representatives over their available colours.
    """
    ls = as_lists(g, lists)
    conf = conflicts or see_relation(g)
    inner, outer = neighbourhood_edges(g, v)
    plan = choose_precoloring([(ls[a], ls[b]) for a, b in outer], [ls[e] for e in inner])
    color = greedy_far_to_near(g, v, plan_edges(g, v, plan), ls, conf)
    avail = [ls[e] - seen_colors(conf, color, e) for e in inner]
    sdr = find_sdr(avail)
    if not sdr.found:
        raise InternalInvariantError(
            "edges at the centre vertex have no distinct representatives",
            {"graph": format_graph(g), "v": v, "plan": plan, "available": [sorted(a) for a in avail]},
        )
    for e, c in zip(inner, sdr.representatives):
        color[e] = c
    return color, plan


@dataclass
class Step:
    kind: str
    deleted: tuple[int, ...]
    residual: tuple[int, ...]
    detail: dict = field(default_factory=dict)


@dataclass
class Construction:
    coloring: dict
    steps: list

    def kinds(self) -> list[str]:
        return [s.kind for s in self.steps]


def _four_cycle_deletion(g: Graph, cyc, alive) -> tuple[set, str]:
    """Vertices to delete around an induced 4-cycle, by how opposite pendants meet."""
    pend = []
    for i, c in enumerate(cyc):
        others = [x for x in g.adjacency[c] if x in alive and x not in (cyc[i - 1], cyc[(i + 1) % 4])]
        pend.append(others[0] if others else None)
    deleted = set(cyc)
    shape = []
    for i, j in ((0, 2), (1, 3)):
        p, q = pend[i], pend[j]
        if p is None or q is None:
            shape.append("none")
        elif p == q:
            shape.append("common")
        elif q in g.adjacency[p]:
            shape.append("edge")
            deleted |= {p, q}
        else:
            shape.append("none")
    return deleted, "c4:" + "/".join(shape)


def construct_coloring(g: Graph, lists, list_size: int, planar: bool = False, node_budget: int = DEFAULT_NODE_BUDGET) -> Construction:
    """Peel reducible pieces off ``g``, then colour them back in reverse order.

    Pieces, in priority order: a vertex of degree <= 2; the first vertex of a
    triangle; a 4-cycle with its configuration; four vertices of a 5-cycle;
    otherwise (cubic, girth >= 6) a whole component handled by
    :func:`color_neighbourhood`. With ``planar=True`` reaching the last case
    raises ``PremiseViolated``.
    """
    if g.max_degree() > 3:
        raise PreconditionError("graph must be subcubic")
    ls = as_lists(g, lists)
    if any(len(a) < list_size for a in ls):
        raise PreconditionError(f"every list needs at least {list_size} colours")
    ls = [frozenset(sorted(a)[:list_size]) for a in ls]
    conf = see_relation(g)

    alive = set(range(g.vertex_count))
    deg = [g.degree(v) for v in range(g.vertex_count)]
    steps = []

    def remove(vs, kind, detail=None):
        vs = set(vs)
        residual = sorted({e for x in vs for e in g.incidence[x] if all(y in alive for y in g.edges[e])})
        for x in vs:
            alive.discard(x)
        for x in vs:
            for y in g.adjacency[x]:
                if y in alive:
                    deg[y] -= 1
        steps.append(Step(kind, tuple(sorted(vs)), tuple(residual), detail or {}))

    while alive:
        low = min((x for x in alive if deg[x] <= 2), default=None)
        if low is not None:
            remove([low], "vertex", {"degree": deg[low]})
            continue
        cyc = find_short_cycle(g, 5, alive)
        if cyc is not None:
            if len(cyc) == 3:
                remove([cyc[0]], "triangle", {"cycle": cyc})
            elif len(cyc) == 4:
                deleted, shape = _four_cycle_deletion(g, cyc, alive)
                remove(deleted, "c4", {"cycle": cyc, "shape": shape})
            else:
                remove(cyc[:4], "c5", {"cycle": cyc})
            continue
        root = min(alive)
        comp = sorted(bfs_distances(g, root, alive))
        if planar:
            raise PremiseViolated("premise violated: cubic with girth >= 6 reached")
        remove(comp, "neighbourhood", {"centre": root})

    color: dict = {}
    for step in reversed(steps):
        if step.kind == "neighbourhood":
            sub, vmap, emap = g.induced(step.deleted)
            centre = vmap.index(step.detail["centre"])
            sub_color, plan = color_neighbourhood(sub, centre, [ls[e] for e in emap])
            step.detail["plan"] = plan.branch
            for e_sub, c in sub_color.items():
                color[emap[e_sub]] = c
            continue
        res = list(step.residual)
        avail = [ls[e] - seen_colors(conf, color, e) for e in res]
        if step.kind == "vertex":
            for e in res:
                a = ls[e] - seen_colors(conf, color, e)
                if not a:
                    raise _stuck(g, ls, step, res, avail)
                color[e] = min(a)
            continue
        pairs = conf.restricted(res)
        try:
            found = extendable(avail, pairs, node_budget)
        except BudgetExhausted as exc:
            raise _stuck(g, ls, step, res, avail, "budget exhausted") from exc
        if found is None:
            raise _stuck(g, ls, step, res, avail)
        for e, c in zip(res, found):
            color[e] = c
    return Construction(color, steps)


def _stuck(g, ls, step, res, avail, why="extension failed"):
    return InternalInvariantError(
        f"{why} at {step.kind} step deleting {list(step.deleted)}",
        {
            "graph": format_graph(g),
            "lists": [sorted(a) for a in ls],
            "step": {"kind": step.kind, "deleted": list(step.deleted), "detail": step.detail},
            "residual": res,
            "available": [sorted(a) for a in avail],
        },
    )


def strong_list_color_11(g: Graph, lists) -> dict:
    """Strong colouring of a subcubic graph from lists of size >= 11."""
    return construct_coloring(g, lists, 11).coloring


def strong_list_color_10_planar(g: Graph, lists) -> dict:
    """Strong colouring of a subcubic planar graph from lists of size >= 10.

    Planarity is the caller's promise. A component that ends up cubic with
    girth >= 6 cannot be planar, so it raises ``PremiseViolated``.
    """
    return construct_coloring(g, lists, 10, planar=True).coloring


def format_lists(lists: Sequence) -> str:
    return "".join(f"{e}: {' '.join(str(c) for c in sorted(a))}\n" for e, a in enumerate(lists))


def parse_lists(text: str) -> list[frozenset]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected '<edge>: <colours...>'", lineno)
        try:
            e = int(head)
            cols = [int(x) for x in tail.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
        if e in out:
            raise ParseError(f"edge {e} listed twice", lineno)
        if len(set(cols)) != len(cols):
            raise ParseError(f"repeated colour in the list of edge {e}", lineno)
        out[e] = frozenset(cols)
    if sorted(out) != list(range(len(out))):
        raise ParseError("edge identifiers must be 0..m-1 without gaps")
    return [out[e] for e in range(len(out))]


def format_coloring(coloring: Mapping[int, int]) -> str:
    return "".join(f"{e}: {coloring[e]}\n" for e in sorted(coloring))


def parse_coloring(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        try:
            e, c = int(head), int(tail)
        except ValueError:
            raise ParseError("expected '<edge>: <colour>'", lineno) from None
        if not sep or e in out:
            raise ParseError("expected one '<edge>: <colour>' line per edge", lineno)
        out[e] = c
    return out
