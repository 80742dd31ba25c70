"""Precolouring plans for the neighbourhood of a vertex in a cubic graph of girth >= 6.

Setting: ``v`` has neighbours ``v1, v2, v3`` and each ``vi`` has two further
neighbours ``wi, wi'``. With ``Bi = L(vi wi) | L(vi wi')`` and ``Li = L(v vi)``
the plan fixes colours on at most one outer edge per ``vi`` so that, after any
greedy far-to-near extension, the three edges at ``v`` still have distinct
available colours.

Edges are addressed as ``(i, slot)``: ``slot`` 0 is ``vi wi`` and 1 is
``vi wi'`` (indices are 0-based).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InternalInvariantError, PreconditionError

LIST_SIZE = 11

BRANCHES = (
    "triple-common",
    "pair-outside",
    "disjoint-L",
    "double-outside",
    "alpha-beta-pairs",
    "alpha-single",
)


@dataclass(frozen=True)
class PrecoloringPlan:
    branch: str
    instructions: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"unknown branch {self.branch!r}")
        if len(self.instructions) > 3:
            raise ValueError("a plan precolours at most three edges")


def claim4_holds(B, L) -> bool:
    """``|B1|B2|B3| >= |L1|L2|L3| + |L1&L2&L3|`` (direct arithmetic)."""
    return len(B[0] | B[1] | B[2]) >= len(L[0] | L[1] | L[2]) + len(L[0] & L[1] & L[2])


def choose_precoloring(outer, inner) -> PrecoloringPlan:
    """First applicable plan, tried in the order of the neighbourhood claims.

    ``outer[i]`` is the pair of lists ``(L(vi wi), L(vi wi'))`` and ``inner[i]``
    is ``L(v vi)``. Inner lists longer than 11 are cut to their 11 smallest
    colours for the counting, which only makes the plan more conservative.
    """
    outer = [(frozenset(a), frozenset(b)) for a, b in outer]
    if len(outer) != 3 or len(inner) != 3:
        raise PreconditionError("need three outer list pairs and three inner lists")
    if any(len(s) < LIST_SIZE for pair in outer for s in pair) or any(len(s) < LIST_SIZE for s in inner):
        raise PreconditionError(f"all nine lists must have at least {LIST_SIZE} colours")
    L = [frozenset(sorted(s)[:LIST_SIZE]) for s in inner]
    B = [a | b for a, b in outer]

    def at(i, color):
        return ((i, 0 if color in outer[i][0] else 1), color)

    common = B[0] & B[1] & B[2]
    if common:
        alpha = min(common)
        return PrecoloringPlan("triple-common", tuple(at(i, alpha) for i in range(3)))

    core = L[0] & L[1] & L[2]
    for i, j in combinations(range(3), 2):
        cand = (B[i] & B[j]) - core
        if cand:
            alpha = min(cand)
            return PrecoloringPlan("pair-outside", (at(i, alpha), at(j, alpha)))

    if all(not (L[i] & L[j]) for i, j in combinations(range(3), 2)):
        return PrecoloringPlan("disjoint-L", ())

    outside = (B[0] | B[1] | B[2]) - (L[0] | L[1] | L[2])
    b_disjoint = all(not (B[i] & B[j]) for i, j in combinations(range(3), 2))
    single = "double-outside" if b_disjoint else "alpha-single"
    anchors = [a for a in range(3) if B[a] & outside]

    for a in anchors:
        alpha = min(B[a] & outside)
        b, c = (k for k in range(3) if k != a)
        shared = B[b] & B[c]
        if shared:
            beta = min(shared)
            return PrecoloringPlan("alpha-beta-pairs", (at(a, alpha), at(b, beta), at(c, beta)))
        beta_set = (B[b] | B[c]) - (L[b] | L[c])
        if beta_set:
            beta = min(beta_set)
            side = b if beta in B[b] else c
            return PrecoloringPlan(single, tuple(sorted((at(a, alpha), at(side, beta)))))

    # The closing counting picks beta outside L_b | L_c, which needs L_b & L_c
    # nonempty for the pair left after anchoring alpha. When every anchor
    # leaves an L-disjoint pair, a beta outside its own edge's inner list is
    # enough: the three inner edges then keep at least 2, 3 and 2 colours.
    for a in anchors:
        alpha = min(B[a] & outside)
        for side in (k for k in range(3) if k != a):
            own = B[side] - L[side]
            if own:
                beta = min(own)
                return PrecoloringPlan(single, tuple(sorted((at(a, alpha), at(side, beta)))))
    if anchors:
        # Here B_b = L_b and B_c = L_c for the other two, and these are
        # disjoint, so the inner edges at b and c cannot lose colours to each
        # other's outer edges.
        a = anchors[0]
        return PrecoloringPlan(single, (at(a, min(B[a] & outside)),))

    raise InternalInvariantError(
        "no branch applies",
        {"outer": [[sorted(a), sorted(b)] for a, b in outer], "inner": [sorted(s) for s in inner]},
    )
