"""Systems of distinct representatives and small list-colouring extension.

``find_sdr`` is a bipartite matching by augmenting paths that either returns
representatives or a Hall violator. ``extendable`` is the general exact oracle
used to finish partial colourings: equal colours are fine on non-conflicting
indices, so it is a list-colouring search on an arbitrary conflict graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExhausted

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class SDRResult:
    representatives: tuple | None
    violator: tuple[int, ...] | None

    @property
    def found(self) -> bool:
        return self.representatives is not None


def find_sdr(family: Sequence[Iterable]) -> SDRResult:
    """Distinct representatives for ``family`` or a set ``I`` with ``|U A_i| < |I|``.

    Sets are scanned in index order and elements in ascending order, so the
    result is deterministic. Violator indices are 0-based and sorted.
    """
    sets = [sorted(set(a)) for a in family]
    owner: dict = {}
    match = [None] * len(sets)

    def augment(i, visited):
        # a free element is taken directly before any re-routing
        for x in sets[i]:
            if x not in owner and x not in visited:
                visited.add(x)
                owner[x] = i
                match[i] = x
                return True
        for x in sets[i]:
            if x in visited:
                continue
            visited.add(x)
            j = owner.get(x)
            if j is None or augment(j, visited):
                owner[x] = i
                match[i] = x
                return True
        return False

    for i in range(len(sets)):
        if not augment(i, set()):
            # left vertices reachable from i by alternating paths
            reach = {i}
            stack = [i]
            while stack:
                k = stack.pop()
                for x in sets[k]:
                    j = owner.get(x)
                    if j is not None and j not in reach:
                        reach.add(j)
                        stack.append(j)
            return SDRResult(None, tuple(sorted(reach)))
    return SDRResult(tuple(match), None)


def hall_violated(family: Sequence[Iterable], index_set: Iterable[int]) -> bool:
    idx = list(index_set)
    union = set()
    for i in idx:
        union.update(family[i])
    return len(union) < len(idx)


def extendable(
    lists: Sequence[Iterable],
    conflicts: Iterable[tuple[int, int]],
    node_budget: int = DEFAULT_NODE_BUDGET,
):
    """An assignment ``x[i] in lists[i]`` with ``x[i] != x[j]`` on every conflict, or None.

    Branches on the unassigned index with the fewest remaining colours (ties by
    index), trying colours in ascending order. Raises ``BudgetExhausted`` when
    more than ``node_budget`` search nodes are needed.
    """
    n = len(lists)
    nbrs = [set() for _ in range(n)]
    for i, j in conflicts:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"conflict ({i}, {j}) out of range")
        if i != j:
            nbrs[i].add(j)
            nbrs[j].add(i)
    return _search([sorted(set(a)) for a in lists], [sorted(s) for s in nbrs], node_budget)


def _search(lists, nbrs, node_budget, symmetric_colors=None):
    """Backtracking core shared with the strong-colouring solvers.

    Colours are mapped to bit positions. ``symmetric_colors`` (a count k) turns
    on colour-symmetry breaking for identical lists ``{0..k-1}``: a fresh
    colour is only ever tried as the lowest unused one.
    """
    n = len(lists)
    palette = sorted({c for a in lists for c in a})
    bit = {c: 1 << k for k, c in enumerate(palette)}
    masks = [sum(bit[c] for c in a) for a in lists]
    # forbidden[i][k] counts assigned neighbours of i holding colour k
    forbid = [0] * n
    counts = [dict() for _ in range(n)]
    color = [None] * n
    nodes = 0

    def pick():
        best, best_mask, best_size = None, 0, None
        for i in range(n):
            if color[i] is None:
                m = masks[i] & ~forbid[i]
                s = m.bit_count()
                if best is None or s < best_size:
                    best, best_mask, best_size = i, m, s
                    if s == 0:
                        break
        return best, best_mask

    def assign(i, b):
        color[i] = b
        for j in nbrs[i]:
            c = counts[j]
            c[b] = c.get(b, 0) + 1
            forbid[j] |= b

    def unassign(i, b):
        color[i] = None
        for j in nbrs[i]:
            c = counts[j]
            c[b] -= 1
            if not c[b]:
                del c[b]
                forbid[j] &= ~b

    used_top = [0]

    def rec():
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExhausted(nodes)
        i, m = pick()
        if i is None:
            return True
        if m == 0:
            return False
        while m:
            b = m & -m
            m ^= b
            if symmetric_colors is not None:
                k = b.bit_length() - 1
                if k > used_top[0]:
                    break
                prev = used_top[0]
                if k == prev:
                    used_top[0] = prev + 1
            assign(i, b)
            ok = rec()
            if ok:
                return True
            unassign(i, b)
            if symmetric_colors is not None:
                used_top[0] = prev
        return False

    if not rec():
        return None
    return [palette[color[i].bit_length() - 1] for i in range(n)]
