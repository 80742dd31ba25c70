"""Colour subcubic graphs from random lists and show which pieces were peeled off."""

import sys

from strongcolor import PremiseViolated, construct_coloring, generate, random_lists, verify

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0

for name, args, size, planar in [
    ("petersen", (), 11, False),
    ("c5_blowup", (1,), 11, False),
    ("random_cubic_girth", (18,), 11, False),
    ("hex_grid", (2, 3), 10, True),
    ("prism", (7,), 10, True),
]:
    g = generate(name, *args, seed=seed)
    lists = random_lists(g, size, 3 * size, seed=seed)
    cons = construct_coloring(g, lists, size, planar=planar)
    kinds = {}
    for k in cons.kinds():
        kinds[k] = kinds.get(k, 0) + 1
    plans = [s.detail["plan"] for s in cons.steps if "plan" in s.detail]
    print(f"{name}{args}: lists of {size} from 1..{3 * size}")
    print(f"    pieces: {kinds}")
    if plans:
        print(f"    neighbourhood precolouring branch: {plans}")
    print(f"    coloured {len(cons.coloring)}/{g.edge_count} edges, valid={verify(g, cons.coloring).valid}")

# the planar procedure refuses a cubic girth-6 graph, which cannot be planar
g = generate("heawood")
try:
    construct_coloring(g, random_lists(g, 10, 30, seed=seed), 10, planar=True)
except PremiseViolated as exc:
    print("heawood with planar=True:", exc)
