"""Tally of precolouring branches over random 11-list neighbourhoods.

A neighbourhood is the three inner edges at a vertex v and the six edges one
step further out. The plan fixes colours on a few outer edges so that the
remaining inner lists have distinct representatives.
"""

import random
from collections import Counter

from strongcolor import generate, random_lists
from strongcolor.precoloring import choose_precoloring
from strongcolor.reducibility import neighbourhood_plan, random_neighbourhood_lists, validate_plan

rng = random.Random(0)
for structured in (False, True):
    tally = Counter()
    for _ in range(5000):
        outer, inner = random_neighbourhood_lists(rng, structured=structured)
        tally[choose_precoloring(outer, inner).branch] += 1
    print("structured" if structured else "uniform", dict(tally))

g = generate("heawood")
ok = 0
for t in range(50):
    lists = random_lists(g, 11, 33, seed=t)
    v = t % g.vertex_count
    ok += validate_plan(g, v, neighbourhood_plan(g, v, lists), lists)
print(f"heawood: {ok}/50 plans completed to a full strong colouring")
