"""Strong chromatic index of the small named graphs, with one optimal colouring each."""

from strongcolor import builtin_graph, exact_list_color, strong_chromatic_index, uniform_lists, verify

for name in ["c5", "c6", "k4", "k33", "petersen", "cube", "heawood", "pappus"]:
    g = builtin_graph(name)
    k = strong_chromatic_index(g)
    col = exact_list_color(g, uniform_lists(g, k))
    classes = {}
    for e, c in sorted(col.items()):
        classes.setdefault(c, []).append(g.edges[e])
    print(f"{name}: {g.vertex_count} vertices, {g.edge_count} edges, strong index {k}, valid={verify(g, col).valid}")
    for c, es in sorted(classes.items()):
        print(f"    colour {c}: {es}")

# one fewer colour than the index is never enough
g = builtin_graph("k33")
print("K3,3 from 8 colours:", exact_list_color(g, uniform_lists(g, 8)))
