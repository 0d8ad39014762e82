# %% [markdown]
# # Gluing two graphs along a boundary
#
# A gluing diagram names a small boundary set and says where each boundary
# point sits in each graph. The glued graph is the disjoint union with those
# vertices identified.

# %%
from pathcompose import GluingDiagram, SquareMatrix, build_glued_space, floyd_warshall, pushout

m = SquareMatrix.from_edges(["a", "x", "y"], [("a", "x", 2), ("y", "a", 1)])
n = SquareMatrix.from_edges(["u", "v", "b"], [("u", "b", 3), ("b", "v", 4)])
d = GluingDiagram.from_dicts(m, n, ["p", "q"], {"p": "x", "q": "y"}, {"p": "u", "q": "v"})

# %%
space = build_glued_space(d)
print(space.labels)           # boundary classes first, then m-only, then n-only
print(space.boundary_classes)

# %%
G = pushout(d)
print(G.entries)

# %% [markdown]
# In the glued graph, a -> x = u -> b -> v = y -> a is a cycle that neither
# piece has on its own.

# %%
D = floyd_warshall(G)
print(D["m:a", "n:b"], D["n:b", "m:a"])

# %% [markdown]
# Two boundary points that land on the same vertex of one side merge into
# a single class of the glued graph.

# %%
merged = GluingDiagram.from_dicts(m, n, ["p", "q"], {"p": "x", "q": "y"}, {"p": "u", "q": "u"})
sp = build_glued_space(merged)
print(sp.labels, sp.k, sp.crossing_bound)
