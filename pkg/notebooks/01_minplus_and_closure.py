# %% [markdown]
# # Shortest paths as a matrix closure
#
# Over the min-plus semiring, "addition" is `min` and "multiplication" is `+`.
# A weight matrix multiplied by itself gives the cheapest two-step routes,
# and the closure `I + M + M^2 + ...` gives every shortest-path distance.

# %%
import numpy as np

from pathcompose import SquareMatrix, closure, floyd_warshall, mat_mul
from pathcompose.semiring import mat_pow

inf = np.inf

# %%
T = SquareMatrix.from_edges(
    ["a", "b", "c", "d"],
    [("a", "b", 1), ("b", "c", 1), ("a", "c", 3), ("c", "d", 2), ("d", "a", 7)],
)
print(T.entries)

# %% [markdown]
# One product already finds the detour a -> b -> c, which is cheaper than
# the direct edge of cost 3.

# %%
print(mat_mul(T, T)["a", "c"])
print(mat_pow(T, 3).entries)

# %%
C = closure(T)
print(C.entries)
assert C == floyd_warshall(T)

# %% [markdown]
# The closure is a fixpoint, so applying it again changes nothing, and the
# diagonal is always zero: staying put costs nothing.

# %%
assert closure(C) == C
print(np.diag(C.entries))

# %% [markdown]
# Larger random graphs agree with Floyd-Warshall too.

# %%
rng = np.random.default_rng(0)
w = rng.uniform(0, 10, (40, 40))
w[rng.random((40, 40)) < 0.8] = inf
R = SquareMatrix([f"v{i}" for i in range(40)], w)
print(closure(R).allclose(floyd_warshall(R)))
print(np.isinf(closure(R).entries).mean())
