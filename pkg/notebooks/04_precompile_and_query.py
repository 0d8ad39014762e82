# %% [markdown]
# # Precompile once, query many times

# %%
import numpy as np

from pathcompose import compose_full, floyd_warshall, precompile, pushout, query
from pathcompose.bench import bench_inputs, glue_first

m, n = bench_inputs(60, seed=1)
d = glue_first(m, n, 3)

# %% [markdown]
# `precompile` closes each piece and cuts it into blocks. This is the
# expensive step; after it, a query only touches a few rows of the blocks.

# %%
pm, pn = precompile(d)
print({name: b.shape for name, b in pm.blocks.items()})

# %%
r = query(pm, pn, "m:a10", "n:b42")
print(r)

# %%
C = compose_full(d)
F = floyd_warshall(pushout(d))
print(np.max(np.abs(C.entries - F.entries)))
print(C["m:a10", "n:b42"], r.distance)
