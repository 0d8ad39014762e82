# %% [markdown]
# # A small timing run
#
# The full comparison uses 500-vertex pieces (`pathcompose bench --nodes 500
# --boundaries 1-10 --samples 50`). Here a smaller size keeps the run short.

# %%
from pathcompose.bench import records_to_csv, run_bench

records = run_bench(150, [1, 2, 4, 8], samples=20, seed=0)
print(records_to_csv(records))

# %%
for r in records:
    if r.algorithm == "compositional":
        print(f"k={r.boundary_size:2d} query {r.mean_seconds * 1e6:7.1f} us, precompile {r.precompile_seconds:.3f} s")
    else:
        print(f"k={r.boundary_size:2d} dijkstra {r.mean_seconds * 1e6:7.1f} us")
