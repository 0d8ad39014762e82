# %% [markdown]
# # Which block products are needed
#
# Order the glued vertices as (m-only, boundary, n-only). Each closed piece
# then splits into blocks such as `MX` (m-only to boundary) or `XXN`
# (boundary to boundary inside n). A shortest path alternates between the
# two pieces, so the distance from group i to group j is a min over
# alternating words in these blocks.

# %%
from pathcompose import generate_symbols, render_symbols
from pathcompose.symbols import BLOCKS

print(BLOCKS)

# %%
print(render_symbols(generate_symbols(1)))

# %%
print(render_symbols(generate_symbols(4)))

# %% [markdown]
# The number of words grows with the number of allowed switches.

# %%
for k in range(7):
    print(k, sum(1 for _ in generate_symbols(k).words()))
