# %% [markdown]
# # Circular superpatterns
#
# A circular k-superpattern contains, for every permutation of length k, at
# least one of its rotations. Prepending a new maximum to a linear
# (k-1)-superpattern always gives one.

# %%
from superpatterns import (
    bounds,
    circular_from_linear,
    ev_linear_superpattern,
    verify_circular_superpattern,
)
from superpatterns.reporting import dumps

report = verify_circular_superpattern((8, 4, 6, 2, 7, 1, 3, 5, 9), 5)
print("846271359 verified:", report.verified, f"({report.total_classes} classes)")
print("witness for class 5 4 3 2 1:", report.witnesses[(5, 4, 3, 2, 1)])

# %%
for k in range(3, 8):
    base = ev_linear_superpattern(k - 1).permutation
    gamma = circular_from_linear(base).permutation
    ok = verify_circular_superpattern(gamma, k, keep_witnesses=False).verified
    print(f"k={k}: length {len(gamma):>2}  verified={ok}  bounds={bounds(k)}")

# %% [markdown]
# Reports serialize to a versioned JSON document.

# %%
print(dumps(verify_circular_superpattern((6, 2, 5, 3, 1, 4), 4))[:400], "...")
