# %% [markdown]
# # Minimal lengths by exhaustive search
#
# Every length from k upward is scanned in lexicographic order. Patterns that
# refuted a candidate are tried first on the next one, which keeps the scan
# cheap. Set SUPERPATTERNS_WORKERS to fan the scan out over processes.

# %%
from superpatterns import Budget, min_superpattern_length

for k in range(2, 6):
    r = min_superpattern_length(k, "circular")
    print(f"circular k={k}: minimal length {r.minimal_length}, example {r.example}, "
          f"refuted {r.lengths_refuted}, {r.elapsed:.1f}s")

for k in range(2, 5):
    r = min_superpattern_length(k, "linear")
    print(f"linear   k={k}: minimal length {r.minimal_length}, example {r.example}, {r.elapsed:.1f}s")

# %% [markdown]
# A budget turns a long run into an explicit partial result.

# %%
r = min_superpattern_length(5, "linear", budget=Budget(max_seconds=2))
print(r.status, r.lengths_refuted)
