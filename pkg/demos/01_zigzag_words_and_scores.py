# %% [markdown]
# # Zigzag words and parity scores
#
# A zigzag word over [q] alternates odd runs (odd letters, ascending) with
# even runs (even letters, descending). The score of a sequence tells how
# many runs beyond its length are needed to find it inside such a word.

# %%
from itertools import permutations

from superpatterns import (
    break_ties,
    circular_score,
    greedy_place,
    lift,
    min_runs,
    score,
    zz,
)
from superpatterns.plotting import text_grid

for m, q in [(3, 4), (4, 4), (5, 5)]:
    print(f"zz({m},{q}) =", *zz(m, q))

# %% [markdown]
# Breaking ties ranks the letters level by level, right to left inside a
# level, which turns a word into a permutation.

# %%
word = zz(3, 3)
print(text_grid(word))
print()
print(text_grid(word, labels=break_ties(word)))

# %% [markdown]
# The score is a sum of local costs. Its meaning can be checked directly:
# the smallest number of runs holding sigma verbatim is k + score.

# %%
for sigma in [(2, 1), (1, 2, 3), (3, 1, 2), (4, 2, 3)]:
    report = score(sigma)
    print(sigma, "score", report.total, "min runs", min_runs(sigma),
          "greedy runs", greedy_place(sigma, max(sigma) + 2))

# %% [markdown]
# Lifting every value by one flips each same-parity cost, which gives
# S(sigma) + S(sigma+) = 1 and, around the cycle, S^c(sigma) + S^c(sigma+) = 0.

# %%
for k in range(2, 7):
    sums = {score(s).total + score(lift(s)).total for s in permutations(range(1, k + 1))}
    csums = {circular_score(s).total + circular_score(lift(s)).total
             for s in permutations(range(1, k + 1))}
    zeros = sum(circular_score(s).total == 0 for s in permutations(range(1, k + 1)))
    print(f"k={k}: linear sums {sums}, circular sums {csums}, circular zeros {zeros}")
