# %% [markdown]
# # The modified zigzag construction for odd k
#
# Take zz(k-1, k-1), append a 1, and replace the final (2, 1) by (k, k-1).
# Breaking ties in this word gives a permutation of length (k-1)^2/2 + 1
# that is conjectured to be a circular k-superpattern for odd k > 3.

# %%
from superpatterns import check_zzc_claim, zzc_permutation, zzc_word
from superpatterns.plotting import text_grid

word = zzc_word(5)
print(text_grid(word, labels=zzc_permutation(5).permutation))

# %%
for k in (5, 7):
    report = check_zzc_claim(k)
    print(f"k={k}: length {report.notes['length']}, verdict {report.to_dict()['verdict']}")
    for name, fam in report.families.items():
        print(f"   {name:<22} {fam['checked']:>4} checked, {len(fam['violations'])} violations")
