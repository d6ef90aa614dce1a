# %% [markdown]
# # Searching for witnesses
#
# Where no construction is known, a pruned depth-first search or a
# meet-in-the-middle join looks for a permutation with the requested value.
# Not-found results say why: the space was exhausted, or a budget ran out.

# %%
import time

from permsum import SearchOptions, all_witnesses, find_witness

for n in (12, 13, 14):
    t0 = time.perf_counter()
    res = find_witness("cycsqdif", n, 0)
    print(n, res.status, res.strategy, res.witness.perm, f"{time.perf_counter() - t0:.2f}s")

# %%
for args in [("dif", 5, 0), ("sum", 6, 1), ("sum", 7, 1), ("cycsqdif", 10, 0), ("cycsqdif", 11, 0)]:
    res = find_witness(*args)
    print(args, res.status, res.witness.perm if res.found else "")

# %% [markdown]
# Both engines give the same verdict; budgets stop a search cleanly.

# %%
for strategy in ("dfs", "mitm"):
    print(strategy, find_witness("cycsqdif", 11, 0, SearchOptions(strategy=strategy)).status)

print(find_witness("cycsqdif", 18, 0, SearchOptions(strategy="dfs", time_budget=1.0)).status)

# %% [markdown]
# Every witness, including the ones removed by symmetry during the search.

# %%
zeros = all_witnesses("cycsqdif", 11, 0)
print(len(zeros), "permutations of size 11 have cyclic square-difference sum 0")
