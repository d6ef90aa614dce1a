# %% [markdown]
# # Building permutations with a prescribed value
#
# A few small seed permutations are grown into families of every size by
# linking, inserting a new maximum, or gluing a shifted reversal.

# %%
from permsum import (
    Permutation,
    evaluate,
    link,
    prod_one,
    zero_cycdif,
    zero_dif_end_shy,
    zero_dif_fixed_ends,
)
from permsum.constructors import TAU, prod_one_steps

# %% [markdown]
# Linking joins a permutation ending at its maximum to one starting at 1.
# The difference sums simply add, so zero stays zero.

# %%
sigma = Permutation((1, 4, 2, 5, 3, 6))
rho = link(sigma, Permutation(TAU))
print(rho, evaluate("dif", rho))

for n in (6, 7, 8, 20, 101):
    p = zero_dif_fixed_ends(n)
    print(n, p(1), p(n), evaluate("dif", p))

# %% [markdown]
# Ending one below the maximum instead, and the cyclic version.

# %%
print(zero_dif_end_shy(13), evaluate("dif", zero_dif_end_shy(13)))
for n in (8, 9, 15, 40, 41):
    print(n, evaluate("cycdif", zero_cycdif(n)))

# %% [markdown]
# Product sum one. Inserting the new letter m between two neighbours that add
# up to m leaves the product sum unchanged, so one seed of size 8 reaches any size.

# %%
for p in prod_one_steps(12):
    print(p, evaluate("prod", p))
print(evaluate("prod", prod_one(200)))
