# %% [markdown]
# # Exact values of reciprocal sums
#
# Each functional adds up one unit fraction per adjacent pair of a
# permutation. Everything is a `Fraction`, so equality tests are exact.

# %%
from fractions import Fraction

from permsum import Functional, Permutation, Witness, evaluate, evaluate_prefix, reverse

p = Permutation.parse("1,4,2,5,3,6")
for f in Functional:
    print(f"{f.value:9s} {evaluate(f, p)}")

# %% [markdown]
# Terms are `1/(p(k) - p(k+1))` as written, so every ascent counts negatively.
# The identity is the most negative arrangement and its reverse the most positive.

# %%
ident = Permutation.identity(6)
print(evaluate("dif", ident), evaluate("dif", reverse(ident)))

# %% [markdown]
# The search engines extend prefixes one entry at a time. A prefix has no
# wrap-around term, so a cyclic sum is the prefix sum plus the closing pair.

# %%
q = (1, 4, 3, 5, 7, 2, 12, 8, 10, 11, 9, 6)
f = Functional.CYCSQDIF
print(evaluate_prefix(f, q), "+", f.term(q[-1], q[0]), "=", evaluate(f, q))

# %% [markdown]
# A `Witness` always recomputes its value, and refuses a wrong claim.

# %%
print(Witness(q, "cycsqdif", claimed=0))
try:
    Witness(q, "cycsqdif", claimed=Fraction(1, 2))
except ValueError as exc:
    print("rejected:", exc)
