# %% [markdown]
# # Which values are attained?
#
# Exhaustive enumeration gives the complete value set for small n. The
# integer values follow a simple rule that the constructions extend to any n.

# %%
from permsum import enumerate_values, format_rational, integer_values, integer_witness
from permsum.constructors import ExcludedValueError

v5 = enumerate_values("dif", 5)
print(len(v5), "values;", "nonnegative:", " ".join(format_rational(x) for x in v5.nonnegative()))

# %%
for n in range(3, 10):
    print(n, integer_values(n, method="exhaustive"))

# %% [markdown]
# From n = 6 on, every integer of absolute value at most n - 1 occurs except
# n - 2 and its negative. Constructed witnesses cover the larger sizes.

# %%
for m in integer_values(40, method="constructive")[-4:]:
    print(m, integer_witness(40, m))

try:
    integer_witness(40, 38)
except ExcludedValueError as exc:
    print(exc)
