# %% [markdown]
# # Increasing binary trees
#
# The smallest entry is the root, entries to its left form the left subtree
# and entries to its right the right subtree. The DOT text renders with
# `dot -Tpng -O delta32.gv`.

# %%
from pathlib import Path

from permsum import prod_one
from permsum.dot import increasing_tree, to_dot

p = prod_one(32)
root, children = increasing_tree(p)
print("root", root, "children", children[root])

out = Path("delta32.gv")
out.write_text(to_dot(p, "delta32"))
print("wrote", out)
