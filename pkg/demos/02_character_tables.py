# %% [markdown]
# Character tables from generators
#
# Groups are enumerated from permutation or matrix generators and their
# tables come out of the Dixon-Schneider method over a prime field.

# %%
from schurlift.dixon import character_table
from schurlift.groups import matrix_group, permutation_group
from schurlift.named_groups import named_group

A4 = permutation_group(["(1,2,3)", "(1,2)(3,4)"])
t = character_table(A4, "A4")
print(t.classes.labels, t.classes.sizes)
for chi in t.irreducibles:
    print([str(v) for v in chi])

# %%
# SL(2,3) from matrices over F3; seven classes
G = matrix_group([[1, 1, 0, 1], [1, 0, 1, 1]], "gf 3")
print(G.order, sorted(character_table(G).degrees))

# %%
# SL(2,9) over F9 = F3[t]/(t^2+1)
sl29 = character_table(named_group("sl29"))
print(sl29.order, sl29.degrees)
