# %% [markdown]
# Symmetric powers of small representations
#
# How many irreducible pieces does Sym^k of a 3-dimensional character split into?

# %%
from schurlift.fixtures import load_fixture
from schurlift.plethysm import ClassFunction, adjoint_link_check, decompose, self_twists, sym_power

a4 = load_fixture("a4")
rho = ClassFunction.irreducible(a4, 4)
for k in range(1, 6):
    d = decompose(sym_power(rho, k))
    print(k, d.N, d.constituent_degrees)

# %%
# rho is fixed by twisting with each of the three linear characters
print(self_twists(rho).S)

# %%
# Sym^2 irreducible <=> adjoint irreducible, here both fail
rep = adjoint_link_check(rho)
print(rep.sym2_norm, rep.adjoint_norm, rep.holds)

# %%
v = load_fixture("v1080")
chi2 = ClassFunction.irreducible(v, 2)
for k in (2, 3, 4):
    print(k, decompose(sym_power(chi2, k)).constituents)
