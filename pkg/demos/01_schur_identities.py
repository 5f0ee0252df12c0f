# %% [markdown]
# Schur polynomials and the symmetric-power identities
#
# Two independent constructions of S_lambda, a Littlewood-Richardson product,
# and the polynomial identities behind the GL(3) and GL(4) arguments.

# %%
from schurlift.schur import (
    lr_expand,
    schur_bialternant,
    schur_tableaux,
    verify_gl3_adjoint_identity,
    verify_gl3_identity,
    verify_gl4_identity,
)

s21 = schur_tableaux((2, 1), 3)
print(s21)
print(s21 == schur_bialternant((2, 1), 3))  # same polynomial both ways

# %%
# S_(2,1) * S_(2,1): the coefficient of S_(3,2,1) is 2
for nu, c in sorted(lr_expand((2, 1), (2, 1)).items(), reverse=True):
    print(nu, c)

# %%
# the GL(3) family for a few m; vanishing terms show up from m = 4 on
for m in (3, 4, 8):
    rep = verify_gl3_identity(m)
    print(m, rep.passed, rep.checks)

# %%
rep = verify_gl3_adjoint_identity()
print(rep.passed, rep.checks)

# %%
print(verify_gl4_identity(6).checks)
