# %% [markdown]
# # Arithmetic in GW(k)
#
# Every class the engine produces lives in the subring generated by <1> and
# <-1>. An element is stored as a<1> + b<-1> and reduced according to the
# field model.

# %%
from motivic_chi import FieldModel, normal_form, rank, signature, is_unit
from motivic_chi.gw import gw_inverse

generic = FieldModel.generic()
h = normal_form(1, 1, generic)        # hyperbolic form <1> + <-1>
q = normal_form(1, -1, generic)       # 1 - <-1>
print("h =", h, " q =", q, " q*q =", q * q)

# %% [markdown]
# The hyperbolic form kills q, and q squared is 2q.

# %%
print("h*q =", h * q)
print("rank:", rank(q * q), " unit?", is_unit(q))

# %% [markdown]
# ## Changing the field
#
# With a square root of -1 the twist vanishes. Over F_3 it survives only
# modulo 2; over R the signature detects it.

# %%
for sel in ("sqrt-minus-one", "finite:3", "finite:5", "real-closed"):
    m = FieldModel.parse(sel)
    x = normal_form(3, -1, m)
    print(f"{sel:15s} 3<1> - <-1> -> {x}")

real = FieldModel.real_closed()
print("signature of 2<1> + 3<-1>:", signature(normal_form(2, 3, real)))

# %% [markdown]
# ## Inverses
#
# In positive characteristic p the coefficients live in Z[1/p]. A unit's
# inverse multiplies back to 1.

# %%
f3 = FieldModel.finite(3)
u = normal_form(3, 1, f3)              # rank 4 is not a power of 3, so no inverse
print(u, "unit?", is_unit(u))
v = normal_form(2, 1, f3)              # rank 3
inv = gw_inverse(v)
print(v, "inverse", inv, "product", v * inv)
