# %% [markdown]
# # Torus localization and the normalizer of a maximal torus
#
# Tori contribute (1 - <-1>)^n, which vanishes once -1 is a square. For
# G/N(T) the torus action has a single fixed point, so chi is 1 in that case
# and a rank-one unit otherwise.

# %%
from motivic_chi import CartanType, FieldModel, evaluate, rank

for n in range(1, 4):
    print(f"T^{n}:", evaluate(f"Torus({n})", FieldModel.generic()),
          "|", evaluate(f"Torus({n})", FieldModel.sqrt_minus_one()))

# %% [markdown]
# ## G/N(T)

# %%
for sel in ("sqrt-minus-one", "finite:5", "finite:3", "generic"):
    v = evaluate("GModN(A, 2)", FieldModel.parse(sel))
    print(f"{sel:15s} {v}   rank {rank(v.representative)}")

# %% [markdown]
# ## Localization on a flag variety
#
# The torus has |W| fixed points on G/B, one in each Bruhat cell, so
# the fixed-locus value agrees with chi(G/B) modulo the fundamental ideal.

# %%
from motivic_chi import chi_flag, reduce_mod_fundamental

m = FieldModel.generic()
ct = CartanType("B", 2)
print(chi_flag(ct, m), "->", reduce_mod_fundamental(chi_flag(ct, m).representative))
print(evaluate("TorusFixed(Flag(B, 2), Stratified[" + ", ".join(["(Point, 0)"] * 8) + "])", m))
