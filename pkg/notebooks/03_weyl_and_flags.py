# %% [markdown]
# # Weyl groups and flag varieties
#
# The Bruhat cells of G/B are affine spaces indexed by the Weyl group, one of
# dimension l(w) for each element w. Enumerating W by length therefore gives
# chi(G/B) directly.

# %%
import numpy as np

from motivic_chi import CartanType, FieldModel, build_root_system, chi_flag, weyl_enumerate
from motivic_chi import oracles

for label in ("A,2", "B,3", "G,2", "F,4"):
    ct = CartanType.parse(label)
    wd = weyl_enumerate(ct)
    print(f"{ct}: |W| = {wd.order}, oracle {oracles.weyl_order_closed_form(ct)}, "
          f"lengths {list(wd.length_counts)}")

# %% [markdown]
# The Cartan matrix comes from the simple roots.

# %%
print(np.array(build_root_system(CartanType("G", 2)).cartan_matrix))

# %% [markdown]
# ## chi(G/B) in different fields
#
# The rank is |W|; the twisted part counts cells of odd codimension.

# %%
ct = CartanType("A", 3)
for sel in ("generic", "sqrt-minus-one", "real-closed", "finite:7"):
    v = chi_flag(ct, FieldModel.parse(sel))
    print(f"{sel:15s} {v}")
