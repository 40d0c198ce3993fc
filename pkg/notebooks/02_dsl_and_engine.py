# %% [markdown]
# # Describing spaces and evaluating their Euler characteristic
#
# A space is written as an expression. The engine walks the expression,
# applies one rule per node, and records a derivation that can be replayed.

# %%
from pathlib import Path

from motivic_chi import FieldModel, eval_chi, parse, pretty_print, validate, verify_derivation

generic = FieldModel.generic()
e = parse("Product(Gm, Projective(2))")
print(pretty_print(e))
value, deriv = eval_chi(e, generic)
print("chi =", value)
print(deriv.render())

# %% [markdown]
# ## Cut and paste
#
# Stratifying P^1 into a point and an affine line gives the same answer as
# the built-in projective space.

# %%
here = Path(__file__).resolve().parent if "__file__" in globals() else Path("notebooks")
p1 = parse((here / "chi" / "p1.chi").read_text())
print(eval_chi(p1, generic)[0], "==", eval_chi(parse("Projective(1)"), generic)[0])

# %% [markdown]
# ## Pointed spaces
#
# Smash products need pointed inputs. Validation reports the offending path
# before anything is evaluated.

# %%
for d in validate(parse("Smash(Gm, TateTwist)")):
    print(d)
print(eval_chi(parse("Smash(TateTwist, TateTwist)"), generic)[0])

# %% [markdown]
# ## Replaying a derivation
#
# The JSON form of a derivation is self-contained; replay recomputes every
# node from its children and checks the stored values.

# %%
from motivic_chi import Derivation

text = deriv.dumps()
again = Derivation.from_json(__import__("json").loads(text))
print("replayed:", verify_derivation(again, generic))
