# %% [markdown]
# # Sequential multicategories
#
# A category `C` gives a multicategory whose arrows `(x1, ..., xn) -> y` are
# tuples of arrows `xi -> y` sharing a codomain.  We build one from the
# walking arrow, compose in it, and run the axiom sweeps.

# %%
from mcat import Arrow, Budget, FamilyMap, Signature, compose, hom
from mcat.analysis import sequentiality_report
from mcat.categories import walking_arrow, z2_category
from mcat.constructions import seq, unary, z2_discrete
from mcat.laws import validate_all

W = seq(walking_arrow())
print(W.name, W.objects)

# %% [markdown]
# Hom-sets are products of ordinary hom-sets, so `(a, a; b)` has one arrow
# and `(b; a)` has none.

# %%
for sig in [Signature(("a", "a"), "b"), Signature(("b",), "a"), Signature((), "a")]:
    print(sig, [str(f) for f in hom(W, sig)])

# %% [markdown]
# Composition substitutes each argument into its slot and composes
# componentwise in the category.

# %%
M = seq(z2_category())
f = Arrow(("*", "*"), "*", ("g", "e"))
gs = [Arrow(("*", "*"), "*", ("g", "g")), Arrow(("*",), "*", ("g",))]
print(compose(M, f, gs))

# %% [markdown]
# Permuting inputs permutes the tuple.

# %%
print(M.act(FamilyMap.permutation(f.dom, (1, 0)), f))

# %% [markdown]
# The axiom sweeps enumerate every instance up to the budget.

# %%
print(validate_all(M, Budget(3, 2)))

# %% [markdown]
# Sequentiality is detected by several conditions that must agree.  A
# category viewed with unary arrows only, or a discrete monoid, fails them
# all.

# %%
for backend in (W, M, unary(walking_arrow()), z2_discrete()):
    r = sequentiality_report(backend)
    print(f"{backend.name:10} sequential={r.details['sequential']} {r.details['conditions']}")
