# %% [markdown]
# # Products in cartesian multicategories
#
# In finite sets with the cartesian action, products can be found three
# ways: equationally, by a universal property, and through a preuniversal
# arrow.  The size cap matters, since the product of two 2-element sets does
# not fit in sets of size at most 2.

# %%
from mcat import analysis
from mcat.fixtures import fixture, klein_slice

FS = fixture("FS2x")
for fam in [(1, 2), (2, 1), (2, 2), ()]:
    w = analysis.algebraic_product_search(FS, fam)
    print(fam, "->", None if w is None else (w.C, [str(p) for p in w.projections]))

# %%
print(analysis.product_equivalence_report(FS))

# %% [markdown]
# ## Biproducts
#
# Commutative monoids with pointwise addition of homomorphisms form a
# sequential cartesian backend.  There, products coincide with biproducts.
# Only families containing the trivial monoid have one inside the size cap.

# %%
CM = fixture("CM2")
for fam in [(CM.objects[0], CM.objects[2]), (CM.objects[1], CM.objects[1])]:
    r = analysis.biproduct_agreement(CM, fam)
    print([str(x) for x in fam], r.details.get("witness") or r.details.get("note"))

# %% [markdown]
# Allowing sets of size 4 makes room for Z/2 x Z/2.

# %%
K = klein_slice()
z2 = next(x for x in K.objects if str(x) == "Z2")
print(analysis.biproduct_agreement(K, (z2, z2)))

# %% [markdown]
# The Boolean rig has no biproduct of two copies of its one object: the
# searches agree on absence.

# %%
print(analysis.biproduct_agreement(fixture("Bool"), ("*", "*")).details)
