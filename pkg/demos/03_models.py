# %% [markdown]
# # Models in finite sets
#
# A model of a cartesian theory is a functor into finite sets that respects
# duplication and deletion.  For the rig of naturals as a sequential
# backend the models are exactly commutative monoids.

# %%
from collections import Counter

from mcat import models
from mcat.homs import monoid_structure
from mcat.categories import walking_arrow
from mcat.fixtures import fixture

N = fixture("N")
ms = models.enumerate_models(N, 2)
print(len(ms), "models;", Counter(m.carriers["*"] for m in ms))

# %% [markdown]
# Compare with a direct count of multiplication tables.

# %%
print([len(models.commutative_monoid_tables(n)) for n in range(3)])

# %% [markdown]
# Up to relabelling of the carrier there are three: the trivial monoid,
# Z/2, and the two-element semilattice.

# %%
for cls in models.iso_classes(ms):
    m2, m0, n = monoid_structure(cls[0].functor)
    print(f"carrier {n}, unit {m0.value[0]}, table {m2.value}, labellings {len(cls)}")

# %% [markdown]
# Models of `seq(C)` match functors from `C` into finite sets equipped with
# a compatible commutative monoid on each value.

# %%
print(models.kronecker_semantics_check(walking_arrow(), 2))
