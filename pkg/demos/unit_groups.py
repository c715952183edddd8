# %% [markdown]
# The group of M with dagger(M) M = e: dimensions, classical types, membership.

# %%
import numpy as np

from gasvd import (
    AlgebraContext, dimension_identity, group_dimension, is_group_element, iso_class,
    lie_algebra_basis,
)
from gasvd.groups import membership_residual, random_group_element

print(f"{'sig':>10} {'group':>12} {'dim':>5} {'K+2G':>6}")
for n in range(1, 6):
    for p in range(n + 1):
        ctx = AlgebraContext.of(p, n - p)
        lhs, _ = dimension_identity(ctx)
        sig = f"G({p},{n - p})"
        print(f"{sig:>10} {iso_class(ctx).name:>12} {group_dimension(ctx):>5} {lhs:>6}")

# %% anti-Hermitian basis elements span the Lie algebra
print([b.label for b in lie_algebra_basis(AlgebraContext.of(1, 2))])
print([b.label for b in lie_algebra_basis(AlgebraContext.of(1, 1, True))])

# %% membership
g = AlgebraContext.of(2, 0)
u = g.from_dict({(): 1, (1, 2): -2}) * (1 / np.sqrt(5))
print(is_group_element(u), is_group_element(2 * u), membership_residual(2 * u))

rng = np.random.default_rng(2)
ctx = AlgebraContext.of(1, 3)
a, b = random_group_element(ctx, rng), random_group_element(ctx, rng)
print(membership_residual(a * b))
