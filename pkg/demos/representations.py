# %% [markdown]
# Matrix images of basis blades, block structure, and the K subspace.

# %%
import numpy as np

from gasvd import AlgebraContext, build_rep, k_subspace, rep_forward, rep_inverse
from gasvd.blades import blade_name

for p, q in [(2, 0), (1, 1), (0, 2), (3, 0), (1, 3), (2, 1)]:
    ctx = AlgebraContext.of(p, q)
    print(f"G({p},{q}): ring {ctx.ring}, size {ctx.matrix_size}, blocks {ctx.blocks}")

# %% G(1,3) images are 2x2 quaternion matrices
rep = build_rep(AlgebraContext.of(1, 3))
for blade in (0b0010, 0b0110, 0b1001):
    print(blade_name(blade))
    print(rep.blade_image(blade).data)   # trailing axis is [w, x, y, z]

# %% round trip through the representation
ctx = AlgebraContext.of(3, 2, True)
rng = np.random.default_rng(1)
m = ctx.random(rng)
x = rep_forward(m)
print(x.ring, x.size, (rep_inverse(x, build_rep(ctx)) - m).norm())

# %% product of images = image of product
a, b = ctx.random(rng), ctx.random(rng)
print((rep_forward(a * b) - rep_forward(a) @ rep_forward(b)).norm())

# %% K: blades with real diagonal images
for p, q, cx in [(2, 0, False), (1, 3, False), (2, 1, False), (3, 0, True), (4, 1, True)]:
    print(p, q, cx, k_subspace(AlgebraContext.of(p, q, cx)).labels)
