# %% [markdown]
# SVD of multivectors in G(2,0) and its complexification.

# %%
import numpy as np

from gasvd import AlgebraContext, k_subspace, polar_ga, rep_forward, svd_ga

g = AlgebraContext.of(2, 0)
m = g.from_dict({(): 5, (1,): 4, (2,): 3})   # 5e + 4e1 + 3e2
print(m)
print(rep_forward(m).data)                   # rank one, so one singular value vanishes

# %%
res = svd_ga(m)
print("singular values:", res.singular_values)
print("Sigma:", res.Sigma)
print("K:", k_subspace(g).labels)            # Sigma lives on span(e, e2)
print("U:", res.U)
print("V:", res.V)
print(res.residuals())

# %% [markdown]
# A multivector with no inverse still factors.  U and V are not unique here.

# %%
d = g.from_dict({(1,): 0.5, (1, 2): 0.5})
res = svd_ga(d)
print(res.Sigma, res.U, res.V, sep="\n")

# %% complex case
gc = AlgebraContext.of(2, 0, True)
mc = gc.from_dict({(): 1 + 1j, (1,): 1 - 1j, (2,): 1 + 1j, (1, 2): -1 + 1j})
res = svd_ga(mc)
print("Sigma:", res.Sigma)

pol = polar_ga(mc)
print("P:", pol.P)
print("S:", pol.S)
print("W:", pol.W)      # one valid choice; W is not unique when M is singular
print({k: f"{v:.1e}" for k, v in pol.residuals().items()})

# %% singular values survive left multiplication by a blade
rng = np.random.default_rng(0)
x = g.random(rng)
for b in g.basis():
    print(b, np.sort(svd_ga(b * x).singular_values))
