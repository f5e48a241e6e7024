"""
Extended affine Weyl groups and affine Grassmannian elements
============================================================

Elements are stored as pairs (translation, permutation) and multiply as
t_λ u · t_μ v = t_{λ+uμ} uv.  Reduced words, the Bruhat order and the bijection
with k-bounded partitions are all computed from that representation.
"""

from kkschur import ext_weyl as X
from kkschur.root_data import type_a_gl, type_a_pgl, type_c_adjoint

# %%
# The generator τ of the fundamental group of GL_3 has length zero and
# conjugates s_i to s_{i+1}.
gl3 = type_a_gl(3)
tau = X.tau(gl3)
s = {i: X.simple_reflection(gl3, i) for i in range(3)}
print("ℓ(τ) =", tau.length())
print("τ s_0 τ^{-1} == s_1:", tau * s[0] * tau.inverse() == s[1])

# %%
# k-bounded partitions index the affine Grassmannian elements of SL_n.
for lam in [(1,), (2,), (1, 1), (2, 1), (2, 2, 1)]:
    w = X.partition_to_grassmannian(gl3, lam)
    print(lam, "->", X.reduced_word(w), "length", w.length())

# %%
# The Bruhat ideal below s_1 s_0.
w = X.from_word(gl3, (1, 0))
print("ideal of s1s0:", sorted(str(X.reduced_word(v)) for v in X.bruhat_ideal(w)))

# %%
# k-rectangles: κ_2 in PGL_6 and κ_3 in the adjoint group of type C_3.
print("κ_2 in PGL_6:", X.grassmannian_word(6, (2, 2, 2, 2)))
print("κ_3 in C_3:", X.reduced_word(X.kappa(type_c_adjoint(3), 3), "right_max"))

# %%
# Factorization of a PGL_3 Grassmannian element into a finite part u and an
# antidominant translation γ.
pgl3 = type_a_pgl(3)
w = X.from_word(pgl3, (2, 0, 1, 0, 2, 1, 0))
u, gamma = X.grassmannian_decomposition(w)
print("u =", u, " γ =", gamma, " γ_u =", X.gamma_u(pgl3, u))
