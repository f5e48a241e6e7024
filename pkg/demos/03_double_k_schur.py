"""
K-theoretic double k-Schur functions
====================================

Demazure-type operators act on truncated symmetric series with Laurent
polynomial coefficients.  Applying T_w to 1 produces g_w(y|b), the
symmetric-function model of k_w.
"""

from kkschur import demazure as D
from kkschur import ext_weyl as X
from kkschur.coeff_ring import specialize
from kkschur.symseries import omega, omega_inverse, to_schur

ctx = D.DemazureContext.k_finite(3, cap=4)
d, R = ctx.datum, ctx.ring

# %%
# g_τ is the Ω series Σ_l b_1^l h_l.
print(D.g_class(ctx, X.tau(d)))

# %%
# A single-row class agrees with its Schur-hook closed form, and at b = 0
# it reduces to h_i.
g = D.g_class(ctx, X.rho(d, 2))
print("closed form:", g == D.special_formula_oracle(ctx, "row", 2))
print("at b = 0:", g.map_coefficients(lambda c: specialize(c, "b=0"), None))

# %%
# Schur expansion of g_{x_(1,1)}.
for mu, c in sorted(to_schur(D.g_class(ctx, X.partition_to_grassmannian(d, (1, 1)))).items()):
    print(f"  s{list(mu)}: {c}")

# %%
# Ω-Pieri: Ω(b_1)/Ω(b_3) expands over single-column classes.
lhs = omega(R.b(1), 4, R) * omega_inverse(R.b(3), 4, R)
print("column identity:", lhs == D.om_pieri_col_rhs(ctx, 3))

# %%
# Products of classes match the nil-Hecke structure constants.
print("cross-representation:", D.cross_representation_check(3, 4, 3).passed)

# %%
# Rectangles factor out: g̃_{λ ∪ R_i} = g̃_{R_i} g̃_λ(y|rot^i b).
print("rectangles:", D.rectangle_factorization_check(D.DemazureContext.k_finite(3, 5), 3).passed)

# %%
# In infinite rank and at b = 0, the classes are dual stable Grothendieck
# polynomials, counted by reverse plane partitions.
poly, pctx = D.rpp_oracle((2, 1), 3)
print("RPP oracle:", D.to_polynomial(D.infinite_class_at_zero((2, 1), 4), pctx) == poly)
