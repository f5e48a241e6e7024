"""
The centralizer family and its coordinate ring
==============================================

Upper-triangular matrices Z commuting with a bidiagonal matrix A(t) form a
family over the torus.  Eliminating below the first row leaves the first-row
coordinates and inverted diagonal entries; the map β sends them to symmetric
series and intertwines the Weyl group actions.
"""

from kkschur import centralizer as C

n, cap = 3, 5

# %%
# The diagonal entry z_22 in normal form.
print("z_22 =", C.z(n, 2, 2))

# %%
# s_1 swaps the first two diagonal entries; t_{ε_2} multiplies by z_22.
print("s_1(z_11) == z_22:", C.weyl_act_z("s1", C.z(n, 1, 1)) == C.z(n, 2, 2))
print("t_2(1) == z_22:", C.weyl_act_z("t2", C.ZExpression.constant(n, 1)) == C.z(n, 2, 2))

# %%
# β(z_ij) and the complete homogeneous series ĥ.
print("β(z_13) =", C.beta_raw(n, 1, 3, 3))

# %%
# Relations, equivariance and the SL/PGL variants.
for check in (C.relation_check, C.hhat_lemma_check, C.equivariance_check, C.sl_quotient_check, C.pgl_check):
    report = check(n, cap)
    print(f"{report.name}: {report.cases} cases, passed={report.passed}")
