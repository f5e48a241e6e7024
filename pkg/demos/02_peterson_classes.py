"""
The K-nil-Hecke ring and its Peterson subalgebra
================================================

The K-homology Schubert bases k_w = T_w * 1 and ℓ_w = D_w * 1 live in the
centralizer of R(T) inside the affine K-nil-Hecke ring.  Their products expand
with Laurent polynomial coefficients.
"""

from kkschur import ext_weyl as X
from kkschur.nilhecke import D_of, NilHeckeElement, t_basis
from kkschur.peterson import ClassKind, expand_product, is_in_peterson, k_class, l_class, multiply, verify_factorizations
from kkschur.root_data import type_a_gl, type_a_pgl

gl2 = type_a_gl(2)
s0 = X.simple_reflection(gl2, 0)

# %%
# k_{s_0} commutes with the coefficient ring.
k = k_class(s0).value
print("k_{s0} =", k)
print("in the Peterson subalgebra:", is_in_peterson(k))

# %%
# k_{s_0}^2 in the ideal-sheaf basis.
for w, c in expand_product(s0, s0, ClassKind.IDEAL).items():
    print(f"  k[{X.reduced_word(w)}]: {c}")

# %%
# The same square in the structure-sheaf basis ℓ.
for w, c in expand_product(s0, s0, ClassKind.STRUCTURE).items():
    print(f"  ℓ[{X.reduced_word(w)}]: {c}")

# %%
# D_w is the sum of T_v over the Bruhat ideal of w.
gl3 = type_a_gl(3)
w = X.from_word(gl3, (1, 0))
total = sum((t_basis(gl3, v) for v in X.bruhat_ideal(w)), start=NilHeckeElement(gl3, {}))
print("D_{s1s0} == Σ T_v:", D_of(w) == total)

# %%
# Factorization identities (k-rectangles, translations, central shifts).
for d in (type_a_gl(3), type_a_pgl(3)):
    results = verify_factorizations(d, max_length=2)
    print(d.kind, d.n, "all hold:", all(r.passed for r in results), f"({len(results)} checks)")

# %%
# The PGL_3 worked product: ℓ_w = ℓ_{t_{-ϖ1}} ℓ_{t_{-ϖ2}}^2 ℓ_{π_2 s_0}.

pgl3 = type_a_pgl(3)
w = X.from_word(pgl3, (2, 0, 1, 0, 2, 1, 0))
t1 = l_class(X.translation(pgl3, [-c for c in pgl3.fundamental_coweight(1)])).value
t2 = l_class(X.translation(pgl3, [-c for c in pgl3.fundamental_coweight(2)])).value
last = l_class(X.fundamental_element(pgl3, 2) * X.simple_reflection(pgl3, 0)).value
print("factorization holds:", l_class(w).value == multiply(multiply(t1, multiply(t2, t2)), last))
