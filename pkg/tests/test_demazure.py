"""Demazure operators on symmetric series and the K-k-Schur classes they build."""

import pytest
from hypothesis import given, strategies as st

from kkschur.coeff_ring import specialize
from kkschur.demazure import (
    DemazureContext,
    D_apply,
    T_apply,
    apply_word,
    cohomology_class,
    cross_representation_check,
    g_class,
    hopf_grouplike_check,
    infinite_class,
    infinite_class_at_zero,
    iota_hat,
    iota_hat_class_check,
    jacobi_trudi,
    k_small,
    k_small_comparison,
    molev_class,
    om_pieri_check,
    om_pieri_col_rhs,
    rectangle_factorization_check,
    reflect_apply,
    rpp_oracle,
    shift_parameters,
    special_formula_oracle,
    tau_apply,
    to_polynomial,
    variant_ring_check,
)
from kkschur.ext_weyl import (
    grassmannian_elements,
    identity,
    partition_to_grassmannian,
    rho,
    rho_prime,
    tau,
)
from kkschur.symseries import h, h_monomial, omega, omega_inverse, one, partitions, schur, zero

N, CAP = 3, 5
CTX = DemazureContext.k_finite(N, CAP)
R = CTX.ring
D = CTX.datum


@st.composite
def series(draw, ctx=CTX, max_terms=3):
    """Random series with a few h-monomials and small Laurent coefficients."""
    R = ctx.ring
    labels = R.labels
    f = zero(ctx.cap, R)
    for _ in range(draw(st.integers(1, max_terms))):
        size = draw(st.integers(0, ctx.cap))
        mu = draw(st.sampled_from(partitions(size)))
        weight = {l: draw(st.integers(-1, 1)) for l in labels}
        coef = R.e(weight) * draw(st.integers(-3, 3))
        f = f + h_monomial(mu, ctx.cap, R, coef)
    return f


# -- operators ---------------------------------------------------------------


def test_reflections_fix_one():
    assert reflect_apply(CTX, 1, one(CAP, R)) == one(CAP, R)


def test_s0_of_one_is_omega_ratio():
    expected = omega(R.b(1), CAP, R) * omega_inverse(R.b(N), CAP, R)
    assert reflect_apply(CTX, 0, one(CAP, R)) == expected


@given(series())
def test_tau_inverse(f):
    assert tau_apply(CTX, -1, tau_apply(CTX, 1, f)) == f
    assert tau_apply(CTX, 1, tau_apply(CTX, -1, f)) == f


@given(series(), st.integers(0, N - 1))
def test_reflections_are_involutions(f, i):
    assert reflect_apply(CTX, i, reflect_apply(CTX, i, f)) == f


@given(series(), st.integers(0, N - 1))
def test_nil_hecke_quadratic_relation(f, i):
    t = T_apply(CTX, i, f)
    assert T_apply(CTX, i, t) == -t


@given(series())
def test_twisted_division_matches_direct(f):
    assert T_apply(CTX, 0, f) == T_apply(CTX, 0, f, direct=True)


@given(series(), st.integers(0, N - 1))
def test_tau_conjugates_operators(f, i):
    moved = tau_apply(CTX, 1, T_apply(CTX, i, tau_apply(CTX, -1, f)))
    assert moved == T_apply(CTX, (i + 1) % N, f)


@given(series(), st.integers(1, N - 2))
def test_braid_relation(f, i):
    lhs = T_apply(CTX, i, T_apply(CTX, i + 1, T_apply(CTX, i, f)))
    rhs = T_apply(CTX, i + 1, T_apply(CTX, i, T_apply(CTX, i + 1, f)))
    assert lhs == rhs


def test_demazure_fixes_one():
    # s_0 moves 1, so only the finite indices fix it
    for i in range(1, N):
        assert D_apply(CTX, i, one(CAP, R)) == one(CAP, R)


def test_t0_of_one_linear_part():
    t0 = T_apply(CTX, 0, one(CAP, R))
    assert t0.constant_term().is_zero()
    assert t0.degree_slice(1) == h(1, CAP, R).scale(R.e({N: -1}))


# -- classes -----------------------------------------------------------------


def test_identity_and_tau_classes():
    assert g_class(CTX, identity(D)) == one(CAP, R)
    assert g_class(CTX, tau(D)) == omega(R.b(1), CAP, R)
    assert g_class(CTX, tau(D), closed=True) == omega(R.b(1), CAP, R)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_special_classes_match_closed_forms(n):
    ctx = DemazureContext.k_finite(n, 6)
    for i in range(1, n):
        assert g_class(ctx, rho(ctx.datum, i)) == special_formula_oracle(ctx, "row", i)
        assert g_class(ctx, rho_prime(ctx.datum, i)) == special_formula_oracle(ctx, "column", i)


@pytest.mark.parametrize("n", [3, 4])
def test_special_classes_at_zero_are_h_and_omega_tilde_h(n):
    from kkschur.symseries import omega_tilde_h_closed

    ctx = DemazureContext.k_finite(n, 6)
    for i in range(1, n):
        row = g_class(ctx, rho(ctx.datum, i)).map_coefficients(lambda c: specialize(c, "b=0"), None)
        col = g_class(ctx, rho_prime(ctx.datum, i)).map_coefficients(lambda c: specialize(c, "b=0"), None)
        assert row == h(i, 6)
        assert col == omega_tilde_h_closed(i, 6)


def test_column_two_at_zero():
    ctx = DemazureContext.k_finite(3, 4)
    col = g_class(ctx, rho_prime(ctx.datum, 2)).map_coefficients(lambda c: specialize(c, "b=0"), None)
    e1, e2 = h(1, 4), h(1, 4) * h(1, 4) - h(2, 4)
    assert col == e1 + e2


@pytest.mark.parametrize("n", [3, 4])
def test_omega_pieri_corrected(n):
    report = om_pieri_check(DemazureContext.k_finite(n, 6))
    assert report.passed, report.failures


def test_omega_pieri_displayed_column_product_fails():
    # the product over l = i+1..n is not what the induction produces once i ≥ 2
    ctx = DemazureContext.k_finite(3, 5)
    lhs = omega(ctx.ring.b(1), 5, ctx.ring) * omega_inverse(ctx.ring.b(2), 5, ctx.ring)
    assert lhs == om_pieri_col_rhs(ctx, 2, "corrected")
    assert lhs != om_pieri_col_rhs(ctx, 2, "displayed")


def test_column_pieri_top_index():
    # i = n: both forms agree since the product is empty
    ctx = DemazureContext.k_finite(3, 5)
    lhs = omega(ctx.ring.b(1), 5, ctx.ring) * omega_inverse(ctx.ring.b(3), 5, ctx.ring)
    assert lhs == om_pieri_col_rhs(ctx, 3, "displayed") == om_pieri_col_rhs(ctx, 3, "corrected")


# -- cohomological mode ------------------------------------------------------


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (2, 2), (2, 1, 1)])
def test_cohomology_lowest_degree_is_length(lam):
    ctx = DemazureContext.h_finite(3, 5)
    w = partition_to_grassmannian(ctx.datum, lam)
    assert cohomology_class(ctx, w).lowest_degree() == w.length()


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1)])
def test_cohomology_k_small_is_schur_at_zero(lam):
    ctx = DemazureContext.h_finite(3, 5)
    c = cohomology_class(ctx, partition_to_grassmannian(ctx.datum, lam))
    assert c.map_coefficients(lambda x: specialize(x, "b=0"), None) == schur(lam, 5)


def test_k_theoretic_lowest_degree_can_drop_below_length():
    w = rho_prime(D, 2)
    assert w.length() == 2
    assert g_class(CTX, w).lowest_degree() == 1


# -- k-conjugation -----------------------------------------------------------


def test_iota_hat_fixes_one():
    assert iota_hat(CTX, one(CAP, R)) == one(CAP, R)


@pytest.mark.parametrize("closed", [False, True])
def test_iota_hat_on_classes(closed):
    ctx = DemazureContext.k_finite(3, 6)
    for L in range(4):
        for w in grassmannian_elements(ctx.datum, L):
            assert iota_hat_class_check(ctx, w, closed)


# -- factorizations and variants --------------------------------------------


def test_rectangle_factorization_small():
    report = rectangle_factorization_check(DemazureContext.k_finite(3, 6), 4)
    assert report.passed, report.failures


@pytest.mark.slow
def test_rectangle_factorization_rank_five_example():
    ctx = DemazureContext.k_finite(5, 6)
    report = rectangle_factorization_check(ctx, 4, lambdas=[(3, 1)], indices=[2])
    assert report.passed and report.cases == 1


def test_cross_representation():
    report = cross_representation_check(3, 6, 3, tau_powers=(0, 1))
    assert report.passed, report.failures


def test_cross_representation_closed():
    report = cross_representation_check(3, 6, 3, closed=True)
    assert report.passed, report.failures


@pytest.mark.parametrize("kind", ["SL", "PGL"])
def test_variant_rings(kind):
    report = variant_ring_check(kind, 3, 5, max_length=2)
    assert report.passed, report.failures


def test_tau_powers_are_grouplike():
    assert hopf_grouplike_check(DemazureContext.k_finite(3, 4)).passed


# -- infinite rank -----------------------------------------------------------


def test_infinite_empty_class():
    assert infinite_class((), 4) == one(4, infinite_class((), 4).ring)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_infinite_class_at_zero_matches_reverse_plane_partitions(lam):
    cap = sum(lam)
    poly, pctx = rpp_oracle(lam, 3)
    assert to_polynomial(infinite_class_at_zero(lam, cap), pctx) == poly


@pytest.mark.parametrize("lam,n", [((1,), 3), ((2,), 3), ((1, 1), 3), ((2, 1), 4), ((2, 2), 4)])
def test_k_small_classes_agree_with_infinite_rank(lam, n):
    assert k_small(lam, n)
    assert k_small_comparison(lam, n, 5)
    assert k_small_comparison(lam, n, 5, closed=True)


def test_k_small_predicate():
    assert k_small((2, 1), 4) and not k_small((2, 1), 3)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_molev_jacobi_trudi(lam):
    window = (-6, 7)
    ms = molev_class(lam, 5, window)
    assert jacobi_trudi(lam, "row", 5, window) == ms
    assert jacobi_trudi(lam, "col", 5, window) == ms


@pytest.mark.parametrize("i,j", [(1, 2), (2, 1), (2, 3), (3, 1)])
def test_molev_special_symmetry(i, j):
    # ŝ_{ρ_i}(y|τ^{-j}a) is symmetric in a_0, a_1 whenever i ≠ j
    ctx = DemazureContext.h_infinite(-6, 6, 4)
    base = apply_word(ctx, "A", tuple(range(i - 1, -1, -1)))
    shifted = shift_parameters(base, -j)
    swapped = shifted.map_coefficients(lambda c: c.relabel({0: 1, 1: 0}))
    assert swapped == shifted
