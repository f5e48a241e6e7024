"""Truncated symmetric series: arithmetic, Schur basis, Ω, Hopf structure, ω̃."""

import itertools

import flint
import pytest
from hypothesis import given, strategies as st

from kkschur.coeff_ring import CoeffRing
from kkschur.demazure import to_polynomial
from kkschur.symseries import (
    Tensor,
    antipode,
    coproduct,
    counit,
    e,
    h,
    h_monomial,
    hhat,
    hopf_axiom_failures,
    omega,
    omega_inverse,
    omega_tilde,
    omega_tilde_h,
    omega_tilde_h_closed,
    omega_tilde_on_p,
    omega_tilde_power_sum,
    one,
    partitions,
    power_sum,
    schur,
    to_schur,
    zero,
)

R = CoeffRing.laurent(2)
N = 3
PCTX = flint.fmpz_mpoly_ctx.get(tuple(f"y{i}" for i in range(1, N + 1)), "degrevlex")


def ssyt_polynomial(lam, n=N):
    """Schur polynomial by enumerating semistandard tableaux (oracle)."""
    cells = [(r, c) for r, p in enumerate(lam) for c in range(p)]
    total = PCTX.constant(0)
    gens = PCTX.gens()
    for values in itertools.product(range(n), repeat=len(cells)):
        t = dict(zip(cells, values))
        ok = all(
            (c == 0 or t[(r, c - 1)] <= t[(r, c)]) and (r == 0 or t[(r - 1, c)] < t[(r, c)])
            for r, c in cells
        )
        if ok:
            m = PCTX.constant(1)
            for v in values:
                m = m * gens[v]
            total = total + m
    return total


def int_series(draw_terms, cap):
    f = zero(cap)
    for mu, c in draw_terms.items():
        f = f + h_monomial(mu, cap, None, c)
    return f


small_series = st.dictionaries(
    st.sampled_from([mu for s in range(5) for mu in partitions(s)]), st.integers(-3, 3), max_size=5
).map(lambda d: int_series(d, 5))


def test_partitions_order():
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions(4, 2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_basic_products():
    assert h(1, 4) * h(1, 4) == h_monomial((1, 1), 4)
    x = (one(3) + h(1, 3)).invert()
    assert x == one(3) - h(1, 3) + h_monomial((1, 1), 3) - h_monomial((1, 1, 1), 3)


@given(small_series, small_series, small_series)
def test_ring_axioms(f, g, k):
    assert f * (g + k) == f * g + f * k
    assert (f * g) * k == f * (g * k)
    assert f * g == g * f


@given(small_series)
def test_inverse(f):
    f = f - one(5).scale(f.constant_term()) + one(5)
    assert f * f.invert() == one(5)


def test_schur_examples():
    for r in range(1, 5):
        assert schur((r,), 5) == h(r, 5)
    assert schur((1, 1), 5) == h_monomial((1, 1), 5) - h(2, 5)


@pytest.mark.parametrize("lam", [mu for s in range(1, 5) for mu in partitions(s, None)])
def test_schur_against_tableaux(lam):
    if len(lam) > N:
        return
    assert to_polynomial(schur(lam, 5), PCTX) == ssyt_polynomial(lam)


def test_schur_round_trip():
    for s in range(7):
        for lam in partitions(s):
            assert to_schur(schur(lam, 6)) == {lam: 1}


def test_power_sums_against_evaluation():
    for j in range(1, 5):
        expected = sum((g ** j for g in PCTX.gens()), PCTX.constant(0))
        assert to_polynomial(power_sum(j, 5), PCTX) == expected
    assert power_sum(1, 3) == h(1, 3)


def test_elementary_against_evaluation():
    gens = PCTX.gens()
    for r in range(1, 4):
        expected = sum((functools_prod(c) for c in itertools.combinations(gens, r)), PCTX.constant(0))
        assert to_polynomial(e(r, 4), PCTX) == expected


def functools_prod(xs):
    out = PCTX.constant(1)
    for x in xs:
        out = out * x
    return out


def test_omega():
    b = R.b(1)
    assert omega(R.zero, 4, R) == one(4, R)
    assert omega(b, 4).degree_slice(2) == h(2, 4, R).scale(b * b)
    assert omega(b, 5) * omega_inverse(b, 5) == one(5, R)


def test_hopf_structure_on_omega():
    for i in (1, 2):
        om = omega(R.b(i), 5)
        assert coproduct(om) == Tensor.outer(om, om)
        assert antipode(om) == om.invert()
        assert counit(om) == 1


def test_coproduct_of_h1():
    assert coproduct(h(1, 3)) == Tensor.outer(h(1, 3), one(3)) + Tensor.outer(one(3), h(1, 3))


def test_antipode_on_h():
    for r in range(1, 5):
        assert antipode(h(r, 5)) == e(r, 5).scale((-1) ** r)


@given(small_series)
def test_hopf_axioms(f):
    assert hopf_axiom_failures(f) == []


def test_hhat():
    b1, b2 = R.b(1), R.b(2)
    assert hhat(0, [b1], 5, R) == omega(b1, 5)
    assert hhat(1, [], 5, R) == h(1, 5, R)
    # telescoping: (b_1 - b_2) h_l(b_1, b_2) = b_1^{l+1} - b_2^{l+1}
    assert hhat(1, [b1, b2], 5, R).scale(b1 - b2) == omega(b1, 5) - omega(b2, 5)


def test_omega_tilde_closed_form_matches_generating_identity():
    for l in range(1, 7):
        assert omega_tilde_h(l, 7) == omega_tilde_h_closed(l, 7)


def test_omega_tilde_involution():
    for l in range(1, 7):
        assert omega_tilde(omega_tilde_h(l, 7)) == h(l, 7)


def test_omega_tilde_on_power_sums():
    for j in range(1, 6):
        assert omega_tilde(power_sum(j, 6)) == omega_tilde_power_sum(j, 6)
    # ω̃(h_1) = e_1 forces ω̃(p_1) = p_1
    assert omega_tilde(power_sum(1, 3)) == power_sum(1, 3)


def test_displayed_power_sum_series():
    assert omega_tilde_on_p(1, 3) == power_sum(1, 3) + power_sum(2, 3) + power_sum(3, 3)
    assert omega_tilde_on_p(2, 2) == -power_sum(2, 2)
    # it is not ω̃(p_1): it is the adjoint of ω̃ with respect to the Hall pairing
    assert omega_tilde_on_p(1, 3) != omega_tilde(power_sum(1, 3))


def test_json_schema():
    data = (h(1, 2, R).scale(R.b(1)) + one(2, R)).to_json("schur")
    assert data["basis"] == "schur" and data["cap"] == 2
    assert [t["partition"] for t in data["terms"]] == [[], [1]]
