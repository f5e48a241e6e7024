"""The Peterson subalgebra L (centralizer of R(T) in the K-nil-Hecke ring).

The star action a * b = κ(ab) is computed from generator formulas that
never leave the T-basis:

    T_i * b = T_i b + b T_i + T_i (c(α_i) b) T_i             (i ∈ I)
    T_0 * b = -t_{θ∨} e^θ (T_θ * b) + (T_0 * 1) b
    π * b   = t_π π(b),     π(b) = π b π^{-1}

where T_0 * 1 = c(α_0)^{-1}(t_{θ∨} - 1) is obtained by exact division of
the T-expansion of t_{θ∨} - 1.  The Schubert classes are k_w = T_w * 1 and
ℓ_w = D_w * 1, built by left extension along reduced words.

>>> from kkschur.root_data import type_a_sl
>>> from kkschur.ext_weyl import simple_reflection
>>> d = type_a_sl(2)
>>> k = k_class(simple_reflection(d, 0))
>>> is_in_peterson(k.value)
True
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .coeff_ring import LaurentPoly, c_of, exact_divide, involution_iota_coeff, weyl_act
from .ext_weyl import (
    ExtWeylElement,
    finite_element,
    fundamental_element,
    fundamental_part,
    identity,
    is_grassmannian,
    kappa,
    reduced_word,
    root_as_conjugate,
    simple_reflection,
    star_involution,
    translation,
)
from .nilhecke import (
    NilHeckeElement,
    coefficient_ring,
    group_to_T,
    left_mul_group,
    left_mul_T,
    multiply,
    right_mul_T,
    t_basis,
)
from .root_data import RootDatum

__all__ = [
    "ClassKind",
    "SchubertClass",
    "star_T",
    "star_D",
    "star_simple_reflection",
    "star_finite",
    "star_fundamental",
    "star_apply",
    "star_of",
    "t0_star_one",
    "translation_quotient_theta",
    "conjugate_by_fundamental",
    "k_class",
    "l_class",
    "is_in_peterson",
    "expand_product",
    "expand_in_basis",
    "verify_factorizations",
    "dynkin_automorphism_apply",
]


class ClassKind(enum.Enum):
    IDEAL = "ideal"  # k_w
    STRUCTURE = "structure"  # ℓ_w


@dataclass(frozen=True)
class SchubertClass:
    kind: ClassKind
    w: ExtWeylElement
    value: NilHeckeElement


def _one(d: RootDatum) -> NilHeckeElement:
    return t_basis(d, identity(d))


# -- star action ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def t0_star_one(d: RootDatum) -> NilHeckeElement:
    """T_0 * 1 = c(α_0)^{-1}(t_{θ∨} - 1), divided coefficientwise."""
    x = group_to_T(translation(d, d.theta_coroot)) - _one(d)
    c0 = c_of(d.simple_root(0), coefficient_ring(d))
    return NilHeckeElement(d, {w: exact_divide(f, c0) for w, f in x.terms.items()})


@functools.lru_cache(maxsize=None)
def translation_quotient_theta(d: RootDatum) -> NilHeckeElement:
    """c(θ)^{-1}(t_{θ∨} - 1), divided coefficientwise."""
    x = group_to_T(translation(d, d.theta_coroot)) - _one(d)
    ct = c_of(d.theta, coefficient_ring(d))
    return NilHeckeElement(d, {w: exact_divide(f, ct) for w, f in x.terms.items()})


def _star_T_finite(i: int, b: NilHeckeElement) -> NilHeckeElement:
    d = b.datum
    c = c_of(d.simple_root(i), coefficient_ring(d))
    return left_mul_T(i, b) + right_mul_T(b, i) + right_mul_T(left_mul_T(i, b.scale(c)), i)


def star_simple_reflection(k: int, b: NilHeckeElement) -> NilHeckeElement:
    """s_k * b = s_k b s_k = b + c(α_k)(T_k * b) for k ∈ I."""
    d = b.datum
    c = c_of(d.simple_root(k), coefficient_ring(d))
    return b + _star_T_finite(k, b).scale(c)


def star_finite(perm, b: NilHeckeElement) -> NilHeckeElement:
    """u * b = u b u^{-1} for a finite Weyl group element u."""
    d = b.datum
    word = reduced_word(finite_element(d, perm)).word
    for k in reversed(word):
        b = star_simple_reflection(k, b)
    return b


def _star_T_theta(b: NilHeckeElement) -> NilHeckeElement:
    d = b.datum
    perm, j = root_as_conjugate(d, d.theta)
    u = finite_element(d, perm)
    x = star_finite(u.inverse().perm, b)
    x = _star_T_finite(j, x)
    return star_finite(perm, x)


def star_T(i: int, b: NilHeckeElement) -> NilHeckeElement:
    """T_i * b for b in L."""
    d = b.datum
    if i != 0:
        return _star_T_finite(i, b)
    ring = coefficient_ring(d)
    y = _star_T_theta(b).scale(ring.e(d.theta))
    y = left_mul_group(translation(d, d.theta_coroot), y)
    return multiply(t0_star_one(d), b) - y


def star_D(i: int, b: NilHeckeElement) -> NilHeckeElement:
    """D_i * b = b + T_i * b."""
    return b + star_T(i, b)


def conjugate_by_fundamental(pi: ExtWeylElement, a: NilHeckeElement) -> NilHeckeElement:
    """π(a) = π a π^{-1}."""
    if pi.is_identity():
        return a
    inv = pi.inverse()
    return NilHeckeElement(
        a.datum, {pi * w * inv: weyl_act(pi.perm, f) for w, f in a.terms.items()}
    )


def star_fundamental(pi: ExtWeylElement, b: NilHeckeElement) -> NilHeckeElement:
    """π * b = t_π π(b)."""
    if pi.is_identity():
        return b
    d = b.datum
    return left_mul_group(translation(d, pi.lam), conjugate_by_fundamental(pi, b))


def star_apply(op, b: NilHeckeElement) -> NilHeckeElement:
    """Star action of a generator: an index i (T_i) or a length-zero element π."""
    if isinstance(op, ExtWeylElement):
        if op.length():
            raise ValueError("only length-zero elements act as generators")
        return star_fundamental(op, b)
    return star_T(op, b)


def star_of(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    """a * b for an arbitrary element a = Σ f_w T_w."""
    d = b.datum
    total = NilHeckeElement(d)
    for w, f in a.terms.items():
        aw = reduced_word(w)
        x = b
        for i in reversed(aw.word):
            x = star_T(i, x)
            if x.is_zero():
                break
        if x.is_zero():
            continue
        total = total + star_fundamental(aw.pi, x).scale(f)
    return total


# -- Schubert classes ---------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _affine_class(v: ExtWeylElement, kind: ClassKind) -> NilHeckeElement:
    """Class of a Grassmannian element of the affine Weyl group (trivial π)."""
    d = v.datum
    if not v.length():
        return _one(d)
    i = reduced_word(v).word[0]
    rest = _affine_class(simple_reflection(d, i) * v, kind)
    if kind is ClassKind.IDEAL:
        return star_T(i, rest)
    return star_D(i, rest)


def _class(w: ExtWeylElement, kind: ClassKind) -> SchubertClass:
    if not is_grassmannian(w):
        raise ValueError("element is not Grassmannian")
    pi = fundamental_part(w)
    value = star_fundamental(pi, _affine_class(pi.inverse() * w, kind))
    return SchubertClass(kind, w, value)


@functools.lru_cache(maxsize=None)
def k_class(w: ExtWeylElement) -> SchubertClass:
    """k_w = T_w * 1."""
    return _class(w, ClassKind.IDEAL)


@functools.lru_cache(maxsize=None)
def l_class(w: ExtWeylElement) -> SchubertClass:
    """ℓ_w = D_w * 1."""
    return _class(w, ClassKind.STRUCTURE)


def schubert_class(w: ExtWeylElement, kind: ClassKind) -> SchubertClass:
    return k_class(w) if kind is ClassKind.IDEAL else l_class(w)


def is_in_peterson(b: NilHeckeElement) -> bool:
    """b·e^{a_j} = e^{a_j}·b for every j."""
    d = b.datum
    ring = coefficient_ring(d)
    for j in range(d.n):
        unit = [0] * d.n
        unit[j] = 1
        e = ring.e(unit)
        if multiply(b, t_basis(d, identity(d), e)) != b.scale(e):
            return False
    return True


def expand_in_basis(x: NilHeckeElement, kind: ClassKind) -> dict[ExtWeylElement, LaurentPoly]:
    """Coefficients of x ∈ L in the k- or ℓ-basis, with a mandatory residual check."""
    d = x.datum
    k_coeffs = {w: f for w, f in x.terms.items() if is_grassmannian(w)}
    residual = x
    for w, f in k_coeffs.items():
        residual = residual - k_class(w).value.scale(f)
    if not residual.is_zero():
        bad = [w for w in residual.terms if is_grassmannian(w)]
        raise ArithmeticError(
            f"residual after k-expansion is nonzero ({len(residual.terms)} terms, "
            f"{len(bad)} Grassmannian)"
        )
    if kind is ClassKind.IDEAL:
        return k_coeffs
    # ℓ_w = Σ_{v ≤ w Grassmannian} k_v: peel from the top of the Bruhat order.
    remaining = dict(k_coeffs)
    out: dict[ExtWeylElement, LaurentPoly] = {}
    ring = coefficient_ring(d)
    while remaining:
        top = max(remaining, key=ExtWeylElement.sort_key)
        f = remaining.pop(top)
        if f.is_zero():
            continue
        out[top] = f
        for v in _grassmannian_below(top):
            if v == top:
                continue
            g = remaining.get(v, ring.zero) - f
            if g.is_zero():
                remaining.pop(v, None)
            else:
                remaining[v] = g
    return out


@functools.lru_cache(maxsize=None)
def _grassmannian_below(w: ExtWeylElement) -> tuple[ExtWeylElement, ...]:
    from .ext_weyl import bruhat_ideal

    return tuple(v for v in bruhat_ideal(w) if is_grassmannian(v))


def expand_product(u: ExtWeylElement, v: ExtWeylElement, kind: ClassKind = ClassKind.IDEAL):
    """Structure constants: class_u · class_v = Σ_w coef_w class_w."""
    prod = multiply(schubert_class(u, kind).value, schubert_class(v, kind).value)
    return expand_in_basis(prod, kind)


# -- factorization checks ------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    instance: str
    passed: bool


def _antidominant_fundamentals(d: RootDatum):
    return [tuple(-c for c in d.fundamental_coweight(i)) for i in d.index_set]


def verify_factorizations(d: RootDatum, max_length: int = 2) -> list[CheckResult]:
    """Evaluate both sides of the factorization identities on a bounded scope."""
    from .ext_weyl import grassmannian_elements

    out: list[CheckResult] = []
    grass = [w for L in range(max_length + 1) for w in grassmannian_elements(d, L)]

    if d.kind != "sl":
        # ℓ_{w t_λ} = ℓ_w ℓ_{t_λ} for antidominant λ
        for lam in _antidominant_fundamentals(d):
            t = translation(d, lam)
            lt = l_class(t).value
            for w in grass:
                wt = w * t
                ok = is_grassmannian(wt) and wt.length() == w.length() + t.length()
                ok = ok and l_class(wt).value == multiply(l_class(w).value, lt)
                out.append(CheckResult("k_rectangle", f"w={reduced_word(w)} λ={lam}", ok))
        # s_i * ℓ_{t_λ} = ℓ_{t_λ}
        for lam in _antidominant_fundamentals(d):
            lt = l_class(translation(d, lam)).value
            for i in d.index_set:
                ok = star_simple_reflection(i, lt) == lt
                out.append(CheckResult("invariant", f"λ={lam} i={i}", ok))
        # ℓ_{t_{-ϖ_i}} = t_{-ϖ_i} ℓ_{κ_i} (special i), ℓ_{κ_i} otherwise
        for i in d.index_set:
            lam = tuple(-c for c in d.fundamental_coweight(i))
            lhs = l_class(translation(d, lam)).value
            lk = l_class(kappa(d, i)).value
            rhs = left_mul_group(translation(d, lam), lk) if i in d.special_nodes else lk
            out.append(CheckResult("fund_translation_kappa", f"i={i}", lhs == rhs))
        # π_j(ℓ_{κ_i}) = t_{u_j(ϖ_i) - ϖ_i} ℓ_{κ_i}
        specials = [i for i in d.special_nodes if i]
        for i in specials:
            lk = l_class(kappa(d, i)).value
            w_i = d.fundamental_coweight(i)
            for j in specials:
                pj = fundamental_element(d, j)
                moved = pj.act_on_weight(w_i)
                shift = tuple(a - b for a, b in zip(moved, w_i))
                rhs = left_mul_group(translation(d, shift), lk)
                ok = conjugate_by_fundamental(pj, lk) == rhs
                out.append(CheckResult("rotate_kappa", f"i={i} j={j}", ok))
        # ℓ_{w κ_i} = ℓ_{κ_i} π_i(ℓ_{π_i^{-1}(w)})
        for i in specials:
            k = kappa(d, i)
            pi = fundamental_element(d, i)
            lk = l_class(k).value
            for L in range(max_length + 1):
                for w in _elements_of_length(d, L):
                    wk = w * k
                    if not is_grassmannian(wk) or wk.length() != w.length() + k.length():
                        continue
                    inner = pi.inverse() * w * pi
                    ok = is_grassmannian(inner)
                    if ok:
                        rhs = multiply(lk, conjugate_by_fundamental(pi, l_class(inner).value))
                        ok = l_class(wk).value == rhs
                    out.append(CheckResult("factor_kappa", f"i={i} w={reduced_word(w)}", ok))
        # ℓ_{π w} = ℓ_π π(ℓ_w)
        for j in specials:
            pj = fundamental_element(d, j)
            for w in grass:
                rhs = multiply(l_class(pj).value, conjugate_by_fundamental(pj, l_class(w).value))
                ok = l_class(pj * w).value == rhs
                out.append(CheckResult("fundamental_twist", f"j={j} w={reduced_word(w)}", ok))
    if d.kind == "gl":
        # τ^n = t_ε is central: ℓ_{τ^n w} = ℓ_{τ^n} ℓ_w
        tn = fundamental_element(d, 1) ** d.n
        for w in grass:
            ok = l_class(tn * w).value == multiply(l_class(tn).value, l_class(w).value)
            out.append(CheckResult("central_shift", f"w={reduced_word(w)}", ok))
    return out


@functools.lru_cache(maxsize=None)
def _elements_of_length(d: RootDatum, L: int) -> tuple[ExtWeylElement, ...]:
    if L == 0:
        return (identity(d),)
    out = set()
    for w in _elements_of_length(d, L - 1):
        for i in d.affine_index_set:
            v = simple_reflection(d, i) * w
            if v.length() == L:
                out.add(v)
    return tuple(sorted(out, key=ExtWeylElement.sort_key))


# -- Dynkin automorphisms -----------------------------------------------------


def dynkin_automorphism_apply(sigma: str, cls: SchubertClass) -> SchubertClass:
    """Apply σ ∈ {"id", "iota"} to a class: indices, coefficients and coweights."""
    if sigma == "id":
        return cls
    if sigma != "iota":
        raise ValueError("only the identity and ι (i ↦ -i) are shipped")
    value = cls.value
    terms = {star_involution(w): involution_iota_coeff(f) for w, f in value.terms.items()}
    return SchubertClass(cls.kind, star_involution(cls.w), NilHeckeElement(value.datum, terms))

