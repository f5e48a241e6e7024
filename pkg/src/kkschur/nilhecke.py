"""The level-zero affine K-nil-Hecke ring in its T-basis.

An element is a finite sum Σ f_w T_w with f_w in R(T), stored as a dict
from :class:`ExtWeylElement` to :class:`LaurentPoly`.  Coefficients sit to
the left of the basis elements.  Products are computed by pushing left
factors through with the twisted derivation rule

    T_i f = T_i(f) + s_i(f) T_i,      π f = π(f) π,

so no denominators ever appear.

>>> from kkschur.root_data import type_a_gl
>>> d = type_a_gl(2)
>>> T1 = t_basis(d, simple_reflection(d, 1))
>>> (T1 * T1) == -T1
True
"""

from __future__ import annotations

import functools
from typing import Mapping

from .coeff_ring import CoeffRing, LaurentPoly, c_of, exact_divide, weyl_act
from .ext_weyl import (
    ExtWeylElement,
    finite_element,
    identity,
    reduced_word,
    root_as_conjugate,
    simple_reflection,
)
from .root_data import RootDatum

__all__ = [
    "NilHeckeElement",
    "coefficient_ring",
    "t_basis",
    "scalar",
    "group_to_T",
    "D_of",
    "T_alpha",
    "act_on_ring",
    "left_mul_T",
    "left_mul_D",
    "left_mul_group",
    "right_mul_T",
    "multiply",
    "T_action",
]


@functools.lru_cache(maxsize=None)
def coefficient_ring(d: RootDatum) -> CoeffRing:
    return CoeffRing.laurent(d.n)


@functools.lru_cache(maxsize=None)
def _c_simple(d: RootDatum, i: int) -> LaurentPoly:
    return c_of(d.simple_root(i), coefficient_ring(d))


class NilHeckeElement:
    """Σ f_w T_w over a root datum; zero coefficients are never stored."""

    __slots__ = ("datum", "terms")

    def __init__(self, datum: RootDatum, terms: Mapping[ExtWeylElement, LaurentPoly] | None = None):
        self.datum = datum
        self.terms = {w: f for w, f in (terms or {}).items() if not f.is_zero()}

    @property
    def ring(self) -> CoeffRing:
        return coefficient_ring(self.datum)

    # -- linear structure ---------------------------------------------------
    def __add__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        out = dict(self.terms)
        for w, f in other.terms.items():
            g = out.get(w)
            out[w] = f if g is None else g + f
        return NilHeckeElement(self.datum, out)

    def __neg__(self) -> "NilHeckeElement":
        return NilHeckeElement(self.datum, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        return self + (-other)

    def scale(self, f) -> "NilHeckeElement":
        """Left multiplication by a coefficient f."""
        if isinstance(f, int):
            f = self.ring.const(f)
        return NilHeckeElement(self.datum, {w: f * g for w, g in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NilHeckeElement):
            return multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return multiply(self, scalar(self.datum, other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return self.datum == other.datum and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: ExtWeylElement) -> LaurentPoly:
        return self.terms.get(w, self.ring.zero)

    def support(self) -> list[ExtWeylElement]:
        return sorted(self.terms, key=ExtWeylElement.sort_key)

    def __repr__(self) -> str:
        parts = [f"({self.terms[w]})*T[{reduced_word(w)}]" for w in self.support()]
        return "NilHeckeElement(" + (" + ".join(parts) if parts else "0") + ")"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"element": w.to_json(), "coef": self.terms[w].to_json()} for w in self.support()
            ]
        }

    @classmethod
    def from_json(cls, d: RootDatum, data: Mapping) -> "NilHeckeElement":
        ring = coefficient_ring(d)
        terms = {}
        for item in data["terms"]:
            e = item["element"]
            w = ExtWeylElement(d, e["t"], e["perm"])
            terms[w] = LaurentPoly.from_json(ring, item["coef"])
        return cls(d, terms)


def t_basis(d: RootDatum, w: ExtWeylElement, coef=None) -> NilHeckeElement:
    ring = coefficient_ring(d)
    return NilHeckeElement(d, {w: ring.one if coef is None else coef})


def scalar(d: RootDatum, f) -> NilHeckeElement:
    ring = coefficient_ring(d)
    if isinstance(f, int):
        f = ring.const(f)
    return NilHeckeElement(d, {identity(d): f})


# -- the action on R(T) ------------------------------------------------------


@functools.lru_cache(maxsize=1 << 18)
def T_action(d: RootDatum, i: int, f: LaurentPoly) -> LaurentPoly:
    """Divided difference T_i(f) = c(α_i)^{-1}(s_i f - f); s_0 acts as s_θ."""
    moved = weyl_act(d.finite_reflection(i), f)
    return exact_divide(moved - f, _c_simple(d, i))


def act_on_ring(A: NilHeckeElement, f: LaurentPoly) -> LaurentPoly:
    """The level-zero action: translations act trivially."""
    d = A.datum
    total = A.ring.zero
    for w, g in A.terms.items():
        aw = reduced_word(w)
        h = f
        for i in reversed(aw.word):
            h = T_action(d, i, h)
            if h.is_zero():
                break
        if h.is_zero():
            continue
        total = total + g * weyl_act(aw.pi.perm, h)
    return total


# -- left and right multiplication by generators --------------------------


def left_mul_T(i: int, X: NilHeckeElement) -> NilHeckeElement:
    """T_i · X."""
    d = X.datum
    s = simple_reflection(d, i)
    sperm = d.finite_reflection(i)
    out: dict[ExtWeylElement, LaurentPoly] = {}

    def add(w, f):
        if f.is_zero():
            return
        g = out.get(w)
        out[w] = f if g is None else g + f

    for w, g in X.terms.items():
        add(w, T_action(d, i, g))
        sg = weyl_act(sperm, g)
        sw = s * w
        if sw.length() > w.length():
            add(sw, sg)
        else:
            add(w, -sg)
    return NilHeckeElement(d, out)


def left_mul_D(i: int, X: NilHeckeElement) -> NilHeckeElement:
    """D_i · X with D_i = 1 + T_i."""
    return X + left_mul_T(i, X)


def left_mul_group(w: ExtWeylElement, X: NilHeckeElement) -> NilHeckeElement:
    """w · X for a group element w, via s_i = 1 + c(α_i)T_i and π f T_v = π(f) T_{πv}."""
    d = X.datum
    aw = reduced_word(w)
    for i in reversed(aw.word):
        X = X + left_mul_T(i, X).scale(_c_simple(d, i))
    return left_mul_fundamental(aw.pi, X)


def left_mul_fundamental(pi: ExtWeylElement, X: NilHeckeElement) -> NilHeckeElement:
    if pi.is_identity():
        return X
    return NilHeckeElement(X.datum, {pi * w: weyl_act(pi.perm, g) for w, g in X.terms.items()})


def right_mul_T(X: NilHeckeElement, i: int) -> NilHeckeElement:
    """X · T_i."""
    d = X.datum
    s = simple_reflection(d, i)
    out: dict[ExtWeylElement, LaurentPoly] = {}
    for w, g in X.terms.items():
        ws = w * s
        if ws.length() > w.length():
            key, val = ws, g
        else:
            key, val = w, -g
        h = out.get(key)
        out[key] = val if h is None else h + val
    return NilHeckeElement(d, out)


def multiply(A: NilHeckeElement, B: NilHeckeElement) -> NilHeckeElement:
    """Exact product A·B: each T_w of A is applied letter by letter to B."""
    if A.datum != B.datum:
        raise ValueError("root datum mismatch")
    d = A.datum
    total = NilHeckeElement(d)
    for w, f in A.terms.items():
        aw = reduced_word(w)
        X = B
        for i in reversed(aw.word):
            X = left_mul_T(i, X)
            if X.is_zero():
                break
        if X.is_zero():
            continue
        X = left_mul_fundamental(aw.pi, X)
        total = total + X.scale(f)
    return total


# -- distinguished elements ----------------------------------------------------


@functools.lru_cache(maxsize=None)
def group_to_T(w: ExtWeylElement) -> NilHeckeElement:
    """Expansion of the group element w in the T-basis."""
    d = w.datum
    return left_mul_group(w, t_basis(d, identity(d)))


@functools.lru_cache(maxsize=None)
def D_of(w: ExtWeylElement) -> NilHeckeElement:
    """D_w = π D_{i_1}⋯D_{i_k} along a reduced word of w."""
    d = w.datum
    aw = reduced_word(w)
    X = t_basis(d, identity(d))
    for i in reversed(aw.word):
        X = left_mul_D(i, X)
    return left_mul_fundamental(aw.pi, X)


@functools.lru_cache(maxsize=None)
def T_alpha(d: RootDatum, alpha: tuple[int, ...]) -> NilHeckeElement:
    """T_α = u T_j u^{-1} for a positive root α = u(α_j)."""
    perm, j = root_as_conjugate(d, alpha)
    u = finite_element(d, perm)
    Tj = t_basis(d, simple_reflection(d, j))
    return multiply(left_mul_group(u, Tj), group_to_T(u.inverse()))

