"""The coordinate ring of the GL_n centralizer family and its symmetric-series image.

Z = (z_ij) is upper triangular and commutes with the bidiagonal matrix A(t);
the commutation relations read (b_i - b_j) z_ij = z_{i,j-1} - z_{i+1,j}.
Reading the relation for (i, j) as a definition of z_{i+1,j} eliminates every
entry below the first row, so the ring is R(T)[z_11, ..., z_1n] localized at
the diagonal entries.  A :class:`ZExpression` stores a numerator polynomial in
the first-row coordinates and a diagonal monomial denominator.

>>> x = z(2, 2, 2)
>>> x == z(2, 1, 1) - z(2, 1, 2).scale(CoeffRing.laurent(2).b(1) - CoeffRing.laurent(2).b(2))
True
"""

from __future__ import annotations

import functools
from typing import Mapping

from .coeff_ring import CoeffRing, LaurentPoly
from .demazure import DemazureContext, _omega, _omega_inv, g_class, reflect_apply, rotate
from .ext_weyl import rho
from .symseries import SymSeries, hhat, one, zero

__all__ = [
    "ZExpression",
    "z",
    "z_inverse",
    "normal_form",
    "relation",
    "weyl_act_z",
    "beta_gl",
    "beta_raw",
    "beta_pgl",
    "beta_pgl_displayed",
    "sl_quotient_check",
    "equivariance_check",
    "relation_check",
    "hhat_lemma_check",
    "hhat_lemma_rhs",
    "pgl_check",
]

Monomial = tuple[int, ...]


@functools.lru_cache(maxsize=None)
def _ring(n: int) -> CoeffRing:
    return CoeffRing.laurent(n)


def _add_into(out: dict, mono, c) -> None:
    v = out.get(mono)
    v = c if v is None else v + c
    if v.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = v


class ZExpression:
    """numerator / Π z_kk^{den_k}, numerator a polynomial in z_11..z_1n over R(T)."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: Mapping[Monomial, LaurentPoly] | None = None, den: Monomial | None = None):
        self.n = n
        self.num = {m: c for m, c in (num or {}).items() if not c.is_zero()}
        self.den = tuple(den) if den is not None else (0,) * n

    @property
    def ring(self) -> CoeffRing:
        return _ring(self.n)

    @staticmethod
    def constant(n: int, c) -> "ZExpression":
        R = _ring(n)
        c = R.const(c) if isinstance(c, int) else c
        return ZExpression(n, {(0,) * n: c})

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, other) -> "ZExpression":
        if isinstance(other, ZExpression):
            if other.n != self.n:
                raise ValueError("rank mismatch")
            return other
        return ZExpression.constant(self.n, other)

    def _numerator_times_diagonal(self, extra: Monomial) -> dict:
        """Numerator multiplied by Π z_kk^{extra_k}, in first-row coordinates."""
        out = dict(self.num)
        for k, e in enumerate(extra, start=1):
            for _ in range(e):
                out = _poly_mul(out, _linear(self.n, k, k))
        return out

    def __add__(self, other) -> "ZExpression":
        other = self._lift(other)
        den = tuple(max(a, b) for a, b in zip(self.den, other.den))
        left = self._numerator_times_diagonal(tuple(d - a for d, a in zip(den, self.den)))
        right = other._numerator_times_diagonal(tuple(d - b for d, b in zip(den, other.den)))
        for m, c in right.items():
            _add_into(left, m, c)
        return ZExpression(self.n, left, den)

    __radd__ = __add__

    def __neg__(self) -> "ZExpression":
        return ZExpression(self.n, {m: -c for m, c in self.num.items()}, self.den)

    def __sub__(self, other) -> "ZExpression":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "ZExpression":
        return self._lift(other) - self

    def __mul__(self, other) -> "ZExpression":
        if isinstance(other, LaurentPoly):
            return self.scale(other)
        other = self._lift(other)
        den = tuple(a + b for a, b in zip(self.den, other.den))
        return ZExpression(self.n, _poly_mul(self.num, other.num), den)

    __rmul__ = __mul__

    def scale(self, c: LaurentPoly) -> "ZExpression":
        return ZExpression(self.n, {m: c * v for m, v in self.num.items()}, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._lift(other)
        if not isinstance(other, ZExpression):
            return NotImplemented
        return (self - other).is_zero()

    def map_coefficients(self, fn) -> "ZExpression":
        return ZExpression(self.n, {m: fn(c) for m, c in self.num.items()}, self.den)

    def degree(self) -> int | None:
        """Homogeneous degree in the z's (numerator degree minus denominator degree)."""
        degs = {sum(m) for m in self.num}
        if len(degs) > 1:
            return None
        return (degs.pop() if degs else 0) - sum(self.den)

    def __repr__(self) -> str:
        parts = []
        for m in sorted(self.num):
            mono = "*".join(f"z1{k + 1}^{e}" if e > 1 else f"z1{k + 1}" for k, e in enumerate(m) if e)
            parts.append(f"({self.num[m]})" + (f"*{mono}" if mono else ""))
        den = "*".join(f"z{k + 1}{k + 1}^{e}" for k, e in enumerate(self.den) if e)
        body = " + ".join(parts) if parts else "0"
        return f"ZExpression({body}" + (f" / {den})" if den else ")")


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            _add_into(out, tuple(x + y for x, y in zip(m1, m2)), c1 * c2)
    return out


@functools.lru_cache(maxsize=None)
def _linear_table(n: int) -> dict:
    """z_ij as linear forms {k: coefficient of z_1k}, by increasing i then j."""
    R = _ring(n)
    table: dict = {}
    for j in range(1, n + 1):
        table[(1, j)] = {j: R.one}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            # z_{i+1,j} = z_{i,j-1} - (b_i - b_j) z_ij
            diff = R.b(i) - R.b(j)
            form = dict(table[(i, j - 1)])
            for k, c in table[(i, j)].items():
                v = form.get(k, R.zero) - diff * c
                if v.is_zero():
                    form.pop(k, None)
                else:
                    form[k] = v
            table[(i + 1, j)] = form
    return table


@functools.lru_cache(maxsize=None)
def _linear(n: int, i: int, j: int) -> dict:
    """Numerator dict of the normal form of z_ij."""
    form = _linear_table(n)[(i, j)]
    out = {}
    for k, c in form.items():
        mono = [0] * n
        mono[k - 1] = 1
        out[tuple(mono)] = c
    return out


def z(n: int, i: int, j: int) -> ZExpression:
    """Normal form of the coordinate z_ij."""
    if not 1 <= i <= j <= n:
        raise ValueError(f"malformed index ({i}, {j})")
    return ZExpression(n, _linear(n, i, j))


def z_inverse(n: int, i: int) -> ZExpression:
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    den = [0] * n
    den[i - 1] = 1
    return ZExpression(n, {(0,) * n: _ring(n).one}, tuple(den))


def normal_form(n: int, raw: Mapping[tuple, LaurentPoly | int]) -> ZExpression:
    """Normal form of Σ c·z_{i_1 j_1}⋯z_{i_r j_r}, keyed by tuples of index pairs.

    >>> normal_form(2, {((2, 2),): 1}) == z(2, 2, 2)
    True
    """
    total = ZExpression(n)
    for factors, c in raw.items():
        term = ZExpression.constant(n, 1)
        for i, j in factors:
            term = term * z(n, i, j)
        total = total + (term.scale(c) if isinstance(c, LaurentPoly) else term.scale(_ring(n).const(c)))
    return total


def relation(n: int, i: int, j: int) -> ZExpression:
    """(b_i - b_j) z_ij - z_{i,j-1} + z_{i+1,j}, evaluated in normal form."""
    R = _ring(n)
    return z(n, i, j).scale(R.b(i) - R.b(j)) - z(n, i, j - 1) + z(n, i + 1, j)


# -- the extended affine Weyl group action ------------------------------------


def _swap_coeffs(e: ZExpression, p: int, q: int) -> ZExpression:
    return e.map_coefficients(lambda c: c.relabel({p: q, q: p}))


@functools.lru_cache(maxsize=None)
def _s_first_row(n: int, i: int) -> tuple:
    """Images s_i(z_1k) as ZExpressions, k = 1..n."""
    R = _ring(n)
    out = []
    for k in range(1, n + 1):
        if i == 1 and k == 1:
            out.append(z(n, 2, 2))
        elif k == i:  # row 1 < i
            out.append(z(n, 1, i) + z(n, 1, i + 1).scale(R.b(i + 1) - R.b(i)))
        else:
            out.append(z(n, 1, k))
    return tuple(out)


def _substitute(e: ZExpression, images: tuple) -> ZExpression:
    n = e.n
    total = ZExpression(n)
    powers: dict = {}
    for mono, c in e.num.items():
        term = ZExpression.constant(n, c)
        for k, p in enumerate(mono):
            if p:
                key = (k, p)
                if key not in powers:
                    acc = ZExpression.constant(n, 1)
                    for _ in range(p):
                        acc = acc * images[k]
                    powers[key] = acc
                term = term * powers[key]
        total = total + term
    return total


def _apply_s(i: int, e: ZExpression) -> ZExpression:
    n = e.n
    if not 1 <= i <= n - 1:
        raise ValueError("index out of range")
    moved = _swap_coeffs(e, i, i + 1)
    num = _substitute(ZExpression(n, moved.num), _s_first_row(n, i))
    den = list(e.den)
    den[i - 1], den[i] = den[i], den[i - 1]
    return ZExpression(n, num.num, tuple(a + b for a, b in zip(den, num.den)))


def weyl_act_z(g: str | tuple, e: ZExpression) -> ZExpression:
    """Act by a generator: ("s", i) for 0 ≤ i < n, or ("t", ±i) for t_{±ε_i}.

    Strings "s1", "s0", "t2", "t-2" are accepted too.
    """
    n = e.n
    if isinstance(g, str):
        g = (g[0], int(g[1:]))
    kind, i = g
    if kind == "t":
        k = abs(i)
        if not 1 <= k <= n:
            raise ValueError("index out of range")
        return e * (z(n, k, k) if i > 0 else z_inverse(n, k))
    if kind != "s":
        raise ValueError(f"unknown generator {g!r}")
    if i == 0:
        # s_0 = t_{θ∨} s_θ with s_θ = s_1 ⋯ s_{n-1} ⋯ s_1
        word = list(range(1, n)) + list(range(n - 2, 0, -1))
        for letter in reversed(word):
            e = _apply_s(letter, e)
        return e * z(n, 1, 1) * z_inverse(n, n)
    return _apply_s(i, e)


# -- maps to symmetric series ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def _hhat_image(n: int, i: int, j: int, cap: int) -> SymSeries:
    R = _ring(n)
    return hhat(j - i, [R.b(l) for l in range(i, j + 1)], cap, R)


def beta_raw(n: int, i: int, j: int, cap: int) -> SymSeries:
    """Image of the coordinate z_ij before elimination: ĥ_{j-i}(y|b_i..b_j)."""
    return _hhat_image(n, i, j, cap)


def beta_gl(e: ZExpression, cap: int) -> SymSeries:
    """Ring map z_1k ↦ ĥ_{k-1}(y|b_1..b_k), z_kk^{-1} ↦ Ω(b_k)^{-1}."""
    n = e.n
    R = _ring(n)
    ctx = DemazureContext.k_finite(n, cap)
    gens = [_hhat_image(n, 1, k, cap) for k in range(1, n + 1)]
    total = zero(cap, R)
    cache: dict = {}
    for mono, c in e.num.items():
        if mono not in cache:
            acc = one(cap, R)
            for k, p in enumerate(mono):
                for _ in range(p):
                    acc = acc * gens[k]
            cache[mono] = acc
        total = total + cache[mono].scale(c)
    for k, p in enumerate(e.den, start=1):
        for _ in range(p):
            total = total * _omega_inv(ctx, k)
    return total


def beta_pgl(n: int, i: int, j: int, cap: int) -> SymSeries:
    """Image of z_ij / z_11: β(z_ij)·Ω(b_1)^{-1}."""
    ctx = DemazureContext.k_finite(n, cap)
    return beta_gl(z(n, i, j), cap) * _omega_inv(ctx, 1)


def beta_pgl_displayed(n: int, i: int, j: int, cap: int) -> SymSeries:
    """(-1)^{j-i} Ω(b_i)/Ω(b_1) · g_{ρ_{j-i}}(y|rot^i(b)), the closed form as printed
    (with the single-row index read as j - i)."""
    ctx = DemazureContext.k_finite(n, cap)
    g = rotate(ctx, g_class(ctx, rho(ctx.datum, j - i)), i)
    sign = -1 if (j - i) % 2 else 1
    return (_omega(ctx, i) * _omega_inv(ctx, 1) * g).scale(ctx.ring.const(sign))


def hhat_lemma_rhs(n: int, i: int, j: int, cap: int) -> SymSeries:
    """e^{a_i+⋯+a_{j-1}} Ω(b_i) g_{ρ_{j-i}}(y|rot^i(b))."""
    ctx = DemazureContext.k_finite(n, cap)
    R = ctx.ring
    g = rotate(ctx, g_class(ctx, rho(ctx.datum, j - i)), i)
    pref = R.e({l: 1 for l in range(i, j)}) if j > i else R.one
    return (_omega(ctx, i) * g).scale(pref)


# -- checks ---------------------------------------------------------------------


def _report(name: str):
    from .demazure import CheckReport

    return CheckReport(name)


def relation_check(n: int, cap: int):
    """β kills every defining relation, computed from the raw coordinates."""
    R = _ring(n)
    report = _report("centralizer-relations")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            img = beta_raw(n, i, j, cap).scale(R.b(i) - R.b(j)) - beta_raw(n, i, j - 1, cap) + beta_raw(n, i + 1, j, cap)
            report.record(("relation", i, j), img.is_zero())
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            report.record(("normal-form", i, j), beta_gl(z(n, i, j), cap) == beta_raw(n, i, j, cap))
    return report


def hhat_lemma_check(n: int, cap: int):
    """ĥ_{j-i}(y|b_i..b_j) = e^{a_i+⋯+a_{j-1}} Ω(b_i) g_{ρ_{j-i}}(y|rot^i(b)) for j - i ≤ n - 1."""
    report = _report("hhat-lemma")
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            report.record((i, j), beta_raw(n, i, j, cap) == hhat_lemma_rhs(n, i, j, cap))
    return report


def _act_on_series(ctx: DemazureContext, g: tuple, f: SymSeries) -> SymSeries:
    kind, i = g
    if kind == "t":
        k = abs(i)
        return f * (_omega(ctx, k) if i > 0 else _omega_inv(ctx, k))
    return reflect_apply(ctx, i, f)


def equivariance_check(n: int, cap: int):
    """β(g·z_ij) = g·β(z_ij) for every generator g and coordinate z_ij."""
    ctx = DemazureContext.k_finite(n, cap)
    gens = [("s", i) for i in range(n)] + [("t", k) for k in range(1, n + 1)] + [("t", -k) for k in range(1, n + 1)]
    report = _report("centralizer-equivariance")
    targets = [(("z", i, j), z(n, i, j)) for i in range(1, n + 1) for j in range(i, n + 1)]
    targets.append((("one",), ZExpression.constant(n, 1)))
    for g in gens:
        for label, expr in targets:
            lhs = beta_gl(weyl_act_z(g, expr), cap)
            rhs = _act_on_series(ctx, g, beta_gl(expr, cap))
            report.record((g, label), lhs == rhs)
    return report


def sl_quotient_check(n: int, cap: int, max_length: int = 2):
    """β(z_11⋯z_nn) = Ω(b_1)⋯Ω(b_n), and modulo (Ω(b_1)⋯Ω(b_n) - 1)
    the class g̃_{τⁿw} reduces to g̃_w."""
    from .ext_weyl import grassmannian_elements, tau

    ctx = DemazureContext.k_finite(n, cap)
    report = _report("sl-quotient")
    det = ZExpression.constant(n, 1)
    prod = one(cap, ctx.ring)
    for k in range(1, n + 1):
        det = det * z(n, k, k)
        prod = prod * _omega(ctx, k)
    report.record("determinant", beta_gl(det, cap) == prod)
    tn = tau(ctx.datum) ** n
    for L in range(max_length + 1):
        for w in grassmannian_elements(ctx.datum, L):
            gw = g_class(ctx, w, closed=True)
            diff = g_class(ctx, tn * w, closed=True) - gw
            report.record(("tau^n", w), diff == (prod - 1) * gw)
    return report


def pgl_check(n: int, cap: int):
    """Degree-zero coordinates z_ij/z_11: closed form and equivariance."""
    ctx = DemazureContext.k_finite(n, cap)
    gens = [("s", i) for i in range(n)] + [("t", k) for k in range(1, n + 1)]
    report = _report("pgl-coordinates")
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            x = z(n, i, j) * z_inverse(n, 1)
            image = beta_pgl(n, i, j, cap)
            report.record(("degree", i, j), x.degree() == 0)
            report.record(("closed-form", i, j), image == hhat_lemma_rhs(n, i, j, cap) * _omega_inv(ctx, 1))
            for g in gens:
                report.record((g, i, j), beta_gl(weyl_act_z(g, x), cap) == _act_on_series(ctx, g, image))
    return report
