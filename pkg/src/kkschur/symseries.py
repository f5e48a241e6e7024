"""Truncated completed symmetric functions over a coefficient ring.

A :class:`SymSeries` is a polynomial in h_1, h_2, ... (stored as a map from
partitions μ, meaning h_{μ_1}h_{μ_2}⋯, to coefficients) representing a
series modulo y-degree > cap.  Coefficients live in a :class:`CoeffRing`,
or are plain integers when ``ring`` is None.

>>> f = h(1, cap=3) + 1
>>> (f * f.invert()) == one(3)
True
>>> to_schur(schur((2, 1), cap=3))
{(2, 1): 1}
"""

from __future__ import annotations

import functools
from math import comb
from typing import Callable, Iterable, Mapping

from .coeff_ring import CoeffRing, LaurentPoly

__all__ = [
    "SymSeries",
    "Tensor",
    "one",
    "zero",
    "h",
    "e",
    "h_monomial",
    "schur",
    "to_schur",
    "power_sum",
    "omega",
    "omega_inverse",
    "hhat",
    "complete_homogeneous",
    "coproduct",
    "antipode",
    "counit",
    "hopf_axiom_failures",
    "omega_tilde",
    "omega_tilde_h",
    "omega_tilde_h_closed",
    "omega_tilde_on_p",
    "omega_tilde_power_sum",
    "laplace_determinant",
    "partitions",
]

Partition = tuple[int, ...]


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _merge(mu: Partition, nu: Partition) -> Partition:
    if not mu:
        return nu
    if not nu:
        return mu
    return tuple(sorted(mu + nu, reverse=True))


def _coef_zero(ring):
    return 0 if ring is None else ring.zero


def _coerce(ring, c):
    if ring is None:
        if not isinstance(c, int):
            raise TypeError("integer coefficient expected")
        return c
    if isinstance(c, int):
        return ring.const(c)
    if c.ring != ring:
        raise ValueError("coefficient ring mismatch")
    return c


def _nonzero(c) -> bool:
    return bool(c) if isinstance(c, int) else not c.is_zero()


class SymSeries:
    """Σ_μ c_μ h_μ truncated at y-degree ``cap``."""

    __slots__ = ("cap", "ring", "terms")

    def __init__(self, cap: int, ring: CoeffRing | None, terms: Mapping[Partition, object] | None = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        self.ring = ring
        clean = {}
        for mu, c in (terms or {}).items():
            if sum(mu) <= cap and _nonzero(c):
                clean[mu] = c
        self.terms = clean

    # -- helpers -----------------------------------------------------------
    def _like(self, terms) -> "SymSeries":
        return SymSeries(self.cap, self.ring, terms)

    def _check(self, other: "SymSeries") -> None:
        if other.cap != self.cap or other.ring != self.ring:
            raise ValueError("cap or coefficient ring mismatch")

    def _lift(self, other) -> "SymSeries":
        if isinstance(other, SymSeries):
            self._check(other)
            return other
        return self._like({(): _coerce(self.ring, other)})

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "SymSeries":
        other = self._lift(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            if mu in out:
                out[mu] = out[mu] + c
            else:
                out[mu] = c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "SymSeries":
        return self._like({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other) -> "SymSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "SymSeries":
        return self._lift(other) - self

    def scale(self, c) -> "SymSeries":
        c = _coerce(self.ring, c)
        return self._like({mu: c * v for mu, v in self.terms.items()})

    def __mul__(self, other) -> "SymSeries":
        if not isinstance(other, SymSeries):
            return self.scale(other)
        self._check(other)
        cap = self.cap
        right = sorted(other.terms.items(), key=lambda kv: sum(kv[0]))
        out: dict[Partition, object] = {}
        for mu, a in self.terms.items():
            room = cap - sum(mu)
            for nu, b in right:
                if sum(nu) > room:
                    break
                key = _merge(mu, nu)
                prod = a * b
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return self._like(out)

    def __rmul__(self, other) -> "SymSeries":
        return self.scale(other)

    def __pow__(self, k: int) -> "SymSeries":
        if k < 0:
            return self.invert() ** (-k)
        out = one(self.cap, self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._lift(other)
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.cap == other.cap and self.ring == other.ring and self.terms == other.terms

    def __ne__(self, other) -> bool:
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        return self.terms.get((), _coef_zero(self.ring))

    def coefficient(self, mu: Iterable[int]):
        return self.terms.get(tuple(mu), _coef_zero(self.ring))

    def degree_slice(self, d: int) -> "SymSeries":
        return self._like({mu: c for mu, c in self.terms.items() if sum(mu) == d})

    def lowest_degree(self) -> int | None:
        if not self.terms:
            return None
        return min(sum(mu) for mu in self.terms)

    def truncate(self, cap: int) -> "SymSeries":
        if cap > self.cap:
            raise ValueError("cannot raise the cap of a truncated series")
        return SymSeries(cap, self.ring, self.terms)

    def with_cap(self, cap: int) -> "SymSeries":
        """Re-cap an exact polynomial (only valid when no information is lost)."""
        return SymSeries(cap, self.ring, self.terms)

    def map_coefficients(self, fn: Callable, ring: CoeffRing | None | str = "same") -> "SymSeries":
        target = self.ring if ring == "same" else ring
        return SymSeries(self.cap, target, {mu: fn(c) for mu, c in self.terms.items()})

    def invert(self) -> "SymSeries":
        """Multiplicative inverse modulo degree > cap (constant term must be a unit)."""
        c0 = self.constant_term()
        if isinstance(c0, int):
            if c0 not in (1, -1):
                raise ZeroDivisionError("constant term is not a unit")
            inv0 = c0
        else:
            inv0 = c0.unit_inverse()
        slices = [self.degree_slice(d) for d in range(self.cap + 1)]
        result = [self._like({(): inv0})]
        for d in range(1, self.cap + 1):
            acc = self._like({})
            for j in range(1, d + 1):
                if slices[j].terms and result[d - j].terms:
                    acc = acc + slices[j] * result[d - j]
            result.append(acc.scale(-inv0) if acc.terms else acc)
        total = self._like({})
        for part in result:
            total = total + part
        return total

    def specialize(self, fn: Callable, ring: CoeffRing | None) -> "SymSeries":
        return self.map_coefficients(fn, ring)

    def substitute_h(self, images: Mapping[int, "SymSeries"]) -> "SymSeries":
        """Ring map h_r ↦ images[r] on the h-generators (coefficients fixed)."""
        out = self._like({})
        cache: dict[Partition, SymSeries] = {(): one(self.cap, self.ring)}
        for mu in sorted(self.terms, key=lambda m: (len(m), m)):
            if mu not in cache:
                cache[mu] = cache[mu[:-1]] * images[mu[-1]] if mu[:-1] in cache else _prod(
                    [images[r] for r in mu], self.cap, self.ring
                )
            out = out + cache[mu].scale(self.terms[mu])
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymSeries(0, cap={self.cap})"
        parts = []
        for mu in sorted(self.terms, key=lambda m: (sum(m), m)):
            name = "h" + ",".join(map(str, mu)) if mu else "1"
            parts.append(f"({self.terms[mu]})*{name}")
        return f"SymSeries({' + '.join(parts)}, cap={self.cap})"

    def to_json(self, basis: str = "h") -> dict:
        if basis == "h":
            data = self.terms
        elif basis == "schur":
            data = to_schur(self)
        else:
            raise ValueError("basis must be 'h' or 'schur'")

        def enc(c):
            return str(c) if isinstance(c, int) else c.to_json()

        keys = sorted(data, key=lambda m: (sum(m), m))
        return {
            "cap": self.cap,
            "basis": basis,
            "terms": [{"partition": list(mu), "coef": enc(data[mu])} for mu in keys],
        }


def _prod(factors: list[SymSeries], cap: int, ring) -> SymSeries:
    out = one(cap, ring)
    for f in factors:
        out = out * f
    return out


# -- basic elements ----------------------------------------------------------


def one(cap: int, ring: CoeffRing | None = None) -> SymSeries:
    return SymSeries(cap, ring, {(): _coerce(ring, 1)})


def zero(cap: int, ring: CoeffRing | None = None) -> SymSeries:
    return SymSeries(cap, ring, {})


def h_monomial(mu: Iterable[int], cap: int, ring: CoeffRing | None = None, coef=1) -> SymSeries:
    mu = tuple(sorted((p for p in mu if p), reverse=True))
    return SymSeries(cap, ring, {mu: _coerce(ring, coef)})


def h(r: int, cap: int, ring: CoeffRing | None = None) -> SymSeries:
    if r < 0:
        return zero(cap, ring)
    return h_monomial((r,), cap, ring)


def _from_int_dict(data: Mapping[Partition, int], cap: int, ring) -> SymSeries:
    if ring is None:
        return SymSeries(cap, None, data)
    return SymSeries(cap, ring, {mu: ring.const(c) for mu, c in data.items() if sum(mu) <= cap})


@functools.lru_cache(maxsize=None)
def _e_dict(r: int) -> dict[Partition, int]:
    """e_r in the h-basis via e_r = Σ_{i≥1} (-1)^{i-1} h_i e_{r-i}."""
    if r == 0:
        return {(): 1}
    out: dict[Partition, int] = {}
    for i in range(1, r + 1):
        sign = 1 if i % 2 else -1
        for mu, c in _e_dict(r - i).items():
            key = _merge((i,), mu)
            out[key] = out.get(key, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def e(r: int, cap: int, ring: CoeffRing | None = None) -> SymSeries:
    if r < 0:
        return zero(cap, ring)
    return _from_int_dict(_e_dict(r), cap, ring)


def laplace_determinant(matrix: list[list], zero_value, one_value=None):
    """Determinant by Laplace expansion along rows with memoized minors."""
    m = len(matrix)
    if m == 0:
        return one_value
    memo: dict[tuple[int, int], object] = {}

    def minor(row: int, cols: int):
        if row == m:
            return one_value
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = zero_value
        sign = 1
        for c in range(m):
            if cols & (1 << c):
                continue
            entry = matrix[row][c]
            if _is_nonzero_entry(entry):
                sub = minor(row + 1, cols | (1 << c))
                term = entry * sub
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


def _is_nonzero_entry(x) -> bool:
    if isinstance(x, SymSeries):
        return not x.is_zero()
    if isinstance(x, int):
        return x != 0
    return not x.is_zero()


@functools.lru_cache(maxsize=None)
def _schur_dict(lam: Partition) -> dict[Partition, int]:
    """Jacobi–Trudi det(h_{λ_i + j - i}) in the h-basis."""
    size = sum(lam)
    m = len(lam)
    matrix = [[h(lam[i] + j - i, size) for j in range(m)] for i in range(m)]
    det = laplace_determinant(matrix, zero(size), one(size))
    return dict(det.terms)


def schur(lam: Iterable[int], cap: int, ring: CoeffRing | None = None) -> SymSeries:
    lam = tuple(p for p in lam if p)
    if sum(lam) > cap:
        raise ValueError("|λ| exceeds the cap")
    return _from_int_dict(_schur_dict(lam), cap, ring)


def to_schur(f: SymSeries) -> dict[Partition, object]:
    """Schur expansion, peeling the lexicographically smallest h-term."""
    remaining = dict(f.terms)
    out: dict[Partition, object] = {}
    while remaining:
        mu = min(remaining, key=lambda m: (sum(m), m))
        c = remaining[mu]
        out[mu] = c
        for nu, k in _schur_dict(mu).items():
            v = remaining.get(nu, _coef_zero(f.ring)) - c * k
            if _nonzero(v):
                remaining[nu] = v
            else:
                remaining.pop(nu, None)
    return out


@functools.lru_cache(maxsize=None)
def _p_dict(j: int) -> dict[Partition, int]:
    """Newton: p_j = j h_j - Σ_{i<j} p_i h_{j-i}."""
    out: dict[Partition, int] = {(j,): j}
    for i in range(1, j):
        for mu, c in _p_dict(i).items():
            key = _merge(mu, (j - i,))
            out[key] = out.get(key, 0) - c
    return {k: v for k, v in out.items() if v}


def power_sum(j: int, cap: int, ring: CoeffRing | None = None) -> SymSeries:
    if j < 1:
        raise ValueError("j must be positive")
    return _from_int_dict(_p_dict(j), cap, ring)


def omega(b, cap: int, ring: CoeffRing | None = None) -> SymSeries:
    """Ω(b|y) = Σ_l b^l h_l."""
    if isinstance(b, LaurentPoly):
        ring = b.ring
    b = _coerce(ring, b)
    terms = {(): _coerce(ring, 1)}
    power = _coerce(ring, 1)
    for l in range(1, cap + 1):
        power = power * b
        terms[(l,)] = power
    return SymSeries(cap, ring, terms)


def omega_inverse(b, cap: int, ring: CoeffRing | None = None) -> SymSeries:
    """Ω(b|y)^{-1} = Σ_l (-b)^l e_l."""
    if isinstance(b, LaurentPoly):
        ring = b.ring
    b = _coerce(ring, b)
    out = one(cap, ring)
    power = _coerce(ring, 1)
    for l in range(1, cap + 1):
        power = power * (-b)
        out = out + e(l, cap, ring).scale(power)
    return out


def complete_homogeneous(l: int, params: list, ring):
    """h_l(t_1, ..., t_i) of coefficient-ring elements."""
    table = [_coerce(ring, 1)] + [_coerce(ring, 0)] * l
    for t in params:
        t = _coerce(ring, t)
        for k in range(1, l + 1):
            table[k] = table[k] + t * table[k - 1]
    return table[l]


def hhat(m: int, params: list, cap: int, ring: CoeffRing | None = None) -> SymSeries:
    """ĥ_m(y|t_1..t_i) = Σ_l h_l(t) h_{m+l}(y)."""
    if params and isinstance(params[0], LaurentPoly):
        ring = params[0].ring
    terms = {}
    for l in range(0, cap - m + 1):
        key = (m + l,) if m + l else ()
        terms[key] = complete_homogeneous(l, list(params), ring)
    return SymSeries(cap, ring, terms)


# -- Hopf structure ----------------------------------------------------------


class Tensor:
    """Truncated element of Λ ⊗ Λ: map (μ, ν) ↦ coefficient, |μ|+|ν| ≤ cap."""

    __slots__ = ("cap", "ring", "terms")

    def __init__(self, cap: int, ring, terms=None):
        self.cap = cap
        self.ring = ring
        self.terms = {
            k: c for k, c in (terms or {}).items() if sum(k[0]) + sum(k[1]) <= cap and _nonzero(c)
        }

    def __add__(self, other: "Tensor") -> "Tensor":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return Tensor(self.cap, self.ring, out)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + Tensor(other.cap, other.ring, {k: -c for k, c in other.terms.items()})

    def __mul__(self, other: "Tensor") -> "Tensor":
        out: dict = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                if sum(a) + sum(b) + sum(c) + sum(d) > self.cap:
                    continue
                key = (_merge(a, c), _merge(b, d))
                out[key] = out[key] + x * y if key in out else x * y
        return Tensor(self.cap, self.ring, out)

    def scale(self, c) -> "Tensor":
        return Tensor(self.cap, self.ring, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    @staticmethod
    def outer(f: SymSeries, g: SymSeries) -> "Tensor":
        out = {}
        for mu, a in f.terms.items():
            for nu, b in g.terms.items():
                out[(mu, nu)] = a * b
        return Tensor(f.cap, f.ring, out)

    def apply_left(self, fn: Callable[[SymSeries], SymSeries]) -> "Tensor":
        """(fn ⊗ id) applied termwise."""
        out = Tensor(self.cap, self.ring)
        for (mu, nu), c in self.terms.items():
            image = fn(h_monomial(mu, self.cap, self.ring, c))
            out = out + Tensor.outer(image, h_monomial(nu, self.cap, self.ring))
        return out

    def multiply_out(self) -> SymSeries:
        """m: f ⊗ g ↦ fg."""
        out = zero(self.cap, self.ring)
        for (mu, nu), c in self.terms.items():
            out = out + h_monomial(_merge(mu, nu), self.cap, self.ring, c)
        return out


def _coproduct_h(r: int, cap: int, ring) -> Tensor:
    one_c = _coerce(ring, 1)
    terms = {}
    for i in range(r + 1):
        a = (i,) if i else ()
        b = (r - i,) if r - i else ()
        terms[(a, b)] = one_c
    return Tensor(cap, ring, terms)


def coproduct(f: SymSeries) -> Tensor:
    """Δ as a ring map with Δ(h_r) = Σ h_i ⊗ h_{r-i}."""
    out = Tensor(f.cap, f.ring)
    unit = Tensor(f.cap, f.ring, {((), ()): _coerce(f.ring, 1)})
    for mu, c in f.terms.items():
        t = unit
        for r in mu:
            t = t * _coproduct_h(r, f.cap, f.ring)
        out = out + t.scale(c)
    return out


def antipode(f: SymSeries) -> SymSeries:
    """S as a ring map with S(h_r) = (-1)^r e_r."""
    images = {r: e(r, f.cap, f.ring).scale(-1 if r % 2 else 1) for r in range(1, f.cap + 1)}
    return f.substitute_h(images)


def counit(f: SymSeries):
    return f.constant_term()


def _triple(f: SymSeries, left: bool) -> dict:
    """(Δ⊗id)Δ(f) (left=True) or (id⊗Δ)Δ(f) as {(μ, ν, κ): coefficient}."""
    out: dict = {}
    for (mu, nu), c in coproduct(f).terms.items():
        split = mu if left else nu
        for (a, b), x in coproduct(h_monomial(split, f.cap, f.ring)).terms.items():
            key = (a, b, nu) if left else (mu, a, b)
            v = out[key] + c * x if key in out else c * x
            if _nonzero(v):
                out[key] = v
            else:
                out.pop(key, None)
    return out


def hopf_axiom_failures(f: SymSeries) -> list[str]:
    """Names of the bialgebra/antipode axioms that fail on f."""
    failures = []
    if _triple(f, True) != _triple(f, False):
        failures.append("coassociativity")
    delta = coproduct(f)
    unit = one(f.cap, f.ring)
    left = zero(f.cap, f.ring)
    right = zero(f.cap, f.ring)
    for (mu, nu), c in delta.terms.items():
        if not mu:
            left = left + h_monomial(nu, f.cap, f.ring, c)
        if not nu:
            right = right + h_monomial(mu, f.cap, f.ring, c)
    if left != f or right != f:
        failures.append("counit")
    if delta.apply_left(antipode).multiply_out() != unit.scale(counit(f)):
        failures.append("antipode")
    return failures


# -- the involution ω̃ --------------------------------------------------------


def omega_tilde_h_closed(l: int, cap: int, ring=None) -> SymSeries:
    """ω̃(h_l) = Σ_{r=0}^{l-1} C(l-1, r) e_{r+1}."""
    if l == 0:
        return one(cap, ring)
    out = zero(cap, ring)
    for r in range(l):
        out = out + e(r + 1, cap, ring).scale(comb(l - 1, r))
    return out


@functools.lru_cache(maxsize=None)
def _omega_tilde_h_dict(l: int) -> dict[Partition, int]:
    """ω̃(h_l) from the generating identity (Σ u^l h_l)(Σ (⊖u)^l ω̃(h_l)) = 1.

    With H(u) = Σ u^l h_l, the identity says Σ_l (⊖u)^l ω̃(h_l) = 1/H(u).
    Substituting u = ⊖v (so ⊖u = v) gives Σ_l v^l ω̃(h_l) = 1/H(⊖v), and
    ⊖v = -v/(1-v) = -Σ_{m≥1} v^m, so ω̃(h_l) is the v^l coefficient of 1/H(⊖v).
    """
    cap = l
    # coefficient of v^d in (⊖v)^k = (-1)^k C(d-1, k-1) for d ≥ k ≥ 1
    series = [zero(cap) for _ in range(cap + 1)]  # series[d] = v^d coefficient of H(⊖v)
    series[0] = one(cap)
    for k in range(1, cap + 1):
        for d in range(k, cap + 1):
            coef = (-1) ** k * comb(d - 1, k - 1)
            series[d] = series[d] + h(k, cap).scale(coef)
    # invert the power series in v with coefficients in Λ
    inv = [one(cap)]
    for d in range(1, cap + 1):
        acc = zero(cap)
        for j in range(1, d + 1):
            acc = acc + series[j] * inv[d - j]
        inv.append(-acc)
    return dict(inv[l].terms)


def omega_tilde_h(l: int, cap: int, ring=None) -> SymSeries:
    return _from_int_dict(_omega_tilde_h_dict(l), cap, ring)


def omega_tilde(f: SymSeries) -> SymSeries:
    """The ring automorphism ω̃ applied to the h-generators (coefficients fixed)."""
    images = {r: omega_tilde_h(r, f.cap, f.ring) for r in range(1, f.cap + 1)}
    return f.substitute_h(images)


def omega_tilde_on_p(j: int, cap: int, ring=None) -> SymSeries:
    """The displayed series (-1)^{j+1} Σ_{r≥0} C(r+j-1, j-1) p_{j+r}, truncated at cap.

    This is the Hall adjoint of ω̃ on power sums, see :func:`omega_tilde_power_sum`.
    """
    out = zero(cap, ring)
    sign = 1 if j % 2 else -1
    for r in range(0, cap - j + 1):
        out = out + power_sum(j + r, cap, ring).scale(sign * comb(r + j - 1, j - 1))
    return out


def omega_tilde_power_sum(j: int, cap: int, ring=None) -> SymSeries:
    """ω̃(p_j) = Σ_{l=1}^{j} (-1)^{l+1} C(j, l) p_l (finite sum)."""
    out = zero(cap, ring)
    for l in range(1, j + 1):
        out = out + power_sum(l, cap, ring).scale((1 if l % 2 else -1) * comb(j, l))
    return out
