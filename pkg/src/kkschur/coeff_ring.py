"""Coefficient rings: R(T) = Z[e^{±a_i}], S = Z[a_i], and indexed windows of them.

A ring is described by a tuple of integer *labels* (the indices i of the
variables a_i) and a mode.  In multiplicative mode an element is a Laurent
polynomial in e^{a_i}; in additive mode it is a polynomial in the a_i.

Internally a multiplicative element is stored as ``P(x) * x^(-shift)`` where
``x_i = e^{-a_i}`` and ``P`` is a python-flint polynomial.  The shift is kept
minimal, so the stored pair is canonical and equality is structural.  The
public exponent convention (``terms``, JSON) always refers to e^{a_i}.

>>> R = CoeffRing.laurent(2)
>>> R.b(1) * R.b(2) == 1 - R.e((-1, 0)) - R.e((0, -1)) + R.e((-1, -1))
True
>>> exact_divide(R.b(1) - R.b(2), R.e((0, -1)) - R.e((-1, 0)))
LaurentPoly(1)
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import flint

__all__ = [
    "NotDivisible",
    "CoeffMode",
    "CoeffRing",
    "LaurentPoly",
    "c_of",
    "weyl_act",
    "exact_divide",
    "involution_iota_coeff",
    "specialize",
]


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder."""


class CoeffMode(enum.Enum):
    K_MULTIPLICATIVE = "k"
    H_ADDITIVE = "h"


def _label_name(prefix: str, label: int) -> str:
    return f"{prefix}{label}" if label >= 0 else f"{prefix}m{-label}"


@functools.lru_cache(maxsize=None)
def _context(labels: tuple[int, ...], mode: CoeffMode):
    prefix = "x" if mode is CoeffMode.K_MULTIPLICATIVE else "a"
    names = tuple(_label_name(prefix, l) for l in labels)
    return flint.fmpz_mpoly_ctx.get(names, "degrevlex")


@dataclass(frozen=True)
class CoeffRing:
    """A coefficient ring with variables indexed by ``labels``."""

    labels: tuple[int, ...]
    mode: CoeffMode = CoeffMode.K_MULTIPLICATIVE

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("repeated variable label")

    # -- constructors -------------------------------------------------
    @staticmethod
    def laurent(n: int) -> "CoeffRing":
        """R(T) for the rank-n torus, variables a_1..a_n."""
        return CoeffRing(tuple(range(1, n + 1)), CoeffMode.K_MULTIPLICATIVE)

    @staticmethod
    def polynomial(n: int) -> "CoeffRing":
        """S = Z[a_1..a_n] (additive mode)."""
        return CoeffRing(tuple(range(1, n + 1)), CoeffMode.H_ADDITIVE)

    @staticmethod
    def window(lo: int, hi: int, mode: CoeffMode = CoeffMode.K_MULTIPLICATIVE) -> "CoeffRing":
        """Variables a_lo..a_hi of the infinite-rank ring."""
        return CoeffRing(tuple(range(lo, hi + 1)), mode)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def additive(self) -> bool:
        return self.mode is CoeffMode.H_ADDITIVE

    @functools.cached_property
    def ctx(self):
        return _context(self.labels, self.mode)

    @functools.cached_property
    def pos(self) -> dict[int, int]:
        return {l: p for p, l in enumerate(self.labels)}

    @functools.cached_property
    def _gens(self):
        return self.ctx.gens()

    @functools.cached_property
    def _zero_shift(self) -> tuple[int, ...]:
        return (0,) * self.rank

    @functools.cached_property
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, self.ctx.from_dict({}), self._zero_shift)

    @functools.cached_property
    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self, self.ctx.constant(int(c)), self._zero_shift)

    def var(self, label: int) -> "LaurentPoly":
        """The raw generator: x_label = e^{-a_label} (K mode) or a_label (H mode)."""
        return LaurentPoly(self, self._gens[self.pos[label]], self._zero_shift)

    def _vector(self, weight) -> list[int]:
        if isinstance(weight, Mapping):
            v = [0] * self.rank
            for l, e in weight.items():
                if e:
                    v[self.pos[l]] = int(e)
            return v
        weight = list(weight)
        if len(weight) != self.rank:
            raise ValueError("weight length does not match ring rank")
        return [int(e) for e in weight]

    def e(self, weight) -> "LaurentPoly":
        """The character e^weight (multiplicative mode)."""
        if self.additive:
            raise ValueError("characters e^λ live in multiplicative mode")
        v = self._vector(weight)
        xexp = [-e for e in v]
        shift = tuple(max(0, -e) for e in xexp)
        pexp = tuple(max(0, e) for e in xexp)
        return LaurentPoly._make(self, self.ctx.from_dict({pexp: 1}), shift)

    def linear(self, weight) -> "LaurentPoly":
        """The linear form Σ λ_i a_i (additive mode)."""
        if not self.additive:
            raise ValueError("linear forms live in additive mode")
        v = self._vector(weight)
        d = {}
        for p, e in enumerate(v):
            if e:
                exp = [0] * self.rank
                exp[p] = 1
                d[tuple(exp)] = e
        return LaurentPoly(self, self.ctx.from_dict(d), self._zero_shift)

    def b(self, label: int) -> "LaurentPoly":
        """b_i = 1 - e^{-a_i}."""
        return 1 - self.var(label)

    def from_terms(self, terms: Mapping[tuple[int, ...], int]) -> "LaurentPoly":
        """Build from a map (exponent vector of e^{a_i} or a_i) -> coefficient."""
        acc = self.zero
        if self.additive:
            d = {}
            for exp, c in terms.items():
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent in additive mode")
                if c:
                    d[tuple(int(e) for e in exp)] = int(c)
            return LaurentPoly(self, self.ctx.from_dict(d), self._zero_shift)
        if not terms:
            return acc
        xexps = {tuple(-int(e) for e in exp): int(c) for exp, c in terms.items() if c}
        if not xexps:
            return acc
        shift = tuple(max(0, -min(v[p] for v in xexps)) for p in range(self.rank))
        d = {tuple(e + s for e, s in zip(v, shift)): c for v, c in xexps.items()}
        return LaurentPoly._make(self, self.ctx.from_dict(d), shift)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "mode": self.mode.value}


class LaurentPoly:
    """An element of a :class:`CoeffRing`; immutable."""

    __slots__ = ("ring", "poly", "shift", "_hash")

    def __init__(self, ring: CoeffRing, poly, shift: tuple[int, ...]):
        self.ring = ring
        self.poly = poly
        self.shift = shift
        self._hash = None

    @staticmethod
    def _make(ring: CoeffRing, poly, shift) -> "LaurentPoly":
        """Canonicalize: strip common variable powers against the shift."""
        if any(shift):
            if poly.is_zero():
                return LaurentPoly(ring, poly, ring._zero_shift)
            if ring.additive:
                raise ValueError("negative exponent in additive mode")
            degs = poly.term_content().degrees()
            cut = [min(d, s) for d, s in zip(degs, shift)]
            if any(cut):
                poly = poly / ring.ctx.term(exp_vec=tuple(cut))
                shift = tuple(s - c for s, c in zip(shift, cut))
        return LaurentPoly(ring, poly, tuple(shift))

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ValueError("coefficient rings differ")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def _aligned(self, other: "LaurentPoly"):
        if self.shift == other.shift:
            return self.poly, other.poly, self.shift
        s = tuple(max(a, b) for a, b in zip(self.shift, other.shift))
        ctx = self.ring.ctx
        p = self.poly
        if s != self.shift:
            p = p * ctx.term(exp_vec=tuple(x - y for x, y in zip(s, self.shift)))
        q = other.poly
        if s != other.shift:
            q = q * ctx.term(exp_vec=tuple(x - y for x, y in zip(s, other.shift)))
        return p, q, s

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, q, s = self._aligned(other)
        return LaurentPoly._make(self.ring, p + q, s)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, q, s = self._aligned(other)
        return LaurentPoly._make(self.ring, p - q, s)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return LaurentPoly(self.ring, -self.poly, self.shift)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero
            return LaurentPoly(self.ring, self.poly * other, self.shift)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not any(other.shift):
            if not any(self.shift):
                return LaurentPoly(self.ring, self.poly * other.poly, self.shift)
            return LaurentPoly._make(self.ring, self.poly * other.poly, self.shift)
        s = tuple(a + b for a, b in zip(self.shift, other.shift))
        return LaurentPoly._make(self.ring, self.poly * other.poly, s)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k >= 0:
            s = tuple(a * k for a in self.shift)
            return LaurentPoly._make(self.ring, self.poly**k, s)
        unit = self.unit_inverse()
        return unit ** (-k)

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of a unit ±e^λ (or ±1 in additive mode)."""
        d = self.poly.to_dict()
        if len(d) != 1:
            raise NotDivisible("not a unit")
        ((exp, c),) = d.items()
        if c not in (1, -1):
            raise NotDivisible("not a unit")
        if self.ring.additive and any(exp):
            raise NotDivisible("not a unit")
        # x^exp * x^-shift  ->  inverse x^shift * x^-exp
        return LaurentPoly._make(self.ring, self.ring.ctx.term(exp_vec=tuple(self.shift), coeff=c), tuple(exp))

    def __eq__(self, other):
        if isinstance(other, int):
            return not any(self.shift) and self.poly == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.shift == other.shift and self.poly == other.poly

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.shift, tuple(sorted(self.poly.to_dict().items()))))
        return self._hash

    def __bool__(self):
        return not self.poly.is_zero()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    # -- views ------------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        """Map exponent vector (of e^{a_i}, or of a_i in additive mode) -> coefficient."""
        out = {}
        if self.ring.additive:
            for exp, c in self.poly.to_dict().items():
                out[tuple(int(e) for e in exp)] = int(c)
            return out
        for exp, c in self.poly.to_dict().items():
            out[tuple(int(s - e) for e, s in zip(exp, self.shift))] = int(c)
        return out

    @property
    def window(self) -> frozenset[int]:
        """Labels of variables that actually occur."""
        used = set()
        for exp in self.terms:
            used.update(l for l, e in zip(self.ring.labels, exp) if e)
        return frozenset(used)

    def __len__(self):
        return len(self.poly)

    def to_json(self) -> dict:
        rows = sorted(self.terms.items())
        return {
            "rank": self.ring.rank,
            "terms": [{"exp": list(exp), "coef": str(c)} for exp, c in rows],
        }

    @classmethod
    def from_json(cls, ring: CoeffRing, data: Mapping) -> "LaurentPoly":
        if data["rank"] != ring.rank:
            raise ValueError("rank mismatch")
        return ring.from_terms({tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = []
            for l, e in zip(self.ring.labels, exp):
                if e:
                    if self.ring.additive:
                        mono.append(f"a{l}" + (f"^{e}" if e != 1 else ""))
                    else:
                        mono.append(f"e^({e}a{l})" if e != 1 else f"e^a{l}")
            m = "*".join(mono)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append("-" + m)
            else:
                parts.append(f"{c}*{m}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- substitutions ------------------------------------------------------
    def relabel(self, mapping: Mapping[int, int], target: CoeffRing | None = None) -> "LaurentPoly":
        """Send variable a_l to a_{mapping[l]} (identity on unmapped labels).

        ``target`` may be a different ring (e.g. a finite specialization); the
        map need not be injective.
        """
        target = self.ring if target is None else target
        if target.mode != self.ring.mode:
            raise ValueError("mode mismatch")
        gens = target._gens
        images = [gens[target.pos[mapping.get(l, l)]] for l in self.ring.labels]
        if target is self.ring and all(mapping.get(l, l) == l for l in self.ring.labels):
            return self
        poly = self.poly.compose(*images, ctx=target.ctx)
        shift = [0] * target.rank
        for l, s in zip(self.ring.labels, self.shift):
            if s:
                shift[target.pos[mapping.get(l, l)]] += s
        return LaurentPoly._make(target, poly, tuple(shift))

    def transform_exponents(self, fn) -> "LaurentPoly":
        """Apply a linear map on exponent vectors of e^{a} (term by term)."""
        return self.ring.from_terms({tuple(fn(exp)): c for exp, c in self.terms.items()})

    def phi0(self) -> int:
        """Augmentation: e^λ ↦ 1 in K mode, a_i ↦ 0 in H mode."""
        if self.ring.additive:
            return int(self.poly.to_dict().get((0,) * self.ring.rank, 0))
        return int(sum(self.poly.coeffs()))

    def augmentation_order(self) -> float:
        """Largest M with self in I^M, I the kernel of :meth:`phi0` (inf for 0)."""
        if self.is_zero():
            return math.inf
        ring = self.ring
        if ring.additive:
            return min(sum(exp) for exp in self.poly.monoms())
        shifted = [1 - g for g in ring._gens]
        q = self.poly.compose(*shifted)
        return min(sum(exp) for exp in q.monoms())


# ---------------------------------------------------------------------------
# Spec-level operations


def c_of(alpha, ring: CoeffRing) -> LaurentPoly:
    """c(α) = 1 - e^α in K mode; the linear form α in H mode."""
    if ring.additive:
        return ring.linear(alpha)
    return ring.one - ring.e(alpha)


def weyl_act(perm: Iterable[int], f: LaurentPoly) -> LaurentPoly:
    """Act by a permutation u of {1..n}, given as its image list (u(1),...,u(n)).

    u sends a_i to a_{u(i)}; signed entries -j send a_i to -a_j.
    """
    return _weyl_act(tuple(perm), f)


@functools.lru_cache(maxsize=1 << 18)
def _weyl_act(perm: tuple[int, ...], f: LaurentPoly) -> LaurentPoly:
    ring = f.ring
    if all(p > 0 for p in perm):
        labels = ring.labels
        return f.relabel({labels[i]: labels[p - 1] for i, p in enumerate(perm)})

    def move(exp):
        out = [0] * len(exp)
        for i, e in enumerate(exp):
            j = abs(perm[i]) - 1
            out[j] += e if perm[i] > 0 else -e
        return out

    return f.transform_exponents(move)


def exact_divide(f: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient f / d; raises :class:`NotDivisible` on a remainder."""
    if d.ring != f.ring:
        raise ValueError("coefficient rings differ")
    if d.is_zero():
        raise ZeroDivisionError("division by zero")
    if f.is_zero():
        return f
    # d = Q x^-t with Q = x^m Q' and Q' free of monomial factors, so d = Q' x^-(t-m)
    dpoly = d.poly
    m = tuple(min(col) for col in zip(*dpoly.monoms()))
    t = d.shift
    if any(m) and not f.ring.additive:
        dpoly = dpoly / f.ring.ctx.term(exp_vec=m)
        t = tuple(a - b for a, b in zip(t, m))
    try:
        q = f.poly / dpoly
    except Exception as exc:  # flint raises DomainError for inexact division
        raise NotDivisible(str(exc)) from None
    # f = P x^-s, d = Q' x^-t  =>  f/d = (P/Q') x^(t-s)
    s = f.shift
    if s == t:
        return LaurentPoly._make(f.ring, q, f.ring._zero_shift)
    up = tuple(max(0, a - b) for a, b in zip(t, s))
    if any(up):
        q = q * f.ring.ctx.term(exp_vec=up)
    down = tuple(max(0, b - a) for a, b in zip(t, s))
    return LaurentPoly._make(f.ring, q, down)


def involution_iota_coeff(f: LaurentPoly) -> LaurentPoly:
    """a_i ↦ -a_{n+1-i} on a finite-rank ring."""
    return f.transform_exponents(lambda exp: [-e for e in reversed(exp)])


def specialize(f: LaurentPoly, rule: str, target: CoeffRing | None = None):
    """Apply a specialization rule.

    ``"b=0"``: the augmentation φ_0 (returns an int).
    ``"mod"``: infinite-rank window to ``target`` (rank n) via b_i ↦ b_{i mod n},
    with residues represented by 1..n.
    """
    if rule == "b=0":
        return f.phi0()
    if rule == "mod":
        if target is None:
            raise ValueError("mod rule needs a target ring")
        n = target.rank
        mapping = {l: (l - 1) % n + 1 for l in f.ring.labels}
        return f.relabel(mapping, target)
    raise ValueError(f"unknown specialization rule {rule!r}")
