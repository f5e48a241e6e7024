"""The extended affine Weyl group X∨ ⋊ W.

An element is stored canonically as a pair (λ, u) meaning t_λ·u.  Words are
derived views: an :class:`AffineWord` (π, word) stands for π·s_{word[0]}⋯,
with π of length zero.  Lengths come from a closed inversion count over the
finite roots, so nothing here enumerates the affine root system.

>>> from kkschur.root_data import type_a_gl
>>> d = type_a_gl(3)
>>> s0 = simple_reflection(d, 0)
>>> (s0 * s0).is_identity(), s0.length()
(True, 1)
>>> translation(d, d.theta_coroot).length()
4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .root_data import RootDatum, perm_act, perm_identity, perm_inv, perm_mul

__all__ = [
    "ExtWeylElement",
    "AffineWord",
    "identity",
    "simple_reflection",
    "translation",
    "finite_element",
    "from_word",
    "reduced_word",
    "fundamental_element",
    "fundamental_power",
    "tau",
    "bruhat_ideal",
    "bruhat_leq",
    "is_grassmannian",
    "grassmannian_elements",
    "rho",
    "rho_prime",
    "kappa",
    "rectangle",
    "fundamental_finite_word",
    "grassmannian_word",
    "partition_to_grassmannian",
    "grassmannian_to_partition",
    "infinite_partition_to_element",
    "infinite_word_to_partition",
    "gamma_u",
    "irreducible_factorization",
    "star_involution",
    "root_as_conjugate",
    "parse_element",
]


class ExtWeylElement:
    """t_λ·u for a coweight λ (stored coordinates) and a signed permutation u."""

    __slots__ = ("datum", "lam", "perm", "_hash")

    def __init__(self, datum: RootDatum, lam, perm):
        self.datum = datum
        self.lam = datum.normalize_coweight(lam)
        self.perm = tuple(perm)
        self._hash = hash((datum, self.lam, self.perm))

    # -- group law ----------------------------------------------------------
    def __mul__(self, other: "ExtWeylElement") -> "ExtWeylElement":
        if not isinstance(other, ExtWeylElement):
            return NotImplemented
        if other.datum != self.datum:
            raise ValueError("root datum mismatch")
        moved = perm_act(self.perm, other.lam)
        lam = tuple(a + b for a, b in zip(self.lam, moved))
        return ExtWeylElement(self.datum, lam, perm_mul(self.perm, other.perm))

    def inverse(self) -> "ExtWeylElement":
        uinv = perm_inv(self.perm)
        return ExtWeylElement(self.datum, tuple(-c for c in perm_act(uinv, self.lam)), uinv)

    def __pow__(self, m: int) -> "ExtWeylElement":
        base = self if m >= 0 else self.inverse()
        out = identity(self.datum)
        for _ in range(abs(m)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtWeylElement):
            return NotImplemented
        return self.datum == other.datum and self.lam == other.lam and self.perm == other.perm

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        aw = reduced_word(self)
        return f"ExtWeylElement(t={list(self.lam)}, perm={list(self.perm)}, word={aw})"

    # -- views -----------------------------------------------------------
    def is_identity(self) -> bool:
        return not any(self.lam) and self.perm == perm_identity(self.datum.n)

    def finite_part(self) -> "ExtWeylElement":
        return ExtWeylElement(self.datum, (0,) * self.datum.n, self.perm)

    def act_on_weight(self, weight) -> tuple[int, ...]:
        """Level-zero action: only the finite part moves weights."""
        return perm_act(self.perm, weight)

    def length(self) -> int:
        return _length(self)

    def sort_key(self):
        return (self.length(), self.lam, self.perm)

    def to_json(self) -> dict:
        aw = reduced_word(self)
        return {
            "t": list(self.lam),
            "perm": list(self.perm),
            "pi": aw.pi_power,
            "word": list(aw.word),
        }


@lru_cache(maxsize=None)
def _length(w: ExtWeylElement) -> int:
    d = w.datum
    uinv = perm_inv(w.perm)
    total = 0
    for beta in d.roots:
        m = d.pairing(w.lam, beta)
        kmin = 0 if d.is_positive(perm_act(uinv, beta)) else 1
        if m > kmin:
            total += m - kmin
        if m >= kmin and not d.is_positive(beta):
            total += 1
    return total


# -- constructors ---------------------------------------------------------


def identity(d: RootDatum) -> ExtWeylElement:
    return ExtWeylElement(d, (0,) * d.n, perm_identity(d.n))


def translation(d: RootDatum, lam) -> ExtWeylElement:
    return ExtWeylElement(d, d.check_coweight(lam), perm_identity(d.n))


def finite_element(d: RootDatum, perm) -> ExtWeylElement:
    return ExtWeylElement(d, (0,) * d.n, perm)


@lru_cache(maxsize=None)
def simple_reflection(d: RootDatum, i: int) -> ExtWeylElement:
    if i == 0:
        return ExtWeylElement(d, d.theta_coroot, d.finite_reflection(0))
    if i not in d.index_set:
        raise ValueError(f"no simple reflection s_{i}")
    return finite_element(d, d.finite_reflection(i))


def finite_from_word(d: RootDatum, word) -> ExtWeylElement:
    out = identity(d)
    for i in word:
        out = out * simple_reflection(d, i)
    return out


@lru_cache(maxsize=None)
def tau(d: RootDatum) -> ExtWeylElement:
    """τ = t_{ε_1}u_1 with u_1: ε_j ↦ ε_{j+1}; defined for GL_n and PGL_n."""
    if d.kind not in ("gl", "pgl"):
        raise ValueError("τ is defined for GL_n and PGL_n")
    n = d.n
    lam = [0] * n
    lam[0] = 1
    return ExtWeylElement(d, lam, tuple(list(range(2, n + 1)) + [1]))


@lru_cache(maxsize=None)
def fundamental_element(d: RootDatum, i: int) -> ExtWeylElement:
    """π_i: τ^i for GL_n, otherwise the minimal element of t_{ϖ_i∨}W."""
    if i == 0:
        return identity(d)
    if i not in d.special_nodes:
        raise ValueError(f"{i} is not a special node")
    if d.kind == "gl":
        return tau(d) ** i
    w = translation(d, d.fundamental_coweight(i))
    while True:
        for j in d.index_set:
            v = w * simple_reflection(d, j)
            if v.length() < w.length():
                w = v
                break
        else:
            return w


def _generator(d: RootDatum) -> ExtWeylElement | None:
    if d.kind in ("gl", "pgl"):
        return tau(d)
    if d.kind == "c_adjoint":
        return fundamental_element(d, d.n)
    return None


def fundamental_power(d: RootDatum, m: int) -> ExtWeylElement:
    """π^m for the generator π (τ for GL, π_1 for PGL, π_n for adjoint C)."""
    g = _generator(d)
    if g is None:
        if m:
            raise ValueError("SL_n has trivial fundamental group")
        return identity(d)
    return g**m


def _pi_exponent(pi: ExtWeylElement) -> int:
    d = pi.datum
    if pi.is_identity():
        return 0
    g = _generator(d)
    x = identity(d)
    limit = d.n * 64 if d.kind == "gl" else d.n
    for m in range(1, limit + 1):
        x = x * g
        if x == pi:
            return m
        if (x.inverse()) == pi:
            return -m
    raise ValueError("element is not a power of the fundamental generator")


# -- words ----------------------------------------------------------------


@dataclass(frozen=True)
class AffineWord:
    """π·s_{word[0]}s_{word[1]}⋯ with π of length zero."""

    pi: ExtWeylElement
    word: tuple[int, ...]

    @property
    def pi_power(self) -> int:
        return _pi_exponent(self.pi)

    def evaluate(self) -> ExtWeylElement:
        out = self.pi
        for i in self.word:
            out = out * simple_reflection(self.pi.datum, i)
        return out

    def __repr__(self) -> str:
        m = self.pi_power
        head = f"pi^{m}·" if m else ""
        return head + ("s" + "s".join(map(str, self.word)) if self.word else "id")


def from_word(d: RootDatum, word, pi: ExtWeylElement | None = None) -> ExtWeylElement:
    out = pi if pi is not None else identity(d)
    for i in word:
        out = out * simple_reflection(d, i)
    return out


def left_descents(w: ExtWeylElement) -> list[int]:
    d = w.datum
    lw = w.length()
    return [i for i in d.affine_index_set if (simple_reflection(d, i) * w).length() < lw]


def right_descents(w: ExtWeylElement, indices=None) -> list[int]:
    d = w.datum
    lw = w.length()
    idx = d.affine_index_set if indices is None else indices
    return [i for i in idx if (w * simple_reflection(d, i)).length() < lw]


@lru_cache(maxsize=None)
def fundamental_part(w: ExtWeylElement) -> ExtWeylElement:
    d = w.datum
    v = w
    while v.length():
        i = left_descents(v)[0]
        v = simple_reflection(d, i) * v
    return v


_STRATEGIES = ("left_min", "left_max", "right_min", "right_max")


@lru_cache(maxsize=None)
def reduced_word(w: ExtWeylElement, strategy: str = "left_min") -> AffineWord:
    """A reduced word of π^{-1}w chosen by greedy descent removal.

    The default removes the smallest left descent first; the other strategies
    take the largest descent and/or work from the right end.
    """
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    d = w.datum
    pi = fundamental_part(w)
    v = pi.inverse() * w
    pick = min if strategy.endswith("min") else max
    left = strategy.startswith("left")
    word = []
    while v.length():
        if left:
            i = pick(left_descents(v))
            v = simple_reflection(d, i) * v
        else:
            i = pick(right_descents(v))
            v = v * simple_reflection(d, i)
        word.append(i)
    if not left:
        word.reverse()
    return AffineWord(pi, tuple(word))


def is_reduced(d: RootDatum, word, pi: ExtWeylElement | None = None) -> bool:
    return from_word(d, word, pi).length() == len(word)


def conjugate_index(pi: ExtWeylElement, i: int) -> int:
    """The index j with π s_i π^{-1} = s_j."""
    d = pi.datum
    target = pi * simple_reflection(d, i) * pi.inverse()
    for j in d.affine_index_set:
        if simple_reflection(d, j) == target:
            return j
    raise ValueError("element does not normalize the simple reflections")


# -- Bruhat order -------------------------------------------------------------


@lru_cache(maxsize=None)
def _ideal_in_affine(w: ExtWeylElement) -> frozenset:
    if not w.length():
        return frozenset([w])
    d = w.datum
    i = left_descents(w)[0]
    s = simple_reflection(d, i)
    lower = _ideal_in_affine(s * w)
    return lower | frozenset(s * x for x in lower)


def bruhat_ideal(w: ExtWeylElement) -> frozenset:
    """All v ≤ w (same fundamental part)."""
    pi = fundamental_part(w)
    inner = _ideal_in_affine(pi.inverse() * w)
    return frozenset(pi * x for x in inner)


def bruhat_leq(v: ExtWeylElement, w: ExtWeylElement) -> bool:
    if v.datum != w.datum:
        raise ValueError("root datum mismatch")
    if v.length() > w.length():
        return False
    if fundamental_part(v) != fundamental_part(w):
        return False
    return v in bruhat_ideal(w)


def is_grassmannian(w: ExtWeylElement) -> bool:
    return not right_descents(w, w.datum.index_set)


@lru_cache(maxsize=None)
def grassmannian_elements(d: RootDatum, length: int) -> tuple[ExtWeylElement, ...]:
    """Grassmannian elements of the affine Weyl group (π = id) of a given length."""
    if length == 0:
        return (identity(d),)
    out = set()
    for w in grassmannian_elements(d, length - 1):
        for i in d.affine_index_set:
            v = simple_reflection(d, i) * w
            if v.length() == length and is_grassmannian(v):
                out.add(v)
    return tuple(sorted(out, key=ExtWeylElement.sort_key))


# -- special elements ------------------------------------------------------


def rho(d: RootDatum, i: int) -> ExtWeylElement:
    """Single row ρ_i = s_{i-1}⋯s_1s_0 (ρ_0 = id)."""
    return from_word(d, range(i - 1, -1, -1))


def rho_prime(d: RootDatum, i: int) -> ExtWeylElement:
    """Single column ρ'_i = s_{1-i}⋯s_{-1}s_0, indices mod n."""
    n = d.n
    return from_word(d, [(-j) % n for j in range(i - 1, -1, -1)])


def kappa(d: RootDatum, i: int) -> ExtWeylElement:
    """κ_i: π_i t_{-ϖ_i∨} at special nodes, t_{-ϖ_i∨} otherwise."""
    neg = tuple(-c for c in d.fundamental_coweight(i))
    t = translation(d, neg)
    if i in d.special_nodes:
        return fundamental_element(d, i) * t
    return t


def fundamental_finite_word(n: int, i: int) -> tuple[int, ...]:
    """Reading word of u_i in S_n: rows r = 1..i of s_{i+1-r}s_{i+2-r}⋯s_{n-r}."""
    word = []
    for r in range(1, i + 1):
        word.extend(range(i + 1 - r, n - r + 1))
    return tuple(word)


def rectangle(n: int, i: int) -> tuple[int, ...]:
    """The k-rectangle R_i = (i)^{n-i}."""
    return (i,) * (n - i)


def _check_type_a(d: RootDatum) -> None:
    if not d.is_type_a:
        raise ValueError("type A datum required")


def grassmannian_word(n: int, lam) -> tuple[int, ...]:
    """Word of x_λ: rows from last to first, row j read as ρ_{λ_j} shifted by 1-j."""
    word = []
    lam = [p for p in lam if p]
    for j in range(len(lam), 0, -1):
        for c in range(lam[j - 1] - 1, -1, -1):
            word.append((c - (j - 1)) % n)
    return tuple(word)


def partition_to_grassmannian(d: RootDatum, lam) -> ExtWeylElement:
    _check_type_a(d)
    lam = tuple(p for p in lam if p)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("not a partition")
    if lam and lam[0] > d.n - 1:
        raise ValueError(f"partition is not {d.n - 1}-bounded")
    return from_word(d, grassmannian_word(d.n, lam))


def _core_from_word(n: int, word) -> list[int]:
    core: list[int] = []
    for i in reversed(word):
        rows = core + [0]
        added = False
        for r, length in enumerate(rows):
            above = rows[r - 1] if r else None
            if (above is None or above > length) and (length - r) % n == i:
                rows[r] += 1
                added = True
        if not added:
            raise ValueError("word does not act by adding boxes")
        core = [p for p in rows if p]
    return core


def _bounded_from_core(n: int, core: list[int]) -> tuple[int, ...]:
    cols = [sum(1 for p in core if p > c) for c in range(core[0])] if core else []
    out = []
    for r, p in enumerate(core):
        out.append(sum(1 for c in range(p) if (p - c - 1) + (cols[c] - r - 1) + 1 < n))
    return tuple(x for x in out if x)


def grassmannian_to_partition(w: ExtWeylElement) -> tuple[int, ...]:
    """Inverse of x_λ via the n-core of w."""
    d = w.datum
    _check_type_a(d)
    if not fundamental_part(w).is_identity() or not is_grassmannian(w):
        raise ValueError("not a Grassmannian element of the affine Weyl group")
    lam = _bounded_from_core(d.n, _core_from_word(d.n, reduced_word(w).word))
    if partition_to_grassmannian(d, lam) != w:
        raise AssertionError("core bijection disagrees with x_λ")
    return lam


def infinite_partition_to_element(lam) -> tuple[int, ...]:
    """Word of w_λ in S_Z: rows bottom to top, each row right to left by content."""
    lam = [p for p in lam if p]
    word = []
    for r in range(len(lam), 0, -1):
        for c in range(lam[r - 1], 0, -1):
            word.append(c - r)
    return tuple(word)


def infinite_word_to_partition(word) -> tuple[int, ...]:
    """Apply a 0-Grassmannian word (right to left) to ∅, adding a box of content i."""
    rows: list[int] = []
    for i in reversed(word):
        ext = rows + [0]
        for r, p in enumerate(ext):
            if p - r == i and (r == 0 or ext[r - 1] > p):
                ext[r] += 1
                break
        else:
            raise ValueError("word is not 0-Grassmannian")
        rows = [p for p in ext if p]
    return tuple(rows)


# -- factorizations ---------------------------------------------------------


def gamma_u(d: RootDatum, perm) -> tuple[int, ...]:
    """γ_u = -Σ ϖ_i∨ over right descents i ∈ I of u."""
    if d.kind == "sl":
        raise ValueError("requires fundamental coweights")
    u = finite_element(d, perm)
    out = [0] * d.n
    for i in d.index_set:
        if (u * simple_reflection(d, i)).length() < u.length():
            out = [a - b for a, b in zip(out, d.fundamental_coweight(i))]
    return d.normalize_coweight(out)


def grassmannian_decomposition(w: ExtWeylElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(u, γ) with w = u·t_γ."""
    uinv = perm_inv(w.perm)
    return w.perm, w.datum.normalize_coweight(perm_act(uinv, w.lam))


def irreducible_factorization(w: ExtWeylElement) -> tuple[ExtWeylElement, ExtWeylElement]:
    """w = (u t_{γ_u})·t_{γ-γ_u} for a Grassmannian w."""
    d = w.datum
    if not is_grassmannian(w):
        raise ValueError("element is not Grassmannian")
    u, gamma = grassmannian_decomposition(w)
    gu = gamma_u(d, u)
    irreducible = finite_element(d, u) * translation(d, gu)
    rest = translation(d, [a - b for a, b in zip(gamma, gu)])
    return irreducible, rest


def star_involution(w: ExtWeylElement) -> ExtWeylElement:
    """The Dynkin automorphism i ↦ -i mod n: (λ, u) ↦ (ι λ, w_0 u w_0)."""
    d = w.datum
    _check_type_a(d)
    n = d.n
    lam = tuple(-c for c in reversed(w.lam))
    perm = tuple(n + 1 - w.perm[n - i] for i in range(1, n + 1))
    return ExtWeylElement(d, lam, perm)


def root_as_conjugate(d: RootDatum, alpha) -> tuple[tuple[int, ...], int]:
    """(u, j) with u(α_j) = α for a positive finite root α."""
    alpha = tuple(alpha)
    if not d.is_positive(alpha):
        raise ValueError("positive root required")
    steps = []
    while True:
        for j in d.index_set:
            if d.simple_root(j) == alpha:
                u = perm_identity(d.n)
                for i in reversed(steps):
                    u = perm_mul(d.finite_reflection(i), u)
                return u, j
        for i in d.index_set:
            if d.pairing(d.simple_coroot(i), alpha) > 0:
                alpha = perm_act(d.finite_reflection(i), alpha)
                steps.append(i)
                break
        else:
            raise ValueError("not a root")


# -- literals --------------------------------------------------------------

_INTS = re.compile(r"-?\d+")


def parse_element(d: RootDatum, text: str) -> ExtWeylElement:
    """Parse "t:[..];perm:[..]", "word:pi^m:0,1,0" or "lambda:3,1"."""
    text = text.strip()
    if text.startswith("t:"):
        parts = dict(p.split(":", 1) for p in text.split(";"))
        lam = [int(x) for x in _INTS.findall(parts["t"])]
        perm = [int(x) for x in _INTS.findall(parts.get("perm", ""))] or list(perm_identity(d.n))
        return ExtWeylElement(d, d.check_coweight(lam), perm)
    if text.startswith("word:"):
        body = text[5:]
        m = 0
        if body.startswith("pi^"):
            head, _, body = body.partition(":")
            m = int(head[3:])
        word = [int(x) for x in _INTS.findall(body)]
        return from_word(d, word, fundamental_power(d, m))
    if text.startswith("lambda:"):
        return partition_to_grassmannian(d, [int(x) for x in _INTS.findall(text[7:])])
    raise ValueError(f"unrecognized element literal {text!r}")
