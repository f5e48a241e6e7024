"""Root data of GL_n, SL_n, PGL_n and adjoint C_n.

Weights and coweights are written in an ambient basis: weights as integer
vectors in the a_i, coweights as vectors in the ε_i with ⟨ε_i, a_j⟩ = δ_ij.
For adjoint C_n the coweight lattice contains ½(ε_1+…+ε_n), so coweights are
stored multiplied by ``scale = 2``.  PGL_n coweights are stored as lifts
normalized to have last coordinate 0, which makes equality modulo Zε
structural.

Finite Weyl group elements are signed permutations: a tuple ``p`` with
``p[i-1] = ±j`` meaning ε_i ↦ ±ε_j (and likewise a_i ↦ ±a_j).

>>> d = type_a_gl(3)
>>> d.theta, d.theta_coroot
((1, 0, -1), (1, 0, -1))
>>> d.pairing(d.theta_coroot, d.theta)
2
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

__all__ = [
    "RootDatum",
    "type_a_gl",
    "type_a_sl",
    "type_a_pgl",
    "type_c_adjoint",
    "perm_mul",
    "perm_inv",
    "perm_act",
    "perm_identity",
    "fundamental_group_elements",
]

Perm = tuple[int, ...]
Vec = tuple[int, ...]

KINDS = ("gl", "sl", "pgl", "c_adjoint")


def perm_identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_mul(u: Perm, v: Perm) -> Perm:
    """(uv)(ε_i) = u(v(ε_i))."""
    out = []
    for j in v:
        k = u[abs(j) - 1]
        out.append(k if j > 0 else -k)
    return tuple(out)


def perm_inv(u: Perm) -> Perm:
    out = [0] * len(u)
    for i, j in enumerate(u, start=1):
        out[abs(j) - 1] = i if j > 0 else -i
    return tuple(out)


def perm_act(u: Perm, vec) -> Vec:
    out = [0] * len(vec)
    for i, c in enumerate(vec):
        if c:
            j = u[i]
            if j > 0:
                out[j - 1] += c
            else:
                out[-j - 1] -= c
    return tuple(out)


def _unit(n: int, i: int, c: int = 1) -> list[int]:
    v = [0] * n
    v[i - 1] = c
    return v


@dataclass(frozen=True)
class RootDatum:
    """One of the shipped root data; all derived data are computed lazily."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown root datum kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("rank must be at least 2")

    # -- basic shape ---------------------------------------------------
    @property
    def is_type_a(self) -> bool:
        return self.kind != "c_adjoint"

    @property
    def rank(self) -> int:
        """Dimension of the ambient torus coordinates."""
        return self.n

    @property
    def scale(self) -> int:
        return 2 if self.kind == "c_adjoint" else 1

    @property
    def index_set(self) -> tuple[int, ...]:
        if self.is_type_a:
            return tuple(range(1, self.n))
        return tuple(range(1, self.n + 1))

    @property
    def affine_index_set(self) -> tuple[int, ...]:
        return (0,) + self.index_set

    def to_json(self) -> dict:
        return {"type": self.kind, "n": self.n}

    # -- roots ------------------------------------------------------------
    def simple_root(self, i: int) -> Vec:
        n = self.n
        if i == 0:
            return tuple(-c for c in self.theta)
        if self.is_type_a or i < n:
            v = _unit(n, i)
            v[i] = -1
            return tuple(v)
        return tuple(_unit(n, n, 2))

    def simple_coroot(self, i: int) -> Vec:
        """α_i∨ in stored (scaled) coordinates."""
        if i == 0:
            return tuple(-c for c in self.theta_coroot)
        return self.coroot(self.simple_root(i))

    def coroot(self, alpha: Vec) -> Vec:
        s = self.scale
        nz = [c for c in alpha if c]
        if len(nz) == 1:  # long root ±2a_i of type C
            return tuple(s * (c // 2) for c in alpha)
        return tuple(s * c for c in alpha)

    @functools.cached_property
    def positive_roots(self) -> tuple[Vec, ...]:
        n = self.n
        out = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = _unit(n, i)
                v[j - 1] = -1
                out.append(tuple(v))
                if not self.is_type_a:
                    w = _unit(n, i)
                    w[j - 1] = 1
                    out.append(tuple(w))
            if not self.is_type_a:
                out.append(tuple(_unit(n, i, 2)))
        return tuple(out)

    @functools.cached_property
    def roots(self) -> tuple[Vec, ...]:
        return self.positive_roots + tuple(tuple(-c for c in a) for a in self.positive_roots)

    @staticmethod
    def is_positive(alpha: Vec) -> bool:
        for c in alpha:
            if c:
                return c > 0
        raise ValueError("zero vector is not a root")

    @property
    def theta(self) -> Vec:
        n = self.n
        if self.is_type_a:
            v = _unit(n, 1)
            v[n - 1] = -1
            return tuple(v)
        return tuple(_unit(n, 1, 2))

    @property
    def theta_coroot(self) -> Vec:
        return self.coroot(self.theta)

    def pairing(self, mu: Vec, lam: Vec) -> int:
        """⟨μ, λ⟩ for a stored coweight μ and a weight λ."""
        total = sum(a * b for a, b in zip(mu, lam))
        q, r = divmod(total, self.scale)
        if r:
            raise ValueError("pairing is not integral")
        return q

    @functools.cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        I = self.index_set
        return tuple(tuple(self.pairing(self.simple_coroot(i), self.simple_root(j)) for j in I) for i in I)

    # -- coweights ------------------------------------------------------
    def normalize_coweight(self, lam) -> Vec:
        lam = tuple(lam)
        if len(lam) != self.n:
            raise ValueError("coweight has wrong length")
        if self.kind == "pgl" and lam[-1]:
            last = lam[-1]
            return tuple(c - last for c in lam)
        return lam

    def check_coweight(self, lam) -> Vec:
        lam = self.normalize_coweight(lam)
        if self.kind == "sl" and sum(lam):
            raise ValueError("SL_n coweights have coordinate sum 0")
        if self.kind == "c_adjoint" and len({c % 2 for c in lam}) > 1:
            raise ValueError("not in the adjoint C_n coweight lattice")
        return lam

    def fundamental_coweight(self, i: int) -> Vec:
        """ϖ_i∨ in stored coordinates (type A: the lift ε_1+…+ε_i)."""
        n = self.n
        if i not in self.index_set:
            raise ValueError("index out of range")
        if self.kind == "sl":
            raise ValueError("fundamental coweights are not SL_n coweights")
        if self.is_type_a:
            return self.normalize_coweight([1] * i + [0] * (n - i))
        if i < n:
            return tuple([2] * i + [0] * (n - i))
        return tuple([1] * n)

    # -- finite Weyl group --------------------------------------------
    def reflection(self, alpha: Vec) -> Perm:
        """The reflection s_α as a signed permutation."""
        n = self.n
        idx = [k for k, c in enumerate(alpha) if c]
        p = list(range(1, n + 1))
        if len(idx) == 1:
            k = idx[0]
            p[k] = -(k + 1)
        else:
            i, j = idx
            if alpha[i] == alpha[j]:  # a_i + a_j
                p[i], p[j] = -(j + 1), -(i + 1)
            else:
                p[i], p[j] = j + 1, i + 1
        return tuple(p)

    def finite_reflection(self, i: int) -> Perm:
        """Image of s_i in the finite Weyl group (s_0 ↦ s_θ)."""
        if i == 0:
            return self.reflection(self.theta)
        return self.reflection(self.simple_root(i))

    def finite_length(self, u: Perm) -> int:
        return sum(1 for a in self.positive_roots if not self.is_positive(perm_act(u, a)))

    @property
    def special_nodes(self) -> tuple[int, ...]:
        if self.kind in ("gl", "pgl"):
            return tuple(range(self.n))
        if self.kind == "sl":
            return (0,)
        return (0, self.n)

    def dual_node(self, i: int) -> int:
        """i* with π_i^{-1} = π_{i*}."""
        if self.is_type_a:
            return (-i) % self.n
        return i


def type_a_gl(n: int) -> RootDatum:
    return RootDatum("gl", n)


def type_a_sl(n: int) -> RootDatum:
    return RootDatum("sl", n)


def type_a_pgl(n: int) -> RootDatum:
    return RootDatum("pgl", n)


def type_c_adjoint(n: int) -> RootDatum:
    return RootDatum("c_adjoint", n)


def from_json(data: dict) -> RootDatum:
    return RootDatum(data["type"], int(data["n"]))


def fundamental_group_elements(d: RootDatum):
    """List of (i, t_{π_i}, u_{π_i}) for the nontrivial length-zero elements.

    For GL_n these are the powers τ^i, 1 ≤ i < n (τ^n = t_ε is central).
    """
    from .ext_weyl import fundamental_element

    out = []
    for i in d.special_nodes:
        if i == 0:
            continue
        pi = fundamental_element(d, i)
        out.append((i, pi.lam, pi.perm))
    return out
