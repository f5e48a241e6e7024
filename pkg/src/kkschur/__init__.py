"""Exact computations in the equivariant K-homology of type A affine Grassmannians.

Three models are implemented side by side and checked against each other:

* the Peterson subalgebra of the affine K-nil-Hecke ring (``nilhecke``, ``peterson``),
* K-theoretic double k-Schur functions built by Demazure-type operators on
  truncated symmetric series (``symseries``, ``demazure``),
* the coordinate ring of the centralizer family (``centralizer``).

All arithmetic is exact.
"""

from .coeff_ring import CoeffMode, CoeffRing, LaurentPoly, NotDivisible
from .root_data import RootDatum, type_a_gl, type_a_pgl, type_a_sl, type_c_adjoint
from .ext_weyl import ExtWeylElement

__all__ = [
    "CoeffMode",
    "CoeffRing",
    "LaurentPoly",
    "NotDivisible",
    "RootDatum",
    "type_a_gl",
    "type_a_sl",
    "type_a_pgl",
    "type_c_adjoint",
    "ExtWeylElement",
]
