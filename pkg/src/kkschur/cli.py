"""Command-line entry point: compute classes, expand products, run verification suites.

Subcommands::

    kkschur compute --group gl --n 3 --class gtilde --w lambda:1
    kkschur structure --n 2 --u lambda:1 --v lambda:1 --basis ideal
    kkschur verify dsum --n 3 --maxlen 5

Exit codes: 0 success, 1 failed verification, 2 bad input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import re
import sys
import time
from dataclasses import dataclass

from . import centralizer, demazure, ext_weyl, nilhecke, peterson, symseries
from .coeff_ring import specialize
from .demazure import CheckReport, DemazureContext
from .root_data import RootDatum, type_a_gl, type_a_pgl, type_a_sl, type_c_adjoint

GROUPS = {"gl": type_a_gl, "sl": type_a_sl, "pgl": type_a_pgl, "c_adjoint": type_c_adjoint}
CLASSES = ("g", "gtilde", "k", "l", "s", "ghat")
SUITES = (
    "braid",
    "dsum",
    "pieri",
    "rectangle",
    "involution",
    "hopf",
    "centralizer",
    "jacobi-trudi",
    "tau-center",
    "cross-rep",
    "variants",
)


class UsageError(ValueError):
    """Bad literal or out-of-range parameter (exit code 2)."""


@dataclass(frozen=True)
class Config:
    group: str = "gl"
    n: int = 3
    cap: int = 8
    basis: str = "h"
    mode: str = "k"
    format: str = "json"

    def __post_init__(self):
        if self.cap < 1:
            raise UsageError("cap must be at least 1")
        if self.n < 2:
            raise UsageError("n must be at least 2")

    @property
    def datum(self) -> RootDatum:
        return GROUPS[self.group](self.n)


def _config(args) -> Config:
    return Config(
        group=getattr(args, "group", "gl"),
        n=args.n,
        cap=args.cap,
        basis=getattr(args, "basis", "h"),
        mode=getattr(args, "mode", "k"),
        format=args.format,
    )


def _partition(text: str) -> tuple[int, ...]:
    parts = tuple(int(x) for x in re.findall(r"-?\d+", text))
    if any(p < 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise UsageError(f"not a partition: {text!r}")
    return tuple(p for p in parts if p)


def _element(d: RootDatum, text: str):
    try:
        return ext_weyl.parse_element(d, text)
    except (ValueError, KeyError, IndexError) as exc:
        raise UsageError(str(exc)) from exc


# -- rendering ------------------------------------------------------------------


def _emit(obj: dict, text: str, cfg_format: str) -> None:
    if cfg_format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _series_text(f: symseries.SymSeries, basis: str) -> str:
    data = symseries.to_schur(f) if basis == "schur" else f.terms
    name = "s" if basis == "schur" else "h"
    keys = sorted(data, key=lambda m: (sum(m), m))
    lines = [f"{name}{list(mu)}: {data[mu]}" for mu in keys]
    return "\n".join(lines) if lines else "0"


def _nil_hecke_text(x: nilhecke.NilHeckeElement) -> str:
    lines = [f"T[{ext_weyl.reduced_word(w)}]: {x.terms[w]}" for w in x.support()]
    return "\n".join(lines) if lines else "0"


# -- compute --------------------------------------------------------------------


def cmd_compute(args) -> int:
    cfg = _config(args)
    cls = args.cls
    if cls in ("s", "ghat"):
        text = args.w.split(":", 1)[1] if ":" in args.w else args.w
        if not args.w.startswith(("mlambda:", "lambda:")):
            raise UsageError("infinite-rank classes take an mlambda: literal")
        lam = _partition(text)
        f = demazure.molev_class(lam, cfg.cap) if cls == "s" else demazure.infinite_class(lam, cfg.cap)
        obj = {"class": cls, "partition": list(lam), "series": f.to_json(cfg.basis)}
        _emit(obj, _series_text(f, cfg.basis), cfg.format)
        return 0
    d = cfg.datum
    w = _element(d, args.w)
    if cls in ("k", "l"):
        value = (peterson.k_class(w) if cls == "k" else peterson.l_class(w)).value
        obj = {"class": cls, "w": w.to_json(), "value": value.to_json()}
        _emit(obj, _nil_hecke_text(value), cfg.format)
        return 0
    if not d.is_type_a:
        raise UsageError("symmetric-series classes exist in type A only")
    if not ext_weyl.is_grassmannian(w):
        raise UsageError("series classes are indexed by Grassmannian elements")
    if cfg.mode == "h":
        if cls != "g":
            raise UsageError("the cohomological mode has only the class g")
        f = demazure.cohomology_class(DemazureContext.h_finite(cfg.n, cfg.cap), w)
    else:
        f = demazure.g_class(DemazureContext.k_finite(cfg.n, cfg.cap), w, closed=cls == "gtilde")
    obj = {"class": cls, "mode": cfg.mode, "w": w.to_json(), "series": f.to_json(cfg.basis)}
    _emit(obj, _series_text(f, cfg.basis), cfg.format)
    return 0


# -- structure ------------------------------------------------------------------


def cmd_structure(args) -> int:
    cfg = _config(args)
    d = cfg.datum
    u, v = _element(d, args.u), _element(d, args.v)
    for x in (u, v):
        if not ext_weyl.is_grassmannian(x):
            raise UsageError("structure constants need Grassmannian u and v")
    kind = peterson.ClassKind(args.basis)
    try:
        coeffs = peterson.expand_product(u, v, kind)
    except ArithmeticError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1
    keys = sorted(coeffs, key=ext_weyl.ExtWeylElement.sort_key)
    obj = {
        "u": u.to_json(),
        "v": v.to_json(),
        "basis": kind.value,
        "terms": [{"w": w.to_json(), "coef": coeffs[w].to_json()} for w in keys],
    }
    text = "\n".join(f"[{ext_weyl.reduced_word(w)}]: {coeffs[w]}" for w in keys) or "0"
    _emit(obj, text, cfg.format)
    return 0


# -- verification suites -------------------------------------------------------


def suite_braid(args) -> CheckReport:
    """Coxeter relations for the group, the T-operators and the series operators."""
    from .ext_weyl import identity, simple_reflection, tau

    n = args.n
    d = type_a_gl(n)
    report = CheckReport("braid")
    I = list(d.affine_index_set)
    s = {i: simple_reflection(d, i) for i in I}
    T = {i: nilhecke.t_basis(d, s[i]) for i in I}
    e = identity(d)
    for i in I:
        report.record(("s^2", i), s[i] * s[i] == e)
        report.record(("T^2", i), T[i] * T[i] == -T[i])
    for i, j in itertools.combinations(I, 2):
        adjacent = (j - i) % n in (1, n - 1)
        if adjacent and n > 2:
            report.record(("braid", i, j), s[i] * s[j] * s[i] == s[j] * s[i] * s[j])
            report.record(("T-braid", i, j), T[i] * T[j] * T[i] == T[j] * T[i] * T[j])
        elif not adjacent:
            report.record(("commute", i, j), s[i] * s[j] == s[j] * s[i])
            report.record(("T-commute", i, j), T[i] * T[j] == T[j] * T[i])
    t = tau(d)
    for i in I:
        report.record(("tau-conjugation", i), t * s[i] * t.inverse() == s[(i + 1) % n])
    ctx = DemazureContext.k_finite(n, min(args.cap, 5))
    f = demazure.g_class(ctx, ext_weyl.rho(d, 1))
    for i in I:
        once = demazure.T_apply(ctx, i, f)
        report.record(("series T^2", i), demazure.T_apply(ctx, i, once) == -once)
        moved = demazure.tau_apply(ctx, 1, demazure.T_apply(ctx, i, demazure.tau_apply(ctx, -1, f)))
        report.record(("series tau-conjugation", i), moved == demazure.T_apply(ctx, (i + 1) % n, f))
    return report


def suite_dsum(args) -> CheckReport:
    """D_w = Σ_{v ≤ w} T_v for Grassmannian w."""
    report = CheckReport("dsum")
    d = type_a_gl(args.n)
    for L in range(args.maxlen + 1):
        for w in ext_weyl.grassmannian_elements(d, L):
            rhs = nilhecke.NilHeckeElement(d, {})
            for v in ext_weyl.bruhat_ideal(w):
                rhs = rhs + nilhecke.t_basis(d, v)
            report.record(w, nilhecke.D_of(w) == rhs)
    return report


def suite_pieri(args) -> CheckReport:
    """Single row/column classes against closed forms, and the Ω-Pieri rules."""
    n, cap = args.n, args.cap
    ctx = DemazureContext.k_finite(n, cap)
    d = ctx.datum
    report = CheckReport("pieri")
    for i in range(1, n):
        row = demazure.g_class(ctx, ext_weyl.rho(d, i))
        col = demazure.g_class(ctx, ext_weyl.rho_prime(d, i))
        report.record(("row", i), row == demazure.special_formula_oracle(ctx, "row", i))
        report.record(("column", i), col == demazure.special_formula_oracle(ctx, "column", i))
        at0 = lambda f: f.map_coefficients(lambda c: specialize(c, "b=0"), None)
        report.record(("row b=0", i), at0(row) == symseries.h(i, cap))
        report.record(("column b=0", i), at0(col) == symseries.omega_tilde_h_closed(i, cap))
    report.absorb(demazure.om_pieri_check(ctx, "corrected"))
    return report


def suite_rectangle(args) -> CheckReport:
    """k-rectangle factorization on the series side and in the nil-Hecke ring."""
    ctx = DemazureContext.k_finite(args.n, args.cap)
    report = demazure.rectangle_factorization_check(ctx, args.maxsize)
    rank = args.nil_hecke_rank or min(args.n, 4)
    for d in (type_a_gl(rank), type_a_pgl(rank)):
        for r in peterson.verify_factorizations(d, max_length=min(args.maxlen, 2)):
            report.record((d.kind, r.name, r.instance), r.passed)
    return report


def suite_involution(args) -> CheckReport:
    """ι̂² = id, ι̂(g_w) = g_{w*} and ι̂(Ω(b_i)) = Ω(b_{n+1-i})^{-1}."""
    n, cap = args.n, args.cap
    ctx = DemazureContext.k_finite(n, cap)
    R = ctx.ring
    report = CheckReport("involution")
    for r in range(1, cap + 1):
        f = symseries.h(r, cap, R)
        report.record(("square", r), demazure.iota_hat(ctx, demazure.iota_hat(ctx, f)) == f)
    for i in range(1, n + 1):
        lhs = demazure.iota_hat(ctx, demazure._omega(ctx, i))
        report.record(("omega", i), demazure.agree_modulo_augmentation(lhs, demazure._omega_inv(ctx, n + 1 - i), cap + 1))
    for L in range(args.maxlen + 1):
        for w in ext_weyl.grassmannian_elements(ctx.datum, L):
            report.record(("class", w), demazure.iota_hat_class_check(ctx, w))
    return report


def random_series(rng: random.Random, degree: int, cap: int, ring=None) -> symseries.SymSeries:
    """Random integer combination of h_μ with |μ| ≤ degree."""
    terms = {}
    for s in range(degree + 1):
        for mu in symseries.partitions(s):
            c = rng.randint(-3, 3)
            if c:
                terms[mu] = c
    f = symseries.zero(cap, ring)
    for mu, c in terms.items():
        f = f + symseries.h_monomial(mu, cap, ring, c)
    return f


def suite_hopf(args) -> CheckReport:
    """Ω is group-like with S(Ω) = Ω^{-1}; axioms on random elements."""
    n, cap = args.n, args.cap
    ctx = DemazureContext.k_finite(n, cap)
    report = CheckReport("hopf")
    for i in range(1, n + 1):
        om = demazure._omega(ctx, i)
        report.record(("coproduct", i), symseries.coproduct(om) == symseries.Tensor.outer(om, om))
        report.record(("antipode", i), symseries.antipode(om) == demazure._omega_inv(ctx, i))
        report.record(("counit", i), symseries.counit(om) == ctx.ring.one)
    rng = random.Random(args.seed)
    for k in range(args.samples):
        f = random_series(rng, 4, 4)
        report.record(("axioms", k), not symseries.hopf_axiom_failures(f))
    report.absorb(demazure.hopf_grouplike_check(ctx))
    return report


def suite_centralizer(args) -> CheckReport:
    report = CheckReport("centralizer")
    checks = (
        centralizer.relation_check,
        centralizer.hhat_lemma_check,
        centralizer.equivariance_check,
        centralizer.sl_quotient_check,
        centralizer.pgl_check,
    )
    for check in checks:
        report.absorb(check(args.n, args.cap))
    return report


def suite_jacobi_trudi(args) -> CheckReport:
    """Operator construction vs both determinants; k-small and RPP oracles."""
    cap = args.cap
    report = CheckReport("jacobi-trudi")
    for s in range(1, args.maxsize + 1):
        for lam in symseries.partitions(s):
            window = demazure.jacobi_trudi_window(lam)
            op = demazure.molev_class(lam, cap, window)
            report.record(("row", lam), op == demazure.jacobi_trudi(lam, "row", cap, window))
            report.record(("col", lam), op == demazure.jacobi_trudi(lam, "col", cap, window))
            if demazure.k_small(lam, args.n):
                report.record(("k-small", lam), demazure.k_small_comparison(lam, args.n, cap))
            N = len(lam) + 1
            poly, pctx = demazure.rpp_oracle(lam, N)
            at0 = demazure.infinite_class_at_zero(lam, max(cap, sum(lam) + N))
            report.record(("rpp", lam), demazure.to_polynomial(at0, pctx) == poly)
    return report


def suite_tau_center(args) -> CheckReport:
    """τⁿ is central: in the group, on ℓ-classes, and on series as Ω(b_1)⋯Ω(b_n)."""
    from .ext_weyl import simple_reflection, tau

    n = args.n
    d = type_a_gl(n)
    report = CheckReport("tau-center")
    tn = tau(d) ** n
    for i in d.affine_index_set:
        s = simple_reflection(d, i)
        report.record(("group", i), tn * s == s * tn)
    for r in peterson.verify_factorizations(d, max_length=min(args.maxlen, 2)):
        if r.name == "central_shift":
            report.record((r.name, r.instance), r.passed)
    report.absorb(demazure.variant_ring_check("PGL", n, args.cap, args.maxlen))
    return report


def suite_cross_rep(args) -> CheckReport:
    return demazure.cross_representation_check(args.n, args.cap, args.maxlen)


def suite_variants(args) -> CheckReport:
    """SL and PGL series rings, and the factorizations for the other root data."""
    report = CheckReport("variants")
    for kind in ("SL", "PGL"):
        report.absorb(demazure.variant_ring_check(kind, args.n, args.cap, min(args.maxlen, 3)))
    for name in ("sl", "pgl", "c_adjoint"):
        d = GROUPS[name](args.n if name != "c_adjoint" else min(args.n, 3))
        for r in peterson.verify_factorizations(d, max_length=min(args.maxlen, 2)):
            report.record((name, r.name, r.instance), r.passed)
    return report


SUITE_FUNCTIONS = {
    "braid": suite_braid,
    "dsum": suite_dsum,
    "pieri": suite_pieri,
    "rectangle": suite_rectangle,
    "involution": suite_involution,
    "hopf": suite_hopf,
    "centralizer": suite_centralizer,
    "jacobi-trudi": suite_jacobi_trudi,
    "tau-center": suite_tau_center,
    "cross-rep": suite_cross_rep,
    "variants": suite_variants,
}


def cmd_verify(args) -> int:
    _config(args)
    start = time.perf_counter()
    report = SUITE_FUNCTIONS[args.suite](args)
    elapsed = time.perf_counter() - start
    obj = report.to_json()
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        status = "pass" if report.passed else "FAIL"
        print(f"{report.name}: {status} ({report.cases} cases, {len(report.failures)} failures, {elapsed:.1f}s)")
        for f in report.failures:
            print(f"  failed: {f}")
    return 0 if report.passed else 1


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kkschur", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("--group", choices=sorted(GROUPS), default="gl")
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--cap", type=int, default=8)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("compute", help="print a Schubert class")
    common(p)
    p.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    p.add_argument("--w", required=True, help="element literal")
    p.add_argument("--basis", choices=("h", "schur"), default="h")
    p.add_argument("--mode", choices=("k", "h"), default="k")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("structure", help="structure constants of a product of classes")
    common(p)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--basis", choices=("ideal", "structure"), default="ideal")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    common(p, group=False)
    p.add_argument("--maxlen", type=int, default=3)
    p.add_argument("--maxsize", type=int, default=4)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument(
        "--nil-hecke-rank",
        type=int,
        default=None,
        help="rank for the nil-Hecke half of the rectangle suite (default min(n, 4))",
    )
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
