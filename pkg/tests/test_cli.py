"""Command-line interface: outputs, exit codes and determinism."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from kkschur import cli, ext_weyl as X
from kkschur.peterson import ClassKind, coefficient_ring, expand_product
from kkschur.root_data import type_a_gl

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


# -- compute -------------------------------------------------------------------


def test_compute_identity_is_one(capsys):
    obj = run_json(capsys, "compute", "--n", "3", "--class", "g", "--w", "word:", "--cap", "3")
    terms = obj["series"]["terms"]
    assert len(terms) == 1 and terms[0]["partition"] == []


def test_compute_tau_is_omega_text(capsys):
    code, out, _ = run(capsys, "compute", "--n", "3", "--class", "g", "--w", "word:pi^1:", "--cap", "2", "--format", "text")
    assert code == 0
    assert out.splitlines() == ["h[]: 1", "h[1]: 1 - e^(-1a1)", "h[2]: 1 - 2*e^(-1a1) + e^(-2a1)"]


def test_compute_gtilde_linear_term(capsys):
    obj = run_json(capsys, "compute", "--n", "3", "--class", "gtilde", "--w", "lambda:1", "--cap", "1")
    by_part = {tuple(t["partition"]): t["coef"] for t in obj["series"]["terms"]}
    assert by_part[(1,)] == {"rank": 3, "terms": [{"coef": "1", "exp": [0, 0, -1]}]}


def test_compute_molev_schur_basis(capsys):
    obj = run_json(capsys, "compute", "--class", "s", "--w", "lambda:2,1", "--cap", "3", "--basis", "schur")
    by_part = {tuple(t["partition"]): t["coef"]["terms"] for t in obj["series"]["terms"]}
    assert by_part == {(2, 1): [{"coef": "1", "exp": [0] * len(by_part[(2, 1)][0]["exp"])}]}


def test_compute_cohomological_mode(capsys):
    obj = run_json(capsys, "compute", "--n", "3", "--class", "g", "--mode", "h", "--w", "lambda:1,1", "--cap", "2", "--basis", "schur")
    assert obj["mode"] == "h"
    assert [t["partition"] for t in obj["series"]["terms"]] == [[1, 1]]


def test_compute_nil_hecke_class(capsys):
    obj = run_json(capsys, "compute", "--n", "2", "--class", "k", "--w", "word:0")
    assert obj["class"] == "k" and obj["value"]


# -- structure -----------------------------------------------------------------


def test_structure_matches_golden(capsys):
    obj = run_json(capsys, "structure", "--n", "2", "--u", "word:0", "--v", "word:0")
    expected = json.loads((GOLDEN / "k_s0_squared_n2.json").read_text())
    got = [{"word": t["w"]["word"], "coef": t["coef"]} for t in obj["terms"]]
    assert got == expected["terms"]


def test_structure_with_identity(capsys):
    obj = run_json(capsys, "structure", "--n", "3", "--u", "word:", "--v", "lambda:2")
    assert len(obj["terms"]) == 1
    assert obj["terms"][0]["w"]["word"] == list(X.reduced_word(X.partition_to_grassmannian(type_a_gl(3), (2,))).word)
    assert obj["terms"][0]["coef"] == {"rank": 3, "terms": [{"coef": "1", "exp": [0, 0, 0]}]}


@pytest.mark.parametrize("u,v", [((1,), (1,)), ((1,), (2,)), ((2,), (1, 1))])
def test_structure_bases_related_by_bruhat_sums(u, v):
    # closed classes are Bruhat-ideal sums of the ideal classes: g̃_w = Σ_{x ≤ w} g_x
    d = type_a_gl(3)
    R = coefficient_ring(d)
    U, V = X.partition_to_grassmannian(d, u), X.partition_to_grassmannian(d, v)

    def below(w):
        return [x for x in X.bruhat_ideal(w) if X.is_grassmannian(x)]

    lhs: dict = {}
    for x, c in expand_product(U, V, ClassKind.STRUCTURE).items():
        for y in below(x):
            lhs[y] = lhs.get(y, R.zero) + c
    rhs: dict = {}
    for u2 in below(U):
        for v2 in below(V):
            for y, c in expand_product(u2, v2, ClassKind.IDEAL).items():
                rhs[y] = rhs.get(y, R.zero) + c
    keys = set(lhs) | set(rhs)
    assert all(lhs.get(k, R.zero) == rhs.get(k, R.zero) for k in keys)


# -- verify --------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["dsum", "--n", "3", "--maxlen", "4"],
        ["braid", "--n", "4"],
        ["pieri", "--n", "4", "--cap", "6"],
        ["involution", "--n", "3", "--cap", "6", "--maxlen", "3"],
        ["hopf", "--cap", "5", "--samples", "3"],
        ["centralizer", "--n", "3", "--cap", "6"],
        ["jacobi-trudi", "--cap", "5", "--maxsize", "3"],
        ["tau-center", "--n", "3", "--cap", "5"],
        ["cross-rep", "--n", "3", "--cap", "6", "--maxlen", "3"],
        ["rectangle", "--n", "3", "--cap", "6"],
    ],
)
def test_verify_suites_pass(capsys, argv):
    obj = run_json(capsys, "verify", *argv)
    assert obj["failures"] == [] and obj["cases"] > 0


@pytest.mark.slow
def test_verify_rectangle_rank_five(capsys):
    obj = run_json(capsys, "verify", "rectangle", "--n", "5", "--cap", "6", "--maxsize", "4")
    assert obj["failures"] == []


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "dsum", "--n", "3", "--maxlen", "2", "--format", "text")
    assert code == 0 and "dsum" in out


# -- exit codes and determinism ------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--class", "g", "--w", "bogus"],
        ["compute", "--class", "g", "--w", "lambda:1,2"],
        ["compute", "--class", "g", "--w", "word:1"],
        ["compute", "--class", "g", "--w", "lambda:1", "--cap", "0"],
        ["verify", "no-such-suite"],
        ["structure", "--u", "word:1", "--v", "word:0"],
    ],
)
def test_bad_input_exits_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_output_is_deterministic(capsys):
    argv = ["structure", "--n", "3", "--u", "lambda:1", "--v", "lambda:2", "--basis", "structure"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kkschur.cli", "verify", "dsum", "--n", "3", "--maxlen", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["suite"] == "dsum"
