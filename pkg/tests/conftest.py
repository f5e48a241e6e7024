"""Shared hypothesis strategies and settings."""

import os

from hypothesis import HealthCheck, settings, strategies as st

from kkschur.coeff_ring import CoeffRing

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("KKSCHUR_EXAMPLES", "30")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def laurent_polys(n: int, max_terms: int = 4, max_exp: int = 2):
    """Random elements of Z[e^{±a_1}, ..., e^{±a_n}]."""
    ring = CoeffRing.laurent(n)
    exps = st.tuples(*[st.integers(-max_exp, max_exp)] * n)
    terms = st.dictionaries(exps, st.integers(-3, 3), max_size=max_terms)
    return terms.map(ring.from_terms)


# acceptance criteria append (number, status, detail) here; echoed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
