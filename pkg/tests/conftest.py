from __future__ import annotations

import pytest
from hypothesis import strategies as st

from codequiv import codes
from codequiv import f2linalg as la
from codequiv.f2linalg import BitMatrix

_CRITERIA: list[tuple[str, bool, str]] = []


def span(rows) -> set[int]:
    """Brute-force row span as a set of int codewords (independent oracle)."""
    out = {0}
    for r in rows:
        out |= {v ^ r for v in out}
    return out


def brute_weights(rows, n) -> list[int]:
    counts = [0] * (n + 1)
    for v in span(rows):
        counts[bin(v).count("1")] += 1
    return counts


@st.composite
def bit_matrices(draw, max_rows=8, max_cols=12, min_rows=0, min_cols=1):
    nrows = draw(st.integers(min_rows, max_rows))
    ncols = draw(st.integers(min_cols, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    return BitMatrix(tuple(rows), ncols)


@st.composite
def linear_codes(draw, max_n=16, max_k=8):
    M = draw(bit_matrices(max_rows=max_k, max_cols=max_n))
    return codes.from_generator(M)


@st.composite
def permutations_of(draw, n):
    return la.Permutation(tuple(draw(st.permutations(range(n)))))


@pytest.fixture
def rng():
    return la.make_rng(20240611)


@pytest.fixture(scope="session")
def criteria():
    return _CRITERIA


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
