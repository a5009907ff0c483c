"""Shared oracles and strategies.

The oracles here are deliberately naive (explicit Python loops, complex
floats only where noted) and share no code with the package internals.
"""

from __future__ import annotations

import cmath

import pytest
from hypothesis import strategies as st

from zcpgbf.gbf import GeneralizedBooleanFunction, Literal, PhaseSequence, Term

ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}{': ' + detail if detail else ''}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# oracles


def pm1(s: PhaseSequence) -> list[int]:
    return [1 if p == 0 else -1 for p in s.phases]


def brute_binary_accf(a: list[int], b: list[int], tau: int) -> int:
    """Plain +-1 dot product over the overlapping window."""
    n = len(a)
    if tau >= n or -tau >= n:
        return 0
    if tau >= 0:
        return sum(a[k] * b[k + tau] for k in range(n - tau))
    return sum(a[k - tau] * b[k] for k in range(n + tau))


def brute_multiplicities(a: PhaseSequence, b: PhaseSequence, tau: int) -> list[int]:
    q, n = a.q, len(a)
    c = [0] * q
    for k in range(n):
        j = k + tau
        if 0 <= j < n:
            c[(a.phases[k] - b.phases[j]) % q] += 1
    return c


def brute_complex_accf(a: PhaseSequence, b: PhaseSequence, tau: int) -> complex:
    w = cmath.exp(2j * cmath.pi / a.q)
    return sum(cnt * w**k for k, cnt in enumerate(brute_multiplicities(a, b, tau)))


def brute_aacs(a: PhaseSequence, b: PhaseSequence) -> list[int]:
    """Integer AACS of a binary pair."""
    x, y = pm1(a), pm1(b)
    return [brute_binary_accf(x, x, t) + brute_binary_accf(y, y, t) for t in range(len(x))]


def brute_zcz(values: list[int]) -> int:
    for t in range(1, len(values)):
        if values[t] != 0:
            return t
    return len(values)


def brute_eval(f: GeneralizedBooleanFunction, i: int) -> int:
    """Evaluate term by term from the integer index, LSB = x_0."""
    total = 0
    for t in f.terms:
        prod = 1
        for lit in t.literals:
            bit = (i >> lit.index) & 1
            prod *= (1 - bit) if lit.negated else bit
        total += t.coefficient * prod
    return total % f.q


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def gbfs(draw, max_m: int = 6, qs=(2, 4, 6, 8)):
    m = draw(st.integers(1, max_m))
    q = draw(st.sampled_from(qs))
    terms = []
    for _ in range(draw(st.integers(0, 8))):
        idx = draw(st.lists(st.integers(0, m - 1), unique=True, max_size=min(m, 4)))
        lits = [Literal(i, draw(st.booleans())) for i in idx]
        terms.append(Term.of(draw(st.integers(-q, 2 * q)), *lits))
    return GeneralizedBooleanFunction(m, q, tuple(terms))


@st.composite
def phase_pairs(draw, max_n: int = 40, qs=(2, 4, 6, 8, 10, 12)):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(1, max_n))
    seq = st.lists(st.integers(0, q - 1), min_size=n, max_size=n)
    return PhaseSequence(q, tuple(draw(seq))), PhaseSequence(q, tuple(draw(seq)))


@pytest.fixture
def example1_f():
    from zcpgbf.gbf import x

    return GeneralizedBooleanFunction(
        3, 2, (Term.of(1, x(0), x(1)), Term.of(1, x(1), x(2)))
    )
