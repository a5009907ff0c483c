"""Generalized Boolean functions over Z_q built from products of literals.

A function is stored as a canonical mapping from a set of literals
(plain ``x_k`` or complemented ``~x_k``) to a coefficient in Z_q.  Evaluation
works on the literals directly, so ``x_k`` and ``1 - x_k`` never have to be
expanded into algebraic normal form.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class Literal(NamedTuple):
    index: int
    negated: bool = False

    def __str__(self) -> str:
        return f"~x{self.index}" if self.negated else f"x{self.index}"

    def flipped(self) -> Literal:
        return Literal(self.index, not self.negated)


def x(i: int) -> Literal:
    return Literal(i, False)


def xbar(i: int) -> Literal:
    return Literal(i, True)


@dataclass(frozen=True)
class Term:
    coefficient: int
    literals: frozenset[Literal]

    def __post_init__(self) -> None:
        seen = set()
        for lit in self.literals:
            if lit.index in seen:
                raise ValueError(f"term repeats variable x{lit.index}")
            seen.add(lit.index)

    @classmethod
    def of(cls, coefficient: int, *literals: Literal) -> Term:
        if len(set(literals)) != len(literals):
            raise ValueError("term repeats a literal")
        return cls(coefficient, frozenset(literals))


def _term_key(lits: frozenset[Literal]) -> tuple:
    return (len(lits), sorted(lits))


@dataclass(frozen=True)
class GeneralizedBooleanFunction:
    """A map Z_2^m -> Z_q written as a sum of weighted literal products.

    Duplicate monomials are merged (coefficients summed mod q) and zero
    coefficients dropped, so two functions with the same terms compare equal.
    """

    m: int
    q: int
    terms: tuple[Term, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.q < 2 or self.q % 2:
            raise ValueError(f"q must be an even integer >= 2, got {self.q}")
        merged: dict[frozenset[Literal], int] = {}
        for t in self.terms:
            for lit in t.literals:
                if not 0 <= lit.index < self.m:
                    raise ValueError(f"literal {lit} out of range for m={self.m}")
            merged[t.literals] = (merged.get(t.literals, 0) + t.coefficient) % self.q
        canon = tuple(
            Term(c, lits)
            for lits, c in sorted(merged.items(), key=lambda kv: _term_key(kv[0]))
            if c
        )
        object.__setattr__(self, "terms", canon)

    @classmethod
    def from_terms(cls, m: int, q: int, terms: Iterable[Term]) -> GeneralizedBooleanFunction:
        return cls(m, q, tuple(terms))

    def __add__(self, other: GeneralizedBooleanFunction) -> GeneralizedBooleanFunction:
        if (self.m, self.q) != (other.m, other.q):
            raise ValueError("cannot add functions with different m or q")
        return GeneralizedBooleanFunction(self.m, self.q, self.terms + other.terms)

    def plus(self, coefficient: int, *literals: Literal) -> GeneralizedBooleanFunction:
        return GeneralizedBooleanFunction(
            self.m, self.q, self.terms + (Term.of(coefficient, *literals),)
        )

    def __neg__(self) -> GeneralizedBooleanFunction:
        return GeneralizedBooleanFunction(
            self.m, self.q, tuple(Term(-t.coefficient, t.literals) for t in self.terms)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            lits = "*".join(str(l) for l in sorted(t.literals))
            if not lits:
                parts.append(str(t.coefficient))
            elif t.coefficient == 1:
                parts.append(lits)
            else:
                parts.append(f"{t.coefficient}*{lits}")
        return " + ".join(parts)


@dataclass(frozen=True)
class PhaseSequence:
    """Exponents of omega = exp(2*pi*i/q); phase p stands for omega**p."""

    q: int
    phases: tuple[int, ...]

    def __post_init__(self) -> None:
        arr = np.asarray(self.phases, dtype=np.int64).ravel()
        if arr.size == 0:
            raise ValueError("sequence must be non-empty")
        if arr.min() < 0 or arr.max() >= self.q:
            raise ValueError(f"phases must lie in [0, {self.q})")
        object.__setattr__(self, "phases", tuple(arr.tolist()))

    def __len__(self) -> int:
        return len(self.phases)

    def __getitem__(self, i):
        return self.phases[i]

    def array(self) -> np.ndarray:
        return np.asarray(self.phases, dtype=np.int64)

    def signs(self) -> str:
        if self.q != 2:
            raise ValueError("sign glyphs only exist for q=2")
        return "".join("+" if p == 0 else "-" for p in self.phases)

    def negated(self) -> PhaseSequence:
        """Phase-wise negation, i.e. complex conjugation of omega**p."""
        return PhaseSequence(self.q, tuple((-p) % self.q for p in self.phases))

    def reversed(self) -> PhaseSequence:
        return PhaseSequence(self.q, self.phases[::-1])

    @classmethod
    def from_signs(cls, text: str) -> PhaseSequence:
        bad = [i for i, ch in enumerate(text) if ch not in "+-"]
        if bad:
            raise ValueError(f"invalid sign symbol {text[bad[0]]!r} at offset {bad[0]}")
        return cls(2, tuple(0 if ch == "+" else 1 for ch in text))


def _check_assignment(f: GeneralizedBooleanFunction, bits: Sequence[int]) -> None:
    if len(bits) != f.m:
        raise ValueError(f"assignment has {len(bits)} bits, function has m={f.m}")


def evaluate(f: GeneralizedBooleanFunction, bits: Sequence[int]) -> int:
    _check_assignment(f, bits)
    total = 0
    for t in f.terms:
        v = t.coefficient
        for lit in t.literals:
            b = bits[lit.index] & 1
            if (1 - b if lit.negated else b) == 0:
                v = 0
                break
        total += v
    return total % f.q


def bits_of(i: int, m: int) -> tuple[int, ...]:
    """Little-endian bit vector: entry j is bit j of i."""
    return tuple((i >> j) & 1 for j in range(m))


@lru_cache(maxsize=32)
def _bit_matrix(m: int) -> np.ndarray:
    idx = np.arange(1 << m, dtype=np.int64)
    r = (idx[:, None] >> np.arange(m, dtype=np.int64)[None, :]) & 1
    r.setflags(write=False)
    return r


def to_sequence(f: GeneralizedBooleanFunction) -> PhaseSequence:
    r = _bit_matrix(f.m)
    acc = np.zeros(1 << f.m, dtype=np.int64)
    for t in f.terms:
        prod = np.ones(1 << f.m, dtype=np.int64)
        for lit in t.literals:
            col = r[:, lit.index]
            prod &= (1 - col) if lit.negated else col
        acc += t.coefficient * prod
    return PhaseSequence(f.q, acc % f.q)


def truncate(s: PhaseSequence, L: int) -> PhaseSequence:
    if L < 0:
        raise ValueError("truncation amount must be non-negative")
    if 2 * L >= len(s):
        raise ValueError(f"cannot drop 2*{L} entries from a length-{len(s)} sequence")
    return PhaseSequence(s.q, s.phases[L : len(s) - L])


def complement_all_vars(f: GeneralizedBooleanFunction) -> GeneralizedBooleanFunction:
    return GeneralizedBooleanFunction(
        f.m,
        f.q,
        tuple(
            Term(t.coefficient, frozenset(l.flipped() for l in t.literals))
            for t in f.terms
        ),
    )


def expand_anf(f: GeneralizedBooleanFunction) -> GeneralizedBooleanFunction:
    """Rewrite with plain literals only (x̄ = 1 - x, expanded mod q).

    Not used by the constructions; handy for comparing against ANF tables.
    """
    out: dict[frozenset[Literal], int] = {}
    for t in f.terms:
        plain = [l for l in t.literals if not l.negated]
        neg = [l.index for l in t.literals if l.negated]
        # prod(1 - x_j) = sum over subsets S of (-1)^|S| prod_{j in S} x_j
        for mask in range(1 << len(neg)):
            chosen = [Literal(neg[k]) for k in range(len(neg)) if mask >> k & 1]
            sign = -1 if len(chosen) % 2 else 1
            key = frozenset(plain + chosen)
            out[key] = (out.get(key, 0) + sign * t.coefficient) % f.q
    return GeneralizedBooleanFunction(f.m, f.q, tuple(Term(c, k) for k, c in out.items()))


# ---------------------------------------------------------------------------
# text formats

_HEADER = re.compile(r"^\s*m\s*=\s*(\d+)\s+q\s*=\s*(\d+)\s*$")
_LIT = re.compile(r"^(~?)x(\d+)$")


def parse_gbf(text: str) -> GeneralizedBooleanFunction:
    """Parse ``m=<m> q=<q>`` followed by one ``coeff * lit lit ...`` per line.

    Blank lines and ``#`` comments are skipped.  A line holding just a
    coefficient is a constant term.
    """
    header = None
    terms: list[Term] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            mh = _HEADER.match(line)
            if not mh:
                raise ValueError(f"line {lineno}: expected header 'm=<m> q=<q>'")
            header = (int(mh.group(1)), int(mh.group(2)))
            continue
        coeff_txt, _, rest = line.partition("*")
        try:
            coeff = int(coeff_txt.strip())
        except ValueError:
            raise ValueError(f"line {lineno}: bad coefficient {coeff_txt.strip()!r}") from None
        lits = []
        for tok in rest.split():
            ml = _LIT.match(tok)
            if not ml:
                raise ValueError(f"line {lineno}: bad literal {tok!r}")
            lits.append(Literal(int(ml.group(2)), ml.group(1) == "~"))
        try:
            terms.append(Term.of(coeff, *lits))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if header is None:
        raise ValueError("missing header 'm=<m> q=<q>'")
    return GeneralizedBooleanFunction(header[0], header[1], tuple(terms))


def format_gbf(f: GeneralizedBooleanFunction) -> str:
    lines = [f"m={f.m} q={f.q}"]
    for t in f.terms:
        lits = " ".join(str(l) for l in sorted(t.literals))
        lines.append(f"{t.coefficient} * {lits}" if lits else str(t.coefficient))
    return "\n".join(lines) + "\n"


def format_sequence(s: PhaseSequence) -> str:
    if s.q == 2:
        return s.signs()
    return ",".join(str(p) for p in s.phases)


def parse_sequence(text: str, q: int = 2) -> PhaseSequence:
    text = text.strip()
    if q == 2 and "," not in text:
        return PhaseSequence.from_signs(text)
    out = []
    offset = 0
    for tok in text.split(","):
        stripped = tok.strip()
        if not stripped.lstrip("-").isdigit():
            raise ValueError(f"invalid phase {stripped!r} at offset {offset}")
        out.append(int(stripped) % q)
        offset += len(tok) + 1
    return PhaseSequence(q, tuple(out))
