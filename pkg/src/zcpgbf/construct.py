"""Constructions: Golay pairs with their mates, and direct EB-ZCPs from GBFs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .gbf import (
    GeneralizedBooleanFunction,
    PhaseSequence,
    Term,
    complement_all_vars,
    to_sequence,
    truncate,
    x,
    xbar,
)


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(i) for i in self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{list(image)} is not a permutation of 0..{len(image) - 1}")
        object.__setattr__(self, "image", image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __len__(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(k)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))


@dataclass(frozen=True)
class SequencePair:
    a: PhaseSequence
    b: PhaseSequence

    def __post_init__(self) -> None:
        if self.a.q != self.b.q:
            raise ValueError(f"q mismatch: {self.a.q} vs {self.b.q}")
        if len(self.a) != len(self.b):
            raise ValueError(f"length mismatch: {len(self.a)} vs {len(self.b)}")

    @property
    def q(self) -> int:
        return self.a.q

    def __len__(self) -> int:
        return len(self.a)


def _as_perm(pi) -> Permutation:
    return pi if isinstance(pi, Permutation) else Permutation(tuple(pi))


@dataclass(frozen=True)
class Theorem1Params:
    """Parameters of the direct EB-ZCP construction.

    ``e`` and ``f_off`` are the Z_q coefficients of the affine offsets on
    x_0..x_{m-3} and their complements; both default to zero.
    """

    m: int
    q: int = 2
    pi: Permutation | Sequence[int] | None = None
    e: tuple[int, ...] | None = None
    f_off: tuple[int, ...] | None = None
    experimental_m3: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.m < 4 and not (self.m == 3 and self.experimental_m3):
            raise ValueError(f"m must be >= 4 (got m={self.m})")
        if self.q < 2 or self.q % 2:
            raise ValueError(f"q must be an even integer >= 2 (got q={self.q})")
        k = self.m - 2
        pi = Permutation.identity(k) if self.pi is None else _as_perm(self.pi)
        if len(pi) != k:
            raise ValueError(f"pi must permute 0..{k - 1} (m-2={k} entries), got {len(pi)}")
        object.__setattr__(self, "pi", pi)
        for name in ("e", "f_off"):
            v = getattr(self, name)
            v = (0,) * k if v is None else tuple(int(c) % self.q for c in v)
            if len(v) != k:
                raise ValueError(f"{name} must have m-2={k} entries, got {len(v)}")
            object.__setattr__(self, name, v)

    @property
    def length(self) -> int:
        return 2 ** (self.m - 1) + 2

    @property
    def truncation(self) -> int:
        return 2 ** (self.m - 2) - 1


def _chain_terms(pi: Permutation, negated: bool) -> list[tuple]:
    lit = xbar if negated else x
    return [(lit(pi(a)), lit(pi(a + 1))) for a in range(len(pi) - 1)]


def zeta_terms(p: Theorem1Params, d: int) -> list[tuple]:
    """Z_2 monomials of zeta^d: the path x_pi(a) x_pi(a+1) plus d*x_pi(last)."""
    out = _chain_terms(p.pi, negated=False)
    if d:
        out.append((x(p.pi(p.m - 3)),))
    return out


def eta_terms(p: Theorem1Params, d: int) -> list[tuple]:
    """Z_2 monomials of eta^d: complemented path plus (1-d)*x_pi(last)."""
    out = _chain_terms(p.pi, negated=True)
    if not d:
        out.append((x(p.pi(p.m - 3)),))
    return out


def theorem1_gbf(p: Theorem1Params, d: int) -> GeneralizedBooleanFunction:
    if d not in (0, 1):
        raise ValueError("d must be 0 or 1")
    m, q = p.m, p.q
    h = q // 2
    u, v = m - 2, m - 1
    terms: list[Term] = []
    for mono in zeta_terms(p, d):
        terms.append(Term.of(h, x(u), xbar(v), *mono))
    for mono in eta_terms(p, d):
        terms.append(Term.of(h, xbar(u), x(v), *mono))
    if d:
        terms.append(Term.of(h, xbar(u), xbar(v)))
    terms.append(Term.of(h, x(u), x(v)))
    for i in range(m - 2):
        terms.append(Term.of(p.e[i], x(i)))
        terms.append(Term.of(p.f_off[i], xbar(i)))
    return GeneralizedBooleanFunction(m, q, tuple(terms))


def theorem1_pair(p: Theorem1Params) -> SequencePair:
    L = p.truncation
    a = truncate(to_sequence(theorem1_gbf(p, 0)), L)
    b = truncate(to_sequence(theorem1_gbf(p, 1)), L)
    return SequencePair(a, b)


def claimed_zcz(p: Theorem1Params) -> int:
    if p.m < 4:
        raise ValueError("no ZCZ width is claimed for m < 4")
    return 2 ** (p.m - 2) + 2 ** p.pi(p.m - 3) + 1


def gdj_gbf(
    m: int,
    q: int,
    pi: Permutation | Sequence[int],
    g: Sequence[int] | None = None,
    g_const: int = 0,
) -> GeneralizedBooleanFunction:
    """Quadratic path form (q/2) sum x_pi(a) x_pi(a+1) + sum g_i x_i + g'."""
    if m < 2:
        raise ValueError("m must be >= 2")
    pi = _as_perm(pi)
    if len(pi) != m:
        raise ValueError(f"pi must permute 0..{m - 1}")
    g = (0,) * m if g is None else tuple(g)
    if len(g) != m:
        raise ValueError(f"g must have {m} entries")
    terms = [Term.of(q // 2, x(pi(a)), x(pi(a + 1))) for a in range(m - 1)]
    terms += [Term.of(g[i], x(i)) for i in range(m)]
    terms.append(Term.of(g_const))
    return GeneralizedBooleanFunction(m, q, tuple(terms))


def gcp_pair(f: GeneralizedBooleanFunction, pi: Permutation | Sequence[int]) -> SequencePair:
    pi = _as_perm(pi)
    last = pi(len(pi) - 1)
    return SequencePair(to_sequence(f), to_sequence(f.plus(f.q // 2, x(last))))


def mate_pair(f: GeneralizedBooleanFunction, pi: Permutation | Sequence[int]) -> SequencePair:
    """Complementary mate (Psi(fbar + (q/2) x_last), Psi(fbar)), conjugated.

    For q = 2 conjugation is the identity.  For q > 2 the phases are negated
    so the mate property holds under the conjugating cross-correlation used
    throughout this package.
    """
    pi = _as_perm(pi)
    last = pi(len(pi) - 1)
    fbar = complement_all_vars(f)
    c = to_sequence(fbar.plus(f.q // 2, x(last)))
    d = to_sequence(fbar)
    return SequencePair(c.negated(), d.negated())
