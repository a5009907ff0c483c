"""Exact aperiodic correlation over q-th roots of unity.

A correlation value sum_k c_k * omega**k is kept as its integer multiplicity
vector ``c`` (length q).  Zero tests reduce that vector modulo the q-th
cyclotomic polynomial, so no floating point enters any pass/fail decision.

Convention: ``accf(a, b, tau) = sum_k omega**(a_k - b_{k+tau})`` for tau >= 0,
which for q = 2 is the usual (-1)**(a_k + b_{k+tau}).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gbf import PhaseSequence


# ---------------------------------------------------------------------------
# cyclotomic reduction


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists are lowest degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    return quot, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(num)


def _is_power_of_two(q: int) -> bool:
    return q > 0 and q & (q - 1) == 0


def reduce_multiplicities(counts: np.ndarray, q: int) -> np.ndarray:
    """Remainder of sum_k counts[..., k] x^k modulo Phi_q, row-wise.

    For q a power of two Phi_q = x^(q/2) + 1, and the remainder is the fold
    ``counts[:q/2] - counts[q/2:]``.
    """
    counts = np.asarray(counts, dtype=np.int64)
    if q == 1:
        return counts.sum(axis=-1, keepdims=True)
    if _is_power_of_two(q):
        h = q // 2
        return counts[..., :h] - counts[..., h:]
    phi = np.asarray(cyclotomic_poly(q), dtype=np.int64)
    deg = len(phi) - 1
    work = counts.copy()
    for k in range(q - 1, deg - 1, -1):
        lead = work[..., k].copy()
        work[..., k - deg : k + 1] -= lead[..., None] * phi
    return work[..., :deg]


@dataclass(frozen=True)
class CorrelationValue:
    q: int
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.multiplicities) != self.q:
            raise ValueError(f"need {self.q} multiplicities, got {len(self.multiplicities)}")
        object.__setattr__(self, "multiplicities", tuple(int(c) for c in self.multiplicities))

    @classmethod
    def zero(cls, q: int) -> CorrelationValue:
        return cls(q, (0,) * q)

    @classmethod
    def integer(cls, value: int, q: int) -> CorrelationValue:
        c = [0] * q
        if value >= 0:
            c[0] = value
        else:
            c[q // 2] = -value
        return cls(q, tuple(c))

    def __add__(self, other: CorrelationValue) -> CorrelationValue:
        if self.q != other.q:
            raise ValueError("q mismatch")
        return CorrelationValue(
            self.q, tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities))
        )

    def __neg__(self) -> CorrelationValue:
        return CorrelationValue(self.q, tuple(-c for c in self.multiplicities))

    def __sub__(self, other: CorrelationValue) -> CorrelationValue:
        return self + (-other)

    def conjugate(self) -> CorrelationValue:
        c = self.multiplicities
        return CorrelationValue(self.q, tuple(c[(-k) % self.q] for k in range(self.q)))

    def reduced(self) -> tuple[int, ...]:
        return tuple(reduce_multiplicities(np.array(self.multiplicities), self.q).tolist())

    def equals(self, other: CorrelationValue) -> bool:
        """Value equality (multiplicity vectors may differ)."""
        return is_zero(self - other)

    def complex(self) -> complex:
        k = np.arange(self.q)
        return complex(np.dot(self.multiplicities, np.exp(2j * np.pi * k / self.q)))

    def exact_parts(self) -> tuple[int, int] | None:
        """(re, im) as integers when q is 2 or 4, else None."""
        c = self.multiplicities
        if self.q == 2:
            return c[0] - c[1], 0
        if self.q == 4:
            return c[0] - c[2], c[1] - c[3]
        return None

    def norm(self) -> int | float:
        """|value|**2, exact when q in {2, 4, 6} where Z[omega] has integer norms."""
        parts = self.exact_parts()
        if parts is not None:
            return parts[0] ** 2 + parts[1] ** 2
        if self.q == 6:
            # a + b*w with w**2 = w - 1 and w + conj(w) = 1
            a, b = reduce_multiplicities(np.array(self.multiplicities), 6).tolist()
            return a * a + a * b + b * b
        return abs(self.complex()) ** 2

    def as_int(self) -> int:
        """Exact integer value; raises if the value is not a rational integer."""
        r = self.reduced()
        if any(r[1:]):
            raise ValueError("correlation value is not a rational integer")
        return r[0]

    def __str__(self) -> str:
        parts = self.exact_parts()
        if parts is not None:
            re_, im = parts
            return str(re_) if im == 0 else f"{re_}{im:+d}i"
        return f"{self.complex():.6g}"


def is_zero(v: CorrelationValue) -> bool:
    return not reduce_multiplicities(np.array(v.multiplicities), v.q).any()


def magnitude(v: CorrelationValue) -> float:
    n = v.norm()
    return math.sqrt(n) if isinstance(n, int) else abs(v.complex())


# ---------------------------------------------------------------------------
# correlation


def _check_pair(a: PhaseSequence, b: PhaseSequence) -> None:
    if a.q != b.q:
        raise ValueError(f"q mismatch: {a.q} vs {b.q}")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")


def accf(a: PhaseSequence, b: PhaseSequence, tau: int) -> CorrelationValue:
    _check_pair(a, b)
    n, q = len(a), a.q
    if abs(tau) >= n:
        return CorrelationValue.zero(q)
    x, y = a.array(), b.array()
    if tau >= 0:
        d = x[: n - tau] - y[tau:]
    else:
        d = x[-tau:] - y[: n + tau]
    return CorrelationValue(q, tuple(np.bincount(d % q, minlength=q).tolist()))


def aacf(a: PhaseSequence, tau: int) -> CorrelationValue:
    return accf(a, a, tau)


@lru_cache(maxsize=64)
def _shift_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    # all (k, tau) with 0 <= tau < n, 0 <= k < n - tau
    tau = np.repeat(np.arange(n), np.arange(n, 0, -1))
    start = np.concatenate(([0], np.cumsum(np.arange(n, 0, -1))[:-1]))
    k = np.arange(tau.size) - np.repeat(start, np.arange(n, 0, -1))
    tau.setflags(write=False)
    k.setflags(write=False)
    return k, tau


def _lagged(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    # sum_k x_k y_{k+tau} for tau = 0..n-1, integer exact
    return np.correlate(y, x, "full")[len(x) - 1 :]


def _counts_direct(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    n = len(a)
    k, tau = _shift_index(n)
    d = (a[k] - b[k + tau]) % q
    return np.bincount(tau * q + d, minlength=n * q).reshape(n, q)


def _counts_q2_q4(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    # Recover the multiplicities from integer correlations of +-1 / +-i sequences:
    # total T, parity P = (c0 + c2) - (c1 + c3), and for q=4 re = c0 - c2, im = c1 - c3.
    n = len(a)
    total = np.arange(n, 0, -1, dtype=np.int64)
    sa, sb = 1 - 2 * (a & 1), 1 - 2 * (b & 1)
    par = _lagged(sa, sb)
    if q == 2:
        return np.stack([(total + par) // 2, (total - par) // 2], axis=1)
    unit_re = np.array([1, 0, -1, 0], dtype=np.int64)
    unit_im = np.array([0, 1, 0, -1], dtype=np.int64)
    ar, ai, br, bi = unit_re[a], unit_im[a], unit_re[b], unit_im[b]
    re = _lagged(ar, br) + _lagged(ai, bi)
    im = _lagged(ai, br) - _lagged(ar, bi)
    even, odd = (total + par) // 2, (total - par) // 2
    return np.stack([(even + re) // 2, (odd + im) // 2, (even - re) // 2, (odd - im) // 2], axis=1)


def correlation_counts(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """Multiplicity matrix M[tau, j] = #{k : a_k - b_{k+tau} = j mod q}."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if q in (2, 4):
        return _counts_q2_q4(a, b, q)
    return _counts_direct(a, b, q)


@dataclass(frozen=True, eq=False)
class AacsProfile:
    """rho_a(tau) + rho_b(tau) for tau = 0..N-1, as an (N, q) multiplicity matrix."""

    q: int
    counts: np.ndarray

    @property
    def N(self) -> int:
        return self.counts.shape[0]

    @property
    def values(self) -> list[CorrelationValue]:
        return [CorrelationValue(self.q, tuple(row)) for row in self.counts.tolist()]

    def __getitem__(self, tau: int) -> CorrelationValue:
        return CorrelationValue(self.q, tuple(self.counts[tau].tolist()))

    def __len__(self) -> int:
        return self.N

    def zero_mask(self) -> np.ndarray:
        return ~reduce_multiplicities(self.counts, self.q).any(axis=1)

    def integers(self) -> np.ndarray:
        """Real integer values (q=2 only)."""
        if self.q != 2:
            raise ValueError("integer profile only defined for q=2")
        return self.counts[:, 0] - self.counts[:, 1]


def aacs_profile(pair) -> AacsProfile:
    a, b = pair.a, pair.b
    _check_pair(a, b)
    q = a.q
    counts = correlation_counts(a.array(), a.array(), q) + correlation_counts(
        b.array(), b.array(), q
    )
    return AacsProfile(q, counts)


def zcz_width(profile: AacsProfile) -> int:
    zeros = profile.zero_mask()[1:]
    nonzero = np.flatnonzero(~zeros)
    return int(nonzero[0]) + 1 if nonzero.size else profile.N


def profile_rows(profile: AacsProfile) -> list[dict]:
    rows = []
    zero = profile.zero_mask()
    for tau, v in enumerate(profile.values):
        parts = v.exact_parts()
        if parts is None:
            z = v.complex()
            re_, im = z.real, z.imag
        else:
            re_, im = parts
        rows.append(
            {
                "tau": tau,
                "re": re_,
                "im": im,
                "magnitude": magnitude(v),
                "is_zero": bool(zero[tau]),
            }
        )
    return rows


def profile_csv(profile: AacsProfile) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["tau", "re", "im", "magnitude", "is_zero"])
    for r in profile_rows(profile):
        mag = r["magnitude"]
        mag_txt = str(int(mag)) if float(mag).is_integer() else f"{mag:.12g}"
        re_txt = r["re"] if isinstance(r["re"], int) else f"{r['re']:.12g}"
        im_txt = r["im"] if isinstance(r["im"], int) else f"{r['im']:.12g}"
        w.writerow([r["tau"], re_txt, im_txt, mag_txt, str(r["is_zero"]).lower()])
    return buf.getvalue()
