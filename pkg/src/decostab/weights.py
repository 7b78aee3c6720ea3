"""Weight vectors of one-parameter subgroups of SL(r) and mu-weights.

A one-parameter subgroup is encoded, up to choice of basis, by a rational
vector gamma with non-decreasing entries summing to zero.  The dominant cone
of such vectors is spanned by the corner vectors

    corner(r, i) = (i-r, ..., i-r, i, ..., i)      (i copies of i-r),

and every admissible gamma decomposes as
gamma = sum_i ((gamma_{i+1} - gamma_i) / r) * corner(r, i).

The Hilbert-Mumford weight of a decoration with state support S is
mu(S, gamma) = -min over chi in S of <gamma, chi>.  All arithmetic is exact
rational; nothing in this module touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    EmptySupportError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NonZeroSumError,
    NotOrderedError,
    RankOrderError,
)

Rational = int | Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


@dataclass(frozen=True)
class WeightVector:
    """Rational vector gamma with gamma_1 <= ... <= gamma_r and sum 0."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        entries = tuple(_as_fraction(x) for x in entries)
        if any(a > b for a, b in zip(entries, entries[1:])):
            raise NotOrderedError(f"entries not non-decreasing: {entries}")
        if sum(entries, Fraction(0)) != 0:
            raise NonZeroSumError(f"entries do not sum to zero: {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def r(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if len(self.entries) != len(other.entries):
            raise LengthMismatchError("cannot add weight vectors of different rank")
        return WeightVector(a + b for a, b in zip(self.entries, other.entries))

    def __rmul__(self, k) -> "WeightVector":
        k = _as_fraction(k)
        if k < 0:
            raise NotOrderedError("negative rescaling reverses the ordering")
        return WeightVector(k * a for a in self.entries)


def corner_basis(r: int, i: int) -> WeightVector:
    """The i-th corner vector of the dominant cone for SL(r)."""
    if r < 2:
        raise IndexOutOfRangeError(f"rank must be at least 2, got {r}")
    if not 1 <= i <= r - 1:
        raise IndexOutOfRangeError(f"corner index {i} outside 1..{r - 1}")
    return WeightVector([i - r] * i + [i] * (r - i))


def decompose(gamma: WeightVector | Sequence) -> tuple[Fraction, ...]:
    """Coefficients alpha_i >= 0 with gamma = sum alpha_i * corner(r, i)."""
    if not isinstance(gamma, WeightVector):
        gamma = WeightVector(gamma)
    r = gamma.r
    return tuple((gamma[i + 1] - gamma[i]) / r for i in range(r - 1))


def compose(coefficients: Sequence, r: int) -> WeightVector:
    """Inverse of decompose: sum alpha_i * corner(r, i)."""
    coefficients = [_as_fraction(a) for a in coefficients]
    if len(coefficients) != r - 1:
        raise LengthMismatchError(f"expected {r - 1} coefficients, got {len(coefficients)}")
    entries = [Fraction(0)] * r
    for i, a in enumerate(coefficients, start=1):
        for j in range(r):
            entries[j] += a * (i - r if j < i else i)
    return WeightVector(entries)


def _gamma_entries(gamma) -> tuple[Fraction, ...]:
    if isinstance(gamma, WeightVector):
        return gamma.entries
    return tuple(_as_fraction(x) for x in gamma)


def pairing(gamma, chi: Sequence[int]) -> Fraction:
    """Natural pairing <gamma, chi> = sum gamma_i * chi_i."""
    g = _gamma_entries(gamma)
    if len(g) != len(chi):
        raise LengthMismatchError(f"weight vector has length {len(g)}, character {len(chi)}")
    return sum((a * c for a, c in zip(g, chi)), Fraction(0))


def _support_weights(support) -> list[tuple[int, ...]]:
    # accepts a StateSet, a set/list of integer tuples, or anything iterable
    weights = getattr(support, "distinct", None)
    if callable(weights):
        items = list(weights())
    else:
        items = [tuple(chi) for chi in support]
    return items


def mu(support, gamma) -> Fraction:
    """-min over chi in the support of <gamma, chi>; multiplicities ignored."""
    items = _support_weights(support)
    if not items:
        raise EmptySupportError("empty state support encodes the zero decoration")
    return -min(pairing(gamma, chi) for chi in items)


def mu_filtration(ranks: Sequence[int], alpha: Sequence, support) -> Fraction:
    """mu of the weighted filtration with weight vector sum alpha_j * corner(i_j)."""
    items = _support_weights(support)
    if not items:
        raise EmptySupportError("empty state support encodes the zero decoration")
    r = len(items[0])
    if len(ranks) != len(alpha):
        raise LengthMismatchError("ranks and alpha must have the same length")
    if any(a <= b for a, b in zip(ranks[1:], ranks)) or any(not 1 <= i <= r - 1 for i in ranks):
        raise RankOrderError(f"ranks {tuple(ranks)} not strictly increasing in 1..{r - 1}")
    coeffs = [Fraction(0)] * (r - 1)
    for i, a in zip(ranks, alpha):
        a = _as_fraction(a)
        if a <= 0:
            raise RankOrderError(f"filtration weights must be positive, got {a}")
        coeffs[i - 1] = a
    return mu(items, compose(coeffs, r))
