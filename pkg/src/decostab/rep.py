"""Representation expressions over GL(r) and exact torus-state enumeration.

A representation is described syntactically, starting from the standard
representation on C^r, by duals, tensor products, symmetric and exterior
powers, direct sums, and determinant twists.  The maximal torus acts
diagonally, so every expression has a well-defined multiset of integer
characters (its states).  States are computed by recursing on a *weighted
basis list* -- a list of weights with repetition -- rather than on the
deduplicated weight set, so Sym/Wedge multiplicities stay exact even when
inner weights repeat.

No vector spaces are ever materialised; the state multiset is all that
downstream weight computations consume.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InhomogeneousError,
    MixedRankError,
    NoSolutionsError,
    ValidationError,
)

Weight = tuple[int, ...]


@dataclass(frozen=True)
class StateSet:
    """Finite multiset of torus characters; multiplicity = eigenspace dimension."""

    items: tuple[tuple[Weight, int], ...]  # sorted lexicographically, mult >= 1

    def __init__(self, weights: Iterable):
        counter: Counter = Counter()
        for entry in weights:
            if isinstance(entry, tuple) and len(entry) == 2 and isinstance(entry[1], int) \
                    and isinstance(entry[0], tuple):
                chi, m = entry
                if m < 1:
                    raise ValidationError(f"multiplicity must be >= 1, got {m}")
                counter[tuple(int(c) for c in chi)] += m
            else:
                counter[tuple(int(c) for c in entry)] += 1
        lengths = {len(chi) for chi in counter}
        if len(lengths) > 1:
            raise MixedRankError(f"states of mixed lengths {sorted(lengths)}")
        object.__setattr__(self, "items", tuple(sorted(counter.items())))

    @property
    def r(self) -> int:
        return len(self.items[0][0]) if self.items else 0

    def total(self) -> int:
        return sum(m for _, m in self.items)

    def distinct(self) -> tuple[Weight, ...]:
        return tuple(chi for chi, _ in self.items)

    def counter(self) -> Counter:
        return Counter(dict(self.items))

    def contains(self, other: "StateSet") -> bool:
        """Multiset containment: every weight of `other` with at least its multiplicity."""
        mine = self.counter()
        return all(mine[chi] >= m for chi, m in other.items)

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)


class RepExpr:
    """Base class; all nodes are immutable and validate at construction."""

    @property
    def rank(self) -> int:
        raise NotImplementedError

    def dim(self) -> int:
        raise NotImplementedError

    def weighted_basis(self) -> list[Weight]:
        """Torus weights of a basis, with repetition."""
        raise NotImplementedError


def _check_same_rank(*parts: RepExpr) -> int:
    ranks = {p.rank for p in parts}
    if len(ranks) != 1:
        raise MixedRankError(f"constituents disagree on rank: {sorted(ranks)}")
    return ranks.pop()


def _check_positive_rank(r) -> int:
    if not isinstance(r, int) or r < 1:
        raise ValidationError(f"rank must be a positive integer, got {r!r}")
    return r


@dataclass(frozen=True)
class Std(RepExpr):
    r: int

    def __post_init__(self):
        _check_positive_rank(self.r)

    @property
    def rank(self):
        return self.r

    def dim(self):
        return self.r

    def weighted_basis(self):
        return [tuple(1 if j == i else 0 for j in range(self.r)) for i in range(self.r)]


@dataclass(frozen=True)
class Trivial(RepExpr):
    r: int

    def __post_init__(self):
        _check_positive_rank(self.r)

    @property
    def rank(self):
        return self.r

    def dim(self):
        return 1

    def weighted_basis(self):
        return [(0,) * self.r]


@dataclass(frozen=True)
class Dual(RepExpr):
    inner: RepExpr

    @property
    def rank(self):
        return self.inner.rank

    def dim(self):
        return self.inner.dim()

    def weighted_basis(self):
        return [tuple(-c for c in w) for w in self.inner.weighted_basis()]


@dataclass(frozen=True)
class Tensor(RepExpr):
    left: RepExpr
    right: RepExpr

    def __post_init__(self):
        _check_same_rank(self.left, self.right)

    @property
    def rank(self):
        return self.left.rank

    def dim(self):
        return self.left.dim() * self.right.dim()

    def weighted_basis(self):
        rights = self.right.weighted_basis()
        return [
            tuple(a + b for a, b in zip(u, v))
            for u in self.left.weighted_basis()
            for v in rights
        ]


@dataclass(frozen=True)
class Sym(RepExpr):
    k: int
    inner: RepExpr

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValidationError(f"symmetric power needs k >= 0, got {self.k!r}")

    @property
    def rank(self):
        return self.inner.rank

    def dim(self):
        return math.comb(self.inner.dim() + self.k - 1, self.k)

    def weighted_basis(self):
        basis = self.inner.weighted_basis()
        out = []
        for combo in itertools.combinations_with_replacement(range(len(basis)), self.k):
            w = [0] * self.rank
            for idx in combo:
                for j, c in enumerate(basis[idx]):
                    w[j] += c
            out.append(tuple(w))
        return out


@dataclass(frozen=True)
class Wedge(RepExpr):
    k: int
    inner: RepExpr

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValidationError(f"exterior power needs k >= 0, got {self.k!r}")
        if self.k > self.inner.dim():
            raise ValidationError(
                f"exterior power {self.k} exceeds dimension {self.inner.dim()}; "
                "the zero representation is not admitted"
            )

    @property
    def rank(self):
        return self.inner.rank

    def dim(self):
        return math.comb(self.inner.dim(), self.k)

    def weighted_basis(self):
        basis = self.inner.weighted_basis()
        out = []
        for combo in itertools.combinations(range(len(basis)), self.k):
            w = [0] * self.rank
            for idx in combo:
                for j, c in enumerate(basis[idx]):
                    w[j] += c
            out.append(tuple(w))
        return out


@dataclass(frozen=True)
class DirectSum(RepExpr):
    summands: tuple[RepExpr, ...]

    def __init__(self, summands: Sequence[RepExpr]):
        summands = tuple(summands)
        if not summands:
            raise ValidationError("direct sum needs at least one summand")
        _check_same_rank(*summands)
        object.__setattr__(self, "summands", summands)

    @property
    def rank(self):
        return self.summands[0].rank

    def dim(self):
        return sum(s.dim() for s in self.summands)

    def weighted_basis(self):
        out = []
        for s in self.summands:
            out.extend(s.weighted_basis())
        return out


@dataclass(frozen=True)
class DetPow(RepExpr):
    """(Lambda^r C^r)^{tensor b}; b may be negative (a formal character twist)."""

    r: int
    b: int

    def __post_init__(self):
        _check_positive_rank(self.r)
        if not isinstance(self.b, int):
            raise ValidationError(f"determinant power must be an integer, got {self.b!r}")

    @property
    def rank(self):
        return self.r

    def dim(self):
        return 1

    def weighted_basis(self):
        return [(self.b,) * self.r]


def enumerate_states(rep: RepExpr) -> StateSet:
    """Exact multiset of torus weights of the expression."""
    return StateSet(rep.weighted_basis())


def homogeneity_degree(rep: RepExpr) -> int:
    """Common coordinate sum of all states; the degree of the central action."""
    degrees = {sum(chi) for chi, _ in enumerate_states(rep)}
    if len(degrees) != 1:
        raise InhomogeneousError(degrees)
    return degrees.pop()


def _tensor_chain(factors: Sequence[RepExpr]) -> RepExpr:
    expr = factors[0]
    for f in factors[1:]:
        expr = Tensor(expr, f)
    return expr


def homogenize(summands: Sequence[RepExpr], kappa: int) -> RepExpr:
    """Homogeneous hull of positive-degree summands at total degree kappa.

    Returns the direct sum, over all exponent vectors nu >= 0 with
    sum nu_i * deg(rho_i) = kappa, of S^{nu_1}rho_1 x ... x S^{nu_n}rho_n,
    with S^0 factors dropped.
    """
    summands = list(summands)
    if not summands:
        raise ValidationError("homogenize needs at least one summand")
    if not isinstance(kappa, int) or kappa <= 0:
        raise ValidationError(f"kappa must be a positive integer, got {kappa!r}")
    _check_same_rank(*summands)
    degrees = [homogeneity_degree(s) for s in summands]
    if any(d <= 0 for d in degrees):
        raise ValidationError(f"all summand degrees must be positive, got {degrees}")

    solutions: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int, idx: int):
        if idx == len(degrees):
            if remaining == 0:
                solutions.append(tuple(prefix))
            return
        for nu in range(remaining // degrees[idx] + 1):
            extend(prefix + [nu], remaining - nu * degrees[idx], idx + 1)

    extend([], kappa, 0)
    if not solutions:
        raise NoSolutionsError(f"no exponent vector reaches degree {kappa} from {degrees}")

    pieces = []
    for nu in sorted(solutions, reverse=True):
        factors = []
        for n, rho in zip(nu, summands):
            if n == 0:
                continue
            factors.append(rho if n == 1 else Sym(n, rho))
        pieces.append(_tensor_chain(factors))
    return pieces[0] if len(pieces) == 1 else DirectSum(pieces)


def envelope(r: int, a: int, b: int, c: int) -> RepExpr:
    """The natural representation ((C^r)^{x a} x det^{-b})^{+ c}."""
    _check_positive_rank(r)
    if a < 0 or b < 0 or c < 1:
        raise ValidationError(f"need a, b >= 0 and c >= 1, got a={a}, b={b}, c={c}")
    core: RepExpr = Trivial(r) if a == 0 else _tensor_chain([Std(r)] * a)
    if b != 0:
        core = Tensor(core, DetPow(r, -b))
    return core if c == 1 else DirectSum([core] * c)


def state_containment(rep: RepExpr, a: int, b: int, c: int) -> bool:
    """Whether the states of `rep` embed, with multiplicity, in the envelope's states.

    Necessary for `rep` to be a direct summand of the envelope, and sufficient
    for every mu-computation here, since mu only reads states.
    """
    target = envelope(rep.rank, a, b, c)
    return enumerate_states(target).contains(enumerate_states(rep))
