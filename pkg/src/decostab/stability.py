"""The delta-(semi)stability calculus on numeric filtration data.

A weighted filtration of a rank-r, degree-d bundle is recorded by the ranks
and degrees of its steps plus positive rational weights.  The tested quantity
is always

    value = sum_j alpha_j * (d * i_j - d_j * r)  +  delta * mu(support, gamma),

with gamma = sum_j alpha_j * corner(r, i_j); the pair passes when value > 0,
or value = 0 in the non-strict (semistable) test.  Supports are discrete
inputs: either caller-declared state sets or the witness supports produced by
the profile helpers for the worked example classes (extension pairs, framed
modules, twisted-endomorphism pairs, conic bundles).  No sheaf data is ever
read and no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import cones, weights
from .errors import (
    EmptySupportError,
    LengthMismatchError,
    NoCriticalTypeError,
    NonpositiveDeltaError,
    RankOrderError,
    SigmaNotNormalizedError,
    ValidationError,
)
from .rep import RepExpr
from .weights import _as_fraction, mu, mu_filtration

Weight = tuple[int, ...]


@dataclass(frozen=True)
class FiltrationData:
    """Numeric weighted filtration: ranks/degrees of the steps plus weights."""

    r: int
    d: int
    steps: tuple[tuple[int, int], ...]  # (rank i_j, degree d_j), strictly increasing ranks
    alpha: tuple[Fraction, ...]

    def __init__(self, r: int, d: int, steps: Sequence[Sequence[int]], alpha: Sequence):
        if r < 1:
            raise ValidationError(f"rank must be positive, got {r}")
        steps = tuple((int(i), int(dj)) for i, dj in steps)
        alpha = tuple(_as_fraction(a) for a in alpha)
        if len(steps) != len(alpha):
            raise LengthMismatchError(
                f"{len(steps)} steps but {len(alpha)} weights"
            )
        ranks = [i for i, _ in steps]
        if any(b <= a for a, b in zip(ranks, ranks[1:])) or \
                any(not 1 <= i <= r - 1 for i in ranks):
            raise RankOrderError(f"ranks {ranks} not strictly increasing in 1..{r - 1}")
        if any(a <= 0 for a in alpha):
            raise ValidationError(f"filtration weights must be positive, got {alpha}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "alpha", alpha)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.steps)


@dataclass(frozen=True)
class SupportSpec:
    """Declared generic state support of the decoration along the filtration."""

    support: frozenset[Weight]

    def __init__(self, support: Iterable):
        items = frozenset(tuple(int(c) for c in chi) for chi in support)
        if not items:
            raise EmptySupportError("empty state support encodes the zero decoration")
        if len({len(chi) for chi in items}) > 1:
            raise LengthMismatchError("support states of mixed lengths")
        object.__setattr__(self, "support", items)

    @property
    def r(self) -> int:
        return len(next(iter(self.support)))

    def __iter__(self):
        return iter(sorted(self.support))


@dataclass(frozen=True)
class StabilityParams:
    delta: Fraction
    strict: bool = False

    def __init__(self, delta, strict: bool = False):
        delta = _as_fraction(delta)
        if delta <= 0:
            raise NonpositiveDeltaError(f"delta must be positive, got {delta}")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "strict", strict)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one stability test; `value` is the exact tested quantity."""

    value: Fraction
    passes: bool
    boundary: bool

    @classmethod
    def of(cls, value: Fraction, strict: bool) -> "Verdict":
        boundary = value == 0
        return cls(value=value, passes=value > 0 or (boundary and not strict),
                   boundary=boundary)


def _coerce_support(supp) -> SupportSpec:
    return supp if isinstance(supp, SupportSpec) else SupportSpec(supp)


def m_value(filt: FiltrationData) -> Fraction:
    """sum_j alpha_j * (d * rk E_j - deg E_j * r)."""
    return sum(
        (a * (filt.d * i - dj * filt.r) for (i, dj), a in zip(filt.steps, filt.alpha)),
        Fraction(0),
    )


def check(filt: FiltrationData, supp, params: StabilityParams) -> Verdict:
    """The fundamental test M + delta * mu >= 0 (strict: > 0)."""
    supp = _coerce_support(supp)
    if supp.r != filt.r:
        raise LengthMismatchError(
            f"support states have length {supp.r}, filtration rank is {filt.r}"
        )
    if not filt.steps:
        return Verdict.of(Fraction(0), params.strict)
    value = m_value(filt) + params.delta * mu_filtration(filt.ranks, filt.alpha, supp)
    return Verdict.of(value, params.strict)


def check_subbundle(rank_sub: int, deg_sub: int, supp, r: int, d: int,
                    params: StabilityParams) -> Verdict:
    """One-step specialisation: (d * rk' - deg' * r) + delta * mu(gamma^(rk'))."""
    if not 0 < rank_sub < r:
        raise RankOrderError(f"subbundle rank {rank_sub} outside 1..{r - 1}")
    filt = FiltrationData(r=r, d=d, steps=[(rank_sub, deg_sub)], alpha=[1])
    return check(filt, supp, params)


def combine_direct_sum(filt: FiltrationData, supports: Sequence, sigma: Sequence,
                       params: StabilityParams) -> Verdict:
    """Test with the sigma-averaged mu over per-summand supports."""
    sigma = [_as_fraction(s) for s in sigma]
    if len(sigma) != len(supports):
        raise LengthMismatchError("one sigma per support required")
    if any(s <= 0 for s in sigma):
        raise SigmaNotNormalizedError(f"sigma entries must be positive, got {sigma}")
    if sum(sigma) != 1:
        raise SigmaNotNormalizedError(f"sigma sums to {sum(sigma)}, expected 1")
    avg = Fraction(0)
    for s, supp in zip(sigma, supports):
        supp = _coerce_support(supp)
        avg += s * mu_filtration(filt.ranks, filt.alpha, supp)
    return Verdict.of(m_value(filt) + params.delta * avg, params.strict)


def sectional_check(filt: FiltrationData, chi_En: int, h0: Sequence[int],
                    mu_value, delta) -> Verdict:
    """Section-count variant: ranks weigh chi(E(n)) against the h^0 of the steps."""
    h0 = list(h0)
    if len(h0) != len(filt.steps):
        raise LengthMismatchError(f"{len(filt.steps)} steps but {len(h0)} h0 values")
    delta = _as_fraction(delta)
    value = sum(
        (a * (chi_En * i - h * filt.r) for (i, _), a, h in zip(filt.steps, filt.alpha, h0)),
        Fraction(0),
    )
    value += delta * _as_fraction(mu_value)
    return Verdict.of(value, strict=False)


def delta_threshold(filt: FiltrationData, supp) -> Fraction | None:
    """The unique delta with M + delta * mu = 0, when M and mu have opposite signs."""
    supp = _coerce_support(supp)
    m = m_value(filt)
    w = mu_filtration(filt.ranks, filt.alpha, supp)
    if w == 0:
        return None
    threshold = -m / w
    return threshold if threshold > 0 else None


def bound_c1(r: int, a: int, delta) -> Fraction:
    """Slope-bound offset delta * a * (r - 1) / r for envelope exponent a."""
    if r < 2:
        raise ValidationError(f"rank must be at least 2, got {r}")
    return _as_fraction(delta) * a * Fraction(r - 1, r)


def gieseker_epsilon(d: int, r: int, g: int, n: int, a: int, delta) -> tuple[int, Fraction]:
    """p = d + r*n + r*(1 - g) and the linearisation weight (p - a*delta)/(r*delta)."""
    if r < 2:
        raise ValidationError(f"rank must be at least 2, got {r}")
    delta = _as_fraction(delta)
    if delta <= 0:
        raise NonpositiveDeltaError(f"delta must be positive, got {delta}")
    p = d + r * n + r * (1 - g)
    return p, (p - a * delta) / (r * delta)


# --- simplification of the stability test -----------------------------------

@dataclass(frozen=True)
class StabilityCondition:
    """One template generated by simplify().

    `gamma` is the primitive test vector, `ranks` the participating filtration
    ranks, and `alpha` the integer-normalised weights attached to them.
    """

    kind: str  # "subbundle" | "filtration"
    gamma: Weight
    ranks: tuple[int, ...]
    alpha: tuple[int, ...]


def _normalized_coefficients(gamma: Weight) -> tuple[tuple[int, ...], tuple[int, ...]]:
    coeffs = weights.decompose(gamma)
    denom = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * denom) for c in coeffs]
    content = gcd(*(abs(c) for c in ints))
    ints = [c // content for c in ints]
    ranks = tuple(i for i, c in enumerate(ints, start=1) if c)
    return ranks, tuple(c for c in ints if c)


def simplify(rep: RepExpr, budget: int | None = None) -> list[StabilityCondition]:
    """Subbundle templates for every rank plus one template per critical vector."""
    r = rep.rank
    corner_set = set(cones.corner_rays(r))
    conditions = []
    for k in range(1, r):
        gamma = cones.primitive_vector(tuple(int(c) for c in weights.corner_basis(r, k)))
        conditions.append(StabilityCondition(kind="subbundle", gamma=gamma,
                                             ranks=(k,), alpha=(1,)))
    extras = [g for g in cones.critical_weight_vectors(rep, budget=budget)
              if g not in corner_set]
    for gamma in extras:
        ranks, alpha = _normalized_coefficients(gamma)
        conditions.append(StabilityCondition(kind="filtration", gamma=gamma,
                                             ranks=ranks, alpha=alpha))
    return conditions


# --- worked example profiles -------------------------------------------------

def profile_extension(i: int, dim_ker: int, dim_cap: int, r: int) -> Fraction:
    """mu of a rank-i flag step against a quotient map with the given kernel data."""
    if not (0 <= dim_cap <= min(i, dim_ker) <= r) or not 1 <= i <= r - 1:
        raise ValidationError(
            f"need 0 <= dim_cap <= min(i, dim_ker) <= r, got "
            f"i={i}, dim_ker={dim_ker}, dim_cap={dim_cap}, r={r}"
        )
    return Fraction(i * dim_ker - r * dim_cap)


def _unit(i: int, r: int) -> Weight:
    return tuple(1 if j == i - 1 else 0 for j in range(r))


def framed_support(k: int, in_kernel: bool, r: int) -> frozenset[Weight]:
    """Witness support of a framing map against a rank-k subbundle.

    Kernel case: the framing only sees the complementary basis vectors.
    Otherwise a generic first basis vector of the subbundle survives.
    """
    if not 0 < k < r:
        raise RankOrderError(f"subbundle rank {k} outside 1..{r - 1}")
    if in_kernel:
        return frozenset(_unit(i, r) for i in range(k + 1, r + 1))
    return frozenset({_unit(1, r)})


def profile_framed(k: int, in_kernel: bool, r: int) -> Fraction:
    """mu of a rank-k subbundle under a framing map: -k inside the kernel, r-k outside."""
    if not 0 < k < r:
        raise RankOrderError(f"subbundle rank {k} outside 1..{r - 1}")
    return Fraction(-k if in_kernel else r - k)


def _endo_state(source: int, target: int, r: int) -> Weight:
    # trace duality: a nonzero matrix entry (target, source) contributes the
    # state e_source - e_target
    return tuple(
        (1 if j == source - 1 else 0) - (1 if j == target - 1 else 0) for j in range(r)
    )


def hitchin_support(i: int, invariant: bool, superinvariant: bool, eps_zero: bool,
                    r: int) -> frozenset[Weight]:
    """Witness support of a twisted endomorphism plus scalar at a rank-i step."""
    if not 1 <= i <= r - 1:
        raise RankOrderError(f"step rank {i} outside 1..{r - 1}")
    if superinvariant and not invariant:
        raise ValidationError("a superinvariant step is in particular invariant")
    states: set[Weight] = set()
    if not invariant:
        states.add(_endo_state(i, i + 1, r))  # the step leaks out of itself
    elif superinvariant:
        states.add(_endo_state(i + 1, i, r))  # kernel step absorbing the image
    else:
        states.add((0,) * r)  # a diagonal entry survives
    if not eps_zero:
        states.add((0,) * r)
    return frozenset(states)


def profile_hitchin(i: int, invariant: bool, superinvariant: bool, eps_zero: bool,
                    r: int) -> Fraction:
    """mu at a rank-i step: r if not invariant, -r if superinvariant with zero scalar, else 0."""
    if not 1 <= i <= r - 1:
        raise RankOrderError(f"step rank {i} outside 1..{r - 1}")
    if superinvariant and not invariant:
        raise ValidationError("a superinvariant step is in particular invariant")
    if not invariant:
        return Fraction(r)
    if superinvariant and eps_zero:
        return Fraction(-r)
    return Fraction(0)


def nilpotent_support(r: int, sigma_zero: bool = True) -> frozenset[Weight]:
    """Generic full-flag support of a nilpotent twisted endomorphism."""
    if r < 2:
        raise ValidationError(f"rank must be at least 2, got {r}")
    states = {
        _endo_state(j + 1, k, r) for j in range(1, r) for k in range(1, j + 1)
    }
    if not sigma_zero:
        states.add((0,) * r)
    return frozenset(states)


def hitchin_nilpotent_mu(r: int, sigma_zero: bool = True) -> Fraction:
    """mu of the full flag against a nilpotent endomorphism; -r when the scalar is zero."""
    support = nilpotent_support(r, sigma_zero=sigma_zero)
    return mu_filtration(tuple(range(1, r)), (1,) * (r - 1), support)


# --- conic bundles -----------------------------------------------------------

def conic_minimal_support(nonzero: Iterable[Sequence[int]], r: int) \
        -> tuple[frozenset[tuple[int, int]], int]:
    """Minimal index pairs of a nonzero quadratic form and the minimal index sum.

    Pairs are ordered componentwise; a pair is minimal when no other nonzero
    pair is <= it in both coordinates.
    """
    pairs = set()
    for p in nonzero:
        i1, i2 = int(p[0]), int(p[1])
        if not 1 <= i1 <= i2 <= r:
            raise ValidationError(f"index pair {(i1, i2)} outside 1 <= i1 <= i2 <= {r}")
        pairs.add((i1, i2))
    if not pairs:
        raise EmptySupportError("a vanishing quadratic form has no index pairs")
    minimal = frozenset(
        p for p in pairs
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pairs)
    )
    return minimal, min(i1 + i2 for i1, i2 in pairs)


def conic_subbundle_support(c_tau: int, k: int, r: int) -> frozenset[Weight]:
    """All quadratic states compatible with the contact level c_tau at rank k.

    c=2: the form survives on the subbundle square; c=1: only on mixed
    products; c=0: only beyond the subbundle.
    """
    if c_tau not in (0, 1, 2):
        raise ValidationError(f"contact level must be 0, 1 or 2, got {c_tau}")
    if not 0 < k < r:
        raise RankOrderError(f"subbundle rank {k} outside 1..{r - 1}")
    states = set()
    for i1 in range(1, r + 1):
        for i2 in range(i1, r + 1):
            # level counts how many of the two indices land in the subbundle
            if (i1 <= k) + (i2 <= k) <= c_tau:
                chi = [0] * r
                chi[i1 - 1] += 1
                chi[i2 - 1] += 1
                states.add(tuple(chi))
    return frozenset(states)


def profile_conic(c_tau: int, k: int, r: int) -> Fraction:
    """mu of a rank-k subbundle under a quadratic decoration: c_tau * r - 2k."""
    if c_tau not in (0, 1, 2):
        raise ValidationError(f"contact level must be 0, 1 or 2, got {c_tau}")
    if not 0 < k < r:
        raise RankOrderError(f"subbundle rank {k} outside 1..{r - 1}")
    return Fraction(c_tau * r - 2 * k)


CONIC_VANISHING_LABELS = ("E1E2", "E1E3", "E1E", "E2E2", "E2E3")

# vanishing pattern (in label order) -> critical type
_CONIC_TYPE_PATTERNS = {
    (True, False, False, False, False): "I",
    (True, True, False, False, False): "II",
    (True, True, False, True, False): "III",
    (True, True, False, True, True): "IV",
    (True, True, True, True, True): "V",
}

# rank-4 test table: critical type -> ((rank pair), mu) entries
_CONIC_TYPE_TESTS = {
    "I": (((1, 2), Fraction(-2)),),
    "II": (((1, 3), Fraction(0)), ((2, 3), Fraction(2))),
    "III": (((1, 3), Fraction(0)),),
    "IV": (((1, 2), Fraction(-2)), ((1, 3), Fraction(0))),
    "V": (((2, 3), Fraction(2)),),
}


def conic_critical_type(vanishing: Iterable[str], r: int = 4) \
        -> tuple[str, tuple[tuple[tuple[int, int], Fraction], ...]]:
    """Classify a rank-4 full flag by which restrictions of the form vanish.

    `vanishing` lists the labels from CONIC_VANISHING_LABELS on which the
    decoration vanishes identically; everything not forced to vanish is taken
    generically nonzero.  Returns the critical type and the (rank pair, mu)
    tests attached to it.
    """
    if r != 4:
        raise ValidationError(f"critical types are tabulated for rank 4, got {r}")
    labels = set()
    for x in vanishing:
        if x not in CONIC_VANISHING_LABELS:
            raise ValidationError(
                f"unknown restriction {x!r}; expected one of {CONIC_VANISHING_LABELS}"
            )
        labels.add(x)
    flags = tuple(lbl in labels for lbl in CONIC_VANISHING_LABELS)
    type_label = _CONIC_TYPE_PATTERNS.get(flags)
    if type_label is None:
        raise NoCriticalTypeError(f"vanishing pattern {sorted(labels)} is not critical")
    return type_label, _CONIC_TYPE_TESTS[type_label]
