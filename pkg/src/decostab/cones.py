"""Exact polyhedral geometry on the dominant weight cone.

The dominant cone C = {gamma_1 <= ... <= gamma_r, sum gamma_i = 0} is handled
in the coordinate chart given by the corner basis: writing
gamma = sum alpha_i * corner(r, i), C becomes the non-negative orthant in
alpha-space, which keeps the double description free of lineality headaches.
A halfspace <gamma, n> <= 0 turns into the integer row
(<corner(r,1), n>, ..., <corner(r,r-1), n>) . alpha <= 0.

Extreme rays are found by the incremental double description method with the
standard combinatorial adjacency test (valid here: every intermediate cone
sits inside the orthant, hence is pointed).  Emitted generators are primitive
integer vectors in gamma-space: cleared of denominators, divided by their
content, first nonzero entry negative (automatic for nonzero members of C).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ChiNotInAError, TooManyStatesError, ValidationError
from .rep import RepExpr, StateSet, enumerate_states
from .weights import corner_basis

Vec = tuple[int, ...]

DEFAULT_BUDGET = 2 ** 20


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive_vector(v: Sequence[int]) -> Vec:
    g = math.gcd(*(abs(c) for c in v))
    if g == 0:
        raise ValidationError("zero vector has no primitive representative")
    return tuple(c // g for c in v)


def _corner_matrix(r: int) -> list[Vec]:
    return [tuple(int(c) for c in corner_basis(r, i)) for i in range(1, r)]


def _to_alpha_row(normal: Sequence[int], corners: list[Vec]) -> Vec:
    return tuple(_dot(g, normal) for g in corners)


def _dd_orthant_rays(d: int, rows: list[Vec]) -> list[Vec]:
    """Extreme rays of {x in Q^d : x >= 0, row . x <= 0 for all rows}."""
    rays: list[Vec] = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    cons: list[Vec] = [tuple(-1 if j == i else 0 for j in range(d)) for i in range(d)]
    for row in rows:
        if not any(row):
            continue
        vals = [_dot(row, ray) for ray in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        if not pos:
            cons.append(row)
            continue
        neg = [i for i, v in enumerate(vals) if v < 0]
        keep = [rays[i] for i, v in enumerate(vals) if v <= 0]
        fresh: set[Vec] = set()
        if neg:
            active = [
                frozenset(k for k, c in enumerate(cons) if _dot(c, ray) == 0)
                for ray in rays
            ]
            for i in neg:
                for j in pos:
                    common = active[i] & active[j]
                    if d > 2 and len(common) < d - 2:
                        continue
                    if any(
                        t != i and t != j and common <= active[t]
                        for t in range(len(rays))
                    ):
                        continue
                    u, v = rays[i], rays[j]
                    w = tuple(vals[j] * a - vals[i] * b for a, b in zip(u, v))
                    fresh.add(primitive_vector(w))
        rays = sorted(set(keep) | fresh)
        cons.append(row)
        if not rays:
            break
    return sorted(set(rays))


def _alpha_to_gamma(alpha: Sequence[int], corners: list[Vec]) -> Vec:
    r = len(corners[0])
    entries = [0] * r
    for a, g in zip(alpha, corners):
        for j in range(r):
            entries[j] += a * g[j]
    return tuple(entries)


def chamber_normals(r: int) -> tuple[Vec, ...]:
    """Normals e_i - e_{i+1} cutting out C inside the sum-zero hyperplane."""
    out = []
    for i in range(r - 1):
        n = [0] * r
        n[i], n[i + 1] = 1, -1
        out.append(tuple(n))
    return tuple(out)


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone inside C, in double description.

    `halfspaces` are integer normals n meaning <gamma, n> <= 0 (the chamber
    normals are always included); `rays` are the primitive integral extreme
    rays.  Construct through `from_halfspaces` so the two stay consistent.
    """

    r: int
    rays: tuple[Vec, ...]
    halfspaces: tuple[Vec, ...]

    @classmethod
    def from_halfspaces(cls, r: int, normals: Iterable[Sequence[int]] = ()) -> "Cone":
        if r < 2:
            raise ValidationError(f"rank must be at least 2, got {r}")
        cleaned: list[Vec] = []
        seen: set[Vec] = set()
        for n in normals:
            n = tuple(int(c) for c in n)
            if len(n) != r:
                raise ValidationError(f"normal {n} has length {len(n)}, expected {r}")
            if not any(n):
                continue
            n = primitive_vector(n)
            if n not in seen:
                seen.add(n)
                cleaned.append(n)
        corners = _corner_matrix(r)
        rows = [_to_alpha_row(n, corners) for n in cleaned]
        alpha_rays = _dd_orthant_rays(r - 1, rows)
        gamma_rays = sorted(primitive_vector(_alpha_to_gamma(a, corners)) for a in alpha_rays)
        return cls(r=r, rays=tuple(gamma_rays),
                   halfspaces=tuple(sorted(set(chamber_normals(r)) | set(cleaned))))

    def contains(self, gamma: Sequence) -> bool:
        g = [Fraction(x) for x in gamma]
        if len(g) != self.r or sum(g) != 0:
            return False
        return all(sum(a * b for a, b in zip(g, n)) <= 0 for n in self.halfspaces)

    def dim(self) -> int:
        """Dimension of the linear span of the rays (exact rank)."""
        m = [list(map(Fraction, ray)) for ray in self.rays]
        rank = 0
        cols = len(m[0]) if m else 0
        row = 0
        for col in range(cols):
            pivot = next((k for k in range(row, len(m)) if m[k][col] != 0), None)
            if pivot is None:
                continue
            m[row], m[pivot] = m[pivot], m[row]
            for k in range(len(m)):
                if k != row and m[k][col] != 0:
                    f = m[k][col] / m[row][col]
                    m[k] = [a - f * b for a, b in zip(m[k], m[row])]
            rank += 1
            row += 1
        return rank

    def is_full_dim(self) -> bool:
        """Whether the cone has non-empty interior relative to C."""
        return self.dim() == self.r - 1

    def validate(self) -> None:
        """Check the double description is consistent; raises on mismatch."""
        for ray in self.rays:
            if sum(ray) != 0:
                raise ValidationError(f"ray {ray} leaves the sum-zero hyperplane")
            for n in self.halfspaces:
                if _dot(ray, n) > 0:
                    raise ValidationError(f"ray {ray} violates halfspace {n}")
        recomputed = Cone.from_halfspaces(
            self.r,
            [n for n in self.halfspaces if n not in set(chamber_normals(self.r))],
        )
        if recomputed.rays != self.rays:
            raise ValidationError(
                f"rays {self.rays} do not match halfspace description {recomputed.rays}"
            )


def weight_cone(r: int) -> Cone:
    """The full dominant cone; rays are the primitive corner representatives."""
    return Cone.from_halfspaces(r)


def corner_rays(r: int) -> tuple[Vec, ...]:
    """Primitive representatives of the corner rays, canonically sorted."""
    return tuple(sorted(primitive_vector(tuple(int(c) for c in corner_basis(r, i)))
                        for i in range(1, r)))


def rays(cone: Cone) -> list[Vec]:
    return list(cone.rays)


def _distinct_states(A) -> list[Vec]:
    if isinstance(A, StateSet):
        return list(A.distinct())
    return sorted({tuple(int(c) for c in chi) for chi in A})


def state_cell(A, chi, r: int) -> Cone:
    """Subcone of C where `chi` minimises the pairing among the states of A."""
    states = _distinct_states(A)
    chi = tuple(int(c) for c in chi)
    if chi not in states:
        raise ChiNotInAError(f"{chi} not among the states {states}")
    if any(len(x) != r for x in states):
        raise ValidationError(f"states must have length {r}")
    normals = [tuple(a - b for a, b in zip(chi, other)) for other in states if other != chi]
    return Cone.from_halfspaces(r, normals)


@dataclass(frozen=True)
class StateFan:
    """The decomposition of C induced by a state subset A."""

    r: int
    A: tuple[Vec, ...]
    cells: Mapping[Vec, Cone]

    @property
    def K(self) -> dict[Vec, tuple[Vec, ...]]:
        """Minimal integral generators of each cell."""
        return {chi: cone.rays for chi, cone in self.cells.items()}

    @property
    def K_A(self) -> tuple[Vec, ...]:
        out: set[Vec] = set()
        for cone in self.cells.values():
            out.update(cone.rays)
        return tuple(sorted(out))

    @property
    def is_critical(self) -> bool:
        return bool(set(self.K_A) - set(corner_rays(self.r)))


def state_fan(A, r: int) -> StateFan:
    states = _distinct_states(A)
    if not states:
        raise ValidationError("state subset must be non-empty")
    cells = {chi: state_cell(states, chi, r) for chi in states}
    return StateFan(r=r, A=tuple(states), cells=cells)


def is_critical(A, r: int) -> bool:
    """Whether the fan of A has generators beyond the corner rays."""
    return state_fan(A, r).is_critical


def critical_weight_vectors(rep: RepExpr, budget: int | None = None) -> tuple[Vec, ...]:
    """Union of all cell generators over every subset of the states of `rep`.

    Subsets are deduplicated up to translation (cells only read pairwise
    differences of characters).  `budget` caps the number of cells examined;
    exceeding it raises TooManyStatesError rather than truncating silently.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    r = rep.rank
    states = sorted(enumerate_states(rep).distinct())
    found: set[Vec] = set(corner_rays(r))
    seen_signatures: set[tuple[Vec, ...]] = set()
    cells_examined = 0
    for size in range(2, len(states) + 1):
        for A in itertools.combinations(states, size):
            base = A[0]
            signature = tuple(tuple(a - b for a, b in zip(chi, base)) for chi in A)
            if signature in seen_signatures:
                continue
            seen_signatures.add(signature)
            cells_examined += size
            if cells_examined > budget:
                raise TooManyStatesError(budget)
            for chi in A:
                found.update(state_cell(A, chi, r).rays)
    return tuple(sorted(found))
