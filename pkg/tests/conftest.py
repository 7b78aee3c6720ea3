"""Shared helpers: independent brute-force oracles for ray enumeration.

The oracle works directly in gamma-space: a cell is cut out of the sum-zero
hyperplane by inequality normals (chamber rows plus cell rows).  Every
(r-2)-subset of normals, stacked on the all-ones equality row, either has a
one-dimensional nullspace -- spanned by the vector of signed maximal minors --
or is discarded; candidates surviving all inequalities in one sign are rays.
This never touches the corner-basis chart or the incremental double
description used by the library.
"""

import itertools
import math


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    raise ValueError(f"determinant size {n} not needed by the oracle")


def _signed_minors(rows, r):
    # nullspace direction of an (r-1) x r integer matrix, up to sign
    v = []
    for j in range(r):
        sub = [[row[k] for k in range(r) if k != j] for row in rows]
        v.append((-1) ** j * _det(sub))
    return v


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _primitive(v):
    g = math.gcd(*(abs(c) for c in v))
    return tuple(c // g for c in v)


def chamber_rows(r):
    out = []
    for i in range(r - 1):
        n = [0] * r
        n[i], n[i + 1] = 1, -1
        out.append(tuple(n))
    return out


def oracle_cell_rays(normals, r):
    """Extreme rays of {sum gamma = 0, <gamma, n> <= 0 for all normals}."""
    normals = list(dict.fromkeys(tuple(n) for n in normals))
    ones = (1,) * r
    found = set()
    for subset in itertools.combinations(normals, r - 2):
        v = _signed_minors([ones, *subset], r)
        if not any(v):
            continue
        for cand in (tuple(v), tuple(-c for c in v)):
            if all(_dot(n, cand) <= 0 for n in normals):
                found.add(_primitive(cand))
    return sorted(found)


def oracle_state_cell_rays(A, chi, r):
    normals = chamber_rows(r)
    normals += [tuple(a - b for a, b in zip(chi, other)) for other in A if other != chi]
    return oracle_cell_rays(normals, r)
