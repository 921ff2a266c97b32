"""Exact lattice certification: LLL reduction on Gram matrices, short
vector enumeration, and theta-series cross checks.

Everything operates on Gram matrices only; no basis embedding and no
floating point arithmetic anywhere.  LLL runs over Fractions and returns
both the reduced Gram matrix and the unimodular transform that produced it.
Short vectors are counted with a scaled integer Fincke-Pohst search whose
hot loop touches nothing but Python ints, which keeps a 24-dimensional
norm-4 sweep in the low millions of nodes.

The theta checks compare enumerated counts per norm with coefficients of
weight-12 modular forms computed independently in the series modules; for
the quotient lattice the matching combination of E4^3 and Delta is derived
on the spot from the first two coefficients rather than hardcoded.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm
from typing import Sequence

from .modforms import delta, eisenstein_e4, sigma
from .lorentz import (
    GramMatrix,
    bareiss_determinant,
    inertia,
    leech_gram,
    solve_linear_exact,
)

DEFAULT_DELTA = Fraction(3, 4)


@dataclass(frozen=True)
class ReducedBasis:
    """LLL output: the reduced Gram matrix and the unimodular row transform
    such that transform . original . transform^T == gram."""

    gram: GramMatrix
    transform: tuple[tuple[int, ...], ...]


def _round_half_up(m: Fraction) -> int:
    # nearest integer, ties toward +infinity: floor(m + 1/2)
    return (2 * m.numerator + m.denominator) // (2 * m.denominator)


def lll(gram: GramMatrix, delta: Fraction = DEFAULT_DELTA) -> ReducedBasis:
    """LLL-reduce a positive definite Gram matrix with exact arithmetic.

    Raises ValueError for a form that is not positive definite or a
    reduction parameter outside (1/4, 1).
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("reduction parameter must lie strictly between 1/4 and 1")
    n = gram.dim
    if n == 0:
        raise ValueError("empty Gram matrix")
    g0 = gram.entries
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def ip(i: int, j: int) -> int:
        # <b_i, b_j> for the current rows, straight from the original form
        row_j = u[j]
        acc = 0
        for a in range(n):
            uia = u[i][a]
            if uia:
                g0a = g0[a]
                acc += uia * sum(g0a[b] * row_j[b] for b in range(n) if row_j[b])
        return acc

    mu = [[Fraction(0)] * n for _ in range(n)]
    big_b = [Fraction(0)] * n
    big_b[0] = Fraction(ip(0, 0))
    if big_b[0] <= 0:
        raise ValueError("not positive definite")

    def red(k: int, l: int) -> None:
        m = mu[k][l]
        if 2 * abs(m) <= 1:
            return
        q = _round_half_up(m)
        u[k] = [x - q * y for x, y in zip(u[k], u[l])]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    k = 1
    kmax = 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                s = Fraction(ip(k, j))
                for i in range(j):
                    s -= mu[j][i] * mu[k][i] * big_b[i]
                if j < k:
                    mu[k][j] = s / big_b[j]
                else:
                    if s <= 0:
                        raise ValueError("not positive definite")
                    big_b[k] = s
        red(k, k - 1)
        if big_b[k] < (delta - mu[k][k - 1] ** 2) * big_b[k - 1]:
            # swap rows k-1 and k, then patch the GSO data in place
            u[k], u[k - 1] = u[k - 1], u[k]
            m = mu[k][k - 1]
            bp = big_b[k] + m * m * big_b[k - 1]
            mu[k][k - 1] = m * big_b[k - 1] / bp
            big_b[k] = big_b[k - 1] * big_b[k] / bp
            big_b[k - 1] = bp
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            for i in range(k + 1, kmax + 1):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1

    reduced = [[ip(i, j) for j in range(n)] for i in range(n)]
    return ReducedBasis(
        gram=GramMatrix.from_rows(reduced),
        transform=tuple(tuple(row) for row in u),
    )


def is_lll_reduced(gram: GramMatrix, delta: Fraction = DEFAULT_DELTA) -> bool:
    """Check size reduction and the Lovasz condition directly on a Gram
    matrix, recomputing the orthogonalization from scratch."""
    delta = Fraction(delta)
    n = gram.dim
    g = gram.entries
    mu = [[Fraction(0)] * n for _ in range(n)]
    big_b = [Fraction(0)] * n
    for k in range(n):
        for j in range(k + 1):
            s = Fraction(g[k][j])
            for i in range(j):
                s -= mu[j][i] * mu[k][i] * big_b[i]
            if j < k:
                mu[k][j] = s / big_b[j]
            else:
                if s <= 0:
                    return False
                big_b[k] = s
    for ki in range(1, n):
        for j in range(ki):
            if 2 * abs(mu[ki][j]) > 1:
                return False
        if big_b[ki] < (delta - mu[ki][ki - 1] ** 2) * big_b[ki - 1]:
            return False
    return True


@dataclass(frozen=True)
class ShortVectorCount:
    """Vector counts per exact norm value, 1 through max_norm inclusive.

    Counts include both members of each +-v pair; the zero vector is
    excluded.  Norms that do not occur are present with count 0.
    """

    max_norm: int
    counts: dict[int, int]

    def count(self, norm: int) -> int:
        if not 1 <= norm <= self.max_norm:
            raise ValueError(f"norm must lie in [1, {self.max_norm}]")
        return self.counts[norm]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_jsonable(self) -> dict:
        return {
            "maxNorm": str(self.max_norm),
            "counts": {str(m): str(c) for m, c in sorted(self.counts.items())},
        }


def _fincke_pohst_tables(entries: Sequence[Sequence[int]]):
    """Quadratic-completion tables for Q(x) = sum_i q_ii (x_i + sum_j q_ij x_j)^2,
    scaled to pure integers.

    Returns (diag, rows, line_scale, level_scale, total_scale): with
    L = line_scale[i], row entries A[i][j] = L * q_ij are integers,
    E = level_scale[i] = total_scale / L^3, and the level-i contribution to
    total_scale * Q(x) is E * A[i][i] * (L x_i + sum_{j>i} A[i][j] x_j)^2.
    """
    n = len(entries)
    q = [[Fraction(x) for x in row] for row in entries]
    for i in range(n):
        pivot = q[i][i]
        if pivot <= 0:
            raise ValueError("not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / pivot
        for a in range(i + 1, n):
            for b in range(a, n):
                q[a][b] -= q[a][i] * q[i][b]
    line_scale = []
    diag = []
    rows = []
    for i in range(n):
        l = lcm(*(q[i][j].denominator for j in range(i, n)))
        line_scale.append(l)
        diag.append(int(q[i][i] * l))
        rows.append([int(q[i][j] * l) if j > i else 0 for j in range(n)])
    total_scale = lcm(*(l**3 for l in line_scale))
    level_scale = [total_scale // l**3 for l in line_scale]
    return diag, rows, line_scale, level_scale, total_scale


def _count_range(args) -> dict[int, int]:
    """Count vectors whose top coordinate lies in [lo_top, hi_top], walking
    the completion levels from last to first; each vector found stands for
    its +-v pair, so leaves add 2."""
    diag, rows, line_scale, level_scale, total_scale, budget, lo_top, hi_top = args
    n = len(diag)
    step_scale = [level_scale[i] * diag[i] for i in range(n)]
    counts: dict[int, int] = {}
    x = [0] * n
    remaining = [0] * n
    offset = [0] * n
    lo = [0] * n
    hi = [0] * n
    zero_prefix = [False] * n

    top = n - 1
    remaining[top] = budget
    offset[top] = 0
    zero_prefix[top] = True
    ymax = isqrt(budget // step_scale[top])
    lo[top] = max(0, lo_top)
    hi[top] = min(ymax // line_scale[top], hi_top)
    x[top] = lo[top] - 1

    level = top
    while True:
        x[level] += 1
        if x[level] > hi[level]:
            level += 1
            if level == n:
                break
            continue
        xi = x[level]
        y = line_scale[level] * xi + offset[level]
        rem = remaining[level] - step_scale[level] * y * y
        if level == 0:
            used = budget - rem
            if used > 0:
                assert used % total_scale == 0
                norm = used // total_scale
                counts[norm] = counts.get(norm, 0) + 2
            continue
        nxt = level - 1
        remaining[nxt] = rem
        zero_prefix[nxt] = zero_prefix[level] and xi == 0
        row = rows[nxt]
        acc = 0
        for j in range(level, n):
            xj = x[j]
            if xj:
                acc += row[j] * xj
        offset[nxt] = acc
        ymax = isqrt(rem // step_scale[nxt])
        l = line_scale[nxt]
        low = -((ymax + acc) // l)
        high = (ymax - acc) // l
        if zero_prefix[nxt] and low < 0:
            low = 0
        lo[nxt] = low
        hi[nxt] = high
        x[nxt] = low - 1
        level = nxt
    return counts


def short_vectors(gram: GramMatrix, max_norm: int, jobs: int = 1) -> ShortVectorCount:
    """Count all lattice vectors of each norm 1..max_norm.

    The Gram matrix is LLL-reduced first; the enumeration then works on the
    reduced form, which leaves counts unchanged.  jobs > 1 splits the top
    coordinate range across processes; results are merged deterministically.
    """
    if not isinstance(max_norm, int) or max_norm < 1:
        raise ValueError("max_norm must be a positive integer")
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError("jobs must be a positive integer")
    reduced = lll(gram)
    tables = _fincke_pohst_tables(reduced.gram.entries)
    diag, rows, line_scale, level_scale, total_scale = tables
    budget = max_norm * total_scale
    top = len(diag) - 1
    hi_top = isqrt(budget // (level_scale[top] * diag[top])) // line_scale[top]
    merged: dict[int, int] = {}
    if jobs == 1 or hi_top == 0:
        merged = _count_range(
            (diag, rows, line_scale, level_scale, total_scale, budget, 0, hi_top)
        )
    else:
        width = hi_top + 1
        chunks = min(jobs, width)
        arglist = []
        for c in range(chunks):
            lo_c = c * width // chunks
            hi_c = (c + 1) * width // chunks - 1
            arglist.append(
                (diag, rows, line_scale, level_scale, total_scale, budget, lo_c, hi_c)
            )
        with ProcessPoolExecutor(max_workers=chunks) as pool:
            for part in pool.map(_count_range, arglist):
                for norm, cnt in part.items():
                    merged[norm] = merged.get(norm, 0) + cnt
    counts = {m: merged.get(m, 0) for m in range(1, max_norm + 1)}
    return ShortVectorCount(max_norm=max_norm, counts=counts)


# -- reference lattices and theta checks --------------------------------------

# simple roots in doubled coordinates: the half-integer root first, then
# e_0 + e_1 and the differences e_{i+1} - e_i
_E8_SIMPLE_ROOTS = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)


@lru_cache(maxsize=1)
def e8_gram() -> GramMatrix:
    """Gram matrix of the E8 root lattice from its simple roots; checked to
    be even with determinant 1."""
    n = len(_E8_SIMPLE_ROOTS)
    entries = []
    for a in _E8_SIMPLE_ROOTS:
        row = []
        for b in _E8_SIMPLE_ROOTS:
            s = sum(x * y for x, y in zip(a, b))
            if s % 4:
                raise ValueError("root coordinates are not on the doubled grid")
            row.append(s // 4)
        entries.append(row)
    gram = GramMatrix.from_rows(entries)
    if not gram.is_even:
        raise ValueError("E8 Gram must be even")
    if bareiss_determinant(gram.entries) != 1:
        raise ValueError("E8 Gram determinant must be 1")
    if inertia(gram.entries) != (n, 0, 0):
        raise ValueError("E8 Gram must be positive definite")
    return gram


@dataclass(frozen=True)
class ThetaRow:
    """One norm compared between enumeration and a series coefficient."""

    norm: int
    enumerated: int
    series_coefficient: int
    matches: bool


@dataclass(frozen=True)
class ThetaCheck:
    """Enumerated counts against independently computed theta coefficients.

    combination is (a, b) for the weight-12 form a E4^3 + b Delta when one
    is derived, None when the expected counts come from a closed formula.
    counts carries the full enumeration result; ok also requires every odd
    norm count to vanish.
    """

    lattice: str
    max_norm: int
    combination: tuple[int, int] | None
    counts: ShortVectorCount
    rows: tuple[ThetaRow, ...]
    ok: bool


def _odd_norms_vanish(found: ShortVectorCount) -> bool:
    return all(found.counts[m] == 0 for m in range(1, found.max_norm + 1, 2))


def theta_check_leech(max_norm: int = 4, jobs: int = 1) -> ThetaCheck:
    """Compare quotient-lattice counts with the weight-12 combination of
    E4^3 and Delta whose expansion starts 1 + 0 q.

    The combination is solved for at run time from the first two
    coefficients of the two forms; nothing about the answer is assumed.
    """
    if max_norm not in (2, 4, 6):
        raise ValueError("max_norm must be 2, 4 or 6")
    found = short_vectors(leech_gram(), max_norm, jobs=jobs)
    half = max_norm // 2
    order = max(half + 1, 2)
    e4_cubed = eisenstein_e4(order) ** 3
    disc = delta(order)
    system = [
        [e4_cubed.coeff(0), disc.coeff(0)],
        [e4_cubed.coeff(1), disc.coeff(1)],
    ]
    a, b = solve_linear_exact(system, [1, 0])
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError("weight-12 combination is not integral")
    a, b = a.numerator, b.numerator
    rows = []
    for nn in range(1, half + 1):
        coeff = a * e4_cubed.coeff(nn) + b * disc.coeff(nn)
        enum = found.counts[2 * nn]
        rows.append(ThetaRow(2 * nn, enum, coeff, enum == coeff))
    ok = all(r.matches for r in rows) and _odd_norms_vanish(found)
    return ThetaCheck("leech", max_norm, (a, b), found, tuple(rows), ok)


def theta_check_e8(max_norm: int = 4, jobs: int = 1) -> ThetaCheck:
    """Compare E8 counts with the classical formula: 240 sigma_3(n) vectors
    of norm 2n."""
    if max_norm < 2 or max_norm % 2:
        raise ValueError("max_norm must be a positive even integer")
    found = short_vectors(e8_gram(), max_norm, jobs=jobs)
    rows = []
    for nn in range(1, max_norm // 2 + 1):
        expected = 240 * sigma(3, nn)
        enum = found.counts[2 * nn]
        rows.append(ThetaRow(2 * nn, enum, expected, enum == expected))
    ok = all(r.matches for r in rows) and _odd_norms_vanish(found)
    return ThetaCheck("e8", max_norm, None, found, tuple(rows), ok)
