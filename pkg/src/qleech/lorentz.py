"""The even unimodular Lorentzian lattice of signature (25, 1) and the
quotient construction of the Leech lattice inside it.

Vectors are stored in doubled coordinates: 26 integers, the 25 spacelike
entries first and the single timelike entry last, each equal to twice the
true coordinate.  That makes the half-integer vectors of the lattice
representable exactly.  A doubled tuple d belongs to the lattice iff all
entries share one parity and sum(d[:25]) - d[25] is divisible by 4; the
bilinear form is

    <a, b> = (sum_i a_i b_i - a_25 b_25) / 4

with the mostly-plus sign convention (spacelike squares count positive),
and it is integer valued and even on lattice members.

The Leech lattice appears as w_perp / w for the isotropic Weyl vector
w = (0, 1, 2, ..., 24 | 70): a basis of the sublattice orthogonal to w is
extracted with integer row reduction, and 24 representatives spanning a
complement of w inside it give an even positive definite Gram matrix of
determinant 1.

The integer linear algebra lives here too: extended gcd, row-style Hermite
normal form with its unimodular transform, fraction-free determinants,
symmetric inertia counts, and exact rational solves.  Everything is plain
int or Fraction; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

SPACELIKE_DIM = 25
DIM = 26


class ConstructionError(RuntimeError):
    """A construction self-check failed; the library state is unusable."""


# -- bilinear form and membership -------------------------------------------


def raw_form(a: Sequence[int], b: Sequence[int]) -> Fraction:
    """The Lorentzian form on raw doubled coordinates.

    Defined for any pair of doubled 26-tuples, member or not, so sign
    conventions can be exhibited on unit vectors; the value may be a
    quarter-integer off the lattice.
    """
    if len(a) != DIM or len(b) != DIM:
        raise ValueError(f"doubled coordinate vectors must have length {DIM}")
    s = sum(a[i] * b[i] for i in range(SPACELIKE_DIM)) - a[-1] * b[-1]
    return Fraction(s, 4)


def is_member(doubled: Sequence[int]) -> bool:
    """Lattice membership test on doubled coordinates."""
    if len(doubled) != DIM:
        return False
    if not all(isinstance(c, int) for c in doubled):
        return False
    parity = doubled[0] & 1
    if any((c & 1) != parity for c in doubled):
        return False
    return (sum(doubled[:SPACELIKE_DIM]) - doubled[-1]) % 4 == 0


@dataclass(frozen=True)
class LorentzVector:
    """A member of the lattice, held in doubled coordinates."""

    doubled: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.doubled)
        object.__setattr__(self, "doubled", coords)
        if not is_member(coords):
            raise ValueError("doubled coordinates are not a lattice member")

    @classmethod
    def from_true_coords(cls, spacelike: Sequence[int], timelike: int) -> "LorentzVector":
        """Build from integer true coordinates (doubling is internal)."""
        if len(spacelike) != SPACELIKE_DIM:
            raise ValueError(f"expected {SPACELIKE_DIM} spacelike coordinates")
        return cls(tuple(2 * int(c) for c in spacelike) + (2 * int(timelike),))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.doubled)

    def norm(self) -> int:
        return inner_product(self, self)

    def __add__(self, other: "LorentzVector") -> "LorentzVector":
        return LorentzVector(tuple(x + y for x, y in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "LorentzVector") -> "LorentzVector":
        return LorentzVector(tuple(x - y for x, y in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "LorentzVector":
        return LorentzVector(tuple(-x for x in self.doubled))

    def __rmul__(self, k: int) -> "LorentzVector":
        if not isinstance(k, int):
            return NotImplemented
        return LorentzVector(tuple(k * x for x in self.doubled))


def inner_product(a: LorentzVector, b: LorentzVector) -> int:
    """The form on two lattice members; always an integer."""
    value = raw_form(a.doubled, b.doubled)
    if value.denominator != 1:
        raise ConstructionError("form is not integral on claimed members")
    return value.numerator


def weyl_vector() -> LorentzVector:
    """The isotropic vector (0, 1, 2, ..., 24 | 70)."""
    return LorentzVector.from_true_coords(tuple(range(SPACELIKE_DIM)), 70)


# -- exact integer and rational linear algebra -------------------------------


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a x + b y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Row-style Hermite normal form H of an integer matrix M.

    Returns (H, U) with H = U M, U unimodular.  Pivots are positive and
    strictly step right going down, entries above each pivot are reduced
    into [0, pivot), and zero rows sink to the bottom.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    h = [list(map(int, r)) for r in rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        # clear the column below row r with unimodular two-row transforms
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            g, s, t = xgcd(h[r][c], h[i][c])
            pr, pi = h[r][c] // g, h[i][c] // g
            h[r], h[i] = (
                [s * x + t * y for x, y in zip(h[r], h[i])],
                [pr * y - pi * x for x, y in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [s * x + t * y for x, y in zip(u[r], u[i])],
                [pr * y - pi * x for x, y in zip(u[r], u[i])],
            )
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return tuple(tuple(row) for row in h), tuple(tuple(row) for row in u)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inertia(rows: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric integer
    matrix, by symmetric congruence diagonalization over the rationals."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                for j in range(k, n):
                    a[k][j], a[swap][j] = a[swap][j], a[k][j]
                for i in range(k, n):
                    a[i][k], a[i][swap] = a[i][swap], a[i][k]
            else:
                off = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if off is None:
                    zero += 1
                    continue
                # all trailing diagonal entries vanish; fold row/col `off`
                # into k to manufacture the pivot 2 a[k][off]
                for j in range(k, n):
                    a[k][j] += a[off][j]
                for i in range(k, n):
                    a[i][k] += a[i][off]
        pivot = a[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
                a[i][k] = Fraction(0)
    return pos, neg, zero


def solve_linear_exact(
    rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[Fraction, ...]:
    """The unique rational solution of (rows) x = rhs.

    Accepts overdetermined systems; raises if the solution is not unique
    (column rank deficit) or the system is inconsistent.
    """
    m = len(rows)
    if len(rhs) != m:
        raise ValueError("right-hand side length mismatch")
    n = len(rows[0]) if m else 0
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    if any(len(row) != n + 1 for row in a):
        raise ValueError("ragged matrix")
    pivots: list[int] = []
    dead_columns = False
    r = 0
    for c in range(n):
        hit = next((i for i in range(r, m) if a[i][c] != 0), None)
        if hit is None:
            dead_columns = True
            continue
        a[r], a[hit] = a[hit], a[r]
        p = a[r][c]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c] / p
                for j in range(c, n + 1):
                    a[i][j] -= f * a[r][j]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if a[i][n] != 0:
            raise ValueError("inconsistent system")
    if dead_columns:
        raise ValueError("solution is not unique")
    return tuple(a[i][n] / a[i][pivots[i]] for i in range(n))


def integer_matrix_inverse(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    cols = []
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for j in range(n):
        x = solve_linear_exact(rows, ident[j])
        if any(f.denominator != 1 for f in x):
            raise ValueError("matrix has no integer inverse")
        cols.append([f.numerator for f in x])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


# -- Gram matrices -----------------------------------------------------------


@dataclass(frozen=True)
class GramMatrix:
    """A symmetric integer matrix of pairwise inner products."""

    dim: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.dim or any(len(r) != self.dim for r in entries):
            raise ValueError("entries must form a dim x dim square")
        for i in range(self.dim):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GramMatrix":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def is_even(self) -> bool:
        return all(self.entries[i][i] % 2 == 0 for i in range(self.dim))

    def determinant(self) -> int:
        return bareiss_determinant(self.entries)

    def inertia(self) -> tuple[int, int, int]:
        return inertia(self.entries)

    @property
    def is_positive_definite(self) -> bool:
        return self.inertia() == (self.dim, 0, 0)

    def to_jsonable(self) -> dict:
        """Exchange form: all integers rendered as decimal strings."""
        return {
            "dim": str(self.dim),
            "entries": [[str(x) for x in row] for row in self.entries],
        }


def gram_of(vectors: Sequence[LorentzVector]) -> GramMatrix:
    rows = [[inner_product(a, b) for b in vectors] for a in vectors]
    return GramMatrix.from_rows(rows)


# -- the lattice and its Leech quotient ---------------------------------------


@lru_cache(maxsize=1)
def lattice_basis() -> tuple[tuple[LorentzVector, ...], GramMatrix]:
    """A basis of the full rank-26 lattice with its Gram matrix.

    Generators, in doubled coordinates: 2 e_i + 2 e_t for each spacelike i,
    the purely timelike 4 e_t, and the all-ones vector (the half-integer
    coset representative).  Hermite reduction of the 27 generators yields 26
    independent rows; determinant -1 and inertia (25, 1) are checked before
    the basis is released.
    """
    gens: list[tuple[int, ...]] = []
    for i in range(SPACELIKE_DIM):
        row = [0] * DIM
        row[i] = 2
        row[-1] = 2
        gens.append(tuple(row))
    gens.append((0,) * SPACELIKE_DIM + (4,))
    gens.append((1,) * DIM)
    h, _ = hermite_normal_form(gens)
    rows = [row for row in h if any(row)]
    if len(rows) != DIM:
        raise ConstructionError(f"expected rank {DIM}, got {len(rows)}")
    basis = tuple(LorentzVector(row) for row in rows)
    gram = gram_of(basis)
    if bareiss_determinant(gram.entries) != -1:
        raise ConstructionError("basis Gram determinant is not -1")
    if not gram.is_even:
        raise ConstructionError("basis Gram has an odd diagonal entry")
    if inertia(gram.entries) != (SPACELIKE_DIM, 1, 0):
        raise ConstructionError("basis Gram has the wrong signature")
    return basis, gram


def coordinates_in_basis(v: LorentzVector) -> tuple[int, ...]:
    """Integer coordinates of a member with respect to lattice_basis()."""
    basis, _ = lattice_basis()
    system = [[b.doubled[k] for b in basis] for k in range(DIM)]
    sol = solve_linear_exact(system, v.doubled)
    if any(f.denominator != 1 for f in sol):
        raise ConstructionError("member has non-integer basis coordinates")
    return tuple(f.numerator for f in sol)


def orthogonal_complement_basis(w: LorentzVector) -> tuple[LorentzVector, ...]:
    """A basis of the rank-25 sublattice of vectors orthogonal to w.

    w must be nonzero and primitive (its basis coordinates coprime).
    """
    if w.is_zero:
        raise ValueError("the zero vector has no orthogonal complement basis")
    coords = coordinates_in_basis(w)
    if gcd(*coords) != 1:
        raise ValueError("non-primitive vector")
    basis, _ = lattice_basis()
    pairings = [[inner_product(b, w)] for b in basis]
    h, u = hermite_normal_form(pairings)
    if h[0][0] == 0 or any(h[i][0] for i in range(1, DIM)):
        raise ConstructionError("pairing column did not reduce to a single pivot")
    out = []
    for krow in u[1:]:
        d = [0] * DIM
        for coef, b in zip(krow, basis):
            if coef:
                for k in range(DIM):
                    d[k] += coef * b.doubled[k]
        vec = LorentzVector(tuple(d))
        if inner_product(vec, w) != 0:
            raise ConstructionError("complement vector is not orthogonal to w")
        out.append(vec)
    return tuple(out)


def _complete_to_unimodular(first_row: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """A unimodular integer matrix whose first row is the given primitive
    vector; the rows below descend to a basis of any complement."""
    n = len(first_row)
    h, u = hermite_normal_form([[c] for c in first_row])
    if h[0][0] != 1:
        raise ValueError("row is not primitive")
    v = integer_matrix_inverse(u)
    w = tuple(tuple(v[i][j] for i in range(n)) for j in range(n))
    if w[0] != tuple(first_row):
        raise ConstructionError("unimodular completion lost the first row")
    return w


@lru_cache(maxsize=1)
def quotient_representatives() -> tuple[LorentzVector, ...]:
    """24 members of w_perp descending to a basis of w_perp / w.

    Extends the coordinate vector of w (primitive inside w_perp) to a
    unimodular basis of the coordinate space; the other 24 rows, mapped back
    to lattice vectors, represent the quotient classes.
    """
    w = weyl_vector()
    comp = orthogonal_complement_basis(w)
    system = [[b.doubled[k] for b in comp] for k in range(DIM)]
    sol = solve_linear_exact(system, w.doubled)
    if any(f.denominator != 1 for f in sol):
        raise ConstructionError("w has non-integer coordinates in its complement")
    wcoords = tuple(f.numerator for f in sol)
    if gcd(*wcoords) != 1:
        raise ConstructionError("w is imprimitive inside its complement")
    rows = _complete_to_unimodular(wcoords)
    reps = []
    for row in rows[1:]:
        d = [0] * DIM
        for coef, b in zip(row, comp):
            if coef:
                for k in range(DIM):
                    d[k] += coef * b.doubled[k]
        reps.append(LorentzVector(tuple(d)))
    return tuple(reps)


@lru_cache(maxsize=1)
def leech_gram() -> GramMatrix:
    """Gram matrix of the quotient w_perp / w: even, positive definite,
    determinant 1.  The self-checks run once; failures are fatal."""
    reps = quotient_representatives()
    gram = gram_of(reps)
    if not gram.is_even:
        raise ConstructionError("quotient Gram has an odd diagonal entry")
    if bareiss_determinant(gram.entries) != 1:
        raise ConstructionError("quotient Gram determinant is not 1")
    if inertia(gram.entries) != (gram.dim, 0, 0):
        raise ConstructionError("quotient Gram is not positive definite")
    return gram
