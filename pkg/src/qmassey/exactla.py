"""Exact linear algebra over the rationals.

Dense routines work on lists of Fraction and are meant for the small
(dimension <= a few hundred) solves that dominate this package: Poincare
pairing inversions, ambiguity-span membership, Hochschild slices, cellular
boundaries.  The sparse routines work on integer dict-rows and exist for the
free-Lie-algebra bracket matrices, which are large but very sparse.

Pivoting is deterministic (first nonzero row, leftmost column) so that every
reported basis, witness and certificate is reproducible byte for byte.
"""
from __future__ import annotations

from fractions import Fraction

Vec = list[Fraction]
Mat = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(entries) -> Vec:
    return [frac(x) for x in entries]


def zeros(n: int) -> Vec:
    return [ZERO] * n


def unit_vec(n: int, i: int) -> Vec:
    v = zeros(n)
    v[i] = ONE
    return v


def vec_add(a: Vec, b: Vec) -> Vec:
    return [x + y for x, y in zip(a, b, strict=True)]


def vec_sub(a: Vec, b: Vec) -> Vec:
    return [x - y for x, y in zip(a, b, strict=True)]


def vec_scale(c, a: Vec) -> Vec:
    c = frac(c)
    return [c * x for x in a]


def vec_dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), ZERO)


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


def mat_copy(m: Mat) -> Mat:
    return [row[:] for row in m]


def transpose(m: Mat) -> Mat:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_vec(m: Mat, v: Vec) -> Vec:
    return [vec_dot(row, v) for row in m]


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return [[vec_dot(row, col) for col in bt] for row in a]


# row reduction ----

def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (new matrix, pivot column list)."""
    a = mat_copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Mat) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m: Mat, cols: int | None = None) -> list[Vec]:
    """Basis of {x : m x = 0}, one vector per free column, deterministic."""
    if not m:
        return [unit_vec(cols, i) for i in range(cols)] if cols else []
    ncols = len(m[0])
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = zeros(ncols)
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(m: Mat, b: Vec) -> Vec | None:
    """One solution of m x = b, or None if inconsistent."""
    if not m:
        return None if any(x != 0 for x in b) else []
    rows, cols = len(m), len(m[0])
    aug = [m[i][:] + [b[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = zeros(cols)
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def span_coefficients(spanning: list[Vec], v: Vec) -> Vec | None:
    """Coefficients c with sum c_i * spanning[i] = v, or None if v is outside."""
    if not spanning:
        return [] if is_zero_vec(v) else None
    return solve(transpose(spanning), v)


def span_basis(spanning: list[Vec]) -> list[Vec]:
    """Deterministic row-reduced basis of the span."""
    if not spanning:
        return []
    red, pivots = rref(spanning)
    return [red[i] for i in range(len(pivots))]


def annihilating_functional(spanning: list[Vec], v: Vec) -> Vec | None:
    """A functional phi with phi(s)=0 on the span and phi(v)=1.

    Exists iff v is not in the span; returns None otherwise.
    """
    n = len(v)
    candidates = nullspace(spanning, cols=n) if spanning else [unit_vec(n, i) for i in range(n)]
    for phi in candidates:
        val = vec_dot(phi, v)
        if val != 0:
            return vec_scale(ONE / val, phi)
    return None


# sparse integer rows ----

def sparse_rank_and_kernel(rows: list[dict[int, int]], ncols: int) -> tuple[int, list[Vec]]:
    """Rank and right-kernel basis for a sparse integer equation system.

    rows are equations {column: coefficient}; kernel vectors are dense Vec.
    """
    work = [dict(r) for r in rows if r]
    echelon: dict[int, dict[int, Fraction]] = {}
    for r in work:
        row = {c: Fraction(x) for c, x in r.items() if x}
        while row:
            lead = min(row)
            if lead in echelon:
                piv = echelon[lead]
                f = row[lead]
                for c, x in piv.items():
                    nv = row.get(c, ZERO) - f * x
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                inv = ONE / row[lead]
                echelon[lead] = {c: x * inv for c, x in row.items()}
                break
    pivots = sorted(echelon)
    pivot_set = set(pivots)
    # back-substitute to reduced form
    for lead in reversed(pivots):
        row = echelon[lead]
        for other_lead in list(row):
            if other_lead != lead and other_lead in echelon:
                f = row[other_lead]
                for c, x in echelon[other_lead].items():
                    if c == other_lead:
                        continue
                    nv = row.get(c, ZERO) - f * x
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                row.pop(other_lead, None)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = zeros(ncols)
        v[fc] = ONE
        for lead in pivots:
            coeff = echelon[lead].get(fc, ZERO)
            if coeff:
                v[lead] = -coeff
        basis.append(v)
    return len(pivots), basis
