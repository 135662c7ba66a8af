"""Graded-commutative algebras over exact rationals, and the quantum
coefficient ring.

An algebra element is a dense coordinate vector (list of Fraction) over the
declared basis.  A coefficient-ring element is a finite map from lattice
classes to rationals.  Everything is immutable-by-convention and pure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import exactla as la

Vec = list[Fraction]
Class = tuple[int, ...]


# homology lattice ----

@dataclass(frozen=True)
class HomologyLattice:
    """Torsion-free second homology with a c1 functional and an effectivity cone.

    Effectivity = membership in the nonnegative integer span of the declared
    generators (plus zero).  Generators must be linearly independent; that is
    all the targets in scope need.
    """
    rank: int
    c1_coeffs: tuple[int, ...]
    effective_generators: tuple[Class, ...]

    def c1(self, a: Class) -> int:
        return sum(c * x for c, x in zip(self.c1_coeffs, a, strict=True))

    def zero(self) -> Class:
        return (0,) * self.rank

    def add(self, a: Class, b: Class) -> Class:
        return tuple(x + y for x, y in zip(a, b, strict=True))

    def sub(self, a: Class, b: Class) -> Class:
        return tuple(x - y for x, y in zip(a, b, strict=True))

    def cone_coefficients(self, a: Class) -> tuple[int, ...] | None:
        """Nonnegative integer coordinates of a in the generator basis, or None."""
        gens = self.effective_generators
        if not gens:
            return () if all(x == 0 for x in a) else None
        cols = [[Fraction(g[i]) for g in gens] for i in range(self.rank)]
        sol = la.solve(cols, [Fraction(x) for x in a])
        if sol is None:
            return None
        out = []
        for c in sol:
            if c.denominator != 1 or c < 0:
                return None
            out.append(int(c))
        # independence of generators makes the solution unique
        return tuple(out)

    def is_effective(self, a: Class) -> bool:
        return self.cone_coefficients(a) is not None

    def effective_splittings(self, b: Class) -> list[tuple[Class, Class]]:
        """All ordered pairs (a1, a2) of effective-or-zero classes with a1+a2=b."""
        coords = self.cone_coefficients(b)
        if coords is None:
            return []
        gens = self.effective_generators
        parts: list[tuple[Class, Class]] = []
        ranges: list[tuple[int, ...]] = [()]
        for bound in coords:
            ranges = [r + (k,) for r in ranges for k in range(bound + 1)]
        for r in ranges:
            a1 = self.zero()
            for k, g in zip(r, gens):
                a1 = self.add(a1, tuple(k * x for x in g))
            parts.append((a1, self.sub(b, a1)))
        return parts


GammaElement = dict[Class, Fraction]


def gamma_mul(lattice: HomologyLattice, a: GammaElement, b: GammaElement) -> GammaElement:
    out: GammaElement = {}
    for ca, xa in a.items():
        for cb, xb in b.items():
            key = lattice.add(ca, cb)
            v = out.get(key, Fraction(0)) + xa * xb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


@dataclass(frozen=True)
class IdealSpec:
    """Truncation ideal: either by c1 level, or pivoted at a class A."""
    kind: str  # "c" or "A"
    level: int = 0
    pivot: Class = ()
    lattice: HomologyLattice | None = None

    @staticmethod
    def by_level(lattice: HomologyLattice, level: int) -> "IdealSpec":
        return IdealSpec(kind="c", level=level, lattice=lattice)

    @staticmethod
    def by_pivot(lattice: HomologyLattice, pivot: Class) -> "IdealSpec":
        return IdealSpec(kind="A", pivot=pivot, lattice=lattice)

    def contains(self, b: Class) -> bool:
        c1b = self.lattice.c1(b)
        if self.kind == "c":
            return c1b > self.level
        c1a = self.lattice.c1(self.pivot)
        return (c1b == c1a and b != self.pivot) or c1b > c1a

    def surviving(self, classes) -> list[Class]:
        return [b for b in classes if not self.contains(b)]


def truncate(x: GammaElement, ideal: IdealSpec) -> GammaElement:
    return {c: v for c, v in x.items() if not ideal.contains(c)}


# graded algebra ----

class GradedAlgebra:
    """Finite-dimensional graded-commutative algebra with a pairing.

    Structure constants are stored per ordered basis pair; pairs omitted from
    the input are zero.  When only one order of a pair is declared the other
    is filled in with the Koszul sign.
    """

    def __init__(self, labels: list[str], degrees: list[int], unit_label: str):
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.dim = len(labels)
        self.index = {lab: i for i, lab in enumerate(labels)}
        self.unit_index = self.index[unit_label]
        self._cup: dict[tuple[int, int], Vec] = {}
        self._pair: dict[tuple[int, int], Fraction] = {}
        self._declared_cup: set[tuple[int, int]] = set()
        self._declared_pair: set[tuple[int, int]] = set()

    # construction
    def set_cup(self, i: int, j: int, value: Vec) -> None:
        self._cup[(i, j)] = value
        self._declared_cup.add((i, j))

    def set_pair(self, i: int, j: int, value: Fraction) -> None:
        self._pair[(i, j)] = value
        self._declared_pair.add((i, j))

    def fill_koszul(self) -> None:
        """Fill undeclared transposed entries by graded commutativity."""
        for (i, j), v in list(self._cup.items()):
            if (j, i) not in self._declared_cup:
                sign = -1 if (self.degrees[i] % 2 and self.degrees[j] % 2) else 1
                self._cup[(j, i)] = la.vec_scale(sign, v)
        for (i, j), v in list(self._pair.items()):
            if (j, i) not in self._declared_pair:
                sign = -1 if (self.degrees[i] % 2 and self.degrees[j] % 2) else 1
                self._pair[(j, i)] = sign * v

    # elements
    def zero(self) -> Vec:
        return la.zeros(self.dim)

    def basis_vec(self, label: str) -> Vec:
        return la.unit_vec(self.dim, self.index[label])

    def unit(self) -> Vec:
        return la.unit_vec(self.dim, self.unit_index)

    def degree_of(self, v: Vec) -> int | None:
        """Degree of a homogeneous element; None for 0 or mixed."""
        degs = {self.degrees[i] for i, x in enumerate(v) if x != 0}
        if len(degs) != 1:
            return None
        return degs.pop()

    def cup_basis(self, i: int, j: int) -> Vec:
        return self._cup.get((i, j), self.zero())

    def cup(self, x: Vec, y: Vec) -> Vec:
        out = self.zero()
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, s in enumerate(self.cup_basis(i, j)):
                    if s:
                        out[k] += c * s
        return out

    def pair_basis(self, i: int, j: int) -> Fraction:
        return self._pair.get((i, j), Fraction(0))

    def pairing(self, x: Vec, y: Vec) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * self.pair_basis(i, j)
        return total

    def integral(self, x: Vec) -> Fraction:
        """Evaluation against the fundamental class: pairing with the unit."""
        return self.pairing(x, self.unit())

    def pairing_matrix(self) -> list[Vec]:
        return [[self.pair_basis(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def basis_of_degree(self, d: int) -> list[int]:
        return [i for i, deg in enumerate(self.degrees) if deg == d]

    # rendering
    def format_element(self, v: Vec) -> str:
        terms = []
        for i, x in enumerate(v):
            if x == 0:
                continue
            if x == 1:
                terms.append(f"+{self.labels[i]}")
            elif x == -1:
                terms.append(f"-{self.labels[i]}")
            else:
                sign = "+" if x > 0 else "-"
                terms.append(f"{sign}{abs(x)}*{self.labels[i]}")
        if not terms:
            return "0"
        head = terms[0][1:] if terms[0][0] == "+" else terms[0]
        return head + " ".join([""] + terms[1:]) if len(terms) > 1 else head

    def verify(self) -> list[str]:
        """Report every violated algebra axiom instance; empty means verified."""
        problems = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.cup_basis(i, j)
                ji = self.cup_basis(j, i)
                sign = -1 if (self.degrees[i] % 2 and self.degrees[j] % 2) else 1
                if ij != la.vec_scale(sign, ji):
                    problems.append(
                        f"graded commutativity fails at ({self.labels[i]},{self.labels[j]})")
                d = self.degree_of(ij)
                if d is not None and d != self.degrees[i] + self.degrees[j]:
                    problems.append(
                        f"degree additivity fails at ({self.labels[i]},{self.labels[j]})")
                psign = -1 if (self.degrees[i] % 2 and self.degrees[j] % 2) else 1
                if self.pair_basis(i, j) != psign * self.pair_basis(j, i):
                    problems.append(
                        f"pairing symmetry fails at ({self.labels[i]},{self.labels[j]})")
        u = self.unit()
        for i in range(n):
            b = la.unit_vec(n, i)
            if self.cup(u, b) != b or self.cup(b, u) != b:
                problems.append(f"unit fails at {self.labels[i]}")
        for i in range(n):
            for j in range(n):
                xy = self.cup_basis(i, j)
                for k in range(n):
                    left = self.cup(xy, la.unit_vec(n, k))
                    right = self.cup(la.unit_vec(n, i), self.cup_basis(j, k))
                    if left != right:
                        problems.append(
                            "associativity fails at "
                            f"({self.labels[i]},{self.labels[j]},{self.labels[k]})")
        if la.rank(self.pairing_matrix()) != n:
            problems.append("pairing is degenerate")
        return problems


# matrices over an algebra ----

@dataclass
class MatrixElement:
    """Square matrix with algebra-element entries (coordinate vectors)."""
    size: int
    entries: list[list[Vec]]

    @staticmethod
    def zero(size: int, dim: int) -> "MatrixElement":
        return MatrixElement(size, [[la.zeros(dim) for _ in range(size)] for _ in range(size)])

    def is_zero(self) -> bool:
        return all(la.is_zero_vec(e) for row in self.entries for e in row)

    def flatten(self) -> Vec:
        out: Vec = []
        for row in self.entries:
            for e in row:
                out.extend(e)
        return out

    def map_entries(self, fn) -> "MatrixElement":
        return MatrixElement(self.size, [[fn(e) for e in row] for row in self.entries])

    def add(self, other: "MatrixElement") -> "MatrixElement":
        return MatrixElement(self.size, [
            [la.vec_add(a, b) for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)])

    def sub(self, other: "MatrixElement") -> "MatrixElement":
        return MatrixElement(self.size, [
            [la.vec_sub(a, b) for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)])


def matrix_mul(x: MatrixElement, z: MatrixElement, product) -> MatrixElement:
    if x.size != z.size:
        raise ValueError("matrix size mismatch")
    n = x.size
    dim = len(x.entries[0][0])
    out = MatrixElement.zero(n, dim)
    for i in range(n):
        for j in range(n):
            acc = la.zeros(dim)
            for k in range(n):
                acc = la.vec_add(acc, product(x.entries[i][k], z.entries[k][j]))
            out.entries[i][j] = acc
    return out


def matrix_apply3(x3: MatrixElement, x2: MatrixElement, x1: MatrixElement, trilinear) -> MatrixElement:
    """Entrywise extension of a trilinear map: no extra signs, plain contraction."""
    n = x3.size
    dim = len(x3.entries[0][0])
    out = MatrixElement.zero(n, dim)
    for i in range(n):
        for j in range(n):
            acc = la.zeros(dim)
            for k2 in range(n):
                for k1 in range(n):
                    acc = la.vec_add(
                        acc, trilinear(x3.entries[i][k2], x2.entries[k2][k1], x1.entries[k1][j]))
            out.entries[i][j] = acc
    return out


# text format ----

def parse_rational(tok: str) -> Fraction:
    return Fraction(tok)


def parse_lincomb(algebra: GradedAlgebra, text: str) -> Vec:
    """Parse `3*h - 1/2*u + pt` style combinations over the basis."""
    out = algebra.zero()
    text = text.strip()
    if text == "0":
        return out
    tokens = text.replace("-", " -").replace("+", " +").split()
    for tok in tokens:
        sign = Fraction(1)
        if tok.startswith("+"):
            tok = tok[1:]
        elif tok.startswith("-"):
            sign = Fraction(-1)
            tok = tok[1:]
        if "*" in tok:
            coeff_s, label = tok.split("*")
            coeff = parse_rational(coeff_s)
        else:
            coeff, label = Fraction(1), tok
        if label not in algebra.index:
            raise ValueError(f"unknown basis label {label!r}")
        out[algebra.index[label]] += sign * coeff
    return out


def load_algebra_text(text: str) -> tuple[GradedAlgebra, HomologyLattice]:
    """Load the one-statement-per-line algebra description format."""
    basis: list[tuple[str, int]] = []
    unit_label = None
    cup_lines: list[tuple[str, str, str]] = []
    pair_lines: list[tuple[str, str, str]] = []
    lattice_rank = 0
    c1_coeffs: tuple[int, ...] = ()
    generators: list[Class] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split(None, 1)
        body = rest[0] if rest else ""
        if head == "basis":
            lab, deg = body.split()
            basis.append((lab, int(deg)))
        elif head == "unit":
            unit_label = body.strip()
        elif head == "cup":
            lhs, rhs = body.split("=", 1)
            a, b = lhs.split()
            cup_lines.append((a, b, rhs.strip()))
        elif head == "pair":
            lhs, rhs = body.split("=", 1)
            a, b = lhs.split()
            pair_lines.append((a, b, rhs.strip()))
        elif head == "lattice":
            lattice_rank = int(body)
        elif head == "c1":
            c1_coeffs = tuple(int(t) for t in body.split())
        elif head == "effective":
            generators.append(tuple(int(t) for t in body.split()))
        else:
            raise ValueError(f"unknown statement {head!r}")
    if unit_label is None:
        raise ValueError("no unit declared")
    alg = GradedAlgebra([b[0] for b in basis], [b[1] for b in basis], unit_label)
    for a, b, rhs in cup_lines:
        alg.set_cup(alg.index[a], alg.index[b], parse_lincomb(alg, rhs))
    for a, b, rhs in pair_lines:
        alg.set_pair(alg.index[a], alg.index[b], parse_rational(rhs))
    alg.fill_koszul()
    lattice = HomologyLattice(lattice_rank, c1_coeffs, tuple(generators))
    return alg, lattice
