"""Exact integer linear algebra.

Smith and Hermite normal forms, lattice membership and indices, and linear
congruence systems solved with explicit witnesses. All arithmetic is on Python
ints, so nothing is ever rounded and nothing overflows.

Lattice bases are :class:`IntMatrix` instances whose *columns* are the basis
vectors.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import _mutation
from .errors import EmptySystem, MembershipError

#: Index of a sublattice of strictly smaller rank.
INFINITE = math.inf


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        entries = tuple(operator.index(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntMatrix:
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> IntMatrix:
        out = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            out[i][i] = v
        return cls.from_rows(out) if rows else cls(0, cols, ())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ocols = other.columns()
        return IntMatrix(
            self.rows, other.cols,
            tuple(sum(a * b for a, b in zip(self.row(i), c))
                  for i in range(self.rows) for c in ocols),
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


LatticeBasis = IntMatrix


@dataclass(frozen=True)
class SmithForm:
    """``left @ A @ right`` is diagonal with entries ``diagonal``."""

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def torsion(self) -> tuple[int, ...]:
        """Nontrivial invariant factors of the cokernel."""
        return tuple(d for d in self.diagonal if d > 1)

    @property
    def free_rank(self) -> int:
        return self.left.rows - self.rank

    def matrix(self) -> IntMatrix:
        return IntMatrix.diagonal(self.diagonal, self.left.rows, self.right.rows)


def _swap_cols(m: list[list[int]], a: int, b: int) -> None:
    for row in m:
        row[a], row[b] = row[b], row[a]


def _add_col(m: list[list[int]], dst: int, src: int, q: int) -> None:
    # column dst += q * column src
    for row in m:
        row[dst] += q * row[src]


def _add_row(m: list[list[int]], dst: int, src: int, q: int) -> None:
    m[dst] = [x + q * y for x, y in zip(m[dst], m[src])]


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Diagonal entries are nonnegative and each divides the next; zeros come last.
    The cokernel ``Z^rows / A Z^cols`` is ``⊕ Z/diagonal[i] ⊕ Z^free_rank``.
    """
    m, n = a.rows, a.cols
    if m == 0 or n == 0:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    A = a.to_rows()
    L = IntMatrix.identity(m).to_rows()
    R = IntMatrix.identity(n).to_rows()

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            A[t], A[i] = A[i], A[t]
            L[t], L[i] = L[i], L[t]
            _swap_cols(A, t, j)
            _swap_cols(R, t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    _add_row(A, i, t, -q)
                    _add_row(L, i, t, -q)
                clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    _add_col(A, j, t, -q)
                    _add_col(R, j, t, -q)
                clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            # pulling a non-multiple into row t forces a smaller pivot next pass
            _add_row(A, t, bad, 1)
            _add_row(L, t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]

    return SmithForm(
        diagonal=tuple(A[i][i] for i in range(min(m, n))),
        left=IntMatrix.from_rows(L),
        right=IntMatrix.from_rows(R),
    )


def _row_hermite(vectors: Iterable[Sequence[int]], width: int) -> list[list[int]]:
    """Row-style Hermite form of the lattice spanned by ``vectors``.

    Rows come back in echelon order with positive pivots; entries above each
    pivot are reduced into ``[0, pivot)``. Zero rows are dropped.
    """
    rows = [list(v) for v in vectors if any(v)]
    r = 0
    for c in range(width):
        while True:
            live = [i for i in range(r, len(rows)) if rows[i][c]]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(rows[i][c]))
            rows[r], rows[i0] = rows[i0], rows[r]
            for i in range(r + 1, len(rows)):
                q = rows[i][c] // rows[r][c]
                if q:
                    _add_row(rows, i, r, -q)
            if all(rows[i][c] == 0 for i in range(r + 1, len(rows))):
                break
        if r < len(rows) and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                if q:
                    _add_row(rows, i, r, -q)
            r += 1
    return rows[:r]


def hermite_basis(generators: IntMatrix) -> LatticeBasis:
    """Reduced basis (as columns) of the lattice spanned by the columns of ``generators``.

    The result is lower-triangular in echelon form: each basis column starts
    with a positive pivot, and entries of earlier columns in a pivot's row lie
    in ``[0, pivot)``. Equal lattices give identical output.
    """
    rows = _row_hermite(generators.columns(), generators.rows)
    if not rows:
        return IntMatrix(generators.rows, 0, ())
    return IntMatrix.from_columns(rows)


def solve_integer_system(a: IntMatrix, b: Sequence[int]) -> tuple[list[int], list[list[int]]] | None:
    """All integer solutions of ``a @ x = b``.

    Returns ``(particular, kernel)`` where every solution is ``particular`` plus
    an integer combination of the ``kernel`` vectors, or None when there is no
    integer solution.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    snf = smith_normal_form(a)
    lb = [sum(x * y for x, y in zip(snf.left.row(i), b)) for i in range(a.rows)]
    rank = snf.rank
    if any(lb[i] for i in range(rank, a.rows)):
        return None
    w = [0] * a.cols
    for i in range(rank):
        q, rem = divmod(lb[i], snf.diagonal[i])
        if rem:
            return None
        w[i] = q
    R = snf.right
    particular = [sum(R[i, j] * w[j] for j in range(a.cols)) for i in range(a.cols)]
    kernel = [list(R.column(j)) for j in range(rank, a.cols)]
    return particular, kernel


def kernel_basis(a: IntMatrix) -> list[list[int]]:
    """Basis of the integer kernel ``{x : a @ x = 0}``."""
    return solve_integer_system(a, [0] * a.rows)[1]


def coordinates(basis: LatticeBasis, vector: Sequence[int]) -> list[int]:
    """Integer coordinates of ``vector`` in a basis with independent columns."""
    sol = solve_integer_system(basis, list(vector))
    if sol is None:
        raise MembershipError(f"{tuple(vector)} is not in the lattice spanned by {basis!r}")
    particular, kernel = sol
    if kernel:
        raise ValueError("basis columns are linearly dependent")
    return particular


def contains(basis: LatticeBasis, vector: Sequence[int]) -> bool:
    return solve_integer_system(basis, list(vector)) is not None


def lattice_index(sub: LatticeBasis, ambient: LatticeBasis) -> int | float:
    """Index ``[ambient : sub]`` of the lattice spanned by ``sub`` in the one spanned by ``ambient``.

    Returns :data:`INFINITE` when ``sub`` has smaller rank, and raises
    :class:`MembershipError` if some column of ``sub`` is not an integer
    combination of the ``ambient`` columns.
    """
    if sub.rows != ambient.rows:
        raise ValueError("lattices live in different ambient spaces")
    basis = hermite_basis(ambient)
    k = basis.cols
    if k == 0:
        if any(sub.entries):
            raise MembershipError("nonzero vector in the zero lattice")
        return 1
    coords = IntMatrix.from_columns([coordinates(basis, col) for col in sub.columns()]) \
        if sub.cols else IntMatrix(k, 0, ())
    if coords.cols == 0:
        return INFINITE
    snf = smith_normal_form(coords)
    if snf.rank < k:
        return INFINITE
    index = math.prod(snf.diagonal[:k])
    if _mutation.active("lattice_index"):
        index *= 2
    return index


# -- linear congruences -------------------------------------------------------

@dataclass(frozen=True)
class LinearForm:
    """``sum(coefficient * variable) + constant`` over named integer variables."""

    coefficients: tuple[tuple[str, int], ...]
    constant: int = 0

    def __init__(self, coefficients: Mapping[str, int] | Iterable[tuple[str, int]], constant: int = 0):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        object.__setattr__(self, "coefficients", tuple((str(k), operator.index(v)) for k, v in items))
        object.__setattr__(self, "constant", operator.index(constant))

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.coefficients)

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        return sum(c * assignment[name] for name, c in self.coefficients) + self.constant


Congruence = tuple[LinearForm, int]


@dataclass(frozen=True)
class CongruenceWitness:
    """An integer assignment together with the congruences it was checked against.

    ``checks`` holds ``(value, modulus)`` pairs, each with ``value % modulus == 0``.
    """

    assignments: Mapping[str, int]
    checks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for value, modulus in self.checks:
            if value % modulus:
                raise ValueError(f"witness check failed: {value} is not divisible by {modulus}")

    def __getitem__(self, name: str) -> int:
        return self.assignments[name]


def _variable_order(system: Sequence[Congruence]) -> list[str]:
    seen: dict[str, None] = {}
    for form, _ in system:
        for name in form.variables:
            seen.setdefault(name, None)
    return list(seen)


def solve_linear_congruences(
    system: Sequence[Congruence],
    variables: Sequence[str] | None = None,
) -> CongruenceWitness | None:
    """Lexicographically smallest solution of ``form ≡ 0 (mod modulus)`` for every pair.

    Each variable ranges over ``[0, lcm of moduli)``; solutions are periodic with
    that period, so the box is complete. Variables are ordered by ``variables``
    if given, else by first appearance. Returns None if there is no solution.

    >>> solve_linear_congruences([(LinearForm({"k": 2}, 4), 8)])["k"]
    2
    """
    if not system:
        raise EmptySystem("no congruences to solve")
    for _, modulus in system:
        if modulus <= 0:
            raise ValueError(f"moduli must be positive, got {modulus}")
    names = list(variables) if variables is not None else _variable_order(system)
    v, m = len(names), len(system)
    period = math.lcm(*(mod for _, mod in system))

    # unknowns: the named variables, then one quotient per congruence
    rows, rhs = [], []
    for i, (form, modulus) in enumerate(system):
        coeffs = dict(form.coefficients)
        unknown = set(coeffs) - set(names)
        if unknown:
            raise ValueError(f"variables {sorted(unknown)} missing from the ordering")
        row = [coeffs.get(name, 0) for name in names] + [0] * m
        row[v + i] = -modulus
        rows.append(row)
        rhs.append(-form.constant)

    solution = solve_integer_system(IntMatrix.from_rows(rows), rhs)
    if solution is None:
        return None
    particular, kernel = solution
    x = particular[:v]
    gens = [k[:v] for k in kernel] + [[period * (i == j) for j in range(v)] for i in range(v)]
    for i, row in enumerate(_row_hermite(gens, v)):
        # the shift lattice contains period * Z^v, so row i has its pivot in column i
        q = x[i] // row[i]
        if q:
            x = [a - q * b for a, b in zip(x, row)]

    assignment = dict(zip(names, x))
    checks = tuple((form.evaluate(assignment), modulus) for form, modulus in system)
    return CongruenceWitness(assignment, checks)
