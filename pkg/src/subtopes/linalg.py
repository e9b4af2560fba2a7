"""Exact integer linear algebra by fraction-free (Bareiss) elimination.

Python integers are unbounded, so intermediate minors never overflow; the
Hadamard bound ``t**(t/2)`` for +-1 matrices only affects speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, SingularError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; ``role`` is a display tag ("M", "W", "N", "P", "X")."""

    rows: tuple[tuple[int, ...], ...]
    role: str = field(default="", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise DomainError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, i):
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def scaled(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * x for x in r) for r in self.rows), self.role)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise DomainError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def format(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def vec_mat(x: Sequence, A) -> tuple:
    """Row vector times matrix; works for ints and Fractions alike."""
    rows = A.rows if isinstance(A, IntMatrix) else A
    n = len(rows[0])
    out = [0] * n
    for xi, row in zip(x, rows):
        if xi:
            for j in range(n):
                out[j] += xi * row[j]
    return tuple(out)


def bareiss(rows: Sequence[Sequence[int]], ncols: int | None = None):
    """Fraction-free row echelon form.

    Eliminates on the first ``ncols`` columns (all columns by default); extra
    columns ride along as an augmented block. Returns ``(echelon, pivots,
    swaps)`` where ``pivots`` lists the pivot columns.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    if m == 0:
        return a, [], 0
    ncols = len(a[0]) if ncols is None else ncols
    width = len(a[0])
    prev = 1
    k = 0
    swaps = 0
    pivots = []
    for c in range(ncols):
        if k == m:
            break
        p = next((r for r in range(k, m) if a[r][c] != 0), None)
        if p is None:
            continue
        if p != k:
            a[k], a[p] = a[p], a[k]
            swaps += 1
        piv = a[k][c]
        rowk = a[k]
        for i in range(k + 1, m):
            rowi = a[i]
            f = rowi[c]
            for j in range(c + 1, width):
                q, r = divmod(piv * rowi[j] - f * rowk[j], prev)
                # Sylvester's identity guarantees exact division
                assert r == 0, "inexact Bareiss division"
                rowi[j] = q
            rowi[c] = 0
        prev = piv
        pivots.append(c)
        k += 1
    return a, pivots, swaps


def rank(A) -> int:
    rows = A.rows if isinstance(A, IntMatrix) else A
    return len(bareiss(rows)[1])


def det(A) -> int:
    rows = A.rows if isinstance(A, IntMatrix) else A
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant of a non-square matrix")
    ech, pivots, swaps = bareiss(rows)
    if len(pivots) < n:
        return 0
    return (-1) ** swaps * ech[n - 1][n - 1]


def solve_left(target: Sequence[int], basis) -> tuple[Fraction, ...]:
    """Exact solution ``y`` of ``y @ basis == target`` for a square integer basis.

    Works on the transposed system ``basis.T @ y.T == target.T``; back
    substitution stays in integers by carrying the common denominator
    ``det(basis)``.
    """
    rows = basis.rows if isinstance(basis, IntMatrix) else tuple(map(tuple, basis))
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("basis must be square")
    if len(target) != n:
        raise DomainError(f"target length {len(target)} does not match basis size {n}")
    aug = [list(col) + [int(b)] for col, b in zip(zip(*rows), target)]
    ech, pivots, swaps = bareiss(aug, ncols=n)
    if len(pivots) < n:
        raise SingularError(f"basis has rank {len(pivots)} < {n}; no unique solution")
    d = ech[n - 1][n - 1]
    # numerators X with y = X / d; each division below is exact
    X = [0] * n
    for i in range(n - 1, -1, -1):
        s = d * ech[i][n] - sum(ech[i][j] * X[j] for j in range(i + 1, n))
        q, r = divmod(s, ech[i][i])
        assert r == 0, "inexact back substitution"
        X[i] = q
    return tuple(Fraction(x, d) for x in X)


def inverse(A) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse as rows of Fractions (row ``i`` solves ``y @ A == e_i``)."""
    rows = A.rows if isinstance(A, IntMatrix) else A
    n = len(rows)
    return tuple(solve_left(tuple(int(i == j) for j in range(n)), rows) for i in range(n))


def mat_mul(A, B) -> tuple[tuple, ...]:
    """Product of two matrices given as row sequences (ints or Fractions)."""
    A = A.rows if isinstance(A, IntMatrix) else A
    B = B.rows if isinstance(B, IntMatrix) else B
    return tuple(vec_mat(r, B) for r in A)
