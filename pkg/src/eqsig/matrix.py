"""Exact dense integer matrices.

Everything here works over Python ints (and :class:`fractions.Fraction`
where elimination needs division), so results are bit-exact no matter how
large the entries grow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class SymIntMatrix:
    """Immutable symmetric matrix of arbitrary-precision integers."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(_as_int(x) for x in row) for row in rows)
        m = len(rows)
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError(f"row {i} has length {len(row)}, expected {m}")
        for i in range(m):
            for j in range(i + 1, m):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        f"matrix is not symmetric: entry ({i},{j})={rows[i][j]} "
                        f"but ({j},{i})={rows[j][i]}"
                    )
        self._rows = rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def size(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, SymIntMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SymIntMatrix({[list(r) for r in self._rows]!r})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def principal(self, indices: Sequence[int]) -> "SymIntMatrix":
        """Principal submatrix on ``indices`` (in the given order)."""
        return SymIntMatrix([[self._rows[i][j] for j in indices] for i in indices])

    def __add__(self, other: "SymIntMatrix") -> "SymIntMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return SymIntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "SymIntMatrix") -> "SymIntMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return SymIntMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def scale(self, k: int) -> "SymIntMatrix":
        return SymIntMatrix([[k * a for a in r] for r in self._rows])

    def matvec(self, x: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(r, x)) for r in self._rows]

    def congruent(self, c: Sequence[Sequence[int]]) -> "SymIntMatrix":
        """Return ``Cᵀ M C`` for a square integer matrix ``C``."""
        m = self.size
        mc = [[sum(self._rows[i][k] * c[k][j] for k in range(m)) for j in range(m)]
              for i in range(m)]
        return SymIntMatrix(
            [[sum(c[k][i] * mc[k][j] for k in range(m)) for j in range(m)]
             for i in range(m)]
        )

    @classmethod
    def identity(cls, m: int) -> "SymIntMatrix":
        return cls([[int(i == j) for j in range(m)] for i in range(m)])

    @classmethod
    def outer(cls, u: Sequence[int], t: int = 1) -> "SymIntMatrix":
        """The rank-one matrix ``t·u·uᵀ``."""
        return cls([[t * a * b for b in u] for a in u])


def _as_int(x) -> int:
    # bool is an int subclass; reject it along with floats
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected an integer entry, got {x!r}")
    return x


def _square_rows(m) -> list[list]:
    rows = [list(r) for r in (m.rows if isinstance(m, SymIntMatrix) else m)]
    for r in rows:
        if len(r) != len(rows):
            raise ValueError("matrix is not square")
    return rows


def det(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Accepts a :class:`SymIntMatrix` or any square sequence of integer rows.
    The determinant of the empty matrix is 1.
    """
    a = _square_rows(m)
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact: Bareiss guarantees divisibility
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def rank(m) -> int:
    """Rank by row reduction over the rationals."""
    a = [[Fraction(x) for x in r] for r in _square_rows(m)]
    n = len(a)
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, n):
            if a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def solve(m, b: Sequence[int]) -> list[Fraction]:
    """Solve ``M x = b`` exactly; raises ``ZeroDivisionError`` if ``M`` is singular."""
    a = [[Fraction(x) for x in r] + [Fraction(y)] for r, y in zip(_square_rows(m), b)]
    n = len(a)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n] for row in a]
