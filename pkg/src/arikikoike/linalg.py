"""
Exact linear algebra over Q or a prime field.

Elimination is delegated to flint's ``fmpq_mat`` / ``nmod_mat``; this module
fixes the conventions around it (vectors are rows, the field is inferred from
the entries, and "no solution" is a value, not an exception).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import flint

__all__ = ["ExactMatrix", "rank", "solve", "column_space", "intersection_dim", "row_reduce"]


def _modulus(rows) -> int | None:
    for row in rows:
        for x in row:
            if isinstance(x, flint.nmod):
                return x.modulus()
    return None


def _flint_mat(rows, ncols: int | None = None):
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else (ncols or 0)
    p = _modulus(rows)
    if p is None:
        return flint.fmpq_mat(nrows, ncols, [x for r in rows for x in r])
    return flint.nmod_mat(nrows, ncols, [int(x) for r in rows for x in r], p)


def _field_tag(rows) -> str:
    p = _modulus(rows)
    return "Q" if p is None else f"Fp:{p}"


@dataclass
class ExactMatrix:
    """Dense matrix of field scalars; ``entries`` is a list of rows."""

    rows: int
    cols: int
    entries: list = field(repr=False)
    field_tag: str = "Q"

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, rows, _field_tag(rows))

    @classmethod
    def from_columns(cls, cols) -> "ExactMatrix":
        cols = [list(c) for c in cols]
        nrows = len(cols[0]) if cols else 0
        return cls.from_rows([[c[i] for c in cols] for i in range(nrows)])

    def _flint(self):
        return _flint_mat(self.entries, self.cols)

    @classmethod
    def _wrap(cls, mat, tag: str) -> "ExactMatrix":
        rows = [list(r) for r in mat.tolist()]
        if tag == "Q":
            rows = [[flint.fmpq(x) for x in r] for r in rows]
        else:
            p = int(tag[3:])
            rows = [[flint.nmod(int(x), p) for x in r] for r in rows]
        return cls(mat.nrows(), mat.ncols(), rows, tag)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return ExactMatrix._wrap(self._flint() * other._flint(), self.field_tag)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix._wrap(self._flint() + other._flint(), self.field_tag)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix._wrap(self._flint() - other._flint(), self.field_tag)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, [list(c) for c in zip(*self.entries)],
                           self.field_tag)

    def is_zero(self) -> bool:
        return not any(a for r in self.entries for a in r)

    def apply(self, vec) -> list:
        out = []
        for row in self.entries:
            acc = 0
            for a, b in zip(row, vec):
                if a and b:
                    acc = a * b + acc
            out.append(acc)
        return out

    def trace(self):
        out = 0
        for i in range(min(self.rows, self.cols)):
            out = self.entries[i][i] + out
        return out

    def rank(self) -> int:
        if not self.rows or not self.cols:
            return 0
        return self._flint().rank()

    def determinant(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return self._flint().det()


def row_reduce(rows) -> tuple[list, list]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return [], []
    tag = _field_tag(rows)
    red, rk = _flint_mat(rows).rref()
    red = ExactMatrix._wrap(red, tag).entries[:rk]
    pivots = [next(j for j, x in enumerate(r) if x) for r in red]
    return red, pivots


def rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return _flint_mat(rows).rank()


def column_space(vectors) -> list:
    """A basis (as RREF rows) of the span of the given vectors."""
    return row_reduce(vectors)[0]


def intersection_dim(span_a, span_b) -> int:
    """dim(A cap B) = dim A + dim B - dim(A + B)."""
    return rank(span_a) + rank(span_b) - rank(list(span_a) + list(span_b))


def solve(vectors, target):
    """Coefficients x with sum x_i vectors[i] = target, or None if target is outside the span.

    Free coordinates are set to zero, so the answer is unique whenever the
    vectors are independent.
    """
    n = len(vectors)
    dim = len(target)
    if n == 0:
        return [] if not any(target) else None
    # columns are the vectors, last column the target
    aug = [[v[i] for v in vectors] + [target[i]] for i in range(dim)]
    red, pivots = row_reduce(aug)
    if n in pivots:
        return None
    zero = (red[0][n] * 0) if red else target[0] * 0
    x = [zero] * n
    for row, col in zip(red, pivots):
        x[col] = row[n]
    return x
