"""Sparse exact matrices over a cyclotomic field, plus null-space dimension.

All module generator matrices are monomial (at most one entry per row),
so products, powers, and relation residuals stay extremely sparse; the
representation is a dict of rows, each row a dict col -> nonzero scalar.
"""

from __future__ import annotations


class CycMatrix:
    """Sparse d x d matrix over a fixed CyclotomicField."""

    __slots__ = ("field", "dim", "rows")

    def __init__(self, field, dim, rows=None):
        self.field = field
        self.dim = dim
        self.rows = rows if rows is not None else {}

    @classmethod
    def identity(cls, field, dim):
        one = field.one()
        return cls(field, dim, {i: {i: one} for i in range(dim)})

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim, {})

    def set(self, r, c, value):
        if value.is_zero():
            row = self.rows.get(r)
            if row and c in row:
                del row[c]
                if not row:
                    del self.rows[r]
        else:
            self.rows.setdefault(r, {})[c] = value

    def get(self, r, c):
        return self.rows.get(r, {}).get(c, self.field.zero())

    def entries(self):
        for r, row in self.rows.items():
            for c, v in row.items():
                yield r, c, v

    def is_zero(self) -> bool:
        return not self.rows

    def copy(self) -> "CycMatrix":
        return CycMatrix(self.field, self.dim,
                         {r: dict(row) for r, row in self.rows.items()})

    def _check(self, other):
        if self.field is not other.field or self.dim != other.dim:
            raise ValueError("matrix shape or field mismatch")

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (self.field is other.field and self.dim == other.dim
                and self.rows == other.rows)

    def __add__(self, other):
        self._check(other)
        out = self.copy()
        for r, row in other.rows.items():
            for c, v in row.items():
                out.set(r, c, out.get(r, c) + v)
        return out

    def __sub__(self, other):
        self._check(other)
        out = self.copy()
        for r, row in other.rows.items():
            for c, v in row.items():
                out.set(r, c, out.get(r, c) - v)
        return out

    def __neg__(self):
        return CycMatrix(self.field, self.dim,
                         {r: {c: -v for c, v in row.items()}
                          for r, row in self.rows.items()})

    def scale(self, scalar) -> "CycMatrix":
        if scalar.is_zero():
            return CycMatrix.zero(self.field, self.dim)
        return CycMatrix(self.field, self.dim,
                         {r: {c: scalar * v for c, v in row.items()}
                          for r, row in self.rows.items()})

    def __matmul__(self, other):
        self._check(other)
        out = CycMatrix(self.field, self.dim)
        for r, row in self.rows.items():
            acc: dict = {}
            for t, v in row.items():
                brow = other.rows.get(t)
                if not brow:
                    continue
                for c, w in brow.items():
                    cur = acc.get(c)
                    cur = v * w if cur is None else cur + v * w
                    if cur.is_zero():
                        acc.pop(c, None)
                    else:
                        acc[c] = cur
            if acc:
                out.rows[r] = acc
        return out

    def __pow__(self, e: int) -> "CycMatrix":
        if e < 0:
            raise ValueError("negative matrix powers not supported")
        result = CycMatrix.identity(self.field, self.dim)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def is_monomial(self) -> bool:
        """At most one nonzero per row."""
        return all(len(row) <= 1 for row in self.rows.values())

    def is_diagonal(self) -> bool:
        return all(set(row) <= {r} for r, row in self.rows.items())

    def diagonal(self):
        return [self.get(i, i) for i in range(self.dim)]

    def as_scalar(self):
        """The scalar c with self == c * I, or None (zero matrix gives 0)."""
        if self.is_zero():
            return self.field.zero()
        if not self.is_diagonal() or len(self.rows) != self.dim:
            return None
        diag = self.diagonal()
        first = diag[0]
        if any(v != first for v in diag[1:]):
            return None
        return first

    def permuted(self, perm) -> "CycMatrix":
        """Conjugate by the basis relabeling i -> perm[i]."""
        out = CycMatrix(self.field, self.dim)
        for r, c, v in self.entries():
            out.set(perm[r], perm[c], v)
        return out

    def __repr__(self):
        nnz = sum(len(row) for row in self.rows.values())
        return f"CycMatrix({self.dim}x{self.dim}, {nnz} nonzero)"


def nullspace_dimension(equations, ncols: int) -> int:
    """Dimension of the solution space of a homogeneous exact linear system.

    ``equations`` is an iterable of sparse rows (dict col -> scalar) over
    one cyclotomic field.  Plain Gaussian elimination with exact field
    arithmetic; rows here are tiny (commutation with monomial matrices
    couples at most two unknowns) so sparsity is preserved naturally.
    """
    pivots: dict[int, dict] = {}
    for eq in equations:
        row = dict(eq)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                lead_inv = row[col].inv()
                pivots[col] = {c: lead_inv * v for c, v in row.items()}
                break
            factor = row[col]
            for c, v in piv.items():
                cur = row.get(c)
                cur = -factor * v if cur is None else cur - factor * v
                if cur.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = cur
    return ncols - len(pivots)
