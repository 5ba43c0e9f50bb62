"""Exact dense matrices over a FieldContext.

Matrices are immutable: a tuple of row tuples of plain field values, plus the
owning context.  Columns are images of basis vectors (operators act on column
coordinate vectors).  All algorithms are classical O(n^3) elimination; at the
dimensions this package works with, exactness beats asymptotics.
"""

from __future__ import annotations


class SingularMatrix(ArithmeticError):
    pass


class DenseMatrix:
    __slots__ = ("ctx", "rows")

    def __init__(self, ctx, rows):
        self.ctx = ctx
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, ctx, n):
        one, zero = ctx.one, ctx.zero
        return cls(ctx, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ctx, cols):
        return cls(ctx, zip(*cols))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def column(self, j):
        return [row[j] for row in self.rows]

    def columns(self):
        return [list(col) for col in zip(*self.rows)]

    def __eq__(self, other):
        return isinstance(other, DenseMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"DenseMatrix({self.nrows}x{self.ncols} over {self.ctx.describe()})"

    def __mul__(self, other):
        ctx = self.ctx
        if isinstance(other, DenseMatrix):
            if other.ctx is not ctx:
                raise ValueError("mixed field contexts")
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            cols = list(zip(*other.rows))
            if ctx.kind == "prime":
                p = ctx.p
                rows = [tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
                        for row in self.rows]
            else:
                add, mul, zero = ctx.add, ctx.mul, ctx.zero
                rows = []
                for row in self.rows:
                    out = []
                    for col in cols:
                        acc = zero
                        for a, b in zip(row, col):
                            if a != zero and b != zero:
                                acc = add(acc, mul(a, b))
                        out.append(acc)
                    rows.append(tuple(out))
            return DenseMatrix(ctx, rows)
        return NotImplemented

    def apply(self, vec):
        """Matrix-vector product (vec is a sequence of field values)."""
        ctx = self.ctx
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        if ctx.kind == "prime":
            p = ctx.p
            return [sum(a * b for a, b in zip(row, vec)) % p for row in self.rows]
        add, mul, zero = ctx.add, ctx.mul, ctx.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, vec):
                if a != zero and b != zero:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return out

    def scale(self, c):
        mul = self.ctx.mul
        return DenseMatrix(self.ctx, [tuple(mul(c, a) for a in row) for row in self.rows])

    def trace(self):
        ctx = self.ctx
        acc = ctx.zero
        for i, row in enumerate(self.rows):
            acc = ctx.add(acc, row[i])
        return acc

    def transpose(self):
        return DenseMatrix(self.ctx, zip(*self.rows))

    def det(self):
        """Exact determinant by Gaussian elimination with row swaps."""
        ctx = self.ctx
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(row) for row in self.rows]
        zero, sub, mul, inv = ctx.zero, ctx.sub, ctx.mul, ctx.inv
        det = ctx.one
        sign = False
        for j in range(n):
            pivot = next((i for i in range(j, n) if rows[i][j] != zero), None)
            if pivot is None:
                return zero
            if pivot != j:
                rows[j], rows[pivot] = rows[pivot], rows[j]
                sign = not sign
            pv = rows[j][j]
            det = mul(det, pv)
            pv_inv = inv(pv)
            for i in range(j + 1, n):
                f = rows[i][j]
                if f != zero:
                    f = mul(f, pv_inv)
                    rows[i] = [sub(a, mul(f, b)) for a, b in zip(rows[i], rows[j])]
        return ctx.neg(det) if sign else det

    def inverse(self):
        ctx = self.ctx
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        zero, one = ctx.zero, ctx.one
        sub, mul, inv = ctx.sub, ctx.mul, ctx.inv
        rows = [list(row) + [one if i == j else zero for j in range(n)]
                for i, row in enumerate(self.rows)]
        for j in range(n):
            pivot = next((i for i in range(j, n) if rows[i][j] != zero), None)
            if pivot is None:
                raise SingularMatrix("matrix is singular")
            if pivot != j:
                rows[j], rows[pivot] = rows[pivot], rows[j]
            pv_inv = inv(rows[j][j])
            rows[j] = [mul(pv_inv, a) for a in rows[j]]
            for i in range(n):
                if i != j and rows[i][j] != zero:
                    f = rows[i][j]
                    rows[i] = [sub(a, mul(f, b)) for a, b in zip(rows[i], rows[j])]
        return DenseMatrix(ctx, [row[n:] for row in rows])

    def kron(self, other):
        """Kronecker product; the left factor carries the more significant index."""
        ctx = self.ctx
        if other.ctx is not ctx:
            raise ValueError("mixed field contexts")
        mul, zero = ctx.mul, ctx.zero
        rows = []
        for arow in self.rows:
            for brow in other.rows:
                out = []
                for a in arow:
                    if a == zero:
                        out.extend([zero] * len(brow))
                    else:
                        out.extend(mul(a, b) for b in brow)
                rows.append(tuple(out))
        return DenseMatrix(ctx, rows)

    def serialize(self):
        ser = self.ctx.serialize_elem
        return [[ser(a) for a in row] for row in self.rows]
