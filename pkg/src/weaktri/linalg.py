"""Vectors, square matrices, exact Gaussian elimination, and characteristic
polynomials over a FieldCtx.

Row-space utilities work on plain tuples of packed field elements so the
subspace-enumeration layers can stay allocation-light; Vec and Mat wrap the
same representation for the public API.
"""

from __future__ import annotations

from .gf import FieldCtx, Poly


class Vec:
    """Immutable vector of packed field elements."""

    __slots__ = ("field", "entries")

    def __init__(self, field, entries):
        self.field = field
        self.entries = tuple(field.coerce(e) for e in entries)

    @classmethod
    def zeros(cls, field, n):
        return cls(field, (0,) * n)

    @classmethod
    def unit(cls, field, n, i):
        return cls(field, tuple(1 if j == i else 0 for j in range(n)))

    @property
    def n(self):
        return len(self.entries)

    @property
    def is_zero(self):
        return not any(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other):
        F = self.field
        return Vec(F, tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        F = self.field
        return Vec(F, tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        F = self.field
        return Vec(F, tuple(F.neg(a) for a in self.entries))

    def scale(self, c):
        F = self.field
        return Vec(F, tuple(F.mul(c, a) for a in self.entries))

    def dot(self, other):
        F = self.field
        acc = 0
        for a, b in zip(self.entries, other.entries):
            acc = F.add(acc, F.mul(a, b))
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Vec)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return f"Vec{self.entries}"


class Mat:
    """Immutable n-by-n matrix, entries row-major."""

    __slots__ = ("field", "n", "entries")

    def __init__(self, field, n, entries):
        entries = tuple(field.coerce(e) for e in entries)
        if len(entries) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(entries)}")
        self.field = field
        self.n = n
        self.entries = entries

    @classmethod
    def _wrap(cls, field, n, entries):
        # fast path for internally produced, already-reduced entries
        m = object.__new__(cls)
        m.field = field
        m.n = n
        m.entries = entries
        return m

    @classmethod
    def zeros(cls, field, n):
        return cls(field, n, (0,) * (n * n))

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, field, n, i, j):
        """Matrix with a single 1 at row i, column j (0-based)."""
        return cls(field, n, tuple(1 if (r, c) == (i, j) else 0 for r in range(n) for c in range(n)))

    @classmethod
    def from_rows(cls, field, rows):
        rows = [tuple(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix rows must form a square")
        return cls(field, n, tuple(e for r in rows for e in r))

    def entry(self, i, j):
        return self.entries[i * self.n + j]

    def row(self, i):
        return self.entries[i * self.n : (i + 1) * self.n]

    def col(self, j):
        return tuple(self.entries[i * self.n + j] for i in range(self.n))

    def rows(self):
        return [self.row(i) for i in range(self.n)]

    def __add__(self, other):
        F = self.field
        return Mat(F, self.n, tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        F = self.field
        return Mat(F, self.n, tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        F = self.field
        return Mat(F, self.n, tuple(F.neg(a) for a in self.entries))

    def scale(self, c):
        F = self.field
        return Mat(F, self.n, tuple(F.mul(c, a) for a in self.entries))

    def __mul__(self, other):
        F, n = self.field, self.n
        if isinstance(other, Mat):
            out = [0] * (n * n)
            for i in range(n):
                for k in range(n):
                    a = self.entries[i * n + k]
                    if a:
                        for j in range(n):
                            out[i * n + j] = F.add(out[i * n + j], F.mul(a, other.entries[k * n + j]))
            return Mat(F, n, out)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def apply(self, v: Vec) -> Vec:
        F, n = self.field, self.n
        out = []
        for i in range(n):
            acc = 0
            for j in range(n):
                acc = F.add(acc, F.mul(self.entries[i * n + j], v[j]))
            out.append(acc)
        return Vec(F, out)

    def transpose(self):
        n = self.n
        return Mat(self.field, n, tuple(self.entries[j * n + i] for i in range(n) for j in range(n)))

    def trace(self):
        F, n = self.field, self.n
        acc = 0
        for i in range(n):
            acc = F.add(acc, self.entries[i * n + i])
        return acc

    def is_upper_triangular(self):
        n = self.n
        return all(self.entries[i * n + j] == 0 for i in range(n) for j in range(i))

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.n, self.entries))

    def __repr__(self):
        rows = ["[" + " ".join(str(e) for e in self.row(i)) + "]" for i in range(self.n)]
        return "Mat[" + " ".join(rows) + "]"


# -- row-space primitives on plain tuples -------------------------------------


def rref(rows, field):
    """Reduced row echelon form of a list of equal-length rows.

    Returns (reduced_rows, pivot_columns): nonzero rows with leading 1s at
    strictly increasing pivot columns and zeros above and below each pivot.
    """
    work = [list(r) for r in rows]
    m = len(work)
    width = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, m) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = field.inv(work[r][c])
        if inv != 1:
            work[r] = [field.mul(inv, e) for e in work[r]]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in work[:r]], pivots


def span_rows(rows, field):
    """Canonical (RREF) basis of the row space, as a tuple of row tuples."""
    reduced, _ = rref(rows, field)
    return tuple(reduced)


def row_space_reduce(rows, pivots, v, field):
    """Residual of v after reduction against RREF rows with known pivots."""
    v = list(v)
    for row, pc in zip(rows, pivots):
        c = v[pc]
        if c:
            v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
    return tuple(v)


def row_space_contains(rows, v, field):
    reduced, pivots = (rows, [next(i for i, e in enumerate(r) if e) for r in rows]) if rows else ([], [])
    return not any(row_space_reduce(reduced, pivots, v, field))


def rref_solve(a_rows, b, field):
    """One solution x of A x = b (free variables 0), or None if inconsistent."""
    width = len(a_rows[0]) if a_rows else 0
    aug = [tuple(row) + (rhs,) for row, rhs in zip(a_rows, b)]
    reduced, pivots = rref(aug, field)
    x = [0] * width
    for row, pc in zip(reduced, pivots):
        if pc == width:
            return None
        x[pc] = row[-1]
    return tuple(x)


def kernel_basis(a_rows, field):
    """Canonical basis of the null space of A, one vector per free column."""
    width = len(a_rows[0]) if a_rows else 0
    reduced, pivots = rref(a_rows, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = [0] * width
        v[free] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = field.neg(row[free])
        basis.append(tuple(v))
    return basis


# -- square-matrix solvers -----------------------------------------------------


def invert(m: Mat):
    """Inverse matrix, or None when singular."""
    F, n = m.field, m.n
    aug = [list(m.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if pivot is None:
            return None
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = F.inv(aug[r][c])
        if inv != 1:
            aug[r] = [F.mul(inv, e) for e in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(aug[i], aug[r])]
        r += 1
    return Mat(F, n, tuple(aug[i][n + j] for i in range(n) for j in range(n)))


def det(m: Mat):
    """Determinant, read off the division-free characteristic polynomial."""
    c0 = char_poly(m)[0]
    return c0 if m.n % 2 == 0 else m.field.neg(c0)


def char_poly(m: Mat) -> Poly:
    """Characteristic polynomial det(tI - M), monic, by Berkowitz's
    division-free recursion on leading principal submatrices.

    Works over any field size (no interpolation points needed).
    """
    F, n = m.field, m.n
    c = [1]  # leading-first coefficients for the empty matrix
    for size in range(1, n + 1):
        a = m.entry(size - 1, size - 1)
        r_row = [m.entry(size - 1, j) for j in range(size - 1)]
        s_col = [m.entry(j, size - 1) for j in range(size - 1)]
        t = [1, F.neg(a)]
        v = s_col
        for _ in range(size - 1):
            acc = 0
            for x, y in zip(r_row, v):
                acc = F.add(acc, F.mul(x, y))
            t.append(F.neg(acc))
            # v <- A_{size-1} v using the leading principal block
            v = [
                _dot_block(m, i, v, F)
                for i in range(size - 1)
            ]
        nxt = []
        for i in range(size + 1):
            acc = 0
            for j in range(len(c)):
                if 0 <= i - j < len(t):
                    acc = F.add(acc, F.mul(t[i - j], c[j]))
            nxt.append(acc)
        c = nxt
    return Poly(F, tuple(reversed(c)))


def _dot_block(m, i, v, F):
    acc = 0
    base = i * m.n
    for j, vj in enumerate(v):
        if vj:
            acc = F.add(acc, F.mul(m.entries[base + j], vj))
    return acc
