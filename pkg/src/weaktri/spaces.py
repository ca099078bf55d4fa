"""Linear subspaces of M_n(F) with a canonical RREF basis, plus the plain-text
space-file format.

A space is stored as the reduced row echelon form of the row-major
vectorizations of any spanning set, so equal spaces always carry identical
basis sequences and can be hashed, deduplicated, and diffed.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceededError, SpaceFileError
from .gf import FieldCtx, parse_field
from .linalg import Mat, invert, kernel_basis, rref

DEFAULT_BUDGET = 2**28


class MatSpace:
    """Subspace of n-by-n matrices over a FieldCtx, canonical basis."""

    __slots__ = ("field", "n", "basis")

    def __init__(self, field, n, basis):
        """Internal: ``basis`` must already be canonical. Use from_span."""
        self.field = field
        self.n = n
        self.basis = tuple(basis)

    @classmethod
    def from_span(cls, mats, field=None, n=None):
        """Canonicalize a spanning set; duplicates and dependencies removed."""
        mats = list(mats)
        if mats:
            field = mats[0].field
            n = mats[0].n
            for m in mats:
                if m.field != field or m.n != n:
                    raise ValueError("spanning matrices over mixed fields or sizes")
        elif field is None or n is None:
            raise ValueError("empty span needs explicit field and n")
        reduced, _ = rref([m.entries for m in mats], field)
        return cls(field, n, (Mat(field, n, row) for row in reduced))

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, MatSpace)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.n, tuple(m.entries for m in self.basis)))

    def __repr__(self):
        return f"MatSpace(n={self.n}, dim={self.dim} over {self.field.descriptor()})"

    def key(self):
        """Hashable canonical identity (used to sort and deduplicate spaces)."""
        return tuple(m.entries for m in self.basis)

    # -- membership ------------------------------------------------------------

    def coords_of(self, m: Mat):
        """Coefficients of m over the canonical basis, or None if m is outside."""
        if m.field != self.field or m.n != self.n:
            raise ValueError("matrix from a different ambient space")
        F = self.field
        v = list(m.entries)
        coords = []
        for b in self.basis:
            pivot = next(i for i, e in enumerate(b.entries) if e)
            c = v[pivot]
            coords.append(c)
            if c:
                v = [F.sub(a, F.mul(c, e)) for a, e in zip(v, b.entries)]
        if any(v):
            return None
        return tuple(coords)

    def contains(self, m: Mat) -> bool:
        return self.coords_of(m) is not None

    def combination(self, coeffs) -> Mat:
        F = self.field
        acc = [0] * (self.n * self.n)
        for c, b in zip(coeffs, self.basis):
            if c:
                for i, e in enumerate(b.entries):
                    if e:
                        acc[i] = F.add(acc[i], F.mul(c, e))
        return Mat(F, self.n, acc)

    # -- sweeps ------------------------------------------------------------------

    def element_count(self) -> int:
        return self.field.q**self.dim

    def enumerate_elements(self, budget=None):
        """Yield all q^d elements once, coefficient vectors in lexicographic order.

        Prefix sums are shared across the sweep, so each element costs one
        scaled vector addition instead of a full combination.
        """
        limit = DEFAULT_BUDGET if budget is None else budget
        if self.element_count() > limit:
            raise BudgetExceededError(
                f"{self.element_count()} elements exceed the sweep budget {limit}"
            )
        F, n, d = self.field, self.n, self.dim
        add, mul = F.add, F.mul
        elements = tuple(F.elements())
        rows = [b.entries for b in self.basis]

        def rec(idx, acc):
            if idx == d:
                yield Mat._wrap(F, n, tuple(acc))
                return
            row = rows[idx]
            yield from rec(idx + 1, acc)
            for c in elements[1:]:
                yield from rec(
                    idx + 1, [add(a, mul(c, e)) for a, e in zip(acc, row)]
                )

        yield from rec(0, [0] * (n * n))

    # -- transformed spaces -------------------------------------------------------

    def conjugate(self, p: Mat) -> MatSpace:
        """The space {P m P^-1}; dimension is preserved."""
        p_inv = invert(p)
        if p_inv is None:
            raise ValueError("conjugating matrix is singular")
        return MatSpace.from_span(
            [p * m * p_inv for m in self.basis], field=self.field, n=self.n
        )

    def transpose_dual(self) -> MatSpace:
        """Reversal-transpose image: entry (i, j) moves to (n-1-j, n-1-i).

        Equals conjugating the transposed space by the reversal permutation;
        an involution that preserves weak triangularizability.
        """
        n = self.n
        out = []
        for m in self.basis:
            out.append(
                Mat(
                    self.field,
                    n,
                    tuple(m.entry(n - 1 - j, n - 1 - i) for i in range(n) for j in range(n)),
                )
            )
        return MatSpace.from_span(out, field=self.field, n=n)

    def trace_orthogonal(self) -> MatSpace:
        """Orthogonal complement for the form (u, v) -> tr(uv).

        The form is non-degenerate, so dim S + dim S-perp = n^2.
        """
        n = self.n
        # tr(B N) = vec(B) . vec(N^T): solve for vec(N^T) in the kernel
        rows = [b.entries for b in self.basis]
        if rows:
            solutions = kernel_basis(rows, self.field)
        else:
            solutions = [
                tuple(int(i == j) for j in range(n * n)) for i in range(n * n)
            ]
        out = [Mat(self.field, n, v).transpose() for v in solutions]
        return MatSpace.from_span(out, field=self.field, n=n)


def space_from_span(mats, field=None, n=None) -> MatSpace:
    return MatSpace.from_span(mats, field=field, n=n)


# -- space files ----------------------------------------------------------------


def format_spacefile(space: MatSpace) -> str:
    lines = [
        f"field {space.field.descriptor()}",
        f"n {space.n}",
        f"dim {space.dim}",
    ]
    for m in space.basis:
        lines.append("mat " + " ".join(str(e) for e in m.entries))
    return "\n".join(lines) + "\n"


def parse_spacefile(text: str, strict=False, exploratory=False) -> MatSpace:
    """Parse the plain-text space format.

    Dependent or duplicate basis lines are canonicalized away unless
    ``strict`` is set, in which case they are an error.
    """
    field = None
    n = None
    declared_dim = None
    mats = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "field":
            try:
                field = parse_field(rest, exploratory=exploratory)
            except ValueError as exc:
                raise SpaceFileError(str(exc), line=lineno) from None
        elif key == "n":
            n = _parse_int(rest, lineno, "n")
        elif key == "dim":
            declared_dim = _parse_int(rest, lineno, "dim")
        elif key == "mat":
            if field is None or n is None:
                raise SpaceFileError("mat line before field/n header", line=lineno)
            entries = []
            for col, tok in enumerate(rest.split(), start=1):
                try:
                    value = int(tok)
                except ValueError:
                    raise SpaceFileError(
                        f"column {col}: {tok!r} is not an integer", line=lineno
                    ) from None
                if not 0 <= value < field.q:
                    raise SpaceFileError(
                        f"column {col}: {value} outside [0, {field.q})", line=lineno
                    )
                entries.append(value)
            if len(entries) != n * n:
                raise SpaceFileError(
                    f"expected {n * n} entries, got {len(entries)}", line=lineno
                )
            mats.append(Mat(field, n, entries))
        else:
            raise SpaceFileError(f"unknown directive {key!r}", line=lineno)
    if field is None or n is None:
        raise SpaceFileError("missing field/n header")
    if declared_dim is not None and declared_dim != len(mats):
        raise SpaceFileError(f"dim says {declared_dim} but {len(mats)} mat lines found")
    space = MatSpace.from_span(mats, field=field, n=n)
    if strict and space.dim != len(mats):
        raise SpaceFileError("basis lines are linearly dependent (strict mode)")
    return space


def _parse_int(text, lineno, what):
    try:
        return int(text)
    except ValueError:
        raise SpaceFileError(f"bad {what} value {text!r}", line=lineno) from None
