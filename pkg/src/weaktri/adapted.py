"""Adapted vectors and adapted hyperplanes of a matrix space.

A nonzero vector x is adapted to S when S has no element whose range is
exactly the line F.x and whose trace is zero; dually, a hyperplane H is
adapted when S has no trace-zero element with kernel exactly H.  These are
decided by exact linear algebra on the coordinates of S.
"""

from __future__ import annotations

import itertools

from .linalg import Mat, Vec, kernel_basis, span_rows
from .spaces import MatSpace


def projective_reps(field, n, reverse=False):
    """Normalized projective representatives of F^n in lexicographic order.

    Each line is represented by its unique vector with first nonzero
    coordinate 1; tuples compare lexicographically, so representatives with
    later leading index come first.
    """
    reps = []
    for lead in range(n - 1, -1, -1):
        tail_len = n - lead - 1
        for tail in itertools.product(field.elements(), repeat=tail_len):
            reps.append(Vec(field, (0,) * lead + (1,) + tail))
    if reverse:
        reps.reverse()
    return reps


def _normalize(x: Vec) -> Vec:
    lead = next((i for i, e in enumerate(x.entries) if e), None)
    if lead is None:
        raise ValueError("the zero vector spans no line")
    if x[lead] == 1:
        return x
    return x.scale(x.field.inv(x[lead]))


def range_constrained(space: MatSpace, x: Vec) -> MatSpace:
    """The subspace {u in S : im(u) is contained in F.x}.

    Solved as linear constraints on S-coordinates: each column of u must be
    its x-leading entry times x.
    """
    xn = _normalize(x)
    F, n = space.field, space.n
    lead = next(i for i, e in enumerate(xn.entries) if e)
    rows = []
    for col in range(n):
        for i in range(n):
            if i == lead:
                continue
            # entry (i, col) - x_i * entry (lead, col) = 0
            rows.append(
                tuple(
                    F.sub(b.entry(i, col), F.mul(xn[i], b.entry(lead, col)))
                    for b in space.basis
                )
            )
    if not space.basis:
        return space
    coeff_vectors = kernel_basis(rows, F)
    mats = [space.combination(c) for c in coeff_vectors]
    return MatSpace.from_span(mats, field=F, n=n)


def is_adapted_vector(space: MatSpace, x: Vec) -> bool:
    """True when no element of S has range F.x together with trace zero.

    Equivalent: the trace functional is injective on {u : im(u) <= F.x},
    i.e. that space has dimension <= 1 with nonzero trace on a generator.
    """
    constrained = range_constrained(space, x)
    if constrained.dim == 0:
        return True
    if constrained.dim > 1:
        return False
    return constrained.basis[0].trace() != 0


def find_adapted_vector(space: MatSpace, reverse=False):
    """First adapted projective representative in scan order, or None."""
    for x in projective_reps(space.field, space.n, reverse=reverse):
        if is_adapted_vector(space, x):
            return x
    return None


def hyperplane_functional(field, vectors):
    """Canonical annihilating functional of a hyperplane given a spanning list."""
    rows = span_rows([tuple(v) for v in vectors], field)
    if not rows:
        raise ValueError("empty spanning list")
    n = len(rows[0])
    if len(rows) != n - 1:
        raise ValueError(f"expected an (n-1)-dimensional span, got dimension {len(rows)}")
    normals = kernel_basis(list(rows), field)
    assert len(normals) == 1
    lead = next(i for i, e in enumerate(normals[0]) if e)
    inv = field.inv(normals[0][lead])
    return tuple(field.mul(inv, e) for e in normals[0])


def kernel_constrained(space: MatSpace, vectors) -> MatSpace:
    """The subspace {u in S : u vanishes on span(vectors)}."""
    F, n = space.field, space.n
    rows = []
    for v in vectors:
        for i in range(n):
            rows.append(
                tuple(
                    _row_dot(b, i, v, F)
                    for b in space.basis
                )
            )
    if not space.basis:
        return space
    coeff_vectors = kernel_basis(rows, F)
    return MatSpace.from_span(
        [space.combination(c) for c in coeff_vectors], field=F, n=n
    )


def _row_dot(mat: Mat, i, v, F):
    acc = 0
    for j, vj in enumerate(v):
        if vj:
            acc = F.add(acc, F.mul(mat.entry(i, j), vj))
    return acc


def is_adapted_hyperplane(space: MatSpace, spanning) -> bool:
    """True when no element of S has kernel exactly the hyperplane and trace 0."""
    hyperplane = span_rows([tuple(v) for v in spanning], space.field)
    if len(hyperplane) != space.n - 1:
        raise ValueError(
            f"expected an (n-1)-dimensional span, got dimension {len(hyperplane)}"
        )
    constrained = kernel_constrained(space, hyperplane)
    if constrained.dim == 0:
        return True
    if constrained.dim > 1:
        return False
    return constrained.basis[0].trace() != 0
