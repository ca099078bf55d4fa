"""Counting and streaming the k-dimensional subspaces of F^m.

Subspaces are produced exactly once each, as canonical RREF bases (tuples of
row tuples): pivot patterns in lexicographic order, free entries in
lexicographic odometer order within a pattern.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceededError
from .linalg import span_rows
from .spaces import DEFAULT_BUDGET


def grassmann_count(m: int, k: int, q: int) -> int:
    """Gaussian binomial: the number of k-dimensional subspaces of F_q^m."""
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    count, rem = divmod(num, den)
    assert rem == 0
    return count


def pivot_patterns(m: int, k: int):
    """All strictly increasing pivot-column patterns, lexicographically."""
    return list(itertools.combinations(range(m), k))


def free_positions(pattern, m):
    """Non-pivot positions to the right of each row's pivot, row-major."""
    pivot_set = set(pattern)
    return [
        (row, col)
        for row, pc in enumerate(pattern)
        for col in range(pc + 1, m)
        if col not in pivot_set
    ]


def pattern_size(pattern, m, q):
    """Number of subspaces whose RREF has this pivot pattern."""
    return q ** len(free_positions(pattern, m))


def _enumerate_plain(m, k, field):
    for pattern in pivot_patterns(m, k):
        free = free_positions(pattern, m)
        template = [[0] * m for _ in range(k)]
        for row, pc in enumerate(pattern):
            template[row][pc] = 1
        for values in itertools.product(field.elements(), repeat=len(free)):
            rows = [list(r) for r in template]
            for (row, col), v in zip(free, values):
                rows[row][col] = v
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(m, k, field, must_contain=(), budget=None):
    """Stream every k-dimensional subspace of F^m satisfying the constraints.

    ``must_contain`` is a list of vectors whose span the subspace must
    include; those are handled by enumerating (k - r)-dimensional subspaces
    of the quotient by the constraint span and lifting back.
    """
    limit = DEFAULT_BUDGET if budget is None else budget
    constraints = [tuple(v) for v in must_contain]
    if not constraints:
        if grassmann_count(m, k, field.q) > limit:
            raise BudgetExceededError(
                f"{grassmann_count(m, k, field.q)} subspaces exceed budget {limit}"
            )
        yield from _enumerate_plain(m, k, field)
        return
    reduced = span_rows(constraints, field)
    r = len(reduced)
    if r != len(constraints):
        raise ValueError("must_contain vectors are linearly dependent")
    if r > k:
        raise ValueError(f"cannot fit a {r}-dimensional constraint span in dimension {k}")
    if grassmann_count(m - r, k - r, field.q) > limit:
        raise BudgetExceededError(
            f"{grassmann_count(m - r, k - r, field.q)} subspaces exceed budget {limit}"
        )
    pivots = [next(i for i, e in enumerate(row) if e) for row in reduced]
    section = [c for c in range(m) if c not in pivots]
    for sub in _enumerate_plain(m - r, k - r, field):
        lifted = []
        for qrow in sub:
            full = [0] * m
            for c, v in zip(section, qrow):
                full[c] = v
            lifted.append(tuple(full))
        yield span_rows(list(reduced) + lifted, field)
