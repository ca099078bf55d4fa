"""Independent brute-force oracles the library paths are checked against.

These deliberately avoid the code under test: the characteristic polynomial
comes from a Leibniz expansion over the polynomial ring, splitting verdicts
from exhaustive root counting, and adaptedness from sweeping all elements of
the space.
"""

import itertools

from weaktri.gf import Poly
from weaktri.linalg import Mat


def cofactor_char_poly(m: Mat) -> Poly:
    """det(tI - M) by summing over permutations of the polynomial matrix."""
    F, n = m.field, m.n
    total = Poly.zero(F)
    for perm in itertools.permutations(range(n)):
        visited = [False] * n
        cycles = 0
        for i in range(n):
            if not visited[i]:
                cycles += 1
                j = i
                while not visited[j]:
                    visited[j] = True
                    j = perm[j]
        term = Poly.one(F)
        for i in range(n):
            e = m.entry(i, perm[i])
            if i == perm[i]:
                term = term * Poly(F, (F.neg(e), 1))
            else:
                term = term * Poly(F, (F.neg(e),))
        if (n - cycles) % 2:
            term = -term
        total = total + term
    return total


def splits_by_root_count(f: Poly) -> bool:
    """A polynomial splits iff its roots, with multiplicity, exhaust the degree."""
    assert not f.is_zero
    remaining = f
    count = 0
    for z in f.field.elements():
        lin = Poly(f.field, (f.field.neg(z), 1))
        while True:
            quo, rem = divmod(remaining, lin)
            if not rem.is_zero:
                break
            remaining = quo
            count += 1
    return count == f.degree


def monic_polys(field, degree):
    for tail in itertools.product(field.elements(), repeat=degree):
        yield Poly(field, tail + (1,))


def adapted_by_sweep(space, x) -> bool:
    """Adaptedness by enumerating every element of the space."""
    line = _line_of(x)
    for m in space.enumerate_elements():
        if m.trace() == 0 and _column_space(m) == line:
            return False
    return True


def adapted_hyperplane_by_sweep(space, spanning) -> bool:
    from weaktri.linalg import span_rows

    target = span_rows([tuple(v) for v in spanning], space.field)
    for m in space.enumerate_elements():
        if m.trace() != 0:
            continue
        kern = _kernel_rows(m)
        if kern == target:
            return False
    return True


def _line_of(x):
    from weaktri.linalg import span_rows

    return span_rows([tuple(x)], x.field)


def _column_space(m: Mat):
    from weaktri.linalg import span_rows

    return span_rows([m.col(j) for j in range(m.n)], m.field)


def _kernel_rows(m: Mat):
    from weaktri.linalg import kernel_basis, span_rows

    return span_rows(kernel_basis([m.row(i) for i in range(m.n)], m.field), m.field)
