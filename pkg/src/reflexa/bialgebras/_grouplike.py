"""Grouplike elements and a bounded isomorphism search.

A grouplike g of B is the same thing as a character of B*: the row
vector with coordinates g is multiplicative for the dual algebra, hence a
common left eigenvector of the left multiplications L_{e_i} of B* with
eigenvalue its own i-th coordinate.  Candidates are built one coordinate
at a time, intersecting eigenspaces and discarding empty branches.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from fractions import Fraction

import sympy

from reflexa.linalg import (
    LinearSystem,
    Matrix,
    PrimeField,
    Vector,
    in_span,
    intersect_subspaces,
    kernel_basis,
    kron_vector,
    linear_combination,
    rank,
)

from ._bialgebra import BialgebraMorphism, FinBialgebra, is_bialgebra_morphism
from ._duality import dual_algebra, dual_bialgebra

logger = logging.getLogger(__name__)

SEARCH_LIMIT = 4096
"""Largest affine solution space enumerated for one matching."""


def eigenvalues_in_field(m: Matrix) -> list:
    """Eigenvalues of a square matrix that lie in its field."""
    f, n = m.field, m.rows
    if isinstance(f, PrimeField):
        return [lam for lam in f.elements() if kernel_basis(m - Matrix.identity(f, n).scale(lam))]
    lam = sympy.Symbol("lam")
    rows = [[sympy.Rational(x.numerator, x.denominator) for x in m.row(i)] for i in range(n)]
    poly = sympy.Poly(sympy.Matrix(rows).charpoly(lam).as_expr(), lam, domain="QQ")
    roots = sorted(poly.ground_roots())
    return [Fraction(int(r.p), int(r.q)) for r in roots]


def _left_eigenspace(m: Matrix, lam) -> list[Vector]:
    f = m.field
    return kernel_basis((m - Matrix.identity(f, m.rows).scale(lam)).transpose())


def grouplike_elements(b: FinBialgebra) -> list[Vector]:
    """All g != 0 with comult(g) = g (x) g and counit(g) = 1, sorted."""
    f, n = b.field, b.dim
    dual = dual_algebra(b.coalgebra)
    ops = [dual.left_multiplication(f.unit_vector(n, i)) for i in range(n)]
    spectra = [eigenvalues_in_field(op) for op in ops]

    found: list[Vector] = []

    def search(i: int, space: list[Vector], prefix: tuple) -> None:
        if i == n:
            if in_span(f, n, space, prefix):
                found.append(prefix)
            return
        for lam in spectra[i]:
            narrowed = intersect_subspaces(f, n, [space, _left_eigenspace(ops[i], lam)])
            if narrowed:
                search(i + 1, narrowed, prefix + (lam,))

    search(0, [f.unit_vector(n, i) for i in range(n)], ())
    out = [
        g for g in found
        if b.comult.apply(g) == kron_vector(f, g, g) and f.dot(b.counit, g) == f.one
    ]
    logger.debug("%s: %d grouplike elements", b.name, len(out))
    return sorted(out)


def _group_table(b: FinBialgebra, gs: list[Vector]) -> list[list[int]] | None:
    index = {g: i for i, g in enumerate(gs)}
    table = []
    for x in gs:
        row = []
        for y in gs:
            k = index.get(b.algebra.product(x, y))
            if k is None:
                return None
            row.append(k)
        table.append(row)
    return table


def _matchings(t1: list[list[int]], t2: list[list[int]]) -> Iterator[tuple[int, ...]]:
    """Bijections i |-> perm[i] carrying the product table t1 onto t2."""
    n = len(t1)
    for perm in itertools.permutations(range(n)):
        if all(t2[perm[i]][perm[j]] == perm[t1[i][j]] for i in range(n) for j in range(n)):
            yield perm


# ---------------------------------------------------------------------------
# Linear constraints on an unknown map X
# ---------------------------------------------------------------------------
# Unknown X[r, c] is column r * n + c of the system; column n * n carries
# the constant term, so solutions are the kernel vectors with a 1 there.

def _sends(system: LinearSystem, n: int, v: Vector, w: Vector) -> None:
    """X v = w."""
    f = system.field
    for r in range(n):
        eq = {r * n + c: v[c] for c in range(n) if v[c]}
        eq[n * n] = f.neg(w[r])
        system.add_equation(eq)


def _pulls(system: LinearSystem, n: int, y: Vector, z: Vector) -> None:
    """y X = z for row vectors y, z."""
    f = system.field
    for c in range(n):
        eq = {r * n + c: y[r] for r in range(n) if y[r]}
        eq[n * n] = f.neg(z[c])
        system.add_equation(eq)


def _intertwines(system: LinearSystem, n: int, a: Matrix, b: Matrix) -> None:
    """X a = b X."""
    f = system.field
    for r in range(n):
        for c in range(n):
            eq: dict[int, object] = {}
            for k in range(n):
                if a[k, c]:
                    eq[r * n + k] = f.add(eq.get(r * n + k, f.zero), a[k, c])
                if b[r, k]:
                    eq[k * n + c] = f.sub(eq.get(k * n + c, f.zero), b[r, k])
            system.add_equation(eq)


def _solutions(system: LinearSystem, n: int) -> Iterator[Matrix]:
    """Points of the affine solution space, or nothing when it is too large to enumerate."""
    f, total = system.field, n * n
    if total in system.pivot_columns:
        return
    basis = system.kernel_basis()
    particular = next(v for v in basis if v[total] == f.one)
    directions = [v for v in basis if not v[total]]
    coeffs = list(f.elements()) if isinstance(f, PrimeField) else [0, 1, -1]
    if len(coeffs) ** len(directions) > SEARCH_LIMIT:
        logger.debug("solution space of dim %d is too large to enumerate", len(directions))
        return
    for cs in itertools.product(coeffs, repeat=len(directions)):
        point = linear_combination(f, (f.one, *cs), [particular, *directions], total + 1)
        yield Matrix(f, n, n, point[:total])


def bialgebra_isomorphic(b1: FinBialgebra, b2: FinBialgebra) -> BialgebraMorphism | None:
    """Search for an isomorphism b1 -> b2.

    An isomorphism X matches the grouplikes of b1 with those of b2 and,
    through its transpose, the characters (grouplikes of the duals) of
    b2 with those of b1, respecting products on both sides.  For every
    such pair of matchings X satisfies linear equations: it fixes unit
    and counit, sends each grouplike and character to its partner and
    intertwines multiplication by them.  The affine solution space is
    enumerated when small (all points over GF(p), coefficients -1, 0, 1
    over Q) and every candidate is verified.  Sound but not complete.
    """
    f, n = b1.field, b1.dim
    if f != b2.field or n != b2.dim:
        return None
    if b1.same_structure(b2):
        return BialgebraMorphism(b1, b2, Matrix.identity(f, n))
    g1, g2 = grouplike_elements(b1), grouplike_elements(b2)
    if len(g1) != len(g2):
        logger.debug("grouplike counts differ: %d vs %d", len(g1), len(g2))
        return None
    d1, d2 = dual_bialgebra(b1), dual_bialgebra(b2)
    c1, c2 = grouplike_elements(d1), grouplike_elements(d2)
    if len(c1) != len(c2):
        logger.debug("character counts differ: %d vs %d", len(c1), len(c2))
        return None
    t1, t2 = _group_table(b1, g1), _group_table(b2, g2)
    s1, s2 = _group_table(d1, c1), _group_table(d2, c2)
    if t1 is None or t2 is None or s1 is None or s2 is None:
        return None

    character_matchings = list(_matchings(s1, s2))
    tried = 0
    for sigma in _matchings(t1, t2):
        for tau in character_matchings:
            system = LinearSystem(f, n * n + 1)
            _sends(system, n, b1.unit, b2.unit)
            _pulls(system, n, b2.counit, b1.counit)
            for i, g in enumerate(g1):
                h = g2[sigma[i]]
                _sends(system, n, g, h)
                _intertwines(system, n, b1.algebra.left_multiplication(g), b2.algebra.left_multiplication(h))
                _intertwines(system, n, b1.algebra.right_multiplication(g), b2.algebra.right_multiplication(h))
            for i, chi in enumerate(c1):
                psi = c2[tau[i]]
                # X^T is an algebra map b2* -> b1* sending psi to chi
                _pulls(system, n, psi, chi)
                _intertwines(
                    system, n,
                    d1.algebra.left_multiplication(chi).transpose(),
                    d2.algebra.left_multiplication(psi).transpose(),
                )
                _intertwines(
                    system, n,
                    d1.algebra.right_multiplication(chi).transpose(),
                    d2.algebra.right_multiplication(psi).transpose(),
                )
            for candidate in _solutions(system, n):
                tried += 1
                if rank(candidate) == n and is_bialgebra_morphism(b1, b2, candidate).ok:
                    return BialgebraMorphism(b1, b2, candidate)
    logger.debug("%s -> %s: no isomorphism among %d candidates", b1.name, b2.name, tried)
    return None
