"""Enumeration of algebra morphisms over GF(p) and the tensor universal property.

At a finite level the completed tensor product satisfies
Hom_alg(A_n (x) B_n, C) = Hom_alg(A_n, C) x Hom_alg(B_n, C), the pair
being obtained by restriction along a |-> a (x) 1 and b |-> 1 (x) b.
"""

from __future__ import annotations

import itertools
import logging

from reflexa.algebras import AlgebraMorphism, FinAlgebra, StructureError
from reflexa.linalg import Matrix, PrimeField, Vector, in_span, inverse, kron, solve, span_basis
from reflexa.model import Verdict

from ._operations import completed_tensor
from ._tower import AlgebraTower, TowerError

logger = logging.getLogger(__name__)


def _generated(a: FinAlgebra, gens: list[int]) -> list[Vector]:
    """Basis of the subalgebra generated by the basis elements ``gens``."""
    f, n = a.field, a.dim
    basis = span_basis(f, n, [a.unit])
    while True:
        grown = basis + [a.product(x, f.unit_vector(n, g)) for x in basis for g in gens]
        new = span_basis(f, n, grown)
        if len(new) == len(basis):
            return new
        basis = new


def algebra_generators(a: FinAlgebra) -> list[int]:
    """Basis indices whose elements generate ``a`` as an algebra, chosen greedily."""
    f, n = a.field, a.dim
    gens: list[int] = []
    span = _generated(a, gens)
    for i in range(n):
        if len(span) == n:
            break
        if in_span(f, n, span, f.unit_vector(n, i)):
            continue
        gens.append(i)
        span = _generated(a, gens)
    return gens


def _extend(a: FinAlgebra, c: FinAlgebra, gens: list[int], images: tuple[Vector, ...]) -> Matrix | None:
    """The linear map sending monomials in the generators to the matching monomials in C."""
    f, n = a.field, a.dim
    src: list[Vector] = [a.unit]
    dst: list[Vector] = [c.unit]
    frontier = [(a.unit, c.unit)]
    while frontier:
        nxt = []
        for x, y in frontier:
            for g, img in zip(gens, images):
                x2 = a.product(x, f.unit_vector(n, g))
                y2 = c.product(y, img)
                coeffs = solve(Matrix.from_columns(f, src, n), x2)
                if coeffs is None:
                    src.append(x2)
                    dst.append(y2)
                    nxt.append((x2, y2))
                    continue
                expected = Matrix.from_columns(f, dst, c.dim).apply(coeffs)
                if expected != y2:
                    return None
        frontier = nxt
    if len(src) != n:
        return None
    return Matrix.from_columns(f, dst, c.dim) @ inverse(Matrix.from_columns(f, src, n))


def algebra_morphisms(a: FinAlgebra, c: FinAlgebra) -> list[Matrix]:
    """Every algebra morphism A -> C, by enumerating images of generators (GF(p) only)."""
    f = a.field
    if not isinstance(f, PrimeField):
        raise TowerError("morphisms are enumerated over finite fields only")
    gens = algebra_generators(a)
    candidates = list(itertools.product(f.elements(), repeat=c.dim))
    found = []
    for images in itertools.product(candidates, repeat=len(gens)):
        m = _extend(a, c, gens, tuple(tuple(v) for v in images))
        if m is None:
            continue
        try:
            AlgebraMorphism(a, c, m)
        except StructureError:
            continue
        found.append(m)
    logger.debug("%d morphisms %s -> %s", len(found), a.name, c.name)
    return found


def verify_tensor_universal_property(a: AlgebraTower, b: AlgebraTower, level: int, target: FinAlgebra) -> Verdict:
    """Restriction Hom(A_n (x) B_n, C) -> Hom(A_n, C) x Hom(B_n, C) is bijective."""
    if not isinstance(a.field, PrimeField):
        return Verdict.unknown("morphisms are only enumerated over GF(p)", level=level)
    t = completed_tensor(a, b)
    an, bn, tn = a.algebras[level], b.algebras[level], t.algebras[level]
    f = a.field
    left = kron(Matrix.identity(f, an.dim), Matrix.column_vector(f, bn.unit))
    right = kron(Matrix.column_vector(f, an.unit), Matrix.identity(f, bn.dim))

    hom_a = algebra_morphisms(an, target)
    hom_b = algebra_morphisms(bn, target)
    hom_t = algebra_morphisms(tn, target)
    pairs = {(phi @ left, phi @ right) for phi in hom_t}
    expected = {(x, y) for x in hom_a for y in hom_b}
    details = {"level": level, "hom_a": len(hom_a), "hom_b": len(hom_b), "hom_tensor": len(hom_t)}
    if len(pairs) != len(hom_t):
        return Verdict.failed("restriction is not injective", {"level": level}, **details)
    if pairs != expected:
        missing = next(iter(expected - pairs), None)
        witness = {"level": level}
        if missing is not None:
            witness["pair"] = [missing[0].to_dict(), missing[1].to_dict()]
        return Verdict.failed("restriction is not surjective", witness, **details)
    return Verdict.passed("morphisms from the tensor level are pairs of morphisms", **details)
