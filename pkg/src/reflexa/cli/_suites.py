"""The verification suites run by ``reflexa report``.

Each check is a function of a :class:`SuiteContext` returning a
:class:`~reflexa.model.Verdict`.  Randomized checks draw from a
``Random`` seeded by the run seed and the check name, so a single check
rerun with ``--only`` sees the same inputs as in the full suite.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from random import Random

import sympy
from sympy.polys.matrices import DomainMatrix

from reflexa.algebras import base_algebra, truncated_polynomial
from reflexa.bialgebras import (
    BialgebraError,
    FinBialgebra,
    FinCoalgebra,
    bialgebra_isomorphic,
    check_double_dual,
    counit_unit_morphism,
    dual_bialgebra,
    function_bialgebra,
    group_bialgebra,
    group_fixtures,
    is_bialgebra_morphism,
    transpose_bialgebra_morphism,
)
from reflexa.errors import ReflexaError
from reflexa.findual import MODELS, RecurrenceError, RecursiveFunctional
from reflexa.functors import (
    AdjunctionSetting,
    AlgebraAction,
    Universe,
    UniverseError,
    base_universe,
    check_d_proquasicoherent,
    check_reflexive,
    dual_on_universe,
    module_morphism_criterion,
    nat_hom_space,
    nilradical_functor,
    quasicoherent_on_universe,
    reference_universe,
    submodule_criterion,
    tensor_functors,
    verify_adjunction,
)
from reflexa.linalg import Field, PrimeField, inverse, kernel_basis, kron, rank, rref
from reflexa.model import Verdict
from reflexa.modules import (
    FinModule,
    LinearMap,
    double_dual_unit,
    dual_map,
    hom_from_dual_source,
    hom_from_product,
    snake_identity,
)
from reflexa.report import CheckRecord, Report
from reflexa.towers import (
    TowerError,
    TowerFunctional,
    completed_tensor,
    kernel_tower,
    power_series_tower,
    product_decomposition,
    ps_invert,
    reflexivity_roundtrip,
    stabilized_images,
    verify_tensor_universal_property,
)

from ._random import random_functional, random_linear_map, random_matrix, random_tower

logger = logging.getLogger(__name__)


class SuiteError(ReflexaError):
    """Unknown suite or check name."""


@dataclass(frozen=True)
class SuiteContext:
    field: Field
    seed: int = 0
    rank_bound: int = 4
    depth: int = 4
    universe_name: str = "reference"
    universe_loader: Callable[[str, Field], Universe] | None = None

    def rng(self, name: str) -> Random:
        return Random(f"{self.seed}:{name}")

    @cached_property
    def universe(self) -> Universe:
        if self.universe_loader is not None:
            return self.universe_loader(self.universe_name, self.field)
        return resolve_universe(self.universe_name, self.field)


def resolve_universe(name: str, field: Field) -> Universe:
    if name == "reference":
        return reference_universe(field)
    if name == "base":
        return base_universe(field)
    raise UniverseError(f"unknown universe {name!r} (known: reference, base)")


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    run: Callable[[SuiteContext], Verdict]


# ---------------------------------------------------------------------------
# linalg
# ---------------------------------------------------------------------------

def _rank_nullity(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("rank-nullity"), ctx.field
    for trial in range(50):
        m = random_matrix(f, rng, rng.randint(0, 6), rng.randint(0, 6), bound=2)
        kernel = kernel_basis(m)
        if rank(m) + len(kernel) != m.cols:
            return Verdict.failed("rank + nullity != cols", {"trial": trial, "matrix": m.to_dict()})
        for v in kernel:
            if any(m.apply(v)):
                return Verdict.failed("kernel vector is not annihilated", {"trial": trial, "matrix": m.to_dict()})
        r, _ = rref(m)
        if rref(r)[0] != r:
            return Verdict.failed("rref is not idempotent", {"trial": trial, "matrix": m.to_dict()})
    return Verdict.passed("50 random matrices")


def _inverse(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("inverse"), ctx.field
    tried = 0
    for trial in range(50):
        n = rng.randint(1, 5)
        m = random_matrix(f, rng, n, n)
        if rank(m) < n:
            continue
        tried += 1
        if not (m @ inverse(m)).is_identity():
            return Verdict.failed("m m^-1 != 1", {"trial": trial, "matrix": m.to_dict()})
    return Verdict.passed("inverses of random invertible matrices", invertible=tried)


def _kron_mixed_product(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("kron"), ctx.field
    for trial in range(30):
        p, q, r, s, t, u = (rng.randint(1, 3) for _ in range(6))
        a, c = random_matrix(f, rng, p, q), random_matrix(f, rng, q, r)
        b, d = random_matrix(f, rng, s, t), random_matrix(f, rng, t, u)
        if kron(a, b) @ kron(c, d) != kron(a @ c, b @ d):
            return Verdict.failed("(A (x) B)(C (x) D) != AC (x) BD", {"trial": trial})
    return Verdict.passed("30 random quadruples")


LINALG = [
    Check("linalg.rank-nullity", "rank + nullity = number of columns", _rank_nullity),
    Check("linalg.inverse", "m m^-1 = 1", _inverse),
    Check("linalg.kron-mixed-product", "(A (x) B)(C (x) D) = AC (x) BD", _kron_mixed_product),
]


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

def _double_dual(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("double-dual"), ctx.field
    for trial in range(200):
        g = random_linear_map(f, rng, max_rank=8)
        unit_src, unit_dst = double_dual_unit(g.domain), double_dual_unit(g.codomain)
        if not unit_src.matrix.is_identity():
            return Verdict.failed("unit M -> M** is not the identity", {"trial": trial, "rank": g.domain.rank})
        if dual_map(dual_map(g)).matrix @ unit_src.matrix != unit_dst.matrix @ g.matrix:
            return Verdict.failed("naturality square fails", {"trial": trial, "matrix": g.matrix.to_dict()})
    return Verdict.passed("200 random maps")


def _snake(ctx: SuiteContext) -> Verdict:
    for r in range(ctx.rank_bound + 1):
        if not snake_identity(FinModule(ctx.field, r)):
            return Verdict.failed("zig-zag identity fails", {"rank": r})
    return Verdict.passed("evaluation and coevaluation satisfy the zig-zag identities", rank_bound=ctx.rank_bound)


def _hom_from_dual(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    for r in range(1, ctx.rank_bound + 1):
        for s in range(1, ctx.rank_bound + 1):
            m = hom_from_dual_source(FinModule(f, r), FinModule(f, s)).matrix
            if rank(m) != r * s or m.rows != m.cols:
                return Verdict.failed("M (x) N -> Hom(M*, N) is not bijective", {"ranks": [r, s]})
    return Verdict.passed("bijective for all rank pairs", rank_bound=ctx.rank_bound)


def _hom_from_product(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    for i in range(1, 4):
        for s in range(1, ctx.rank_bound + 1):
            m = hom_from_product(i, FinModule(f, s)).matrix
            if m.rows != m.cols or rank(m) != i * s:
                return Verdict.failed("Hom((K^I)*, N) -> N^I is not bijective", {"index_count": i, "rank": s})
    return Verdict.passed("bijective for |I| <= 3")


MODULES = [
    Check("modules.double-dual", "M** = M", _double_dual),
    Check("modules.snake", "(ev (x) 1)(1 (x) coev) = 1", _snake),
    Check("modules.hom-dual-source", "Hom(M*, N) = M (x) N", _hom_from_dual),
    Check("modules.hom-product", "Hom(prod_I K, N) = (+)_I N", _hom_from_product),
]


# ---------------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------------

def _functor_bound(ctx: SuiteContext) -> int:
    return min(ctx.rank_bound, 2)


def _qc_reflexive(ctx: SuiteContext) -> Verdict:
    u = ctx.universe
    for r in range(1, _functor_bound(ctx) + 1):
        v = check_reflexive(quasicoherent_on_universe(FinModule(ctx.field, r), u))
        if not v.ok:
            return Verdict.failed(v.message, {"rank": r, **(v.witness or {})})
    return Verdict.passed("quasi-coherent functors are reflexive", universe=ctx.universe_name)


def _hom_dual_source_universe(ctx: SuiteContext) -> Verdict:
    u, f = ctx.universe, ctx.field
    dims = {}
    for r in range(1, ctx.rank_bound + 1):
        dual = dual_on_universe(quasicoherent_on_universe(FinModule(f, r), u))
        for s in range(1, ctx.rank_bound + 1):
            space = nat_hom_space(dual, quasicoherent_on_universe(FinModule(f, s), u))
            dims[f"{r}x{s}"] = space.dim
            if space.dim != r * s:
                return Verdict.failed("dim Hom(M*, N) != rank M * rank N", {"ranks": [r, s], "dim": space.dim})
            if not space.restriction_is_injective():
                return Verdict.failed("restriction to K is not injective", {"ranks": [r, s]})
    return Verdict.passed("solved dimensions match", dims=dims)


def _qc_restriction(ctx: SuiteContext) -> Verdict:
    rng, u, f = ctx.rng("qc-restriction"), ctx.universe, ctx.field
    for trial in range(50):
        r, s = rng.randint(0, _functor_bound(ctx)), rng.randint(0, _functor_bound(ctx))
        space = nat_hom_space(
            quasicoherent_on_universe(FinModule(f, r), u),
            quasicoherent_on_universe(FinModule(f, s), u),
        )
        if space.dim != r * s or not space.restriction_is_injective():
            return Verdict.failed("restriction to K is not bijective", {"trial": trial, "ranks": [r, s], "dim": space.dim})
    return Verdict.passed("50 random quasi-coherent pairs")


def _dpqc_quasicoherent(ctx: SuiteContext) -> Verdict:
    for r in range(1, _functor_bound(ctx) + 1):
        v = check_d_proquasicoherent(quasicoherent_on_universe(FinModule(ctx.field, r), ctx.universe), _functor_bound(ctx))
        if not v.ok:
            return Verdict.failed(v.message, {"rank": r, **(v.witness or {})})
    return Verdict.passed("quasi-coherent functors are D-proquasi-coherent")


def _dpqc_counterexample(ctx: SuiteContext) -> Verdict:
    nil, _ = nilradical_functor(ctx.universe)
    if nil.is_zero():
        return Verdict.unknown("every algebra of the universe is reduced", universe=ctx.universe_name)
    v = check_d_proquasicoherent(nil, 1)
    if v.ok:
        return Verdict.failed("the nilradical functor was accepted", {"functor": nil.label})
    return Verdict.passed("nilradical functor rejected with a witness", witness=v.witness)


def _dpqc_tensor(ctx: SuiteContext) -> Verdict:
    u, f, bound = ctx.universe, ctx.field, _functor_bound(ctx)
    base = u.base
    qc1 = quasicoherent_on_universe(FinModule(f, 1), u)
    factors = [qc1, quasicoherent_on_universe(FinModule(f, 2), u), dual_on_universe(qc1)]
    tried = 0
    for i, a in enumerate(factors):
        for b in factors[i:]:
            t = tensor_functors(a, b)
            if t.ranks[base] != a.ranks[base] * b.ranks[base]:
                return Verdict.failed("value at K is not the tensor of the values", {"functor": t.label, "ranks": list(t.ranks)})
            v = check_d_proquasicoherent(t, bound)
            if not v.ok:
                return Verdict.failed(v.message, {"functor": t.label, **(v.witness or {})})
            tried += 1
    return Verdict.passed("tensor products of D-proquasi-coherent functors are D-proquasi-coherent", pairs=tried)


def _criteria(ctx: SuiteContext) -> Verdict:
    rng, u, f = ctx.rng("criteria"), ctx.universe, ctx.field
    action = AlgebraAction.regular(truncated_polynomial(f, 3))
    m = FinModule(f, action.rank)
    agreed = {"submodule": 0, "morphism": 0}
    for trial in range(20):
        gens = random_matrix(f, rng, action.rank, rng.randint(1, 2), bound=2).column_list()
        result = submodule_criterion(action, gens, u)
        if not result.agree:
            return Verdict.failed("submodule criterion: base and universe disagree", {"trial": trial, **(result.witness or {})})
        agreed["submodule"] += 1
        g = LinearMap(m, m, random_matrix(f, rng, action.rank, action.rank, bound=2))
        result = module_morphism_criterion(action, action, g, u)
        if not result.agree:
            return Verdict.failed("morphism criterion: base and universe disagree", {"trial": trial, **(result.witness or {})})
        agreed["morphism"] += 1
    return Verdict.passed("both criteria agree on K and on the universe", **agreed)


def _adjunction(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    setting = AdjunctionSetting.for_algebra(truncated_polynomial(f, 2))
    F = quasicoherent_on_universe(FinModule(f, 1), setting.k_universe)
    G = quasicoherent_on_universe(FinModule(f, 1), setting.s_universe)
    return verify_adjunction(setting, F, G)


FUNCTORS = [
    Check("functors.qc-reflexive", "M** = M for quasi-coherent M", _qc_reflexive),
    Check("functors.hom-dual-source", "Hom(M*, N) = M (x) N on the universe", _hom_dual_source_universe),
    Check("functors.qc-restriction", "Hom_R(M, N) = Hom_K(M, N(K)) for quasi-coherent M, N", _qc_restriction),
    Check("functors.dpqc-quasicoherent", "M* -> M(K)* is injective", _dpqc_quasicoherent),
    Check("functors.dpqc-counterexample", "M* -> M(K)* is injective", _dpqc_counterexample),
    Check("functors.dpqc-tensor", "M (x) M' is D-proquasi-coherent when M and M' are", _dpqc_tensor),
    Check("functors.criteria", "M' is an A-submodule of M iff qc(M') is a qc(A)-submodule", _criteria),
    Check("functors.adjunction", "Hom_S(i*M, N) = Hom_K(M, i_*N)", _adjunction),
]


# ---------------------------------------------------------------------------
# towers
# ---------------------------------------------------------------------------

def _tower_decomposition(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("tower-decomposition"), ctx.field
    for trial in range(100):
        s = stabilized_images(random_tower(f, rng))
        try:
            d = product_decomposition(s)
        except TowerError as exc:
            return Verdict.failed(str(exc), {"trial": trial, "dims": s.dims})
        if [sum(d.dims[: n + 1]) for n in range(len(d.dims))] != s.dims:
            return Verdict.failed("sum of kernel dims != level dim", {"trial": trial, "dims": s.dims})
    return Verdict.passed("100 random stabilized towers")


def _tower_roundtrip(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("tower-roundtrip"), ctx.field
    for trial in range(100):
        v = reflexivity_roundtrip(random_tower(f, rng))
        if not v.ok:
            return Verdict.failed(v.message, {"trial": trial, **(v.witness or {})})
    return Verdict.passed("100 random towers")


def _tower_kernel(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    t = power_series_tower(f, 8)
    functional = TowerFunctional.through(t, 0, (f.one,))
    q, split = kernel_tower(functional)
    if split is None or q.dims != [d - 1 for d in t.dims]:
        return Verdict.failed("kernel tower has the wrong dimensions", {"dims": q.dims})
    rng = ctx.rng("tower-kernel")
    for trial in range(50):
        s = stabilized_images(random_tower(f, rng))
        if s.dims[-1] == 0:
            continue
        row = tuple(f.random_element(rng, 2) for _ in range(s.dims[-1]))
        g = TowerFunctional.through(s, s.depth, row)
        try:
            kernel_tower(g)
        except TowerError as exc:
            return Verdict.failed(str(exc), {"trial": trial, "dims": s.dims})
    return Verdict.passed("levelwise V = ker f (+) K v", depth=8)


def _power_series_inverse(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    inv = ps_invert(f, (f.one, f.neg(f.one)), 10)
    if inv != (f.one,) * 11:
        return Verdict.failed("1/(1 - x) != sum x^k", {"inverse": [f.format(c) for c in inv]})
    return Verdict.passed("1/(1 - x) = sum x^k to depth 10")


def _completed_tensor(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    a = power_series_tower(f, ctx.depth)
    t = completed_tensor(a, a)
    expected = [(n + 1) ** 2 for n in range(ctx.depth + 1)]
    if t.dims != expected:
        return Verdict.failed("level dims are not squares", {"dims": t.dims})
    return Verdict.passed("levels are algebras of dim (n+1)^2", dims=t.dims)


def _tensor_universal(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    if not isinstance(f, PrimeField) or f.characteristic > 7:
        return Verdict.unknown("morphism enumeration needs a small prime field")
    a = power_series_tower(f, 1)
    return verify_tensor_universal_property(a, a, 1, truncated_polynomial(f, 2))


TOWERS = [
    Check("towers.product-decomposition", "lim M_n = prod H_n", _tower_decomposition),
    Check("towers.reflexivity", "lim M_n is reflexive", _tower_roundtrip),
    Check("towers.kernel", "P = Ker f (+) K v", _tower_kernel),
    Check("towers.power-series-inverse", "K[[x]] = lim K[x]/(x^n)", _power_series_inverse),
    Check("towers.completed-tensor", "(A* (x) B*)* = lim A_n (x) B_n", _completed_tensor),
    Check("towers.tensor-universal", "Hom(A (x) B, C) = Hom(A, C) x Hom(B, C)", _tensor_universal),
]


# ---------------------------------------------------------------------------
# bialgebras
# ---------------------------------------------------------------------------

def _base_bialgebra(f: Field) -> FinBialgebra:
    k = base_algebra(f)
    return FinBialgebra(k, FinCoalgebra(f, 1, (((0, 0, 1),),), (f.one,), "K"), "K")


def _fixtures(ctx: SuiteContext) -> list[FinBialgebra]:
    return [_base_bialgebra(ctx.field)] + [fx.build(ctx.field) for fx in group_fixtures()]


def _dual_valid(ctx: SuiteContext) -> Verdict:
    fixtures = _fixtures(ctx)
    for b in fixtures:
        try:
            v = check_double_dual(b)
        except BialgebraError as exc:
            return Verdict.failed(str(exc), {"fixture": b.name})
        if not v.ok:
            return Verdict.failed(v.message, {"fixture": b.name, **(v.witness or {})})
    return Verdict.passed("duals validate and double duals are canonical", fixtures=len(fixtures))


def _dual_swaps_commutativity(ctx: SuiteContext) -> Verdict:
    for b in _fixtures(ctx):
        d = dual_bialgebra(b)
        if b.is_commutative() != d.is_cocommutative() or b.is_cocommutative() != d.is_commutative():
            return Verdict.failed("dual does not swap commutativity", {"fixture": b.name})
    return Verdict.passed("commutative <-> cocommutative under duality")


def _group_dual_is_function(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    found = []
    for g in {fx.group.name: fx.group for fx in group_fixtures()}.values():
        iso = bialgebra_isomorphic(dual_bialgebra(group_bialgebra(g, f)), function_bialgebra(g, f))
        if iso is None:
            return Verdict.failed("no isomorphism K[G]* -> K^G found", {"group": g.name})
        found.append(g.name)
    return Verdict.passed("K[G]* = K^G", groups=found)


def _self_duality(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    found, skipped = [], []
    for fx in group_fixtures():
        if not fx.name.startswith("K[") or not fx.group.is_abelian:
            continue
        if not fx.applies_to(f):
            skipped.append(fx.group.name)
            continue
        b = fx.build(f)
        if bialgebra_isomorphic(b, dual_bialgebra(b)) is not None:
            found.append(fx.group.name)
        else:
            skipped.append(fx.group.name)
    if skipped:
        return Verdict.unknown("no isomorphism found for some groups", found=found, not_found=skipped)
    return Verdict.passed("K[G] = K[G]* for abelian G", groups=found)


def _transpose(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    fixtures = _fixtures(ctx)
    morphisms = []
    for a in fixtures:
        for b in fixtures:
            if a.dim * b.dim <= 16:
                morphisms.append(counit_unit_morphism(a, dual_bialgebra(b)))
    for fx in group_fixtures():
        if fx.name.startswith("K[") and fx.group.is_abelian and fx.applies_to(f):
            b = fx.build(f)
            iso = bialgebra_isomorphic(b, dual_bialgebra(b))
            if iso is not None:
                morphisms.append(iso)
    for k, m in enumerate(morphisms):
        t = transpose_bialgebra_morphism(m)
        v = is_bialgebra_morphism(t.source, t.target, t.matrix)
        if not v.ok:
            return Verdict.failed("transpose is not a morphism", {"morphism": k, **(v.witness or {})})
        tt = transpose_bialgebra_morphism(t)
        if tt.matrix != m.matrix:
            return Verdict.failed("double transpose differs", {"morphism": k})
    return Verdict.passed("transposes are morphisms and transpose is involutive", morphisms=len(morphisms))


BIALGEBRAS = [
    Check("bialgebras.dual", "B -> B* is an anti-equivalence", _dual_valid),
    Check("bialgebras.dual-commutativity", "B commutative <-> B* cocommutative", _dual_swaps_commutativity),
    Check("bialgebras.group-dual", "K[G]* = K^G", _group_dual_is_function),
    Check("bialgebras.self-duality", "K[G] = K^G for abelian G", _self_duality),
    Check("bialgebras.transpose", "Hom(A, B*) = Hom(B, A*)", _transpose),
]


# ---------------------------------------------------------------------------
# findual
# ---------------------------------------------------------------------------

def _geometric_product(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    p = RecursiveFunctional.geometric(f, 2) * RecursiveFunctional.geometric(f, 3)
    if p != RecursiveFunctional.geometric(f, 6):
        return Verdict.failed("geometric(2) geometric(3) != geometric(6)", {"annihilator": [f.format(c) for c in p.annihilator]})
    return Verdict.passed("grouplike product of geometric sequences")


def _binomial_ones(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    ones = RecursiveFunctional.ones(f, "primitive")
    p = ones * ones
    if p != RecursiveFunctional.geometric(f, 2, "primitive"):
        return Verdict.failed("ones ones != 2^n", {"annihilator": [f.format(c) for c in p.annihilator]})
    return Verdict.passed("primitive product ones ones = 2^n")


def _hankel_rank(f: Field, seq: tuple, size: int) -> int:
    """Rank of the ``size x size`` Hankel matrix of ``seq``: the least recurrence degree."""
    if isinstance(f, PrimeField):
        domain, entry = sympy.GF(f.characteristic), int
    else:
        domain, entry = sympy.QQ, lambda x: (x.numerator, x.denominator)
    rows = [[entry(seq[i + j]) for j in range(size)] for i in range(size)]
    return DomainMatrix.from_list(rows, domain).rank()


def _fibonacci_square(ctx: SuiteContext) -> Verdict:
    f = ctx.field
    fib = RecursiveFunctional.fibonacci(f)
    sq = fib * fib
    seq = tuple(f.mul(x, x) for x in fib.terms(20))
    ann, d = sq.annihilator, sq.degree
    for n in range(len(seq) - d):
        if f.reduce(sum(ann[i] * seq[n + i] for i in range(d + 1))) != f.zero:
            return Verdict.failed("annihilator does not kill the squared terms", {"index": n, "degree": d})
    if sq.terms(20) != seq:
        return Verdict.failed("product terms differ from the squared terms", {"degree": d})
    least = _hankel_rank(f, seq, 10)
    if d != least:
        return Verdict.failed("annihilator is not minimal", {"degree": d, "hankel_rank": least})
    return Verdict.passed("Fibonacci squared", degree=d)


def _product_bound(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("product-bound"), ctx.field
    count = 0
    for model in MODELS:
        for trial in range(250):
            a, b = random_functional(f, rng, model), random_functional(f, rng, model)
            try:
                p = a * b
            except RecurrenceError as exc:
                return Verdict.failed(str(exc), {"model": model, "trial": trial, "degrees": [a.degree, b.degree]})
            if p.degree > a.degree * b.degree:
                return Verdict.failed("degree bound exceeded", {"model": model, "trial": trial})
            count += 1
    return Verdict.passed("products stay within the degree bound", products=count)


def _laws(ctx: SuiteContext) -> Verdict:
    rng, f = ctx.rng("findual-laws"), ctx.field
    for model in MODELS:
        unit = RecursiveFunctional.unit(f, model)
        for trial in range(5):
            a, b, c = (random_functional(f, rng, model, 2) for _ in range(3))
            if a.minimize().terms(30) != a.terms(30):
                return Verdict.failed("minimize changes the functional", {"model": model, "trial": trial})
            if (a * unit).terms(20) != a.terms(20):
                return Verdict.failed("unit law fails", {"model": model, "trial": trial})
            if (a * b).terms(30) != (b * a).terms(30):
                return Verdict.failed("product is not commutative", {"model": model, "trial": trial})
            if ((a * b) * c).terms(30) != (a * (b * c)).terms(30):
                return Verdict.failed("product is not associative", {"model": model, "trial": trial})
            if (a * (b + c)).terms(30) != (a * b + a * c).terms(30):
                return Verdict.failed("product does not distribute", {"model": model, "trial": trial})
    return Verdict.passed("unit, commutativity, associativity, distributivity")


FINDUAL = [
    Check("findual.geometric-product", "geometric(r) geometric(s) = geometric(rs)", _geometric_product),
    Check("findual.binomial-ones", "ones ones = 2^n under x |-> x (x) 1 + 1 (x) x", _binomial_ones),
    Check("findual.fibonacci-square", "K[x]° is an algebra", _fibonacci_square),
    Check("findual.product-bound", "deg(ab) <= deg(a) deg(b)", _product_bound),
    Check("findual.laws", "K[x]° is a commutative algebra", _laws),
]


SUITES: dict[str, list[Check]] = {
    "linalg": LINALG,
    "modules": MODULES,
    "functors": FUNCTORS,
    "towers": TOWERS,
    "bialgebras": BIALGEBRAS,
    "findual": FINDUAL,
}
SUITES["all"] = [c for name in list(SUITES) for c in SUITES[name]]


def suite_checks(suite: str, only: str | None = None) -> list[Check]:
    if suite not in SUITES:
        raise SuiteError(f"unknown suite {suite!r} (known: {', '.join(SUITES)})")
    checks = SUITES[suite]
    if only is not None:
        checks = [c for c in checks if c.name == only]
        if not checks:
            raise SuiteError(f"no check named {only!r} in suite {suite!r}")
    return checks


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

def reproducer(suite: str, field: Field, seed: int, name: str) -> str:
    return f"reflexa report --suite {suite} --field {field.spec} --seed {seed} --only {name}"


def run_check(check: Check, ctx: SuiteContext) -> tuple[Verdict, float]:
    """Run one check; an exception escaping it is reported as a failure."""
    start = time.perf_counter()
    try:
        verdict = check.run(ctx)
    except ReflexaError as exc:
        logger.debug("check %s raised", check.name, exc_info=True)
        verdict = Verdict.failed(f"{type(exc).__name__}: {exc}", {"exception": type(exc).__name__})
    elapsed = time.perf_counter() - start
    logger.info("%s: %s (%.3fs)", check.name, verdict.status, elapsed)
    return verdict, elapsed


def run_suite(
    suite: str,
    ctx: SuiteContext,
    only: str | None = None,
    jobs: int = 1,
) -> Report:
    """Run the checks of ``suite`` and collect them into a report in suite order."""
    checks = suite_checks(suite, only)
    if jobs > 1:
        # build the universe before the workers share it
        if any(c.name.startswith("functors.") for c in checks):
            ctx.universe
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: run_check(c, ctx), checks))
    else:
        results = [run_check(c, ctx) for c in checks]

    records = []
    for check, (verdict, elapsed) in zip(checks, results):
        extra = {"timing": round(elapsed, 6)}
        if verdict.status == "fail":
            extra["reproducer"] = reproducer(suite, ctx.field, ctx.seed, check.name)
        records.append(CheckRecord.from_verdict(check.name, check.anchor, verdict, **extra))
    return Report(suite=suite, field=ctx.field.spec, seed=ctx.seed, records=records)
