"""Verb handlers.

Each handler takes the parsed arguments and the run :class:`Settings` and
returns either a :class:`~reflexa.report.Report` (checks, exit code from
the verdicts) or a JSON-ready value (constructions, always exit 0).
"""

from __future__ import annotations

import argparse
import json
import logging
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from reflexa.algebras import StructureError
from reflexa.bialgebras import (
    BialgebraError,
    FinBialgebra,
    FiniteGroup,
    bialgebra_isomorphic,
    check_double_dual,
    dual_bialgebra,
    function_bialgebra,
    group_bialgebra,
    group_by_name,
    grouplike_elements,
)
from reflexa.codec import (
    InputError,
    bialgebra_from_model,
    bialgebra_to_model,
    direct_system_to_model,
    functional_from_model,
    functional_to_model,
    group_from_model,
    linear_map_from_model,
    linear_map_to_model,
    load_model,
    matrix_to_model,
    module_from_model,
    module_to_model,
    parse_model,
    prefix_from_model,
    tower_from_model,
    tower_to_model,
    universe_from_model,
)
from reflexa.findual import RecursiveFunctional
from reflexa.functors import (
    Universe,
    check_d_proquasicoherent,
    check_reflexive,
    dual_on_universe,
    nat_hom_space,
    quasicoherent_on_universe,
)
from reflexa.linalg import Field
from reflexa.model import (
    BialgebraModel,
    GroupModel,
    LinearMapModel,
    ModuleModel,
    RecursiveFunctionalModel,
    SequencePrefixModel,
    TowerModel,
    UniverseModel,
    Verdict,
)
from reflexa.modules import FinModule, double_dual_unit, dual_map, dual_module, snake_identity
from reflexa.report import CheckRecord, Report
from reflexa.towers import (
    Tower,
    TowerError,
    TowerFunctional,
    builtin_tower,
    dual_tower,
    kernel_tower,
    product_decomposition,
    reflexivity_roundtrip,
    stabilized_images,
)

from ._settings import Settings
from ._suites import SuiteContext, resolve_universe, run_suite

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Settings], Any]


# ---------------------------------------------------------------------------
# Input resolution
# ---------------------------------------------------------------------------

def _read_json(path: str) -> tuple[str, Any]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", path) from exc
    try:
        return text, json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", path, exc.lineno) from exc


def _field_line(path: str) -> int | None:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError:
        return None
    k = text.find('"field"')
    return None if k < 0 else text.count("\n", 0, k) + 1


def _reconcile(settings: Settings, file_field: Field, path: str) -> Field:
    """The file's field; an explicit ``--field`` must agree with it."""
    if settings.field is not None and settings.scalar_field != file_field:
        raise InputError(
            f"field mismatch: file is over {file_field.spec}, --field is {settings.scalar_field.spec}",
            path,
            _field_line(path),
        )
    return file_field


def _is_file(spec: str) -> bool:
    return Path(spec).is_file()


def load_universe(name: str, field: Field) -> Universe:
    """A built-in universe name or the path of a universe JSON file."""
    if not _is_file(name):
        return resolve_universe(name, field)
    u = universe_from_model(load_model(name, UniverseModel), name=Path(name).stem)
    if u.field != field:
        raise InputError(f"field mismatch: universe is over {u.field.spec}, run uses {field.spec}", name, _field_line(name))
    return u


def _module(path: str, settings: Settings) -> FinModule:
    m = module_from_model(load_model(path, ModuleModel))
    _reconcile(settings, m.field, path)
    return m


def _tower(spec: str, settings: Settings) -> Tower:
    if _is_file(spec):
        t = tower_from_model(load_model(spec, TowerModel), name=Path(spec).stem)
        _reconcile(settings, t.field, spec)
        return t
    depth = settings.depth if "depth" in settings.model_fields_set else None
    return builtin_tower(spec, settings.scalar_field, depth)


def _group(spec: str) -> FiniteGroup:
    if _is_file(spec):
        return group_from_model(load_model(spec, GroupModel))
    return group_by_name(spec)


def _bialgebra(spec: str, settings: Settings) -> FinBialgebra:
    """A bialgebra file, or a group file or name standing for its group bialgebra."""
    if not _is_file(spec):
        return group_bialgebra(group_by_name(spec), settings.scalar_field)
    text, data = _read_json(spec)
    if isinstance(data, dict) and "table" in data:
        return group_bialgebra(group_from_model(parse_model(text, GroupModel, spec)), settings.scalar_field)
    b = bialgebra_from_model(parse_model(text, BialgebraModel, spec))
    _reconcile(settings, b.field, spec)
    return b


def _functional(path: str, settings: Settings) -> RecursiveFunctional:
    r = functional_from_model(load_model(path, RecursiveFunctionalModel))
    _reconcile(settings, r.field, path)
    return r


def _report(label: str, field: Field, settings: Settings, checks: Sequence[tuple[str, str, Verdict]], rerun: str) -> Report:
    records = []
    for name, anchor, verdict in checks:
        extra = {"reproducer": rerun} if verdict.status == "fail" else {}
        records.append(CheckRecord.from_verdict(name, anchor, verdict, **extra))
    return Report(suite=label, field=field.spec, seed=settings.seed, records=records)


def _guarded(build: Callable[[], Verdict]) -> Verdict:
    try:
        return build()
    except (StructureError, BialgebraError, TowerError) as exc:
        return Verdict.failed(str(exc), {"error": type(exc).__name__})


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _module_checks(m: FinModule, settings: Settings) -> list[tuple[str, str, Verdict]]:
    unit = double_dual_unit(m).matrix
    double_dual = (
        Verdict.passed("unit M -> M** is the identity", rank=m.rank)
        if unit.is_identity()
        else Verdict.failed("unit M -> M** is not the identity", {"unit": unit.to_dict()})
    )
    snake = (
        Verdict.passed("zig-zag identities hold")
        if snake_identity(m)
        else Verdict.failed("zig-zag identity fails", {"rank": m.rank})
    )
    qc = quasicoherent_on_universe(m, load_universe(settings.universe, m.field))
    return [
        ("module.double-dual", "M** = M", double_dual),
        ("module.snake", "(ev (x) 1)(1 (x) coev) = 1", snake),
        ("module.qc-reflexive", "M** = M for quasi-coherent M", check_reflexive(qc)),
        ("module.dpqc", "M* -> M(K)* is injective", check_d_proquasicoherent(qc, settings.rank_bound)),
    ]


def _bialgebra_checks(b: FinBialgebra) -> list[tuple[str, str, Verdict]]:
    def swaps() -> Verdict:
        d = dual_bialgebra(b)
        if b.is_commutative() != d.is_cocommutative() or b.is_cocommutative() != d.is_commutative():
            return Verdict.failed("dual does not swap commutativity", {"bialgebra": b.name})
        return Verdict.passed("commutative <-> cocommutative under duality", commutative=b.is_commutative())

    return [
        ("bialg.dual", "B -> B* is an anti-equivalence", _guarded(lambda: check_double_dual(b))),
        ("bialg.dual-commutativity", "B commutative <-> B* cocommutative", _guarded(swaps)),
    ]


def _tower_checks(t: Tower) -> list[tuple[str, str, Verdict]]:
    def decompose() -> Verdict:
        s = stabilized_images(t)
        d = product_decomposition(s)
        return Verdict.passed("levels split as products of kernels", dims=s.dims, kernels=d.dims)

    return [
        ("tower.product-decomposition", "lim M_n = prod H_n", _guarded(decompose)),
        ("tower.reflexivity", "lim M_n is reflexive", reflexivity_roundtrip(t)),
    ]


def cmd_check(args: argparse.Namespace, settings: Settings) -> Any:
    rerun = f"reflexa check {args.kind} {args.input}"
    if args.kind == "module":
        m = _module(args.input, settings)
        return _report("check module", m.field, settings, _module_checks(m, settings), rerun)
    if args.kind == "map":
        g = linear_map_from_model(load_model(args.input, LinearMapModel))
        _reconcile(settings, g.field, args.input)
        lhs = dual_map(dual_map(g)).matrix @ double_dual_unit(g.domain).matrix
        rhs = double_dual_unit(g.codomain).matrix @ g.matrix
        v = (
            Verdict.passed("naturality square commutes")
            if lhs == rhs
            else Verdict.failed("naturality square fails", {"matrix": g.matrix.to_dict()})
        )
        return _report("check map", g.field, settings, [("map.naturality", "f** = f", v)], rerun)
    if args.kind == "tower":
        t = _tower(args.input, settings)
        return _report("check tower", t.field, settings, _tower_checks(t), rerun)
    b = _bialgebra(args.input, settings)
    return _report("check bialg", b.field, settings, _bialgebra_checks(b), rerun)


# ---------------------------------------------------------------------------
# dual and hom
# ---------------------------------------------------------------------------

def cmd_dual(args: argparse.Namespace, settings: Settings) -> Any:
    if args.kind == "module":
        return module_to_model(dual_module(_module(args.input, settings)))
    if args.kind == "map":
        g = linear_map_from_model(load_model(args.input, LinearMapModel))
        _reconcile(settings, g.field, args.input)
        return linear_map_to_model(dual_map(g))
    if args.kind == "tower":
        return direct_system_to_model(dual_tower(stabilized_images(_tower(args.input, settings))))
    return bialgebra_to_model(dual_bialgebra(_bialgebra(args.input, settings)))


def cmd_hom(args: argparse.Namespace, settings: Settings) -> Any:
    m = _module(args.source, settings)
    n = _module(args.target, settings)
    if m.field != n.field:
        raise InputError(f"field mismatch: {args.source} is over {m.field.spec}, this file over {n.field.spec}", args.target, _field_line(args.target))
    u = load_universe(settings.universe, m.field)
    expected = m.rank * n.rank

    def solved(source, what: str) -> Verdict:
        space = nat_hom_space(source, quasicoherent_on_universe(n, u))
        details = {"dim": space.dim, "expected": expected}
        if space.dim != expected:
            return Verdict.failed(f"dim {what} != rank M * rank N", details)
        if not space.restriction_is_injective():
            return Verdict.failed(f"{what} is not determined at K", details)
        return Verdict.passed(f"dim {what} = {space.dim}", **details)

    qc = quasicoherent_on_universe(m, u)
    checks = [
        ("hom.quasicoherent", "Hom_R(M, N) = Hom_K(M, N(K))", solved(qc, "Hom(M, N)")),
        ("hom.dual-source", "Hom(M*, N) = M (x) N", solved(dual_on_universe(qc), "Hom(M*, N)")),
    ]
    return _report("hom", m.field, settings, checks, f"reflexa hom {args.source} {args.target}")


# ---------------------------------------------------------------------------
# tower
# ---------------------------------------------------------------------------

def _parse_row(field: Field, text: str | None, size: int) -> tuple:
    if text is None:
        return field.unit_vector(size, 0) if size else ()
    try:
        row = tuple(field.parse(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--row: cannot parse {text!r}", "<args>") from exc
    if len(row) != size:
        raise InputError(f"--row needs {size} entries, got {len(row)}", "<args>")
    return row


def _kernel(t: Tower, level: int, row_text: str | None) -> Verdict:
    s = stabilized_images(t)
    if not 0 <= level <= s.depth:
        raise InputError(f"--level must be between 0 and {s.depth}", "<args>")
    row = _parse_row(s.field, row_text, s.levels[level].rank)
    q, split = kernel_tower(TowerFunctional.through(s, level, row))
    if split is None:
        return Verdict.unknown("the functional is zero; nothing to split", dims=s.dims)
    fmt = s.field.format
    return Verdict.passed(
        "levelwise V = ker f (+) K v",
        dims=s.dims,
        quotient_dims=q.dims,
        element=[fmt(x) for x in split.element.level(s.depth)],
    )


def cmd_tower(args: argparse.Namespace, settings: Settings) -> Any:
    t = _tower(args.input, settings)
    if args.action == "stabilize":
        return tower_to_model(stabilized_images(t))
    if args.action == "decompose":
        d = product_decomposition(stabilized_images(t))
        fmt = t.field.format
        return {
            "field": t.field.spec,
            "dims": d.dims,
            "kernels": [[[fmt(x) for x in v] for v in k] for k in d.kernels],
            "isomorphisms": [matrix_to_model(m).model_dump(mode="json") for m in d.isomorphisms],
        }
    if args.action == "dual":
        return direct_system_to_model(dual_tower(stabilized_images(t)))
    rerun = f"reflexa tower {args.action} {args.input}"
    if args.action == "roundtrip":
        return _report("tower roundtrip", t.field, settings, [("tower.reflexivity", "lim M_n is reflexive", reflexivity_roundtrip(t))], rerun)
    v = _guarded(lambda: _kernel(t, args.level, args.row))
    return _report("tower kernel", t.field, settings, [("tower.kernel", "P = Ker f (+) K v", v)], rerun)


# ---------------------------------------------------------------------------
# bialg
# ---------------------------------------------------------------------------

def _iso_verdict(a: FinBialgebra, b: FinBialgebra) -> Verdict:
    if a.field != b.field or a.dim != b.dim:
        return Verdict.failed("fields or dimensions differ", {"dims": [a.dim, b.dim], "fields": [a.field.spec, b.field.spec]})
    iso = bialgebra_isomorphic(a, b)
    if iso is not None:
        return Verdict.passed("isomorphism found", matrix=iso.matrix.to_dict())
    ga, gb = grouplike_elements(a), grouplike_elements(b)
    if len(ga) != len(gb):
        return Verdict.failed("grouplike counts differ", {"grouplikes": [len(ga), len(gb)]})
    ca, cb = grouplike_elements(dual_bialgebra(a)), grouplike_elements(dual_bialgebra(b))
    if len(ca) != len(cb):
        return Verdict.failed("character counts differ", {"characters": [len(ca), len(cb)]})
    return Verdict.unknown("no isomorphism found by the grouplike and character search", grouplikes=len(ga), characters=len(ca))


def cmd_bialg(args: argparse.Namespace, settings: Settings) -> Any:
    if args.action == "group":
        return bialgebra_to_model(group_bialgebra(_group(args.inputs[0]), settings.scalar_field))
    if args.action == "function":
        return bialgebra_to_model(function_bialgebra(_group(args.inputs[0]), settings.scalar_field))
    b = _bialgebra(args.inputs[0], settings)
    if args.action == "dual":
        return bialgebra_to_model(dual_bialgebra(b))
    if args.action == "grouplikes":
        return [[b.field.format(x) for x in g] for g in grouplike_elements(b)]
    if args.action == "check":
        return _report("bialg check", b.field, settings, _bialgebra_checks(b), f"reflexa bialg check {args.inputs[0]}")
    if len(args.inputs) != 2:
        raise InputError("bialg iso needs two inputs", "<args>")
    other = _bialgebra(args.inputs[1], settings)
    v = _iso_verdict(b, other)
    rerun = f"reflexa bialg iso {args.inputs[0]} {args.inputs[1]}"
    return _report("bialg iso", b.field, settings, [("bialg.iso", "B = B' as bialgebras", v)], rerun)


# ---------------------------------------------------------------------------
# findual
# ---------------------------------------------------------------------------

def cmd_findual(args: argparse.Namespace, settings: Settings) -> Any:
    if args.action == "fit":
        prefix = load_model(args.inputs[0], SequencePrefixModel)
        field, values = prefix_from_model(prefix)
        _reconcile(settings, field, args.inputs[0])
        r = RecursiveFunctional.from_prefix(field, values, prefix.max_degree, prefix.model)
        return None if r is None else functional_to_model(r)
    a = _functional(args.inputs[0], settings)
    if args.action == "eval":
        return [a.field.format(x) for x in a.terms(args.terms)]
    if args.action == "min":
        return functional_to_model(a.minimize())
    if len(args.inputs) != 2:
        raise InputError(f"findual {args.action} needs two inputs", "<args>")
    b = _functional(args.inputs[1], settings)
    return functional_to_model(a + b if args.action == "add" else a * b)


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def cmd_report(args: argparse.Namespace, settings: Settings) -> Any:
    ctx = SuiteContext(
        field=settings.scalar_field,
        seed=settings.seed,
        rank_bound=settings.rank_bound,
        depth=settings.depth,
        universe_name=settings.universe,
        universe_loader=load_universe,
    )
    return run_suite(settings.suite, ctx, only=settings.only, jobs=settings.jobs)


COMMANDS: dict[str, Handler] = {
    "check": cmd_check,
    "dual": cmd_dual,
    "hom": cmd_hom,
    "tower": cmd_tower,
    "bialg": cmd_bialg,
    "findual": cmd_findual,
    "report": cmd_report,
}
