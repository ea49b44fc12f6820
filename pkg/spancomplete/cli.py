"""Command line front end.

Every command prints a single JSON verdict with sorted keys on stdout; CSV
output is available where noted. Exit codes: 0 for a positive or
constructed result, 1 for a negative verdict, 2 when the input cannot be
read or does not meet the command's preconditions.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any

import pandas as pd
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.markup import escape
from rich.tree import Tree

from . import __version__
from .acyclic import (
    Complex,
    DirectedComplex,
    RipOrder,
    directed_graham_reduce,
    directed_rip_order,
    fill_configuration,
    graham_reduce,
    has_spine,
    is_acyclic_configuration,
    is_chordal,
    is_connected,
    is_directed_acyclic_configuration,
    rip_order,
    skeleton1,
    spheres_filled,
)
from .config import RunConfig
from .datasets import load_fixture_file
from .delta import (
    compose,
    defect,
    factor_into_generators,
    is_codegeneracy,
    is_coface,
    is_efficient,
    reedy_factorize,
)
from .diagrams import Square
from .exceptions import (
    EndpointViolation,
    HasPushout,
    IncompatibleAssignment,
    IncompatibleProjections,
    NoFiller,
    NotAcyclic,
    NotBalanced,
    NotPushout,
    SpanCompleteError,
    TrivialSquare,
)
from .instances import Distribution, Pseudometric, Table, join, join_along
from .instances import provider as make_provider
from .logging_setup import configure_logging
from .oracle import (
    sweep_acyclicity,
    sweep_concrete_criterion,
    sweep_factorizations,
    sweep_pushouts,
)
from .reports import (
    SWEEP_CHECKS,
    SWEEP_GROUPS,
    SWEEP_REQUIRED,
    catalog_table,
    summarise_sweep,
)
from .schema import (
    CategoryModel,
    ComplexModel,
    DecompositionModel,
    FamilyModel,
    FillRequest,
    MapModel,
    SpanModel,
    SquareModel,
    SSetModel,
    TableModel,
    dump_complex,
    dump_distribution,
    dump_grid,
    dump_map,
    dump_metric,
    dump_rip_order,
    dump_square,
    dump_table,
)
from .squares import (
    CATALOG_KINDS,
    CONDITION_NAMES,
    basic_kind,
    catalog,
    compute_pushout,
    factor_balanced,
    factor_into_basic,
    has_pushout,
    is_balanced,
    is_pushout_square,
    is_set_pushout,
    pushout_failure_witness,
    pushout_violation,
    spine_condition,
)
from .sset import (
    TruncatedSSet,
    classify,
    evaluation_mismatches,
    find_filler,
    nerve,
    validate,
)
from .vee import canonical, components_of_map, pushforward, vee_product

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class InputError(SpanCompleteError):
    """Input that cannot be read, with the position of the problem."""

    def __init__(self, msg: str, position: dict[str, Any]) -> None:
        super().__init__(msg)
        self.position = position


@dataclass
class Verdict:
    """Outcome of one command.

    Attributes
    ----------
    command : str
        Command echo, e.g. ``"square pushout"``.
    ok : bool
        Positive verdict or successful construction.
    result : Any
        JSON-ready payload.
    witness : Any
        Failing datum of a negative verdict.
    dim : int or None
        Truncation bound the verdict refers to.
    error : dict or None
        Message and position of an input error.
    text : str or None
        Preformatted output (CSV) printed instead of JSON.

    """

    command: str
    ok: bool
    result: Any = None
    witness: Any = None
    dim: int | None = None
    error: dict[str, Any] | None = None
    text: str | None = None

    @property
    def exit_code(self) -> int:
        """Process exit code of the verdict."""
        if self.error is not None:
            return EXIT_INPUT
        return EXIT_OK if self.ok else EXIT_NEGATIVE

    def render(self) -> str:
        """Text written to stdout."""
        if self.text is not None:
            return self.text
        payload = {"command": self.command, "ok": self.ok}
        for name in ("result", "witness", "dim", "error"):
            value = getattr(self, name)
            if value is not None:
                payload[name] = value
        return json.dumps(payload, sort_keys=True)


# -----------------------------------------------------------------------------
# Input
# -----------------------------------------------------------------------------


@contextmanager
def _reading(path: str) -> Iterator[None]:
    try:
        yield
    except OSError as err:
        msg = f"Cannot read {path}: {err.strerror}"
        raise InputError(msg, {"path": path}) from err
    except json.JSONDecodeError as err:
        position = {"path": path, "line": err.lineno, "column": err.colno}
        raise InputError(err.msg, position) from err
    except ValidationError as err:
        first = err.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise InputError(first["msg"], {"path": path, "field": field}) from err
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as err:
        raise InputError(str(err), {"path": path}) from err
    except InputError:
        raise
    except SpanCompleteError as err:
        raise InputError(str(err), {"path": path}) from err


def _read_json(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    return load_fixture_file(path)


def _load(path: str, model: type[BaseModel]) -> Any:
    with _reading(path):
        return model.model_validate(_read_json(path)).to_domain()


def _load_table(path: str) -> Table:
    with _reading(path):
        if Path(path).suffix == ".csv":
            return Table.from_csv(path)
        return TableModel.model_validate(_read_json(path)).to_domain()


def _load_complex(path: str, *, directed: bool) -> Complex:
    complex_ = _load(path, ComplexModel)
    if directed and not isinstance(complex_, DirectedComplex):
        with _reading(path):
            return DirectedComplex(complex_.ground, complex_.facets)
    return complex_


def _load_sset(args: argparse.Namespace, config: RunConfig) -> TruncatedSSet:
    if args.nerve:
        category = _load(args.sset, CategoryModel)
        return nerve(category, config.dim)
    return _load(args.sset, SSetModel)


# -----------------------------------------------------------------------------
# delta
# -----------------------------------------------------------------------------


def _delta_compose(args: argparse.Namespace, _: RunConfig) -> Verdict:
    f, g = _load(args.f, MapModel), _load(args.g, MapModel)
    composite = compose(f, g)
    return Verdict(
        "delta compose",
        ok=True,
        result={
            "composite": dump_map(composite),
            "defect": defect(composite),
            "efficient": is_efficient(f, g),
        },
    )


def _delta_factor(args: argparse.Namespace, _: RunConfig) -> Verdict:
    f = _load(args.map, MapModel)
    s, d = reedy_factorize(f)
    word = factor_into_generators(f, reverse=args.reverse)
    return Verdict(
        "delta factor",
        ok=True,
        result={
            "surjection": dump_map(s),
            "injection": dump_map(d),
            "generators": [dump_map(w) for w in word],
            "defect": defect(f),
        },
    )


def _delta_defect(args: argparse.Namespace, _: RunConfig) -> Verdict:
    f = _load(args.map, MapModel)
    return Verdict(
        "delta defect",
        ok=True,
        result={
            "defect": defect(f),
            "coface": is_coface(f),
            "codegeneracy": is_codegeneracy(f),
        },
    )


# -----------------------------------------------------------------------------
# square
# -----------------------------------------------------------------------------


def _witness_payload(span: Any, against: Any = None) -> dict[str, Any]:
    condition, index = pushout_violation(span)
    phi, psi = pushout_failure_witness(span, against)
    return {
        "condition": CONDITION_NAMES[condition],
        "index": index,
        "phi": list(phi.values),
        "psi": list(psi.values),
    }


def _square_check(args: argparse.Namespace, _: RunConfig) -> Verdict:
    square = _load(args.square, SquareModel)
    if not square.commutes:
        index = next(
            i
            for i in range(square.m + 1)
            if square.h(square.f(i)) != square.k(square.g(i))
        )
        return Verdict(
            "square check",
            ok=False,
            result={"commutes": False},
            witness={"index": index},
        )
    pushout = is_pushout_square(square)
    kind = basic_kind(square)
    result = {
        "commutes": True,
        "pushout": pushout,
        "set_pushout": is_set_pushout(square),
        "spine": spine_condition(square),
        "balanced": is_balanced(square),
        "kind": None if kind is None else str(kind),
    }
    witness = None
    if not pushout:
        span = square.span
        if has_pushout(span):
            witness = {"pushout": dump_square(compute_pushout(span))}
        else:
            witness = _witness_payload(span, (square.h, square.k))
    return Verdict("square check", ok=pushout, result=result, witness=witness)


def _square_pushout(args: argparse.Namespace, _: RunConfig) -> Verdict:
    span = _load(args.span, SpanModel)
    if has_pushout(span):
        square = compute_pushout(span)
        return Verdict(
            "square pushout", ok=True, result={"pushout": dump_square(square)}
        )
    return Verdict(
        "square pushout",
        ok=False,
        result={"pushout": None},
        witness=_witness_payload(span),
    )


def _square_witness(args: argparse.Namespace, _: RunConfig) -> Verdict:
    if args.square is not None:
        square: Square = _load(args.square, SquareModel)
        span, against = square.span, (square.h, square.k)
    else:
        span, against = _load(args.span, SpanModel), None
    try:
        payload = _witness_payload(span, against)
    except HasPushout as err:
        return Verdict(
            "square witness",
            ok=False,
            result={"witness": None},
            witness={"reason": str(err)},
        )
    return Verdict("square witness", ok=True, result=payload)


def _square_factor(args: argparse.Namespace, _: RunConfig) -> Verdict:
    square = _load(args.square, SquareModel)
    try:
        grid = factor_into_basic(square)
    except NotPushout as err:
        return Verdict(
            "square factor", ok=False, witness={"reason": str(err)}
        )
    return Verdict(
        "square factor",
        ok=True,
        result={
            "grid": dump_grid(grid),
            "cells": sum(1 for _ in grid.leaves()),
        },
    )


def _square_factor_balanced(
    args: argparse.Namespace, _: RunConfig
) -> Verdict:
    square = _load(args.square, SquareModel)
    try:
        grid = factor_balanced(square)
    except (NotBalanced, TrivialSquare) as err:
        return Verdict(
            "square factor-balanced", ok=False, witness={"reason": str(err)}
        )
    return Verdict(
        "square factor-balanced",
        ok=True,
        result={"grid": dump_grid(grid), "cells": grid.rows * grid.cols},
    )


# -----------------------------------------------------------------------------
# vee
# -----------------------------------------------------------------------------


def _vee_decompose(args: argparse.Namespace, _: RunConfig) -> Verdict:
    f = _load(args.map, MapModel)
    dec = (
        canonical(f.dom)
        if args.base is None
        else _load(args.base, DecompositionModel)
    )
    family = components_of_map(f, dec)
    return Verdict(
        "vee decompose",
        ok=True,
        result={
            "parts": [dump_map(part) for part in family.parts],
            "source": list(dec.components()),
            "target": list(pushforward(dec, f).components()),
        },
    )


def _vee_product(args: argparse.Namespace, _: RunConfig) -> Verdict:
    with _reading(args.family):
        parts = FamilyModel.model_validate(_read_json(args.family)).parts
        maps = [part.to_domain() for part in parts]
    try:
        product = vee_product(maps)
    except EndpointViolation as err:
        return Verdict(
            "vee product",
            ok=False,
            witness={"part": err.part, "endpoint": err.endpoint},
        )
    return Verdict(
        "vee product",
        ok=True,
        result={"product": dump_map(product), "defect": defect(product)},
    )


# -----------------------------------------------------------------------------
# complex
# -----------------------------------------------------------------------------


def _complex_verdict(complex_: Complex, command: str) -> Verdict:
    chordal = is_chordal(skeleton1(complex_))
    spheres = spheres_filled(complex_)
    if isinstance(complex_, DirectedComplex):
        reduction = directed_graham_reduce(complex_)
        spine = has_spine(complex_)
        acyclic = is_directed_acyclic_configuration(complex_)
        result = {
            "directed": True,
            "acyclic": acyclic,
            "spine": spine,
            "elimination_order": list(reduction.order),
            "chordal": chordal,
            "spheres_filled": spheres,
        }
        witness = None
        if not spine:
            missing = next(
                [i, i + 1]
                for i in range(complex_.n)
                if not any({i, i + 1} <= f for f in complex_.facets)
            )
            witness = {"missing_spine_edge": missing}
        elif not acyclic:
            witness = {"residual": dump_complex(reduction.residual)}
        return Verdict(command, ok=acyclic, result=result, witness=witness)
    reduction = graham_reduce(complex_)
    acyclic = reduction.residual.is_empty
    result = {
        "directed": False,
        "acyclic": acyclic,
        "configuration": is_acyclic_configuration(complex_),
        "connected": is_connected(complex_),
        "elimination_order": list(reduction.order),
        "chordal": chordal,
        "spheres_filled": spheres,
    }
    witness = (
        None if acyclic else {"residual": dump_complex(reduction.residual)}
    )
    return Verdict(command, ok=acyclic, result=result, witness=witness)


def _complex_check(args: argparse.Namespace, _: RunConfig) -> Verdict:
    complex_ = _load_complex(args.complex, directed=args.directed)
    return _complex_verdict(complex_, "complex check")


def _complex_directed_check(
    args: argparse.Namespace, _: RunConfig
) -> Verdict:
    complex_ = _load_complex(args.complex, directed=True)
    return _complex_verdict(complex_, "complex directed-check")


def rip_tree(order: RipOrder) -> Tree:
    """Render a running intersection order as its join tree.

    Each facet hangs below the earlier facet that contains its overlap
    with everything before it.
    """
    tree = Tree(f"running intersection order ({len(order)} facets)")
    nodes: list[Tree] = []
    for facet, witness in zip(order.facets, order.witnesses, strict=True):
        parent = tree if witness is None else nodes[witness]
        nodes.append(parent.add(escape(str(sorted(facet)))))
    return tree


def _complex_rip(args: argparse.Namespace, _: RunConfig) -> Verdict:
    complex_ = _load_complex(args.complex, directed=args.directed)
    if isinstance(complex_, DirectedComplex):
        order = directed_rip_order(complex_)
    else:
        order = rip_order(complex_)
    if order is None:
        return Verdict(
            "complex rip",
            ok=False,
            witness={"complex": dump_complex(complex_)},
        )
    Console(stderr=True).print(rip_tree(order))
    return Verdict("complex rip", ok=True, result=dump_rip_order(order))


# -----------------------------------------------------------------------------
# sset
# -----------------------------------------------------------------------------


def _sset_validate(args: argparse.Namespace, config: RunConfig) -> Verdict:
    sset = _load_sset(args, config)
    report = validate(sset)
    mismatches = evaluation_mismatches(sset, config.samples, config.seed)
    violations = [asdict(v) for v in report.violations]
    witness = None
    if violations:
        witness = {"violation": violations[0]}
    elif mismatches:
        witness = {"map": dump_map(mismatches[0])}
    return Verdict(
        "sset validate",
        ok=witness is None,
        result={
            "violations": violations,
            "mismatches": [dump_map(f) for f in mismatches],
            "samples": config.samples,
        },
        witness=witness,
        dim=sset.dim,
    )


def _sset_classify(args: argparse.Namespace, config: RunConfig) -> Verdict:
    sset = _load_sset(args, config)
    results = classify(sset)
    verdicts = {r.name: r.holds for r in results}
    witnesses = {r.name: r.witness for r in results if not r.holds}
    ok = True
    if args.require is not None:
        if args.require not in verdicts:
            msg = f"Unknown classifier {args.require!r}"
            raise InputError(msg, {"option": "--require"})
        ok = verdicts[args.require]
    return Verdict(
        "sset classify",
        ok=ok,
        result=verdicts,
        witness=witnesses or None,
        dim=sset.dim,
    )


def _sset_filler(args: argparse.Namespace, config: RunConfig) -> Verdict:
    sset = _load_sset(args, config)
    found = find_filler(
        sset, args.n, args.i, args.j, args.x, args.y, count=args.count
    )
    if args.count:
        return Verdict(
            "sset filler", ok=found > 0, result={"count": found}, dim=sset.dim
        )
    witness = None
    if found is None:
        witness = {"n": args.n, "i": args.i, "j": args.j}
    return Verdict(
        "sset filler",
        ok=found is not None,
        result={"filler": found},
        witness=witness,
        dim=sset.dim,
    )


# -----------------------------------------------------------------------------
# fill and db
# -----------------------------------------------------------------------------


def _dump_simplex(simplex: Any) -> Any:
    if isinstance(simplex, Table):
        return dump_table(simplex)
    if isinstance(simplex, Pseudometric):
        return dump_metric(simplex)
    if isinstance(simplex, Distribution):
        return dump_distribution(simplex)
    return simplex


def _fill(args: argparse.Namespace, config: RunConfig) -> Verdict:
    with _reading(args.request):
        request = FillRequest.model_validate(_read_json(args.request))
        if not config.symmetric_metrics:
            request = request.model_copy(update={"symmetric": False})
        complex_ = request.configuration.to_domain()
        simplices = request.simplices()
        sset = None if request.sset is None else request.sset.to_domain()
    provider = make_provider(
        request.provider, symmetric=request.symmetric, sset=sset
    )
    try:
        filled = fill_configuration(provider, complex_, simplices)
    except IncompatibleAssignment as err:
        witness = {"facets": list(err.facets), "face": list(err.face)}
    except NoFiller as err:
        witness = {"step": err.step, "reason": str(err)}
    except NotAcyclic as err:
        witness = {"reason": str(err)}
    else:
        return Verdict("fill", ok=True, result=_dump_simplex(filled))
    return Verdict("fill", ok=False, witness=witness)


def _db_join(args: argparse.Namespace, _: RunConfig) -> Verdict:
    left, right = _load_table(args.left), _load_table(args.right)
    try:
        if args.square is not None:
            table = join_along(left, right, _load(args.square, SquareModel))
        else:
            table = join(left, right, _load(args.overlap, SpanModel))
    except IncompatibleProjections as err:
        return Verdict(
            "db join",
            ok=False,
            witness={
                "left": [list(r) for r in err.left.sorted_rows()],
                "right": [list(r) for r in err.right.sorted_rows()],
            },
        )
    if args.format == "csv":
        return Verdict(
            "db join", ok=True, text=table.to_frame().to_csv(index=False)
        )
    return Verdict("db join", ok=True, result=dump_table(table))


# -----------------------------------------------------------------------------
# catalog and sweep
# -----------------------------------------------------------------------------


def _catalog(args: argparse.Namespace, _: RunConfig) -> Verdict:
    entries = list(catalog(args.kind, args.n))
    if args.format == "csv":
        return Verdict(
            "catalog", ok=True, text=catalog_table(entries).to_csv(index=False)
        )
    return Verdict(
        "catalog",
        ok=True,
        result={
            "kind": args.kind,
            "n": args.n,
            "entries": [
                {
                    "kind": str(e.kind),
                    "params": e.params,
                    "square": dump_square(e.square),
                    "self_mirror": e.self_mirror,
                }
                for e in entries
            ],
        },
    )


def _summary(
    df_sweep: pd.DataFrame, name: str
) -> tuple[list[dict[str, Any]], bool]:
    summary = summarise_sweep(df_sweep, SWEEP_CHECKS[name], SWEEP_GROUPS[name])
    ok = int(summary["disagreements"].sum()) == 0 and all(
        bool(df_sweep[col].all()) for col in SWEEP_REQUIRED.get(name, [])
    )
    return json.loads(summary.to_json(orient="records")), ok


def _sweep(args: argparse.Namespace, config: RunConfig) -> Verdict:
    command = f"sweep {args.kind}"
    if args.kind == "pushouts":
        tables = {"pushouts": sweep_pushouts(args.max_size, config.n_jobs)}
    elif args.kind == "factorizations":
        df_sweep = sweep_factorizations(
            args.max_size, args.max_size + 1, config.n_jobs
        )
        tables = {"factorizations": df_sweep}
    elif args.kind == "concrete":
        df_sweep = sweep_concrete_criterion(args.max_size, config.n_jobs)
        tables = {"concrete": df_sweep}
    else:
        samples = 0 if args.exhaustive else config.samples
        df_sweep = sweep_acyclicity(
            args.vertices, samples, config.seed, config.n_jobs
        )
        tables = {"acyclicity": df_sweep, "directed_acyclicity": df_sweep}
    result, ok = {}, True
    for name, df_sweep in tables.items():
        result[name], holds = _summary(df_sweep, name)
        ok = ok and holds
    return Verdict(command, ok=ok, result=result)


# -----------------------------------------------------------------------------
# Parser
# -----------------------------------------------------------------------------


Handler = Callable[[argparse.Namespace, RunConfig], Verdict]


def _command(
    group: Any, name: str, handler: Handler, help_text: str
) -> argparse.ArgumentParser:
    parser = group.add_parser(name, help=help_text)
    parser.set_defaults(handler=handler)
    return parser


def _add_sset_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("sset", help="Simplicial set (or category) JSON")
    parser.add_argument(
        "--nerve",
        action="store_true",
        help="Read a finite category and use its nerve up to --dim",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with every subcommand.

    Returns
    -------
    argparse.ArgumentParser
        Parser whose namespaces carry a ``handler`` callable.

    """
    parser = argparse.ArgumentParser(
        prog="spancomplete",
        description="Pushouts, span completeness and acyclic fillers.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument(
        "--dim", type=int, default=None, help="Truncation for nerves"
    )
    parser.add_argument("--n-jobs", type=int, default=None)
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
    )
    parser.add_argument(
        "--asymmetric",
        action="store_true",
        help="Allow asymmetric pseudometrics",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    delta = groups.add_parser("delta", help="Monotone maps")
    delta_cmds = delta.add_subparsers(dest="command", required=True)
    cmd = _command(delta_cmds, "compose", _delta_compose, "Composite f o g")
    cmd.add_argument("f", help="Map applied second")
    cmd.add_argument("g", help="Map applied first")
    cmd = _command(
        delta_cmds, "factor", _delta_factor, "Factor into generators"
    )
    cmd.add_argument("map")
    cmd.add_argument("--reverse", action="store_true")
    cmd = _command(delta_cmds, "defect", _delta_defect, "Defect of a map")
    cmd.add_argument("map")

    square = groups.add_parser("square", help="Squares and pushouts")
    square_cmds = square.add_subparsers(dest="command", required=True)
    cmd = _command(square_cmds, "check", _square_check, "Classify a square")
    cmd.add_argument("square")
    cmd = _command(
        square_cmds, "pushout", _square_pushout, "Pushout of a span"
    )
    cmd.add_argument("--span", required=True)
    cmd = _command(
        square_cmds, "witness", _square_witness, "Cocone without pushout"
    )
    source = cmd.add_mutually_exclusive_group(required=True)
    source.add_argument("--span")
    source.add_argument("--square", help="Defeat this square's cospan")
    cmd = _command(
        square_cmds, "factor", _square_factor, "Basic pushout grid"
    )
    cmd.add_argument("square")
    cmd = _command(
        square_cmds,
        "factor-balanced",
        _square_factor_balanced,
        "Basic coface grid",
    )
    cmd.add_argument("square")

    vee = groups.add_parser("vee", help="Vee products")
    vee_cmds = vee.add_subparsers(dest="command", required=True)
    cmd = _command(
        vee_cmds, "decompose", _vee_decompose, "Components of a map"
    )
    cmd.add_argument("map")
    cmd.add_argument("--base", help="Decomposition of the domain")
    cmd = _command(vee_cmds, "product", _vee_product, "Glue a family")
    cmd.add_argument("family")

    complex_ = groups.add_parser("complex", help="Simplicial complexes")
    complex_cmds = complex_.add_subparsers(dest="command", required=True)
    cmd = _command(
        complex_cmds, "check", _complex_check, "Acyclicity criteria"
    )
    cmd.add_argument("complex")
    cmd.add_argument("--directed", action="store_true")
    cmd = _command(
        complex_cmds,
        "directed-check",
        _complex_directed_check,
        "Directed acyclicity criteria",
    )
    cmd.add_argument("complex")
    cmd = _command(
        complex_cmds, "rip", _complex_rip, "Running intersection order"
    )
    cmd.add_argument("complex")
    cmd.add_argument("--directed", action="store_true")

    sset = groups.add_parser("sset", help="Truncated simplicial sets")
    sset_cmds = sset.add_subparsers(dest="command", required=True)
    cmd = _command(sset_cmds, "validate", _sset_validate, "Check identities")
    _add_sset_input(cmd)
    cmd = _command(sset_cmds, "classify", _sset_classify, "Run classifiers")
    _add_sset_input(cmd)
    cmd.add_argument("--require", help="Exit 1 unless this verdict holds")
    cmd = _command(sset_cmds, "filler", _sset_filler, "Fill a span")
    _add_sset_input(cmd)
    for name in ("n", "i", "j"):
        cmd.add_argument(f"--{name}", type=int, required=True)
    cmd.add_argument("--x", required=True)
    cmd.add_argument("--y", required=True)
    cmd.add_argument("--count", action="store_true")

    cmd = _command(groups, "fill", _fill, "Fill an acyclic configuration")
    cmd.add_argument("request")

    db = groups.add_parser("db", help="Relational tables")
    db_cmds = db.add_subparsers(dest="command", required=True)
    cmd = _command(db_cmds, "join", _db_join, "Join two tables")
    cmd.add_argument("left", help="CSV or JSON table")
    cmd.add_argument("right", help="CSV or JSON table")
    glue = cmd.add_mutually_exclusive_group(required=True)
    glue.add_argument("--overlap", help="Span of shared columns")
    glue.add_argument("--square", help="Balanced square placing columns")
    cmd.add_argument("--format", choices=["json", "csv"], default="json")

    cmd = _command(groups, "catalog", _catalog, "List generator squares")
    cmd.add_argument("--kind", choices=CATALOG_KINDS, required=True)
    cmd.add_argument("--n", type=int, default=None)
    cmd.add_argument("--format", choices=["json", "csv"], default="json")

    cmd = _command(groups, "sweep", _sweep, "Exhaustive oracle sweeps")
    cmd.add_argument(
        "kind",
        choices=["pushouts", "factorizations", "concrete", "acyclicity"],
    )
    cmd.add_argument("--max-size", type=int, default=2)
    cmd.add_argument("--vertices", type=int, nargs="+", default=[3, 4])
    cmd.add_argument("--exhaustive", action="store_true")
    return parser


def _command_name(args: argparse.Namespace) -> str:
    command = getattr(args, "command", None)
    return args.group if command is None else f"{args.group} {command}"


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line.

    Parameters
    ----------
    argv : sequence of str, optional
        Arguments without the program name; defaults to ``sys.argv``.

    Returns
    -------
    int
        Exit code.

    """
    args = build_parser().parse_args(argv)
    command = _command_name(args)
    try:
        config = RunConfig.from_env(
            seed=args.seed,
            samples=args.samples,
            dim=args.dim,
            n_jobs=args.n_jobs,
            log_level=args.log_level,
            symmetric_metrics=False if args.asymmetric else None,
        )
    except ValidationError as err:
        first = err.errors()[0]
        verdict = Verdict(
            command,
            ok=False,
            error={"message": first["msg"], "option": str(first["loc"][0])},
        )
        sys.stdout.write(verdict.render() + "\n")
        return verdict.exit_code
    configure_logging(config.log_level)
    logger.debug("Running %s with %s", command, config)
    try:
        verdict = args.handler(args, config)
    except InputError as err:
        error = {"message": str(err), **err.position}
        verdict = Verdict(command, ok=False, error=error)
    except SpanCompleteError as err:
        verdict = Verdict(command, ok=False, error={"message": str(err)})
    text = verdict.render()
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return verdict.exit_code
