"""
Command handlers.

Each handler takes the parsed arguments and a Runtime, prints its result to
stdout and returns the process exit code.
"""

import argparse
from collections.abc import Callable

import structlog

from caystir.cli.render import Row, render
from caystir.cli.runtime import Runtime
from caystir.cli.verify import SUITES, run_suite
from caystir.exceptions import AnalyticRangeError, NotationError
from caystir.metric import (
    NOT_A_VERTEX,
    GraphSpec,
    SphereAssignment,
    diameter,
    factor_two_k_transpositions,
    geodesic_factorization,
    sphere_radius,
    sphere_sizes,
    type_radius,
)
from caystir.oracle import BruteForceOracle, ClassDistanceTable
from caystir.perms import (
    CycleType,
    Permutation,
    class_size,
    cycle_type,
    format_permutation,
    parse_cycle_type,
    parse_permutation,
    partitions_of,
)
from caystir.phi import PhiQuery
from caystir.schemas import OutputFormat, SeedKind
from caystir.stirling import StirlingFunction, new_stirling

logger = structlog.get_logger(__name__)

_ORACLE_HINT = "; rerun with --oracle for brute-force values"

Handler = Callable[[argparse.Namespace, Runtime], int]


def _spec(args: argparse.Namespace) -> GraphSpec:
    return GraphSpec(args.k, args.n)


def _analytic_hint(e: AnalyticRangeError) -> AnalyticRangeError:
    return AnalyticRangeError(f"{e}{_ORACLE_HINT}")


def _centre(args: argparse.Namespace) -> Permutation | CycleType:
    """The g argument of phi commands: a permutation string or --type."""
    if args.type is not None:
        return parse_cycle_type(args.type, degree=args.n)
    if args.g is None:
        msg = "give a permutation or --type"
        raise NotationError(msg)
    return parse_permutation(args.g, degree=args.n)


def _oracle_table(oracle: BruteForceOracle, spec: GraphSpec) -> ClassDistanceTable:
    if oracle.element_feasible(spec):
        return oracle.element_bfs(spec).by_cycle_type()
    return oracle.class_bfs(spec)


def _oracle_distances(oracle: BruteForceOracle, spec: GraphSpec) -> dict[CycleType, int]:
    return dict(_oracle_table(oracle, spec).distances)


def _oracle_sphere_sizes(oracle: BruteForceOracle, spec: GraphSpec) -> dict[int, int]:
    return oracle.class_sizes_by_distance(_oracle_table(oracle, spec))


def _sizes(runtime: Runtime, spec: GraphSpec) -> dict[int, int]:
    if runtime.force_oracle:
        return _oracle_sphere_sizes(runtime.oracle, spec)
    try:
        return sphere_sizes(spec)
    except AnalyticRangeError as e:
        raise _analytic_hint(e) from e


def cmd_distance(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    g = parse_permutation(args.g, degree=spec.n)
    t = cycle_type(g)
    if runtime.force_oracle:
        if not spec.admits(t):
            assignment = NOT_A_VERTEX
        else:
            assignment = SphereAssignment(_oracle_distances(runtime.oracle, spec)[t], "oracle BFS")
    else:
        try:
            assignment = sphere_radius(spec, g)
        except AnalyticRangeError as e:
            raise _analytic_hint(e) from e
    rows = [
        {
            "k": spec.k,
            "n": spec.n,
            "g": format_permutation(g),
            "radius": str(assignment),
            "clause": assignment.clause,
        }
    ]
    print(render(rows, runtime.fmt))
    return 0


def cmd_spheres(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    if args.by_class:
        distances = _oracle_distances(runtime.oracle, spec) if runtime.force_oracle else None
        rows: list[Row] = []
        for t in partitions_of(spec.n):
            if not spec.admits(t):
                continue
            if distances is not None:
                radius = distances[t]
            else:
                try:
                    radius = type_radius(spec, t).radius
                except AnalyticRangeError as e:
                    raise _analytic_hint(e) from e
            rows.append({"cycle_type": str(t), "class_size": str(class_size(t)), "radius": radius})
    else:
        rows = [{"r": r, "size": str(size)} for r, size in _sizes(runtime, spec).items()]
    print(render(rows, runtime.fmt))
    return 0


def cmd_ball(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    sizes = _sizes(runtime, spec)
    radii = [args.r] if args.r is not None else list(sizes)
    rows = [
        {"r": r, "ball": str(sum(v for d, v in sizes.items() if d <= r))}
        for r in radii
    ]
    print(render(rows, runtime.fmt))
    return 0


def cmd_diameter(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    if runtime.force_oracle:
        value = max(_oracle_distances(runtime.oracle, spec).values())
    else:
        try:
            value = diameter(spec)
        except AnalyticRangeError as e:
            raise _analytic_hint(e) from e
    print(render([{"k": spec.k, "n": spec.n, "diameter": value}], runtime.fmt))
    return 0


def cmd_phi(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    query = PhiQuery.create(spec, args.r, _centre(args))
    result = runtime.engine.phi(query, force_oracle=runtime.force_oracle)
    rows = [
        {
            "k": spec.k,
            "n": spec.n,
            "r": args.r,
            "g_type": str(query.g_type),
            "phi": str(result.value),
            "regime": result.regime.value,
        }
    ]
    print(render(rows, runtime.fmt))
    return 0


def cmd_phi_table(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    centre = _centre(args)
    g_type = cycle_type(centre) if isinstance(centre, Permutation) else centre
    table = runtime.engine.phi_table(spec, g_type, force_oracle=runtime.force_oracle)
    rows = [
        {
            "r": row.r,
            "phi": "" if row.value is None else str(row.value),
            "regime": row.regime.value,
            "note": row.note,
        }
        for row in table.rows
    ]
    title = f"{spec}, g of type {g_type}"
    print(render(rows, runtime.fmt, document=table.to_document(), title=title))
    return 0


def cmd_n_reconstruction(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    result = runtime.engine.reconstruction_number(spec, args.r, force_oracle=runtime.force_oracle)
    rows = [
        {
            "k": spec.k,
            "n": spec.n,
            "r": args.r,
            "N": str(result.value),
            "argmax": "; ".join(str(t) for t in result.argmax),
        }
    ]
    print(render(rows, runtime.fmt))
    return 0


def cmd_factor(args: argparse.Namespace, runtime: Runtime) -> int:
    spec = _spec(args)
    g = parse_permutation(args.g, degree=spec.n)
    if args.pair:
        factors = list(factor_two_k_transpositions(g, spec.n, spec.k))
        title = f"two {spec.k}-transpositions with product {format_permutation(g)}"
    else:
        try:
            factors = geodesic_factorization(spec, g)
        except AnalyticRangeError as e:
            raise _analytic_hint(e) from e
        title = f"length {len(factors)}, distance {sphere_radius(spec, g)}"
    rows = [{"step": i, "factor": format_permutation(h)} for i, h in enumerate(factors, 1)]
    print(render(rows, runtime.fmt, title=title))
    return 0


def _parse_seed_entries(entries: list[str]) -> dict[int, int]:
    seed: dict[int, int] = {}
    for entry in entries:
        m, sep, value = entry.partition("=")
        if not sep:
            msg = f"seed entry {entry!r} is not of the form m=value"
            raise NotationError(msg)
        try:
            seed[int(m)] = int(value)
        except ValueError as e:
            msg = f"seed entry {entry!r} is not integral"
            raise NotationError(msg) from e
    return seed


def _stirling_function(args: argparse.Namespace, runtime: Runtime) -> StirlingFunction:
    if args.type is not None:
        g_type = parse_cycle_type(args.type)
        return runtime.engine.stirling_for(g_type, SeedKind(args.kind), args.offset)
    if args.threshold is None:
        msg = "give --type/--kind or --threshold with --seed-row"
        raise NotationError(msg)
    return new_stirling(
        args.threshold, _parse_seed_entries(args.seed_row or []), args.tail, args.m_floor
    )


def cmd_stirling(args: argparse.Namespace, runtime: Runtime) -> int:
    function = _stirling_function(args, runtime)
    n = args.n
    if args.m is not None:
        cells = [(args.m, function.eval(n, args.m))]
    elif args.r is not None:
        cells = [(n - args.r, function.eval_r(n, args.r))]
    else:
        cells = list(function.row(n).items())
    rows = [{"n": n, "m": m, "r": n - m, "value": str(value)} for m, value in cells]
    print(render(rows, runtime.fmt))
    return 0


def cmd_verify(args: argparse.Namespace, runtime: Runtime) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, runtime) for name in names]
    if runtime.fmt is OutputFormat.JSON:
        print(render([report.model_dump() for report in reports], runtime.fmt))
    else:
        rows = [report.model_dump(exclude={"failures"}) for report in reports]
        print(render(rows, runtime.fmt))
    for report in reports:
        for failure in report.failures:
            logger.warning("verify_failure", suite=report.suite, failure=failure)
    return 0 if all(report.passed for report in reports) else 1


def cmd_cache(args: argparse.Namespace, runtime: Runtime) -> int:
    if args.action == "clear":
        removed = runtime.cache.clear()
        print(render([{"removed": removed}], runtime.fmt))
    else:
        print(render([{"key": key} for key in runtime.cache.keys()], runtime.fmt))
    return 0
