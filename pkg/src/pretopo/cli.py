"""Command-line front end.

Exit codes: 0 for success or a passing query, 1 when a property fails
or a boolean query comes out false, 2 for usage and parse errors.
Results go to stdout, diagnostics to stderr; outputs are pure functions
of the arguments and input files (the verify report carries wall-clock
time in a marked metadata line only).
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import calculus, connectivity, tsubspace
from .errors import SpaceError
from .fixtures import fixture, fixture_names
from .pointset import PointSet
from .space import Space, product, r_modification, star_dual, t_modification
from .spacefile import SpaceDocument, document_for, parse_space, render_dot, render_space
from .verify import (
    SuiteBounds,
    property_ids,
    replay_claim,
    run_suite,
    search_counterexample,
    witness_text,
)

_SET_SPLIT = re.compile(r"[,\s]+")


def _load_document(spec: str) -> SpaceDocument:
    if spec.startswith("fixtures:"):
        name = spec[len("fixtures:") :]
        return document_for(fixture(name), name)
    with open(spec, encoding="ascii") as handle:
        return parse_space(handle.read())


def _load_space(spec: str) -> Space:
    return _load_document(spec).to_space()


def _parse_set(space: Space, text: str) -> PointSet:
    labels = [tok for tok in _SET_SPLIT.split(text) if tok]
    return space.point_set(labels)


def _fmt_set(space: Space, ps: PointSet) -> str:
    return " ".join(space.set_labels(ps))


def _bool_result(value: bool) -> int:
    print("true" if value else "false")
    return 0 if value else 1


def _print_modified(doc: SpaceDocument, suffix: str, modified: Space) -> int:
    print(render_space(document_for(modified, f"{doc.name}_{suffix}")), end="")
    return 0


def _cmd_show(args) -> int:
    print(render_space(_load_document(args.space)), end="")
    return 0


def _cmd_set_op(args, op) -> int:
    space = _load_space(args.space)
    print(_fmt_set(space, op(space, _parse_set(space, args.set))))
    return 0


def _cmd_iter_adh(args) -> int:
    space = _load_space(args.space)
    result = calculus.iterated_adh(space, _parse_set(space, args.set), args.k)
    print(_fmt_set(space, result))
    return 0


def _cmd_defect(args) -> int:
    space = _load_space(args.space)
    profile = calculus.topological_defect(space)
    print(f"defect: {profile.defect}")
    pairs = " ".join(
        f"{label}={steps}" for label, steps in zip(space.labels, profile.per_point)
    )
    print(f"per_point: {pairs}")
    return 0


def _cmd_predicate(args, predicate) -> int:
    space = _load_space(args.space)
    return _bool_result(predicate(space, _parse_set(space, args.set)))


def _cmd_open_sets(args) -> int:
    space = _load_space(args.space)
    for ps in calculus.open_sets(space):
        print(_fmt_set(space, ps))
    return 0


def _cmd_connected(args) -> int:
    space = _load_space(args.space)
    if args.set is None:
        return _bool_result(connectivity.is_connected(space))
    return _bool_result(connectivity.is_connected_subset(space, _parse_set(space, args.set)))


def _cmd_components(args) -> int:
    space = _load_space(args.space)
    if args.set is None:
        parts = connectivity.components(space)
    else:
        parts = connectivity.components_within(space, _parse_set(space, args.set))
    for part in parts:
        print(_fmt_set(space, part))
    return 0


def _cmd_encloses(args) -> int:
    space = _load_space(args.space)
    outer = _parse_set(space, args.outer)
    inner = _parse_set(space, args.inner)
    return _bool_result(connectivity.encloses(space, outer, inner))


def _cmd_sandwich_property(args) -> int:
    space = _load_space(args.space)
    outcome = connectivity.has_sandwich_property(space)
    if outcome.passed:
        print("pass")
        return 0
    print("fail")
    print(witness_text(outcome.witness))
    return 1


def _cmd_sandwiched(args) -> int:
    space = _load_space(args.space)
    witness = connectivity.is_sandwiched(space, _parse_set(space, args.set))
    if witness is None:
        print("none")
        return 1
    print(_fmt_set(space, witness))
    return 0


def _cmd_classify(args) -> int:
    space = _load_space(args.space)
    result = connectivity.classify_sandwich(space, _parse_set(space, args.set))
    for field in ("xi_connected", "sandwiched", "t_connected", "r_sandwiched", "tr_connected"):
        print(f"{field}: {'true' if getattr(result, field) else 'false'}")
    if result.witness is not None:
        print(f"sandwiched_by: {_fmt_set(space, result.witness)}")
    return 0


def _cmd_tsub_witness(args) -> int:
    space = _load_space(args.space)
    pair = tsubspace.t_subspace_defect_witness(space, _parse_set(space, args.set))
    if pair is None:
        print("none")
        return 0
    print(f"{space.label(pair[0])} {space.label(pair[1])}")
    return 1


def _cmd_modify(args) -> int:
    doc = _load_document(args.space)
    space = doc.to_space()
    mode = {"T": t_modification, "r": r_modification, "star": star_dual}[args.mode]
    return _print_modified(doc, args.mode, mode(space))


def _cmd_product(args) -> int:
    left_doc = _load_document(args.left)
    right_doc = _load_document(args.right)
    prod = product(left_doc.to_space(), right_doc.to_space())
    print(render_space(document_for(prod, f"{left_doc.name}_x_{right_doc.name}")), end="")
    return 0


def _cmd_verify(args) -> int:
    bounds = SuiteBounds(
        exhaustive_n=args.exhaustive,
        sample_sizes=tuple(args.sample_n or ()),
        sample_count=args.samples,
        seed=args.seed,
        edge_probability=Fraction(args.edge_prob),
    )
    selected = None
    if args.properties:
        selected = tuple(tok for tok in _SET_SPLIT.split(args.properties) if tok)
    report = run_suite(bounds, selected)
    print(report.to_json() if args.json else report.to_text(), end="")
    return 0 if report.passed else 1


def _cmd_claim(args) -> int:
    outcome = search_counterexample(args.claim, args.max_n, args.budget)
    if outcome is None:
        print(f"claim {args.claim}: no counterexample found")
        return 0
    print(f"claim {args.claim}: FALSIFIED")
    print(witness_text(outcome.witness))
    if not replay_claim(outcome):
        raise RuntimeError("claim witness failed to replay through the operators")
    print("replay: confirmed")
    return 1


def _cmd_export_dot(args) -> int:
    doc = _load_document(args.space)
    print(render_dot(doc.to_space(), args.name or doc.name), end="")
    return 0


def _cmd_fixtures(args) -> int:
    for name in fixture_names():
        print(name)
    return 0


def _add_space_arg(parser) -> None:
    parser.add_argument("--space", required=True, help="space file path or fixtures:<name>")


def _add_set_arg(parser, required=True) -> None:
    parser.add_argument(
        "--set",
        required=required,
        default=None,
        help="comma- or space-separated point labels",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pretopo",
        description="Finite convergence space calculus and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("show", _cmd_show, "print a space in file format")
    _add_space_arg(p)

    for name, op, text in (
        ("adh", calculus.adh, "adherence of a set"),
        ("adh-star", calculus.adh_star, "dual adherence of a set"),
        ("cl", calculus.closure, "closure of a set"),
        ("enclosure", connectivity.enclosure, "enclosure of a connected set"),
    ):
        p = add(name, lambda a, op=op: _cmd_set_op(a, op), text)
        _add_space_arg(p)
        _add_set_arg(p)

    p = add("iter-adh", _cmd_iter_adh, "k-fold adherence of a set")
    _add_space_arg(p)
    _add_set_arg(p)
    p.add_argument("--k", type=int, required=True)

    p = add("defect", _cmd_defect, "topological defect profile")
    _add_space_arg(p)

    for name, pred, text in (
        ("open", calculus.is_open, "is the set open"),
        ("closed", calculus.is_closed, "is the set closed"),
        ("clopen", calculus.is_clopen, "is the set clopen"),
        ("tsub", tsubspace.is_t_subspace, "is the set a T-subspace"),
    ):
        p = add(name, lambda a, pred=pred: _cmd_predicate(a, pred), text)
        _add_space_arg(p)
        _add_set_arg(p)

    p = add("open-sets", _cmd_open_sets, "enumerate all open sets")
    _add_space_arg(p)

    p = add("connected", _cmd_connected, "is the space (or a subset) connected")
    _add_space_arg(p)
    _add_set_arg(p, required=False)

    p = add("components", _cmd_components, "weak components of the space or a subset")
    _add_space_arg(p)
    _add_set_arg(p, required=False)

    p = add("encloses", _cmd_encloses, "does the outer set enclose the inner set")
    _add_space_arg(p)
    p.add_argument("--outer", required=True, help="candidate enclosing set")
    p.add_argument("--inner", required=True, help="connected set to enclose")

    p = add("sandwich-property", _cmd_sandwich_property, "does the space have the sandwich property")
    _add_space_arg(p)

    p = add("sandwiched", _cmd_sandwiched, "find a sandwiching subset")
    _add_space_arg(p)
    _add_set_arg(p)

    p = add("classify", _cmd_classify, "connectedness flags across modifications")
    _add_space_arg(p)
    _add_set_arg(p)

    p = add("tsub-witness", _cmd_tsub_witness, "point pair witnessing a T-subspace failure")
    _add_space_arg(p)
    _add_set_arg(p)

    p = add("modify", _cmd_modify, "apply the T, r or star modification")
    p.add_argument("mode", choices=("T", "r", "star"))
    _add_space_arg(p)

    p = add("product", _cmd_product, "product of two spaces")
    p.add_argument("--left", required=True, help="space file path or fixtures:<name>")
    p.add_argument("--right", required=True, help="space file path or fixtures:<name>")

    p = add("verify", _cmd_verify, "run the property suite")
    p.add_argument("--exhaustive", type=int, default=4, help="enumerate all spaces up to this size")
    p.add_argument("--sample-n", type=int, nargs="+", default=None, help="sampled space sizes")
    p.add_argument("--samples", type=int, default=0, help="number of sampled spaces")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", default="1/4", help="arrow probability for samples")
    p.add_argument("--properties", default=None, help=f"subset of {','.join(property_ids())}")
    p.add_argument("--json", action="store_true", help="machine-readable report")

    p = add("claim", _cmd_claim, "search for a counterexample to a recorded claim")
    p.add_argument("claim", choices=("C1", "C2"))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="max spaces examined")

    p = add("export-dot", _cmd_export_dot, "emit DOT text")
    _add_space_arg(p)
    p.add_argument("--name", default=None, help="graph name (defaults to the space name)")

    add("fixtures", _cmd_fixtures, "list built-in spaces")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    console_main()
