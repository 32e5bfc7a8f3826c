"""Command-line front end.

Subcommands cover the whole pipeline: build an ideal from a graph, decide the
Scarf property, emit Taylor/Scarf complexes, compare classification predicates
against computed verdicts, run exhaustive sweeps, derive minimal obstruction
catalogs, and exercise the leaf-gluing pipeline.

Graphs are given as shorthand (path:6, cycle:5, star:4, family:T2,
family:S5(1,2,1)) or as @file with .g6, .adj or .json content.  All JSON
output is emitted with sorted keys so identical invocations produce identical
bytes.  The scarf subcommand exits 0 when the ideal is Scarf, 1 when it is
not, 2 on usage or input errors; other subcommands use 0/2.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import analysis
from .analysis import (
    AnalysisError,
    derive_obstructions,
    is_scarf,
    leaf_lemma_pipeline,
    sweep,
)
from .complexes import scarf_complex, taylor_complex
from .graphs import (
    FamilyTag,
    GraphError,
    SimpleGraph,
    canonical_form,
    graph_from_json_dict,
    make_family,
    parse_adjacency_text,
    parse_graph6,
    recognize_family,
)
from .homology import DEFAULT_FIELDS, FieldSpec, HomologyError
from .ideals import IdealSpec, IdealSpecError, build_ideal
from .monomials import MonomialError, MonomialIdeal

DEFAULT_SWEEP_CAP = 7
DEFAULT_DERIVE_CAP = 7
DEFAULT_DERIVE_TREE_CAP = 9

_FAMILY_SHORTHAND = re.compile(
    r"^([PCST])(\d+)(?:\(([\d,\s]*)\))?$"
)


class CliError(ValueError):
    pass


def _vertex_cap(default: int) -> int:
    raw = os.environ.get("SCARF_LAB_MAX_VERTICES")
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"SCARF_LAB_MAX_VERTICES must be an integer, got {raw!r}") from None
    if cap < 1:
        raise CliError("SCARF_LAB_MAX_VERTICES must be positive")
    return cap


def parse_family_token(token: str) -> FamilyTag:
    """Family shorthand: P7, C5, S4 (star), T2, S3(1,2), S4(2,2), S5(1,2,1), S6(1,2,1)."""
    token = token.strip()
    match = _FAMILY_SHORTHAND.match(token)
    if not match:
        raise CliError(
            f"cannot parse family {token!r}; expected forms like T2, S4, S5(1,2,1)"
        )
    letter, number, args = match.group(1), int(match.group(2)), match.group(3)
    if args is not None and not args.strip():
        raise CliError(f"empty parameter list in {token!r}")
    params = tuple(int(p) for p in args.split(",")) if args else None
    if letter == "P":
        if params is not None:
            raise CliError("P takes no parameter list")
        return FamilyTag("path", (number,))
    if letter == "C":
        if params is not None:
            raise CliError("C takes no parameter list")
        return FamilyTag("cycle", (number,))
    if letter == "T":
        if params is not None:
            raise CliError("T takes no parameter list; the leaf count follows T")
        return FamilyTag("triangle", (number,))
    # letter == "S": bare = star with <number> leaves, with args = broom or spider
    if params is None:
        return FamilyTag("star", (number,))
    if number in (3, 4):
        if len(params) != 2:
            raise CliError(f"S{number}(m,n) takes two parameters")
        return FamilyTag(f"broom{number}", params)
    if number in (5, 6):
        if len(params) != 3:
            raise CliError(f"S{number}(m,n,p) takes three parameters")
        return FamilyTag(f"spider{number}", params)
    raise CliError(f"parameterized spines exist only for S3, S4, S5, S6, got S{number}")


def parse_graph_argument(text: str) -> SimpleGraph:
    text = text.strip()
    if text.startswith("@"):
        return _load_graph_file(text[1:])
    kind, sep, value = text.partition(":")
    if not sep:
        raise CliError(
            f"cannot parse graph {text!r}; expected kind:value or @file"
        )
    kind = kind.strip().lower()
    value = value.strip()
    if kind in ("path", "cycle", "star"):
        try:
            number = int(value)
        except ValueError:
            raise CliError(f"{kind} takes an integer, got {value!r}") from None
        return make_family(FamilyTag(kind, (number,)))
    if kind == "family":
        return make_family(parse_family_token(value))
    raise CliError(f"unknown graph kind {kind!r}; use path, cycle, star, family or @file")


def _load_graph_file(path: str) -> SimpleGraph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read graph file {path}: {exc}") from None
    if path.endswith(".g6"):
        lines = [
            line.strip()
            for line in text.splitlines()
            if line.strip() and not line.startswith("#")
        ]
        if len(lines) != 1:
            raise CliError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    if path.endswith(".adj"):
        return parse_adjacency_text(text)
    if path.endswith(".json"):
        return graph_from_json_dict(json.loads(text))
    raise CliError(f"{path}: unknown graph file extension (use .g6, .adj or .json)")


def _load_ideal_file(path: str) -> MonomialIdeal:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise CliError(f"cannot read ideal file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON ({exc})") from None
    return MonomialIdeal.from_json_dict(data)


def parse_fields(text: str) -> tuple[FieldSpec, ...]:
    fields = tuple(FieldSpec.parse(part) for part in text.split(",") if part.strip())
    if not fields:
        raise CliError("at least one field is required")
    return fields


def _resolve_ideal(args: argparse.Namespace) -> MonomialIdeal:
    if getattr(args, "ideal", None):
        if getattr(args, "graph", None):
            raise CliError("give either --graph or --ideal, not both")
        return _load_ideal_file(args.ideal)
    if not getattr(args, "graph", None):
        raise CliError("one of --graph or --ideal is required")
    if not getattr(args, "spec", None):
        raise CliError("--spec is required with --graph")
    return build_ideal(parse_graph_argument(args.graph), IdealSpec.parse(args.spec))


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_block(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_ideal(args: argparse.Namespace) -> int:
    ideal = _resolve_ideal(args)
    if args.format == "json":
        _emit(_json_block(ideal.to_json_dict()), args.output)
    else:
        lines = [f"ideal: {ideal.render()}", f"num_generators: {ideal.num_generators}"]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_scarf(args: argparse.Namespace) -> int:
    ideal = _resolve_ideal(args)
    report = is_scarf(ideal, parse_fields(args.fields))
    if args.format == "json":
        _emit(_json_block(report.to_json_dict()), args.output)
    else:
        lines = [f"ideal: {ideal.render()}"]
        for field, verdict in report.verdicts:
            lines.append(f"{field.render()}: {verdict}")
        for field, monomial, profile in report.witnesses:
            lines.append(
                f"witness[{field.render()}]: {monomial.render()} "
                f"betti={list(profile.betti)}"
            )
        lines.append(
            f"generators={report.num_generators} "
            f"scarf_faces={report.num_scarf_faces} "
            f"lattice_points={report.num_lattice_points}"
        )
        _emit("\n".join(lines), args.output)
    return 0 if report.all_scarf else 1


def _cmd_complex(args: argparse.Namespace) -> int:
    ideal = _resolve_ideal(args)
    if args.kind == "taylor":
        complex_ = taylor_complex(ideal)
    else:
        complex_ = scarf_complex(ideal)
    if args.restrict is not None:
        complex_ = complex_.restrict(ideal.universe.parse(args.restrict))
    if args.format == "json":
        _emit(_json_block(complex_.to_json_dict()), args.output)
    else:
        lines = [
            f"ideal: {ideal.render()}",
            f"f_vector: {list(complex_.f_vector())}",
            "faces: " + " ".join(
                "{" + ",".join(str(i) for i in face) + "}" for face in complex_.faces
            ),
        ]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    graph = parse_graph_argument(args.graph)
    theorem = args.theorem.strip()
    fields = parse_fields(args.fields)
    if theorem.upper().startswith("A:"):
        t = int(theorem[2:])
        predicted = analysis.classify_theorem_A(graph, t)
        spec = IdealSpec("connected", t)
    elif theorem.upper() == "B":
        predicted = analysis.classify_theorem_B(graph)
        spec = IdealSpec("path", 4)
    else:
        raise CliError(f"unknown theorem {theorem!r}; use A:<t> or B")
    computed = is_scarf(build_ideal(graph, spec), fields).all_scarf
    tag = recognize_family(graph)
    data = {
        "graph6": canonical_form(graph).decode("ascii"),
        "family": tag.render() if tag else None,
        "theorem": theorem,
        "spec": spec.render(),
        "predicted": predicted,
        "computed": computed,
        "agree": predicted == computed,
    }
    if args.format == "json":
        _emit(_json_block(data), args.output)
    else:
        _emit("\n".join(f"{key}: {data[key]}" for key in sorted(data)), args.output)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    cap = _vertex_cap(DEFAULT_SWEEP_CAP)
    if not 1 <= args.n_max <= cap:
        raise CliError(f"--n-max must be within 1..{cap}")
    result = sweep(
        IdealSpec.parse(args.spec),
        args.n_max,
        parse_fields(args.fields),
        jobs=args.jobs,
    )
    if args.format == "json":
        _emit("\n".join(result.to_json_lines()), args.output)
    else:
        header = f"{'graph6':<12} {'n':>2} {'family':<16} {'predicted':<9} {'computed':<9} agree"
        lines = [header]
        for record in result.records:
            lines.append(
                f"{record.graph6:<12} {record.n:>2} "
                f"{(record.family or '-'):<16} "
                f"{str(record.predicted):<9} {str(record.computed):<9} {record.agree}"
            )
        lines.append(
            f"total={len(result.records)} disagreements={len(result.disagreements)} "
            f"field_conflicts={len(result.field_conflicts)}"
        )
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_derive(args: argparse.Namespace) -> int:
    cap = _vertex_cap(DEFAULT_DERIVE_TREE_CAP if args.trees_only else DEFAULT_DERIVE_CAP)
    if not 1 <= args.n_max <= cap:
        raise CliError(f"--n-max must be within 1..{cap}")
    catalog = derive_obstructions(
        IdealSpec.parse(args.spec),
        args.n_max,
        args.mode,
        trees_only=args.trees_only,
        fields=parse_fields(args.fields),
    )
    if args.format == "json":
        _emit(_json_block(catalog.to_json_dict()), args.output)
    else:
        lines = [
            "# minimal non-Scarf graphs (one canonical graph6 per line)",
            f"# spec={catalog.spec.render()} n_max={catalog.n_max} mode={catalog.mode} "
            f"trees_only={str(catalog.trees_only).lower()} fields={args.fields}",
            f"# non_scarf_total={catalog.num_non_scarf} minimal={len(catalog.graphs)}",
        ]
        lines.extend(canonical_form(g).decode("ascii") for g in catalog.graphs)
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_leaf(args: argparse.Namespace) -> int:
    ideal = _resolve_ideal(args)
    name = args.var.strip()
    if name.isdigit():
        x = int(name)
        if not 0 <= x < ideal.universe.size:
            raise CliError(f"variable index {x} out of range")
    else:
        x = ideal.universe.index_of(name)
    report = leaf_lemma_pipeline(ideal, x, parse_fields(args.fields))
    if args.format == "json":
        _emit(_json_block(report.to_json_dict()), args.output)
    else:
        data = report.to_json_dict()
        keys = [
            "x", "x_prime", "hypothesis_holds", "replacement_ok", "stars_ok",
            "disjointness_persists", "scarf_transfer", "base_scarf", "glued_scarf",
        ]
        _emit("\n".join(f"{key}: {data[key]}" for key in keys), args.output)
    if not report.hypothesis_holds:
        return 0
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# parser wiring


def _add_common(parser: argparse.ArgumentParser, *, graph_input: bool,
                ideal_input: bool = False, formats: tuple[str, ...] = ("json", "table")) -> None:
    if graph_input:
        parser.add_argument("--graph", help="path:6, cycle:5, star:4, family:S5(1,2,1), @file")
    if ideal_input:
        parser.add_argument("--ideal", help="JSON file with variables + mingens")
    parser.add_argument("--fields", default="gf2,gf32003",
                        help="comma-separated coefficient fields (gf2, gf32003, q)")
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--output", help="write the report to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scarflab",
        description="Scarf complexes of t-connected and t-path ideals of small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ideal = sub.add_parser("ideal", help="construct the ideal of a graph")
    p_ideal.add_argument("--spec", help="connected:<t> or path:<t>")
    _add_common(p_ideal, graph_input=True, ideal_input=True)
    p_ideal.set_defaults(handler=_cmd_ideal)

    p_scarf = sub.add_parser("scarf", help="decide the Scarf property")
    p_scarf.add_argument("--spec", help="connected:<t> or path:<t>")
    _add_common(p_scarf, graph_input=True, ideal_input=True)
    p_scarf.set_defaults(handler=_cmd_scarf)

    p_complex = sub.add_parser("complex", help="emit the Taylor or Scarf complex")
    p_complex.add_argument("--spec", help="connected:<t> or path:<t>")
    p_complex.add_argument("--kind", choices=("taylor", "scarf"), default="scarf")
    p_complex.add_argument("--restrict", help="restrict to faces whose label divides this monomial")
    _add_common(p_complex, graph_input=True, ideal_input=True)
    p_complex.set_defaults(handler=_cmd_complex)

    p_classify = sub.add_parser("classify", help="theorem predicate vs computed verdict")
    p_classify.add_argument("--theorem", required=True, help="A:<t> or B")
    _add_common(p_classify, graph_input=True)
    p_classify.set_defaults(handler=_cmd_classify)

    p_sweep = sub.add_parser("sweep", help="exhaustive classification cross-validation")
    p_sweep.add_argument("--spec", required=True, help="connected:<t> or path:4")
    p_sweep.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_sweep.add_argument("--jobs", type=int, default=1)
    _add_common(p_sweep, graph_input=False)
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_derive = sub.add_parser("derive", help="derive minimal non-Scarf graphs")
    p_derive.add_argument("--spec", required=True)
    p_derive.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_derive.add_argument("--mode", choices=("induced", "subgraph"), required=True)
    p_derive.add_argument("--trees-only", action="store_true", dest="trees_only")
    _add_common(p_derive, graph_input=False, formats=("graph6", "json"))
    p_derive.set_defaults(handler=_cmd_derive)

    p_leaf = sub.add_parser("leaf", help="run the leaf-gluing pipeline at a variable")
    p_leaf.add_argument("--spec", help="connected:<t> or path:<t>")
    p_leaf.add_argument("--var", required=True, help="variable name (x3) or index")
    _add_common(p_leaf, graph_input=True, ideal_input=True)
    p_leaf.set_defaults(handler=_cmd_leaf)

    return parser


_ERRORS = (
    CliError,
    AnalysisError,
    GraphError,
    MonomialError,
    HomologyError,
    IdealSpecError,
    ValueError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
