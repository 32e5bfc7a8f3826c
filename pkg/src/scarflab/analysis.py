"""Scarf-property analysis, classification sweeps and obstruction derivation.

An ideal is recorded as Scarf when the restriction of its Scarf complex to
every lcm-lattice point is acyclic (or empty) over every coefficient field in
the battery.  Restricting attention to lattice points is sound because the
restriction of the complex to a monomial m only depends on the set of
generators dividing m, and that set determines a lattice point with the same
restriction; the exhaustive all-monomials variant is kept as an oracle.

Witness policy: the scan walks lattice points in ascending support-bit-pattern
order, so a reported failure is the smallest failing point in that order.
Fields are never merged: a graph counts as Scarf only when every field in the
battery agrees, and cross-field disagreements are surfaced, not resolved.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool

from .complexes import (
    LabeledComplex,
    generator_index_map,
    glue_leaf_ideal,
    lcm_lattice,
    leaf_split,
    scarf_complex,
)
from .graphs import (
    FamilyTag,
    GraphError,
    SimpleGraph,
    canonical_form,
    contains_induced,
    contains_subgraph,
    enumerate_connected_graphs,
    enumerate_trees,
    family_catalog,
    is_connected,
    recognize_family,
    to_adjacency_text,
)
from .homology import (
    DEFAULT_FIELDS,
    FieldSpec,
    HomologyProfile,
    reduced_betti,
)
from .ideals import IdealSpec, build_ideal
from .monomials import MonomialIdeal, SquarefreeMonomial, VariableUniverse

VERDICT_SCARF = "scarf"
VERDICT_NOT_SCARF = "not_scarf"
VERDICT_TRIVIALLY_SCARF = "trivially_scarf"

THEOREM_B_FAMILY_KINDS = ("star", "triangle", "broom3", "broom4", "spider5", "spider6")
SPECIAL_TREE_FAMILY_KINDS = ("star", "broom3", "broom4", "spider5", "spider6")


class AnalysisError(ValueError):
    pass


@dataclass(frozen=True)
class ScarfReport:
    ideal: MonomialIdeal
    fields: tuple[FieldSpec, ...]
    verdicts: tuple[tuple[FieldSpec, str], ...]
    witnesses: tuple[tuple[FieldSpec, SquarefreeMonomial, HomologyProfile], ...]
    num_generators: int
    num_scarf_faces: int
    num_lattice_points: int

    def verdict(self, field: FieldSpec) -> str:
        for f, v in self.verdicts:
            if f == field:
                return v
        raise AnalysisError(f"field {field} was not part of this report")

    def scarf_over(self, field: FieldSpec) -> bool:
        return self.verdict(field) != VERDICT_NOT_SCARF

    @property
    def all_scarf(self) -> bool:
        return all(v != VERDICT_NOT_SCARF for _, v in self.verdicts)

    @property
    def fields_disagree(self) -> bool:
        answers = {v != VERDICT_NOT_SCARF for _, v in self.verdicts}
        return len(answers) > 1

    def witness(self, field: FieldSpec) -> tuple[SquarefreeMonomial, HomologyProfile] | None:
        for f, m, profile in self.witnesses:
            if f == field:
                return m, profile
        return None

    def to_json_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_json_dict(),
            "verdicts": {f.render(): v for f, v in self.verdicts},
            "witnesses": {
                f.render(): {"monomial": m.render(), "profile": profile.to_json_dict()}
                for f, m, profile in self.witnesses
            },
            "num_generators": self.num_generators,
            "num_scarf_faces": self.num_scarf_faces,
            "num_lattice_points": self.num_lattice_points,
        }


def _normalize_fields(fields) -> tuple[FieldSpec, ...]:
    out = tuple(fields)
    if not out:
        raise AnalysisError("need at least one coefficient field")
    if len(set(out)) != len(out):
        raise AnalysisError("duplicate coefficient fields")
    return out


@lru_cache(maxsize=None)
def _is_scarf_cached(ideal: MonomialIdeal, fields: tuple[FieldSpec, ...]) -> ScarfReport:
    complex_ = scarf_complex(ideal)
    lattice = lcm_lattice(ideal)
    num_faces = len(complex_.faces)
    if ideal.num_generators <= 1:
        return ScarfReport(
            ideal=ideal,
            fields=fields,
            verdicts=tuple((f, VERDICT_TRIVIALLY_SCARF) for f in fields),
            witnesses=(),
            num_generators=ideal.num_generators,
            num_scarf_faces=num_faces,
            num_lattice_points=len(lattice),
        )
    alive = list(fields)
    verdicts: dict[FieldSpec, str] = {}
    witnesses: list[tuple[FieldSpec, SquarefreeMonomial, HomologyProfile]] = []
    for point in lattice:
        if not alive:
            break
        restricted = complex_.restrict(point)
        for field in list(alive):
            profile = reduced_betti(restricted, field)
            if not profile.is_acyclic:
                verdicts[field] = VERDICT_NOT_SCARF
                witnesses.append((field, point, profile))
                alive.remove(field)
    for field in alive:
        verdicts[field] = VERDICT_SCARF
    return ScarfReport(
        ideal=ideal,
        fields=fields,
        verdicts=tuple((f, verdicts[f]) for f in fields),
        witnesses=tuple(witnesses),
        num_generators=ideal.num_generators,
        num_scarf_faces=num_faces,
        num_lattice_points=len(lattice),
    )


def is_scarf(ideal: MonomialIdeal, fields=DEFAULT_FIELDS) -> ScarfReport:
    """Scarf verdict per field, with the smallest failing lattice point as witness."""
    return _is_scarf_cached(ideal, _normalize_fields(fields))


def is_scarf_bruteforce(
    ideal: MonomialIdeal, fields=DEFAULT_FIELDS, max_variables: int = 16
) -> ScarfReport:
    """Oracle variant of is_scarf checking the restriction at all 2^d monomials."""
    fields = _normalize_fields(fields)
    universe = ideal.universe
    if universe.size > max_variables:
        raise AnalysisError(f"brute-force acyclicity check capped at {max_variables} variables")
    complex_ = scarf_complex(ideal)
    lattice = lcm_lattice(ideal)
    if ideal.num_generators <= 1:
        return ScarfReport(
            ideal=ideal,
            fields=fields,
            verdicts=tuple((f, VERDICT_TRIVIALLY_SCARF) for f in fields),
            witnesses=(),
            num_generators=ideal.num_generators,
            num_scarf_faces=len(complex_.faces),
            num_lattice_points=len(lattice),
        )
    alive = list(fields)
    verdicts: dict[FieldSpec, str] = {}
    witnesses: list[tuple[FieldSpec, SquarefreeMonomial, HomologyProfile]] = []
    for mask in range(1 << universe.size):
        if not alive:
            break
        point = SquarefreeMonomial(universe, mask)
        restricted = complex_.restrict(point)
        if not restricted.has_vertices:
            continue
        for field in list(alive):
            profile = reduced_betti(restricted, field)
            if not profile.is_acyclic:
                verdicts[field] = VERDICT_NOT_SCARF
                witnesses.append((field, point, profile))
                alive.remove(field)
    for field in alive:
        verdicts[field] = VERDICT_SCARF
    return ScarfReport(
        ideal=ideal,
        fields=fields,
        verdicts=tuple((f, verdicts[f]) for f in fields),
        witnesses=tuple(witnesses),
        num_generators=ideal.num_generators,
        num_scarf_faces=len(complex_.faces),
        num_lattice_points=len(lattice),
    )


# ---------------------------------------------------------------------------
# classification predicates


def _require_connected(graph: SimpleGraph) -> None:
    if not is_connected(graph):
        raise AnalysisError("classification predicates expect a connected graph")


def classify_theorem_A(graph: SimpleGraph, t: int) -> bool:
    """Predicted Scarf property of the connected ideal of degree t >= 3: true
    exactly for graphs with at most t vertices and for paths on at most 2t."""
    if t < 3:
        raise AnalysisError("the connected-ideal classification needs t >= 3")
    _require_connected(graph)
    if graph.n <= t:
        return True
    tag = recognize_family(graph)
    return tag is not None and tag.kind == "path" and tag.params[0] <= 2 * t


@lru_cache(maxsize=None)
def _family_forms(n: int, kinds: tuple[str, ...]) -> frozenset[bytes]:
    return frozenset(
        canonical_form(member)
        for tag, member in family_catalog(n)
        if tag.kind in kinds
    )


def classify_theorem_B(graph: SimpleGraph) -> bool:
    """Predicted Scarf property of the degree-4 path ideal: true exactly for
    graphs on at most four vertices, stars, triangles with pendant leaves at
    one vertex, double brooms on three or four spine vertices, and spiders on
    five or six spine vertices (any leaf counts >= 0; degenerate parameter
    choices cover the short paths)."""
    _require_connected(graph)
    if graph.n <= 4:
        return True
    return canonical_form(graph) in _family_forms(graph.n, THEOREM_B_FAMILY_KINDS)


def matches_special_tree_family(graph: SimpleGraph) -> bool:
    """Tree families of the degree-4 path classification (no triangle member)."""
    return canonical_form(graph) in _family_forms(graph.n, SPECIAL_TREE_FAMILY_KINDS)


# ---------------------------------------------------------------------------
# the two-generator bound in t+1 variables


@dataclass(frozen=True)
class TwoGeneratorReport:
    t: int
    num_ideals: int
    failures: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {"t": self.t, "num_ideals": self.num_ideals, "failures": list(self.failures)}


def check_two_generator_lemma(t: int, fields=DEFAULT_FIELDS) -> TwoGeneratorReport:
    """Over t+1 variables, a square-free ideal generated in degree t should be
    Scarf exactly when it has at most two generators.  Checks every subset of
    the t+1 possible generators."""
    if not 2 <= t <= 5:
        raise AnalysisError("the exhaustive two-generator check supports 2 <= t <= 5")
    fields = _normalize_fields(fields)
    universe = VariableUniverse.of_size(t + 1)
    full = (1 << (t + 1)) - 1
    candidates = [SquarefreeMonomial(universe, full & ~(1 << i)) for i in range(t + 1)]
    failures = []
    count = 0
    for size in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, size):
            count += 1
            ideal = MonomialIdeal(universe, tuple(sorted(combo, key=lambda m: m.mask)))
            report = is_scarf(ideal, fields)
            expected = len(combo) <= 2
            if report.all_scarf != expected or report.fields_disagree:
                failures.append(
                    {
                        "generators": [m.render() for m in combo],
                        "expected_scarf": expected,
                        "verdicts": {f.render(): v for f, v in report.verdicts},
                    }
                )
    return TwoGeneratorReport(t=t, num_ideals=count, failures=tuple(failures))


# ---------------------------------------------------------------------------
# paths and cycles


@dataclass(frozen=True)
class PathCycleRow:
    kind: str
    r: int
    num_generators: int
    computed_scarf: bool
    expected_scarf: bool
    shape: str | None
    shape_ok: bool | None

    @property
    def consistent(self) -> bool:
        return self.computed_scarf == self.expected_scarf and self.shape_ok is not False

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "r": self.r,
            "num_generators": self.num_generators,
            "computed_scarf": self.computed_scarf,
            "expected_scarf": self.expected_scarf,
            "shape": self.shape,
            "shape_ok": self.shape_ok,
        }


@dataclass(frozen=True)
class PathsCyclesReport:
    t: int
    rows: tuple[PathCycleRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.consistent for row in self.rows)

    def to_json_dict(self) -> dict:
        return {"t": self.t, "rows": [row.to_json_dict() for row in self.rows]}


def _scarf_is_path_complex(complex_: LabeledComplex) -> bool:
    q = complex_.ideal.num_generators
    expected = {()}
    expected.update((i,) for i in range(q))
    expected.update((i, i + 1) for i in range(q - 1))
    return complex_.face_set == expected


def _scarf_is_polygon(complex_: LabeledComplex) -> bool:
    q = complex_.ideal.num_generators
    f = complex_.f_vector()
    if len(f) != 2 or f[0] != q or f[1] != q:
        return False
    edge_graph = SimpleGraph.from_edges(q, complex_.faces_of_size(2))
    return all(d == 2 for d in edge_graph.degrees) and is_connected(edge_graph)


def check_paths_cycles(t: int, r_max: int, fields=DEFAULT_FIELDS) -> PathsCyclesReport:
    """Tabulate the Scarf verdicts of the connected ideals of paths and cycles
    up to r_max vertices against the closed-form answers (paths: r <= 2t,
    cycles: r <= t), including the shape of the path-case Scarf complexes."""
    if t < 3:
        raise AnalysisError("the paths-and-cycles table needs t >= 3")
    fields = _normalize_fields(fields)
    from .graphs import cycle_graph, path_graph

    spec = IdealSpec("connected", t)
    rows = []
    for r in range(3, r_max + 1):
        ideal = build_ideal(path_graph(r), spec)
        report = is_scarf(ideal, fields)
        shape = None
        shape_ok = None
        if t + 2 <= r <= 2 * t:
            shape = "path"
            shape_ok = _scarf_is_path_complex(scarf_complex(ideal))
        elif r == 2 * t + 1:
            shape = "polygon"
            shape_ok = _scarf_is_polygon(scarf_complex(ideal))
        rows.append(
            PathCycleRow(
                kind="path",
                r=r,
                num_generators=ideal.num_generators,
                computed_scarf=report.all_scarf,
                expected_scarf=r <= 2 * t,
                shape=shape,
                shape_ok=shape_ok,
            )
        )
    for r in range(3, r_max + 1):
        ideal = build_ideal(cycle_graph(r), spec)
        report = is_scarf(ideal, fields)
        rows.append(
            PathCycleRow(
                kind="cycle",
                r=r,
                num_generators=ideal.num_generators,
                computed_scarf=report.all_scarf,
                expected_scarf=r <= t,
                shape=None,
                shape_ok=None,
            )
        )
    return PathsCyclesReport(t=t, rows=tuple(rows))


# ---------------------------------------------------------------------------
# restriction stability


@dataclass(frozen=True)
class RestrictionReport:
    applicable: bool
    num_checked: int
    violations: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "num_checked": self.num_checked,
            "violations": list(self.violations),
        }


def verify_restriction_lemma(
    ideal: MonomialIdeal, sample=None, fields=DEFAULT_FIELDS
) -> RestrictionReport:
    """If the ideal is Scarf, every restriction to a monomial must stay Scarf.

    The default sample is every lcm-lattice point; any violation is reported
    (and means an internal inconsistency, since the property is a theorem)."""
    fields = _normalize_fields(fields)
    base = is_scarf(ideal, fields)
    if not base.all_scarf:
        return RestrictionReport(applicable=False, num_checked=0, violations=())
    points = tuple(sample) if sample is not None else lcm_lattice(ideal).points
    violations = []
    for m in points:
        sub = ideal.restrict(m)
        report = is_scarf(sub, fields)
        if not report.all_scarf:
            violations.append(
                {
                    "monomial": m.render(),
                    "verdicts": {f.render(): v for f, v in report.verdicts},
                }
            )
    return RestrictionReport(applicable=True, num_checked=len(points), violations=tuple(violations))


# ---------------------------------------------------------------------------
# leaf gluing pipeline


@dataclass(frozen=True)
class LeafPipelineReport:
    base: MonomialIdeal
    glued: MonomialIdeal
    x: int
    x_prime: int
    plain: tuple[int, ...]
    leafed: tuple[int, ...]
    hypothesis_holds: bool
    overlapping_pairs: tuple[tuple[int, int], ...]
    replacement_ok: bool | None
    stars_ok: bool | None
    disjointness_persists: bool | None
    scarf_transfer: str
    base_scarf: bool
    glued_scarf: bool

    @property
    def ok(self) -> bool:
        return (
            self.hypothesis_holds
            and self.replacement_ok is True
            and self.stars_ok is True
            and self.disjointness_persists is True
            and self.scarf_transfer in ("verified", "vacuous")
        )

    def to_json_dict(self) -> dict:
        return {
            "base": self.base.to_json_dict(),
            "glued": self.glued.to_json_dict(),
            "x": self.base.universe.names[self.x],
            "x_prime": self.glued.universe.names[self.x_prime],
            "hypothesis_holds": self.hypothesis_holds,
            "overlapping_pairs": [list(p) for p in self.overlapping_pairs],
            "replacement_ok": self.replacement_ok,
            "stars_ok": self.stars_ok,
            "disjointness_persists": self.disjointness_persists,
            "scarf_transfer": self.scarf_transfer,
            "base_scarf": self.base_scarf,
            "glued_scarf": self.glued_scarf,
        }


def _stars_share_nonempty_face(a: LabeledComplex, b: LabeledComplex) -> bool:
    shared = (a.face_set & b.face_set) - {()}
    return bool(shared)


def leaf_lemma_pipeline(ideal: MonomialIdeal, x: int, fields=DEFAULT_FIELDS) -> LeafPipelineReport:
    """Glue a fresh leaf variable onto x and verify the transfer statements:

    (i)  the glued Scarf complex is the old one together with, for each leafed
         generator, the cone from its replacement generator over its old star,
    (ii) each such star in the glued complex is exactly that cone, with the
         pairwise disjointness of the stars persisting,
    (iii) if the base ideal is Scarf, so is the glued one.

    The hypothesis is that the stars of the leafed generators pairwise share
    no nonempty face; when it fails the conclusions are not asserted.
    """
    fields = _normalize_fields(fields)
    plain, leafed = leaf_split(ideal, x)
    glued = glue_leaf_ideal(ideal, x)
    x_prime = glued.universe.size - 1
    base_complex = scarf_complex(ideal)
    glued_complex = scarf_complex(glued)
    to_glued = generator_index_map(ideal, glued)

    stars = {j: base_complex.star((j,)) for j in leafed}
    overlapping = tuple(
        (i, j)
        for i, j in itertools.combinations(leafed, 2)
        if _stars_share_nonempty_face(stars[i], stars[j])
    )
    hypothesis = not overlapping

    x_bit = 1 << x
    x_prime_bit = 1 << x_prime
    glued_lookup = {g.mask: k for k, g in enumerate(glued.mingens)}
    apex = {
        j: glued_lookup[(ideal.mingens[j].mask & ~x_bit) | x_prime_bit] for j in leafed
    }

    def map_face(face) -> tuple[int, ...]:
        return tuple(sorted(to_glued[i] for i in face))

    base_report = is_scarf(ideal, fields)
    glued_report = is_scarf(glued, fields)

    replacement_ok = stars_ok = disjointness_persists = None
    if hypothesis:
        expected = {map_face(face) for face in base_complex.faces}
        for j in leafed:
            for face in stars[j].faces:
                expected.add(tuple(sorted(map_face(face) + (apex[j],))))
        replacement_ok = expected == set(glued_complex.faces)

        stars_ok = True
        glued_stars = {}
        for j in leafed:
            want = {map_face(face) for face in stars[j].faces}
            want |= {tuple(sorted(map_face(face) + (apex[j],))) for face in stars[j].faces}
            got = glued_complex.star((to_glued[j],))
            glued_stars[j] = got
            if set(got.faces) != want:
                stars_ok = False
        disjointness_persists = not any(
            _stars_share_nonempty_face(glued_stars[i], glued_stars[j])
            for i, j in itertools.combinations(leafed, 2)
        )

    if not base_report.all_scarf:
        transfer = "vacuous"
    elif glued_report.all_scarf:
        transfer = "verified"
    else:
        transfer = "violated"

    return LeafPipelineReport(
        base=ideal,
        glued=glued,
        x=x,
        x_prime=x_prime,
        plain=plain,
        leafed=leafed,
        hypothesis_holds=hypothesis,
        overlapping_pairs=overlapping,
        replacement_ok=replacement_ok,
        stars_ok=stars_ok,
        disjointness_persists=disjointness_persists,
        scarf_transfer=transfer,
        base_scarf=base_report.all_scarf,
        glued_scarf=glued_report.all_scarf,
    )


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepRecord:
    graph6: str
    n: int
    num_edges: int
    edges: str
    family: str | None
    predicted: bool
    computed: bool
    verdicts: tuple[tuple[str, str], ...]

    @property
    def agree(self) -> bool:
        return self.predicted == self.computed

    @property
    def fields_disagree(self) -> bool:
        return len({v != VERDICT_NOT_SCARF for _, v in self.verdicts}) > 1

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "num_edges": self.num_edges,
            "edges": self.edges,
            "family": self.family,
            "predicted": self.predicted,
            "computed": self.computed,
            "agree": self.agree,
            "verdicts": dict(self.verdicts),
        }


@dataclass(frozen=True)
class SweepResult:
    spec: IdealSpec
    n_max: int
    records: tuple[SweepRecord, ...]
    disagreements: tuple[SweepRecord, ...]
    field_conflicts: tuple[SweepRecord, ...]

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.field_conflicts

    def to_json_lines(self) -> list[str]:
        return [json.dumps(r.to_json_dict(), sort_keys=True) for r in self.records]


def _sweep_predictor(spec: IdealSpec):
    if spec.kind == "connected" and spec.t >= 3:
        return lambda graph: classify_theorem_A(graph, spec.t)
    if spec.kind == "path" and spec.t == 4:
        return classify_theorem_B
    raise AnalysisError(f"no classification is wired up for spec {spec}")


def _sweep_one(args: tuple[SimpleGraph, IdealSpec, tuple[FieldSpec, ...]]) -> SweepRecord:
    graph, spec, fields = args
    predictor = _sweep_predictor(spec)
    report = is_scarf(build_ideal(graph, spec), fields)
    tag = recognize_family(graph)
    return SweepRecord(
        graph6=canonical_form(graph).decode("ascii"),
        n=graph.n,
        num_edges=graph.num_edges,
        edges=to_adjacency_text(graph),
        family=tag.render() if tag else None,
        predicted=predictor(graph),
        computed=report.all_scarf,
        verdicts=tuple((f.render(), v) for f, v in report.verdicts),
    )


def sweep(spec: IdealSpec, n_max: int, fields=DEFAULT_FIELDS, jobs: int = 1) -> SweepResult:
    """Exhaustive comparison of the classification predicate against the
    computed Scarf property over all connected graphs on up to n_max vertices."""
    fields = _normalize_fields(fields)
    _sweep_predictor(spec)
    graphs = [
        graph
        for n in range(1, n_max + 1)
        for graph in enumerate_connected_graphs(n)
    ]
    tasks = [(graph, spec, fields) for graph in graphs]
    if jobs > 1:
        with Pool(jobs) as pool:
            records = pool.map(_sweep_one, tasks)
    else:
        records = [_sweep_one(task) for task in tasks]
    records.sort(key=lambda r: (r.n, r.graph6))
    return SweepResult(
        spec=spec,
        n_max=n_max,
        records=tuple(records),
        disagreements=tuple(r for r in records if not r.agree),
        field_conflicts=tuple(r for r in records if r.fields_disagree),
    )


# ---------------------------------------------------------------------------
# obstruction catalogs


@dataclass(frozen=True)
class ObstructionCatalog:
    spec: IdealSpec
    n_max: int
    mode: str
    trees_only: bool
    num_non_scarf: int
    graphs: tuple[SimpleGraph, ...]

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.render(),
            "n_max": self.n_max,
            "mode": self.mode,
            "trees_only": self.trees_only,
            "num_non_scarf": self.num_non_scarf,
            "graphs": [canonical_form(g).decode("ascii") for g in self.graphs],
        }


def derive_obstructions(
    spec: IdealSpec,
    n_max: int,
    mode: str,
    trees_only: bool = False,
    fields=DEFAULT_FIELDS,
) -> ObstructionCatalog:
    """Minimal non-Scarf connected graphs on up to n_max vertices under the
    chosen containment order ('induced' or 'subgraph'); with trees_only the
    search universe is the set of trees."""
    if mode not in ("induced", "subgraph"):
        raise AnalysisError("mode must be 'induced' or 'subgraph'")
    fields = _normalize_fields(fields)
    limit = 9 if trees_only else 7
    if not 1 <= n_max <= limit:
        raise GraphError(f"obstruction derivation capped at {limit} vertices here")
    universe = [
        graph
        for n in range(1, n_max + 1)
        for graph in (enumerate_trees(n) if trees_only else enumerate_connected_graphs(n))
    ]
    bad = [
        graph
        for graph in universe
        if not is_scarf(build_ideal(graph, spec), fields).all_scarf
    ]
    forms = {id(g): canonical_form(g) for g in bad}
    contains = contains_induced if mode == "induced" else contains_subgraph
    minimal = []
    for graph in bad:
        dominated = False
        for other in bad:
            if forms[id(other)] == forms[id(graph)]:
                continue
            # only strictly smaller candidates can witness non-minimality
            if other.n > graph.n or (other.n == graph.n and other.num_edges >= graph.num_edges):
                continue
            if contains(graph, other):
                dominated = True
                break
        if not dominated:
            minimal.append(graph)
    minimal.sort(key=lambda g: (g.n, canonical_form(g)))
    return ObstructionCatalog(
        spec=spec,
        n_max=n_max,
        mode=mode,
        trees_only=trees_only,
        num_non_scarf=len(bad),
        graphs=tuple(minimal),
    )
