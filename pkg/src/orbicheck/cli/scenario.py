"""Scenario documents: charts, subcharts, recognition targets and table rows.

A scenario is a YAML (hence also JSON) mapping::

    scenario: example-5
    charts:
      O:
        generators: ["diag(zeta(4), -1)"]   # builder strings or lists of rows
      R:
        product: [O, O]                     # block-diagonal product chart
    subcharts:
      P:
        chart: O
        subspace: [[0, 1]]                  # or whole: true | graph: "t^2/2"
                                            # or diagonal: {subspace: [[0, 1]]}
        lambda: auto                        # auto | all | [generator, ...]
        expect: [Yes, Yes, Yes, No, No]
    recognitions:
      T:
        chart: O
        ray: [1, 0]                         # or subspace / graph
        gamma_p: Z2
    table:
      - label: "5"
        members: [P]
        expect: [Yes, Yes, Yes, No, No]

Expected rows list Suborbifold, Full, Saturated, Split, Embeddable as
Yes / No / "-".
"""

from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from ..errors import ScenarioError
from ..exactnum import Subspace, vector
from ..groups import DEFAULT_CAP, direct_product, generate
from ..orbicore import Chart, Graph2D, LinearSubspace, Ray
from .expr import parse_matrix, parse_poly, parse_scalar

COLUMNS = ("suborbifold", "full", "saturated", "split", "embeddable")
YES, NO, DASH = "Yes", "No", "—"


@dataclass
class SubchartDef:
    name: str
    chart: str
    shape: object
    lam: object = "auto"
    expect: tuple[str, ...] | None = None


@dataclass
class RecognitionDef:
    name: str
    chart: str
    target: object
    gamma_p: str | None = None
    expect: tuple[str, ...] | None = None


@dataclass
class TableRowDef:
    label: str
    members: list[str]
    expect: tuple[str, ...] | None = None


@dataclass
class Scenario:
    name: str
    description: str = ""
    charts: dict[str, Chart] = field(default_factory=dict)
    subcharts: list[SubchartDef] = field(default_factory=list)
    recognitions: list[RecognitionDef] = field(default_factory=list)
    table: list[TableRowDef] = field(default_factory=list)

    def member_names(self) -> list[str]:
        return [s.name for s in self.subcharts] + [r.name for r in self.recognitions]


def tristate(value, path: str) -> str:
    if value is True or value in ("Yes", "yes", "Y", "y"):
        return YES
    if value is False or value in ("No", "no", "N", "n"):
        return NO
    if value is None or value in ("-", "--", DASH, "–"):
        return DASH
    raise ScenarioError(f"expected Yes, No or -, got {value!r}", path=path)


def _expect(raw, path: str) -> tuple[str, ...] | None:
    if raw is None:
        return None
    if isinstance(raw, dict):
        unknown = set(raw) - set(COLUMNS)
        if unknown:
            raise ScenarioError(f"unknown verdict columns {sorted(unknown)}", path=path)
        return tuple(tristate(raw.get(c), f"{path}.{c}") for c in COLUMNS)
    if isinstance(raw, list) and len(raw) == len(COLUMNS):
        return tuple(tristate(v, f"{path}[{k}]") for k, v in enumerate(raw))
    raise ScenarioError(f"expected a list of {len(COLUMNS)} verdicts", path=path)


def _mapping(raw, path: str) -> dict:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ScenarioError("expected a mapping", path=path)
    return raw


def _vectors(raw, dim: int, path: str) -> list[tuple]:
    if not isinstance(raw, list) or not all(isinstance(v, list) for v in raw):
        raise ScenarioError("expected a list of vectors", path=path)
    out = []
    for k, v in enumerate(raw):
        if len(v) != dim:
            raise ScenarioError(f"vector of length {len(v)} in dimension {dim}", path=f"{path}[{k}]")
        out.append(vector(parse_scalar(x) for x in v))
    return out


def _build_charts(raw: dict, cap: int) -> dict[str, Chart]:
    charts: dict[str, Chart] = {}
    pending = dict(raw)
    while pending:
        progressed = False
        for name, spec in list(pending.items()):
            path = f"charts.{name}"
            spec = _mapping(spec, path)
            if "product" in spec:
                parts = spec["product"]
                if not isinstance(parts, list) or len(parts) < 2:
                    raise ScenarioError("product needs a list of at least two charts", path=path)
                missing = [p for p in parts if p not in raw]
                if missing:
                    raise ScenarioError(f"undefined chart reference {missing[0]!r}",
                                        path=f"{path}.product")
                if not all(p in charts for p in parts):
                    continue
                group = charts[parts[0]].group
                for p in parts[1:]:
                    group = direct_product(group, charts[p].group)
                charts[name] = Chart(group, name)
            else:
                gens_raw = spec.get("generators", [])
                if not isinstance(gens_raw, list):
                    raise ScenarioError("generators must be a list", path=f"{path}.generators")
                gens = []
                for k, g in enumerate(gens_raw):
                    try:
                        gens.append(parse_matrix(g))
                    except ScenarioError as exc:
                        raise ScenarioError(str(exc), path=f"{path}.generators[{k}]") from None
                dim = spec.get("dim")
                if dim is None and not gens:
                    raise ScenarioError("a chart without generators needs dim", path=path)
                try:
                    group = generate(gens, cap=spec.get("cap", cap), dim=dim)
                except ValueError as exc:
                    raise ScenarioError(str(exc), path=path) from None
                charts[name] = Chart(group, name)
            del pending[name]
            progressed = True
        if not progressed:
            raise ScenarioError("cyclic product references", path="charts")
    return charts


def _shape(spec: dict, chart: Chart, path: str, allow_ray: bool = False):
    keys = [k for k in ("subspace", "whole", "graph", "diagonal", "ray") if k in spec]
    if len(keys) != 1:
        raise ScenarioError("give exactly one of subspace, whole, graph, diagonal"
                            + (", ray" if allow_ray else ""), path=path)
    key = keys[0]
    n = chart.dim
    if key == "subspace":
        return LinearSubspace(Subspace.span(_vectors(spec[key], n, f"{path}.subspace"), n))
    if key == "whole":
        return LinearSubspace(Subspace.whole(n))
    if key == "graph":
        try:
            return Graph2D(parse_poly(spec[key]))
        except ScenarioError as exc:
            raise ScenarioError(str(exc), path=f"{path}.graph") from None
    if key == "diagonal":
        if n % 2:
            raise ScenarioError(f"diagonal subspace needs an even-dimensional chart, got {n}", path=path)
        half = n // 2
        inner = spec[key]
        if inner in (True, "whole", None):
            base = [tuple(1 if j == k else 0 for j in range(half)) for k in range(half)]
        else:
            inner = _mapping(inner, f"{path}.diagonal")
            base = _vectors(inner.get("subspace"), half, f"{path}.diagonal.subspace")
        return LinearSubspace(Subspace.span([tuple(b) + tuple(b) for b in base], n))
    if not allow_ray:
        raise ScenarioError("rays are only allowed as recognition targets", path=path)
    return Ray(_vectors([spec[key]], n, f"{path}.ray")[0])


def parse_scenario(text: str, source: str | None = None, cap: int = DEFAULT_CAP) -> Scenario:
    """Parse and validate a scenario document, building its charts."""
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ScenarioError(f"malformed document: {getattr(exc, 'problem', exc)}", path=source,
                            line=mark.line + 1 if mark else None,
                            column=mark.column + 1 if mark else None) from None
    raw = _mapping(raw, "<root>")
    unknown = set(raw) - {"scenario", "description", "charts", "subcharts", "recognitions", "table"}
    if unknown:
        raise ScenarioError(f"unknown top-level keys {sorted(unknown)}", path=source)
    name = raw.get("scenario")
    if not isinstance(name, str) or not name:
        raise ScenarioError("missing scenario name", path="scenario")
    charts = _build_charts(_mapping(raw.get("charts"), "charts"), cap)
    scn = Scenario(name, str(raw.get("description", "")).strip(), charts)

    def chart_of(spec: dict, path: str) -> str:
        ref = spec.get("chart")
        if ref not in charts:
            raise ScenarioError(f"undefined chart reference {ref!r}", path=f"{path}.chart")
        return ref

    for sname, spec in _mapping(raw.get("subcharts"), "subcharts").items():
        path = f"subcharts.{sname}"
        spec = _mapping(spec, path)
        ref = chart_of(spec, path)
        lam = spec.get("lambda", "auto")
        if isinstance(lam, list):
            lam = [parse_matrix(g) for g in lam]
        elif lam not in ("auto", "all"):
            raise ScenarioError(f"lambda must be auto, all or a generator list, got {lam!r}",
                                path=f"{path}.lambda")
        scn.subcharts.append(SubchartDef(sname, ref, _shape(spec, charts[ref], path), lam,
                                         _expect(spec.get("expect"), f"{path}.expect")))

    for rname, spec in _mapping(raw.get("recognitions"), "recognitions").items():
        path = f"recognitions.{rname}"
        spec = _mapping(spec, path)
        ref = chart_of(spec, path)
        scn.recognitions.append(RecognitionDef(
            rname, ref, _shape(spec, charts[ref], path, allow_ray=True),
            spec.get("gamma_p"), _expect(spec.get("expect"), f"{path}.expect")))

    names = scn.member_names()
    if len(set(names)) != len(names):
        raise ScenarioError("subchart and recognition names must be distinct", path="subcharts")
    table = raw.get("table", [])
    if not isinstance(table, list):
        raise ScenarioError("table must be a list of rows", path="table")
    for k, row in enumerate(table):
        path = f"table[{k}]"
        row = _mapping(row, path)
        members = row.get("members", [])
        for m in members:
            if m not in names:
                raise ScenarioError(f"undefined subchart reference {m!r}", path=f"{path}.members")
        scn.table.append(TableRowDef(str(row.get("label", scn.name)), list(members),
                                     _expect(row.get("expect"), f"{path}.expect")))
    return scn
