"""Run the deciders on a parsed scenario and collect plain-data results."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ScenarioError, ShapeError
from ..orbicore import Subchart, Verdict, embeddability, recognize_suborbifold, sampling_oracle
from .scenario import COLUMNS, DASH, NO, YES, Scenario


def yn(flag: bool) -> str:
    return YES if flag else NO


@dataclass
class SubchartRecord:
    """Verdicts for one subchart (or recognition target) of a scenario."""

    scenario: str
    subchart: str
    orders: dict[str, int] | None
    names: dict[str, str] | None
    verdicts: tuple[str, ...]
    witness: str = ""
    expect: tuple[str, ...] | None = None
    oracle_agrees: bool | None = None

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "subchart": self.subchart,
            "orders": self.orders,
            "names": self.names,
            "verdicts": dict(zip(COLUMNS, self.verdicts)),
            "witness": self.witness,
        }


@dataclass
class ReportRow:
    """One line of the verdict table: a conjunction over member subcharts."""

    label: str
    verdicts: tuple[str, ...]
    names: str = ""
    witness: str = ""
    expect: tuple[str, ...] | None = None

    @property
    def mismatch(self) -> bool:
        return self.expect is not None and self.expect != self.verdicts

    def as_dict(self) -> dict:
        return {"label": self.label, "verdicts": dict(zip(COLUMNS, self.verdicts)),
                "names": self.names, "witness": self.witness}


@dataclass
class ScenarioResult:
    name: str
    records: list[SubchartRecord] = field(default_factory=list)
    rows: list[ReportRow] = field(default_factory=list)
    extra_rows: list[ReportRow] = field(default_factory=list)

    def mismatches(self) -> list[str]:
        out = []
        for rec in self.records:
            if rec.expect is not None and rec.expect != rec.verdicts:
                out.append(f"{self.name}/{rec.subchart}: expected {'/'.join(rec.expect)}, "
                           f"got {'/'.join(rec.verdicts)}")
            if rec.oracle_agrees is False:
                out.append(f"{self.name}/{rec.subchart}: sampling oracle disagrees with the "
                           "symbolic saturation verdict")
        for row in self.rows + self.extra_rows:
            if row.mismatch:
                out.append(f"{self.name} row {row.label}: expected {'/'.join(row.expect)}, "
                           f"got {'/'.join(row.verdicts)}")
        return out


def verdict_cells(v: Verdict) -> tuple[str, ...]:
    return (YES, yn(v.full), yn(v.saturated), yn(v.split), yn(v.embeddable_completely))


NOT_SUBORBIFOLD = (NO, DASH, DASH, DASH, NO)


def witness_summary(sub: Subchart, v: Verdict) -> str:
    parts = []
    if not v.saturated:
        parts.append("not saturated: " + v.saturation.witness.describe(sub))
    if not v.split:
        names = v.isotropy.names
        parts.append(f"not split: {names['omega']} has no complement in {names['lambda']} "
                     f"({v.splitting.examined} subgroups examined)")
    return "; ".join(parts)


def build_subchart(scn: Scenario, name: str) -> Subchart:
    d = next(s for s in scn.subcharts if s.name == name)
    try:
        return Subchart.build(scn.charts[d.chart], d.shape, d.lam, name)
    except ShapeError as exc:
        raise ScenarioError(str(exc), path=f"subcharts.{name}") from None


def _record(scn: Scenario, name: str, sub: Subchart, trials: int, seed: int, expect) -> SubchartRecord:
    v = embeddability(sub)
    agrees = None
    if trials > 0:
        agrees = sampling_oracle(sub, trials=trials, seed=seed)[0] == v.saturated
    iso = v.isotropy
    return SubchartRecord(scn.name, name, iso.orders, dict(iso.names), verdict_cells(v),
                          witness_summary(sub, v), expect, agrees)


def evaluate_scenario(scn: Scenario, trials: int = 100, seed: int = 0) -> ScenarioResult:
    """Decide every subchart and recognition target, then aggregate the table rows.

    ``trials`` > 0 also runs the sampling oracle on each subchart as a cross-check.
    """
    result = ScenarioResult(scn.name)
    by_name: dict[str, SubchartRecord] = {}
    for d in scn.subcharts:
        rec = _record(scn, d.name, build_subchart(scn, d.name), trials, seed, d.expect)
        result.records.append(rec)
        by_name[d.name] = rec
    for r in scn.recognitions:
        found = recognize_suborbifold(scn.charts[r.chart], r.target, r.gamma_p)
        if found:
            sub, _ = found[0]
            rec = _record(scn, r.name, sub, trials, seed, r.expect)
            if len(found) > 1:
                rec.witness = (rec.witness + "; " if rec.witness else "") + f"{len(found)} candidates"
        else:
            want = f" with intrinsic isotropy {r.gamma_p}" if r.gamma_p else ""
            rec = SubchartRecord(scn.name, r.name, None, None, NOT_SUBORBIFOLD,
                                 f"no saturated subchart structure on {r.target}{want}", r.expect)
        result.records.append(rec)
        by_name[r.name] = rec

    table = scn.table or []
    if table:
        for row in table:
            result.rows.append(aggregate(row.label, [by_name[m] for m in row.members], row.expect))
        listed = {m for row in table for m in row.members}
        for rec in result.records:
            if rec.subchart not in listed:
                result.extra_rows.append(aggregate(f"{scn.name}/{rec.subchart}", [rec]))
    else:
        for rec in result.records:
            result.rows.append(aggregate(f"{scn.name}/{rec.subchart}", [rec], rec.expect))
    return result


def aggregate(label: str, members: list[SubchartRecord], expect=None) -> ReportRow:
    """Conjunction over chart-local verdicts; any non-suborbifold member decides the row."""
    if not members or any(m.verdicts[0] != YES for m in members):
        verdicts = NOT_SUBORBIFOLD
    else:
        verdicts = (YES,) + tuple(yn(all(m.verdicts[k] == YES for m in members))
                                  for k in range(1, len(COLUMNS)))
    names = ", ".join(
        f"{m.names['omega']}/{m.names['lambda']}/{m.names['gamma_p']}" if m.names else "-"
        for m in members)
    witness = "; ".join(f"{m.subchart}: {m.witness}" for m in members if m.witness)
    return ReportRow(label, verdicts, names, witness, expect)
