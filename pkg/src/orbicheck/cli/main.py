"""Command line front end: ``check``, ``examples`` and ``explain``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from ..errors import CapExceededError, OrbicheckError, ScenarioError
from ..groups import DEFAULT_CAP
from ..orbicore import embeddability, split_by_sections
from .evaluate import ReportRow, ScenarioResult, build_subchart, evaluate_scenario
from .report import FORMATS, Report, render
from .scenario import parse_scenario

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
BUILTIN = tuple(f"example-{k}.yaml" for k in range(1, 9))


def builtin_text(name: str) -> str:
    return resources.files("orbicheck.cli").joinpath("scenarios", name).read_text(encoding="utf-8")


def _evaluate_builtin(args: tuple[str, int, int]) -> ScenarioResult:
    name, trials, seed = args
    return evaluate_scenario(parse_scenario(builtin_text(name), name), trials, seed)


def run_builtin(jobs: int = 1, trials: int = 0, seed: int = 0) -> list[ScenarioResult]:
    """Evaluate the built-in corpus, in input order whatever ``jobs`` is."""
    work = [(name, trials, seed) for name in BUILTIN]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_evaluate_builtin, work))
    return [_evaluate_builtin(w) for w in work]


def run_examples(jobs: int = 1) -> list[ReportRow]:
    """The eight table rows of the built-in example corpus."""
    return [row for res in run_builtin(jobs) for row in res.rows]


def _emit(report: Report, args) -> int:
    sys.stdout.write(render(report, args.format, witness=getattr(args, "witness", False)))
    if args.figure:
        from .figures import verdict_grid
        verdict_grid(report.rows, args.figure)
    return EXIT_OK


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario: {exc.strerror}", path=path) from None


def cmd_check(args) -> int:
    scn = parse_scenario(_read(args.file), args.file, cap=args.cap)
    res = evaluate_scenario(scn, args.trials, args.seed)
    _emit(Report(res.rows + res.extra_rows, res.records), args)
    diff = res.mismatches()
    for line in diff:
        print(f"MISMATCH {line}", file=sys.stderr)
    return EXIT_MISMATCH if diff else EXIT_OK


def cmd_examples(args) -> int:
    results = run_builtin(args.jobs, args.trials, args.seed)
    _emit(Report([r for res in results for r in res.rows]), args)
    diff = [line for res in results for line in res.mismatches()]
    for line in diff:
        print(f"MISMATCH {line}", file=sys.stderr)
    return EXIT_MISMATCH if diff else EXIT_OK


def cmd_explain(args) -> int:
    scn = parse_scenario(_read(args.file), args.file, cap=args.cap)
    names = [s.name for s in scn.subcharts]
    if args.subchart not in names:
        raise ScenarioError(f"no subchart named {args.subchart!r}; have {', '.join(names)}",
                            path="--subchart")
    sub = build_subchart(scn, args.subchart)
    v = embeddability(sub)
    iso = v.isotropy
    g = sub.chart.group
    out = [f"subchart {args.subchart} of chart {sub.chart.name} (order {g.order}, dim {sub.chart.dim})",
           f"shape: {sub.shape}",
           f"lambda: {', '.join(str(g.elements[i]) for i in sorted(sub.lam))}",
           f"omega: {', '.join(str(g.elements[i]) for i in sorted(iso.omega))}",
           f"orders: |omega|={iso.orders['omega']} |lambda|={iso.orders['lambda']} "
           f"|gamma_p|={iso.orders['gamma_p']}",
           f"sequence: {iso.sequence()} ({'split' if v.split else 'not split'})",
           f"full: {'yes' if v.full else 'no'}"]
    if v.saturated:
        out.append("saturated: yes")
    else:
        out.append("saturated: no; witness: " + v.saturation.witness.describe(sub))
    if v.split:
        sec = v.splitting.section
        images = ", ".join(f"{k} -> {iso.lam_group.elements[sec(k)]}" for k in range(iso.gamma_p.order))
        out.append(f"section (gamma_p -> lambda): {images}")
        out.append(f"sections in total: {len(split_by_sections(iso))}")
    else:
        out.append(f"non-split certificate: none of the {v.splitting.examined} subgroups of lambda "
                   f"meets omega trivially with order |gamma_p|={iso.gamma_p.order}")
    if v.embedding is not None:
        th = v.embedding.theta
        out.append("theta: " + ", ".join(f"{k} -> {g.elements[th(k)]}" for k in range(iso.gamma_p.order)))
        lift = v.embedding.lift
        if isinstance(lift, tuple):
            out.append(f"lift: t -> ({lift[0]}, {lift[1]})")
        else:
            out.append(f"lift: {lift}")
        out.append("complete embedding: yes")
    else:
        out.append(f"complete embedding: no (topological embedding: "
                   f"{'yes' if v.embeddable_topologically else 'no'})")
    print("\n".join(out))
    if args.figure:
        from .figures import chart_portrait
        if not chart_portrait(sub, args.figure):
            print("figure skipped: chart is not a real plane chart", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbicheck",
                                description="Decide full/saturated/split for suborbifold charts.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, witness=True):
        sp.add_argument("--format", choices=FORMATS, default="md")
        if witness:
            sp.add_argument("--witness", action="store_true", help="add isotropy and witness columns")
        sp.add_argument("--figure", metavar="PNG", help="also write a verdict grid figure")

    c = sub.add_parser("check", help="evaluate a scenario file against its expected verdicts")
    c.add_argument("file")
    common(c)
    c.add_argument("--seed", type=int, default=0, help="sampling oracle seed")
    c.add_argument("--trials", type=int, default=100, help="sampling oracle trials (0 disables)")
    c.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group order cap")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("examples", help="reproduce the built-in example table")
    common(e)
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--trials", type=int, default=0, help="sampling oracle trials (default off)")
    e.set_defaults(func=cmd_examples)

    x = sub.add_parser("explain", help="print the isotropy data and certificates of one subchart")
    x.add_argument("file")
    x.add_argument("--subchart", required=True)
    x.add_argument("--figure", metavar="PNG", help="also draw the chart and the subchart orbit")
    x.add_argument("--cap", type=int, default=DEFAULT_CAP)
    x.set_defaults(func=cmd_explain)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OrbicheckError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
