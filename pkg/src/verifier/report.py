"""Verification report formats: a summary table, json-lines and csv."""
import csv
import io
import json

from .sweep import SweepReport

FIELDS = ("method", "theta_deg", "claim_id", "residual_deg", "pass")


def _records(report: SweepReport):
    bk = report.backend
    for r in report.results:
        yield {
            "method": r.method.value,
            "theta_deg": bk.to_json(r.theta),
            "claim_id": r.claim_id,
            "residual_deg": bk.to_json(r.residual),
            "pass": r.passed,
        }


def format_json_lines(report: SweepReport) -> str:
    """One record per (theta, claim). Numbers keep full precision (strings on bigfloat)."""
    return "".join(json.dumps(rec, ensure_ascii=False) + "\n" for rec in _records(report))


def format_csv(report: SweepReport) -> str:
    bk = report.backend
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in report.results:
        writer.writerow([
            r.method.value,
            bk.exact(r.theta),
            r.claim_id,
            bk.exact(r.residual),
            "true" if r.passed else "false",
        ])
    return buf.getvalue()


def format_text(report: SweepReport) -> str:
    bk = report.backend
    start, stop, step = report.grid
    width = max([len("claim")] + [len(c) for c in report.claim_ids])
    lines = [
        f"method        {report.method.value}{' (exterior)' if report.exterior else ''}",
        f"backend       {bk.name}",
        f"grid          {bk.fmt(start)} .. {bk.fmt(stop)} step {bk.fmt(step)} ({report.grid_size} points)",
        "",
        f"{'claim':<{width}}  {'pass':>6}  {'fail':>6}  {'excluded':>8}  max |residual|",
    ]
    for cid in report.claim_ids:
        top = report.max_residual(cid)
        lines.append(
            f"{cid:<{width}}  {report.pass_counts[cid]:>6}  {report.fail_counts[cid]:>6}  "
            f"{len(report.excluded):>8}  {bk.fmt(top) if top is not None else '-'}"
        )
    lines.append("")
    if report.excluded:
        for theta, reason in report.excluded:
            lines.append(f"excluded      theta={bk.fmt(theta)}: {reason}")
    else:
        lines.append("excluded      none")
    if not report.exterior:
        points = ", ".join(bk.fmt(x) for x in report.fixed_points) or "none"
        lines.append(f"fixed points  {points}")
    lines.append(f"result        {'PASS' if report.all_passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


FORMATTERS = {
    "text": format_text,
    "json-lines": format_json_lines,
    "csv": format_csv,
}
