import json
from typing import Iterable, List

from m2c.core.report import CheckReport, sortReports, summarize

FORMATS = ("text", "json")


def render_text(reports: Iterable[CheckReport]) -> str:
    """One line per check, then the summary line."""
    reports = sortReports(reports)
    lines: List[str] = []
    for report in reports:
        line = f"{report.condition} ({', '.join(report.indices)}) {report.status}"
        if report.witness is not None:
            line += f"  lhs={report.witness[0]} rhs={report.witness[1]}"
        lines.append(line)
    lines.append(summarize(reports).line())
    return "\n".join(lines) + "\n"


def render_json(reports: Iterable[CheckReport]) -> str:
    reports = sortReports(reports)
    summary = summarize(reports)
    data = {
        "reports": [r.toDict() for r in reports],
        "summary": {
            "total": summary.total,
            "failed": summary.failed,
            "conditions": {cid: {"total": t, "failed": f} for cid, (t, f) in sorted(summary.perCondition.items())},
            "line": summary.line(),
        },
    }
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def render_report(reports: Iterable[CheckReport], fmt: str = "text") -> str:
    if fmt == "json":
        return render_json(reports)
    if fmt == "text":
        return render_text(reports)
    raise ValueError(f"Unknown report format: {fmt}")
