"""Check records, findings, and the JSON / markdown renderings of a run."""
from __future__ import annotations

import json

SCHEMA = "minrep-report/1"


def _plain(x):
    # JSON-safe, deterministic rendering of exact values
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


class Report:
    def __init__(self, suite: str, config: dict):
        self.suite = suite
        self.config = dict(config)
        self.checks: list[dict] = []
        self.findings: list[dict] = []
        self.wall_time = 0.0

    def check(self, name, expected, computed, passed, residual=None):
        self.checks.append({
            "name": name, "expected": _plain(expected), "computed": _plain(computed),
            "residual": _plain(residual), "pass": bool(passed),
        })
        return bool(passed)

    def finding(self, key, summary, **detail):
        self.findings.append({"finding": key, "summary": summary, "detail": _plain(detail)})

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "config": _plain(self.config),
            "checks": self.checks,
            "findings": self.findings,
            "pass": self.passed,
            "wall_time": round(self.wall_time, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_markdown(self) -> str:
        lines = [f"# minrep report: {self.suite}", ""]
        lines.append("Config: " + ", ".join(f"{k}={v}" for k, v in sorted(self.config.items())))
        lines.append("")
        lines.append(f"Overall: {'PASS' if self.passed else 'FAIL'} "
                     f"({sum(c['pass'] for c in self.checks)}/{len(self.checks)} checks)")
        lines += ["", "| check | expected | computed | pass |", "|---|---|---|---|"]
        for c in self.checks:
            lines.append(f"| {c['name']} | {_cell(c['expected'])} | {_cell(c['computed'])} | "
                         f"{'yes' if c['pass'] else 'NO'} |")
        if self.findings:
            lines += ["", "## Findings", ""]
            for f in self.findings:
                lines.append(f"- **{f['finding']}**: {f['summary']}")
        lines += ["", f"Wall time: {self.wall_time:.2f} s", ""]
        return "\n".join(lines)


def _cell(v) -> str:
    text = v if isinstance(v, str) else json.dumps(v, sort_keys=True, ensure_ascii=False)
    text = text.replace("|", "\\|")
    return text if len(text) <= 60 else text[:57] + "..."
