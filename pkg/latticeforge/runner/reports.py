# latticeforge/runner/reports.py
"""
Aggregation and rendering of trial reports.

Every artifact here is a pure function of the stored per-trial JSON, so
`write_reports` produces the same bytes whether it runs right after the trials
or later from `load_reports`.
"""

from __future__ import annotations

import csv
import html
import io
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import tabulate

from ..models.results import TrialReport

SINGLE_TRIAL_MARK = "*"
SINGLE_TRIAL_NOTE = "\\* Single trial: standard deviation reported as 0.00 by convention."

CSV_HEADER = ("step", "trial", "best_so_far")

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


@dataclass(frozen=True)
class SummaryStats:
    """Mean and sample standard deviation over the successful trials of one engine/strategy."""

    engine: str
    strategy: Optional[str]
    n: int
    failed: int
    score_mean: float
    score_std: float
    steps_mean: float
    steps_std: float
    evaluations_mean: float

    @property
    def label(self) -> str:
        return self.engine if self.strategy is None else f"{self.engine} / {self.strategy}"

    @property
    def single(self) -> bool:
        return self.n == 1

    def to_dict(self) -> Dict[str, object]:
        data = asdict(self)
        return {k: (None if isinstance(v, float) and not math.isfinite(v) else v) for k, v in data.items()}


def _mean_std(values: Sequence[float]) -> Tuple[float, float]:
    if not values:
        return math.nan, math.nan
    arr = np.asarray(values, dtype=float)
    std = float(np.std(arr, ddof=1)) if len(arr) > 1 else 0.0
    return float(np.mean(arr)), std


def summarize(reports: Sequence[TrialReport]) -> SummaryStats:
    """Stats for reports sharing one engine/strategy; failed trials are counted, not averaged."""
    if not reports:
        raise ValueError("cannot summarize an empty report list")
    ok = [r for r in reports if not r.failed]
    score_mean, score_std = _mean_std([r.best_score for r in ok])
    steps_mean, steps_std = _mean_std([float(r.steps_to_best) for r in ok])
    evals_mean, _ = _mean_std([float(r.total_evaluations) for r in ok])
    return SummaryStats(
        engine=reports[0].engine,
        strategy=reports[0].strategy,
        n=len(ok),
        failed=len(reports) - len(ok),
        score_mean=score_mean,
        score_std=score_std,
        steps_mean=steps_mean,
        steps_std=steps_std,
        evaluations_mean=evals_mean,
    )


def summarize_groups(reports: Iterable[TrialReport]) -> List[SummaryStats]:
    """One SummaryStats per engine/strategy, in order of first appearance."""
    groups: Dict[Tuple[str, Optional[str]], List[TrialReport]] = {}
    for r in reports:
        groups.setdefault(r.label, []).append(r)
    return [summarize(group) for group in groups.values()]


def format_cell(mean: float, std: float) -> str:
    if not math.isfinite(mean):
        return "n/a"
    return f"{mean:.2f} ± {std:.2f}"


def _trials_cell(stats: SummaryStats) -> str:
    text = f"{stats.n}{SINGLE_TRIAL_MARK}" if stats.single else str(stats.n)
    return f"{text} ({stats.failed} failed)" if stats.failed else text


def emit_markdown_tables(stats: Sequence[SummaryStats]) -> str:
    """Best-score and steps-to-best tables, one row per engine/strategy."""
    if not stats:
        raise ValueError("at least one summary is required")
    scores = tabulate.tabulate(
        [(s.label, _trials_cell(s), format_cell(s.score_mean, s.score_std)) for s in stats],
        headers=("Method", "Trials", "Best Score"),
        tablefmt="github",
        disable_numparse=True,
    )
    steps = tabulate.tabulate(
        [
            (
                s.label,
                _trials_cell(s),
                format_cell(s.steps_mean, s.steps_std),
                "n/a" if not math.isfinite(s.evaluations_mean) else f"{s.evaluations_mean:.2f}",
            )
            for s in stats
        ],
        headers=("Method", "Trials", "Steps to Best", "Evaluations"),
        tablefmt="github",
        disable_numparse=True,
    )
    parts = ["## Best Scores", "", scores, "", "## Steps to Achieve Best Score", "", steps, ""]
    if any(s.single for s in stats):
        parts += [SINGLE_TRIAL_NOTE, ""]
    return "\n".join(parts)


def progression_rows(reports: Sequence[TrialReport]) -> List[Tuple[int, int, float]]:
    return [
        (step, r.trial, value)
        for r in reports
        if not r.failed
        for step, value in enumerate(r.progression)
    ]


def progression_csv(reports: Sequence[TrialReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for step, trial, value in progression_rows(reports):
        writer.writerow((step, trial, repr(float(value))))
    return buf.getvalue()


def _text(x: float, y: float, body: str, *, size: int = 10, anchor: str = "middle", extra: str = "") -> str:
    return (
        f'<text x="{x:.1f}" y="{y:.1f}" text-anchor="{anchor}" font-family="sans-serif" '
        f'font-size="{size}"{extra}>{body}</text>'
    )


def _axes(
    x0: float, y0: float, x1: float, y1: float, *, xlabel: str, ylabel: str, y_lo: float, y_hi: float
) -> List[str]:
    """Two axis lines, their captions and the y range labels of one plot area."""
    xm, ym = (x0 + x1) / 2, (y0 + y1) / 2
    return [
        f'<line class="axis" x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y0:.1f}" stroke="black"/>',
        f'<line class="axis" x1="{x0:.1f}" y1="{y0:.1f}" x2="{x0:.1f}" y2="{y1:.1f}" stroke="black"/>',
        _text(xm, y0 + 36, xlabel, size=12),
        _text(x0 - 40, ym, ylabel, size=12, extra=f' transform="rotate(-90 {x0 - 40:.1f} {ym:.1f})"'),
        _text(x0 - 6, y0, f"{y_lo:.2f}", anchor="end"),
        _text(x0 - 6, y1 + 4, f"{y_hi:.2f}", anchor="end"),
    ]


def _svg_open(width: int, height: int, title: str, margin: int) -> List[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        _text(width / 2, margin / 2, html.escape(title), size=14),
    ]


def _y_range(values: Sequence[float]) -> Tuple[float, float]:
    finite = [v for v in values if math.isfinite(v)]
    y_lo, y_hi = (min(finite), max(finite)) if finite else (0.0, 100.0)
    if y_hi - y_lo < 1e-12:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    return y_lo, y_hi


def progression_svg(
    reports: Sequence[TrialReport],
    *,
    width: int = 640,
    height: int = 400,
    margin: int = 60,
    title: str = "Best score by optimization step",
) -> str:
    """Line chart with one polyline per trial; axes are drawn even with no data."""
    series = [(r.trial, list(r.progression)) for r in reports if not r.failed and r.progression]
    max_step = max((len(ys) - 1 for _, ys in series), default=0) or 1
    y_lo, y_hi = _y_range([v for _, ys in series for v in ys])

    plot_w, plot_h = width - 2 * margin, height - 2 * margin

    def px(step: int) -> float:
        return margin + plot_w * step / max_step

    def py(value: float) -> float:
        return margin + plot_h * (y_hi - value) / (y_hi - y_lo)

    x0, y0, x1, y1 = margin, height - margin, width - margin, margin
    out = _svg_open(width, height, title, margin)
    out += _axes(x0, y0, x1, y1, xlabel="Step", ylabel="Best score", y_lo=y_lo, y_hi=y_hi)
    out += [_text(x0, y0 + 16, "0"), _text(x1, y0 + 16, str(max_step))]
    for i, (trial, ys) in enumerate(series):
        points = " ".join(f"{px(step):.2f},{py(v):.2f}" for step, v in enumerate(ys) if math.isfinite(v))
        color = _PALETTE[i % len(_PALETTE)]
        out.append(
            f'<polyline data-trial="{trial}" fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def comparison_svg(
    stats: Sequence[SummaryStats],
    *,
    width: int = 800,
    height: int = 400,
    margin: int = 60,
    title: str = "Best score and steps to best, mean ± std",
) -> str:
    """
    Two bar panels, best score on the left and steps to best on the right.

    Each method gets a bar at its mean and a whisker spanning one standard deviation
    either side. Methods with no successful trial keep their slot but draw no bar.
    """
    if not stats:
        raise ValueError("at least one summary is required")
    panels = (
        ("score", "Best score", [(s.score_mean, s.score_std) for s in stats]),
        ("steps", "Steps to best", [(s.steps_mean, s.steps_std) for s in stats]),
    )
    panel_w = (width - 3 * margin) / 2
    y0, y1 = height - margin, margin
    out = _svg_open(width, height, title, margin)
    for p, (metric, ylabel, cells) in enumerate(panels):
        x0 = margin + p * (panel_w + margin)
        spans = [v for mean, std in cells if math.isfinite(mean) for v in (mean - std, mean + std)]
        y_lo, y_hi = _y_range([0.0, *spans])

        def py(value: float, lo: float = y_lo, hi: float = y_hi) -> float:
            return y1 + (y0 - y1) * (hi - value) / (hi - lo)

        out.append(f'<g data-metric="{metric}">')
        out += _axes(x0, y0, x0 + panel_w, y1, xlabel="Method", ylabel=ylabel, y_lo=y_lo, y_hi=y_hi)
        slot = panel_w / len(stats)
        for i, (s, (mean, std)) in enumerate(zip(stats, cells)):
            cx = x0 + slot * (i + 0.5)
            label = html.escape(s.label)
            out.append(_text(cx, y0 + 16, label))
            if not math.isfinite(mean):
                continue
            top, base = sorted((py(mean), py(0.0)))
            bar_w = slot * 0.6
            color = _PALETTE[i % len(_PALETTE)]
            out.append(
                f'<rect data-method="{label}" data-mean="{mean:.4f}" data-std="{std:.4f}" '
                f'x="{cx - bar_w / 2:.2f}" y="{top:.2f}" width="{bar_w:.2f}" height="{base - top:.2f}" fill="{color}"/>'
            )
            out.append(
                f'<line class="whisker" x1="{cx:.2f}" y1="{py(mean - std):.2f}" '
                f'x2="{cx:.2f}" y2="{py(mean + std):.2f}" stroke="black"/>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def mean_progression(reports: Sequence[TrialReport]) -> Tuple[List[float], List[float]]:
    """
    Per-step mean and std of best-so-far over successful trials.

    A trial that stopped early holds its final best for the remaining steps.
    """
    series = [list(r.progression) for r in reports if not r.failed and r.progression]
    if not series:
        return [], []
    length = max(len(ys) for ys in series)
    padded = np.array([ys + [ys[-1]] * (length - len(ys)) for ys in series], dtype=float)
    means = padded.mean(axis=0)
    stds = padded.std(axis=0, ddof=1) if len(series) > 1 else np.zeros(length)
    return [float(v) for v in means], [float(v) for v in stds]


def combined_progression_svg(
    groups: Sequence[Tuple[str, Sequence[TrialReport]]],
    *,
    width: int = 640,
    height: int = 400,
    margin: int = 60,
    title: str = "Mean best score by optimization step",
) -> str:
    """One mean line per method over a shaded ± std band, all on shared axes."""
    curves = [(label, *mean_progression(reports)) for label, reports in groups]
    curves = [(label, means, stds) for label, means, stds in curves if means]
    max_step = max((len(means) - 1 for _, means, _ in curves), default=0) or 1
    y_lo, y_hi = _y_range([m + d * sign for _, means, stds in curves for m, d in zip(means, stds) for sign in (-1, 1)])

    plot_w, plot_h = width - 2 * margin, height - 2 * margin

    def px(step: int) -> float:
        return margin + plot_w * step / max_step

    def py(value: float) -> float:
        return margin + plot_h * (y_hi - value) / (y_hi - y_lo)

    x0, y0, x1, y1 = margin, height - margin, width - margin, margin
    out = _svg_open(width, height, title, margin)
    out += _axes(x0, y0, x1, y1, xlabel="Step", ylabel="Mean best score", y_lo=y_lo, y_hi=y_hi)
    out += [_text(x0, y0 + 16, "0"), _text(x1, y0 + 16, str(max_step))]
    for i, (label, means, stds) in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        name = html.escape(label)
        upper = [f"{px(t):.2f},{py(m + d):.2f}" for t, (m, d) in enumerate(zip(means, stds))]
        lower = [f"{px(t):.2f},{py(m - d):.2f}" for t, (m, d) in reversed(list(enumerate(zip(means, stds))))]
        out.append(f'<polygon class="band" fill="{color}" fill-opacity="0.15" stroke="none" points="{" ".join(upper + lower)}"/>')
        points = " ".join(f"{px(t):.2f},{py(m):.2f}" for t, m in enumerate(means))
        out.append(f'<polyline data-method="{name}" fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
        out.append(_text(x1 - 4, y1 + 14 * (i + 1), name, anchor="end", extra=f' fill="{color}"'))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_progression_chart(reports: Sequence[TrialReport], out_dir: Path) -> Tuple[Path, Path]:
    """Write progression.csv and progression.svg into `out_dir`."""
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "progression.csv"
    svg_path = out_dir / "progression.svg"
    csv_path.write_text(progression_csv(reports), encoding="utf-8")
    svg_path.write_text(progression_svg(reports), encoding="utf-8")
    return csv_path, svg_path


def emit_comparison_charts(
    stats: Sequence[SummaryStats],
    groups: Sequence[Tuple[str, Sequence[TrialReport]]],
    out_dir: Path,
) -> Tuple[Path, Path]:
    """Write comparison.svg and comparison_progression.svg into `out_dir`."""
    out_dir.mkdir(parents=True, exist_ok=True)
    bars_path = out_dir / "comparison.svg"
    lines_path = out_dir / "comparison_progression.svg"
    bars_path.write_text(comparison_svg(stats), encoding="utf-8")
    lines_path.write_text(combined_progression_svg(groups), encoding="utf-8")
    return bars_path, lines_path


def trial_path(run_dir: Path, trial: int) -> Path:
    return run_dir / "trials" / f"trial-{trial:03d}.json"


def save_report(run_dir: Path, report: TrialReport) -> Path:
    path = trial_path(run_dir, report.trial)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path


def load_reports(run_dir: Path) -> List[TrialReport]:
    paths = sorted((run_dir / "trials").glob("trial-*.json"))
    if not paths:
        raise FileNotFoundError(f"no trial reports under {run_dir / 'trials'}")
    reports = [TrialReport.from_dict(json.loads(p.read_text(encoding="utf-8"))) for p in paths]
    # file names stop sorting numerically past trial 999
    return sorted(reports, key=lambda r: r.trial)


def write_reports(run_dir: Path, reports: Sequence[TrialReport]) -> List[SummaryStats]:
    """Write summary.md, summary.json and the progression chart for one run directory."""
    stats = summarize_groups(reports)
    (run_dir / "summary.md").write_text(emit_markdown_tables(stats), encoding="utf-8")
    (run_dir / "summary.json").write_text(
        json.dumps([s.to_dict() for s in stats], indent=2) + "\n", encoding="utf-8"
    )
    emit_progression_chart(reports, run_dir)
    return stats
