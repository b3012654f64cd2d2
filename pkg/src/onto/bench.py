"""Token benchmarks: per-run reports, crossover search, prompt files."""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .baselines import emit_json, emit_yaml
from .composition import CompositionReport, compose
from .datagen import DatasetSpec, generate
from .model import block_of
from .roles import Emitted
from .serializer import emit_onto
from .tokenizer import TokenizerModel, load_model

TASK_LINE = "Summarize this data in one sentence."
REPORT_FORMATS = ("json", "yaml", "onto")


def warm_prompt() -> str:
    return resources.files("onto").joinpath("assets/warm_prompt.txt").read_text(encoding="utf-8")


def emit_all(records: Sequence[dict], entity: str, json_style: str = "spaced",
             json_width: int = 2) -> dict[str, Emitted]:
    return {
        "json": emit_json(records, json_style, json_width),
        "yaml": emit_yaml(records),
        "onto": emit_onto(block_of(entity, records)),
    }


@dataclass(frozen=True)
class TokenReport:
    kind: str
    n_records: int
    seed: int
    json_style: str
    tokens: dict
    rank_file_sha256: str
    composition: dict = field(default_factory=dict)
    tool_version: str = __version__

    @property
    def reduction_vs_json(self) -> dict:
        base = self.tokens["json"]
        return {fmt: 1 - n / base for fmt, n in self.tokens.items() if fmt != "json"}

    def sort_key(self):
        return (self.kind, self.n_records, self.seed)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n_records": self.n_records,
            "seed": self.seed,
            "json_style": self.json_style,
            "tokens": dict(self.tokens),
            "reduction_vs_json": self.reduction_vs_json,
            "composition": {f: c.as_dict() for f, c in self.composition.items()},
            "rank_file_sha256": self.rank_file_sha256,
            "tool_version": self.tool_version,
        }


def run_cell(model: TokenizerModel, spec: DatasetSpec, json_style: str = "spaced",
             json_width: int = 2, with_composition: bool = True) -> TokenReport:
    records = generate(spec)
    emitted = emit_all(records, spec.entity, json_style, json_width)
    if with_composition:
        composition = {f: compose(model, f, e) for f, e in emitted.items()}
        tokens = {f: c.total for f, c in composition.items()}
    else:
        composition = {}
        tokens = {f: model.count_tokens(e.text) for f, e in emitted.items()}
    return TokenReport(spec.kind, spec.n_records, spec.seed, json_style, tokens,
                       model.sha256, composition)


_worker_model: TokenizerModel | None = None


def _init_worker(rank_file: str) -> None:
    global _worker_model
    _worker_model = load_model(rank_file)


def _run_in_worker(args) -> TokenReport:
    spec, json_style, json_width, with_composition = args
    return run_cell(_worker_model, spec, json_style, json_width, with_composition)


def bench_specs(kinds: Iterable[str], scales: Iterable[int], runs: int,
                base_seed: int = 1000) -> list[DatasetSpec]:
    """One spec per (kind, N, run); run ``r`` uses seed ``base_seed + r``."""
    return [
        DatasetSpec(kind, n, base_seed + run)
        for kind in kinds for n in scales for run in range(runs)
    ]


def bench(rank_file, specs: Sequence[DatasetSpec], json_style: str = "spaced",
          json_width: int = 2, workers: int = 1, with_composition: bool = True,
          model: TokenizerModel | None = None) -> list[TokenReport]:
    """Run every spec and return reports sorted by (kind, N, seed)."""
    jobs = [(spec, json_style, json_width, with_composition) for spec in specs]
    if workers <= 1 or len(jobs) <= 1:
        model = model or load_model(rank_file)
        reports = [run_cell(model, *job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(str(rank_file),)) as pool:
            reports = list(pool.map(_run_in_worker, jobs))
    return sorted(reports, key=TokenReport.sort_key)


def mean_reduction(reports: Iterable[TokenReport], kind: str, n_records: int,
                   fmt: str = "onto") -> float:
    values = [r.reduction_vs_json[fmt] for r in reports
              if r.kind == kind and r.n_records == n_records]
    if not values:
        raise KeyError((kind, n_records))
    return statistics.fmean(values)


def summarize(reports: Sequence[TokenReport]) -> str:
    """Plain-text table of mean tokens and reductions, plus drift across scales."""
    cells: dict = {}
    for r in reports:
        cells.setdefault((r.kind, r.n_records), []).append(r)
    lines = [
        f"{'dataset':<10}{'N':>7}{'runs':>6}{'JSON':>10}{'YAML':>10}{'ONTO':>10}"
        f"{'YAML red.':>11}{'ONTO red.':>11}"
    ]
    for (kind, n), rs in sorted(cells.items()):
        mean = {f: statistics.fmean(r.tokens[f] for r in rs) for f in REPORT_FORMATS}
        lines.append(
            f"{kind:<10}{n:>7}{len(rs):>6}{mean['json']:>10.0f}{mean['yaml']:>10.0f}"
            f"{mean['onto']:>10.0f}{100 * mean_reduction(rs, kind, n, 'yaml'):>10.1f}%"
            f"{100 * mean_reduction(rs, kind, n):>10.1f}%"
        )
    kinds = sorted({k for k, _ in cells})
    for kind in kinds:
        scales = sorted(n for k, n in cells if k == kind)
        if len(scales) > 1:
            series = [100 * mean_reduction(cells[kind, n], kind, n) for n in scales]
            steps = " -> ".join(f"{v:.1f}%" for v in series)
            lines.append(f"{kind}: ONTO reduction {steps} (drift {max(series) - min(series):.2f} pp)")
    return "\n".join(lines)


def crossover(model: TokenizerModel, kind: str, seed: int = 1000, max_n: int = 10,
              json_style: str = "spaced",
              json_width: int = 2) -> tuple[list[tuple[int, int, int]], int | None]:
    """Token pairs ``(N, json, onto)`` for N = 1..max_n and the first N where ONTO wins."""
    rows = []
    first = None
    for n in range(1, max_n + 1):
        spec = DatasetSpec(kind, n, seed)
        records = generate(spec)
        json_tokens = model.count_tokens(emit_json(records, json_style, json_width).text)
        onto_tokens = model.count_tokens(emit_onto(block_of(spec.entity, records)).text)
        rows.append((n, json_tokens, onto_tokens))
        if first is None and onto_tokens < json_tokens:
            first = n
    return rows, first


def analyze(model: TokenizerModel, spec: DatasetSpec, json_style: str = "spaced",
            json_width: int = 2) -> dict[str, CompositionReport]:
    emitted = emit_all(generate(spec), spec.entity, json_style, json_width)
    return {f: compose(model, f, e) for f, e in emitted.items()}


def build_prompt(data_text: str, warm: bool = False) -> str:
    parts = []
    if warm:
        parts.append(warm_prompt().rstrip("\n") + "\n\n")
    parts.append(data_text if data_text.endswith("\n") else data_text + "\n")
    parts.append(TASK_LINE + "\n")
    return "".join(parts)


def prompt_pack(spec: DatasetSpec, out_dir, warm: bool = False,
                json_style: str = "spaced", json_width: int = 2) -> list[Path]:
    """Write one ready-to-send prompt file per format; the warm prompt goes on ONTO only."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    emitted = emit_all(generate(spec), spec.entity, json_style, json_width)
    paths = []
    for fmt, e in emitted.items():
        use_warm = warm and fmt == "onto"
        suffix = "onto-warm" if use_warm else fmt
        path = out / f"{spec.kind}_{spec.n_records}_{spec.seed}.{suffix}.txt"
        path.write_text(build_prompt(e.text, use_warm), encoding="utf-8")
        paths.append(path)
    return paths
