"""Seeded fuzzing of certify with oracle cross-checks, and its report files."""

from __future__ import annotations

import csv
import io as _io
import random
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .coloring import (Certificate, NoSpanningOutTree, ProperColoring, Witness, certify,
                       validate_certificate)
from .generate import generate
from .io import emit_certificate, emit_instance
from .witness.extract import ExtractionStats
from .witness.subdivision import ORACLE_CAP, oracle_find_subdivision

P_CHOICES = (0.15, 0.3, 0.45, 0.6)
CSV_FIELDS = ("index", "model", "n", "p", "k", "gen_seed", "kind", "valid", "oracle",
              "agrees", "fallbacks", "diagnostic")


@dataclass
class TrialRecord:
    index: int
    model: str
    n: int
    p: float
    k: int
    gen_seed: int
    kind: str
    valid: bool
    oracle: str  # "found", "empty" or "skipped"
    agrees: bool
    fallbacks: int
    diagnostic: str = ""

    @property
    def failed(self) -> bool:
        return not (self.valid and self.agrees)


@dataclass
class FuzzReport:
    seed: int
    records: list[TrialRecord] = field(default_factory=list)
    counterexamples: dict[int, tuple[str, str]] = field(default_factory=dict)

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def kinds(self) -> Counter:
        return Counter(r.kind for r in self.records)

    @property
    def failures(self) -> list[TrialRecord]:
        return [r for r in self.records if r.failed]

    @property
    def fallbacks(self) -> int:
        return sum(r.fallbacks for r in self.records)

    def summary(self) -> str:
        kinds = self.kinds
        parts = ", ".join(f"{kind}={kinds[kind]}" for kind in sorted(kinds))
        return (f"trials={self.trials} {parts} failures={len(self.failures)} "
                f"fallbacks={self.fallbacks}")

    def to_csv(self) -> str:
        buf = _io.StringIO()
        wr = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        wr.writeheader()
        for r in sorted(self.records, key=lambda r: r.index):
            wr.writerow(asdict(r))
        return buf.getvalue()

    def write(self, outdir: str | Path, figure: bool = True) -> list[Path]:
        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        written = [out / "fuzz_trials.csv"]
        written[0].write_text(self.to_csv())
        for idx, (inst, cert) in sorted(self.counterexamples.items()):
            for suffix, text in ((".dig", inst), (".cert", cert)):
                path = out / f"counterexample_{idx}{suffix}"
                path.write_text(text)
                written.append(path)
        if figure:
            written.append(plot_report(self, out / "fuzz_summary.png"))
        return written


def run_trial(index: int, seed: int, n_max: int, k_set: Sequence[int],
              models: Sequence[str],
              corrupt: Callable[[Certificate], Certificate] | None = None,
              ) -> tuple[TrialRecord, tuple[str, str] | None]:
    rng = random.Random(f"{seed}:{index}")
    model = models[index % len(models)]
    k = k_set[(index // len(models)) % len(k_set)]
    n = rng.randint(1, n_max)
    p = rng.choice(P_CHOICES)
    gen_seed = rng.randrange(2**31)
    D = generate(model, n, gen_seed, p)
    stats = ExtractionStats()
    try:
        cert = certify(D, k, stats)
    except Exception as exc:  # recorded, never hidden
        rec = TrialRecord(index, model, n, p, k, gen_seed, "error", False, "skipped", False,
                          stats.fallbacks, f"{type(exc).__name__}: {exc}")
        return rec, (emit_instance(D, _comments(rec)), "")
    if corrupt is not None:
        cert = corrupt(cert)
    valid, diag = validate_certificate(D, k, cert)
    oracle = "skipped"
    agrees = True
    if not isinstance(cert, NoSpanningOutTree):
        found = oracle_find_subdivision(D, k) is not None
        oracle = "found" if found else "empty"
        if isinstance(cert, Witness) and not found:
            agrees, diag = False, "witness reported but oracle finds no subdivision"
        if not found and not isinstance(cert, ProperColoring):
            agrees, diag = False, "oracle finds no subdivision but no coloring was returned"
    rec = TrialRecord(index, model, n, p, k, gen_seed, cert.kind, valid, oracle, agrees,
                      stats.fallbacks, "" if valid and agrees else diag)
    replay = None
    if rec.failed:
        replay = (emit_instance(D, _comments(rec)), emit_certificate(cert))
    return rec, replay


def _comments(rec: TrialRecord) -> tuple[str, ...]:
    return (f"trial {rec.index} model={rec.model} n={rec.n} p={rec.p} seed={rec.gen_seed}",
            f"k={rec.k} kind={rec.kind} diagnostic={rec.diagnostic}")


def fuzz_run(trials: int, n_max: int, k_set: Sequence[int], seed: int,
             models: Sequence[str] = ("tree-plus", "gnp"),
             corrupt: Callable[[Certificate], Certificate] | None = None) -> FuzzReport:
    """Run ``trials`` seeded trials; the report is a pure function of the arguments."""
    if not 1 <= n_max <= ORACLE_CAP:
        raise ValueError(f"n_max must lie in 1..{ORACLE_CAP}, got {n_max}")
    if not k_set or any(k < 1 for k in k_set):
        raise ValueError("k_set must contain positive integers")
    report = FuzzReport(seed)
    for t in range(trials):
        rec, replay = run_trial(t, seed, n_max, tuple(k_set), tuple(models), corrupt)
        report.records.append(rec)
        if replay is not None:
            report.counterexamples[t] = replay
    return report


def plot_report(report: FuzzReport, path: str | Path) -> Path:
    """Certificate kinds per vertex count, and oracle hit rate per k."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    ns = sorted({r.n for r in report.records})
    kinds = ("coloring", "witness", "no-spanning-out-tree", "error")
    colors = ("#4c72b0", "#dd8452", "#8c8c8c", "#c44e52")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    bottom = [0] * len(ns)
    for kind, col in zip(kinds, colors):
        counts = [sum(1 for r in report.records if r.n == n and r.kind == kind) for n in ns]
        if any(counts):
            ax1.bar(ns, counts, bottom=bottom, color=col, label=kind)
            bottom = [b + c for b, c in zip(bottom, counts)]
    ax1.set_xlabel("vertices")
    ax1.set_ylabel("trials")
    ax1.set_title("certificate kind")
    ax1.set_ylim(0, max(bottom, default=0) * 1.3 + 1)
    ax1.legend(frameon=False, fontsize=8, loc="upper left", ncol=2)
    for k in sorted({r.k for r in report.records}):
        xs, ys = [], []
        for n in ns:
            rs = [r for r in report.records if r.n == n and r.k == k and r.oracle != "skipped"]
            if rs:
                xs.append(n)
                ys.append(sum(r.oracle == "found" for r in rs) / len(rs))
        ax2.plot(xs, ys, marker="o", label=f"k={k}")
    ax2.set_xlabel("vertices")
    ax2.set_ylabel("fraction with a subdivision")
    ax2.set_ylim(-0.02, 1.02)
    ax2.set_title("oracle hits (rooted instances)")
    ax2.legend(frameon=False, fontsize=8)
    for ax in (ax1, ax2):
        ax.spines[["top", "right"]].set_visible(False)
    fig.suptitle(report.summary(), fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
