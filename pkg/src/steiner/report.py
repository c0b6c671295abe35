"""Per-system analysis reports: JSON, delimited summaries, figures.

A report is an ordered dict with one section per analysis; sections that
were not requested are marked "skipped" rather than defaulted.  The JSON
rendering keeps insertion order, so identical invocations produce
byte-identical output (timings can be suppressed for diffing).

The figure path renders, per system, a configuration census bar chart
and a cycle-structure chart next to the CSV summary.
"""

from __future__ import annotations

import csv
import json
import time
from pathlib import Path

from .core import TripleSystem, encode_compact
from . import colouring as col_mod
from . import configurations as conf_mod
from . import resolvability as res_mod
from . import structure as struct_mod
from .isomorphism import automorphism_group

OPS = ("aut", "configs", "resolvability", "colouring", "cycles",
       "independent", "ec")
DEFAULT_OPS = ("aut", "configs", "cycles", "independent", "ec")

CSV_COLUMNS = (
    "id", "v", "aut_order", "pasch", "mitre", "hexagon", "crown", "grid",
    "prism", "parallel_classes", "resolutions", "kts", "chromatic_number",
    "profiles", "balanced", "cycle_lists", "max_independent_set", "ec2", "ec3",
)


def expand_ops(spec: str) -> tuple[str, ...]:
    if not spec:
        return DEFAULT_OPS
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if "all" in names:
        return OPS
    for n in names:
        if n not in OPS:
            raise ValueError(f"unknown op {n!r}; choose from {', '.join(OPS)} or all")
    return tuple(n for n in OPS if n in names)


def analyze_system(sys: TripleSystem, ops=DEFAULT_OPS, *, label: str = "",
                   budget: int | None = None, rainbow: bool = False,
                   double_res: bool = False, timings: bool = True) -> dict:
    report: dict = {
        "id": label,
        "v": sys.v,
        "block_count": len(sys.blocks),
        "code": encode_compact(sys),
    }
    stamps: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        stamps[name] = round(time.perf_counter() - t0, 4)
        return out

    if "aut" in ops:
        group = timed("aut", lambda: automorphism_group(sys))
        report["aut_order"] = group.order
        report["orbit_sizes"] = list(group.orbit_sizes())
    else:
        report["aut_order"] = "skipped"

    if "configs" in ops:
        report["configs"] = timed("configs", lambda: conf_mod.census(sys))
    else:
        report["configs"] = "skipped"

    if "resolvability" in ops and sys.v % 6 == 3:
        classes = timed("parallel_classes", lambda: res_mod.parallel_classes(sys))
        report["parallel_class_count"] = len(classes)
        res = timed("resolutions",
                    lambda: res_mod.resolutions(sys, classes=classes))
        report["resolution_count"] = len(res)
        report["kts_count"] = timed("kts", lambda: res_mod.kts_count(sys, res))
        if double_res:
            try:
                dr = timed("double_res",
                           lambda: res_mod.is_doubly_resolvable(
                               sys, budget or 10**8))
            except res_mod.BudgetExceededError:
                dr = "budget-exceeded"
            report["doubly_resolvable"] = dr
        else:
            report["doubly_resolvable"] = "skipped"
    else:
        report["parallel_class_count"] = "skipped"
        report["resolution_count"] = "skipped"
        report["kts_count"] = "skipped"
        report["doubly_resolvable"] = "skipped"

    if "colouring" in ops:
        report["chromatic_number"] = timed(
            "chromatic", lambda: col_mod.chromatic_number(sys, budget))
        if report["chromatic_number"] <= 3:
            profiles = timed("profiles",
                             lambda: col_mod.achievable_profiles(sys, 3, budget))
            report["profiles"] = sorted(list(p) for p in profiles)
            eq = col_mod.equitable_profile(sys.v, 3)
            report["balanced"] = profiles == {eq}
        else:
            report["profiles"] = []
            report["balanced"] = False
        if rainbow and report["chromatic_number"] == 3 and sys.v % 6 == 3:
            ra = timed("rainbow",
                       lambda: col_mod.rainbow_parallel_analysis(sys, budget))
            report["rainbow_parallel_class"] = _flag(ra.parallel_class_rainbow)
            report["rainbow_non_parallel"] = _flag(ra.non_parallel_rainbow)
        else:
            report["rainbow_parallel_class"] = "skipped"
            report["rainbow_non_parallel"] = "skipped"
    else:
        for key in ("chromatic_number", "profiles", "balanced",
                    "rainbow_parallel_class", "rainbow_non_parallel"):
            report[key] = "skipped"

    if "cycles" in ops:
        cc = timed("cycles", lambda: struct_mod.cycle_census(sys))
        report["cycle_census"] = {
            ",".join(str(n) for n in k): cc.counts[k] for k in sorted(cc.counts)
        }
        report["uniform"] = cc.uniform
        report["perfect"] = cc.perfect
    else:
        report["cycle_census"] = "skipped"
        report["uniform"] = "skipped"
        report["perfect"] = "skipped"

    if "independent" in ops:
        size, witness = timed("independent",
                              lambda: struct_mod.max_independent_set(sys))
        report["max_independent_set"] = size
        report["independent_witness"] = list(witness)
    else:
        report["max_independent_set"] = "skipped"
        report["independent_witness"] = "skipped"

    if "ec" in ops:
        big = struct_mod.block_intersection_graph(sys)
        report["ec2"] = timed("ec2",
                              lambda: struct_mod.is_n_existentially_closed(big, 2))
        report["ec3"] = timed("ec3",
                              lambda: struct_mod.is_n_existentially_closed(big, 3))
    else:
        report["ec2"] = "skipped"
        report["ec3"] = "skipped"

    if timings:
        report["timings"] = stamps
    return report


def _flag(value):
    return "budget-exceeded" if value is None else value


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)


def write_csv(reports: list[dict], path: str | Path) -> None:
    """One delimited row per system, scalar columns only."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rep in reports:
            configs = rep.get("configs")
            conf = configs if isinstance(configs, dict) else {}
            profiles = rep.get("profiles")
            cycles = rep.get("cycle_census")
            writer.writerow([
                rep.get("id", ""),
                rep.get("v", ""),
                rep.get("aut_order", ""),
                conf.get("pasch", ""), conf.get("mitre", ""),
                conf.get("hexagon", ""), conf.get("crown", ""),
                conf.get("grid", ""), conf.get("prism", ""),
                rep.get("parallel_class_count", ""),
                rep.get("resolution_count", ""),
                rep.get("kts_count", ""),
                rep.get("chromatic_number", ""),
                ";".join("-".join(str(x) for x in p) for p in profiles)
                if isinstance(profiles, list) else profiles,
                rep.get("balanced", ""),
                len(cycles) if isinstance(cycles, dict) else cycles,
                rep.get("max_independent_set", ""),
                rep.get("ec2", ""), rep.get("ec3", ""),
            ])


def render_figures(report: dict, directory: str | Path) -> list[Path]:
    """Write PNG charts for one analyzed system; returns the paths."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    label = report.get("id") or "system"
    written: list[Path] = []

    configs = report.get("configs")
    if isinstance(configs, dict):
        fig, ax = plt.subplots(figsize=(6, 3.2))
        kinds = list(configs)
        ax.bar(kinds, [configs[k] for k in kinds], color="#4878a8")
        ax.set_ylabel("instances")
        ax.set_title(f"{label}: configuration census")
        for i, k in enumerate(kinds):
            ax.text(i, configs[k], str(configs[k]), ha="center", va="bottom",
                    fontsize=8)
        fig.tight_layout()
        path = directory / f"{label}_configs.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    cycles = report.get("cycle_census")
    if isinstance(cycles, dict):
        fig, ax = plt.subplots(figsize=(6, 3.2))
        keys = list(cycles)
        ax.bar(keys, [cycles[k] for k in keys], color="#a85448")
        ax.set_ylabel("point pairs")
        ax.set_title(f"{label}: cycle structure")
        ax.tick_params(axis="x", rotation=45)
        fig.tight_layout()
        path = directory / f"{label}_cycles.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
