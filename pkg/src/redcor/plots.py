"""Report rendering: a delimited summary plus matplotlib figures.

The battery report runs the predicate and functor towers over a seeded
family of modules and ideals, writes one CSV row per instance, and
renders the summary figures next to it.
"""

from __future__ import annotations

import csv
import os
import random

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .battery import random_cyclic_ideal, random_presentation
from .duality import semigroup_table_check
from .modules import describe_module
from .torsion import completion, is_complete, is_coreduced, is_reduced, is_torsion, torsion_part

CSV_COLUMNS = [
    "instance", "module", "ideal", "reduced", "coreduced", "torsion",
    "complete", "torsion_exponent", "completion_exponent",
    "torsion_part", "completion_part",
]


def battery_rows(ring, count: int = 40, seed: int = 0, bound: int = 16):
    rng = random.Random(seed)
    rows = []
    for k in range(count):
        m = random_presentation(rng, ring)
        i = random_cyclic_ideal(rng, ring)
        g = torsion_part(m, i, bound)
        c = completion(m, i, bound)
        rows.append({
            "instance": k,
            "module": describe_module(m),
            "ideal": str(i),
            "reduced": is_reduced(m, i),
            "coreduced": is_coreduced(m, i),
            "torsion": is_torsion(m, i, bound),
            "complete": is_complete(m, i, bound).status,
            "torsion_exponent": g.exponent,
            "completion_exponent": c.exponent if c.stabilized else "",
            "torsion_part": describe_module(g.module),
            "completion_part": describe_module(c.module) if c.stabilized else "",
            "_m": m,
            "_i": i,
        })
    return rows


def write_csv(rows, path: str):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def render_figures(rows, outdir: str) -> list[str]:
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    exponents = [row["torsion_exponent"] for row in rows]
    bins = range(1, max(exponents) + 2)
    ax.hist(exponents, bins=bins, align="left", rwidth=0.8, color="#4878d0")
    ax.set_xlabel("stabilization exponent of the annihilator tower")
    ax.set_ylabel("instances")
    ax.set_title("Torsion tower stabilization")
    path = os.path.join(outdir, "stabilization.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    labels = ["reduced", "coreduced", "torsion", "complete", "tor+red", "com+cor"]
    counts = [
        sum(1 for r in rows if r["reduced"]),
        sum(1 for r in rows if r["coreduced"]),
        sum(1 for r in rows if r["torsion"]),
        sum(1 for r in rows if r["complete"] == "true"),
        sum(1 for r in rows if r["torsion"] and r["reduced"]),
        sum(1 for r in rows if r["complete"] == "true" and r["coreduced"]),
    ]
    ax.bar(labels, counts, color="#6acc64")
    ax.set_ylabel("instances")
    ax.set_title("Predicate class membership")
    ax.tick_params(axis="x", rotation=20)
    path = os.path.join(outdir, "classes.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    # semigroup table of the first instance, cells annotated with verdicts
    m, i = rows[0]["_m"], rows[0]["_i"]
    report = semigroup_table_check(m, i)
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.axis("off")
    cell_text = [
        ["", "H = Hom(R/I, -)", "T = R/I (x) -"],
        ["H", _mark(report.cells[0].verdict) + " H",
         _mark(report.cells[2].verdict) + " T"],
        ["T", _mark(report.cells[1].verdict) + " H",
         _mark(report.cells[3].verdict) + " T"],
    ]
    table = ax.table(cellText=cell_text, loc="center", cellLoc="center")
    table.scale(1, 1.6)
    ax.set_title(f"Composition table on {rows[0]['module']}, I = {rows[0]['ideal']}")
    path = os.path.join(outdir, "semigroup.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    return paths


def _mark(ok: bool) -> str:
    return "ok:" if ok else "FAIL:"


def run_report(ring, outdir: str, count: int = 40, seed: int = 0) -> dict:
    os.makedirs(outdir, exist_ok=True)
    rows = battery_rows(ring, count=count, seed=seed)
    csv_path = os.path.join(outdir, "report.csv")
    write_csv(rows, csv_path)
    figures = render_figures(rows, outdir)
    return {"csv": csv_path, "figures": figures, "instances": len(rows)}
