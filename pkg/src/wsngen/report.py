"""Batch summary reports and agreement checks against the bundled goldens.

Three report families:

* ``batch_report`` regenerates deployments for a seed list and tabulates
  derived constants, isolated-node counts per transmission range, and the
  statistical verdicts for both deployment modes.
* ``reference_agreement_report`` reruns the golden configuration and counts,
  cell by cell, where this implementation lands on the recorded results.
* ``packet_diff_report`` compares every traffic generator (plus the
  reconstructed chain below) against the recorded packet matrices.
"""

from __future__ import annotations

import json
import math
from typing import Optional, Sequence

from . import _reference as ref
from .deployment import deploy_grid, deploy_nongrid
from .generator import DEFAULT_TABLE, EXTENDED_TABLE, derive_constants, validate_table
from .topology import build_graph, isolated_count
from .traffic import (
    traffic_exponential_recurrence,
    traffic_exponential_transform,
    traffic_uniform,
)
from .validation import SuiteConfig, aggregate_verdicts, run_suite

MODES = ("non-grid", "grid")
VERDICT_TESTS = ("ks", "chi2", "autocorrelation")
_DEPLOYERS = {"non-grid": deploy_nongrid, "grid": deploy_grid}


def batch_row(
    seed: int,
    node_count: int = 100,
    area: float = 100.0,
    ranges: Sequence[float] = (10.0, 15.0, 20.0),
    *,
    config: Optional[SuiteConfig] = None,
    table: Sequence[float] = DEFAULT_TABLE,
    epsilon: float = 0.0,
) -> dict:
    """One row: seed, derived constants, per-mode counts and verdicts."""
    a, c = derive_constants(seed, table)
    row: dict = {"seed": seed, "a": a, "c": c, "modes": {}}
    for mode in MODES:
        dep = _DEPLOYERS[mode](node_count, area, seed, table=table)
        iso = tuple(isolated_count(build_graph(dep, tr, epsilon)) for tr in ranges)
        verdicts = aggregate_verdicts(run_suite(dep, config))
        row["modes"][mode] = {
            "isolated": iso,
            "ks": verdicts["ks"],
            "chi2": verdicts["chi2"],
            "autocorrelation": verdicts["autocorrelation"],
            "circular": verdicts["circular"],
        }
    return row


def batch_report(
    seeds: Sequence[int],
    node_count: int = 100,
    area: float = 100.0,
    ranges: Sequence[float] = (10.0, 15.0, 20.0),
    *,
    config: Optional[SuiteConfig] = None,
    table: Sequence[float] = DEFAULT_TABLE,
    epsilon: float = 0.0,
) -> list[dict]:
    """Rows for each distinct seed, ascending, so output is deterministic."""
    if not seeds:
        raise ValueError("seed list must be non-empty")
    return [
        batch_row(s, node_count, area, ranges, config=config, table=table, epsilon=epsilon)
        for s in sorted(set(seeds))
    ]


def render_report_json(rows: Sequence[dict], ranges: Sequence[float] = (10.0, 15.0, 20.0)) -> str:
    payload = {
        "kind": "batch-report",
        "ranges": list(ranges),
        "rows": [
            {
                "seed": r["seed"],
                "a": r["a"],
                "c": r["c"],
                "modes": {
                    mode: {
                        "isolated": list(r["modes"][mode]["isolated"]),
                        "ks": r["modes"][mode]["ks"],
                        "chi2": r["modes"][mode]["chi2"],
                        "autocorrelation": r["modes"][mode]["autocorrelation"],
                        "circular": r["modes"][mode]["circular"],
                    }
                    for mode in MODES
                },
            }
            for r in rows
        ],
    }
    return json.dumps(payload, indent=2)


def render_report_text(rows: Sequence[dict], ranges: Sequence[float] = (10.0, 15.0, 20.0)) -> str:
    """Fixed-width table: constants, then per-mode counts and verdicts."""
    tr_heads = ["TR=%g" % tr for tr in ranges]
    mode_heads = tr_heads + ["KS-Test", "Chi2Test", "Autocorrelation Test"]
    header = ["X[0]", "a value", "c value"] + mode_heads * len(MODES)

    body = []
    for r in rows:
        cells = [str(r["seed"]), "%.6f" % r["a"], "%.6f" % r["c"]]
        for mode in MODES:
            m = r["modes"][mode]
            cells.extend(str(n) for n in m["isolated"])
            cells.extend([m["ks"], m["chi2"], m["autocorrelation"]])
        body.append(cells)

    widths = [len(h) for h in header]
    for cells in body:
        for i, cell in enumerate(cells):
            widths[i] = max(widths[i], len(cell))

    def fmt(cells):
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()

    # group banner centred over each mode's column block
    per_mode = len(mode_heads)
    banner_cells = ["", "", ""]
    group_spans = []
    for mi, mode in enumerate(MODES):
        cols = widths[3 + mi * per_mode: 3 + (mi + 1) * per_mode]
        group_spans.append((mode, sum(cols) + 2 * (len(cols) - 1)))
    banner = "  ".join(c.ljust(w) for c, w in zip(banner_cells, widths[:3]))
    for mode, span in group_spans:
        banner += "  " + mode.center(span)
    lines = [banner.rstrip(), fmt(header), "-" * len(fmt(header))]
    lines.extend(fmt(cells) for cells in body)
    return "\n".join(lines) + "\n"


def reference_agreement_report(*, config: Optional[SuiteConfig] = None) -> dict:
    """Rerun the golden configuration and tally agreement cell by cell.

    The recorded results omit the deployment size they were produced with, so
    this report treats them as targets: every isolated-node cell and verdict
    is compared and counted, never asserted.
    """
    rows = batch_report(
        ref.GOLDEN_SEEDS,
        ref.REFERENCE_NODE_COUNT,
        ref.REFERENCE_AREA,
        ref.REFERENCE_RANGES,
        config=config,
    )
    per_seed = []
    iso_hits = 0
    verdict_hits = dict.fromkeys(VERDICT_TESTS, 0)
    constants_hits = 0
    for row in rows:
        seed = row["seed"]
        exp_iso = ref.GOLDEN_ISOLATED[seed]
        exp_verd = ref.GOLDEN_VERDICTS[seed]
        exp_a, exp_c = ref.GOLDEN_CONSTANTS[seed]
        const_ok = round(row["a"], 6) == exp_a and round(row["c"], 6) == exp_c
        constants_hits += const_ok
        detail = {"seed": seed, "constants_match": const_ok, "modes": {}}
        for mi, mode in enumerate(MODES):
            got = row["modes"][mode]
            iso_match = tuple(int(g == e) for g, e in zip(got["isolated"], exp_iso[mi]))
            iso_hits += sum(iso_match)
            verdict_match = {}
            for ti, test in enumerate(VERDICT_TESTS):
                ok = got[test] == exp_verd[mi][ti]
                verdict_match[test] = bool(ok)
                verdict_hits[test] += ok
            detail["modes"][mode] = {
                "isolated_expected": exp_iso[mi],
                "isolated_actual": got["isolated"],
                "isolated_match": iso_match,
                "verdicts_expected": exp_verd[mi],
                "verdicts_actual": tuple(got[t] for t in VERDICT_TESTS),
                "verdicts_match": verdict_match,
            }
        per_seed.append(detail)
    n = len(rows)
    cells = n * len(MODES) * len(ref.REFERENCE_RANGES)
    return {
        "node_count": ref.REFERENCE_NODE_COUNT,
        "area": ref.REFERENCE_AREA,
        "ranges": ref.REFERENCE_RANGES,
        "rows": per_seed,
        "totals": {
            "constants": {"matched": constants_hits, "of": n},
            "isolated_cells": {"matched": iso_hits, "of": cells},
            "ks_verdicts": {"matched": verdict_hits["ks"], "of": n * len(MODES)},
            "chi2_verdicts": {"matched": verdict_hits["chi2"], "of": n * len(MODES)},
            "autocorrelation_verdicts": {
                "matched": verdict_hits["autocorrelation"],
                "of": n * len(MODES),
            },
        },
    }


def render_agreement_text(result: dict) -> str:
    lines = [
        "Reference agreement (n=%d, area=%g, ranges=%s)"
        % (result["node_count"], result["area"], ",".join("%g" % t for t in result["ranges"])),
        "",
    ]
    for detail in result["rows"]:
        lines.append("seed %-5d constants %s" % (detail["seed"], "ok" if detail["constants_match"] else "DIFF"))
        for mode in MODES:
            m = detail["modes"][mode]
            lines.append(
                "  %-8s isolated %s vs %s  verdicts %s vs %s"
                % (
                    mode,
                    "/".join(str(v) for v in m["isolated_actual"]),
                    "/".join(str(v) for v in m["isolated_expected"]),
                    "/".join(v[:3] for v in m["verdicts_actual"]),
                    "/".join(v[:3] for v in m["verdicts_expected"]),
                )
            )
    t = result["totals"]
    lines.append("")
    lines.append("constants matched        %d/%d" % (t["constants"]["matched"], t["constants"]["of"]))
    lines.append("isolated cells matched   %d/%d" % (t["isolated_cells"]["matched"], t["isolated_cells"]["of"]))
    for test in ("ks", "chi2", "autocorrelation"):
        k = "%s_verdicts" % test
        lines.append("%-24s %d/%d" % (test + " verdicts matched", t[k]["matched"], t[k]["of"]))
    return "\n".join(lines) + "\n"


def reconstruct_reference_chain(
    p_min: float = ref.REFERENCE_P_MIN,
    p_max: float = ref.REFERENCE_P_MAX,
    count: int = ref.REFERENCE_TRAFFIC_NODES * ref.REFERENCE_TRAFFIC_SLOTS,
    *,
    table: Sequence[float] = EXTENDED_TABLE,
) -> tuple[list[float], list[float]]:
    """Best reconstruction found for the recorded packet matrices.

    Neither packaged generator reproduces them cell for cell.  A search over
    recurrence variants landed on this one: a single-application chain with
    both constants indexed from floor(p_min) and the start value from
    floor(p_max),

        x[k] = (a * x[k-1] + c) mod span + p_min

    where the uniform block reads x offset by two steps and the exponential
    block is the inverse-CDF transform of x offset by one step.  With the
    full-precision constant table it matches the recorded matrices on a
    15-cell (uniform) / 18-cell (exponential) prefix at printed precision,
    then drifts: the map amplifies float error by ~a per step, so agreement
    beyond a short prefix would need the bit-exact constants of the original
    run.  Returns (uniform_cells, exponential_cells), flattened row-major.
    """
    values = validate_table(table)
    size = len(values)
    span = p_max - p_min
    a = values[int(p_min) % size]
    c = values[(int(p_min) + size // 2) % size]
    x = values[int(p_max) % size]
    chain = [x]
    for _ in range(count + 2):
        x = (a * x + c) % span + p_min
        chain.append(x)
    uniform = chain[2:count + 2]
    exponential = [
        (-math.log(1.0 - y / p_max)) % span + p_min for y in chain[1:count + 1]
    ]
    return uniform, exponential


def _diff_entry(name: str, flat: Sequence[float], reference, tol: float, p_min: float, p_max: float) -> dict:
    ref_flat = [x for row in reference for x in row]
    slots = len(reference[0])
    matched = 0
    prefix = 0
    prefix_open = True
    max_diff = 0.0
    first_mismatch = None
    for i, (got, expected) in enumerate(zip(flat, ref_flat)):
        diff = abs(got - expected)
        max_diff = max(max_diff, diff)
        # a cell agrees when it rounds to the recorded two-decimal value
        if diff <= tol + 1e-12:
            matched += 1
            if prefix_open:
                prefix += 1
            continue
        prefix_open = False
        if first_mismatch is None:
            first_mismatch = {
                "index": i,
                "node": i // slots + 1,
                "slot": i % slots + 1,
                "expected": expected,
                "actual": got,
            }
    return {
        "name": name,
        "cells": len(ref_flat),
        "in_range": all(p_min <= v < p_max for v in flat),
        "cells_matched": matched,
        "prefix_matched": prefix,
        "max_abs_diff": max_diff,
        "first_mismatch": first_mismatch,
    }


def packet_diff_report(*, tol: float = 0.005, table_full: Sequence[float] = EXTENDED_TABLE) -> dict:
    """Diff every generator against the recorded 80 x 5 packet matrices."""
    n = ref.REFERENCE_TRAFFIC_NODES
    t = ref.REFERENCE_TRAFFIC_SLOTS
    p1, p2 = ref.REFERENCE_P_MIN, ref.REFERENCE_P_MAX
    uniform = traffic_uniform(n, t, p1, p2)
    exp_transform = traffic_exponential_transform(n, t, p1, p2)
    exp_recurrence = traffic_exponential_recurrence(n, t, p1, p2)
    recon_uniform, recon_exp = reconstruct_reference_chain(p1, p2, n * t, table=table_full)
    entries = [
        _diff_entry("uniform", uniform.flatten(), ref.REFERENCE_UNIFORM, tol, p1, p2),
        _diff_entry(
            "exponential-transform", exp_transform.flatten(), ref.REFERENCE_EXPONENTIAL, tol, p1, p2
        ),
        _diff_entry(
            "exponential-recurrence", exp_recurrence.flatten(), ref.REFERENCE_EXPONENTIAL, tol, p1, p2
        ),
        _diff_entry("reconstructed/uniform", recon_uniform, ref.REFERENCE_UNIFORM, tol, p1, p2),
        _diff_entry("reconstructed/exponential", recon_exp, ref.REFERENCE_EXPONENTIAL, tol, p1, p2),
    ]
    return {
        "p_min": p1,
        "p_max": p2,
        "nodes": n,
        "slots": t,
        "tolerance": tol,
        "entries": entries,
        "note": (
            "Recorded matrices match none of the documented recurrences cell-for-cell; "
            "the reconstructed chain gives the longest prefix agreement. "
            "Range containment, not cell equality, is the contract here."
        ),
    }


def render_packet_diff_text(result: dict) -> str:
    lines = [
        "Packet matrix diff: %d nodes x %d slots on [%g, %g), tolerance %g"
        % (result["nodes"], result["slots"], result["p_min"], result["p_max"], result["tolerance"]),
        "",
        "%-28s %8s %9s %7s %12s" % ("generator", "in-range", "matched", "prefix", "max |diff|"),
    ]
    for e in result["entries"]:
        lines.append(
            "%-28s %8s %5d/%d %7d %12.6f"
            % (
                e["name"],
                "yes" if e["in_range"] else "NO",
                e["cells_matched"],
                e["cells"],
                e["prefix_matched"],
                e["max_abs_diff"],
            )
        )
        if e["first_mismatch"] is not None:
            fm = e["first_mismatch"]
            lines.append(
                "    first mismatch at node %d slot %d: %.6f vs recorded %.2f"
                % (fm["node"], fm["slot"], fm["actual"], fm["expected"])
            )
    lines.append("")
    lines.append(result["note"])
    return "\n".join(lines) + "\n"
