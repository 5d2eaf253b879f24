"""Packet-traffic matrix generation.

Three generators, all bounded to [p_min, p_max):

* uniform: a driver chain seeded from the constant table by floor(p_max),
  advanced once per matrix entry, row-major, with the state carried across
  node rows (no per-node reseed unless asked).
* exponential-transform: the same driver chain pushed through the inverse
  exponential CDF, then wrapped back into range.
* exponential-recurrence: a t x t working table filled by a diagonal
  recurrence whose constants derive from floor(p_min) and the seed cell.

The working table for the recurrence starts zeroed except its seed cell;
until the cyclic indices revisit a cell, reads of untouched cells see 0 and
the produced value is (c mod span) + p_min. That is part of the contract,
not a bug.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .generator import DEFAULT_TABLE, GeneratorParams, validate_table

DISTRIBUTIONS = ("uniform", "exponential-transform", "exponential-recurrence")


@dataclass(frozen=True)
class TrafficMatrix:
    values: tuple[tuple[float, ...], ...]
    p_min: float
    p_max: float
    distribution: str
    params: GeneratorParams
    rate: Optional[float] = None

    @property
    def node_count(self) -> int:
        return len(self.values)

    @property
    def slot_count(self) -> int:
        return len(self.values[0]) if self.values else 0

    def flatten(self) -> tuple[float, ...]:
        return tuple(v for row in self.values for v in row)


def _check_traffic_args(n: int, t: int, p_min: float, p_max: float) -> None:
    if n < 1 or t < 1:
        raise ValueError("n and t must be >= 1")
    if p_min < 0:
        raise ValueError("p_min must be >= 0")
    if p_max <= p_min:
        raise ValueError("p_max must exceed p_min")


def _uniform_driver(p_min: float, p_max: float, table: Sequence[float]):
    """Seed and constants for the uniform chain.

    The seed is table[floor(p_max) % L]; the constants then derive from the
    floored seed value itself.
    """
    values = validate_table(table)
    size = len(values)
    offset = size // 2
    x0 = values[int(math.floor(p_max)) % size]
    a = values[int(math.floor(x0)) % size]
    c = values[(int(math.floor(x0)) + offset) % size]
    return x0, a, c


def traffic_uniform(
    n: int,
    t: int,
    p_min: float,
    p_max: float,
    *,
    table: Sequence[float] = DEFAULT_TABLE,
    reseed_per_node: bool = False,
) -> TrafficMatrix:
    """n x t uniform matrix via x <- (a*(a*x + c)) mod span + p_min.

    One running scalar drives the whole matrix; entry (i, j) is the chain
    value after its (i*t + j + 1)-th advance. reseed_per_node restarts the
    chain from the seed at the start of every row, for experiments only.
    """
    _check_traffic_args(n, t, p_min, p_max)
    span = p_max - p_min
    x0, a, c = _uniform_driver(p_min, p_max, table)
    params = GeneratorParams(seed=x0, a=a, c=c, modulus=span, degenerate_ok=True)
    rows = []
    x = x0
    for _ in range(n):
        if reseed_per_node:
            x = x0
        row = []
        for _ in range(t):
            x = (a * (a * x + c)) % span + p_min
            row.append(x)
        rows.append(tuple(row))
    return TrafficMatrix(values=tuple(rows), p_min=float(p_min), p_max=float(p_max),
                         distribution="uniform", params=params)


def exp_inverse_transform(r, rate: float):
    """Inverse exponential CDF: -ln(1-r)/rate.

    Accepts scalars or numpy arrays. r must lie in [0, 1); monotone in r and
    0 at r = 0.
    """
    if rate <= 0:
        raise ValueError("rate must be positive")
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0) or np.any(arr >= 1):
        raise ValueError("r must lie in [0, 1)")
    out = -np.log1p(-arr) / rate
    if np.isscalar(r) or arr.ndim == 0:
        return float(out)
    return out


_LOG_ARG_FLOOR = 1e-12


def exp_entry_from_uniform(x: float, p_min: float, p_max: float, rate: float) -> float:
    """Map one driver-chain value in [p_min, p_max) to an exponential entry.

    Computes (-1/rate) * ln(1 - x/p_max), wrapped by mod span back into
    [p_min, p_max). The log argument is clamped below at 1e-12; x < p_max by
    construction but float rounding could graze the boundary.
    """
    span = p_max - p_min
    arg = 1.0 - x / p_max
    if arg < _LOG_ARG_FLOOR:
        arg = _LOG_ARG_FLOOR
    return (-math.log(arg) / rate) % span + p_min


def traffic_exponential_transform(
    n: int,
    t: int,
    p_min: float,
    p_max: float,
    rate: float = 1.0,
    *,
    table: Sequence[float] = DEFAULT_TABLE,
    reseed_per_node: bool = False,
) -> TrafficMatrix:
    """Exponential matrix: the uniform driver chain through the inverse CDF.

    Each entry is exp_entry_from_uniform applied to the freshly advanced
    chain value, so the driver state is identical to traffic_uniform's.
    """
    _check_traffic_args(n, t, p_min, p_max)
    if rate <= 0:
        raise ValueError("rate must be positive")
    span = p_max - p_min
    x0, a, c = _uniform_driver(p_min, p_max, table)
    params = GeneratorParams(seed=x0, a=a, c=c, modulus=span, degenerate_ok=True)
    rows = []
    x = x0
    for _ in range(n):
        if reseed_per_node:
            x = x0
        row = []
        for _ in range(t):
            x = (a * (a * x + c)) % span + p_min
            row.append(exp_entry_from_uniform(x, p_min, p_max, rate))
        rows.append(tuple(row))
    return TrafficMatrix(values=tuple(rows), p_min=float(p_min), p_max=float(p_max),
                         distribution="exponential-transform", params=params, rate=float(rate))


def traffic_exponential_recurrence(
    n: int,
    t: int,
    p_min: float,
    p_max: float,
    *,
    table: Sequence[float] = DEFAULT_TABLE,
) -> TrafficMatrix:
    """Exponential-regime matrix from the diagonal t x t recurrence.

    Seed cell W[0][0] = table[floor(p_max) % L]; a = table[floor(p_min) % L];
    c = table[(floor(seed) + L//2) % L]. For i in 1..n, j in 1..t:

        v = (a * W[(i-1) % t][(j-1) % t] + c) mod span + p_min
        W[i % t][j % t] = v

    and v is emitted in loop order. Cells never written read as 0.
    """
    _check_traffic_args(n, t, p_min, p_max)
    values = validate_table(table)
    size = len(values)
    offset = size // 2
    span = p_max - p_min
    x00 = values[int(math.floor(p_max)) % size]
    a = values[int(math.floor(p_min)) % size]
    c = values[(int(math.floor(x00)) + offset) % size]
    params = GeneratorParams(seed=x00, a=a, c=c, modulus=span, degenerate_ok=True)

    work = [[0.0] * t for _ in range(t)]
    work[0][0] = x00
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, t + 1):
            v = (a * work[(i - 1) % t][(j - 1) % t] + c) % span + p_min
            work[i % t][j % t] = v
            row.append(v)
        rows.append(tuple(row))
    return TrafficMatrix(values=tuple(rows), p_min=float(p_min), p_max=float(p_max),
                         distribution="exponential-recurrence", params=params)


def min_exponentials_check(
    rates: Sequence[float],
    samples: int,
    *,
    rng_seed: int = 20240817,
) -> tuple[float, tuple[float, ...]]:
    """Monte-Carlo check of the minimum-of-exponentials law.

    Draws `samples` tuples of independent Exp(rate_k) variates through
    exp_inverse_transform over a true-uniform source, then returns the
    fitted rate of the minimum (1 / sample mean) and the frequency with
    which each index attains the minimum. For independent exponentials the
    minimum is Exp(sum of rates) and index k wins with probability
    rate_k / sum(rates).
    """
    rates = tuple(float(r) for r in rates)
    if len(rates) < 2:
        raise ValueError("need at least 2 rates")
    if any(r <= 0 for r in rates):
        raise ValueError("rates must be positive")
    if samples < 1000:
        raise ValueError("samples must be >= 1000")
    rng = np.random.default_rng(rng_seed)
    u = rng.random((samples, len(rates)))
    draws = exp_inverse_transform(u, 1.0) / np.asarray(rates)
    mins = draws.min(axis=1)
    winners = draws.argmin(axis=1)
    empirical_rate = 1.0 / float(mins.mean())
    freqs = np.bincount(winners, minlength=len(rates)) / samples
    return empirical_rate, tuple(float(f) for f in freqs)


# ---------------------------------------------------------------------------
# serialization

def traffic_to_csv(matrix: TrafficMatrix, path) -> None:
    """CSV with header node_id,t1,...,tT; full-precision values."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node_id"] + [f"t{j}" for j in range(1, matrix.slot_count + 1)])
        for i, row in enumerate(matrix.values, start=1):
            writer.writerow([i] + [repr(v) for v in row])


def traffic_to_json(matrix: TrafficMatrix, path=None) -> str:
    from . import __version__

    doc = {
        "meta": {
            "kind": "traffic",
            "distribution": matrix.distribution,
            "p_min": matrix.p_min,
            "p_max": matrix.p_max,
            "rate": matrix.rate,
            "node_count": matrix.node_count,
            "slot_count": matrix.slot_count,
            "seed": matrix.params.seed,
            "a": matrix.params.a,
            "c": matrix.params.c,
            "tool_version": __version__,
        },
        "values": [list(row) for row in matrix.values],
    }
    text = json.dumps(doc, indent=2)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text


def traffic_from_json(path) -> TrafficMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    meta = doc["meta"]
    span = meta["p_max"] - meta["p_min"]
    params = GeneratorParams(seed=meta["seed"], a=meta["a"], c=meta["c"],
                             modulus=span, degenerate_ok=True)
    values = tuple(tuple(float(v) for v in row) for row in doc["values"])
    return TrafficMatrix(values=values, p_min=float(meta["p_min"]),
                         p_max=float(meta["p_max"]), distribution=meta["distribution"],
                         params=params, rate=meta.get("rate"))


def matrix_from_csv(path) -> tuple[tuple[float, ...], ...]:
    """Read back the node_id,t1..tT format. Returns the value rows only."""
    with open(path, "r", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[0].strip() != "node_id" or len(header) < 2:
            raise ValueError("not a traffic CSV (expected header node_id,t1,...)")
        slots = len(header) - 1
        rows = []
        for row in reader:
            if len(row) != slots + 1:
                raise ValueError(f"malformed traffic row: {row!r}")
            rows.append(tuple(float(v) for v in row[1:]))
    if not rows:
        raise ValueError("traffic CSV holds no rows")
    return tuple(rows)
