"""Radius-graph topology analysis over deployments.

Two nodes share an edge when their Euclidean distance is at most the
transmission range plus the epsilon relaxation (inclusive boundary, so the
range acts as a closed sensing radius). Distances always come from the
full-precision coordinates, never from rounded serialized values.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class RadiusGraph:
    node_count: int
    transmission_range: float
    epsilon: float
    edges: frozenset  # unordered (u, v) pairs with u < v, 0-based ids
    degrees: tuple[int, ...]


def _as_points(deployment) -> np.ndarray:
    # accepts a Deployment or a raw coordinate sequence
    pts = getattr(deployment, "points", deployment)
    arr = np.asarray(pts, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] == 0:
        raise ValueError("deployment must supply a non-empty (n, 2) point set")
    return arr


def distance_matrix(deployment) -> np.ndarray:
    """All-pairs Euclidean distances; zero diagonal, symmetric.

    Direct O(n^2) computation; n stays small in this domain.
    """
    pts = _as_points(deployment)
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt((diff ** 2).sum(axis=-1))


def build_graph(deployment, tr: float, epsilon: float = 0.0) -> RadiusGraph:
    """Radius graph: edge (u, v) iff distance(u, v) <= tr + epsilon, u != v."""
    if tr <= 0:
        raise ValueError("tr must be positive")
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    dist = distance_matrix(deployment)
    n = dist.shape[0]
    reach = tr + epsilon
    edges = set()
    degrees = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if dist[u, v] <= reach:
                edges.add((u, v))
                degrees[u] += 1
                degrees[v] += 1
    return RadiusGraph(node_count=n, transmission_range=float(tr),
                       epsilon=float(epsilon), edges=frozenset(edges),
                       degrees=tuple(degrees))


def isolated_count(graph: RadiusGraph) -> int:
    """Number of degree-zero nodes."""
    return sum(1 for d in graph.degrees if d == 0)


def graph_to_csv(graph: RadiusGraph, deployment, path) -> None:
    """Edge list as u,v,distance (1-based node ids)."""
    dist = distance_matrix(deployment)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "distance"])
        for u, v in sorted(graph.edges):
            writer.writerow([u + 1, v + 1, repr(float(dist[u, v]))])


def graph_to_json(graph: RadiusGraph, deployment, path=None) -> str:
    dist = distance_matrix(deployment)
    doc = {
        "meta": {
            "kind": "radius-graph",
            "node_count": graph.node_count,
            "transmission_range": graph.transmission_range,
            "epsilon": graph.epsilon,
            "edge_count": len(graph.edges),
            "isolated": isolated_count(graph),
        },
        "degrees": list(graph.degrees),
        "edges": [[u + 1, v + 1, float(dist[u, v])] for u, v in sorted(graph.edges)],
    }
    text = json.dumps(doc, indent=2)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text


def isolated_by_range(deployment, trs: Sequence[float], epsilon: float = 0.0) -> dict[float, int]:
    """Isolated-node counts for several transmission ranges at once."""
    return {float(tr): isolated_count(build_graph(deployment, tr, epsilon)) for tr in trs}
