"""Monte Carlo estimation of P(G_{n,p} -> (G,H)) along the threshold curve
p = c * n^(-1/m2(G,H)).

Sampling is coupled: each (n, sample-index) cell draws one uniform variate
per potential edge from its own deterministically seeded stream, and every
c value thresholds the same variates. The arrowing indicator is then
exactly (not statistically) monotone in c on every sample, and any cell can
be regenerated in isolation. Budget-limited arrowing calls are counted as
unknowns and excluded from the point estimate, never folded into either
side.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from io import StringIO
from typing import List, Optional, Sequence, Tuple

from .arrowing import DEFAULT_NODE_BUDGET, arrows
from .density import threshold_p
from .graphs import Graph

DEFAULT_MAX_N = 24
DEFAULT_MAX_SAMPLES = 1000


@dataclass(frozen=True)
class ExperimentConfig:
    G: Graph
    H: Graph
    n_values: tuple
    c_values: tuple  # positive rationals (Fraction-convertible)
    samples: int
    seed: int
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.samples > DEFAULT_MAX_SAMPLES:
            raise ValueError(f"samples capped at {DEFAULT_MAX_SAMPLES}")
        low = max(self.G.n, self.H.n)
        for n in self.n_values:
            if n < low:
                raise ValueError(f"n={n} is below the larger target order {low}")
            if n > DEFAULT_MAX_N:
                raise ValueError(f"n={n} exceeds the desk-scale cap {DEFAULT_MAX_N}")
        for c in self.c_values:
            if Fraction(c) <= 0:
                raise ValueError("c values must be positive")


@dataclass
class CellResult:
    n: int
    c: float
    p: float
    samples: int
    hits: int
    misses: int
    unknowns: int
    elapsed: float
    outcomes: tuple  # per-sample True / False / None, index-aligned

    @property
    def estimate(self) -> float:
        known = self.samples - self.unknowns
        return self.hits / known if known else float("nan")

    @property
    def untrusted(self) -> bool:
        return self.unknowns > 0.1 * self.samples


def edge_uniforms(seed: int, n: int, sample_index: int) -> List[float]:
    """One uniform per vertex pair, from a stream seeded by the cell
    coordinates alone (splittable: no shared state between cells)."""
    rng = random.Random(f"ramseykit|{seed}|{n}|{sample_index}")
    return [rng.random() for _ in range(n * (n - 1) // 2)]


def graph_from_uniforms(n: int, p: float, uniforms: Sequence[float]) -> Graph:
    edges = []
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if uniforms[k] < p:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def sample_gnp(n: int, p: float, seed: int = 0, sample_index: int = 0) -> Graph:
    """Binomial random graph: each pair an edge independently with
    probability p, reproducible from (seed, n, sample_index)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0,1]")
    return graph_from_uniforms(n, p, edge_uniforms(seed, n, sample_index))


def run_experiment(config: ExperimentConfig) -> List[CellResult]:
    """Estimate the arrowing probability on every (n, c) cell; output order
    is fixed by sorting on (n, c) regardless of the input order."""
    results = []
    for n in sorted(set(config.n_values)):
        variates = [edge_uniforms(config.seed, n, i) for i in range(config.samples)]
        for c in sorted(set(float(x) for x in config.c_values)):
            t0 = time.perf_counter()
            p = threshold_p(config.G, config.H, n, Fraction(c))
            outcomes = []
            for i in range(config.samples):
                g = graph_from_uniforms(n, p, variates[i])
                verdict = arrows(g, config.G, config.H, budget=config.node_budget)
                outcomes.append(verdict.arrows)
            hits = sum(1 for o in outcomes if o is True)
            misses = sum(1 for o in outcomes if o is False)
            unknowns = sum(1 for o in outcomes if o is None)
            results.append(
                CellResult(
                    n=n,
                    c=c,
                    p=p,
                    samples=config.samples,
                    hits=hits,
                    misses=misses,
                    unknowns=unknowns,
                    elapsed=time.perf_counter() - t0,
                    outcomes=tuple(outcomes),
                )
            )
    return results


def results_to_csv(results: List[CellResult], seed: int) -> str:
    """Fixed header and 9-significant-digit formatting so equal configs
    give byte-identical files."""
    out = StringIO()
    out.write("n,c,p,samples,hits,misses,unknowns,estimate,seed\n")
    for r in results:
        out.write(
            f"{r.n},{r.c:.9g},{r.p:.9g},{r.samples},{r.hits},{r.misses},"
            f"{r.unknowns},{r.estimate:.9g},{seed}\n"
        )
    return out.getvalue()
