"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--scale 1.0] [--repeat 3]
"""

import argparse
import random
import time

import numpy as np

from riskgraph import kernels
from riskgraph.clustering import exact_optimal, farthest_first
from riskgraph.connectivity import edge_connectivity, vertex_connectivity
from riskgraph.generate import random_connected_graph
from riskgraph.risk import RiskAssessment


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def cases(scale):
    rnd = random.Random(0)
    n_graph = int(1500 * scale)
    g = random_connected_graph(rnd, n_graph, 6.0 / n_graph)
    risks = RiskAssessment.from_risks(np.random.default_rng(0).uniform(0, 100, int(200_000 * scale)))
    return [
        (f"edge_connectivity n={g.n} m={g.m}", lambda: edge_connectivity(g)),
        (f"vertex_connectivity n={g.n} m={g.m}", lambda: vertex_connectivity(g)),
        (f"farthest_first n={risks.n} k=8", lambda: farthest_first(risks, 8).objective),
        (f"exact_optimal n={risks.n} k=8", lambda: exact_optimal(risks, 8).objective),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scale", type=float, default=1.0)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the pure-Python backend is available")
    rows = []
    for name, fn in cases(args.scale):
        timing = {}
        results = set()
        for be in backends:
            kernels.set_backend(be)
            timing[be], res = best_of(fn, args.repeat)
            results.add(res)
        assert len(results) == 1, f"{name}: backends disagree {results}"
        rows.append((name, timing))

    print(f"{'case':<42}" + "".join(f"{be:>12}" for be in backends) + f"{'speedup':>10}")
    for name, timing in rows:
        line = f"{name:<42}" + "".join(f"{timing[be]:>11.3f}s" for be in backends)
        if "cython" in timing:
            line += f"{timing['python'] / timing['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
