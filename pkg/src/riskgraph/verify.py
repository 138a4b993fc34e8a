"""Oracle comparisons behind the ``verify`` subcommand."""

import itertools
import random

from . import clustering, connectivity, oracles
from .errors import TooLarge
from .generate import random_graph, random_profile
from .graph import Graph, validate_path
from .risk import RiskAssessment, assess

EXACT_AUDIT_MAX_N = 10_000
ALL_TRIPLES_MAX_N = 60
TRIPLE_SAMPLES = 100_000
ALL_PAIRS_MAX_N = 20
SELF_TEST_INSTANCES = 25


def _check(name, passed, detail):
    return {"name": name, "passed": passed, "detail": detail}


def witnesses_valid(g: Graph, u: int, v: int, paths, vertex_form: bool) -> bool:
    """Every path runs u..v, validates, and the set is pairwise disjoint in the required sense."""
    used = set()
    for p in paths:
        if p[0] != u or p[-1] != v or not validate_path(g, p):
            return False
        if vertex_form:
            items = p[1:-1]
        else:
            items = [frozenset(e) for e in zip(p, p[1:])]
        for x in items:
            if x in used:
                return False
            used.add(x)
    if vertex_form and sum(1 for p in paths if len(p) == 2) > 1:
        return False
    return True


def _triples(n, rng):
    if n <= ALL_TRIPLES_MAX_N:
        return itertools.product(range(n), repeat=3)
    return ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(TRIPLE_SAMPLES))


def pseudometric_violations(a: RiskAssessment, rng=None) -> int:
    rng = rng or random.Random(0)
    bad = 0
    for u, v, w in _triples(a.n, rng):
        duv, dvu = a.distance(u, v), a.distance(v, u)
        duw, dwv = a.distance(u, w), a.distance(w, v)
        if duv < 0 or a.distance(u, u) != 0 or duv != dvu:
            bad += 1
        elif duv > (duw + dwv) * (1 + 1e-12):
            bad += 1
    return bad


def _pairs(g, pairs, rng):
    if pairs:
        return list(pairs)
    allp = list(itertools.combinations(range(g.n), 2))
    if g.n <= ALL_PAIRS_MAX_N:
        return allp
    return sorted(rng.sample(allp, 10))


def _connectivity_checks(g, pairs, rng):
    checks = []
    menger_bad = 0
    chosen = _pairs(g, pairs, rng)
    for u, v in chosen:
        ep = connectivity.edge_disjoint_paths(g, u, v)
        vp = connectivity.vertex_disjoint_paths(g, u, v)
        if len(ep) != connectivity.local_edge_connectivity(g, u, v) or not witnesses_valid(g, u, v, ep, False):
            menger_bad += 1
        if len(vp) != connectivity.local_vertex_connectivity(g, u, v) or not witnesses_valid(g, u, v, vp, True):
            menger_bad += 1
    checks.append(_check("menger witnesses", menger_bad == 0,
                         f"{len(chosen)} pairs, {menger_bad} mismatches"))
    if g.n >= 2:
        kappa, lam = connectivity.vertex_connectivity(g), connectivity.edge_connectivity(g)
        delta = g.min_degree()
        checks.append(_check("whitney inequality", kappa <= lam <= delta,
                             f"kappa={kappa} lambda={lam} min_degree={delta}"))
        if g.n <= oracles.EXHAUSTIVE_MAX_N:
            ek, el = oracles.min_separating_vertex_set(g), oracles.min_disconnecting_edge_set(g)
            checks.append(_check("exhaustive removal", (ek, el) == (kappa, lam),
                                 f"flow kappa={kappa} lambda={lam}; enumeration kappa={ek} lambda={el}"))
        else:
            checks.append(_check("exhaustive removal", None,
                                 f"skipped: n={g.n} > {oracles.EXHAUSTIVE_MAX_N}"))
    return checks


def _clustering_checks(a, ks):
    checks = []
    worst, bad = 0.0, 0
    for k in ks:
        au = clustering.audit(a, k)
        worst = max(worst, au.ratio)
        bad += not au.within_bound
    checks.append(_check("2-approximation", bad == 0,
                         f"k in {list(ks)}, worst ratio {worst:.6f}, {bad} violations"))
    if a.n <= clustering.BRUTE_FORCE_MAX_N:
        diff = [k for k in ks if abs(clustering.brute_force_optimal(a, k).objective
                                     - clustering.exact_optimal(a, k).objective) > 1e-12]
        checks.append(_check("oracle agreement", not diff,
                             f"brute force vs exact for k in {list(ks)}; disagree at {diff}"))
    else:
        checks.append(_check("oracle agreement", None,
                             f"skipped: brute force limited to n <= {clustering.BRUTE_FORCE_MAX_N}"))
    return checks


def verify_instance(g: Graph, a: RiskAssessment, ks=None, pairs=()) -> list[dict]:
    if g.n > EXACT_AUDIT_MAX_N:
        raise TooLarge(f"verify is limited to n <= {EXACT_AUDIT_MAX_N}, got n={g.n}")
    rng = random.Random(0)
    ks = list(ks) if ks else list(range(1, min(g.n, 8) + 1))
    checks = []
    bad = pseudometric_violations(a, rng)
    checks.append(_check("pseudometric", bad == 0, f"{bad} violating triples"))
    if g.n:
        checks += _clustering_checks(a, ks)
    checks += _connectivity_checks(g, pairs, rng)
    return checks


def self_test(seed: int, instances: int = SELF_TEST_INSTANCES) -> list[dict]:
    """Run every instance check on seeded random small graphs; one summary line per check."""
    rng = random.Random(seed)
    tally: dict[str, list[int]] = {}
    for _ in range(instances):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        a = assess(g, random_profile(rng, n))
        for chk in verify_instance(g, a):
            t = tally.setdefault(chk["name"], [0, 0, 0])
            t[0 if chk["passed"] else (2 if chk["passed"] is None else 1)] += 1
    return [
        _check(f"self-test {name}", fail == 0,
               f"seed {seed}: {ok} passed, {fail} failed, {skip} skipped")
        for name, (ok, fail, skip) in tally.items()
    ]
