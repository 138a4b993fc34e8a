"""Report assembly, JSON/text serialization and DOT export.

Reports are plain dicts with floats already rounded to 6 decimals, so
``parse_report(serialize_report(rep)) == rep`` holds exactly.
"""

import json
import math

from . import __version__
from .clustering import ApproximationAudit, Clustering
from .connectivity import ConnectivityReport
from .graph import Graph
from .risk import RiskAssessment

DECIMALS = 6


def num(x):
    x = float(x)
    if not math.isfinite(x):
        return None
    return round(x, DECIMALS)


def risk_section(g: Graph, a: RiskAssessment) -> list[dict]:
    return [
        {"label": g.labels[v], "r0": num(a.r0[v]), "f": num(a.f[v]), "r": num(a.r[v])}
        for v in range(g.n)
    ]


def clustering_section(g: Graph, c: Clustering, audit: ApproximationAudit = None) -> dict:
    out = {
        "k": c.k,
        "centers": [g.labels[v] for v in c.centers],
        "blocks": [[g.labels[v] for v in block] for block in c.partition],
        "objective": num(c.objective),
    }
    if audit is not None:
        out["audit"] = {
            "optimal": num(audit.optimal),
            "ratio": num(audit.ratio),
            "bound": num(2 * audit.optimal),
            "within_bound": audit.within_bound,
        }
    return out


def connectivity_section(g: Graph, rep: ConnectivityReport) -> dict:
    pairs = []
    for p in rep.per_pair:
        item = {"u": g.labels[p.u], "v": g.labels[p.v], "kappa": p.kappa, "lambda": p.lam}
        if p.vertex_paths is not None:
            item["vertex_disjoint_paths"] = [[g.labels[x] for x in path] for path in p.vertex_paths]
            item["edge_disjoint_paths"] = [[g.labels[x] for x in path] for path in p.edge_paths]
        pairs.append(item)
    return {
        "kappa": rep.kappa,
        "lambda": rep.lam,
        "min_degree": rep.min_degree,
        "whitney_holds": rep.whitney_holds,
        "pairs": pairs,
    }


def provenance(command: str, parameters: dict, digests: dict) -> dict:
    return {
        "tool": "riskgraph",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "inputs": digests,
    }


def serialize_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_report(text: str) -> dict:
    return json.loads(text)


def _fmt(x) -> str:
    return "-" if x is None else f"{x:.{DECIMALS}f}"


def render_text(report: dict) -> str:
    lines = []
    if "risk" in report:
        width = max([5] + [len(row["label"]) for row in report["risk"]])
        lines.append(f"{'label':<{width}}  {'r0':>14}  {'f':>14}  {'r':>14}")
        for row in report["risk"]:
            lines.append(f"{row['label']:<{width}}  {_fmt(row['r0']):>14}  "
                         f"{_fmt(row['f']):>14}  {_fmt(row['r']):>14}")
    if "clustering" in report:
        c = report["clustering"]
        lines.append(f"k={c['k']} objective={_fmt(c['objective'])}")
        for i, (center, block) in enumerate(zip(c["centers"], c["blocks"])):
            lines.append(f"  class {i}: center={center} members={', '.join(block)}")
        if "audit" in c:
            au = c["audit"]
            lines.append(f"  optimal={_fmt(au['optimal'])} ratio={_fmt(au['ratio'])} "
                         f"within 2x optimal: {'yes' if au['within_bound'] else 'NO'}")
    if "connectivity" in report:
        c = report["connectivity"]
        lines.append(f"kappa={c['kappa']} lambda={c['lambda']} min_degree={c['min_degree']} "
                     f"whitney={'ok' if c['whitney_holds'] else 'VIOLATED'}")
        for p in c["pairs"]:
            lines.append(f"  {p['u']} - {p['v']}: kappa={p['kappa']} lambda={p['lambda']}")
            for path in p.get("vertex_disjoint_paths", []):
                lines.append(f"    vertex-disjoint: {' - '.join(path)}")
            for path in p.get("edge_disjoint_paths", []):
                lines.append(f"    edge-disjoint:   {' - '.join(path)}")
    if "checks" in report:
        for chk in report["checks"]:
            status = "PASS" if chk["passed"] else ("SKIP" if chk["passed"] is None else "FAIL")
            lines.append(f"[{status}] {chk['name']}: {chk['detail']}")
    return "\n".join(lines) + "\n"


def _esc(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _dot_id(s: str) -> str:
    return f'"{_esc(s)}"'


def block_color(i: int, k: int) -> str:
    return f"{i / k:.3f} 0.450 0.950"


def export_dot(g: Graph, a: RiskAssessment, c: Clustering) -> str:
    """Undirected DOT graph; each block gets its own fill color, labels carry r(v)."""
    labels = c.labels(g.n)
    out = ["graph riskgraph {", "  node [style=filled];"]
    for v in range(g.n):
        name = g.labels[v]
        text = f"{_esc(name)}\\nr={float(a.r[v]):.{DECIMALS}f}"
        out.append(f'  {_dot_id(name)} [label="{text}", fillcolor="{block_color(labels[v], c.k)}", '
                   f'comment="class {labels[v]}"];')
    for u, v in g.edges:
        out.append(f"  {_dot_id(g.labels[u])} -- {_dot_id(g.labels[v])};")
    out.append("}")
    return "\n".join(out) + "\n"
