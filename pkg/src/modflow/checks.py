"""Named identity checks: an oracle count on one side, a polynomial value on the other."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import flows, geometry, oracles, tensions, tutte
from .graph import OrientedMultigraph

FLOW_RECIPROCITY = "flow-reciprocity"
TENSION_RECIPROCITY = "tension-reciprocity"
STANLEY = "stanley"
TUTTE_TRIPLES = "tutte-triples"
CONVOLUTION = "convolution"
REINER = "reiner"
EHRHART_MACDONALD = "ehrhart-macdonald"
APPENDIX_RECURSION = "appendix-recursion"


def exact(x):
    """Render exact numbers without a Fraction wrapper when integral."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: object
    rhs: object

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": exact(self.lhs), "rhs": exact(self.rhs), "pass": self.passed}


def graph_summary(g: OrientedMultigraph) -> dict:
    return {"V": g.n_vertices, "E": g.n_edges, "c": g.n_components, "xi": g.xi}


@dataclass
class RunReport:
    graph: dict
    command: str
    results: dict = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "command": self.command,
            "results": {k: _plain(v) for k, v in self.results.items()},
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = ["graph: " + " ".join(f"{k}={v}" for k, v in self.graph.items())]
        lines.append(f"command: {self.command}")
        for key, value in self.results.items():
            value = _plain(value)
            if isinstance(value, list):
                lines.append(f"{key}:")
                lines.extend(f"  {_text_item(item)}" for item in value)
            else:
                lines.append(f"{key}: {value}")
        for c in self.checks:
            verdict = "PASS" if c.passed else "FAIL"
            lines.append(f"check {c.name}: {exact(c.lhs)} = {exact(c.rhs)} {verdict}")
        return "\n".join(lines) + "\n"


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return exact(value)


def _text_item(item) -> str:
    if isinstance(item, dict):
        return " ".join(f"{k}={v}" for k, v in item.items())
    return str(item)


def format_vector(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


# -- individual identities -------------------------------------------------------


def flow_reciprocity(g, k: int, l: int = 1) -> list[CheckResult]:
    return [CheckResult(f"{FLOW_RECIPROCITY} k={k}", oracles.count_flow_pairs(g, k), flows.signed_flow_value(g, k))]


def tension_reciprocity(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    return [
        CheckResult(
            f"{TENSION_RECIPROCITY} l={l}", oracles.count_tension_pairs(g, l), tensions.signed_tension_value(g, l)
        )
    ]


def stanley(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    pairs = oracles.count_stanley_pairs(g, l)
    chi = tensions.chromatic_polynomial(g)
    return [
        CheckResult(f"{STANLEY} l={l}", pairs, (-1) ** g.n_vertices * chi(-l)),
        CheckResult(f"{STANLEY}-factor l={l}", pairs, l**g.n_components * oracles.count_tension_pairs(g, l)),
    ]


def _tutte_value(g, l, k):
    return tutte.tutte_polynomial(g)(1 + l, 1 + k)


def tutte_triples(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    return [CheckResult(f"{TUTTE_TRIPLES} l={l} k={k}", oracles.count_tutte_triples(g, l, k), _tutte_value(g, l, k))]


def convolution(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    return [CheckResult(f"{CONVOLUTION} l={l} k={k}", tutte.convolution(g, l, k), _tutte_value(g, l, k))]


def reiner(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    return [CheckResult(f"{REINER} l={l} k={k}", oracles.reiner_sum(g, l, k), _tutte_value(g, l, k))]


def ehrhart_macdonald(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    out = []
    for b in geometry.feasible_b_set(g):
        lhs, rhs = geometry.ehrhart_macdonald_sides(g, b, k)
        out.append(CheckResult(f"{EHRHART_MACDONALD} b={format_vector(b)} k={k}", lhs, rhs))
    return out


def appendix_recursion(g, k: int = 1, l: int = 1) -> list[CheckResult]:
    return [
        CheckResult(f"{APPENDIX_RECURSION} {c.clause} e={c.edge} k={k}", c.lhs, c.rhs)
        for c in oracles.appendix_recursion_clauses(g, k)
    ]


CHECKS: dict[str, Callable[..., list[CheckResult]]] = {
    FLOW_RECIPROCITY: flow_reciprocity,
    TENSION_RECIPROCITY: tension_reciprocity,
    STANLEY: stanley,
    TUTTE_TRIPLES: tutte_triples,
    CONVOLUTION: convolution,
    REINER: reiner,
    EHRHART_MACDONALD: ehrhart_macdonald,
    APPENDIX_RECURSION: appendix_recursion,
}

#: which of (k, l) each check actually varies
PARAMETERS = {
    FLOW_RECIPROCITY: ("k",),
    TENSION_RECIPROCITY: ("l",),
    STANLEY: ("l",),
    TUTTE_TRIPLES: ("l", "k"),
    CONVOLUTION: ("l", "k"),
    REINER: ("l", "k"),
    EHRHART_MACDONALD: ("k",),
    APPENDIX_RECURSION: ("k",),
}


def run_check(name: str, g: OrientedMultigraph, k: int = 1, l: int = 1) -> list[CheckResult]:
    return CHECKS[name](g, k=k, l=l)
