"""Verification suites with seeded determinism and machine-readable reports.

Identical configs produce byte-identical reports; wall-clock timings are
therefore excluded from reports unless explicitly requested.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import ball, decompose, diagram, koszul, operators
from .fields import FieldKind, TypedField, field_to_text
from .operators import CheckResult
from .poly import P_ONE, Poly3

SUITE_NAMES = (
    "identities",
    "cells",
    "two-complex",
    "derived-complexes",
    "right-inverses",
    "decompositions",
    "pairings",
)


@dataclass
class SuiteConfig:
    suite: str = "all"
    seed: int = 0
    degree: int = 3
    samples: int = 10
    format: str = "json"
    strict_preconditions: bool = False
    timings: bool = False


@dataclass
class Case:
    name: str
    anchor: str
    status: str
    witness: str | None = None
    duration_ms: int = 0


@dataclass
class Report:
    suite: str
    config: SuiteConfig
    cases: list[Case] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "error": 0}
        for c in self.cases:
            out[c.status] += 1
        out["total"] = len(self.cases)
        return out

    @property
    def all_passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    def to_dict(self) -> dict:
        cfg = asdict(self.config)
        cfg.pop("timings", None)
        cases = []
        for c in self.cases:
            d = {"name": c.name, "anchor": c.anchor, "status": c.status}
            if c.witness is not None:
                d["witness"] = c.witness
            if self.config.timings:
                d["duration_ms"] = c.duration_ms
            cases.append(d)
        return {"schema": 1, "suite": self.suite, "config": cfg, "cases": cases, "summary": self.counts}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        lines = [
            f"# Suite: {self.suite}",
            "",
            f"config: seed={self.config.seed} degree={self.config.degree} "
            f"samples={self.config.samples} strict_preconditions={self.config.strict_preconditions}",
            "",
            "| case | anchor | status |" + (" time (ms) |" if self.config.timings else ""),
            "|-|-|-|" + ("-|" if self.config.timings else ""),
        ]
        for c in self.cases:
            row = f"| {c.name} | {c.anchor} | {c.status} |"
            if self.config.timings:
                row += f" {c.duration_ms} |"
            lines.append(row)
        s = self.counts
        lines += ["", f"summary: {s['pass']} pass, {s['fail']} fail, {s['error']} error of {s['total']}"]
        for c in self.cases:
            if c.witness is not None:
                lines += ["", f"## witness: {c.name}", "", "```", c.witness, "```"]
        return "\n".join(lines) + "\n"


def _timed(results_fn) -> list[Case]:
    t0 = time.monotonic()
    results: list[CheckResult] = results_fn()
    dt = int((time.monotonic() - t0) * 1000 / max(len(results), 1))
    return [Case(r.name, r.anchor, r.status, r.witness, dt) for r in results]


def _suite_identities(cfg: SuiteConfig) -> list[Case]:
    return _timed(lambda: operators.verify_all_identities(cfg.samples, cfg.degree, cfg.seed))


def _suite_cells(cfg: SuiteConfig) -> list[Case]:
    g = diagram.build_diagram("with-bc")
    return _timed(lambda: diagram.check_all_cells(g, cfg.samples, cfg.degree, cfg.seed))


def _suite_two_complex(cfg: SuiteConfig) -> list[Case]:
    g = diagram.build_diagram("with-bc")
    return _timed(lambda: diagram.check_two_complex(g, cfg.samples, cfg.degree, cfg.seed))


def _suite_derived(cfg: SuiteConfig) -> list[Case]:
    out: list[CheckResult] = []
    for name in ("hessian", "elasticity", "divdiv"):
        out.extend(diagram.check_derived_complex(name, cfg.samples, cfg.degree, cfg.seed))
    return [Case(r.name, r.anchor, r.status, r.witness) for r in out]


def _ddd_unit_witness() -> CheckResult:
    """The closed-form check: Ddd(1) = x x^T / 12 with double divergence 1."""
    one = TypedField.scalar(P_ONE)
    out = koszul.right_inverse("Ddd", one)
    expected = TypedField.matrix(
        [
            [(Poly3.variable(i) * Poly3.variable(j)).scale(Fraction(1, 12)) for j in range(1, 4)]
            for i in range(1, 4)
        ],
        FieldKind.SYMMETRIC,
    )
    ok = operators.components_equal(out, expected) and operators.components_equal(
        operators.div_div(out), one
    )
    return CheckResult("Ddd(1) = x x^T / 12, div div = 1", "Lemma 3.5", ok, None if ok else field_to_text(out))


def _suite_right_inverses(cfg: SuiteConfig) -> list[Case]:
    results: list[CheckResult] = koszul.homotopy_check(cfg.samples, cfg.degree, cfg.seed)
    for name in koszul.RIGHT_INVERSE_NAMES:
        results.append(
            koszul.verify_right_inverse(name, cfg.samples, cfg.degree, cfg.seed, cfg.strict_preconditions)
        )
    results.append(_ddd_unit_witness())
    return [Case(r.name, r.anchor, r.status, r.witness) for r in results]


def _suite_decompositions(cfg: SuiteConfig) -> list[Case]:
    return _timed(lambda: decompose.verify_all_decompositions(cfg.samples, cfg.degree, cfg.seed))


def _suite_pairings(cfg: SuiteConfig) -> list[Case]:
    results: list[CheckResult] = []
    vol = ball.integrate_ball(P_ONE)
    results.append(
        CheckResult(
            "unit ball volume = 4/3*pi",
            "quadrature closed form",
            str(vol) == "4/3*pi",
            None if str(vol) == "4/3*pi" else str(vol),
        )
    )
    x1sq = ball.integrate_ball(Poly3.monomial((2, 0, 0)))
    results.append(
        CheckResult(
            "integral of x1^2 = 4/15*pi",
            "quadrature closed form",
            str(x1sq) == "4/15*pi",
            None if str(x1sq) == "4/15*pi" else str(x1sq),
        )
    )
    results.extend(ball.verify_all_ibp(cfg.samples, cfg.degree, bump_order=2, seed=cfg.seed))
    results.extend(ball.verify_membership_steps(cfg.samples, cfg.degree, cfg.seed))
    return [Case(r.name, r.anchor, r.status, r.witness) for r in results]


_SUITES = {
    "identities": _suite_identities,
    "cells": _suite_cells,
    "two-complex": _suite_two_complex,
    "derived-complexes": _suite_derived,
    "right-inverses": _suite_right_inverses,
    "decompositions": _suite_decompositions,
    "pairings": _suite_pairings,
}


def run_suite(cfg: SuiteConfig) -> Report:
    if cfg.suite != "all" and cfg.suite not in _SUITES:
        raise ValueError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITE_NAMES)} or all")
    report = Report(cfg.suite, cfg)
    names = SUITE_NAMES if cfg.suite == "all" else (cfg.suite,)
    for name in names:
        report.cases.extend(_SUITES[name](cfg))
    return report
