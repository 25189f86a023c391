"""Replay the Horowitz example and the pants counterexample end to end.

Words and expected values live in ``data/paper_fixtures.json``; this module
only computes and compares.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any

from .fricke import trace_polynomial
from .heights import PointList, breakpoints_and_jumps
from .homology import GeneratorImageMap, homology_class, plus_minus_equal
from .pants import STANDARD, PantsConvention, arc_tuple
from .pit import diagonal_witness, pit_trace_equiv
from .sl2 import SamplerConfig, format_rational
from .words import are_conjugate, generator_index, parse_word

HEIGHT_TOL = 1e-12


def load_fixtures() -> dict:
    text = resources.files("curvequiv").joinpath("data/paper_fixtures.json").read_text()
    return json.loads(text)


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed,
                "pass": self.passed}


@dataclass
class PaperReport:
    seed: int
    version: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"version": self.version, "seed": self.seed, "pass": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def _horowitz_checks(fx: dict, seed: int) -> list[Check]:
    g, h = parse_word(fx["g"]), parse_word(fx["h"])
    conj = are_conjugate(g, h, allow_inverse=True)
    checks = [Check("horowitz-non-conjugacy", fx["conjugate_up_to_inverse"], conj,
                    conj == fx["conjugate_up_to_inverse"])]

    pg, ph = trace_polynomial(g), trace_polynomial(h)
    # chi_a [chi_ab chi_ab^-1 - chi_b^2] - chi_a
    chi = lambda s: trace_polynomial(parse_word(s))
    bracket = chi("a") * (chi("a b") * chi("a B") - chi("b^2")) - chi("a")
    computed = {"g": str(pg), "h": str(ph), "bracket": str(bracket)}
    checks.append(Check("fricke-equality", fx["polynomial"], computed,
                        pg == ph == bracket and str(pg) == fx["polynomial"]))

    verdict = pit_trace_equiv(g, h, rank=2, samples=fx["pit_samples"], config=SamplerConfig(seed=seed))
    checks.append(Check("pit-no-refutation",
                        {"outcome": fx["pit_outcome"], "samples": fx["pit_samples"]},
                        {"outcome": verdict.outcome, "samples": verdict.samples_used},
                        verdict.outcome == fx["pit_outcome"] and verdict.samples_used == fx["pit_samples"]))
    return checks


def _counterexample_checks(fx: dict, convention: PantsConvention) -> list[Check]:
    w, wp = parse_word(fx["curve"]), parse_word(fx["curve_prime"])
    t, tp = arc_tuple(w, convention), arc_tuple(wp, convention)
    si = t == tp
    expected = {"curve": fx["arc_tuple"], "curve_prime": fx["arc_tuple"], "si_equivalent": fx["si_equivalent"]}
    computed = {"curve": t.to_json(), "curve_prime": tp.to_json(), "si_equivalent": si}
    checks = [Check("pants-six-tuples", expected, computed, expected == computed)]

    hmap = GeneratorImageMap.from_vectors(fx["homology_map"])
    v, vp = homology_class(w, hmap), homology_class(wp, hmap)
    pm = plus_minus_equal(v, vp)
    expected = {"classes": fx["homology"], "plus_minus_equal": fx["plus_minus_equal"]}
    computed = {"classes": [list(v), list(vp)], "plus_minus_equal": pm}
    checks.append(Check("homology-obstruction", expected, computed, expected == computed))

    phi = {generator_index(k): val for k, val in fx["phi"].items()}
    verdict = diagonal_witness(phi, w, wp)
    squares = ([format_rational(x * x) for x in verdict.witness.traces]
               if verdict.witness else None)
    expected = {"outcome": fx["diagonal_outcome"], "trace_squares": fx["trace_squares"]}
    computed = {"outcome": verdict.outcome, "trace_squares": squares}
    checks.append(Check("diagonal-witness", expected, computed, expected == computed))
    return checks


def _heights_checks(cases: list[dict]) -> list[Check]:
    checks = []
    for case in cases:
        report = breakpoints_and_jumps(PointList.parse(case["points"]))
        ok = len(report.breakpoints) == len(case["breakpoints"])
        for got, want in zip(report.breakpoints, case["breakpoints"]):
            theta = float(Fraction(want["theta_over_pi"])) * math.pi
            ok &= abs(got.theta - theta) <= HEIGHT_TOL and abs(got.jump - float(Fraction(want["jump"]))) <= HEIGHT_TOL
        ok &= abs(report.reconstructed_length - float(Fraction(case["length"]))) <= HEIGHT_TOL
        checks.append(Check(f"heights[{case['points']}]",
                            {"breakpoints": case["breakpoints"], "length": case["length"]},
                            report.to_json(), bool(ok)))
    return checks


def verify_paper(seed: int = 0, convention: PantsConvention = STANDARD) -> PaperReport:
    fixtures = load_fixtures()
    report = PaperReport(seed=seed, version=fixtures["version"])
    report.checks += _horowitz_checks(fixtures["horowitz"], seed)
    report.checks += _counterexample_checks(fixtures["counterexample"], convention)
    report.checks += _heights_checks(fixtures["heights"])
    return report
