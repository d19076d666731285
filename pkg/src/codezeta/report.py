"""Full code analysis pipeline and its JSON report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .code import DEFAULT_BUDGET, LinearCode, WeightDistribution, macwilliams, weight_distribution
from .duality import FsdReport, fsd_report
from .rha import RhaVerdict, field_bound, rha_check
from .zeta import ZetaProfile, zeta_profile


@dataclass
class AnalysisReport:
    code: dict
    weights: WeightDistribution
    dual_weights: WeightDistribution
    zeta: ZetaProfile
    fsd: FsdReport
    rha: RhaVerdict
    bound: dict | None
    timing: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "weights": self.weights.to_json(),
            "dual_weights": self.dual_weights.to_json(),
            "zeta": self.zeta.to_json(),
            "fsd": self.fsd.to_json(),
            "rha": self.rha.to_json(),
            "field_bound": self.bound,
            "timing": self.timing,
        }

    @classmethod
    def from_json(cls, data: dict) -> "AnalysisReport":
        return cls(
            data["code"],
            WeightDistribution.from_json(data["weights"]),
            WeightDistribution.from_json(data["dual_weights"]),
            ZetaProfile.from_json(data["zeta"]),
            FsdReport.from_json(data["fsd"]),
            RhaVerdict.from_json(data["rha"]),
            data["field_bound"],
            data.get("timing", {}),
        )

    def violations(self) -> list[str]:
        out = self.weights.violations() + self.zeta.violations()
        if macwilliams(self.weights) != self.dual_weights:
            out.append("dual distribution differs from MacWilliams")
        return out

    def table(self) -> str:
        pr = self.zeta.profile
        lines = [
            f"code        [{pr.n},{pr.k},{pr.d}]_{pr.q}  dual d = {pr.d_dual}",
            f"genus       g = {pr.g}, g_dual = {pr.g_dual}",
            f"weights     {list(self.weights.counts)}",
            f"dual        {list(self.dual_weights.counts)}",
            f"P(t)        {self.zeta.P}",
            f"D(t)        {self.zeta.D}",
            f"RHA         {self.rha.holds} ({self.rha.method}, max residual {self.rha.max_residual:.3g})",
            f"self-dual   weights equal: {self.fsd.weight_equal}, zeta fixed: {self.fsd.zeta_fixed}",
        ]
        if self.bound is not None:
            lines.append(f"field bound {self.bound['holds']} (nu = {self.bound['nu']})")
        return "\n".join(lines)


def dual_distribution(wd: WeightDistribution) -> WeightDistribution:
    """MacWilliams transform; the full space gets the zero code."""
    if wd.k == wd.n:
        return WeightDistribution((1,) + (0,) * wd.n, wd.n, 0, wd.q)
    return macwilliams(wd)


def analyze_weights(wd: WeightDistribution, code_echo: dict | None = None) -> AnalysisReport:
    t0 = time.perf_counter()
    zp = zeta_profile(wd)
    t1 = time.perf_counter()
    wdual = dual_distribution(wd)
    fsd = fsd_report(wd, wdual, zp.P, zp.profile)
    t2 = time.perf_counter()
    verdict = rha_check(zp.P, wd.q)
    t3 = time.perf_counter()
    pr = zp.profile
    bound = None
    if pr.g >= 1:
        holds, nu = field_bound(pr.k, pr.d, pr.g, wd[pr.d], pr.q)
        bound = {"holds": holds, "nu": nu}
    timing = {"zeta_s": t1 - t0, "duality_s": t2 - t1, "rha_s": t3 - t2}
    return AnalysisReport(code_echo or {}, wd, wdual, zp, fsd, verdict, bound, timing)


def analyze_code(code: LinearCode, budget: int = DEFAULT_BUDGET) -> AnalysisReport:
    t0 = time.perf_counter()
    wd = weight_distribution(code, budget)
    elapsed = time.perf_counter() - t0
    report = analyze_weights(wd, code.to_json())
    report.timing = {"enumerate_s": elapsed, **report.timing}
    return report
