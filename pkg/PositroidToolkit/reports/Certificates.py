"""Reports for the sampling checks: triangulation certificates, sign probes and the self test."""
from typing import Callable, List, Sequence, Tuple

from PositroidToolkit.polytope.core import SignProbeReport
from PositroidToolkit.polytope.Triangulations import TriangulationReport
from PositroidToolkit.reports.core import Report, ReportElement


def triangulation_certificate(check: TriangulationReport, simplices: Sequence[Sequence[int]], n: int, r: int,
                              seed: int) -> Report:
    report = Report(f"Triangulation check for k = 1, n = {n}, r = {r}",
                    {"seed": seed, "simplices": check.simplices, "points": check.points,
                     "uncovered": check.uncovered, "overlaps": check.overlaps, "ok": check.ok})
    section = report.section("Simplices")
    section.add_content(ReportElement.table(["simplex"], [["{" + ",".join(map(str, S)) + "}"] for S in simplices]))
    result = report.section("Result")
    verdict = "no violations" if check.ok else "violations found"
    result.add_content(ReportElement.paragraph(f"{check.points} exact sample points, {verdict}."))
    return report


def sign_probe_certificate(probes: Sequence[SignProbeReport], n: int, r: int, k: int, seed: int) -> Report:
    clean = all(p.fixed_sign for p in probes if p.even)
    report = Report(f"Sign probe for k = {k}, n = {n}, r = {r}",
                    {"seed": seed, "subsets": len(probes), "even_fixed_sign": clean})
    rows = [["{" + ",".join(map(str, p.subset)) + "}", "yes" if p.even else "no", p.positive, p.negative, p.zero,
             p.exceptional, "fixed" if p.fixed_sign else "mixed"] for p in probes]
    report.section("Signs of Δ(Y, Z_I)").add_content(
        ReportElement.table(["I", "even", "+", "-", "0", "exceptional", "sign"], rows))
    return report


def selftest_report(checks: Sequence[Tuple[str, Callable[[], bool]]], seed: int) -> Report:
    """Runs each named check; a check that raises counts as failed."""
    rows: List[List[str]] = []
    passed = 0
    for name, check in checks:
        try:
            ok = bool(check())
            detail = ""
        except Exception as exc:  # a broken check is a failed check
            ok = False
            detail = f"{exc.__class__.__name__}: {exc}"
        passed += ok
        rows.append([name, "pass" if ok else "FAIL", detail])
    report = Report("Self test", {"seed": seed, "checks": len(rows), "passed": passed,
                                  "ok": passed == len(rows)})
    report.section("Checks").add_content(ReportElement.table(["check", "result", "detail"], rows))
    return report
