"""Built-in checks against the running example's known values."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import running
from .core import RUNNING_EXAMPLE_LETTERS, TorusVar
from .grothendieck import AlphabetBinding, GrothendieckCache, groth_of_diagram, groth_partial_nw
from .kpoly import codimension, component_formula
from .lacing import k_theoretic_diagrams, length_histogram, minimal_diagrams
from .laurent import binomial_factor, product
from .oracle import PRESETS, ext_dim, kpoly_via_groebner, orbit_codim_linear_algebra
from .poset import FinitePoset, moebius_signs


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in self.results]
        lines.append(f"{sum(r.passed for r in self.results)}/{len(self.results)} checks passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in self.results]}


def _var(letter: str, index: int) -> TorusVar:
    vertex = {v: k for k, v in RUNNING_EXAMPLE_LETTERS.items()}[letter]
    return TorusVar(vertex, index)


def run_selfcheck(side_conditions: bool = True, flip_sign: bool = False) -> Report:
    """Run every check; ``side_conditions`` and ``flip_sign`` are mutation hooks."""
    q, o = running.quiver(), running.orbit()
    ref = running.reference_diagrams()
    cache = GrothendieckCache()
    report = Report()

    def check(name, fn):
        t = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        report.results.append(CheckResult(name, passed, detail, time.perf_counter() - t))

    def minimal():
        mins = minimal_diagrams(q, o)
        expected = sorted(ref[k] for k in "abcde")
        return mins == expected, f"{len(mins)} minimal diagrams (expected 5)"

    def k_theoretic():
        found = k_theoretic_diagrams(q, o, side_conditions=side_conditions)
        hist = length_histogram(found)
        got = {w for w, _ in found}
        missing = sorted(k for k, w in ref.items() if w not in got)
        ok = hist == running.EXPECTED_HISTOGRAM and not missing and len(got) == len(ref)
        return ok, (f"{len(found)} diagrams, histogram {hist} "
                    f"(expected 15, {running.EXPECTED_HISTOGRAM}); "
                    f"reference diagrams not reached: {missing or 'none'}")

    def groth():
        def s(i): return _var("s", i)
        def u(i): return _var("u", i)
        def v(i): return _var("v", i)
        def t(i): return _var("t", i)
        binding = AlphabetBinding.for_arrow(2, 3, 3, 2)
        wb = ref["w"].mats[1]
        g_b = groth_partial_nw(wb, binding, cache)
        want_b = binomial_factor(u(1), s(1)) * binomial_factor(u(2), s(1))
        want_w = product([binomial_factor(u(2), v(1)), binomial_factor(u(3), v(1)),
                          binomial_factor(u(1), s(1)), binomial_factor(u(2), s(1)),
                          binomial_factor(t(1), s(2))])
        g_w = groth_of_diagram(ref["w"], cache)
        return g_b == want_b and g_w == want_w, \
            f"G_(w_b) {'ok' if g_b == want_b else 'differs'}, five-factor product " \
            f"{'ok' if g_w == want_w else 'differs'}"

    def moebius_reference():
        signs = moebius_signs(ref.values(), flip=flip_sign)
        bad = sorted(k for k, w in ref.items() if signs[w] != running.EXPECTED_SIGN[k])
        poset = FinitePoset.of(ref.values())
        names = {w: k for k, w in ref.items()}
        covers = sorted((names[poset.elements[i]], names[poset.elements[j]])
                        for i, j in poset.covers())
        ok = not bad and covers == running.EXPECTED_COVERS
        detail = ", ".join(f"{k}: {signs[ref[k]]:+d} vs {running.EXPECTED_SIGN[k]:+d}" for k in bad)
        return ok, (f"covers {'match' if covers == running.EXPECTED_COVERS else 'differ'}; "
                    f"sign mismatches: {detail or 'none'}")

    def moebius_enumerated():
        found = k_theoretic_diagrams(q, o, side_conditions=side_conditions)
        signs = moebius_signs([w for w, _ in found], flip=flip_sign)
        codim = min(n for _, n in found)
        bad = [w for w, n in found if signs[w] != (-1) ** (n - codim)]
        return not bad, f"{len(found) - len(bad)}/{len(found)} enumerated diagrams have sign (-1)^(|w|-codim)"

    def codim():
        c = (codimension(q, o), ext_dim(q, o, o), orbit_codim_linear_algebra(q, o))
        return c == (2, 2, 2), f"min length, ext, stabilizer = {c} (expected 2 each)"

    def oracle():
        k = component_formula(q, o, cache=cache, side_conditions=side_conditions)
        g = kpoly_via_groebner(PRESETS["running-example"])
        return k == g, f"component formula has {len(k)} terms, Groebner oracle {len(g)}; " \
                       f"{'equal' if k == g else 'different'}"

    check("minimal-diagrams", minimal)
    check("k-theoretic-enumeration", k_theoretic)
    check("grothendieck-values", groth)
    check("moebius-reference-poset", moebius_reference)
    check("moebius-enumerated-signs", moebius_enumerated)
    check("codimension-three-ways", codim)
    check("component-formula-vs-groebner", oracle)
    return report
