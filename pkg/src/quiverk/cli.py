"""Command-line interface: ``quiverk {diagrams,kpoly,poset,oracle,check}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .core import OrbitSpec, QuiverA, QuiverError, dim_of_orbitspec
from .grothendieck import ConsistencyError, groth_of_diagram
from .kpoly import codimension, component_formula, lowest_form
from .lacing import (DEFAULT_CAP, EnumerationCapError, LacingDiagram, diagram_from_json_file,
                     diagrams_in_orbit, k_theoretic_diagrams, laces_of, length_histogram,
                     minimal_diagrams)
from .oracle import PRESETS, RankCondition, ResourceLimitError, kpoly_via_groebner
from .poset import FinitePoset, hasse_dot, moebius_signs
from .selfcheck import run_selfcheck

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
PROG = "quiverk"


class InputError(Exception):
    pass


@dataclass(frozen=True)
class JobSpec:
    command: str
    quiver: QuiverA | None = None
    orbit: OrbitSpec | None = None
    diagram: LacingDiagram | None = None
    fmt: str = "text"
    cap: int = DEFAULT_CAP
    truncate: int | None = None
    kind: str = "k-theoretic"
    rank_condition: RankCondition | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", default="text", choices=("text", "json", "dot"))
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="upper bound on candidate diagrams enumerated")

    job = _Parser(add_help=False)
    job.add_argument("--quiver", help="orientation string over '<' and '>', e.g. '<><'")
    job.add_argument("--orbit", help="comma-separated intervals, e.g. '1-3,2-4,2-2'")
    job.add_argument("--diagram", metavar="FILE", help="lacing diagram as JSON")

    parser = _Parser(prog=PROG, description="K-polynomials of type A quiver orbit closures")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diagrams", parents=[common, job], help="list lacing diagrams")
    p.add_argument("--kind", default="k-theoretic", choices=("minimal", "k-theoretic", "orbit"))
    p = sub.add_parser("kpoly", parents=[common, job], help="K-polynomial by the component formula")
    p.add_argument("--truncate", type=int, help="also print the lowest form up to this degree")
    sub.add_parser("poset", parents=[common, job], help="containment poset and Moebius signs")
    p = sub.add_parser("oracle", parents=[common], help="K-polynomial from a rank condition")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="built-in rank condition, see --list")
    src.add_argument("--rank-condition", metavar="FILE", help="rank condition as JSON")
    src.add_argument("--list", action="store_true", help="list built-in presets")
    sub.add_parser("check", parents=[common], help="run the built-in self-check")
    return parser


def parse_inputs(argv: list[str]) -> JobSpec | str:
    """Validate arguments into a JobSpec; ``oracle --list`` returns the listing."""
    args = build_parser().parse_args(argv)
    if args.cap <= 0:
        raise InputError(f"--cap must be positive, got {args.cap}")
    if args.fmt == "dot" and args.command != "poset":
        raise InputError("--format dot is only available for 'poset'")
    fields = {"command": args.command, "fmt": args.fmt, "cap": args.cap}

    if args.command == "oracle":
        if args.list:
            return "\n".join(sorted(PRESETS)) + "\n"
        if args.preset:
            if args.preset not in PRESETS:
                raise InputError(f"unknown preset {args.preset!r}")
            fields["rank_condition"] = PRESETS[args.preset]
        else:
            fields["rank_condition"] = RankCondition.from_json(_read_json(args.rank_condition))
        return JobSpec(**fields)
    if args.command == "check":
        return JobSpec(**fields)

    if args.quiver is None:
        raise InputError("--quiver is required")
    q = _parse(QuiverA.from_string, args.quiver, "quiver")
    fields["quiver"] = q
    if getattr(args, "truncate", None) is not None:
        if args.truncate < 0:
            raise InputError(f"--truncate must be non-negative, got {args.truncate}")
        fields["truncate"] = args.truncate
    if getattr(args, "kind", None):
        fields["kind"] = args.kind
    if args.diagram:
        if args.command == "poset":
            raise InputError("'poset' needs --orbit, not --diagram")
        try:
            fields["diagram"] = diagram_from_json_file(q, args.diagram)
        except OSError as exc:
            raise InputError(f"cannot read {args.diagram}: {exc.strerror}") from None
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad diagram file {args.diagram}: {exc}") from None
        fields["orbit"] = laces_of(fields["diagram"])
    elif args.orbit is not None:
        o = _parse(OrbitSpec.from_string, args.orbit, "orbit")
        try:
            dim_of_orbitspec(q, o)
        except QuiverError as exc:
            raise InputError(f"orbit: {exc}") from None
        fields["orbit"] = o
    else:
        raise InputError("one of --orbit or --diagram is required")
    return JobSpec(**fields)


def _parse(fn, text, what):
    try:
        return fn(text)
    except QuiverError as exc:
        raise InputError(f"{what}: {exc}") from None


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON in {path}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def run_job(job: JobSpec) -> tuple[str, int]:
    if job.command == "check":
        report = run_selfcheck()
        out = _dump(report.to_json()) if job.fmt == "json" else report.to_text() + "\n"
        return out, EXIT_OK if report.ok else EXIT_CHECK

    if job.command == "oracle":
        rc = job.rank_condition
        k = kpoly_via_groebner(rc)
        if job.fmt == "json":
            return _dump({"rank_condition": rc.to_json(), "kpoly": k.to_json()}), EXIT_OK
        return f"K = {k.to_text()}\n", EXIT_OK

    q, o = job.quiver, job.orbit
    if job.command == "diagrams":
        return _diagrams(job), EXIT_OK

    if job.command == "kpoly":
        if job.diagram is not None:
            poly, codim = groth_of_diagram(job.diagram), job.diagram.length
            label = "G_w"
        else:
            poly, codim = component_formula(q, o, job.cap), codimension(q, o, job.cap)
            label = "K"
        graded = lowest_form(poly, job.truncate) if job.truncate is not None else None
        if job.fmt == "json":
            data = {"quiver": q.to_string(), "orbit": o.to_string(), "codim": codim,
                    label: poly.to_json()}
            if graded is not None:
                data["lowest_form"] = {str(d): c.to_json() for d, c in graded.components.items()}
            return _dump(data), EXIT_OK
        out = f"codim = {codim}\n{label} = {poly.to_text()}\n"
        if graded is not None:
            out += graded.to_text() + "\n"
        return out, EXIT_OK

    if job.command == "poset":
        found = k_theoretic_diagrams(q, o, job.cap)
        diagrams = [w for w, _ in found]
        signs = moebius_signs(diagrams)
        if job.fmt == "dot":
            return hasse_dot(diagrams, signs), EXIT_OK
        poset = FinitePoset.of(diagrams)
        index = {w: k for k, w in enumerate(poset.elements)}
        covers = [[i, j] for i, j in poset.covers()]
        if job.fmt == "json":
            return _dump({"elements": [{"id": index[w], "length": w.length, "sign": signs[w],
                                        "diagram": w.to_json()} for w in poset.elements],
                          "covers": covers}), EXIT_OK
        lines = [f"#{index[w]} |w|={w.length} sign={signs[w]:+d}\n{_indent(w.to_text())}"
                 for w in poset.elements]
        lines.append("covers (smaller < larger): " +
                     ", ".join(f"#{i}<#{j}" for i, j in covers))
        return "\n".join(lines) + "\n", EXIT_OK
    raise InputError(f"unknown command {job.command!r}")


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


def _diagrams(job: JobSpec) -> str:
    q, o = job.quiver, job.orbit
    if job.diagram is not None:
        found = [(job.diagram, job.diagram.length)]
    elif job.kind == "minimal":
        found = [(w, w.length) for w in minimal_diagrams(q, o, job.cap)]
    elif job.kind == "orbit":
        found = [(w, w.length) for w in diagrams_in_orbit(q, o, job.cap)]
    else:
        found = k_theoretic_diagrams(q, o, job.cap)
    hist = length_histogram(found)
    if job.fmt == "json":
        return _dump({"quiver": q.to_string(), "orbit": o.to_string(), "kind": job.kind,
                      "dims": list(dim_of_orbitspec(q, o)),
                      "histogram": {str(k): v for k, v in hist.items()},
                      "diagrams": [{"length": n, **w.to_json()} for w, n in found]})
    lines = [f"{len(found)} diagrams, lengths {hist}"]
    for k, (w, n) in enumerate(found):
        lines.append(f"#{k} |w|={n}\n{_indent(w.to_text())}")
    return "\n".join(lines) + "\n"


def _fail(kind: str, message: str, code: int) -> int:
    first = str(message).splitlines()[0] if str(message) else kind
    print(f"{PROG}: error[{kind}]: {first}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_inputs(argv)
        if isinstance(job, str):
            sys.stdout.write(job)
            return EXIT_OK
        out, code = run_job(job)
    except InputError as exc:
        return _fail("input", str(exc), EXIT_INPUT)
    except QuiverError as exc:
        return _fail("input", str(exc), EXIT_INPUT)
    except (EnumerationCapError, ResourceLimitError) as exc:
        return _fail("resource", str(exc), EXIT_RESOURCE)
    except ConsistencyError as exc:
        return _fail("consistency", str(exc), EXIT_CHECK)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
