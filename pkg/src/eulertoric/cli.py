"""Command-line front end.

Exit codes: 0 analysis completed, 1 invalid input, 2 inconclusive (a monoid
search bound ran out, or a fan in dimension >= 3 was not asserted complete
for a command that needs completeness).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import classgroup as cgm
from . import euler, fan as fanm, polytope as polm
from .errors import Inconclusive, InvalidInput
from .formats import fan_document, fan_from_text, polytope_from_text

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2


class _NeedsCompleteness(Exception):
    pass


@dataclass
class Report:
    command: str
    input_digest: str
    verdicts: dict[str, bool] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    timing: float = 0.0
    raw_text: str | None = None  # replaces the text report when set

    def to_json(self) -> str:
        # timing is left out so identical inputs give byte-identical output
        doc = {
            "command": self.command,
            "input_digest": self.input_digest,
            "verdicts": self.verdicts,
            "results": self.results,
            "diagnostics": self.diagnostics,
        }
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        if self.raw_text is not None:
            return self.raw_text
        out = [f"{self.command}  (input sha256 {self.input_digest[:12]})"]
        out += [f"  {k}: {'yes' if v else 'no'}" for k, v in self.verdicts.items()]
        out += [f"  {line}" for line in self.lines]
        out += [f"  note: {d}" for d in self.diagnostics]
        out.append(f"  ({self.timing:.3f} s)")
        return "\n".join(out)


def _label(cone) -> str:
    if not cone:
        return "sigma_0"
    sep = "" if max(cone) < 9 else ","
    return "sigma_" + sep.join(str(i + 1) for i in cone)


def _rays_label(cone) -> str:
    return "{" + ", ".join(f"rho{i + 1}" for i in cone) + "}"


def _need_complete(f: fanm.Fan, rep: Report) -> None:
    diag = fanm.require_complete(f)
    if diag.completeness == fanm.ASSERTED:
        if not f.complete_asserted:
            raise _NeedsCompleteness(
                "completeness cannot be verified in dimension >= 3; add \"complete\": true to assert it"
            )
        rep.diagnostics.append("completeness asserted by the input, not verified; results are conditional")


def _fmt_relation(name: str, coeffs, basis_names) -> str:
    terms = []
    for c, b in zip(coeffs, basis_names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}{b}"))
    if not terms:
        return f"{name} = 0"
    first_sign, first = terms[0]
    body = ("-" if first_sign == "-" else "") + first
    body += "".join(f" {s} {t}" for s, t in terms[1:])
    return f"{name} = {body}"


def _class_table(f: fanm.Fan, cg: cgm.ClassGroup) -> dict[str, Any]:
    basis = cg.preferred_basis()
    names = [f"[D{i + 1}]" for i in range(f.nrays)]
    out: dict[str, Any] = {"free_rank": cg.free_rank, "torsion": list(cg.torsion)}
    if basis is not None:
        bel = [cg.divisor_classes[i] for i in basis]
        coords = [list(cg.express(x, bel)) for x in cg.divisor_classes]
        out["basis"] = [names[i] for i in basis]
        out["classes"] = coords
        out["relations"] = [
            _fmt_relation(names[i], coords[i], out["basis"])
            for i in range(f.nrays)
            if i not in basis
        ]
    else:
        out["basis"] = None
        out["classes"] = [
            {"free": list(x.free), "torsion": list(x.torsion)} for x in cg.divisor_classes
        ]
        out["relations"] = []
    return out


def cmd_check_additive(args, rep: Report) -> None:
    f = _load(args, "fan")
    _need_complete(f, rep)
    ok, coll = fanm.admits_additive_action(f)
    rep.verdicts["admits_additive_action"] = ok
    if coll is not None:
        rep.results["complete_collection"] = {
            "basis_rays": list(coll.basis_rays),
            "roots": [list(r.e) for r in coll.roots],
        }
        rep.lines.append(
            "witness: basis rays "
            + _rays_label(coll.basis_rays)
            + ", roots "
            + ", ".join(str(r.e) for r in coll.roots)
        )


def cmd_demazure_roots(args, rep: Report) -> None:
    f = _load(args, "fan")
    _need_complete(f, rep)
    roots = fanm.demazure_roots(f)
    rep.results["roots"] = [{"e": list(r.e), "ray": r.distinguished} for r in roots]
    rep.results["count"] = len(roots)
    rep.lines.append(f"{len(roots)} Demazure roots")
    rep.lines += [f"e = {r.e}  (distinguished ray rho{r.distinguished + 1})" for r in roots]


def cmd_class_group(args, rep: Report) -> None:
    f = _load(args, "fan")
    cg = cgm.class_group(f)
    table = _class_table(f, cg)
    rep.results.update(table)
    tors = "".join(f" + Z/{d}" for d in cg.torsion)
    rep.lines.append(f"Cl(X) = Z^{cg.free_rank}{tors}")
    if table["basis"]:
        rep.lines.append("free basis: " + ", ".join(table["basis"]))
        rep.lines += table["relations"]


def cmd_orbits(args, rep: Report) -> None:
    f = _load(args, "fan")
    _need_complete(f, rep)
    cg = cgm.class_group(f)
    bound = args.search_bound
    ups = cgm.upsilon(f, cg, bound)
    pb = cg.preferred_basis()
    basis = [cg.divisor_classes[i] for i in pb] if pb else []

    def gens(m):
        if basis:
            return sorted(list(cg.express(x, basis)) for x in set(m.generators))
        return sorted(list(x.as_tuple()) for x in set(m.generators))

    rep.results["upsilon"] = [
        {"generators": gens(rep_m), "cones": [list(c) for c in ups.cones_of(k)]}
        for k, rep_m in enumerate(ups.representatives)
    ]
    rep.lines.append(f"Upsilon: {len(ups.representatives)} distinct monoids")
    for k, rep_m in enumerate(ups.representatives):
        rep.lines.append(
            f"  Gamma class {k}: <{', '.join(map(str, gens(rep_m)))}>  on "
            + ", ".join(_label(c) for c in ups.cones_of(k))
        )
    classes = cgm.orbit_classes(f, cg, bound)
    rep.results["orbit_classes"] = [[list(c) for c in cl] for cl in classes]
    rep.lines.append(f"Aut(X)-orbit classes of torus orbits: {len(classes)}")
    for cl in classes:
        rep.lines.append("  " + ", ".join(_label(c) for c in cl))
    report = euler.classify_euler_orbits(f, bound)
    rep.lines.append("Euler points by torus orbit:")
    recs = []
    for r in report.records:
        recs.append(
            {"cone": list(r.cone), "smooth": r.smooth, "euler": r.euler,
             "target": list(r.target) if r.target is not None else None,
             "ray_permutation": list(r.witness.ray_permutation) if r.witness else None}
        )
        flag = "undefined (singular)" if r.euler is None else ("Euler" if r.euler else "not Euler")
        via = f" via {_label(r.target)}" if r.target is not None else ""
        rep.lines.append(f"  O({_label(r.cone)}): {flag}{via}")
    rep.results["cones"] = recs
    rep.verdicts["open_orbit_euler"] = bool(report[()].euler)


def cmd_check_inscribed(args, rep: Report) -> None:
    P = _load(args, "polytope")
    w = polm.is_inscribed_in_rectangle(P)
    rep.verdicts["inscribed_in_rectangle"] = w is not None
    if w is not None:
        rep.results["witness"] = {"v0": list(w.v0), "edge_basis": [list(e) for e in w.edge_basis]}
        rep.lines.append(f"witness vertex {w.v0}, edge basis {list(w.edge_basis)}")


def cmd_check_very_ample(args, rep: Report) -> None:
    P = _load(args, "polytope")
    rep.verdicts["very_ample"] = polm.is_very_ample(P)


def cmd_normal_fan(args, rep: Report) -> None:
    P = _load(args, "polytope")
    doc = fan_document(polm.normal_fan(P))
    rep.results["fan"] = doc
    rep.raw_text = json.dumps(doc, indent=2)


def cmd_fundamental_form(args, rep: Report) -> None:
    P = _load(args, "polytope")
    w = polm.is_inscribed_in_rectangle(P)
    rep.verdicts["inscribed_in_rectangle"] = w is not None
    if w is None:
        rep.diagnostics.append("no rectangle witness; the monomial fundamental form is not defined here")
        return
    form = euler.fundamental_form(P, w)
    act = euler.euler_action(P, w)
    rep.verdicts["symbol_system"] = euler.is_symbol_system(form)
    rep.results["witness"] = {"v0": list(w.v0), "edge_basis": [list(e) for e in w.edge_basis]}
    rep.results["graded_exponents"] = {
        str(k): sorted(list(e) for e in v) for k, v in form.grading.items()
    }
    rep.results["euler_lambda"] = list(act.lam)
    rep.lines.append(f"vertex {w.v0}, edge basis {list(w.edge_basis)}, lambda = {act.lam}")
    for k, v in form.grading.items():
        rep.lines.append(f"F^{k}: " + " ".join(str(e) for e in sorted(v)))


def cmd_euler_symmetric(args, rep: Report) -> None:
    if args.fan:
        f = _load(args, "fan")
        _need_complete(f, rep)
        rep.verdicts["euler_symmetric"] = euler.is_euler_symmetric(f)
    else:
        P = _load(args, "polytope")
        rep.verdicts["euler_symmetric"] = euler.is_euler_symmetric(P)


def _load(args, kind: str):
    text = args._texts[kind]
    return fan_from_text(text) if kind == "fan" else polytope_from_text(text)


COMMANDS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "check-additive": (cmd_check_additive, ("fan",)),
    "demazure-roots": (cmd_demazure_roots, ("fan",)),
    "class-group": (cmd_class_group, ("fan",)),
    "orbits": (cmd_orbits, ("fan",)),
    "check-inscribed": (cmd_check_inscribed, ("polytope",)),
    "check-very-ample": (cmd_check_very_ample, ("polytope",)),
    "normal-fan": (cmd_normal_fan, ("polytope",)),
    "fundamental-form": (cmd_fundamental_form, ("polytope",)),
    "euler-symmetric": (cmd_euler_symmetric, ("fan", "polytope")),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--search-bound", type=int, default=None, metavar="K",
        help="cap on generator multiplicities in non-pointed monoid searches",
    )
    parser = argparse.ArgumentParser(
        prog="eulertoric",
        description="Additive actions and Euler-symmetry of toric varieties.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, kinds) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common])
        if len(kinds) == 2:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--fan", metavar="F")
            g.add_argument("--polytope", metavar="P")
        else:
            p.add_argument(f"--{kinds[0]}", required=True, metavar=kinds[0][0].upper())
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    handler, kinds = COMMANDS[args.command]
    texts, digest = {}, hashlib.sha256()
    for kind in kinds:
        path = getattr(args, kind, None)
        if path is None:
            continue
        try:
            raw = Path(path).read_bytes()
        except OSError as exc:
            print(f"error: cannot read {kind} file: {exc}", file=err)
            return EXIT_INVALID
        digest.update(raw)
        texts[kind] = raw.decode("utf-8")
    args._texts = texts
    rep = Report(args.command, digest.hexdigest())
    t0 = time.perf_counter()
    try:
        handler(args, rep)
    except _NeedsCompleteness as exc:
        print(f"inconclusive: {exc}", file=err)
        return EXIT_INCONCLUSIVE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=err)
        return EXIT_INCONCLUSIVE
    except InvalidInput as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    rep.timing = time.perf_counter() - t0
    print(rep.to_json() if args.json else rep.to_text(), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
