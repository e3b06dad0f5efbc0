"""Command line interface.

    horocox validate   FILE
    horocox cox        FILE [--eliminate]
    horocox classgroup FILE
    horocox tfan       FILE [--weyl LABEL]
    horocox example    NAME

``FILE`` is a path, ``-`` for stdin, or ``builtin:NAME``.  ``--format
structured`` prints JSON (``schema_version`` 1) instead of text.  Exit codes:
0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import builtin
from .classgroup import AbelianGroup, assign_degrees, check_homogeneity, class_group, relation_matrix
from .coxring import CoxPresentation, cox_presentation, eliminated_presentation
from .divfan import errors, support
from .document import DocumentError, build, dump, parse
from .horospherical import build_q_divisor, validate_colored
from .polyhedra import Polyhedron, format_vector

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    if path.startswith("builtin:"):
        try:
            return json.dumps(builtin.example_data(path.split(":", 1)[1]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _poly_data(p: Polyhedron):
    if p.empty:
        return {"empty": True}
    return {"vertices": [[str(x) for x in v] for v in p.vertices], "rays": [list(r) for r in p.rays]}


def _poly_text(p: Polyhedron) -> str:
    if p.empty:
        return "empty"
    verts = ", ".join(format_vector(v) for v in p.vertices)
    rays = ", ".join(format_vector(r) for r in p.rays)
    return f"conv{{{verts}}} + cone{{{rays}}}"


def _presentation_data(P: CoxPresentation):
    group: AbelianGroup = P.group
    variables = []
    for v in P.variables:
        entry = {"name": v.name, "alias": v.alias, "kind": v.kind}
        entry["degree"] = list(P.degrees[v.name])
        variables.append(entry)
    relations = []
    for r in P.relations:
        terms = [{"coefficient": c, "monomial": {P.aliases[x]: e for x, e in m}} for c, m in r.terms]
        relations.append({"text": r.render(P.aliases), "terms": terms})
    return {
        "schema_version": SCHEMA_VERSION,
        "eliminated": P.eliminated,
        "variables": variables,
        "relations": relations,
        "flag": {
            "id": P.flag.id,
            "color_slots": list(P.flag.color_slots),
            "symbolic": P.flag.symbolic_flag,
        },
        "class_group": {"free_rank": group.free_rank, "torsion": list(group.torsion)},
        "homogeneous": check_homogeneity(P),
    }


def _presentation_text(P: CoxPresentation) -> str:
    group: AbelianGroup = P.group
    lines = []
    names = ", ".join(v.alias for v in P.variables)
    if P.flag.symbolic_flag:
        names += f", R(G/P)[{P.flag.id}]"
    lines.append(f"variables ({len(P.variables)}): {names}")
    lines.append("relations:")
    for r in P.render_relations():
        lines.append(f"  {r}")
    if not P.relations:
        lines.append("  (none)")
    lines.append(f"grading group: {group.describe()}")
    lines.append("variables:")
    width = max((len(v.alias) for v in P.variables), default=0)
    for v in P.variables:
        lines.append(f"  {v.alias:<{width}}  {v.kind:<6}  {group.format_element(P.degrees[v.name])}  {v.name}")
    return "\n".join(lines)


def cmd_validate(E, flag, args):
    diags = validate_colored(E)
    if args.format == "structured":
        print(json.dumps({"schema_version": SCHEMA_VERSION, "diagnostics": [
            {"level": d.level, "message": d.message} for d in diags
        ]}, indent=2))
    else:
        for d in diags:
            print(d)
    return 1 if errors(diags) else 0


def _require_valid(E) -> Optional[int]:
    errs = errors(validate_colored(E))
    if errs:
        for d in errs:
            print(d, file=sys.stderr)
        return 1
    return None


def cmd_cox(E, flag, args):
    if (code := _require_valid(E)) is not None:
        return code
    if args.eliminate:
        if len(support(E.fan)) < 2:
            raise UsageError("--eliminate: elimination requires at least two support points")
        P = eliminated_presentation(E, flag)
    else:
        P = cox_presentation(E, flag)
    P = assign_degrees(E, P)
    if args.format == "structured":
        print(json.dumps(_presentation_data(P), indent=2))
    else:
        print(_presentation_text(P))
    return 0


def cmd_classgroup(E, flag, args):
    if (code := _require_valid(E)) is not None:
        return code
    G = class_group(E)
    P = assign_degrees(E, cox_presentation(E, flag))
    if args.format == "structured":
        print(json.dumps({
            "schema_version": SCHEMA_VERSION,
            "free_rank": G.free_rank,
            "torsion": list(G.torsion),
            "relation_matrix": relation_matrix(E),
            "degrees": {v.alias: list(P.degrees[v.name]) for v in P.variables},
        }, indent=2))
        return 0
    print(f"rank {G.free_rank}, torsion {list(G.torsion)}")
    print(f"Cl(X) = {G.describe()}")
    print("degrees:")
    for v in P.variables:
        print(f"  {v.alias}: {G.format_element(P.degrees[v.name])}")
    if P.flag.symbolic_flag:
        for slot in P.flag.color_slots:
            print(f"  R(G/P)[{slot}]: {G.format_element(P.degrees['flag:' + slot])}")
    return 0


def cmd_tfan(E, flag, args):
    if (code := _require_valid(E)) is not None:
        return code
    qs = [build_q_divisor(E, i, args.weyl) for i in range(len(E.elements))]
    if args.format == "structured":
        print(json.dumps({
            "schema_version": SCHEMA_VERSION,
            "weyl": args.weyl,
            "divisors": [
                {
                    "element": q.element_index,
                    "tail": [list(g) for g in E.elements[q.element_index].divisor.tail.generators],
                    "coefficients": [{"label": str(lab), **_poly_data(p)} for lab, p in q.coefficients],
                }
                for q in qs
            ],
        }, indent=2))
        return 0
    for q in qs:
        tail = E.elements[q.element_index].divisor.tail
        print(f"Q({args.weyl}, element {q.element_index}), tail cone{{{', '.join(format_vector(g) for g in tail.generators)}}}")
        for lab, p in q.coefficients:
            print(f"  {str(lab):<12} {_poly_text(p)}")
    return 0


def cmd_example(args):
    try:
        doc = builtin.example_document(args.file)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(dump(doc))
    return 0


COMMANDS = {"validate": cmd_validate, "cox": cmd_cox, "classgroup": cmd_classgroup, "tfan": cmd_tfan}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="horocox", description="Cox rings of complexity-one horospherical varieties.")
    p.add_argument("command", choices=sorted(list(COMMANDS) + ["example"]))
    p.add_argument("file", help="input document (path, '-', builtin:NAME) or the example name")
    p.add_argument("--eliminate", action="store_true", help="eliminate T0, T1 (cox)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--weyl", default="e", help="Weyl group label for tfan (default: e)")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "example":
            return cmd_example(args)
        doc = parse(_read(args.file))
        E, flag = build(doc)
        return COMMANDS[args.command](E, flag, args)
    except (UsageError, DocumentError) as exc:
        print(f"horocox: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"horocox: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
