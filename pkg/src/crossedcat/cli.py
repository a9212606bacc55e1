"""Command-line driver.

    crossedcat <verb> (--ty --group 2 --chi "[[1/2]]" --tau +
                       | --pointed --group 2 --omega omega.json)
                      [--brute-force] [--json] [-o PATH]

Exit status: 0 when every verification passed, 1 when one failed (the
witness is printed), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .abgroup import AbGroup, GroupError
from .cohomology import CochainError, cochain_from_json, cochain_to_json, is_coboundary
from .cyclotomic import CyclotomicError, to_json
from .quadforms import Bicharacter
from . import pointed as pt
from . import tycat as ty_
from .skeletal import (
    CoherenceError,
    hexagon_report,
    monoidal_id_autos,
    obstruction_cocycle,
    ordinary,
    trivializations,
    trivializations_direct,
)

VERBS = ("pentagon", "braidings", "crossed-braidings", "relative-braidings", "ribbons",
         "obstruction", "trivializations", "ising-report")


class InputError(ValueError):
    pass


# -- serialization ---------------------------------------------------------------


def label_json(x):
    return x if isinstance(x, str) else list(x)


def table_json(R) -> list[dict]:
    """Braiding table as a list of cells sorted by the order of the keys given."""
    return [{"x": label_json(x), "y": label_json(y), "s": label_json(s), "value": to_json(v)}
            for (x, y, s), v in R.items()]


def canonical(items: list) -> list:
    return sorted(items, key=lambda it: json.dumps(it, sort_keys=True))


def ordered_table(R, cells) -> dict:
    return {c: R[c] for c in cells}


# -- instances -------------------------------------------------------------------


def load_ty(args) -> ty_.TYData:
    if args.chi is None or args.tau is None:
        raise InputError("--ty needs --group, --chi and --tau")
    A = AbGroup.parse(args.group)
    chi = Bicharacter.parse(A, args.chi)
    sign = {"+": 1, "-": -1, "+1": 1, "-1": -1}.get(args.tau)
    if sign is None:
        raise InputError(f"--tau must be + or -, got {args.tau!r}")
    return ty_.make_ty(A, chi, sign)


def load_pointed(args) -> pt.PointedCat:
    A = AbGroup.parse(args.group)
    if args.omega is None:
        return pt.PointedCat.trivial(A)
    try:
        obj = json.loads(Path(args.omega).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read omega file {args.omega}: {exc}") from exc
    obj.setdefault("group", list(A.invariant_factors))
    omega = cochain_from_json(obj, default_coeff_order=pt.default_coeff_order(A))
    if omega.source != A:
        raise InputError(f"omega file is for {omega.source}, not {A}")
    return pt.PointedCat(A, omega)


def instance_json(args, obj) -> dict:
    if isinstance(obj, ty_.TYData):
        return {"kind": "ty", "group": list(obj.group.invariant_factors),
                "chi": obj.chi.literal(), "tau_sign": obj.tau_sign, "label": obj.label()}
    return {"kind": "pointed", "group": list(obj.group.invariant_factors),
            "omega": cochain_to_json(obj.omega)}


# -- verbs -------------------------------------------------------------------------


def cmd_pentagon(args, inst) -> tuple[dict, bool]:
    if isinstance(inst, ty_.TYData):
        rep = ty_.pentagon_check(inst)
        zig = all(z == 1 for x in inst.simples for z in inst.category.zigzag(x))
        return {"pentagon": rep.holds, "quadruples": rep.quadruples,
                "failures": [str(f) for f in rep.failures[:5]], "zigzags": zig}, rep.holds and zig
    fails = inst.category.pentagon_failures()
    return {"pentagon": not fails, "quadruples": inst.group.order ** 4,
            "failures": [str(f) for f in fails[:5]]}, not fails


def _braiding_result(inst, tables, method: str) -> dict:
    if isinstance(inst, ty_.TYData):
        cells = ty_.braiding_cells(inst)
    else:
        cells = pt.braiding_cells(inst)
    items = canonical([table_json(ordered_table(R, [c for c in cells if c in R])) for R in tables])
    return {"method": method, "count": len(items), "tables": items}


def cmd_braidings(args, inst) -> tuple[dict, bool]:
    if isinstance(inst, ty_.TYData):
        if args.brute_force:
            tables = ty_.brute_force_braidings(inst)
        else:
            tables = [cb.table() for cb in ty_.braidings(inst)]
        ok = all(hexagon_report(ordinary(inst.category, R), stop_after=1).holds for R in tables)
        out = _braiding_result(inst, tables, "brute-force" if args.brute_force else "formula")
        out["elementary_abelian_2"] = inst.group.is_elementary_2()
        return out, ok
    if args.brute_force:
        tables = pt.braidings_pointed(inst)
    else:
        tables = pt.braidings_from_theorem(inst)
    ok = all(hexagon_report(ordinary(inst.category, R), stop_after=1).holds for R in tables)
    out = _braiding_result(inst, tables, "brute-force" if args.brute_force else "trivializations")
    out["quadratic_diagonals"] = canonical(
        [[{"order": r.denominator, "exp": r.numerator} for r in pt.diagonal_phases(inst, R)]
         for R in tables])
    return out, ok


def cmd_crossed(args, inst) -> tuple[dict, bool]:
    if isinstance(inst, pt.PointedCat):
        chk = pt.verify_crossed(inst)
        return {"canonical_crossed_structure": {"action": chk.action, "hexagons": chk.hexagons,
                                                "compatibility": chk.compatibility},
                "alternative_formulas": pt.displayed_formula_report(inst)}, chk.holds
    strict, other = ty_.z2_actions(inst)
    if args.brute_force:
        tables = ty_.brute_force_crossed_braidings(inst, strict)
        nonstrict = len(ty_.brute_force_crossed_braidings(inst, other))
    else:
        cbs = ty_.crossed_braidings(inst)
        tables = [cb.table() for cb in cbs]
        nonstrict = sum(ty_.verify_crossed_braiding(inst, other, R, stop_after=1).holds
                        for R in tables)
    ok = all(ty_.verify_crossed_braiding(inst, strict, R).holds for R in tables)
    out = _braiding_result(inst, tables, "brute-force" if args.brute_force else "formula")
    out["nonstrict_action_solutions"] = nonstrict
    return out, ok


def cmd_relative(args, inst) -> tuple[dict, bool]:
    if not isinstance(inst, ty_.TYData):
        raise InputError("relative-braidings needs a --ty instance")
    if args.brute_force:
        tables = ty_.brute_force_relative_braidings(inst)
    else:
        tables = [rb.table() for rb in ty_.relative_braidings(inst)]
    ok = all(ty_.relative_hexagons_hold(inst, R) for R in tables)
    return _braiding_result(inst, tables, "brute-force" if args.brute_force else "formula"), ok


def cmd_ribbons(args, inst) -> tuple[dict, bool]:
    if not isinstance(inst, ty_.TYData):
        raise InputError("ribbons needs a --ty instance")
    ok = True
    entries = []
    for cb in ty_.crossed_braidings(inst):
        R = cb.table()
        if args.brute_force:
            thetas = ty_.brute_force_twists(inst, R)
        else:
            thetas = [tw.values(inst) for tw in ty_.twists(inst, cb)]
        good = all(not ty_.twist_failures(inst, R, th) for th in thetas)
        ok = ok and good and len(thetas) == 2
        entries.append({
            "q": cb.q.to_json(), "alpha": to_json(cb.alpha),
            "twists": canonical([[{"x": label_json(x), "theta": to_json(th[x])} for x in inst.simples]
                                 for th in thetas]),
        })
    entries = canonical(entries)
    return {"method": "brute-force" if args.brute_force else "formula",
            "crossed_braidings": len(entries),
            "ribbons": sum(len(e["twists"]) for e in entries), "entries": entries}, ok


def _ty_trivial_action_choices(inst: ty_.TYData):
    """For elementary abelian A the strict action fixes every simple: choices chi_g = 1."""
    if not inst.group.is_elementary_2():
        raise CoherenceError("action not pointwise trivializable: T(1) inverts A")
    one = inst.field.one()
    return {g: {x: one for x in inst.simples} for g in ty_.Z2.elements()}


def cmd_obstruction(args, inst) -> tuple[dict, bool]:
    if isinstance(inst, pt.PointedCat):
        res = pt.obstruction(inst)
        out = {"eta_exists": res.eta is not None, "class_vanishes": res.vanishes,
               "braided": res.braided}
        if res.eta is not None:
            engine = pt.engine_obstruction(inst, res.eta)
            out["eta"] = cochain_to_json(res.eta)
            out["obstruction"] = {str(k): list(v) for k, v in sorted(res.obstruction.table.items())}
            out["engine_agrees"] = engine == res.obstruction
            return out, bool(out["engine_agrees"])
        return out, True
    out = {"actions": []}
    try:
        choices = _ty_trivial_action_choices(inst)
    except CoherenceError as exc:
        return {"trivializable": False, "reason": str(exc)}, True
    autos = monoidal_id_autos(inst.fusion)
    for name, act in zip(("strict", "non-strict"), ty_.z2_actions(inst)):
        b = obstruction_cocycle(act, choices, autos)
        out["actions"].append({"action": name,
                               "obstruction": {str(k): list(v) for k, v in sorted(b.table.items())},
                               "class_vanishes": is_coboundary(b) is not None})
    return out, True


def cmd_trivializations(args, inst) -> tuple[dict, bool]:
    if isinstance(inst, pt.PointedCat):
        res = pt.obstruction(inst)
        if res.eta is None:
            return {"eta_exists": False, "count": 0}, True
        act = pt.crossed_action(inst)
        choices = pt.choices_from_eta(inst, res.eta)
        autos = inst.autos
        actions = [("crossed", act, choices)]
    else:
        try:
            choices = _ty_trivial_action_choices(inst)
        except CoherenceError as exc:
            return {"trivializable": False, "reason": str(exc)}, True
        autos = monoidal_id_autos(inst.fusion)
        actions = [(n, a, choices) for n, a in zip(("strict", "non-strict"), ty_.z2_actions(inst))]
    out, ok = {"actions": []}, True
    for name, act, ch in actions:
        found = (trivializations_direct if args.brute_force else trivializations)(act, ch, autos)
        valid = all(t.is_valid() for t in found)
        ok = ok and valid
        etas = canonical([[[to_json(c) for c in row] for row in t.key()] for t in found])
        out["actions"].append({"action": name, "count": len(found), "valid": valid,
                               "etas": etas})
    return out, ok


def cmd_ising(args, inst) -> tuple[dict, bool]:
    rep = ty_.ising_report()
    ok = all(c["pentagon"] and all(b["crossed_hexagons"] and b["ordinary_hexagons"]
                                   and all(t["checks"] for t in b["twists"])
                                   for b in c["braidings"])
             for c in rep["categories"])
    return rep, ok


COMMANDS = {
    "pentagon": cmd_pentagon,
    "braidings": cmd_braidings,
    "crossed-braidings": cmd_crossed,
    "relative-braidings": cmd_relative,
    "ribbons": cmd_ribbons,
    "obstruction": cmd_obstruction,
    "trivializations": cmd_trivializations,
    "ising-report": cmd_ising,
}


# -- text rendering ------------------------------------------------------------------


def _fmt_value(v: dict) -> str:
    if "order" in v:
        return "1" if v["order"] == 1 else f"z{v['order']}^{v['exp']}"
    return "[" + ", ".join(v["coeffs"]) + f"] in Q(z{v['conductor']})"


def render_text(verb: str, inst_info: dict | None, result: dict, ok: bool) -> str:
    lines = []
    if inst_info:
        lines.append(f"instance: {inst_info.get('label') or inst_info['kind'] + ' ' + str(inst_info['group'])}")
    if verb == "ising-report":
        t = result["totals"]
        lines.append(f"fusion categories: {t['fusion']}")
        lines.append(f"braided categories: {t['braided']}")
        lines.append(f"ribbon structures: {t['ribbon']}")
        for c in result["categories"]:
            lines.append(f"  {c['label']}: pentagon {c['pentagon']}, braidings {len(c['braidings'])}, "
                         f"classes {c['equivalence_classes']}")
        lines.append("alpha check (alpha^2 = tau sum q):")
        for d in result["alpha_discrepancy"]:
            comp = ", ".join(_fmt_value(a) for a in d["computed_alpha"])
            lines.append(f"  tau {'+' if d['tau_sign'] > 0 else '-'}, q(psi) = {_fmt_value(d['q_psi'])}: "
                         f"computed alpha = {comp}; displayed {_fmt_value(d['displayed_alpha'])} "
                         f"{'squares correctly' if d['displayed_alpha_squares_correctly'] else 'does not square to tau sum q'}")
    else:
        for key, val in result.items():
            if key == "tables":
                for i, tab in enumerate(val):
                    cells = "  ".join(f"c({c['x']},{c['y']};{c['s']})={_fmt_value(c['value'])}" for c in tab)
                    lines.append(f"  [{i}] {cells}")
            elif isinstance(val, (list, dict)):
                lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
            else:
                lines.append(f"{key}: {val}")
        if "count" in result:
            lines.append(f"{result['count']} {verb}")
    lines.append("status: " + ("ok" if ok else "FAILED"))
    return "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossedcat",
                                description="Verify and classify pointed and Tambara-Yamagami categories.")
    p.add_argument("verb", choices=VERBS)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--ty", action="store_true", help="Tambara-Yamagami instance")
    kind.add_argument("--pointed", action="store_true", help="pointed instance Vec_A^omega")
    p.add_argument("--group", help="invariant factors, e.g. 2,2")
    p.add_argument("--chi", help='bicharacter exponent matrix, e.g. "[[1/2]]"')
    p.add_argument("--tau", help="sign of tau = +-1/sqrt|A|")
    p.add_argument("--omega", help="3-cocycle JSON file (default: trivial)")
    p.add_argument("--brute-force", action="store_true", help="use the exhaustive search path")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("-o", "--output", help="write the report to this path")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "ising-report":
            inst, info = None, None
        else:
            if not (args.ty or args.pointed):
                raise InputError(f"{args.verb} needs --ty or --pointed")
            if args.group is None:
                raise InputError("--group is required")
            inst = load_ty(args) if args.ty else load_pointed(args)
            info = instance_json(args, inst)
        result, ok = COMMANDS[args.verb](args, inst)
    except (InputError, GroupError, CochainError, CyclotomicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = {"verb": args.verb, "instance": info, "result": result, "ok": ok}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(args.verb, info, result, ok)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
