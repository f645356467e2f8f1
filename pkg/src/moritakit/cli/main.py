"""Command dispatch: JSON in, JSON or tables out, exit codes by error family."""

import argparse
import json
import os
import sys

from .. import bar as BR
from .. import fincat as FC
from .. import operad as OP
from .. import simpset as SS
from .. import theory as TH
from ..errors import (
    BoundTooSmall,
    LimitExceeded,
    MoritaKitError,
    OracleDisagreement,
    PropertyViolation,
    ValidationError,
)
from .suite import INVARIANTS, REGISTRY, VerifyConfig, format_report, verify_suite

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION, EXIT_BOUND = 0, 1, 2, 3


# -- input resolution -------------------------------------------------------------
def load_json(path):
    """Read a JSON file, ``-`` for standard input, or inline JSON starting with ``{``.

    A bare identifier that is not an existing file is returned as a name
    (``Split``, ``iota``, ``B``).
    """
    if path.isidentifier() and not os.path.exists(path):
        return path
    if path.lstrip().startswith("{"):
        try:
            return json.loads(path)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"bad inline JSON: {exc}") from None
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}", path) from None


def as_category(raw):
    """A category from full JSON, a standard name or ``{"standard": name}``."""
    if isinstance(raw, str):
        return FC.standard_category(raw)
    if isinstance(raw, dict) and "standard" in raw:
        return FC.standard_category(raw["standard"])
    return FC.validate_category(raw)


def as_functor(raw):
    if raw == "iota" or (isinstance(raw, dict) and raw.get("standard") == "iota"):
        return FC.iota()
    try:
        return FC.Functor(as_category(raw["source"]), as_category(raw["target"]), raw["obj_map"], raw.get("mor_map", {}))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed functor description: {exc!r}") from None


NAMED_OPERADS = {"B": OP.operad_B, "terminal": OP.terminal_operad}


def as_operad(raw):
    """Full operad JSON, ``{"standard": "B"}``, ``{"category": C}`` (unary image) or ``{"tree": T}``."""
    if isinstance(raw, str):
        raw = {"standard": raw}
    if "standard" in raw:
        name = raw["standard"]
        if name not in NAMED_OPERADS:
            raise ValidationError(f"unknown standard operad {name!r}", name)
        return NAMED_OPERADS[name]()
    if "category" in raw:
        return OP.category_to_operad(as_category(raw["category"]))
    if "tree" in raw:
        return OP.free_operad_on_tree(OP.tree_from_json(raw["tree"]))
    if "objects" in raw:
        return OP.category_to_operad(as_category(raw))
    return OP.validate_operad(raw)


def as_operad_map(raw):
    """``{"source", "target", "colour_map", "op_map"}``, ``{"unit": O}`` or ``{"functor": F}``."""
    if "unit" in raw:
        return OP.cauchy_completion_operad(as_operad(raw["unit"]))[1]
    if "functor" in raw:
        return OP.functor_to_operad_map(as_functor(raw["functor"]))
    try:
        return OP.operad_map_from_json(raw, as_operad(raw["source"]), as_operad(raw["target"]))
    except KeyError as exc:
        raise ValidationError(f"operad map description lacks {exc}") from None


def detect(raw):
    if isinstance(raw, dict):
        if "dim" in raw:
            return "sset"
        if "edges" in raw:
            return "tree"
        if "obj_map" in raw:
            return "functor"
        if "colour_map" in raw or "unit" in raw or "functor" in raw:
            return "operad-map"
        if "colours" in raw or raw.get("standard") in NAMED_OPERADS:
            return "operad"
        if "objects" in raw or "standard" in raw:
            return "category"
    raise ValidationError("cannot tell what kind of object the input describes")


def emit(obj, stream):
    stream.write(json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n")


# -- commands ----------------------------------------------------------------------
def cmd_validate(args, out):
    raw = load_json(args.input)
    kind = args.kind or detect(raw)
    builders = {
        "category": as_category,
        "functor": as_functor,
        "operad": as_operad,
        "operad-map": as_operad_map,
        "sset": SS.sset_from_json,
        "tree": OP.tree_from_json,
    }
    obj = builders[kind](raw)
    summary = {"kind": kind, "valid": True}
    if kind == "category":
        summary.update(objects=len(obj.objects), morphisms=len(obj.morphisms))
    elif kind == "operad":
        summary.update(colours=len(obj.colours), operations=len(obj.ops))
    elif kind == "sset":
        summary.update(counts=list(obj.counts()))
    emit(summary, out)
    return EXIT_OK


def cmd_karoubi(args, out):
    C = as_category(load_json(args.input))
    K, unit = FC.karoubi_envelope(C)
    emit({"category": K.to_json(), "unit": unit.to_json(), "cauchy_complete": FC.is_cauchy_complete(C)}, out)
    return EXIT_OK


def cmd_cauchy_operad(args, out):
    O = as_operad(load_json(args.input))
    K, unit = OP.cauchy_completion_operad(O)
    emit({"operad": K.to_json(), "unit": unit.to_json()}, out)
    return EXIT_OK


def cmd_morita(args, out):
    raw = load_json(args.input)
    if args.what == "cat":
        F = as_functor(raw)
        report = FC.morita_report(F).to_json()
        agree = FC.morita_cross_check(F, strict=False)
    else:
        f = as_operad_map(raw)
        report = OP.morita_report_op(f, cross_check=False).to_json()
        agree = OP.is_equivalence_op(OP.cauchy_operad_map(f)) == report["verdict"]
    report["oracle"] = "agree" if agree else "disagree"
    emit(report, out)
    if not agree:
        raise OracleDisagreement("definitional verdict and completion oracle disagree", report)
    return EXIT_OK


def cmd_nerve(args, out):
    C = as_category(load_json(args.input))
    N = SS.nerve(C, args.dim)
    out.write(",".join(str(k) for k in N.nondegenerate_counts()) + "\n")
    if args.all:
        out.write(",".join(str(k) for k in N.counts()) + "\n")
    return EXIT_OK


def cmd_ret(args, out):
    R, rho = SS.build_ret(args.dim)
    out.write(",".join(str(k) for k in R.nondegenerate_counts()) + "\n")
    out.write(f"rho injective: {str(rho.is_mono()).lower()}\n")
    return EXIT_OK


def _class_line(O, c, cl):
    ins = O.inputs(cl.op)
    return f"({','.join(map(str, cl.f))}) ({','.join(ins) or '-'}) {cl.op}"


def cmd_theory_hom(args, out):
    O = as_operad(load_json(args.input))
    c, d = TH.word(args.source), TH.word(args.target)
    for x in d:
        TH.clone_hom(O, c, x, oracle=args.oracle)
    arrows = TH.theory_hom(O, c, d)
    if args.json:
        emit([[{"f": list(cl.f), "inputs": list(O.inputs(cl.op)), "op": cl.op} for cl in a.components] for a in arrows], out)
    else:
        for a in arrows:
            out.write(" | ".join(_class_line(O, c, cl) for cl in a.components) + "\n")
        out.write(f"{len(arrows)} arrows\n")
    return EXIT_OK


def parse_arrow(O, text, source, target):
    """``"[0,0;m] [1;id_a]"``: one bracketed class per target entry, in any representative."""
    parts = text.replace("<", " ").replace(">", " ").split()
    comps = []
    for p in parts:
        body = p.strip("[]")
        f, _, op = body.rpartition(";")
        if op not in O.ops:
            raise ValidationError(f"unknown operation {op!r}", p)
        idx = tuple(int(i) for i in f.split(",") if i.strip())
        comps.append(TH.normalize(O, idx, op))
    arrow = TH.TheoryArrow(tuple(source), tuple(target), tuple(comps))
    if arrow not in TH.theory_hom(O, source, target):
        raise ValidationError(f"{text!r} is not an arrow {source} -> {target}", text)
    return arrow


def cmd_compose(args, out):
    O = as_operad(load_json(args.input))
    b, c, d = TH.word(args.source), TH.word(args.middle), TH.word(args.target)
    g = parse_arrow(O, args.g, b, c)
    h = parse_arrow(O, args.h, c, d)
    out.write(str(TH.compose_theory(O, h, g)) + "\n")
    return EXIT_OK


def cmd_retract_search(args, out):
    O = as_operad(load_json(args.input))
    found = TH.theory_retract_search(O, args.colour, args.length)
    for d, (r, i) in found:
        out.write(f"({','.join(d) or '-'})  r={r}  i={i}\n")
    out.write(f"{len(found)} words\n")
    return EXIT_OK


def cmd_dendroidal_nerve(args, out):
    O = as_operad(load_json(args.input))
    raw_tree = load_json(args.tree) if args.tree else None
    if raw_tree is not None:
        T = OP.tree_from_json(raw_tree)
    elif args.linear is not None:
        T = OP.linear_tree(args.linear)
    else:
        T = OP.corolla()
    maps = OP.dendroidal_nerve_at(O, T)
    if args.json:
        emit([m.to_json() for m in maps], out)
    else:
        out.write(f"{len(maps)}\n")
    return EXIT_OK


def cmd_algebras(args, out):
    O = as_operad(load_json(args.input))
    bound = {k: int(v) for k, v in _pairs(args.sizes).items()} if args.sizes else args.max_size
    algs = OP.enumerate_algebras(O, bound, iso_classes=args.iso)
    if args.json:
        emit([A.to_json() for A in algs], out)
    else:
        out.write(f"{len(algs)}\n")
    return EXIT_OK


def cmd_hokan(args, out):
    F = as_functor(load_json(args.input))
    mod = load_json(args.module)
    X = BR.module_from_json(mod, F.source)
    H = BR.ho_kan_extension(F, X, args.at, args.levels)
    out.write(",".join(str(len(lv)) for lv in H.levels) + "\n")
    out.write(f"components: {len(H.pi0())}\n")
    if args.compare_pi0:
        classes = BR.kan_colim_oracle(F, X, args.at)
        BR.compare_pi0(F, X, args.at, args.levels, strict=True)
        out.write(f"coend classes: {len(classes)} (agree)\n")
    return EXIT_OK


def cmd_verify_jk(args, out):
    O = as_operad(load_json(args.input))
    if args.algebra:
        X = TH.algebra_model(OP.algebra_from_json(load_json(args.algebra), O))
    else:
        X = TH.algebra_model(OP.enumerate_algebras(O, {c: 1 for c in O.colours})[0])
    report = BR.verify_homotopy_JK(
        O, X, TH.word(args.a), TH.word(args.b), levels=args.levels, words=args.words, seed=args.seed, corrupt=args.corrupt
    )
    emit(report.to_json(), out)
    if not report.passed:
        raise PropertyViolation(f"homotopy check {report.witness[0]} failed", report.witness)
    return EXIT_OK


def _pairs(text):
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        k, sep, v = part.partition("=")
        if not sep:
            raise ValidationError(f"expected key=value, got {part!r}", part)
        out[k.strip()] = v.strip()
    return out


def cmd_verify(args, out):
    if args.list:
        for p in REGISTRY:
            out.write(f"{p.name}\t{p.module}\t{p.statement}\n")
        return EXIT_OK
    cfg = VerifyConfig(seed=args.seed, only=tuple(args.only or ()), inject=tuple(args.inject or ()))
    if args.bounds:
        cfg.with_overrides(_pairs(args.bounds))
    summary = verify_suite(cfg)
    if args.json:
        emit(summary, out)
    else:
        out.write(format_report(summary))
    return EXIT_OK if summary["passed"] else EXIT_VIOLATION


# -- parser ------------------------------------------------------------------------
def build_parser():
    ap = argparse.ArgumentParser(prog="moritakit", description="Finite Morita theory: categories, operads, theories, bar constructions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a category, functor, operad, map, sset or tree")
    p.add_argument("input")
    p.add_argument("--kind", choices=["category", "functor", "operad", "operad-map", "sset", "tree"])
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("karoubi", help="Karoubi envelope of a category")
    p.add_argument("input")
    p.set_defaults(fn=cmd_karoubi)

    p = sub.add_parser("cauchy-operad", help="Cauchy completion of an operad")
    p.add_argument("input")
    p.set_defaults(fn=cmd_cauchy_operad)

    p = sub.add_parser("morita", help="Morita report of a functor or operad map")
    p.add_argument("what", choices=["cat", "operad"])
    p.add_argument("input")
    p.set_defaults(fn=cmd_morita)

    p = sub.add_parser("nerve", help="nondegenerate simplex counts of a nerve")
    p.add_argument("input")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--all", action="store_true", help="also print all simplex counts")
    p.set_defaults(fn=cmd_nerve)

    p = sub.add_parser("ret", help="the simplicial set Ret and its map to N(Split)")
    p.add_argument("--dim", type=int, default=4)
    p.set_defaults(fn=cmd_ret)

    p = sub.add_parser("theory-hom", help="arrows of the algebraic theory between two words")
    p.add_argument("input")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_theory_hom)

    p = sub.add_parser("compose", help="compose two theory arrows h . g")
    p.add_argument("input")
    p.add_argument("--source", required=True)
    p.add_argument("--middle", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--g", required=True, help='arrow source -> middle, e.g. "[0;id_a] [0;id_a]"')
    p.add_argument("--h", required=True, help="arrow middle -> target")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("retract-search", help="words exhibiting a colour as a retract in the theory")
    p.add_argument("input")
    p.add_argument("--colour", required=True)
    p.add_argument("--length", type=int, default=2)
    p.set_defaults(fn=cmd_retract_search)

    p = sub.add_parser("dendroidal-nerve", help="operad maps from the free operad on a tree")
    p.add_argument("input")
    p.add_argument("--tree")
    p.add_argument("--linear", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_dendroidal_nerve)

    p = sub.add_parser("algebras", help="enumerate finite algebras")
    p.add_argument("input")
    p.add_argument("--sizes", help="exact carrier sizes, e.g. a=2,b=2")
    p.add_argument("--max-size", type=int, default=2)
    p.add_argument("--iso", action="store_true", help="one algebra per isomorphism class")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_algebras)

    p = sub.add_parser("hokan", help="homotopy left Kan extension at an object")
    p.add_argument("input", help="functor JSON")
    p.add_argument("--module", required=True)
    p.add_argument("--at", required=True)
    p.add_argument("--levels", type=int, default=2)
    p.add_argument("--compare-pi0", action="store_true")
    p.set_defaults(fn=cmd_hokan)

    p = sub.add_parser("verify-jk", help="check the homotopies J and K on a theory instance")
    p.add_argument("input")
    p.add_argument("--algebra")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--levels", type=int, default=2)
    p.add_argument("--words", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt", choices=["psi"])
    p.set_defaults(fn=cmd_verify_jk)

    p = sub.add_parser("verify", help="run the randomized verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bounds", help="k=v,... overrides for corpus sizes and bounds")
    p.add_argument("--only", action="append", choices=list(INVARIANTS), metavar="PROPERTY")
    p.add_argument("--inject", action="append", choices=["corrupt-operad", "corrupt-psi"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--list", action="store_true", help="list registered properties")
    p.set_defaults(fn=cmd_verify)
    return ap


def run_command(argv, out=None, err=None):
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except ValidationError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        if getattr(exc, "witness", None) is not None:
            err.write(f"witness: {exc.witness!r}\n")
        return EXIT_INVALID
    except (OracleDisagreement, PropertyViolation) as exc:
        err.write(f"{type(exc).__name__}: {exc}\nwitness: {getattr(exc, 'witness', None)!r}\n")
        return EXIT_VIOLATION
    except (LimitExceeded, BoundTooSmall) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_BOUND
    except MoritaKitError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
