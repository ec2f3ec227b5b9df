"""Command line interface: ``gorlink <command> ...``.

Exit codes: 0 success, 1 domain error (bad mathematical input or a failed
verification), 2 usage error.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import betti, configurations, hilbert, monomials, oracle, sequences, simplicial
from .errors import DomainError, OracleDisagreement


@dataclass
class CommandResult:
    code: int
    output: str
    error: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _hvector(text: str):
    try:
        return sequences.parse_hvector(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _intlist(text: str):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(path: str):
    """A configuration or a simplicial complex, depending on the JSON keys."""
    text = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})")
    if "facets" in data:
        return simplicial.from_json(text)
    if "components" in data:
        return configurations.from_json(text)
    raise DomainError(f"{path}: neither a configuration nor a complex")


def _need_config(obj, path):
    if not isinstance(obj, configurations.Configuration):
        raise DomainError(f"{path}: expected a configuration")
    return obj


def _need_complex(obj, path):
    if not isinstance(obj, simplicial.SimplicialComplex):
        raise DomainError(f"{path}: expected a simplicial complex")
    return obj


# -- command bodies ---------------------------------------------------------------


def cmd_si(args):
    if args.action == "validate":
        reason = sequences.si_failure(args.h)
        if reason:
            raise DomainError(f"not an SI-sequence: {reason}")
        return "SI-sequence\n"
    p = sequences.si_params(args.h)
    return json.dumps({"c": p.c, "s": p.s, "t": p.t, "g": list(p.g)}) + "\n"


def cmd_lex(args):
    J = monomials.lex_segment_ideal(args.h, args.c)
    if args.action == "ideal":
        return J.render("z") + "\n"
    d = monomials.decompose(J)
    lines = [f"alpha = {d.alpha}"]
    for j, (part, hp) in enumerate(zip(d.parts, d.hparts)):
        lines.append(f"I_{j} = {part.render('z', start=2)}   h^{j} = {sequences.format_hvector(hp)}")
    ok = monomials.decomposition_hvector_check(args.h, d)
    lines.append(f"h(s) = sum_j h^j(s - j): {'ok' if ok else 'FAILS'}")
    return "\n".join(lines) + "\n"


def cmd_loim(args):
    return json.dumps([list(m) for m in monomials.loim(args.h, args.c)]) + "\n"


def cmd_build(args):
    kind = args.kind
    if kind == "z":
        X = configurations.build_z(args.h, args.c, args.t)
    elif kind == "zmax":
        X = configurations.build_z_max(args.c, args.t)
    elif kind == "gmax":
        build = configurations.relabel_g_max if args.relabel else configurations.build_g_max
        X = build(args.c, args.s, args.t)
    elif kind == "gorenstein":
        X = configurations.build_gorenstein(args.h, args.c)
    else:
        bl = simplicial.billera_lee_ball(args.h, "polytope")
        sphere = simplicial.boundary_complex(bl.complex)
        report = {
            "h": list(args.h),
            "vertices": bl.complex.n_vertices,
            "f_vector": list(simplicial.faces(sphere)),
            "h_vector": list(simplicial.h_vector(sphere)),
            "shelling_order": [list(f) for f in bl.complex.facets],
            "boundary": {"n": sphere.n_vertices - 1, "facets": [list(f) for f in sphere.facets]},
        }
        return json.dumps(report) + "\n"
    return configurations.to_json(X) + "\n"


def cmd_hvector(args):
    X = _need_config(_load(args.file), args.file)
    return sequences.format_hvector(hilbert.hvector_of(X)) + "\n"


def cmd_liaison(args):
    cvec = hilbert.ci_hvector(args.ci)
    rows = hilbert.link_table(cvec, args.g)
    c = len(args.ci)
    width = max(len(r) for r in rows.values()) + 1
    names = [("G", f"G_{c}"), ("Z", f"Z_{c}"), ("Y", f"Y_{c}"), ("dG", f"dG_{c + 1}"), ("sum", f"G_{c + 1}")]
    lines = ["degree: " + "".join(f"{k:5d}" for k in range(width))]
    for key, name in names:
        row = list(rows[key]) + [0] * (width - len(rows[key]))
        lines.append(f"{name:>7} " + "".join(f"{x:5d}" for x in row))
    return "\n".join(lines) + "\n"


def cmd_betti(args):
    if args.kind == "lex":
        table = betti.lex_betti(args.h, args.c)
    elif args.kind == "gorenstein":
        table = betti.gorenstein_max_betti(args.h)
    else:
        table = betti.closed_form_max_resolution(args.c, args.s, args.t, strict=not args.predict)
    return table.to_json() + "\n" if args.json else table.diagram()


def cmd_verify(args):
    what = args.what
    if what == "subspace":
        report = configurations.check_subspace_property(args.target_h)
        report["h"] = list(report["h"])
        out = json.dumps(report) + "\n"
        if not report["passes"]:
            raise DomainError("subspace property check failed\n" + out)
        return out
    obj = _load(args.file)
    if what == "stickfigure":
        X = _need_config(obj, args.file)
        if not configurations.is_generalized_stick_figure(X):
            bad = configurations.stick_figure_violations(X)[0]
            raise DomainError("not a generalized stick figure: " + " ".join("".join(map(str, p)) for p in bad))
        return "generalized stick figure\n"
    if what == "shelling":
        cx = _need_complex(obj, args.file)
        if not simplicial.is_shelling(cx):
            raise DomainError("facet order is not a shelling")
        return "shelling\n"
    # oracle
    if isinstance(obj, simplicial.SimplicialComplex):
        h = simplicial.h_vector(obj)
        cm = oracle.reisner_cm(obj)
        out = json.dumps({"f_vector": list(simplicial.faces(obj)), "h_vector": list(h), "cohen_macaulay": cm})
        if not cm:
            raise DomainError("complex is not Cohen-Macaulay\n" + out)
        return out + "\n"
    try:
        h = hilbert.hvector_of(obj)
    except OracleDisagreement as exc:
        raise DomainError(str(exc))
    return json.dumps({"h_vector": list(h), "components": len(obj), "agree": True}) + "\n"


def cmd_export(args):
    obj = _load(args.file)
    if args.fmt == "m2":
        X = _need_config(obj, args.file)
        return configurations.to_m2(X)
    if isinstance(obj, simplicial.SimplicialComplex):
        return simplicial.to_json(obj) + "\n"
    return configurations.to_json(obj) + "\n"


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gorlink", description="Gorenstein configurations from SI-sequences.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    si = sub.add_parser("si", help="SI-sequence validation and parameters")
    si.add_argument("action", choices=["validate", "params"])
    si.add_argument("h", type=_hvector)
    si.set_defaults(func=cmd_si)

    lex = sub.add_parser("lex", help="lex-segment ideals")
    lex.add_argument("action", choices=["ideal", "decompose"])
    lex.add_argument("h", type=_hvector)
    lex.add_argument("-c", type=int, required=True)
    lex.set_defaults(func=cmd_lex)

    lo = sub.add_parser("loim", help="lexicographic order ideal of monomials")
    lo.add_argument("h", type=_hvector)
    lo.add_argument("-c", type=int, required=True)
    lo.set_defaults(func=cmd_loim)

    build = sub.add_parser("build", help="build configurations")
    bsub = build.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    bz = bsub.add_parser("z")
    bz.add_argument("h", type=_hvector)
    bz.add_argument("-c", type=int, required=True)
    bz.add_argument("-t", type=int, required=True)
    bzm = bsub.add_parser("zmax")
    bzm.add_argument("-c", type=int, required=True)
    bzm.add_argument("-t", type=int, required=True)
    bgm = bsub.add_parser("gmax")
    bgm.add_argument("-c", type=int, required=True)
    bgm.add_argument("-s", type=int, required=True)
    bgm.add_argument("-t", type=int, required=True)
    bgm.add_argument("--relabel", action="store_true", help="rename for odd c (the G' variant)")
    bg = bsub.add_parser("gorenstein")
    bg.add_argument("h", type=_hvector)
    bg.add_argument("-c", type=int, default=None)
    bp = bsub.add_parser("polytope")
    bp.add_argument("h", type=_hvector)
    build.set_defaults(func=cmd_build)

    hv = sub.add_parser("hvector", help="h-vector of a configuration file")
    hv.add_argument("file")
    hv.set_defaults(func=cmd_hvector)

    li = sub.add_parser("liaison", help="h-vector table of a complete-intersection link")
    li.add_argument("--ci", type=_intlist, required=True)
    li.add_argument("--g", type=_hvector, required=True)
    li.set_defaults(func=cmd_liaison)

    bt = sub.add_parser("betti", help="Betti tables")
    btsub = bt.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    bl = btsub.add_parser("lex")
    bl.add_argument("h", type=_hvector)
    bl.add_argument("-c", type=int, required=True)
    bgo = btsub.add_parser("gorenstein")
    bgo.add_argument("h", type=_hvector)
    bcl = btsub.add_parser("closed")
    bcl.add_argument("-c", type=int, required=True)
    bcl.add_argument("-s", type=int, required=True)
    bcl.add_argument("-t", type=int, required=True)
    bcl.add_argument("--predict", action="store_true", help="evaluate the formula at s = 2t+1 too")
    for q in (bl, bgo, bcl):
        q.add_argument("--json", action="store_true")
    bt.set_defaults(func=cmd_betti)

    ve = sub.add_parser("verify", help="independent checks")
    vsub = ve.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in ("stickfigure", "oracle", "shelling"):
        vsub.add_parser(name).add_argument("file")
    vsub.add_parser("subspace").add_argument("target_h", type=_hvector, metavar="h")
    ve.set_defaults(func=cmd_verify)

    ex = sub.add_parser("export", help="export a configuration or complex file")
    ex.add_argument("fmt", choices=["m2", "json"])
    ex.add_argument("file")
    ex.set_defaults(func=cmd_export)
    return p


def run(argv) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(2, "", f"{exc}\n")
    except SystemExit as exc:  # --help
        return CommandResult(int(exc.code or 0), "")
    try:
        return CommandResult(0, args.func(args))
    except DomainError as exc:
        return CommandResult(1, "", f"{exc}\n")
    except OSError as exc:
        return CommandResult(1, "", f"{exc}\n")


def main(argv=None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.output)
    sys.stderr.write(res.error)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
