"""``garside-kit`` command line interface.

Exit codes: 0 on success, 1 on a domain error (JSON error object on stderr),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .config import REVERSING_BUDGET, SC_BUDGET
from .errors import GarsideKitError
from .render import delta_nf_dict, delta_nf_text, render


def _graph(args):
    from .coxeter import build_graph

    spec = args.graph
    if spec is None:
        raise _Usage("--graph is required")
    if os.path.exists(spec):
        with open(spec) as fh:
            spec = fh.read()
    return build_graph(spec)


class _Usage(Exception):
    pass


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise _Usage(f"--{n.replace('_', '-')} is required")


# -- coxeter -----------------------------------------------------------------


def cmd_coxeter(args):
    from .coxeter import elements_equal, longest_element, reduce_word, weak_order_join, weak_order_meet

    g = _graph(args)
    if args.action == "w0":
        w = longest_element(g)
        return {"text": str(w), "word": list(w.canonical), "length": w.length}
    _need(args, "word")
    u = reduce_word(g, args.word, args.method)
    if args.action == "reduce":
        return {"text": str(u), "word": list(u.canonical), "length": u.length}
    _need(args, "word2")
    v = reduce_word(g, args.word2, args.method)
    if args.action == "equal":
        eq = elements_equal(g, args.word, args.word2, args.method)
        return {"text": "equal" if eq else "different", "equal": eq}
    op = weak_order_meet if args.action == "meet" else weak_order_join
    w = op(u, v, args.side)
    return {"text": str(w), "word": list(w.canonical), "length": w.length}


# -- garside -------------------------------------------------------------------


def _element_result(x, g, extra=None):
    d = delta_nf_dict(x, g.vertices)
    out = {"text": delta_nf_text(x, g.vertices), **d}
    out.update(extra or {})
    return out


def cmd_garside(args):
    from . import garside as gk
    from .artin import format_signed, garside_structure_of, parse_signed

    g = _graph(args)
    G = garside_structure_of(g, args.backend)
    _need(args, "word")
    w = parse_signed(g, args.word)
    a = args.action
    if a == "nf":
        if any(x < 0 for x in w):
            raise _Usage("nf takes a positive word")
        x = gk.monoid_normal_form(G, [i - 1 for i in w])
        return _element_result(x, g)
    if a == "wp":
        t = gk.word_problem(G, w, args.reversing_budget)
        return {"text": "trivial" if t else "nontrivial", "trivial": t}
    x = gk.delta_normal_form(G, w)
    if a == "dnf":
        return _element_result(x, g)
    if a == "slide":
        return _element_result(gk.cyclic_sliding(x), g)
    if a == "sc":
        sc = gk.sliding_circuits(x, args.sc_budget)
        items = sorted((delta_nf_text(y, g.vertices), delta_nf_dict(y, g.vertices)) for y in sc.elements)
        return {"text": "\n".join(t for t, _ in items), "size": len(items), "elements": [d for _, d in items]}
    _need(args, "word2")
    y = gk.delta_normal_form(G, parse_signed(g, args.word2))
    if a == "meet":
        return _element_result(gk.lattice_meet(x, y, args.side), g)
    if a == "join":
        return _element_result(gk.lattice_join(x, y, args.side), g)
    if a == "conj":
        ok, c = gk.conjugacy_test(x, y, args.sc_budget)
        if not ok:
            return {"text": "NO", "conjugate": False}
        verified = gk.conjugate(x, c) == y
        word = format_signed(g, c.signed_word())
        return {
            "text": f"YES\nwitness: {word or 'ε'}\nverified: {str(verified).lower()}",
            "conjugate": True,
            "witness": word,
            "witness_normal_form": delta_nf_dict(c, g.vertices),
            "verified": verified,
        }
    raise _Usage(f"unknown garside action {a!r}")


# -- roots ------------------------------------------------------------------------


def cmd_roots(args):
    from .coxeter import reduce_word
    from .roots import bilinear_form, field_for, inversion_set, positive_roots

    g = _graph(args)
    K = field_for(g)
    field = f"t = 2cos(pi/{K.L})"

    def header(values):
        return [] if all(c.is_rational() for c in values) else ["# " + field]

    if args.action == "form":
        form = bilinear_form(g)
        rows = [[str(c) for c in row] for row in form]
        text = "\n".join(header([c for row in form for c in row]) + ["  ".join(r) for r in rows])
        return {"text": text, "field": field, "form": rows}
    if args.action == "positive":
        roots = positive_roots(g, args.depth)
    else:
        _need(args, "word")
        roots = inversion_set(reduce_word(g, args.word), args.depth)
    strs = [str(r) for r in roots]
    text = "\n".join(header([c for r in roots for c in r.coords]) + strs)
    return {"text": text, "field": field, "count": len(strs), "roots": [[str(c) for c in r.coords] for r in roots]}


# -- reps ----------------------------------------------------------------------------


def _braid_word(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split()) if text else ()


def cmd_reps(args):
    from .reps import (
        FreeEndo,
        FreeWord,
        artin_image_membership,
        artin_rep_apply,
        injectivity_scan,
        lkb_Phi_matrix,
        lkb_phi_matrix,
        rho_d_apply,
        solve_T_table,
    )
    from .reps.lkb import lkb_Phi_matrices

    a = args.action
    if a in ("artin", "rhod"):
        _need(args, "n", "free")
        word = _braid_word(args.word or "")
        w = FreeWord.parse(args.free)
        if a == "artin":
            r = artin_rep_apply(args.n, word, w)
            return {"text": r.format("x"), "letters": list(r.letters)}
        r = rho_d_apply(args.n, word, w)
        return {"text": r.format("y"), "letters": list(r.letters)}
    if a == "membership":
        _need(args, "n", "images")
        alpha = FreeEndo(tuple(FreeWord.parse(p) for p in args.images.split(";")))
        ok = artin_image_membership(args.n, alpha)
        return {"text": "member" if ok else "not a member", "member": ok}
    g = _graph(args)

    def table():
        if args.table:
            from .reps import parse_T_table

            with open(args.table) as fh:
                return parse_T_table(g, fh.read())
        return solve_T_table(g, args.degree)

    if a == "solve-t":
        T = solve_T_table(g, args.degree)
        rows = sorted(((g.vertices[s], list(f), str(p)) for (s, f), p in T.items()), key=lambda r: (r[0], r[1]))
        from .reps import format_T_table

        text = format_T_table(g, T)
        return {"text": text, "table": [{"vertex": s, "root": f, "poly": p} for s, f, p in rows]}
    if a == "lkb":
        _need(args, "vertex")
        if args.bare:
            M = lkb_phi_matrix(g, args.vertex)
        else:
            M = lkb_Phi_matrix(g, args.vertex, table())
        trip = M.triples()
        text = "\n".join(f"{r} {c} {p}" for r, c, p in trip)
        return {"text": text, "basis": [list(f) for f in M.basis], "entries": [[list(r), list(c), p] for r, c, p in trip]}
    if a == "scan":
        _need(args, "length")
        if args.bare:
            mats = [lkb_phi_matrix(g, s) for s in range(g.rank)]
        else:
            mats = lkb_Phi_matrices(g, table())
        rep = injectivity_scan(g, mats, args.length)
        return {"text": f"elements: {rep['elements']}\ncollisions: {len(rep['collisions'])}", **rep}
    raise _Usage(f"unknown reps action {a!r}")


# -- cohomology -------------------------------------------------------------------------


def cmd_cohomology(args):
    from .homology import format_cohomology, integer_cohomology

    g = _graph(args)
    groups = integer_cohomology(g)
    return {
        "text": format_cohomology(g.name or args.graph, groups),
        "graph": g.name or args.graph,
        "cohomology": [x.to_dict() for x in groups],
    }


# -- presentation ------------------------------------------------------------------------


def cmd_presentation(args):
    from .presentations import presentation

    a = args.action
    if a in ("braid", "pure"):
        _need(args, "n")
        P = presentation("braid" if a == "braid" else "pure_braid", args.n)
    elif a == "artin":
        P = presentation("artin", _graph(args))
    elif a == "coxeter":
        P = presentation("coxeter", _graph(args))
    else:
        _need(args, "g", "r", "n")
        P = presentation("mcg", args.g, args.r, args.n)
    lines = [f"generators: {' '.join(P.generators)}", f"provenance: {P.provenance}"]
    lines += [P.format_word(r) for r in P.relators]
    return {"text": "\n".join(lines), **P.to_dict(), "labels": list(P.labels)}


# -- poly -------------------------------------------------------------------------------


def _coeffs(text: str) -> list[str]:
    return text.replace(",", " ").split()


def cmd_poly(args):
    from .polyutil import config_to_monic, discriminant, format_poly, sylvester_resultant

    a = args.action
    if a == "res":
        _need(args, "f", "g")
        r = sylvester_resultant(_coeffs(args.f), _coeffs(args.g))
        return {"text": str(r), "resultant": str(r)}
    if a == "disc":
        _need(args, "f")
        d = discriminant(_coeffs(args.f))
        return {"text": str(d), "discriminant": str(d)}
    _need(args, "points")
    m = config_to_monic(_coeffs(args.points))
    text = format_poly(m.coeffs) + ("\nrepeated points: discriminant vanishes" if m.repeated else "")
    return {"text": text, **m.to_dict()}


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, help="enumeration cap (default 200000)")
    common.add_argument("--reversing-budget", type=int, default=REVERSING_BUDGET)
    common.add_argument("--sc-budget", type=int, default=SC_BUDGET)
    common.add_argument("--jobs", type=int, default=1, help="worker count (results are identical for any value)")

    p = argparse.ArgumentParser(prog="garside-kit", description="Coxeter, Artin and Garside group computations.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coxeter", parents=[common])
    c.add_argument("action", choices=("reduce", "equal", "meet", "join", "w0"))
    c.add_argument("--graph")
    c.add_argument("--word")
    c.add_argument("--word2")
    c.add_argument("--side", choices=("L", "R"), default="L")
    c.add_argument("--method", choices=("auto", "tits", "roots", "table"), default="auto")
    c.set_defaults(func=cmd_coxeter)

    gp = sub.add_parser("garside", parents=[common])
    gp.add_argument("action", choices=("nf", "dnf", "wp", "meet", "join", "slide", "sc", "conj"))
    gp.add_argument("--graph")
    gp.add_argument("--word")
    gp.add_argument("--word2")
    gp.add_argument("--side", choices=("L", "R"), default="L")
    gp.add_argument("--backend", choices=("auto", "perm", "table"), default="auto")
    gp.set_defaults(func=cmd_garside)

    r = sub.add_parser("roots", parents=[common])
    r.add_argument("action", choices=("positive", "inversions", "form"))
    r.add_argument("--graph")
    r.add_argument("--word")
    r.add_argument("--depth", type=int)
    r.set_defaults(func=cmd_roots)

    rp = sub.add_parser("reps", parents=[common])
    rp.add_argument("action", choices=("artin", "rhod", "membership", "lkb", "solve-t", "scan"))
    rp.add_argument("--graph")
    rp.add_argument("--n", type=int)
    rp.add_argument("--word", help="braid word, e.g. '1 -2 1'")
    rp.add_argument("--free", help="free group word, e.g. 'x1 -x2'")
    rp.add_argument("--images", help="images of x1..xn separated by ';'")
    rp.add_argument("--vertex")
    rp.add_argument("--degree", type=int, default=2)
    rp.add_argument("--length", type=int)
    rp.add_argument("--bare", action="store_true", help="use the x-free matrices")
    rp.add_argument("--table", help="T-table file ('vertex (coords) -> polynomial' per line)")
    rp.set_defaults(func=cmd_reps)

    h = sub.add_parser("cohomology", parents=[common])
    h.add_argument("--graph")
    h.set_defaults(func=cmd_cohomology)

    pr = sub.add_parser("presentation", parents=[common])
    pr.add_argument("action", choices=("braid", "pure", "artin", "coxeter", "mcg"))
    pr.add_argument("--graph")
    pr.add_argument("--n", type=int)
    pr.add_argument("--g", type=int)
    pr.add_argument("--r", type=int)
    pr.set_defaults(func=cmd_presentation)

    po = sub.add_parser("poly", parents=[common])
    po.add_argument("action", choices=("res", "disc", "config"))
    po.add_argument("--f")
    po.add_argument("--g")
    po.add_argument("--points")
    po.set_defaults(func=cmd_poly)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    if args.budget is not None and args.budget < 1:
        parser.error("--budget must be positive")
    saved = os.environ.get("GARSIDE_KIT_BUDGET")
    if args.budget is not None:
        os.environ["GARSIDE_KIT_BUDGET"] = str(args.budget)
    try:
        return _dispatch(parser, args)
    finally:
        # main() may be called in-process; do not leak the override
        if saved is None:
            os.environ.pop("GARSIDE_KIT_BUDGET", None)
        else:
            os.environ["GARSIDE_KIT_BUDGET"] = saved


def _dispatch(parser: argparse.ArgumentParser, args) -> int:
    try:
        result = args.func(args)
    except _Usage as e:
        parser.error(str(e))
    except GarsideKitError as e:
        print(json.dumps(e.to_dict(), ensure_ascii=False), file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as e:
        print(json.dumps({"error": "bad_parameter", "message": str(e)}), file=sys.stderr)
        return 1
    print(render(result, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
