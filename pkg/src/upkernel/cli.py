"""Command-line interface.

Exit status: 0 for an affirmative answer, 1 for a negative one, 2 for
usage, input or shape errors.
"""

import argparse
import os
import sys
from itertools import product as _cartesian
from pathlib import Path

from . import campaigns, core, families, io, products
from . import constructors as cons
from .errors import ShapeError, UpKernelError

OK, NO, ERROR = 0, 1, 2


def _ids(D, vertices):
    return [D.label(v) for v in sorted(vertices)]


def _fmt_set(D, vertices):
    return "{" + ", ".join(_ids(D, vertices)) + "}"


def _parse_set(D, text):
    index = {D.label(v): v for v in D.vertices}
    out = set()
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token not in index:
            raise UpKernelError(f"unknown vertex id {token!r}")
        out.add(index[token])
    return out


# -- check / enumerate / build -----------------------------------------------

def cmd_check(args, out):
    D = io.load(args.file).digraph
    N = _parse_set(D, args.set)
    indep = core.is_independent(D, N)
    absorbent = core.is_up_color_absorbent(D, N)
    kernel = indep and absorbent
    print(f"independent: {str(indep).lower()}", file=out)
    print(f"up-color absorbent: {str(absorbent).lower()}", file=out)
    if kernel:
        print("kernel: true", file=out)
        return OK
    zero = [v for v in N if D.color(v) == 0]
    missed = core.unabsorbed(D, N)
    parts = ["zero-color vertex in set? "
             + (", ".join(_ids(D, zero)) if zero else "no")]
    if missed:
        parts.append("absorbency: " + ", ".join(_ids(D, missed))
                     + " not absorbed")
    if not indep:
        pairs = sorted((u, v) for u, v in D.arcs if u in N and v in N)
        parts.append("arcs inside set: " + ", ".join(
            f"{D.label(u)}->{D.label(v)}" for u, v in pairs))
    print(f"kernel: false ({'; '.join(parts)})", file=out)
    return NO


def cmd_enumerate(args, out):
    D = io.load(args.file).digraph
    report = core.enumerate_up_color_kernels(D)
    if not args.count_only:
        for K in report.kernels:
            print(_fmt_set(D, K), file=out)
    print(f"count: {report.count}", file=out)
    return OK if report.exists else NO


def cmd_build(args, out):
    loaded = io.load(args.recipe)
    name = loaded.name or Path(args.recipe).stem
    text = io.serialize_document(
        io.GraphDocument.from_digraph(loaded.digraph, name))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}: {loaded.digraph.n} vertices, "
              f"{len(loaded.digraph.arcs)} arcs", file=out)
    else:
        out.write(text)
    return OK


# -- decide ----------------------------------------------------------------------

def _coordinates(D):
    """Coordinate tuples parsed from ``(a,b,...)`` labels, or None."""
    coords = []
    for v in D.vertices:
        lab = D.label(v)
        if not (lab.startswith("(") and lab.endswith(")")):
            return None
        try:
            coords.append(tuple(int(x) for x in lab[1:-1].split(",")))
        except ValueError:
            return None
    if not coords or len({len(c) for c in coords}) != 1:
        return None
    return coords


def _shape(D):
    coords = _coordinates(D)
    if coords is None:
        raise ShapeError("cannot infer product factors: vertex ids are not "
                         "coordinate tuples like (a,b)")
    shape = tuple(max(c[i] for c in coords) + 1
                  for i in range(len(coords[0])))
    if coords != cons.product_coordinates(shape):
        raise ShapeError("vertex ids are not in row-major coordinate order")
    return shape


def _factor_kind(F):
    """Classify a recipe factor: path, cycle, in/out star, bipartite."""
    for kind, shape_of in (("path", families.path_order),
                           ("cycle", families.cycle_order)):
        try:
            shape_of(F)
            return (kind, F.n)
        except ShapeError:
            pass
    k = F.n - 1
    if k >= 1 and F == cons.in_star(k).with_colors(F.colors):
        return ("in", k)
    if k >= 1 and F == cons.out_star(k).with_colors(F.colors):
        return ("out", k)
    for m in range(1, F.n):
        B = cons.oriented_complete_bipartite(m, F.n - m, toward="m")
        if F == B.with_colors(F.colors):
            return ("bipartite", m)
    return ("other", F.n)


def _star_kinds(D, shape, strong):
    """Find in/out orientations of star factors that rebuild ``D``."""
    if min(shape) >= 2:
        for choice in _cartesian(("in", "out"), repeat=len(shape)):
            stars = [(kd, s - 1) for kd, s in zip(choice, shape)]
            G = products.star_product(stars, strong=strong)
            if G.with_colors(D.colors) == D:
                return stars
    raise ShapeError(f"not a {'strong' if strong else 'Cartesian'} product "
                     f"of stars with sizes {shape}")


def _product_factors(loaded, operation):
    """Factor kinds from the recipe when there is one."""
    r = loaded.recipe
    if r is None:
        return None
    if r.operation != operation:
        raise ShapeError(f"recipe builds a {r.operation} digraph, expected "
                         f"{operation}")
    return [_factor_kind(F) for F in r.factors]


def _decide_product(family, loaded):
    D = loaded.digraph
    strong = family in ("strong-grid", "star-strong")
    kinds = _product_factors(loaded, "strong" if strong else "cartesian")
    if family in ("grid", "strong-grid"):
        shape = (tuple(n for _, n in kinds) if kinds else _shape(D))
        if kinds and any(kd != "path" for kd, _ in kinds):
            raise ShapeError("grid factors must be directed paths")
        decide = (products.decide_strong_grid if strong
                  else products.decide_grid)
        return D, decide(D, shape)
    if family in ("star-cartesian", "star-strong"):
        if kinds:
            if any(kd not in ("in", "out") for kd, _ in kinds):
                raise ShapeError("star product factors must be stars")
            stars = kinds
        else:
            stars = _star_kinds(D, _shape(D), strong)
        decide = (products.decide_star_strong if strong
                  else products.decide_star_cartesian)
        return D, decide(D, stars)
    if family == "path-bipartite":
        if kinds:
            if len(kinds) != 2 or kinds[0][0] != "path" or \
                    kinds[1][0] not in ("bipartite", "in"):
                raise ShapeError("expected a path times an oriented "
                                 "complete bipartite digraph")
            k = kinds[0][1]
            width = loaded.recipe.factors[1].n
            m = 1 if kinds[1][0] == "in" else kinds[1][1]
        else:
            k, width = _shape(D)
            m = None
            for cand in range(1, width):
                if products.path_bipartite(k, cand, width - cand) \
                        .with_colors(D.colors) == D:
                    m = cand
                    break
            if m is None:
                raise ShapeError("not a path times an oriented complete "
                                 "bipartite digraph")
        return D, products.decide_path_bipartite(D, k, m, width - m)
    if family == "torus":
        shape = (tuple(n for _, n in kinds) if kinds else _shape(D))
        if len(shape) != 2 or (kinds and any(kd != "cycle"
                                             for kd, _ in kinds)):
            raise ShapeError("a torus is the product of two directed cycles")
        return D, products.decide_torus(D, *shape)
    raise AssertionError(family)


def _decide_composite(family, loaded):
    r = loaded.recipe
    op = {"zykov-path": "zykov", "zykov-cycle": "zykov"}.get(family, family)
    if r is None or r.operation != op:
        raise ShapeError(f"--family {family} needs a {op} recipe file")
    base, parts = r.factors[0], list(r.factors[1:])
    if family == "zykov-path":
        dec = products.decide_zykov_path(base, parts)
        return cons.zykov(base, parts), dec
    if family == "zykov-cycle":
        dec = products.decide_zykov_cycle(base, parts)
        return cons.zykov(base, parts), dec
    if r.colors is not None:
        raise ShapeError("crown recipes must color their factors, not the "
                         "result")
    if family == "in-crown":
        dec = products.decide_in_crown(base, parts, r.attachments)
        return cons.in_crown(base, parts, r.attachments), dec
    dec = products.decide_ex_crown(base, parts, r.attachments)
    return cons.ex_crown(base, parts, r.attachments), dec


def pendant_pairs(D, tips=None):
    """Pendant arcs ``(w, v)`` for the given tips, or for every sink of
    in-degree 1 when ``tips`` is None."""
    if tips is None:
        tips = [v for v in D.vertices
                if D.out_degree(v) == 0 and D.in_degree(v) == 1]
    if not tips:
        raise ShapeError("no pendant arcs found")
    pend = []
    for v in sorted(set(tips)):
        if D.out_degree(v) or D.in_degree(v) != 1:
            raise ShapeError(f"{D.label(v)} is not the tip of a pendant arc")
        (w,) = D.in_neighbors(v)
        pend.append((w, v))
    return pend


def _decide_pendant(D, tip_ids):
    tips = _parse_set(D, ",".join(tip_ids)) if tip_ids else None
    return families.decide_pendant(D, None, pendant_pairs(D, tips))


SIMPLE_FAMILIES = {
    "path": families.decide_path,
    "even-cycle": families.decide_even_cycle,
    "forest": families.decide_forest,
    "wheel": families.decide_wheel,
    "odd-cycle-chord": families.decide_odd_cycle_chord,
    "tournament": families.decide_tournament,
}
PRODUCT_FAMILIES = ("grid", "strong-grid", "star-cartesian", "star-strong",
                    "path-bipartite", "torus")
COMPOSITE_FAMILIES = ("zykov-path", "zykov-cycle", "in-crown", "ex-crown")
ALL_FAMILIES = (tuple(SIMPLE_FAMILIES) + ("pendant",) + PRODUCT_FAMILIES
                + COMPOSITE_FAMILIES)


def cmd_decide(args, out):
    loaded = io.load(args.file)
    D = loaded.digraph
    family = args.family
    if family in SIMPLE_FAMILIES:
        dec = SIMPLE_FAMILIES[family](D)
    elif family == "pendant":
        dec = _decide_pendant(D, args.pendant)
    elif family in PRODUCT_FAMILIES:
        D, dec = _decide_product(family, loaded)
    else:
        D, dec = _decide_composite(family, loaded)
    if dec.verdict:
        print(f"true: witness {_fmt_set(D, dec.witness)}", file=out)
    else:
        tag, vs = dec.violated
        reason = dec.detail or f"{tag} at {', '.join(_ids(D, vs))}"
        print(f"false: {reason}", file=out)
        if dec.detail:
            print(f"violated: {tag} at {', '.join(_ids(D, vs))}", file=out)
    clause = dec.clause
    if dec.verdict and dec.detail:
        clause += f" ({dec.detail})"
    print(f"clause: {clause}", file=out)
    return OK if dec.verdict else NO


# -- verify / figures ------------------------------------------------------------

def cmd_verify(args, out):
    results = campaigns.run(args.suite, seed=args.seed, samples=args.samples)
    status = OK
    for i, res in enumerate(results):
        print(res.summary(), file=out)
        if res.passed:
            continue
        status = NO
        path = Path(args.out_dir) / f"{args.suite}-counterexample-{i}.json"
        doc = io.GraphDocument.from_digraph(
            res.counterexample, f"{args.suite} counterexample")
        path.write_text(io.serialize_document(doc), encoding="utf-8")
        note = f" ({res.note})" if res.note else ""
        print(f"  first counterexample{note} written to {path}", file=out)
    return status


def cmd_figures(args, out):
    for name in io.figure_names():
        loaded = io.load(name)
        kind = loaded.recipe.operation if loaded.recipe else "document"
        print(f"{name}: {kind}, {loaded.digraph.n} vertices, "
              f"{len(loaded.digraph.arcs)} arcs", file=out)
    return OK


# -- entry point ---------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="upkernel",
        description="Up-color kernels in vertex-colored digraphs.")
    p.add_argument("--oracle-limit", type=int, default=None,
                   help="largest vertex count the exhaustive oracle accepts "
                        f"(default {core.DEFAULT_ORACLE_LIMIT}, or "
                        f"${core.ORACLE_LIMIT_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="test whether a vertex set is an "
                                     "up-color kernel")
    s.add_argument("file", help="graph document, recipe or figure name")
    s.add_argument("--set", required=True,
                   help="comma-separated vertex ids")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("enumerate", help="list all up-color kernels")
    s.add_argument("file")
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(run=cmd_enumerate)

    s = sub.add_parser("build", help="build a recipe into a graph document")
    s.add_argument("recipe")
    s.add_argument("--out", help="output file (default: stdout)")
    s.set_defaults(run=cmd_build)

    s = sub.add_parser("decide", help="run a theorem-based decider")
    s.add_argument("file")
    s.add_argument("--family", required=True, choices=ALL_FAMILIES)
    s.add_argument("--pendant", action="append", metavar="ID",
                   help="pendant tip id (repeatable; inferred if omitted)")
    s.set_defaults(run=cmd_decide)

    s = sub.add_parser("verify", help="run a seeded verification campaign")
    s.add_argument("--suite", required=True, choices=sorted(campaigns.SUITES))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--out-dir", default=".",
                   help="where counterexamples are written")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("figures", help="list the bundled figure instances")
    s.set_defaults(run=cmd_figures)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    saved = os.environ.get(core.ORACLE_LIMIT_ENV)
    if args.oracle_limit is not None:
        os.environ[core.ORACLE_LIMIT_ENV] = str(args.oracle_limit)
    try:
        return args.run(args, out)
    except (UpKernelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    finally:
        if args.oracle_limit is not None:
            if saved is None:
                os.environ.pop(core.ORACLE_LIMIT_ENV, None)
            else:
                os.environ[core.ORACLE_LIMIT_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
