"""Command-line front end: ``dproj <command> --ring FILE [options] [ARGS]``.

Exit status: 0 on success, 2 on usage or semantic errors, 3 when a search
budget is exhausted, 1 when ``--oracle`` finds a disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import oracle
from .abelian_group import INFINITE, group_scheme_decomposition, subgroup_from_generators
from .errors import DProjError, InvalidInputError, PreconditionError, ResourceLimitError
from .graded_ring import GradedRing, Monomial, is_effective
from .group_algebra import ga_comultiply, is_group_like, tensor_square
from .localization import (
    DEFAULT_STEP_BUDGET,
    degree_zero_system,
    hilbert_basis,
    veronese_generators,
)
from .parsing import (
    parse_degree,
    parse_expression,
    parse_group_algebra_element,
    parse_monomial,
    parse_ring_spec,
    ring_to_spec,
)
from .proj import Chart, build_atlas, torsor_diagnostics
from .relevance import is_relevant_polynomial, monomic_generators, relevance_report

def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _compact(ring: GradedRing, m: Monomial) -> str:
    return ring.format_monomial(m).replace("*", "")


def _index_json(index):
    return "infinite" if index == INFINITE else int(index)


class Session:
    """Carries the parsed ring and output options through one command."""

    def __init__(self, args, out):
        self.args = args
        self.out = out
        self.oracle_notes: list[str] = []
        self.budget = oracle.SearchBudget()
        self.mismatch = False

    def emit(self, text_lines: Sequence[str], doc: dict):
        if self.args.json:
            if self.oracle_notes:
                doc = {**doc, "oracle": self.oracle_notes}
            self.out.write(json.dumps(doc, indent=2) + "\n")
        else:
            for line in text_lines:
                self.out.write(line + "\n")
            for note in self.oracle_notes:
                self.out.write(f"oracle: {note}\n")

    def check(self, label: str, agree: bool):
        self.oracle_notes.append(f"{label}: {'agree' if agree else 'MISMATCH'}")
        if not agree:
            self.mismatch = True


def load_ring(args, out=sys.stdout) -> GradedRing:
    try:
        with open(args.ring, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read ring spec {args.ring}: {exc.strerror}") from None
    ring = parse_ring_spec(text)
    if not ring.effective:
        if not args.effectivize:
            raise PreconditionError(
                f"grading by {ring.group} is not effective: the degrees generate a proper subgroup; "
                "rerun with --effectivize to re-grade by that subgroup"
            )
        _, ring = is_effective(ring)
        # keep stdout a single JSON document
        dest = sys.stderr if args.json else out
        print(f"effectivized grading group: {ring.group}", file=dest)
        for name, d in zip(ring.var_names, ring.degrees):
            print(f"  deg {name} = {d}", file=dest)
    return ring


def chart_doc(ring: GradedRing, c: Chart) -> dict:
    return {
        "f": ring.format_monomial(c.f),
        "generators": [q.format(ring) for q in c.generators],
        "index": c.index,
        "strongly_relevant": c.strongly_relevant,
        "pseudo_g_torsor": c.pseudo_g_torsor,
        "gf_torsor": c.gf_torsor,
        "dimension": c.dimension,
    }


def chart_line(ring: GradedRing, c: Chart) -> str:
    gens = ", ".join(q.format(ring) for q in c.generators) or "(none)"
    return (
        f"generators of S_({_compact(ring, c.f)}): {gens}; D^f index: {c.index}; "
        f"pseudo G-torsor: {_yes(c.pseudo_g_torsor)}; dim: {c.dimension}"
    )


def _oracle_chart(s: Session, ring: GradedRing, c: Chart):
    sys_ = degree_zero_system(ring, c.f)
    B = s.budget.exponent_bound
    solved = [x for x in hilbert_basis(sys_, s.args.budget) if max(x) <= B]
    brute = oracle.brute_minimal_solutions(sys_, s.budget)
    s.check(f"S_({_compact(ring, c.f)}) Hilbert basis within box {B}", solved == brute)
    idx = oracle.brute_subgroup_index(ring.group, c.support_group, s.budget)
    if idx is not oracle.UNKNOWN:
        s.check(f"[D:D^f] for {_compact(ring, c.f)} by coset enumeration", idx == c.index)


def cmd_gens(s: Session, ring: GradedRing):
    gens = monomic_generators(ring)
    names = [ring.format_monomial(m) for m in gens]
    if s.args.oracle:
        for m in gens:
            s.check(f"{ring.format_monomial(m)} relevant by unit search", oracle.brute_relevance(ring, m, s.budget) is True)
    s.emit([f"S+ generators: {', '.join(names) or '(none)'}"], {"gens": names})


def cmd_relevant(s: Session, ring: GradedRing):
    p = parse_expression(ring, s.args.expr)
    if len(p) == 1 and next(iter(p.terms.values())) == 1:
        m = next(iter(p.terms))
        rep = relevance_report(ring, m)
        if s.args.oracle:
            s.check("relevance by unit search", oracle.brute_relevance(ring, m, s.budget) == rep.relevant)
        lines = [
            f"f = {ring.format_monomial(m)}",
            f"support degrees: {', '.join(str(d) for d in rep.support_degrees) or '(none)'}",
            f"D^f index: {'infinite' if rep.index == INFINITE else rep.index}",
            f"weight cone dimension: {rep.cone.dim} of {ring.r}",
            f"deg(f) in interior: {_yes(rep.deg_in_interior)}",
            f"relevant: {_yes(rep.relevant)}",
            f"strongly relevant: {_yes(rep.strongly_relevant)}",
        ]
        doc = {
            "f": ring.format_monomial(m),
            "support_degrees": [list(d.lift()) for d in rep.support_degrees],
            "index": _index_json(rep.index),
            "cone_dim": rep.cone.dim,
            "cone_full_dim": rep.cone_full_dim,
            "deg_in_interior": rep.deg_in_interior,
            "relevant": rep.relevant,
            "strongly_relevant": rep.strongly_relevant,
        }
        s.emit(lines, doc)
        return
    rel = is_relevant_polynomial(ring, p)
    text = ring.format_polynomial(p)
    s.emit([f"f = {text}", f"relevant: {_yes(rel)}"], {"f": text, "relevant": rel})


def cmd_chart(s: Session, ring: GradedRing):
    c = torsor_diagnostics(ring, parse_monomial(ring, s.args.expr), s.args.budget)
    if s.args.oracle:
        _oracle_chart(s, ring, c)
    s.emit([chart_line(ring, c)], chart_doc(ring, c))


def cmd_torsor(s: Session, ring: GradedRing):
    c = torsor_diagnostics(ring, parse_monomial(ring, s.args.expr), s.args.budget)
    if s.args.oracle:
        _oracle_chart(s, ring, c)
    lines = [
        f"f = {ring.format_monomial(c.f)}",
        f"[D:D^f] = {c.index}",
        f"strongly relevant: {_yes(c.strongly_relevant)}",
        f"pseudo G-torsor: {_yes(c.pseudo_g_torsor)}",
        f"G^f-torsor: {_yes(c.gf_torsor)}",
        f"geometric quotient: {_yes(c.geometric_quotient)}",
        "S integral: yes (polynomial ring over a field)",
    ]
    doc = chart_doc(ring, c)
    doc["geometric_quotient"] = c.geometric_quotient
    s.emit(lines, doc)


def atlas_doc(ring: GradedRing, atlas) -> dict:
    names = [ring.format_monomial(c.f) for c in atlas.charts]
    g = atlas.group_report
    return {
        "ring": ring_to_spec(ring),
        "gens": names,
        "charts": [chart_doc(ring, c) for c in atlas.charts],
        "duplicates": [[names[i] for i in grp] for grp in atlas.duplicate_groups],
        "group": {"gm": g.gm_count, "mu": list(g.mu_orders), "connected": g.connected},
        "trivial": atlas.is_trivial,
    }


def cmd_atlas(s: Session, ring: GradedRing):
    atlas = build_atlas(ring, s.args.budget)
    if s.args.oracle:
        for c in atlas.charts:
            _oracle_chart(s, ring, c)
    names = [ring.format_monomial(c.f) for c in atlas.charts]
    lines = []
    if atlas.is_trivial:
        lines.append("single chart, dimension 0 (Proj is a point)")
    lines.append(f"{len(atlas.charts)} chart(s): {', '.join(names) or '(none)'}")
    lines += [chart_line(ring, c) for c in atlas.charts]
    for grp in atlas.duplicate_groups:
        lines.append(f"duplicate charts (equal coordinate rings): {', '.join(names[i] for i in grp)}")
    lines.append(f"G = {atlas.group_report}; connected: {_yes(atlas.group_report.connected)}")
    s.emit(lines, atlas_doc(ring, atlas))


def cmd_dim(s: Session, ring: GradedRing):
    atlas = build_atlas(ring, s.args.budget)
    dims = sorted({c.dimension for c in atlas.charts})
    if not dims:
        s.emit(["Proj is empty (no relevant monomials)"], {"dimension": None, "charts": 0})
        return
    (dim,) = dims
    s.emit(
        [f"dim Proj = {dim} (n - r = {ring.n} - {ring.r})"],
        {"dimension": dim, "n": ring.n, "r": ring.r, "charts": len(atlas.charts)},
    )


def cmd_group(s: Session, ring: GradedRing):
    g = group_scheme_decomposition(ring.group)
    s.emit(
        [f"D = {ring.group}", f"G = {g}", f"connected: {_yes(g.connected)}"],
        {"group": {"gm": g.gm_count, "mu": list(g.mu_orders), "connected": g.connected}},
    )


def cmd_veronese(s: Session, ring: GradedRing):
    gens = [parse_degree(ring.group, t) for t in s.args.gens]
    H = subgroup_from_generators(ring.group, gens)
    mons = veronese_generators(ring, H, s.args.budget)
    names = [ring.format_monomial(m) for m in mons]
    s.emit(
        [f"H = {H}", f"S_H generators: {', '.join(names) or '(none)'}"],
        {"subgroup": [list(r) for r in H.lattice], "generators": names},
    )


def cmd_grouplike(s: Session, ring: GradedRing):
    a = parse_group_algebra_element(ring.group, s.args.element)
    verdict = is_group_like(a)
    if s.args.oracle:
        s.check("Delta(a) = a (x) a by expansion", verdict == (not a.is_zero() and ga_comultiply(a) == tensor_square(a)))
    s.emit([f"a = {a}", f"group-like: {_yes(verdict)}"], {"element": str(a), "group_like": verdict})


HANDLERS = {
    "gens": cmd_gens,
    "relevant": cmd_relevant,
    "chart": cmd_chart,
    "atlas": cmd_atlas,
    "torsor": cmd_torsor,
    "dim": cmd_dim,
    "group": cmd_group,
    "veronese": cmd_veronese,
    "grouplike": cmd_grouplike,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, metavar="FILE", help="ring spec (JSON)")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--oracle", action="store_true", help="cross-check with brute-force oracles")
    common.add_argument(
        "--budget", type=int, default=DEFAULT_STEP_BUDGET, metavar="N",
        help="Hilbert basis step budget (default %(default)s)",
    )
    common.add_argument("--effectivize", action="store_true", help="re-grade a non-effective ring")

    parser = argparse.ArgumentParser(prog="dproj", description="Multigraded Proj charts and relevance.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gens", parents=[common], help="monomic generators of the irrelevant ideal")
    for name, helptext in (
        ("relevant", "relevance report for a monomial or homogeneous polynomial"),
        ("chart", "degree-zero localization at a relevant monomial"),
        ("torsor", "quotient and torsor diagnostics for a relevant monomial"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("expr")
    sub.add_parser("atlas", parents=[common], help="all charts of Proj")
    sub.add_parser("dim", parents=[common], help="dimension of Proj")
    sub.add_parser("group", parents=[common], help="decomposition of the grading group scheme")
    p = sub.add_parser("veronese", parents=[common], help="generators of a Veronese subring")
    p.add_argument("gens", nargs="*", metavar="DEGREE", help="subgroup generator, e.g. '[2,0]'")
    p = sub.add_parser("grouplike", parents=[common], help="test a group algebra element")
    p.add_argument("element", help="e.g. 'chi(1,0) + 2*chi(0,1)'")
    return parser


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.budget < 1:
        print("dproj: error: --budget must be positive", file=sys.stderr)
        return 2
    session = Session(args, out)
    try:
        ring = load_ring(args, out)
        HANDLERS[args.command](session, ring)
    except ResourceLimitError as exc:
        print(f"dproj: resource limit: {exc}", file=sys.stderr)
        return 3
    except DProjError as exc:
        print(f"dproj: error: {exc}", file=sys.stderr)
        return 2
    if session.mismatch:
        print("dproj: oracle disagreement", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
