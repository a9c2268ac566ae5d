"""Witnesses that any new equation collapses the category into a preorder.

Given two same-typed arrows with distinct graphs, every letter is
replaced by a single one, and two bracketing arrows are synthesized so
that the two composites land exactly on the first and second projection
of a two-fold product.  Any category validating the original equation
therefore identifies the two projections, and with them all parallel
arrows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decide import synth_from_graph
from .errors import AlreadyEqual, FreecartError, InternalError
from .graphs import Graph, graph_equal, graph_of
from .rewrite import normalize
from .terms import (
    ArrowTerm,
    Letter,
    LetterObj,
    Mode,
    Product,
    Proj1,
    Proj2,
    codomain,
    compose,
    domain,
    letters_of,
    substitute_all_letters,
    typecheck,
)


@dataclass(frozen=True)
class CollapseWitness:
    letter: Letter
    position: int
    f_subst: ArrowTerm
    g_subst: ArrowTerm
    h: ArrowTerm
    j: ArrowTerm
    lhs_normal: ArrowTerm
    rhs_normal: ArrowTerm


def collapse_witness(
    f: ArrowTerm, g: ArrowTerm, mode: Mode = Mode.CARTESIAN
) -> CollapseWitness:
    """Construct the collapse data for a non-equal pair of arrows."""
    ft = typecheck(f, mode)
    gt = typecheck(g, mode)
    if ft != gt:
        from .errors import TypeMismatch

        raise TypeMismatch(f"arrows have different types: {ft} vs {gt}")
    gf = graph_of(f)
    gg = graph_of(g)
    if graph_equal(gf, gg):
        raise AlreadyEqual("the arrows are equal; no collapse witness exists")

    position = next(
        i + 1 for i, (a, b) in enumerate(zip(gf.map, gg.map)) if a != b
    )
    dom_letters = letters_of(ft.domain)
    letter = dom_letters[0] if dom_letters else letters_of(ft.codomain)[0]

    f_subst = substitute_all_letters(f, letter)
    g_subst = substitute_all_letters(g, letter)
    dom_subst = domain(f_subst)
    cod_subst = codomain(f_subst)
    pp = Product(LetterObj(letter), LetterObj(letter))

    # Send the two distinguished domain positions to the two components
    # of pp; everything else goes to the first component.
    spread = [1] * gf.source_letters
    spread[gf.map[position - 1] - 1] = 1
    spread[gg.map[position - 1] - 1] = 2
    h = synth_from_graph(pp, dom_subst, Graph(2, gf.source_letters, tuple(spread)), mode)
    j = synth_from_graph(
        cod_subst, LetterObj(letter), Graph(gf.target_letters, 1, (position,)), mode
    )

    lhs = compose(h, f_subst, j)
    rhs = compose(h, g_subst, j)
    first_proj = Graph(2, 1, (1,))
    second_proj = Graph(2, 1, (2,))
    if not graph_equal(graph_of(lhs), first_proj) or not graph_equal(
        graph_of(rhs), second_proj
    ):
        raise InternalError("collapse composites have unexpected graphs")
    lhs_normal = normalize(lhs, mode).result
    rhs_normal = normalize(rhs, mode).result
    return CollapseWitness(
        letter, position, f_subst, g_subst, h, j, lhs_normal, rhs_normal
    )


def verify_witness(w: CollapseWitness) -> bool:
    """Recompute the composites and their normal forms from scratch."""
    try:
        p = LetterObj(w.letter)
        lhs = compose(w.h, w.f_subst, w.j)
        rhs = compose(w.h, w.g_subst, w.j)
        typecheck(lhs)
        typecheck(rhs)
        return (
            graph_equal(graph_of(lhs), Graph(2, 1, (1,)))
            and graph_equal(graph_of(rhs), Graph(2, 1, (2,)))
            and normalize(lhs).result == Proj1(p, p)
            and normalize(rhs).result == Proj2(p, p)
            and w.lhs_normal == Proj1(p, p)
            and w.rhs_normal == Proj2(p, p)
        )
    except (FreecartError, ValueError, TypeError, IndexError):
        return False
