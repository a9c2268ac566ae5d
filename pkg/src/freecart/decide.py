"""Deciding equality of arrows, and rebuilding a normal form from a graph.

Equality of two same-typed arrows holds exactly when their graphs agree,
so the decision procedure is a graph comparison.  The alternative route
normalizes both sides and compares syntax.  Synthesis goes the other
way: given a letter-compatible graph it produces the unique normal form
with that graph.
"""

from __future__ import annotations

from .errors import IncompatibleGraph, TypeMismatch, Unrealizable
from .graphs import Graph, graph_equal, graph_of, letter_compatible
from .rewrite import normalize
from .terms import (
    ArrowTerm,
    Compose,
    Identity,
    LetterObj,
    Mode,
    ObjectExpr,
    Pair,
    Product,
    Proj1,
    Proj2,
    Terminal,
    Bang,
    letter_length,
    typecheck,
)


def _require_same_type(f: ArrowTerm, g: ArrowTerm, mode: Mode) -> None:
    ft = typecheck(f, mode)
    gt = typecheck(g, mode)
    if ft != gt:
        raise TypeMismatch(f"arrows have different types: {ft} vs {gt}")


def equal_in_cart(f: ArrowTerm, g: ArrowTerm, mode: Mode = Mode.CARTESIAN) -> bool:
    """Decide commutation by comparing graphs."""
    _require_same_type(f, g, mode)
    return graph_equal(graph_of(f), graph_of(g))


def equal_via_normal_forms(
    f: ArrowTerm, g: ArrowTerm, mode: Mode = Mode.CARTESIAN
) -> bool:
    """Decide commutation by normalizing both sides."""
    _require_same_type(f, g, mode)
    return normalize(f, mode).result == normalize(g, mode).result


def synth_from_graph(
    dom: ObjectExpr, cod: ObjectExpr, g: Graph, mode: Mode = Mode.CARTESIAN
) -> ArrowTerm:
    """The normal form dom -> cod whose graph is g.

    The codomain is taken apart: terminal targets become terminal
    arrows, product targets become pairings, and letter targets become
    either an identity or the projection chain from the root of dom to
    the mapped leaf.
    """
    if g.source_letters != letter_length(dom) or g.target_letters != letter_length(cod):
        raise IncompatibleGraph(
            f"graph {g.source_letters}->{g.target_letters} does not fit "
            f"|dom|={letter_length(dom)}, |cod|={letter_length(cod)}"
        )
    if not letter_compatible(g, dom, cod):
        raise IncompatibleGraph("graph connects distinct letters")
    return _synth(dom, cod, g, mode)


def _synth(dom: ObjectExpr, cod: ObjectExpr, g: Graph, mode: Mode) -> ArrowTerm:
    match cod:
        case Terminal():
            if mode is Mode.BINARY_PRODUCTS:
                raise Unrealizable(
                    "terminal codomain cannot be realized in binary-products mode"
                )
            return Bang(dom)
        case Product(left, right):
            nl = letter_length(left)
            g_left = Graph(g.source_letters, nl, g.map[:nl])
            g_right = Graph(g.source_letters, g.target_letters - nl, g.map[nl:])
            return Pair(
                _synth(dom, left, g_left, mode), _synth(dom, right, g_right, mode)
            )
        case LetterObj(_):
            if isinstance(dom, LetterObj):
                return Identity(dom)
            return _projection_chain(dom, g.map[0])
    raise TypeError(f"not an object: {cod!r}")


def _projection_chain(dom: ObjectExpr, position: int) -> ArrowTerm:
    factors: list[ArrowTerm] = []
    node = dom
    j = position
    while isinstance(node, Product):
        nl = letter_length(node.left)
        if j <= nl:
            factors.append(Proj1(node.left, node.right))
            node = node.left
        else:
            factors.append(Proj2(node.left, node.right))
            j -= nl
            node = node.right
    if not isinstance(node, LetterObj):
        raise IncompatibleGraph(f"position {position} does not reach a letter")
    if len(factors) == 1:
        return factors[0]
    return Compose(tuple(factors))
