"""Graphs of arrow terms: which codomain letter comes from which domain letter.

The graph of an arrow f: A -> B is a total function from the letter
positions of B to the letter positions of A, computed by induction on
the term.  Two arrows of the free cartesian category are equal exactly
when their graphs agree, which makes graphs the cheap side of the
equality decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import ArityMismatch
from .terms import (
    ArrowTerm,
    Bang,
    Compose,
    Identity,
    LetterObj,
    ObjectExpr,
    Pair,
    Proj1,
    Proj2,
    letter_at,
    letter_length,
)


@dataclass(frozen=True)
class Graph:
    """A target-position to source-position map, 1-based on both sides."""

    source_letters: int
    target_letters: int
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.target_letters:
            raise ValueError(
                f"map has {len(self.map)} entries for {self.target_letters} targets"
            )
        for v in self.map:
            if not 1 <= v <= self.source_letters:
                raise ValueError(f"map entry {v} not in 1..{self.source_letters}")


def graph_identity(n: int) -> Graph:
    """Graph of an identity arrow on an object with n letters."""
    return Graph(n, n, tuple(range(1, n + 1)))


def graph_compose(first: Graph, second: Graph) -> Graph:
    """Graph of a composite, `first` being the first-applied factor.

    Positions chase through the later factor first: the composite sends
    i to first.map[second.map[i]].
    """
    if first.target_letters != second.source_letters:
        raise ArityMismatch(
            f"cannot compose graphs: {first.target_letters} target letters "
            f"vs {second.source_letters} source letters"
        )
    return Graph(
        first.source_letters,
        second.target_letters,
        tuple(first.map[j - 1] for j in second.map),
    )


def graph_of(t: ArrowTerm) -> Graph:
    """Graph of a well-typed arrow term."""
    match t:
        case Identity(obj):
            return graph_identity(letter_length(obj))
        case Proj1(left, right):
            n = letter_length(left) + letter_length(right)
            return Graph(n, letter_length(left), tuple(range(1, letter_length(left) + 1)))
        case Proj2(left, right):
            nl = letter_length(left)
            nr = letter_length(right)
            return Graph(nl + nr, nr, tuple(range(nl + 1, nl + nr + 1)))
        case Bang(obj):
            return Graph(letter_length(obj), 0, ())
        case Pair(first, second):
            gf = graph_of(first)
            gs = graph_of(second)
            return Graph(
                gf.source_letters,
                gf.target_letters + gs.target_letters,
                gf.map + gs.map,
            )
        case Compose(factors):
            return reduce(graph_compose, (graph_of(f) for f in factors))
    raise TypeError(f"not an arrow term: {t!r}")


def graph_equal(a: Graph, b: Graph) -> bool:
    """Pointwise equality of graphs."""
    return a == b


def letter_compatible(g: Graph, dom: ObjectExpr, cod: ObjectExpr) -> bool:
    """Whether g only connects equal letters of dom and cod."""
    if g.source_letters != letter_length(dom):
        raise ArityMismatch(
            f"graph has {g.source_letters} source letters, domain has {letter_length(dom)}"
        )
    if g.target_letters != letter_length(cod):
        raise ArityMismatch(
            f"graph has {g.target_letters} target letters, codomain has {letter_length(cod)}"
        )
    return all(
        letter_at(dom, g.map[i - 1]) == letter_at(cod, i)
        for i in range(1, g.target_letters + 1)
    )


def graph_to_json_dict(g: Graph) -> dict:
    """The JSON shape used by the command line interface."""
    return {
        "source_letters": g.source_letters,
        "target_letters": g.target_letters,
        "map": list(g.map),
    }


def graph_from_json_dict(d: dict) -> Graph:
    return Graph(int(d["source_letters"]), int(d["target_letters"]), tuple(d["map"]))
