"""Edge-based degeneracy diagnostics for finite simplicial sets.

Three nested conditions are implemented, all phrased through the two-point
edge maps of :mod:`simphom.delta`:

* *strongly regular*: every face of every nondegenerate cell is again
  nondegenerate (the face table contains no collapses at all);
* *regular*: every elementary edge (consecutive vertices i, i+1) of every
  nondegenerate cell is nondegenerate;
* *collapse property of width r*: whenever the edge from position i to
  position i + r of any simplex x is degenerate, x is an r-fold degeneracy
  on that whole block, i.e. its collapse is constant on {i, ..., i + r}.

The width-r property is checked by enumerating simplices up to a degree
cap; the default cap (dimension + r + 1) exceeds the largest degree at
which a minimal violation can occur, because a violating block always
compresses onto an edge of width <= r of a nondegenerate cell.

Reports carry the lexicographically least witness: cells are scanned in
(dimension, name) order, then by collapse word, then by edge index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .delta import edge_map
from .simpset import FormalSimplex, cell_simplex


@dataclass(frozen=True)
class RegularityReport:
    """Outcome of a diagnostic: a verdict plus the least violation found.

    ``witness`` is ``None`` on success; otherwise a pair ``(subject, index)``
    where ``subject`` is the cell or normal-form simplex at fault and
    ``index`` points at the offending face or edge.
    """

    verdict: bool
    witness: tuple = None

    def __bool__(self):
        return self.verdict


def is_strongly_regular(space):
    """Whether every face entry of every cell is nondegenerate."""
    for c in space.cells:
        for i, fs in enumerate(space.faces[c]):
            if fs.is_degenerate:
                return RegularityReport(False, (c, i))
    return RegularityReport(True)


def is_regular(space):
    """Whether every elementary edge of every cell is nondegenerate."""
    for c in space.cells:
        x = cell_simplex(c)
        for i in range(c.dim):
            if space.apply_map(edge_map(i, 1, c.dim), x).is_degenerate:
                return RegularityReport(False, (c, i))
    return RegularityReport(True)


def satisfies_pr(space, r, degree_cap=None):
    """Whether degenerate edges of width <= r only arise from block collapses.

    Every simplex x of degree at most ``degree_cap`` is enumerated in its
    normal form, and for every admissible position i the edge from i to
    i + r of x is computed.  If that edge is degenerate, x itself must be
    constant on the block {i, ..., i + r} under its collapse; the first
    simplex violating this is returned as the witness.
    """
    if r < 1:
        raise ValueError("the collapse property needs a width r >= 1")
    if degree_cap is None:
        degree_cap = space.dim + r + 1
    if degree_cap < space.dim:
        raise ValueError(
            "degree cap %d is below the dimension %d" % (degree_cap, space.dim)
        )
    for degree in range(degree_cap + 1):
        for x in space.simplices(degree):
            values = x.epi.values
            for i in range(degree - r + 1):
                if values[i] == values[i + r]:
                    continue  # the block is already collapsed; nothing to check
                edge = space.apply_map(edge_map(i, r, degree), x)
                if edge.is_degenerate:
                    return RegularityReport(False, (x, i))
    return RegularityReport(True)


def count_efficient_edges(space, x):
    """Number of elementary edges of x that are nondegenerate."""
    total = 0
    for i in range(x.degree):
        if not space.apply_map(edge_map(i, 1, x.degree), x).is_degenerate:
            total += 1
    return total


def edge_detects_degeneracy(space, degree_cap):
    """Whether, up to the cap, a simplex is degenerate exactly when one of
    its elementary edges is.

    The forward direction (a degenerate simplex has a degenerate elementary
    edge) holds in every simplicial set once the degree is at least one; the
    reverse direction characterises the regular ones.
    """
    for degree in range(1, degree_cap + 1):
        for x in space.simplices(degree):
            has_bad_edge = any(
                space.apply_map(edge_map(i, 1, degree), x).is_degenerate
                for i in range(degree)
            )
            if x.is_degenerate != has_bad_edge:
                return RegularityReport(False, (x, None))
    return RegularityReport(True)
