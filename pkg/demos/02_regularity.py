"""Regularity: when do degenerate edges force degenerate simplices?

A set is *regular* when every elementary edge of a nondegenerate simplex
is nondegenerate, and *strongly regular* when every face of a
nondegenerate simplex is nondegenerate.  Both are decided exactly, with
witnesses on failure.

Run:  python3 demos/02_regularity.py
"""

from simphom import (
    boundary_delta,
    corpus,
    count_efficient_edges,
    delta,
    edge_detects_degeneracy,
    is_regular,
    is_strongly_regular,
    quotient,
    satisfies_pr,
)

print("== the three levels, on three small examples ==")
examples = [
    ("triangle", delta(2)),
    ("triangle / long edge", quotient(delta(2), ["0,2"])),
    ("tetrahedron / boundary", quotient(delta(3), [c.name for c in boundary_delta(3).cells])),
]
for name, space in examples:
    print(
        "  %-24s regular=%-5s strongly-regular=%s"
        % (name, bool(is_regular(space)), bool(is_strongly_regular(space)))
    )

print()
print("== failures come with witnesses ==")
squashed = quotient(delta(2), ["0,2"])
report = is_strongly_regular(squashed)
cell, face = report.witness
print("  collapsing the long edge leaves cell %r with degenerate face %d" % (cell.name, face))

ball = quotient(delta(3), [c.name for c in boundary_delta(3).cells])
report = is_regular(ball)
cell, edge = report.witness
print("  the collapsed ball has nondegenerate %r with degenerate edge %d" % (cell.name, edge))

print()
print("== the graded edge properties behind the two predicates ==")
for r in (1, 2, 3):
    verdicts = [bool(satisfies_pr(space, r)) for _, space in examples]
    print("  width-%d property: %s" % (r, dict(zip([n for n, _ in examples], verdicts))))

print()
print("== equivalent formulations agree on a seeded corpus ==")
entries = corpus(7, 40)
agree = all(
    bool(is_regular(e.space)) == bool(satisfies_pr(e.space, 1))
    == bool(edge_detects_degeneracy(e.space, e.space.dim + 2))
    for e in entries
)
print("  regular == width-1 property == edge-detection on %d sets: %s" % (len(entries), agree))

print()
print("== efficient edges measure how far degeneracy can hide ==")
from simphom import FormalSimplex, degeneracy_map

triangle = delta(2)
top = triangle.cell("0,1,2")
lifted = FormalSimplex(degeneracy_map(0, 2), top)  # s0 of the top cell
print("  %s has %d efficient edges" % (lifted.token(), count_efficient_edges(triangle, lifted)))
