"""The internal mapping space Hom(D^n, X), computed three ways.

A p-simplex of Hom(D^n, X) assigns a (p+n)-simplex of X to each maximal
lattice path in a p x n grid, compatibly across single-square flips.
This demo enumerates them, takes their dimension, assembles the whole
mapping space into a simplicial set, and cross-checks the counts against
two independent oracles.

Run:  python3 demos/03_mapping_spaces.py
"""

from collections import Counter

from simphom import (
    all_paths,
    brute_force_hom_count,
    count_monotone_lattice_maps,
    delta,
    dim_hom,
    enumerate_hom_simplices,
    hom_complex,
    is_degenerate_hom,
    is_isomorphic,
    lattice_to_hom,
    product,
    tight_simplex,
)

print("== the 2-simplices of Hom(interval, interval) ==")
for f in enumerate_hom_simplices(delta(1), 1, 2):
    row = ", ".join(
        "%s -> %s" % (path.word, f.value(path).token())
        for path in all_paths(f.width, f.height)
    )
    print("  [%s]%s" % (row, "   (degenerate)" if is_degenerate_hom(f) else ""))

print()
print("== dimension of Hom(D^n, D^q) is exactly (n+1)q ==")
for n in (1, 2):
    for q in (1, 2):
        print("  n=%d q=%d  dim = %s" % (n, q, dim_hom(delta(q), n)))

print()
print("== the extremal staircase witnessing the dimension ==")
staircase = lattice_to_hom(delta(2), tight_simplex(1, 2))
assert not is_degenerate_hom(staircase)
for path in all_paths(staircase.width, staircase.height):
    print("  %s -> %s" % (path.word, staircase.value(path).token()))

print()
print("== the assembled mapping space is an honest simplicial set ==")
cx, legend = hom_complex(delta(1), 1)
print("  Hom(interval, interval) has cells", [len(cx.cells_of_dim(d)) for d in range(cx.dim + 1)])
print("  ... and is isomorphic to the triangle:", is_isomorphic(cx, delta(2)))

print()
print("== three independent counts agree ==")
target = product(delta(1), delta(1))
for p in (0, 1, 2):
    engine = len(enumerate_hom_simplices(target, 1, p))
    oracle = brute_force_hom_count(delta(1), target, p)
    print("  |Hom(interval, square)_%d| engine=%d brute-force=%d" % (p, engine, oracle))

print()
print("  standard-simplex targets also match a grid-counting formula:")
for p in (3, 5):
    engine = len(enumerate_hom_simplices(delta(2), 1, p))
    closed = count_monotone_lattice_maps(p, 1, 2)
    print("  |Hom(interval, triangle)_%d| engine=%d lattice=%d" % (p, engine, closed))

print()
print("== degeneracy statistics ==")
tally = Counter()
for p in range(0, 5):
    for f in enumerate_hom_simplices(delta(1), 1, p):
        tally[(p, is_degenerate_hom(f))] += 1
for p in range(0, 5):
    print(
        "  degree %d: %2d simplices, %d nondegenerate"
        % (p, tally[(p, True)] + tally[(p, False)], tally[(p, False)])
    )
