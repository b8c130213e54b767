"""Building finite simplicial sets and reading their normal forms.

Run:  python3 demos/01_building_simplicial_sets.py
"""

from simphom import (
    boundary_delta,
    delta,
    disjoint_sum,
    from_json_dict,
    horn,
    is_isomorphic,
    nerve_poset,
    product,
    quotient,
    subcomplex,
    to_json_dict,
    union,
)


def cells_by_dim(space):
    return [len(space.cells_of_dim(d)) for d in range(space.dim + 1)]


print("== standard building blocks ==")
triangle = delta(2)
print("triangle cells by dimension:", cells_by_dim(triangle))
print("boundary of the tetrahedron:", cells_by_dim(boundary_delta(3)))
print("inner horn of the triangle: ", cells_by_dim(horn(2, 1)))

print()
print("== every simplex has a normal form: a collapse word on a cell ==")
# degree-2 simplices of the interval: two degenerate ones per vertex,
# two degenerate ones on the edge
for simplex in delta(1).simplices(2):
    print("  %-8s degenerate=%s" % (simplex.token(), not simplex.epi.is_identity))

print()
print("== closure constructions ==")
square = product(delta(1), delta(1))
print("interval x interval:        ", cells_by_dim(square))
prism = product(delta(1), delta(2))
print("interval x triangle:        ", cells_by_dim(prism))
two = disjoint_sum(triangle, triangle)
print("two disjoint triangles:     ", cells_by_dim(two))
squashed = quotient(triangle, ["0,2"])
print("triangle / long edge:       ", cells_by_dim(squashed))

print()
print("== unions rebuild what subcomplexes take apart ==")
left = subcomplex(triangle, ("0,1",))
right = subcomplex(triangle, ("1,2",))
glued = union(left, right)
print("two edges of the triangle glued back:", cells_by_dim(glued))
print("that is the inner horn again:", is_isomorphic(glued, horn(2, 1)))

print()
print("== nerves of posets ==")
fence = nerve_poset(("a", "b", "c", "d"), {("a", "b"), ("c", "b"), ("c", "d")})
print("nerve of the zigzag a<b>c<d:", cells_by_dim(fence))
chain = nerve_poset(("x", "y", "z"), {("x", "y"), ("y", "z"), ("x", "z")})
print("nerve of a 3-chain is a triangle:", is_isomorphic(chain, triangle))

print()
print("== JSON round trip ==")
blob = to_json_dict(squashed)
again = from_json_dict(blob)
print("round-tripped quotient is isomorphic:", is_isomorphic(squashed, again))
