"""Simplicial sets: normal forms, constructors, the action of ordinal maps."""

import math

import pytest

from simphom.delta import (
    MonotoneMap,
    collapse_map,
    degeneracy_map,
    face_map,
    identity_map,
    surjection_from_repeats,
)
from simphom.oracle import count_monotone_lattice_maps
from simphom.simpset import (
    CellId,
    FormalSimplex,
    SimplicialSet,
    boundary_delta,
    cell_simplex,
    delta,
    disjoint_sum,
    from_json_dict,
    horn,
    is_degenerate,
    is_isomorphic,
    nerve_poset,
    product,
    quotient,
    subcomplex,
    to_json_dict,
    union,
)


class TestNormalForms:
    def test_cell_counts(self):
        assert len(delta(0).cells) == 1
        assert len(delta(1).cells) == 3
        assert len(delta(2).cells) == 7
        assert len(delta(3).cells) == 15

    def test_token_round_trip(self):
        top = delta(3).cell("0,1,2,3")
        x = cell_simplex(top)
        assert x.token() == "0,1,2,3"
        y = FormalSimplex(surjection_from_repeats(5, (0, 3)), top)
        assert y.token() == "s3s0:0,1,2,3"
        assert y.degree == 5 and y.is_degenerate

    def test_normal_form_validation(self):
        top = delta(1).cell("0,1")
        with pytest.raises(ValueError):
            FormalSimplex(face_map(0, 2), top)  # not surjective
        with pytest.raises(ValueError):
            FormalSimplex(collapse_map(2), top)  # wrong target dimension

    def test_simplex_counts_match_lattice_model(self):
        # degree-p simplices of the standard q-simplex = monotone [p] -> [q]
        for q in range(4):
            space = delta(q)
            for p in range(5):
                assert len(space.simplices(p)) == count_monotone_lattice_maps(p, 0, q)

    def test_simplices_order_is_canonical(self):
        sims = delta(1).simplices(2)
        assert [s.token() for s in sims] == ["s1s0:0", "s1s0:1", "s0:0,1", "s1:0,1"]

    def test_degenerate_flag(self):
        e = cell_simplex(delta(1).cell("0,1"))
        assert not is_degenerate(e)
        assert is_degenerate(delta(1).degeneracy(e, 0))


class TestAction:
    def test_face_of_standard_simplex(self):
        space = delta(2)
        top = cell_simplex(space.cell("0,1,2"))
        assert space.face(top, 0).generator.name == "1,2"
        assert space.face(top, 1).generator.name == "0,2"
        assert space.face(top, 2).generator.name == "0,1"

    def test_degeneracy_then_face_cancels(self):
        space = delta(2)
        top = cell_simplex(space.cell("0,1,2"))
        for k in range(3):
            up = space.degeneracy(top, k)
            assert space.face(up, k) == top
            assert space.face(up, k + 1) == top

    def test_action_is_functorial(self):
        space = delta(2)
        top = cell_simplex(space.cell("0,1,2"))
        from simphom.delta import compose_monotone

        f = MonotoneMap(3, 2, (0, 0, 1, 2))
        g = MonotoneMap(2, 3, (0, 2, 3))
        both = space.apply_map(compose_monotone(f, g), top)
        stepwise = space.apply_map(g, space.apply_map(f, top))
        assert both == stepwise

    def test_identity_action(self):
        space = delta(2)
        for p in range(4):
            for x in space.simplices(p):
                assert space.apply_map(identity_map(p), x) == x

    def test_simplicial_identity_validation(self):
        a, b, c = CellId(0, "a"), CellId(0, "b"), CellId(0, "c")
        e1, e2 = CellId(1, "e1"), CellId(1, "e2")
        t = CellId(2, "t")
        cs = cell_simplex
        faces = {
            e1: (cs(b), cs(a)),
            e2: (cs(c), cs(b)),
            t: (cs(e2), cs(e1), cs(e1)),
        }
        with pytest.raises(ValueError):
            SimplicialSet([a, b, c, e1, e2, t], faces)


class TestConstructors:
    def test_boundary_and_horn(self):
        assert len(boundary_delta(2).cells) == 6
        assert len(horn(2, 1).cells) == 5
        assert len(boundary_delta(3).cells) == 14
        assert len(horn(3, 1).cells) == 13
        assert boundary_delta(2).dim == 1
        assert horn(2, 1).has_cell("0,1") and horn(2, 1).has_cell("1,2")
        assert not horn(2, 1).has_cell("0,2")

    def test_subcomplex_closes_under_faces(self):
        space = delta(3)
        sub = subcomplex(space, ["0,1,2"])
        assert sorted(c.name for c in sub.cells) == ["0", "0,1", "0,1,2", "0,2", "1", "1,2", "2"]

    def test_union(self):
        left = subcomplex(delta(2), ["0,1"])
        right = subcomplex(delta(2), ["1,2"])
        both = union(left, right)
        assert len(both.cells) == 5
        assert is_isomorphic(both, horn(2, 1))

    def test_disjoint_sum(self):
        two = disjoint_sum(delta(1), delta(1))
        assert len(two.cells) == 6
        assert two.dim == 1

    def test_product_square(self):
        square = product(delta(1), delta(1))
        assert [len(square.cells_of_dim(d)) for d in range(3)] == [4, 5, 2]

    def test_product_top_cells_are_shuffles(self):
        prism = product(delta(1), delta(2))
        assert len(prism.cells_of_dim(3)) == math.comb(3, 1)
        # cells of each dimension = injective chains in the 2x3 grid poset
        assert [len(prism.cells_of_dim(d)) for d in range(4)] == [6, 12, 10, 3]

    def test_product_with_point(self):
        assert is_isomorphic(product(delta(0), delta(2)), delta(2))

    def test_quotient_collapsed_edge(self):
        squashed = quotient(delta(2), ["0,2"])
        assert len(squashed.cells) == 5
        assert squashed.has_cell("*")
        top = cell_simplex(squashed.cell("0,1,2"))
        d1 = squashed.face(top, 1)
        assert d1.is_degenerate and d1.generator.name == "*"

    def test_quotient_boundary_sphere(self):
        ball = quotient(delta(3), [c.name for c in boundary_delta(3).cells_of_dim(2)])
        assert sorted(c.dim for c in ball.cells) == [0, 3]
        top = cell_simplex(ball.cell("0,1,2,3"))
        for i in range(4):
            f = ball.face(top, i)
            assert f.generator.name == "*" and f.epi == collapse_map(2)

    def test_quotient_star_name_collision(self):
        # a surviving vertex literally called "*" forces a suffixed star name
        space = nerve_poset(["*", "b", "c"], {("b", "c")})
        squashed = quotient(space, ["b<c"])
        assert {c.name for c in squashed.cells} == {"*", "*1"}

    def test_nerve_chain_is_standard_simplex(self):
        chain = nerve_poset(["a", "b", "c"], {("a", "b"), ("b", "c"), ("a", "c")})
        assert is_isomorphic(chain, delta(2))

    def test_nerve_vee(self):
        vee = nerve_poset(["a", "b", "c"], {("a", "b"), ("a", "c")})
        assert [len(vee.cells_of_dim(d)) for d in range(2)] == [3, 2]

    def test_nerve_diamond(self):
        rel = {("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("a", "d")}
        diamond = nerve_poset(["a", "b", "c", "d"], rel)
        assert [len(diamond.cells_of_dim(d)) for d in range(3)] == [4, 5, 2]

    def test_nerve_requires_transitive_closure(self):
        with pytest.raises(ValueError):
            nerve_poset(["a", "b", "c"], {("a", "b"), ("b", "c")})

    def test_nerve_rejects_cycles(self):
        with pytest.raises(ValueError):
            nerve_poset(["a", "b"], {("a", "b"), ("b", "a")})


class TestSerialisation:
    def test_round_trip_exact(self):
        for space in [delta(2), quotient(delta(2), ["0,2"]), product(delta(1), delta(1))]:
            data = to_json_dict(space)
            back = from_json_dict(data)
            assert sorted(c.name for c in back.cells) == sorted(c.name for c in space.cells)
            assert is_isomorphic(back, space)

    def test_json_is_plain_data(self):
        import json

        blob = json.dumps(to_json_dict(horn(2, 0)))
        assert from_json_dict(json.loads(blob)).dim == 1


class TestIsomorphism:
    def test_positive(self):
        assert is_isomorphic(delta(2), delta(2))
        assert is_isomorphic(product(delta(1), delta(0)), delta(1))

    def test_negative(self):
        assert not is_isomorphic(delta(1), boundary_delta(2))
        vee = nerve_poset(["a", "b", "c"], {("a", "b"), ("a", "c")})
        wedge = nerve_poset(["a", "b", "c"], {("a", "c"), ("b", "c")})
        assert not is_isomorphic(vee, wedge)  # sources vs sinks differ

    def test_respects_face_structure(self):
        # same cell vector, different gluing: cylinder vs Moebius-like twist
        left = quotient(delta(2), ["0,1"])
        right = quotient(delta(2), ["0,2"])
        assert [c.dim for c in left.cells] == [c.dim for c in right.cells]
        assert is_isomorphic(left, right) == is_isomorphic(right, left)
