"""Finite simplicial sets presented by nondegenerate cells and face tables.

A finite simplicial set is stored the way one computes with it: as a list
of nondegenerate cells together with a *face table* that records, for every
cell ``c`` of dimension q >= 1 and every 0 <= i <= q, the normal form of
the i-th face of ``c``.  Normal forms are :class:`FormalSimplex` values: a
surjection applied to a nondegenerate cell.  Every simplex of the set is
such a pair, and the pair is unique; the contravariant action of an
arbitrary monotone map is computed by :meth:`SimplicialSet.apply_map`,
which re-normalises after pushing injections through the face table one
step at a time.

All constructors validate the simplicial identities eagerly, so a
``SimplicialSet`` that exists is consistent.  Instances are immutable
after construction (internal caches aside) and safe for unsynchronised
concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .delta import (
    MonotoneMap,
    SurjectionWord,
    collapse_map,
    compose_monotone,
    epi_mono_factor,
    face_map,
    identity_map,
    surjection_to_word,
    word_to_surjection,
)


@dataclass(frozen=True, order=True)
class CellId:
    """Identifier of a nondegenerate cell: dimension plus a unique name."""

    dim: int
    name: str

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("cell dimension must be non-negative")
        if not self.name:
            raise ValueError("cell name must be non-empty")


@dataclass(frozen=True, order=True)
class FormalSimplex:
    """Normal form of a simplex: a surjection applied to a cell.

    ``FormalSimplex(epi, generator)`` denotes the simplex obtained by
    collapsing along ``epi`` and then sitting on the nondegenerate cell
    ``generator``; its degree is the source ordinal of ``epi``.
    """

    epi: MonotoneMap
    generator: CellId

    def __post_init__(self):
        if not self.epi.is_surjective:
            raise ValueError("normal forms require a surjective collapse part")
        if self.epi.target != self.generator.dim:
            raise ValueError(
                "collapse lands in [%d] but the generator has dimension %d"
                % (self.epi.target, self.generator.dim)
            )

    @property
    def degree(self):
        return self.epi.source

    @property
    def is_degenerate(self):
        return not self.epi.is_identity

    def token(self):
        """Compact unique string, used for derived cell names and dumps."""
        if self.epi.is_identity:
            return self.generator.name
        word = surjection_to_word(self.epi)
        return "s" + "s".join(str(i) for i in word.indices) + ":" + self.generator.name


def cell_simplex(cell):
    """The tautological nondegenerate simplex sitting on a cell."""
    return FormalSimplex(identity_map(cell.dim), cell)


class SimplicialSet:
    """A finite simplicial set with eagerly validated face structure."""

    def __init__(self, cells, faces, validate=True):
        cells = tuple(sorted(cells))
        by_name = {}
        for c in cells:
            if c.name in by_name:
                raise ValueError("duplicate cell name %r" % (c.name,))
            by_name[c.name] = c
        table = {}
        for c in cells:
            entries = tuple(faces.get(c, ()))
            if c.dim == 0:
                if entries:
                    raise ValueError("vertex %r cannot have face entries" % (c.name,))
            else:
                if len(entries) != c.dim + 1:
                    raise ValueError(
                        "cell %r of dimension %d needs %d face entries, got %d"
                        % (c.name, c.dim, c.dim + 1, len(entries))
                    )
                for fs in entries:
                    if fs.degree != c.dim - 1:
                        raise ValueError("face of %r has wrong degree" % (c.name,))
                    if by_name.get(fs.generator.name) != fs.generator:
                        raise ValueError(
                            "face of %r references unknown cell %r"
                            % (c.name, fs.generator.name)
                        )
            table[c] = entries
        self._cells = cells
        self._by_name = by_name
        self._faces = table
        self._apply_cache = {}
        self._simplex_cache = {}
        self._hom_cache = {}
        if validate:
            self._check_simplicial_identities()

    # -- basic inspection ---------------------------------------------------

    @property
    def cells(self):
        return self._cells

    @property
    def faces(self):
        return self._faces

    def cell(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError("no cell named %r" % (name,)) from None

    def has_cell(self, name):
        return name in self._by_name

    def cells_of_dim(self, d):
        return tuple(c for c in self._cells if c.dim == d)

    @property
    def dim(self):
        """Largest cell dimension, or -1 for the empty simplicial set."""
        return max((c.dim for c in self._cells), default=-1)

    def __repr__(self):
        return "SimplicialSet(%d cells, dim %d)" % (len(self._cells), self.dim)

    # -- the contravariant action --------------------------------------------

    def apply_map(self, phi, x):
        """Act on the simplex ``x`` by the monotone map ``phi``.

        ``phi`` points INTO the degree of ``x``: for phi : [p] -> [q] and
        ``x`` of degree q the result has degree p.  The result is again a
        normal form; degeneracies introduced or removed along the way are
        handled by epi-mono factorisation and face-table lookups.
        """
        if phi.target != x.degree:
            raise ValueError(
                "map into [%d] cannot act on a simplex of degree %d"
                % (phi.target, x.degree)
            )
        key = (phi, x)
        cached = self._apply_cache.get(key)
        if cached is None:
            alpha = compose_monotone(x.epi, phi)
            epi, mono = epi_mono_factor(alpha)
            y = self._act_injective(mono, x.generator)
            cached = FormalSimplex(compose_monotone(y.epi, epi), y.generator)
            self._apply_cache[key] = cached
        return cached

    def _act_injective(self, mono, cell):
        # Push an injection through the face table, one missing value at a
        # time, re-normalising after every lookup.
        if mono.source == cell.dim:
            return cell_simplex(cell)
        image = set(mono.values)
        j = next(v for v in range(cell.dim, -1, -1) if v not in image)
        reduced = MonotoneMap(
            mono.source, cell.dim - 1, tuple(v if v < j else v - 1 for v in mono.values)
        )
        return self.apply_map(reduced, self._faces[cell][j])

    def face(self, x, i):
        """The i-th face of a simplex (degree drops by one)."""
        return self.apply_map(face_map(i, x.degree), x)

    def degeneracy(self, x, k):
        """The k-th degeneracy of a simplex (degree rises by one)."""
        from .delta import degeneracy_map

        return self.apply_map(degeneracy_map(k, x.degree), x)

    def simplices(self, degree):
        """All simplices of a given degree, in canonical order.

        The order is: generator cell (by dimension, then name), then the
        collapse word in ascending lexicographic order.
        """
        cached = self._simplex_cache.get(degree)
        if cached is None:
            out = []
            for c in self._cells:
                if c.dim > degree:
                    continue
                for repeats in combinations(range(degree), degree - c.dim):
                    epi = word_to_surjection(
                        SurjectionWord(degree, tuple(reversed(repeats)))
                    )
                    out.append(FormalSimplex(epi, c))
            cached = tuple(out)
            self._simplex_cache[degree] = cached
        return cached

    # -- validation -----------------------------------------------------------

    def _check_simplicial_identities(self):
        for c in self._cells:
            if c.dim < 2:
                continue
            x = cell_simplex(c)
            for j in range(1, c.dim + 1):
                for i in range(j):
                    left = self.face(self.face(x, j), i)
                    right = self.face(self.face(x, i), j - 1)
                    if left != right:
                        raise ValueError(
                            "face identities fail on %r at (i=%d, j=%d)" % (c.name, i, j)
                        )


def is_degenerate(x):
    """Whether a normal-form simplex is degenerate."""
    return x.is_degenerate


# ---------------------------------------------------------------------------
# Constructors.
# ---------------------------------------------------------------------------

def _vertex_tuple(name):
    return tuple(int(t) for t in name.split(","))


def _vertex_name(vertices):
    return ",".join(str(v) for v in vertices)


def delta(n):
    """The standard n-simplex: cells are the nonempty vertex subsets."""
    if n < 0:
        raise ValueError("delta(n) needs n >= 0")
    cells = []
    faces = {}
    for size in range(1, n + 2):
        for vs in combinations(range(n + 1), size):
            c = CellId(size - 1, _vertex_name(vs))
            cells.append(c)
            if size > 1:
                faces[c] = tuple(
                    cell_simplex(CellId(size - 2, _vertex_name(vs[:i] + vs[i + 1:])))
                    for i in range(size)
                )
    return SimplicialSet(cells, faces)


def subcomplex(ambient, generators):
    """The smallest face-closed collection containing the given cells.

    ``generators`` may contain cell names or CellId values of ``ambient``.
    """
    todo = []
    for g in generators:
        todo.append(ambient.cell(g) if isinstance(g, str) else ambient.cell(g.name))
    keep = set()
    while todo:
        c = todo.pop()
        if c in keep:
            continue
        keep.add(c)
        for fs in ambient.faces[c]:
            todo.append(fs.generator)
    return SimplicialSet(keep, {c: ambient.faces[c] for c in keep})


def boundary_delta(n):
    """The boundary of the n-simplex (empty for n = 0)."""
    if n < 0:
        raise ValueError("boundary_delta(n) needs n >= 0")
    full = delta(n)
    gens = [c for c in full.cells if c.dim == n - 1]
    return subcomplex(full, gens)


def horn(n, k):
    """The k-th horn of the n-simplex: the boundary minus its k-th facet."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("horn(%d, %d) is out of range" % (n, k))
    full = delta(n)
    top = tuple(range(n + 1))
    omitted = _vertex_name(top[:k] + top[k + 1:])
    gens = [c for c in full.cells if c.dim == n - 1 and c.name != omitted]
    return subcomplex(full, gens)


def union(a, b):
    """Union of two subcomplexes of one ambient simplicial set.

    Compatibility is checked structurally: cells with the same name must
    agree in dimension and face data, otherwise the arguments did not come
    from one ambient set.
    """
    cells = dict((c.name, c) for c in a.cells)
    faces = {c: a.faces[c] for c in a.cells}
    for c in b.cells:
        if c.name in cells:
            if cells[c.name] != c or faces[cells[c.name]] != b.faces[c]:
                raise ValueError(
                    "cell %r disagrees between the union arguments; "
                    "the sets do not share an ambient complex" % (c.name,)
                )
        else:
            cells[c.name] = c
            faces[c] = b.faces[c]
    return SimplicialSet(cells.values(), faces)


def disjoint_sum(a, b):
    """Disjoint union, with cells renamed inl:/inr: to keep names unique."""

    def relabel(space, prefix):
        mapping = {c: CellId(c.dim, prefix + c.name) for c in space.cells}
        faces = {}
        for c in space.cells:
            faces[mapping[c]] = tuple(
                FormalSimplex(fs.epi, mapping[fs.generator]) for fs in space.faces[c]
            )
        return list(mapping.values()), faces

    ca, fa = relabel(a, "inl:")
    cb, fb = relabel(b, "inr:")
    fa.update(fb)
    return SimplicialSet(ca + cb, fa)


def quotient(space, collapse_generators, star_name="*"):
    """Collapse the subcomplex generated by the given cells to one vertex.

    The collapsed subcomplex must be nonempty.  Cells outside it keep their
    names; face entries that used to land in the subcomplex become totally
    degenerate simplices on the fresh vertex.
    """
    doomed = set(subcomplex(space, collapse_generators).cells)
    if not doomed:
        raise ValueError("cannot collapse an empty subcomplex")
    kept = [c for c in space.cells if c not in doomed]
    name = star_name
    suffix = 0
    taken = {c.name for c in kept}
    while name in taken:
        suffix += 1
        name = "%s%d" % (star_name, suffix)
    star = CellId(0, name)
    cells = kept + [star]
    faces = {}
    for c in kept:
        if c.dim == 0:
            continue
        entries = []
        for fs in space.faces[c]:
            if fs.generator in doomed:
                entries.append(FormalSimplex(collapse_map(c.dim - 1), star))
            else:
                entries.append(fs)
        faces[c] = tuple(entries)
    return SimplicialSet(cells, faces)


def _factor_through(f, gamma):
    """Return g with f == g o gamma, given that f is constant on the fibres."""
    out = [None] * (gamma.target + 1)
    for t, k in enumerate(gamma.values):
        if out[k] is None:
            out[k] = f.values[t]
        elif out[k] != f.values[t]:
            raise ValueError("map does not factor through the collapse")
    return MonotoneMap(gamma.target, f.target, tuple(out))


def _surjection_from_repeats(degree, repeats):
    word = SurjectionWord(degree, tuple(sorted(repeats, reverse=True)))
    return word_to_surjection(word)


def _pair_name(fx, fy):
    return "(" + fx.token() + "|" + fy.token() + ")"


def product(a, b):
    """The levelwise product, presented by jointly nondegenerate pairs.

    A nondegenerate r-cell is a pair of collapses (one of a cell of each
    factor) whose repeat positions are disjoint; faces are computed in each
    factor and then re-normalised jointly.
    """
    cells = {}
    pair_of = {}
    for x in a.cells:
        for y in b.cells:
            for r in range(max(x.dim, y.dim), x.dim + y.dim + 1):
                for ra in combinations(range(r), r - x.dim):
                    rest = [i for i in range(r) if i not in ra]
                    for rb in combinations(rest, r - y.dim):
                        fx = FormalSimplex(_surjection_from_repeats(r, ra), x)
                        fy = FormalSimplex(_surjection_from_repeats(r, rb), y)
                        c = CellId(r, _pair_name(fx, fy))
                        cells[c] = (fx, fy)
                        pair_of[(fx, fy)] = c
    faces = {}
    for c, (fx, fy) in cells.items():
        if c.dim == 0:
            continue
        entries = []
        for i in range(c.dim + 1):
            u = a.apply_map(face_map(i, c.dim), fx)
            v = b.apply_map(face_map(i, c.dim), fy)
            common = set(u.epi.repeat_positions()) & set(v.epi.repeat_positions())
            gamma = _surjection_from_repeats(c.dim - 1, common)
            core = (
                FormalSimplex(_factor_through(u.epi, gamma), u.generator),
                FormalSimplex(_factor_through(v.epi, gamma), v.generator),
            )
            entries.append(FormalSimplex(gamma, pair_of[core]))
        faces[c] = tuple(entries)
    return SimplicialSet(cells.keys(), faces)


def nerve_poset(carrier, strictly_below):
    """The nerve of a finite poset: cells are the strictly increasing chains.

    ``strictly_below`` lists the pairs (x, y) with x < y and must be the
    full strict order: irreflexive, antisymmetric and transitive, otherwise
    the construction is rejected.
    """
    elements = list(carrier)
    names = [str(e) for e in elements]
    if len(set(names)) != len(names):
        raise ValueError("poset elements must have distinct printable names")
    for nm in names:
        if "<" in nm:
            raise ValueError("poset element name %r may not contain '<'" % (nm,))
    rel = set()
    index = {e: i for i, e in enumerate(elements)}
    for x, y in strictly_below:
        if x not in index or y not in index:
            raise ValueError("relation mentions an element outside the carrier")
        if x == y:
            raise ValueError("strict order cannot relate %r to itself" % (x,))
        rel.add((index[x], index[y]))
    for (x, y) in rel:
        if (y, x) in rel:
            raise ValueError("relation is not antisymmetric on %r, %r" % (elements[x], elements[y]))
    for (x, y) in rel:
        for (y2, z) in rel:
            if y2 == y and (x, z) not in rel:
                raise ValueError(
                    "relation is not transitive: %r < %r < %r but the outer pair is missing"
                    % (elements[x], elements[y], elements[z])
                )
    chains = []

    def extend(chain):
        chains.append(chain)
        last = chain[-1]
        for j in range(len(elements)):
            if (last, j) in rel:
                extend(chain + (j,))

    for i in range(len(elements)):
        extend((i,))
    cells = {}
    faces = {}
    for chain in chains:
        c = CellId(len(chain) - 1, "<".join(names[i] for i in chain))
        cells[chain] = c
    for chain, c in cells.items():
        if len(chain) > 1:
            faces[c] = tuple(
                cell_simplex(cells[chain[:i] + chain[i + 1:]])
                for i in range(len(chain))
            )
    return SimplicialSet(cells.values(), faces)


# ---------------------------------------------------------------------------
# Serialisation.
# ---------------------------------------------------------------------------

def to_json_dict(space):
    """Serialise to plain data: cells plus face entries as (word, generator)."""
    return {
        "cells": [{"id": c.name, "dim": c.dim} for c in space.cells],
        "faces": {
            c.name: [
                [list(surjection_to_word(fs.epi).indices), fs.generator.name]
                for fs in space.faces[c]
            ]
            for c in space.cells
            if c.dim >= 1
        },
    }


def from_json_dict(data):
    """Rebuild a simplicial set from :func:`to_json_dict` output."""
    cells = {entry["id"]: CellId(entry["dim"], entry["id"]) for entry in data["cells"]}
    faces = {}
    for name, entries in data.get("faces", {}).items():
        c = cells[name]
        built = []
        for word, gen in entries:
            epi = word_to_surjection(SurjectionWord(c.dim - 1, tuple(word)))
            built.append(FormalSimplex(epi, cells[gen]))
        faces[c] = tuple(built)
    return SimplicialSet(cells.values(), faces)


# ---------------------------------------------------------------------------
# Isomorphism testing (used mainly by the test-suite).
# ---------------------------------------------------------------------------

def is_isomorphic(a, b):
    """Decide isomorphism by dimension-wise backtracking on cells."""
    if len(a.cells) != len(b.cells):
        return False
    dims_a = sorted(c.dim for c in a.cells)
    dims_b = sorted(c.dim for c in b.cells)
    if dims_a != dims_b:
        return False
    order = list(a.cells)  # sorted by (dim, name); faces point downward
    targets = {d: list(b.cells_of_dim(d)) for d in set(dims_a)}

    def signature(cell, mapping, space):
        return tuple(
            (fs.epi, mapping.get(fs.generator, fs.generator))
            for fs in space.faces[cell]
        )

    def matches(x, y, mapping):
        if x.dim != y.dim:
            return False
        want = tuple((fs.epi, mapping[fs.generator]) for fs in a.faces[x])
        have = tuple((fs.epi, fs.generator) for fs in b.faces[y])
        return want == have

    used = set()
    mapping = {}

    def assign(k):
        if k == len(order):
            return True
        x = order[k]
        for y in targets[x.dim]:
            if y in used or not matches(x, y, mapping):
                continue
            mapping[x] = y
            used.add(y)
            if assign(k + 1):
                return True
            del mapping[x]
            used.remove(y)
        return False

    return assign(0)
