"""Independent counting routes for mapping-space sizes.

Two deliberately separate ways to count the p-simplices of a mapping
space, used to cross-check the path-based engine:

* a brute-force count of simplicial maps out of an explicit product
  ``standard p-simplex x source``, assigning a target simplex to every
  nondegenerate cell of the product in dimension order, with eager
  feasibility pruning;
* a closed-form-free lattice count for standard-simplex source and
  target, where such maps are exactly the grid functions monotone in both
  directions.

Neither route touches the path encoding: they share only the basic
simplicial-set primitives.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .simpset import delta, product


class OracleBudgetExceeded(Exception):
    """The brute-force search used up its node budget."""

    def __init__(self, nodes):
        super().__init__(
            "brute-force search exceeded its budget of %d nodes" % (nodes,)
        )
        self.nodes = nodes


def count_simplicial_maps(domain, target, node_budget=2_000_000):
    """Count simplicial maps from one finite simplicial set to another.

    Cells of the domain are assigned target simplices of the same degree in
    dimension order; every face-table entry of the domain becomes an
    equation between target simplices.  Two prunings keep the search near
    the solution count: candidates for a cell are looked up by their first
    constrained face, and as soon as the last generator below a cell is
    assigned, the cell's candidate pool is checked for nonemptiness (the
    check is memoised on the required face values).
    """
    cells = domain.cells
    order_pos = {c: t for t, c in enumerate(cells)}
    watchers = [[] for _ in cells]
    for w in cells:
        entries = domain.faces[w]
        if not entries:
            continue
        trigger = max(order_pos[fs.generator] for fs in entries)
        watchers[trigger].append(w)

    buckets = {}

    def bucket(degree):
        table = buckets.get(degree)
        if table is None:
            table = {}
            for z in target.simplices(degree):
                table.setdefault(target.face(z, 0), []).append(z)
            buckets[degree] = table
        return table

    def required_faces(w, assigned):
        return tuple(
            target.apply_map(fs.epi, assigned[fs.generator])
            for fs in domain.faces[w]
        )

    def pool_for(degree, required):
        if not required:
            return target.simplices(degree)
        head = bucket(degree).get(required[0], ())
        if len(required) == 1:
            return head
        out = []
        for z in head:
            if all(
                target.face(z, i) == required[i]
                for i in range(1, len(required))
            ):
                out.append(z)
        return out

    feasible_memo = {}

    def feasible(w, required):
        key = (w, required)
        hit = feasible_memo.get(key)
        if hit is None:
            hit = bool(pool_for(w.dim, required))
            feasible_memo[key] = hit
        return hit

    assigned = {}
    budget = [node_budget]

    def rec(t):
        if t == len(cells):
            return 1
        c = cells[t]
        total = 0
        for z in pool_for(c.dim, required_faces(c, assigned)):
            budget[0] -= 1
            if budget[0] < 0:
                raise OracleBudgetExceeded(node_budget)
            assigned[c] = z
            ok = True
            for w in watchers[t]:
                if not feasible(w, required_faces(w, assigned)):
                    ok = False
                    break
            if ok:
                total += rec(t + 1)
        assigned.pop(c, None)
        return total

    return rec(0)


def brute_force_hom_count(source, target, width, node_budget=2_000_000):
    """|Hom(source, target)| in degree ``width``, counted the long way round.

    A width-p simplex of the mapping space is a simplicial map out of
    ``standard p-simplex x source``; the product is built explicitly and
    its maps are counted cell by cell.
    """
    return count_simplicial_maps(
        product(delta(width), source), target, node_budget=node_budget
    )


def count_monotone_lattice_maps(p, n, q):
    """Number of [p] x [n] grid functions into [q] monotone both ways.

    These are exactly the width-p simplices of the mapping space between
    standard simplices of dimensions n and q, counted with no simplicial
    machinery at all: dynamic programming over weakly increasing columns.
    """
    if p < 0 or n < 0:
        raise ValueError("grid shape must be nonnegative")
    if q < 0:
        return 0
    columns = list(combinations_with_replacement(range(q + 1), n + 1))
    counts = {col: 1 for col in columns}
    for _ in range(p):
        nxt = {}
        for col, ways in counts.items():
            for succ in columns:
                if all(a <= b for a, b in zip(col, succ)):
                    nxt[succ] = nxt.get(succ, 0) + ways
        counts = nxt
    return sum(counts.values())
