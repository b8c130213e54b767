"""Finite simplicial sets, degeneracy analysis, and simplicial mapping spaces.

The package is organised bottom-up:

* :mod:`simphom.delta` -- arithmetic of weakly increasing maps between
  finite ordinals (composition, faces/degeneracies, epi-mono factorisation,
  surjection words).
* :mod:`simphom.simpset` -- finite simplicial sets presented by their
  nondegenerate cells and a face table in normal form, together with the
  standard constructors (simplices, boundaries, horns, products, quotients,
  subcomplexes, unions, sums, nerves of posets).
* :mod:`simphom.regularity` -- edge-based degeneracy diagnostics: strong
  regularity, regularity, and the graded collapse properties.
* :mod:`simphom.paths` -- monotone lattice paths in a (p, n) rectangle and
  their column decompositions.
* :mod:`simphom.hom` -- simplicial mapping spaces encoded by lattice-path
  assignments: enumeration, reindexing, degeneracy tests, dimension bounds.
* :mod:`simphom.exhibits` -- concrete certified simplices (the maximal
  dimension witness, the interval-map counterexample family) and a seeded
  corpus of small simplicial sets.
* :mod:`simphom.oracle` -- independent brute-force counters used to
  cross-check the mapping-space engine.
* :mod:`simphom.cli` -- a line-oriented script interface emitting JSON.
"""

from .delta import (
    MonotoneMap,
    SurjectionWord,
    collapse_map,
    compose_monotone,
    degeneracy_map,
    edge_map,
    epi_mono_factor,
    face_map,
    identity_map,
    surjection_to_word,
    word_to_surjection,
)
from .simpset import (
    CellId,
    FormalSimplex,
    SimplicialSet,
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
from .regularity import (
    RegularityReport,
    count_efficient_edges,
    edge_detects_degeneracy,
    is_regular,
    is_strongly_regular,
    satisfies_pr,
)
from .paths import LatticePath, PathSplit, all_paths, split_path_at_column
from .hom import (
    HomDimension,
    HomFamily,
    HomSimplex,
    RegularityViolation,
    almost_degenerate_at,
    dim_hom,
    dim_hom_general,
    edge_restriction,
    enumerate_hom_simplices,
    hom_bireindex,
    hom_complex,
    hom_degeneracy,
    hom_face,
    hom_general,
    hom_reindex,
    hom_simplex,
    is_degenerate_family,
    is_degenerate_hom,
    iter_hom_families,
    lemma4_witness,
    normalize_hom,
    theorem1bis_bound,
)
from .exhibits import (
    CorpusEntry,
    LatticeFunction,
    clamp,
    corpus,
    hom1_degeneracy_test,
    hom_to_lattice,
    lattice_to_hom,
    lurie_family,
    tight_simplex,
)
from .oracle import (
    OracleBudgetExceeded,
    brute_force_hom_count,
    count_monotone_lattice_maps,
)

__all__ = [name for name in dir() if not name.startswith("_")]
