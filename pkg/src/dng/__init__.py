"""Nim-numbers of the impartial avoidance game on finite groups.

Three independent routes to the same value: a maximal-subgroup checklist
(`classify`), a structure-class mex solver (`game_nim`), and a brute-force
game-tree oracle (`brute_nim`).
"""

from .classify import (
    Classification,
    FamilyPrediction,
    Rule,
    barnes_first_player_wins,
    classify,
    cyclic_formula,
    gendih_formula,
    is_nilpotent,
    nilpotent_formula,
    quaternion_formula,
    real_element_disjunction,
)
from .groups import (
    Group,
    direct_product,
    element_order,
    is_cyclic,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_generalized_dihedral,
    make_symmetric,
    min_generators,
    quotient,
)
from .groupspec import GroupSpec, build, parse_spec, print_spec
from .lattice import (
    IntersectionPoset,
    Lattice,
    Subgroup,
    all_maximals_even,
    all_maximals_odd,
    all_subgroups,
    even_maximals_cover,
    frattini,
    intersection_subgroups,
    maximal_subgroups,
    smallest_intersection_containing,
)
from .oracle import OracleResult, Position, brute_nim, brute_nim_position, mex
from .solver import (
    SimplifiedDiagram,
    StructureDigraph,
    TypeTriple,
    emit_dot,
    game_nim,
    simplify,
    solve_types,
    structure_digraph,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "FamilyPrediction",
    "Group",
    "GroupSpec",
    "IntersectionPoset",
    "Lattice",
    "OracleResult",
    "Position",
    "Rule",
    "SimplifiedDiagram",
    "StructureDigraph",
    "Subgroup",
    "TypeTriple",
    "all_maximals_even",
    "all_maximals_odd",
    "all_subgroups",
    "barnes_first_player_wins",
    "brute_nim",
    "brute_nim_position",
    "build",
    "classify",
    "cyclic_formula",
    "direct_product",
    "element_order",
    "emit_dot",
    "even_maximals_cover",
    "frattini",
    "game_nim",
    "gendih_formula",
    "intersection_subgroups",
    "is_cyclic",
    "is_nilpotent",
    "make_alternating",
    "make_cyclic",
    "make_dicyclic",
    "make_generalized_dihedral",
    "make_symmetric",
    "maximal_subgroups",
    "mex",
    "min_generators",
    "nilpotent_formula",
    "parse_spec",
    "print_spec",
    "quaternion_formula",
    "quotient",
    "real_element_disjunction",
    "simplify",
    "smallest_intersection_containing",
    "solve_types",
    "structure_digraph",
]
