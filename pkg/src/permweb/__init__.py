"""Exact diagram calculus on symmetric-group permutation modules.

The package evaluates spider/ladder diagrams to exact rational matrices on
tabloid bases, decomposes tensor products of permutation modules into
contingency-matrix blocks, implements Brauer and walled Brauer diagram
algebras with their tensor actions, and machine-checks the relation and
duality identities behind those constructions.
"""

from .exact import LinMap, Rational, commutant_dimension, compose, rank, tensor
from .tabloids import (PermModule, Tabloid, TabloidMorphism, braid_op,
                       canonical_iso, circle, identity_morphism, lowering_op,
                       merge_op, perm_module, raising_op, split_op)
from .spiders import (SpiderDiagram, SpiderExpr, evaluate, expand_cross,
                      hcompose, parse, parse_linear, print_diagram, vcompose)
from .kron import (BlockMorphism, block_lowering, block_raising,
                   decompose_tensor, oracle_tensor, tensor_generator)
from .brauer import (BrauerDiagram, BrauerElement, act_brauer_o,
                     act_brauer_sp, act_walled, all_diagrams, duality_check,
                     is_walled, lie_generator_matrix, multiply,
                     sp_ladder_relation_suite, sp_weight_space_basis)
from .saturation import is_saturated_gl, schur_block_dims, sl2_doty_demo

__all__ = [
    "LinMap", "Rational", "commutant_dimension", "compose", "rank", "tensor",
    "PermModule", "Tabloid", "TabloidMorphism", "braid_op", "canonical_iso",
    "circle", "identity_morphism", "lowering_op", "merge_op", "perm_module",
    "raising_op", "split_op",
    "SpiderDiagram", "SpiderExpr", "evaluate", "expand_cross", "hcompose",
    "parse", "parse_linear", "print_diagram", "vcompose",
    "BlockMorphism", "block_lowering", "block_raising", "decompose_tensor",
    "oracle_tensor", "tensor_generator",
    "BrauerDiagram", "BrauerElement", "act_brauer_o", "act_brauer_sp",
    "act_walled", "all_diagrams", "duality_check", "is_walled",
    "lie_generator_matrix", "multiply", "sp_ladder_relation_suite",
    "sp_weight_space_basis",
    "is_saturated_gl", "schur_block_dims", "sl2_doty_demo",
]
