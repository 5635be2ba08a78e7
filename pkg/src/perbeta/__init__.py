"""Eventually periodic representations in an algebraic base beta.

Elements of Q(beta) are written as sum_{k >= -L} a_k beta^(-k) with integer digits
that become periodic. The engine finds exponents i > j with beta^i - beta^j in
n Z[beta] (every witness is certified by an exact identity in Z[x]) and turns
them into digit strings whose values are checked exactly.
"""

from .errors import PerBetaError
from .fermat import coprime_walk, combine_coprime, densify, find_witness, power_min_poly, prime_power_witness
from .field import BaseSpec, FieldElement, check_base, field_inv, field_reduce
from .graph import GraphVertex, WitnessPath, export_dot, neighbors, path_to_witness, shortest_path
from .membership import member_nZbeta
from .poly import IntPoly, LaurentIntPoly, mod_project, poly_mul
from .representation import (
    PeriodicRep,
    canonicalize,
    multiply_finite,
    normalize_digits,
    rep_of_field_element,
    rep_of_unit_fraction,
)
from .verify import eval_rep, witness_from_rep
from .witness import FermatWitness

__all__ = [
    "BaseSpec", "FermatWitness", "FieldElement", "GraphVertex", "IntPoly", "LaurentIntPoly",
    "PerBetaError", "PeriodicRep", "WitnessPath", "canonicalize", "check_base", "combine_coprime",
    "coprime_walk", "densify", "eval_rep", "export_dot", "field_inv", "field_reduce", "find_witness",
    "member_nZbeta", "mod_project", "multiply_finite", "neighbors", "normalize_digits",
    "path_to_witness", "poly_mul", "power_min_poly", "prime_power_witness", "rep_of_field_element",
    "rep_of_unit_fraction", "shortest_path", "witness_from_rep",
]
