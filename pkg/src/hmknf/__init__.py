"""Unfounded sets, well-founded propagation and model search for ground
disjunctive hybrid MKNF knowledge bases over propositional ontologies."""

from hmknf.kb import (
    Atom,
    Conflict,
    HeadCut,
    KnowledgeBase,
    Partition,
    Rule,
    applicable,
    ka_of,
    partition_join,
)
from hmknf.kernels import BACKEND
from hmknf.ontology import ClausalOntology, Clause, Literal, entails, is_dependable, sat
from hmknf.propagation import PropagationConflict, PropagationResult, propagate, t_step, w_step
from hmknf.reduction import CnfInstance, encode_3sat_disjunctive, encode_3sat_normal, parse_dimacs
from hmknf.solver import SolveOutcome, SolveStats, brute_force_models, check_model, solve
from hmknf.syntax import KbDocument, ParseError, parse_kb, serialize_kb
from hmknf.unfounded import (
    SizeGuardError,
    UnfoundedReport,
    Verdict,
    atmost,
    greatest_unfounded_set,
    is_head_independent,
    is_unfounded_set,
    unfounded_approx,
    z_step,
)

__all__ = [name for name in dir() if not name.startswith("_")]
