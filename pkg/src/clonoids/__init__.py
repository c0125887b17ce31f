"""Clones and clonoids of Boolean functions at bounded arity.

Value types and elementary operations live in ``bf``; the clone
registry in ``clones``; generation, membership and stability in
``engine``; the explicit function families and witness constructions in
``families``; disjointness hypergraphs and minor tests in
``hypergraphs``; the named verification checks in ``verify``.
"""

from .bf import (AND, ID, NOT, OR, XOR, ArityMismatchError, BitTuple,
                 BooleanFunction, DEFAULT_ARITY_CAP, DomainError, ParseError,
                 alt_number, char_tuple, compose, const, distance, dual,
                 evaluate, inner_negate, is_minorant, neg_proj, negate, parse,
                 proj, to_literal, weight)
from .clones import (INF, REGISTRY, BudgetError, CloneDescriptor, arity_part,
                     classify, contains, dual_clone, is_subclone, list_clones,
                     registry_self_test)
from .engine import (FunctionSet, GenerationRequest, StabilityViolation,
                     estimate_cost, generate_clonoid, is_clonoid_member,
                     is_stable, left_close, right_compose, transform_set)
from .families import (FamilySpec, alpha_beta, build_gs, build_theta,
                       pippenger_f, pippenger_q, theta_of, witness_all,
                       witness_m, witness_mneg, witness_ox)
from .hypergraphs import (Hypergraph, disjointness_hypergraph,
                          exists_homomorphism, to_dot, u2_uinf_generation_equality,
                          uk_minor, uk_minor_brute)
from .reports import CheckReport
from .verify import CHECK_IDS, SuiteConfig, SuiteReport, run_all, run_check

__version__ = "0.1.0"
