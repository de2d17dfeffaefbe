"""Corner-guessing game on a square, in classical and quantized form.

The package solves the classical mixed-strategy game in closed form,
realises the non-distributive logic of the four corners as projector
families, evaluates the quantized payoff by two independent routes, and
finds Nash equilibria of the resulting two-angle surface via analytic
best responses.  Bundled reference tables can be re-audited with the
`orthogame reproduce` command.
"""

from .angles import signed_delta, wrap_half_turn, wrapped_distance
from .classical import (MixedStrategy, NashVerdict, PayoffMatrix,
                        ConditionalDecomposition, decompose_conditional,
                        payoff, solve_closed_form, verify_nash)
from .equilibrium import (BestResponse, EquilibriumReport, GameParams,
                          ReactionCurve, SearchResult, VerificationResult,
                          best_response_alice, best_response_bob,
                          find_equilibria, reaction_curves, verify_equilibrium)
from .lattice import (ATOMS, ELEMENTS, LatticeElement, LawReport, audit_laws,
                      join, leq, meet, ortho, valuate)
from .quantum import (AmplitudeSquares, ComparisonResult, LogicRepresentation,
                      PayoffOperator, ProjectorFamily, QuantumStrategy,
                      amplitudes, build_family, commutator,
                      compare_with_classical, expectation, payoff_closed_form,
                      payoff_grid, payoff_operator, payoff_terms,
                      projector_pair_commutator)

__version__ = "0.1.0"
