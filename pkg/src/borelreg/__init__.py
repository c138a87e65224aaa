"""Monomial ideals of Borel type and bounds on their regularity.

The package works with exponent-vector monomials in ``K[x_1, ..., x_n]`` and
offers:

* minimal generating sets, intersections, colons, truncations (``monomials``);
* stability, saturations, Borel-type tests, irreducible decomposition and
  associated primes (``structure``);
* regularity from Betti tables of upper Koszul complexes, with the degree
  shortcut for stable ideals and the truncation bound (``regularity``);
* exact reduced homology over Q and F_p (``homology``);
* ideal generators and verification suites (``harness``, ``suites``).
"""

from .errors import (BorelRegError, BudgetExceededError, DomainError, NotAChainError,
                     ParseError, RingMismatchError, UnitIdealError, UnitMonomialError,
                     ZeroIdealError, IndexOutOfRangeError)
from .monomials import (IdealStats, Monomial, MonomialIdeal, RingContext, colon_by_monomial,
                        contains, divides, equals, intersect, lcm, max_index,
                        maximal_ideal_power, minimalize, stats, truncate, variable)
from .structure import (AssociatedPrime, CharReport, IrreducibleComponent,
                        ass_totally_ordered, associated_primes, check_char_theorem,
                        irreducible_decomposition, is_borel_type, is_borel_type_exchange,
                        is_stable, saturate_prefix, saturate_variable)
from .homology import (ExactMatrix, FieldSpec, SimplicialComplex, boundary_matrix, rank,
                       reduced_homology_ranks)
from .regularity import (BettiTable, RegularityBound, betti_table, compute_regularity,
                         regularity, regularity_upper_bound, upper_koszul_complex)
from .harness import (enumerate_ideals, prefix_normalize, random_borel_type,
                      stable_closure)
from .io import format_ideal, parse_ideal
from .analysis import AnalysisReport, analyze

__version__ = "0.1.0"
