"""primeperm: construct, verify, enumerate, and exactly count prime-sum
permutations, i.e. orderings pi of {1..n} with k + pi(k) prime for all k."""

from .construct import (
    Block,
    NotAPermutationError,
    Permutation,
    construct_prime_sum_permutation,
    decompose_blocks,
    is_valid_solution,
)
from .count import (
    MethodCapError,
    PrimeAdjacency,
    SequenceRow,
    build_adjacency,
    count_solutions,
    count_solutions_dp,
    count_solutions_naive,
    count_solutions_ryser,
    enumerate_solutions,
    sequence_table,
)
from .primes import (
    BertrandViolationError,
    PrimeSieve,
    SieveCapError,
    SieveRangeError,
    build_sieve,
)

__version__ = "0.1.0"

__all__ = [
    "BertrandViolationError",
    "Block",
    "MethodCapError",
    "NotAPermutationError",
    "Permutation",
    "PrimeAdjacency",
    "PrimeSieve",
    "SequenceRow",
    "SieveCapError",
    "SieveRangeError",
    "build_adjacency",
    "build_sieve",
    "construct_prime_sum_permutation",
    "count_solutions",
    "count_solutions_dp",
    "count_solutions_naive",
    "count_solutions_ryser",
    "decompose_blocks",
    "enumerate_solutions",
    "is_valid_solution",
    "sequence_table",
]
