"""Exact counting and enumeration of prime-sum permutations.

Valid permutations are exactly the permutation matrices dominated by the
0/1 matrix M with M[i][j] = 1 iff i + j is prime, so the solution count
is the permanent of M. Three independent routes compute it: exhaustive
search over permutations (the desk-scale oracle), subset dynamic
programming, and Ryser inclusion-exclusion. Counts are plain Python
ints: they outgrow 64 bits quickly, and n! already does at n = 21.
"""

import itertools
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass

from .construct import Permutation
from .primes import PrimeSieve, SieveRangeError, build_sieve

DEFAULT_NAIVE_CAP = 10
DEFAULT_DP_CAP = 26
DEFAULT_RYSER_CAP = 24
# The auto selector hands anything above this to the DP method.
AUTO_NAIVE_MAX = 8

METHODS = ("naive", "dp", "ryser", "auto")


class MethodCapError(ValueError):
    """n exceeds the size cap of the selected counting method."""


@dataclass(frozen=True)
class PrimeAdjacency:
    """Bitset rows of the prime-sum adjacency matrix.

    Bit j-1 of rows[i-1] is set iff i + j is prime, i.e. row i is the set
    of columns position i may map to. The matrix is symmetric because
    i + j = j + i.
    """

    n: int
    rows: tuple[int, ...]

    def allows(self, i: int, j: int) -> bool:
        """True iff position i may map to j (both 1-indexed)."""
        return (self.rows[i - 1] >> (j - 1)) & 1 == 1


def _require_cover(n: int, sieve: PrimeSieve) -> None:
    if sieve.limit < 2 * n:
        raise SieveRangeError(f"sieve limit {sieve.limit} is below 2n = {2 * n}")


def build_adjacency(n: int, sieve: PrimeSieve) -> PrimeAdjacency:
    """Build the n x n prime-sum adjacency rows."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require_cover(n, sieve)
    rows = []
    for i in range(1, n + 1):
        row = 0
        for j in range(1, n + 1):
            if sieve.is_prime(i + j):
                row |= 1 << (j - 1)
        rows.append(row)
    return PrimeAdjacency(n, tuple(rows))


def _count_backtracking(rows: tuple[int, ...], n: int) -> int:
    def go(pos: int, used: int) -> int:
        if pos == n:
            return 1
        total = 0
        avail = rows[pos] & ~used
        while avail:
            bit = avail & -avail
            total += go(pos + 1, used | bit)
            avail ^= bit
        return total

    return go(0, 0)


def count_solutions_naive(
    n: int,
    sieve: PrimeSieve,
    *,
    strict_paper: bool = False,
    cap: int = DEFAULT_NAIVE_CAP,
) -> int:
    """Count solutions by exhaustive search; the ground-truth oracle.

    The default walks a pruned backtracking tree over legal images. With
    strict_paper=True it literally tests all n! permutations instead,
    which is only tolerable up to n = 10 and is hard-capped there.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    if strict_paper:
        if n > DEFAULT_NAIVE_CAP:
            raise MethodCapError(
                f"strict naive counting is capped at n = {DEFAULT_NAIVE_CAP}, got {n}"
            )
        _require_cover(n, sieve)
        positions = range(1, n + 1)
        return sum(
            1
            for image in itertools.permutations(positions)
            if all(sieve.is_prime(k + image[k - 1]) for k in positions)
        )
    if n > cap:
        raise MethodCapError(f"naive counting is capped at n = {cap}, got {n}")
    adjacency = build_adjacency(n, sieve)
    return _count_backtracking(adjacency.rows, n)


def count_solutions_dp(n: int, sieve: PrimeSieve, *, cap: int = DEFAULT_DP_CAP) -> int:
    """Count solutions as the permanent of the adjacency matrix via
    subset dynamic programming.

    ways(S) = number of ways to assign positions 1..|S| onto exactly the
    column set S; ways(S) = sum over allowed j in S of ways(S - {j}).
    Subsets are processed in layers of equal population count so only two
    layers are resident at once (peak memory is the central binomial
    coefficient, not a 2^n table).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise MethodCapError(f"dp counting is capped at n = {cap}, got {n}")
    if n == 0:
        return 1
    rows = build_adjacency(n, sieve).rows
    layer = {0: 1}
    for r in range(n):
        row = rows[r]
        nxt: dict[int, int] = defaultdict(int)
        for mask, ways in layer.items():
            avail = row & ~mask
            while avail:
                bit = avail & -avail
                nxt[mask | bit] += ways
                avail ^= bit
        layer = nxt
    return layer.get((1 << n) - 1, 0)


def _ryser_partial(rows: tuple[int, ...], n: int, start: int, stop: int) -> int:
    """Signed Ryser contribution of subset indices t in [start, stop).

    The subset visited at step t is gray(t) = t ^ (t >> 1); consecutive
    steps differ in the single bit (t & -t), so the n running row sums
    update by +-1 each step and the product term costs O(n).
    """
    state = (start - 1) ^ ((start - 1) >> 1)
    rowsums = [0] * n
    mask = state
    while mask:
        bit = mask & -mask
        j = bit.bit_length() - 1
        for i in range(n):
            if (rows[i] >> j) & 1:
                rowsums[i] += 1
        mask ^= bit
    populated = state.bit_count()

    acc = 0
    for t in range(start, stop):
        j = (t & -t).bit_length() - 1
        state ^= 1 << j
        if (state >> j) & 1:
            populated += 1
            for i in range(n):
                if (rows[i] >> j) & 1:
                    rowsums[i] += 1
        else:
            populated -= 1
            for i in range(n):
                if (rows[i] >> j) & 1:
                    rowsums[i] -= 1
        term = 1
        for v in rowsums:
            if not v:
                term = 0
                break
            term *= v
        if term:
            acc += term if ((n - populated) & 1) == 0 else -term
    return acc


def count_solutions_ryser(
    n: int,
    sieve: PrimeSieve,
    *,
    cap: int = DEFAULT_RYSER_CAP,
    parts: int = 1,
) -> int:
    """Count solutions via Ryser's inclusion-exclusion permanent formula:

        per(M) = sum over column subsets S of (-1)^(n-|S|) prod_i |row_i & S|

    traversed in Gray-code order. The 2^n - 1 nonempty subsets split into
    ``parts`` contiguous chunks whose partial sums are independent pure
    values combined by exact integer addition, so the result cannot
    depend on the partitioning (chunks can run on parallel workers).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise MethodCapError(f"ryser counting is capped at n = {cap}, got {n}")
    if parts < 1:
        raise ValueError(f"parts must be positive, got {parts}")
    if n == 0:
        return 1
    rows = build_adjacency(n, sieve).rows
    total_steps = (1 << n) - 1
    parts = min(parts, total_steps)
    chunk = total_steps // parts
    bounds = [1 + i * chunk for i in range(parts)] + [total_steps + 1]
    return sum(
        _ryser_partial(rows, n, bounds[i], bounds[i + 1]) for i in range(parts)
    )


def count_solutions(
    n: int,
    sieve: PrimeSieve,
    method: str = "auto",
    *,
    strict_paper: bool = False,
    naive_cap: int = DEFAULT_NAIVE_CAP,
    dp_cap: int = DEFAULT_DP_CAP,
    ryser_cap: int = DEFAULT_RYSER_CAP,
) -> int:
    """Dispatch to a counting method.

    "auto" picks naive backtracking for small n and the DP beyond; Ryser
    runs only when asked for by name (it exists as an independent
    cross-check, the DP is strictly faster here).
    """
    if method not in METHODS:
        raise ValueError(f"unknown counting method {method!r}; pick from {METHODS}")
    if method == "auto":
        method = "naive" if n <= AUTO_NAIVE_MAX else "dp"
    if method == "naive":
        return count_solutions_naive(n, sieve, strict_paper=strict_paper, cap=naive_cap)
    if method == "dp":
        return count_solutions_dp(n, sieve, cap=dp_cap)
    return count_solutions_ryser(n, sieve, cap=ryser_cap)


def enumerate_solutions(
    n: int,
    sieve: PrimeSieve,
    limit: int | None = None,
) -> Iterator[Permutation]:
    """Yield every valid permutation exactly once, in lexicographic order
    of one-line notation, stopping after ``limit`` items if given.

    Backtracking restricted to adjacency rows, so the walk only ever
    visits extendable prefixes of valid solutions.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if limit is not None and limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    rows = build_adjacency(n, sieve).rows
    image = [0] * n

    def extend(pos: int, used: int) -> Iterator[Permutation]:
        if pos == n:
            yield Permutation(tuple(image))
            return
        avail = rows[pos] & ~used
        while avail:
            # lowest set bit first keeps the stream lexicographic
            bit = avail & -avail
            image[pos] = bit.bit_length()
            yield from extend(pos + 1, used | bit)
            avail ^= bit

    stream = extend(0, 0)
    return stream if limit is None else itertools.islice(stream, limit)


@dataclass(frozen=True)
class SequenceRow:
    """One row of the solution-count sequence table."""

    n: int
    count: int
    primes_below_2n: int

    def as_json_dict(self) -> dict:
        # count rides as a string: JSON consumers commonly lose precision
        # past 53 bits
        return {
            "n": self.n,
            "count": str(self.count),
            "primes_below_2n": self.primes_below_2n,
        }


def sequence_table(
    max_n: int,
    method: str = "auto",
    *,
    strict_paper: bool = False,
    naive_cap: int = DEFAULT_NAIVE_CAP,
    dp_cap: int = DEFAULT_DP_CAP,
    ryser_cap: int = DEFAULT_RYSER_CAP,
) -> list[SequenceRow]:
    """Solution counts and primes-below-2n for n = 1..max_n.

    max_n must sit within the selected method's cap; that is checked up
    front so no partial table is computed before failing.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    worst = {"naive": naive_cap, "dp": dp_cap, "ryser": ryser_cap, "auto": dp_cap}
    if method in worst and max_n > worst[method]:
        raise MethodCapError(
            f"{method} counting is capped at n = {worst[method]}, got max_n = {max_n}"
        )
    sieve = build_sieve(2 * max_n)
    return [
        SequenceRow(
            n,
            count_solutions(
                n,
                sieve,
                method,
                strict_paper=strict_paper,
                naive_cap=naive_cap,
                dp_cap=dp_cap,
                ryser_cap=ryser_cap,
            ),
            sieve.count_primes_below(2 * n),
        )
        for n in range(1, max_n + 1)
    ]
