"""Brute-force verification by memoized mex recursion over literal positions.

The memo is keyed on the literal selected-set bitmask, never on structure
classes, so the oracle stays independent of the theory it cross-checks.  A
move is legal when the enlarged set still lies inside some maximal subgroup,
which is exactly the non-generating condition for a finite group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GeneratingSetError, OracleBudgetError, TrivialGroupError
from .groups import Group, bits
from .lattice import maximal_subgroups

#: Default memo-size cap; larger games fall back to solver-only verification.
DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class Position:
    """A non-generating subset of the group, as a bitmask of element ids."""

    chosen: int

    @property
    def parity(self) -> int:
        return self.chosen.bit_count() % 2


@dataclass
class OracleResult:
    nim: int
    memo_size: int
    effort: int


def mex(values) -> int:
    """Least nonnegative integer absent from ``values``."""
    s = set(values)
    m = 0
    while m in s:
        m += 1
    return m


class _Search:
    def __init__(self, g: Group, budget: int):
        if g.order < 2:
            raise TrivialGroupError("no avoidance game for the trivial group")
        self.maximals = [m.mask for m in maximal_subgroups(g)]
        self.budget = budget
        self.memo: dict[int, int] = {}
        self.effort = 0

    def legal(self, p: int) -> bool:
        return any(p & ~m == 0 for m in self.maximals)

    def nim(self, p: int) -> int:
        hit = self.memo.get(p)
        if hit is not None:
            return hit
        if len(self.memo) >= self.budget:
            raise OracleBudgetError(f"memo would exceed {self.budget} positions")
        # moves stay inside a maximal subgroup already containing p, so the
        # legal additions are the uncovered remainder of their union
        cover = 0
        for m in self.maximals:
            if p & ~m == 0:
                cover |= m
        values = set()
        for x in bits(cover & ~p):
            self.effort += 1
            values.add(self.nim(p | 1 << x))
        result = mex(values)
        self.memo[p] = result
        return result


def brute_nim(g: Group, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Nim-number of the starting position by depth-first mex recursion."""
    search = _Search(g, budget)
    nim = search.nim(0)
    return OracleResult(nim=nim, memo_size=len(search.memo), effort=search.effort)


def brute_nim_table(g: Group, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Nim-numbers of every position, keyed by bitmask.

    All non-generating subsets are reachable from the empty set by adding
    elements one at a time, so the memo after solving the start is complete.
    """
    search = _Search(g, budget)
    search.nim(0)
    return search.memo


def brute_nim_position(g: Group, p, budget: int = DEFAULT_BUDGET) -> int:
    """Nim-number of an arbitrary position (bitmask or Position)."""
    mask = p.chosen if isinstance(p, Position) else p
    search = _Search(g, budget)
    if not search.legal(mask):
        raise GeneratingSetError("the set generates the whole group")
    return search.nim(mask)


def strategy_free_outcome_check(g: Group, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every maximal line of play from the empty set has one winner.

    Only defined when all maximal subgroups share one parity.  A line ending
    at a terminal position of size k awards the win to the first player when
    k is odd and to the second player when k is even.
    """
    maximals = [m.mask for m in maximal_subgroups(g)]
    parities = {m.bit_count() % 2 for m in maximals}
    if len(parities) != 1:
        raise ValueError("maximal subgroups have mixed parities")
    memo: dict[int, frozenset[int]] = {}

    def winners(p: int) -> frozenset[int]:
        hit = memo.get(p)
        if hit is not None:
            return hit
        if len(memo) >= budget:
            raise OracleBudgetError(f"memo would exceed {budget} positions")
        cover = 0
        for m in maximals:
            if p & ~m == 0:
                cover |= m
        moves = cover & ~p
        if moves == 0:
            result = frozenset({p.bit_count() % 2})
        else:
            acc: set[int] = set()
            for x in bits(moves):
                acc |= winners(p | 1 << x)
            result = frozenset(acc)
        memo[p] = result
        return result

    return len(winners(0)) == 1
