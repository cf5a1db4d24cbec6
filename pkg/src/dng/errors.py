"""Exception types shared across the package."""

from __future__ import annotations


class DngError(Exception):
    """Base class for all package-specific errors."""


class BudgetError(DngError):
    """A requested group exceeds the configured order budget."""


class NonAbelianError(DngError):
    """An operation requiring an abelian group got a non-abelian one."""


class NotNormalError(DngError):
    """Quotient requested by a subgroup that is not normal."""


class TrivialGroupError(DngError):
    """The avoidance game is undefined for the trivial group."""


class LatticeGuardError(DngError):
    """Subgroup enumeration aborted: the lattice exceeded the size guard."""


class GeneratorCapError(DngError):
    """min_generators exhausted its tuple-size cap without generating."""

    def __init__(self, cap: int):
        super().__init__(f"no generating tuple of size <= {cap} found")
        self.cap = cap


class GeneratingSetError(DngError):
    """A set that generates the whole group was used where a position is required."""


class SpecSyntaxError(DngError):
    """Group-expression parse failure, with byte offset and expected tokens."""

    def __init__(self, offset: int, expected: frozenset[str]):
        self.offset = offset
        self.expected = frozenset(expected)
        shown = ", ".join(sorted(self.expected))
        super().__init__(f"syntax error at offset {offset}: expected {shown}")


class OracleBudgetError(DngError):
    """Brute-force search would exceed the position-count budget."""


class SolverConsistencyError(DngError):
    """The mex calculus produced an inconsistent type triple (implementation bug)."""
