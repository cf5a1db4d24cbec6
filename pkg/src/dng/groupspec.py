"""Group-expression DSL: parsing, printing, and evaluation.

Grammar (whitespace-insensitive, case-sensitive)::

    spec := atom ("x" atom)*
    atom := "Z"int | "D"int | "Dic"int | "S"int | "A"int
          | "Dih(" spec ")" | "(" spec ")"

``D n`` denotes the dihedral group of order 2n, i.e. Dih(Z_n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import groups
from .errors import BudgetError, SpecSyntaxError
from .groups import Group, ORDER_BUDGET


class GroupSpec:
    """Abstract syntax tree node of a group expression."""

    __slots__ = ()


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    n: int


@dataclass(frozen=True)
class Dihedral(GroupSpec):
    n: int


@dataclass(frozen=True)
class Dicyclic(GroupSpec):
    n: int


@dataclass(frozen=True)
class Symmetric(GroupSpec):
    n: int


@dataclass(frozen=True)
class Alternating(GroupSpec):
    n: int


@dataclass(frozen=True)
class GeneralizedDihedralOf(GroupSpec):
    inner: GroupSpec


@dataclass(frozen=True)
class DirectProduct(GroupSpec):
    left: GroupSpec
    right: GroupSpec


_ATOM_EXPECTED = frozenset({'"Z"', '"D"', '"Dic"', '"S"', '"A"', '"Dih("', '"("'})


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _fail(self, expected: frozenset[str]):
        raise SpecSyntaxError(self.pos, expected)

    def _int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self._fail(frozenset({"integer"}))
        return int(self.text[start : self.pos])

    def _lit(self, s: str) -> bool:
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def atom(self) -> GroupSpec:
        self._ws()
        if self._lit("Dih("):
            inner = self.spec()
            self._ws()
            if not self._lit(")"):
                self._fail(frozenset({'")"', '"x"'}))
            return GeneralizedDihedralOf(inner)
        if self._lit("Dic"):
            return Dicyclic(self._int())
        if self._lit("D"):
            return Dihedral(self._int())
        if self._lit("Z"):
            return Cyclic(self._int())
        if self._lit("S"):
            return Symmetric(self._int())
        if self._lit("A"):
            return Alternating(self._int())
        if self._lit("("):
            inner = self.spec()
            self._ws()
            if not self._lit(")"):
                self._fail(frozenset({'")"', '"x"'}))
            return inner
        self._fail(_ATOM_EXPECTED)

    def spec(self) -> GroupSpec:
        node = self.atom()
        while True:
            self._ws()
            if self._lit("x"):
                node = DirectProduct(node, self.atom())
            else:
                return node


def parse_spec(text: str) -> GroupSpec:
    """Parse a group expression; errors carry offset and expected tokens."""
    p = _Parser(text)
    node = p.spec()
    p._ws()
    if p.pos != len(text):
        p._fail(frozenset({'"x"', "end of input"}))
    return node


def print_spec(spec: GroupSpec) -> str:
    """Render an AST back to DSL text; parse(print(ast)) == ast."""
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.n}"
    if isinstance(spec, Dicyclic):
        return f"Dic{spec.n}"
    if isinstance(spec, Symmetric):
        return f"S{spec.n}"
    if isinstance(spec, Alternating):
        return f"A{spec.n}"
    if isinstance(spec, GeneralizedDihedralOf):
        return f"Dih({print_spec(spec.inner)})"
    if isinstance(spec, DirectProduct):
        right = print_spec(spec.right)
        if isinstance(spec.right, DirectProduct):
            right = f"({right})"
        return f"{print_spec(spec.left)} x {right}"
    raise TypeError(f"not a GroupSpec: {spec!r}")


def spec_order(spec: GroupSpec) -> int:
    """Order of the group a spec evaluates to, without building it."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Dicyclic):
        return 4 * spec.n
    if isinstance(spec, Symmetric):
        return math.factorial(spec.n)
    if isinstance(spec, Alternating):
        return max(math.factorial(spec.n) // 2, 1)
    if isinstance(spec, GeneralizedDihedralOf):
        return 2 * spec_order(spec.inner)
    if isinstance(spec, DirectProduct):
        return spec_order(spec.left) * spec_order(spec.right)
    raise TypeError(f"not a GroupSpec: {spec!r}")


def build(spec: GroupSpec, budget: int = ORDER_BUDGET) -> Group:
    """Evaluate a spec to a Group, enforcing the order budget up front."""
    order = spec_order(spec)
    if order > budget:
        raise BudgetError(
            f"{print_spec(spec)} has order {order}, exceeding budget {budget}"
        )
    g = _build(spec, budget)
    g.name = print_spec(spec)
    return g


def _build(spec: GroupSpec, budget: int) -> Group:
    if isinstance(spec, Cyclic):
        return groups.make_cyclic(spec.n, budget)
    if isinstance(spec, Dihedral):
        return groups.make_generalized_dihedral(groups.make_cyclic(spec.n, budget), budget)
    if isinstance(spec, Dicyclic):
        return groups.make_dicyclic(spec.n, budget)
    if isinstance(spec, Symmetric):
        return groups.make_symmetric(spec.n, budget)
    if isinstance(spec, Alternating):
        return groups.make_alternating(spec.n, budget)
    if isinstance(spec, GeneralizedDihedralOf):
        return groups.make_generalized_dihedral(_build(spec.inner, budget), budget)
    if isinstance(spec, DirectProduct):
        return groups.direct_product(_build(spec.left, budget), _build(spec.right, budget), budget)
    raise TypeError(f"not a GroupSpec: {spec!r}")
