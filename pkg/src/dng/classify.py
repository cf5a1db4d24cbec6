"""Fast nim-number determination via an ordered checklist, plus family
formulas and Barnes' first-player criterion."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import TrivialGroupError
from .groups import (
    Group,
    closure_mask,
    element_order,
    is_abelian,
    is_cyclic,
)
from .lattice import (
    all_maximals_even,
    all_subgroups,
    even_maximals_cover,
    frattini,
)


class Rule(str, Enum):
    """Decision path through the checklist; names are a stable contract."""

    SIZE2 = "Size2"
    ODD_ORDER = "OddOrder"
    EVEN_FRATTINI = "EvenFrattini"
    ALL_MAXIMALS_EVEN = "AllMaximalsEven"
    EVEN_COVER = "EvenCover"
    FALLTHROUGH3 = "Fallthrough3"


@dataclass(frozen=True)
class Classification:
    nim: int
    rule: Rule
    outcome: str  # "N-position" or "P-position"

    def to_json_dict(self) -> dict:
        return {"nim": self.nim, "rule": self.rule.value, "outcome": self.outcome}


@dataclass(frozen=True)
class FamilyPrediction:
    family: str
    nim: int


def _outcome(nim: int) -> str:
    return "P-position" if nim == 0 else "N-position"


def classify(g: Group) -> Classification:
    """Apply the checklist clauses in order; first match wins.

    1. |G|=2 -> *1; 2. G odd -> *1; 3. Frattini even -> *0;
    4. all maximals even -> *0; 5. even maximals cover -> *0; 6. else *3.
    """
    if g.order < 2:
        raise TrivialGroupError("no avoidance game for the trivial group")
    if g.order == 2:
        nim, rule = 1, Rule.SIZE2
    elif g.order % 2 == 1:
        nim, rule = 1, Rule.ODD_ORDER
    elif frattini(g).is_even:
        nim, rule = 0, Rule.EVEN_FRATTINI
    elif all_maximals_even(g):
        nim, rule = 0, Rule.ALL_MAXIMALS_EVEN
    elif even_maximals_cover(g):
        nim, rule = 0, Rule.EVEN_COVER
    else:
        nim, rule = 3, Rule.FALLTHROUGH3
    return Classification(nim=nim, rule=rule, outcome=_outcome(nim))


def barnes_first_player_wins(g: Group) -> bool:
    """True iff some odd-order element generates g together with every involution.

    The quantifier over involutions is vacuous for groups without any.
    """
    if g.order < 2:
        raise TrivialGroupError("no avoidance game for the trivial group")
    involutions = [t for t in range(1, g.order) if g.mul(t, t) == 0]
    full = g.full_mask
    for x in range(g.order):
        if element_order(g, x) % 2 == 0:
            continue
        if all(closure_mask(g, 1 << x | 1 << t) == full for t in involutions):
            return True
    return False


def cyclic_formula(n: int) -> int:
    """Nim-number of the game on Z_n without building the group."""
    if n < 2:
        raise ValueError("cyclic formula needs n >= 2")
    if n % 2 == 1 or n == 2:
        return 1
    if n % 4 == 2:
        return 3
    return 0


def is_nilpotent(g: Group) -> bool:
    """True iff each prime divisor has a unique (hence normal) Sylow subgroup."""
    subgroup_orders = [s.order for s in all_subgroups(g).subgroups]
    n = g.order
    p = 2
    while n > 1:
        if n % p == 0:
            pe = 1
            while n % p == 0:
                n //= p
                pe *= p
            if subgroup_orders.count(pe) != 1:
                return False
        p += 1 if p == 2 else 2
    return True


def nilpotent_formula(g: Group) -> FamilyPrediction:
    """Closed-form nim-number for nontrivial nilpotent groups."""
    if g.order < 2:
        raise TrivialGroupError("formula needs a nontrivial group")
    if not is_nilpotent(g):
        raise ValueError(f"{g.name} is not nilpotent")
    if g.order == 2 or g.order % 2 == 1:
        nim = 1
    elif g.order % 4 == 2 and is_cyclic(g):
        # Z_2 x Z_{2k+1} is exactly the cyclic group of order 2 mod 4 (> 2)
        nim = 3
    else:
        nim = 0
    return FamilyPrediction(family="Nilpotent", nim=nim)


def gendih_formula(a: Group) -> FamilyPrediction:
    """Nim-number of the game on Dih(a), predicted from the abelian base."""
    if not is_abelian(a):
        raise ValueError(f"{a.name} is not abelian")
    nim = 3 if a.order % 2 == 1 and a.order > 1 and is_cyclic(a) else 0
    if a.order == 1:
        nim = 1  # Dih(Z1) has order 2
    return FamilyPrediction(family="GeneralizedDihedral", nim=nim)


def quaternion_formula() -> FamilyPrediction:
    """Every dicyclic (generalized quaternion) group plays to *0."""
    return FamilyPrediction(family="GeneralizedQuaternion", nim=0)


def real_element_disjunction(g: Group, x: int) -> bool:
    """For a real odd-order element x of a group of order > 2: x lies in a
    proper even subgroup, or g is the dihedral extension of <x>.

    The second branch is detected structurally: |g| = 2*order(x) and some
    involution inverts x while generating g together with x.
    """
    if g.order <= 2:
        raise ValueError("needs |g| > 2")
    k = element_order(g, x)
    if k % 2 == 0:
        raise ValueError("x must have odd order")
    xinv = g.inv(x)
    if not any(g.conj(t, x) == xinv for t in range(g.order)):
        raise ValueError("x is not real")
    xb = 1 << x
    full = g.full_mask
    for s in all_subgroups(g).subgroups:
        if s.mask != full and s.order % 2 == 0 and s.contains_set(xb):
            return True
    if g.order == 2 * k:
        for u in range(1, g.order):
            if g.mul(u, u) == 0 and g.conj(u, x) == xinv:
                if closure_mask(g, xb | 1 << u) == full:
                    return True
    return False
