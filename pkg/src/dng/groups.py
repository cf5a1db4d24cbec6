"""Small finite groups represented by dense Cayley tables.

Elements are ids ``0..n-1`` with the identity fixed at id 0.  Subsets of a
group are passed around as int bitmasks (bit ``x`` set means element ``x``
is in the set), which keeps subgroup and position handling uniform across
the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    BudgetError,
    GeneratorCapError,
    NonAbelianError,
    NotNormalError,
)

#: Largest group order the constructors build by default.
ORDER_BUDGET = 720

#: Orders up to this bound get the O(n^3) associativity check at construction.
#: Quotients are always checked regardless of order.
ASSOC_CHECK_BOUND = 256


def mask_of(ids: Iterable[int]) -> int:
    """Bitmask with the given element ids set."""
    m = 0
    for x in ids:
        m |= 1 << x
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the element ids set in ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(eq=False)
class Group:
    """Finite group: ``table[a][b]`` is the id of a*b, identity at id 0."""

    order: int
    table: np.ndarray
    inverses: np.ndarray
    name: str
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, t: int, x: int) -> int:
        """Conjugate t*x*t^-1."""
        return int(self.table[self.table[t, x], self.inverses[t]])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Group({self.name!r}, order={self.order})"

    @classmethod
    def from_table(
        cls,
        table,
        name: str,
        *,
        check_associativity: bool | None = None,
    ) -> "Group":
        """Build and validate a group from a raw Cayley table.

        ``check_associativity=None`` runs the cubic check only for orders up
        to ``ASSOC_CHECK_BOUND``; pass True/False to force either way.
        """
        t = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        n = _validate_table(t, check_associativity)
        inverses = np.empty(n, dtype=np.int32)
        for x in range(n):
            inverses[x] = int(np.flatnonzero(t[x] == 0)[0])
        return cls(order=n, table=t, inverses=inverses, name=name)

    def to_json_dict(self) -> dict:
        """Versioned debug serialization; not a stability-guaranteed format."""
        return {
            "format": "dng-group-v1",
            "name": self.name,
            "order": self.order,
            "table": self.table.tolist(),
        }


def _validate_table(t: np.ndarray, check_associativity: bool | None) -> int:
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise ValueError("Cayley table must be a nonempty square matrix")
    n = t.shape[0]
    ids = np.arange(n, dtype=np.int32)
    if not (np.array_equal(t[0], ids) and np.array_equal(t[:, 0], ids)):
        raise ValueError("element 0 is not a two-sided identity")
    if not np.array_equal(np.sort(t, axis=1), np.broadcast_to(ids, t.shape)):
        raise ValueError("some row is not a permutation of 0..n-1")
    if not np.array_equal(np.sort(t, axis=0), np.broadcast_to(ids[:, None], t.shape)):
        raise ValueError("some column is not a permutation of 0..n-1")
    for x in range(n):
        if np.count_nonzero(t[x] == 0) != 1:
            raise ValueError(f"element {x} has no unique inverse")
    if check_associativity is None:
        check_associativity = n <= ASSOC_CHECK_BOUND
    if check_associativity:
        # (a*b)*c == a*(b*c), checked one row of a at a time to bound memory.
        for a in range(n):
            if not np.array_equal(t[t[a], :], t[a][t]):
                raise ValueError(f"associativity fails for a={a}")
    return n


def _check_budget(order: int, budget: int, what: str) -> None:
    if order > budget:
        raise BudgetError(f"{what} has order {order}, exceeding budget {budget}")


# ---------------------------------------------------------------------------
# Constructors


def make_cyclic(n: int, budget: int = ORDER_BUDGET) -> Group:
    """Cyclic group Z_n with table[a][b] = (a+b) mod n."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    _check_budget(n, budget, f"Z{n}")
    t = (np.arange(n)[:, None] + np.arange(n)) % n
    return Group.from_table(t, f"Z{n}", check_associativity=False)


def is_abelian(g: Group) -> bool:
    return bool(np.array_equal(g.table, g.table.T))


def make_generalized_dihedral(a: Group, budget: int = ORDER_BUDGET) -> Group:
    """Dih(A) = A extended by an inverting involution; order 2|A|.

    Ids 0..|A|-1 are the canonical copy of A; the reflecting coset follows.
    """
    if not is_abelian(a):
        raise NonAbelianError(f"Dih argument {a.name} is not abelian")
    m = a.order
    _check_budget(2 * m, budget, f"Dih({a.name})")
    ta = a.table
    tinv = ta[:, a.inverses]  # a_i * a_j^-1
    # element a_i * t^e; (a_i t^e1)(a_j t^e2) = a_i a_j^((-1)^e1) t^(e1 xor e2)
    t = np.block([[ta, ta + m], [tinv + m, tinv]])
    return Group.from_table(t, f"Dih({a.name})", check_associativity=False)


def make_dicyclic(n: int, budget: int = ORDER_BUDGET) -> Group:
    """Dicyclic (generalized quaternion) group of order 4n, n >= 2."""
    if n < 2:
        raise ValueError("dicyclic group needs n >= 2")
    _check_budget(4 * n, budget, f"Dic{n}")
    m = 2 * n  # order of <x>
    size = 4 * n
    t = np.empty((size, size), dtype=np.int32)
    # element x^i y^j with id j*m + i
    for i in range(m):
        for j in range(2):
            for k in range(m):
                for l in range(2):
                    if j == 0:
                        ei, ej = (i + k) % m, l
                    else:
                        ei, ej = (i - k) % m, 1 + l
                        if ej == 2:  # y^2 = x^n
                            ei, ej = (ei + n) % m, 0
                    t[j * m + i, l * m + k] = ej * m + ei
    return Group.from_table(t, f"Dic{n}", check_associativity=False)


def _perm_compose(p: tuple, q: tuple) -> tuple:
    return tuple(p[q[i]] for i in range(len(p)))


def _perm_parity(p: tuple) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def _perm_group(perms: list[tuple], name: str) -> Group:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    t = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            t[i, j] = index[_perm_compose(p, q)]
    return Group.from_table(t, name, check_associativity=False)


def make_symmetric(n: int, budget: int = ORDER_BUDGET) -> Group:
    """Symmetric group on n letters via permutation composition."""
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    _check_budget(math.factorial(n), budget, f"S{n}")
    perms = list(permutations(range(n)))  # identity comes first
    return _perm_group(perms, f"S{n}")


def make_alternating(n: int, budget: int = ORDER_BUDGET) -> Group:
    """Alternating group on n letters (even permutations)."""
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    order = max(math.factorial(n) // 2, 1)
    _check_budget(order, budget, f"A{n}")
    perms = [p for p in permutations(range(n)) if _perm_parity(p) == 0]
    return _perm_group(perms, f"A{n}")


def direct_product(g: Group, h: Group, budget: int = ORDER_BUDGET) -> Group:
    """Component-wise product on pairs, flattened to ids (a, b) -> a*|h|+b."""
    n = g.order * h.order
    _check_budget(n, budget, f"{g.name} x {h.name}")
    t = (g.table[:, None, :, None] * h.order + h.table[None, :, None, :]).reshape(n, n)
    return Group.from_table(t, f"{g.name} x {h.name}", check_associativity=False)


def _subgroup_mask(arg) -> int:
    mask = getattr(arg, "mask", arg)
    if not isinstance(mask, int):
        raise TypeError("expected a Subgroup or an int bitmask")
    return mask


def is_normal(g: Group, sub) -> bool:
    """True iff x*N*x^-1 = N for every x in g."""
    mask = _subgroup_mask(sub)
    members = list(bits(mask))
    for x in range(g.order):
        for m in members:
            if not mask >> g.conj(x, m) & 1:
                return False
    return True


def coset_ids(g: Group, sub) -> list[int]:
    """Map each element to the id of its left coset; identity coset is 0."""
    mask = _subgroup_mask(sub)
    members = list(bits(mask))
    cos = [-1] * g.order
    nxt = 0
    for x in range(g.order):
        if cos[x] >= 0:
            continue
        for m in members:
            cos[g.mul(x, m)] = nxt
        nxt += 1
    return cos


def quotient(g: Group, sub) -> Group:
    """Quotient group on cosets of a normal subgroup."""
    mask = _subgroup_mask(sub)
    if not mask & 1 or closure_mask(g, mask) != mask:
        raise ValueError("quotient divisor is not a subgroup")
    if not is_normal(g, mask):
        raise NotNormalError("quotient divisor is not normal")
    cos = coset_ids(g, mask)
    k = mask.bit_count()
    q = g.order // k
    reps = [-1] * q
    for x in range(g.order - 1, -1, -1):
        reps[cos[x]] = x
    t = np.empty((q, q), dtype=np.int32)
    for i in range(q):
        for j in range(q):
            t[i, j] = cos[g.mul(reps[i], reps[j])]
    return Group.from_table(t, f"{g.name}/N{k}", check_associativity=True)


# ---------------------------------------------------------------------------
# Queries


def element_order(g: Group, x: int) -> int:
    """Least k >= 1 with x^k = identity."""
    k = 1
    y = x
    while y != 0:
        y = g.mul(y, x)
        k += 1
    return k


def element_orders(g: Group) -> list[int]:
    return sorted(element_order(g, x) for x in range(g.order))


def _close(g: Group, member_mask: int, frontier_mask: int) -> int:
    """Close ``member_mask`` under products, multiplying only against the
    frontier (products within member_mask \\ frontier are assumed known)."""
    n = g.order
    member = np.zeros(n, dtype=bool)
    member[list(bits(member_mask))] = True
    frontier = np.fromiter(bits(frontier_mask), dtype=np.int64)
    while frontier.size:
        elems = np.flatnonzero(member)
        prods = np.concatenate(
            (g.table[np.ix_(frontier, elems)].ravel(), g.table[np.ix_(elems, frontier)].ravel())
        )
        grown = member.copy()
        grown[prods] = True
        if int(grown.sum()) > n // 2:
            # a subgroup of order > n/2 can only be the whole group
            return g.full_mask
        frontier = np.flatnonzero(grown & ~member)
        member = grown
    return mask_of(int(x) for x in np.flatnonzero(member))


def closure_mask(g: Group, mask: int) -> int:
    """Bitmask of the subgroup generated by the elements in ``mask``."""
    cache = g._cache.setdefault("closure", {})
    hit = cache.get(mask)
    if hit is not None:
        return hit
    result = _close(g, mask | 1, mask | 1)
    cache[mask] = result
    return result


def join_mask(g: Group, closed: int, extra: int) -> int:
    """Subgroup generated by an already-closed subgroup plus extra elements."""
    fresh = extra & ~closed
    if fresh == 0:
        return closed
    return _close(g, closed | fresh, fresh)


def generated_by(g: Group, *ids: int) -> int:
    return closure_mask(g, mask_of(ids))


def is_cyclic(g: Group) -> bool:
    """True iff some element has order |g|."""
    return any(element_order(g, x) == g.order for x in range(g.order))


def min_generators(g: Group, cap: int = 3) -> int:
    """Least k <= cap such that some k-subset generates g.

    Raises GeneratorCapError when every tuple up to size ``cap`` fails, which
    is distinguishable from any returned value.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if g.order == 1:
        return 0
    full = g.full_mask
    n = g.order

    def extend(closed: int, start: int, remaining: int) -> bool:
        for x in range(start, n):
            if closed >> x & 1:
                continue  # x adds nothing: same closure as the shorter prefix
            c = closure_mask(g, closed | 1 << x)
            if c == full:
                return True
            if remaining > 1 and extend(c, x + 1, remaining - 1):
                return True
        return False

    for k in range(1, cap + 1):
        if extend(1, 1, k):
            return k
    raise GeneratorCapError(cap)
