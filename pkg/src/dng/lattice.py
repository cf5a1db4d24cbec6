"""Subgroup lattice, maximal subgroups, Frattini subgroup, intersection poset.

Enumeration seeds with all cyclic subgroups and closes under join until a
fixpoint; every subgroup is a join of cyclic subgroups, so this reaches the
whole lattice.  Maximal subgroups then fall out by an inclusion scan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GeneratingSetError, LatticeGuardError, TrivialGroupError
from .groups import Group, bits, closure_mask, is_normal, join_mask, mask_of

#: Abort enumeration beyond this many subgroups (pathological 2-groups).
SUBGROUP_GUARD = 20000


@dataclass(frozen=True, order=True)
class Subgroup:
    """Bit-set of element ids closed under the group operation."""

    mask: int

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def is_even(self) -> bool:
        return self.order % 2 == 0

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def members(self) -> list[int]:
        return list(bits(self.mask))

    def contains_set(self, mask: int) -> bool:
        return mask & ~self.mask == 0


@dataclass
class Lattice:
    """All subgroups of a group, deduplicated, sorted by (order, mask)."""

    group: Group
    subgroups: tuple[Subgroup, ...]

    def __len__(self) -> int:
        return len(self.subgroups)


@dataclass
class IntersectionPoset:
    """All intersections of nonempty sets of maximal subgroups."""

    members: tuple[Subgroup, ...]  # sorted by (order, mask)
    bottom: Subgroup  # the Frattini subgroup


def _sorted_subgroups(masks) -> tuple[Subgroup, ...]:
    return tuple(
        Subgroup(m) for m in sorted(masks, key=lambda m: (m.bit_count(), m))
    )


def all_subgroups(g: Group, guard: int = SUBGROUP_GUARD) -> Lattice:
    """Enumerate every subgroup of g by cyclic-seed + join-closure."""
    cached = g._cache.get("lattice")
    if cached is not None:
        return cached
    full = g.full_mask
    cyclics = sorted({closure_mask(g, 1 << x) for x in range(g.order)})
    found: set[int] = {1, full}
    found.update(cyclics)
    frontier = list(found)
    while frontier:
        fresh: list[int] = []
        for h in frontier:
            if h == full:
                continue
            for c in cyclics:
                if c & ~h == 0:
                    continue
                j = join_mask(g, h, c)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
                    if len(found) > guard:
                        raise LatticeGuardError(
                            f"more than {guard} subgroups in {g.name}"
                        )
        frontier = fresh
    lat = Lattice(group=g, subgroups=_sorted_subgroups(found))
    g._cache["lattice"] = lat
    return lat


def maximal_subgroups(g: Group) -> list[Subgroup]:
    """Proper subgroups maximal under inclusion among proper subgroups."""
    if g.order < 2:
        raise TrivialGroupError("the trivial group has no maximal subgroups")
    cached = g._cache.get("maximals")
    if cached is not None:
        return list(cached)
    full = g.full_mask
    proper = [s for s in all_subgroups(g).subgroups if s.mask != full]
    maximal = [
        s
        for s in proper
        if not any(t.mask != s.mask and s.mask & ~t.mask == 0 for t in proper)
    ]
    g._cache["maximals"] = tuple(maximal)
    return maximal


def frattini(g: Group) -> Subgroup:
    """Intersection of all maximal subgroups."""
    inter = g.full_mask
    for m in maximal_subgroups(g):
        inter &= m.mask
    return Subgroup(inter)


def intersection_subgroups(g: Group) -> IntersectionPoset:
    """Close the maximal subgroups under pairwise intersection (fixpoint)."""
    cached = g._cache.get("iposet")
    if cached is not None:
        return cached
    maximals = [m.mask for m in maximal_subgroups(g)]
    found: set[int] = set(maximals)
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in found.copy():
                c = a & b
                if c not in found:
                    found.add(c)
                    fresh.append(c)
        frontier = fresh
    poset = IntersectionPoset(members=_sorted_subgroups(found), bottom=frattini(g))
    g._cache["iposet"] = poset
    return poset


def smallest_intersection_containing(g: Group, s) -> Subgroup:
    """Intersection of all maximal subgroups containing the set ``s``.

    ``s`` may be an iterable of element ids or an int bitmask.  This is the
    unique minimal intersection subgroup containing ``s``; raises
    GeneratingSetError when no maximal subgroup contains ``s``.
    """
    mask = s if isinstance(s, int) else mask_of(s)
    inter = None
    for m in maximal_subgroups(g):
        if m.contains_set(mask):
            inter = m.mask if inter is None else inter & m.mask
    if inter is None:
        raise GeneratingSetError("the set generates the whole group")
    return Subgroup(inter)


def union_of_maximals(g: Group) -> int:
    u = 0
    for m in maximal_subgroups(g):
        u |= m.mask
    return u


def even_maximals_cover(g: Group) -> bool:
    """True iff the union of even-order maximal subgroups is all of g."""
    u = 0
    for m in maximal_subgroups(g):
        if m.is_even:
            u |= m.mask
    return u == g.full_mask


def all_maximals_even(g: Group) -> bool:
    return all(m.is_even for m in maximal_subgroups(g))


def all_maximals_odd(g: Group) -> bool:
    return all(not m.is_even for m in maximal_subgroups(g))


def largest_odd_normal_in_frattini(g: Group) -> Subgroup:
    """Largest odd-order normal subgroup contained in the Frattini subgroup."""
    phi = frattini(g).mask
    best = 1
    for s in all_subgroups(g).subgroups:
        if s.mask & ~phi:
            continue
        if s.order % 2 == 0 or s.order <= best.bit_count():
            continue
        if is_normal(g, s.mask):
            best = s.mask
    return Subgroup(best)


def lattice_dot(g: Group) -> str:
    """DOT rendering of the subgroup lattice.

    Nodes are labeled by subgroup order; inclusion edges are transitively
    reduced.  Output is deterministic for a fixed group.
    """
    subs = all_subgroups(g).subgroups
    lines = ["digraph lattice {", "  // format: dng-lattice-v1"]
    for i, s in enumerate(subs):
        lines.append(f'  n{i} [label="{s.order}"];')
    n = len(subs)
    below = [
        [j for j in range(n) if j != i and subs[j].mask & ~subs[i].mask == 0]
        for i in range(n)
    ]
    for i in range(n):
        for j in below[i]:
            # keep j -> i only when no subgroup sits strictly between
            if not any(j in below[k] for k in below[i] if k != j):
                lines.append(f"  n{j} -> n{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
