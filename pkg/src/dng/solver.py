"""Structure digraph over intersection subgroups and the mex type calculus.

A node is an intersection subgroup I; its structure class holds the game
positions whose smallest enclosing intersection subgroup is I.  Within a
class, positions of equal parity share a nim-number, so a class is fully
described by a type triple (parity of I, nim of even positions, nim of odd
positions).  Types are solved bottom-up:

* positions of the same parity ``p`` as I (including I itself) can only move
  into option classes, landing on opposite-parity positions there:
  ``nim_p = mex{comp(t, 1-p)}`` over option types ``t``;
* opposite-parity positions can additionally move within the class:
  ``nim_{1-p} = mex({nim_p} ∪ {comp(t, p)})``.

``comp(t, q)`` is the nim-number of parity-``q`` positions of a class of
type ``t``.  A consistency identity cross-checks every node.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Union

from .errors import SolverConsistencyError, TrivialGroupError
from .groups import Group, bits
from .lattice import Subgroup, intersection_subgroups, maximal_subgroups
from .oracle import mex


@dataclass(frozen=True, order=True)
class TypeTriple:
    """(parity of I, nim of even positions, nim of odd positions)."""

    parity: int
    nim_even: int
    nim_odd: int

    def component(self, parity: int) -> int:
        """Nim-number of the positions of the given parity (comp(t, q))."""
        return self.nim_odd if parity else self.nim_even

    def __str__(self) -> str:
        return f"({self.parity},{self.nim_even},{self.nim_odd})"


#: The only type triples a structure class can take.
SPECTRUM = frozenset(
    {TypeTriple(0, 0, 1), TypeTriple(1, 0, 1), TypeTriple(1, 1, 0), TypeTriple(1, 3, 2)}
)


@dataclass
class StructureDigraph:
    """Intersection subgroups with class-option edges; source is the Frattini node.

    Nodes are sorted ascending by (order, mask), so node 0 is the Frattini
    subgroup.  Every edge (i, j) strictly increases the subgroup, hence the
    digraph is acyclic and the source has no incoming edges.
    """

    nodes: tuple[Subgroup, ...]
    edges: tuple[tuple[int, int], ...]
    types: tuple[TypeTriple, ...] | None = None
    source: int = 0

    @property
    def solved(self) -> bool:
        return self.types is not None


@dataclass(frozen=True)
class SimplifiedNode:
    triple: TypeTriple
    min_member_order: int


@dataclass
class SimplifiedDiagram:
    """Structure diagram with same-signature classes merged and loops removed."""

    nodes: tuple[SimplifiedNode, ...]
    edges: tuple[tuple[int, int], ...]


def structure_digraph(g: Group) -> StructureDigraph:
    """Build the (unsolved) structure digraph of the avoidance game on g."""
    if g.order < 2:
        raise TrivialGroupError("no avoidance game for the trivial group")
    poset = intersection_subgroups(g)
    nodes = poset.members
    index = {s.mask: i for i, s in enumerate(nodes)}
    maximals = [m.mask for m in maximal_subgroups(g)]
    edges: set[tuple[int, int]] = set()
    for i, node in enumerate(nodes):
        for x in bits(g.full_mask & ~node.mask):
            s = node.mask | 1 << x
            inter = None
            for m in maximals:
                if s & ~m == 0:
                    inter = m if inter is None else inter & m
            if inter is None:
                continue  # the move generates the whole group
            edges.add((i, index[inter]))
    return StructureDigraph(nodes=nodes, edges=tuple(sorted(edges)))


def solve_types(d: StructureDigraph) -> StructureDigraph:
    """Solve all type triples in reverse topological order."""
    n = len(d.nodes)
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, j in d.edges:
        succ[i].append(j)
    types: list[TypeTriple | None] = [None] * n
    # edges point to strictly larger subgroups, so descending order is a
    # reverse topological order
    for i in sorted(range(n), key=lambda k: -d.nodes[k].order):
        opts = {types[j] for j in succ[i]}
        p = d.nodes[i].order % 2
        nim_same = mex({t.component(1 - p) for t in opts})
        nim_other = mex({nim_same} | {t.component(p) for t in opts})
        check = mex({nim_other} | {t.component(1 - p) for t in opts})
        if check != nim_same:
            raise SolverConsistencyError(
                f"node of order {d.nodes[i].order}: parity {p}, "
                f"options {sorted(map(str, opts))} give "
                f"nim_same={nim_same}, nim_other={nim_other}, recheck={check}"
            )
        if p:
            types[i] = TypeTriple(1, nim_other, nim_same)
        else:
            types[i] = TypeTriple(0, nim_same, nim_other)
    return replace(d, types=tuple(types))


def game_nim(g: Group) -> int:
    """Nim-number of the game: nim of even positions at the Frattini node."""
    d = solve_types(structure_digraph(g))
    return d.types[d.source].nim_even


def simplify(d: StructureDigraph) -> SimplifiedDiagram:
    """Merge same-signature classes to a fixpoint and drop self-loops.

    The signature of a node is its own type together with the set of its
    option types plus its own type.
    """
    if not d.solved:
        raise ValueError("simplify needs a solved digraph")
    triples = list(d.types)
    orders = [s.order for s in d.nodes]
    edges = set(d.edges)
    while True:
        succ: dict[int, set[TypeTriple]] = {i: set() for i in range(len(triples))}
        for i, j in edges:
            succ[i].add(triples[j])
        sigs = {
            i: (triples[i], frozenset(succ[i] | {triples[i]}))
            for i in range(len(triples))
        }
        classes: dict[tuple, list[int]] = {}
        for i, sig in sigs.items():
            classes.setdefault(sig, []).append(i)
        if len(classes) == len(triples):
            break
        keys = sorted(
            classes,
            key=lambda s: (
                (s[0].parity, s[0].nim_even, s[0].nim_odd),
                min(orders[i] for i in classes[s]),
            ),
        )
        remap = {}
        for new, key in enumerate(keys):
            for i in classes[key]:
                remap[i] = new
        triples = [key[0] for key in keys]
        orders = [min(orders[i] for i in classes[key]) for key in keys]
        edges = {
            (remap[i], remap[j]) for i, j in edges if remap[i] != remap[j]
        }
    order_idx = sorted(
        range(len(triples)),
        key=lambda i: ((triples[i].parity, triples[i].nim_even, triples[i].nim_odd), orders[i]),
    )
    pos = {old: new for new, old in enumerate(order_idx)}
    nodes = tuple(
        SimplifiedNode(triple=triples[i], min_member_order=orders[i]) for i in order_idx
    )
    out_edges = tuple(sorted((pos[i], pos[j]) for i, j in edges if i != j))
    return SimplifiedDiagram(nodes=nodes, edges=out_edges)


def emit_dot(d: Union[StructureDigraph, SimplifiedDiagram]) -> str:
    """Deterministic DOT rendering of a solved structure or simplified diagram.

    Each node carries its type as a label and its parity as an attribute
    (odd classes are the down-pointing triangles of hand-drawn diagrams).
    """
    if isinstance(d, StructureDigraph):
        if not d.solved:
            raise ValueError("emit_dot needs a solved digraph")
        graph, version = "structure", "dng-structure-v1"
        triples = d.types
    else:
        graph, version = "simplified", "dng-simplified-v1"
        triples = [n.triple for n in d.nodes]
    lines = [f"digraph {graph} {{", f"  // format: {version}"]
    for i, t in enumerate(triples):
        parity = "odd" if t.parity else "even"
        lines.append(
            f'  n{i} [label="pty={t.parity} | even={t.nim_even} | odd={t.nim_odd}"'
            f' parity="{parity}"];'
        )
    for i, j in sorted(d.edges):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_json(d: StructureDigraph) -> dict:
    """JSON rendering of a solved digraph with stable node indices."""
    if not d.solved:
        raise ValueError("digraph_to_json needs a solved digraph")
    return {
        "format": "dng-digraph-v1",
        "nodes": [
            {
                "subgroup_order": s.order,
                "parity": t.parity,
                "nim_even": t.nim_even,
                "nim_odd": t.nim_odd,
            }
            for s, t in zip(d.nodes, d.types)
        ],
        "edges": [[i, j] for i, j in d.edges],
    }


def type_multiset(d: StructureDigraph) -> dict[str, int]:
    """Counts of solved node types, keyed by the printed triple."""
    if not d.solved:
        raise ValueError("type_multiset needs a solved digraph")
    return dict(sorted(Counter(str(t) for t in d.types).items()))
