"""
This module defines finite groups by multiplication tables, the standard small groups and the
enumeration of normal subgroups.
"""

import itertools
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from vsa.errors import PreconditionError


class GroupTable:
    """
    Class representing a finite group by its Cayley table.

    Parameters
    ----------
    name : str
        Identifier used in reports.
    elements : sequence of str
        Element labels.
    table : array (n, n) of int
        table[i, j] is the index of elements[i]·elements[j].
    permutations : sequence of tuple, optional
        For permutation groups, the permutation of {0, ..., m−1} realized by each element.

    Error
    ------
    PreconditionError
        The table is not closed, not associative, has no identity or lacks inverses.

    Examples
    --------
    >>> G = cyclic_group(3)
    >>> G.elements
    ('1', 'g', 'g^2')
    >>> G.label(G.inverse(1))
    'g^2'

    """

    def __init__(self, name: str, elements: Sequence[str], table, permutations: Optional[Sequence[Tuple[int, ...]]] = None) -> None:
        self.name = name
        self.elements = tuple(elements)
        self.table = np.asarray(table, dtype=int)
        self.permutations = tuple(tuple(p) for p in permutations) if permutations is not None else None
        n = len(self.elements)
        if n == 0 or self.table.shape != (n, n):
            raise PreconditionError(f"{name}: a table of shape ({n}, {n}) is required")
        if np.any(self.table < 0) or np.any(self.table >= n):
            raise PreconditionError(f"{name}: the table is not closed")
        identities = [e for e in range(n) if all(self.table[e, i] == i and self.table[i, e] == i for i in range(n))]
        if not identities:
            raise PreconditionError(f"{name}: the table has no identity")
        self.identity = identities[0]
        for i, j, k in itertools.product(range(n), repeat=3):
            if self.table[self.table[i, j], k] != self.table[i, self.table[j, k]]:
                raise PreconditionError(f"{name}: the table is not associative at {self.elements[i], self.elements[j], self.elements[k]}")
        self._inverses = []
        for i in range(n):
            inverse = [j for j in range(n) if self.table[i, j] == self.identity]
            if len(inverse) != 1:
                raise PreconditionError(f"{name}: {self.elements[i]} has no unique inverse")
            self._inverses.append(inverse[0])

    def __repr__(self) -> str:
        return f"GroupTable({self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def label(self, i: int) -> str:
        return self.elements[i]

    def multiply(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inverse(self, i: int) -> int:
        return self._inverses[i]

    def is_abelian(self) -> bool:
        return bool(np.all(self.table == self.table.T))

    def generated(self, elements: Sequence[int]) -> FrozenSet[int]:
        """The subgroup generated by the given elements."""
        subgroup = {self.identity} | set(elements)
        frontier = list(subgroup)
        while frontier:
            fresh = []
            for a in frontier:
                for b in list(subgroup):
                    for c in (self.multiply(a, b), self.multiply(b, a)):
                        if c not in subgroup:
                            subgroup.add(c)
                            fresh.append(c)
            frontier = fresh
        return frozenset(subgroup)

    def normal_closure(self, elements: Sequence[int]) -> FrozenSet[int]:
        conjugates = {
            self.multiply(self.multiply(g, x), self.inverse(g)) for g in range(self.order) for x in elements
        }
        return self.generated(sorted(conjugates))

    def is_normal(self, subgroup: FrozenSet[int]) -> bool:
        return all(
            self.multiply(self.multiply(g, x), self.inverse(g)) in subgroup for g in range(self.order) for x in subgroup
        )

    def normal_subgroups(self) -> List[FrozenSet[int]]:
        """
        Every normal subgroup, as joins of normal closures of single elements, sorted by
        order and then by elements.

        >>> [sorted(N) for N in symmetric_group(3).normal_subgroups()]
        [[0], [0, 3, 4], [0, 1, 2, 3, 4, 5]]
        """
        found = {self.normal_closure([x]) for x in range(self.order)}
        changed = True
        while changed:
            changed = False
            for first, second in itertools.combinations(list(found), 2):
                join = self.generated(sorted(first | second))
                if join not in found:
                    found.add(join)
                    changed = True
        return sorted(found, key=lambda subgroup: (len(subgroup), sorted(subgroup)))


def cyclic_group(n: int, generator: str = "g") -> GroupTable:
    """ℤ_n with elements 1, g, g^2, ..., g^{n−1}."""
    labels = ["1"] + [generator if k == 1 else f"{generator}^{k}" for k in range(1, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(f"Z{n}", labels, table)


def _product_label(first: str, second: str) -> str:
    if first == "1":
        return second
    if second == "1":
        return first
    return first + second


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """
    G × H with elements (g, h) ordered lexicographically, labelled gh.

    >>> direct_product(cyclic_group(2, "a"), cyclic_group(2, "b")).elements
    ('1', 'b', 'a', 'ab')
    """
    pairs = list(itertools.product(range(G.order), range(H.order)))
    position = {pair: index for index, pair in enumerate(pairs)}
    labels = [_product_label(G.label(g), H.label(h)) for g, h in pairs]
    table = [[position[(G.multiply(g1, g2), H.multiply(h1, h2))] for (g2, h2) in pairs] for (g1, h1) in pairs]
    return GroupTable(f"{G.name}x{H.name}", labels, table)


def _cycle_label(permutation: Tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(permutation)):
        if start in seen or permutation[start] == start:
            continue
        cycle, current = [], start
        while current not in seen:
            seen.add(current)
            cycle.append(str(current + 1))
            current = permutation[current]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "1"


def symmetric_group(m: int) -> GroupTable:
    """
    S_m acting on {0, ..., m−1}, elements in cycle notation; (στ)(i) = σ(τ(i)).

    >>> symmetric_group(3).elements
    ('1', '(23)', '(12)', '(123)', '(132)', '(13)')
    """
    permutations = list(itertools.permutations(range(m)))
    position = {p: index for index, p in enumerate(permutations)}
    table = [[position[tuple(s[t[i]] for i in range(m))] for t in permutations] for s in permutations]
    return GroupTable(f"S{m}", [_cycle_label(p) for p in permutations], table, permutations)
