"""Finite groups given by Cayley tables, their subgroups and quotients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    GroupTableError,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotNormal,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group on the element indices ``0..order-1``.

    ``table[x][y]`` is the product ``x*y``. Build instances with
    :func:`validate_group` (or the ``cyclic``/``symmetric`` shortcuts) so the
    group axioms are checked once up front.
    """

    order: int
    table: Table = field(repr=False)
    identity: int
    inverse: tuple[int, ...] = field(repr=False)
    name: str = field(default="", compare=False)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def conj(self, g: int, x: int) -> int:
        """Return ``g * x * g^-1``."""
        return self.table[self.table[g][x]][self.inverse[g]]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def nonidentity(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if x != self.identity)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        return self.name or f"group of order {self.order}"


@dataclass(frozen=True)
class SubgroupData:
    """A subgroup, stored as the sorted tuple of its element indices."""

    elements: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self._set

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def _set(self) -> frozenset[int]:
        # cached lazily; frozen dataclass, so go through object.__setattr__
        try:
            return self.__dict__["_cached_set"]
        except KeyError:
            s = frozenset(self.elements)
            object.__setattr__(self, "_cached_set", s)
            return s

    def is_trivial(self) -> bool:
        return len(self.elements) == 1


def validate_group(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Check ``table`` is the Cayley table of a group and wrap it.

    The identity may sit at any index; it is discovered here. Raises
    :class:`NoIdentity`, :class:`NoInverse` or :class:`NotAssociative`
    naming the offending element or triple.
    """
    n = len(table)
    if n == 0:
        raise GroupTableError("empty table")
    rows = []
    for r, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError(f"row {r} has length {len(row)}, expected {n}")
        for c, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise GroupTableError(f"entry ({r}, {c}) = {v!r} not in [0, {n})")
        rows.append(tuple(row))
    t: Table = tuple(rows)

    identity = next(
        (e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))),
        None,
    )
    if identity is None:
        raise NoIdentity()

    inverse = []
    for x in range(n):
        y = next((y for y in range(n) if t[x][y] == identity and t[y][x] == identity), None)
        if y is None:
            raise NoInverse(x)
        inverse.append(y)

    for x, y, z in itertools.product(range(n), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            raise NotAssociative(x, y, z)

    return FiniteGroup(n, t, identity, tuple(inverse), name)


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n; element k is the k-th power of the generator 1."""
    if n < 1:
        raise GroupTableError(f"cyclic order must be positive, got {n}")
    return validate_group([[(x + y) % n for y in range(n)] for x in range(n)], f"C{n}")


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on ``range(n)``.

    Elements are the permutations in lexicographic order (so the identity is
    index 0) and ``x*y`` is the composition "apply y, then x".
    """
    if n < 1:
        raise GroupTableError(f"symmetric degree must be positive, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms]
    return validate_group(table, f"S{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """``g x h`` with the pair (a, b) stored at index ``a * h.order + b``."""
    m = h.order
    table = [
        [g.mul(a1, a2) * m + h.mul(b1, b2) for a2 in g.elements for b2 in h.elements]
        for a1 in g.elements
        for b1 in h.elements
    ]
    return validate_group(table, f"{g}x{h}")


def subgroup(group: FiniteGroup, elements: Iterable[int]) -> SubgroupData:
    """Validate that ``elements`` form a subgroup of ``group``."""
    elems = set(elements)
    for x in elems:
        if not 0 <= x < group.order:
            raise NotASubgroup(f"element {x} out of range for {group}")
    if group.identity not in elems:
        raise NotASubgroup("subset does not contain the identity")
    for x in elems:
        if group.inv(x) not in elems:
            raise NotASubgroup(f"not closed under inverse at {x}")
        for y in elems:
            if group.mul(x, y) not in elems:
                raise NotASubgroup(f"not closed under product at ({x}, {y})")
    return SubgroupData(tuple(sorted(elems)))


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> SubgroupData:
    elems = {group.identity}
    frontier = list(elems)
    gens = list(generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return SubgroupData(tuple(sorted(elems)))


def trivial_subgroup(group: FiniteGroup) -> SubgroupData:
    return SubgroupData((group.identity,))


def whole_group(group: FiniteGroup) -> SubgroupData:
    return SubgroupData(tuple(group.elements))


def _normality_witness(group: FiniteGroup, sub: SubgroupData) -> tuple[int, int] | None:
    for g in group.elements:
        for n in sub.elements:
            if group.conj(g, n) not in sub:
                return g, n
    return None


def is_normal(group: FiniteGroup, sub: SubgroupData) -> bool:
    return _normality_witness(group, sub) is None


@dataclass(frozen=True)
class QuotientGroup:
    """``parent / normal`` with blocks ordered by their least element.

    ``section`` picks the least element of each block, except that the
    identity block always maps to the parent identity. ``group`` is the
    quotient itself as a :class:`FiniteGroup` on block indices.
    """

    parent: FiniteGroup
    normal: SubgroupData
    cosets: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    section: tuple[int, ...]
    group: FiniteGroup

    @property
    def order(self) -> int:
        return len(self.cosets)

    def project(self, x: int) -> int:
        return self.block_of[x]


def build_quotient(group: FiniteGroup, normal: SubgroupData) -> QuotientGroup:
    witness = _normality_witness(group, normal)
    if witness is not None:
        raise NotNormal(*witness)

    block_of = [-1] * group.order
    cosets = []
    for x in group.elements:
        if block_of[x] >= 0:
            continue
        block = tuple(sorted(group.mul(x, n) for n in normal))
        for y in block:
            block_of[y] = len(cosets)
        cosets.append(block)

    id_block = block_of[group.identity]
    section = tuple(group.identity if b == id_block else blk[0] for b, blk in enumerate(cosets))
    table = [[block_of[group.mul(section[b], section[c])] for c in range(len(cosets))] for b in range(len(cosets))]
    name = group.name and f"{group.name}/N"
    return QuotientGroup(
        parent=group,
        normal=normal,
        cosets=tuple(cosets),
        block_of=tuple(block_of),
        section=section,
        group=validate_group(table, name),
    )
