"""The projection of a free product onto the free product of factor quotients.

Given normal subgroups ``N_j`` of the factors ``G_j``, the letterwise maps
``G_j -> G_j/N_j`` induce a homomorphism ``pi`` from ``* G_j`` onto
``* (G_j/N_j)`` whose kernel is the normal closure ``H`` of the ``N_j``.
Membership in ``H`` is therefore decided by reducing ``pi(u)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator

from .errors import ConfigError, IndexOutOfRange, TrivialN
from .groups import QuotientGroup, SubgroupData, build_quotient, subgroup
from .words import (
    FactorFamily,
    Letter,
    ReducedWord,
    conjugate,
    embed,
    enumerate_words,
)


class AllQuotientsTrivial(UserWarning):
    """Every factor is quotiented away, so H is the whole free product."""


class MultipleNormals(ConfigError):
    pass


@dataclass(frozen=True)
class QuotientSpec:
    family: FactorFamily
    normals: tuple[SubgroupData, ...]
    allow_multi: bool = False

    def __post_init__(self):
        if len(self.normals) != len(self.family):
            raise ConfigError(
                f"{len(self.normals)} normal subgroups given for {len(self.family)} factors"
            )
        # revalidates closure; build_projection checks normality
        for j, n in enumerate(self.normals):
            subgroup(self.family[j], n.elements)
        if len(self.quotiented) > 1 and not self.allow_multi:
            raise MultipleNormals(
                f"factors {list(self.quotiented)} all carry nontrivial normal subgroups; "
                "pass allow_multi to permit this"
            )

    @classmethod
    def single(cls, family: FactorFamily, factor: int, normal: SubgroupData) -> QuotientSpec:
        """The theorem's setting: one normal subgroup in one factor."""
        if not 0 <= factor < len(family):
            raise IndexOutOfRange(f"unknown factor {factor}")
        normals = [SubgroupData((g.identity,)) for g in family]
        normals[factor] = normal
        return cls(family, tuple(normals))

    @property
    def quotiented(self) -> tuple[int, ...]:
        """Indices of factors with a nontrivial normal subgroup."""
        return tuple(j for j, n in enumerate(self.normals) if len(n) > 1)

    @property
    def base_factor(self) -> int:
        """The factor carrying N; raises TrivialN if there is none."""
        q = self.quotiented
        if not q:
            raise TrivialN("N is trivial; the theorem needs a nontrivial normal subgroup")
        return q[0]


class ProjectionMap:
    """The morphism ``pi`` together with its target family.

    Factors whose quotient is trivial are left out of the target, so their
    letters map to the empty word. ``target_index[j]`` is the target factor
    for source factor ``j`` (None when dropped) and ``source_index[t]``
    inverts it.
    """

    def __init__(self, spec: QuotientSpec):
        self.spec = spec
        self.family = spec.family
        self.quotients: tuple[QuotientGroup, ...] = tuple(
            build_quotient(g, n) for g, n in zip(spec.family, spec.normals)
        )
        target_groups = []
        target_index: list[int | None] = []
        source_index = []
        for j, q in enumerate(self.quotients):
            if q.order == 1:
                target_index.append(None)
            else:
                target_index.append(len(target_groups))
                source_index.append(j)
                target_groups.append(q.group)
        self.target_index = tuple(target_index)
        self.source_index = tuple(source_index)
        self.target = FactorFamily(target_groups)
        self.degenerate = not target_groups
        if self.degenerate:
            warnings.warn(
                "every factor quotient is trivial: H is the whole free product",
                AllQuotientsTrivial,
                stacklevel=2,
            )
        # letter_map[j][x] = image letter of (j, x), or None when it dies
        self.letter_map: tuple[tuple[Letter | None, ...], ...] = tuple(
            tuple(
                None
                if t is None or q.block_of[x] == q.group.identity
                else Letter(t, q.block_of[x])
                for x in q.parent.elements
            )
            for t, q in zip(self.target_index, self.quotients)
        )

    def __repr__(self) -> str:
        return f"ProjectionMap({self.family!r} -> {self.target!r})"

    def normal(self, j: int) -> SubgroupData:
        return self.spec.normals[j]

    def lift_letter(self, letter: Letter) -> Letter:
        """Lift a target letter through the chosen section."""
        j = self.source_index[letter.factor]
        return Letter(j, self.quotients[j].section[letter.element])


def build_projection(spec: QuotientSpec) -> ProjectionMap:
    return ProjectionMap(spec)


def project(p: ProjectionMap, u: ReducedWord) -> ReducedWord:
    """``pi(u)`` in reduced form over ``p.target``."""
    tfactors = p.target.factors
    lmap = p.letter_map
    stack: list[Letter] = []
    for j, x in u.letters:
        img = lmap[j][x]
        if img is None:
            continue
        t, b = img
        if stack and stack[-1].factor == t:
            g = tfactors[t]
            c = g.table[stack[-1].element][b]
            if c == g.identity:
                stack.pop()
            else:
                stack[-1] = Letter(t, c)
        else:
            stack.append(img)
    return ReducedWord(p.target, tuple(stack))


def in_normal_closure(p: ProjectionMap, u: ReducedWord) -> bool:
    """Whether ``u`` lies in H, the kernel of ``pi``."""
    return not project(p, u).letters


def closure_generators(p: ProjectionMap, bound: int) -> Iterator[ReducedWord]:
    """Distinct conjugates ``g a g^-1`` with ``|g| <= bound`` and ``a`` in some
    nontrivial ``N_j``, in the order their conjugators are enumerated."""
    seen: set[ReducedWord] = set()
    pieces = [
        embed(p.family, j, a)
        for j in p.spec.quotiented
        for a in p.normal(j)
        if a != p.family[j].identity
    ]
    for g in enumerate_words(p.family, bound):
        for a in pieces:
            c = conjugate(g, a)
            if c not in seen:
                seen.add(c)
                yield c

