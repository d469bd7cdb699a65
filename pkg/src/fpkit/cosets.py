"""Cosets of H = ker(pi), representative systems and (H, G_i)-double cosets.

Because ``Hg = Hg'`` exactly when ``pi(g) = pi(g')``, each coset of H is
named by a reduced word of the target family. A :class:`CosetWindow` holds
every coset whose name has at most ``bound`` letters, together with a
representative for each obtained by lifting the name letter by letter
through the quotient sections. That one representative function serves as
the i-system for every factor i at once; :func:`check_i_system` confirms it
rather than assuming it.

Anything that would step outside the window is counted as skipped, never
guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantBreach
from .groups import SubgroupData
from .quotient import ProjectionMap, in_normal_closure, project
from .words import (
    ReducedWord,
    conjugate,
    embed,
    enumerate_words,
    format_word,
    invert,
    multiply,
    omega,
)


@dataclass(frozen=True)
class CosetWindow:
    projection: ProjectionMap
    bound: int
    names: tuple[ReducedWord, ...]
    lifts: tuple[ReducedWord, ...]
    index: dict[ReducedWord, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.names)

    def lift(self, c: int) -> ReducedWord:
        return self.lifts[c]

    def name(self, c: int) -> ReducedWord:
        return self.names[c]


def lift_name(p: ProjectionMap, name: ReducedWord) -> ReducedWord:
    """Letterwise lift of a target word.

    Distinct target factors come from distinct source factors and sections
    send nonidentity blocks to nonidentity elements, so the result is
    already reduced.
    """
    return ReducedWord(p.family, tuple(p.lift_letter(t) for t in name.letters))


def build_window(p: ProjectionMap, bound: int) -> CosetWindow:
    if bound < 0:
        raise ValueError("window bound must be nonnegative")
    names = tuple(enumerate_words(p.target, bound))
    lifts = tuple(lift_name(p, n) for n in names)
    return CosetWindow(p, bound, names, lifts, {n: k for k, n in enumerate(names)})


def coset_of(w: CosetWindow, u: ReducedWord) -> int | None:
    """Index of the coset ``Hu``, or None when it lies outside the window."""
    name = project(w.projection, u)
    if len(name) > w.bound:
        return None
    return w.index[name]


@dataclass
class ISystemReport:
    factor: int
    checked: int = 0
    skipped: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations


def _in_factor_coset(u: ReducedWord, i: int) -> bool:
    """Whether ``u`` is 1 or a single letter of factor ``i``."""
    return not u.letters or (len(u.letters) == 1 and u.letters[0].factor == i)


def check_i_system(w: CosetWindow, i: int) -> ISystemReport:
    """Verify ``R(Ca)`` lies in ``R(C) G_i`` for all window cosets C and a in G_i.

    Pairs whose product coset leaves the window are counted in ``skipped``.
    Violations are recorded as ``(coset index, element)`` pairs.
    """
    p = w.projection
    rep = ISystemReport(i)
    if w.lifts[0].letters:
        rep.violations.append((0, p.family[i].identity))
    for c, r in enumerate(w.lifts):
        r_inv = invert(r)
        for a in p.family[i].elements:
            target = coset_of(w, multiply(r, embed(p.family, i, a)))
            if target is None:
                rep.skipped += 1
                continue
            rep.checked += 1
            if not _in_factor_coset(multiply(r_inv, w.lifts[target]), i):
                rep.violations.append((c, a))
    return rep


@dataclass(frozen=True)
class DoubleCosetRecord:
    factor: int
    representative: ReducedWord
    member_cosets: tuple[int, ...]
    truncated: bool

    @property
    def is_base(self) -> bool:
        return not self.representative.letters


def double_cosets(w: CosetWindow, i: int) -> list[DoubleCosetRecord]:
    """Partition the window into (H, G_i)-double cosets.

    Two cosets share a double coset when their names differ by a trailing
    letter from the image of ``G_i``. Stripping that letter gives the
    canonical name of the double coset, and its lift is the double
    representative ``s`` (so ``s = 1`` or ``omega(s) != i``). Records come
    out in window order of their first member; the one holding H is first.
    """
    p = w.projection
    t = p.target_index[i]
    grows = t is not None  # G_i has nontrivial image, so D spans several cosets
    groups: dict[ReducedWord, list[int]] = {}
    for c, name in enumerate(w.names):
        key = name
        if grows and name.letters and name.letters[-1].factor == t:
            key = ReducedWord(name.family, name.letters[:-1])
        groups.setdefault(key, []).append(c)

    records = []
    for key, members in groups.items():
        s = w.lifts[w.index[key]]
        truncated = grows and len(key) + 1 > w.bound
        records.append(DoubleCosetRecord(i, s, tuple(members), truncated))
    return records


def representative_violations(w: CosetWindow, rec: DoubleCosetRecord) -> list[str]:
    """Check a record against the defining properties of a double representative."""
    i, s = rec.factor, rec.representative
    problems = []
    if s.letters and omega(s) == i:
        problems.append(f"omega({format_word(s)}) = {i}")
    if coset_of(w, s) not in rec.member_cosets:
        problems.append(f"{format_word(s)} is not in its own double coset")
    s_inv = invert(s)
    for c in rec.member_cosets:
        if not _in_factor_coset(multiply(s_inv, w.lifts[c]), i):
            problems.append(f"lift {format_word(w.lifts[c])} not in {format_word(s)}*G{i}")
    return problems


def factor_intersection(p: ProjectionMap, s: ReducedWord, i: int) -> SubgroupData:
    """``{a in G_i : s a s^-1 in H}``, so that ``B = s (result) s^-1``."""
    g = p.family[i]
    elems = [a for a in g.elements if in_normal_closure(p, conjugate(s, embed(p.family, i, a)))]
    found = set(elems)
    if g.identity not in found or any(g.mul(x, y) not in found for x in elems for y in elems):
        raise InvariantBreach(
            f"conjugate intersection for s={format_word(s)}, factor {i} is not a subgroup"
        )
    return SubgroupData(tuple(elems))
