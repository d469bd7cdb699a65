"""Decomposition of the normal closure H of N into free factors, and the
checks that together witness ``H = N * K``.

For every factor i and every (H, G_i)-double coset D in the window, the
subgroup ``B = H ∩ s G_i s^-1`` (s the double representative of D) is
computed. The nontrivial ones are the listed free factors: the one with
``s = 1`` is N itself and the rest generate K.

The free part is searched for rather than built. Each Schreier-style element
``R(C) x R(Cx)^-1`` is classified as trivial, as redundant (a conjugate
``R(C) a R(C)^-1`` with ``a`` in N), or as unresolved.

Random sampling draws from ``numpy.random.Generator`` streams seeded by
``SeedSequence([seed, stream])``. A sampled alternating product picks its
syllable count uniformly in ``1..max_syllables``. Its first factor is
uniform over the listed factors and each later one is uniform over the
factors other than its predecessor. Each syllable element is uniform over
that factor's nonidentity elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .cosets import (
    CosetWindow,
    DoubleCosetRecord,
    build_window,
    check_i_system,
    coset_of,
    double_cosets,
    factor_intersection,
    representative_violations,
)
from .errors import InvariantBreach, SeedMismatch, TrivialFactor, TrivialN
from .groups import SubgroupData
from .quotient import (
    ProjectionMap,
    QuotientSpec,
    build_projection,
    closure_generators,
    in_normal_closure,
)
from .words import (
    ReducedWord,
    conjugate,
    embed,
    enumerate_words,
    format_word,
    invert,
    multiply,
    random_word,
    retract,
)

K_UNIQUENESS_NOTE = (
    "K is unique up to isomorphism by the theorem; this is recorded, not checked"
)


def substream(seed: int, stream: int = 0) -> np.random.Generator:
    """Independent generator for worker ``stream`` under a shared seed."""
    return np.random.default_rng(np.random.SeedSequence([seed, stream]))


@dataclass(frozen=True)
class FreeFactor:
    """``B = s A s^-1`` with ``A`` a subgroup of factor ``factor``."""

    factor: int
    representative: ReducedWord
    subgroup: SubgroupData
    base: bool
    truncated: bool = False

    def elements(self) -> list[ReducedWord]:
        """Nonidentity elements of B as words."""
        fam = self.representative.family
        ident = fam[self.factor].identity
        return [
            conjugate(self.representative, embed(fam, self.factor, a))
            for a in self.subgroup
            if a != ident
        ]


@dataclass(frozen=True)
class SchreierElement:
    coset: int
    letter: tuple[int, int]
    word: ReducedWord
    status: str  # "trivial" | "redundant" | "unresolved"


@dataclass
class Verdict:
    passed: bool
    checked: int = 0
    skipped: bool = False
    counterexample: str | None = None
    detail: str = ""


@dataclass
class DecompositionReport:
    spec: QuotientSpec
    projection: ProjectionMap
    window: CosetWindow
    double_cosets: dict[int, list[DoubleCosetRecord]]
    factors: list[FreeFactor]
    free_part: list[SchreierElement]
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    # (factor i, coset index) -> position in ``factors``
    factor_at: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    @property
    def bound(self) -> int:
        return self.window.bound

    @property
    def base_factor(self) -> FreeFactor | None:
        return next((f for f in self.factors if f.base), None)

    @property
    def conjugate_factors(self) -> list[FreeFactor]:
        return [f for f in self.factors if not f.base]

    @property
    def unresolved(self) -> list[SchreierElement]:
        return [e for e in self.free_part if e.status == "unresolved"]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())


def scan_free_part(p: ProjectionMap, w: CosetWindow) -> list[SchreierElement]:
    fam = p.family
    found = []
    for c, r in enumerate(w.lifts):
        r_inv = invert(r)
        for i, x in fam.letters():
            rx = multiply(r, embed(fam, i, x))
            cx = coset_of(w, rx)
            if cx is None:
                continue
            u = multiply(rx, invert(w.lifts[cx]))
            if not u.letters:
                status = "trivial"
            else:
                core = multiply(multiply(r_inv, u), r)
                if len(core) == 1 and core.letters[0].element in p.normal(core.letters[0].factor):
                    status = "redundant"
                else:
                    status = "unresolved"
            found.append(SchreierElement(c, (i, x), u, status))
    return found


def decompose(p: ProjectionMap, bound: int) -> DecompositionReport:
    if bound < 1:
        raise ValueError("decomposition window must have bound >= 1")
    w = build_window(p, bound)
    records = {i: double_cosets(w, i) for i in range(len(p.family))}
    factors: list[FreeFactor] = []
    factor_at = {}
    for i, recs in records.items():
        for rec in recs:
            b = factor_intersection(p, rec.representative, i)
            if b.is_trivial():
                continue
            for c in rec.member_cosets:
                factor_at[(i, c)] = len(factors)
            factors.append(FreeFactor(i, rec.representative, b, rec.is_base, rec.truncated))
    report = DecompositionReport(
        spec=p.spec,
        projection=p,
        window=w,
        double_cosets=records,
        factors=factors,
        free_part=scan_free_part(p, w),
        notes=[K_UNIQUENESS_NOTE],
        factor_at=factor_at,
    )
    report.verdicts["double_representatives"] = _check_representatives(report)
    report.verdicts["free_part_scan"] = _check_free_part(report)
    return report


def rewrite(report: DecompositionReport, u: ReducedWord) -> list[tuple[int, int]] | None:
    """Express ``u`` in H as a product of listed free-factor elements.

    Returns ``(factor position, a)`` pairs meaning ``s a s^-1`` with ``s`` the
    factor's representative, in left-to-right order. Returns None when the
    rewriting would leave the window.
    """
    w = report.window
    fam = u.family
    pieces = []
    c = 0
    for i, x in u.letters:
        r = w.lifts[c]
        rx = multiply(r, embed(fam, i, x))
        nxt = coset_of(w, rx)
        if nxt is None:
            return None
        gen = multiply(rx, invert(w.lifts[nxt]))
        if gen.letters:
            core = multiply(multiply(invert(r), gen), r)
            pos = report.factor_at.get((i, c))
            if pos is None or len(core) != 1 or core.letters[0].factor != i:
                raise InvariantBreach(f"Schreier element {format_word(gen)} is not in a listed factor")
            s = report.factors[pos].representative
            # r = s * y with y in G_i, so r a r^-1 = s (y a y^-1) s^-1
            y_word = multiply(invert(s), r)
            g = fam[i]
            y = y_word.letters[0].element if y_word.letters else g.identity
            pieces.append((pos, g.conj(y, core.letters[0].element)))
        c = nxt
    if c != 0:
        raise ValueError(f"{format_word(u)} is not in the normal closure")
    return pieces


def evaluate(report: DecompositionReport, pieces: Iterable[tuple[int, int]]) -> ReducedWord:
    fam = report.projection.family
    acc = fam.identity
    for pos, a in pieces:
        f = report.factors[pos]
        acc = multiply(acc, conjugate(f.representative, embed(fam, f.factor, a)))
    return acc


def verify_free_factor(
    p: ProjectionMap,
    report: DecompositionReport,
    max_syllables: int,
    samples: int,
    seed: int,
) -> Verdict:
    """Sample alternating products over the listed factors; none may be 1."""
    if report.projection.family != p.family:
        raise SeedMismatch("report was built over a different factor family")
    if samples <= 0:
        return Verdict(True, 0, skipped=True, detail="no samples requested")
    if not report.factors:
        return Verdict(False, 0, counterexample=None, detail="no free factors listed")
    pools = [f.elements() for f in report.factors]
    k = len(pools)
    top = max_syllables if k > 1 else 1
    rng = substream(seed, 0)
    fam = p.family
    for n in range(samples):
        m = int(rng.integers(1, top + 1))
        prev = None
        acc = fam.identity
        used = []
        for _ in range(m):
            if prev is None:
                f = int(rng.integers(k))
            else:
                f = int(rng.integers(k - 1))
                if f >= prev:
                    f += 1
            el = pools[f][int(rng.integers(len(pools[f])))]
            acc = multiply(acc, el)
            used.append(f"[{format_word(el)}]")
            prev = f
        if not acc.letters:
            return Verdict(False, n + 1, counterexample="*".join(used))
    return Verdict(True, samples)


def _check_representatives(report: DecompositionReport) -> Verdict:
    w = report.window
    checked = 0
    for i, recs in report.double_cosets.items():
        base = [r for r in recs if 0 in r.member_cosets]
        if len(base) != 1 or not base[0].is_base:
            return Verdict(False, checked, detail=f"double coset of H for factor {i} has s != 1")
        for rec in recs:
            checked += 1
            problems = representative_violations(w, rec)
            if problems:
                return Verdict(False, checked, counterexample=format_word(rec.representative),
                               detail="; ".join(problems))
    for j in report.spec.quotiented:
        base = next((f for f in report.factors if f.base and f.factor == j), None)
        if base is None or base.subgroup != report.spec.normals[j]:
            return Verdict(False, checked, detail=f"base factor for {j} is not N")
    return Verdict(True, checked)


def _check_free_part(report: DecompositionReport) -> Verdict:
    bad = report.unresolved
    if bad:
        return Verdict(False, len(report.free_part), counterexample=format_word(bad[0].word),
                       detail=f"{len(bad)} unresolved Schreier elements")
    return Verdict(True, len(report.free_part))


def _random_kernel_word(p: ProjectionMap, rng: np.random.Generator, bound: int) -> ReducedWord:
    """A product of one to three random conjugates of nontrivial N elements."""
    fam = p.family
    pieces = [(j, a) for j in p.spec.quotiented for a in p.normal(j) if a != fam[j].identity]
    acc = fam.identity
    for _ in range(int(rng.integers(1, 4))):
        length = int(rng.integers(0, bound + 1)) if len(fam) > 1 else min(1, bound)
        g = random_word(fam, length, rng)
        j, a = pieces[int(rng.integers(len(pieces)))]
        acc = multiply(acc, conjugate(g, embed(fam, j, a)))
    return acc


def verify_theorem(
    spec: QuotientSpec,
    bound: int,
    samples: int,
    seed: int,
    max_syllables: int = 6,
    cross_length: int = 6,
) -> DecompositionReport:
    """Run every check and return the decomposition with its verdicts filled."""
    for i, g in enumerate(spec.family):
        if g.order < 2:
            raise TrivialFactor(f"factor {i} is trivial")
    if not spec.quotiented:
        raise TrivialN("N is trivial; the theorem needs a nontrivial normal subgroup")

    p = build_projection(spec)
    report = decompose(p, bound)
    fam = p.family
    v = report.verdicts
    structural = dict(v)
    v.clear()

    # H ∩ G_j equals N_j for every factor (trivial where nothing is quotiented)
    ok, bad = True, None
    for j, g in enumerate(fam):
        inside = tuple(x for x in g.elements if in_normal_closure(p, embed(fam, j, x)))
        if inside != spec.normals[j].elements:
            ok, bad = False, f"factor {j}: {list(inside)}"
            break
    v["intersection_equals_N"] = Verdict(ok, sum(g.order for g in fam), counterexample=bad)

    # retractions of kernel words land in N_j
    rng = substream(seed, 1)
    members = list(closure_generators(p, bound))
    members += [_random_kernel_word(p, rng, bound) for _ in range(samples)]
    bad = next(
        (u for u in members
         if not in_normal_closure(p, u)
         or any(retract(j, u) not in spec.normals[j] for j in range(len(fam)))),
        None,
    )
    v["retraction_into_N"] = Verdict(bad is None, len(members),
                                     counterexample=bad and format_word(bad))

    # words avoiding every quotiented factor meet H trivially
    checked, bad = 0, None
    others = [j for j in range(len(fam)) if j not in spec.quotiented]
    for u in enumerate_words(fam, cross_length, others):
        checked += 1
        if u.letters and in_normal_closure(p, u):
            bad = u
            break
    v["cross_factor_trivial"] = Verdict(bad is None, checked, counterexample=bad and format_word(bad))

    reps = [check_i_system(report.window, i) for i in range(len(fam))]
    dirty = next((r for r in reps if not r.clean), None)
    v["i_system_axioms"] = Verdict(
        dirty is None,
        sum(r.checked for r in reps),
        counterexample=dirty and format_word(report.window.lifts[dirty.violations[0][0]]),
        detail=f"{sum(r.skipped for r in reps)} pairs left the window",
    )

    v["double_representatives"] = structural["double_representatives"]

    checked, bad = 0, None
    for i, recs in report.double_cosets.items():
        for rec in recs:
            checked += 1
            if factor_intersection(p, rec.representative, i) != spec.normals[i]:
                bad = format_word(rec.representative)
                break
    v["intersection_values"] = Verdict(bad is None, checked, counterexample=bad)

    checked, bad = 0, None
    for u in closure_generators(p, bound):
        checked += 1
        pieces = rewrite(report, u)
        if pieces is None or evaluate(report, pieces) != u:
            bad = format_word(u)
            break
    v["generator_coverage"] = Verdict(bad is None, checked, counterexample=bad)

    v["free_factor_sampling"] = verify_free_factor(p, report, max_syllables, samples, seed)
    v["free_part_scan"] = structural["free_part_scan"]
    return report
