import itertools

import pytest

from fpkit.cosets import (
    build_window,
    check_i_system,
    coset_of,
    double_cosets,
    factor_intersection,
    representative_violations,
)
from fpkit.groups import cyclic, subgroup, whole_group
from fpkit.quotient import QuotientSpec, build_projection, in_normal_closure
from fpkit.report import format_name
from fpkit.words import (
    FactorFamily,
    conjugate,
    embed,
    enumerate_words,
    format_word,
    invert,
    multiply,
    omega,
    reduce,
)

C2C2 = FactorFamily([cyclic(2), cyclic(2)])
C4C2 = FactorFamily([cyclic(4), cyclic(2)])


@pytest.fixture
def c2c2():
    return build_projection(QuotientSpec.single(C2C2, 0, whole_group(C2C2[0])))


@pytest.fixture
def c4c2():
    return build_projection(QuotientSpec.single(C4C2, 0, subgroup(C4C2[0], [0, 2])))


def test_window_l0(c4c2):
    w = build_window(c4c2, 0)
    assert len(w) == 1
    assert w.lift(0).letters == ()


def test_window_c2c2(c2c2):
    w = build_window(c2c2, 1)
    assert [format_name(c2c2, n) for n in w.names] == ["1", "g1^1"]
    assert [format_word(l) for l in w.lifts] == ["1", "g1^1"]


def test_window_c4c2(c4c2):
    w = build_window(c4c2, 2)
    # x is the image of a; blocks of C4/{0,2} are {0,2} and {1,3}
    assert [format_name(c4c2, n) for n in w.names] == ["1", "g0^1", "g1^1", "g0^1*g1^1", "g1^1*g0^1"]
    assert [format_word(l) for l in w.lifts] == ["1", "g0^1", "g1^1", "g0^1*g1^1", "g1^1*g0^1"]


def test_coset_of_examples(c4c2):
    w = build_window(c4c2, 2)
    assert coset_of(w, embed(C4C2, 0, 2)) == 0
    assert coset_of(w, embed(C4C2, 0, 3)) == coset_of(w, embed(C4C2, 0, 1)) == 1
    long = reduce([(k % 2, 1) for k in range(10)], C4C2)
    assert len(long) == 10
    assert coset_of(w, long) is None


@pytest.mark.parametrize("label", ["A", "B", "C", "D"])
def test_window_invariants(projections, label):
    p = projections[label]
    for bound in range(5):
        w = build_window(p, bound)
        assert len(set(w.names)) == len(w.names)
        assert w.names[0].letters == () and w.lifts[0].letters == ()
        for c, (name, lift) in enumerate(zip(w.names, w.lifts)):
            assert coset_of(w, lift) == c
            if lift.letters:
                prefix = reduce(lift.letters[:-1], p.family)
                assert prefix in w.lifts


@pytest.mark.parametrize("label", ["A", "B", "C", "D"])
def test_coset_kernel_bijection(projections, label):
    p = projections[label]
    w = build_window(p, 3)
    words = list(enumerate_words(p.family, 3))
    cosets = [coset_of(w, u) for u in words]
    assert None not in cosets
    for (u, cu), (v, cv) in itertools.product(zip(words, cosets), repeat=2):
        assert (cu == cv) == in_normal_closure(p, multiply(u, invert(v)))


def test_i_system_l0(c4c2):
    rep = check_i_system(build_window(c4c2, 0), 0)
    assert rep.clean
    assert rep.checked == 2  # a in N keeps the coset
    assert rep.skipped == 2


def test_i_system_c2c2(c2c2):
    w = build_window(c2c2, 1)
    rep = check_i_system(w, 0)
    assert rep.clean and rep.skipped == 0
    b = w.lift(1)
    ba = multiply(b, embed(C2C2, 0, 1))
    assert coset_of(w, ba) == 1
    assert multiply(invert(b), ba) == embed(C2C2, 0, 1)


def test_i_system_c4c2_factor1(c4c2):
    rep = check_i_system(build_window(c4c2, 2), 1)
    assert rep.clean
    assert rep.checked + rep.skipped == 5 * 2


@pytest.mark.parametrize("label", ["A", "B", "C", "D"])
def test_i_system_all(projections, label):
    p = projections[label]
    for bound in range(5):
        w = build_window(p, bound)
        for i in range(len(p.family)):
            assert check_i_system(w, i).clean


def _brute_double_cosets(p, w, i):
    """Union cosets whose names differ by right multiplication with the image of G_i."""
    parent = list(range(len(w)))

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    g = p.family[i]
    for c, name in enumerate(w.names):
        for a in g.elements:
            img = multiply(name, reduce(
                [] if p.target_index[i] is None
                else [(p.target_index[i], p.quotients[i].block_of[a])], p.target))
            if img in w.index:
                parent[find(c)] = find(w.index[img])
    groups = {}
    for c in range(len(w)):
        groups.setdefault(find(c), set()).add(c)
    return sorted(sorted(s) for s in groups.values())


@pytest.mark.parametrize("label", ["A", "B", "C", "D"])
def test_double_cosets_partition_matches_brute_force(projections, label):
    p = projections[label]
    for bound in range(5):
        w = build_window(p, bound)
        for i in range(len(p.family)):
            recs = double_cosets(w, i)
            got = sorted(sorted(r.member_cosets) for r in recs)
            assert got == _brute_double_cosets(p, w, i)
            for r in recs:
                assert not representative_violations(w, r)
                assert r.representative.letters == () or omega(r.representative) != i
                assert coset_of(w, r.representative) in r.member_cosets
            assert recs[0].representative.letters == () and 0 in recs[0].member_cosets


def test_double_cosets_c2c2(c2c2):
    recs = double_cosets(build_window(c2c2, 1), 0)
    assert [format_word(r.representative) for r in recs] == ["1", "g1^1"]
    assert [r.member_cosets for r in recs] == [(0,), (1,)]
    assert not any(r.truncated for r in recs)


def test_double_cosets_c4c2_factor0(c4c2):
    w = build_window(c4c2, 2)
    recs = double_cosets(w, 0)
    table = [(format_word(r.representative), [format_name(c4c2, w.names[c]) for c in r.member_cosets],
              r.truncated) for r in recs]
    assert table == [
        ("1", ["1", "g0^1"], False),
        ("g1^1", ["g1^1", "g1^1*g0^1"], False),
        ("g0^1*g1^1", ["g0^1*g1^1"], True),
    ]


def test_factor_intersection_examples(c4c2, projections):
    n = c4c2.normal(0)
    assert factor_intersection(c4c2, C4C2.identity, 0) == n
    for s in enumerate_words(C4C2, 3):
        assert factor_intersection(c4c2, s, 0) == n
        assert factor_intersection(c4c2, s, 1).elements == (0,)


@pytest.mark.parametrize("label", ["A", "B", "C", "D"])
def test_factor_intersection_brute_force(projections, label):
    p = projections[label]
    for s in enumerate_words(p.family, 3):
        for i, g in enumerate(p.family):
            expected = tuple(a for a in g.elements
                             if in_normal_closure(p, conjugate(s, embed(p.family, i, a))))
            assert factor_intersection(p, s, i).elements == expected == p.normal(i).elements
