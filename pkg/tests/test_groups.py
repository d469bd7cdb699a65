import itertools

import pytest

from fpkit.errors import NoIdentity, NoInverse, NotASubgroup, NotAssociative, NotNormal
from fpkit.groups import (
    SubgroupData,
    build_quotient,
    cyclic,
    direct_product,
    generated_subgroup,
    is_normal,
    subgroup,
    symmetric,
    trivial_subgroup,
    validate_group,
    whole_group,
)


def test_trivial_group():
    g = validate_group([[0]])
    assert g.order == 1 and g.identity == 0 and g.inverse == (0,)


def test_c2():
    g = validate_group([[0, 1], [1, 0]])
    assert g.order == 2 and g.identity == 0 and g.inverse == (0, 1)


def test_no_inverse_names_element():
    with pytest.raises(NoInverse) as exc:
        validate_group([[0, 1], [1, 1]])
    assert exc.value.element == 1


def test_no_identity():
    with pytest.raises(NoIdentity):
        validate_group([[1, 1], [1, 1]])


def test_not_associative():
    # a loop of order 5 (Latin square with identity 0, every element invertible)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as exc:
        validate_group(table)
    x, y, z = exc.value.triple
    assert table[table[x][y]][z] != table[x][table[y][z]]


def test_identity_not_first():
    # C2 with identity stored at index 1
    g = validate_group([[1, 0], [0, 1]])
    assert g.identity == 1
    assert g.nonidentity == (0,)


@pytest.mark.parametrize("g", [cyclic(1), cyclic(5), symmetric(3), symmetric(4),
                               direct_product(cyclic(2), cyclic(2)), direct_product(symmetric(3), cyclic(4))])
def test_axioms_exhaustive(g):
    assert g.order <= 24
    e = g.identity
    for x, y, z in itertools.product(g.elements, repeat=3):
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))
    for x in g.elements:
        assert g.mul(e, x) == x == g.mul(x, e)
        assert g.mul(x, g.inv(x)) == e == g.mul(g.inv(x), x)


def test_symmetric_composition_order():
    s3 = symmetric(3)
    assert s3.order == 6 and s3.identity == 0
    # not abelian
    assert any(s3.mul(x, y) != s3.mul(y, x) for x in s3.elements for y in s3.elements)


def test_subgroup_validation():
    c4 = cyclic(4)
    assert subgroup(c4, [2, 0]) == SubgroupData((0, 2))
    with pytest.raises(NotASubgroup):
        subgroup(c4, [0, 1])
    with pytest.raises(NotASubgroup):
        subgroup(c4, [2])


def test_is_normal_examples():
    c4 = cyclic(4)
    assert is_normal(c4, subgroup(c4, [0, 2]))
    s3 = symmetric(3)
    a3 = generated_subgroup(s3, [3])
    assert a3.elements == (0, 3, 4)
    assert is_normal(s3, a3)
    transposition = subgroup(s3, [0, 1])
    assert not is_normal(s3, transposition)


def test_is_normal_transposition_by_brute_conjugation():
    # oracle: conjugate the set by each of the six elements directly
    s3 = symmetric(3)
    t = {0, 1}
    images = [{s3.mul(s3.mul(g, n), s3.inv(g)) for n in t} for g in s3.elements]
    assert any(img != t for img in images)
    assert not is_normal(s3, SubgroupData((0, 1)))


def test_quotient_c4_mod_square():
    c4 = cyclic(4)
    q = build_quotient(c4, subgroup(c4, [0, 2]))
    assert q.order == 2
    assert q.cosets == ((0, 2), (1, 3))
    assert q.section == (0, 1)


def test_quotient_full_and_trivial():
    s3 = symmetric(3)
    assert build_quotient(s3, whole_group(s3)).order == 1
    q = build_quotient(s3, trivial_subgroup(s3))
    assert q.order == 6
    assert q.section == tuple(range(6))
    assert q.group.table == s3.table


def test_quotient_rejects_non_normal():
    s3 = symmetric(3)
    with pytest.raises(NotNormal):
        build_quotient(s3, SubgroupData((0, 1)))


def test_section_identity_when_identity_not_least():
    # C4 stored with identity at index 3: x*y = (x + y + 1) mod 4
    g = validate_group([[(x + y + 1) % 4 for y in range(4)] for x in range(4)])
    assert g.identity == 3
    n = generated_subgroup(g, [1])  # 1 has order 2
    q = build_quotient(g, n)
    assert q.section[q.block_of[g.identity]] == g.identity


@pytest.mark.parametrize("g, n", [
    (cyclic(4), [0, 2]),
    (symmetric(3), [0, 3, 4]),
    (direct_product(cyclic(2), cyclic(2)), [0, 1]),
    (symmetric(4), "klein"),
    (cyclic(6), [0, 3]),
])
def test_projection_is_homomorphism_and_section_is_right_inverse(g, n):
    if n == "klein":
        # identity plus the three double transpositions
        perms = itertools.permutations(range(4))
        n = [k for k, p in enumerate(perms)
             if all(p[p[i]] == i for i in range(4)) and sum(p[i] != i for i in range(4)) in (0, 4)]
    q = build_quotient(g, subgroup(g, n))
    for x, y in itertools.product(g.elements, repeat=2):
        assert q.block_of[g.mul(x, y)] == q.group.mul(q.block_of[x], q.block_of[y])
    for b in range(q.order):
        assert q.block_of[q.section[b]] == b
    assert q.section[q.block_of[g.identity]] == g.identity
