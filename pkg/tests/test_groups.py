import pytest
from hypothesis import given, settings, strategies as st

from grpalg.errors import (
    BadPresentation,
    CapExceeded,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotMetabelian,
)
from grpalg.groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    center,
    centralizer,
    conjugacy_classes,
    conjugate_subgroup,
    core,
    d1_group,
    d1_index,
    d2_group,
    derived_subgroup,
    format_cayley,
    is_metabelian,
    is_normal,
    maximal_abelian_over_derived,
    metacyclic_group,
    normal_subgroups,
    normalizer,
    parse_cayley,
    quotient,
    subgroup_closure,
)

S3 = metacyclic_group(3, 2, 0, 2)
D8 = metacyclic_group(4, 2, 0, 3)
Q8 = d2_group(1)


def test_metacyclic_relations():
    # b^{-1} a b = a^r in every constructed group
    for (n, t, k, r) in [(3, 2, 0, 2), (4, 2, 0, 3), (9, 3, 0, 4),
                         (5, 4, 0, 2), (16, 4, 0, 3), (8, 2, 2, 5)]:
        G = metacyclic_group(n, t, k, r)
        a, b = t, 1  # index of a = 1*t + 0, index of b = 0*t + 1
        assert G.element_order(a) == n or n == 1
        conj = G.conj(a, b)
        assert conj == G.power(a, r % n)
        # b^t = a^k
        assert G.power(b, t) == G.power(a, k % n)


def test_bad_presentation():
    with pytest.raises(BadPresentation):
        metacyclic_group(5, 2, 0, 3)  # 3^2 = 4 != 1 mod 5
    with pytest.raises(BadPresentation):
        metacyclic_group(4, 2, 1, 3)  # k(r-1) = 2 != 0 mod 4


def test_known_orders():
    assert S3.order == 6 and D8.order == 8 and Q8.order == 8
    assert d1_group(2).order == 16 and d2_group(3).order == 32
    assert sorted(S3.element_order(g) for g in range(6)) == [1, 2, 2, 2, 3, 3]
    assert sorted(Q8.element_order(g) for g in range(8)) == \
        [1, 2, 4, 4, 4, 4, 4, 4]


def test_table_validation_errors():
    with pytest.raises(NoIdentity):
        FiniteGroup([[1, 0], [0, 1]])
    # Z3 table with a corrupted entry: 0 stays identity, row 2 broken
    with pytest.raises((NotAssociative, NoInverse)):
        FiniteGroup([[0, 1, 2], [1, 2, 0], [2, 0, 1]][:2] + [[2, 1, 0]])


def test_subgroup_closure_and_lattice():
    subs, gens = all_subgroups(D8)
    assert len(subs) == 10
    assert len(normal_subgroups(D8)) == 6
    orders = sorted(H.order for H in subs)
    assert orders == [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]
    # closure of a reflection and the rotation is everything
    assert subgroup_closure(D8, [2, 1]).order == 8


def test_cap_exceeded():
    G = metacyclic_group(12, 1, 0, 1)  # Z_12, few subgroups; cap tiny
    with pytest.raises(CapExceeded):
        all_subgroups(metacyclic_group(16, 4, 0, 3), cap=3)
    subs, _ = all_subgroups(G)
    assert len(subs) == 6  # divisors of 12


def test_center_derived_quotient():
    assert center(S3).order == 1
    assert center(D8).order == 2
    assert center(Q8).order == 2
    assert derived_subgroup(S3).order == 3
    assert derived_subgroup(D8).order == 2
    Q = quotient(D8, derived_subgroup(D8))
    assert Q.order == 4
    assert all(Q.table[i][j] == Q.table[j][i]
               for i in range(4) for j in range(4))  # Klein four
    # trivial-N quotient is the group itself
    assert quotient(S3, Subgroup(S3, (0,))).order == 6


def test_quotient_push_pull():
    N = derived_subgroup(D8)
    Q = quotient(D8, N)
    for g in range(D8.order):
        for h in range(D8.order):
            assert Q.push(D8.table[g][h]) == Q.table[Q.push(g)][Q.push(h)]
    for c in range(Q.order):
        assert Q.push(Q.pull_back(c)) == c
    H = Q.pull_back_subgroup(Subgroup(Q, range(Q.order)))
    assert H.order == D8.order


def test_conjugacy_classes():
    sizes = sorted(len(c) for c in conjugacy_classes(S3))
    assert sizes == [1, 2, 3]
    assert sorted(len(c) for c in conjugacy_classes(Q8)) == [1, 1, 2, 2, 2]
    assert sorted(len(c) for c in conjugacy_classes(D8)) == [1, 1, 2, 2, 2]


def test_normalizer_centralizer_core():
    # <b> in S3 (order 2, index of b is 1)
    H = subgroup_closure(S3, [1])
    assert H.order == 2
    assert normalizer(S3, H).order == 2
    assert centralizer(S3, H).order == 2
    assert core(S3, H).order == 1
    N = subgroup_closure(S3, [2])  # <a>
    assert is_normal(S3, N)
    assert normalizer(S3, N).order == 6
    assert core(S3, N).members == N.members
    # core is the intersection of conjugates
    for G in (S3, D8, Q8):
        for H in all_subgroups(G)[0]:
            C = core(G, H)
            assert is_normal(G, C)
            assert C.member_set <= H.member_set
            for g in range(G.order):
                assert C.member_set <= conjugate_subgroup(G, H, g).member_set


def test_metabelian_detection(s4):
    assert is_metabelian(S3) and is_metabelian(D8) and is_metabelian(Q8)
    assert is_metabelian(d1_group(3)) and is_metabelian(d2_group(2))
    assert not is_metabelian(s4)
    with pytest.raises(NotMetabelian):
        maximal_abelian_over_derived(s4)


def test_maximal_abelian_over_derived():
    A = maximal_abelian_over_derived(S3)
    assert A.order == 3  # <a>
    A8 = maximal_abelian_over_derived(D8)
    assert A8.order == 4
    dmem = derived_subgroup(D8).member_set
    assert dmem <= A8.member_set


def test_d1_structure():
    for m in (2, 3):
        G = d1_group(m)
        t = d1_index(m, 1, 0, 0)
        x = d1_index(m, 0, 1, 0)
        y = d1_index(m, 0, 0, 1)
        assert G.element_order(t) == 1 << m
        assert G.element_order(x) == 2 and G.element_order(y) == 2
        assert G.table[t][x] == G.table[x][t]  # t central against x
        # yx = xy * t^{2^{m-1}}
        z = d1_index(m, 1 << (m - 1), 0, 0)
        assert G.table[y][x] == G.table[G.table[x][y]][z]
        assert derived_subgroup(G).members == (0, z) or \
            derived_subgroup(G).members == tuple(sorted((0, z)))


def test_q8_is_d2_1():
    # <a, b | a^4, b^2 = a^2, b^{-1}ab = a^3> is the quaternion group
    assert Q8.meta["params"] == (4, 2, 2, 3)
    assert sum(1 for g in range(8) if Q8.element_order(g) == 2) == 1


def test_cayley_roundtrip():
    text = format_cayley(S3)
    G = parse_cayley(text)
    assert G.table == S3.table
    assert G.labels == S3.labels


def test_cayley_parse_errors():
    with pytest.raises(ValueError):
        parse_cayley("order two\n")
    with pytest.raises(ValueError):
        parse_cayley("order 2\n0 1\n")
    with pytest.raises(ValueError):
        parse_cayley("order 2\n0 1\n1 2\n")
    with pytest.raises(ValueError):
        parse_cayley("order 2\n0 1\n1 0\nlabel 5 z\n")
    # comments and blank lines are fine
    G = parse_cayley("# Z2\norder 2\n\n0 1\n1 0\nlabel 1 g\n")
    assert G.order == 2 and G.labels[1] == "g"


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 10), st.integers(1, 4))
def test_cyclic_and_abelian_metacyclic(n, t):
    G = metacyclic_group(n, t, 0, 1)  # Z_n x Z_t
    assert G.order == n * t
    assert derived_subgroup(G).order == 1
    assert center(G).order == n * t
