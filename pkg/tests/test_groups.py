from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jdec.groups import (
    GroupError,
    all_subgroups,
    close_generators,
    conjugacy_classes,
    conjugate_subgroup,
    generate,
    normalizer,
    riemann_hurwitz,
    validate_generating_vector,
)
from tests.conftest import make_a4, make_d4, make_s4


def naive_closure(G, gens):
    S = {0} | set(gens)
    while True:
        new = {G.mul[a][b] for a in S for b in S} - S
        if not new:
            return frozenset(S)
        S |= new


def test_gl23_order_and_relations(gl23):
    G = gl23.group
    assert G.order == 48
    for rel in ("a^8", "b^3", "(a*b)^2", "b*a^-3*b*a^-3"):
        assert G.word(rel) == 0
    assert G.element_order(G.word("a")) == 8


def test_gl23_classes(gl23):
    cls = conjugacy_classes(gl23.group)
    assert sorted((c.element_order, c.size) for c in cls) == [
        (1, 1), (2, 1), (2, 12), (3, 8), (4, 6), (6, 8), (8, 6), (8, 6)
    ]
    assert sum(c.size for c in cls) == 48


def test_gl23_subgroup_classes(gl23):
    classes = all_subgroups(gl23.group)
    assert len(classes) == 16
    assert sum(c.length for c in classes) == 55
    assert [(c.order, c.length) for c in classes] == [
        (1, 1), (2, 1), (2, 12), (3, 4), (4, 3), (4, 6), (6, 4), (6, 4), (6, 4),
        (8, 1), (8, 3), (8, 3), (12, 4), (16, 3), (24, 1), (48, 1),
    ]
    for c in classes:
        assert c.length * normalizer(c.representative).order == 48


@pytest.mark.parametrize("maker,n_classes,n_total", [(make_d4, 8, 10), (make_a4, 5, 10), (make_s4, 11, 30)])
def test_small_subgroups_vs_pair_closure(maker, n_classes, n_total):
    G = maker()[0]
    classes = all_subgroups(G)
    found = {K.members for c in classes for K in c.conjugates}
    # every subgroup of these groups is 2-generated
    oracle = {naive_closure(G, [x, y]) for x, y in product(range(G.order), repeat=2)}
    assert found == oracle
    assert len(classes) == n_classes and len(found) == n_total


def test_cyclic_group_c4():
    G = close_generators([[1, 2, 3, 0]], names=["a"])
    classes = all_subgroups(G)
    assert [(c.order, c.length) for c in classes] == [(1, 1), (2, 1), (4, 1)]


@settings(max_examples=300)
@given(st.data())
def test_conjugation_is_subgroup(data):
    G = make_s4()[0]
    x = data.draw(st.integers(0, G.order - 1))
    g = data.draw(st.integers(0, G.order - 1))
    H = generate(G, [x])
    K = conjugate_subgroup(H, g)
    assert K.order == H.order
    assert K.members == naive_closure(G, [G.conj(g, x)])
    # g H g^-1 as a product of elements
    assert K.members == frozenset(G.mul[G.mul[g][h]][G.inv[g]] for h in H.members)


def test_word_parser(gl23):
    G = gl23.group
    a, b = G.word("a"), G.word("b")
    assert G.word("a*b") == G.mul[a][b]
    assert G.word("a b") == G.mul[a][b]
    assert G.word("b^-1") == G.inv[b]
    assert G.word("(a*b)^2") == 0
    assert G.word("1") == 0
    for i in range(G.order):
        assert G.word(G.word_of(i)) == i
    with pytest.raises(GroupError):
        G.word("c")


def test_matrix_groups():
    # SL(2,3) as matrices mod 3
    G = close_generators([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], kind="matrix_mod", modulus=3)
    assert G.order == 24
    G = close_generators([[[0, -1], [1, 0]]], kind="matrix_int")
    assert G.order == 4
    with pytest.raises(GroupError):
        close_generators([[[2, 0], [0, 1]]], kind="matrix_int")


def test_cap():
    with pytest.raises(GroupError):
        close_generators([[1, 2, 3, 4, 5, 6, 0], [1, 0, 2, 3, 4, 5, 6]], cap=100)


def test_generating_vector(gl23):
    G = gl23.group
    a, b, ab = G.word("a"), G.word("b"), G.word("a*b")
    gam, elems, periods = gl23.generating_vector()
    assert validate_generating_vector(G, elems, gam, periods).ok
    bad = validate_generating_vector(G, [a, b, ab], 0, [8, 3, 4])
    assert bad.failed_condition == "ii"
    bad = validate_generating_vector(G, [a, a, a], 0, [8, 8, 8])
    assert bad.failed_condition == "i"
    bad = validate_generating_vector(G, [a, b, G.word("b*a")], 0, [8, 3, 2])
    assert bad.failed_condition == "iii"


@pytest.mark.parametrize(
    "n,gam,periods,g",
    [
        (48, 0, [8, 3, 2], 2),
        (4, 0, [2, 2, 2, 2, 2], 2),
        (2, 0, [2] * 6, 2),
        (1, 3, [], 3),
        (6, 1, [], 1),
    ],
)
def test_riemann_hurwitz(n, gam, periods, g):
    assert riemann_hurwitz(n, gam, periods) == g


def test_riemann_hurwitz_rejects():
    with pytest.raises(GroupError):
        riemann_hurwitz(48, 0, [2, 3])
    with pytest.raises(GroupError):
        riemann_hurwitz(5, 0, [2, 3, 7])
