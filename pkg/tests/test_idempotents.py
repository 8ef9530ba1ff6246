from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jdec import linalg as la
from jdec.characters import fixed_dim, galois_orbits
from jdec.groups import Subgroup, all_subgroups, conjugate_subgroup, generate
from jdec.idempotents import (
    ONE,
    GroupAlgebraElement,
    RepError,
    SymplecticRep,
    central_idempotent,
    f_H_i,
    image_lattice,
    is_symplectic,
    p_H,
    quotient_genus,
    rho,
    standard_form,
)
from tests.conftest import make_d4, make_s4, s4_cube_rep


def _cases():
    G, T, R = make_d4()
    yield "d4", R, T
    Gs, Ts = make_s4()
    yield "s4", s4_cube_rep(Gs), Ts


@pytest.fixture(scope="module")
def reps(gl23):
    out = {"gl23": (gl23.rep, gl23.table)}
    for name, R, T in _cases():
        out[name] = (R, T)
    return out


@pytest.fixture(scope="module")
def subgroups(reps):
    return {k: [H for c in all_subgroups(R.group) for H in c.conjugates] for k, (R, _) in reps.items()}


def elem(d):
    return GroupAlgebraElement.from_dict(d)


def test_rep_checks(reps):
    for R, _ in reps.values():
        assert R.check() == []
        E = R.form
        for M in R.matrices:
            assert is_symplectic(M, E)


def test_rep_rejects_non_homomorphism(gl23):
    R = gl23.rep
    bad = SymplecticRep(R.group, 2, [R.images[0], R.images[0]])
    assert bad.check()
    bad = SymplecticRep(R.group, 2, [la.identity(4), [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]])
    assert any("symplectic" in e for e in bad.check())


def test_rho_homomorphism_exhaustive(reps):
    n = 0
    for R, _ in reps.values():
        G, M = R.group, R.matrices
        for x, y in product(range(G.order), repeat=2):
            assert la.matmul(M[x], M[y]) == M[G.mul[x][y]]
            n += 1
    assert n >= 48 * 48


coef = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@settings(max_examples=300)
@given(st.data())
def test_rho_algebra_homomorphism(reps, data):
    R, _ = reps[data.draw(st.sampled_from(sorted(reps)))]
    n = R.group.order
    supp = st.dictionaries(st.integers(0, n - 1), coef, max_size=4)
    a, b = elem(data.draw(supp)), elem(data.draw(supp))
    assert rho(R, a.mul(b, R.group)) == la.matmul(rho(R, a), rho(R, b))
    assert rho(R, a.add(b)) == la.matadd(rho(R, a), rho(R, b))


def test_p_H_idempotent_all_subgroups(reps, subgroups):
    count = 0
    for key, (R, _) in reps.items():
        for H in subgroups[key]:
            P = rho(R, p_H(H))
            assert la.matmul(P, P) == P
            # image is fixed by every element of H
            for h in H.members:
                assert la.matmul(R.matrices[h], P) == P
            count += 1
    assert count >= 55


def test_central_idempotents(reps):
    for R, T in reps.values():
        G = R.group
        W = galois_orbits(T)
        es = [central_idempotent(w, G, T.column_of) for w in W]
        total = es[0]
        for e in es[1:]:
            total = total.add(e)
        assert total == ONE
        for i, j in product(range(len(es)), repeat=2):
            prod_ = es[i].mul(es[j], G)
            assert prod_ == (es[i] if i == j else elem({}))
        for e in es:
            for g in G.generators:
                ge = elem({g: 1}).mul(e, G)
                eg = e.mul(elem({g: 1}), G)
                assert ge == eg
        # and on the lattice
        mats = [rho(R, e) for e in es]
        I = la.to_rat(la.identity(R.dim))
        acc = mats[0]
        for M in mats[1:]:
            acc = la.matadd(acc, M)
        assert acc == I
        for M in mats:
            assert la.matmul(M, M) == M
            for g in G.generators:
                assert la.matmul(R.matrices[g], M) == la.matmul(M, R.matrices[g])


def test_conjugation_transport(reps, subgroups):
    for key, (R, _) in reps.items():
        G = R.group
        for H in subgroups[key]:
            P = rho(R, p_H(H))
            for g in range(G.order):
                K = conjugate_subgroup(H, g)
                Mg = R.matrices[g]
                Mginv = R.matrices[G.inv[g]]
                assert rho(R, p_H(K)) == la.matmul(la.matmul(Mg, P), Mginv)


def test_f_H_sum_is_p_H(reps, subgroups):
    for key, (R, T) in reps.items():
        G = R.group
        W = galois_orbits(T)
        es = [central_idempotent(w, G, T.column_of) for w in W]
        for H in subgroups[key][:: max(1, len(subgroups[key]) // 12)]:
            acc = elem({})
            for e in es:
                acc = acc.add(f_H_i(H, e))
            assert acc == p_H(H)


def test_quotient_genus_vs_trace(reps, subgroups):
    for key, (R, _) in reps.items():
        for H in subgroups[key]:
            tr = sum(sum(Fraction(R.matrices[h][i][i]) for i in range(R.dim)) for h in H.members) / H.order
            assert quotient_genus(R, H) * 2 == tr


def test_gl23_quotients(gl23):
    R, G = gl23.rep, gl23.group
    whole = Subgroup(G, frozenset(range(G.order)))
    assert quotient_genus(R, whole) == 0
    assert quotient_genus(R, generate(G, [])) == 2
    assert quotient_genus(R, generate(G, [G.word("a*b")])) == 1
    assert quotient_genus(R, generate(G, [G.word("a^4")])) == 0  # hyperelliptic involution


def test_published_idempotent_matrices(gl23, gl23_published):
    R, G = gl23.rep, gl23.group
    for key, word in gl23_published["subgroups"].items():
        H = generate(G, [G.word(word)])
        assert rho(R, p_H(H)) == gl23_published["matrices"][key]
        assert image_lattice(R, p_H(H)).lattice.matrix() == gl23_published["lattices"][key]


def test_conjugate_subgroup_convention(gl23):
    # <b a^7 b> is the conjugate of <ab> by b^-1 under g H g^-1
    G = gl23.group
    H = generate(G, [G.word("a*b")])
    K = conjugate_subgroup(H, G.word("b^-1"))
    assert K.members == generate(G, [G.word("b*a^7*b")]).members


def test_image_lattice_rejects_non_idempotent(gl23):
    R = gl23.rep
    with pytest.raises(RepError):
        image_lattice(R, elem({R.group.word("a"): 1}))


def test_standard_form():
    E = standard_form(2)
    assert E == [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]


def test_lattice_transport(reps, subgroups):
    for key, (R, _) in reps.items():
        G = R.group
        for H in subgroups[key][:: max(1, len(subgroups[key]) // 10)]:
            B = image_lattice(R, p_H(H)).lattice.matrix()
            for g in range(G.order):
                moved = la.transpose(la.matmul(R.matrices[g], la.transpose(B))) if B else []
                K = conjugate_subgroup(H, g)
                assert la.saturate(moved, R.dim) == image_lattice(R, p_H(K)).lattice
                # unimodular image of a saturated lattice is already saturated
                if moved:
                    assert la.hnf(moved)[0][: len(B)] == image_lattice(R, p_H(K)).lattice.matrix()


def test_isotypical_ranks_add_up(reps):
    for R, T in reps.values():
        W = galois_orbits(T)
        ranks = [la.rank(rho(R, central_idempotent(w, R.group, T.column_of))) for w in W]
        assert sum(ranks) == R.dim


def test_f_H_rank_formula(reps, subgroups):
    # rank rho(f_H^i) = (dim V_i^H / m_i) * rank rho(e_i) / n_i
    for key, (R, T) in reps.items():
        G = R.group
        W = galois_orbits(T)
        es = [central_idempotent(w, G, T.column_of) for w in W]
        ranks = [la.rank(rho(R, e)) for e in es]
        for H in subgroups[key]:
            for w, e, r in zip(W, es, ranks):
                got = la.rank(rho(R, f_H_i(H, e)))
                fd = fixed_dim(T, w.representative, H)
                assert got * w.n_factors * w.schur_index == fd * r
                assert (got == 0) == (fd == 0 or r == 0)
