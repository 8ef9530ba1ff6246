import os
from fractions import Fraction

import pytest
from hypothesis import settings

from jdec.characters import build_table
from jdec.groups import close_generators
from jdec.idempotents import SymplecticRep
from jdec.io import fixture_path, load_bundle, read_json

settings.register_profile("default", deadline=None)
settings.register_profile("quick", deadline=None, max_examples=50)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# acceptance lines collected by test_acceptance, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])


def _cls(rep, size, order):
    return {"rep": rep, "size": size, "order": order}


def _chars(rows, names=None):
    return [
        {"name": (names[k] if names else f"V{k + 1}"), "schur_index": 1, "values": [str(v) for v in row]}
        for k, row in enumerate(rows)
    ]


def make_d4():
    G = close_generators([[1, 2, 3, 0], [0, 3, 2, 1]], kind="permutation", names=["r", "s"])
    classes = [_cls("1", 1, 1), _cls("r^2", 1, 2), _cls("s", 2, 2), _cls("r*s", 2, 2), _cls("r", 2, 4)]
    rows = [
        [1, 1, 1, 1, 1],
        [1, 1, -1, -1, 1],
        [1, 1, 1, -1, -1],
        [1, 1, -1, 1, -1],
        [2, -2, 0, 0, 0],
    ]
    T = build_table(G, 1, classes, _chars(rows))
    # M + M^*, M the reflection rep on Z^2
    r = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    s = [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]
    return G, T, SymplecticRep(G, 2, [r, s])


def make_a4():
    G = close_generators([[1, 2, 0, 3], [1, 0, 3, 2]], kind="permutation", names=["a", "b"])
    classes = [_cls("1", 1, 1), _cls("b", 3, 2), _cls("a", 4, 3), _cls("a^2", 4, 3)]
    rows = [
        ["1", "1", "1", "1"],
        ["1", "1", "zeta3", "zeta3^2"],
        ["1", "1", "zeta3^2", "zeta3"],
        ["3", "-1", "0", "0"],
    ]
    return G, build_table(G, 3, classes, _chars(rows))


def make_s4():
    G = close_generators([[1, 2, 3, 0], [1, 0, 2, 3]], kind="permutation", names=["a", "b"])
    classes = [_cls("1", 1, 1), _cls("a^2", 3, 2), _cls("b", 6, 2), _cls("a*b", 8, 3), _cls("a", 6, 4)]
    rows = [
        [1, 1, 1, 1, 1],
        [1, 1, -1, 1, -1],
        [2, 2, 0, -1, 0],
        [3, -1, 1, 0, -1],
        [3, -1, -1, 0, 1],
    ]
    return G, build_table(G, 1, classes, _chars(rows))


def s4_cube_rep(G):
    """S4 as rotations of the cube acting on Z^3 + dual, genus 3."""
    Pa = [[0, -1, 0], [1, 0, 0], [0, 0, 1]]
    Pb = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]

    def dsum(P):
        # P orthogonal, so P^{-T} = P
        n = len(P)
        M = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                M[i][j] = P[i][j]
                M[n + i][n + j] = P[i][j]
        return M

    return SymplecticRep(G, 3, [dsum(Pa), dsum(Pb)])


@pytest.fixture(scope="session")
def gl23():
    return load_bundle(fixture_path("gl23_group.json"), fixture_path("gl23_chars.json"), fixture_path("gl23_rep.json"))


@pytest.fixture(scope="session")
def gl23_published():
    d = read_json(fixture_path("gl23_idempotents.json"))
    d["matrices"] = {k: [[Fraction(x) for x in row] for row in M] for k, M in d["matrices"].items()}
    return d


@pytest.fixture(scope="session")
def d4():
    return make_d4()


@pytest.fixture(scope="session")
def a4():
    return make_a4()


@pytest.fixture(scope="session")
def s4():
    return make_s4()
