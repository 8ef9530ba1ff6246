"""Character tables with exact cyclotomic values.

Tables are input data. Columns are tied to conjugacy classes of a concrete
group through representative words, so that every element can be looked up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .cyclotomic import Cyclotomic, parse_cyclotomic
from .groups import FiniteGroup, Subgroup, SubgroupClass


class CharacterError(ValueError):
    pass


@dataclass
class Diagnostics:
    ok: bool = True
    messages: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.messages.append(msg)

    def __bool__(self):
        return self.ok


@dataclass(eq=False)
class CharacterTable:
    group: FiniteGroup
    conductor: int
    class_words: list[str]
    class_sizes: list[int]
    class_orders: list[int]
    names: list[str]
    values: list[list[Cyclotomic]]
    schur_index: list[int]
    # column index for every group element
    column_of: list[int] = field(repr=False, default_factory=list)

    @property
    def degrees(self) -> list[int]:
        return [int(row[0].to_rational()) for row in self.values]

    @property
    def n_chars(self) -> int:
        return len(self.values)

    def value(self, i: int, element: int) -> Cyclotomic:
        return self.values[i][self.column_of[element]]


@dataclass(frozen=True)
class RationalCharacter:
    """A Galois orbit of complex irreducibles; values are the orbit trace."""

    orbit: tuple[int, ...]
    values: tuple[Fraction, ...]
    degree: int
    schur_index: int
    name: str

    @property
    def n_factors(self) -> int:
        # number of factors B_ij, dim V / m
        return self.degree // self.schur_index

    @property
    def representative(self) -> int:
        return self.orbit[0]


def build_table(
    G: FiniteGroup,
    conductor: int,
    classes: Sequence[dict],
    characters: Sequence[dict],
) -> CharacterTable:
    """Assemble a table from schema dicts and tie columns to group classes.

    Raises ``CharacterError`` when a column cannot be matched to a class of
    ``G`` (wrong word, size or element order) or two columns hit one class.
    """
    gclasses = G.conjugacy_classes
    if len(classes) != len(gclasses):
        raise CharacterError(f"table has {len(classes)} classes, group has {len(gclasses)}")
    column_of = [-1] * G.order
    words, sizes, orders = [], [], []
    used = set()
    for col, c in enumerate(classes):
        x = G.word(str(c["rep"]))
        ci = G.class_of[x]
        gc = gclasses[ci]
        if ci in used:
            raise CharacterError(f"class column {col} ({c['rep']}) repeats an earlier class")
        used.add(ci)
        if gc.size != c["size"]:
            raise CharacterError(f"class column {col} ({c['rep']}): size {gc.size}, table says {c['size']}")
        if gc.element_order != c["order"]:
            raise CharacterError(
                f"class column {col} ({c['rep']}): element order {gc.element_order}, table says {c['order']}"
            )
        for y in gc.elements:
            column_of[y] = col
        words.append(str(c["rep"]))
        sizes.append(gc.size)
        orders.append(gc.element_order)
    names, values, schur = [], [], []
    for k, ch in enumerate(characters):
        row = [parse_cyclotomic(v, conductor) for v in ch["values"]]
        if len(row) != len(classes):
            raise CharacterError(f"character {ch.get('name', k)} has {len(row)} values")
        names.append(ch.get("name", f"V{k + 1}"))
        values.append(row)
        schur.append(int(ch.get("schur_index", 1)))
    return CharacterTable(G, conductor, words, sizes, orders, names, values, schur, column_of)


def validate_table(T: CharacterTable) -> Diagnostics:
    """Row and column orthogonality, degree-square sum, identity column."""
    d = Diagnostics()
    G = T.group
    n = T.n_chars
    k = len(T.class_sizes)
    if n != k:
        d.fail(f"{n} characters for {k} classes")
        return d
    if T.column_of[0] != 0 or T.class_orders[0] != 1:
        d.fail("first column must be the identity class")
        return d
    for i, row in enumerate(T.values):
        if not row[0].is_rational() or row[0].to_rational() <= 0 or row[0].to_rational().denominator != 1:
            d.fail(f"{T.names[i]}: value at identity is not a positive integer")
            return d
    if sum(x * x for x in T.degrees) != G.order:
        d.fail(f"degree squares sum to {sum(x * x for x in T.degrees)}, |G| = {G.order}")
    conj = [[v.conjugate() for v in row] for row in T.values]
    for i in range(n):
        for j in range(i, n):
            s = sum((size * a * b for size, a, b in zip(T.class_sizes, T.values[i], conj[j])), Cyclotomic.rational(T.conductor, 0))
            want = G.order if i == j else 0
            if s != want:
                d.fail(f"row orthogonality fails for ({T.names[i]}, {T.names[j]}): sum = {s}, expected {want}")
    for a in range(k):
        for b in range(a, k):
            s = sum((T.values[i][a] * conj[i][b] for i in range(n)), Cyclotomic.rational(T.conductor, 0))
            want = Fraction(G.order, T.class_sizes[a]) if a == b else 0
            if s != want:
                d.fail(f"column orthogonality fails for classes ({T.class_words[a]}, {T.class_words[b]})")
    for i, m in enumerate(T.schur_index):
        if m < 1 or T.degrees[i] % m:
            d.fail(f"{T.names[i]}: Schur index {m} does not divide degree {T.degrees[i]}")
    return d


def galois_orbits(T: CharacterTable) -> list[RationalCharacter]:
    n = T.conductor
    lookup = {tuple(row): i for i, row in enumerate(T.values)}
    seen: set[int] = set()
    out = []
    for i, row in enumerate(T.values):
        if i in seen:
            continue
        orbit = set()
        for k in range(1, n + 1):
            if gcd(k, n) != 1:
                continue
            img = tuple(v.galois(k) for v in row)
            j = lookup.get(img)
            if j is None:
                raise CharacterError(f"Galois conjugate of {T.names[i]} by zeta -> zeta^{k} is not in the table")
            orbit.add(j)
        orbit = tuple(sorted(orbit))
        seen.update(orbit)
        vals = []
        for c in range(len(row)):
            s = sum((T.values[j][c] for j in orbit), Cyclotomic.rational(n, 0))
            if not s.is_rational():
                raise CharacterError(f"orbit {orbit} has irrational trace at class {T.class_words[c]}")
            vals.append(s.to_rational())
        degs = {T.degrees[j] for j in orbit}
        schurs = {T.schur_index[j] for j in orbit}
        if len(degs) != 1 or len(schurs) != 1:
            raise CharacterError(f"orbit {orbit} mixes degrees or Schur indices")
        out.append(
            RationalCharacter(
                orbit=orbit,
                values=tuple(vals),
                degree=degs.pop(),
                schur_index=schurs.pop(),
                name="+".join(T.names[j] for j in orbit),
            )
        )
    return out


def fixed_dim(T: CharacterTable, i: int, H: Subgroup) -> int:
    """dim V_i^H = <Ind_H^G 1, V_i>, as the average of chi_i over H."""
    s = sum((T.value(i, h) for h in H.members), Cyclotomic.rational(T.conductor, 0))
    if not s.is_rational():
        raise CharacterError(f"character sum of {T.names[i]} over subgroup is not rational")
    q = s.to_rational() / H.order
    if q.denominator != 1 or q < 0:
        raise CharacterError(f"dim {T.names[i]}^H = {q} is not a nonnegative integer; table and group disagree")
    return int(q)


def induced_table(T: CharacterTable, classes: Sequence[SubgroupClass]) -> list[list[int]]:
    """Multiplicities of each irreducible in Ind_H^G 1, one row per class."""
    return [[fixed_dim(T, i, cl.representative) for i in range(T.n_chars)] for cl in classes]
