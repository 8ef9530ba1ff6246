"""Finite groups given by concrete generators.

A ``FiniteGroup`` is built by closing a list of generators (permutations,
integer matrices, or matrices over Z/m). After construction only element
indices are used: index 0 is the identity and ``mul[i][j]`` is the index of
the product ``i*j``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

DEFAULT_CAP = 400


class GroupError(ValueError):
    pass


# ------------------------------------------------------------- element kinds

def _perm_mul(p, q):
    # (p*q)(x) = p(q(x)): q acts first, matching matrix products on column vectors
    return tuple(p[i] for i in q)


def _mat_mul(A, B, mod=None):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = sum(A[i][k] * B[k][j] for k in range(n))
            row.append(s % mod if mod else s)
        out.append(tuple(row))
    return tuple(out)


def _normalize(kind: str, x, degree_or_modulus):
    if kind == "permutation":
        p = tuple(int(v) for v in x)
        if sorted(p) != list(range(len(p))):
            raise GroupError(f"not a permutation of 0..{len(p) - 1}: {list(x)}")
        return p
    if kind == "matrix_int":
        return tuple(tuple(int(v) for v in row) for row in x)
    if kind == "matrix_mod":
        m = degree_or_modulus
        return tuple(tuple(int(v) % m for v in row) for row in x)
    raise GroupError(f"unknown element kind {kind!r}")


def _identity(kind, sample, modulus):
    if kind == "permutation":
        return tuple(range(len(sample)))
    n = len(sample)
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _det_mod(M, m):
    from .linalg import det_exact

    return det_exact([list(r) for r in M]) % m


# ------------------------------------------------------------------- groups

@dataclass(eq=False)
class FiniteGroup:
    """A finite group with full multiplication table over element indices."""

    elements: list
    mul: list[list[int]]
    generators: list[int]
    names: list[str] = field(default_factory=list)
    kind: str = "abstract"
    words: list[tuple[tuple[int, int], ...]] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    @cached_property
    def inv(self) -> list[int]:
        out = [0] * self.order
        for i, row in enumerate(self.mul):
            out[i] = row.index(0)
        return out

    @cached_property
    def index_of(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != 0:
            x = self.mul[x][i]
            k += 1
        return k

    def power(self, i: int, k: int) -> int:
        if k < 0:
            i, k = self.inv[i], -k
        x = 0
        for _ in range(k):
            x = self.mul[x][i]
        return x

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.mul[self.mul[g][h]][self.inv[g]]

    @cached_property
    def exponent(self) -> int:
        e = 1
        for i in range(self.order):
            k = self.element_order(i)
            e = e * k // gcd(e, k)
        return e

    # words in the generator names ---------------------------------------

    def word(self, text: str) -> int:
        """Evaluate a word such as ``"a*b^-1"`` or ``"b*(a*b)^2"``."""
        return _WordParser(text, self).parse()

    def word_of(self, i: int) -> str:
        """A shortest word for element ``i`` (as found by breadth-first closure)."""
        if not self.words:
            raise GroupError("group has no generator words")
        w = self.words[i]
        if not w:
            return "1"
        return "*".join(self.names[g] + (f"^{k}" if k != 1 else "") for g, k in w)

    # conjugacy -------------------------------------------------------------

    @cached_property
    def conjugacy_classes(self) -> list[ConjugacyClass]:
        return conjugacy_classes(self)

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * self.order
        for ci, cl in enumerate(self.conjugacy_classes):
            for x in cl.elements:
                out[x] = ci
        return out

    def check_associativity(self, samples: int = 200, seed: int = 0) -> bool:
        import random

        rng = random.Random(seed)
        n = self.order
        m = self.mul
        for _ in range(samples):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if m[m[a][b]][c] != m[a][m[b][c]]:
                return False
        return True


class _WordParser:
    _tok = re.compile(r"\s*(?:(\^)\s*(-?\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\d+)|(.))")

    def __init__(self, text: str, G: FiniteGroup):
        self.G = G
        self.text = text
        self.toks = []
        for m in self._tok.finditer(text):
            if m.group(1):
                self.toks.append(("pow", int(m.group(2))))
            elif m.group(3):
                self.toks.append(("name", m.group(3)))
            elif m.group(4):
                self.toks.append(("num", int(m.group(4))))
            elif m.group(5).strip():
                self.toks.append(("sym", m.group(5)))
        self.pos = 0

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def parse(self) -> int:
        x = self._product()
        if self.pos != len(self.toks):
            raise GroupError(f"trailing input in word {self.text!r}")
        return x

    def _product(self) -> int:
        x = self._factor()
        while True:
            kind, val = self._peek()
            if kind == "sym" and val == "*":
                self.pos += 1
                x = self.G.mul[x][self._factor()]
            elif kind == "name" or (kind == "sym" and val == "("):
                # juxtaposition, as in "ab" written "a b" or "(ab)"
                x = self.G.mul[x][self._factor()]
            else:
                return x

    def _factor(self) -> int:
        kind, val = self._peek()
        self.pos += 1
        if kind == "name":
            if val in ("e", "id") and val not in self.G.names:
                x = 0
            else:
                try:
                    x = self.G.generators[self.G.names.index(val)]
                except ValueError:
                    raise GroupError(f"unknown generator {val!r} in word {self.text!r}") from None
        elif kind == "num" and val == 1:
            x = 0
        elif kind == "sym" and val == "(":
            x = self._product()
            k2, v2 = self._peek()
            if (k2, v2) != ("sym", ")"):
                raise GroupError(f"unbalanced parentheses in {self.text!r}")
            self.pos += 1
        else:
            raise GroupError(f"unexpected token {val!r} in word {self.text!r}")
        kind, val = self._peek()
        if kind == "pow":
            self.pos += 1
            x = self.G.power(x, val)
        return x


def close_generators(
    gens: Sequence,
    kind: str = "permutation",
    modulus: int | None = None,
    names: Sequence[str] | None = None,
    cap: int = DEFAULT_CAP,
) -> FiniteGroup:
    """Close ``gens`` under multiplication, breadth first.

    ``kind`` is ``"permutation"`` (0-based image lists), ``"matrix_int"`` or
    ``"matrix_mod"`` (needs ``modulus``).
    """
    if kind == "matrix_mod" and not modulus:
        raise GroupError("matrix_mod requires a modulus")
    gens = [_normalize(kind, g, modulus) for g in gens]
    names = list(names) if names is not None else [f"g{i}" for i in range(len(gens))]
    if len(names) != len(gens):
        raise GroupError("names and generators differ in length")
    if kind == "permutation":
        if len({len(g) for g in gens}) > 1:
            raise GroupError("permutations of different degrees")
        mul = _perm_mul
    elif kind == "matrix_int":
        mul = _mat_mul
        for g in gens:
            from .linalg import det_exact

            if abs(det_exact([list(r) for r in g])) != 1:
                raise GroupError(f"integer matrix {g} is not invertible over Z")
    else:
        def mul(A, B):
            return _mat_mul(A, B, modulus)

        for g in gens:
            if gcd(_det_mod(g, modulus), modulus) != 1:
                raise GroupError(f"matrix {g} is not invertible mod {modulus}")

    if gens:
        e = _identity(kind, gens[0], modulus)
    elif kind == "permutation":
        e = ()
    else:
        e = ((1,),)
    elements = [e]
    index = {e: 0}
    words: list[tuple] = [()]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for gi, g in enumerate(gens):
            y = mul(elements[i], g)
            if y not in index:
                if len(elements) >= cap:
                    raise GroupError(f"closure exceeds cap of {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                words.append(_extend_word(words[i], gi))
                queue.append(index[y])
    n = len(elements)
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    G = FiniteGroup(
        elements=elements,
        mul=table,
        generators=[index[g] for g in gens],
        names=names,
        kind=kind,
        words=words,
    )
    G.__dict__["index_of"] = index
    assert n == G.order
    return G


def _extend_word(w, gi):
    if w and w[-1][0] == gi:
        return w[:-1] + ((gi, w[-1][1] + 1),)
    return w + ((gi, 1),)


def from_table(mul: list[list[int]], generators: list[int] | None = None) -> FiniteGroup:
    """Group from a Cayley table on indices (identity must be index 0)."""
    n = len(mul)
    if any(mul[0][j] != j or mul[j][0] != j for j in range(n)):
        raise GroupError("index 0 is not the identity")
    return FiniteGroup(elements=list(range(n)), mul=mul, generators=generators or [])


# ---------------------------------------------------------------- subgroups

@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, hash=False, repr=False)
    members: frozenset[int]
    generators: tuple[int, ...] = field(default=(), compare=False, hash=False)

    @property
    def order(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, x):
        return x in self.members

    def __repr__(self):
        gens = ",".join(self.parent.word_of(g) for g in self.generators) if self.parent.words else ""
        return f"Subgroup(order={self.order}, gens=<{gens}>)"


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    elements: tuple[int, ...]
    element_order: int

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    conjugates: tuple[Subgroup, ...]

    @property
    def length(self) -> int:
        return len(self.conjugates)

    @property
    def order(self) -> int:
        return self.representative.order


def generate(G: FiniteGroup, gens: Sequence[int]) -> Subgroup:
    members = {0}
    frontier = [0]
    gens = [g for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, frozenset(members), tuple(gens))


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Element classes, ordered by element order then representative index."""
    seen = [False] * G.order
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cl = sorted({G.conj(g, x) for g in range(G.order)})
        for y in cl:
            seen[y] = True
        classes.append(ConjugacyClass(cl[0], tuple(cl), G.element_order(x)))
    classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
    return classes


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    """g H g^-1."""
    G = H.parent
    return Subgroup(G, frozenset(G.conj(g, h) for h in H.members), tuple(G.conj(g, h) for h in H.generators))


def normalizer(H: Subgroup) -> Subgroup:
    G = H.parent
    return Subgroup(G, frozenset(g for g in range(G.order) if conjugate_subgroup(H, g).members == H.members))


def all_subgroups(G: FiniteGroup, budget: int = 2_000_000) -> list[SubgroupClass]:
    """All subgroups up to conjugacy, by iterated extension of cyclic subgroups.

    Classes are ordered by (order, length, smallest member tuple of the
    canonical representative). ``budget`` bounds the number of element
    multiplications spent on closures.
    """
    n = G.order
    cyclic: dict[frozenset, int] = {}
    for x in range(n):
        c = generate(G, [x]).members
        if c not in cyclic or cyclic[c] > x:
            cyclic[c] = x
    cyclic_list = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), kv[1]))
    found: dict[frozenset, tuple[int, ...]] = {c: ((g,) if g else ()) for c, g in cyclic_list}
    layer = list(found)
    spent = 0
    while layer:
        nxt = []
        for H in layer:
            for C, g in cyclic_list:
                if g in H or C <= H:
                    continue
                gens = found[H] + (g,)
                K = generate(G, gens)
                spent += K.order * len(gens)
                if spent > budget:
                    raise GroupError(f"subgroup enumeration exceeded budget {budget}")
                if K.members not in found:
                    found[K.members] = gens
                    nxt.append(K.members)
        layer = nxt

    classes = []
    assigned: set[frozenset] = set()
    for members in sorted(found, key=lambda m: (len(m), tuple(sorted(m)))):
        if members in assigned:
            continue
        H = Subgroup(G, members, found[members])
        conj = {}
        for g in range(n):
            K = conjugate_subgroup(H, g)
            if K.members not in conj:
                conj[K.members] = Subgroup(G, K.members, found.get(K.members, K.generators))
        conjugates = tuple(sorted(conj.values(), key=lambda K: K.sorted_members()))
        assigned.update(conj)
        classes.append(SubgroupClass(conjugates[0], conjugates))
    for cl in classes:
        assert n % cl.order == 0
    classes.sort(key=lambda c: (c.order, c.length, c.representative.sorted_members()))
    return classes


# ------------------------------------------------------- generating vectors

@dataclass
class GeneratingVectorCheck:
    ok: bool
    failed_condition: str | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_generating_vector(
    G: FiniteGroup, vector: Sequence[int], genus_quotient: int, periods: Sequence[int]
) -> GeneratingVectorCheck:
    """Check generation (i), orders (ii) and the product relation (iii).

    ``vector`` lists ``a_1..a_gamma, b_1..b_gamma, c_1..c_r`` as element indices.
    """
    gam, r = genus_quotient, len(periods)
    if len(vector) != 2 * gam + r:
        return GeneratingVectorCheck(False, "length", f"expected {2 * gam + r} entries, got {len(vector)}")
    if generate(G, vector).order != G.order:
        return GeneratingVectorCheck(False, "i", "entries do not generate the group")
    cs = vector[2 * gam:]
    for k, (c, m) in enumerate(zip(cs, periods)):
        if G.element_order(c) != m:
            return GeneratingVectorCheck(
                False, "ii", f"order(c_{k + 1}) = {G.element_order(c)}, declared {m}"
            )
    prod = 0
    for k in range(gam):
        a, b = vector[k], vector[gam + k]
        comm = G.mul[G.mul[G.mul[a][b]][G.inv[a]]][G.inv[b]]
        prod = G.mul[prod][comm]
    for c in cs:
        prod = G.mul[prod][c]
    if prod != 0:
        return GeneratingVectorCheck(False, "iii", "product relation does not give the identity")
    return GeneratingVectorCheck(True)


def riemann_hurwitz(order_G: int, genus_quotient: int, periods: Sequence[int]) -> int:
    """Genus of X from |G|, the quotient genus and the branching periods."""
    if any(m < 2 for m in periods):
        raise GroupError("periods must be at least 2")
    g = order_G * (genus_quotient - 1) + 1 + Fraction(order_G, 2) * sum(1 - Fraction(1, m) for m in periods)
    if g.denominator != 1 or g < 0:
        raise GroupError(f"signature gives non-integral or negative genus {g}")
    return int(g)
