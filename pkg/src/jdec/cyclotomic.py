"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are coefficient vectors in the power basis 1, z, ..., z^(phi(n)-1),
reduced modulo the n-th cyclotomic polynomial.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, coefficients low degree first; den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod(p, list(cyclotomic_poly(d)))
            assert not any(rem)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # row k = reduction of z^k, k in [0, n)
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for j in range(deg):
                nxt[j] -= top * phi[j]
        cur = nxt
    return tuple(rows)


class Cyclotomic:
    """An element of Q(zeta_n); immutable, exact."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        deg = len(cyclotomic_poly(n)) - 1
        if coeffs is None:
            coeffs = [0] * deg
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for conductor {n}, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def rational(cls, n: int, q) -> Cyclotomic:
        c = [Fraction(0)] * (len(cyclotomic_poly(n)) - 1)
        c[0] = Fraction(q)
        return cls(n, c)

    @classmethod
    def zeta_power(cls, n: int, k: int) -> Cyclotomic:
        return cls(n, _power_table(n)[k % n])

    @classmethod
    def from_exponents(cls, n: int, terms: dict[int, Fraction | int]) -> Cyclotomic:
        """Build sum c_k z^k from a map k -> c_k (k taken mod n)."""
        table = _power_table(n)
        acc = [Fraction(0)] * (len(cyclotomic_poly(n)) - 1)
        for k, c in terms.items():
            if c:
                for j, v in enumerate(table[k % n]):
                    acc[j] += c * v
        return cls(n, acc)

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError("mixed conductors")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.n, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        table = _power_table(self.n)
        deg = len(self.coeffs)
        acc = [Fraction(0)] * deg
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    ab = a * b
                    for k, v in enumerate(table[(i + j) % self.n]):
                        if v:
                            acc[k] += ab * v
        return Cyclotomic(self.n, acc)

    __rmul__ = __mul__

    def galois(self, k: int) -> Cyclotomic:
        """Image under the automorphism z -> z^k (k coprime to n)."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"{k} is not coprime to {self.n}")
        return Cyclotomic.from_exponents(self.n, {i * k: c for i, c in enumerate(self.coeffs)})

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1 % self.n) if self.n > 1 else self

    def trace(self) -> Fraction:
        """Trace from Q(zeta_n) down to Q."""
        # Tr(z^k) is the Ramanujan sum c_n(k)
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                total += c * _ramanujan(self.n, k)
        return total

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.n}, {format_cyclotomic(self)!r})"

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))


@lru_cache(maxsize=None)
def _ramanujan(n: int, k: int) -> Fraction:
    total = Cyclotomic.rational(n, 0)
    for j in range(1, n + 1):
        if gcd(j, n) == 1:
            total = total + Cyclotomic.zeta_power(n, j * k)
    return total.to_rational()


_TERM = re.compile(
    r"""^\s*(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*
        (?:zeta(?P<n>\d+)|z)(?:\s*\^\s*(?P<exp>-?\d+))?\s*$""",
    re.X,
)
_NUM = re.compile(r"^\s*(\d+(?:/\d+)?)\s*$")


def parse_cyclotomic(text: str | int, n: int) -> Cyclotomic:
    """Parse expressions like ``"zeta8 + zeta8^3"``, ``"-2"``, ``"1/2*zeta3^2 - 1"``.

    Every ``zetaM`` must have M dividing the conductor ``n``.
    """
    if isinstance(text, int):
        return Cyclotomic.rational(n, text)
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic expression")
    # collapse runs of signs, "1+-zeta8" -> "1-zeta8"
    s = re.sub(r"[+-]{2,}", lambda m: "-" if m.group().count("-") % 2 else "+", s)
    terms: dict[int, Fraction] = {}
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse {text!r}")
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        m = _NUM.match(body)
        if m:
            terms[0] = terms.get(0, Fraction(0)) + sign * Fraction(m.group(1))
            continue
        m = _TERM.match(body)
        if not m:
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        order = int(m.group("n")) if m.group("n") else n
        if n % order:
            raise ValueError(f"zeta{order} not in Q(zeta{n})")
        exp = int(m.group("exp")) if m.group("exp") else 1
        k = (exp * (n // order)) % n
        terms[k] = terms.get(k, Fraction(0)) + sign * coef
    return Cyclotomic.from_exponents(n, terms)


def format_cyclotomic(x: Cyclotomic) -> str:
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            base = f"zeta{x.n}" + (f"^{k}" if k > 1 else "")
            body = base if mag == 1 else f"{mag}*{base}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
