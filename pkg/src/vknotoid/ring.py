"""Exact arithmetic over Z_m and the formal u-exponent polynomials used by the
bracket invariants.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class RingError(Exception):
    """Base class for ring related failures."""


class ModulusMismatch(RingError):
    """Arithmetic between elements of different moduli."""


class NotAUnit(RingError):
    """Inversion of an element that has no multiplicative inverse."""


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class Modulus:
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("modulus must be >= 2, got %d" % self.m)

    def element(self, value: int) -> "RingElement":
        return RingElement(value % self.m, self)

    def __str__(self) -> str:
        return "Z_%d" % self.m


@dataclass(frozen=True)
class RingElement:
    """A residue in Z_m.  Mixed-modulus arithmetic is rejected."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.m:
            object.__setattr__(self, "value", self.value % self.modulus.m)

    def _coerce(self, other: "RingElement | int") -> "RingElement":
        if isinstance(other, int):
            return self.modulus.element(other)
        if other.modulus.m != self.modulus.m:
            raise ModulusMismatch(
                "mixed moduli: %s vs %s" % (self.modulus, other.modulus))
        return other

    def __add__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        return self.modulus.element(self.value + o.value)

    def __sub__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        return self.modulus.element(self.value - o.value)

    def __mul__(self, other: "RingElement | int") -> "RingElement":
        o = self._coerce(other)
        return self.modulus.element(self.value * o.value)

    def __neg__(self) -> "RingElement":
        return self.modulus.element(-self.value)

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            return inverse(self) ** (-k)
        return self.modulus.element(pow(self.value, k, self.modulus.m))

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return "%d (mod %d)" % (self.value, self.modulus.m)


def inverse(a: RingElement) -> RingElement:
    """Multiplicative inverse in Z_m; raises NotAUnit when gcd(a, m) != 1."""
    g, x, _ = extended_gcd(a.value, a.modulus.m)
    if g != 1:
        raise NotAUnit("%s is not a unit" % a)
    return a.modulus.element(x)


def inverse_mod(value: int, m: int) -> int:
    """Plain-integer convenience wrapper around :func:`inverse`."""
    return inverse(Modulus(m).element(value)).value


@dataclass(frozen=True)
class BracketPolynomial:
    """Formal multiset of exponents: sum of u^r terms with multiplicities.

    Exponents are residues mod m, so u^a and u^b collide exactly when
    a == b in Z_m.  The total multiplicity equals the number of colorings
    that contributed.
    """

    modulus: Modulus
    terms: tuple[tuple[int, int], ...] = field(default=())

    @staticmethod
    def from_dict(modulus: Modulus, terms: dict[int, int]) -> "BracketPolynomial":
        norm: dict[int, int] = {}
        for e, mult in terms.items():
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                norm[e % modulus.m] = norm.get(e % modulus.m, 0) + mult
        return BracketPolynomial(modulus, tuple(sorted(norm.items(), reverse=True)))

    @staticmethod
    def zero(modulus: Modulus) -> "BracketPolynomial":
        return BracketPolynomial(modulus, ())

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)


def poly_add(p: BracketPolynomial, q: BracketPolynomial) -> BracketPolynomial:
    """Termwise multiplicity sum; result is canonical (no zero terms)."""
    if p.modulus.m != q.modulus.m:
        raise ModulusMismatch("polynomials over %s and %s" % (p.modulus, q.modulus))
    acc = p.as_dict()
    for e, mult in q.terms:
        acc[e] = acc.get(e, 0) + mult
    return BracketPolynomial.from_dict(p.modulus, acc)


def poly_render(p: BracketPolynomial) -> str:
    """Canonical text form: descending exponents, unit multiplicities omitted,
    exponent 1 written "u", exponent 0 written as a bare integer, empty "0"."""
    if not p.terms:
        return "0"
    parts = []
    for e, mult in p.terms:
        if e == 0:
            parts.append(str(mult))
            continue
        head = "" if mult == 1 else str(mult)
        parts.append(head + ("u" if e == 1 else "u^%d" % e))
    return "+".join(parts)


_TERM_RE = re.compile(r"^(\d+)?(u(\^(\d+))?)?$")


def poly_parse(text: str, modulus: Modulus) -> BracketPolynomial:
    """Parse the poly_render grammar back into a polynomial."""
    text = text.strip()
    if text == "0":
        return BracketPolynomial.zero(modulus)
    acc: dict[int, int] = {}
    for raw in text.split("+"):
        m = _TERM_RE.match(raw.strip())
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError("bad polynomial term: %r" % raw)
        mult = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            expo = 0
        elif m.group(4) is None:
            expo = 1
        else:
            expo = int(m.group(4))
        acc[expo % modulus.m] = acc.get(expo % modulus.m, 0) + mult
    return BracketPolynomial.from_dict(modulus, acc)
