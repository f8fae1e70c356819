"""Exact rational and lattice arithmetic.

Everything downstream works over Q with arbitrary precision: rationals are
``fractions.Fraction``, lattice vectors and covectors are tuples.  No floats
anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


Rat = Fraction


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if not re.fullmatch(r"-?\d+(/\d+)?", x.strip()):
            raise ValueError(f"not a rational literal: {x!r}")
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rat_str(x: Fraction) -> str:
    """Canonical JSON encoding: "num/den", or just "num" for integers."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(coords) -> tuple:
    return tuple(rat(c) for c in coords)


def ivec(coords) -> tuple:
    out = []
    for c in coords:
        c = rat(c)
        if c.denominator != 1:
            raise ValueError(f"lattice vector entry {c} is not an integer")
        out.append(c.numerator)
    return tuple(out)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(k, v):
    return tuple(k * a for a in v)


def pairing(alpha, x) -> Fraction:
    """<alpha, x> for a covector alpha and a vector x."""
    return sum((Fraction(a) * Fraction(b) for a, b in zip(alpha, x, strict=True)),
               Fraction(0))


def is_lattice(v) -> bool:
    return all(Fraction(c).denominator == 1 for c in v)


def primitivize(v) -> tuple:
    """Normal form of a nonzero integer covector.

    Divides by the gcd and forces the first nonzero coefficient positive, so
    every rational ray has exactly one representative.
    """
    v = tuple(int(c) for c in v)
    if all(c == 0 for c in v):
        raise ValueError("degenerate wall: zero covector")
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    v = tuple(c // g for c in v)
    lead = next(c for c in v if c != 0)
    if lead < 0:
        v = tuple(-c for c in v)
    return v


def is_saturated(s) -> bool:
    """True if integer gaps inside the set are filled: z, z+n in S forces
    z+1, ..., z+n-1 in S."""
    s = {rat(x) for x in s}
    for z in s:
        for w in s:
            d = w - z
            if d.denominator == 1 and d > 1:
                if any(z + j not in s for j in range(1, d.numerator)):
                    return False
    return True


def saturate(s) -> frozenset:
    """Smallest saturated superset of a finite set of rationals.

    Elements split into Z-cosets; within each coset the integer gap between
    the minimum and the maximum is filled.
    """
    s = {rat(x) for x in s}
    by_class: dict[Fraction, list[Fraction]] = {}
    for x in s:
        by_class.setdefault(x - x.numerator // x.denominator, []).append(x)
    out = set()
    for elems in by_class.values():
        lo, hi = min(elems), max(elems)
        steps = int(hi - lo)
        out.update(lo + j for j in range(steps + 1))
        out.update(elems)
    return frozenset(out)


@dataclass(frozen=True)
class Wall:
    """A wall Gamma: a primitive integer covector with a finite saturated
    set of rational shifts.  The hyperplane family of the wall is
    <alpha, .> = m for m congruent mod Z to an element of sigma_tilde."""

    id: int
    alpha: tuple
    sigma_tilde: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "alpha", primitivize(self.alpha))
        st = frozenset(rat(x) for x in self.sigma_tilde)
        if not st:
            raise ValueError(f"wall {self.id}: sigma_tilde must be nonempty")
        if not is_saturated(st):
            raise ValueError(f"wall {self.id}: sigma_tilde is not saturated")
        object.__setattr__(self, "sigma_tilde", st)

    @property
    def classes(self) -> frozenset:
        """Sigma_Gamma: classes of sigma_tilde in Q/Z, as representatives in [0,1)."""
        return frozenset(x - (x.numerator // x.denominator) for x in self.sigma_tilde)

    def class_part(self, m) -> list[Fraction]:
        """Elements of sigma_tilde in the Z-coset of m (sorted, possibly empty)."""
        m = rat(m)
        return sorted(x for x in self.sigma_tilde if (m - x).denominator == 1)

    def on_class(self, value) -> bool:
        """Whether a pairing value lies on the wall's hyperplane family."""
        value = rat(value)
        return any((value - c).denominator == 1 for c in self.classes)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "alpha": list(self.alpha),
            "sigma_tilde": sorted(rat_str(x) for x in self.sigma_tilde),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Wall":
        return cls(id=int(data["id"]), alpha=tuple(int(a) for a in data["alpha"]),
                   sigma_tilde=frozenset(rat(x) for x in data["sigma_tilde"]))


@dataclass(frozen=True, order=False)
class AffineInP:
    """An exact affine function a + b*p of a symbolic (large) prime p.

    Comparison is the "for all p >> 0" order: by slope first, then by the
    constant term.  Use eval_at for a concrete prime.
    """

    const: Fraction = Fraction(0)
    slope: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "const", rat(self.const))
        object.__setattr__(self, "slope", rat(self.slope))

    def eval_at(self, p) -> Fraction:
        return self.const + self.slope * p

    def __add__(self, other):
        other = affine(other)
        return AffineInP(self.const + other.const, self.slope + other.slope)

    __radd__ = __add__

    def __sub__(self, other):
        other = affine(other)
        return AffineInP(self.const - other.const, self.slope - other.slope)

    def __rsub__(self, other):
        return affine(other) - self

    def __mul__(self, k):
        k = rat(k)
        return AffineInP(self.const * k, self.slope * k)

    __rmul__ = __mul__

    def __neg__(self):
        return AffineInP(-self.const, -self.slope)

    def _key(self):
        return (self.slope, self.const)

    def __lt__(self, other):
        return self._key() < affine(other)._key()

    def __le__(self, other):
        return self._key() <= affine(other)._key()

    def __gt__(self, other):
        return self._key() > affine(other)._key()

    def __ge__(self, other):
        return self._key() >= affine(other)._key()

    def is_integral_at(self, p) -> bool:
        return self.eval_at(p).denominator == 1

    def crossing_threshold(self, other) -> Fraction | None:
        """The p-value where self and other cross, or None for parallel lines.

        For every prime above the threshold the concrete comparison agrees
        with cmp_large_p.
        """
        other = affine(other)
        if self.slope == other.slope:
            return None
        return (other.const - self.const) / (self.slope - other.slope)

    def __str__(self):
        if self.slope == 0:
            return rat_str(self.const)
        s = f"{rat_str(self.slope)}p" if self.slope != 1 else "p"
        if self.const == 0:
            return s
        sign = "+" if self.const > 0 else "-"
        return f"{s} {sign} {rat_str(abs(self.const))}"

    def to_json(self):
        return {"const": rat_str(self.const), "slope": rat_str(self.slope)}


def affine(x) -> AffineInP:
    if isinstance(x, AffineInP):
        return x
    return AffineInP(rat(x), Fraction(0))


def cmp_large_p(f: AffineInP, g: AffineInP) -> int:
    """-1, 0, or 1: the sign of f - g for all sufficiently large p."""
    f, g = affine(f), affine(g)
    if f._key() < g._key():
        return -1
    if f._key() > g._key():
        return 1
    return 0
