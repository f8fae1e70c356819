"""Fixed-point data for the two built-in families, plus user tables.

A FixedPointInstance packages a finite fixed-point set with the affine
highest-weight function c(x; lambda) = c_const(x) + <c_linear(x), lambda>,
the wall data of the parameter space, registered parameters and lattice
generators.  Everything downstream (orders, blocks, pre-orders) consumes
only this interface, so other examples can be loaded as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .arith import AffineInP, Wall, pairing, rat, rat_str, vec
from .partitions import (cont, n_stat, partition_from_str, partition_str,
                         partitions)


@dataclass(frozen=True)
class FixedPointInstance:
    name: str
    rank: int
    points: tuple
    c_const: dict
    c_linear: dict
    walls: tuple = ()
    lambdas: tuple = ()      # registered rational parameters (the set Lambda)
    generators: tuple = ()   # lattice generators (the set P_2)
    nu_pairing: tuple = (1,)  # projection of torus characters for comparison
    meta: dict = field(default_factory=dict)

    def c_value(self, x, lam) -> Fraction:
        """c(x; lambda) for a rational parameter vector lambda."""
        return self.c_const[x] + pairing(self.c_linear[x], vec(lam))

    def c_affine(self, x, lam_bar, mu) -> AffineInP:
        """c(x; lambda_bar + p*mu) as an affine function of p."""
        return AffineInP(const=self.c_value(x, lam_bar),
                         slope=pairing(self.c_linear[x], vec(mu)))

    def point_str(self, x) -> str:
        if isinstance(x, tuple) and self.meta.get("points") == "permutations":
            return ",".join(str(v) for v in x)
        if isinstance(x, tuple):
            return partition_str(x)
        return str(x)

    def point_from_str(self, s: str):
        if self.meta.get("points") == "permutations":
            return tuple(int(v) for v in s.split(","))
        if self.meta.get("points") == "partitions":
            return partition_from_str(s)
        for x in self.points:
            if self.point_str(x) == s:
                return x
        raise KeyError(f"unknown point id: {s}")

    def with_lambdas(self, lambdas) -> "FixedPointInstance":
        return FixedPointInstance(
            self.name, self.rank, self.points, self.c_const, self.c_linear,
            self.walls, tuple(vec(l) for l in lambdas), self.generators,
            self.nu_pairing, self.meta)

    def kappa_value(self, kappa):
        """The comparison value of a torus character: scalars pass through,
        lattice characters pair with nu (the higher-rank path)."""
        if isinstance(kappa, (int, Fraction)):
            return rat(kappa)
        if isinstance(kappa, AffineInP):
            return kappa
        return pairing(self.nu_pairing, kappa)

    def compare_characters(self, k1, k2):
        """-1/0/+1 by the nu-pairing; None for distinct characters with the
        same pairing (incomparable labels in rank > 1)."""
        v1, v2 = self.kappa_value(k1), self.kappa_value(k2)
        if v1 == v2:
            return 0 if k1 == k2 else None
        return -1 if v1 < v2 else 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "points": [{
                "id": self.point_str(x),
                "c_const": rat_str(self.c_const[x]),
                "c_linear": [rat_str(c) for c in self.c_linear[x]],
            } for x in self.points],
            "walls": [w.to_json() for w in self.walls],
            "lambdas": [[rat_str(c) for c in l] for l in self.lambdas],
            "generators": [[rat_str(c) for c in g] for g in self.generators],
            "nu_pairing": [rat_str(rat(c)) for c in self.nu_pairing],
            "meta": dict(self.meta),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FixedPointInstance":
        meta = dict(data.get("meta", {}))
        kind = meta.get("points")

        def parse_id(s):
            if kind == "permutations":
                return tuple(int(v) for v in s.split(","))
            if kind == "partitions":
                return partition_from_str(s)
            return s

        points, c_const, c_linear = [], {}, {}
        for entry in data["points"]:
            x = parse_id(entry["id"])
            points.append(x)
            c_const[x] = rat(entry["c_const"])
            c_linear[x] = vec(entry["c_linear"])
        return cls(
            name=data["name"],
            rank=int(data["rank"]),
            points=tuple(points),
            c_const=c_const,
            c_linear=c_linear,
            walls=tuple(Wall.from_json(w) for w in data.get("walls", [])),
            lambdas=tuple(vec(l) for l in data.get("lambdas", [])),
            generators=tuple(vec(g) for g in data.get("generators", [])),
            nu_pairing=tuple(vec(data.get("nu_pairing", [1]))),
            meta=meta,
        )


def wt_chi(instance: FixedPointInstance, x, chi) -> Fraction:
    """Directional derivative of c(x; .) along the lattice vector chi.

    Canonical up to a global additive constant (character twist); only
    differences wt(x) - wt(x') are ever consumed downstream.
    """
    return pairing(instance.c_linear[x], vec(chi))


def hilb_sigma_tilde(n: int, ell: int) -> frozenset:
    """Saturated shift set for Hilb_n in c-coordinates: a/b + k for reduced
    values a/b in (0,1) with denominator 2..n and |k| <= ell."""
    base = {Fraction(a, b) for b in range(2, n + 1) for a in range(1, b)}
    return frozenset(s + k for s in base for k in range(-ell, ell + 1))


def hilb_instance(n: int, ell: int = 0, lambdas=()) -> FixedPointInstance:
    """Hilbert-scheme fixed points: partitions of n with
    c(mu; c) = c * cont(mu) - n(mu) in c-coordinates (c = lambda - 1/2).

    Single wall alpha = (1); real alcoves are the intervals between
    consecutive rationals with denominators 2..n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pts = tuple(partitions(n))
    c_const = {mu: Fraction(-n_stat(mu)) for mu in pts}
    c_linear = {mu: (Fraction(cont(mu)),) for mu in pts}
    walls = ()
    if n >= 2:
        walls = (Wall(id=0, alpha=(1,), sigma_tilde=hilb_sigma_tilde(n, ell)),)
    return FixedPointInstance(
        name=f"hilb({n})", rank=1, points=pts,
        c_const=c_const, c_linear=c_linear,
        walls=walls, lambdas=tuple(vec(l) for l in lambdas),
        generators=((1,),),
        meta={"points": "partitions", "n": n, "ell": ell,
              "coords": "c = lambda - 1/2"},
    )


def _coroot_covectors(n: int):
    """Positive coroots of A_{n-1} as covectors on fundamental-weight
    coordinates: the coroot alpha_i + ... + alpha_j pairs to lam_i + ... + lam_j."""
    r = n - 1
    covs = []
    for i in range(r):
        for j in range(i, r):
            covs.append(tuple(1 if i <= k <= j else 0 for k in range(r)))
    return covs


def weyl_a_instance(n: int, lambdas=()) -> FixedPointInstance:
    """Type A_{n-1} Weyl-group fixed points: permutations w of {1..n} with
    c(w; lambda) = <w lambda, rho_vee>, nu = rho_vee.

    Coordinates are fundamental-weight coordinates (lattice Z^{n-1}); walls
    are all positive coroots with sigma_tilde = {0}.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    r = n - 1
    pts = tuple(sorted(permutations(range(1, n + 1))))
    # rho_vee in epsilon coordinates: entry m is (n+1)/2 - m
    rho_vee = [Fraction(n + 1, 2) - m for m in range(1, n + 1)]
    c_linear = {}
    for w in pts:
        # <w lambda, rho_vee> = <lambda, w^{-1} rho_vee>; on fundamental-weight
        # coordinates the i-th coefficient is sum_{k <= i} rho_vee[w(k)]
        coeffs = []
        acc = Fraction(0)
        for k in range(r):
            acc += rho_vee[w[k] - 1]
            coeffs.append(acc)
        c_linear[w] = tuple(coeffs)
    c_const = {w: Fraction(0) for w in pts}
    walls = tuple(Wall(id=i, alpha=a, sigma_tilde=frozenset([Fraction(0)]))
                  for i, a in enumerate(_coroot_covectors(n)))
    return FixedPointInstance(
        name=f"weyl_a({n})", rank=r, points=pts,
        c_const=c_const, c_linear=c_linear,
        walls=walls, lambdas=tuple(vec(l) for l in lambdas),
        generators=tuple(tuple(1 if k == i else 0 for k in range(r))
                         for i in range(r)),
        meta={"points": "permutations", "n": n, "nu": "rho_vee",
              "coords": "fundamental weights"},
    )


def builtin_instance(name: str, **params) -> FixedPointInstance:
    if name == "hilb":
        return hilb_instance(params["n"], params.get("ell", 0),
                             params.get("lambdas", ()))
    if name == "weyl_a":
        return weyl_a_instance(params["n"], params.get("lambdas", ()))
    raise KeyError(f"unknown builtin instance: {name}")
