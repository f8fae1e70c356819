"""Parameters compatible with an (alcove, face) pair.

A compatible pair packages lambda and a face-interior direction mu so that
the family ^p(lambda) = lambda + p*mu sits inside the p-alcove with margins
constant in p on the face walls and growing linearly in p on the others.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arith import AffineInP, is_lattice, pairing, vadd, vscale, vsub
from .alcoves import (Face, PAlcove, RealAlcove, faces_of, oriented_facet,
                      p_alcove_of, real_alcove_of)


@dataclass(frozen=True)
class CompatiblePair:
    lam: tuple
    mu: tuple
    alcove: RealAlcove
    face: Face

    def p_point(self, p) -> tuple:
        """lambda + p*mu for a concrete prime p."""
        return vadd(self.lam, vscale(p, self.mu))

    def p_point_affine(self) -> tuple:
        """Per-coordinate affine-in-p description of the family."""
        return tuple(AffineInP(const=a, slope=b)
                     for a, b in zip(self.lam, self.mu))

    def p_alcove(self, walls) -> PAlcove:
        return p_alcove_of(self.alcove, walls)


def _split_facets(A: RealAlcove, face: Face, walls):
    """Facet inequalities of A split into those containing the face (the
    face walls Gamma_i) and the rest (Gamma'_j), both oriented into A."""
    wm = {w.id: w for w in walls}
    face_set = set(face.active)
    through, others = [], []
    for wid, m, sense in A.inequalities:
        orient, alpha_or, m_or, sigma = oriented_facet(wm[wid], m, sense)
        entry = (wid, alpha_or, m_or, sigma)
        if (wid, m, sense) in face_set:
            through.append(entry)
        else:
            others.append(entry)
    return through, others


_cache: dict = {}
_cache_lock = threading.Lock()


def _normalize_mod_lattice(A: RealAlcove, face: Face, walls):
    """Translate (A, face) so the alcove interior lands in [0,1)^d; returns
    the shift and the translated key (which pins the wall data too)."""
    a = A.interior_point(walls)
    shift = tuple(-(c.numerator // c.denominator) for c in a)
    A2 = A.translate(shift, walls)
    wm = {w.id: w for w in walls}
    active2 = tuple(sorted(
        (wid, m + pairing(wm[wid].alpha, shift), sense)
        for wid, m, sense in face.active))
    wall_key = tuple(sorted(walls, key=lambda w: w.id))
    return shift, (wall_key, A2.inequalities, active2)


def find_compatible(A: RealAlcove, face: Face, walls, box_radius=None,
                    use_cache=True) -> CompatiblePair:
    """Construct a parameter compatible with (A, face).

    mu is the face's rational interior witness; lambda is the
    lexicographically smallest element of mu + Z^d inside a search box with
    <alpha, lambda> strictly above the sigma_tilde maximum on every face
    wall.  Results are cached modulo lattice translation.
    """
    d = A.rank
    if use_cache:
        shift, key = _normalize_mod_lattice(A, face, walls)
        with _cache_lock:
            hit = _cache.get(key)
        if hit is not None:
            lam, mu_norm = hit
            back = tuple(-s for s in shift)
            return CompatiblePair(lam, vadd(mu_norm, back), A, face)

    mu = face.witness
    through, _ = _split_facets(A, face, walls)
    constraints = [(alpha_or, pairing(alpha_or, mu), sigma)
                   for _, alpha_or, m_or, sigma in through]
    if box_radius is None:
        needed = max((sigma - base for _, base, sigma in constraints),
                     default=Fraction(0))
        radii = []
        r = max(2, int(needed) + 2)
        while r <= 32:
            radii.append(r)
            r *= 2
    else:
        radii = [box_radius]
    for radius in radii:
        for v in sorted(product(range(-radius, radius + 1), repeat=d)):
            lam = vadd(mu, v)
            if all(base + pairing(alpha_or, v) > sigma
                   for alpha_or, base, sigma in constraints):
                pair = CompatiblePair(lam, mu, A, face)
                if use_cache:
                    # the same lambda serves every lattice translate of (A, face)
                    with _cache_lock:
                        _cache.setdefault(key, (lam, vadd(mu, shift)))
                return pair
    raise ValueError(
        f"compatible-lambda search box exhausted (radius {radii[-1]}); "
        "retry with a larger box_radius")


def verify_compatible(pair: CompatiblePair, walls, p_samples=()) -> dict:
    """Symbolic and sampled checks of the compatibility conditions.

    Face walls must have p-margin of slope 0 and positive constant, the
    remaining alcove walls positive slope; each sample prime additionally
    checks integrality of (p+1)*lambda and of lambda + p*mu, and membership
    of the family point in the p-alcove.
    """
    through, others = _split_facets(pair.alcove, pair.face, walls)
    report = {
        "lattice_diff": is_lattice(vsub(pair.lam, pair.mu)),
        "face_walls": [],
        "other_walls": [],
        "samples": {},
        "localization_conditions": "not verified",
    }
    for wid, alpha_or, m_or, sigma in through:
        margin = AffineInP(
            const=pairing(alpha_or, pair.lam) - sigma,
            slope=pairing(alpha_or, pair.mu) - m_or)
        report["face_walls"].append({
            "wall": wid,
            "margin": margin.to_json(),
            "ok": margin.slope == 0 and margin.const > 0,
        })
    for wid, alpha_or, m_or, sigma in others:
        margin = AffineInP(
            const=pairing(alpha_or, pair.lam) - sigma,
            slope=pairing(alpha_or, pair.mu) - m_or)
        report["other_walls"].append({
            "wall": wid,
            "margin": margin.to_json(),
            "ok": margin.slope > 0,
        })
    pa = pair.p_alcove(walls)
    for p in p_samples:
        pt = pair.p_point(p)
        entry = {
            "p_lambda_integral": all(((p + 1) * c).denominator == 1
                                     for c in pair.lam),
            "p_point_integral": is_lattice(pt),
            "in_p_alcove": pa.contains(pt, p, walls),
        }
        entry["ok"] = all(entry.values())
        report["samples"][p] = entry
    report["passed"] = (
        report["lattice_diff"]
        and all(e["ok"] for e in report["face_walls"])
        and all(e["ok"] for e in report["other_walls"])
        and all(e["ok"] for e in report["samples"].values()))
    return report


def opposite_alcove(A: RealAlcove, face: Face, walls) -> RealAlcove:
    """The alcove opposite to A across a face of codimension >= 1.

    Found by stepping from the face witness away from A's interior; every
    arrangement hyperplane through the witness contains the face span, so a
    small enough step flips exactly the face walls.
    """
    if face.codim == 0:
        raise ValueError("codimension-0 face has no opposite alcove")
    a = A.interior_point(walls)
    f = face.witness
    step = vsub(f, a)
    t = Fraction(1, 2)
    for _ in range(64):
        x = vadd(f, vscale(t, step))
        try:
            B = real_alcove_of(x, walls)
        except ValueError:
            t /= 2
            continue
        if B != A and any(g.vertex_set == face.vertex_set
                          for g in faces_of(B, walls)):
            return B
        t /= 2
    raise ValueError("could not locate the opposite alcove (face on the "
                     "boundary of the locally bounded region?)")


def matching_face(B: RealAlcove, face: Face, walls) -> Face:
    for g in faces_of(B, walls):
        if g.vertex_set == face.vertex_set:
            return g
    raise ValueError("alcove does not share the given face")


def opposite_pair(A: RealAlcove, face: Face, pair: CompatiblePair, walls):
    """A parameter compatible with (A_minus, face), differing from pair.lam
    by a lattice vector; returns (pair_minus, chi) with chi = lam_minus - lam.

    The reflected candidate 2*mu - lambda is preferred; when it violates the
    opposite margins the lexicographic box search runs on the other side.
    """
    B = opposite_alcove(A, face, walls)
    face_b = matching_face(B, face, walls)
    mu = pair.mu
    if face_b.witness != mu:
        # same geometric face, same vertex average
        raise AssertionError("face witness mismatch between opposite alcoves")
    candidate = vsub(vscale(2, mu), pair.lam)
    through, _ = _split_facets(B, face_b, walls)
    if all(pairing(alpha_or, candidate) > sigma
           for _, alpha_or, m_or, sigma in through):
        pair_minus = CompatiblePair(candidate, mu, B, face_b)
    else:
        pair_minus = find_compatible(B, face_b, walls)
    chi = vsub(pair_minus.lam, pair.lam)
    if not is_lattice(chi):
        raise AssertionError("wall-crossing element chi is not integral")
    return pair_minus, chi
