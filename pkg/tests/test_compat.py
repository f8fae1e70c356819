from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovelab.alcoves import faces_of, p_membership, real_alcove_of
from alcovelab.arith import pairing, vadd
from alcovelab.compat import (CompatiblePair, find_compatible,
                              opposite_alcove, opposite_pair,
                              verify_compatible)
from alcovelab.instances import hilb_instance, weyl_a_instance

HILB2 = hilb_instance(2, 0)
A2 = weyl_a_instance(3)


def hilb_pair(inst=HILB2, interior=F(1)):
    A = real_alcove_of((interior,), inst.walls)
    faces = faces_of(A, inst.walls)
    lo = min(f.witness[0] for f in faces if f.codim == 1)
    theta = next(f for f in faces if f.codim == 1 and f.witness == (lo,))
    return A, theta, find_compatible(A, theta, inst.walls)


def test_find_compatible_hilb_lower_face():
    A, theta, pair = hilb_pair()
    assert pair.mu == (F(1, 2),)
    # c-value a/b + m with m > ell: smallest is 1/2 + 1
    assert pair.lam == (F(3, 2),)
    assert verify_compatible(pair, HILB2.walls, p_samples=(5, 23))["passed"]


def test_find_compatible_hilb_margin_exceeds_ell():
    inst = hilb_instance(3, 1)
    A = real_alcove_of((F(5, 12),), inst.walls)  # alcove (1/3, 1/2)
    faces = faces_of(A, inst.walls)
    theta = next(f for f in faces if f.witness == (F(1, 3),))
    pair = find_compatible(A, theta, inst.walls)
    m = pair.lam[0] - F(1, 3)
    assert m.denominator == 1 and m > 1  # m > ell
    assert verify_compatible(pair, inst.walls, p_samples=(23,))["passed"]


def test_codim0_face_vacuous():
    A = real_alcove_of((F(1),), HILB2.walls)
    top = next(f for f in faces_of(A, HILB2.walls) if f.codim == 0)
    pair = find_compatible(A, top, HILB2.walls)
    rep = verify_compatible(pair, HILB2.walls)
    assert rep["face_walls"] == [] and rep["passed"]


def test_verify_detects_wrong_face():
    A, theta, pair = hilb_pair()
    faces = faces_of(A, HILB2.walls)
    other = next(f for f in faces
                 if f.codim == 1 and f.witness != theta.witness)
    bad = CompatiblePair(pair.lam, pair.mu, A, other)
    rep = verify_compatible(bad, HILB2.walls)
    assert not rep["passed"]
    assert any(not e["ok"] for e in rep["face_walls"] + rep["other_walls"])


def test_verify_detects_non_lattice_difference():
    A, theta, pair = hilb_pair()
    bad = CompatiblePair((pair.lam[0] + F(1, 3),), pair.mu, A, theta)
    rep = verify_compatible(bad, HILB2.walls, p_samples=(23, 47))
    assert not rep["lattice_diff"]
    assert not rep["passed"]


def test_verify_symbolic_margins():
    A, theta, pair = hilb_pair()
    rep = verify_compatible(pair, HILB2.walls)
    for entry in rep["face_walls"]:
        assert entry["margin"]["slope"] == "0"
    for entry in rep["other_walls"]:
        assert F(entry["margin"]["slope"]) > 0


def test_p_point_lands_in_p_alcove():
    A, theta, pair = hilb_pair()
    for p in (5, 23, 47):
        pt = pair.p_point(p)
        assert all(c.denominator == 1 for c in pt)
        assert p_membership(pt, p, HILB2.walls).source == A


def test_opposite_pair_hilb_reflection():
    # spec example: lam = a/b + m across theta = {a/b} gives a/b - m, chi = -2m
    A, theta, pair = hilb_pair()
    pm, chi = opposite_pair(A, theta, pair, HILB2.walls)
    assert pm.lam == (-F(1, 2),)
    assert chi == (F(-2),)
    assert verify_compatible(pm, HILB2.walls, p_samples=(23,))["passed"]


def test_opposite_pair_codim0_errors():
    A = real_alcove_of((F(1),), HILB2.walls)
    top = next(f for f in faces_of(A, HILB2.walls) if f.codim == 0)
    pair = find_compatible(A, top, HILB2.walls)
    with pytest.raises(ValueError, match="codimension-0"):
        opposite_pair(A, top, pair, HILB2.walls)


def test_opposite_pair_a2_edge():
    A = real_alcove_of((F(1, 3), F(1, 3)), A2.walls)
    faces = faces_of(A, A2.walls)
    edge = next(f for f in faces if f.codim == 1
                and f.active == ((1, F(1), "<="),))
    pair = find_compatible(A, edge, A2.walls)
    pm, chi = opposite_pair(A, edge, pair, A2.walls)
    assert pm.alcove != A
    # lam changes only transversally to the edge: <theta, chi> != 0
    assert pairing((1, 1), chi) != 0
    # margins here have slope 1/2 and constant -7/2: positive only for p > 7,
    # so the sample prime must sit above that threshold
    assert verify_compatible(pm, A2.walls, p_samples=(23,))["passed"]


def test_opposite_alcove_flips_face_walls():
    A = real_alcove_of((F(1, 3), F(1, 3)), A2.walls)
    faces = faces_of(A, A2.walls)
    vert = next(f for f in faces if f.codim == 2
                and f.witness == (F(0), F(0)))
    B = opposite_alcove(A, vert, A2.walls)
    assert B.contains((-F(1, 3), -F(1, 3)), A2.walls)


@settings(max_examples=30)
@given(st.integers(0, 4))
def test_translation_stability(k):
    # chi with <alpha_i, chi> >= 0 on the face walls keeps compatibility
    A, theta, pair = hilb_pair()
    chi = (k,)  # face wall is oriented upward at the lower endpoint
    shifted = CompatiblePair(vadd(pair.lam, chi), pair.mu, A, theta)
    assert verify_compatible(shifted, HILB2.walls, p_samples=(23,))["passed"]


def test_compatible_cache_translation():
    inst = HILB2
    A = real_alcove_of((F(1),), inst.walls)
    faces = faces_of(A, inst.walls)
    theta = next(f for f in faces if f.witness == (F(1, 2),))
    base = find_compatible(A, theta, inst.walls)
    B = A.translate((3,), inst.walls)
    theta_b = next(f for f in faces_of(B, inst.walls)
                   if f.witness == (F(7, 2),))
    moved = find_compatible(B, theta_b, inst.walls)
    # same lambda works for the translated pair, mu moves with the face
    assert moved.lam == base.lam
    assert moved.mu == (F(7, 2),)
    assert verify_compatible(moved, inst.walls, p_samples=(23,))["passed"]
