"""Highest-weight orders, shift action, standardly stratified pre-orders.

Labels are pairs (fixed point, kappa).  In concrete-prime posets kappa is an
integer T-character; in the symbolic pre-order kappa is affine in p, with the
slope carrying the "mp" part.  The torus is rank one on the primary path;
higher rank compares characters through their pairings with nu.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

from .arith import AffineInP, affine, rat_str
from .instances import FixedPointInstance, wt_chi


class Label(NamedTuple):
    point: object
    kappa: object  # int (concrete posets) or AffineInP (symbolic pre-orders)


def c_bar(instance: FixedPointInstance, lam, p: int) -> dict:
    """Residues (p+1)*c(x; lambda) mod p for every fixed point."""
    out = {}
    for x in instance.points:
        v = (p + 1) * instance.c_value(x, lam)
        if v.denominator != 1:
            raise ValueError(
                f"(p+1)*c is not integral at p={p}; see validate_p check (c)")
        out[x] = v.numerator % p
    return out


def shift(label: Label, z: int, p: int) -> Label:
    """The free Z-action z.(x, kappa) = (x, kappa + z*p)."""
    if isinstance(label.kappa, AffineInP):
        return Label(label.point, label.kappa + AffineInP(0, z))
    return Label(label.point, label.kappa + z * p)


def block_of(instance: FixedPointInstance, lam, label: Label, p: int) -> int:
    """Equivariant block: residue of c_bar(x) - kappa mod p."""
    res = c_bar(instance, lam, p)[label.point]
    return (res - label.kappa) % p


@dataclass(frozen=True)
class LabeledPoset:
    """Strict partial order on a finite label window, stored as its cover
    DAG (transitive reduction); closure is computed on demand."""

    labels: tuple
    covers: tuple
    blocks: dict
    p: int
    window: tuple
    residues: dict = field(default_factory=dict, compare=False)

    def _descendants(self):
        succ = defaultdict(list)
        for a, b in self.covers:
            succ[a].append(b)
        desc = {}

        def visit(v):
            if v in desc:
                return desc[v]
            acc = set()
            for w in succ[v]:
                acc.add(w)
                acc |= visit(w)
            desc[v] = acc
            return acc

        for v in self.labels:
            visit(v)
        return desc

    @property
    def closure(self):
        if not hasattr(self, "_closure_cache"):
            object.__setattr__(self, "_closure_cache", self._descendants())
        return self._closure_cache

    def less(self, a: Label, b: Label) -> bool:
        return b in self.closure.get(a, ())

    def comparable(self, a, b) -> bool:
        return self.less(a, b) or self.less(b, a)

    def max_chain_length(self) -> int:
        """Longest chain in the window (covers increase kappa, so processing
        labels by descending kappa is a reverse topological order)."""
        succ = defaultdict(list)
        for a, b in self.covers:
            succ[a].append(b)
        depth = {}
        for v in sorted(self.labels, key=lambda l: -l.kappa):
            depth[v] = 1 + max((depth[w] for w in succ[v]), default=0)
        return max(depth.values(), default=0)

    def to_json(self, instance=None):
        name = (instance.point_str if instance is not None else str)
        return {
            "p": self.p,
            "window": list(self.window),
            "labels": [[name(l.point), l.kappa] for l in self.labels],
            "covers": [[[name(a.point), a.kappa], [name(b.point), b.kappa]]
                       for a, b in self.covers],
            "blocks": {f"{name(l.point)}|{l.kappa}": int(b)
                       for l, b in self.blocks.items()},
        }


def hw_order(instance: FixedPointInstance, lam, p: int, window) -> LabeledPoset:
    """The highest-weight order on labels (x, kappa), kappa in [z1, z2).

    (x, kappa) < (x', kappa') iff the labels lie in the same equivariant
    block (c_bar(x) - kappa congruent mod p) and kappa < kappa'.
    """
    z1, z2 = window
    if z1 >= z2:
        raise ValueError(f"empty window: [{z1}, {z2})")
    res = c_bar(instance, lam, p)
    labels = tuple(Label(x, k) for x in instance.points for k in range(z1, z2))
    blocks = {l: (res[l.point] - l.kappa) % p for l in labels}
    by_block = defaultdict(lambda: defaultdict(list))
    for l in labels:
        by_block[blocks[l]][l.kappa].append(l)
    covers = []
    for levels in by_block.values():
        ks = sorted(levels)
        for lo, hi in zip(ks, ks[1:]):
            covers.extend((a, b) for a in levels[lo] for b in levels[hi])
    return LabeledPoset(labels=labels, covers=tuple(covers), blocks=blocks,
                        p=p, window=(z1, z2), residues=res)


def phw_axiom_check(poset: LabeledPoset, d_bound: int) -> dict:
    """Verify the periodic-highest-weight axioms on the window.

    (1) the shift acts freely with finitely many orbits; (2) the order is
    shift-invariant; (3) L < S L; (4) cofinality: L < L' admits n <= d_bound
    with L' < S^n L; (5) chains are bounded by d_bound (observed maximum
    reported).
    """
    p = poset.p
    z1, z2 = poset.window
    if z2 - z1 < 2 * p:
        raise ValueError("window must contain at least two shift periods")
    labels = set(poset.labels)
    report = {}

    period = [l for l in poset.labels if z1 <= l.kappa < z1 + p]
    free = all(shift(l, 1, p) != l for l in period)
    report["axiom1_shift"] = {"orbits": len(period), "free": free,
                              "ok": free and len(period) > 0}

    invariant = True
    witness = None
    for a in poset.labels:
        for b in poset.closure.get(a, ()):
            sa, sb = shift(a, 1, p), shift(b, 1, p)
            if sa in labels and sb in labels and not poset.less(sa, sb):
                invariant, witness = False, (a, b)
                break
            sa, sb = shift(a, -1, p), shift(b, -1, p)
            if sa in labels and sb in labels and not poset.less(sa, sb):
                invariant, witness = False, (a, b)
                break
        if not invariant:
            break
    report["axiom2_invariance"] = {"ok": invariant, "witness": witness}

    below_shift = all(
        poset.less(l, shift(l, 1, p))
        for l in poset.labels if shift(l, 1, p) in labels)
    report["axiom3_L_below_SL"] = {"ok": below_shift}

    cofinal = True
    max_n = 0
    for a in poset.labels:
        for b in poset.closure.get(a, ()):
            n = (b.kappa - a.kappa) // p + 1
            max_n = max(max_n, n)
            target = shift(a, n, p)
            if target in labels:
                ok = poset.less(b, target)
            else:
                ok = (poset.blocks[a] == poset.blocks[b]
                      and b.kappa < a.kappa + n * p)
            if not (ok and n <= d_bound):
                cofinal = False
                break
        if not cofinal:
            break
    report["axiom4_cofinality"] = {"ok": cofinal, "max_n": max_n}

    longest = poset.max_chain_length()
    report["axiom5_chains"] = {"observed_max": longest,
                               "ok": longest <= d_bound}

    report["d_bound"] = d_bound
    report["passed"] = all(report[k]["ok"] for k in
                           ("axiom1_shift", "axiom2_invariance",
                            "axiom3_L_below_SL", "axiom4_cofinality",
                            "axiom5_chains"))
    return report


@dataclass(frozen=True)
class PreOrder:
    """Standardly stratified pre-order on symbolic labels of the zero
    equivariant block: (x,kappa) <= (x',kappa') iff slope(kappa'-kappa) >= 0.

    Equivalence classes (finite) are the slope levels; inside a class the
    order is the reverse of the symbolic highest-weight comparison, which is
    the partial-Ringel-duality convention for the stratified side.
    """

    instance: FixedPointInstance
    lam_bar: tuple
    mu: tuple
    labels: tuple
    classes: tuple        # tuple of tuples of labels, ascending slope
    class_slopes: tuple

    def class_index(self, label: Label) -> int:
        s = label.kappa.slope
        return self.class_slopes.index(s)

    def leq(self, a: Label, b: Label) -> bool:
        return b.kappa.slope >= a.kappa.slope

    def strictly_less(self, a: Label, b: Label) -> bool:
        return a.kappa.slope < b.kappa.slope

    def equivalent(self, a: Label, b: Label) -> bool:
        return a.kappa.slope == b.kappa.slope

    def within_class_order(self, cls) -> list:
        """Class members sorted ascending for the stratified side: the
        symbolic hw comparison (by constant term) reversed."""
        return sorted(cls, key=lambda l: -l.kappa.const)

    def to_json(self):
        name = self.instance.point_str
        return {
            "lambda_bar": [rat_str(c) for c in self.lam_bar],
            "mu": [rat_str(c) for c in self.mu],
            "labels": [[name(l.point), str(l.kappa)] for l in self.labels],
            "blocks": {f"{name(l.point)}|{l.kappa}": 0 for l in self.labels},
            "covers": [[i, i + 1] for i in range(len(self.classes) - 1)],
            "classes": [{
                "slope": rat_str(s),
                "labels": [[name(l.point), str(l.kappa)] for l in
                           self.within_class_order(cls)],
            } for s, cls in zip(self.class_slopes, self.classes)],
        }


def ss_preorder(instance: FixedPointInstance, pair, window) -> PreOrder:
    """The pre-order determined by a compatible pair on the zero block.

    Admissible characters for x are kappa = c(x; lambda_bar + p*mu) + m*p;
    the slope of kappa' - kappa decides the pre-order.
    """
    m_lo, m_hi = window
    if m_lo != -m_hi or m_hi < 0:
        raise ValueError("window must be symmetric in the shift: (-m, m)")
    labels = []
    for x in instance.points:
        gamma = instance.c_affine(x, pair.lam, pair.mu)
        for m in range(m_lo, m_hi + 1):
            labels.append(Label(x, gamma + AffineInP(0, m)))
    by_slope = defaultdict(list)
    for l in labels:
        by_slope[l.kappa.slope].append(l)
    slopes = tuple(sorted(by_slope))
    classes = tuple(tuple(sorted(by_slope[s], key=lambda l:
                                 (str(l.point), l.kappa.const)))
                    for s in slopes)
    return PreOrder(instance=instance, lam_bar=pair.lam, mu=pair.mu,
                    labels=tuple(labels), classes=classes, class_slopes=slopes)


def equivalence_classes(pre: PreOrder) -> tuple:
    """Classes computed two ways: (a) slope levels of the pre-order and
    (b) the direct formula (same h-block and equal c - kappa as affine
    functions); a mismatch falsifies the combinatorial lemma and raises.
    """
    inst, lam_bar = pre.instance, pre.lam_bar

    def direct_equiv(a: Label, b: Label) -> bool:
        ca = inst.c_value(a.point, lam_bar)
        cb = inst.c_value(b.point, lam_bar)
        if (ca - cb).denominator != 1:
            return False
        return (affine(ca) - a.kappa) == (affine(cb) - b.kappa)

    direct = []
    for l in pre.labels:
        for cls in direct:
            if direct_equiv(cls[0], l):
                cls.append(l)
                break
        else:
            direct.append([l])
    path_a = {frozenset(cls) for cls in pre.classes}
    path_b = {frozenset(cls) for cls in direct}
    if path_a != path_b:
        raise AssertionError(
            "equivalence-class mismatch between slope closure and the direct "
            "formula; this would falsify the char-p class lemma")
    return pre.classes


def preorder_independence_check(instance: FixedPointInstance, pre_a: PreOrder,
                                pre_b: PreOrder) -> bool:
    """Whether two pre-orders from distinct compatible parameters for the
    same face agree structurally.

    Labels are matched by (point, shift index); classes and their order must
    coincide.  For a point face this is expected to hold whatever the
    compatible parameter (Remark-level content); a False return means the
    pre-order genuinely depends on the parameter, not only the face.
    """
    def skeleton(pre):
        base = {x: instance.c_affine(x, pre.lam_bar, pre.mu).slope
                for x in instance.points}
        out = []
        for cls in pre.classes:
            out.append(frozenset((l.point, l.kappa.slope - base[l.point])
                                 for l in cls))
        return out

    return skeleton(pre_a) == skeleton(pre_b)


def crossing_threshold_bound(pre: PreOrder) -> int:
    """Smallest P with all symbolic character comparisons stable above P.

    For p > P every pairwise comparison of the pre-order's affine characters
    agrees with the concrete evaluation at p; concrete-prime checks below
    this bound can see spurious ties.
    """
    best = 0
    for a in pre.labels:
        for b in pre.labels:
            t = a.kappa.crossing_threshold(b.kappa)
            if t is not None:
                best = max(best, t.__ceil__())
    return best


def order_compat_check(poset: LabeledPoset, pre: PreOrder, p: int) -> dict:
    """Verify strict-pre => hw-less => pre, and L strictly below its shift.

    Symbolic labels are evaluated at p and matched against the poset window;
    pairs outside the window are skipped.  The report carries the crossing
    threshold: at p below it the implications can legitimately fail.
    """
    in_window = {}
    for l in pre.labels:
        v = l.kappa.eval_at(p)
        if v.denominator != 1:
            raise ValueError(f"kappa not integral at p={p}")
        cl = Label(l.point, v.numerator)
        if cl in set(poset.labels):
            in_window[l] = cl
    first = second = below = True
    w1 = w2 = None
    items = list(in_window.items())
    for a, ca in items:
        for b, cb in items:
            if a is b:
                continue
            if pre.strictly_less(a, b) and not poset.less(ca, cb):
                first, w1 = False, (a, b)
            if poset.less(ca, cb) and not pre.leq(a, b):
                second, w2 = False, (a, b)
    for l in pre.labels:
        s = shift(l, 1, p)
        if not pre.strictly_less(l, s):
            below = False
    report = {
        "strict_pre_implies_hw": {"ok": first, "witness": w1},
        "hw_implies_pre": {"ok": second, "witness": w2},
        "L_strictly_below_shift": {"ok": below},
        "pairs_checked": len(items) * (len(items) - 1),
        "crossing_threshold": crossing_threshold_bound(pre),
    }
    report["p_above_threshold"] = p > report["crossing_threshold"]
    report["passed"] = first and second and below
    return report


def label_translate(instance: FixedPointInstance, label: Label, chi) -> Label:
    """Translation equivalence on labels: (x, kappa) -> (x, kappa + wt_chi(x))."""
    w = wt_chi(instance, label.point, chi)
    if w.denominator != 1:
        raise ValueError(
            f"non-integral weight wt_chi = {rat_str(w)}; the character must "
            "be integral")
    if isinstance(label.kappa, AffineInP):
        return Label(label.point, label.kappa + AffineInP(w, 0))
    return Label(label.point, label.kappa + w.numerator)


def interval_image(pre: PreOrder, interval, chi) -> tuple:
    """Image of an interval of classes under label translation by chi.

    Verifies on the way that the translate of each class is again a class
    (block and equivalence preservation); a failure raises.
    """
    idxs = sorted(pre.classes.index(tuple(cls)) for cls in interval)
    if idxs != list(range(idxs[0], idxs[-1] + 1)):
        raise ValueError("not an interval: classes are not contiguous")
    inst = pre.instance
    all_translated = [tuple(label_translate(inst, l, chi) for l in cls)
                      for cls in pre.classes]
    by_slope = defaultdict(set)
    for cls in all_translated:
        for l in cls:
            by_slope[l.kappa.slope].add(l)
    for cls in all_translated:
        slopes = {l.kappa.slope for l in cls}
        if len(slopes) != 1 or set(cls) != by_slope[next(iter(slopes))]:
            raise AssertionError(
                "translated class is not a class; this would falsify the "
                "equivalence-preservation lemma")
    image = tuple(all_translated[i] for i in idxs)
    slopes = [cls[0].kappa.slope for cls in image]
    if slopes != sorted(slopes):
        raise AssertionError("translation did not preserve the class order")
    return image


def export_poset(obj, fmt: str, instance=None) -> str:
    """DOT Hasse diagram or canonical JSON for a poset or pre-order."""
    import json as _json

    if fmt == "json":
        payload = obj.to_json(instance) if isinstance(obj, LabeledPoset) \
            else obj.to_json()
        return _json.dumps(payload, sort_keys=True, indent=2)
    if fmt != "dot":
        raise ValueError(f"unknown format: {fmt}")
    lines = ["digraph poset {", "  rankdir=BT;"]
    palette = ["lightblue", "lightgreen", "lightyellow", "lightpink",
               "lightgray", "orange", "cyan", "violet"]
    if isinstance(obj, LabeledPoset):
        name = instance.point_str if instance is not None else str
        for l in obj.labels:
            color = palette[obj.blocks[l] % len(palette)]
            lines.append(
                f'  "{name(l.point)}|{l.kappa}" '
                f'[style=filled, fillcolor={color}];')
        for a, b in obj.covers:
            lines.append(f'  "{name(a.point)}|{a.kappa}" -> '
                         f'"{name(b.point)}|{b.kappa}";')
    else:
        name = obj.instance.point_str
        for ci, cls in enumerate(obj.classes):
            color = palette[ci % len(palette)]
            for l in cls:
                lines.append(f'  "{name(l.point)}|{l.kappa}" '
                             f'[style=filled, fillcolor={color}];')
        for ci in range(len(obj.classes) - 1):
            a = obj.within_class_order(obj.classes[ci])[-1]
            b = obj.within_class_order(obj.classes[ci + 1])[0]
            lines.append(f'  "{name(a.point)}|{a.kappa}" -> '
                         f'"{name(b.point)}|{b.kappa}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines)
