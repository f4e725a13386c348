"""Residue-tuple subring instances S_r(k) inside the rank-r parafermion fusion ring.

Labels are length-r residue tuples mod k; fusion is componentwise addition,
so the subring is the group ring of (Z/k)^r and every n-point rank is 0 or 1.
Conformal weights follow the closed form max(a_i) - (sum a_i^2 -
sum_{i<j} a_i a_j)/k.  For r >= 3 that weight table is not symmetric under
duals (e.g. (1,1,1) vs (k-1,k-1,k-1)); all degree-type quantities on such
instances are pinned by the engine's channel-weight convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Dict, Sequence, Tuple

from .errors import DomainError, LabelDomainError
from .fusion_core import FusionDatum, degree_04

_LABEL_RE = re.compile(r"^S\[(-?\d+(?:,-?\d+)*)\]@(\d+),(\d+)$")


@dataclass(frozen=True, order=True)
class TupleLabel:
    """Residue tuple (a_1,...,a_r) mod k; the vacuum is the zero tuple."""

    k: int
    a: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"level must be >= 1, got {self.k}")
        if not self.a:
            raise DomainError("rank must be >= 1")
        if any(not (0 <= x < self.k) for x in self.a):
            raise LabelDomainError(f"entries of {self.a} not reduced mod {self.k}")

    @property
    def r(self) -> int:
        return len(self.a)

    def __str__(self) -> str:
        return f"S[{','.join(str(x) for x in self.a)}]@{self.r},{self.k}"


def make_label(r: int, k: int, entries: Sequence[int]) -> TupleLabel:
    """Build a label, reducing entries mod k."""
    if len(entries) != r:
        raise DomainError(f"expected {r} entries, got {len(entries)}")
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    return TupleLabel(k, tuple(x % k for x in entries))


def uniform_label(r: int, k: int, a: int) -> TupleLabel:
    return make_label(r, k, (a,) * r)


def scale_label(label: TupleLabel, factor: int) -> TupleLabel:
    """Componentwise multiple (group power) of a label."""
    return TupleLabel(label.k, tuple((factor * x) % label.k for x in label.a))


def dual_slr(label: TupleLabel) -> TupleLabel:
    return TupleLabel(label.k, tuple((-x) % label.k for x in label.a))


def fuse_slr(l1: TupleLabel, l2: TupleLabel) -> Dict[TupleLabel, int]:
    """Abelian fusion: single channel, the componentwise sum mod k."""
    if l1.k != l2.k or l1.r != l2.r:
        raise DomainError(f"instance mismatch: {l1} vs {l2}")
    return {TupleLabel(l1.k, tuple((x + y) % l1.k for x, y in zip(l1.a, l2.a))): 1}


def cw_slr(label: TupleLabel) -> Fraction:
    """Conformal weight max(a_i) - (sum a_i^2 - sum_{i<j} a_i a_j)/k.

    Invariant under permuting the entries; dropping a zero entry reproduces
    the rank-(r-1) value.
    """
    a = label.a
    square = sum(x * x for x in a)
    cross = sum(a[i] * a[j] for i in range(len(a)) for j in range(i + 1, len(a)))
    return max(a) - Fraction(square - cross, label.k)


@lru_cache(maxsize=None)
def datum_slr(r: int, k: int) -> FusionDatum:
    """The S_r(k) fusion datum on all k^r residue tuples.

    Central charge k*r(r+2)/(k+r+1) - r, the commutant value for the ambient
    rank-r parafermion algebra.
    """
    if r < 1 or k < 1:
        raise DomainError(f"need r, k >= 1, got r={r}, k={k}")
    labels = tuple(TupleLabel(k, entries) for entries in product(range(k), repeat=r))
    return FusionDatum(
        name=f"S_{r}({k})",
        labels=labels,
        unit=TupleLabel(k, (0,) * r),
        dual_fn=dual_slr,
        fuse_fn=fuse_slr,
        cw_fn=cw_slr,
        central_charge=Fraction(k * r * (r + 2), k + r + 1) - r,
    )


def rank4_slr(labels: Sequence[TupleLabel]) -> int:
    """Four-point rank: 1 iff the componentwise sum vanishes mod k, else 0."""
    if len(labels) != 4:
        raise DomainError(f"need exactly 4 labels, got {len(labels)}")
    k, r = labels[0].k, labels[0].r
    if any(lab.k != k or lab.r != r for lab in labels):
        raise DomainError("instance mismatch among labels")
    return int(all(sum(lab.a[i] for lab in labels) % k == 0 for i in range(r)))


def count_simple_modules(r: int, k: int) -> int:
    """Number of inequivalent simple modules of the ambient rank-r parafermion:
    (k+1) k^r binom(k+r, r-1) / (r (r+1)), always an integer."""
    if r < 1 or k < 1:
        raise DomainError(f"need r, k >= 1, got r={r}, k={k}")
    numerator = (k + 1) * k**r * comb(k + r, r - 1)
    denominator = r * (r + 1)
    if numerator % denominator:
        raise DomainError(f"module count not integral at r={r}, k={k}")
    return numerator // denominator


def max_cw_module(r: int, k: int) -> Tuple[TupleLabel, Fraction]:
    """Brute-force argmax of the conformal weight over all k^r tuples.

    Weights are permutation-invariant, so ties occur along Sym(r) orbits; the
    returned representative is the non-increasing tuple, lexicographically
    least across distinct orbits.
    """
    datum = datum_slr(r, k)
    best_cw = None
    best_key = None
    for label in datum.labels:
        w = datum.cw(label)
        key = tuple(sorted(label.a, reverse=True))
        if best_cw is None or w > best_cw or (w == best_cw and key < best_key):
            best_cw, best_key = w, key
    return TupleLabel(k, best_key), best_cw


def negative_witness(r: int, k: int, epsilon: int) -> Fraction:
    """(k - 2(2+eps)) (r-1)(r-2) / 2: the all-ones symmetric divisor against F_{1,1,kt+eps}.

    At eps = k-3 this is (2-k)(r-1)(r-2)/2, strictly negative for r >= 3 and
    k >= 4, and matches the engine intersection with blocks (1,1,k-3,1); it
    vanishes identically for r = 2.
    """
    if r < 2:
        raise DomainError(f"need r >= 2, got {r}")
    if k < 3:
        raise DomainError(f"need k >= 3, got {k}")
    if not (1 <= epsilon <= k - 3):
        raise DomainError(f"epsilon {epsilon} outside [1, {k - 3}]")
    return Fraction((k - 2 * (2 + epsilon)) * (r - 1) * (r - 2), 2)


def symmetric_intersection(r: int, k: int, a: TupleLabel, n: int, i: int) -> Fraction:
    """Intersection of the symmetric divisor on n copies of M_a with F_{1,1,i}.

    The abelian structure collapses the F-curve sum to a single 4-point
    degree on the channel labels (a, a, i*a, (n-2-i)*a); this equals the
    generic engine intersection.
    """
    if a.r != r or a.k != k:
        raise DomainError(f"label {a} does not live in S_{r}({k})")
    if not 1 <= i <= n - 3:
        raise DomainError(f"need 1 <= i <= n-3, got i={i}, n={n}")
    datum = datum_slr(r, k)
    spine = (a, a, scale_label(a, i), scale_label(a, n - 2 - i))
    return degree_04(datum, spine)


def parse_slr_label(text: str) -> TupleLabel:
    """Parse the CLI syntax ``S[a1,...,ar]@r,k`` (entries reduced mod k)."""
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise LabelDomainError(f"cannot parse residue-tuple label {text!r}")
    entries = [int(x) for x in m.group(1).split(",")]
    r, k = int(m.group(2)), int(m.group(3))
    if len(entries) != r:
        raise LabelDomainError(f"{text!r} declares rank {r} but has {len(entries)} entries")
    return make_label(r, k, entries)
