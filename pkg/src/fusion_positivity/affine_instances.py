"""Affine sl2 level-k and cyclic (sl_k level-1) fusion data, and the pairing verifier.

Both instances use the standard weight normalization (<L, L+2rho>/(2(k+h))),
under which the self-dual parafermion family pairs with affine sl2 at ratio
eta = 1 and the top-row family pairs with the cyclic instance at eta = 1/2.
Only constancy of eta is contractual; the rescaled ratios quoted elsewhere in
the literature (1/(2(k+2)) and 1/(k+1)) are exposed for reference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import ConfigurationError, DomainError, LabelDomainError
from .fusion_core import FusionDatum, validate_subring
from .parafermion_sl2 import canonicalize, datum_sl2, subring_S1, subring_T

_AFFINE_RE = re.compile(r"^A\[(\d+)\]@(\d+)$")
_CYCLIC_RE = re.compile(r"^Z\[(-?\d+)\]@(\d+)$")


@dataclass(frozen=True, order=True)
class AffineSl2Label:
    """Integrable highest weight 0 <= lam <= k of affine sl2 at level k."""

    k: int
    lam: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"level must be >= 1, got {self.k}")
        if not (0 <= self.lam <= self.k):
            raise LabelDomainError(f"weight {self.lam} outside [0, {self.k}]")

    def __str__(self) -> str:
        return f"A[{self.lam}]@{self.k}"


@dataclass(frozen=True, order=True)
class CyclicLabel:
    """Element of Z/m labelling a simple current of the cyclic instance."""

    m: int
    a: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"order must be >= 1, got {self.m}")
        if not (0 <= self.a < self.m):
            raise LabelDomainError(f"residue {self.a} not reduced mod {self.m}")

    def __str__(self) -> str:
        return f"Z[{self.a}]@{self.m}"


def _fuse_affine(l1: AffineSl2Label, l2: AffineSl2Label) -> Dict[AffineSl2Label, int]:
    """Truncated Clebsch-Gordan rule: |l1-l2| <= l <= min(l1+l2, 2k-l1-l2), step 2."""
    if l1.k != l2.k:
        raise DomainError(f"level mismatch: {l1} vs {l2}")
    k = l1.k
    return {
        AffineSl2Label(k, l): 1
        for l in range(abs(l1.lam - l2.lam), min(l1.lam + l2.lam, 2 * k - l1.lam - l2.lam) + 1, 2)
    }


def _cw_affine(label: AffineSl2Label) -> Fraction:
    return Fraction(label.lam * (label.lam + 2), 4 * (label.k + 2))


@lru_cache(maxsize=None)
def datum_affine_sl2(k: int) -> FusionDatum:
    """Affine sl2 at level k: self-dual weights 0..k, central charge 3k/(k+2)."""
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    labels = tuple(AffineSl2Label(k, lam) for lam in range(k + 1))
    return FusionDatum(
        name=f"affine-sl2({k})",
        labels=labels,
        unit=AffineSl2Label(k, 0),
        dual_fn=lambda lab: lab,
        fuse_fn=_fuse_affine,
        cw_fn=_cw_affine,
        central_charge=Fraction(3 * k, k + 2),
    )


def _fuse_cyclic(l1: CyclicLabel, l2: CyclicLabel) -> Dict[CyclicLabel, int]:
    if l1.m != l2.m:
        raise DomainError(f"order mismatch: {l1} vs {l2}")
    return {CyclicLabel(l1.m, (l1.a + l2.a) % l1.m): 1}


def _dual_cyclic(label: CyclicLabel) -> CyclicLabel:
    return CyclicLabel(label.m, (-label.a) % label.m)


def _cw_cyclic(label: CyclicLabel) -> Fraction:
    return Fraction(label.a * (label.m - label.a), 2 * label.m)


@lru_cache(maxsize=None)
def datum_cyclic(m: int) -> FusionDatum:
    """Group ring of Z/m with cw(a) = a(m-a)/(2m) and central charge m-1."""
    if m < 1:
        raise DomainError(f"order must be >= 1, got {m}")
    labels = tuple(CyclicLabel(m, a) for a in range(m))
    return FusionDatum(
        name=f"cyclic({m})",
        labels=labels,
        unit=CyclicLabel(m, 0),
        dual_fn=_dual_cyclic,
        fuse_fn=_fuse_cyclic,
        cw_fn=_cw_cyclic,
        central_charge=Fraction(m - 1),
    )


@dataclass(frozen=True)
class PairingReport:
    """Outcome of checking a proportional pairing of fusion subrings.

    ``eta`` (the constant ratio cw(f(M))/cw(M) over non-unit simples) is
    present exactly when the map is a fusion-ring injection and the ratio is
    constant; otherwise ``failure_witness`` carries the offending labels and a
    description.
    """

    is_fusion_injection: bool
    eta: Optional[Fraction] = None
    failure_witness: Optional[Tuple[tuple, str]] = None


def verify_pairing(
    source: FusionDatum,
    source_subring: Iterable,
    target: FusionDatum,
    mapping: Mapping,
) -> PairingReport:
    """Check that ``mapping`` injects a source subring into the target fusion ring
    with all three-point ranks preserved and a constant positive weight ratio."""
    sub = validate_subring(source, source_subring)
    for m in sub:
        if m not in mapping:
            raise ConfigurationError(f"pairing map undefined on {m!r}")
        target.index(mapping[m])
    images = [mapping[m] for m in sub]
    if len(set(images)) != len(images):
        return PairingReport(False, failure_witness=(tuple(sub), "map is not injective"))
    if mapping[source.unit] != target.unit:
        return PairingReport(
            False, failure_witness=((source.unit,), "unit does not map to the target unit")
        )
    # ring homomorphism: the fusion table of the images must match the mapped
    # table exactly (extra channels outside the image also break injectivity)
    for a, b in combinations_with_replacement(sub, 2):
        mapped = {mapping[m]: mult for m, mult in source.fuse(a, b).items()}
        image = dict(target.fuse(mapping[a], mapping[b]))
        if mapped != image:
            got = " + ".join(f"{mult}x{m}" for m, mult in sorted(image.items(), key=str))
            want = " + ".join(f"{mult}x{m}" for m, mult in sorted(mapped.items(), key=str))
            return PairingReport(
                False,
                failure_witness=((a, b), f"image fusion {got} differs from mapped fusion {want}"),
            )
    eta: Optional[Fraction] = None
    for m in sub:
        if m == source.unit:
            continue
        cw_src = source.cw(m)
        if cw_src == 0:
            return PairingReport(
                True, failure_witness=((m,), "non-unit simple of weight zero, ratio undefined")
            )
        ratio = Fraction(target.cw(mapping[m]), cw_src)
        if eta is None:
            eta = ratio
        elif ratio != eta:
            return PairingReport(
                True, failure_witness=((m,), f"weight ratio {ratio} differs from {eta}")
            )
    if eta is not None and eta <= 0:
        return PairingReport(True, failure_witness=(tuple(sub), f"ratio {eta} not positive"))
    return PairingReport(True, eta=eta)


# -- the two pairings used by the positivity results ---------------------------


def pairing_T_to_affine(k: int):
    """(source datum, subring, target datum, map) sending M^{2a,a} to weight 2a."""
    source = datum_sl2(k)
    sub = subring_T(k)
    target = datum_affine_sl2(k)
    mapping = {canonicalize(k, 2 * a, a): AffineSl2Label(k, 2 * a) for a in range(k // 2 + 1)}
    return source, sub, target, mapping


def pairing_S1_to_cyclic(k: int):
    """(source datum, subring, target datum, map) sending M^{k,a} to a in Z/k."""
    source = datum_sl2(k)
    sub = subring_S1(k)
    target = datum_cyclic(k)
    mapping = {canonicalize(k, k, a): CyclicLabel(k, a) for a in range(k)}
    return source, sub, target, mapping


def eta_T_rescaled(k: int) -> Fraction:
    """Ratio quoted against level-normalized affine weights 2a(a+1): 1/(2(k+2))."""
    return Fraction(1, 2 * (k + 2))


def eta_S1_rescaled(k: int) -> Fraction:
    """Ratio quoted against weights a(k-a)(k+1)/k: 1/(k+1)."""
    return Fraction(1, k + 1)


def parse_affine_label(text: str) -> AffineSl2Label:
    """Parse the CLI syntax ``A[lam]@k``."""
    m = _AFFINE_RE.match(text.strip())
    if not m:
        raise LabelDomainError(f"cannot parse affine label {text!r}")
    return AffineSl2Label(int(m.group(2)), int(m.group(1)))


def parse_cyclic_label(text: str) -> CyclicLabel:
    """Parse the CLI syntax ``Z[a]@m`` (residue reduced mod m)."""
    m = _CYCLIC_RE.match(text.strip())
    if not m:
        raise LabelDomainError(f"cannot parse cyclic label {text!r}")
    order = int(m.group(2))
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    return CyclicLabel(order, int(m.group(1)) % order)
