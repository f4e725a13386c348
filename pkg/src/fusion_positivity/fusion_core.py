"""Generic exact-arithmetic engine over a finite fusion-category skeleton.

A FusionDatum packages simple labels, the unit (vacuum), duals, pairwise
fusion products, conformal weights and the central charge.  On top of it this
module computes, with `fractions.Fraction` throughout (no floats anywhere):

* n-point bundle ranks by factorization,
* divisor classes on the moduli of n-pointed rational curves in the
  psi / boundary basis,
* degrees of 4-point divisors,
* intersection numbers with F-curves (4-block partitions of the points),
* triviality tests, exhaustive F-positivity scans, positivity certificates,
* the genus-one tail degree and the lambda-twist threshold.

Channel-weight convention.  Boundary coefficients weight the channel attached
to the distinguished side of each node: for a 4-point degree the side holding
the first module, for an F-curve the central 4-pointed component (the legs
absorb the dual channel).  When conformal weights are dual-symmetric, as for
every self-dual-weight instance in this package with rank <= 2, the choice is
invisible and all the usual permutation/duality invariances hold; instances
whose weight table is not dual-symmetric get a well-defined value pinned by
this convention.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

from .errors import (
    ArityError,
    ClosureError,
    DomainError,
    LabelDomainError,
    PartitionError,
)

Label = Any
Q = Fraction


class FusionDatum:
    """Finite fusion-ring skeleton: labels, unit, duals, fusion, weights, central charge.

    Immutable after construction (the fusion table and rank/degree caches fill
    lazily but idempotently, so sharing across workers is safe).  ``fuse_fn``
    must be a picklable callable mapping a pair of labels to a
    ``{label: multiplicity}`` expansion; duals and weights are tabulated
    eagerly.
    """

    __slots__ = (
        "name",
        "labels",
        "unit",
        "central_charge",
        "_index",
        "_dual",
        "_cw",
        "_fuse_fn",
        "_fusion",
        "_rank_cache",
        "_deg4_cache",
        "_leg_cache",
    )

    def __init__(
        self,
        name: str,
        labels: Iterable[Label],
        unit: Label,
        dual_fn: Callable[[Label], Label],
        fuse_fn: Callable[[Label, Label], Mapping[Label, int]],
        cw_fn: Callable[[Label], Fraction],
        central_charge: Fraction,
    ) -> None:
        self.name = name
        self.labels = tuple(labels)
        self._index = {m: i for i, m in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise DomainError(f"{name}: duplicate labels")
        if unit not in self._index:
            raise DomainError(f"{name}: unit {unit!r} not among labels")
        self.unit = unit
        self.central_charge = Fraction(central_charge)
        self._dual = {m: dual_fn(m) for m in self.labels}
        self._cw = {m: Fraction(cw_fn(m)) for m in self.labels}
        self._fuse_fn = fuse_fn
        self._fusion: dict = {}
        self._rank_cache: dict = {}
        self._deg4_cache: dict = {}
        self._leg_cache: dict = {}
        for m, md in self._dual.items():
            if md not in self._index:
                raise DomainError(f"{name}: dual of {m!r} leaves the label set")
            if self._dual[md] != m:
                raise DomainError(f"{name}: dual is not involutive at {m!r}")
        if self._dual[self.unit] != self.unit:
            raise DomainError(f"{name}: unit is not self-dual")
        if self._cw[self.unit] != 0:
            raise DomainError(f"{name}: unit has nonzero conformal weight")

    # -- basic accessors ----------------------------------------------------

    def index(self, m: Label) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise LabelDomainError(f"{self.name}: unknown label {m!r}") from None

    def dual(self, m: Label) -> Label:
        self.index(m)
        return self._dual[m]

    def cw(self, m: Label) -> Fraction:
        self.index(m)
        return self._cw[m]

    def fuse(self, a: Label, b: Label) -> Mapping[Label, int]:
        """Fusion product a (x) b as a {label: multiplicity} table (cached)."""
        ia, ib = self.index(a), self.index(b)
        key = (ia, ib) if ia <= ib else (ib, ia)
        table = self._fusion.get(key)
        if table is None:
            x, y = self.labels[key[0]], self.labels[key[1]]
            table = dict(self._fuse_fn(x, y))
            if not table:
                raise DomainError(f"{self.name}: empty fusion product {x!r}*{y!r}")
            for m, mult in table.items():
                if m not in self._index or mult < 1:
                    raise DomainError(f"{self.name}: bad fusion term {m!r}:{mult} in {x!r}*{y!r}")
            self._fusion[key] = table
        return table

    def rank3(self, a: Label, b: Label, c: Label) -> int:
        """Rank of the 3-pointed bundle: multiplicity of dual(c) in a (x) b."""
        return self.fuse(a, b).get(self.dual(c), 0)

    def sort_key(self, m: Label):
        return self._index[m]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FusionDatum({self.name}, {len(self.labels)} labels)"

    # -- structural validation ----------------------------------------------

    def validate(self, *, check_cw_duality: bool = True, check_rank3_symmetry: bool = True) -> None:
        """Check the datum axioms; raises DomainError on the first violation.

        Full rank3 symmetry is cubic in the number of labels, so callers guard
        it for large instances.  ``check_cw_duality`` can be switched off for
        instances whose shipped weight table is knowingly not dual-symmetric.
        """
        for m in self.labels:
            table = self.fuse(self.unit, m)
            if table != {m: 1}:
                raise DomainError(f"{self.name}: unit law fails at {m!r}: {table}")
            if check_cw_duality and self._cw[m] != self._cw[self._dual[m]]:
                raise DomainError(f"{self.name}: cw not dual-symmetric at {m!r}")
        for a in self.labels:
            for b in self.labels:
                want = 1 if b == self._dual[a] else 0
                if self.rank3(self.unit, a, b) != want:
                    raise DomainError(f"{self.name}: unit rank3 law fails at ({a!r},{b!r})")
        if check_rank3_symmetry:
            for a in self.labels:
                for b in self.labels:
                    for c in self.labels:
                        r = self.rank3(a, b, c)
                        if not (
                            r == self.rank3(b, a, c)
                            == self.rank3(a, c, b)
                            == self.rank3(c, b, a)
                            == self.rank3(b, c, a)
                            == self.rank3(c, a, b)
                        ):
                            raise DomainError(
                                f"{self.name}: rank3 not Sym(3)-invariant at ({a!r},{b!r},{c!r})"
                            )


# -- value types -------------------------------------------------------------


@dataclass(frozen=True)
class FusionExpansion:
    """Multiset of simple labels with positive multiplicities (a fusion product)."""

    terms: tuple  # ((label, multiplicity), ...) in datum order

    def multiplicity(self, m: Label) -> int:
        for lab, mult in self.terms:
            if lab == m:
                return mult
        return 0

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


@dataclass(frozen=True)
class FCurve:
    """Unordered partition of {1..n} into four nonempty blocks, kept canonical.

    Canonical form sorts each block and orders blocks by (size, elements);
    that order is also the slot order of the central 4-pointed component.
    """

    n: int
    blocks: tuple  # four tuples of ints

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "FCurve":
        blks = [tuple(sorted(set(b))) for b in blocks]
        if len(blks) != 4 or any(not b for b in blks):
            raise PartitionError("an F-curve needs exactly four nonempty blocks")
        seen: list = []
        for b in blks:
            seen.extend(b)
        if sorted(seen) != list(range(1, n + 1)):
            raise PartitionError(f"blocks do not partition {{1..{n}}}: {blks}")
        blks.sort(key=lambda b: (len(b), b))
        return cls(n=n, blocks=tuple(blks))

    @classmethod
    def parse(cls, text: str, n: int) -> "FCurve":
        """Parse the CLI syntax ``{1,2}|{3}|{4}|{5}``."""
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            if not (part.startswith("{") and part.endswith("}")):
                raise PartitionError(f"malformed block {part!r} in {text!r}")
            try:
                blocks.append([int(x) for x in part[1:-1].split(",") if x.strip()])
            except ValueError:
                raise PartitionError(f"malformed block {part!r} in {text!r}") from None
        return cls.from_blocks(blocks, n)

    def __str__(self) -> str:
        return "|".join("{" + ",".join(str(i) for i in b) + "}" for b in self.blocks)


@dataclass(frozen=True)
class DivisorClass:
    """Coefficients of a genus-0 coinvariant divisor in the psi/boundary basis.

    Boundary keys are the canonical subsets I of {1..n} with 2 <= |I| <= n/2,
    the smaller block of {I, I^c} (lexicographically least block on ties).
    """

    n: int
    mu: int
    psi_coeffs: tuple  # n Fractions
    boundary_coeffs: Mapping  # canonical tuple(I) -> Fraction

    def boundary(self, subset: Iterable[int]) -> Fraction:
        return self.boundary_coeffs[canonical_boundary_key(subset, self.n)]


@dataclass(frozen=True)
class ScanReport:
    """Outcome of an exhaustive 4-multiset F-positivity scan."""

    tuples_examined: int
    min_degree: Fraction
    counterexamples: tuple  # ((label 4-tuple, degree), ...) in enumeration order
    elapsed: float = field(compare=False, default=0.0)

    def __post_init__(self):
        if bool(self.counterexamples) != (self.min_degree < 0):
            raise DomainError("counterexamples must be nonempty exactly when min_degree < 0")


@dataclass(frozen=True)
class PositivityCertificate:
    """Conformal-weight window certificate for an abelian subring.

    ``c_interval`` is [f_max/2, f_min] and is present exactly when the subring
    is abelian, all weights are nonnegative and f_max <= 2*f_min; a non-abelian
    subring yields ``abelian=False`` with no interval (inapplicable, not an
    error).
    """

    abelian: bool
    f_min: Fraction
    f_max: Fraction
    c_interval: Optional[tuple] = None


# -- shared helpers -----------------------------------------------------------


def _check_modules(datum: FusionDatum, modules: Sequence[Label], *, minimum: int, maximum: Optional[int] = None) -> tuple:
    ms = tuple(modules)
    if len(ms) < minimum or (maximum is not None and len(ms) > maximum):
        span = f"exactly {minimum}" if maximum == minimum else f"at least {minimum}"
        raise ArityError(f"need {span} modules, got {len(ms)}")
    for m in ms:
        datum.index(m)
    return ms


def canonical_boundary_key(subset: Iterable[int], n: int) -> tuple:
    """Canonical representative of {I, I^c}: the smaller block, lex-least on ties."""
    s = tuple(sorted(set(subset)))
    if not all(1 <= i <= n for i in s):
        raise DomainError(f"subset {s} not within 1..{n}")
    comp = tuple(i for i in range(1, n + 1) if i not in set(s))
    if len(s) != len(comp):
        return s if len(s) < len(comp) else comp
    return min(s, comp)


def validate_subring(datum: FusionDatum, subring_labels: Iterable[Label]) -> tuple:
    """Sorted, de-duplicated subring labels; raises ClosureError if not closed."""
    sub = sorted(set(subring_labels), key=datum.index)
    if not sub:
        raise ClosureError("empty subring")
    members = set(sub)
    for m in sub:
        if datum.dual(m) not in members:
            raise ClosureError(f"subring not closed under duals at {m!r}")
    for a, b in combinations_with_replacement(sub, 2):
        for term in datum.fuse(a, b):
            if term not in members:
                raise ClosureError(f"subring not closed under fusion: {a!r}*{b!r} contains {term!r}")
    return tuple(sub)


# -- engine operations --------------------------------------------------------


def expand_fusion(datum: FusionDatum, a: Label, b: Label) -> FusionExpansion:
    """Fusion product a (x) b; the multiplicity of M equals rank3(a, b, dual(M))."""
    table = datum.fuse(a, b)
    terms = tuple(sorted(table.items(), key=lambda kv: datum.index(kv[0])))
    return FusionExpansion(terms=terms)


def rank_n(datum: FusionDatum, modules: Sequence[Label]) -> int:
    """Rank of the n-pointed genus-0 bundle via factorization (n >= 2).

    n = 2 is the dual-pairing convention [m2 == dual(m1)], n = 3 the fusion
    rule, and n >= 4 folds over channels of the last pair.  The result is
    independent of the input order; the memo cache is keyed by the sorted
    label multiset.
    """
    ms = _check_modules(datum, modules, minimum=2)
    ms = tuple(sorted(ms, key=datum.sort_key))
    if len(ms) == 2:
        return 1 if ms[1] == datum.dual(ms[0]) else 0
    if len(ms) == 3:
        return datum.rank3(*ms)
    key = tuple(datum.sort_key(m) for m in ms)
    cached = datum._rank_cache.get(key)
    if cached is not None:
        return cached
    total = 0
    head = ms[:-2]
    for channel, mult in datum.fuse(ms[-2], ms[-1]).items():
        total += mult * rank_n(datum, head + (channel,))
    datum._rank_cache[key] = total
    return total


def rank_split(datum: FusionDatum, left: Sequence[Label], right: Sequence[Label]) -> int:
    """Rank computed by factorizing across an arbitrary two-block split.

    Equals rank_n(left + right); used to exercise factorization independence.
    """
    left = tuple(left)
    right = tuple(right)
    if not left or not right:
        return rank_n(datum, left + right)
    total = 0
    for w in datum.labels:
        r1 = rank_n(datum, left + (w,)) if len(left) >= 1 else 0
        if r1 == 0:
            continue
        total += r1 * rank_n(datum, right + (datum.dual(w),))
    return total


def degree_04(datum: FusionDatum, modules: Sequence[Label]) -> Fraction:
    """Degree of the 4-point coinvariant divisor.

    mu * sum(cw) minus, for each pairing of the first module with another, the
    channel-weight sum sum_W cw(W) * rank3(m1, mp, W) * rank3(mq, mr, dual W).
    Returns 0 whenever the rank vanishes.
    """
    ms = _check_modules(datum, modules, minimum=4, maximum=4)
    m1, rest = ms[0], ms[1:]
    key = (datum.sort_key(m1), tuple(sorted(datum.sort_key(m) for m in rest)))
    cached = datum._deg4_cache.get(key)
    if cached is not None:
        return cached
    mu = rank_n(datum, ms)
    if mu == 0:
        result = Fraction(0)
    else:
        result = mu * sum((datum.cw(m) for m in ms), Fraction(0))
        for p in range(3):
            mp = rest[p]
            mq, mr = (rest[q] for q in range(3) if q != p)
            side1 = datum.fuse(m1, mp)
            side2 = datum.fuse(mq, mr)
            for x, mult1 in side1.items():
                xd = datum.dual(x)
                mult2 = side2.get(xd)
                if mult2:
                    result -= datum.cw(xd) * (mult1 * mult2)
    datum._deg4_cache[key] = result
    return result


def divisor_class(datum: FusionDatum, modules: Sequence[Label]) -> DivisorClass:
    """Divisor class on the moduli of n-pointed rational curves (n >= 4).

    psi_coeffs[i] = mu * cw(M^i); the boundary coefficient at a canonical
    subset I is sum_W cw(W) * rank(M^I + [W]) * rank(M^{I^c} + [dual W]).
    """
    ms = _check_modules(datum, modules, minimum=4)
    n = len(ms)
    mu = rank_n(datum, ms)
    psi = tuple(mu * datum.cw(m) for m in ms)
    boundary = {}
    for size in range(2, n // 2 + 1):
        for subset in combinations(range(1, n + 1), size):
            if canonical_boundary_key(subset, n) != subset:
                continue
            inside = [ms[i - 1] for i in subset]
            outside = [ms[i - 1] for i in range(1, n + 1) if i not in set(subset)]
            coeff = Fraction(0)
            for w in datum.labels:
                r1 = rank_n(datum, inside + [w])
                if r1 == 0:
                    continue
                r2 = rank_n(datum, outside + [datum.dual(w)])
                if r2:
                    coeff += datum.cw(w) * (r1 * r2)
            boundary[subset] = coeff
    return DivisorClass(n=n, mu=mu, psi_coeffs=psi, boundary_coeffs=boundary)


def fcurve_intersect(datum: FusionDatum, modules: Sequence[Label], curve: FCurve) -> Fraction:
    """Intersection number of the divisor with the F-curve of a 4-block partition.

    Sum over channel 4-tuples (W1..W4) of degree_04([W1..W4]) times the
    product of leg ranks rank(M^{I_p} + [dual(W^p)]): the central component
    carries the channels, each leg the dual.  Singleton legs use the 2-point
    convention, so for n = 4 with singleton blocks this is degree_04 itself.
    """
    ms = _check_modules(datum, modules, minimum=4)
    n = len(ms)
    if curve.n != n:
        raise PartitionError(f"curve on {curve.n} points used with {n} modules")
    supports = []
    for block in curve.blocks:
        sup = _leg_support(datum, tuple(ms[i - 1] for i in block))
        if not sup:
            return Fraction(0)
        supports.append(sup)
    total = Fraction(0)
    for combo in product(*supports):
        spine = [w for w, _ in combo]
        weight = 1
        for _, r in combo:
            weight *= r
        total += degree_04(datum, spine) * weight
    return total


def _leg_support(datum: FusionDatum, leg: tuple) -> tuple:
    """Nonzero channels of an F-curve leg: (W, rank(leg + [dual W])) pairs (cached)."""
    key = tuple(sorted(datum.sort_key(m) for m in leg))
    cached = datum._leg_cache.get(key)
    if cached is None:
        sup = []
        for w in datum.labels:
            r = rank_n(datum, leg + (datum.dual(w),))
            if r:
                sup.append((w, r))
        cached = tuple(sup)
        datum._leg_cache[key] = cached
    return cached


def four_block_partitions(n: int):
    """All partitions of {1..n} into exactly four nonempty unordered blocks."""
    blocks: list = [[], [], [], []]

    def rec(i: int, used: int):
        if n - i < 4 - used:
            return
        if i == n:
            if used == 4:
                yield tuple(tuple(b) for b in blocks)
            return
        elem = i + 1
        for j in range(used):
            blocks[j].append(elem)
            yield from rec(i + 1, used)
            blocks[j].pop()
        if used < 4:
            blocks[used].append(elem)
            yield from rec(i + 1, used + 1)
            blocks[used].pop()

    yield from rec(0, 0)


def is_trivial(datum: FusionDatum, modules: Sequence[Label]) -> bool:
    """True iff the divisor intersects every F-curve in zero.

    Relies on the standard fact that F-curve classes span the numerical curve
    space of the moduli of n-pointed rational curves.
    """
    ms = _check_modules(datum, modules, minimum=4)
    n = len(ms)
    for blocks in four_block_partitions(n):
        curve = FCurve.from_blocks(blocks, n)
        if fcurve_intersect(datum, ms, curve) != 0:
            return False
    return True


def _scan_block(datum: FusionDatum, sub: tuple, first_indices: Sequence[int]):
    """Scan all 4-multisets whose least label index lies in ``first_indices``."""
    fuse = datum.fuse
    dual = datum._dual
    examined = 0
    min_degree: Optional[Fraction] = None
    negatives = []
    for i in first_indices:
        a = sub[i]
        for b, c, d in combinations_with_replacement(sub[i:], 3):
            examined += 1
            side1 = fuse(a, b)
            side2 = fuse(c, d)
            rank = 0
            for x, mult1 in side1.items():
                mult2 = side2.get(dual[x])
                if mult2:
                    rank += mult1 * mult2
            if rank == 0:
                continue
            deg = degree_04(datum, (a, b, c, d))
            if min_degree is None or deg < min_degree:
                min_degree = deg
            if deg < 0:
                negatives.append(((a, b, c, d), deg))
    return examined, min_degree, negatives


def scan_f_positivity(datum: FusionDatum, subring_labels: Iterable[Label], jobs: int = 1) -> ScanReport:
    """Exhaustive F-positivity scan over all unordered 4-multisets of a subring.

    Records the minimum degree over the multisets of nonzero rank and every
    strictly negative instance, in label-index enumeration order.  The result
    is identical for any worker count.
    """
    sub = validate_subring(datum, subring_labels)
    start = time.perf_counter()
    indices = list(range(len(sub)))
    if jobs <= 1 or len(sub) < 8:
        parts = [_scan_block(datum, sub, indices)]
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [indices[j::jobs] for j in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_block, [datum] * len(chunks), [sub] * len(chunks), chunks))
    examined = sum(p[0] for p in parts)
    mins = [p[1] for p in parts if p[1] is not None]
    min_degree = min(mins) if mins else Fraction(0)
    negatives = [neg for p in parts for neg in p[2]]
    negatives.sort(key=lambda item: tuple(datum.sort_key(m) for m in item[0]))
    return ScanReport(
        tuples_examined=examined,
        min_degree=min_degree,
        counterexamples=tuple(negatives),
        elapsed=time.perf_counter() - start,
    )


def positivity_certificate(datum: FusionDatum, subring_labels: Iterable[Label]) -> PositivityCertificate:
    """Conformal-weight window [f_max/2, f_min] for an abelian subring.

    f_min/f_max run over the non-unit simples (both 0 for the unit-only
    subring).  The interval exists iff the subring is abelian, all weights are
    nonnegative and f_max <= 2*f_min; paired with a clean F-positivity scan it
    certifies nefness of every divisor supported on the subring.
    """
    sub = validate_subring(datum, subring_labels)
    abelian = True
    for a, b in combinations_with_replacement(sub, 2):
        table = datum.fuse(a, b)
        if len(table) != 1 or next(iter(table.values())) != 1:
            abelian = False
            break
    nonunit = [m for m in sub if m != datum.unit]
    if nonunit:
        weights = [datum.cw(m) for m in nonunit]
        f_min, f_max = min(weights), max(weights)
    else:
        f_min = f_max = Fraction(0)
    interval = None
    if abelian and f_max <= 2 * f_min and all(datum.cw(m) >= 0 for m in sub):
        interval = (Fraction(f_max, 2), f_min)
    return PositivityCertificate(abelian=abelian, f_min=f_min, f_max=f_max, c_interval=interval)


def degree_11(datum: FusionDatum, w: Label) -> Fraction:
    """Degree of the genus-one 1-point divisor attached to a simple module."""
    datum.index(w)
    half_c = Fraction(datum.central_charge, 2)
    total = Fraction(0)
    for wt in datum.labels:
        r = datum.rank3(w, wt, datum.dual(wt))
        if r:
            total += (half_c + datum.cw(w) - 12 * datum.cw(wt)) * r
    return total


def lambda_threshold(datum: FusionDatum, subring_labels: Iterable[Label]) -> Fraction:
    """Least t >= 0 with t + c/2 + cw(W) - 12*cw(W~) >= 0 over all in-scope pairs.

    W ranges over the subring, W~ over all labels with rank3(W, W~, dual W~)
    nonzero (the elliptic-tail channels).
    """
    sub = validate_subring(datum, subring_labels)
    half_c = Fraction(datum.central_charge, 2)
    best: Optional[Fraction] = None
    for w in sub:
        cw_w = datum.cw(w)
        for wt in datum.labels:
            if datum.rank3(w, wt, datum.dual(wt)) >= 1:
                value = 12 * datum.cw(wt) - half_c - cw_w
                if best is None or value > best:
                    best = value
    if best is None or best < 0:
        return Fraction(0)
    return best
