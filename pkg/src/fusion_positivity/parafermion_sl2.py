"""Level-k sl2 parafermion instance.

Canonical module labels M[i,j]@k with 0 <= j < i <= k (vacuum M[k,0]),
contragredient duals, exact conformal weights, fusion rules, the closed-form
four-point rank and degree, non-triviality criteria for the self-dual family
M^{2a,a} and the top-row family M^{k,a}, the rank-support interval for
symmetric tuples, and the two distinguished subrings T(k) and S1(k).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .errors import DomainError, LabelDomainError, PreconditionError, ResourceLimitError
from .fusion_core import FusionDatum

_LABEL_RE = re.compile(r"^M\[(-?\d+),(-?\d+)\]@(\d+)$")


@dataclass(frozen=True, order=True)
class Sl2Label:
    """Canonical simple-module label (i, j) at level k, with 0 <= j < i <= k."""

    k: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"level must be >= 1, got {self.k}")
        if not (0 <= self.j < self.i <= self.k):
            raise LabelDomainError(f"({self.i},{self.j}) is not canonical at level {self.k}")

    def __str__(self) -> str:
        return f"M[{self.i},{self.j}]@{self.k}"


def canonicalize(k: int, i: int, j: int) -> Sl2Label:
    """Canonical representative of M^{i,j}; applies M^{i,j} ~ M^{k-i, j-i mod k}."""
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    if not 0 <= i <= k:
        raise DomainError(f"first index {i} outside [0,{k}]")
    j %= k
    if j < i:
        return Sl2Label(k, i, j)
    return Sl2Label(k, k - i, (j - i) % k)


def vacuum(k: int) -> Sl2Label:
    return Sl2Label(k, k, 0)


def dual(label: Sl2Label) -> Sl2Label:
    """Contragredient dual: M^{i,j} -> M^{i, i-j}, canonicalized (involutive)."""
    return canonicalize(label.k, label.i, label.i - label.j)


def conformal_weight(label: Sl2Label) -> Fraction:
    """cw = (k(i + 2ij - 2j^2) - (i - 2j)^2) / (2k(k+2)); zero only at the vacuum."""
    k, i, j = label.k, label.i, label.j
    return Fraction(k * (i + 2 * i * j - 2 * j * j) - (i - 2 * j) ** 2, 2 * k * (k + 2))


def fuse(l1: Sl2Label, l2: Sl2Label) -> Dict[Sl2Label, int]:
    """Fusion product: channels l with l = i1+i2 (mod 2), |i1-i2| <= l <= min(i1+i2, 2k-i1-i2).

    The second index of each channel is (2j1 - i1 + 2j2 - i2 + l)/2 mod k; all
    terms are distinct simple labels of multiplicity one.
    """
    if l1.k != l2.k:
        raise DomainError(f"level mismatch: {l1} vs {l2}")
    k = l1.k
    i1, j1, i2, j2 = l1.i, l1.j, l2.i, l2.j
    shift = 2 * j1 - i1 + 2 * j2 - i2
    lo = abs(i1 - i2)
    hi = min(i1 + i2, 2 * k - i1 - i2)
    out: Dict[Sl2Label, int] = {}
    for l in range(lo, hi + 1, 2):
        channel = canonicalize(k, l, (shift + l) // 2)
        if channel in out:
            raise DomainError(f"fusion collision at {l1}*{l2}: {channel}")
        out[channel] = 1
    return out


def all_labels(k: int) -> Tuple[Sl2Label, ...]:
    """All k(k+1)/2 canonical labels, sorted by (i, j)."""
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    return tuple(Sl2Label(k, i, j) for i in range(1, k + 1) for j in range(i))


@lru_cache(maxsize=None)
def datum_sl2(k: int) -> FusionDatum:
    """The full K(sl2,k) fusion datum; central charge 3k/(k+2) - 1."""
    labels = all_labels(k)
    return FusionDatum(
        name=f"K(sl2,{k})",
        labels=labels,
        unit=vacuum(k),
        dual_fn=dual,
        fuse_fn=fuse,
        cw_fn=conformal_weight,
        central_charge=Fraction(2 * (k - 1), k + 2),
    )


# -- closed forms --------------------------------------------------------------


def _parity_count(lo: int, hi: int, parity: int) -> int:
    """Number of integers t in [lo, hi] with t = parity (mod 2)."""
    if lo % 2 != parity:
        lo += 1
    if lo > hi:
        return 0
    return (hi - lo) // 2 + 1


def rank4_closed(labels: Sequence[Sl2Label]) -> int:
    """Closed-form rank of the 4-point bundle (sorts its inputs internally).

    With first components a <= b <= c <= d, s their sum and s' the sum of the
    second components, the rank is the channel count of one of two congruence
    branches: s even with s/2 = s' (mod k), counting
    t in [max(b-a, d-c), min(a+b, 2k-c-d)], or s = k (mod 2) with
    (s-k)/2 = s' (mod k), counting t in [max(b-a, |k-c-d|),
    min(a+b, 2k-a-b, k-d+c)]; both with t = a+b (mod 2).  The branches are
    mutually exclusive and the result equals the factorization rank.
    """
    if len(labels) != 4:
        raise DomainError(f"need exactly 4 labels, got {len(labels)}")
    k = labels[0].k
    if any(lab.k != k for lab in labels):
        raise DomainError("level mismatch among labels")
    a_, b_, c_, d_ = sorted(labels)
    a, b, c, d = a_.i, b_.i, c_.i, d_.i
    s = a + b + c + d
    sp = a_.j + b_.j + c_.j + d_.j
    parity = (a + b) % 2
    if s % 2 == 0 and (s // 2 - sp) % k == 0:
        return _parity_count(max(b - a, d - c), min(a + b, 2 * k - c - d), parity)
    if (s - k) % 2 == 0 and ((s - k) // 2 - sp) % k == 0:
        return _parity_count(max(b - a, abs(k - c - d)), min(a + b, 2 * k - a - b, k - d + c), parity)
    return 0


def _channel_weight_sum(k: int, a: int, ap: int, i: int, ip: int, lo: int, hi: int) -> Fraction:
    """Sum of cw over channels (t, ap - ip + (t-a+i)/2 mod k), t = a+i (mod 2) in [lo, hi]."""
    parity = (a + i) % 2
    if lo % 2 != parity:
        lo += 1
    total = Fraction(0)
    for t in range(lo, hi + 1, 2):
        second = (ap - ip + (t - a + i) // 2) % k
        total += conformal_weight(canonicalize(k, t, second))
    return total


def degree04_closed(base: Sl2Label, dualized: Sequence[Sl2Label]) -> Fraction:
    """Closed-form degree of the divisor on M^{a,a'} (x) the duals of three labels.

    The inputs must share a level and be sorted by first component,
    base <= dualized[0] <= dualized[1] <= dualized[2].  Writing T = b+c+d-a
    and S' = b'+c'+d'-a', the boundary total Lambda is a triple channel-weight
    sum over one of two congruence branches: T/2 = S' (mod k) (channels match
    like-for-like) or (T-k)/2 = S' (mod k) (channels match through the level
    reflection l -> k-l, which tightens the t-range to
    [max(|i-a|, |k-(b+c+d-i)|), min(a+i, 2k-a-i, k-|alpha-beta|)]).  If neither
    congruence holds the boundary vanishes.  The value always equals
    degree_04 of the actual module tuple.
    """
    if len(dualized) != 3:
        raise DomainError(f"need exactly 3 dualized labels, got {len(dualized)}")
    k = base.k
    if any(lab.k != k for lab in dualized):
        raise DomainError("level mismatch among labels")
    firsts = [base.i] + [lab.i for lab in dualized]
    if any(firsts[t] > firsts[t + 1] for t in range(3)):
        raise PreconditionError(f"first components must be sorted, got {firsts}")
    a, ap = base.i, base.j
    others = [(lab.i, lab.j) for lab in dualized]
    b, c, d = (x for x, _ in others)
    bp, cp, dp = (y for _, y in others)

    actual = (base,) + tuple(dual(lab) for lab in dualized)
    mu = rank4_closed(actual)
    c_sigma = conformal_weight(base) + sum(
        (conformal_weight(lab) for lab in dualized), Fraction(0)
    )
    t_sum = b + c + d - a
    s_prime = bp + cp + dp - ap
    lam = Fraction(0)
    if t_sum % 2 == 0 and (t_sum // 2 - s_prime) % k == 0:
        for idx, (i, ip) in enumerate(others):
            alpha, beta = (others[q][0] for q in range(3) if q != idx)
            pair_total = b + c + d - i
            lo = max(abs(i - a), abs(alpha - beta))
            hi = min(a + i, 2 * k - a - i, pair_total, 2 * k - pair_total)
            lam += _channel_weight_sum(k, a, ap, i, ip, lo, hi)
    elif (t_sum - k) % 2 == 0 and ((t_sum - k) // 2 - s_prime) % k == 0:
        for idx, (i, ip) in enumerate(others):
            alpha, beta = (others[q][0] for q in range(3) if q != idx)
            pair_total = b + c + d - i
            lo = max(abs(i - a), abs(k - pair_total))
            hi = min(a + i, 2 * k - a - i, k - abs(alpha - beta))
            lam += _channel_weight_sum(k, a, ap, i, ip, lo, hi)
    return mu * c_sigma - lam


def closed_degree_T(k: int, ts: Sequence[int]) -> Tuple[int, Fraction]:
    """Rank and degree for four self-dual modules M^{2t,t}: mu = 1+k-2*t4, d = mu(-k+sum t).

    Requires each 0 <= t <= k/2, sum(t) >= k, and after ascending sort
    t2 + t3 <= t1 + t4 (the hypothesis making the channel count collapse).
    """
    if len(ts) != 4:
        raise DomainError(f"need exactly 4 parameters, got {len(ts)}")
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    for t in ts:
        if not (0 <= 2 * t <= k):
            raise DomainError(f"parameter {t} outside [0, {k}/2]")
    t1, t2, t3, t4 = sorted(ts)
    total = t1 + t2 + t3 + t4
    if total < k:
        raise PreconditionError(f"sum {total} < level {k}")
    if t2 + t3 > t1 + t4:
        raise PreconditionError(f"t2+t3 = {t2 + t3} exceeds t1+t4 = {t1 + t4}")
    mu = max(0, 1 + k - 2 * t4)
    return mu, Fraction(mu * (total - k))


def nontrivial_T(k: int, a_values: Sequence[int]) -> bool:
    """Non-triviality of the divisor on modules M^{2a_i,a_i}: true iff sum a_i > k."""
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    for a in a_values:
        if not (0 <= 2 * a <= k):
            raise DomainError(f"parameter {a} outside [0, {k}/2]")
    return sum(a_values) > k


def nontrivial_S1(k: int, a_values: Sequence[int], cap: int = 14) -> bool:
    """Non-triviality of the divisor on modules M^{k,a_i}.

    True iff some assignment of the points to four blocks makes the four
    block-sum residues mod k all nonzero with total 2k.  The 4^n assignment
    space is folded through a sorted-residue state table, so the configured
    cap is a contract guard rather than a practical limit.
    """
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    for a in a_values:
        if not (0 <= a <= k - 1):
            raise DomainError(f"residue {a} outside [0, {k - 1}]")
    if len(a_values) > cap:
        raise ResourceLimitError(f"{len(a_values)} points exceeds cap {cap}")
    states = {(0, 0, 0, 0)}
    for a in a_values:
        nxt = set()
        for state in states:
            for slot in range(4):
                s = list(state)
                s[slot] = (s[slot] + a) % k
                nxt.add(tuple(sorted(s)))
        states = nxt
    return any(min(s) != 0 and sum(s) == 2 * k for s in states)


def symmetric_rank_support(k: int, a: int, t: int, x: int) -> bool:
    """Whether the bundle on t copies of M^{2a,a} plus M^{2x,x} has nonzero rank.

    The reachable channel parameters after fusing t copies form a contiguous
    integer interval; this walks the interval recurrence (exact, O(t)) and
    tests membership.  Matches the factorization rank for all inputs.
    """
    if k < 1:
        raise DomainError(f"level must be >= 1, got {k}")
    if not (1 <= 2 * a <= k):
        raise DomainError(f"parameter a={a} outside [1, {k}/2]")
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")
    if x < 0:
        raise DomainError(f"parameter x={x} negative")
    if 2 * x > k:
        return False  # not a label of the self-dual family, so never a channel
    lo = hi = a
    for _ in range(t - 1):
        if lo <= a <= hi:
            new_lo = 0
        elif hi < a:
            new_lo = a - hi
        else:
            new_lo = lo - a
        # peak of c -> min(c+a, k-c-a) sits at 2c = k-2a
        if 2 * hi <= k - 2 * a:
            new_hi = hi + a
        elif 2 * lo >= k - 2 * a:
            new_hi = k - lo - a
        else:
            new_hi = k // 2
        lo, hi = new_lo, new_hi
    return lo <= x <= hi


def subring_T(k: int) -> Tuple[Sl2Label, ...]:
    """The self-dual subring {M^{2a,a} : 0 <= a <= k/2} (canonical labels)."""
    return tuple(canonicalize(k, 2 * a, a) for a in range(k // 2 + 1))


def subring_S1(k: int) -> Tuple[Sl2Label, ...]:
    """The top-row subring {M^{k,a} : 0 <= a <= k-1}."""
    return tuple(canonicalize(k, k, a) for a in range(k))


def parse_sl2_label(text: str) -> Sl2Label:
    """Parse the CLI syntax ``M[i,j]@k`` (canonicalizing the indices)."""
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise LabelDomainError(f"cannot parse sl2 parafermion label {text!r}")
    i, j, k = int(m.group(1)), int(m.group(2)), int(m.group(3))
    return canonicalize(k, i, j)
