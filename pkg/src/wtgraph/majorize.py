"""Dominance (majorization) order on degree sequences.

p majorizes q when both have the same total and every prefix sum of p
is at least the matching prefix sum of q, reading missing terms as 0.
A unit transformation moves one unit from a term to a term smaller by
at least 2; each such move steps strictly down in the order.  The
weakly threshold sequences form an upward-closed set, and the
threshold sequences are exactly the maximal graphic elements.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import seqcore
from .errors import InvalidTransformation, NotGraphic, SizeLimit

UPWARD_CLOSURE_BOUND = 8


@dataclass(frozen=True)
class UnitTransformation:
    """Positions are 1-indexed into the nonincreasing sequence."""

    from_index: int
    to_index: int


def majorizes(p: seqcore.DegreeSequence, q: seqcore.DegreeSequence) -> bool:
    width = max(len(p), len(q))
    pp = list(p) + [0] * (width - len(p))
    qq = list(q) + [0] * (width - len(q))
    if sum(pp) != sum(qq):
        return False
    acc_p = acc_q = 0
    for a, b in zip(pp, qq):
        acc_p += a
        acc_q += b
        if acc_p < acc_q:
            return False
    return True


def apply_unit_transformation(
    a: seqcore.DegreeSequence, t: UnitTransformation
) -> seqcore.DegreeSequence:
    i, j = t.from_index, t.to_index
    if not (1 <= i <= len(a) and 1 <= j <= len(a)) or i == j:
        raise InvalidTransformation(f"positions ({i},{j}) invalid for length {len(a)}")
    if a[i - 1] < a[j - 1] + 2:
        raise InvalidTransformation(
            f"terms {a[i - 1]} and {a[j - 1]} differ by less than 2"
        )
    work = list(a)
    work[i - 1] -= 1
    work[j - 1] += 1
    return seqcore.normalize(work)


def downward_neighbors(a: seqcore.DegreeSequence) -> set[seqcore.DegreeSequence]:
    """Distinct results of a single unit transformation."""
    out = set()
    for i in range(1, len(a) + 1):
        for j in range(1, len(a) + 1):
            if i != j and a[i - 1] >= a[j - 1] + 2:
                out.add(apply_unit_transformation(a, UnitTransformation(i, j)))
    return out


@lru_cache(maxsize=4096)
def graphic_sequences(n: int, total: int) -> tuple[seqcore.DegreeSequence, ...]:
    """All graphic sequences of the given length and degree sum."""

    def rec(remaining, cap, acc_sum, acc):
        if remaining == 0:
            if acc_sum == total:
                yield tuple(acc)
            return
        for v in range(min(cap, total - acc_sum), -1, -1):
            if acc_sum + v * remaining < total:
                # v descending: smaller values cannot reach the total either
                break
            acc.append(v)
            yield from rec(remaining - 1, v, acc_sum + v, acc)
            acc.pop()

    found = [s for s in rec(n, n - 1, 0, []) if seqcore.is_graphic(s)]
    return tuple(found)


def is_majorization_maximal(d: seqcore.DegreeSequence) -> bool:
    """No other graphic sequence of the same length and sum majorizes d."""
    if not seqcore.is_graphic(d):
        raise NotGraphic(seqcore.format_sequence(d))
    for e in graphic_sequences(len(d), sum(d)):
        if e != d and majorizes(e, d):
            return False
    return True


@dataclass(frozen=True)
class UpwardClosureReport:
    n: int
    total: int
    wt_count: int
    pairs_checked: int
    counterexamples: tuple


def verify_upward_closure(n: int, total: int) -> UpwardClosureReport:
    """Check every graphic e majorizing a WT d of shape (n, total) is WT.

    counterexamples must come back empty; anything else disproves
    upward closure.
    """
    if n > UPWARD_CLOSURE_BOUND:
        raise SizeLimit(f"n={n} exceeds bound {UPWARD_CLOSURE_BOUND}")
    pool = graphic_sequences(n, total)
    wt = [d for d in pool if seqcore.classify(d).weakly_threshold]
    bad = []
    pairs = 0
    for d in wt:
        for e in pool:
            if e == d or not majorizes(e, d):
                continue
            pairs += 1
            if not seqcore.classify(e).weakly_threshold:
                bad.append((e, d))
    return UpwardClosureReport(n, total, len(wt), pairs, tuple(sorted(bad)))
