"""Degree-sequence arithmetic.

A degree sequence is kept as a tuple of nonnegative integers in
nonincreasing order.  Everything downstream leans on two quantities:

- the corrected Durfee number m(d), the largest i with d_i >= i - 1
  (1-indexed; always at least 1 since d_1 >= 0), and
- the slack of the k-th Erdos-Gallai inequality,

      delta_k = k(k-1) + sum_{i>k} min(k, d_i) - sum_{i<=k} d_i,

  defined for 1 <= k <= m(d).

A sequence with even sum is graphic iff every delta_k >= 0; threshold
iff every delta_k = 0; weakly threshold iff every delta_k <= 1; and
split iff delta_m = 0.  Non-graphic sequences are first-class values
here and delta_k may be negative for them.

The corrected Ferrers diagram places stars on the main diagonal of an
n x n grid and fills each row i with d_i ones, left-justified, skipping
the star.  delta_k then counts ones below the diagonal in the first k
columns minus ones right of the diagonal in the first k rows.
"""

from dataclasses import dataclass

from .errors import EmptySequence, IndexOutOfRange, RowOverflow

DegreeSequence = tuple[int, ...]


def normalize(raw) -> DegreeSequence:
    """Sort raw degree values into a nonincreasing tuple.

    Raises EmptySequence on empty input and ValueError on negative or
    non-integer terms.
    """
    terms = sorted(raw, reverse=True)
    if not terms:
        raise EmptySequence("degree sequence needs at least one term")
    for t in terms:
        if not isinstance(t, int) or isinstance(t, bool) or t < 0:
            raise ValueError(f"degree terms must be nonnegative integers, got {t!r}")
    return tuple(terms)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse the comma-separated text form, e.g. "3,3,2,1,1"."""
    parts = text.split(",")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not a degree-sequence literal: {text!r}") from None
    return normalize(values)


def format_sequence(d: DegreeSequence) -> str:
    """Inverse of parse_sequence."""
    return ",".join(str(t) for t in d)


def corrected_durfee(d: DegreeSequence) -> int:
    """Largest i (1-indexed) with d_i >= i - 1; at least 1."""
    m = 1
    for i in range(2, len(d) + 1):
        # d is nonincreasing and i - 1 increases, so the first failure is final
        if d[i - 1] < i - 1:
            break
        m = i
    return m


def eg_difference(d: DegreeSequence, k: int) -> int:
    """Slack of the k-th Erdos-Gallai inequality, 1 <= k <= m(d)."""
    m = corrected_durfee(d)
    if not 1 <= k <= m:
        raise IndexOutOfRange(f"k={k} outside 1..{m}")
    tail = sum(min(k, t) for t in d[k:])
    return k * (k - 1) + tail - sum(d[:k])


@dataclass(frozen=True)
class EgProfile:
    m: int
    deltas: tuple[int, ...]


def eg_profile(d: DegreeSequence) -> EgProfile:
    """All slacks delta_1..delta_m in one record."""
    m = corrected_durfee(d)
    head = 0
    deltas = []
    for k in range(1, m + 1):
        head += d[k - 1]
        tail = sum(min(k, t) for t in d[k:])
        deltas.append(k * (k - 1) + tail - head)
    return EgProfile(m, tuple(deltas))


def is_graphic(d: DegreeSequence) -> bool:
    """Erdos-Gallai test: even sum and no negative slack."""
    if sum(d) % 2 != 0:
        return False
    if d[0] > len(d) - 1:
        return False
    return all(x >= 0 for x in eg_profile(d).deltas)


@dataclass(frozen=True)
class SequenceClass:
    graphic: bool
    split: bool
    weakly_threshold: bool
    threshold: bool


def classify(d: DegreeSequence) -> SequenceClass:
    """Class flags; threshold => weakly_threshold => split => graphic."""
    prof = eg_profile(d)
    graphic = sum(d) % 2 == 0 and d[0] <= len(d) - 1 and all(x >= 0 for x in prof.deltas)
    split = graphic and prof.deltas[-1] == 0
    wt = graphic and all(x <= 1 for x in prof.deltas)
    threshold = graphic and all(x == 0 for x in prof.deltas)
    return SequenceClass(graphic, split, wt, threshold)


STAR = "*"
ONE = "1"
ZERO = "0"


@dataclass(frozen=True)
class FerrersDiagram:
    """Corrected Ferrers diagram: n x n cells over {'*','1','0'}."""

    n: int
    cells: tuple[tuple[str, ...], ...]

    def below_diagonal_count(self, k: int) -> int:
        """Ones strictly below the diagonal within the first k columns."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"k={k} outside 1..{self.n}")
        return sum(
            1
            for i in range(self.n)
            for j in range(min(k, i))
            if self.cells[i][j] == ONE
        )

    def right_of_diagonal_count(self, k: int) -> int:
        """Ones strictly right of the diagonal within the first k rows."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"k={k} outside 1..{self.n}")
        return sum(
            1
            for i in range(min(k, self.n))
            for j in range(i + 1, self.n)
            if self.cells[i][j] == ONE
        )


def ferrers(d: DegreeSequence) -> FerrersDiagram:
    """Build the corrected Ferrers diagram of d.

    Each row i holds d_i ones in the leftmost non-diagonal positions.
    Raises RowOverflow when some d_i > n - 1, since the row then cannot
    hold d_i ones.
    """
    n = len(d)
    rows = []
    for i, t in enumerate(d):
        if t > n - 1:
            raise RowOverflow(f"term {t} at position {i + 1} exceeds n-1={n - 1}")
        row = [ZERO] * n
        row[i] = STAR
        placed = 0
        for j in range(n):
            if placed == t:
                break
            if j == i:
                continue
            row[j] = ONE
            placed += 1
        rows.append(tuple(row))
    return FerrersDiagram(n, tuple(rows))


def render_ferrers(diagram: FerrersDiagram) -> str:
    """One line per row, cells single-space separated, trailing newline."""
    return "".join(" ".join(row) + "\n" for row in diagram.cells)
