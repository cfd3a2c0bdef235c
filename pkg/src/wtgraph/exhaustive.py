"""Whole-order scans over every labeled graph, backend-selected.

The compiled kernel is preferred when its extension built; the pure
kernel is the fallback and the reference implementation.  Both answer
class membership by three routes (degree profile, obstruction screen,
structural reduction) so a scan doubles as a consistency audit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimit

try:
    from . import _fastscan as _kernel

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    from . import _pyscan as _kernel

    BACKEND = "pure"

from . import _pyscan

SCAN_MAX = 7


@dataclass(frozen=True)
class ScanResult:
    order: int
    total: int
    wt_count: int
    disagreements: int
    complement_mismatches: int
    sequences: frozenset[tuple[int, ...]]
    first_disagreement: int | None
    backend: str

    @property
    def consistent(self) -> bool:
        return self.disagreements == 0 and self.complement_mismatches == 0


def scan_all(n: int, backend: str | None = None) -> ScanResult:
    """Scan all 2^(n(n-1)/2) labeled graphs of order n.

    ``backend`` forces "pure" or "compiled"; default is the imported
    preference.
    """
    if n < 1:
        raise ValueError(f"order must be positive: {n}")
    if n > SCAN_MAX:
        raise SizeLimit(f"full scans bounded at order {SCAN_MAX}")
    kern, name = _pick(backend)
    total, wt, dis, comp, seqs, first = kern.scan(n)
    return ScanResult(n, total, wt, dis, comp, seqs, first, name)


def routes(n: int, mask: int, backend: str | None = None):
    """Three membership verdicts for the graph encoded by ``mask``."""
    if n < 1 or n > SCAN_MAX + 1:
        raise ValueError(f"order out of range: {n}")
    nbits = n * (n - 1) // 2
    if not 0 <= mask < 1 << nbits:
        raise ValueError(f"mask out of range for order {n}: {mask}")
    kern, _ = _pick(backend)
    return kern.routes(n, mask)


def edge_mask(n: int, edges) -> int:
    """Mask encoding for an edge list, colex pair order."""
    mask = 0
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge ({u}, {v}) for order {n}")
        mask |= 1 << _pyscan._pair_bit(u, v)
    return mask


def _pick(backend: str | None):
    if backend is None:
        return _kernel, BACKEND
    if backend == "pure":
        return _pyscan, "pure"
    if backend == "compiled":
        if BACKEND != "compiled":
            raise RuntimeError("compiled kernel not built")
        return _kernel, "compiled"
    raise ValueError(f"unknown backend: {backend!r}")
