"""Size guards for the exhaustive scans.

Each cap is a module-level default; every scanning function also accepts an
explicit override so callers (and the CLI) can raise or lower it.
"""

from __future__ import annotations

from .errors import CapExceeded

#: largest |E| for which a 2^|E| subset scan is allowed
MAX_SUBSET_EDGES = 24

#: largest number of assignments a residue scan (m^n candidates) may visit
MAX_RESIDUE_SCAN = 5_000_000


def check_subset_cap(n_edges: int, cap: int | None = None) -> None:
    cap = MAX_SUBSET_EDGES if cap is None else cap
    if n_edges > cap:
        raise CapExceeded(f"2^{n_edges} subset scan exceeds cap 2^{cap}")


def check_scan_cap(base: int, exponent: int, cap: int | None = None) -> None:
    cap = MAX_RESIDUE_SCAN if cap is None else cap
    if base > 1 and exponent > 0 and base**exponent > cap:
        raise CapExceeded(f"{base}^{exponent} assignment scan exceeds cap {cap}")
