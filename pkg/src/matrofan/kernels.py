"""Kernel selection: compiled Cython implementation when importable, else the
pure-Python mirror.  Set MATROFAN_PURE=1 to force the pure implementation."""

import os

if os.environ.get("MATROFAN_PURE"):
    from . import _purekernels as _impl
else:
    try:
        from . import _fastkernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _purekernels as _impl  # type: ignore[no-redef]

IMPLEMENTATION: str = _impl.IMPLEMENTATION
popcount = _impl.popcount
rank_table = _impl.rank_table
validate_bases = _impl.validate_bases
rank_size_counts = _impl.rank_size_counts
flats_from_table = _impl.flats_from_table
closure_from_table = _impl.closure_from_table
canonical_form = _impl.canonical_form
ingleton_scan = _impl.ingleton_scan
