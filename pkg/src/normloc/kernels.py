"""Backend selection for the lattice scan kernels.

The compiled extension works on C int64, so it is only used when every
intermediate value provably fits; otherwise (or when the extension is not
built, or NORMLOC_NO_EXT is set) the pure Python implementation runs.  Both
backends expose identical signatures and produce identical output.
"""

import os

from . import _scan_py

_ext = None
if not os.environ.get("NORMLOC_NO_EXT"):
    try:
        from . import _scan as _ext  # type: ignore[no-redef]
    except ImportError:
        _ext = None

# Partial sums are bounded by |b| + sum |a_ij| * maxabs(box); keep a wide
# safety margin below 2**63.
_INT64_LIMIT = 2 ** 60


def backend() -> str:
    return "compiled" if _ext is not None else "pure"


def _system_bound(coeffs, rhs, lo, hi):
    big = 0
    for a, b in zip(lo, hi):
        big = max(big, abs(a), abs(b))
    worst = 0
    for row, b in zip(coeffs, rhs):
        s = abs(b) + sum(abs(c) for c in row) * big
        if s > worst:
            worst = s
    return worst


def _fits(*systems):
    return all(_system_bound(*s) < _INT64_LIMIT for s in systems)


def scan_points(coeffs, rhs, lo, hi):
    if _ext is not None and _fits((coeffs, rhs, lo, hi)):
        return _ext.scan_points(coeffs, rhs, lo, hi)
    return _scan_py.scan_points(coeffs, rhs, lo, hi)


def scan_first(coeffs, rhs, lo, hi):
    if _ext is not None and _fits((coeffs, rhs, lo, hi)):
        return _ext.scan_first(coeffs, rhs, lo, hi)
    return _scan_py.scan_first(coeffs, rhs, lo, hi)


def scan_undecomposed(rcoeffs, rrhs, rlo, rhi,
                      pcoeffs, prhs, plo, phi,
                      qcoeffs, qrhs, qlo, qhi):
    if _ext is not None and _fits(
        (rcoeffs, rrhs, rlo, rhi),
        (pcoeffs, prhs, plo, phi),
        (qcoeffs, qrhs, qlo, qhi),
        # the inner box mixes z from the R box with the P and Q boxes, so
        # bound every row set over the R box as well
        (pcoeffs, prhs, rlo, rhi),
        (qcoeffs, qrhs, rlo, rhi),
    ):
        return _ext.scan_undecomposed(rcoeffs, rrhs, rlo, rhi,
                                      pcoeffs, prhs, plo, phi,
                                      qcoeffs, qrhs, qlo, qhi)
    return _scan_py.scan_undecomposed(rcoeffs, rrhs, rlo, rhi,
                                      pcoeffs, prhs, plo, phi,
                                      qcoeffs, qrhs, qlo, qhi)
