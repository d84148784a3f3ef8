"""Kernel selection: compiled extension if available, pure Python otherwise.

Set ``HEDGEGRAPHS_KERNEL=pure`` (or ``cython``) to force a choice at import
time. The compiled kernel is optional; everything works without it.
"""

import os

from . import pure as _pure


class Backend:
    """Uniform front for a kernel implementation.

    Holds the flattened union-pair representation in whatever container the
    implementation wants (lists for pure Python, int32 arrays for Cython).
    """

    def __init__(self, impl, ptr, pu, pv):
        self.name = impl.NAME
        self._impl = impl
        if impl.NAME == "cython":
            import numpy as np

            self._ptr = np.asarray(ptr, dtype=np.int32)
            self._pu = np.asarray(pu, dtype=np.int32)
            self._pv = np.asarray(pv, dtype=np.int32)
            self._mk = lambda seq: np.asarray(seq, dtype=np.int32)
        else:
            self._ptr, self._pu, self._pv = list(ptr), list(pu), list(pv)
            self._mk = list

    def component_count(self, n, hedges):
        return self._impl.component_count(
            n, self._ptr, self._pu, self._pv, self._mk(hedges)
        )

    def component_labels(self, n, hedges):
        return self._impl.component_labels(
            n, self._ptr, self._pu, self._pv, self._mk(hedges)
        )


_choice = os.environ.get("HEDGEGRAPHS_KERNEL", "").strip().lower()

_impl = None
if _choice != "pure":
    try:
        from . import _ckern as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = None
        if _choice == "cython":
            raise ImportError(
                "HEDGEGRAPHS_KERNEL=cython but the compiled kernel is not built"
            )
if _impl is None:
    _impl = _pure

KERNEL_NAME = _impl.NAME


def get_impl(name=None):
    """Return a kernel module by name ('pure' or 'cython'); default = active."""
    if name is None or name == KERNEL_NAME:
        return _impl
    if name == "pure":
        return _pure
    if name == "cython":
        from . import _ckern

        return _ckern
    raise ValueError(f"unknown kernel {name!r}")


def make_backend(ptr, pu, pv, name=None):
    return Backend(get_impl(name), ptr, pu, pv)
