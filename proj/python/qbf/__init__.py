"""b-functions of determinantal quiver semi-invariants (C++ core)."""

try:  # installed layout: the extension lives inside the package
    from ._qbf import InputError, NotApplicable, bfn, decompose, info, oracle, verify
except ImportError:  # build-tree layout: the extension sits on PYTHONPATH
    from _qbf import InputError, NotApplicable, bfn, decompose, info, oracle, verify

__all__ = ["bfn", "oracle", "verify", "decompose", "info", "InputError", "NotApplicable"]
