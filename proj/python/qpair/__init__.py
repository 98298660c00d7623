"""Exact computations in a quantized enveloping algebra.

Thin re-export of the compiled extension: Cartan data, the algebra with
its normal forms and braid symmetries, the bilinear pairing between the
two halves, simple weight modules, and the identity-check suite.
"""

try:
    # installed layout: the extension lives inside the package
    from ._qpair import (
        Algebra,
        Datum,
        Element,
        Pairing,
        Scalar,
        Tensor,
        WeightModule,
        highest_module,
        lowest_module,
        registered_checks,
        verify,
    )
except ImportError:  # development layout: extension on PYTHONPATH
    from _qpair import (
        Algebra,
        Datum,
        Element,
        Pairing,
        Scalar,
        Tensor,
        WeightModule,
        highest_module,
        lowest_module,
        registered_checks,
        verify,
    )

__all__ = [
    "Algebra",
    "Datum",
    "Element",
    "Pairing",
    "Scalar",
    "Tensor",
    "WeightModule",
    "highest_module",
    "lowest_module",
    "registered_checks",
    "verify",
]
