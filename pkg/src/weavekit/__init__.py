"""weavekit — exact-arithmetic workbench for the weaving knots W(3,n).

The package computes quantum invariants of the alternating weaving knots on
three strands (Jones, Alexander, HOMFLY-PT), reconstructs their rational and
integral Khovanov homology from the Jones polynomial, fits Gaussian profiles
to the Betti-number distributions, and evaluates higher twist numbers and
the associated hyperbolic-volume bound curves.  Everything upstream of the
statistics layer is exact integer/rational arithmetic.
"""

from __future__ import annotations

from .laurent import BiLaurentPoly, LaurentPoly, laurent

__all__ = ["LaurentPoly", "BiLaurentPoly", "laurent"]

__version__ = "0.1.0"
