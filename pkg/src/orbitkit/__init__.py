"""Decidable criteria for G-manifolds with finitely many non-principal orbits.

Submodules: :mod:`fgab` (Smith normal form, abelian groups), :mod:`numtheory`
(Loeschian numbers, primes 1 mod 3), :mod:`aw` (Aloff-Wallach invariants),
:mod:`chern`, :mod:`cobordism` (SW numbers), :mod:`orbitspace`,
:mod:`families` and :mod:`cli`.
"""

from .errors import OrbitkitError, SearchBoundError

__version__ = "0.1.0"
__all__ = ["OrbitkitError", "SearchBoundError", "__version__"]
