"""Exception types shared across orbitkit."""


class OrbitkitError(ValueError):
    """Invalid input to an orbitkit operation."""


class SearchBoundError(RuntimeError):
    """A bounded search (sieve, scan) ran out before finding what was asked."""
