"""congrkit: desk-scale verification of supercongruence conjectures.

Modules:
    padic       truncated p-adic arithmetic and modular square roots
    seqgen      combinatorial sequence generators (exact, Fraction-based)
    specialnum  Bernoulli/Euler numbers and polynomials, Fermat quotients
    quadrep     binary quadratic form representations of primes
    registry    the conjecture catalog and dual-route congruence checks
    harness     CLI, prime sweeps, parallel scheduling, reporting
"""

__version__ = "0.1.0"
