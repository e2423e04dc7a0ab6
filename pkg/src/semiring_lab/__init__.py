"""Semiring ideal theory: finite tables, symbolic semidomains, theorem cross-checks."""
