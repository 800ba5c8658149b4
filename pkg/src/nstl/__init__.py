"""Exact computational engine for canonical bases of the type-A Hecke
algebra, Specht modules, the nonstandard Temperley-Lieb algebra, and
seminormal bases, all over Z[u, u^-1] and Q(u)."""

__version__ = "0.1.0"
