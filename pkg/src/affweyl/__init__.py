"""Exact affine Weyl group computations: reduced words, translations,
minimal infinite reduced words and Coxeter elements."""

__version__ = "0.1.0"
