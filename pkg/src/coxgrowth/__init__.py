"""Exact growth functions of Coxeter groups and growth rates of ideal
Coxeter polytopes in hyperbolic 3-space."""

from .coxeter import INF, CoxeterMatrix, classify_finite, finite_subsets, solomon_polynomial
from .ideal3 import AngleVector, closed_form_growth, validate
from .perron import isolate_root, ku_certificate, report_for_matrix, report_for_vector
from .polyring import IntPolynomial, RationalFunction, bracket, bracket_product, reduce
from .steinberg import GrowthFunction, growth_function, series_coefficients

__version__ = "0.1.0"
