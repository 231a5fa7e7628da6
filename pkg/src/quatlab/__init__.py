"""quatlab: exact symbolic engine + numerical verifier for quaternionic analysis.

Core layers:
  scalars / fields      exact Q(i)[pi] scalars, the Laurent ring C[z, N^-1]
  tcoeff                SU(2) matrix coefficients t^l_{n m}
  diffops / lie         Cauchy-Fueter-type operators and Lie algebra actions
  families / decomposition   named bases and irreducible-component structure
  pairings / kernels    invariant pairings, reproducing kernels
  algebras              convolution algebras, diagonal limits, * products
  quadrature            floating-point verification on S^3 and U(2)
"""

from quatlab._poly import BACKEND as POLY_BACKEND

__all__ = ["POLY_BACKEND"]
__version__ = "0.1.0"
