"""Exact arithmetic for the Carlitz module over F_q[t].

Hyperderivatives, symmetric functions of Frobenius twists, Vandermonde
inversion, Carlitz brackets, power sums and log-algebraicity identities,
each computed by at least two independent routes.
"""

from .errors import (CarlitzLabError, ConsistencyError, DomainError, ParseError, ResourceError,
                     SingularityError, UnsupportedExponentError, UsageError)
from .field import GF, FieldCtx, FqElem
from .poly import PolyA, RatFun, carlitz_factorial, carlitz_lcm, monic_enumerate, theta_bracket
from .multipoly import A, Fq, K, ZZ, MultiPoly
from .series import TruncSeries
from .config import settings
from .hyperderiv import hyperderivative, lucas_binomial, taylor_about_theta
from .symfun import esym, hsym
from .vandermonde import hyperderiv_via_vandermonde, kappa, kappa_matrix, vandermonde_matrix
from .carlitz import (TwistedPoly, bracket_carlitz_formula, bracket_direct, bracket_hyper_formula,
                      bracket_theta_power, carlitz_eval, carlitz_of, carlitz_poly, exp_c, log_c,
                      mu_expand)
from .powersums import h_brute, h_closed, s_brute, s_closed, sivanish_predicate
from .logalg import (LogAlgReport, lambda_brute, lambda_closed_multi, lambda_closed_single,
                     special_poly_series, special_poly_thakur, verify_log_algebraicity)

__version__ = "0.1.0"
