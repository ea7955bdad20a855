"""High-precision Gamma, zeta and Dirichlet L-functions.

Everything is built on the coefficients of ((-log(1-t))/t)^(s-1) and on
Hasse-type finite-difference expansions; see the submodule docstrings for
the formulas each evaluator implements.
"""

from . import (alpha, combinat, dirichlet, errors, fastseries, gammafun,
               hasse, mpnum, zetafun)
from .alpha import (alpha_bound, alpha_prime_at_1, alpha_prime_integral,
                    alpha_table, alpha_table_exact, kcap_estimate)
from .combinat import (b_lambda_weights, bernoulli, bernoulli_poly, binomial,
                       c_a_table, c_a_value, partial_fraction_weights,
                       stirling1, stirling2)
from .dirichlet import (DirichletCharacter, enumerate_characters,
                        gauss_sum, generalized_bernoulli, l_at_1, l_function,
                        l_negative_integer, l_one_minus_lambda, l_shifted,
                        rootsum_is_zero)
from .errors import (DomainError, ParseError, PoleError, PrecisionError,
                     ValidityError, ZidentError)
from .gammafun import (digamma, euler_gamma, gamma_n, gamma_ref, gamma_w,
                       pi_value, trigamma)
from .hasse import (DifferenceTable, WeightProvider, alt_hurwitz_hasse,
                    chi_sum_estimate, eta_amore, eta_hasse,
                    finite_differences, j_sum_and_estimate, l_hasse,
                    l_interpolation_q_le_5, newton_forward,
                    summation_transform)
from .mpnum import (PrecisionContext, SeriesResult, format_number,
                    make_context, parse_complex)
from .zetafun import (euler_maclaurin_zeta, hurwitz_zeta, remainder_tables,
                      riemann_zeta, zeta_linear_combo, zeta_shifted,
                      zeta_trigamma)

__version__ = "0.1.0"
