"""Exact-arithmetic lattice discretization of ODEs.

Thin re-export of the compiled extension. All rationals cross the
boundary as "p/q" strings; ODE and delta-operator specs as JSON
strings (the same schema the command-line tool reads).
"""

from ._rotadisc import (  # noqa: F401
    basic_polynomials,
    build_example,
    catalog_names,
    discrete_jacobi,
    forward_transform,
    gauss_sum,
    inverse_transform,
    is_fundamental_system,
    power_image,
    residual,
    solve_series,
    star_product,
    star_wronskian,
    validate_delta_operator,
)
