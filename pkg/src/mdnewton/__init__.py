"""Power series Newton iteration in multiple double precision."""

from .complexmd import ComplexMD, PlanarVector, cmul_4m
from .counting import OpCounter, count_ops
from .errors import MaxIterationsExceeded, MDError
from .evaldiff import SeriesMatrix, evaluate_system, speel_monomial
from .ledger import KernelLedger, ledger_report
from .linsolve import back_substitute, householder_qr, qhb, residual, toeplitz_solve
from .multidouble import (DD, OD, QD, D, MultiDouble, md_add, md_div, md_mul, md_sqrt,
                          md_sub, precision)
from .newton import NewtonResult, run_newton, staggered_orders
from .series import Series, SeriesVec, convolve, exp_series, fabry_ratio, series_norm
from .sysgen import MonomialSystem, SolutionSpec, make_system, perturb_start, recommend_precision

__version__ = "0.1.0"
