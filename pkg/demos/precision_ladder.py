"""Solve the same lower-triangular test system at growing orders and precisions.

Prints iterations and the forward error against alpha^k / k! for each rung.
Run:  python demos/precision_ladder.py
"""

import numpy as np

from mdnewton import DD, QD, D, SolutionSpec, make_system, perturb_start, run_newton
from mdnewton.newton import forward_error
from mdnewton.sysgen import make_alphas

n = 8
for d, p in ((8, D), (16, DD), (32, QD)):
    rng = np.random.default_rng(3)
    alphas = make_alphas(n, p, rng)
    system, exact = make_system(SolutionSpec(alphas, d, p), rng=rng)
    result = run_newton(system, perturb_start(exact, rng=rng))
    err = forward_error(result.x, exact)
    print(f"order {d:3d}  {p.name:>2}  iterations {result.iterations:3d}  "
          f"converged {result.converged}  error {err:.2e}  (1e3 eps n = {1e3 * p.eps * n:.1e})")
