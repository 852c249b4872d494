"""
Invariant suites behind the `verify` command.

Each validate_* function draws seeded samples, checks one family of exact
identities and returns a result dict; run_all_validations runs every suite
and display_validation_summary prints the outcome.
"""

import math
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from .config import EngineLimits
from .consts import NORM_BRACKET, VERIFY_SAMPLES
from .diagnostics import (
    antidiagonal_samples,
    exact_inverse,
    generator_on_axis,
    growth_report,
    hilbert_inverse_norm,
    hilbert_matrix,
    matmul_exact,
    reconstruct_antidiagonal,
)
from .diffeo import apply_field, exp_apply, exp_diffeo, log_diffeo
from .errors import GermError
from .homological import GeneratorCache, check_izs, residual, s_w, solve_difference, solve_differential
from .invariants import (
    GermSpec,
    build_phi,
    epsilon_from_family,
    first_integral,
    fix_set_check,
    l_field,
    parametric_first_integral,
    transport_from_first_integral,
)
from .sampling import make_rng, random_nilpotent_field, random_polynomial, random_spec
from .series import Series1, Series2, krull_valuation
from .series.coeffs import lambda_coefficient


def _say(*args):
    print(*args, file=sys.stderr)


def _run_checks(name: str, title: str, cases: List[Callable[[], Optional[str]]], verbose: bool) -> Dict:
    """Run check callables; each returns None on success or a failure message."""
    if verbose:
        _say(f"\n🔍 {title}")
        _say("=" * 50)
    failures = []
    for index, case in enumerate(cases):
        try:
            problem = case()
        except GermError as exc:
            problem = f"{type(exc).__name__}: {exc}"
        if problem is not None:
            failures.append({'case': index, 'problem': problem})
            if verbose:
                _say(f"  ❌ case {index}: {problem}")
    valid = not failures
    if verbose:
        status = "✅ PASSED" if valid else f"❌ {len(failures)} FAILED"
        _say(f"📊 {len(cases)} checks: {status}")
    return {'suite': name, 'valid': valid, 'checked': len(cases), 'failures': failures}


def validate_roundtrip(order: int, rng: np.random.Generator, samples: int, verbose: bool = True) -> Dict:
    """
    Check exp(log phi) = phi on family members and log(exp X) = X on nilpotent fields.

    Args:
        order: Truncation order N of every sample
        rng: Seeded generator the samples are drawn from
        samples: Number of germs, and of fields, to draw
        verbose: Print progress to stderr

    Returns:
        dict: Suite result with checked count and failures
    """
    cases = []
    for _ in range(samples):
        spec = random_spec(rng, order)

        def exp_of_log(spec=spec):
            phi = build_phi(spec)
            X = log_diffeo(phi)
            n = phi.order
            if exp_apply(X, Series2.x(n)) != phi.sx or exp_apply(X, Series2.y(n)) != phi.sy:
                return "exp(log phi) differs from phi"
            return None
        cases.append(exp_of_log)

        field = random_nilpotent_field(rng, order)

        def log_of_exp(field=field):
            return None if log_diffeo(exp_diffeo(field)) == field else "log(exp X) differs from X"
        cases.append(log_of_exp)
    return _run_checks('roundtrip', "VALIDATING EXP/LOG ROUND-TRIP", cases, verbose)


def validate_generator_structure(order: int, rng: np.random.Generator, samples: int,
                                 verbose: bool = True) -> Dict:
    """
    Validate the structure of log(phi_{Delta,w}).

    The generator must lie in the ideal (y(y-x)) with L(x)(0,0) = 0 and
    L(y)(0,0) = w(0,0), and its x-component must vanish when Delta = 0.

    Args:
        order: Truncation order N
        rng: Seeded sample generator
        samples: Number of random specs

    Returns:
        dict: Suite result
    """
    cases = []
    for _ in range(samples):
        spec = random_spec(rng, order)

        def structure(spec=spec):
            l_field(spec)
            if not fix_set_check(build_phi(spec)):
                return "Fix(phi) does not contain y(y-x) = 0"
            return None
        cases.append(structure)

        flat = GermSpec(Series2.zero(order), spec.w, order)

        def x_part_vanishes(flat=flat):
            X = log_diffeo(build_phi(flat))
            return None if X.ax.is_zero() else "x-component of log(phi_{0,w}) is nonzero"
        cases.append(x_part_vanishes)
    return _run_checks('structure', "VALIDATING GENERATOR STRUCTURE", cases, verbose)


def _first_integral_problems(spec: GermSpec) -> Optional[str]:
    n = spec.order
    f = first_integral(spec)
    L = l_field(spec.at_order(n + 1))
    if not apply_field(L, f).at_order(n - 1).is_zero():
        return "L(f) != 0"
    if build_phi(spec).pull_back(f) != f:
        return "f o phi != f"
    tr = transport_from_first_integral(f)
    if f.diagonal().compose(tr.a) != f.restrict_y0():
        return "f(a(x), a(x)) != f(x, 0)"
    if spec.delta.is_zero() and tr.a != Series1.variable(n):
        return "transport of Delta = 0 is not the identity"
    return None


def validate_first_integral(order: int, rng: np.random.Generator, samples: int,
                            verbose: bool = True) -> Dict:
    """First integral and transport mapping identities."""
    cases = [lambda spec=random_spec(rng, order): _first_integral_problems(spec) for _ in range(samples)]
    flat = GermSpec(Series2.zero(order), random_spec(rng, order).w, order)
    cases.append(lambda: _first_integral_problems(flat))
    return _run_checks('first_integral', "VALIDATING FIRST INTEGRALS AND TRANSPORT", cases, verbose)


def validate_degree_bound(order: int, rng: np.random.Generator, samples: int,
                          verbose: bool = True) -> Dict:
    """
    Validate deg f_{j,k} <= j+k and f_{j,k}(0) = 0 on the lambda-family.

    Args:
        order: Truncation order N
        rng: Seeded sample generator
        samples: Number of random specs

    Returns:
        dict: Suite result; a bound violation is reported as a failure
    """
    cases = []
    for _ in range(samples):
        spec = random_spec(rng, order)

        def bound(spec=spec):
            pfi = parametric_first_integral(spec)
            if any(lambda_coefficient(c, 0) for c in pfi.table.values()):
                return "f_{j,k}(0) != 0"
            return None
        cases.append(bound)
    return _run_checks('degree_bound', "VALIDATING LAMBDA DEGREE BOUND", cases, verbose)


def validate_homological(order: int, rng: np.random.Generator, samples: int,
                         verbose: bool = True) -> Dict:
    """Residual, route equivalence, annihilation and consistency with the family."""
    cache = GeneratorCache()
    cases = []
    for _ in range(samples):
        spec = random_spec(rng, order)
        delta = random_polynomial(rng, 3, order)

        def difference_route(w=spec.w, delta=delta):
            solution = solve_difference(w, delta, order, cache)
            if krull_valuation(residual(solution.epsilon, w, delta, order)) <= order:
                return "homological residual is nonzero"
            if solution.s_w() != solve_differential(w, delta, order, cache):
                return "difference and differential routes disagree"
            return None
        cases.append(difference_route)

        def annihilation(w=spec.w, delta=delta):
            return None if check_izs(w, delta, order, cache).is_zero() else "S_w(L(y(y-x)Delta)/(y(y-x))) != 0"
        cases.append(annihilation)

        def family_epsilon(spec=spec):
            epsilon = epsilon_from_family(parametric_first_integral(spec))
            if krull_valuation(residual(epsilon, spec.w, spec.delta, order)) <= order:
                return "epsilon from the family does not solve the homological equation"
            if epsilon.diagonal_minus_axis() != s_w(spec.w, spec.delta, order, cache):
                return "epsilon from the family gives a different S_w"
            return None
        cases.append(family_epsilon)
    return _run_checks('homological', "VALIDATING HOMOLOGICAL EQUATION", cases, verbose)


def validate_diagnostics(order: int, rng: np.random.Generator, samples: int,
                         limits: Optional[EngineLimits] = None, verbose: bool = True) -> Dict:
    """D_v reconstruction, Hilbert exactness and norms, w = 1 divergence evidence."""
    limits = limits or EngineLimits()
    cases = []
    for _ in range(samples):
        v = random_polynomial(rng, 6, 6)

        def reconstruction(v=v):
            for k in range(7):
                expected = [v[k - b, b] for b in range(k + 1)]
                if reconstruct_antidiagonal(antidiagonal_samples(v, k), k) != expected:
                    return f"antidiagonal {k} not recovered"
            return None
        cases.append(reconstruction)

    def hilbert_exactness():
        for k in range(limits.hilbert_max_k + 1):
            matrix = hilbert_matrix(k)
            identity = [[Fraction(int(i == j)) for j in range(k + 1)] for i in range(k + 1)]
            if matmul_exact(matrix, exact_inverse(matrix)) != identity:
                return f"Hilb^{k} times its inverse is not the identity"
        return None
    cases.append(hilbert_exactness)

    def hilbert_norms():
        if abs(hilbert_inverse_norm(1, limits).inverse_spectral_norm - (8 + 2 * math.sqrt(13))) > 1e-9:
            return "k=1 inverse norm differs from 8 + 2 sqrt(13)"
        ratios = {k: hilbert_inverse_norm(k, limits).ratio for k in range(4, limits.hilbert_max_k + 1)}
        low, high = NORM_BRACKET
        outside = [k for k, r in ratios.items() if not low <= r <= high]
        if outside:
            return f"ratio outside [{low}, {high}] at k={outside}"
        if 12 in ratios and abs(ratios[12] - 1) >= abs(ratios[4] - 1):
            return "ratio at k=12 is not closer to 1 than at k=4"
        return None
    cases.append(hilbert_norms)

    def divergence_evidence():
        w_hat = generator_on_axis(Series2.one(0), 30)
        if list(w_hat.coeffs[:3]) != [1, -1, Fraction(3, 2)]:
            return "w_hat(0, y) does not start 1 - y + 3/2 y^2"
        blocks = growth_report(w_hat).blocks_from(10)
        if not all(b > a for a, b in zip(blocks, blocks[1:])):
            return "root test of w_hat(0, y) is not increasing over degrees 10..30"
        return None
    cases.append(divergence_evidence)
    return _run_checks('diagnostics', "VALIDATING D_v AND HILBERT DIAGNOSTICS", cases, verbose)


def run_all_validations(order: int, seed: int, limits: Optional[EngineLimits] = None,
                        samples: Optional[Dict[str, int]] = None, verbose: bool = True) -> Dict:
    """
    Run every invariant suite.

    Each suite draws from its own generator seeded with seed + index, so
    changing one sample size leaves the other suites untouched.

    Args:
        order: Truncation order N
        seed: Base seed
        limits: Engine limits (Hilbert k cap, maximum order)
        samples: Per-suite overrides of VERIFY_SAMPLES
        verbose: Print per-suite progress to stderr

    Returns:
        dict: order, seed, overall validity and the list of suite results
    """
    limits = limits or EngineLimits()
    limits.check_order(order)
    samples = {**VERIFY_SAMPLES, **(samples or {})}
    if verbose:
        _say(f"📦 Running invariant suites at order {order}, seed {seed}")
    suites = [
        validate_roundtrip(order, make_rng(seed), samples['roundtrip'], verbose),
        validate_generator_structure(order, make_rng(seed + 1), samples['structure'], verbose),
        validate_first_integral(order, make_rng(seed + 2), samples['first_integral'], verbose),
        validate_degree_bound(order, make_rng(seed + 3), samples['degree_bound'], verbose),
        validate_homological(order, make_rng(seed + 4), samples['homological'], verbose),
        validate_diagnostics(order, make_rng(seed + 5), samples['diagnostics'], limits, verbose),
    ]
    return {
        'order': order,
        'seed': seed,
        'valid': all(suite['valid'] for suite in suites),
        'suites': suites,
    }


def display_validation_summary(results: Dict, file=None):
    """
    Print a formatted summary of validation results.

    Args:
        results: Output of run_all_validations
        file: Stream to write to (default stdout)
    """
    out = file or sys.stdout
    print("=" * 50, file=out)
    print(f"INVARIANT SUITES (order {results['order']}, seed {results['seed']})", file=out)
    print("=" * 50, file=out)
    for suite in results['suites']:
        mark = "✅" if suite['valid'] else "❌"
        print(f"{mark} {suite['suite']:<16} {suite['checked']} checks", file=out)
        for failure in suite['failures']:
            print(f"    - case {failure['case']}: {failure['problem']}", file=out)
    if results['valid']:
        print("\n🎉 All invariant suites passed.", file=out)
    else:
        failed = sum(1 for suite in results['suites'] if not suite['valid'])
        print(f"\n⚠️  {failed} suite(s) failed.", file=out)
