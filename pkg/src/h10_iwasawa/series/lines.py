"""
Lines of the Z_p^2-extension and their series.

A line is a pair (a, b) in Z_p^2 with a or b a unit. It cuts out
f_{a,b}(X, Y) = (1+X)^a (1+Y)^b - 1. ``implicit_solve`` finds g(Y) with
f_{a,b}(g(Y), Y) = 0 and ``specialize_line`` restricts a characteristic series
F(X, Y) to the line.

Exponents may be ints or p-integral Fractions (exact) or PadicNumbers. A PadicNumber
exponent is only known mod p^N, which costs v_p(D!) digits in C(a, k) for k <= D.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from ..constants import DEFAULT_CAP, DEFAULT_PRECISION
from ..exceptions import InputValidationError, InvalidLineError, PrecisionLossError
from ..padic import PadicNumber, Scalar, require_odd_prime, to_padic
from .power_series import BivariateSeries, UnivariateSeries

logger = logging.getLogger(__name__)

__all__ = [
    "binomial_series",
    "line_series",
    "implicit_solve",
    "specialize_line",
    "is_unit_scalar",
]


def _factorial_valuation(k: int, p: int) -> int:
    v, q = 0, p
    while q <= k:
        v += k // q
        q *= p
    return v


def _resolve_prime(a: Scalar, b: Scalar, prime: Optional[int]) -> int:
    primes = {x.prime for x in (a, b) if isinstance(x, PadicNumber)}
    if prime is not None:
        primes.add(prime)
    if not primes:
        raise InputValidationError(
            "prime must be given when both coordinates are exact rationals",
            details={"a": str(a), "b": str(b)},
        )
    if len(primes) > 1:
        raise InputValidationError(
            "line coordinates and prime disagree", details={"primes": sorted(primes)}
        )
    return require_odd_prime(primes.pop())


def is_unit_scalar(x: Scalar, prime: int) -> bool:
    """True iff x is a p-adic unit (ints and Fractions are checked exactly)."""
    if isinstance(x, PadicNumber):
        return x.is_unit
    frac = Fraction(x)
    if frac.denominator % prime == 0:
        raise InputValidationError(
            f"{frac} is not {prime}-integral", details={"value": str(frac), "prime": prime}
        )
    return frac.numerator % prime != 0


def _binomials(
    exponent: Scalar, cap: int, prime: int, precision: int
) -> Tuple[Tuple[int, ...], int]:
    """Residues of C(exponent, k) for k = 0..cap, and the precision they are good to."""
    modulus = prime**precision
    if isinstance(exponent, PadicNumber):
        if exponent.prime != prime:
            raise InputValidationError(
                "exponent lives over a different prime",
                details={"expected": prime, "got": exponent.prime},
            )
        known = min(precision, exponent.precision)
        n = known - _factorial_valuation(cap, prime)
        if n < 1:
            raise PrecisionLossError(
                "binomial coefficients of a p-adic exponent lose all digits",
                details={"prime": prime, "precision": known, "cap": cap},
            )
        r = exponent.residue
        return tuple(math.comb(r, k) % prime**n for k in range(cap + 1)), n
    if isinstance(exponent, int):
        if exponent >= 0:
            return tuple(math.comb(exponent, k) % modulus for k in range(cap + 1)), precision
        # C(a, k) = (-1)^k C(k - a - 1, k) for negative a
        return (
            tuple(((-1) ** k * math.comb(k - exponent - 1, k)) % modulus for k in range(cap + 1)),
            precision,
        )
    a = Fraction(exponent)
    out = []
    term = Fraction(1)
    for k in range(cap + 1):
        if k:
            term = term * (a - (k - 1)) / k
        out.append(PadicNumber.from_rational(term, prime, precision).residue)
    return tuple(out), precision


def binomial_series(
    exponent: Scalar,
    cap: int = DEFAULT_CAP,
    prime: Optional[int] = None,
    precision: int = DEFAULT_PRECISION,
) -> UnivariateSeries:
    """(1 + T)^exponent as a series: the sum of C(exponent, k) T^k for k <= cap."""
    p = _resolve_prime(exponent, 0, prime)
    residues, n = _binomials(exponent, cap, p, precision)
    return UnivariateSeries(p, n, cap, residues)


def line_series(
    a: Scalar,
    b: Scalar,
    cap: int = DEFAULT_CAP,
    *,
    prime: Optional[int] = None,
    precision: int = DEFAULT_PRECISION,
) -> BivariateSeries:
    """
    f_{a,b} = (1+X)^a (1+Y)^b - 1 truncated to total degree ``cap``.

    Raises:
        InvalidLineError: If both a and b are divisible by p
    """
    p = _resolve_prime(a, b, prime)
    if not is_unit_scalar(a, p) and not is_unit_scalar(b, p):
        raise InvalidLineError(
            "both coordinates are divisible by p; (a, b) is not a line",
            details={"a": str(a), "b": str(b), "prime": p},
        )
    xs, nx = _binomials(a, cap, p, precision)
    ys, ny = _binomials(b, cap, p, precision)
    n = min(nx, ny)
    modulus = p**n
    rows = []
    for i in range(cap + 1):
        rows.append(tuple((xs[i] * ys[j]) % modulus for j in range(cap - i + 1)))
    rows[0] = (rows[0][0] - 1,) + rows[0][1:]
    return BivariateSeries(p, n, cap, tuple(rows))


@lru_cache(maxsize=1024)
def _implicit_solve_cached(
    a: Union[int, Fraction, PadicNumber],
    b: Union[int, Fraction, PadicNumber],
    cap: int,
    prime: int,
    precision: int,
) -> UnivariateSeries:
    f = line_series(a, b, cap, prime=prime, precision=precision)
    n = f.precision
    modulus = prime**n
    inv_a = pow(f.rows[1][0], -1, modulus)
    coeffs = [0] * (cap + 1)
    for k in range(1, cap + 1):
        g = UnivariateSeries(prime, n, cap, tuple(coeffs))
        residual = f.evaluate_x(g).residues[k]
        coeffs[k] = (-residual * inv_a) % modulus
    return UnivariateSeries(prime, n, cap, tuple(coeffs))


def implicit_solve(
    a: Scalar,
    b: Scalar,
    cap: int = DEFAULT_CAP,
    *,
    prime: Optional[int] = None,
    precision: int = DEFAULT_PRECISION,
) -> UnivariateSeries:
    """
    The unique g(Y) with g(0) = 0 and f_{a,b}(g(Y), Y) = 0 mod (p^N, Y^{cap+1}).

    Coefficients are solved one degree at a time: the Y^k coefficient of
    f_{a,b}(g_{<k}(Y), Y) is cancelled by c_k = -(that coefficient) / a.
    The linear coefficient is -b/a.

    Raises:
        InvalidLineError: If a is not a unit (the line is not parametrized by Y)
    """
    p = _resolve_prime(a, b, prime)
    if not is_unit_scalar(a, p):
        raise InvalidLineError(
            "line not parametrizable by Y: a is divisible by p",
            details={"a": str(a), "b": str(b), "prime": p},
        )
    return _implicit_solve_cached(a, b, cap, p, precision)


def specialize_line(F: BivariateSeries, a: Scalar, b: Scalar) -> UnivariateSeries:
    """
    Restrict F(X, Y) to the line (a, b).

    For a unit a this is F(g(Y), Y) with g = implicit_solve(a, b). Otherwise b is a
    unit and the result is F(X, g~(X)) where g~ = implicit_solve(b, a); for the line
    (0, 1) that is F(X, 0).
    """
    p = F.prime
    a_s = to_padic(a, p, F.precision) if isinstance(a, PadicNumber) else a
    b_s = to_padic(b, p, F.precision) if isinstance(b, PadicNumber) else b
    if is_unit_scalar(a_s, p):
        g = implicit_solve(a_s, b_s, F.cap, prime=p, precision=F.precision)
        logger.debug(f"specializing along Y-parametrized line ({a}, {b}) mod {p}")
        return F.evaluate_x(g)
    if not is_unit_scalar(b_s, p):
        raise InvalidLineError(
            "both coordinates are divisible by p; (a, b) is not a line",
            details={"a": str(a), "b": str(b), "prime": p},
        )
    g_tilde = implicit_solve(b_s, a_s, F.cap, prime=p, precision=F.precision)
    logger.debug(f"specializing along X-parametrized line ({a}, {b}) mod {p}")
    return F.evaluate_y(g_tilde)
