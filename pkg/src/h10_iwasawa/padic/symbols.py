"""Kronecker symbols and quadratic residuosity."""

from sympy import jacobi_symbol
from sympy.ntheory import is_quad_residue

from ..exceptions import InputValidationError

__all__ = ["kronecker_symbol", "is_square_mod", "splits_in"]


def _kronecker_two(d: int) -> int:
    if d % 2 == 0:
        return 0
    return 1 if d % 8 in (1, 7) else -1


def kronecker_symbol(d: int, n: int) -> int:
    """
    Kronecker symbol (d / n) for any integer d and positive integer n.

    The odd part of n goes through the Jacobi symbol; each factor 2 contributes
    0 for even d, +1 for d = +-1 mod 8 and -1 for d = +-3 mod 8.

    Raises:
        InputValidationError: If n is not positive
    """
    if n <= 0:
        raise InputValidationError(
            f"Kronecker symbol needs a positive lower argument, got {n}", details={"n": n}
        )
    result = 1
    while n % 2 == 0:
        n //= 2
        result *= _kronecker_two(d)
        if result == 0:
            return 0
    if n == 1:
        return result
    return result * int(jacobi_symbol(d % n, n))


def is_square_mod(a: int, q: int) -> bool:
    """True iff a is congruent to a square modulo q. Zero counts as a square."""
    if q < 1:
        raise InputValidationError(f"Modulus must be positive, got {q}", details={"q": q})
    if q == 1:
        return True
    return bool(is_quad_residue(a % q, q))


def splits_in(ell: int, disc: int) -> bool:
    """True iff the prime ``ell`` splits in the quadratic field of discriminant ``disc``."""
    return kronecker_symbol(disc, ell) == 1
