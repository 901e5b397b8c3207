"""
Truncated power series over Z_p / p^N in one and two variables.

``UnivariateSeries`` keeps c_0..c_D; ``BivariateSeries`` keeps the dense grid a_{i,j}
with i + j <= D. Coefficients are stored as residues mod p^N and exposed as
``PadicNumber``. Products and substitutions never report terms past the cap.

JSON form (CLI round-tripping):
    univariate: {"p": 3, "precision": 20, "cap": 12, "coeffs": [[i, residue], ...]}
    bivariate:  {"p": 3, "precision": 20, "cap": 12, "coeffs": [[i, j, residue], ...]}
Omitted coefficients are zero.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple

from ..exceptions import InputValidationError, PrimeMismatchError, SeriesError
from ..padic import PadicNumber, Scalar, require_odd_prime, to_padic

__all__ = ["UnivariateSeries", "BivariateSeries"]


def _format_terms(terms: List[Tuple[int, str]]) -> str:
    """Join (signed coefficient, monomial) pairs; monomial "" is the constant term."""
    if not terms:
        return "0"
    parts: List[str] = []
    for idx, (coeff, mono) in enumerate(terms):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if mono == "":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            parts.append(f"-{body}" if sign == "-" else body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _check_header(payload: Mapping[str, Any]) -> Tuple[int, int, int]:
    try:
        p = int(payload["p"])
        precision = int(payload["precision"])
        cap = int(payload["cap"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputValidationError(
            f"Series JSON needs integer fields p, precision, cap: {e}",
            details={"keys": sorted(payload) if isinstance(payload, Mapping) else None},
        ) from e
    require_odd_prime(p)
    if precision < 1 or cap < 0:
        raise InputValidationError(
            "Series JSON has invalid precision or cap",
            details={"precision": precision, "cap": cap},
        )
    return p, precision, cap


@dataclass(frozen=True, slots=True)
class UnivariateSeries:
    """
    Element of Z_p[[T]] truncated after degree ``cap``.

    Attributes:
        prime: Odd prime p
        precision: Digits N; residues are mod p^N
        cap: Degree cap D
        residues: c_0..c_D as integers in [0, p^N)
    """

    prime: int
    precision: int
    cap: int
    residues: Tuple[int, ...]

    def __post_init__(self) -> None:
        modulus = self.prime**self.precision
        padded = tuple(r % modulus for r in self.residues[: self.cap + 1])
        padded += (0,) * (self.cap + 1 - len(padded))
        object.__setattr__(self, "residues", padded)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, prime: int, precision: int, cap: int) -> "UnivariateSeries":
        return cls(prime, precision, cap, ())

    @classmethod
    def from_coefficients(
        cls, coeffs: Sequence[Scalar], prime: int, precision: int, cap: int
    ) -> "UnivariateSeries":
        """Build from c_0, c_1, ...; entries past ``cap`` are dropped."""
        values = [to_padic(c, prime, precision) for c in coeffs[: cap + 1]]
        n = min([precision] + [v.precision for v in values])
        return cls(prime, n, cap, tuple(v.residue for v in values))

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def coefficient(self, i: int) -> PadicNumber:
        if not 0 <= i <= self.cap:
            raise IndexError(f"degree {i} outside 0..{self.cap}")
        return PadicNumber(self.prime, self.precision, self.residues[i])

    @property
    def coefficients(self) -> Tuple[PadicNumber, ...]:
        return tuple(PadicNumber(self.prime, self.precision, r) for r in self.residues)

    def __iter__(self) -> Iterator[PadicNumber]:
        return iter(self.coefficients)

    def __len__(self) -> int:
        return self.cap + 1

    @property
    def is_zero(self) -> bool:
        return not any(self.residues)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _align(self, other: "UnivariateSeries") -> Tuple[int, int]:
        if other.prime != self.prime:
            raise PrimeMismatchError(
                "series over different primes",
                details={"left": self.prime, "right": other.prime},
            )
        return min(self.precision, other.precision), min(self.cap, other.cap)

    def __add__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        n, d = self._align(other)
        return UnivariateSeries(
            self.prime, n, d, tuple(x + y for x, y in zip(self.residues, other.residues))
        )

    def __sub__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        n, d = self._align(other)
        return UnivariateSeries(
            self.prime, n, d, tuple(x - y for x, y in zip(self.residues, other.residues))
        )

    def __neg__(self) -> "UnivariateSeries":
        return UnivariateSeries(self.prime, self.precision, self.cap, tuple(-r for r in self.residues))

    def __mul__(self, other: "UnivariateSeries | Scalar") -> "UnivariateSeries":
        if not isinstance(other, UnivariateSeries):
            return self.scale(other)
        n, d = self._align(other)
        modulus = self.prime**n
        out = [0] * (d + 1)
        for i, x in enumerate(self.residues[: d + 1]):
            if x == 0:
                continue
            for j, y in enumerate(other.residues[: d + 1 - i]):
                out[i + j] = (out[i + j] + x * y) % modulus
        return UnivariateSeries(self.prime, n, d, tuple(out))

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "UnivariateSeries":
        c = to_padic(factor, self.prime, self.precision)
        return UnivariateSeries(
            self.prime, c.precision, self.cap, tuple(r * c.residue for r in self.residues)
        )

    def with_precision(self, precision: int) -> "UnivariateSeries":
        return UnivariateSeries(self.prime, min(precision, self.precision), self.cap, self.residues)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "precision": self.precision,
            "cap": self.cap,
            "coeffs": [[i, r] for i, r in enumerate(self.residues) if r],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> "UnivariateSeries":
        p, precision, cap = _check_header(payload)
        residues = [0] * (cap + 1)
        for entry in payload.get("coeffs", []):
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise InputValidationError(
                    "Univariate coefficient entries must be [i, residue]",
                    details={"entry": entry},
                )
            i, r = int(entry[0]), int(entry[1])
            if 0 <= i <= cap:
                residues[i] = r
        return cls(p, precision, cap, tuple(residues))

    def format(self, var: str = "T") -> str:
        half = self.modulus // 2
        terms = [
            (r - self.modulus if r > half else r, _power(var, i))
            for i, r in enumerate(self.residues)
            if r
        ]
        return _format_terms(terms)

    def __str__(self) -> str:
        return f"{self.format()} + O({self.prime}^{self.precision}, T^{self.cap + 1})"


@dataclass(frozen=True, slots=True)
class BivariateSeries:
    """
    Element of Z_p[[X, Y]] truncated to total degree ``cap``.

    ``rows[i][j]`` is the residue of a_{i,j}; row i has length cap - i + 1.
    """

    prime: int
    precision: int
    cap: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        modulus = self.prime**self.precision
        rows: List[Tuple[int, ...]] = []
        for i in range(self.cap + 1):
            src = self.rows[i] if i < len(self.rows) else ()
            row = tuple(r % modulus for r in src[: self.cap - i + 1])
            rows.append(row + (0,) * (self.cap - i + 1 - len(row)))
        object.__setattr__(self, "rows", tuple(rows))

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, prime: int, precision: int, cap: int) -> "BivariateSeries":
        return cls(prime, precision, cap, ())

    @classmethod
    def from_dict(
        cls,
        coeffs: Mapping[Tuple[int, int], Scalar],
        prime: int,
        precision: int,
        cap: int,
    ) -> "BivariateSeries":
        """Build from {(i, j): a_ij}; terms with i + j > cap are dropped."""
        grid = [[0] * (cap - i + 1) for i in range(cap + 1)]
        n = precision
        for (i, j), value in coeffs.items():
            if i < 0 or j < 0:
                raise InputValidationError(
                    "negative exponent in series term", details={"i": i, "j": j}
                )
            if i + j > cap:
                continue
            c = to_padic(value, prime, precision)
            n = min(n, c.precision)
            grid[i][j] = c.residue
        return cls(prime, n, cap, tuple(tuple(row) for row in grid))

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def coefficient(self, i: int, j: int) -> PadicNumber:
        if i < 0 or j < 0 or i + j > self.cap:
            raise IndexError(f"term X^{i}Y^{j} outside total degree {self.cap}")
        return PadicNumber(self.prime, self.precision, self.rows[i][j])

    def terms(self) -> Iterator[Tuple[int, int, int]]:
        """Nonzero (i, j, residue) triples, row by row."""
        for i, row in enumerate(self.rows):
            for j, r in enumerate(row):
                if r:
                    yield i, j, r

    @property
    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _align(self, other: "BivariateSeries") -> Tuple[int, int]:
        if other.prime != self.prime:
            raise PrimeMismatchError(
                "series over different primes",
                details={"left": self.prime, "right": other.prime},
            )
        return min(self.precision, other.precision), min(self.cap, other.cap)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        n, d = self._align(other)
        rows = tuple(
            tuple(x + y for x, y in zip(self.rows[i], other.rows[i])) for i in range(d + 1)
        )
        return BivariateSeries(self.prime, n, d, rows)

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        n, d = self._align(other)
        rows = tuple(
            tuple(x - y for x, y in zip(self.rows[i], other.rows[i])) for i in range(d + 1)
        )
        return BivariateSeries(self.prime, n, d, rows)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        n, d = self._align(other)
        modulus = self.prime**n
        grid = [[0] * (d - i + 1) for i in range(d + 1)]
        rhs = [t for t in other.terms() if t[0] + t[1] <= d]
        for i, j, x in self.terms():
            if i + j > d:
                continue
            for k, m, y in rhs:
                if i + j + k + m <= d:
                    grid[i + k][j + m] = (grid[i + k][j + m] + x * y) % modulus
        return BivariateSeries(self.prime, n, d, tuple(tuple(row) for row in grid))

    # ------------------------------------------------------------------
    # Substitution
    # ------------------------------------------------------------------

    def _substitute(self, inner: UnivariateSeries, into_x: bool) -> UnivariateSeries:
        if inner.prime != self.prime:
            raise PrimeMismatchError(
                "substituting a series over a different prime",
                details={"outer": self.prime, "inner": inner.prime},
            )
        if inner.residues[0] != 0:
            raise SeriesError(
                "substituted series must have zero constant term",
                details={"constant": inner.residues[0]},
            )
        n = min(self.precision, inner.precision)
        d = min(self.cap, inner.cap)
        modulus = self.prime**n
        one = UnivariateSeries(self.prime, n, d, (1,))
        # powers[k] = inner^k
        powers = [one]
        for _ in range(d):
            powers.append(powers[-1] * inner)
        out = [0] * (d + 1)
        for i, j, r in self.terms():
            # into_x: a_ij * inner^i * T^j ; otherwise a_ij * T^i * inner^j
            k, shift = (i, j) if into_x else (j, i)
            if shift > d:
                continue
            src = powers[k].residues if k <= d else ()
            for e in range(d + 1 - shift):
                if e < len(src) and src[e]:
                    out[e + shift] = (out[e + shift] + r * src[e]) % modulus
        return UnivariateSeries(self.prime, n, d, tuple(out))

    def evaluate_x(self, g: UnivariateSeries) -> UnivariateSeries:
        """F(g(Y), Y) as a series in Y."""
        return self._substitute(g, into_x=True)

    def evaluate_y(self, h: UnivariateSeries) -> UnivariateSeries:
        """F(X, h(X)) as a series in X."""
        return self._substitute(h, into_x=False)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.prime,
            "precision": self.precision,
            "cap": self.cap,
            "coeffs": [[i, j, r] for i, j, r in self.terms()],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> "BivariateSeries":
        p, precision, cap = _check_header(payload)
        grid = [[0] * (cap - i + 1) for i in range(cap + 1)]
        for entry in payload.get("coeffs", []):
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise InputValidationError(
                    "Bivariate coefficient entries must be [i, j, residue]",
                    details={"entry": entry},
                )
            i, j, r = (int(v) for v in entry)
            if i < 0 or j < 0:
                raise InputValidationError(
                    "negative exponent in series term", details={"i": i, "j": j}
                )
            if i + j <= cap:
                grid[i][j] = r
        return cls(p, precision, cap, tuple(tuple(row) for row in grid))

    def __str__(self) -> str:
        half = self.modulus // 2
        ordered = sorted(self.terms(), key=lambda t: (t[0] + t[1], -t[0]))
        terms = [
            (
                r - self.modulus if r > half else r,
                "*".join(m for m in (_power("X", i), _power("Y", j)) if m),
            )
            for i, j, r in ordered
        ]
        return _format_terms(terms)
