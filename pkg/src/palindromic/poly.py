from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, NotMonicError, ZeroPolynomialError


class IntPolynomial:
    """Polynomial with exact integer coefficients, leading coefficient first

    coeffs[i] is a_i, the coefficient of x^(n - i) for degree n, so the
    constant term is coeffs[-1]. Leading zeros are stripped; the zero
    polynomial is the empty tuple and has degree -1
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        values = [int(c) for c in coeffs]
        start = 0
        while start < len(values) and values[start] == 0:
            start += 1
        self.coeffs = tuple(values[start:])

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls([coefficient] + [0] * degree)

    @classmethod
    def from_json(cls, values: Sequence[str]) -> "IntPolynomial":
        return cls(int(v) for v in values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 1

    def coefficient(self, i: int) -> int:
        """a_i, the coefficient of x^(n - i)"""

        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def reversed(self) -> "IntPolynomial":
        """x^n p(1/x)"""

        return IntPolynomial(self.coeffs[::-1])

    def evaluate(self, x: int) -> int:
        value = 0
        for c in self.coeffs:
            value = value * x + c
        return value

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, -other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __pow__(self, exponent: int) -> "IntPolynomial":
        return poly_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, variable: str = "λ") -> str:
        """Render as text, e.g. λ^6-7λ^4+7λ^2-1"""

        if not self.coeffs:
            return "0"

        terms = []
        n = self.degree
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = n - i
            sign = "-" if c < 0 else ("+" if terms else "")
            magnitude = abs(c)
            digits = "" if magnitude == 1 and power > 0 else str(magnitude)
            if power == 0:
                monomial = ""
            elif power == 1:
                monomial = variable
            else:
                monomial = f"{variable}^{power}"
            terms.append(f"{sign}{digits}{monomial}")
        return "".join(terms)

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings so no JSON consumer loses precision"""

        return [str(c) for c in self.coeffs]


ONE = IntPolynomial([1])
X = IntPolynomial([1, 0])


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    shift = len(a) - len(b)
    return IntPolynomial(
        [a[i] if i < shift else a[i] + b[i - shift] for i in range(len(a))]
    )


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial([])
    product = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            product[i + j] += a * b
    return IntPolynomial(product)


def poly_pow(p: IntPolynomial, exponent: int) -> IntPolynomial:
    if exponent < 0:
        raise ValueError("Invalid exponent")
    result = ONE
    base = p
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base)
        exponent >>= 1
        if exponent:
            base = poly_mul(base, base)
    return result


class PalindromeKind(str, Enum):
    PALINDROMIC = "palindromic"
    ANTIPALINDROMIC = "antipalindromic"
    NEITHER = "neither"


@dataclass(frozen=True)
class PalindromeClass:
    """Coefficient symmetry verdict; absolute is implied by both symmetric kinds"""

    kind: PalindromeKind
    absolute: bool

    @property
    def is_symmetric(self) -> bool:
        return self.kind is not PalindromeKind.NEITHER

    @property
    def label(self) -> str:
        if self.kind is PalindromeKind.NEITHER and self.absolute:
            return "absolutely-palindromic"
        return self.kind.value


def classify(p: IntPolynomial) -> PalindromeClass:
    """Classify by a_i = a_(n-i), a_i = -a_(n-i) and |a_i| = |a_(n-i)|

    Raises:
        ZeroPolynomialError: If p is the zero polynomial
    """

    if p.is_zero():
        raise ZeroPolynomialError("Cannot classify the zero polynomial")

    a = p.coeffs
    pairs = list(zip(a, reversed(a)))
    if all(x == y for x, y in pairs):
        return PalindromeClass(PalindromeKind.PALINDROMIC, True)
    if all(x == -y for x, y in pairs):
        return PalindromeClass(PalindromeKind.ANTIPALINDROMIC, True)
    return PalindromeClass(PalindromeKind.NEITHER, all(abs(x) == abs(y) for x, y in pairs))


def reverse_check(p: IntPolynomial) -> tuple[bool, bool]:
    """(p = x^n p(1/x), p = -x^n p(1/x)) as exact polynomial identities

    Raises:
        ZeroPolynomialError: If p is the zero polynomial
    """

    if p.is_zero():
        raise ZeroPolynomialError("Cannot reverse the zero polynomial")
    reciprocal = p.reversed()
    return p == reciprocal, p == -reciprocal


def substitute_hairing(p: IntPolynomial, n: int, k: int) -> IntPolynomial:
    """x^(kn) p(x - k/x), expanded as sum a_i x^((k-1)n + i) (x^2 - k)^(n-i)

    Args:
        p (IntPolynomial): Monic polynomial of degree n
        n (int): Degree of p
        k (int): Number of pendant vertices per vertex

    Raises:
        ValueError: If k < 1
        DegreeMismatchError: If p does not have degree n
        NotMonicError: If p is not monic
    """

    if k < 1:
        raise ValueError("Invalid hairing multiplicity")
    if p.degree != n:
        raise DegreeMismatchError(f"Expected degree {n}, got {p.degree}")
    if not p.is_monic():
        raise NotMonicError("substitute_hairing needs a monic polynomial")

    base = IntPolynomial([1, 0, -k])
    powers = [ONE]
    for _ in range(n):
        powers.append(poly_mul(powers[-1], base))

    result = IntPolynomial([])
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        term = poly_mul(powers[n - i], IntPolynomial.monomial((k - 1) * n + i, a))
        result = poly_add(result, term)
    return result


def coefficient_reflection_check(p: IntPolynomial, n: int) -> bool:
    """True iff a_i = (-1)^(n+i) a_(2n-i) for i = 0..2n

    Raises:
        DegreeMismatchError: If p does not have degree 2n
    """

    if p.degree != 2 * n:
        raise DegreeMismatchError(f"Expected degree {2 * n}, got {p.degree}")
    a = p.coeffs
    return all(a[i] == (-1) ** (n + i) * a[2 * n - i] for i in range(2 * n + 1))
