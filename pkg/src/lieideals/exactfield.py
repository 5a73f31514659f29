"""Exact scalar arithmetic over GF(p) and over the rationals.

Scalars are kept in canonical form: an integer residue in ``0..p-1`` for a
prime field, a reduced :class:`~fractions.Fraction` (positive denominator,
which Fraction guarantees) for the rationals.  All arithmetic goes through
the owning field object, so equal field elements always compare equal
bit-for-bit.
"""

from fractions import Fraction

from .errors import FieldMismatchError, LieIdealsError

MAX_PRIME = 251  # residues fit a byte; enumeration caps are far below this


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for the supported range."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of :class:`PrimeField` and :class:`RationalField`."""

    kind = None  # "prime-field" | "rationals"

    def characteristic(self) -> int:
        raise NotImplementedError

    def check_same(self, other: "Field"):
        if self != other:
            raise FieldMismatchError(f"mixed fields: {self} and {other}")

    # Subclasses provide: zero, one, add, sub, mul, div, neg, inv,
    # from_int, parse, format, is_canonical.


class PrimeField(Field):
    """GF(p) for a prime p <= 251.  Elements are ints in ``0..p-1``."""

    kind = "prime-field"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise LieIdealsError(f"modulus must be prime, got {p!r}")
        if p > MAX_PRIME:
            raise LieIdealsError(f"modulus {p} exceeds supported cap {MAX_PRIME}")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def characteristic(self) -> int:
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        return n % self.p

    def is_canonical(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.p

    def elements(self):
        return range(self.p)

    def parse(self, text: str):
        try:
            n = int(text, 10)
        except ValueError:
            raise LieIdealsError(f"bad GF({self.p}) scalar literal {text!r}") from None
        return n % self.p

    def format(self, a) -> str:
        return str(a)


class RationalField(Field):
    """The rationals with arbitrary-precision Fraction elements."""

    kind = "rationals"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def characteristic(self) -> int:
        return 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0 in Q")
        return Fraction(a) / b

    def from_int(self, n: int):
        return Fraction(n)

    def is_canonical(self, a) -> bool:
        return isinstance(a, Fraction)

    def parse(self, text: str):
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return Fraction(int(num, 10), int(den, 10))
            return Fraction(int(text, 10))
        except (ValueError, ZeroDivisionError):
            raise LieIdealsError(f"bad rational scalar literal {text!r}") from None

    def format(self, a) -> str:
        return f"{a.numerator}/{a.denominator}"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Parse a field name: ``Q`` or ``GF(p)``."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        try:
            p = int(name[3:-1], 10)
        except ValueError:
            raise LieIdealsError(f"bad field name {name!r}") from None
        return PrimeField(p)
    raise LieIdealsError(f"bad field name {name!r}")
