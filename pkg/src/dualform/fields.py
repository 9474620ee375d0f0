"""Exact scalar arithmetic over the rationals and over prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` for the rationals and
``int`` residues in ``[0, p)`` for GF(p).  Both representations are canonical,
so structural equality of scalars is sound.  A field object mediates all
arithmetic and owns the parsing/formatting of the textual scalar encoding
("num/den" or "num" for rationals, decimal residues for GF(p)).
"""

from fractions import Fraction

from .errors import CharTwo, DivisionByZero, NotPrime, ValidationError

PRIME_BOUND = 2**31


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface; concrete fields are RationalField and PrimeField."""

    def characteristic(self):
        raise NotImplementedError

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    def neg(self, a):
        return self.sub(self.zero, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def halve(self, a):
        if self.characteristic() == 2:
            raise CharTwo("cannot divide by 2 in characteristic 2")
        return self.div(a, self.scalar(2))

    def is_zero(self, a):
        return a == self.zero

    def parse(self, text):
        raise NotImplementedError

    def format(self, a):
        return str(a)


class RationalField(Field):
    def characteristic(self):
        return 0

    def scalar(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return 1 / Fraction(a)

    def parse(self, text):
        return Fraction(text.strip())

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    def __init__(self, p):
        if not (2 <= p < PRIME_BOUND):
            raise NotPrime(f"p = {p} out of range [2, 2^31)")
        if not _is_prime(p):
            raise NotPrime(f"p = {p} is not prime")
        self.p = p

    def characteristic(self):
        return self.p

    def scalar(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return self.div(x.numerator % self.p,
                                self.scalar(x.denominator))
            x = x.numerator
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def parse(self, text):
        return int(text.strip(), 10) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def make_field(kind, p=None):
    """Build a field from its descriptor: kind 'rational' or 'prime'."""
    kind = kind.lower()
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        if p is None:
            raise ValidationError("prime field needs p")
        return PrimeField(p)
    raise ValidationError(f"unknown field kind {kind!r}")
