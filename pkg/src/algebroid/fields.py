"""Exact scalar arithmetic: unbounded rationals and prime fields GF(p).

Scalars are plain values (fractions.Fraction for the rationals, ints in
[0, p) for GF(p)); the field object supplies the arithmetic so all linear
algebra stays backend-agnostic.  Field choice is a per-scenario runtime
configuration.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RationalField:
    """The field of rational numbers; scalars are Fraction instances."""

    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        return Fraction(str(text))

    def to_str(self, a):
        return str(a)


class PrimeField:
    """GF(p) for a prime p; scalars are ints reduced into [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        text = str(text).strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p

    def to_str(self, a):
        return str(a)


RATIONALS = RationalField()

_PRIME_CACHE: dict[int, PrimeField] = {}


def prime_field(p: int) -> PrimeField:
    if p not in _PRIME_CACHE:
        _PRIME_CACHE[p] = PrimeField(p)
    return _PRIME_CACHE[p]


def field_from_spec(spec) -> RationalField | PrimeField:
    """Parse a field description: {"kind": "rational"} or {"kind": "prime", "p": n}.

    Also accepts the CLI shorthand strings "rational" and "gf:<p>".
    """
    if isinstance(spec, str):
        if spec == "rational":
            return RATIONALS
        if spec.startswith("gf:"):
            return prime_field(int(spec[3:]))
        raise FieldError(f"unknown field spec {spec!r}")
    kind = spec.get("kind")
    if kind == "rational":
        return RATIONALS
    if kind == "prime":
        return prime_field(int(spec["p"]))
    raise FieldError(f"unknown field spec {spec!r}")
