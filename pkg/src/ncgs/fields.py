"""Exact coefficient fields: the rationals and prime fields."""

from __future__ import annotations

from fractions import Fraction


class Rationals:
    """The field Q, with elements stored as :class:`fractions.Fraction`."""

    characteristic = 0

    def __call__(self, c) -> Fraction:
        if isinstance(c, Fraction):
            return c
        if isinstance(c, str):
            return Fraction(c.strip())
        if isinstance(c, float):
            raise TypeError("floating point coefficients are not exact")
        return Fraction(c)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def format(self, c) -> str:
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def to_json(self):
        return "rational"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """GF(p).  Elements are instances of an ``int`` subclass reducing mod p."""

    _cache: dict[int, type] = {}

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.characteristic = p
        self.element = PrimeField._cache.get(p) or _make_residue_class(p)
        PrimeField._cache[p] = self.element

    def __call__(self, c):
        if isinstance(c, str):
            c = Fraction(c.strip())
        if isinstance(c, Fraction):
            return self.element(c.numerator) / self.element(c.denominator)
        if isinstance(c, float):
            raise TypeError("floating point coefficients are not exact")
        return self.element(int(c))

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    def format(self, c) -> str:
        return str(int(c) % self.characteristic)

    def to_json(self):
        return {"prime": self.characteristic}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


def _make_residue_class(p: int) -> type:
    class Residue(int):
        __slots__ = ()
        modulus = p

        def __new__(cls, value=0):
            return int.__new__(cls, int(value) % p)

        def __add__(self, other):
            return Residue(int(self) + int(other))

        __radd__ = __add__

        def __sub__(self, other):
            return Residue(int(self) - int(other))

        def __rsub__(self, other):
            return Residue(int(other) - int(self))

        def __mul__(self, other):
            return Residue(int(self) * int(other))

        __rmul__ = __mul__

        def __neg__(self):
            return Residue(-int(self))

        def __truediv__(self, other):
            other = int(other) % p
            if other == 0:
                raise ZeroDivisionError(f"division by zero in GF({p})")
            return Residue(int(self) * pow(other, -1, p))

        def __rtruediv__(self, other):
            return Residue(other) / self

        def __pow__(self, e):
            return Residue(pow(int(self), e, p))

        def __repr__(self):
            return f"{int(self)} (mod {p})"

    Residue.__name__ = f"GF{p}"
    return Residue


def field_from_json(spec) -> Rationals | PrimeField:
    if spec in (None, "rational", "QQ", "Q"):
        return QQ
    if isinstance(spec, dict) and set(spec) == {"prime"}:
        return PrimeField(spec["prime"])
    raise ValueError(f"unsupported coefficient field {spec!r}; use 'rational' or {{'prime': p}}")
