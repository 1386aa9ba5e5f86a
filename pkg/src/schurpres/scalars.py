"""Exact scalars: rationals, integer Laurent polynomials in ``v`` and their
fraction field, plus the usual quantum integers and binomials.

Everything here is immutable.  Rationals are plain :class:`fractions.Fraction`
values; the quantum field is :class:`RationalFunction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd

from .errors import InexactDivision

__all__ = [
    "LaurentPolynomial", "RationalFunction", "ScalarRing", "CLASSICAL", "QUANTUM",
    "ring_by_name", "quantum_integer", "quantum_factorial", "quantum_binomial",
    "binomial", "specialize_v1", "rational_to_json", "rational_from_json",
]


class LaurentPolynomial:
    """Element of Z[v, v^-1] stored as ``{exponent: coefficient}``.

    >>> v = LaurentPolynomial.v()
    >>> (v + v**-1) * (v - v**-1)
    v^2 - v^-2
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        elif isinstance(coeffs, LaurentPolynomial):
            c = coeffs._c
        else:
            c = {int(e): int(a) for e, a in dict(coeffs).items() if a}
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def v(cls, exp=1):
        return cls._raw({exp: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection
    def terms(self):
        return sorted(self._c.items())

    def coeff(self, e):
        return self._c.get(e, 0)

    def low(self):
        return min(self._c) if self._c else 0

    def high(self):
        return max(self._c) if self._c else 0

    def is_zero(self):
        return not self._c

    def is_one(self):
        return len(self._c) == 1 and self._c.get(0) == 1

    def is_unit(self):
        """True for +-v^k, the units of Z[v, v^-1]."""
        if len(self._c) != 1:
            return False
        (a,) = self._c.values()
        return a == 1 or a == -1

    def is_constant(self):
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    # -- arithmetic
    @staticmethod
    def _lift(x):
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return LaurentPolynomial(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPolynomial._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return LaurentPolynomial._raw({})
        if len(b) == 1:
            ((f, y),) = b.items()
            return LaurentPolynomial._raw({e + f: x * y for e, x in a.items()})
        if len(a) == 1:
            ((e, x),) = a.items()
            return LaurentPolynomial._raw({e + f: x * y for f, y in b.items()})
        c = {}
        for e, x in a.items():
            for f, y in b.items():
                k = e + f
                c[k] = c.get(k, 0) + x * y
        return LaurentPolynomial._raw({k: s for k, s in c.items() if s})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise InexactDivision("only units have negative powers in Z[v,v^-1]")
            ((e, a),) = self._c.items()
            return LaurentPolynomial._raw({e * k: a ** (-k)})
        out = LaurentPolynomial(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k):
        """Multiply by v^k."""
        if not k:
            return self
        return LaurentPolynomial._raw({e + k: a for e, a in self._c.items()})

    def bar(self):
        """The ring involution v -> v^-1."""
        return LaurentPolynomial._raw({-e: a for e, a in self._c.items()})

    def content(self):
        g = 0
        for a in self._c.values():
            g = gcd(g, a)
        return g

    def exact_div(self, other):
        """Quotient in Z[v, v^-1]; raises InexactDivision on a remainder."""
        other = self._lift(other)
        if not other._c:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._c:
            return self
        if len(other._c) == 1:
            ((f, y),) = other._c.items()
            out = {}
            for e, x in self._c.items():
                q, r = divmod(x, y)
                if r:
                    raise InexactDivision(f"{self} / {other}")
                out[e - f] = q
            return LaurentPolynomial._raw(out)
        # long division on the shifted polynomials, top degree first
        lo_a, lo_b = self.low(), other.low()
        num = _dense(self)
        den = _dense(other)
        if len(num) < len(den):
            raise InexactDivision(f"{self} / {other}")
        lead = den[0]
        quot = []
        rem = list(num)
        for k in range(len(num) - len(den) + 1):
            q, r = divmod(rem[k], lead)
            if r:
                raise InexactDivision(f"{self} / {other}")
            quot.append(q)
            if q:
                for t in range(1, len(den)):
                    rem[k + t] -= q * den[t]
        if any(rem[len(num) - len(den) + 1:]):
            raise InexactDivision(f"{self} / {other}")
        return _from_dense(quot, lo_a - lo_b)

    # -- evaluation
    def at_one(self):
        return sum(self._c.values())

    def __call__(self, x):
        x = Fraction(x)
        return sum((a * x ** e for e, a in self._c.items()), Fraction(0))

    # -- comparisons
    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._c.get(0, 0))
            else:
                self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def to_json(self):
        return [[e, str(a)] for e, a in self.terms()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(a) for e, a in data})

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(a))
            else:
                vv = "v" if e == 1 else f"v^{e}"
                mono = vv if abs(a) == 1 else f"{abs(a)}*{vv}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, mono))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


def _dense(p):
    """Coefficients of v^-low * p, highest degree first."""
    lo, hi = p.low(), p.high()
    return [p._c.get(e, 0) for e in range(hi, lo - 1, -1)]


def _from_dense(coeffs, shift):
    n = len(coeffs)
    return LaurentPolynomial._raw(
        {n - 1 - k + shift: int(a) for k, a in enumerate(coeffs) if a})


ONE_L = LaurentPolynomial(1)
ZERO_L = LaurentPolynomial(0)


class RationalFunction:
    """Element of Q(v) in canonical form.

    The denominator is a polynomial in v with nonzero, positive constant term
    and no common factor with the numerator, so equality is structural.
    Integral values (those in Z[v, v^-1]) have denominator exactly 1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        n, d = _norm(_as_laurent(num), _as_laurent(den))
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den=ONE_L):
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def v(cls, exp=1):
        return cls._raw(LaurentPolynomial.v(exp))

    @staticmethod
    def _lift(x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPolynomial):
            return RationalFunction._raw(x)
        if isinstance(x, int):
            return RationalFunction._raw(LaurentPolynomial(x))
        if isinstance(x, Fraction):
            return RationalFunction(x.numerator, x.denominator)
        return NotImplemented

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_integral(self):
        return self.den.is_one()

    def as_laurent(self):
        if not self.den.is_one():
            raise InexactDivision(f"{self} is not in Z[v,v^-1]")
        return self.num

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction._raw(self.num + o.num)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RationalFunction._raw(self.num * o.num)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.num.is_unit():
            return RationalFunction._raw(self.den * self.num ** -1)
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.den.is_one() and o.den.is_one():
            try:
                return RationalFunction._raw(self.num.exact_div(o.num))
            except InexactDivision:
                return RationalFunction(self.num, o.num)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalFunction._raw(ONE_L)
        for _ in range(k):
            out = out * self
        return out

    def bar(self):
        return RationalFunction(self.num.bar(), self.den.bar())

    def at_one(self):
        """Value at v = 1 as a Fraction (ZeroDivisionError if there is a pole)."""
        d = self.den.at_one()
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at v=1")
        return Fraction(self.num.at_one(), d)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.den.is_one():
                self._hash = hash(self.num)
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def size(self):
        """Rough complexity, used to pick simple pivots."""
        return len(self.num) + 4 * (len(self.den) - 1) + (0 if self.num.is_unit() else 1)

    def to_json(self):
        if self.den.is_one():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, dict):
            return cls(LaurentPolynomial.from_json(data["num"]),
                       LaurentPolynomial.from_json(data["den"]))
        return cls._raw(LaurentPolynomial.from_json(data))

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num})/({self.den})"


def _as_laurent(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _norm(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return ZERO_L, ONE_L
    if den.is_one():
        return num, ONE_L
    b = den.low()
    den = den.shift(-b)
    num = num.shift(-b)
    if den.is_constant():
        c = den.coeff(0)
        g = gcd(num.content(), c)
        if c < 0:
            g = -g
        num = LaurentPolynomial._raw({e: a // g for e, a in num._c.items()})
        c //= g
        return num, (ONE_L if c == 1 else LaurentPolynomial(c))
    a = num.low()
    h, cff, cfg = dup_inner_gcd([ZZ(x) for x in _dense(num)],
                                [ZZ(x) for x in _dense(den)], ZZ)
    num = _from_dense(cff, a)
    den = _from_dense(cfg, 0)
    if den.coeff(0) < 0:
        num, den = -num, -den
    return num, den


# -- quantum combinatorics --------------------------------------------------

@lru_cache(maxsize=None)
def quantum_integer(m: int) -> LaurentPolynomial:
    """[m] = (v^m - v^-m)/(v - v^-1)."""
    if m == 0:
        return ZERO_L
    s = 1 if m > 0 else -1
    m = abs(m)
    return LaurentPolynomial({m - 1 - 2 * k: s for k in range(m)})


@lru_cache(maxsize=None)
def quantum_factorial(m: int) -> LaurentPolynomial:
    if m < 0:
        raise ValueError("quantum factorial needs m >= 0")
    out = ONE_L
    for k in range(1, m + 1):
        out = out * quantum_integer(k)
    return out


@lru_cache(maxsize=None)
def quantum_binomial(c: int, m: int) -> LaurentPolynomial:
    """Gaussian binomial [c over m] for any integer c and m >= 0."""
    if m < 0:
        raise ValueError("quantum binomial needs m >= 0")
    top = ONE_L
    for k in range(m):
        top = top * quantum_integer(c - k)
    return top.exact_div(quantum_factorial(m))


def binomial(c: int, m: int) -> int:
    """Generalized binomial c(c-1)...(c-m+1)/m!, valid for negative c."""
    if m < 0:
        raise ValueError("binomial needs m >= 0")
    top = 1
    for k in range(m):
        top *= c - k
    return top // factorial(m)


def specialize_v1(p) -> int:
    """Sum of coefficients, i.e. the value at v = 1."""
    if isinstance(p, RationalFunction):
        return p.at_one()
    if isinstance(p, int):
        return p
    return p.at_one()


def rational_to_json(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_json(s: str) -> Fraction:
    return Fraction(s)


# -- rings -------------------------------------------------------------------

class ScalarRing:
    """Arithmetic facade for one of the two coefficient rings."""

    name = "abstract"
    quantum = False

    def __repr__(self):
        return f"<ScalarRing {self.name}>"

    def __reduce__(self):
        return (ring_by_name, (self.name,))


class _Classical(ScalarRing):
    name = "classical"
    quantum = False

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, LaurentPolynomial):
            return Fraction(x.at_one())
        if isinstance(x, RationalFunction):
            return x.at_one()
        return Fraction(x)

    def v_pow(self, k):
        return self.one

    def qint(self, m):
        return Fraction(m)

    def qfact(self, m):
        return Fraction(factorial(m))

    def qbinom(self, c, t):
        return Fraction(binomial(c, t))

    def is_integral(self, x):
        return Fraction(x).denominator == 1

    def size(self, x):
        return len(str(x))

    def to_json(self, x):
        return rational_to_json(x)

    def from_json(self, s):
        return Fraction(s)

    def specialize(self, x):
        return Fraction(x)


class _Quantum(ScalarRing):
    name = "quantum"
    quantum = True

    zero = RationalFunction._raw(ZERO_L)
    one = RationalFunction._raw(ONE_L)

    def coerce(self, x):
        return RationalFunction._lift(x)

    def v_pow(self, k):
        return RationalFunction.v(k)

    def qint(self, m):
        return RationalFunction._raw(quantum_integer(m))

    def qfact(self, m):
        return RationalFunction._raw(quantum_factorial(m))

    def qbinom(self, c, t):
        return RationalFunction._raw(quantum_binomial(c, t))

    def is_integral(self, x):
        return x.is_integral()

    def size(self, x):
        return x.size()

    def to_json(self, x):
        return x.to_json()

    def from_json(self, s):
        return RationalFunction.from_json(s)

    def specialize(self, x):
        return x.at_one()


CLASSICAL = _Classical()
QUANTUM = _Quantum()


def ring_by_name(name) -> ScalarRing:
    if isinstance(name, ScalarRing):
        return name
    key = str(name).lower()
    if key in ("classical", "rational"):
        return CLASSICAL
    if key in ("quantum", "q"):
        return QUANTUM
    raise ValueError(f"unknown ring {name!r}")
