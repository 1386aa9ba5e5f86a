"""Symbolic Kostant monomials and their evaluation on tensor space.

A monomial is a word of factors: divided powers of root vectors, Cartan
binomials, K^{+-1} and idempotents.  :class:`SchurAlgebra` turns words into
:class:`ExactOperator` values for one fixed (n, d, ring).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .rootdata import Root, enumerate_compositions, make_root, simple_root
from .scalars import CLASSICAL, QUANTUM, ScalarRing, ring_by_name
from .tensorrep import ExactOperator, GeneratorSet, build_generators


# -- factors -----------------------------------------------------------------

@dataclass(frozen=True)
class RootPower:
    """x_a^(m), resp. X_a^(m): the m-th divided power of a root vector."""

    root: Root
    m: int = 1

    def __str__(self):
        i, j = self.root
        base = f"X({i},{j})"
        return base if self.m == 1 else f"{base}^({self.m})"


@dataclass(frozen=True)
class CartanBinomial:
    """binom(H_i + c, t) classically, [K_i; c over t] in the quantum ring."""

    i: int
    c: int = 0
    t: int = 1

    def __str__(self):
        return f"H({self.i};{self.c}|{self.t})"


@dataclass(frozen=True)
class RootKBinomial:
    """[K_a; c over t] with K_a = K_i K_j^-1.

    In the classical ring the same factor is read as binom(H_i - H_j + c, t),
    which is what the commutation formulas need.
    """

    root: Root
    c: int = 0
    t: int = 1

    def __str__(self):
        i, j = self.root
        return f"K({i},{j};{self.c}|{self.t})"


@dataclass(frozen=True)
class KPower:
    """K_i or K_i^-1."""

    i: int
    sign: int = 1

    def __str__(self):
        return f"K({self.i})" if self.sign > 0 else f"K({self.i})^-1"


@dataclass(frozen=True)
class Idempotent:
    lam: tuple

    def __str__(self):
        return "1[" + ",".join(map(str, self.lam)) + "]"


Factor = Union[RootPower, CartanBinomial, RootKBinomial, KPower, Idempotent]


def is_cartan(f) -> bool:
    return isinstance(f, (CartanBinomial, RootKBinomial, KPower, Idempotent))


@dataclass(frozen=True)
class KostantMonomial:
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __mul__(self, other):
        if isinstance(other, KostantMonomial):
            return KostantMonomial(self.factors + other.factors)
        return NotImplemented

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def degree(self) -> int:
        return sum(f.m for f in self.factors if isinstance(f, RootPower))

    def __str__(self):
        return " ".join(str(f) for f in self.factors) if self.factors else "1"


def monomial(*factors) -> KostantMonomial:
    return KostantMonomial(tuple(factors))


def X(i, j, m=1) -> RootPower:
    return RootPower(make_root(i, j), m)


class LinearCombination:
    """Finitely supported map key -> scalar, zero coefficients dropped."""

    def __init__(self, ring: ScalarRing, terms=None):
        self.ring = ring
        self.terms: dict = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                self.add(k, c)

    def add(self, key, coeff):
        coeff = self.ring.coerce(coeff) if not isinstance(coeff, type(self.ring.one)) else coeff
        s = self.terms.get(key)
        s = coeff if s is None else s + coeff
        if s:
            self.terms[key] = s
        else:
            self.terms.pop(key, None)

    def __iadd__(self, other):
        for k, c in other.terms.items():
            self.add(k, c)
        return self

    def scaled(self, a):
        out = LinearCombination(self.ring)
        a = self.ring.coerce(a)
        if a:
            out.terms = {k: a * c for k, c in self.terms.items()}
        return out

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self.terms == other.terms

    def get(self, key):
        return self.terms.get(key, self.ring.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{k}]" for k, c in self.terms.items())


# -- evaluation --------------------------------------------------------------

class SchurAlgebra:
    """Evaluation context for S(n, d) (classical) or its quantum analogue."""

    def __init__(self, n: int, d: int, ring, gens: GeneratorSet | None = None):
        self.n, self.d = n, d
        self.ring = ring_by_name(ring)
        self.gens = gens if gens is not None else build_generators(n, d, self.ring)
        self.dim = self.gens.dim
        self.compositions = enumerate_compositions(n, d)
        self._rv: dict = {}
        self._rp: dict = {}
        self._idem: dict = {}
        self._cartan: dict = {}

    @property
    def quantum(self) -> bool:
        return self.ring.quantum

    def identity(self):
        return self.gens.identity()

    def zero(self):
        return self.gens.zero()

    # root vectors
    def root_vector(self, alpha) -> ExactOperator:
        """x_a / X_a by recursion on the left endpoint of the interval."""
        alpha = make_root(*alpha)
        hit = self._rv.get(alpha)
        if hit is not None:
            return hit
        i, j = alpha
        g = self.gens
        v = self.ring.v_pow
        if alpha.positive:
            if j == i + 1:
                op = g.e[i]
            else:
                rest = self.root_vector(Root(i + 1, j))
                if self.quantum:
                    op = (g.e[i] @ rest).scale(v(-1)) - rest @ g.e[i]
                else:
                    op = g.e[i] @ rest - rest @ g.e[i]
        else:
            # X_{-a} with a = e_j - e_i, j < i; strip alpha_j from the right end
            lo, hi = j, i
            if hi == lo + 1:
                op = g.f[lo]
            else:
                rest = self.root_vector(Root(hi, lo + 1))
                if self.quantum:
                    op = (rest @ g.f[lo]).scale(v(1)) - g.f[lo] @ rest
                else:
                    op = rest @ g.f[lo] - g.f[lo] @ rest
        self._rv[alpha] = op
        return op

    def divided_power(self, a: ExactOperator, m: int) -> ExactOperator:
        if m == 0:
            return self.identity()
        p = a
        for _ in range(m - 1):
            p = p @ a
        return p.divide(self.ring.qfact(m))

    def root_power(self, alpha, m: int) -> ExactOperator:
        alpha = make_root(*alpha)
        key = (alpha, m)
        hit = self._rp.get(key)
        if hit is None:
            if m == 0:
                hit = self.identity()
            elif m == 1:
                hit = self.root_vector(alpha)
            else:
                # x^(m) = x^(m-1) x / m  (resp. / [m])
                hit = (self.root_power(alpha, m - 1) @ self.root_vector(alpha)).divide(self.ring.qint(m))
            self._rp[key] = hit
        return hit

    # Cartan part (all diagonal)
    def _cartan_diag(self, i):
        return self.gens.cartan(i).diagonal_values()

    def cartan_binomial(self, i: int, c: int = 0, t: int = 1) -> ExactOperator:
        key = ("H", i, c, t)
        hit = self._cartan.get(key)
        if hit is None:
            if self.quantum:
                hit = self._k_binomial(self.gens.k[i], self.gens.kinv[i], c, t)
            else:
                hit = self._h_binomial(self.gens.h[i], c, t)
            self._cartan[key] = hit
        return hit

    def root_k_binomial(self, alpha, c: int = 0, t: int = 1) -> ExactOperator:
        alpha = make_root(*alpha)
        key = ("Ka", alpha, c, t)
        hit = self._cartan.get(key)
        if hit is None:
            i, j = alpha
            g = self.gens
            if self.quantum:
                hit = self._k_binomial(g.k[i] @ g.kinv[j], g.kinv[i] @ g.k[j], c, t)
            else:
                hit = self._h_binomial(g.h[i] - g.h[j], c, t)
            self._cartan[key] = hit
        return hit

    def _h_binomial(self, h, c, t):
        one = self.identity()
        out = one
        for s in range(t):
            out = out @ (h + one.scale(c - s))
        return out.divide(self.ring.qfact(t))

    def _k_binomial(self, k, kinv, c, t):
        # prod_{s=1..t} (K v^{c-s+1} - K^-1 v^{-c+s-1}) / (v^s - v^-s)
        v = self.ring.v_pow
        out = self.identity()
        for s in range(1, t + 1):
            num = k.scale(v(c - s + 1)) - kinv.scale(v(-c + s - 1))
            out = (out @ num).divide(v(s) - v(-s))
        return out

    def kpower(self, i: int, sign: int = 1) -> ExactOperator:
        if not self.quantum:
            raise ValueError("K factors only exist in the quantum ring")
        return self.gens.k[i] if sign > 0 else self.gens.kinv[i]

    def cartan_monomial(self, B) -> ExactOperator:
        """H_B = prod binom(H_i, B_i), resp. K_B = prod [K_i; 0 over B_i]."""
        out = self.identity()
        for i, b in enumerate(B, start=1):
            if b:
                out = out @ self.cartan_binomial(i, 0, b)
        return out

    def idempotent(self, lam) -> ExactOperator:
        lam = tuple(lam)
        hit = self._idem.get(lam)
        if hit is None:
            if len(lam) != self.n or sum(lam) != self.d or min(lam) < 0:
                raise ValueError(f"{lam} is not in Lambda({self.n},{self.d})")
            hit = self.cartan_monomial(lam)
            self._idem[lam] = hit
        return hit

    def reconstruct_cartan(self, j: int) -> ExactOperator:
        """sum_lam lam_j 1_lam, resp. sum_lam v^lam_j 1_lam."""
        out = self.zero()
        for lam in self.compositions:
            c = self.ring.v_pow(lam[j - 1]) if self.quantum else lam[j - 1]
            out = out + self.idempotent(lam).scale(c)
        return out

    # words
    def factor(self, f) -> ExactOperator:
        if isinstance(f, RootPower):
            return self.root_power(f.root, f.m)
        if isinstance(f, CartanBinomial):
            return self.cartan_binomial(f.i, f.c, f.t)
        if isinstance(f, RootKBinomial):
            return self.root_k_binomial(f.root, f.c, f.t)
        if isinstance(f, KPower):
            return self.kpower(f.i, f.sign)
        if isinstance(f, Idempotent):
            return self.idempotent(f.lam)
        raise TypeError(f"unknown factor {f!r}")

    def evaluate(self, m) -> ExactOperator:
        """Left-to-right product; also accepts LinearCombinations of monomials."""
        if isinstance(m, LinearCombination):
            out = self.zero()
            for key, c in m.items():
                out = out + self.evaluate(key).scale(c)
            return out
        factors = m.factors if isinstance(m, KostantMonomial) else tuple(m)
        if not factors:
            return self.identity()
        out = self.factor(factors[0])
        for f in factors[1:]:
            if out.is_zero():
                break
            out = out @ self.factor(f)
        return out


@lru_cache(maxsize=None)
def get_algebra(n: int, d: int, ring="classical") -> SchurAlgebra:
    return SchurAlgebra(n, d, ring_by_name(ring))


# module-level conveniences mirroring the method names
def root_vector(alg: SchurAlgebra, alpha) -> ExactOperator:
    return alg.root_vector(alpha)


def divided_power(alg: SchurAlgebra, a: ExactOperator, m: int) -> ExactOperator:
    return alg.divided_power(a, m)


def idempotent(alg: SchurAlgebra, lam) -> ExactOperator:
    return alg.idempotent(lam)


def cartan_monomial(alg: SchurAlgebra, B) -> ExactOperator:
    return alg.cartan_monomial(B)


def evaluate(alg: SchurAlgebra, m) -> ExactOperator:
    return alg.evaluate(m)


def reconstruct_cartan(alg: SchurAlgebra, j: int) -> ExactOperator:
    return alg.reconstruct_cartan(j)


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<root>[EFXefx])\((?P<a>-?\d+)(?:,(?P<b>-?\d+))?\)(?:\^\((?P<m>\d+)\)|\^(?P<m2>\d+))?
  | (?P<h>H)\((?P<hi>\d+)(?:;(?P<hc>-?\d+))?(?:\|(?P<ht>\d+))?\)
  | (?P<kb>K)\((?P<ki>\d+),(?P<kj>\d+)(?:;(?P<kc>-?\d+))?(?:\|(?P<kt>\d+))?\)
  | (?P<k>K)\((?P<kk>\d+)\)(?:\^(?P<ks>[+-]?1))?
  | (?P<idem>1)\[(?P<lam>[\d,\s]*)\]
""", re.VERBOSE)


def parse_monomial(text: str) -> KostantMonomial:
    """Read the juxtaposition syntax, e.g. ``E(1,2)^(2) H(1;-1|2) K(2)^-1 1[1,1]``.

    ``E(i,j)`` is X_ij for i < j and ``F(i,j)`` is its opposite X_ji (a
    negative root may also be written directly).  ``E(i)``/``F(i)`` are the
    simple generators, ``X(i,j)`` takes the root as written.
    """
    s = re.sub(r"\s+", "", text)
    s = s.replace("*", "")
    pos = 0
    out = []
    if s in ("", "1"):
        return KostantMonomial(())
    while pos < len(s):
        mt = _TOKEN.match(s, pos)
        if not mt:
            raise ValueError(f"cannot parse monomial at {s[pos:]!r}")
        g = mt.groupdict()
        if g["root"]:
            kind = g["root"].upper()
            a = int(g["a"])
            b = int(g["b"]) if g["b"] is not None else None
            m = int(g["m"] or g["m2"] or 1)
            if b is None:
                r = simple_root(a)
            else:
                r = make_root(a, b)
            if kind == "E" and not r.positive:
                raise ValueError(f"E({a},{b}) needs a positive root")
            if kind == "F" and r.positive:
                r = -r
            out.append(RootPower(r, m))
        elif g["h"]:
            out.append(CartanBinomial(int(g["hi"]), int(g["hc"] or 0), int(g["ht"] or 1)))
        elif g["kb"]:
            out.append(RootKBinomial(make_root(int(g["ki"]), int(g["kj"])),
                                     int(g["kc"] or 0), int(g["kt"] or 1)))
        elif g["k"]:
            sign = -1 if (g["ks"] or "1").startswith("-") else 1
            out.append(KPower(int(g["kk"]), sign))
        elif g["idem"]:
            lam = tuple(int(x) for x in g["lam"].split(",") if x.strip())
            out.append(Idempotent(lam))
        pos = mt.end()
    return KostantMonomial(tuple(out))


def format_monomial(m) -> str:
    return str(m if isinstance(m, KostantMonomial) else KostantMonomial(tuple(m)))
