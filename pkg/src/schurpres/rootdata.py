"""Type A root data: roots e_i - e_j, compositions of d, orders on the
positive roots and the content statistics of monomials."""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, NamedTuple, Sequence


class Root(NamedTuple):
    """The root e_i - e_j (1-based, i != j)."""

    i: int
    j: int

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def __neg__(self):
        return Root(self.j, self.i)

    def weight(self, n: int) -> tuple:
        w = [0] * n
        w[self.i - 1] += 1
        w[self.j - 1] -= 1
        return tuple(w)

    def label(self) -> str:
        return f"{self.i}{self.j}" if max(self) < 10 else f"{self.i},{self.j}"

    def __repr__(self):
        return f"Root({self.i},{self.j})"


def make_root(i: int, j: int) -> Root:
    if i == j:
        raise ValueError("a root needs i != j")
    return Root(i, j)


def simple_root(i: int) -> Root:
    return Root(i, i + 1)


def roots(n: int) -> list:
    """All of Phi, positive roots first (lexicographic), then negatives."""
    return positive_roots(n) + [-a for a in positive_roots(n)]


def positive_roots(n: int) -> list:
    return [Root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def root_sum(a: Root, b: Root):
    """a + b as a root, or None when the sum is not a root."""
    if a.j == b.i and a.i != b.j:
        return Root(a.i, b.j)
    if b.j == a.i and b.i != a.j:
        return Root(b.i, a.j)
    return None


# -- compositions ------------------------------------------------------------

def enumerate_compositions(n: int, d: int) -> list:
    """Lambda(n, d) in descending lexicographic order."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")

    def rec(k, rest):
        if k == 1:
            yield (rest,)
            return
        for a in range(rest, -1, -1):
            for tail in rec(k - 1, rest - a):
                yield (a,) + tail

    return list(rec(n, d))


def is_composition(lam: Sequence[int], d: int | None = None) -> bool:
    if any(x < 0 for x in lam):
        return False
    return d is None or sum(lam) == d


def componentwise_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise ValueError("length mismatch")
    return all(x <= y for x, y in zip(a, b))


def shift_composition(lam: Sequence[int], alpha: Root, times: int = 1):
    """lam + times*alpha, or None when a part leaves 0..d."""
    out = list(lam)
    out[alpha.i - 1] += times
    out[alpha.j - 1] -= times
    d = sum(lam)
    if out[alpha.i - 1] < 0 or out[alpha.j - 1] < 0 or out[alpha.i - 1] > d or out[alpha.j - 1] > d:
        return None
    return tuple(out)


def add_vectors(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


# -- box order ---------------------------------------------------------------

def box_compare(alpha: Root, beta: Root) -> int:
    """+1 if alpha > beta in the box order, -1 if alpha < beta, 0 if equal.

    With alpha = e_i - e_j and beta = e_r - e_s: alpha > beta iff s > j,
    or s == j and r > i.
    """
    (i, j), (r, s) = alpha, beta
    if (i, j) == (r, s):
        return 0
    if s > j or (s == j and r > i):
        return 1
    return -1


class RootOrder:
    """A total order on the positive roots, given as an explicit sequence.

    Products E_A are formed left to right along ``roots``; products F_C use
    the same sequence on the negated roots.
    """

    def __init__(self, roots_seq: Iterable, name: str = "custom"):
        seq = tuple(make_root(*r) for r in roots_seq)
        if any(not r.positive for r in seq):
            raise ValueError("a RootOrder lists positive roots")
        if len(set(seq)) != len(seq):
            raise ValueError("repeated root in order")
        self.roots = seq
        self.name = name
        self._rank = {r: k for k, r in enumerate(seq)}

    @classmethod
    def box(cls, n: int):
        """Ascending box order, so the box-largest root is the rightmost factor."""
        seq = sorted(positive_roots(n), key=cmp_to_key(box_compare))
        return cls(seq, "box")

    @classmethod
    def reverse_box(cls, n: int):
        return cls(tuple(reversed(cls.box(n).roots)), "revbox")

    @classmethod
    def lex(cls, n: int):
        return cls(positive_roots(n), "lex")

    @classmethod
    def custom(cls, seq, n: int | None = None):
        order = cls(seq, "custom")
        if n is not None and set(order.roots) != set(positive_roots(n)):
            raise ValueError("custom order must list every positive root once")
        return order

    def key(self, root: Root) -> int:
        return self._rank[root if root.positive else -root]

    def reversed(self):
        return RootOrder(tuple(reversed(self.roots)), "rev-" + self.name)

    def __eq__(self, other):
        return isinstance(other, RootOrder) and self.roots == other.roots

    def __hash__(self):
        return hash(self.roots)

    def to_json(self):
        return [list(r) for r in self.roots]

    def __repr__(self):
        return f"RootOrder({self.name}: {' '.join(r.label() for r in self.roots)})"


def parse_order_spec(spec: str, n: int):
    """Parse ``box``, ``revbox``, ``lex`` or ``custom:12,13,...`` into an
    (E order, F order) pair.

    ``box`` pairs the box order on E with the reverse box order on F.  A
    custom list may mix positive and negative roots; positives fix the E
    order and negatives the F order.  A list of positives only is used for
    both.
    """
    spec = spec.strip()
    if spec == "box":
        return RootOrder.box(n), RootOrder.reverse_box(n)
    if spec == "revbox":
        return RootOrder.reverse_box(n), RootOrder.box(n)
    if spec == "lex":
        return RootOrder.lex(n), RootOrder.lex(n)
    if spec.startswith("custom:"):
        items = [t for t in spec[len("custom:"):].replace(";", ",").split(",") if t.strip()]
        rts = [_parse_root_token(t, n) for t in items]
        pos = [r for r in rts if r.positive]
        neg = [-r for r in rts if not r.positive]
        if not neg:
            neg = pos
        if not pos:
            pos = neg
        return RootOrder.custom(pos, n), RootOrder.custom(neg, n)
    raise ValueError(f"unknown order {spec!r}")


def _parse_root_token(tok: str, n: int) -> Root:
    tok = tok.strip().strip("()[]")
    if "-" in tok:
        a, b = tok.split("-")
    elif len(tok) == 2 and n < 10:
        a, b = tok[0], tok[1]
    else:
        raise ValueError(f"cannot read root {tok!r}")
    return make_root(int(a), int(b))


# -- content -----------------------------------------------------------------

def _root_powers(word):
    """Yield (root, power) for the divided-power factors of a word."""
    for f in word:
        if isinstance(f, tuple) and len(f) == 3 and all(isinstance(x, int) for x in f):
            yield Root(f[0], f[1]), f[2]
        else:
            r = getattr(f, "root", None)
            if r is not None and hasattr(f, "m"):
                yield r, f.m


def _factors(m):
    return getattr(m, "factors", m)


def content(m, n: int) -> tuple:
    """chi: each x_a^(m) contributes m * e_max(i,j)."""
    out = [0] * n
    for r, p in _root_powers(_factors(m)):
        out[max(r.i, r.j) - 1] += p
    return tuple(out)


def content_right(m, n: int) -> tuple:
    """chi_R: each x_a^(m) with a = e_i - e_j contributes m * e_j."""
    out = [0] * n
    for r, p in _root_powers(_factors(m)):
        out[r.j - 1] += p
    return tuple(out)


def content_left(m, n: int) -> tuple:
    """chi_L: contributes m * e_i."""
    out = [0] * n
    for r, p in _root_powers(_factors(m)):
        out[r.i - 1] += p
    return tuple(out)


def word_weight(m, n: int) -> tuple:
    """Total weight sum m*alpha of the divided-power factors."""
    out = [0] * n
    for r, p in _root_powers(_factors(m)):
        out[r.i - 1] += p
        out[r.j - 1] -= p
    return tuple(out)


def deviation(chi: Sequence[int], mu: Sequence[int]) -> int:
    return sum(c - u for c, u in zip(chi, mu) if c > u)
