"""Tiny exact multivariate polynomials, enough for generic determinants.

A polynomial in d variables is a dict mapping exponent tuples to nonzero
rational coefficients. Used to decide whether a pencil of gram matrices
contains a non-degenerate member: the determinant of the generic combination
is expanded exactly, then a witness point is peeled off variable by variable.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import ZERO, frac


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, nvars, c) -> "Poly":
        c = frac(c)
        return cls(nvars, {(0,) * nvars: c} if c != 0 else {})

    @classmethod
    def var(cls, nvars, i, coeff=1) -> "Poly":
        m = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {m: frac(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c) -> "Poly":
        c = frac(c)
        if c == 0:
            return Poly(self.nvars)
        return Poly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.nvars, out)

    def degree_in(self, i) -> int:
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def substitute(self, i, value) -> "Poly":
        """Plug an exact value into variable i (the slot stays, exponent 0)."""
        value = frac(value)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            c2 = c * value**e if e else c
            if c2 == 0:
                continue
            m2 = tuple(0 if j == i else x for j, x in enumerate(m))
            s = out.get(m2, ZERO) + c2
            if s == 0:
                out.pop(m2, None)
            else:
                out[m2] = s
        return Poly(self.nvars, out)

    def evaluate(self, point) -> Fraction:
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for e, x in zip(m, point):
                if e:
                    v *= frac(x) ** e
            total += v
        return total

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"t{i}^{e}" for i, e in enumerate(m) if e)
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return "Poly(" + " + ".join(bits) + ")"


def symbolic_det(entries) -> Poly:
    """Determinant of a square matrix of Poly entries.

    Laplace expansion along rows, memoized on the set of still-unused
    columns; zero entries prune the recursion, which keeps block-sparse
    gram pencils cheap.
    """
    n = len(entries)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = entries[0][0].nvars
    memo = {}

    def go(row, cols):
        if not cols:
            return Poly.const(nvars, 1)
        key = cols
        got = memo.get(key)
        if got is not None:
            return got
        acc = Poly(nvars)
        for idx, c in enumerate(cols):
            e = entries[row][c]
            if e.is_zero():
                continue
            sub = go(row + 1, cols[:idx] + cols[idx + 1 :])
            term = e * sub
            acc = acc + (term if idx % 2 == 0 else term.scale(-1))
        memo[key] = acc
        return acc

    return go(0, tuple(range(n)))


def nonzero_point(p: Poly):
    """Deterministic integer point where p is nonzero, or None if p == 0.

    Peels variables in order: for each variable the candidate values
    0..deg_i are tried (one more value than the degree bound, so a nonzero
    restriction always exists among them).
    """
    if p.is_zero():
        return None
    point = []
    cur = p
    for i in range(p.nvars):
        d = cur.degree_in(i)
        if d <= 0:
            point.append(0)
            cur = cur.substitute(i, 0)
            continue
        for c in range(d + 1):
            nxt = cur.substitute(i, c)
            if not nxt.is_zero():
                point.append(c)
                cur = nxt
                break
        else:  # pragma: no cover - impossible by the degree bound
            raise AssertionError("degree bound violated")
    return tuple(point)
