"""Constructors for the named algebras: full matrix superalgebras M_{r,s},
the queer-type superalgebras Q_n, and null-product building blocks."""

from __future__ import annotations

from .core import Superalgebra
from .errors import PreconditionError
from .forms import EVEN, ODD, HomogeneousForm
from .linalg import ONE, ZERO, Matrix


def make_Mrs(r: int, s: int):
    """M_{r,s}: matrix units of M_{r+s}, block-diagonal part even.

    Canonical even structure: B(M, M') = tr(aa') - tr(bb') on the even part
    and B(N, N') = tr(cd') - tr(dc') on the odd part.
    """
    if r < 1 or s < 0:
        raise PreconditionError("make_Mrs requires r >= 1, s >= 0")
    n = r + s

    def even_unit(i, j):
        return (i < r) == (j < r)

    units = [(i, j) for i in range(n) for j in range(n)]
    evens = [u for u in units if even_unit(*u)]
    odds = [u for u in units if not even_unit(*u)]
    order = evens + odds
    pos = {u: t for t, u in enumerate(order)}
    names = [f"e{i + 1}{j + 1}" for (i, j) in order]
    triples = []
    for (i, j) in order:
        for (l, k) in order:
            if j == l:
                triples.append((pos[(i, j)], pos[(l, k)], pos[(i, k)], ONE))
    alg = Superalgebra(len(evens), len(odds), names, triples)
    dim = n * n
    data = [ZERO] * (dim * dim)
    for (i, j) in order:
        for (l, k) in order:
            if i != k or j != l:
                continue
            a, b = pos[(i, j)], pos[(l, k)]
            if even_unit(i, j):
                data[a * dim + b] = ONE if i < r else -ONE
            else:
                # c-block (rows < r) pairs d-block positively, d pairs c negatively
                data[a * dim + b] = ONE if i < r else -ONE
    form = HomogeneousForm(EVEN, Matrix(dim, dim, data))
    return alg, form


def make_Qn(n: int):
    """Q_n: pairs (a, a) even and (b, b)-swapped odd, compressed basis.

    E_ij E_lk = d_jl E_ik, F_ij F_lk = d_jl E_ik, E_ij F_lk = d_jl F_ik,
    F_ij E_lk = d_jl F_ik; odd structure B(E_ij, F_lk) = d_il d_jk.
    """
    if n < 1:
        raise PreconditionError("make_Qn requires n >= 1")
    m = n * n
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    names += [f"F{i + 1}{j + 1}" for i in range(n) for j in range(n)]

    def e(i, j):
        return i * n + j

    def f(i, j):
        return m + i * n + j

    triples = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                triples.append((e(i, j), e(j, k), e(i, k), ONE))
                triples.append((f(i, j), f(j, k), e(i, k), ONE))
                triples.append((e(i, j), f(j, k), f(i, k), ONE))
                triples.append((f(i, j), e(j, k), f(i, k), ONE))
    alg = Superalgebra(m, m, names, triples)
    dim = 2 * m
    data = [ZERO] * (dim * dim)
    for i in range(n):
        for j in range(n):
            a, b = e(i, j), f(j, i)
            data[a * dim + b] = ONE
            data[b * dim + a] = ONE
    form = HomogeneousForm(ODD, Matrix(dim, dim, data))
    return alg, form


def make_null(n0: int, n1: int) -> Superalgebra:
    """Null-product superalgebra of graded dimension (n0, n1)."""
    names = [f"x{i + 1}" for i in range(n0)] + [f"y{i + 1}" for i in range(n1)]
    return Superalgebra(n0, n1, names, [])
