"""Independent brute-force oracles shared by the test modules.

Deliberately naive implementations: plain fraction Gauss elimination and
exhaustive substitution. They never call into superalg's elimination code.
"""

from fractions import Fraction


def gauss_rank(rows):
    """Row count after naive forward elimination (no pivsom strategy)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, nrows):
            if m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_vec(rows, v):
    return [sum((Fraction(a) * Fraction(x) for a, x in zip(r, v)), Fraction(0)) for r in rows]


def in_span(vectors, v):
    """Membership test by rank comparison, via the naive elimination above."""
    base = [list(w) for w in vectors]
    return gauss_rank(base + [list(v)]) == gauss_rank(base)


def same_span(vs, ws):
    return all(in_span(vs, w) for w in ws) and all(in_span(ws, v) for v in vs)
