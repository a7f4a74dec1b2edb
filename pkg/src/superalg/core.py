"""Finite-dimensional associative superalgebras over exact rationals.

A superalgebra is stored by sparse structure constants over a named
homogeneous basis: indices below `dim_even` are even, the rest odd. All
values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAnIdeal, PreconditionError, ShapeError, SplitRequired
from .linalg import ONE, ZERO, Matrix, SubspaceBasis, frac, sparse_kernel


class GradedSubspace:
    """A graded subspace, one canonical RREF basis per parity block.

    Vectors of each part live in the parity-local coordinates (length
    dim_even resp. dim_odd of the ambient superalgebra).
    """

    __slots__ = ("even", "odd")

    def __init__(self, even: SubspaceBasis, odd: SubspaceBasis):
        object.__setattr__(self, "even", even)
        object.__setattr__(self, "odd", odd)

    def __setattr__(self, *a):
        raise AttributeError("GradedSubspace is immutable")

    @classmethod
    def zero(cls, n0, n1):
        return cls(SubspaceBasis.zero(n0), SubspaceBasis.zero(n1))

    @classmethod
    def full(cls, n0, n1):
        return cls(SubspaceBasis.full(n0), SubspaceBasis.full(n1))

    @classmethod
    def from_full_vectors(cls, n0, n1, vectors):
        """Graded span: each vector contributes its parity components."""
        evens, odds = [], []
        for v in vectors:
            v = [frac(x) for x in v]
            if len(v) != n0 + n1:
                raise ShapeError("vector length != ambient dimension")
            e, o = v[:n0], v[n0:]
            if any(x != 0 for x in e):
                evens.append(e)
            if any(x != 0 for x in o):
                odds.append(o)
        return cls(
            SubspaceBasis.from_vectors(n0, evens), SubspaceBasis.from_vectors(n1, odds)
        )

    @property
    def dim(self):
        return self.even.dim + self.odd.dim

    def full_vectors(self):
        """Homogeneous basis embedded in the full coordinate space."""
        n0, n1 = self.even.ambient_dim, self.odd.ambient_dim
        out = [tuple(v) + (ZERO,) * n1 for v in self.even.vectors]
        out += [(ZERO,) * n0 + tuple(v) for v in self.odd.vectors]
        return out

    def contains_full(self, vec):
        n0 = self.even.ambient_dim
        vec = [frac(x) for x in vec]
        return self.even.contains(vec[:n0]) and self.odd.contains(vec[n0:])

    def sum(self, other):
        return GradedSubspace(self.even.sum(other.even), self.odd.sum(other.odd))

    def intersect(self, other):
        return GradedSubspace(self.even.intersect(other.even), self.odd.intersect(other.odd))

    def __eq__(self, other):
        return (
            isinstance(other, GradedSubspace)
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.even, self.odd))

    def __repr__(self):
        return f"GradedSubspace(even dim {self.even.dim}, odd dim {self.odd.dim})"


class ValidationReport:
    """Outcome of structural checks: a list of violation records."""

    def __init__(self, violations):
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok)"
        return "ValidationReport(\n  " + "\n  ".join(map(str, self.violations)) + "\n)"


class Superalgebra:
    __slots__ = ("dim_even", "dim_odd", "basis_names", "structure", "_left", "_right")

    def __init__(self, dim_even, dim_odd, basis_names, structure):
        """`structure` is an iterable of (i, j, k, coeff) triples; omitted
        entries are zero and repeated (i, j, k) coefficients accumulate."""
        n = dim_even + dim_odd
        basis_names = tuple(basis_names)
        if len(basis_names) != n:
            raise ShapeError("basis name count != dimension")
        table = {}
        for i, j, k, c in structure:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise ShapeError(f"structure index out of range: {(i, j, k)}")
            c = frac(c)
            if c == 0:
                continue
            row = table.setdefault((i, j), {})
            s = row.get(k, ZERO) + c
            if s == 0:
                row.pop(k, None)
                if not row:
                    table.pop((i, j))
            else:
                row[k] = s
        table = {ij: row for ij, row in table.items() if row}
        object.__setattr__(self, "dim_even", dim_even)
        object.__setattr__(self, "dim_odd", dim_odd)
        object.__setattr__(self, "basis_names", basis_names)
        object.__setattr__(self, "structure", table)
        # left[j] / right[j]: sparse action of basis element j, {(k, i): c}
        left = [dict() for _ in range(n)]
        right = [dict() for _ in range(n)]
        for (i, j), row in table.items():
            for k, c in row.items():
                left[i][(k, j)] = c
                right[j][(k, i)] = c
        object.__setattr__(self, "_left", tuple(left))
        object.__setattr__(self, "_right", tuple(right))

    def __setattr__(self, *a):
        raise AttributeError("Superalgebra is immutable")

    # -- basics --------------------------------------------------------

    @property
    def dim(self):
        return self.dim_even + self.dim_odd

    def parity(self, i):
        return 0 if i < self.dim_even else 1

    def coeff(self, i, j, k):
        return self.structure.get((i, j), {}).get(k, ZERO)

    def basis_product(self, i, j):
        """Sparse product e_i . e_j as {k: coeff}."""
        return self.structure.get((i, j), {})

    def triples(self):
        for (i, j), row in sorted(self.structure.items()):
            for k in sorted(row):
                yield i, j, k, row[k]

    def multiply(self, x, y):
        """Bilinear extension of the structure constants to full vectors."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ShapeError("vector length != algebra dimension")
        out = [ZERO] * n
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                row = self.structure.get((i, j))
                if row:
                    f = frac(xi) * frac(yj)
                    for k, c in row.items():
                        out[k] += f * c
        return tuple(out)

    def basis_vector(self, i):
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def left_matrix(self, x):
        """Dense matrix of left multiplication by the full vector x."""
        n = self.dim
        out = [ZERO] * (n * n)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            xi = frac(xi)
            for (k, j), c in self._left[i].items():
                out[k * n + j] += xi * c
        return Matrix(n, n, out)

    def right_matrix(self, x):
        n = self.dim
        out = [ZERO] * (n * n)
        for j, xj in enumerate(x):
            if xj == 0:
                continue
            xj = frac(xj)
            for (k, i), c in self._right[j].items():
                out[k * n + i] += xj * c
        return Matrix(n, n, out)

    def grading_operator(self, vec):
        """Parity flip x0 + x1 -> x0 - x1."""
        n0 = self.dim_even
        return tuple(x if i < n0 else -x for i, x in enumerate(vec))

    # -- validation ------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Every violated grading or associativity constraint, by indices."""
        bad = []
        for (i, j), row in sorted(self.structure.items()):
            want = (self.parity(i) + self.parity(j)) % 2
            for k in sorted(row):
                if self.parity(k) != want:
                    bad.append(("grading", i, j, k))
        n = self.dim
        for i in range(n):
            for j in range(n):
                pij = self.structure.get((i, j))
                for k in range(n):
                    pjk = self.structure.get((j, k))
                    if not pij and not pjk:
                        continue
                    lhs = {}
                    if pij:
                        for m, c in pij.items():
                            row = self.structure.get((m, k))
                            if row:
                                for t, d in row.items():
                                    lhs[t] = lhs.get(t, ZERO) + c * d
                    rhs = {}
                    if pjk:
                        for m, c in pjk.items():
                            row = self.structure.get((i, m))
                            if row:
                                for t, d in row.items():
                                    rhs[t] = rhs.get(t, ZERO) + c * d
                    for t in set(lhs) | set(rhs):
                        if lhs.get(t, ZERO) != rhs.get(t, ZERO):
                            bad.append(("associativity", i, j, k))
                            break
        return ValidationReport(bad)

    # -- subspaces and ideals ---------------------------------------------

    def annihilator(self) -> GradedSubspace:
        """{x : x.A = A.x = 0}, computed per parity block."""
        n, n0 = self.dim, self.dim_even
        parts = []
        for par, idxs in ((0, range(n0)), (1, range(n0, n))):
            cols = list(idxs)
            pos = {g: c for c, g in enumerate(cols)}
            rows = {}
            for (i, j), row in self.structure.items():
                for k, c in row.items():
                    if i in pos:  # x.e_j component k
                        rows.setdefault(("l", j, k), {})[pos[i]] = c
                    if j in pos:  # e_i.x component k
                        rows.setdefault(("r", i, k), {})[pos[j]] = c
            parts.append(sparse_kernel(list(rows.values()), len(cols)))
        return GradedSubspace(parts[0], parts[1])

    def is_graded_ideal(self, u: GradedSubspace) -> bool:
        n = self.dim
        for v in u.full_vectors():
            for j in range(n):
                ej = self.basis_vector(j)
                if not u.contains_full(self.multiply(ej, v)):
                    return False
                if not u.contains_full(self.multiply(v, ej)):
                    return False
        return True

    def ideal_generated(self, seed: GradedSubspace) -> GradedSubspace:
        """Smallest graded two-sided ideal containing the seed."""
        n0, n1 = self.dim_even, self.dim_odd
        cur = GradedSubspace.from_full_vectors(n0, n1, seed.full_vectors())
        while True:
            vecs = list(cur.full_vectors())
            new = list(vecs)
            for v in vecs:
                for j in range(self.dim):
                    ej = self.basis_vector(j)
                    new.append(self.multiply(ej, v))
                    new.append(self.multiply(v, ej))
            nxt = GradedSubspace.from_full_vectors(n0, n1, new)
            if nxt.dim == cur.dim:
                return nxt
            cur = nxt

    def product_subspaces(self, u: GradedSubspace, v: GradedSubspace) -> GradedSubspace:
        prods = [
            self.multiply(x, y) for x in u.full_vectors() for y in v.full_vectors()
        ]
        return GradedSubspace.from_full_vectors(self.dim_even, self.dim_odd, prods)

    def whole_space(self) -> GradedSubspace:
        return GradedSubspace.full(self.dim_even, self.dim_odd)

    def product_is_null(self) -> bool:
        return not self.structure

    # -- quotient / sums ---------------------------------------------------

    def quotient(self, ideal: GradedSubspace):
        """Quotient superalgebra plus the projection matrix onto it."""
        if not self.is_graded_ideal(ideal):
            raise NotAnIdeal("quotient by a subspace that is not a graded two-sided ideal")
        n0, n1, n = self.dim_even, self.dim_odd, self.dim
        comp_even = ideal.even.complement_indices()
        comp_odd = [n0 + j for j in ideal.odd.complement_indices()]
        comp = comp_even + comp_odd
        q0, q1 = len(comp_even), len(comp_odd)
        proj_rows = []

        def project(vec):
            e = ideal.even.reduce(vec[:n0])
            o = ideal.odd.reduce(vec[n0:])
            full = list(e) + list(o)
            return [full[g] for g in comp]

        for m in range(n):
            proj_rows.append(project(self.basis_vector(m)))
        proj = Matrix.from_rows(proj_rows).transpose() if n else Matrix.zeros(0, 0)
        names = [self.basis_names[g] for g in comp]
        triples = []
        for a, ga in enumerate(comp):
            for b, gb in enumerate(comp):
                prod = self.multiply(self.basis_vector(ga), self.basis_vector(gb))
                for k, c in enumerate(project(prod)):
                    if c != 0:
                        triples.append((a, b, k, c))
        return Superalgebra(q0, q1, names, triples), proj

    def sub_superalgebra(self, u: GradedSubspace):
        """Algebra induced on a product-closed graded subspace.

        Returns (subalgebra, embedding) with embedding an n x d matrix whose
        columns are the graded basis of u.
        """
        vecs = u.full_vectors()
        d = len(vecs)
        n0 = self.dim_even

        def coords(w):
            ce = u.even.coordinates(w[:n0])
            co = u.odd.coordinates(w[n0:])
            if ce is None or co is None:
                return None
            return tuple(ce) + tuple(co)

        triples = []
        for a, x in enumerate(vecs):
            for b, y in enumerate(vecs):
                prod = self.multiply(x, y)
                cc = coords(prod)
                if cc is None:
                    raise PreconditionError("subspace is not closed under the product")
                for k, c in enumerate(cc):
                    if c != 0:
                        triples.append((a, b, k, c))
        names = []
        for p in u.even.pivots():
            names.append(self.basis_names[p])
        for p in u.odd.pivots():
            names.append(self.basis_names[n0 + p])
        sub = Superalgebra(u.even.dim, u.odd.dim, names, triples)
        embed = (
            Matrix.from_rows(vecs).transpose() if d else Matrix.zeros(self.dim, 0)
        )
        return sub, embed

    # -- semisimplicity ----------------------------------------------------

    def _left_traces(self):
        n = self.dim
        tr = [ZERO] * n
        for (i, j), row in self.structure.items():
            c = row.get(j)
            if c is not None:
                tr[i] += c
        return tr

    def radical(self) -> GradedSubspace:
        """Jacobson radical via the regular-trace criterion on the unital hull."""
        n = self.dim
        tr = self._left_traces()
        rows = []
        for j in range(n):
            row = {}
            for i in range(n):
                prod = self.structure.get((i, j))
                if not prod:
                    continue
                s = ZERO
                for k, c in prod.items():
                    s += c * tr[k]
                if s != 0:
                    row[i] = s
            rows.append(row)
        rows.append({i: tr[i] for i in range(n) if tr[i] != 0})
        ker = sparse_kernel(rows, n)
        return GradedSubspace.from_full_vectors(self.dim_even, self.dim_odd, ker.vectors)

    def center_vectors(self):
        """Canonical basis of the (ungraded) center, as full vectors."""
        n = self.dim
        rows = {}
        for (i, j), row in self.structure.items():
            for k, c in row.items():
                # z.e_j - e_j.z = 0: coefficient of z_i in component (j, k)
                r = rows.setdefault((j, k), {})
                r[i] = r.get(i, ZERO) + c
                r2 = rows.setdefault((i, k), {})
                r2[j] = r2.get(j, ZERO) - c
        ker = sparse_kernel(list(rows.values()), n)
        return list(ker.vectors)

    def central_idempotent_orbits(self):
        """Primitive central idempotents of A grouped into grading orbits.

        Each returned vector is an even central idempotent of A (a primitive
        one, or the sum of a swapped pair). Computed inside the unital hull
        of the center, with nilpotents handled by idempotent lifting through
        minimal-polynomial splitting.
        """
        zbasis = self.center_vectors()
        if not zbasis:
            return []
        idems = _hull_primitive_idempotents(self, zbasis)
        inside = [v for c0, v in idems if c0 == 0]
        used = set()
        orbits = []
        for a, v in enumerate(inside):
            if a in used:
                continue
            used.add(a)
            sv = self.grading_operator(v)
            if tuple(sv) == tuple(v):
                orbits.append(tuple(v))
                continue
            partner = None
            for b in range(a + 1, len(inside)):
                if b not in used and tuple(inside[b]) == tuple(sv):
                    partner = b
                    break
            if partner is None:
                raise SplitRequired("grading image of a central idempotent is not integral")
            used.add(partner)
            orbits.append(tuple(x + y for x, y in zip(v, sv)))
        return orbits

    def is_graded_simple(self) -> bool:
        """True iff the only graded two-sided ideals are 0 and A (and A.A != 0)."""
        if self.dim == 0:
            raise PreconditionError("zero algebra")
        if self.product_is_null():
            return False
        if self.radical().dim != 0:
            return False
        return len(self.central_idempotent_orbits()) == 1


def direct_sum(algebras) -> Superalgebra:
    """Orthogonal block sum; summands become mutually annihilating ideals."""
    algebras = list(algebras)
    n0 = sum(a.dim_even for a in algebras)
    n1 = sum(a.dim_odd for a in algebras)
    maps = direct_sum_index_maps(algebras)
    names = [None] * (n0 + n1)
    for t, a in enumerate(algebras):
        for i in range(a.dim):
            nm = a.basis_names[i]
            if len(algebras) > 1:
                nm = f"{nm}#{t}"
            names[maps[t][i]] = nm
    triples = []
    for t, a in enumerate(algebras):
        mp = maps[t]
        for i, j, k, c in a.triples():
            triples.append((mp[i], mp[j], mp[k], c))
    return Superalgebra(n0, n1, names, triples)


def direct_sum_index_maps(algebras):
    """Index translation per summand for the canonical graded ordering."""
    algebras = list(algebras)
    n0 = sum(a.dim_even for a in algebras)
    maps = []
    off_e = 0
    off_o = 0
    for a in algebras:
        mp = {}
        for i in range(a.dim_even):
            mp[i] = off_e + i
        for i in range(a.dim_odd):
            mp[a.dim_even + i] = n0 + off_o + i
        maps.append(mp)
        off_e += a.dim_even
        off_o += a.dim_odd
    return maps


class BimoduleAction:
    """Left/right actions of even basis elements on a parity block and its dual.

    `left[j]` is the matrix of L_{e_j} on the chosen block, `dual_left[j]`
    the matrix of f -> f∘R_{e_j} on the dual block (and symmetrically for
    the right maps).
    """

    def __init__(self, algebra: Superalgebra, module_parity: int):
        n0, n = algebra.dim_even, algebra.dim
        idxs = list(range(n0)) if module_parity == 0 else list(range(n0, n))
        pos = {g: i for i, g in enumerate(idxs)}
        d = len(idxs)
        self.module_parity = module_parity
        self.left = []
        self.right = []
        self.dual_left = []
        self.dual_right = []
        for j in range(n0):
            lm = [[ZERO] * d for _ in range(d)]
            rm = [[ZERO] * d for _ in range(d)]
            for c, g in enumerate(idxs):
                for k, cf in algebra.basis_product(j, g).items():
                    lm[pos[k]][c] = cf
                for k, cf in algebra.basis_product(g, j).items():
                    rm[pos[k]][c] = cf
            lmat = Matrix.from_rows(lm) if d else Matrix.zeros(0, 0)
            rmat = Matrix.from_rows(rm) if d else Matrix.zeros(0, 0)
            self.left.append(lmat)
            self.right.append(rmat)
            self.dual_left.append(rmat.transpose())
            self.dual_right.append(lmat.transpose())


# -- central idempotents -----------------------------------------------------


def _hull_primitive_idempotents(algebra: Superalgebra, zbasis):
    """Primitive idempotents of the unital hull of the center.

    Elements are pairs (c0, vec): c0 * 1 + vec with vec a full coordinate
    vector in the algebra. Splitting is by factoring minimal polynomials of
    the center's basis elements, with CRT idempotents; repeated passes reach
    the primitive decomposition because the center is commutative Artinian.
    """
    one = (ONE, tuple(ZERO for _ in range(algebra.dim)))

    def mul(a, b):
        c0, u = a
        d0, w = b
        vec = list(algebra.multiply(u, w))
        for i, x in enumerate(u):
            vec[i] += d0 * x
        for i, x in enumerate(w):
            vec[i] += c0 * x
        return (c0 * d0, tuple(vec))

    def add(a, b, s=1):
        return (a[0] + s * b[0], tuple(x + s * y for x, y in zip(a[1], b[1])))

    def scale(a, c):
        return (c * a[0], tuple(c * x for x in a[1]))

    def as_row(a):
        return (a[0],) + a[1]

    def poly_eval(coeffs, w, unit):
        # sum coeffs[i] * w^i with w^0 = unit, inside the hull
        acc = scale(unit, coeffs[0]) if coeffs else scale(unit, ZERO)
        p = unit
        for c in coeffs[1:]:
            p = mul(p, w)
            acc = add(acc, scale(p, c))
        return acc

    def minimal_poly(w, unit):
        # monic minimal polynomial of w in the corner algebra unit*hull
        powers = [unit]
        rows = [as_row(unit)]
        while True:
            powers.append(mul(powers[-1], w))
            target = as_row(powers[-1])
            mat = Matrix.from_rows(rows).transpose()
            sol = mat.solve(list(target))
            if sol is not None:
                coeffs = [-c for c in sol[0]] + [ONE]
                return coeffs
            rows.append(target)

    idems = [one]
    changed = True
    while changed:
        changed = False
        for z in zbasis:
            zh = (ZERO, tuple(z))
            new = []
            for e in idems:
                w = mul(e, zh)
                m = minimal_poly(w, e)
                factors = _factor_rational_poly(m)
                if len(factors) <= 1:
                    new.append(e)
                    continue
                changed = True
                for f, k in factors:
                    fk = _poly_pow(f, k)
                    q, r = _poly_divmod(m, fk)
                    assert all(c == 0 for c in r)
                    g, u, _ = _poly_xgcd(q, fk)
                    assert len(g) == 1  # q and fk coprime
                    inv = _poly_scale(u, ONE / g[0])
                    prod = _poly_mul(q, inv)
                    _, rem = _poly_divmod(prod, m)
                    new.append(poly_eval(rem, w, e))
            idems = new
    return idems


def _factor_rational_poly(coeffs):
    """Irreducible factorization over Q of a poly given low-to-high."""
    from sympy import QQ, Poly, Rational, symbols

    x = symbols("x")
    p = Poly([Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain=QQ)
    _, factors = p.factor_list()
    out = []
    for f, k in factors:
        cs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        if lead != 1:
            cs = [c / lead for c in cs]
        out.append((cs, k))
    return out


def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_scale(p, c):
    return [c * x for x in p]


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_pow(a, k):
    out = [ONE]
    for _ in range(k):
        out = _poly_mul(out, a)
    return out


def _poly_divmod(a, b):
    a = list(_poly_trim(a))
    b = _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = f
        for i, x in enumerate(b):
            a[i + d] -= f * x
        a = list(_poly_trim(a))
    return _poly_trim(q), a


def _poly_xgcd(a, b):
    r0, r1 = _poly_trim(a), _poly_trim(b)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_add(s0, _poly_scale(_poly_mul(q, s1), -ONE))
        t0, t1 = t1, _poly_add(t0, _poly_scale(_poly_mul(q, t1), -ONE))
    return r0, s0, t0
