"""Homogeneous supersymmetric associative bilinear forms.

An even form pairs like parities (symmetric on the even block, alternating
on the odd block); an odd form pairs opposite parities symmetrically. The
sign rule throughout is B(x,y) = (-1)^{|x||y|} B(y,x) on homogeneous x, y.
"""

from __future__ import annotations

from .core import BimoduleAction, GradedSubspace, Superalgebra
from .errors import DegenerateForm, PreconditionError, ShapeError
from .linalg import ONE, ZERO, Matrix, frac, sparse_kernel
from .poly import Poly, nonzero_point, symbolic_det

EVEN, ODD = 0, 1

_PARITY_NAMES = {0: "even", 1: "odd"}


def parity_code(p):
    if p in (0, 1):
        return p
    if p in ("even", "odd"):
        return 0 if p == "even" else 1
    raise ShapeError(f"unknown parity {p!r}")


class HomogeneousForm:
    """Parity tag plus the full gram matrix in graded basis order."""

    __slots__ = ("parity", "gram")

    def __init__(self, parity, gram: Matrix):
        if gram.rows != gram.cols:
            raise ShapeError("gram matrix must be square")
        object.__setattr__(self, "parity", parity_code(parity))
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, *a):
        raise AttributeError("HomogeneousForm is immutable")

    @property
    def parity_name(self):
        return _PARITY_NAMES[self.parity]

    @property
    def dim(self):
        return self.gram.rows

    def value(self, x, y):
        return sum(
            (frac(xi) * v for xi, v in zip(x, self.gram.apply(y))),
            ZERO,
        )

    def is_nondegenerate(self):
        return self.gram.rank() == self.gram.rows

    def scale(self, c):
        return HomogeneousForm(self.parity, self.gram.scale(c))

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousForm)
            and self.parity == other.parity
            and self.gram == other.gram
        )

    def __hash__(self):
        return hash((self.parity, self.gram))

    def __repr__(self):
        return f"HomogeneousForm({self.parity_name}, dim {self.dim})"


class FormSpace:
    """Linear space of all invariant forms of one parity on an algebra."""

    def __init__(self, algebra: Superalgebra, parity, basis):
        self.algebra = algebra
        self.parity = parity_code(parity)
        self.basis = list(basis)

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return f"FormSpace({_PARITY_NAMES[self.parity]}, dim {self.dim})"


class FormReport:
    def __init__(self, violations):
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "FormReport(ok)"
        return "FormReport(\n  " + "\n  ".join(map(str, self.violations)) + "\n)"


def check_form(a: Superalgebra, b: HomogeneousForm) -> FormReport:
    """All violated constraints: parity pattern, supersymmetry, associativity
    on basis triples, and non-degeneracy."""
    n = a.dim
    if b.dim != n:
        raise ShapeError("form dimension != algebra dimension")
    g = b.gram
    bad = []
    for i in range(n):
        for j in range(n):
            same = a.parity(i) == a.parity(j)
            allowed = same if b.parity == EVEN else not same
            if not allowed and g[i, j] != 0:
                bad.append(("parity-pattern", i, j))
    for i in range(n):
        for j in range(i, n):
            sign = -ONE if (a.parity(i) and a.parity(j)) else ONE
            if g[j, i] != sign * g[i, j]:
                bad.append(("supersymmetry", i, j))
    seen = set()
    for (i, j) in a.structure:
        for k in range(n):
            seen.add((i, j, k))
    for (j, k) in a.structure:
        for i in range(n):
            seen.add((i, j, k))
    for (i, j, k) in sorted(seen):
        lhs = ZERO
        for m, c in a.basis_product(i, j).items():
            lhs += c * g[m, k]
        rhs = ZERO
        for m, c in a.basis_product(j, k).items():
            rhs += c * g[i, m]
        if lhs != rhs:
            bad.append(("associativity", i, j, k))
    if g.rank() != n:
        bad.append(("degenerate",))
    return FormReport(bad)


def _entry_var(a: Superalgebra, parity, varmap):
    """Map (i, j) to (var, sign) under the parity pattern, or None."""
    n0 = a.dim_even

    def lookup(i, j):
        pi, pj = a.parity(i), a.parity(j)
        if parity == EVEN:
            if pi != pj:
                return None
            if pi == 0:
                key = (min(i, j), max(i, j))
                return varmap[key], ONE
            if i == j:
                return None
            key = (min(i, j), max(i, j))
            return varmap[key], (ONE if i < j else -ONE)
        if pi == pj:
            return None
        key = (min(i, j), max(i, j))  # even index first by construction
        return varmap[key], ONE

    return lookup


def _build_varmap(a: Superalgebra, parity):
    n0, n = a.dim_even, a.dim
    varmap = {}
    if parity == EVEN:
        for i in range(n0):
            for j in range(i, n0):
                varmap[(i, j)] = len(varmap)
        for i in range(n0, n):
            for j in range(i + 1, n):
                varmap[(i, j)] = len(varmap)
    else:
        for i in range(n0):
            for j in range(n0, n):
                varmap[(i, j)] = len(varmap)
    return varmap


def _gram_from_vars(a: Superalgebra, parity, varmap, values):
    n = a.dim
    lookup = _entry_var(a, parity, varmap)
    data = []
    for i in range(n):
        for j in range(n):
            hit = lookup(i, j)
            data.append(ZERO if hit is None else hit[1] * values[hit[0]])
    return HomogeneousForm(parity, Matrix(n, n, data))


def invariant_form_space(a: Superalgebra, parity) -> FormSpace:
    """All supersymmetric associative bilinear forms of the given parity.

    Non-degeneracy is not imposed; it is an open condition handled by
    exists_nondegenerate.
    """
    parity = parity_code(parity)
    n = a.dim
    varmap = _build_varmap(a, parity)
    lookup = _entry_var(a, parity, varmap)
    rows = []
    seen = set()

    def equation(i, j, k):
        row = {}
        for m, c in a.basis_product(i, j).items():
            hit = lookup(m, k)
            if hit:
                v, s = hit
                row[v] = row.get(v, ZERO) + c * s
        for m, c in a.basis_product(j, k).items():
            hit = lookup(i, m)
            if hit:
                v, s = hit
                row[v] = row.get(v, ZERO) - c * s
        if row:
            rows.append(row)

    for (i, j) in a.structure:
        for k in range(n):
            if (i, j, k) not in seen:
                seen.add((i, j, k))
                equation(i, j, k)
    for (j, k) in a.structure:
        for i in range(n):
            if (i, j, k) not in seen:
                seen.add((i, j, k))
                equation(i, j, k)
    ker = sparse_kernel(rows, len(varmap))
    basis = [_gram_from_vars(a, parity, varmap, v) for v in ker.vectors]
    return FormSpace(a, parity, basis)


def exists_nondegenerate(fs: FormSpace):
    """A non-degenerate member of the span, or None.

    The generic combination's determinant is expanded exactly; a witness
    point is then peeled off one variable at a time over the integer range
    0..deg (one more value than the per-variable degree bound).
    """
    d = fs.dim
    if d == 0:
        return None
    n = fs.basis[0].dim
    if n == 0:
        return None
    if d == 1:
        g = fs.basis[0]
        return g if g.gram.det() != 0 else None
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            p = Poly(d)
            for l, form in enumerate(fs.basis):
                c = form.gram[i, j]
                if c != 0:
                    p = p + Poly.var(d, l, c)
            row.append(p)
        entries.append(row)
    det_poly = symbolic_det(entries)
    point = nonzero_point(det_poly)
    if point is None:
        return None
    gram = Matrix.zeros(n, n)
    for c, form in zip(point, fs.basis):
        if c:
            gram = gram + form.gram.scale(c)
    witness = HomogeneousForm(fs.parity, gram)
    assert witness.gram.det() != 0
    return witness


class IncompatibilityVerdict:
    """Outcome of the even/odd coexistence check on one algebra."""

    def __init__(self, has_even, has_odd, product_null, witness_even, witness_odd):
        self.has_even = has_even
        self.has_odd = has_odd
        self.product_null = product_null
        self.witness_even = witness_even
        self.witness_odd = witness_odd

    @property
    def coexistence_violation(self):
        """Both parities on a non-null product: impossible; a True here
        would expose an implementation bug."""
        return self.has_even and self.has_odd and not self.product_null

    def __repr__(self):
        return (
            f"IncompatibilityVerdict(has_even={self.has_even}, has_odd={self.has_odd}, "
            f"product_null={self.product_null})"
        )


def incompatibility_check(a: Superalgebra) -> IncompatibilityVerdict:
    we = exists_nondegenerate(invariant_form_space(a, EVEN))
    wo = exists_nondegenerate(invariant_form_space(a, ODD))
    return IncompatibilityVerdict(
        we is not None, wo is not None, a.product_is_null(), we, wo
    )


def orthogonal(a: Superalgebra, b: HomogeneousForm, u: GradedSubspace) -> GradedSubspace:
    """{x : B(x, u) = 0}; for an ideal u the output is verified to be an
    ideal annihilating u on both sides."""
    if not b.is_nondegenerate():
        raise DegenerateForm("orthogonal requires a non-degenerate form")
    n = a.dim
    rows = []
    for w in u.full_vectors():
        col = b.gram.apply(w)
        rows.append({i: c for i, c in enumerate(col) if c != 0})
    ker = sparse_kernel(rows, n)
    out = GradedSubspace.from_full_vectors(a.dim_even, a.dim_odd, ker.vectors)
    if a.is_graded_ideal(u):
        if not a.is_graded_ideal(out):
            raise PreconditionError("orthogonal of an ideal failed to be an ideal; form not associative?")
        if a.product_subspaces(u, out).dim or a.product_subspaces(out, u).dim:
            raise PreconditionError("ideal times its orthogonal is nonzero; form not associative?")
    return out


def restrict(b: HomogeneousForm, u: GradedSubspace) -> HomogeneousForm:
    """Gram of b in the graded basis of u; may be degenerate."""
    vecs = u.full_vectors()
    d = len(vecs)
    cols = [b.gram.apply(y) for y in vecs]
    data = []
    for x in vecs:
        for col in cols:
            data.append(sum((xi * ci for xi, ci in zip(x, col)), ZERO))
    return HomogeneousForm(b.parity, Matrix(d, d, data))


def quotient_form(a: Superalgebra, b: HomogeneousForm, i: GradedSubspace, j: GradedSubspace):
    """(J/I, Q) with Q(x+I, y+I) = B(x, y); returns (algebra, form).

    Preconditions: i a totally isotropic graded two-sided ideal, j its
    orthogonal, i inside j. Q is verified non-degenerate.
    """
    if not a.is_graded_ideal(i):
        raise PreconditionError("i is not a graded two-sided ideal")
    if restrict(b, i).gram.data and any(x != 0 for x in restrict(b, i).gram.data):
        raise PreconditionError("i is not totally isotropic")
    if orthogonal(a, b, i) != j:
        raise PreconditionError("j is not the orthogonal of i")
    if i.sum(j) != j:
        raise PreconditionError("i is not contained in j")
    jalg, embed = a.sub_superalgebra(j)
    # translate i into j-coordinates
    i_in_j = []
    n0 = a.dim_even
    for v in i.full_vectors():
        ce = j.even.coordinates(v[:n0])
        co = j.odd.coordinates(v[n0:])
        i_in_j.append(tuple(ce) + tuple(co))
    i_sub = GradedSubspace.from_full_vectors(j.even.dim, j.odd.dim, i_in_j)
    w, proj = jalg.quotient(i_sub)
    # section: complement coordinates of i inside j, lifted to the ambient
    comp = i_sub.even.complement_indices() + [
        j.even.dim + c for c in i_sub.odd.complement_indices()
    ]
    lifts = [embed.col(c) for c in comp]
    d = len(lifts)
    data = []
    for x in lifts:
        for y in lifts:
            data.append(b.value(x, y))
    q = HomogeneousForm(b.parity, Matrix(d, d, data))
    if not q.is_nondegenerate():
        raise DegenerateForm("quotient form is degenerate; preconditions violated")
    return w, q


class EvenBimoduleIso:
    """phi_0: A_0 -> A_0^*, phi_1: A_1 -> A_1^* induced by an even structure."""

    def __init__(self, phi0: Matrix, phi1: Matrix):
        self.phi0 = phi0
        self.phi1 = phi1


class OddBimoduleIso:
    """phi: A_1 -> A_0^* induced by an odd structure."""

    def __init__(self, phi: Matrix):
        self.phi = phi


def form_to_bimodule_iso(a: Superalgebra, b: HomogeneousForm):
    """Dualizing isomorphisms of A_0-bimodules carried by a structure.

    Verified to intertwine (L, R) with (L^*, R^*) exactly on every even
    basis element; returns EvenBimoduleIso or OddBimoduleIso.
    """
    report = check_form(a, b)
    if not report.ok:
        kinds = {v[0] for v in report.violations}
        if kinds == {"degenerate"}:
            raise DegenerateForm("form is degenerate")
        raise PreconditionError(f"form fails check_form: {report.violations}")
    n0, n = a.dim_even, a.dim
    g = b.gram

    def block(rows, cols):
        return Matrix(
            len(rows), len(cols), [g[i, j] for i in rows for j in cols]
        )

    if b.parity == EVEN:
        phi0 = block(range(n0), range(n0)).transpose()
        phi1 = block(range(n0, n), range(n0, n)).transpose()
        act0 = BimoduleAction(a, 0)
        act1 = BimoduleAction(a, 1)
        for j in range(n0):
            for phi, act in ((phi0, act0), (phi1, act1)):
                if phi * act.left[j] != act.dual_left[j] * phi:
                    raise PreconditionError(f"phi does not intertwine L_{j}")
                if phi * act.right[j] != act.dual_right[j] * phi:
                    raise PreconditionError(f"phi does not intertwine R_{j}")
        return EvenBimoduleIso(phi0, phi1)
    phi = block(range(n0, n), range(n0)).transpose()
    act1 = BimoduleAction(a, 1)
    act0 = BimoduleAction(a, 0)
    for j in range(n0):
        if phi * act1.left[j] != act0.dual_left[j] * phi:
            raise PreconditionError(f"phi does not intertwine L_{j}")
        if phi * act1.right[j] != act0.dual_right[j] * phi:
            raise PreconditionError(f"phi does not intertwine R_{j}")
    return OddBimoduleIso(phi)
