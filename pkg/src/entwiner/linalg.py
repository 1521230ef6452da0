"""Spaces, linear maps, and the multilinear identity checker.

Everything is a finite-dimensional vector space with a fixed ordered basis.
Tensor products use the row-major convention: the index of e_i (x) f_j in
V (x) W is i*dim(W) + j, 0-based, and nested products are flattened left to
right.  Maps are stored densely (rows of scalars); composition, Kronecker
products, and identity checks skip zeros, and identity checks stream column
by column so a failing check stops at the lexicographically-first failing
basis tuple - which is exactly the witness reported.

Composition is right-to-left: (f * g) applies g first.  `@` is the Kronecker
product.  All objects are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .fields import Field, Scalar
from .report import IdentityCheck


class ShapeError(ValueError):
    """Dimension or tensor-factor mismatch."""


@dataclass(frozen=True)
class Space:
    """An ordered-basis vector space; atomic (labels) or a flat tensor product."""

    labels: tuple[str, ...] = ()
    factors: tuple[Space, ...] = ()

    def __post_init__(self):
        if bool(self.labels) == bool(self.factors):
            raise ShapeError("a Space is atomic (labels) or a tensor product (factors), not both")

    @cached_property
    def dim(self) -> int:
        if self.labels:
            return len(self.labels)
        n = 1
        for f in self.factors:
            n *= f.dim
        return n

    @cached_property
    def dims(self) -> tuple[int, ...]:
        """Flat tuple of atomic factor dimensions."""
        if self.labels:
            return (self.dim,)
        return tuple(f.dim for f in self.factors)

    def basis_tuple(self, i: int) -> tuple[str, ...]:
        """Labels of the atomic legs of basis vector i (row-major)."""
        if self.labels:
            return (self.labels[i],)
        parts: list[int] = []
        rem = i
        for f in reversed(self.factors):
            parts.append(rem % f.dim)
            rem //= f.dim
        parts.reverse()
        out: list[str] = []
        for f, j in zip(self.factors, parts):
            out.extend(f.basis_tuple(j))
        return tuple(out)

    def label(self, i: int) -> str:
        t = self.basis_tuple(i)
        return t[0] if len(t) == 1 else "(" + ")(".join(t) + ")"

    def __repr__(self):
        if self.labels:
            return f"Space{self.labels!r}"
        return "(" + " (x) ".join(repr(f) for f in self.factors) + ")"


def space(*labels: str) -> Space:
    return Space(labels=tuple(labels))


def tensor(*spaces: Space) -> Space:
    """Tensor product, flattened; of one space, that space itself."""
    flat: list[Space] = []
    for s in spaces:
        if s.factors:
            flat.extend(s.factors)
        else:
            flat.append(s)
    if not flat:
        raise ShapeError("empty tensor product")
    if len(flat) == 1:
        return flat[0]
    return Space(factors=tuple(flat))


def dual_space(v: Space) -> Space:
    if v.labels:
        return Space(labels=tuple(l + "*" for l in v.labels))
    return Space(factors=tuple(dual_space(f) for f in v.factors))


@dataclass(frozen=True)
class LinearMap:
    """A matrix with domain/codomain spaces; rows[i][j] over the fixed bases."""

    field: Field
    domain: Space
    codomain: Space
    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.codomain.dim:
            raise ShapeError(
                f"matrix has {len(self.rows)} rows, codomain dim {self.codomain.dim}"
            )
        for r in self.rows:
            if len(r) != self.domain.dim:
                raise ShapeError(
                    f"matrix row has {len(r)} entries, domain dim {self.domain.dim}"
                )

    @cached_property
    def _cols(self) -> tuple[tuple[tuple[int, Scalar], ...], ...]:
        cols: list[list[tuple[int, Scalar]]] = [[] for _ in range(self.domain.dim)]
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x:
                    cols[j].append((i, x))
        return tuple(tuple(c) for c in cols)

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self.rows)

    def apply_sparse(self, col: dict[int, Scalar]) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        cols = self._cols
        for j, v in col.items():
            for r, m in cols[j]:
                cur = out.get(r)
                out[r] = m * v if cur is None else cur + m * v
        return {k: v for k, v in out.items() if v}

    def apply(self, vec) -> tuple[Scalar, ...]:
        """Dense application to a coefficient tuple."""
        if len(vec) != self.domain.dim:
            raise ShapeError("vector length does not match domain")
        zero = self.field.zero
        out = [zero] * self.codomain.dim
        for j, v in enumerate(vec):
            if v:
                for r, m in self._cols[j]:
                    out[r] = out[r] + m * v
        return tuple(out)

    def same_matrix(self, other: LinearMap) -> bool:
        return (
            self.domain.dim == other.domain.dim
            and self.codomain.dim == other.codomain.dim
            and all(
                a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
            )
        )

    def transpose(self) -> LinearMap:
        rows = tuple(
            tuple(self.rows[i][j] for i in range(self.codomain.dim))
            for j in range(self.domain.dim)
        )
        return LinearMap(self.field, dual_space(self.codomain), dual_space(self.domain), rows)

    def scale(self, c: Scalar) -> LinearMap:
        if not c:
            return zero_map(self.field, self.domain, self.codomain)
        return LinearMap(
            self.field,
            self.domain,
            self.codomain,
            tuple(tuple(c * x if x else self.field.zero for x in row) for row in self.rows),
        )

    def __mul__(self, other):
        if isinstance(other, LinearMap):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return kron(self, other)

    def __add__(self, other: LinearMap) -> LinearMap:
        _require_same_shape(self, other)
        return LinearMap(
            self.field,
            self.domain,
            self.codomain,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: LinearMap) -> LinearMap:
        _require_same_shape(self, other)
        return LinearMap(
            self.field,
            self.domain,
            self.codomain,
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> LinearMap:
        return self.scale(-self.field.one)

    def __repr__(self):
        return f"LinearMap({self.domain.dim}->{self.codomain.dim})"


def _require_same_shape(f: LinearMap, g: LinearMap):
    if f.field != g.field:
        raise ShapeError("maps over different fields")
    if f.domain.dim != g.domain.dim or f.codomain.dim != g.codomain.dim:
        raise ShapeError("map shapes differ")


def from_columns(field: Field, domain: Space, codomain: Space, cols) -> LinearMap:
    cols = list(cols)
    if len(cols) != domain.dim:
        raise ShapeError("wrong number of columns")
    rows = tuple(
        tuple(cols[j][i] for j in range(domain.dim)) for i in range(codomain.dim)
    )
    return LinearMap(field, domain, codomain, rows)


def identity(field: Field, v: Space) -> LinearMap:
    one, zero = field.one, field.zero
    rows = tuple(
        tuple(one if i == j else zero for j in range(v.dim)) for i in range(v.dim)
    )
    return LinearMap(field, v, v, rows)


def zero_map(field: Field, domain: Space, codomain: Space) -> LinearMap:
    zero = field.zero
    row = (zero,) * domain.dim
    return LinearMap(field, domain, codomain, (row,) * codomain.dim)


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f o g: apply g first."""
    if f.field != g.field:
        raise ShapeError("composition across fields")
    if f.domain.dim != g.codomain.dim or f.domain.dims != g.codomain.dims:
        raise ShapeError(
            f"composition mismatch: inner spaces {f.domain.dims} vs {g.codomain.dims}"
        )
    zero = f.field.zero
    out = [[zero] * g.domain.dim for _ in range(f.codomain.dim)]
    fcols = f._cols
    for i, grow in enumerate(g.rows):
        col = fcols[i]
        if not col:
            continue
        for j, x in enumerate(grow):
            if x:
                for r, v in col:
                    out[r][j] = out[r][j] + v * x
    return LinearMap(f.field, g.domain, f.codomain, tuple(tuple(r) for r in out))


def kron(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product, row-major: (f@g)[(i1,i2),(j1,j2)] = f[i1,j1]*g[i2,j2]."""
    if f.field != g.field:
        raise ShapeError("Kronecker product across fields")
    zero = f.field.zero
    gd, gc = g.domain.dim, g.codomain.dim
    dd = f.domain.dim * gd
    cd = f.codomain.dim * gc
    out = [[zero] * dd for _ in range(cd)]
    gnz = [
        (i2, j2, b)
        for i2, row in enumerate(g.rows)
        for j2, b in enumerate(row)
        if b
    ]
    for i1, row in enumerate(f.rows):
        for j1, a in enumerate(row):
            if a:
                base_r = i1 * gc
                base_c = j1 * gd
                for i2, j2, b in gnz:
                    out[base_r + i2][base_c + j2] = a * b
    return LinearMap(
        f.field,
        tensor(f.domain, g.domain),
        tensor(f.codomain, g.codomain),
        tuple(tuple(r) for r in out),
    )


def twist(field: Field, v: Space, w: Space) -> LinearMap:
    """The flip v (x) w -> w (x) v on basis vectors."""
    one, zero = field.one, field.zero
    n, m = v.dim, w.dim
    rows = [[zero] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            rows[j * n + i][i * m + j] = one
    return LinearMap(field, tensor(v, w), tensor(w, v), tuple(tuple(r) for r in rows))


class KronApply:
    """Lazy tensor product of maps, usable inside check chains only.

    Never materializes the product matrix; applies leg columns to sparse
    vectors.  Legs are flattened, so nesting costs nothing.
    """

    __slots__ = ("legs", "field", "domain", "codomain", "_ddims", "_cdims")

    def __init__(self, *legs):
        flat: list[LinearMap] = []
        for leg in legs:
            if isinstance(leg, KronApply):
                flat.extend(leg.legs)
            else:
                flat.append(leg)
        if not flat:
            raise ShapeError("empty lazy Kronecker product")
        f0 = flat[0].field
        for leg in flat:
            if leg.field != f0:
                raise ShapeError("Kronecker product across fields")
        self.legs = tuple(flat)
        self.field = f0
        self.domain = tensor(*(l.domain for l in flat))
        self.codomain = tensor(*(l.codomain for l in flat))
        self._ddims = tuple(l.domain.dim for l in flat)
        self._cdims = tuple(l.codomain.dim for l in flat)

    def apply_sparse(self, col: dict[int, Scalar]) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        legs = self.legs
        ddims = self._ddims
        cdims = self._cdims
        for j, v in col.items():
            parts: list[int] = []
            rem = j
            for d in reversed(ddims):
                parts.append(rem % d)
                rem //= d
            parts.reverse()
            terms: list[tuple[int, Scalar]] = [(0, v)]
            dead = False
            for leg, jj, cdim in zip(legs, parts, cdims):
                lcol = leg._cols[jj]
                if not lcol:
                    dead = True
                    break
                terms = [
                    (base * cdim + r, val * m) for base, val in terms for r, m in lcol
                ]
            if dead:
                continue
            for idx, val in terms:
                cur = out.get(idx)
                out[idx] = val if cur is None else cur + val
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        return f"KronApply({self.domain.dim}->{self.codomain.dim})"


ChainElt = LinearMap | KronApply
Chain = ChainElt | list | tuple


def lazy_kron(*legs) -> KronApply:
    return KronApply(*legs)


def _as_chain(x: Chain) -> list[ChainElt]:
    if isinstance(x, (LinearMap, KronApply)):
        return [x]
    chain = list(x)
    if not chain:
        raise ShapeError("empty composition chain")
    for outer, inner in zip(chain, chain[1:]):
        if outer.domain.dim != inner.codomain.dim or outer.domain.dims != inner.codomain.dims:
            raise ShapeError(
                f"chain mismatch: {outer.domain.dims} vs {inner.codomain.dims}"
            )
    return chain


def chain_apply_basis(chain: list[ChainElt], j: int, field: Field) -> dict[int, Scalar]:
    col: dict[int, Scalar] = {j: field.one}
    for elt in reversed(chain):
        if not col:
            break
        col = elt.apply_sparse(col)
    return col


def materialize(chain: Chain) -> LinearMap:
    """Compose a chain into a single dense map (use on small shapes only)."""
    chain = _as_chain(chain)
    field = chain[0].field
    dom = chain[-1].domain
    cod = chain[0].codomain
    cols = []
    zero = field.zero
    for j in range(dom.dim):
        col = chain_apply_basis(chain, j, field)
        cols.append(tuple(col.get(i, zero) for i in range(cod.dim)))
    return from_columns(field, dom, cod, cols)


def check_map_identity(name: str, lhs: Chain, rhs: Chain) -> IdentityCheck:
    """Compare two composites column by column; witness = first failing basis tuple."""
    lc = _as_chain(lhs)
    rc = _as_chain(rhs)
    field = lc[0].field
    if field != rc[0].field:
        raise ShapeError("identity sides over different fields")
    dom = lc[-1].domain
    if dom.dim != rc[-1].domain.dim:
        raise ShapeError(f"identity domains differ: {dom.dim} vs {rc[-1].domain.dim}")
    cod_dim = lc[0].codomain.dim
    if cod_dim != rc[0].codomain.dim:
        raise ShapeError(
            f"identity codomains differ: {cod_dim} vs {rc[0].codomain.dim}"
        )
    for j in range(dom.dim):
        left = chain_apply_basis(lc, j, field)
        right = chain_apply_basis(rc, j, field)
        if left != right:
            zero = field.zero
            residual = tuple(
                field.render(left.get(i, zero) - right.get(i, zero))
                for i in range(cod_dim)
            )
            return IdentityCheck(name, False, dom.basis_tuple(j), residual)
    return IdentityCheck(name, True)


def check_vector_identity(
    name: str, field: Field, space_: Space, lhs, rhs
) -> IdentityCheck:
    lhs = tuple(lhs)
    rhs = tuple(rhs)
    if len(lhs) != len(rhs) or len(lhs) != space_.dim:
        raise ShapeError("vector identity length mismatch")
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            residual = tuple(field.render(x - y) for x, y in zip(lhs, rhs))
            return IdentityCheck(name, False, space_.basis_tuple(i), residual)
    return IdentityCheck(name, True)


def embed13(s: LinearMap, mid: Space) -> LinearMap:
    """Embed an endomorphism of V (x) W as an operator on V (x) mid (x) W."""
    if len(s.domain.dims) != 2:
        raise ShapeError("embed13 needs a map on a two-factor tensor square")
    if s.domain.dims != s.codomain.dims:
        raise ShapeError("embed13 needs an endomorphism")
    return materialize(embed13_chain(s, mid))


def embed13_chain(s: LinearMap, mid: Space) -> list[ChainElt]:
    if len(s.domain.dims) != 2 or s.domain.dims != s.codomain.dims:
        raise ShapeError("embed13 needs an endomorphism of a two-factor tensor square")
    v, w = s.domain.factors
    field = s.field
    idv = identity(field, v)
    idw = identity(field, w)
    idm = identity(field, mid)
    return [
        lazy_kron(idv, twist(field, w, mid)),
        lazy_kron(s, idm),
        lazy_kron(idv, twist(field, mid, w)),
    ]


def is_invertible(f: LinearMap) -> bool:
    """Exact Gaussian elimination; True iff the matrix is square of full rank."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise ShapeError("invertibility requires a square matrix")
    field = f.field
    rows = [list(r) for r in f.rows]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return False
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
        pval = rows[col][col]
        for r in range(col + 1, n):
            x = rows[r][col]
            if x:
                factor = field.div(x, pval)
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return True


def tensor_vec(v, w) -> tuple:
    return tuple(a * b for a in v for b in w)


def apply_covector(phi, vec):
    """Pairing <phi, vec> as an exact scalar (lengths must agree)."""
    if len(phi) != len(vec):
        raise ShapeError("covector/vector length mismatch")
    total = None
    for a, b in zip(phi, vec):
        t = a * b
        total = t if total is None else total + t
    return total


def insert_right(field: Field, v: Space, w_vec, w: Space) -> LinearMap:
    """V -> V (x) W, x -> x (x) w."""
    zero = field.zero
    dom, cod = v, tensor(v, w)
    rows = [[zero] * v.dim for _ in range(cod.dim)]
    for j in range(v.dim):
        for k, c in enumerate(w_vec):
            if c:
                rows[j * w.dim + k][j] = c
    return LinearMap(field, dom, cod, tuple(tuple(r) for r in rows))


def insert_left(field: Field, w_vec, w: Space, v: Space) -> LinearMap:
    """V -> W (x) V, x -> w (x) x."""
    zero = field.zero
    cod = tensor(w, v)
    rows = [[zero] * v.dim for _ in range(cod.dim)]
    for j in range(v.dim):
        for k, c in enumerate(w_vec):
            if c:
                rows[k * v.dim + j][j] = c
    return LinearMap(field, v, cod, tuple(tuple(r) for r in rows))


def contract_right(field: Field, v: Space, phi, w: Space) -> LinearMap:
    """V (x) W -> V, x (x) y -> phi(y) x."""
    zero = field.zero
    dom = tensor(v, w)
    rows = [[zero] * dom.dim for _ in range(v.dim)]
    for j in range(v.dim):
        for k, c in enumerate(phi):
            if c:
                rows[j][j * w.dim + k] = c
    return LinearMap(field, dom, v, tuple(tuple(r) for r in rows))


def contract_left(field: Field, phi, w: Space, v: Space) -> LinearMap:
    """W (x) V -> V, y (x) x -> phi(y) x."""
    zero = field.zero
    dom = tensor(w, v)
    rows = [[zero] * dom.dim for _ in range(v.dim)]
    for j in range(v.dim):
        for k, c in enumerate(phi):
            if c:
                rows[j][k * v.dim + j] = c
    return LinearMap(field, dom, v, tuple(tuple(r) for r in rows))


def rank_one(field: Field, domain: Space, covec, codomain: Space, vec) -> LinearMap:
    """x -> covec(x) * vec."""
    if len(covec) != domain.dim or len(vec) != codomain.dim:
        raise ShapeError("rank_one shape mismatch")
    zero = field.zero
    rows = tuple(
        tuple(vi * cj if (vi and cj) else zero for cj in covec) for vi in vec
    )
    return LinearMap(field, domain, codomain, rows)
