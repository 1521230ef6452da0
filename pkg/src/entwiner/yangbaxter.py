"""Yang-Baxter operators and systems, and their bridges to entwining maps.

The triple commutator [R, S, T] = R12 S13 T23 - T23 S13 R12 is the working
primitive: the braid relation, the quantum Yang-Baxter equation, WXZ systems,
and four-map systems are all families of vanishing commutators.  Checks
compare the two triple compositions column-by-column instead of materializing
the commutator, so a failure surfaces the first bad basis vector.

The bridge results relate these systems to the entwining axioms: the algebra
R-matrix R_{r,s} pairs with a twisted entwining map to form a (semi) system
exactly when the entwining axioms hold, twist-conjugation corresponds to
factorization over the opposite algebra, and every algebra carries a braiding
1 (x) ab + ab (x) 1 - a (x) b making it a commutative braided algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entwine import (
    SEMI_KINDS,
    EntwiningData,
    MeasuredModule,
    check_algebra_factorization,
    check_entwined_variant,
    check_semi_entwining,
    mult_twist,
)
from .fields import Scalar
from .linalg import (
    LinearMap,
    ShapeError,
    Space,
    check_map_identity,
    check_vector_identity,
    embed13_chain,
    from_columns,
    identity,
    insert_left,
    insert_right,
    is_invertible,
    lazy_kron,
    materialize,
    space,
    tensor,
    twist,
)
from .report import IdentityCheck, PreconditionError, Report, merge
from .structures import Algebra, check_algebra, check_derivation, opposite_algebra


def _square_endo(m: LinearMap, what: str):
    if len(m.domain.dims) != 2 or m.domain.dims != m.codomain.dims:
        raise ShapeError(f"{what} must be an endomorphism of a two-factor tensor space")


@dataclass(frozen=True)
class TripleSystem:
    """Maps r12 on V1 (x) V2, s13 on V1 (x) V3, t23 on V2 (x) V3."""

    r12: LinearMap
    s13: LinearMap
    t23: LinearMap

    def __post_init__(self):
        for m, what in ((self.r12, "r12"), (self.s13, "s13"), (self.t23, "t23")):
            _square_endo(m, what)
        f1, f2 = self.r12.domain.factors
        if self.s13.domain.factors[0].dims != f1.dims:
            raise ShapeError("r12 and s13 disagree on the first tensor leg")
        if self.t23.domain.factors[0].dims != f2.dims:
            raise ShapeError("r12 and t23 disagree on the second tensor leg")
        if self.s13.domain.factors[1].dims != self.t23.domain.factors[1].dims:
            raise ShapeError("s13 and t23 disagree on the third tensor leg")

    @property
    def spaces(self) -> tuple[Space, Space, Space]:
        return (
            self.r12.domain.factors[0],
            self.r12.domain.factors[1],
            self.s13.domain.factors[1],
        )


def _triple_chains(ts: TripleSystem):
    field = ts.r12.field
    v1, v2, v3 = ts.spaces
    left = lazy_kron(ts.r12, identity(field, v3))
    right = lazy_kron(identity(field, v1), ts.t23)
    mid = embed13_chain(ts.s13, v2)
    return [left, *mid, right], [right, *mid, left]


def yb_commutator(ts: TripleSystem) -> LinearMap:
    """The exact difference r12 s13 t23 - t23 s13 r12 on V1 (x) V2 (x) V3."""
    lhs, rhs = _triple_chains(ts)
    return materialize(lhs) - materialize(rhs)


def commutator_check(name: str, r12: LinearMap, s13: LinearMap, t23: LinearMap) -> IdentityCheck:
    """Column-streamed test that [r12, s13, t23] = 0."""
    lhs, rhs = _triple_chains(TripleSystem(r12, s13, t23))
    return check_map_identity(name, lhs, rhs)


def check_qybe(phi: LinearMap, suite: str = "qybe") -> Report:
    """phi12 phi13 phi23 = phi23 phi13 phi12 on the triple tensor power."""
    _square_endo(phi, "phi")
    return Report(suite, (commutator_check("qybe", phi, phi, phi),))


def check_yb_operator(phi: LinearMap, suite: str = "yb-operator") -> Report:
    """Braid relation, invertibility, and the twisted-QYBE equivalences."""
    _square_endo(phi, "phi")
    v, w = phi.domain.factors
    if v.dims != w.dims:
        raise ShapeError("a braid candidate needs equal tensor factors")
    field = phi.field
    idv = identity(field, v)
    f12 = lazy_kron(phi, idv)
    f23 = lazy_kron(idv, phi)
    braid = check_map_identity("braid", [f12, f23, f12], [f23, f12, f23])
    tau = twist(field, v, w)
    right = phi * tau
    left = tau * phi
    qybe_right = commutator_check("qybe-twist-right", right, right, right)
    qybe_left = commutator_check("qybe-twist-left", left, left, left)
    agreement = IdentityCheck(
        "twist-agreement",
        braid.passed == qybe_right.passed == qybe_left.passed,
    )
    invertible = IdentityCheck("invertible", is_invertible(phi))
    return Report(suite, (braid, qybe_right, qybe_left, agreement, invertible))


def check_wxz(w: LinearMap, x: LinearMap, z: LinearMap, suite: str = "wxz-system") -> Report:
    """The four vanishing commutators of a WXZ system, plus the semi-system verdict."""
    www = commutator_check("www", w, w, w)
    wxx = commutator_check("wxx", w, x, x)
    zzz = commutator_check("zzz", z, z, z)
    xxz = commutator_check("xxz", x, x, z)
    semi = IdentityCheck("semi-system", www.passed and wxx.passed)
    return Report(suite, (www, wxx, zzz, xxz, semi))


def complete_semi_system(w: LinearMap, x: LinearMap) -> tuple[LinearMap, LinearMap, LinearMap]:
    """Extend a semi system (w, x) by the identity in the z slot."""
    _square_endo(x, "x")
    vprime = x.domain.factors[1]
    return w, x, identity(x.field, tensor(vprime, vprime))


@dataclass(frozen=True)
class WXZSystem:
    """w on V (x) V, x on V (x) V', z on V' (x) V'."""

    w: LinearMap
    x: LinearMap
    z: LinearMap

    def __post_init__(self):
        for m, what in ((self.w, "w"), (self.x, "x"), (self.z, "z")):
            _square_endo(m, what)
        v, vprime = self.x.domain.factors
        if self.w.domain.dims != (v.dim, v.dim) or self.z.domain.dims != (
            vprime.dim,
            vprime.dim,
        ):
            raise ShapeError("w, x, z legs do not line up")


def check_wxz_system(s: WXZSystem, suite: str = "wxz-system") -> Report:
    return check_wxz(s.w, s.x, s.z, suite)


@dataclass(frozen=True)
class TypeIISystem:
    """Four endomorphisms a, b, c, d of the same V (x) V."""

    a: LinearMap
    b: LinearMap
    c: LinearMap
    d: LinearMap

    def __post_init__(self):
        for m, what in ((self.a, "a"), (self.b, "b"), (self.c, "c"), (self.d, "d")):
            _square_endo(m, what)
            if m.domain.dims != self.a.domain.dims:
                raise ShapeError("all four maps must share one square space")
        f1, f2 = self.a.domain.factors
        if f1.dims != f2.dims:
            raise ShapeError("four-map systems need equal tensor factors")


def check_type2(ts: TypeIISystem, suite: str = "type2-system") -> Report:
    """The eight vanishing commutators of a four-map system (x+ = tau x tau)."""
    field = ts.a.field
    v, w = ts.a.domain.factors
    tau = twist(field, v, w)
    bplus = tau * ts.b * tau
    cplus = tau * ts.c * tau
    rows = (
        commutator_check("a-a-a", ts.a, ts.a, ts.a),
        commutator_check("d-d-d", ts.d, ts.d, ts.d),
        commutator_check("a-c-c", ts.a, ts.c, ts.c),
        commutator_check("d-b-b", ts.d, ts.b, ts.b),
        commutator_check("a-b+-b+", ts.a, bplus, bplus),
        commutator_check("d-c+-c+", ts.d, cplus, cplus),
        commutator_check("a-c-b+", ts.a, ts.c, bplus),
        commutator_check("d-b-c+", ts.d, ts.b, cplus),
    )
    return Report(suite, rows)


def make_algebra_rmatrix(a: Algebra, r: Scalar, s: Scalar) -> LinearMap:
    """a (x) b -> s(ba (x) 1) + r(1 (x) ba) - s(b (x) a) on A (x) A."""
    field = a.field
    tau = twist(field, a.space, a.space)
    mult_op = a.mult * tau
    left = insert_left(field, a.unit, a.space, a.space) * mult_op
    right = insert_right(field, a.space, a.unit, a.space) * mult_op
    return right.scale(s) + left.scale(r) - tau.scale(s)


def type2_component(a: Algebra, lam: Scalar) -> LinearMap:
    """a (x) b -> lam(1 (x) ab) + ab (x) 1 - b (x) a on A (x) A."""
    field = a.field
    left = insert_left(field, a.unit, a.space, a.space) * a.mult
    right = insert_right(field, a.space, a.unit, a.space) * a.mult
    return left.scale(lam) + right - twist(field, a.space, a.space)


def is_commutative(a: Algebra) -> bool:
    return a.mult.same_matrix(a.mult * twist(a.field, a.space, a.space))


def make_type2_family(
    a: Algebra, lam: Scalar, lam_prime: Scalar, allow_noncommutative: bool = False
) -> TypeIISystem:
    """The four-map system with component coefficients (lam, 1, 1, lam_prime).

    The eight-equation claim needs A commutative; the flag skips that
    precondition for checking the type-I subfamily on a noncommutative A.
    """
    if not allow_noncommutative and not is_commutative(a):
        raise PreconditionError("the four-map family needs a commutative algebra")
    one = a.field.one
    return TypeIISystem(
        a=type2_component(a, lam),
        b=type2_component(a, one),
        c=type2_component(a, one),
        d=type2_component(a, lam_prime),
    )


def make_type2_from_semi(
    a: Algebra, psi: LinearMap, r: Scalar, s: Scalar, p: Scalar, q: Scalar
) -> TypeIISystem:
    """Pair two R-matrices with psi tau and (tau psi tau) tau = tau psi."""
    tau = twist(a.field, a.space, a.space)
    return TypeIISystem(
        a=make_algebra_rmatrix(a, r, s),
        b=psi * tau,
        c=tau * psi,
        d=make_algebra_rmatrix(a, p, q),
    )


def semi_system_equivalence(
    a: Algebra, b, psi: LinearMap, r: Scalar, s: Scalar, p: Scalar = None, q: Scalar = None
) -> Report:
    """System verdicts for (R_{r,s}, psi tau) against the entwining verdicts.

    With b a plain space, checks that (W, X) is a semi system exactly when psi
    is a semi-entwining map; with b an algebra and (p, q) given, additionally
    checks that (W, X, R^B_{p,q}) is a WXZ system exactly when psi is an
    algebra factorization.  The unit normalizations of X are preconditions.
    """
    field = a.field
    b_alg = b if isinstance(b, Algebra) else None
    b_space = b.space if b_alg is not None else b
    pre = check_map_identity(
        "precondition-unit",
        [psi, insert_right(field, b_space, a.unit, a.space)],
        insert_left(field, a.unit, a.space, b_space),
    )
    if not pre.passed:
        raise PreconditionError(
            "the twisted map must fix 1 (x) b", Report("system-equivalence", (pre,))
        )
    w = make_algebra_rmatrix(a, r, s)
    x = materialize([psi, twist(field, a.space, b_space)])
    www = commutator_check("www", w, w, w)
    wxx = commutator_check("wxx", w, x, x)
    semi = check_semi_entwining(a, b_space, psi)
    checks = [
        pre,
        www,
        wxx,
        *semi.prefixed("entwining"),
        IdentityCheck("system-iff-semi", (www.passed and wxx.passed) == semi.passed),
    ]
    if b_alg is not None and p is not None and q is not None:
        pre_left = check_map_identity(
            "precondition-left-unit",
            [psi, insert_left(field, b_alg.unit, b_space, a.space)],
            insert_right(field, a.space, b_alg.unit, b_space),
        )
        if not pre_left.passed:
            raise PreconditionError(
                "the twisted map must fix a (x) 1",
                Report("system-equivalence", (pre_left,)),
            )
        z = make_algebra_rmatrix(b_alg, p, q)
        zzz = commutator_check("zzz", z, z, z)
        xxz = commutator_check("xxz", x, x, z)
        fact = check_algebra_factorization(a, b_alg, psi)
        system = www.passed and wxx.passed and zzz.passed and xxz.passed
        checks += [
            pre_left,
            zzz,
            xxz,
            *fact.prefixed("factorization"),
            IdentityCheck("system-iff-factorization", system == fact.passed),
        ]
    return Report("system-equivalence", tuple(checks))


def check_twist_conjugation(a: Algebra, psi: LinearMap) -> Report:
    """tau psi tau is semi-entwining iff psi factorizes over the opposite algebra."""
    pre = check_semi_entwining(a, a.space, psi)
    if not pre.passed:
        raise PreconditionError("the input map must be a semi-entwining map", pre)
    tau = twist(a.field, a.space, a.space)
    twisted = check_semi_entwining(a, a.space, tau * psi * tau)
    op_fact = check_algebra_factorization(a, opposite_algebra(a), psi)
    return merge(
        "twist-conjugation",
        pre.prefixed("entwining"),
        twisted.prefixed("twisted"),
        op_fact.prefixed("op-factorization"),
        IdentityCheck("agreement", twisted.passed == op_fact.passed),
    )


def check_measuring_commutator(e: EntwiningData, mm: MeasuredModule, z) -> Report:
    """[zeta, eta, X] = 0 for a semi-entwined module with measuring phi.

    zeta(m (x) b) = phi(m (x) b) (x) z, eta(m (x) a) = ma (x) 1, and X is the
    twisted endomorphism of B (x) A; z must be nonzero and the entwined-module
    axioms are preconditions.
    """
    if e.kind not in SEMI_KINDS or mm.variant != "semi-entwined-module":
        raise ShapeError("needs a semi-side entwining and a semi-entwined module")
    z = tuple(z)
    field = e.field
    b_sp, a_alg, m_sp = e.left_space, e.algebra, mm.carrier
    if len(z) != b_sp.dim:
        raise ShapeError("z must live in the left tensor factor")
    if not any(bool(v) for v in z):
        raise PreconditionError("z must be nonzero")
    prereq = check_entwined_variant(mm, e)
    if not prereq.passed:
        raise PreconditionError("the entwined-module axioms fail", prereq)
    zeta = insert_right(field, m_sp, z, b_sp) * mm.measuring
    eta = insert_right(field, m_sp, a_alg.unit, a_alg.space) * mm.act
    xmap = materialize([twist(field, a_alg.space, b_sp), e.psi])
    return Report(
        "measuring-commutator", (commutator_check("commutator", zeta, eta, xmap),)
    )


# ---------------------------------------------------------------------------
# braided algebras


def make_braiding(a: Algebra) -> LinearMap:
    """a (x) b -> 1 (x) ab + ab (x) 1 - a (x) b, a self-inverse braiding on A."""
    return mult_twist(a, a.field.one)


def check_braided_algebra(a: Algebra, psi: LinearMap, suite: str = "braided-algebra") -> Report:
    """Unit and product compatibilities of a braiding, plus the operator laws."""
    field = a.field
    ida = identity(field, a.space)
    unit_left = check_map_identity(
        "unit-left",
        [psi, insert_left(field, a.unit, a.space, a.space)],
        insert_right(field, a.space, a.unit, a.space),
    )
    unit_right = check_map_identity(
        "unit-right",
        [psi, insert_right(field, a.space, a.unit, a.space)],
        insert_left(field, a.unit, a.space, a.space),
    )
    product_right = check_map_identity(
        "product-right-leg",
        [psi, lazy_kron(ida, a.mult)],
        [lazy_kron(a.mult, ida), lazy_kron(ida, psi), lazy_kron(psi, ida)],
    )
    product_left = check_map_identity(
        "product-left-leg",
        [psi, lazy_kron(a.mult, ida)],
        [lazy_kron(ida, a.mult), lazy_kron(psi, ida), lazy_kron(ida, psi)],
    )
    return merge(
        suite,
        check_yb_operator(psi).prefixed("yb"),
        unit_left,
        unit_right,
        product_right,
        product_left,
    )


def check_r_commutative(a: Algebra, psi: LinearMap) -> Report:
    """mult o psi = mult, the commutativity-up-to-braiding flag."""
    return Report(
        "r-commutative",
        (check_map_identity("r-commutative", [a.mult, psi], a.mult),),
    )


def check_braided_morphism(
    f: LinearMap, a: Algebra, psi_a: LinearMap, b: Algebra, psi_b: LinearMap
) -> Report:
    """f is an algebra morphism intertwining the two braidings."""
    field = a.field
    ff = lazy_kron(f, f)
    return Report(
        "braided-morphism",
        (
            check_map_identity("morphism-mult", [f, a.mult], [b.mult, ff]),
            check_vector_identity(
                "morphism-unit", field, b.space, f.apply(a.unit), b.unit
            ),
            check_map_identity("braiding-compatibility", [ff, psi_a], [psi_b, ff]),
        ),
    )


def trivial_extension(a: Algebra) -> Algebra:
    """A (+) A with product (aa') (+) (ab' + ba') and unit 1 (+) 0."""
    field = a.field
    n = a.space.dim
    zero = field.zero
    ext = space(
        *[f"A.{a.space.label(i)}" for i in range(n)],
        *[f"D.{a.space.label(i)}" for i in range(n)],
    )
    cols = []
    for pp in range(2 * n):
        for qq in range(2 * n):
            col = [zero] * (2 * n)
            if pp < n and qq < n:
                mcol = a.mult.column(pp * n + qq)
                for i in range(n):
                    col[i] = mcol[i]
            elif pp < n <= qq:
                mcol = a.mult.column(pp * n + (qq - n))
                for i in range(n):
                    col[n + i] = mcol[i]
            elif qq < n <= pp:
                mcol = a.mult.column((pp - n) * n + qq)
                for i in range(n):
                    col[n + i] = mcol[i]
            cols.append(tuple(col))
    mult = from_columns(field, tensor(ext, ext), ext, cols)
    return Algebra(field, ext, mult, tuple(a.unit) + (zero,) * n)


def check_extension_morphism(a: Algebra, delta: LinearMap) -> Report:
    """a -> a (+) delta(a) is a braided morphism into the extension, for a derivation."""
    derivation = check_derivation(a, delta)
    if not derivation.passed:
        raise PreconditionError("delta must be a derivation", derivation)
    ext = trivial_extension(a)
    n = a.space.dim
    rows = [tuple(a.field.one if i == j else a.field.zero for j in range(n)) for i in range(n)]
    rows += [tuple(r) for r in delta.rows]
    f = LinearMap(a.field, a.space, ext.space, tuple(rows))
    return merge(
        "extension-morphism",
        derivation.prefixed("derivation"),
        check_algebra(ext).prefixed("extension-algebra"),
        check_braided_morphism(f, a, make_braiding(a), ext, make_braiding(ext)),
    )
