"""Entwining-type maps and everything they induce.

A map psi : B (x) A -> A (x) B over an algebra A (or psi : D (x) C -> C (x) D
over a coalgebra C) can satisfy several graded axiom sets; each has a named
kind and a checker here.  Sweedler sums are never symbolic: every axiom is
compiled to an equality of composition chains and checked on basis columns.

The second half builds what a verified map induces: the twisted product on
A (x) B (an algebra iff the map is a factorization), the dual coproduct, the
convolution-side dual, lifted modules and the intertwining between them, the
B (+) A comodule algebra over a bialgebra, entwined module/comodule variants,
and the module/measuring round trip.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, Scalar
from .linalg import (
    LinearMap,
    ShapeError,
    Space,
    check_map_identity,
    check_vector_identity,
    contract_left,
    contract_right,
    dual_space,
    from_columns,
    identity,
    insert_left,
    insert_right,
    lazy_kron,
    materialize,
    space,
    tensor,
    tensor_vec,
    twist,
)
from .report import IdentityCheck, Report, merge
from .structures import (
    Algebra,
    Bialgebra,
    Coalgebra,
    ComoduleCoaction,
    ModuleAction,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_comodule,
    check_comodule_algebra,
    check_grouplike_bilateral_integral,
    check_module,
    convolution_algebra,
    dualize_algebra,
)

SEMI_KINDS = ("semi", "factorization", "entwining-ll")
COSEMI_KINDS = ("cosemi", "cofactorization", "entwining-rr")
KINDS = SEMI_KINDS + COSEMI_KINDS


@dataclass(frozen=True)
class EntwiningData:
    """A map psi : left (x) right -> right (x) left with a declared axiom kind.

    The kind names which axioms the map claims; verify() checks them.  For
    semi-side kinds `right` is an algebra, for cosemi-side kinds a coalgebra;
    factorization-type kinds also put structure on the left factor.
    """

    kind: str
    psi: LinearMap
    algebra: Algebra | None = None
    coalgebra: Coalgebra | None = None
    left_algebra: Algebra | None = None
    left_coalgebra: Coalgebra | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ShapeError(f"unknown entwining kind {self.kind!r}")
        dom = self.psi.domain
        if len(dom.dims) != 2:
            raise ShapeError("entwining map needs a two-factor domain")
        if self.psi.codomain.dims != (dom.dims[1], dom.dims[0]):
            raise ShapeError("entwining map must swap its two tensor factors")
        ld, rd = dom.dims
        if self.kind in SEMI_KINDS:
            if self.algebra is None or self.algebra.space.dim != rd:
                raise ShapeError("semi-side kinds need the algebra on the right factor")
        else:
            if self.coalgebra is None or self.coalgebra.space.dim != rd:
                raise ShapeError("cosemi-side kinds need the coalgebra on the right factor")
        if self.kind in ("factorization", "entwining-rr"):
            if self.left_algebra is None or self.left_algebra.space.dim != ld:
                raise ShapeError(f"kind {self.kind!r} needs an algebra on the left factor")
        if self.kind in ("entwining-ll", "cofactorization"):
            if self.left_coalgebra is None or self.left_coalgebra.space.dim != ld:
                raise ShapeError(f"kind {self.kind!r} needs a coalgebra on the left factor")

    @property
    def field(self) -> Field:
        return self.psi.field

    @property
    def left_space(self) -> Space:
        return self.psi.domain.factors[0]

    @property
    def right_space(self) -> Space:
        return self.psi.domain.factors[1]


def verify(e: EntwiningData) -> Report:
    """Check the axioms of e's declared kind."""
    if e.kind == "semi":
        return check_semi_entwining(e.algebra, e.left_space, e.psi)
    if e.kind == "factorization":
        return check_algebra_factorization(e.algebra, e.left_algebra, e.psi)
    if e.kind == "entwining-ll":
        return check_entwining_left_left(e.algebra, e.left_coalgebra, e.psi)
    if e.kind == "cosemi":
        return check_cosemi_entwining(e.coalgebra, e.left_space, e.psi)
    if e.kind == "cofactorization":
        return check_coalgebra_factorization(e.coalgebra, e.left_coalgebra, e.psi)
    return check_entwining_right_right(e.coalgebra, e.left_algebra, e.psi)


def _unit_check(a: Algebra, b: Space, psi: LinearMap) -> IdentityCheck:
    field = a.field
    return check_map_identity(
        "unit",
        [psi, insert_right(field, b, a.unit, a.space)],
        insert_left(field, a.unit, a.space, b),
    )


def _mult_check(a: Algebra, b: Space, psi: LinearMap) -> IdentityCheck:
    field = a.field
    ida = identity(field, a.space)
    idb = identity(field, b)
    return check_map_identity(
        "multiplicativity",
        [psi, lazy_kron(idb, a.mult)],
        [lazy_kron(a.mult, idb), lazy_kron(ida, psi), lazy_kron(psi, ida)],
    )


def check_semi_entwining(a: Algebra, b: Space, psi: LinearMap, suite: str = "semi-entwining") -> Report:
    """psi(b (x) 1) = 1 (x) b and compatibility with the product of A."""
    return Report(suite, (_unit_check(a, b, psi), _mult_check(a, b, psi)))


def check_algebra_factorization(
    a: Algebra, b: Algebra, psi: LinearMap, suite: str = "algebra-factorization"
) -> Report:
    """Semi-entwining axioms plus their mirrors for the algebra on the left factor."""
    field = a.field
    ida = identity(field, a.space)
    idb = identity(field, b.space)
    left_unit = check_map_identity(
        "left-unit",
        [psi, insert_left(field, b.unit, b.space, a.space)],
        insert_right(field, a.space, b.unit, b.space),
    )
    left_mult = check_map_identity(
        "left-multiplicativity",
        [psi, lazy_kron(b.mult, ida)],
        [lazy_kron(ida, b.mult), lazy_kron(psi, idb), lazy_kron(idb, psi)],
    )
    return Report(
        suite,
        (_unit_check(a, b.space, psi), _mult_check(a, b.space, psi), left_unit, left_mult),
    )


def check_entwining_left_left(
    a: Algebra, b: Coalgebra, psi: LinearMap, suite: str = "entwining-ll"
) -> Report:
    """Semi-entwining axioms plus counit/comultiplication compatibility on the left."""
    field = a.field
    ida = identity(field, a.space)
    idb = identity(field, b.space)
    counit = check_map_identity(
        "left-counit",
        [contract_right(field, a.space, b.counit, b.space), psi],
        contract_left(field, b.counit, b.space, a.space),
    )
    comult = check_map_identity(
        "left-comultiplicativity",
        [lazy_kron(ida, b.comult), psi],
        [lazy_kron(psi, idb), lazy_kron(idb, psi), lazy_kron(b.comult, ida)],
    )
    return Report(
        suite,
        (_unit_check(a, b.space, psi), _mult_check(a, b.space, psi), counit, comult),
    )


def _counit_check(c: Coalgebra, d: Space, psi: LinearMap) -> IdentityCheck:
    field = c.field
    return check_map_identity(
        "counit",
        [contract_left(field, c.counit, c.space, d), psi],
        contract_right(field, d, c.counit, c.space),
    )


def _comult_check(c: Coalgebra, d: Space, psi: LinearMap) -> IdentityCheck:
    field = c.field
    idc = identity(field, c.space)
    idd = identity(field, d)
    return check_map_identity(
        "comultiplicativity",
        [lazy_kron(c.comult, idd), psi],
        [lazy_kron(idc, psi), lazy_kron(psi, idc), lazy_kron(idd, c.comult)],
    )


def check_cosemi_entwining(
    c: Coalgebra, d: Space, psi: LinearMap, suite: str = "cosemi-entwining"
) -> Report:
    """Counit and comultiplication compatibility for psi : D (x) C -> C (x) D."""
    return Report(suite, (_counit_check(c, d, psi), _comult_check(c, d, psi)))


def check_coalgebra_factorization(
    c: Coalgebra, d: Coalgebra, psi: LinearMap, suite: str = "coalgebra-factorization"
) -> Report:
    """Cosemi axioms plus their mirrors for the coalgebra on the left factor."""
    field = c.field
    idc = identity(field, c.space)
    idd = identity(field, d.space)
    left_counit = check_map_identity(
        "left-counit",
        [contract_right(field, c.space, d.counit, d.space), psi],
        contract_left(field, d.counit, d.space, c.space),
    )
    left_comult = check_map_identity(
        "left-comultiplicativity",
        [lazy_kron(idc, d.comult), psi],
        [lazy_kron(psi, idd), lazy_kron(idd, psi), lazy_kron(d.comult, idc)],
    )
    return Report(
        suite,
        (_counit_check(c, d.space, psi), _comult_check(c, d.space, psi), left_counit, left_comult),
    )


def check_entwining_right_right(
    c: Coalgebra, d: Algebra, psi: LinearMap, suite: str = "entwining-rr"
) -> Report:
    """Cosemi axioms plus unit/multiplication compatibility for the algebra D."""
    field = c.field
    idc = identity(field, c.space)
    idd = identity(field, d.space)
    left_unit = check_map_identity(
        "left-unit",
        [psi, insert_left(field, d.unit, d.space, c.space)],
        insert_right(field, c.space, d.unit, d.space),
    )
    left_mult = check_map_identity(
        "left-multiplicativity",
        [psi, lazy_kron(d.mult, idc)],
        [lazy_kron(idc, d.mult), lazy_kron(psi, idd), lazy_kron(idd, psi)],
    )
    return Report(
        suite,
        (_counit_check(c, d.space, psi), _comult_check(c, d.space, psi), left_unit, left_mult),
    )


# ---------------------------------------------------------------------------
# constructors


def mult_twist(a: Algebra, q: Scalar) -> LinearMap:
    """b (x) a -> 1 (x) ba + q(ba (x) 1) - q(b (x) a) on A (x) A."""
    field = a.field
    sq = tensor(a.space, a.space)
    left = insert_left(field, a.unit, a.space, a.space) * a.mult
    right = insert_right(field, a.space, a.unit, a.space) * a.mult
    return left + right.scale(q) - identity(field, sq).scale(q)


def comm_twist(a: Algebra, q: Scalar) -> LinearMap:
    """b (x) a -> q((ba - ab) (x) 1) + a (x) b on A (x) A."""
    field = a.field
    tw = twist(field, a.space, a.space)
    commutator = a.mult - (a.mult * tw)
    right = insert_right(field, a.space, a.unit, a.space) * commutator
    return right.scale(q) + tw


def module_entwining(mod: ModuleAction) -> LinearMap:
    """m (x) a -> 1 (x) ma, a semi-entwining with left factor the module."""
    a = mod.algebra
    return insert_left(a.field, a.unit, a.space, mod.space) * mod.act


def doi_koppinen(h: Bialgebra, comod: ComoduleCoaction, mod: ModuleAction) -> LinearMap:
    """b (x) a -> a_(0) (x) (b . a_(1)) from an H-coaction on A and H-action on B."""
    field = h.field
    a_sp, b_sp = comod.space, mod.space
    ida = identity(field, a_sp)
    return materialize(
        [
            lazy_kron(ida, mod.act),
            lazy_kron(ida, twist(field, h.space, b_sp)),
            lazy_kron(comod.coact, identity(field, b_sp)),
            twist(field, b_sp, a_sp),
        ]
    )


def doi_koppinen_alt(h: Bialgebra, comod: ComoduleCoaction, mod: ModuleAction) -> LinearMap:
    """d (x) c -> c_(0) (x) (d . c_(1)), the coalgebra-side mirror construction.

    Same formula as `doi_koppinen`, but read against coalgebra structure: it
    is a cosemi-entwining for C's own comultiplication when the carrier of
    `comod` is an H-comodule coalgebra (not merely a comodule).
    """
    field = h.field
    c_sp, d_sp = comod.space, mod.space
    idc = identity(field, c_sp)
    return materialize(
        [
            lazy_kron(idc, mod.act),
            lazy_kron(idc, twist(field, h.space, d_sp)),
            lazy_kron(comod.coact, identity(field, d_sp)),
            twist(field, d_sp, c_sp),
        ]
    )


# ---------------------------------------------------------------------------
# induced products and duals


def factorization_product(a: Algebra, b: Algebra, psi: LinearMap) -> Algebra:
    """The twisted product (a (x) b)(a' (x) b') = a psi(b (x) a') b' on A (x) B."""
    field = a.field
    ida = identity(field, a.space)
    idb = identity(field, b.space)
    mult = materialize(
        [lazy_kron(a.mult, b.mult), lazy_kron(ida, psi, idb)]
    )
    return Algebra(field, tensor(a.space, b.space), mult, tensor_vec(a.unit, b.unit))


def check_product_iff(a: Algebra, b: Algebra, psi: LinearMap) -> Report:
    """The twisted product is an algebra iff psi is a factorization; verdicts must agree."""
    product = check_algebra(factorization_product(a, b, psi))
    factorization = check_algebra_factorization(a, b, psi)
    agreement = IdentityCheck("verdict-agreement", product.passed == factorization.passed)
    return merge(
        "product-iff",
        product.prefixed("product"),
        factorization.prefixed("factorization"),
        agreement,
    )


def cofactorization_coproduct(c: Coalgebra, d: Coalgebra, psi: LinearMap) -> Coalgebra:
    """The twisted coproduct on D (x) C induced by psi : D (x) C -> C (x) D."""
    field = c.field
    idc = identity(field, c.space)
    idd = identity(field, d.space)
    comult = materialize(
        [lazy_kron(idd, psi, idc), lazy_kron(d.comult, c.comult)]
    )
    return Coalgebra(
        field, tensor(d.space, c.space), comult, tensor_vec(d.counit, c.counit)
    )


def check_coproduct_iff(c: Coalgebra, d: Coalgebra, psi: LinearMap) -> Report:
    """The twisted coproduct is a coalgebra iff psi is a coalgebra factorization."""
    coproduct = check_coalgebra(cofactorization_coproduct(c, d, psi))
    factorization = check_coalgebra_factorization(c, d, psi)
    agreement = IdentityCheck("verdict-agreement", coproduct.passed == factorization.passed)
    return merge(
        "coproduct-iff",
        coproduct.prefixed("coproduct"),
        factorization.prefixed("factorization"),
        agreement,
    )


def dualize_cosemi(c: Coalgebra, d: Space, psi: LinearMap) -> EntwiningData:
    """Dualize the coalgebra leg: a semi-entwining over the convolution algebra C*."""
    dc, dd = c.space.dim, d.dim
    if psi.domain.dims != (dd, dc) or psi.codomain.dims != (dc, dd):
        raise ShapeError("dualize_cosemi needs psi : D (x) C -> C (x) D")
    conv = convolution_algebra(c)
    cstar = conv.space
    rows = [
        [psi.rows[j * dd + l][k * dc + i] for k in range(dd) for j in range(dc)]
        for i in range(dc)
        for l in range(dd)
    ]
    star = LinearMap(
        psi.field, tensor(d, cstar), tensor(cstar, d), tuple(tuple(r) for r in rows)
    )
    return EntwiningData(kind="semi", psi=star, algebra=conv)


def transpose_entwining(e: EntwiningData) -> EntwiningData:
    """Transpose an algebra factorization into a coalgebra factorization on the duals."""
    if e.kind != "factorization":
        raise ShapeError("transpose_entwining expects a factorization-kind input")
    return EntwiningData(
        kind="cofactorization",
        psi=e.psi.transpose(),
        coalgebra=dualize_algebra(e.left_algebra),
        left_coalgebra=dualize_algebra(e.algebra),
    )


# ---------------------------------------------------------------------------
# modules induced by a semi-entwining


def induced_AtensorB_module(a: Algebra, b: Space, psi: LinearMap) -> ModuleAction:
    """Right A-action (a (x) b) . a' = a psi(b (x) a') on A (x) B."""
    field = a.field
    act = materialize(
        [lazy_kron(a.mult, identity(field, b)), lazy_kron(identity(field, a.space), psi)]
    )
    return ModuleAction(a, tensor(a.space, b), act)


def lifted_module(mod: ModuleAction, b: Space, psi: LinearMap) -> ModuleAction:
    """Lift a right A-module M to M (x) B via (m (x) b) . a = m a_alpha (x) b^alpha."""
    field = mod.field
    act = materialize(
        [
            lazy_kron(mod.act, identity(field, b)),
            lazy_kron(identity(field, mod.space), psi),
        ]
    )
    return ModuleAction(mod.algebra, tensor(mod.space, b), act)


def check_intertwining(f: LinearMap, source: ModuleAction, target: ModuleAction) -> Report:
    """f is a module map: f(m . a) = f(m) . a for the two given actions."""
    if source.algebra.space.dim != target.algebra.space.dim:
        raise ShapeError("intertwining requires actions of the same algebra")
    ida = identity(source.field, source.algebra.space)
    return Report(
        "intertwining",
        (
            check_map_identity(
                "intertwining", [f, source.act], [target.act, lazy_kron(f, ida)]
            ),
        ),
    )


def intertwining_from_semi(a: Algebra, b: Space, psi: LinearMap) -> Report:
    """psi intertwines the trivial action on B (x) A with the induced one on A (x) B."""
    field = a.field
    trivial = ModuleAction(
        a, tensor(b, a.space), materialize([lazy_kron(identity(field, b), a.mult)])
    )
    induced = induced_AtensorB_module(a, b, psi)
    return merge(
        "intertwining",
        check_module(trivial).prefixed("trivial-module"),
        check_module(induced).prefixed("induced-module"),
        check_intertwining(psi, trivial, induced).checks[0],
    )


# ---------------------------------------------------------------------------
# the B (+) A comodule algebra over a bialgebra


@dataclass(frozen=True)
class BiproductResult:
    """The algebra on B (+) A, its coaction(s), and the full verification report."""

    algebra: Algebra
    coaction: LinearMap
    integral_coaction: LinearMap | None
    report: Report


def make_biproduct(
    h: Bialgebra, b: Space, psi: LinearMap, integral=None
) -> BiproductResult:
    """Build B (+) A from a semi-entwining over a bialgebra and verify all parts.

    Product ((b, a)(b', a') = (b * a' + eps(a) b', aa') with b * a = eps(a_alpha) b^alpha),
    unit (0, 1), and the right A-coaction b (+) a -> b (x) u + a_(1) (x) a_(2); the
    plain coaction uses u = 1, the integral coaction a supplied group-like
    bilateral integral, which upgrades the comodule to a comodule algebra.
    """
    field = h.field
    a_sp = h.space
    m, n = b.dim, a_sp.dim
    zero = field.zero
    e_sp = space(
        *[f"B.{b.label(i)}" for i in range(m)], *[f"A.{a_sp.label(j)}" for j in range(n)]
    )

    l_act = contract_left(field, h.counit, a_sp, b)
    r_act = l_act * psi

    cols = []
    for p in range(m + n):
        for q in range(m + n):
            col = [zero] * (m + n)
            if p < m and q >= m:
                rcol = r_act.column(p * n + (q - m))
                for i in range(m):
                    col[i] = rcol[i]
            elif p >= m and q < m:
                col[q] = h.counit[p - m]
            elif p >= m and q >= m:
                mcol = h.mult.column((p - m) * n + (q - m))
                for i in range(n):
                    col[m + i] = mcol[i]
            cols.append(tuple(col))
    mult_e = from_columns(field, tensor(e_sp, e_sp), e_sp, cols)
    algebra = Algebra(field, e_sp, mult_e, (zero,) * m + tuple(h.unit))

    def coaction(u) -> LinearMap:
        cols = []
        for j in range(m + n):
            col = [zero] * ((m + n) * n)
            if j < m:
                for k, x in enumerate(u):
                    col[j * n + k] = x
            else:
                ccol = h.comult.column(j - m)
                for s in range(n):
                    for t in range(n):
                        col[(m + s) * n + t] = ccol[s * n + t]
            cols.append(tuple(col))
        return from_columns(field, e_sp, tensor(e_sp, a_sp), cols)

    ida = identity(field, a_sp)
    idb = identity(field, b)
    bimodule = (
        check_map_identity(
            "left-associativity",
            [l_act, lazy_kron(ida, l_act)],
            [l_act, lazy_kron(h.mult, idb)],
        ),
        check_map_identity(
            "left-unit", [l_act, insert_left(field, h.unit, a_sp, b)], idb
        ),
        check_map_identity(
            "right-associativity",
            [r_act, lazy_kron(r_act, ida)],
            [r_act, lazy_kron(idb, h.mult)],
        ),
        check_map_identity(
            "right-unit", [r_act, insert_right(field, b, h.unit, a_sp)], idb
        ),
        check_map_identity(
            "bimodule-compatibility",
            [r_act, lazy_kron(l_act, ida)],
            [l_act, lazy_kron(ida, r_act)],
        ),
    )

    coact_unit = coaction(h.unit)
    parts = [
        check_semi_entwining(h.algebra, b, psi).prefixed("semi"),
        check_bialgebra(h).prefixed("bialgebra"),
        Report("bimodule", bimodule).prefixed("bimodule"),
        check_algebra(algebra).prefixed("algebra"),
        check_comodule(ComoduleCoaction(h.coalgebra, e_sp, coact_unit)).prefixed("comodule"),
    ]

    coact_integral = None
    if integral is not None:
        integral = tuple(integral)
        coact_integral = coaction(integral)
        parts.append(check_grouplike_bilateral_integral(h, integral).prefixed("integral"))
        parts.append(
            check_comodule_algebra(algebra, h, coact_integral).prefixed("comodule-algebra")
        )

    return BiproductResult(algebra, coact_unit, coact_integral, merge("biproduct", *parts))


# ---------------------------------------------------------------------------
# entwined modules and comodules


VARIANTS = (
    "semi-entwined-module",
    "semi-entwined-comodule",
    "cosemi-entwined-module",
    "cosemi-entwined-comodule",
)


@dataclass(frozen=True)
class MeasuredModule:
    """A carrier M with a module action or comodule coaction plus a measuring.

    Per variant the measuring is M (x) V -> M, M -> M (x) V, V (x) M -> M, or
    M -> V (x) M; semi variants carry a right action act : M (x) A -> M and
    cosemi variants a left coaction coact : M -> C (x) M.
    """

    variant: str
    carrier: Space
    vee: Space
    measuring: LinearMap
    act: LinearMap | None = None
    coact: LinearMap | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ShapeError(f"unknown entwined variant {self.variant!r}")
        md, vd = self.carrier.dims, self.vee.dims
        shapes = {
            "semi-entwined-module": (md + vd, md),
            "semi-entwined-comodule": (md, md + vd),
            "cosemi-entwined-module": (vd + md, md),
            "cosemi-entwined-comodule": (md, vd + md),
        }
        want_dom, want_cod = shapes[self.variant]
        if self.measuring.domain.dims != want_dom or self.measuring.codomain.dims != want_cod:
            raise ShapeError(f"measuring shape does not match variant {self.variant!r}")
        if self.variant.startswith("semi") and self.act is None:
            raise ShapeError("semi variants need a right module action")
        if self.variant.startswith("cosemi") and self.coact is None:
            raise ShapeError("cosemi variants need a left comodule coaction")


def check_entwined_variant(mm: MeasuredModule, e: EntwiningData) -> Report:
    """Verify the compatibility identity of the variant, plus its prerequisites."""
    semi_side = mm.variant.startswith("semi")
    if semi_side != (e.kind in SEMI_KINDS):
        raise ShapeError(f"variant {mm.variant!r} does not match entwining kind {e.kind!r}")
    field = e.field
    m_sp, v_sp, psi = mm.carrier, mm.vee, e.psi
    if v_sp.dims != e.left_space.dims:
        raise ShapeError("measured module V-factor does not match the entwining left factor")
    idm = identity(field, m_sp)
    idv = identity(field, v_sp)

    if semi_side:
        a = e.algebra
        ida = identity(field, a.space)
        act = mm.act
        prereq = [
            verify(e).prefixed("entwining"),
            check_module(ModuleAction(a, m_sp, act)).prefixed("module"),
        ]
        if mm.variant == "semi-entwined-module":
            compat = check_map_identity(
                "compatibility",
                [mm.measuring, lazy_kron(act, idv), lazy_kron(idm, psi)],
                [act, lazy_kron(mm.measuring, ida)],
            )
        else:
            compat = check_map_identity(
                "compatibility",
                [mm.measuring, act],
                [lazy_kron(act, idv), lazy_kron(idm, psi), lazy_kron(mm.measuring, ida)],
            )
    else:
        c = e.coalgebra
        idc = identity(field, c.space)
        coact = mm.coact
        if coact.domain.dims != m_sp.dims or coact.codomain.dims != c.space.dims + m_sp.dims:
            raise ShapeError("left coaction must map M -> C (x) M")
        prereq = [
            verify(e).prefixed("entwining"),
            Report(
                "comodule",
                (
                    check_map_identity(
                        "coassociativity",
                        [lazy_kron(c.comult, idm), coact],
                        [lazy_kron(idc, coact), coact],
                    ),
                    check_map_identity(
                        "counit",
                        [contract_left(field, c.counit, c.space, m_sp), coact],
                        idm,
                    ),
                ),
            ).prefixed("comodule"),
        ]
        if mm.variant == "cosemi-entwined-module":
            compat = check_map_identity(
                "compatibility",
                [coact, mm.measuring],
                [lazy_kron(idc, mm.measuring), lazy_kron(psi, idm), lazy_kron(idv, coact)],
            )
        else:
            compat = check_map_identity(
                "compatibility",
                [lazy_kron(idc, mm.measuring), coact],
                [lazy_kron(psi, idm), lazy_kron(idv, coact), mm.measuring],
            )
    return merge(mm.variant, *prereq, compat)


def module_from_pair(
    a: Algebra, b: Algebra, psi: LinearMap, act: LinearMap, triangle: LinearMap
) -> ModuleAction:
    """Combine a right A-action and a right B-measuring into m(a (x) b) = (ma) <| b."""
    m_sp = act.domain.factors[0]
    combined = materialize([triangle, lazy_kron(act, identity(a.field, b.space))])
    return ModuleAction(factorization_product(a, b, psi), m_sp, combined)


def pair_from_module(a: Algebra, b: Algebra, mod: ModuleAction) -> tuple[LinearMap, LinearMap]:
    """Restrict an A (x) B module to the two one-sided actions (via 1_B and 1_A)."""
    field = mod.field
    idm = identity(field, mod.space)
    act = materialize(
        [mod.act, lazy_kron(idm, insert_right(field, a.space, b.unit, b.space))]
    )
    triangle = materialize(
        [mod.act, lazy_kron(idm, insert_left(field, a.unit, a.space, b.space))]
    )
    return act, triangle


def entwined_roundtrip(
    a: Algebra, b: Algebra, psi: LinearMap, act: LinearMap, triangle: LinearMap
) -> Report:
    """Round trip of the module/measuring correspondence over a factorization."""
    field = a.field
    m_sp = act.domain.factors[0]
    idm = identity(field, m_sp)
    mod = module_from_pair(a, b, psi, act, triangle)
    split_act = materialize(
        [mod.act, lazy_kron(idm, insert_right(field, a.space, b.unit, b.space))]
    )
    split_tri = materialize(
        [mod.act, lazy_kron(idm, insert_left(field, a.unit, a.space, b.space))]
    )
    ida = identity(field, a.space)
    idb = identity(field, b.space)
    compat = check_map_identity(
        "split-compatibility",
        [split_tri, lazy_kron(split_act, idb), lazy_kron(idm, psi)],
        [split_act, lazy_kron(split_tri, ida)],
    )
    return merge(
        "entwined-roundtrip",
        check_algebra_factorization(a, b, psi).prefixed("factorization"),
        check_module(ModuleAction(a, m_sp, act)).prefixed("module-a"),
        check_module(ModuleAction(b, m_sp, triangle)).prefixed("module-b"),
        check_module(mod).prefixed("product-module"),
        check_map_identity("split-action", split_act, act),
        check_map_identity("split-measuring", split_tri, triangle),
        compat,
    )
