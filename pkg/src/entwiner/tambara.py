"""Generator actions: the finite shadow of the universal-coacting correspondence.

A semi-entwining map over an n-dimensional algebra A is the same data as a
family of n^2 operators rho(i, j) on the other tensor factor — the action of
the generator pair (a_i*, a_j) — subject to two relation families: the unit
relation and a composition relation indexed by basis triples.  The infinite
universal bialgebra itself is never materialized; the relations are the whole
testable content.  The mirror story indexes generators by (c_i*, c_j) over a
coalgebra and swaps unit/product for counit/coproduct.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entwine import (
    COSEMI_KINDS,
    SEMI_KINDS,
    EntwiningData,
    check_algebra_factorization,
    check_coalgebra_factorization,
)
from .linalg import LinearMap, ShapeError, Space, kron, tensor
from .report import IdentityCheck, PreconditionError, Report, merge
from .structures import Algebra, Coalgebra, convolution_algebra


@dataclass(frozen=True)
class GeneratorAction:
    """Operators maps[i][j] : carrier -> carrier for the generator pairs (a_i*, a_j)."""

    algebra: Algebra
    carrier: Space
    maps: tuple[tuple[LinearMap, ...], ...]

    def __post_init__(self):
        n = self.algebra.space.dim
        if len(self.maps) != n or any(len(row) != n for row in self.maps):
            raise ShapeError("generator maps must form a dim(A) x dim(A) family")
        md = self.carrier.dims
        for row in self.maps:
            for m in row:
                if m.domain.dims != md or m.codomain.dims != md:
                    raise ShapeError("generator maps must be endomorphisms of the carrier")

    def dual_label(self, i: int) -> str:
        return self.algebra.space.label(i) + "*"


def action_from_semi(e: EntwiningData) -> GeneratorAction:
    """Slice psi into the operators b -> a_i*(A-leg of psi(b (x) a_j))."""
    if e.kind not in SEMI_KINDS:
        raise ShapeError("generator actions index over an algebra-side entwining")
    a, b, psi = e.algebra, e.left_space, e.psi
    n, m = a.space.dim, b.dim
    maps = tuple(
        tuple(
            LinearMap(
                e.field,
                b,
                b,
                tuple(tuple(psi.rows[i * m + l][k * n + j] for k in range(m)) for l in range(m)),
            )
            for j in range(n)
        )
        for i in range(n)
    )
    return GeneratorAction(a, b, maps)


def _psi_from_maps(g: GeneratorAction) -> LinearMap:
    a_sp, b = g.algebra.space, g.carrier
    n, m = a_sp.dim, b.dim
    rows = tuple(
        tuple(g.maps[i][j].rows[l][k] for k in range(m) for j in range(n))
        for i in range(n)
        for l in range(m)
    )
    return LinearMap(g.algebra.field, tensor(b, a_sp), tensor(a_sp, b), rows)


def semi_from_action(g: GeneratorAction) -> EntwiningData:
    """Reassemble psi(b (x) a) = sum_i a_i (x) (b . [a_i* (x) a]) from a lawful family."""
    relations = check_tambara_relations(g)
    if not relations.passed:
        raise PreconditionError("the generator relations fail", relations)
    return EntwiningData(kind="semi", psi=_psi_from_maps(g), algebra=g.algebra)


def _first_column_mismatch(lhs, rhs, field):
    """Index and rendered difference of the first unequal column, or None."""
    cols = len(lhs[0]) if lhs else 0
    for j in range(cols):
        if any(row[j] != other[j] for row, other in zip(lhs, rhs)):
            diff = tuple(field.render(row[j] - other[j]) for row, other in zip(lhs, rhs))
            return j, diff
    return None


def _accumulate(rows, scalar, m: LinearMap):
    if not scalar:
        return
    for r, src in enumerate(m.rows):
        dst = rows[r]
        for c, v in enumerate(src):
            if v:
                dst[c] = dst[c] + scalar * v


def check_tambara_relations(g: GeneratorAction) -> Report:
    """The unit and composition relations of a lawful generator family."""
    a = g.algebra
    field = a.field
    n, m = a.space.dim, g.carrier.dim
    unit_row = IdentityCheck("unit", True)
    for i in range(n):
        rows = [[field.zero] * m for _ in range(m)]
        for j, u in enumerate(a.unit):
            _accumulate(rows, u, g.maps[i][j])
        target = [
            [a.unit[i] if r == c else field.zero for c in range(m)] for r in range(m)
        ]
        bad = _first_column_mismatch(rows, target, field)
        if bad is not None:
            witness = (g.dual_label(i), g.carrier.label(bad[0]))
            unit_row = IdentityCheck("unit", False, witness, bad[1])
            break
    action_row = IdentityCheck("action", True)
    mult = a.mult.rows
    done = False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = [[field.zero] * m for _ in range(m)]
                for l in range(n):
                    _accumulate(lhs, mult[l][j * n + k], g.maps[i][l])
                rhs = [[field.zero] * m for _ in range(m)]
                for s in range(n):
                    for t in range(n):
                        coeff = mult[i][s * n + t]
                        if coeff:
                            _accumulate(rhs, coeff, g.maps[t][k] * g.maps[s][j])
                bad = _first_column_mismatch(lhs, rhs, field)
                if bad is not None:
                    witness = (
                        g.dual_label(i),
                        a.space.label(j),
                        a.space.label(k),
                        g.carrier.label(bad[0]),
                    )
                    action_row = IdentityCheck("action", False, witness, bad[1])
                    done = True
                    break
            if done:
                break
        if done:
            break
    return Report("generator-relations", (unit_row, action_row))


def check_action_roundtrip(e: EntwiningData) -> Report:
    """Both directions of the slicing/reassembly correspondence are exact."""
    g = action_from_semi(e)
    back = _psi_from_maps(g)
    psi_row = IdentityCheck("psi-roundtrip", back.same_matrix(e.psi))
    again = action_from_semi(EntwiningData(kind="semi", psi=back, algebra=g.algebra))
    maps_row = IdentityCheck("maps-roundtrip", True)
    for i in range(g.algebra.space.dim):
        for j in range(g.algebra.space.dim):
            if not g.maps[i][j].same_matrix(again.maps[i][j]):
                maps_row = IdentityCheck(
                    "maps-roundtrip",
                    False,
                    (g.dual_label(i), g.algebra.space.label(j)),
                )
                break
    return Report("action-roundtrip", (psi_row, maps_row))


def check_module_algebra_refinement(g: GeneratorAction, b: Algebra) -> Report:
    """Generators act by split multiplications on B iff psi factorizes."""
    if b.space.dims != g.carrier.dims:
        raise ShapeError("the refinement needs an algebra structure on the carrier")
    field = b.field
    n, m = g.algebra.space.dim, b.space.dim
    product_row = IdentityCheck("product-split", True)
    done = False
    for i in range(n):
        for j in range(n):
            lhs = (g.maps[i][j] * b.mult).rows
            rhs = [[field.zero] * (m * m) for _ in range(m)]
            for k in range(n):
                _accumulate(rhs, field.one, b.mult * kron(g.maps[i][k], g.maps[k][j]))
            bad = _first_column_mismatch(lhs, rhs, field)
            if bad is not None:
                witness = (
                    g.dual_label(i),
                    g.algebra.space.label(j),
                ) + b.mult.domain.basis_tuple(bad[0])
                product_row = IdentityCheck("product-split", False, witness, bad[1])
                done = True
                break
        if done:
            break
    unit_row = IdentityCheck("unit-split", True)
    done = False
    for i in range(n):
        for j in range(n):
            got = g.maps[i][j].apply(b.unit)
            want = tuple(
                (field.one if i == j else field.zero) * u for u in b.unit
            )
            if got != want:
                residual = tuple(field.render(x - y) for x, y in zip(got, want))
                unit_row = IdentityCheck(
                    "unit-split",
                    False,
                    (g.dual_label(i), g.algebra.space.label(j)),
                    residual,
                )
                done = True
                break
        if done:
            break
    factorization = check_algebra_factorization(g.algebra, b, _psi_from_maps(g))
    agreement = IdentityCheck(
        "agreement",
        (product_row.passed and unit_row.passed) == factorization.passed,
    )
    return merge(
        "module-algebra-refinement",
        product_row,
        unit_row,
        factorization.prefixed("factorization"),
        agreement,
    )


# ---------------------------------------------------------------------------
# the coalgebra-side mirror


def cotambara_action(e: EntwiningData) -> GeneratorAction:
    """Slice a coalgebra-side psi into d -> c_i*(C-leg of psi(d (x) c_j)).

    The base of the returned family is the convolution algebra C*; its maps
    match the algebra-side action of the dualized entwining with the two
    generator indices transposed.
    """
    if e.kind not in COSEMI_KINDS:
        raise ShapeError("cotambara actions index over a coalgebra-side entwining")
    c, d, psi = e.coalgebra, e.left_space, e.psi
    n, m = c.space.dim, d.dim
    maps = tuple(
        tuple(
            LinearMap(
                e.field,
                d,
                d,
                tuple(tuple(psi.rows[i * m + l][k * n + j] for k in range(m)) for l in range(m)),
            )
            for j in range(n)
        )
        for i in range(n)
    )
    return GeneratorAction(convolution_algebra(c), d, maps)


def check_cotambara_relations(e: EntwiningData) -> Report:
    """Counit and coproduct relations for the coalgebra-side generator family.

    Formulated directly with the counit and comultiplication of C — an
    independent route from running the algebra-side relations over C*.
    """
    g = cotambara_action(e)
    c = e.coalgebra
    field = c.field
    n, m = c.space.dim, g.carrier.dim
    counit_row = IdentityCheck("counit", True)
    for j in range(n):
        rows = [[field.zero] * m for _ in range(m)]
        for i, s in enumerate(c.counit):
            _accumulate(rows, s, g.maps[i][j])
        target = [
            [c.counit[j] if r == col else field.zero for col in range(m)] for r in range(m)
        ]
        bad = _first_column_mismatch(rows, target, field)
        if bad is not None:
            witness = (g.dual_label(j), g.carrier.label(bad[0]))
            counit_row = IdentityCheck("counit", False, witness, bad[1])
            break
    comult = c.comult.rows
    coaction_row = IdentityCheck("coaction", True)
    done = False
    for s in range(n):
        for t in range(n):
            for j in range(n):
                lhs = [[field.zero] * m for _ in range(m)]
                for i in range(n):
                    _accumulate(lhs, comult[s * n + t][i], g.maps[i][j])
                rhs = [[field.zero] * m for _ in range(m)]
                for u in range(n):
                    for v in range(n):
                        coeff = comult[u * n + v][j]
                        if coeff:
                            _accumulate(rhs, coeff, g.maps[t][v] * g.maps[s][u])
                bad = _first_column_mismatch(lhs, rhs, field)
                if bad is not None:
                    witness = (
                        c.space.label(s),
                        c.space.label(t),
                        c.space.label(j),
                        g.carrier.label(bad[0]),
                    )
                    coaction_row = IdentityCheck("coaction", False, witness, bad[1])
                    done = True
                    break
            if done:
                break
        if done:
            break
    return Report("cogenerator-relations", (counit_row, coaction_row))


def check_comodule_coalgebra_refinement(e: EntwiningData, d: Coalgebra) -> Report:
    """Generators split through the coproduct of D iff psi cofactorizes."""
    g = cotambara_action(e)
    if d.space.dims != g.carrier.dims:
        raise ShapeError("the refinement needs a coalgebra structure on the carrier")
    field = d.field
    n, m = e.coalgebra.space.dim, d.space.dim
    coproduct_row = IdentityCheck("coproduct-split", True)
    done = False
    for i in range(n):
        for j in range(n):
            lhs = (d.comult * g.maps[i][j]).rows
            rhs = [[field.zero] * m for _ in range(m * m)]
            for w in range(n):
                _accumulate(rhs, field.one, kron(g.maps[i][w], g.maps[w][j]) * d.comult)
            bad = _first_column_mismatch(lhs, rhs, field)
            if bad is not None:
                witness = (g.dual_label(i), g.dual_label(j), d.space.label(bad[0]))
                coproduct_row = IdentityCheck("coproduct-split", False, witness, bad[1])
                done = True
                break
        if done:
            break
    counit_row = IdentityCheck("counit-split", True)
    done = False
    for i in range(n):
        for j in range(n):
            got = tuple(
                sum(
                    (s * v for s, v in zip(d.counit, g.maps[i][j].column(k)) if v),
                    field.zero,
                )
                for k in range(m)
            )
            want = tuple(
                (field.one if i == j else field.zero) * s for s in d.counit
            )
            if got != want:
                residual = tuple(field.render(x - y) for x, y in zip(got, want))
                counit_row = IdentityCheck(
                    "counit-split", False, (g.dual_label(i), g.dual_label(j)), residual
                )
                done = True
                break
        if done:
            break
    factorization = check_coalgebra_factorization(e.coalgebra, d, e.psi)
    agreement = IdentityCheck(
        "agreement",
        (coproduct_row.passed and counit_row.passed) == factorization.passed,
    )
    return merge(
        "comodule-coalgebra-refinement",
        coproduct_row,
        counit_row,
        factorization.prefixed("factorization"),
        agreement,
    )
