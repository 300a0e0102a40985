"""O-operators, Rota-Baxter operators and the finer structures they induce.

A linear map T: V -> A is an O-operator for a bimodule (l, r, V) when

    T(u) op T(v) = T( l_op(T(u)) v + r_op(T(v)) u )

holds for every operation op of the algebra's level.  Rota-Baxter
operators (weight 0) are the special case of the regular bimodule, and
every O-operator transplants the algebra structure to V with twice as
many operations; an invertible O-operator transports that structure
back onto A itself, compatibly with the original product.

Inducing operations re-verify their output by default (post-verification
is cheap at these dimensions and catches violated preconditions); pass
verify=False to skip.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bimodules import (Bimodule, PreconditionFailed, apply_action,
                        regular_bimodule)
from .core import (ClusterAlgebra, Level, LevelError, Report, Violation,
                   check_axioms, project)
from .linalg import (DimensionMismatch, Fraction, Matrix, Tensor3,
                     unit_vector, vec_add, vec_is_zero, vec_sub)


class NotCommuting(ValueError):
    """A construction that needs commuting operators got a non-commuting pair."""


class NotRotaBaxter(PreconditionFailed):
    """A map required to be Rota-Baxter is not; carries the report."""


class VerificationFailed(RuntimeError):
    """Post-verification of a construction's output found violations."""

    def __init__(self, message: str, report: Report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class InterMap:
    """Linear map V -> A; column j holds the coordinates of T(v_j)."""

    matrix: Matrix

    @property
    def source_dim(self) -> int:
        return self.matrix.cols

    @property
    def target_dim(self) -> int:
        return self.matrix.rows

    @classmethod
    def identity(cls, dim: int) -> "InterMap":
        return cls(Matrix.identity(dim))

    @classmethod
    def zero(cls, target_dim: int, source_dim: int) -> "InterMap":
        return cls(Matrix.zeros(target_dim, source_dim))

    def __call__(self, vec) -> tuple[Fraction, ...]:
        return self.matrix.apply(vec)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.matrix.col(j)


# Identity ids for the per-operation O-operator conditions.
_O_IDENTITY_IDS = {
    1: {"star": "2.1.3"},
    2: {"succ": "3.3.1-succ", "prec": "3.3.1-prec"},
    4: {"se": "4.2.1", "ne": "4.2.2", "nw": "4.2.3", "sw": "4.2.4"},
}


def is_o_operator(a: ClusterAlgebra, m: Bimodule, t: InterMap) -> Report:
    """Check the O-operator identity for every operation on all basis pairs."""
    if int(a.level) != int(m.level):
        raise LevelError("algebra and bimodule levels differ")
    if a.dim != m.algebra_dim or t.target_dim != a.dim or t.source_dim != m.module_dim:
        raise DimensionMismatch("map does not fit the algebra/bimodule pair")
    ids = _O_IDENTITY_IDS[int(a.level)]
    violations = []
    md = m.module_dim
    for op in a.level.ops:
        tensor = a.sc[op]
        for i in range(md):
            tu = t.column(i)
            for j in range(md):
                tv = t.column(j)
                lhs = a.bilinear(tensor, tu, tv)
                inner = vec_add(apply_action(m, "l", op, tu).col(j),
                                apply_action(m, "r", op, tv).col(i))
                diff = vec_sub(lhs, t(inner))
                if not vec_is_zero(diff):
                    violations.append(Violation(ids[op], (i, j), diff))
    return Report(tuple(violations))


def is_rota_baxter(a: ClusterAlgebra, r: InterMap) -> Report:
    """Weight-zero Rota-Baxter check: O-operator for the regular bimodule.

    At levels 2 and 4 this is the identity R(x) op R(y) =
    R(R(x) op y + x op R(y)) for every splitting operation.
    """
    if a.level == Level.OCTO:
        raise LevelError("no regular bimodule at level 8, so no Rota-Baxter check")
    if r.source_dim != a.dim or r.target_dim != a.dim:
        raise DimensionMismatch("Rota-Baxter candidate must be a square map on A")
    return is_o_operator(a, regular_bimodule(a), r)


# How one operation of the finer algebra is built from the bimodule:
# ("l", op, "uv") means u NEW v = l_op(T(u)) v, ("r", op, "vu") means
# u NEW v = r_op(T(v)) u.  Keys are the finer level's operation names.
_INDUCTION: dict[int, dict[str, tuple[str, str]]] = {
    1: {"succ": ("l", "star"), "prec": ("r", "star")},
    2: {"se": ("l", "succ"), "ne": ("r", "succ"),
        "sw": ("l", "prec"), "nw": ("r", "prec")},
    4: {"se1": ("r", "se"), "se2": ("l", "se"),
        "ne1": ("r", "ne"), "ne2": ("l", "ne"),
        "nw1": ("r", "nw"), "nw2": ("l", "nw"),
        "sw1": ("r", "sw"), "sw2": ("l", "sw")},
}

_CANONICAL_COARSER = {2: "Assoc", 4: "HorizDend", 8: "DepthQuadri"}


def induced_tensors(a: ClusterAlgebra, m: Bimodule,
                    t: InterMap) -> dict[str, Tensor3]:
    """Structure constants of the doubled-level product on the module."""
    md = m.module_dim
    out: dict[str, Tensor3] = {}
    for new_op, (side, op) in _INDUCTION[int(a.level)].items():
        entries = []
        for i in range(md):
            for j in range(md):
                if side == "l":
                    col = apply_action(m, "l", op, t.column(i)).col(j)
                else:
                    col = apply_action(m, "r", op, t.column(j)).col(i)
                entries.extend((i, j, k, v) for k, v in enumerate(col) if v)
        out[new_op] = Tensor3.from_entries((md, md, md), entries)
    return out


def induce_on_module(a: ClusterAlgebra, m: Bimodule, t: InterMap,
                     check: bool = True, verify: bool = True) -> ClusterAlgebra:
    """The finer (level-doubled) algebra an O-operator puts on its module.

    With check=True the O-operator identity is verified first; with
    verify=True the output is re-checked (axioms at the doubled level and
    T a homomorphism onto the coarser projection).
    """
    if check:
        rep = is_o_operator(a, m, t)
        if not rep.ok:
            raise PreconditionFailed("map is not an O-operator", rep)
    finer = ClusterAlgebra(Level.of(2 * int(a.level)), m.module_dim,
                           induced_tensors(a, m, t))
    if verify:
        rep = check_axioms(finer)
        if not rep.ok:
            raise VerificationFailed("induced algebra fails its axioms", rep)
        hom = homomorphism_report(finer, a, t)
        if not hom.ok:
            raise VerificationFailed("induced map is not a homomorphism", hom)
    return finer


def homomorphism_report(finer: ClusterAlgebra, a: ClusterAlgebra,
                        t: InterMap) -> Report:
    """Check T(u coarse-op v) = T(u) op T(v) on all basis pairs, where
    coarse-op runs over the canonical projection of the finer algebra
    matching a's level."""
    coarse = project(finer, _CANONICAL_COARSER[int(finer.level)])
    if int(coarse.level) != int(a.level):
        raise LevelError("homomorphism target level mismatch")
    violations = []
    for op in a.level.ops:
        src = coarse.sc[op]
        dst = a.sc[op]
        for i in range(coarse.dim):
            for j in range(coarse.dim):
                lhs = t(src.fibre(i, j))
                rhs = a.bilinear(dst, t.column(i), t.column(j))
                diff = vec_sub(lhs, rhs)
                if not vec_is_zero(diff):
                    violations.append(Violation(f"hom-{op}", (i, j), diff))
    return Report(tuple(violations))


def rb_finer(a: ClusterAlgebra, r: InterMap, check: bool = True,
             verify: bool = True) -> ClusterAlgebra:
    """Finer algebra from a Rota-Baxter operator (regular-bimodule induction).

    Level 1 -> 2: x > y = R(x)*y, x < y = x*R(y); level 2 -> 4 splits each
    dendriform product the same way; level 4 -> 8 splits each quadri
    product, index 1 acting through R on the right argument.
    """
    if check:
        rep = is_rota_baxter(a, r)
        if not rep.ok:
            raise NotRotaBaxter("map is not a Rota-Baxter operator", rep)
    return induce_on_module(a, regular_bimodule(a), r, check=False, verify=verify)


def _require_rb(a: ClusterAlgebra, r: InterMap, name: str) -> None:
    rep = is_rota_baxter(a, r)
    if not rep.ok:
        raise NotRotaBaxter(f"{name} is not a Rota-Baxter operator", rep)


def _require_commuting(*mats: Matrix) -> None:
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                raise NotCommuting(f"operators {i + 1} and {j + 1} do not commute")


def rb_pair_quadri(a: ClusterAlgebra, r1: InterMap, r2: InterMap,
                   check: bool = True, verify: bool = True) -> ClusterAlgebra:
    """Quadri structure from two commuting Rota-Baxter operators:

        x SE y = R1R2(x)*y     x NE y = R1(x)*R2(y)
        x SW y = R2(x)*R1(y)   x NW y = x*R1R2(y)
    """
    if a.level != Level.ASSOC:
        raise LevelError("pair construction starts from a level-1 algebra")
    if check:
        _require_rb(a, r1, "r1")
        _require_rb(a, r2, "r2")
        _require_commuting(r1.matrix, r2.matrix)
    d = a.dim
    m1, m2 = r1.matrix, r2.matrix
    m12 = m1 @ m2
    star = a.sc["star"]

    def pair_tensor(left: Matrix | None, right: Matrix | None) -> Tensor3:
        entries = []
        for i in range(d):
            x = left.col(i) if left is not None else unit_vector(d, i)
            for j in range(d):
                y = right.col(j) if right is not None else unit_vector(d, j)
                col = a.bilinear(star, x, y)
                entries.extend((i, j, k, v) for k, v in enumerate(col) if v)
        return Tensor3.from_entries((d, d, d), entries)

    sc = {
        "se": pair_tensor(m12, None),
        "ne": pair_tensor(m1, m2),
        "sw": pair_tensor(m2, m1),
        "nw": pair_tensor(None, m12),
    }
    out = ClusterAlgebra(Level.QUADRI, d, sc)
    if verify:
        rep = check_axioms(out)
        if not rep.ok:
            raise VerificationFailed("pair construction fails quadri axioms", rep)
    return out


def rb_triple_octo(a: ClusterAlgebra, r1: InterMap, r2: InterMap, r3: InterMap,
                   check: bool = True, verify: bool = True) -> ClusterAlgebra:
    """Octo structure from three pairwise commuting Rota-Baxter operators:

        x se1 y = R2R3(x)*R1(y)    x se2 y = R1R2R3(x)*y
        x ne1 y = R2(x)*R1R3(y)    x ne2 y = R1R2(x)*R3(y)
        x sw1 y = R3(x)*R1R2(y)    x sw2 y = R1R3(x)*R2(y)
        x nw1 y = x*R1R2R3(y)      x nw2 y = R1(x)*R2R3(y)
    """
    if a.level != Level.ASSOC:
        raise LevelError("triple construction starts from a level-1 algebra")
    if check:
        for name, r in (("r1", r1), ("r2", r2), ("r3", r3)):
            _require_rb(a, r, name)
        _require_commuting(r1.matrix, r2.matrix, r3.matrix)
    d = a.dim
    m1, m2, m3 = r1.matrix, r2.matrix, r3.matrix
    star = a.sc["star"]

    def tens(left: Matrix | None, right: Matrix | None) -> Tensor3:
        entries = []
        for i in range(d):
            x = left.col(i) if left is not None else unit_vector(d, i)
            for j in range(d):
                y = right.col(j) if right is not None else unit_vector(d, j)
                col = a.bilinear(star, x, y)
                entries.extend((i, j, k, v) for k, v in enumerate(col) if v)
        return Tensor3.from_entries((d, d, d), entries)

    sc = {
        "se1": tens(m2 @ m3, m1), "se2": tens(m1 @ m2 @ m3, None),
        "ne1": tens(m2, m1 @ m3), "ne2": tens(m1 @ m2, m3),
        "sw1": tens(m3, m1 @ m2), "sw2": tens(m1 @ m3, m2),
        "nw1": tens(None, m1 @ m2 @ m3), "nw2": tens(m1, m2 @ m3),
    }
    out = ClusterAlgebra(Level.OCTO, d, sc)
    if verify:
        rep = check_axioms(out)
        if not rep.ok:
            raise VerificationFailed("triple construction fails octo axioms", rep)
    return out


def compatible_from_invertible(a: ClusterAlgebra, m: Bimodule, t: InterMap,
                               check: bool = True,
                               verify: bool = True) -> ClusterAlgebra:
    """Finer structure on A itself from an invertible O-operator.

    Conjugates the module-side induction by T, so the result lives on A
    and its canonical coarser projection is a, exactly.  Only square T
    is supported.
    """
    if t.source_dim != t.target_dim:
        raise DimensionMismatch("compatible structure needs a square invertible map")
    if check:
        rep = is_o_operator(a, m, t)
        if not rep.ok:
            raise PreconditionFailed("map is not an O-operator", rep)
    tinv = t.matrix.inverse()  # raises Singular when not invertible
    induced = induced_tensors(a, m, t)
    d = a.dim
    sc = {}
    for op, tensor in induced.items():
        entries = []
        for i in range(d):
            u = tinv.col(i)
            for j in range(d):
                v = tinv.col(j)
                prod = a.bilinear(tensor, u, v)
                col = t(prod)
                entries.extend((i, j, k, val) for k, val in enumerate(col) if val)
        sc[op] = Tensor3.from_entries((d, d, d), entries)
    out = ClusterAlgebra(Level.of(2 * int(a.level)), d, sc)
    if verify:
        rep = check_axioms(out)
        if not rep.ok:
            raise VerificationFailed("compatible structure fails its axioms", rep)
        back = project(out, _CANONICAL_COARSER[int(out.level)])
        if any(back.sc[op] != a.sc[op] for op in a.level.ops):
            raise VerificationFailed("compatible structure does not project back",
                                     Report(()))
    return out
