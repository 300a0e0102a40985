"""Bimodules of cluster algebras at levels 1, 2 and 4.

A bimodule assigns to every operation of the algebra a left action
``l_op: A -> gl(V)`` and a right action ``r_op: A -> gl(V)`` subject to
the module analogues of the algebra's defining identities, and it is a
bimodule exactly when the semidirect sum on A (+) V is again an algebra
of the same kind.  No level-8 bimodule is implemented: only the recipe
exists for it, not a definition, so asking for one is an error.

Action matrices act on column coordinates of V: ``lmap[op][i]`` is the
matrix of l_op(e_i), and similarly for ``rmap``.  The dual bimodule
lives on V* with transposed matrices (the matrix of a dualised map is
the transpose of the original, fixed by the standard pairing), with the
signed combinations listed in ``dual_bimodule``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import (ClusterAlgebra, DERIVED_SYMBOLS, Level, LevelError,
                   Report, Violation, derived_op, mult_operator, project)
from .linalg import (DimensionMismatch, Fraction, Matrix, Tensor3, rat)


class PreconditionFailed(ValueError):
    """An operation's mathematical precondition failed; carries the report."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Bimodule:
    level: Level
    algebra_dim: int
    module_dim: int
    lmap: Mapping[str, tuple[Matrix, ...]]
    rmap: Mapping[str, tuple[Matrix, ...]]

    def __post_init__(self):
        level = Level.of(int(self.level))
        object.__setattr__(self, "level", level)
        if level == Level.OCTO:
            raise LevelError("no level-8 bimodule is defined")
        names = set(level.ops)
        if set(self.lmap) != names or set(self.rmap) != names:
            raise LevelError(f"bimodule needs maps for {sorted(names)}")
        d, m = self.algebra_dim, self.module_dim
        for maps in (self.lmap, self.rmap):
            for op, mats in maps.items():
                if len(mats) != d:
                    raise DimensionMismatch(f"{op}: need one matrix per basis vector")
                for mat in mats:
                    if mat.shape != (m, m):
                        raise DimensionMismatch(f"{op}: matrices must be {m}x{m}")


def zero_bimodule(level: int, algebra_dim: int, module_dim: int) -> Bimodule:
    lv = Level.of(level)
    z = tuple(Matrix.zeros(module_dim, module_dim) for _ in range(algebra_dim))
    return Bimodule(lv, algebra_dim, module_dim,
                    {op: z for op in lv.ops}, {op: z for op in lv.ops})


def bimodule_from_entries(level: int, algebra_dim: int, module_dim: int,
                          entries: Iterable[tuple[str, str, int, int, int, Fraction]]
                          ) -> Bimodule:
    """Build from sparse (side, op, i, row, col, value) rows; side is "l" or "r"."""
    lv = Level.of(level)
    buf: dict[tuple[str, str], list[list[list[Fraction]]]] = {}
    for side in ("l", "r"):
        for op in lv.ops:
            buf[(side, op)] = [[[Fraction(0)] * module_dim for _ in range(module_dim)]
                               for _ in range(algebra_dim)]
    for side, op, i, row, col, v in entries:
        if (side, op) not in buf:
            raise LevelError(f"bad bimodule entry side/op: {side!r}/{op!r}")
        buf[(side, op)][i][row][col] = rat(v)
    lmap = {op: tuple(Matrix(buf[("l", op)][i]) for i in range(algebra_dim))
            for op in lv.ops}
    rmap = {op: tuple(Matrix(buf[("r", op)][i]) for i in range(algebra_dim))
            for op in lv.ops}
    return Bimodule(lv, algebra_dim, module_dim, lmap, rmap)


def bimodule_entries(m: Bimodule) -> list[tuple[str, str, int, int, int, Fraction]]:
    out = []
    for side, maps in (("l", m.lmap), ("r", m.rmap)):
        for op in m.level.ops:
            for i, mat in enumerate(maps[op]):
                for r, c, v in mat.nonzero():
                    out.append((side, op, i, r, c, v))
    return out


# ---------------------------------------------------------------------------
# identity tables
#
# Terms are signed products of matrices.  ("m", side, sym, var) is the
# (derived) action matrix of the basis vector bound to var; ("p", side,
# sym, prod, varA, varB) is the action map applied to the algebra product
# e_varA prod e_varB, i.e. sum_k c[prod][a][b][k] * map[sym][k].  Each
# identity is checked as an m x m matrix equation for every pair
# (x, y) = (e_i, e_j).

_BIMODULE_IDENTITIES: dict[int, tuple[tuple[str, tuple, tuple], ...]] = {
    1: (
        ("2.1.1-1",
         ((1, (("p", "l", "star", "star", "x", "y"),)),),
         ((1, (("m", "l", "star", "x"), ("m", "l", "star", "y"))),)),
        ("2.1.1-2",
         ((1, (("p", "r", "star", "star", "x", "y"),)),),
         ((1, (("m", "r", "star", "y"), ("m", "r", "star", "x"))),)),
        ("2.1.1-3",
         ((1, (("m", "l", "star", "x"), ("m", "r", "star", "y"))),),
         ((1, (("m", "r", "star", "y"), ("m", "l", "star", "x"))),)),
    ),
    2: (
        ("3.1.1",
         ((1, (("p", "l", "prec", "prec", "x", "y"),)),),
         ((1, (("m", "l", "prec", "x"), ("m", "l", "prec", "y"))),
          (1, (("m", "l", "prec", "x"), ("m", "l", "succ", "y"))))),
        ("3.1.2",
         ((1, (("m", "r", "prec", "x"), ("m", "l", "prec", "y"))),),
         ((1, (("m", "l", "prec", "y"), ("m", "r", "prec", "x"))),
          (1, (("m", "l", "prec", "y"), ("m", "r", "succ", "x"))))),
        ("3.1.3",
         ((1, (("m", "r", "prec", "x"), ("m", "r", "prec", "y"))),),
         ((1, (("p", "r", "prec", "prec", "y", "x"),)),
          (1, (("p", "r", "prec", "succ", "y", "x"),)))),
        ("3.1.4",
         ((1, (("p", "l", "prec", "succ", "x", "y"),)),),
         ((1, (("m", "l", "succ", "x"), ("m", "l", "prec", "y"))),)),
        ("3.1.5",
         ((1, (("m", "r", "prec", "x"), ("m", "l", "succ", "y"))),),
         ((1, (("m", "l", "succ", "y"), ("m", "r", "prec", "x"))),)),
        ("3.1.6",
         ((1, (("m", "r", "prec", "x"), ("m", "r", "succ", "y"))),),
         ((1, (("p", "r", "succ", "prec", "y", "x"),)),)),
        ("3.1.7",
         ((1, (("p", "l", "succ", "prec", "x", "y"),)),
          (1, (("p", "l", "succ", "succ", "x", "y"),))),
         ((1, (("m", "l", "succ", "x"), ("m", "l", "succ", "y"))),)),
        ("3.1.8",
         ((1, (("m", "r", "succ", "x"), ("m", "l", "prec", "y"))),
          (1, (("m", "r", "succ", "x"), ("m", "l", "succ", "y")))),
         ((1, (("m", "l", "succ", "y"), ("m", "r", "succ", "x"))),)),
        ("3.1.9",
         ((1, (("m", "r", "succ", "x"), ("m", "r", "succ", "y"))),
          (1, (("m", "r", "succ", "x"), ("m", "r", "prec", "y")))),
         ((1, (("p", "r", "succ", "succ", "y", "x"),)),)),
    ),
    4: tuple(
        (ident,
         ((1, lhs),),
         ((1, rhs),))
        for ident, lhs, rhs in (
            ("4.1.1-1", (("p", "l", "nw", "nw", "x", "y"),),
             (("m", "l", "nw", "x"), ("m", "l", "star", "y"))),
            ("4.1.1-2", (("m", "r", "nw", "y"), ("m", "l", "nw", "x")),
             (("m", "l", "nw", "x"), ("m", "r", "star", "y"))),
            ("4.1.1-3", (("m", "r", "nw", "y"), ("m", "r", "nw", "x")),
             (("p", "r", "nw", "star", "x", "y"),)),
            ("4.1.2-1", (("p", "l", "nw", "sw", "x", "y"),),
             (("m", "l", "sw", "x"), ("m", "l", "wedge", "y"))),
            ("4.1.2-2", (("m", "r", "nw", "y"), ("m", "l", "sw", "x")),
             (("m", "l", "sw", "x"), ("m", "r", "wedge", "y"))),
            ("4.1.2-3", (("m", "r", "nw", "y"), ("m", "r", "sw", "x")),
             (("p", "r", "sw", "wedge", "x", "y"),)),
            ("4.1.3-1", (("p", "l", "sw", "prec", "x", "y"),),
             (("m", "l", "sw", "x"), ("m", "l", "vee", "y"))),
            ("4.1.3-2", (("m", "r", "sw", "y"), ("m", "l", "prec", "x")),
             (("m", "l", "sw", "x"), ("m", "r", "vee", "y"))),
            ("4.1.3-3", (("m", "r", "sw", "y"), ("m", "r", "prec", "x")),
             (("p", "r", "sw", "vee", "x", "y"),)),
            ("4.1.4-1", (("p", "l", "nw", "ne", "x", "y"),),
             (("m", "l", "ne", "x"), ("m", "l", "prec", "y"))),
            ("4.1.4-2", (("m", "r", "nw", "y"), ("m", "l", "ne", "x")),
             (("m", "l", "ne", "x"), ("m", "r", "prec", "y"))),
            ("4.1.4-3", (("m", "r", "nw", "y"), ("m", "r", "ne", "x")),
             (("p", "r", "ne", "prec", "x", "y"),)),
            ("4.1.5-1", (("p", "l", "nw", "se", "x", "y"),),
             (("m", "l", "se", "x"), ("m", "l", "nw", "y"))),
            ("4.1.5-2", (("m", "r", "nw", "y"), ("m", "l", "se", "x")),
             (("m", "l", "se", "x"), ("m", "r", "nw", "y"))),
            ("4.1.5-3", (("m", "r", "nw", "y"), ("m", "r", "se", "x")),
             (("p", "r", "se", "nw", "x", "y"),)),
            ("4.1.6-1", (("p", "l", "sw", "succ", "x", "y"),),
             (("m", "l", "se", "x"), ("m", "l", "sw", "y"))),
            ("4.1.6-2", (("m", "r", "sw", "y"), ("m", "l", "succ", "x")),
             (("m", "l", "se", "x"), ("m", "r", "sw", "y"))),
            ("4.1.6-3", (("m", "r", "sw", "y"), ("m", "r", "succ", "x")),
             (("p", "r", "se", "sw", "x", "y"),)),
            ("4.1.7-1", (("p", "l", "ne", "wedge", "x", "y"),),
             (("m", "l", "ne", "x"), ("m", "l", "succ", "y"))),
            ("4.1.7-2", (("m", "r", "ne", "y"), ("m", "l", "wedge", "x")),
             (("m", "l", "ne", "x"), ("m", "r", "succ", "y"))),
            ("4.1.7-3", (("m", "r", "ne", "y"), ("m", "r", "wedge", "x")),
             (("p", "r", "ne", "succ", "x", "y"),)),
            ("4.1.8-1", (("p", "l", "ne", "vee", "x", "y"),),
             (("m", "l", "se", "x"), ("m", "l", "ne", "y"))),
            ("4.1.8-2", (("m", "r", "ne", "y"), ("m", "l", "vee", "x")),
             (("m", "l", "se", "x"), ("m", "r", "ne", "y"))),
            ("4.1.8-3", (("m", "r", "ne", "y"), ("m", "r", "vee", "x")),
             (("p", "r", "se", "ne", "x", "y"),)),
            ("4.1.9-1", (("p", "l", "se", "star", "x", "y"),),
             (("m", "l", "se", "x"), ("m", "l", "se", "y"))),
            ("4.1.9-2", (("m", "r", "se", "y"), ("m", "l", "star", "x")),
             (("m", "l", "se", "x"), ("m", "r", "se", "y"))),
            ("4.1.9-3", (("m", "r", "se", "y"), ("m", "r", "star", "x")),
             (("p", "r", "se", "se", "x", "y"),)),
        )
    ),
}


def _derived_maps(m: Bimodule) -> dict[tuple[str, str], tuple[Matrix, ...]]:
    """Per-call cache of base and summed action-matrix families."""
    table = DERIVED_SYMBOLS[int(m.level)]
    out: dict[tuple[str, str], tuple[Matrix, ...]] = {}
    for side, maps in (("l", m.lmap), ("r", m.rmap)):
        for op in m.level.ops:
            out[(side, op)] = tuple(maps[op])
        for sym, parts in table.items():
            mats = []
            for i in range(m.algebra_dim):
                acc = maps[parts[0]][i]
                for name in parts[1:]:
                    acc = acc + maps[name][i]
                mats.append(acc)
            out[(side, sym)] = tuple(mats)
    return out


def _eval_factor(factor, a: ClusterAlgebra, dmaps, dops, i: int, j: int,
                 mdim: int) -> Matrix:
    idx = {"x": i, "y": j}
    if factor[0] == "m":
        _, side, sym, var = factor
        return dmaps[(side, sym)][idx[var]]
    _, side, sym, prod, va, vb = factor
    coeffs = dops[prod].fibre(idx[va], idx[vb])
    acc = Matrix.zeros(mdim, mdim)
    for k, c in enumerate(coeffs):
        if c:
            acc = acc + dmaps[(side, sym)][k].scale(c)
    return acc


def check_bimodule(a: ClusterAlgebra, m: Bimodule) -> Report:
    """Check every bimodule identity as an exact matrix equation.

    Violations carry witness (i, j, c): the basis pair and the first
    module basis index whose image column differs; the discrepancy is
    that column of lhs - rhs.
    """
    if int(a.level) != int(m.level):
        raise LevelError(f"algebra level {int(a.level)} vs bimodule level {int(m.level)}")
    if a.dim != m.algebra_dim:
        raise DimensionMismatch("algebra dim does not match bimodule")
    dmaps = _derived_maps(m)
    syms = {sym for sym in DERIVED_SYMBOLS[int(a.level)]} | set(a.level.ops)
    dops = {sym: derived_op(a, sym) for sym in syms}
    mdim = m.module_dim
    violations = []
    for ident, lhs, rhs in _BIMODULE_IDENTITIES[int(a.level)]:
        for i in range(a.dim):
            for j in range(a.dim):
                acc = Matrix.zeros(mdim, mdim)
                for sign, factors in lhs:
                    term = _eval_factor(factors[0], a, dmaps, dops, i, j, mdim)
                    for f in factors[1:]:
                        term = term @ _eval_factor(f, a, dmaps, dops, i, j, mdim)
                    acc = acc + term.scale(sign)
                for sign, factors in rhs:
                    term = _eval_factor(factors[0], a, dmaps, dops, i, j, mdim)
                    for f in factors[1:]:
                        term = term @ _eval_factor(f, a, dmaps, dops, i, j, mdim)
                    acc = acc - term.scale(sign)
                if not acc.is_zero():
                    col = min(c for _, c, _ in acc.nonzero())
                    violations.append(Violation(ident, (i, j, col), acc.col(col)))
    return Report(tuple(violations))


def regular_bimodule(a: ClusterAlgebra) -> Bimodule:
    """The algebra acting on itself by its multiplication operators."""
    if a.level == Level.OCTO:
        raise LevelError("no regular bimodule at level 8")
    d = a.dim
    lmap = {op: tuple(mult_operator(a, op, "left", i) for i in range(d))
            for op in a.level.ops}
    rmap = {op: tuple(mult_operator(a, op, "right", i) for i in range(d))
            for op in a.level.ops}
    return Bimodule(a.level, d, d, lmap, rmap)


def _t(mats: Sequence[Matrix]) -> tuple[Matrix, ...]:
    return tuple(m.transpose() for m in mats)


def _tsum(*families: Sequence[Matrix]) -> tuple[Matrix, ...]:
    out = []
    for mats in zip(*families):
        acc = mats[0]
        for m in mats[1:]:
            acc = acc + m
        out.append(acc.transpose())
    return tuple(out)


def _tneg(mats: Sequence[Matrix]) -> tuple[Matrix, ...]:
    return tuple((-m).transpose() for m in mats)


def _tnegsum(*families: Sequence[Matrix]) -> tuple[Matrix, ...]:
    return tuple((-m) for m in _tsum(*families))


def dual_bimodule(a: ClusterAlgebra, m: Bimodule) -> Bimodule:
    """The signed, transposed bimodule on V*.

    level 1: (l', r') = (r*, l*)
    level 2: (l'_succ, r'_succ, l'_prec, r'_prec)
             = (r_succ* + r_prec*, -l_prec*, -r_succ*, l_succ* + l_prec*)
    level 4, slots (l_se, r_se, l_ne, r_ne, l_nw, r_nw, l_sw, r_sw):
             (r_star*, l_nw*, -r_vee*, -l_prec*, r_se*, l_star*, -r_succ*, -l_wedge*)
    """
    if int(a.level) != int(m.level):
        raise LevelError("algebra and bimodule levels differ")
    lv = int(m.level)
    L, R = m.lmap, m.rmap
    if lv == 1:
        lmap = {"star": _t(R["star"])}
        rmap = {"star": _t(L["star"])}
    elif lv == 2:
        lmap = {"succ": _tsum(R["succ"], R["prec"]), "prec": _tneg(R["succ"])}
        rmap = {"succ": _tneg(L["prec"]), "prec": _tsum(L["succ"], L["prec"])}
    elif lv == 4:
        lmap = {
            "se": _tsum(R["se"], R["ne"], R["nw"], R["sw"]),
            "ne": _tnegsum(R["se"], R["sw"]),
            "nw": _t(R["se"]),
            "sw": _tnegsum(R["ne"], R["se"]),
        }
        rmap = {
            "se": _t(L["nw"]),
            "ne": _tnegsum(L["nw"], L["sw"]),
            "nw": _tsum(L["se"], L["ne"], L["nw"], L["sw"]),
            "sw": _tnegsum(L["ne"], L["nw"]),
        }
    else:  # pragma: no cover - Bimodule refuses level 8 already
        raise LevelError("no level-8 bimodule")
    return Bimodule(m.level, m.algebra_dim, m.module_dim, lmap, rmap)


# ---------------------------------------------------------------------------
# restriction and embedding rules
#
# Same-level rules forget down to a coarser algebra; embed rules lift a
# coarser bimodule to the ambient finer algebra `a` by padding with zero
# maps.  For embed rules, m must be a bimodule of the corresponding
# projection of a.

_ZERO_FAM = "0"


def _rule_table(level: int) -> dict[str, tuple[str | None, tuple]]:
    if level == 2:
        return {
            # -> bimodules of the associated associative algebra
            "assoc-outer": ("Assoc", (("l", "succ"), ("r", "prec"))),
            "assoc-sum": ("Assoc", (("l", "succ+prec"), ("r", "succ+prec"))),
            # -> bimodules of a itself, zero-padded
            "outer-zero": (None, (("l", "succ"), _ZERO_FAM, _ZERO_FAM, ("r", "prec"))),
            "sum-zero": (None, (("l", "succ+prec"), _ZERO_FAM, _ZERO_FAM,
                                ("r", "succ+prec"))),
            # embed a level-1 bimodule of the associated algebra into a
            "embed-assoc": (None, (("l", "star"), _ZERO_FAM, _ZERO_FAM, ("r", "star"))),
        }
    if level == 4:
        return {
            "horiz-outer": ("HorizDend", (("l", "se"), ("r", "ne"),
                                          ("l", "sw"), ("r", "nw"))),
            "horiz-sum": ("HorizDend", (("l", "ne+se"), ("r", "ne+se"),
                                        ("l", "nw+sw"), ("r", "nw+sw"))),
            "assoc-outer": ("Assoc", (("l", "se"), ("r", "nw"))),
            "assoc-horiz": ("Assoc", (("l", "ne+se"), ("r", "nw+sw"))),
            "assoc-vert": ("Assoc", (("l", "se+sw"), ("r", "ne+nw"))),
            "assoc-sum": ("Assoc", (("l", "se+ne+nw+sw"), ("r", "se+ne+nw+sw"))),
            "outer-zero": (None, (("l", "se"), _ZERO_FAM, _ZERO_FAM, ("r", "ne"),
                                  _ZERO_FAM, ("r", "nw"), ("l", "sw"), _ZERO_FAM)),
            "sum-zero": (None, (("l", "ne+se"), _ZERO_FAM, _ZERO_FAM, ("r", "ne+se"),
                                _ZERO_FAM, ("r", "nw+sw"), ("l", "nw+sw"), _ZERO_FAM)),
            # embed a level-2 bimodule of the horizontal dendriform algebra
            "embed-dend": (None, (("l", "succ"), _ZERO_FAM, _ZERO_FAM, ("r", "succ"),
                                  _ZERO_FAM, ("r", "prec"), ("l", "prec"), _ZERO_FAM)),
            # embed a level-1 bimodule of the associated associative algebra
            "embed-assoc": (None, (("l", "star"), _ZERO_FAM, _ZERO_FAM, _ZERO_FAM,
                                   _ZERO_FAM, ("r", "star"), _ZERO_FAM, _ZERO_FAM)),
        }
    raise LevelError(f"no restriction rules at level {level}")


def restriction_rules(level: int) -> tuple[str, ...]:
    return tuple(_rule_table(level))


def restrict_bimodule(a: ClusterAlgebra, m: Bimodule,
                      rule: str) -> tuple[ClusterAlgebra, Bimodule]:
    """Apply a named restriction or embedding rule.

    Restriction rules consume a bimodule of a and return (projection of
    a, coarser bimodule); embed-* rules consume a bimodule of the stated
    projection of a and return (a, zero-padded finer bimodule).
    """
    table = _rule_table(int(a.level))
    if rule not in table:
        raise LevelError(f"rule {rule!r} is not valid at level {int(a.level)}")
    target, slots = table[rule]
    want = {"embed-assoc": 1, "embed-dend": 2}.get(rule, int(a.level))
    if int(m.level) != want:
        raise LevelError(f"rule {rule!r} expects a level-{want} bimodule")
    if target is None:
        out_alg, out_level = a, a.level
    else:
        out_alg = project(a, target)
        out_level = out_alg.level
    d, md = m.algebra_dim, m.module_dim
    zero = tuple(Matrix.zeros(md, md) for _ in range(d))

    def family(spec) -> tuple[Matrix, ...]:
        if spec == _ZERO_FAM:
            return zero
        side, ops = spec
        maps = m.lmap if side == "l" else m.rmap
        parts = ops.split("+")
        out = []
        for i in range(d):
            acc = maps[parts[0]][i]
            for name in parts[1:]:
                acc = acc + maps[name][i]
            out.append(acc)
        return tuple(out)

    fams = [family(spec) for spec in slots]
    ops = out_level.ops
    lmap = {op: fams[2 * k] for k, op in enumerate(ops)}
    rmap = {op: fams[2 * k + 1] for k, op in enumerate(ops)}
    return out_alg, Bimodule(out_level, d, md, lmap, rmap)


def semidirect_sum(a: ClusterAlgebra, m: Bimodule, check: bool = True) -> ClusterAlgebra:
    """Algebra structure on A (+) V: A-block products from a, cross
    products from the actions, V.V = 0.

    With check=True the bimodule identities are verified first and a
    failure raises PreconditionFailed carrying the report.
    """
    if int(a.level) != int(m.level) or a.dim != m.algebra_dim:
        raise DimensionMismatch("algebra and bimodule do not match")
    if check:
        rep = check_bimodule(a, m)
        if not rep.ok:
            raise PreconditionFailed("map family is not a bimodule", rep)
    d, md = a.dim, m.module_dim
    n = d + md
    sc = {}
    for op in a.level.ops:
        entries = []
        for i, j, k, v in a.sc[op].nonzero():
            entries.append((i, j, k, v))
        for i in range(d):
            for r, c, v in m.lmap[op][i].nonzero():
                entries.append((i, d + c, d + r, v))
            for r, c, v in m.rmap[op][i].nonzero():
                entries.append((d + c, i, d + r, v))
        sc[op] = Tensor3.from_entries((n, n, n), entries)
    return ClusterAlgebra(a.level, n, sc)


def octo_depth_bimodule(a: ClusterAlgebra) -> tuple[ClusterAlgebra, Bimodule]:
    """The depth quadri-algebra of a level-8 algebra together with the
    canonical action of it on the underlying space: left actions by the
    index-2 operations, right actions by the index-1 operations.

    An 8-operation algebra is exactly a depth quadri-algebra plus this
    bimodule, which is what stands in for a regular bimodule at level 8.
    """
    if a.level != Level.OCTO:
        raise LevelError("depth action bimodule needs a level-8 algebra")
    quadri = project(a, "DepthQuadri")
    d = a.dim
    lmap = {op: tuple(mult_operator(a, op + "2", "left", i) for i in range(d))
            for op in Level.QUADRI.ops}
    rmap = {op: tuple(mult_operator(a, op + "1", "right", i) for i in range(d))
            for op in Level.QUADRI.ops}
    return quadri, Bimodule(Level.QUADRI, d, d, lmap, rmap)


def apply_action(m: Bimodule, side: str, op: str, xvec: Sequence[Fraction]) -> Matrix:
    """Action matrix of an arbitrary algebra element x = sum x_i e_i."""
    maps = m.lmap[op] if side == "l" else m.rmap[op]
    acc = Matrix.zeros(m.module_dim, m.module_dim)
    for i, c in enumerate(xvec):
        if c:
            acc = acc + maps[i].scale(c)
    return acc
