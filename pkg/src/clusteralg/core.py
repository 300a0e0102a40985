"""Finite-dimensional algebras whose product splits into 1, 2, 4 or 8 operations.

A level-N algebra carries N bilinear operations on a d-dimensional
rational vector space, given by structure constants
``c[op][i][j][k]`` with ``e_i op e_j = sum_k c[op][i][j][k] e_k``.
The admissible levels and their operation names:

    1  associative        star
    2  dendriform         succ (>), prec (<)
    4  quadri             se (SE), ne (NE), nw (NW), sw (SW)
    8  octo               se1, se2, ne1, ne2, nw1, nw2, sw1, sw2

Summing designated groups of operations yields the coarser structures
(derived operations below), and each level's defining identities make
those sums associative respectively dendriform respectively quadri.
The axiom checker evaluates every defining identity on every basis
triple and reports exact discrepancies; identity labels such as
"3.4.2-1" are stable ids used throughout reports and the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Mapping, Sequence

from .linalg import (DimensionMismatch, Fraction, Matrix, Tensor3, rat,
                     vec_is_zero, vec_sub)


class SymbolInvalidAtLevel(ValueError):
    """A derived-operation symbol that has no defining sum at this level."""


class ProjectionInvalidAtLevel(ValueError):
    """A projection target that does not exist at this level."""


class LevelError(ValueError):
    """Operation applied at a level where it is not defined."""


class Level(IntEnum):
    ASSOC = 1
    DEND = 2
    QUADRI = 4
    OCTO = 8

    @property
    def ops(self) -> tuple[str, ...]:
        return _LEVEL_OPS[int(self)]

    @classmethod
    def of(cls, value: int) -> "Level":
        try:
            return cls(value)
        except ValueError:
            raise LevelError(f"level must be one of 1, 2, 4, 8, got {value!r}") from None


_LEVEL_OPS: dict[int, tuple[str, ...]] = {
    1: ("star",),
    2: ("succ", "prec"),
    4: ("se", "ne", "nw", "sw"),
    8: ("se1", "se2", "ne1", "ne2", "nw1", "nw2", "sw1", "sw2"),
}

# Derived operation symbols: componentwise sums of base operations.
# At level 2 the sum product is star; at level 4 succ/prec are the
# horizontal pair, vee/wedge the vertical pair; at level 8 the suffix-i
# families combine depth (se12...), vertical (succ_i/prec_i), horizontal
# (vee_i/wedge_i) and the two Sigma halves, with gg/ll and bigvee/bigwedge
# the dendriform-level sums.
DERIVED_SYMBOLS: dict[int, dict[str, tuple[str, ...]]] = {
    1: {"star": ("star",)},
    2: {"star": ("succ", "prec")},
    4: {
        "star": ("se", "ne", "nw", "sw"),
        "succ": ("ne", "se"),
        "prec": ("nw", "sw"),
        "vee": ("se", "sw"),
        "wedge": ("ne", "nw"),
    },
    8: {
        "star": ("se1", "se2", "ne1", "ne2", "nw1", "nw2", "sw1", "sw2"),
        "se12": ("se1", "se2"), "ne12": ("ne1", "ne2"),
        "nw12": ("nw1", "nw2"), "sw12": ("sw1", "sw2"),
        "succ1": ("ne1", "se1"), "succ2": ("ne2", "se2"),
        "prec1": ("nw1", "sw1"), "prec2": ("nw2", "sw2"),
        "vee1": ("se1", "sw1"), "vee2": ("se2", "sw2"),
        "wedge1": ("ne1", "nw1"), "wedge2": ("ne2", "nw2"),
        "bigvee": ("se1", "sw1", "se2", "sw2"),
        "bigwedge": ("ne1", "nw1", "ne2", "nw2"),
        "gg": ("ne1", "se1", "ne2", "se2"),
        "ll": ("nw1", "sw1", "nw2", "sw2"),
        "sigma1": ("se1", "ne1", "nw1", "sw1"),
        "sigma2": ("se2", "ne2", "nw2", "sw2"),
    },
}


@dataclass(frozen=True)
class Violation:
    """One failed identity: which identity, at which basis witness, off by what."""
    identity_id: str
    witness: tuple[int, ...]
    discrepancy: tuple[Fraction, ...]


@dataclass(frozen=True)
class Report:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:  # pragma: no cover - guard against misuse
        raise TypeError("use Report.ok, not truthiness")

    @staticmethod
    def passing() -> "Report":
        return Report(())


@dataclass(frozen=True, eq=True)
class ClusterAlgebra:
    """Structure constants for one algebra at level 1, 2, 4 or 8."""

    level: Level
    dim: int
    sc: Mapping[str, Tensor3]

    def __post_init__(self):
        level = Level.of(int(self.level))
        object.__setattr__(self, "level", level)
        names = set(level.ops)
        if set(self.sc) != names:
            raise LevelError(f"level {int(level)} needs tensors {sorted(names)}, "
                             f"got {sorted(self.sc)}")
        d = self.dim
        for op, t in self.sc.items():
            if t.dims != (d, d, d):
                raise DimensionMismatch(f"tensor for {op} has dims {t.dims}, want {(d, d, d)}")

    def op_tensor(self, op: str) -> Tensor3:
        return self.sc[op]

    def basis_product(self, op: str, i: int, j: int) -> tuple[Fraction, ...]:
        """Coordinates of e_i op e_j."""
        return self.sc[op].fibre(i, j)

    def bilinear(self, op_tensor: Tensor3, x: Sequence[Fraction],
                 y: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of x op y for arbitrary coordinate vectors."""
        d = self.dim
        out = [Fraction(0)] * d
        for i, xv in enumerate(x):
            if not xv:
                continue
            for j, yv in enumerate(y):
                if not yv:
                    continue
                c = xv * yv
                for k, v in enumerate(op_tensor.fibre(i, j)):
                    if v:
                        out[k] += c * v
        return tuple(out)


def zero_algebra(level: int, dim: int) -> ClusterAlgebra:
    lv = Level.of(level)
    z = Tensor3.zeros(dim, dim, dim)
    return ClusterAlgebra(lv, dim, {op: z for op in lv.ops})


def algebra_from_entries(level: int, dim: int,
                         entries: Iterable[tuple[str, int, int, int, Fraction]]) -> ClusterAlgebra:
    """Build from a sparse list of (op, i, j, k, value); omitted entries are 0."""
    lv = Level.of(level)
    per_op: dict[str, list[tuple[int, int, int, Fraction]]] = {op: [] for op in lv.ops}
    for op, i, j, k, v in entries:
        if op not in per_op:
            raise LevelError(f"operation {op!r} not defined at level {int(lv)}")
        per_op[op].append((i, j, k, rat(v)))
    sc = {op: Tensor3.from_entries((dim, dim, dim), rows) for op, rows in per_op.items()}
    return ClusterAlgebra(lv, dim, sc)


def algebra_entries(a: ClusterAlgebra) -> list[tuple[str, int, int, int, Fraction]]:
    """Sparse structure-constant listing, deterministically ordered."""
    out = []
    for op in a.level.ops:
        for i, j, k, v in a.sc[op].nonzero():
            out.append((op, i, j, k, v))
    return out


def derived_op(a: ClusterAlgebra, sym: str) -> Tensor3:
    """Structure constants of a base or derived operation symbol."""
    if sym in a.sc:
        return a.sc[sym]
    table = DERIVED_SYMBOLS[int(a.level)]
    if sym not in table:
        raise SymbolInvalidAtLevel(f"symbol {sym!r} is not defined at level {int(a.level)}")
    parts = table[sym]
    acc = a.sc[parts[0]]
    for name in parts[1:]:
        acc = acc + a.sc[name]
    return acc


# Projection targets: which derived symbol feeds each operation of the
# coarser algebra.  Orderings follow the associated-algebra statements;
# in particular the vertical dendriform pair is (vee, wedge) and the
# Sigma dendriform pair is (sigma2, sigma1).
PROJECTIONS: dict[tuple[int, str], dict[str, str]] = {
    (2, "Assoc"): {"star": "star"},
    (4, "HorizDend"): {"succ": "succ", "prec": "prec"},
    (4, "VertDend"): {"succ": "vee", "prec": "wedge"},
    (4, "Assoc"): {"star": "star"},
    (8, "DepthQuadri"): {"se": "se12", "ne": "ne12", "nw": "nw12", "sw": "sw12"},
    (8, "VertQuadri"): {"se": "succ2", "ne": "succ1", "nw": "prec1", "sw": "prec2"},
    (8, "HorizQuadri"): {"se": "vee2", "ne": "wedge2", "nw": "wedge1", "sw": "vee1"},
    (8, "VertDend"): {"succ": "bigvee", "prec": "bigwedge"},
    (8, "HorizDend"): {"succ": "gg", "prec": "ll"},
    (8, "SigmaDend"): {"succ": "sigma2", "prec": "sigma1"},
    (8, "Assoc"): {"star": "star"},
}

_TARGET_LEVEL = {"Assoc": 1, "HorizDend": 2, "VertDend": 2, "SigmaDend": 2,
                 "DepthQuadri": 4, "VertQuadri": 4, "HorizQuadri": 4}


def projection_targets(level: int) -> tuple[str, ...]:
    return tuple(t for (lv, t) in PROJECTIONS if lv == int(level))


def project(a: ClusterAlgebra, target: str) -> ClusterAlgebra:
    """The coarser algebra obtained by summing groups of operations."""
    key = (int(a.level), target)
    if key not in PROJECTIONS:
        raise ProjectionInvalidAtLevel(
            f"no projection {target!r} from level {int(a.level)}")
    sc = {op: derived_op(a, sym) for op, sym in PROJECTIONS[key].items()}
    return ClusterAlgebra(Level.of(_TARGET_LEVEL[target]), a.dim, sc)


def mult_operator(a: ClusterAlgebra, op: str, side: str, i: int) -> Matrix:
    """Matrix of the left/right multiplication by e_i for a base or derived op.

    Left: column j holds e_i op e_j.  Right: column j holds e_j op e_i.
    """
    if not 0 <= i < a.dim:
        raise IndexError(f"basis index {i} out of range for dim {a.dim}")
    t = derived_op(a, op)
    d = a.dim
    if side == "left":
        return Matrix([[t.get(i, j, k) for j in range(d)] for k in range(d)])
    if side == "right":
        return Matrix([[t.get(j, i, k) for j in range(d)] for k in range(d)])
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def opposite(a: ClusterAlgebra) -> ClusterAlgebra:
    """The opposite algebra c'[i][j][k] = c[j][i][k] (level 1 only)."""
    if a.level != Level.ASSOC:
        raise LevelError("opposite algebra is defined at level 1 only")
    d = a.dim
    t = a.sc["star"]
    opp = Tensor3.build((d, d, d), lambda i, j, k: t.get(j, i, k))
    return ClusterAlgebra(Level.ASSOC, d, {"star": opp})


def opposite_check(a: ClusterAlgebra) -> Report:
    """Axiom report of the opposite algebra."""
    return check_axioms(opposite(a))


# ---------------------------------------------------------------------------
# axiom tables
#
# Each identity is a pair of single terms.  ("L", outer, inner) denotes
# (x inner y) outer z and ("R", outer, inner) denotes x outer (y inner z);
# both sides are evaluated on every basis triple (x, y, z) = (e_i, e_j, e_k).

_Term = tuple[str, str, str]

AXIOMS: dict[int, tuple[tuple[str, _Term, _Term], ...]] = {
    1: (
        ("assoc", ("L", "star", "star"), ("R", "star", "star")),
    ),
    2: (
        ("2.1.5-1", ("L", "prec", "prec"), ("R", "prec", "star")),
        ("2.1.5-2", ("L", "prec", "succ"), ("R", "succ", "prec")),
        ("2.1.5-3", ("L", "succ", "star"), ("R", "succ", "succ")),
    ),
    4: (
        ("3.4.1-1", ("L", "nw", "nw"), ("R", "nw", "star")),
        ("3.4.1-2", ("L", "nw", "ne"), ("R", "ne", "prec")),
        ("3.4.1-3", ("L", "ne", "wedge"), ("R", "ne", "succ")),
        ("3.4.2-1", ("L", "nw", "sw"), ("R", "sw", "wedge")),
        ("3.4.2-2", ("L", "nw", "se"), ("R", "se", "nw")),
        ("3.4.2-3", ("L", "ne", "vee"), ("R", "se", "ne")),
        ("3.4.3-1", ("L", "sw", "prec"), ("R", "sw", "vee")),
        ("3.4.3-2", ("L", "sw", "succ"), ("R", "se", "sw")),
        ("3.4.3-3", ("L", "se", "star"), ("R", "se", "se")),
    ),
    8: (
        ("4.4.1-1", ("L", "nw1", "nw1"), ("R", "nw1", "star")),
        ("4.4.1-2", ("L", "nw1", "ne1"), ("R", "ne1", "ll")),
        ("4.4.1-3", ("L", "ne1", "wedge1"), ("R", "ne1", "gg")),
        ("4.4.2-1", ("L", "nw1", "sw1"), ("R", "sw1", "bigwedge")),
        ("4.4.2-2", ("L", "nw1", "se1"), ("R", "se1", "nw12")),
        ("4.4.2-3", ("L", "ne1", "vee1"), ("R", "se1", "ne12")),
        ("4.4.3-1", ("L", "sw1", "prec1"), ("R", "sw1", "bigvee")),
        ("4.4.3-2", ("L", "sw1", "succ1"), ("R", "se1", "sw12")),
        ("4.4.3-3", ("L", "se1", "sigma1"), ("R", "se1", "se12")),
        ("4.4.4-1", ("L", "nw1", "nw2"), ("R", "nw2", "sigma1")),
        ("4.4.4-2", ("L", "nw1", "ne2"), ("R", "ne2", "prec1")),
        ("4.4.4-3", ("L", "ne1", "wedge2"), ("R", "ne2", "succ1")),
        ("4.4.5-1", ("L", "nw1", "sw2"), ("R", "sw2", "wedge1")),
        ("4.4.5-2", ("L", "nw1", "se2"), ("R", "se2", "nw1")),
        ("4.4.5-3", ("L", "ne1", "vee2"), ("R", "se2", "ne1")),
        ("4.4.6-1", ("L", "sw1", "prec2"), ("R", "sw2", "vee1")),
        ("4.4.6-2", ("L", "sw1", "succ2"), ("R", "se2", "sw1")),
        ("4.4.6-3", ("L", "se1", "sigma2"), ("R", "se2", "se1")),
        ("4.4.7-1", ("L", "nw2", "nw12"), ("R", "nw2", "sigma2")),
        ("4.4.7-2", ("L", "nw2", "ne12"), ("R", "ne2", "prec2")),
        ("4.4.7-3", ("L", "ne2", "bigwedge"), ("R", "ne2", "succ2")),
        ("4.4.8-1", ("L", "nw2", "sw12"), ("R", "sw2", "wedge2")),
        ("4.4.8-2", ("L", "nw2", "se12"), ("R", "se2", "nw2")),
        ("4.4.8-3", ("L", "ne2", "bigvee"), ("R", "se2", "ne2")),
        ("4.4.9-1", ("L", "sw2", "ll"), ("R", "sw2", "vee2")),
        ("4.4.9-2", ("L", "sw2", "gg"), ("R", "se2", "sw2")),
        ("4.4.9-3", ("L", "se2", "star"), ("R", "se2", "se2")),
    ),
}


def _term_symbols(level: int) -> set[str]:
    syms = set()
    for _, lhs, rhs in AXIOMS[level]:
        syms.update((lhs[1], lhs[2], rhs[1], rhs[2]))
    return syms


def _eval_term(term: _Term, dops: Mapping[str, Tensor3], d: int,
               i: int, j: int, k: int) -> tuple[Fraction, ...]:
    shape, outer, inner = term
    t_out, t_in = dops[outer], dops[inner]
    acc = [Fraction(0)] * d
    if shape == "L":  # (e_i inner e_j) outer e_k
        for m, c in enumerate(t_in.fibre(i, j)):
            if c:
                for idx, v in enumerate(t_out.fibre(m, k)):
                    if v:
                        acc[idx] += c * v
    else:  # e_i outer (e_j inner e_k)
        for m, c in enumerate(t_in.fibre(j, k)):
            if c:
                for idx, v in enumerate(t_out.fibre(i, m)):
                    if v:
                        acc[idx] += c * v
    return tuple(acc)


def check_axioms(a: ClusterAlgebra) -> Report:
    """Evaluate every defining identity of a's level on all basis triples."""
    d = a.dim
    level = int(a.level)
    dops = {sym: derived_op(a, sym) for sym in _term_symbols(level)}
    violations = []
    for ident, lhs, rhs in AXIOMS[level]:
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    diff = vec_sub(_eval_term(lhs, dops, d, i, j, k),
                                   _eval_term(rhs, dops, d, i, j, k))
                    if not vec_is_zero(diff):
                        violations.append(Violation(ident, (i, j, k), diff))
    return Report(tuple(violations))
