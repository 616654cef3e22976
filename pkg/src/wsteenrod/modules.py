"""Bidegree-wise graded left modules over the motivic Steenrod algebra.

A module exposes per-bidegree dimensions with stable basis labels and the
left action as matrices; everything is assembled from exact bit-packed
linear algebra.  Quotients by exterior subalgebras are computed per
bidegree as cokernels of right multiplication, never from closed-form
monomial combinatorics, so the rank tests in the suite certify the bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .gf2 import BitMatrix, BitVector, Subspace, rank
from .grammar import format_monomial_steenrod
from .milnor import (
    BiDegree,
    MilnorAlgebra,
    SteenrodElement,
    ZERO_DEGREE,
    bidegree_basis,
    xi_degree,
)


class InvariantViolation(AssertionError):
    """A machine-checked structural claim failed; carries witnesses."""

    def __init__(self, message: str, witnesses=None):
        super().__init__(message)
        self.witnesses = witnesses or []


def _single_pt_index(a: SteenrodElement) -> int | None:
    """If a is the basis functional P_t for some t, return t."""
    if a.bits == 0 or a.bits & (a.bits - 1):
        return None
    (m,) = a.dual_monomials()
    if m.eps or sum(m.r) != 1 or 1 not in m.r:
        return None
    return m.r.index(1) + 1


class GradedModule:
    """Contract: dims per bidegree, labelled bases, left action matrices."""

    algebra: MilnorAlgebra
    name: str = "module"

    @property
    def window(self) -> int:
        return self.algebra.max_stem

    def dim(self, d: BiDegree) -> int:
        raise NotImplementedError

    def label(self, d: BiDegree, i: int) -> str:
        raise NotImplementedError

    def op_matrix(self, a: SteenrodElement, d: BiDegree) -> BitMatrix:
        """Row i is act(a, e_i) in the basis of d + |a|."""
        raise NotImplementedError

    def act(self, a: SteenrodElement, d: BiDegree, v: BitVector) -> BitVector:
        return self.op_matrix(a, d).vec_mul(v)

    def generator_action_matrix(self, d1: BiDegree, d2: BiDegree, bits: int) -> BitMatrix:
        """Row i is act(x_i, v) over the algebra basis x_i at d1, v fixed at d2."""
        v = BitVector(self.dim(BiDegree(*d2)), bits)
        rows = []
        for a in self.algebra.basis_functionals(d1):
            rows.append(self.op_matrix(a, d2).vec_mul(v).bits)
        return BitMatrix(self.dim(BiDegree(*d1) + BiDegree(*d2)), rows)

    def support(self, max_stem: int | None = None) -> Iterator[BiDegree]:
        top = self.window if max_stem is None else min(max_stem, self.window)
        for s in range(top + 1):
            for w in range(s // 2 + 1):
                d = BiDegree(s, w)
                if self.dim(d):
                    yield d

    def dims_table(self, max_stem: int | None = None) -> dict[BiDegree, int]:
        return {d: self.dim(d) for d in self.support(max_stem)}


class AlgebraModule(GradedModule):
    """The algebra as a left module over itself."""

    def __init__(self, algebra: MilnorAlgebra):
        self.algebra = algebra
        self.name = "A"

    def dim(self, d: BiDegree) -> int:
        return self.algebra.dim(d)

    def label(self, d: BiDegree, i: int) -> str:
        return format_monomial_steenrod(bidegree_basis(BiDegree(*d))[i])

    def op_matrix(self, a: SteenrodElement, d: BiDegree) -> BitMatrix:
        t = _single_pt_index(a)
        if t is not None:
            return self.algebra.left_pt_matrix(t, d)
        return self.algebra.left_mult_matrix(a, d)

    def generator_action_matrix(self, d1: BiDegree, d2: BiDegree, bits: int) -> BitMatrix:
        b = SteenrodElement(BiDegree(*d2), bits)
        return self.algebra.right_mult_matrix(d1, b)


class TrivialModule(GradedModule):
    """F2 concentrated at (0, 0); operations act through the counit."""

    def __init__(self, algebra: MilnorAlgebra):
        self.algebra = algebra
        self.name = "F2"

    def dim(self, d: BiDegree) -> int:
        return 1 if BiDegree(*d) == ZERO_DEGREE else 0

    def label(self, d: BiDegree, i: int) -> str:
        return "1"

    def op_matrix(self, a: SteenrodElement, d: BiDegree) -> BitMatrix:
        d = BiDegree(*d)
        target = self.dim(d + a.degree)
        if self.dim(d) == 0:
            return BitMatrix(target, ())
        unit_value = a.bits & 1 if a.degree == ZERO_DEGREE else 0
        return BitMatrix(target, (unit_value,))

    def generator_action_matrix(self, d1: BiDegree, d2: BiDegree, bits: int) -> BitMatrix:
        d1 = BiDegree(*d1)
        n = self.algebra.dim(d1)
        target = self.dim(d1)
        if target and bits & 1:
            # only the counit coordinate of x survives; x is a functional on
            # the monomials of d1, and the counit support is the unit monomial
            rows = [1 if bidegree_basis(d1)[i].is_unit else 0 for i in range(n)]
            return BitMatrix(1, rows)
        return BitMatrix(target, (0,) * n)

    def support(self, max_stem=None) -> Iterator[BiDegree]:
        yield ZERO_DEGREE


@dataclass(frozen=True)
class ExteriorProfile:
    """Index set for an exterior subalgebra on the P_t, or the window-cofinite
    marker covering every t whose P_t fits the window."""

    indices: frozenset[int] | None = None

    @classmethod
    def of(cls, *ts: int) -> "ExteriorProfile":
        if any(t < 1 for t in ts):
            raise ValueError("exterior indices must be >= 1")
        return cls(frozenset(ts))

    @classmethod
    def cofinite(cls) -> "ExteriorProfile":
        return cls(None)

    def resolve(self, max_stem: int) -> tuple[int, ...]:
        if self.indices is not None:
            return tuple(sorted(self.indices))
        out = []
        t = 1
        while xi_degree(t).stem <= max_stem:
            out.append(t)
            t += 1
        return tuple(out)

    def describe(self) -> str:
        if self.indices is None:
            return "A//E(P_t : all t in window)"
        return "A//E(" + ",".join(f"P_{t}" for t in sorted(self.indices)) + ")"


class QuotientModule(GradedModule):
    """A modulo the right multiples A.P_t for t in a profile.

    Per bidegree the killed subspace is spanned by the rows of the right
    multiplication matrices; coset representatives are the non-pivot
    coordinates of its echelon basis.  The left action descends because
    a.(b.P_t) = (a.b).P_t.
    """

    def __init__(self, algebra: MilnorAlgebra, profile: ExteriorProfile):
        self.algebra = algebra
        self.profile = profile
        self.ts = profile.resolve(algebra.max_stem)
        self.name = profile.describe()
        self._data: dict[BiDegree, tuple[Subspace, tuple[int, ...], BitMatrix]] = {}

    def _bidegree_data(self, d: BiDegree):
        d = self.algebra.require(d)
        data = self._data.get(d)
        if data is None:
            n = self.algebra.dim(d)
            rows: list[int] = []
            for t in self.ts:
                src = d - xi_degree(t)
                if src.stem < 0 or src.weight < 0 or self.algebra.dim(src) == 0:
                    continue
                rows.extend(self.algebra.right_pt_matrix(t, src).rows)
            sub = Subspace.from_matrix_rows(BitMatrix(n, rows))
            pivot_set = set(sub.pivots)
            reps = tuple(j for j in range(n) if j not in pivot_set)
            rep_pos = {j: k for k, j in enumerate(reps)}
            proj_rows = []
            for i in range(n):
                reduced = sub.reduce(BitVector(n, 1 << i)).bits
                out = 0
                while reduced:
                    j = (reduced & -reduced).bit_length() - 1
                    out |= 1 << rep_pos[j]
                    reduced &= reduced - 1
                proj_rows.append(out)
            data = (sub, reps, BitMatrix(len(reps), proj_rows))
            self._data[d] = data
        return data

    def killed_subspace(self, d: BiDegree) -> Subspace:
        return self._bidegree_data(d)[0]

    def representatives(self, d: BiDegree) -> tuple[int, ...]:
        return self._bidegree_data(d)[1]

    def projection_matrix(self, d: BiDegree) -> BitMatrix:
        """Algebra coordinates at d down to coset representative coordinates."""
        return self._bidegree_data(d)[2]

    def lift_matrix(self, d: BiDegree) -> BitMatrix:
        reps = self.representatives(d)
        return BitMatrix(self.algebra.dim(BiDegree(*d)), tuple(1 << j for j in reps))

    def dim(self, d: BiDegree) -> int:
        return len(self._bidegree_data(d)[1])

    def label(self, d: BiDegree, i: int) -> str:
        reps = self.representatives(d)
        return "[" + format_monomial_steenrod(bidegree_basis(BiDegree(*d))[reps[i]]) + "]"

    def op_matrix(self, a: SteenrodElement, d: BiDegree) -> BitMatrix:
        d = BiDegree(*d)
        t = _single_pt_index(a)
        if t is not None:
            full = self.algebra.left_pt_matrix(t, d)
        else:
            full = self.algebra.left_mult_matrix(a, d)
        lifted = self.lift_matrix(d).compose(full)
        return lifted.compose(self.projection_matrix(d + a.degree))

    def right_pt_matrix(self, t: int, d: BiDegree) -> BitMatrix:
        """Right multiplication by P_t on the quotient; well defined since
        P_t commutes with P_1, ..., checked by the suite."""
        d = BiDegree(*d)
        full = self.algebra.right_pt_matrix(t, d)
        return self.lift_matrix(d).compose(full).compose(
            self.projection_matrix(d + xi_degree(t))
        )

    def generator_action_matrix(self, d1: BiDegree, d2: BiDegree, bits: int) -> BitMatrix:
        d1 = BiDegree(*d1)
        d2 = BiDegree(*d2)
        lifted = self.lift_matrix(d2).vec_mul(BitVector(self.dim(d2), bits))
        b = SteenrodElement(d2, lifted.bits)
        full = self.algebra.right_mult_matrix(d1, b)
        return full.compose(self.projection_matrix(d1 + d2))


def quotient_by_exterior(
    profile: ExteriorProfile | frozenset[int] | tuple[int, ...],
    algebra: MilnorAlgebra,
) -> QuotientModule:
    if not isinstance(profile, ExteriorProfile):
        profile = ExteriorProfile.of(*profile)
    return QuotientModule(algebra, profile)


class TensorModule(GradedModule):
    """Tensor product with the diagonal action a.(x (x) y) = sum a_(1)x (x) a_(2)y."""

    def __init__(self, left: GradedModule, right: GradedModule):
        if left.algebra is not right.algebra:
            raise ValueError("tensor factors must share the algebra")
        self.algebra = left.algebra
        self.left = left
        self.right = right
        self.name = f"{left.name} (x) {right.name}"
        self._basis: dict[BiDegree, tuple[tuple[BiDegree, int, int], ...]] = {}
        self._lsupport = sorted(left.support())
        self._rdims: dict[BiDegree, int] = {}

    def basis_layout(self, d: BiDegree) -> tuple[tuple[BiDegree, int, int], ...]:
        d = BiDegree(*d)
        layout = self._basis.get(d)
        if layout is None:
            out = []
            for dl in self._lsupport:
                dr = d - dl
                if dr.stem < 0 or dr.weight < 0:
                    continue
                nr = self.right.dim(dr)
                if nr == 0:
                    continue
                nl = self.left.dim(dl)
                for i in range(nl):
                    for j in range(nr):
                        out.append((dl, i, j))
            layout = tuple(out)
            self._basis[d] = layout
        return layout

    def dim(self, d: BiDegree) -> int:
        return len(self.basis_layout(d))

    def label(self, d: BiDegree, i: int) -> str:
        dl, li, rj = self.basis_layout(d)[i]
        return f"{self.left.label(dl, li)}(x){self.right.label(BiDegree(*d) - dl, rj)}"

    def op_matrix(self, a: SteenrodElement, d: BiDegree) -> BitMatrix:
        d = BiDegree(*d)
        target = d + a.degree
        layout = self.basis_layout(d)
        target_layout = self.basis_layout(target)
        target_pos = {key: p for p, key in enumerate(target_layout)}
        splits = []
        for d1s in range(a.degree.stem + 1):
            for d1w in range(a.degree.weight + 1):
                d1 = BiDegree(d1s, d1w)
                comps = self.algebra.coproduct_components(a, d1)
                if comps:
                    splits.append((d1, a.degree - d1, comps))
        rows = []
        for dl, i, j in layout:
            dr = d - dl
            acc = 0
            for d1, d2, comps in splits:
                for u, v in comps:
                    lv = self.left.act(u, dl, BitVector(self.left.dim(dl), 1 << i))
                    rv = self.right.act(v, dr, BitVector(self.right.dim(dr), 1 << j))
                    if lv.is_zero() or rv.is_zero():
                        continue
                    for li in lv.support():
                        for rj in rv.support():
                            acc ^= 1 << target_pos[(dl + d1, li, rj)]
            rows.append(acc)
        return BitMatrix(len(target_layout), rows)

    def support(self, max_stem: int | None = None) -> Iterator[BiDegree]:
        top = self.window if max_stem is None else min(max_stem, self.window)
        for s in range(top + 1):
            for w in range(s // 2 + 1):
                d = BiDegree(s, w)
                if self.dim(d):
                    yield d


def tensor_diagonal(left: GradedModule, right: GradedModule) -> TensorModule:
    return TensorModule(left, right)


def tensor_power(m: GradedModule, power: int) -> GradedModule:
    if power < 1:
        raise ValueError("power must be >= 1")
    out = m
    for _ in range(power - 1):
        out = TensorModule(out, m)
    return out


@dataclass
class MargolisReport:
    """Margolis homology dimensions of a module over one safe sub-window."""

    module: str
    t: int
    max_stem: int
    margin: int
    dims: dict[BiDegree, int] = field(default_factory=dict)

    @property
    def safe_stem(self) -> int:
        return self.max_stem - self.margin

    def is_zero(self) -> bool:
        return not self.dims

    def total(self) -> int:
        return sum(self.dims.values())

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "t": self.t,
            "max_stem": self.max_stem,
            "margin": self.margin,
            "safe_stem": self.safe_stem,
            "dims": [
                {"stem": d.stem, "weight": d.weight, "dim": v}
                for d, v in sorted(self.dims.items())
            ],
        }


def margolis(
    module: GradedModule,
    t: int,
    max_stem: int | None = None,
    margin: int | None = None,
) -> MargolisReport:
    """ker/im dimensions of the left P_t action, inside the safe sub-window.

    Truncation creates spurious homology near the cutoff, so reporting is
    refused outside stem <= max_stem - margin with margin at least the stem
    of P_t.  Exteriority of the action is verified as far as the window
    allows composing P_t twice.
    """
    alg = module.algebra
    pt_stem = xi_degree(t).stem
    if max_stem is None:
        max_stem = module.window
    if margin is None:
        margin = pt_stem
    if margin < pt_stem:
        raise ValueError(f"margin {margin} below |P_{t}| stem {pt_stem}")
    if max_stem > module.window:
        raise ValueError(f"max_stem {max_stem} beyond module window {module.window}")
    pt = alg.pst(0, t)
    dt = pt.degree
    safe = max_stem - margin
    mats: dict[BiDegree, BitMatrix] = {}

    def op(d: BiDegree) -> BitMatrix:
        if d not in mats:
            mats[d] = module.op_matrix(pt, d)
        return mats[d]

    for d in module.support(max_stem - 2 * pt_stem):
        d = BiDegree(*d)
        if not op(d).compose(op(d + dt)).is_zero():
            raise InvariantViolation(
                f"P_{t} is not exterior on {module.name} at {d}"
            )

    report = MargolisReport(module.name, t, max_stem, margin)
    for d in module.support(safe):
        d = BiDegree(*d)
        rank_out = rank(op(d))
        src = d - dt
        rank_in = 0
        if src.stem >= 0 and src.weight >= 0 and module.dim(src):
            rank_in = rank(op(src))
        h = module.dim(d) - rank_out - rank_in
        if h:
            report.dims[d] = h
    return report
