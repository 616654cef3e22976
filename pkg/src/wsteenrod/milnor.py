"""The motivic mod-2 Steenrod algebra over C with tau killed, in the Milnor basis.

The dual algebra is the bigraded Hopf algebra

    F2[xi_1, xi_2, ...] (x) E(tau_0, tau_1, ...),

with |xi_n| = (2^{n+1}-2, 2^n-1) and |tau_n| = (2^{n+1}-1, 2^n-1) in
(stem, weight) bidegrees, coproduct

    D(xi_n)  = sum_i xi_{n-i}^{2^i} (x) xi_i,
    D(tau_n) = tau_n (x) 1 + sum_i xi_{n-i}^{2^i} (x) tau_i,

extended multiplicatively.  Operations are the linear functionals dual to
this monomial basis; their product is the transpose of the coproduct, with
the fixed convention that the LEFT operand pairs against the LEFT tensor
factor:  <a.b, m> = sum <a, m_(1)> <b, m_(2)>.  Under this convention
"x . P" is precomposition with P, the form used by tower differentials.

The Chow degree stem - 2*weight of a monomial equals its number of tau
factors, so the whole algebra is concentrated in Chow degrees >= 0 and all
recursions (antipode, minimality arguments) terminate.

Bases, coproducts and antipodes are intrinsic to a bidegree and cached at
module level; a MilnorAlgebra instance adds a stem window, guards against
leaving it, and caches multiplication tables.  All cached data is immutable
once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .gf2 import BitMatrix, BitVector


class WindowError(ValueError):
    """Raised when a computation would leave the configured stem window."""


class BidegreeMismatch(ValueError):
    """Raised when two operands must share a bidegree but do not."""


class BiDegree(NamedTuple):
    stem: int
    weight: int

    @property
    def chow(self) -> int:
        return self.stem - 2 * self.weight

    def __add__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.stem + other.stem, self.weight + other.weight)

    def __sub__(self, other: "BiDegree") -> "BiDegree":
        return BiDegree(self.stem - other.stem, self.weight - other.weight)

    def times(self, k: int) -> "BiDegree":
        return BiDegree(k * self.stem, k * self.weight)

    def __str__(self) -> str:
        return f"({self.stem},{self.weight})"


ZERO_DEGREE = BiDegree(0, 0)


def xi_degree(j: int) -> BiDegree:
    """Bidegree of xi_j, j >= 1; also the bidegree of the operation P_j."""
    if j < 1:
        raise ValueError(f"xi index must be >= 1, got {j}")
    return BiDegree(2 ** (j + 1) - 2, 2**j - 1)


def tau_degree(i: int) -> BiDegree:
    """Bidegree of tau_i, i >= 0."""
    if i < 0:
        raise ValueError(f"tau index must be >= 0, got {i}")
    return BiDegree(2 ** (i + 1) - 1, 2**i - 1)


def pst_degree(s: int, t: int) -> BiDegree:
    """Bidegree of P^s_t, the functional dual to xi_t^(2^s)."""
    return xi_degree(t).times(2**s)


def _trim(r: Iterable[int]) -> tuple[int, ...]:
    out = list(r)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class DualMonomial(NamedTuple):
    """A monomial tau_eps * xi^r; eps is a sorted tuple, r is zero-trimmed.

    Tuple comparison gives the canonical basis order: lexicographic on the
    ascending tau index list, then on the exponent sequence.
    """

    eps: tuple[int, ...]
    r: tuple[int, ...]

    @property
    def degree(self) -> BiDegree:
        stem = sum(2 ** (i + 1) - 1 for i in self.eps)
        weight = sum(2**i - 1 for i in self.eps)
        for j, e in enumerate(self.r, start=1):
            stem += e * (2 ** (j + 1) - 2)
            weight += e * (2**j - 1)
        return BiDegree(stem, weight)

    @property
    def is_unit(self) -> bool:
        return not self.eps and not self.r

    def exponent(self, j: int) -> int:
        return self.r[j - 1] if 1 <= j <= len(self.r) else 0


UNIT_MONOMIAL = DualMonomial((), ())


def monomial(eps: Iterable[int] = (), r: Iterable[int] = ()) -> DualMonomial:
    eps = tuple(sorted(set(eps)))
    return DualMonomial(eps, _trim(r))


def xi_monomial(j: int, e: int = 1) -> DualMonomial:
    if e == 0:
        return UNIT_MONOMIAL
    r = [0] * j
    r[j - 1] = e
    return DualMonomial((), tuple(r))


def tau_monomial(i: int) -> DualMonomial:
    return DualMonomial((i,), ())


def multiply_monomials(a: DualMonomial, b: DualMonomial) -> DualMonomial | None:
    """Product in the dual algebra; None when a tau factor repeats."""
    if a.is_unit:
        return b
    if b.is_unit:
        return a
    if set(a.eps) & set(b.eps):
        return None
    eps = tuple(sorted(a.eps + b.eps))
    n = max(len(a.r), len(b.r))
    r = tuple(
        (a.r[i] if i < len(a.r) else 0) + (b.r[i] if i < len(b.r) else 0)
        for i in range(n)
    )
    return DualMonomial(eps, r)


# ---------------------------------------------------------------------------
# basis enumeration


def _eps_sets(count: int, start: int, weight_budget: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Tau index sets of the given size, yielding (indices, weight used)."""
    if count == 0:
        yield (), 0
        return
    i = start
    while 2**i - 1 <= weight_budget:
        for rest, w in _eps_sets(count - 1, i + 1, weight_budget - (2**i - 1)):
            yield (i,) + rest, w + 2**i - 1
        i += 1


@lru_cache(maxsize=None)
def _xi_exponents(weight: int, jmax: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples (r_1..r_jmax, trimmed) with sum r_j*(2^j - 1) = weight."""
    if weight == 0:
        return ((),)
    if jmax == 0:
        return ()
    out = []
    unit = 2**jmax - 1
    for e in range(weight // unit + 1):
        for rest in _xi_exponents(weight - e * unit, jmax - 1):
            if e == 0:
                out.append(rest)
            else:
                r = list(rest) + [0] * (jmax - len(rest))
                r[jmax - 1] = e
                out.append(tuple(r))
    return tuple(out)


@lru_cache(maxsize=None)
def bidegree_basis(d: BiDegree) -> tuple[DualMonomial, ...]:
    """All dual monomials of bidegree d, in canonical order.

    Empty when the Chow degree is negative or the weight is; the Chow degree
    of a monomial counts its tau factors, which pins the search.
    """
    d = BiDegree(*d)
    chow = d.chow
    if chow < 0 or d.weight < 0:
        return ()
    out = []
    for eps, wtau in _eps_sets(chow, 0, d.weight if chow else 0):
        wxi = d.weight - wtau
        # largest j with 2^j - 1 <= wxi
        jmax = 0
        j = 1
        while 2**j - 1 <= wxi:
            jmax = j
            j += 1
        for r in _xi_exponents(wxi, jmax):
            out.append(DualMonomial(tuple(eps), r))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(d: BiDegree) -> dict[DualMonomial, int]:
    return {m: i for i, m in enumerate(bidegree_basis(d))}


def enumerate_window_monomials(max_stem: int) -> Iterator[DualMonomial]:
    """Sweep all monomials of stem <= max_stem by raw exponent loops.

    Independent of the per-bidegree enumeration, so the two can be checked
    against each other, and basis-level claims (Chow nonnegativity, weight
    nonnegativity) can be asserted on concrete monomials.
    """

    def xi_part(j: int, budget: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if j == 0 or budget < xi_degree(1).stem:
            yield (), 0
            return
        unit = xi_degree(j).stem
        for rest, used in xi_part(j - 1, budget):
            e = 0
            while used + e * unit <= budget:
                if e == 0:
                    yield rest, used
                else:
                    r = list(rest) + [0] * (j - len(rest))
                    r[j - 1] = e
                    yield tuple(r), used + e * unit
                e += 1

    jmax = 0
    while xi_degree(jmax + 1).stem <= max_stem:
        jmax += 1
    taus = [i for i in range(max_stem.bit_length() + 1) if tau_degree(i).stem <= max_stem]

    def tau_part(k: int, budget: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if k == len(taus):
            yield (), 0
            return
        for rest, used in tau_part(k + 1, budget):
            yield rest, used
            cost = tau_degree(taus[k]).stem
            if used + cost <= budget:
                yield (taus[k],) + rest, used + cost

    for eps, tau_stem in tau_part(0, max_stem):
        for r, _ in xi_part(jmax, max_stem - tau_stem):
            yield DualMonomial(tuple(sorted(eps)), _trim(r))


def bidegree_dim(d: BiDegree) -> int:
    return len(bidegree_basis(d))


# ---------------------------------------------------------------------------
# coproduct and antipode


def _delta_xi_power(j: int, e: int) -> list[tuple[DualMonomial, DualMonomial]]:
    """Coproduct of xi_j^e: assign each binary digit of e to a tensor slot.

    Slot i contributes xi_{j-i}^(2^i c) on the left and xi_i^c on the right;
    distinct digit assignments give distinct compositions, which is exactly
    the odd-multinomial (Lucas) condition, so no parity bookkeeping is
    needed here.
    """
    digits = [1 << k for k in range(e.bit_length()) if (e >> k) & 1]
    terms = []

    def rec(idx: int, comp: list[int]):
        if idx == len(digits):
            left = UNIT_MONOMIAL
            right = UNIT_MONOMIAL
            for i, c in enumerate(comp):
                if c == 0:
                    continue
                if j - i > 0:
                    left = multiply_monomials(left, xi_monomial(j - i, (2**i) * c))
                if i > 0:
                    right = multiply_monomials(right, xi_monomial(i, c))
            terms.append((left, right))
            return
        for i in range(j + 1):
            comp[i] += digits[idx]
            rec(idx + 1, comp)
            comp[i] -= digits[idx]

    rec(0, [0] * (j + 1))
    return terms


def _delta_tau(i: int) -> list[tuple[DualMonomial, DualMonomial]]:
    terms = [(tau_monomial(i), UNIT_MONOMIAL)]
    for k in range(i + 1):
        left = xi_monomial(i - k, 2**k) if i - k > 0 else UNIT_MONOMIAL
        terms.append((left, tau_monomial(k)))
    return terms


@lru_cache(maxsize=None)
def coproduct_monomial(m: DualMonomial) -> tuple[tuple[DualMonomial, DualMonomial], ...]:
    """The full coproduct of a monomial as an F2 set of tensor pairs."""
    acc: dict[tuple[DualMonomial, DualMonomial], int] = {(UNIT_MONOMIAL, UNIT_MONOMIAL): 1}
    factors = []
    for j, e in enumerate(m.r, start=1):
        if e:
            factors.append(_delta_xi_power(j, e))
    for i in m.eps:
        factors.append(_delta_tau(i))
    for factor in factors:
        nxt: dict[tuple[DualMonomial, DualMonomial], int] = {}
        for (l, r), _ in acc.items():
            for fl, fr in factor:
                left = multiply_monomials(l, fl)
                if left is None:
                    continue
                right = multiply_monomials(r, fr)
                if right is None:
                    continue
                key = (left, right)
                nxt[key] = nxt.get(key, 0) ^ 1
        acc = {k: 1 for k, v in nxt.items() if v}
    return tuple(sorted(acc))


@lru_cache(maxsize=None)
def antipode_monomial(m: DualMonomial) -> tuple[DualMonomial, ...]:
    """Antipode on a monomial, by the connected-Hopf-algebra recursion.

    c(1) = 1 and c(m) = m + sum m_(1) . c(m_(2)) over the coproduct terms
    with both factors nonunit; those right factors have strictly smaller
    stem, so the recursion terminates.
    """
    if m.is_unit:
        return (UNIT_MONOMIAL,)
    acc: dict[DualMonomial, int] = {m: 1}
    for left, right in coproduct_monomial(m):
        if left.is_unit or right.is_unit:
            continue
        for cm in antipode_monomial(right):
            t = multiply_monomials(left, cm)
            if t is None:
                continue
            acc[t] = acc.get(t, 0) ^ 1
    return tuple(sorted(k for k, v in acc.items() if v))


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class DualElement:
    """An F2 combination of dual monomials in one bidegree, as packed bits."""

    degree: BiDegree
    bits: int

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeffs(self) -> BitVector:
        return BitVector(bidegree_dim(self.degree), self.bits)

    def monomials(self) -> tuple[DualMonomial, ...]:
        basis = bidegree_basis(self.degree)
        return tuple(basis[i] for i in range(len(basis)) if (self.bits >> i) & 1)

    def __add__(self, other: "DualElement") -> "DualElement":
        if self.degree != other.degree:
            raise BidegreeMismatch(f"{self.degree} vs {other.degree}")
        return DualElement(self.degree, self.bits ^ other.bits)


@dataclass(frozen=True)
class SteenrodElement:
    """An operation: a functional on the dual monomials of one bidegree.

    Coordinate i is the value on the i-th canonical monomial, so P^R is the
    unit vector at xi^R and Q(i) the unit vector at tau_i.
    """

    degree: BiDegree
    bits: int

    def is_zero(self) -> bool:
        return self.bits == 0

    def coeffs(self) -> BitVector:
        return BitVector(bidegree_dim(self.degree), self.bits)

    def dual_monomials(self) -> tuple[DualMonomial, ...]:
        basis = bidegree_basis(self.degree)
        return tuple(basis[i] for i in range(len(basis)) if (self.bits >> i) & 1)

    def __add__(self, other: "SteenrodElement") -> "SteenrodElement":
        if self.degree != other.degree:
            raise BidegreeMismatch(f"{self.degree} vs {other.degree}")
        return SteenrodElement(self.degree, self.bits ^ other.bits)


def dual_element(monomials: Iterable[DualMonomial], degree: BiDegree | None = None) -> DualElement:
    monomials = list(monomials)
    if degree is None:
        if not monomials:
            raise ValueError("degree required for an empty combination")
        degree = monomials[0].degree
    index = basis_index(degree)
    bits = 0
    for m in monomials:
        if m.degree != degree:
            raise BidegreeMismatch(f"{m} not in bidegree {degree}")
        bits ^= 1 << index[m]
    return DualElement(degree, bits)


def steenrod_element(duals: Iterable[DualMonomial], degree: BiDegree | None = None) -> SteenrodElement:
    el = dual_element(duals, degree)
    return SteenrodElement(el.degree, el.bits)


# ---------------------------------------------------------------------------
# the windowed algebra


class MilnorAlgebra:
    """The algebra of operations, enumerated for stems up to max_stem.

    Basis tables and multiplication tables are built lazily and frozen;
    after that every method is a pure read and may be called concurrently.
    """

    def __init__(self, max_stem: int = 24):
        if max_stem < 0:
            raise ValueError("max_stem must be >= 0")
        self.max_stem = max_stem
        self._tables: dict[tuple[BiDegree, BiDegree], tuple[tuple[tuple[int, int], ...], ...]] = {}
        self._rmul: dict[tuple[BiDegree, BiDegree, int], BitMatrix] = {}
        self._antipode: dict[BiDegree, BitMatrix] = {}

    # -- window -------------------------------------------------------

    def require(self, d: BiDegree) -> BiDegree:
        d = BiDegree(*d)
        if d.stem > self.max_stem:
            raise WindowError(f"bidegree {d} exceeds window stem<={self.max_stem}")
        return d

    def bidegrees(self, max_stem: int | None = None) -> Iterator[BiDegree]:
        """Bidegrees with nonempty basis and stem within the window."""
        top = self.max_stem if max_stem is None else min(max_stem, self.max_stem)
        for s in range(top + 1):
            for w in range(s // 2 + 1):
                d = BiDegree(s, w)
                if bidegree_basis(d):
                    yield d

    # -- dual side ------------------------------------------------------

    def dual_basis(self, d: BiDegree) -> tuple[DualMonomial, ...]:
        return bidegree_basis(self.require(d))

    def dim(self, d: BiDegree) -> int:
        return len(bidegree_basis(BiDegree(*d)))

    def dual_product(self, a: DualElement, b: DualElement) -> DualElement:
        d = self.require(a.degree + b.degree)
        index = basis_index(d)
        abasis = bidegree_basis(a.degree)
        bbasis = bidegree_basis(b.degree)
        bits = 0
        for i in range(len(abasis)):
            if not (a.bits >> i) & 1:
                continue
            for j in range(len(bbasis)):
                if not (b.bits >> j) & 1:
                    continue
                m = multiply_monomials(abasis[i], bbasis[j])
                if m is not None:
                    bits ^= 1 << index[m]
        return DualElement(d, bits)

    def coproduct(self, m: DualMonomial) -> tuple[tuple[DualMonomial, DualMonomial], ...]:
        return coproduct_monomial(m)

    def antipode_dual(self, x: DualElement) -> DualElement:
        mat = self.antipode_matrix(x.degree)
        return DualElement(x.degree, mat.vec_mul(x.coeffs()).bits)

    def antipode_matrix(self, d: BiDegree) -> BitMatrix:
        """Row i is the antipode of the i-th monomial of the bidegree."""
        d = self.require(d)
        mat = self._antipode.get(d)
        if mat is None:
            basis = bidegree_basis(d)
            index = basis_index(d)
            rows = []
            for m in basis:
                bits = 0
                for t in antipode_monomial(m):
                    bits ^= 1 << index[t]
                rows.append(bits)
            mat = BitMatrix(len(basis), rows)
            self._antipode[d] = mat
        return mat

    # -- pairing and products -------------------------------------------

    def pair(self, a: SteenrodElement, x: DualElement) -> int:
        if a.degree != x.degree:
            raise BidegreeMismatch(f"{a.degree} vs {x.degree}")
        return (a.bits & x.bits).bit_count() & 1

    def mult_table(self, d1: BiDegree, d2: BiDegree) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Structure constants of the product at (d1, d2).

        Entry m lists the (i, j) with basis(d1)[i] (x) basis(d2)[j] occurring
        in the coproduct of the m-th monomial of d1 + d2.
        """
        d1 = BiDegree(*d1)
        d2 = BiDegree(*d2)
        key = (d1, d2)
        table = self._tables.get(key)
        if table is None:
            d = self.require(d1 + d2)
            idx1 = basis_index(d1)
            idx2 = basis_index(d2)
            rows = []
            for m in bidegree_basis(d):
                pairs = []
                for left, right in coproduct_monomial(m):
                    if left.degree == d1:
                        pairs.append((idx1[left], idx2[right]))
                rows.append(tuple(pairs))
            table = tuple(rows)
            self._tables[key] = table
        return table

    def product(self, a: SteenrodElement, b: SteenrodElement) -> SteenrodElement:
        d = self.require(a.degree + b.degree)
        table = self.mult_table(a.degree, b.degree)
        bits = 0
        for m, pairs in enumerate(table):
            c = 0
            for i, j in pairs:
                c ^= (a.bits >> i) & (b.bits >> j) & 1
            if c:
                bits |= 1 << m
        return SteenrodElement(d, bits)

    def right_mult_matrix(self, d1: BiDegree, b: SteenrodElement) -> BitMatrix:
        """Matrix of x -> x . b on basis functionals at d1."""
        d1 = BiDegree(*d1)
        key = (d1, b.degree, b.bits)
        mat = self._rmul.get(key)
        if mat is None:
            table = self.mult_table(d1, b.degree)
            rows = [0] * self.dim(d1)
            for m, pairs in enumerate(table):
                for i, j in pairs:
                    if (b.bits >> j) & 1:
                        rows[i] ^= 1 << m
            mat = BitMatrix(len(table), rows)
            self._rmul[key] = mat
        return mat

    def left_mult_matrix(self, a: SteenrodElement, d2: BiDegree) -> BitMatrix:
        """Matrix of x -> a . x on basis functionals at d2."""
        d2 = BiDegree(*d2)
        table = self.mult_table(a.degree, d2)
        rows = [0] * self.dim(d2)
        for m, pairs in enumerate(table):
            for i, j in pairs:
                if (a.bits >> i) & 1:
                    rows[j] ^= 1 << m
        return BitMatrix(len(table), rows)

    def multiply_element_by(self, x: BitVector, d1: BiDegree, b: SteenrodElement) -> BitVector:
        return self.right_mult_matrix(d1, b).vec_mul(x)

    # -- fast structure-constant paths for the generators P_t ------------
    #
    # Right factor exactly xi_t in the coproduct of m comes from one odd
    # exponent r_j (j >= t), replacing xi_j by xi_{j-t}^(2^t) on the left;
    # left factor exactly xi_t comes from an odd r_t, or from tau_t turning
    # into tau_0 when tau_0 is not already present.  Cross-checked against
    # the duality product in the test suite.

    def right_pt_matrix(self, t: int, d1: BiDegree) -> BitMatrix:
        d1 = BiDegree(*d1)
        d = self.require(d1 + xi_degree(t))
        idx1 = basis_index(d1)
        rows = [0] * self.dim(d1)
        for mi, m in enumerate(bidegree_basis(d)):
            for j in range(t, len(m.r) + 1):
                if m.exponent(j) % 2 == 0:
                    continue
                rr = list(m.r) + [0] * max(0, j - t - len(m.r))
                rr[j - 1] -= 1
                if j > t:
                    rr[j - t - 1] += 2**t
                src = DualMonomial(m.eps, _trim(rr))
                i = idx1.get(src)
                if i is not None:
                    rows[i] ^= 1 << mi
        return BitMatrix(self.dim(d), rows)

    def left_pt_matrix(self, t: int, d2: BiDegree) -> BitMatrix:
        d2 = BiDegree(*d2)
        d = self.require(d2 + xi_degree(t))
        idx2 = basis_index(d2)
        rows = [0] * self.dim(d2)
        for mi, m in enumerate(bidegree_basis(d)):
            if m.exponent(t) % 2 == 1:
                rr = list(m.r)
                rr[t - 1] -= 1
                src = DualMonomial(m.eps, _trim(rr))
                i = idx2.get(src)
                if i is not None:
                    rows[i] ^= 1 << mi
            if t in m.eps and 0 not in m.eps:
                eps = tuple(sorted([0] + [e for e in m.eps if e != t]))
                src = DualMonomial(eps, m.r)
                i = idx2.get(src)
                if i is not None:
                    rows[i] ^= 1 << mi
        return BitMatrix(self.dim(d), rows)

    # -- coproduct on operations and conjugation ------------------------

    def coproduct_components(
        self, a: SteenrodElement, left: BiDegree
    ) -> list[tuple[SteenrodElement, SteenrodElement]]:
        """The (left, |a|-left) component of the coproduct of an operation.

        Transposes the dual product: the (i, j) coefficient is the value of
        a on basis(left)[i] * basis(right)[j].  The dual algebra is
        commutative, so this coproduct is cocommutative and no pairing
        convention enters.
        """
        left = BiDegree(*left)
        right = a.degree - left
        if bidegree_dim(left) == 0 or bidegree_dim(right) == 0:
            return []
        lbasis = bidegree_basis(left)
        rbasis = bidegree_basis(right)
        index = basis_index(a.degree)
        out = []
        for i, lm in enumerate(lbasis):
            for j, rm in enumerate(rbasis):
                m = multiply_monomials(lm, rm)
                if m is None:
                    continue
                if (a.bits >> index[m]) & 1:
                    out.append(
                        (SteenrodElement(left, 1 << i), SteenrodElement(right, 1 << j))
                    )
        return out

    def conjugate(self, a: SteenrodElement) -> SteenrodElement:
        """Transpose of the dual antipode: <c(a), x> = <a, c(x)>."""
        mat = self.antipode_matrix(a.degree)
        return SteenrodElement(a.degree, mat.mul_vec(a.coeffs()).bits)

    # -- named elements ---------------------------------------------------

    def unit(self) -> SteenrodElement:
        return SteenrodElement(ZERO_DEGREE, 1)

    def zero(self, d: BiDegree) -> SteenrodElement:
        return SteenrodElement(BiDegree(*d), 0)

    def from_dual_monomial(self, m: DualMonomial) -> SteenrodElement:
        d = self.require(m.degree)
        return SteenrodElement(d, 1 << basis_index(d)[m])

    def pst(self, s: int, t: int) -> SteenrodElement:
        """The operation P^s_t, dual to xi_t^(2^s); pst(0, t) is P_t."""
        if s < 0 or t < 1:
            raise ValueError(f"need s >= 0 and t >= 1, got ({s}, {t})")
        return self.from_dual_monomial(xi_monomial(t, 2**s))

    def pt(self, t: int) -> SteenrodElement:
        return self.pst(0, t)

    def pR(self, r: Iterable[int]) -> SteenrodElement:
        """The Milnor basis element P^R, dual to xi_1^{r_1} xi_2^{r_2} ..."""
        return self.from_dual_monomial(monomial((), r))

    def q(self, i: int) -> SteenrodElement:
        """The functional dual to tau_i."""
        if i < 0:
            raise ValueError(f"need i >= 0, got {i}")
        return self.from_dual_monomial(tau_monomial(i))

    def basis_functionals(self, d: BiDegree) -> list[SteenrodElement]:
        d = self.require(d)
        return [SteenrodElement(d, 1 << i) for i in range(self.dim(d))]


@lru_cache(maxsize=None)
def algebra(max_stem: int) -> MilnorAlgebra:
    """Shared algebra instance per window size."""
    return MilnorAlgebra(max_stem)
