"""Minimal free resolutions over the motivic Steenrod algebra.

The resolver walks internal degrees in increasing order and, inside one
degree, filtrations bottom up.  At each cell it assembles the differential
matrix from cached right-multiplication blocks, takes the kernel, reduces
it against the image of the next differential so far, and appends one new
free generator per unreached kernel vector, with that vector as its image.
Generators are therefore exactly the Ext classes (no invertible entries
ever appear, which the suite re-checks).

Cells are processed while chart stem = internal stem - filtration stays
at most max_stem + 1.  A kernel vector never has a unit coefficient on a
generator of the same internal degree, and generator images only involve
target generators of chart stem at most their own, so this triangle is
closed under all dependencies and the reported chart is exact for stems
up to max_stem at every filtration up to max_filt.  Algebra coefficients
then stay within max_stem + 2, which the backing algebra window must
cover.

Distinct weights of one (filtration, internal stem) cell are independent
(the algebra is trivial in stem zero), so they may be solved concurrently;
appending generators stays serialized in weight order either way.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .charts import ExtChart
from .gf2 import BitMatrix, BitVector, Subspace, kernel as gf2_kernel, rank
from .milnor import BiDegree, MilnorAlgebra, SteenrodElement, bidegree_dim
from .modules import GradedModule, InvariantViolation


class PartialResultError(RuntimeError):
    """A resource bound was hit; carries the chart completed so far."""

    def __init__(self, message: str, chart: ExtChart, completed_stem: int):
        super().__init__(message)
        self.chart = chart
        self.completed_stem = completed_stem


class Generator(NamedTuple):
    index: int
    degree: BiDegree
    filtration: int


@dataclass
class FreeModule:
    """Free module with one block of algebra coefficients per generator."""

    filtration: int
    generators: list[Generator] = field(default_factory=list)

    def add_generator(self, degree: BiDegree) -> Generator:
        g = Generator(len(self.generators), BiDegree(*degree), self.filtration)
        self.generators.append(g)
        return g

    def layout(self, d: BiDegree) -> list[tuple[Generator, int, int]]:
        """(generator, coefficient dim, bit offset) blocks at bidegree d."""
        d = BiDegree(*d)
        out = []
        offset = 0
        for g in self.generators:
            n = bidegree_dim(d - g.degree)
            if n:
                out.append((g, n, offset))
                offset += n
        return out

    def dim(self, d: BiDegree) -> int:
        d = BiDegree(*d)
        return sum(bidegree_dim(d - g.degree) for g in self.generators)


@dataclass
class ModuleMap:
    """Bidegree-preserving map from a free module, one image per generator.

    Images are coordinate bit masks in the target (free module layout or
    module basis) at the generator's own bidegree.
    """

    algebra: MilnorAlgebra
    source: FreeModule
    target: "FreeModule | GradedModule"
    images: list[int] = field(default_factory=list)

    def set_image(self, g: Generator, bits: int) -> None:
        while len(self.images) < g.index:
            self.images.append(0)
        if len(self.images) == g.index:
            self.images.append(bits)
        else:
            self.images[g.index] = bits

    def _free_block(
        self, g: Generator, d: BiDegree, out_offsets: dict[int, int], ncols: int
    ) -> list[int]:
        """Rows x -> x . image(g) over the coefficient basis at d - |g|."""
        target: FreeModule = self.target
        src_deg = d - g.degree
        bits = self.images[g.index]
        rows = [0] * bidegree_dim(src_deg)
        for h, n, offset in target.layout(g.degree):
            comp = (bits >> offset) & ((1 << n) - 1)
            if comp == 0:
                continue
            out_offset = out_offsets.get(h.index)
            if out_offset is None:
                continue
            el = SteenrodElement(g.degree - h.degree, comp)
            block = self.algebra.right_mult_matrix(src_deg, el)
            for i, r in enumerate(block.rows):
                rows[i] ^= r << out_offset
        return rows

    def matrix(self, d: BiDegree, exclude_units: bool = False) -> BitMatrix:
        """The full matrix of the map at bidegree d.

        With exclude_units, blocks of generators sitting at d itself are
        dropped, leaving the part of the map defined over the augmentation
        ideal.
        """
        d = BiDegree(*d)
        ncols = self.target.dim(d)
        free_target = isinstance(self.target, FreeModule)
        out_offsets = (
            {h.index: off for h, _, off in self.target.layout(d)} if free_target else {}
        )
        rows: list[int] = []
        for g, n, _ in self.source.layout(d):
            if exclude_units and g.degree == d:
                continue
            if free_target:
                rows.extend(self._free_block(g, d, out_offsets, ncols))
            else:
                block = self.target.generator_action_matrix(
                    d - g.degree, g.degree, self.images[g.index]
                )
                rows.extend(block.rows)
        return BitMatrix(ncols, rows)

    def apply(self, d: BiDegree, v: BitVector) -> BitVector:
        return self.matrix(d).vec_mul(v)


@dataclass
class Resolution:
    """A minimal free resolution of a module, with its Ext chart."""

    algebra: MilnorAlgebra
    module: GradedModule
    max_stem: int
    max_filt: int
    frees: list[FreeModule] = field(default_factory=list)
    maps: list[ModuleMap] = field(default_factory=list)

    def chart(self) -> ExtChart:
        chart = ExtChart(self.module.name, self.max_stem)
        for free in self.frees:
            for g in free.generators:
                stem = g.degree.stem - g.filtration
                if stem <= self.max_stem:
                    chart.add(g.filtration, stem, g.degree.weight)
        return chart

    def differential_matrix(self, s: int, d: BiDegree) -> BitMatrix:
        return self.maps[s].matrix(d)

    # -- invariant checks -------------------------------------------------

    def verify_dd_zero(self) -> None:
        """d(d(g)) = 0 for every generator of every level."""
        for s in range(1, len(self.maps)):
            upper = self.maps[s]
            lower = self.maps[s - 1]
            for g in upper.source.generators:
                v = BitVector(upper.target.dim(g.degree), upper.images[g.index])
                w = lower.matrix(g.degree).vec_mul(v)
                if not w.is_zero():
                    raise InvariantViolation(
                        f"d.d != 0 at filtration {s}, generator {g}"
                    )

    def verify_minimal(self) -> None:
        """No differential entry pairs nonzero against the unit."""
        for s in range(1, len(self.maps)):
            m = self.maps[s]
            target: FreeModule = m.target
            for g in m.source.generators:
                bits = m.images[g.index]
                for h, n, offset in target.layout(g.degree):
                    if h.degree == g.degree and (bits >> offset) & ((1 << n) - 1):
                        raise InvariantViolation(
                            f"unit coefficient in d at filtration {s}: {g} -> {h}"
                        )

    def verify_exact(self) -> None:
        """Homology of the resolution is concentrated in the chart.

        At every cell, rank(d_s) + rank(d_{s+1} over the augmentation
        ideal) accounts for dim F_s minus the multiplicity of classes born
        at filtration s + 1 there; the remaining kernel is exactly spanned
        by the unit blocks of the newborn generators.  The augmentation is
        also checked surjective, so the complex is exact onto the module.
        """
        for t in range(self.max_stem + 1):
            for w in range(t // 2 + 1):
                d = BiDegree(t, w)
                if self.module.dim(d) and rank(self.maps[0].matrix(d)) != self.module.dim(d):
                    raise InvariantViolation(f"augmentation not surjective at {d}")
        for s in range(len(self.maps) - 1):
            for t in range(s, self.max_stem + s + 1):
                for w in self._weights(s, t):
                    d = BiDegree(t, w)
                    n = self.frees[s].dim(d)
                    if n == 0:
                        continue
                    r_out = rank(self.maps[s].matrix(d))
                    r_in = rank(self.maps[s + 1].matrix(d, exclude_units=True))
                    born = sum(
                        1 for g in self.frees[s + 1].generators if g.degree == d
                    )
                    if r_out + r_in + born != n:
                        raise InvariantViolation(
                            f"homology off chart at s={s}, {d}: "
                            f"{r_out}+{r_in}+{born} != {n}"
                        )

    def _weights(self, s: int, t: int) -> list[int]:
        ws: set[int] = set()
        for g in self.frees[s].generators:
            span = t - g.degree.stem
            if span < 0:
                continue
            for w in range(g.degree.weight, g.degree.weight + span // 2 + 1):
                ws.add(w)
        return sorted(ws)


def _candidate_weights(free: FreeModule, module: GradedModule, t: int, use_module: bool) -> list[int]:
    ws: set[int] = set()
    for g in free.generators:
        span = t - g.degree.stem
        if span < 0:
            continue
        for w in range(g.degree.weight, g.degree.weight + span // 2 + 1):
            ws.add(w)
    if use_module:
        for w in range(t // 2 + 1):
            if module.dim(BiDegree(t, w)):
                ws.add(w)
    return sorted(ws)


def minimal_resolution(
    module: GradedModule,
    max_stem: int,
    max_filt: int,
    max_gens_per_bidegree: int | None = None,
    threads: int = 1,
) -> tuple[Resolution, ExtChart]:
    """Resolve a bounded-below module; returns the resolution and its chart.

    The chart is complete for every (filtration <= max_filt, stem <=
    max_stem).  Raises PartialResultError carrying the completed sub-window
    if a cell needs more than max_gens_per_bidegree new generators.
    """
    algebra = module.algebra
    if algebra.max_stem < max_stem + 2:
        raise ValueError(
            f"algebra window {algebra.max_stem} too small: resolving to stem "
            f"{max_stem} needs coefficients through stem {max_stem + 2}"
        )
    res = Resolution(algebra, module, max_stem, max_filt)
    res.frees = [FreeModule(s) for s in range(max_filt + 1)]
    res.maps = [ModuleMap(algebra, res.frees[0], module)]
    for s in range(1, max_filt + 1):
        res.maps.append(ModuleMap(algebra, res.frees[s], res.frees[s - 1]))

    pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None

    def solve_cell(s: int, d: BiDegree):
        """Kernel of d_s at d, reduced mod the image of d_{s+1} so far."""
        mat = res.maps[s].matrix(d)
        # rows are the source basis, so the kernel of the map is the left
        # kernel of the matrix
        ker = gf2_kernel(mat.transpose())
        img = res.maps[s + 1].matrix(d)
        span = Subspace.from_matrix_rows(img)
        new = []
        for i in range(ker.basis.nrows):
            v = span.reduce(ker.basis.row(i))
            if not v.is_zero():
                new.append(v)
                span = Subspace.from_matrix_rows(
                    span.basis.stack(BitMatrix(span.ambient_dim, (v.bits,)))
                )
        return new

    def cover_cell(d: BiDegree):
        """Module coordinates at d not hit by the augmentation so far."""
        mat = res.maps[0].matrix(d)
        span = Subspace.from_matrix_rows(mat)
        n = module.dim(d)
        new = []
        for c in range(n):
            v = span.reduce(BitVector(n, 1 << c))
            if not v.is_zero():
                new.append(v)
                span = Subspace.from_matrix_rows(
                    span.basis.stack(BitMatrix(n, (v.bits,)))
                )
        return new

    def run(jobs, worker):
        if pool is None or len(jobs) <= 1:
            return [(j, worker(*j)) for j in jobs]
        results = list(pool.map(lambda j: worker(*j), jobs))
        return list(zip(jobs, results))

    try:
        for t in range(0, max_stem + max_filt + 1):
            # new generators of F_0 where the module is not yet covered
            if t <= max_stem:
                jobs = [
                    (BiDegree(t, w),)
                    for w in _candidate_weights(res.frees[0], module, t, True)
                ]
                for (d,), new in run(jobs, cover_cell):
                    if max_gens_per_bidegree is not None and len(new) > max_gens_per_bidegree:
                        raise PartialResultError(
                            f"more than {max_gens_per_bidegree} generators at "
                            f"filtration 0, {d}",
                            res.chart().restricted(max(t - 1 - max_filt, -1)),
                            t - 1 - max_filt,
                        )
                    for v in new:
                        g = res.frees[0].add_generator(d)
                        res.maps[0].set_image(g, v.bits)
            # kernels feeding new generators of F_{s+1}
            s_lo = max(0, t - (max_stem + 1))
            s_hi = min(max_filt - 1, t - 1)
            for s in range(s_lo, s_hi + 1):
                jobs = [
                    (s, BiDegree(t, w))
                    for w in _candidate_weights(res.frees[s], module, t, False)
                ]
                for (s_, d), new in run(jobs, solve_cell):
                    if max_gens_per_bidegree is not None and len(new) > max_gens_per_bidegree:
                        raise PartialResultError(
                            f"more than {max_gens_per_bidegree} generators at "
                            f"filtration {s_ + 1}, {d}",
                            res.chart().restricted(max(t - 1 - max_filt, -1)),
                            t - 1 - max_filt,
                        )
                    for v in new:
                        g = res.frees[s_ + 1].add_generator(d)
                        res.maps[s_ + 1].set_image(g, v.bits)
    finally:
        if pool is not None:
            pool.shutdown()

    return res, res.chart()
