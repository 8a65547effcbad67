"""Reduced homology of facet subsets, plus the subset sweep that powers
every 2^|F| expansion downstream.

A facet subset X is always read as X together with the full codimension-1
skeleton, so only the top boundary map changes between subsets. Everything
a subset expansion needs (both Betti numbers and the torsion of the
codimension-1 homology) is a function of the Smith diagonal of the
restricted top boundary map; the sweep computes those diagonals once per
block component of that map and assembles a histogram keyed by
(subset size, rank, torsion multiset).
"""

from collections import Counter
from dataclasses import dataclass
from math import gcd, prod

from .caps import check_subset_cap
from .complexes import boundary_matrix, facet_components, restrict_columns
from .errors import BadModulusError
from .linalg import snf_diagonal


@dataclass
class HomologySummary:
    """Reduced Betti numbers for 0..d and torsion invariant factors for
    0..d-1 (top homology is free)."""

    betti: dict
    torsion: dict


def _skeleton_snfs(delta):
    """Smith diagonals of the boundary maps in dimensions 0..d, cached."""
    snfs = delta._cache.get("skeleton_snfs")
    if snfs is None:
        snfs = {
            n: tuple(snf_diagonal([list(r) for r in boundary_matrix(delta, n).matrix.data]))
            for n in range(delta.dimension + 1)
        }
        delta._cache["skeleton_snfs"] = snfs
    return snfs


def codim1_cycle_rank(delta):
    """Nullity of the boundary map one dimension below the top.

    For d = 0 the chain complex bottoms out at the augmentation target Z,
    whose (zero) boundary map has nullity 1.
    """
    d = delta.dimension
    if d == 0:
        return 1
    snfs = _skeleton_snfs(delta)
    return len(delta.faces(d - 1)) - len(snfs[d - 1])


def _restricted_diagonal(delta, mask):
    cache = delta._cache.setdefault("subset_diagonals", {})
    diag = cache.get(mask)
    if diag is None:
        bm = restrict_columns(delta, mask)
        diag = tuple(snf_diagonal([list(r) for r in bm.matrix.data]))
        cache[mask] = diag
    return diag


def homology_summary(delta, mask=None):
    """Betti numbers and torsion of X u (full lower skeleton)."""
    d = delta.dimension
    if mask is None:
        mask = delta.full_mask
    snfs = _skeleton_snfs(delta)
    top_diag = _restricted_diagonal(delta, mask)
    top_rank = len(top_diag)
    size = mask.bit_count()

    betti = {}
    torsion = {}
    betti[d] = size - top_rank
    if d >= 1:
        betti[d - 1] = codim1_cycle_rank(delta) - top_rank
        torsion[d - 1] = [m for m in top_diag if m > 1]
    for n in range(d - 1):
        nullity_n = len(delta.faces(n)) - len(snfs[n])
        betti[n] = nullity_n - len(snfs[n + 1])
        torsion[n] = [m for m in snfs[n + 1] if m > 1]
    return HomologySummary(betti=betti, torsion=torsion)


def torsion_weight(delta, mask, q):
    """|Tor(H_{d-1}(X), Z_q)| = product of gcd(m, q) over the invariant
    factors m of the codimension-1 torsion; 1 when torsion is trivial."""
    if q < 1:
        raise BadModulusError(f"modulus must be >= 1, got {q}")
    diag = _restricted_diagonal(delta, mask)
    return prod(gcd(m, q) for m in diag if m > 1)


def t_q_of(torsion_tuple, q):
    return prod(gcd(m, q) for m in torsion_tuple)


# ---------------------------------------------------------------------------
# subset sweep


def _component_sweep(cols, nrows, start, end):
    """(rank, torsion) of every column subset of one block component.

    `cols` holds each column as a tuple of (row, sign) pairs. Returns a
    bytearray of ranks and a dict of the (rare) masks with torsion.
    """
    ranks = bytearray(end - start)
    torsions = {}
    intern = {}
    sel = []
    ncols = len(cols)
    for mask in range(start, end):
        sel.clear()
        m = mask
        k = 0
        while m:
            if m & 1:
                sel.append(cols[k])
            m >>= 1
            k += 1
        nc = len(sel)
        rows = [[0] * nc for _ in range(nrows)]
        for j, col in enumerate(sel):
            for r, s in col:
                rows[r][j] = s
        diag = snf_diagonal(rows)
        ranks[mask - start] = len(diag)
        if diag and diag[-1] > 1:
            tup = tuple(m for m in diag if m > 1)
            torsions[mask - start] = intern.setdefault(tup, tup)
    return ranks, torsions


class SubsetProfile:
    """Per-subset rank/torsion of the restricted top boundary map.

    Data is stored per block component; the global histogram counts
    subsets by (size, rank, torsion multiset) and is what the polynomial
    expansions consume.
    """

    def __init__(self, delta, components, comp_ranks, comp_torsions):
        self.delta = delta
        self.components = components
        self.comp_ranks = comp_ranks
        self.comp_torsions = comp_torsions
        self.rank_full = sum(int(r[-1]) for r in comp_ranks) if components else 0
        self.histogram = self._assemble_histogram()

    def _assemble_histogram(self):
        hist = Counter({(0, 0, ()): 1})
        for comp, ranks, tors in zip(
            self.components, self.comp_ranks, self.comp_torsions
        ):
            local = Counter()
            for mask in range(len(ranks)):
                key = (mask.bit_count(), ranks[mask], tors.get(mask, ()))
                local[key] += 1
            merged = Counter()
            for (s1, r1, t1), c1 in hist.items():
                for (s2, r2, t2), c2 in local.items():
                    t = tuple(sorted(t1 + t2)) if (t1 or t2) else ()
                    merged[(s1 + s2, r1 + r2, t)] += c1 * c2
            hist = merged
        return hist

    def _local_mask(self, comp, mask):
        local = 0
        for k, fi in enumerate(comp):
            if mask >> fi & 1:
                local |= 1 << k
        return local

    def rank(self, mask):
        if len(self.components) == 1:
            return self.comp_ranks[0][mask]
        total = 0
        for comp, ranks in zip(self.components, self.comp_ranks):
            total += ranks[self._local_mask(comp, mask)]
        return total

    def torsion(self, mask):
        out = []
        for comp, tors in zip(self.components, self.comp_torsions):
            local = mask if len(self.components) == 1 else self._local_mask(comp, mask)
            out.extend(tors.get(local, ()))
        return tuple(sorted(out))

    def torsion_period(self):
        """lcm of every torsion invariant factor seen across all subsets."""
        period = 1
        for (_, _, tors) in self.histogram:
            for m in tors:
                period = period * m // gcd(period, m)
        return period


def _parallel_ranges(total, jobs):
    step = (total + jobs - 1) // jobs
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def subset_profile(delta, force=False, jobs=None):
    """Compute (cached) the SubsetProfile of a complex.

    Refuses complexes with more facets than the subset cap unless forced.
    `jobs` > 1 splits each component's mask range over worker processes;
    the result does not depend on it.
    """
    profile = delta._cache.get("subset_profile")
    if profile is not None:
        return profile
    check_subset_cap(len(delta.facets), force=force)

    top = boundary_matrix(delta, delta.dimension).matrix
    components = facet_components(delta)
    comp_ranks = []
    comp_torsions = []
    for comp in components:
        touched = sorted(
            {i for j in comp for i in range(top.rows) if top.data[i][j]}
        )
        row_local = {r: i for i, r in enumerate(touched)}
        cols = [
            tuple(
                (row_local[i], top.data[i][j]) for i in touched if top.data[i][j]
            )
            for j in comp
        ]
        total = 1 << len(comp)
        if jobs and jobs > 1 and total >= 1 << 12:
            from concurrent.futures import ProcessPoolExecutor

            ranks = bytearray(total)
            torsions = {}
            ranges = _parallel_ranges(total, jobs)
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [
                    pool.submit(_component_sweep, cols, len(touched), a, b)
                    for a, b in ranges
                ]
                for (a, _), fut in zip(ranges, futures):
                    part_ranks, part_tors = fut.result()
                    ranks[a : a + len(part_ranks)] = part_ranks
                    for local, tup in part_tors.items():
                        torsions[a + local] = tup
        else:
            ranks, torsions = _component_sweep(cols, len(touched), 0, total)
        comp_ranks.append(ranks)
        comp_torsions.append(torsions)

    profile = SubsetProfile(delta, components, comp_ranks, comp_torsions)
    delta._cache["subset_profile"] = profile
    return profile
