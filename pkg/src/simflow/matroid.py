"""The simplicial matroid (column matroid of the top boundary map), its
dual, and the covering machinery behind the flow-construction pipeline:
bridges, facet cuts, forests, fundamental circuits, the Edmonds covering
bound, and exact coforest covers.
"""

from dataclasses import dataclass

from .caps import check_subset_cap
from .complexes import restrict_columns
from .errors import (
    CapExceededError,
    FacetInBaseError,
    IndexOutOfRangeError,
    InfeasibleError,
    NotABaseError,
)
from .homology import codim1_cycle_rank, subset_profile
from .linalg import kernel_basis, snf_diagonal


class RankOracle:
    """Memoized matroid rank by facet bitmask.

    rank(X) is the rational rank of the boundary columns of X, i.e.
    |X| - beta_d(X). Reuses the complex's subset profile when one has
    already been swept; otherwise eliminates per queried mask.
    """

    def __init__(self, delta):
        self.delta = delta
        self.ground_size = len(delta.facets)
        self._memo = {0: 0}

    def rank(self, mask):
        profile = self.delta._cache.get("subset_profile")
        if profile is not None:
            return profile.rank(mask)
        r = self._memo.get(mask)
        if r is None:
            bm = restrict_columns(self.delta, mask)
            r = len(snf_diagonal([list(row) for row in bm.matrix.data]))
            self._memo[mask] = r
        return r

    @property
    def full_rank(self):
        return self.rank((1 << self.ground_size) - 1)

    def subset_rank_pairs(self, force=False, jobs=None):
        """(size, rank, count) over all subsets, via the shared sweep."""
        profile = subset_profile(self.delta, force=force, jobs=jobs)
        pairs = {}
        for (size, rank, _), count in profile.histogram.items():
            pairs[(size, rank)] = pairs.get((size, rank), 0) + count
        return [(s, r, c) for (s, r), c in sorted(pairs.items())]

    def dual(self):
        return DualRankOracle(self)


class DualRankOracle:
    """corank r*(X) = |X| + r(F \\ X) - r(F)."""

    def __init__(self, primal):
        self.primal = primal
        self.ground_size = primal.ground_size

    def rank(self, mask):
        full = (1 << self.ground_size) - 1
        return (
            mask.bit_count()
            + self.primal.rank(full & ~mask)
            - self.primal.full_rank
        )

    def subset_rank_pairs(self, force=False, jobs=None):
        n = self.ground_size
        full_rank = self.primal.full_rank
        pairs = {}
        for size_y, rank_y, count in self.primal.subset_rank_pairs(
            force=force, jobs=jobs
        ):
            key = (n - size_y, n - size_y + rank_y - full_rank)
            pairs[key] = pairs.get(key, 0) + count
        return [(s, r, c) for (s, r), c in sorted(pairs.items())]


def rank_oracle(delta):
    oracle = delta._cache.get("rank_oracle")
    if oracle is None:
        oracle = RankOracle(delta)
        delta._cache["rank_oracle"] = oracle
    return oracle


def matroid_rank(delta, mask):
    return rank_oracle(delta).rank(mask)


def matroid_corank(delta, mask):
    """|X| + beta_{d-1}(full) - beta_{d-1}(complement), equivalently the
    dual rank formula; both reduce to ranks of restricted boundary maps."""
    return rank_oracle(delta).dual().rank(mask)


def is_bridge(delta, facet_index):
    """A facet whose removal raises the codimension-1 Betti number."""
    n = len(delta.facets)
    if not 0 <= facet_index < n:
        raise IndexOutOfRangeError(f"facet index {facet_index} out of range")
    return matroid_corank(delta, 1 << facet_index) == 0


def bridges(delta):
    return [f for f in range(len(delta.facets)) if is_bridge(delta, f)]


@dataclass
class FacetConnectivity:
    """Least cut size found; `exact` is False when the search bound was
    exhausted (value is then k_max + 1, a lower bound)."""

    value: int
    witness: int
    exact: bool


def facet_connectivity(delta, k_max=None):
    """Smallest k admitting a k-facet-cut, with its first witness.

    Witnesses are searched in size order, ties broken by ascending bitmask
    value. Cuts are sets whose removal raises beta_{d-1}, i.e. whose
    complement has deficient rank.
    """
    from itertools import combinations

    n = len(delta.facets)
    if k_max is None:
        k_max = n
    oracle = rank_oracle(delta)
    full = delta.full_mask
    full_rank = oracle.full_rank

    bound = min(k_max, n)
    try:
        profile = subset_profile(delta)
        deficient_sizes = [
            size
            for (size, rank, _) in profile.histogram
            if rank < full_rank
        ]
        least = n - max(deficient_sizes) if deficient_sizes else None
        if least is None or least > k_max:
            return FacetConnectivity(value=k_max + 1, witness=0, exact=False)
        sizes = [least]
    except CapExceededError:
        sizes = range(1, bound + 1)

    for k in sizes:
        masks = sorted(
            sum(1 << i for i in combo) for combo in combinations(range(n), k)
        )
        for mask in masks:
            if oracle.rank(full & ~mask) < full_rank:
                return FacetConnectivity(value=k, witness=mask, exact=True)
    return FacetConnectivity(value=k_max + 1, witness=0, exact=False)


@dataclass
class ForestFlags:
    forest: bool
    maximal: bool
    tree: bool
    spanning_tree: bool


def classify_forest(delta, mask):
    """Forest/maximal/tree/spanning flags from rank data.

    forest: beta_d(X) = 0; maximal: beta_{d-1}(X) = beta_{d-1}(full);
    tree: beta_{d-1}(X) = 0; spanning tree: tree with beta_{d-1}(full) = 0.
    """
    oracle = rank_oracle(delta)
    r = oracle.rank(mask)
    size = mask.bit_count()
    z = codim1_cycle_rank(delta)
    full_rank = oracle.full_rank
    forest = r == size
    maximal = r == full_rank
    tree = r == z
    return ForestFlags(
        forest=forest,
        maximal=maximal,
        tree=tree,
        spanning_tree=tree and z == full_rank,
    )


def circuit_kernel_vector(delta, mask):
    """Primitive integer kernel vector of the boundary columns of `mask`;
    requires nullity exactly 1. Returned dense over the selected facets."""
    bm = restrict_columns(delta, mask)
    basis = kernel_basis(bm.matrix)
    if len(basis) != 1:
        raise ValueError(f"expected nullity 1, got {len(basis)}")
    return basis[0]


def fundamental_circuit(delta, base_mask, facet_index):
    """Support of the unique rational dependency in base + one facet."""
    n = len(delta.facets)
    if not 0 <= facet_index < n:
        raise IndexOutOfRangeError(f"facet index {facet_index} out of range")
    if base_mask >> facet_index & 1:
        raise FacetInBaseError(f"facet {facet_index} already in the base")
    flags = classify_forest(delta, base_mask)
    if not (flags.forest and flags.maximal):
        raise NotABaseError("base must be a maximal forest")
    ext = base_mask | 1 << facet_index
    vec = circuit_kernel_vector(delta, ext)
    selected = delta.facets_of_mask(ext)
    circuit = 0
    for coeff, fi in zip(vec, selected):
        if coeff:
            circuit |= 1 << fi
    return circuit


def edmonds_covering_number(oracle, force=False, jobs=None):
    """Least c with c * r(X) >= |X| for every subset X of the ground set.

    Applied to a dual oracle this is the coarboricity. Raises Infeasible
    when some nonempty subset has rank zero (a loop; no covering by
    independent sets exists).
    """
    check_subset_cap(oracle.ground_size, force=force)
    c = 1
    for size, rank, _count in oracle.subset_rank_pairs(force=force, jobs=jobs):
        if size == 0:
            continue
        if rank <= 0:
            raise InfeasibleError(
                "ground set contains a loop; no independent-set cover exists"
            )
        need = -(-size // rank)
        if need > c:
            c = need
    return c


def coarboricity(delta, force=False, jobs=None):
    return edmonds_covering_number(rank_oracle(delta).dual(), force=force, jobs=jobs)


@dataclass
class CoforestCover:
    """Facet subsets, each coindependent, jointly covering all facets.

    `minimal` records whether the part count was certified against the
    dual Edmonds bound (the greedy fast path makes no such claim).
    """

    parts: list
    minimal: bool = True


def coforest_cover(delta, c, force=False):
    """Exact backtracking cover of the facets by c coforests.

    A part B stays coindependent iff rank(F \\ B) = rank(F). Facets are
    assigned in index order; parts are tried least-filled first (ties by
    part index) with the dual-Edmonds bound and a part-capacity bound as
    pruning. Raises Infeasible when no c-part cover exists.
    """
    n = len(delta.facets)
    oracle = rank_oracle(delta)
    full = delta.full_mask
    full_rank = oracle.full_rank
    max_part = n - full_rank  # coindependent sets never exceed the corank
    if c >= 1:
        try:
            bound = edmonds_covering_number(oracle.dual(), force=force)
        except InfeasibleError:
            raise InfeasibleError(
                "a bridge lies in no coforest; no cover of any size exists"
            )
        if c < bound:
            raise InfeasibleError(
                f"dual Edmonds bound {bound} exceeds requested parts {c}"
            )
    parts = [0] * c

    def feasible(part_mask):
        return oracle.rank(full & ~part_mask) == full_rank

    def assign(facet):
        if facet == n:
            return True
        remaining = n - facet
        capacity = sum(max_part - p.bit_count() for p in parts)
        if remaining > capacity:
            return False
        order = sorted(range(c), key=lambda i: (parts[i].bit_count(), i))
        tried = set()
        for i in order:
            key = parts[i]
            if key in tried:  # identical parts are interchangeable
                continue
            tried.add(key)
            if key.bit_count() >= max_part:
                continue
            cand = key | 1 << facet
            if feasible(cand):
                parts[i] = cand
                if assign(facet + 1):
                    return True
                parts[i] = key
        return False

    if not assign(0):
        raise InfeasibleError(f"no cover with {c} coforests exists")
    return CoforestCover(parts=list(parts))
