"""Nowhere-zero flow and coloring counts, tension counts, quasipolynomial
reconstruction, Z_2^r group flows, and the explicit 2^c-flow construction
through coforest covers.

Counting never scans (q-1)^|F| assignments: the kernel route enumerates
the mod-q kernel (size q^beta * torsion weight) and filters, while the
subset route evaluates the inclusion-exclusion expansion over the cached
subset profile.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .caps import DEFAULT_ENUM_CAP, check_enum_cap
from .complexes import boundary_matrix
from .errors import (
    BadModulusError,
    BadParamsError,
    HasBridgeError,
    LiftFailedError,
    NotAFlowError,
    RelationMismatchError,
)
from .homology import subset_profile, t_q_of
from .linalg import (
    IntMatrix,
    enumerate_kernel_mod_q,
    kernel_count_mod_q,
    row_lattice_reduce,
)
from .matroid import (
    bridges,
    circuit_kernel_vector,
    coarboricity,
    coforest_cover,
    fundamental_circuit,
    rank_oracle,
)
from .poly import eval_univariate, trim_univariate


@dataclass
class ModularFlow:
    """Facet weights in {0..q-1} lying in the kernel of the top boundary
    map mod q."""

    q: int
    values: tuple

    @property
    def nowhere_zero(self):
        return all(v % self.q for v in self.values)


@dataclass
class GroupFlow2r:
    """Z_2^r flow: one r-bit word per facet, each bit layer a mod-2 flow."""

    r: int
    words: tuple

    @property
    def nowhere_zero(self):
        return all(self.words)


@dataclass
class Quasipolynomial:
    """One exact-integer constituent polynomial per residue class mod the
    period; evaluation picks constituent q % period."""

    period: int
    constituents: tuple
    degree: int

    def evaluate(self, q):
        return eval_univariate(self.constituents[q % self.period], q)


def ridge_count(delta):
    """Rows of the top boundary map (the augmentation row when d = 0)."""
    return boundary_matrix(delta, delta.dimension).matrix.rows


def is_modular_flow(delta, flow):
    top = boundary_matrix(delta, delta.dimension).matrix
    if len(flow.values) != top.cols:
        return False
    return all(v % flow.q == 0 for v in top.mat_vec(flow.values))


def is_group_flow_2r(delta, gf):
    top = boundary_matrix(delta, delta.dimension).matrix
    if len(gf.words) != top.cols:
        return False
    for k in range(gf.r):
        layer = [w >> k & 1 for w in gf.words]
        if any(v % 2 for v in top.mat_vec(layer)):
            return False
    return True


# ---------------------------------------------------------------------------
# counting


def _flow_expansion(delta, q, force=False, jobs=None):
    profile = subset_profile(delta, force=force, jobs=jobs)
    n = len(delta.facets)
    total = 0
    for (size, rank, tors), count in profile.histogram.items():
        term = count * q ** (size - rank) * t_q_of(tors, q)
        total += term if (n - size) % 2 == 0 else -term
    return total


def count_nz_flows(delta, q, method="auto", force=False, jobs=None):
    """Number of nowhere-zero q-flows, by kernel enumeration or by the
    subset inclusion-exclusion expansion (both exact)."""
    if q < 1:
        raise BadModulusError(f"modulus must be >= 1, got {q}")
    n = len(delta.facets)
    if q == 1:
        return 1 if n == 0 else 0
    if method == "auto":
        top = boundary_matrix(delta, delta.dimension).matrix
        method = (
            "kernel_enum"
            if kernel_count_mod_q(top, q) <= DEFAULT_ENUM_CAP
            else "subset_expansion"
        )
    if method == "kernel_enum":
        top = boundary_matrix(delta, delta.dimension).matrix
        return sum(
            1 for v in enumerate_kernel_mod_q(top, q) if all(v)
        )
    if method == "subset_expansion":
        return _flow_expansion(delta, q, force=force, jobs=jobs)
    raise BadParamsError(f"unknown method {method!r}")


def _coloring_expansion(delta, k, force=False, jobs=None):
    profile = subset_profile(delta, force=force, jobs=jobs)
    rows = ridge_count(delta)
    total = 0
    for (size, rank, tors), count in profile.histogram.items():
        term = count * k ** (rows - rank) * t_q_of(tors, k)
        total += term if size % 2 == 0 else -term
    return total


def count_proper_colorings(delta, k, method="auto", force=False, jobs=None):
    """Ridge colorings where no facet's signed boundary sum vanishes."""
    if k < 1:
        raise BadModulusError(f"modulus must be >= 1, got {k}")
    n = len(delta.facets)
    if k == 1:
        return 1 if n == 0 else 0
    rows = ridge_count(delta)
    if method == "auto":
        # brute tolerates up to the enumeration cap but stops paying off
        # well before it; the expansion is exact either way
        method = "brute" if k**rows <= 10**5 else "subset_expansion"
    if method == "brute":
        check_enum_cap(k**rows)
        top = boundary_matrix(delta, delta.dimension).matrix
        cols = [top.column(j) for j in range(top.cols)]
        count = 0
        for chi in product(range(k), repeat=rows):
            if all(
                sum(c * x for c, x in zip(col, chi)) % k for col in cols
            ):
                count += 1
        return count
    if method == "subset_expansion":
        return _coloring_expansion(delta, k, force=force, jobs=jobs)
    raise BadParamsError(f"unknown method {method!r}")


def circuits(delta, force=False, jobs=None):
    """All circuits (minimal rationally dependent facet sets) as bitmasks."""
    profile = subset_profile(delta, force=force, jobs=jobs)
    n = len(delta.facets)
    found = []
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if profile.rank(mask) != size - 1:
            continue
        minimal = True
        m = mask
        while m:
            low = m & -m
            if profile.rank(mask ^ low) != size - 1:
                minimal = False
                break
            m ^= low
        if minimal:
            found.append(mask)
    return found


def count_nz_tensions(delta, k, force=False, jobs=None):
    """Nowhere-zero weightings summing to zero (mod k) along every signed
    circuit relation.

    Computed directly by filtering the solution group of the circuit
    system, then cross-checked against the torsion-weighted chromatic
    relation; a disagreement raises RelationMismatch.
    """
    if k < 1:
        raise BadModulusError(f"modulus must be >= 1, got {k}")
    n = len(delta.facets)
    if k == 1:
        direct = 0 if n else 1
    else:
        circ = circuits(delta, force=force, jobs=jobs)
        if not circ:
            direct = (k - 1) ** n
        else:
            rows = []
            for mask in circ:
                vec = circuit_kernel_vector(delta, mask)
                selected = delta.facets_of_mask(mask)
                row = [0] * n
                for coeff, fi in zip(vec, selected):
                    row[fi] = coeff
                rows.append(row)
            # unimodular row reduction keeps the solution set mod k
            system = IntMatrix(row_lattice_reduce(rows, n), cols=n)
            direct = sum(
                1 for w in enumerate_kernel_mod_q(system, k) if all(w)
            )

    # relation: t_k(full) * C(k) = k^(|F| - beta_d - |R|) * X(k)
    profile = subset_profile(delta, force=force, jobs=jobs)
    full = delta.full_mask
    beta_top = n - profile.rank_full
    t_full = t_q_of(profile.torsion(full), k)
    exp = n - beta_top - ridge_count(delta)
    chromatic = count_proper_colorings(delta, k, force=force, jobs=jobs)
    num = chromatic * k ** max(exp, 0)
    den = t_full * k ** max(-exp, 0)
    if den == 0 or num % den:
        raise RelationMismatchError(
            f"chromatic relation is not an exact multiple at k={k}"
        )
    via_relation = num // den
    if via_relation != direct:
        raise RelationMismatchError(
            f"direct tension count {direct} != relation value {via_relation} at k={k}"
        )
    return direct


# ---------------------------------------------------------------------------
# quasipolynomial


def _interpolate_integer(points):
    """Exact Lagrange interpolation; raises if coefficients are not ints."""
    m = len(points)
    coeffs = [Fraction(0)] * m
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for p, c in enumerate(basis):
                nxt[p + 1] += c
                nxt[p] -= c * xj
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for p, c in enumerate(basis):
            coeffs[p] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer interpolated coefficient {c}")
        out.append(int(c))
    return trim_univariate(out)


def flow_quasipolynomial(delta, force=False, jobs=None):
    """Reconstruct the flow count as a quasipolynomial.

    The period is the lcm of every torsion invariant factor over all facet
    subsets (each expansion term is periodic with that period); each
    residue class is interpolated through beta_d + 1 exact evaluations and
    re-verified at two fresh moduli.
    """
    profile = subset_profile(delta, force=force, jobs=jobs)
    n = len(delta.facets)
    period = profile.torsion_period()
    degree = n - profile.rank_full

    def phi(q):
        return count_nz_flows(delta, q, method="subset_expansion", force=force)

    constituents = []
    for residue in range(period):
        q0 = residue if residue >= 1 else period
        qs = [q0 + j * period for j in range(degree + 1)]
        coeffs = _interpolate_integer([(q, phi(q)) for q in qs])
        for j in range(degree + 1, degree + 3):
            q = q0 + j * period
            if eval_univariate(coeffs, q) != phi(q):
                raise ArithmeticError(
                    f"constituent for residue {residue} fails at q={q}"
                )
        constituents.append(tuple(coeffs))
    return Quasipolynomial(
        period=period, constituents=tuple(constituents), degree=degree
    )


# ---------------------------------------------------------------------------
# Z_2^r flows and lifting


def enumerate_mod2_kernel(delta, cap=None):
    top = boundary_matrix(delta, delta.dimension).matrix
    return list(enumerate_kernel_mod_q(top, 2, cap=cap))


def count_nz_group_flows_2r(delta, r, cap=None):
    """Number of Z_2^r flows whose facet words are all nonzero: r-tuples
    of mod-2 kernel vectors jointly covering every facet."""
    if r < 1:
        raise BadParamsError(f"exponent must be >= 1, got {r}")
    top = boundary_matrix(delta, delta.dimension).matrix
    kernel_size = kernel_count_mod_q(top, 2)
    check_enum_cap(kernel_size**r, cap)
    vectors = enumerate_mod2_kernel(delta, cap=cap)
    supports = []
    for v in vectors:
        mask = 0
        for i, x in enumerate(v):
            if x:
                mask |= 1 << i
        supports.append(mask)
    full = delta.full_mask
    union_all = 0
    for s in supports:
        union_all |= s
    memo = {}

    def walk(depth, covered):
        if covered | union_all != full:
            return 0
        if depth == r:
            return 1 if covered == full else 0
        key = (depth, covered)
        got = memo.get(key)
        if got is None:
            got = sum(walk(depth + 1, covered | s) for s in supports)
            memo[key] = got
        return got

    return walk(0, 0)


def _signed_lift(delta, support_mask):
    """Signed {-1,0,1} integral kernel vector congruent mod 2 to the
    indicator of `support_mask`, or None when no such lift exists."""
    top = boundary_matrix(delta, delta.dimension).matrix
    sup = delta.facets_of_mask(support_mask)
    if not sup:
        return [0] * top.cols
    touched = sorted({i for j in sup for i in range(top.rows) if top.data[i][j]})
    row_local = {r: i for i, r in enumerate(touched)}
    col_rows = [
        [(row_local[i], top.data[i][j]) for i in touched if top.data[i][j]]
        for j in sup
    ]
    remaining = [0] * len(touched)
    for entries in col_rows:
        for r, _ in entries:
            remaining[r] += 1
    cur = [0] * len(touched)
    signs = [0] * len(sup)

    def dfs(pos):
        if pos == len(sup):
            return True
        for v in (1, -1):
            ok = True
            for r, s in col_rows[pos]:
                cur[r] += s * v
                remaining[r] -= 1
            for r, _ in col_rows[pos]:
                if abs(cur[r]) > remaining[r]:
                    ok = False
                    break
            if ok and dfs(pos + 1):
                signs[pos] = v
                return True
            for r, s in col_rows[pos]:
                cur[r] -= s * v
                remaining[r] += 1
        return False

    if not dfs(0):
        return None
    out = [0] * top.cols
    for j, v in zip(sup, signs):
        out[j] = v
    return out


def lift_z2r_flow(delta, gf):
    """Lift a Z_2^r flow to a modular 2^r flow.

    Each bit layer is lifted to a signed {-1,0,1} integer flow with the
    same odd support, then layers are combined binarily; binary uniqueness
    makes the result nowhere-zero wherever the input word is nonzero.
    """
    if not is_group_flow_2r(delta, gf):
        raise NotAFlowError("bit layers are not all mod-2 flows")
    n = len(delta.facets)
    q = 1 << gf.r
    lifted = []
    for k in range(gf.r):
        mask = 0
        for i, w in enumerate(gf.words):
            if w >> k & 1:
                mask |= 1 << i
        layer = _signed_lift(delta, mask)
        if layer is None:
            raise LiftFailedError(f"bit layer {k} admits no signed integral lift")
        lifted.append(layer)
    values = []
    for i in range(n):
        y = sum(lifted[k][i] << k for k in range(gf.r))
        values.append(y % q)
    flow = ModularFlow(q=q, values=tuple(values))
    if not is_modular_flow(delta, flow):
        raise ArithmeticError("lifted vector is not a flow; lift is broken")
    return flow


def jaeger_flow(delta, force=False, jobs=None):
    """Explicit nowhere-zero 2^c flow on a bridgeless complex, where c is
    the coarboricity.

    Pipeline: dual Edmonds bound -> exact coforest cover -> per part, the
    mod-2 sum of fundamental circuits of its facets against a maximal
    forest avoiding the part -> assemble the Z_2^c flow -> lift.
    """
    bad = bridges(delta)
    if bad:
        raise HasBridgeError(f"facets {bad} are bridges; no nowhere-zero flow")
    c = coarboricity(delta, force=force, jobs=jobs)
    cover = coforest_cover(delta, c, force=force)
    oracle = rank_oracle(delta)
    n = len(delta.facets)
    full_rank = oracle.full_rank
    words = [0] * n
    for k, part in enumerate(cover.parts):
        base = 0
        r = 0
        for f in range(n):
            if part >> f & 1:
                continue
            cand = base | 1 << f
            if oracle.rank(cand) > r:
                base = cand
                r += 1
        if r != full_rank:
            raise ArithmeticError("complement of a coforest failed to span")
        layer = 0
        m = part
        while m:
            low = m & -m
            layer ^= fundamental_circuit(delta, base, low.bit_length() - 1)
            m ^= low
        for i in range(n):
            if layer >> i & 1:
                words[i] |= 1 << k
    gf = GroupFlow2r(r=c, words=tuple(words))
    flow = lift_z2r_flow(delta, gf)
    if not flow.nowhere_zero:
        raise LiftFailedError("pipeline produced a flow with a zero entry")
    return flow


def min_flow_number(delta, q_max, force=False, jobs=None):
    """Least modulus in 2..q_max with a nowhere-zero flow, else None."""
    if q_max < 2:
        raise BadParamsError(f"q_max must be >= 2, got {q_max}")
    for q in range(2, q_max + 1):
        if count_nz_flows(delta, q, force=force, jobs=jobs) > 0:
            return q
    return None
