"""The TKR polynomial family: subset expansions through Betti numbers,
the torsion-weighted q-version, the matroid-rank route, Bott's R
polynomial under both sign readings, and the specialization/duality
cross-checks.
"""

from dataclasses import dataclass, field
from math import comb

from .caps import DEFAULT_ENUM_CAP
from .complexes import boundary_matrix
from .errors import BadModulusError, BadParamsError
from .flows import count_nz_flows, count_proper_colorings, ridge_count
from .homology import subset_profile, t_q_of
from .linalg import kernel_count_mod_q
from .poly import BivariatePolynomial, trim_univariate


def tkr_polynomial(delta, force=False, jobs=None):
    """Sum over facet subsets of (x-1)^(drop in codim-1 Betti) times
    (y-1)^(top Betti), expanded to the monomial basis."""
    profile = subset_profile(delta, force=force, jobs=jobs)
    full_rank = profile.rank_full
    poly = BivariatePolynomial()
    for (size, rank, _), count in profile.histogram.items():
        poly.add_shifted_term(full_rank - rank, size - rank, count)
    return poly


def q_tkr_polynomial(delta, q, force=False, jobs=None):
    """TKR weighted per subset by t_q = |Tor(H_{d-1}(X), Z_q)|."""
    if q < 1:
        raise BadModulusError(f"modulus must be >= 1, got {q}")
    profile = subset_profile(delta, force=force, jobs=jobs)
    full_rank = profile.rank_full
    poly = BivariatePolynomial()
    for (size, rank, tors), count in profile.histogram.items():
        poly.add_shifted_term(
            full_rank - rank, size - rank, count * t_q_of(tors, q)
        )
    return poly


def matroid_tutte(oracle, force=False, jobs=None):
    """Tutte polynomial straight from the rank function (no homology)."""
    pairs = oracle.subset_rank_pairs(force=force, jobs=jobs)
    full_rank = max(r for s, r, _ in pairs if s == oracle.ground_size)
    poly = BivariatePolynomial()
    for size, rank, count in pairs:
        poly.add_shifted_term(full_rank - rank, size - rank, count)
    return poly


def bott_r_polynomial(delta, sign_convention="literal", force=False, jobs=None):
    """Bott's R polynomial in lambda, ascending coefficients.

    literal: sum of (-1)^|X| lambda^beta_d(X); complemented flips the sign
    exponent to |F| - |X|. Both are exposed because they disagree on odd
    facet counts.
    """
    if sign_convention not in ("literal", "complemented"):
        raise BadParamsError(f"unknown sign convention {sign_convention!r}")
    profile = subset_profile(delta, force=force, jobs=jobs)
    n = len(delta.facets)
    out = {}
    for (size, rank, _), count in profile.histogram.items():
        e = size - rank
        flip = size if sign_convention == "literal" else n - size
        out[e] = out.get(e, 0) + (count if flip % 2 == 0 else -count)
    deg = max(out, default=0)
    return trim_univariate([out.get(i, 0) for i in range(deg + 1)])


def _compose_one_minus(coeffs):
    """f(y) with ascending coeffs -> f(1 - t) ascending in t."""
    out = [0] * max(len(coeffs), 1)
    for j, c in enumerate(coeffs):
        for i in range(j + 1):
            out[i] += c * comb(j, i) * (1 if i % 2 == 0 else -1)
    return trim_univariate(out)


@dataclass
class SpecializationCheck:
    q: int
    flow_direct: int
    flow_specialized: int
    flows_ok: bool
    coloring_direct: int
    colorings_ok: bool
    plain_flow_ok: bool = None


@dataclass
class SpecializationReport:
    torsion_free: bool
    bott_complemented_ok: bool
    bott_literal_ok: bool
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        if not self.bott_complemented_ok:
            return False
        for c in self.checks:
            if not (c.flows_ok and c.colorings_ok):
                return False
            if c.plain_flow_ok is False:
                return False
        return True


def check_specializations(delta, q_list, force=False, jobs=None):
    """Per modulus: flow and coloring counts against their torsion-weighted
    TKR specializations; plus the Bott identity at polynomial level, and
    the plain-TKR identities when no subset carries torsion."""
    profile = subset_profile(delta, force=force, jobs=jobs)
    n = len(delta.facets)
    rows = ridge_count(delta)
    beta_top = n - profile.rank_full
    torsion_free = all(not tors for (_, _, tors) in profile.histogram)
    flow_sign = -1 if beta_top % 2 else 1
    col_sign = -1 if (n - beta_top) % 2 else 1
    col_exp = rows - n + beta_top

    plain = tkr_polynomial(delta, force=force, jobs=jobs)
    spec_poly = [flow_sign * c for c in _compose_one_minus(plain.substitute_x(0))]
    bott_complemented_ok = (
        bott_r_polynomial(delta, "complemented", force=force) == trim_univariate(spec_poly)
    )
    bott_literal_ok = (
        bott_r_polynomial(delta, "literal", force=force) == trim_univariate(spec_poly)
    )

    report = SpecializationReport(
        torsion_free=torsion_free,
        bott_complemented_ok=bott_complemented_ok,
        bott_literal_ok=bott_literal_ok,
    )
    top = boundary_matrix(delta, delta.dimension).matrix
    for q in q_list:
        if kernel_count_mod_q(top, q) <= DEFAULT_ENUM_CAP:
            flow_direct = count_nz_flows(delta, q, method="kernel_enum")
        else:
            flow_direct = count_nz_flows(
                delta, q, method="subset_expansion", force=force, jobs=jobs
            )
        qt = q_tkr_polynomial(delta, q, force=force, jobs=jobs)
        flow_specialized = flow_sign * qt.evaluate(0, 1 - q)

        coloring_direct = count_proper_colorings(
            delta, q, force=force, jobs=jobs
        )
        col_special = col_sign * qt.evaluate(1 - q, 0)
        lhs = coloring_direct * q ** max(-col_exp, 0)
        rhs = col_special * q ** max(col_exp, 0)

        plain_flow_ok = None
        if torsion_free:
            plain_flow_ok = flow_direct == flow_sign * plain.evaluate(0, 1 - q)

        report.checks.append(
            SpecializationCheck(
                q=q,
                flow_direct=flow_direct,
                flow_specialized=flow_specialized,
                flows_ok=flow_direct == flow_specialized,
                coloring_direct=coloring_direct,
                colorings_ok=lhs == rhs,
                plain_flow_ok=plain_flow_ok,
            )
        )
    return report


@dataclass
class DualityCheck:
    q: int
    qtkr_swap_ok: bool
    scalar_ok: bool
    flow_value: int
    coloring_value: int


@dataclass
class DualityReport:
    plain_swap_ok: bool
    eps: int
    scale_exponent: int
    sign: int
    checks: list = field(default_factory=list)


def check_duality_swap(a, b, q_list, force=False, jobs=None):
    """Verify the variable swap between a claimed dual pair, and the
    scalar flow/coloring relation with sign and power computed from the
    pair's own face counts."""
    profile_a = subset_profile(a, force=force, jobs=jobs)
    profile_b = subset_profile(b, force=force, jobs=jobs)
    beta_a = len(a.facets) - profile_a.rank_full
    beta_b = len(b.facets) - profile_b.rank_full
    eps = len(b.facets) - beta_b - beta_a
    scale = ridge_count(b) - len(b.facets) + beta_b
    sign = -1 if eps % 2 else 1

    plain_swap_ok = (
        tkr_polynomial(a, force=force, jobs=jobs)
        == tkr_polynomial(b, force=force, jobs=jobs).swap_variables()
    )
    report = DualityReport(
        plain_swap_ok=plain_swap_ok, eps=eps, scale_exponent=scale, sign=sign
    )
    for q in q_list:
        qtkr_ok = (
            q_tkr_polynomial(a, q, force=force, jobs=jobs)
            == q_tkr_polynomial(b, q, force=force, jobs=jobs).swap_variables()
        )
        flow_value = count_nz_flows(a, q, force=force, jobs=jobs)
        coloring_value = count_proper_colorings(b, q, force=force, jobs=jobs)
        lhs = sign * flow_value * q ** max(scale, 0)
        rhs = coloring_value * q ** max(-scale, 0)
        report.checks.append(
            DualityCheck(
                q=q,
                qtkr_swap_ok=qtkr_ok,
                scalar_ok=lhs == rhs,
                flow_value=flow_value,
                coloring_value=coloring_value,
            )
        )
    return report
