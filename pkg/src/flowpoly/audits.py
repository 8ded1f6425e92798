"""Structural invariants, classification, and mechanical inequality audits.

For a connected bridgeless multigraph G with flow polynomial F this module
computes the invariant bundle (cycle rank, degree excess, 3-edge-cut count,
high-degree-vertex count, block count, degree histogram), classifies G with
respect to two families:

  in-G   bridgeless, at least one edge, and F has real roots only;
  in-G0  additionally nonseparable, 3-edge-connected, without a proper
         3-edge cut, and G - e nonseparable for every edge e;

and audits a fixed registry of claims about such graphs.  Each claim is a
concrete identity or inequality; its audit record carries one of four
statuses.  "pass"/"fail" mean the comparison was decided exactly (integer or
rational arithmetic, or certified interval separation).  "not-applicable"
means the claim's hypotheses do not hold for this graph.  "inconclusive"
means an interval-valued quantity (the root-gap sum, or a cubic-root
threshold) still straddled the bound after one refinement step.

Claim identifiers are part of the external interface and are kept stable:
le00, le1-i, le1-ii, lem30-i .. lem30-vii, wakelin-i, wakelin-ii,
wakelin-iii, main-lem1-i, main-lem1-ii, main-th-i, cor-main-lem1-cor0,
sect1-cor.

The quantities audited against irrational thresholds never touch floats.
The threshold involving sqrt(2) is decided by exact squaring; the cubic
root thresholds carry certified rational enclosures; the root-gap sum
omega = sum of (2 - u) over roots u in (1,2) is itself a certified interval.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .flow import flow_poly
from .multigraph import (
    FaceStructure,
    MultiGraph,
    blocks,
    bridges,
    build_dual,
    canonical_code,
    delete_edge,
    edge_cuts,
    is_3_edge_connected,
    is_chordal,
    is_connected,
    is_nonseparable,
)
from .polyalg import (
    IntPoly,
    RootProfile,
    cauchy_bound,
    exact_divide,
    isolate_single_root,
    root_profile,
    sturm_count,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
INCONCLUSIVE = "inconclusive"

# how much the tolerance shrinks when a threshold comparison overlaps
_REFINE_FACTOR = 10**3


@dataclass(frozen=True)
class Invariants:
    """Invariant bundle of a connected bridgeless multigraph.

    degree_excess is 2m - 3n, the total degree surplus over a cubic graph;
    three_edge_cut_count counts edge subsets (not bipartitions) that are
    3-edge cuts; high_degree_count is the number of vertices of degree at
    least 4; mean_high_degree is (2m - 3(n-k))/k for k high-degree vertices,
    which is their average degree when every other vertex has degree 3, and
    None when k = 0.
    """

    n: int
    m: int
    cycle_rank: int
    degree_excess: int
    three_edge_cut_count: int
    has_proper_three_cut: bool
    high_degree_count: int
    block_count: int
    degree_histogram: tuple[tuple[int, int], ...]
    mean_high_degree: Fraction | None


def compute_invariants(g: MultiGraph) -> Invariants:
    """Compute the invariant bundle; raises on disconnected or bridged input.

    Internal consistency relations are asserted: the linear identities
    between n, m, cycle rank and degree excess always, the histogram form of
    the degree excess when minimum degree is 3, and (for n >= 3) that the
    3-edge-cut count exceeds the count of degree-3 vertices exactly when a
    proper 3-edge cut exists.
    """
    if not is_connected(g):
        raise ValueError("invariants are defined for connected graphs")
    if bridges(g):
        raise ValueError("invariants are defined for bridgeless graphs")
    n, m = g.n, g.m
    degs = g.degrees()
    hist = tuple(sorted(Counter(degs).items()))
    k = sum(1 for d in degs if d >= 4)
    v3 = sum(1 for d in degs if d == 3)
    cuts = edge_cuts(g, 3)
    gamma = len(cuts)
    proper = any(c.proper for c in cuts)
    b = len(blocks(g))
    r = m - n + 1
    alpha = 2 * m - 3 * n

    assert n == 2 * r - 2 - alpha and m == 3 * r - 3 - alpha
    if degs and min(degs) >= 3:
        assert alpha == sum((d - 3) * c for d, c in hist)
        assert k == n - v3
    if n >= 3:
        # vertex stars of degree-3 vertices are distinct improper 3-cuts
        assert gamma >= v3 and (gamma == v3) == (not proper)

    mean = Fraction(2 * m - 3 * (n - k), k) if k else None
    return Invariants(n, m, r, alpha, gamma, proper, k, b, hist, mean)


@dataclass(frozen=True)
class Classification:
    in_G: bool
    in_G0: bool
    integral_roots: bool


def classify(g: MultiGraph, F: IntPoly, prof: RootProfile | None) -> Classification:
    """Membership flags; prof must be the root profile of F (None when F=0).

    A graph with no edges is excluded from in-G: the family is meant to
    carry a flow polynomial of positive degree (its cycle rank is at least
    1), and the edgeless graphs satisfy every root condition vacuously.
    """
    bridgeless = not bridges(g)
    in_g = bridgeless and g.m >= 1 and prof is not None and prof.real_rooted
    in_g0 = (
        in_g
        and is_nonseparable(g)
        and is_3_edge_connected(g)
        and not any(c.proper for c in edge_cuts(g, 3))
        and all(
            is_nonseparable(delete_edge(g, i))
            for i, (u, v) in enumerate(g.edges)
        )
    )
    integral = prof is not None and sum(m for _, m in prof.integer_roots) == prof.degree
    return Classification(in_g, in_g0, integral)


# -- reference constants -----------------------------------------------------

# cubics whose unique root in (1, 2) is the zero-free-interval constant for
# graphs with at most 3, 4, 5 high-degree vertices
_XI_CUBICS = {
    3: IntPoly((-7, 10, -5, 1)),
    4: IntPoly((-6, 8, -4, 1)),
    5: IntPoly((-9, 13, -6, 1)),
}

_XI_LOWER_BOUND = Fraction(32, 27)  # valid for every k; used from k = 6 on


@dataclass(frozen=True)
class XiTable:
    """Certified enclosures of the zero-free-interval constants xi_k.

    xi_k is the supremum of t in (1, 2] such that no bridgeless graph with
    at most k high-degree vertices has a flow root in (1, t).  It is exactly
    2 for k <= 2; for k in {3, 4, 5} it is the unique root in (1, 2) of a
    known cubic, held here as a rational enclosure of width <= tol; for
    k >= 6 only the universal lower bound 32/27 is available.
    """

    xi_3: tuple[Fraction, Fraction]
    xi_4: tuple[Fraction, Fraction]
    xi_5: tuple[Fraction, Fraction]
    xi_lower_bound_k_ge_6: Fraction
    tol: Fraction

    def enclosure(self, k: int) -> tuple[Fraction, Fraction] | None:
        """Exact or enclosed xi_k for k <= 5; None from k = 6 on."""
        if k <= 2:
            return (Fraction(2), Fraction(2))
        if k == 3:
            return self.xi_3
        if k == 4:
            return self.xi_4
        if k == 5:
            return self.xi_5
        return None


def xi_table(tol: Fraction = Fraction(1, 10**6)) -> XiTable:
    tol = Fraction(tol)
    enc = {
        k: isolate_single_root(c, Fraction(1), Fraction(2), tol)
        for k, c in _XI_CUBICS.items()
    }
    for lo, hi in enc.values():
        assert lo > _XI_LOWER_BOUND
    return XiTable(enc[3], enc[4], enc[5], _XI_LOWER_BOUND, tol)


_NROOT_TABLE = {3: 9, 4: 11, 5: 14, 6: 14, 7: 16, 8: 19, 9: 21, 10: 24}


def _ceil_fraction(q: Fraction) -> int:
    # floor(q) plus 1 exactly when a fractional part remains
    fl = q.numerator // q.denominator
    return fl + (1 if q > fl else 0)


def nroot(k: int) -> int:
    """Guaranteed count of flow roots in (1,2) for a minimal-family graph
    with k high-degree vertices, beyond the three exceptional graphs.

    The values for 3 <= k <= 10 are the published table and are served
    verbatim; larger k fall back to the ceiling formula with the universal
    32/27 bound (see nroot_from_formula).
    """
    if k < 3:
        raise ValueError("nroot is defined for k >= 3")
    if k in _NROOT_TABLE:
        return _NROOT_TABLE[k]
    return _ceil_fraction((2 * k - 1) / (Fraction(2) - _XI_LOWER_BOUND))


def nroot_from_formula(k: int, xi: XiTable | None = None) -> int:
    """ceil((2k-1)/(2 - xi_hat_k)) with xi_hat_k the enclosure's upper end
    for k in {3,4,5} and 32/27 for k >= 6.

    The enclosure is refined until both enclosure ends give the same
    ceiling, so the result is independent of the tolerance.
    """
    if k < 3:
        raise ValueError("nroot is defined for k >= 3")
    if k >= 6:
        return _ceil_fraction((2 * k - 1) / (Fraction(2) - _XI_LOWER_BOUND))
    xi = xi or xi_table()
    tol = xi.tol
    for _ in range(8):
        lo, hi = xi.enclosure(k)
        from_hi = _ceil_fraction((2 * k - 1) / (2 - hi))
        from_lo = _ceil_fraction((2 * k - 1) / (2 - lo))
        if from_hi == from_lo:
            return from_hi
        tol /= _REFINE_FACTOR
        xi = xi_table(tol)
    raise AssertionError("xi enclosure would not settle the ceiling")


# -- audit records -----------------------------------------------------------


@dataclass(frozen=True)
class AuditRecord:
    claim: str
    status: str
    detail: str


def _check(claim: str, ok: bool, detail: str) -> AuditRecord:
    return AuditRecord(claim, PASS if ok else FAIL, detail)


def _na(claim: str, why: str) -> AuditRecord:
    return AuditRecord(claim, NOT_APPLICABLE, why)


def _interval_vs(
    lo: Fraction, hi: Fraction, bound: Fraction, strict: bool
) -> str | None:
    """Decide interval >= bound (or > bound): PASS/FAIL, or None on overlap."""
    if strict:
        if lo > bound:
            return PASS
        if hi <= bound:
            return FAIL
    else:
        if lo >= bound:
            return PASS
        if hi < bound:
            return FAIL
    return None


def _root_one_multiplicity(F: IntPoly) -> int:
    mult = 0
    work = F
    while not work.is_zero and work.evaluate(1) == 0:
        work = exact_divide(work, IntPoly((-1, 1)))
        mult += 1
    return mult


def audit_le00(g: MultiGraph, F: IntPoly, inv: Invariants | None = None) -> AuditRecord:
    """Leading coefficients of F for a 3-edge-connected graph: the top
    coefficient is 1, the next is -m, and the one after is C(m,2) minus the
    3-edge-cut count."""
    if not is_3_edge_connected(g):
        return _na("le00", "graph is not 3-edge-connected")
    inv = inv or compute_invariants(g)
    r = inv.cycle_rank
    coeffs = F.coeffs

    def at(i: int) -> int:
        return coeffs[i] if 0 <= i < len(coeffs) else 0

    want = [(r, 1), (r - 1, -inv.m), (r - 2, comb(inv.m, 2) - inv.three_edge_cut_count)]
    got = [(i, at(i)) for i, _ in want]
    ok = F.degree == r and all(at(i) == v for i, v in want)
    return _check(
        "le00",
        ok,
        f"coefficients at x^{r}, x^{r - 1}, x^{r - 2}: got {[v for _, v in got]}, "
        f"want {[v for _, v in want]}",
    )


def _is_even_graph(g: MultiGraph) -> bool:
    return all(d % 2 == 0 for d in g.degrees())


def audit_le1(
    g: MultiGraph,
    F: IntPoly,
    prof: RootProfile | None,
    inv: Invariants | None = None,
    cls: Classification | None = None,
) -> list[AuditRecord]:
    """Lower bounds on the 3-edge-cut count of a real-rooted
    3-edge-connected graph with at least 2 vertices:

      (i)  gamma >= (m-r)(m-1)/(2r-2), strict when r-1 does not divide m-1;
      (ii) if additionally r >= 3 and some degree is odd:
           gamma >= ((m-r)(m-4)+r-1)/(2r-4), strict when r-2 does not
           divide m-3.
    """
    cls = cls or classify(g, F, prof)
    if not (cls.in_G and is_3_edge_connected(g) and g.n >= 2):
        why = "requires a real-rooted 3-edge-connected graph with n >= 2"
        return [_na("le1-i", why), _na("le1-ii", why)]
    inv = inv or compute_invariants(g)
    m, r, gamma = inv.m, inv.cycle_rank, inv.three_edge_cut_count
    out = []

    bound1 = Fraction((m - r) * (m - 1), 2 * r - 2)
    strict1 = (m - 1) % (r - 1) != 0
    ok1 = gamma > bound1 if strict1 else gamma >= bound1
    out.append(
        _check("le1-i", ok1, f"gamma={gamma} vs {bound1}" + (" (strict)" if strict1 else ""))
    )

    if r < 3 or _is_even_graph(g):
        out.append(_na("le1-ii", "requires r >= 3 and an odd-degree vertex"))
    else:
        bound2 = Fraction((m - r) * (m - 4) + r - 1, 2 * r - 4)
        strict2 = (m - 3) % (r - 2) != 0
        ok2 = gamma > bound2 if strict2 else gamma >= bound2
        out.append(
            _check("le1-ii", ok2, f"gamma={gamma} vs {bound2}" + (" (strict)" if strict2 else ""))
        )
    return out


def _has_root_above_2(F: IntPoly) -> bool:
    hi = cauchy_bound(F)
    return sturm_count(F, 2, max(hi, Fraction(3))) > 0


def audit_lem30(
    g: MultiGraph,
    F: IntPoly,
    prof: RootProfile | None,
    xi: XiTable | None = None,
    inv: Invariants | None = None,
    cls: Classification | None = None,
    tol: Fraction = Fraction(1, 10**9),
) -> list[AuditRecord]:
    """Seven structural consequences for a real-rooted 3-edge-connected
    graph with n >= 3, no proper 3-edge cut, and block count b:

      (i)    r >= 3 and n >= 2k+1;
      (ii)   m >= 2n + 2k - 3 + 4(k-1)^2/(n-2k), strict when r-2 does not
             divide m-3;
      (iii)  m >= n + 8k - 7, strict when n != 4k-2;
      (iv)   for k >= 1: mean high degree >= 9 + 4*sqrt(2) - 2(sqrt(2)+1)^2/k
             (decided exactly by squaring);
      (v)    omega >= m - 2n + 2 - b, strict when F has a root above 2
             (omega is the certified gap-sum interval);
      (vi)   m <= n*xi/(xi-1) + b - 2/(xi-1) for xi = xi_k when k <= 5,
             else the weaker strict bound m < b + (32n-54)/5;
      (vii)  k < 11n/27 + (b+9)/54.
    """
    ids = [f"lem30-{s}" for s in ("i", "ii", "iii", "iv", "v", "vi", "vii")]
    cls = cls or classify(g, F, prof)
    if not (cls.in_G and is_3_edge_connected(g) and g.n >= 3):
        why = "requires a real-rooted 3-edge-connected graph with n >= 3"
        return [_na(i, why) for i in ids]
    inv = inv or compute_invariants(g)
    if inv.has_proper_three_cut:
        why = "graph contains a proper 3-edge cut"
        return [_na(i, why) for i in ids]
    xi = xi or xi_table()
    n, m, r, k, b = inv.n, inv.m, inv.cycle_rank, inv.high_degree_count, inv.block_count
    out = []

    # (i)
    out.append(
        _check("lem30-i", r >= 3 and n >= 2 * k + 1, f"r={r}, n={n}, 2k+1={2 * k + 1}")
    )

    # (ii)
    if n - 2 * k <= 0:
        out.append(_check("lem30-ii", False, f"denominator n-2k={n - 2 * k} <= 0"))
    else:
        bound = 2 * n + 2 * k - 3 + Fraction(4 * (k - 1) ** 2, n - 2 * k)
        strict = (m - 3) % (r - 2) != 0 if r != 2 else False
        ok = m > bound if strict else m >= bound
        out.append(
            _check("lem30-ii", ok, f"m={m} vs {bound}" + (" (strict)" if strict else ""))
        )

    # (iii)
    strict = n != 4 * k - 2
    bound3 = n + 8 * k - 7
    ok = m > bound3 if strict else m >= bound3
    out.append(
        _check("lem30-iii", ok, f"m={m} vs {bound3}" + (" (strict)" if strict else ""))
    )

    # (iv): mean high degree >= (9 - 6/k) + (4 - 4/k) sqrt(2), exactly
    if k == 0:
        out.append(_na("lem30-iv", "no high-degree vertices (k = 0)"))
    else:
        d = inv.mean_high_degree
        a = 9 - Fraction(6, k)
        c = 4 - Fraction(4, k)  # coefficient of sqrt(2); zero only for k = 1
        # d >= a + c*sqrt(2)  <=>  d - a >= 0 and (d-a)^2 >= 2 c^2
        diff = d - a
        ok = diff >= 0 and diff * diff >= 2 * c * c
        out.append(
            _check("lem30-iv", ok, f"mean high degree {d} vs {a} + {c}*sqrt(2)")
        )

    # (v)
    bound5 = Fraction(m - 2 * n + 2 - b)
    strict5 = _has_root_above_2(F)
    status = None
    lo, hi = prof.gap_sum_enclosure
    status = _interval_vs(lo, hi, bound5, strict5)
    if status is None:
        finer = root_profile(F, tol / _REFINE_FACTOR)
        lo, hi = finer.gap_sum_enclosure
        status = _interval_vs(lo, hi, bound5, strict5)
    detail = f"omega in [{lo}, {hi}] vs {bound5}" + (" (strict)" if strict5 else "")
    out.append(AuditRecord("lem30-v", status or INCONCLUSIVE, detail))

    # (vi)
    enc = xi.enclosure(k)
    if enc is None:
        bound6 = b + Fraction(32 * n - 54, 5)
        out.append(_check("lem30-vi", m < bound6, f"m={m} vs {bound6} (strict, k>=6 fallback)"))
    else:
        # rhs(xi) = n + (n-2)/(xi-1) + b decreases in xi, so evaluate at both ends
        def rhs(x: Fraction) -> Fraction:
            return n + Fraction(n - 2, 1) / (x - 1) + b

        xlo, xhi = enc
        status = None
        if m <= rhs(xhi):
            status = PASS
        elif m > rhs(xlo):
            status = FAIL
        else:
            finer = xi_table(xi.tol / _REFINE_FACTOR)
            xlo, xhi = finer.enclosure(k)
            if m <= rhs(xhi):
                status = PASS
            elif m > rhs(xlo):
                status = FAIL
        detail = f"m={m} vs rhs in [{rhs(xhi)}, {rhs(xlo)}] at xi_{k}"
        out.append(AuditRecord("lem30-vi", status or INCONCLUSIVE, detail))

    # (vii)
    bound7 = Fraction(11 * n, 27) + Fraction(b + 9, 54)
    out.append(_check("lem30-vii", k < bound7, f"k={k} vs {bound7} (strict)"))
    return out


def audit_wakelin(
    g: MultiGraph, F: IntPoly, inv: Invariants | None = None
) -> list[AuditRecord]:
    """Root-location facts for any connected bridgeless graph:

      (i)   F is nonzero on (-inf, 1) with sign (-1)^(m-n+1), sampled at
            0, -1, -10;
      (ii)  the multiplicity of the root 1 equals the block count;
      (iii) F has no root in (1, 32/27].
    """
    if not is_connected(g) or bridges(g):
        why = "requires a connected bridgeless graph"
        return [_na(f"wakelin-{s}", why) for s in ("i", "ii", "iii")]
    inv = inv or compute_invariants(g)
    out = []

    want_sign = (-1) ** (inv.m - inv.n + 1)
    samples = [(x, F.evaluate(x)) for x in (0, -1, -10)]
    ok = all(v != 0 and (v > 0) == (want_sign > 0) for _, v in samples)
    out.append(
        _check("wakelin-i", ok, f"sign {'+' if want_sign > 0 else '-'} expected; F at 0,-1,-10 = "
               + ", ".join(str(v) for _, v in samples))
    )

    mult1 = _root_one_multiplicity(F)
    out.append(
        _check("wakelin-ii", mult1 == inv.block_count,
               f"multiplicity of root 1 is {mult1}, block count {inv.block_count}")
    )

    if F.is_zero:
        out.append(_check("wakelin-iii", False, "zero polynomial"))
    else:
        c = sturm_count(F, 1, Fraction(32, 27))
        out.append(_check("wakelin-iii", c == 0, f"{c} roots in (1, 32/27]"))
    return out


_EXCEPTIONAL: tuple[bytes, ...] | None = None


def _exceptional_codes() -> tuple[bytes, ...]:
    """Canonical codes of the three graphs whose flow roots stay integral:
    the single loop, the triple edge, and the complete graph on 4 vertices."""
    global _EXCEPTIONAL
    if _EXCEPTIONAL is None:
        loop = MultiGraph(1, [(0, 0)])
        z3 = MultiGraph(2, [(0, 1)] * 3)
        k4 = MultiGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        _EXCEPTIONAL = tuple(canonical_code(h) for h in (loop, z3, k4))
    return _EXCEPTIONAL


def is_exceptional(g: MultiGraph) -> bool:
    return canonical_code(g) in _exceptional_codes()


def audit_main_theorems(
    g: MultiGraph,
    F: IntPoly,
    prof: RootProfile | None,
    inv: Invariants | None = None,
    cls: Classification | None = None,
    faces: FaceStructure | None = None,
) -> list[AuditRecord]:
    """The headline claims.

      main-th-i           in-G graphs with a root outside {1,2,3} satisfy
                          m >= n + 17 and have at least 9 roots in (1,2);
      main-lem1-i/ii      in-G0 graphs beyond the three exceptional ones
                          have k >= 3 and at least nroot(k) roots in (1,2);
      cor-main-lem1-cor0  an in-G0 graph has all roots integral exactly
                          when it is one of the three exceptional graphs;
      sect1-cor           for in-G graphs, "no root in (1,2)" and "all
                          roots in {1,2,3}" agree; when faces are supplied
                          and the resulting dual is chordal, both must hold.
    """
    cls = cls or classify(g, F, prof)
    out = []

    roots_in_123 = (
        prof is not None
        and cls.integral_roots
        and all(v in (1, 2, 3) for v, _ in prof.integer_roots)
    )

    if not cls.in_G:
        out.append(_na("main-th-i", "graph is not in-G"))
    elif roots_in_123:
        out.append(_na("main-th-i", "all flow roots lie in {1,2,3}"))
    else:
        ok = g.m >= g.n + 17 and prof.count_in_1_2 >= 9
        out.append(
            _check("main-th-i", ok,
                   f"m={g.m} vs n+17={g.n + 17}; roots in (1,2): {prof.count_in_1_2}")
        )

    exceptional = is_exceptional(g)
    if not cls.in_G0:
        out.append(_na("main-lem1-i", "graph is not in-G0"))
        out.append(_na("main-lem1-ii", "graph is not in-G0"))
    elif exceptional:
        out.append(_na("main-lem1-i", "one of the three exceptional graphs"))
        out.append(_na("main-lem1-ii", "one of the three exceptional graphs"))
    else:
        inv = inv or compute_invariants(g)
        k = inv.high_degree_count
        out.append(_check("main-lem1-i", k >= 3, f"k={k}"))
        if k < 3:
            out.append(
                AuditRecord("main-lem1-ii", FAIL,
                            f"k={k} < 3, companion bound undefined; roots in (1,2): "
                            f"{prof.count_in_1_2}")
            )
        else:
            need = nroot(k)
            out.append(
                _check("main-lem1-ii", prof.count_in_1_2 >= need,
                       f"roots in (1,2): {prof.count_in_1_2} vs nroot({k})={need}")
            )

    if not cls.in_G0:
        out.append(_na("cor-main-lem1-cor0", "graph is not in-G0"))
    else:
        out.append(
            _check("cor-main-lem1-cor0", cls.integral_roots == exceptional,
                   f"integral_roots={cls.integral_roots}, exceptional={exceptional}")
        )

    if not cls.in_G:
        out.append(_na("sect1-cor", "graph is not in-G"))
    else:
        no_gap_roots = prof.count_in_1_2 == 0
        ok = no_gap_roots == roots_in_123
        detail = f"no root in (1,2): {no_gap_roots}; all roots in {{1,2,3}}: {roots_in_123}"
        if ok and faces is not None:
            dual = build_dual(g, faces)
            if is_chordal(dual):
                ok = no_gap_roots and roots_in_123
                detail += "; supplied dual is chordal, so both must hold"
            else:
                detail += "; supplied dual is not chordal (witness leg vacuous)"
        out.append(_check("sect1-cor", ok, detail))
    return out


# -- whole-graph audit -------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    graph_code: bytes
    graph: MultiGraph
    invariants: Invariants | None
    flow: IntPoly
    profile: RootProfile | None
    classification: Classification
    records: tuple[AuditRecord, ...]

    @property
    def failures(self) -> tuple[AuditRecord, ...]:
        return tuple(r for r in self.records if r.status == FAIL)


def audit_graph(
    g: MultiGraph,
    faces: FaceStructure | None = None,
    tol: Fraction = Fraction(1, 10**9),
    memo: dict[bytes, IntPoly] | None = None,
    xi: XiTable | None = None,
    profile_cache: "dict[tuple[int, ...], RootProfile] | None" = None,
) -> AuditReport:
    """Run the full audit registry against one multigraph.

    Disconnected or bridged graphs still produce a report; every claim whose
    hypotheses fail is recorded as not-applicable, and the invariants slot
    stays empty when they are undefined.

    profile_cache, when supplied, maps coefficient tuples to root profiles.
    Callers auditing many graphs share it; distinct graphs frequently have
    the same flow polynomial.  The cache assumes one tol per cache.
    """
    F = flow_poly(g, memo)
    if F.is_zero:
        prof = None
    elif profile_cache is not None:
        prof = profile_cache.get(F.coeffs)
        if prof is None:
            prof = root_profile(F, tol)
            profile_cache[F.coeffs] = prof
    else:
        prof = root_profile(F, tol)
    ok_structure = is_connected(g) and not bridges(g)
    inv = compute_invariants(g) if ok_structure else None
    cls = classify(g, F, prof)
    records: list[AuditRecord] = []
    records.append(audit_le00(g, F, inv))
    records.extend(audit_le1(g, F, prof, inv, cls))
    records.extend(audit_lem30(g, F, prof, xi, inv, cls, tol))
    records.extend(audit_wakelin(g, F, inv))
    records.extend(audit_main_theorems(g, F, prof, inv, cls, faces))
    return AuditReport(
        canonical_code(g), g, inv, F, prof, cls, tuple(records)
    )


def report_to_dict(report: AuditReport) -> dict:
    inv = report.invariants
    prof = report.profile
    return {
        "graph": {
            "id": report.graph_code.hex(),
            "n": report.graph.n,
            "m": report.graph.m,
            "edges": [list(e) for e in report.graph.edges],
        },
        "invariants": None
        if inv is None
        else {
            "n": inv.n,
            "m": inv.m,
            "cycle_rank": inv.cycle_rank,
            "degree_excess": inv.degree_excess,
            "three_edge_cut_count": inv.three_edge_cut_count,
            "has_proper_three_cut": inv.has_proper_three_cut,
            "high_degree_count": inv.high_degree_count,
            "block_count": inv.block_count,
            "degree_histogram": [list(p) for p in inv.degree_histogram],
            "mean_high_degree": None
            if inv.mean_high_degree is None
            else str(inv.mean_high_degree),
        },
        "flow": {"coeffs": [str(c) for c in report.flow.coeffs]},
        "roots": None
        if prof is None
        else {
            "integer_roots": [list(p) for p in prof.integer_roots],
            "count_in_1_2": prof.count_in_1_2,
            "real_rooted": prof.real_rooted,
            "omega": {
                "lo": str(prof.gap_sum_enclosure[0]),
                "hi": str(prof.gap_sum_enclosure[1]),
            },
        },
        "classification": {
            "in-G": report.classification.in_G,
            "in-G0": report.classification.in_G0,
            "integral_roots": report.classification.integral_roots,
        },
        "audits": [
            {"id": r.claim, "status": r.status, "detail": r.detail}
            for r in report.records
        ],
    }


def report_to_json(report: AuditReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)
