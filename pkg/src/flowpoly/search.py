"""Exhaustive surveys of small multigraphs.

Two drivers share the enumeration and caching machinery.  run_search is the
general tool behind the command line: enumerate, filter, emit a full audit
report per survivor, flag open-problem candidates.  run_sweep is the mass
falsification pass: every bridgeless connected multigraph within the bounds
gets the coefficient and sign-pattern audits, every real-rooted one is
checked for roots outside {1, 2, 3}, and the survivors of the strictest
structural class are collected so they can be compared against the three
known members.

Both drivers are deterministic: survivors are ordered by canonical code, and
worker count never changes the output, only the wall time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import get_context

from .audits import (
    FAIL,
    PASS,
    audit_graph,
    audit_le00,
    audit_wakelin,
    classify,
    nroot,
    report_to_dict,
    xi_table,
)
from .enumeration import enumerate_multigraphs
from .flow import flow_poly
from .multigraph import (
    MultiGraph,
    blocks,
    bridges,
    canonical_code,
    is_3_edge_connected,
)
from .polyalg import IntPoly, RootProfile, root_profile

FILTER_NAMES = (
    "bridgeless",
    "three-edge-connected",
    "in-G",
    "in-G0",
    "nonintegral-roots",
)

_EXCEPTIONAL_EDGES = (
    (1, ((0, 0),)),
    (2, ((0, 1), (0, 1), (0, 1))),
    (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
)


def expected_g0_codes() -> list[bytes]:
    """Canonical codes of the single loop, the triple edge, and K_4: the
    known members of the strict structural class, sorted."""
    return sorted(canonical_code(MultiGraph(n, e)) for n, e in _EXCEPTIONAL_EDGES)


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and filters for a counterexample search.

    filters is a subset of FILTER_NAMES; they are applied cheapest first
    regardless of the order given.  tol is the width target for root
    enclosures in the emitted reports.  work_cap bounds the enumeration work
    estimate; configurations above it are refused.
    """

    max_vertices: int
    max_edges: int
    max_multiplicity: int = 4
    filters: tuple[str, ...] = ()
    workers: int = 1
    tol: Fraction = Fraction(1, 10**9)
    work_cap: int = 10**8

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_edges < 0:
            raise ValueError("bounds must be positive")
        if self.max_edges < self.max_vertices - 1:
            raise ValueError(
                "max_edges below max_vertices - 1 leaves no connected graphs"
            )
        unknown = set(self.filters) - set(FILTER_NAMES)
        if unknown:
            raise ValueError(f"unknown filters: {sorted(unknown)}")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


@dataclass
class SearchSummary:
    """Outcome of run_search: stage counts plus open-problem candidates.

    candidates_problem1 holds canonical codes (hex) of survivors that are
    bridgeless and real-rooted with a non-integral root; candidates_problem2
    holds those with at least nroot(k) roots in (1,2) for their k >= 3.
    Either list being nonempty is a publishable event, not a bug.
    """

    enumerated: int = 0
    stages: list[tuple[str, int]] = field(default_factory=list)
    survivors: int = 0
    candidates_problem1: list[str] = field(default_factory=list)
    candidates_problem2: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "enumerated": self.enumerated,
            "stages": [{"filter": f, "survivors": c} for f, c in self.stages],
            "survivors": self.survivors,
            "candidates": {
                "problem1": self.candidates_problem1,
                "problem2": self.candidates_problem2,
            },
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


class _Analyzer:
    """Per-process caches: flow memo, root profiles keyed by coefficients."""

    def __init__(self, tol: Fraction):
        self.tol = tol
        self.memo: dict[bytes, IntPoly] = {}
        self.profiles: dict[tuple[int, ...], RootProfile | None] = {}

    def flow(self, g: MultiGraph) -> IntPoly:
        return flow_poly(g, self.memo)

    def profile(self, F: IntPoly) -> RootProfile | None:
        if F.is_zero:
            return None
        prof = self.profiles.get(F.coeffs)
        if prof is None:
            prof = root_profile(F, self.tol)
            self.profiles[F.coeffs] = prof
        return prof


def _passes_filter(name: str, g: MultiGraph, an: _Analyzer) -> bool:
    if name == "bridgeless":
        return not bridges(g)
    if name == "three-edge-connected":
        return is_3_edge_connected(g)
    F = an.flow(g)
    prof = an.profile(F)
    cls = classify(g, F, prof)
    if name == "in-G":
        return cls.in_G
    if name == "in-G0":
        return cls.in_G0
    if name == "nonintegral-roots":
        # some root, over the complex numbers, is not an integer
        return not F.is_zero and F.degree > 0 and not cls.integral_roots
    raise ValueError(f"unknown filter {name}")


def _ordered_filters(names) -> list[str]:
    return [f for f in FILTER_NAMES if f in set(names)]


def _filter_shard(cfg: SearchConfig, shard: tuple[int, int]):
    """Enumerate one shard and apply the filter chain.

    Returns per-stage counts and the surviving graphs as (code, n, edges)
    triples; graphs stay compact until the audit pass.
    """
    an = _Analyzer(cfg.tol)
    chain = _ordered_filters(cfg.filters)
    counts = [0] * (len(chain) + 1)
    kept: list[tuple[bytes, int, tuple]] = []
    for g in enumerate_multigraphs(
        cfg.max_vertices,
        cfg.max_edges,
        cfg.max_multiplicity,
        work_cap=cfg.work_cap,
        shard=shard,
    ):
        counts[0] += 1
        alive = True
        for i, name in enumerate(chain):
            if not _passes_filter(name, g, an):
                alive = False
                break
            counts[i + 1] += 1
        if alive:
            kept.append((canonical_code(g), g.n, g.edges))
    return counts, kept


def _audit_chunk(args):
    cfg, chunk = args
    an = _Analyzer(cfg.tol)
    xi = xi_table()
    out = []
    for code, n, edges in chunk:
        g = MultiGraph(n, edges)
        rep = audit_graph(
            g, tol=cfg.tol, memo=an.memo, xi=xi, profile_cache=an.profiles
        )
        out.append((code, rep))
    return out


def _filter_shard_star(args):
    return _filter_shard(*args)


def run_search(cfg: SearchConfig, emit=None) -> SearchSummary:
    """Enumerate, filter, audit, and flag open-problem candidates.

    emit, when given, is called once per survivor with the report dict, in
    canonical-code order, before the summary is returned.  With workers > 1
    the enumeration is sharded by base graph and the audits by chunks of the
    sorted survivor list; results are merged in a fixed order, so the output
    is identical for any worker count.
    """
    t0 = time.time()
    chain = _ordered_filters(cfg.filters)
    shards = [(i, cfg.workers) for i in range(cfg.workers)]
    if cfg.workers == 1:
        shard_results = [_filter_shard(cfg, shards[0])]
    else:
        with get_context("fork").Pool(cfg.workers) as pool:
            shard_results = pool.map(
                _filter_shard_star, [(cfg, s) for s in shards]
            )

    counts = [0] * (len(chain) + 1)
    survivors: list[tuple[bytes, int, tuple]] = []
    for shard_counts, kept in shard_results:
        for i, c in enumerate(shard_counts):
            counts[i] += c
        survivors.extend(kept)
    survivors.sort(key=lambda t: t[0])

    if cfg.workers == 1 or len(survivors) < 2 * cfg.workers:
        audited = _audit_chunk((cfg, survivors))
    else:
        step = (len(survivors) + cfg.workers - 1) // cfg.workers
        chunks = [survivors[i : i + step] for i in range(0, len(survivors), step)]
        with get_context("fork").Pool(cfg.workers) as pool:
            audited = [
                item
                for part in pool.map(_audit_chunk, [(cfg, c) for c in chunks])
                for item in part
            ]

    summary = SearchSummary()
    summary.enumerated = counts[0]
    summary.stages = list(zip(chain, counts[1:]))
    summary.survivors = len(survivors)
    for code, rep in audited:
        d = report_to_dict(rep)
        if rep.classification.in_G and not rep.classification.integral_roots:
            summary.candidates_problem1.append(code.hex())
        if rep.profile is not None:
            k = sum(1 for dg in rep.graph.degrees() if dg > 3)
            if k >= 3 and rep.profile.count_in_1_2 >= nroot(k):
                summary.candidates_problem2.append(code.hex())
        if emit is not None:
            emit(d)
    summary.elapsed_seconds = time.time() - t0
    return summary


@dataclass
class SweepResult:
    """Outcome of the mass falsification pass.

    All failure lists hold canonical codes (hex) with a reason; empty lists
    mean the paper's checkable statements survived the sweep.
    """

    graphs: int = 0
    wakelin_checked: int = 0
    wakelin_failures: list[str] = field(default_factory=list)
    le00_checked: int = 0
    le00_failures: list[str] = field(default_factory=list)
    real_rooted: int = 0
    bad_real_rooted: list[str] = field(default_factory=list)
    g0_survivors: list[str] = field(default_factory=list)
    candidates_problem1: list[str] = field(default_factory=list)
    candidates_problem2: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "wakelin_checked": self.wakelin_checked,
            "wakelin_failures": self.wakelin_failures,
            "le00_checked": self.le00_checked,
            "le00_failures": self.le00_failures,
            "real_rooted": self.real_rooted,
            "bad_real_rooted": self.bad_real_rooted,
            "g0_survivors": self.g0_survivors,
            "candidates": {
                "problem1": self.candidates_problem1,
                "problem2": self.candidates_problem2,
            },
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


def run_sweep(
    max_vertices: int = 6,
    max_edges: int = 12,
    max_multiplicity: int = 4,
    tol: Fraction = Fraction(1, 10**9),
    progress=None,
    work_cap: int = 10**8,
) -> SweepResult:
    """Audit every bridgeless connected multigraph within the bounds.

    Per graph: the three sign-pattern and factorization checks always run;
    the leading-coefficient check runs on the 3-edge-connected ones; every
    real-rooted graph is tested for flow roots outside {1, 2, 3} and for
    membership in the strict structural class.  Results that would falsify
    the source material land in the failure lists verbatim rather than
    raising, so a counterexample would be reported, not crash the sweep.

    Poly-level work is cached by coefficient tuple; the number of distinct
    flow polynomials in these families is tiny compared to the number of
    graphs.
    """
    t0 = time.time()
    an = _Analyzer(tol)
    res = SweepResult()
    # wakelin audit results depend only on the polynomial and the block
    # count; le00 depends on the polynomial, m, and the 3-cut count
    wakelin_cache: dict[tuple[tuple[int, ...], int], tuple[bool, str]] = {}
    integral_cache: dict[tuple[int, ...], tuple[bool, str]] = {}

    for g in enumerate_multigraphs(
        max_vertices,
        max_edges,
        max_multiplicity,
        bridgeless_only=True,
        work_cap=work_cap,
    ):
        res.graphs += 1
        if progress is not None and res.graphs % 20000 == 0:
            progress(res.graphs, time.time() - t0)
        F = an.flow(g)
        b = len(blocks(g))

        res.wakelin_checked += 1
        key = (F.coeffs, b)
        hit = wakelin_cache.get(key)
        if hit is None:
            recs = audit_wakelin(g, F)
            bad = [r for r in recs if r.status == FAIL]
            hit = (not bad, "; ".join(f"{r.claim}: {r.detail}" for r in bad))
            wakelin_cache[key] = hit
        if not hit[0]:
            res.wakelin_failures.append(f"{canonical_code(g).hex()} {hit[1]}")

        three_ec = is_3_edge_connected(g)
        if three_ec:
            res.le00_checked += 1
            rec = audit_le00(g, F)
            if rec.status != PASS:
                res.le00_failures.append(
                    f"{canonical_code(g).hex()} {rec.detail}"
                )

        prof = an.profile(F)
        ic = integral_cache.get(F.coeffs)
        if ic is None:
            if prof is None or not prof.real_rooted:
                ic = (True, "")
            else:
                mult_sum = sum(m for _, m in prof.integer_roots)
                values = {v for v, _ in prof.integer_roots}
                if mult_sum != prof.degree:
                    ic = (False, "real-rooted with a non-integral root")
                elif not values <= {1, 2, 3}:
                    ic = (False, f"roots outside {{1,2,3}}: {sorted(values)}")
                else:
                    ic = (True, "")
            integral_cache[F.coeffs] = ic

        if prof is not None and prof.real_rooted:
            res.real_rooted += 1
            if not ic[0]:
                res.bad_real_rooted.append(f"{canonical_code(g).hex()} {ic[1]}")
                if "non-integral" in ic[1]:
                    res.candidates_problem1.append(canonical_code(g).hex())
            cls = classify(g, F, prof)
            if cls.in_G0:
                res.g0_survivors.append(canonical_code(g).hex())

        if prof is not None:
            k = sum(1 for dg in g.degrees() if dg > 3)
            if k >= 3 and prof.count_in_1_2 >= nroot(k):
                res.candidates_problem2.append(canonical_code(g).hex())

    res.g0_survivors.sort()
    res.elapsed_seconds = time.time() - t0
    return res
