"""Exhaustive and randomized checking of the multiplicity bound, the
recognizer equivalence, and the reduction identities.

The harness keeps the two sides of every equivalence independent: graph
multiplicities always come from the exact polynomial engine, never from
the recognizer, and the recognizer's verdicts are never consulted when
computing a multiplicity.  Failures are collected as data rather than
raised, so a full sweep always produces a report.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Iterable, Sequence

from .certify import (
    DEFAULT_RULES,
    NotOptimal,
    RecognizerRules,
    edge_reduction_probe,
    is_optimal,
    optimal_certificate,
    theorem31_conditions,
    tree_certificate,
)
from .enumeration import enumerate_connected, enumerate_trees
from .graphio import to_graph6
from .graphs import (
    Graph,
    build_graph,
    delete_edge,
    delete_pendant_path,
    induced_subgraph,
    pendant_paths,
    summarize,
)
from .intpoly import IntPoly, div_exact, divides
from .linegraph import block_structure, line_graph
from .spectra import (
    Eigenvalue,
    annihilator_dimension,
    candidate_pairs,
    char_poly,
    cycle_char_poly,
    eig_classes,
    multiplicity,
    multiplicity_in_poly,
    numeric_multiplicity,
    numeric_spectrum,
    path_char_poly,
)

LEMMA_NAMES = (
    "path_deletion",
    "bridge",
    "path_absorption",
    "probe_equivalence",
)


def _lam_json(lam: Eigenvalue) -> dict[str, int]:
    return {"a": lam.a, "b": lam.b}


@dataclass(frozen=True)
class BoundViolation:
    graph6: str
    factor: tuple[int, ...]
    multiplicity: int
    bound: int

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "factor": list(self.factor),
            "multiplicity": self.multiplicity,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class EquivalenceFailure:
    graph6: str
    lam: Eigenvalue
    verdict: str
    multiplicity: int
    bound: int

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "lambda": _lam_json(self.lam),
            "verdict": self.verdict,
            "multiplicity": self.multiplicity,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class LambdaFormFailure:
    graph6: str
    factor: tuple[int, ...]
    multiplicity: int
    residual: tuple[int, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "factor": list(self.factor),
            "multiplicity": self.multiplicity,
            "residual": list(self.residual),
        }


@dataclass(frozen=True)
class LemmaFailure:
    lemma: str
    detail: dict[str, Any]

    def to_json_dict(self) -> dict[str, Any]:
        return {"lemma": self.lemma, **self.detail}


@dataclass
class VerificationReport:
    graphs_checked: int = 0
    candidates_checked: int = 0
    bound_violations: list[BoundViolation] = field(default_factory=list)
    equivalence_failures: list[EquivalenceFailure] = field(default_factory=list)
    lambda_form_failures: list[LambdaFormFailure] = field(default_factory=list)
    lemma_failures: dict[str, list[LemmaFailure]] = field(default_factory=dict)
    lemma_skips: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return (
            not self.bound_violations
            and not self.equivalence_failures
            and not self.lambda_form_failures
            and all(not v for v in self.lemma_failures.values())
        )

    def merge(self, other: "VerificationReport") -> None:
        self.graphs_checked += other.graphs_checked
        self.candidates_checked += other.candidates_checked
        self.bound_violations.extend(other.bound_violations)
        self.equivalence_failures.extend(other.equivalence_failures)
        self.lambda_form_failures.extend(other.lambda_form_failures)
        for name, items in other.lemma_failures.items():
            self.lemma_failures.setdefault(name, []).extend(items)
        for name, count in other.lemma_skips.items():
            self.lemma_skips[name] = self.lemma_skips.get(name, 0) + count
        self.elapsed += other.elapsed

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "graphs_checked": self.graphs_checked,
            "candidates_checked": self.candidates_checked,
            "bound_violations": [v.to_json_dict() for v in self.bound_violations],
            "equivalence_failures": [
                v.to_json_dict() for v in self.equivalence_failures
            ],
            "lambda_form_failures": [
                v.to_json_dict() for v in self.lambda_form_failures
            ],
            "lemma_failures": {
                name: [v.to_json_dict() for v in items]
                for name, items in sorted(self.lemma_failures.items())
            },
            "lemma_skips": dict(sorted(self.lemma_skips.items())),
            "elapsed": self.elapsed,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def summary_table(self) -> str:
        rows = [
            ("graphs checked", str(self.graphs_checked)),
            ("candidate pairs checked", str(self.candidates_checked)),
            ("bound violations", str(len(self.bound_violations))),
            ("equivalence failures", str(len(self.equivalence_failures))),
            ("lambda-form failures", str(len(self.lambda_form_failures))),
        ]
        for name in sorted(self.lemma_failures):
            rows.append(
                (f"{name} failures", str(len(self.lemma_failures[name])))
            )
        for name in sorted(self.lemma_skips):
            rows.append((f"{name} skips", str(self.lemma_skips[name])))
        rows.append(("elapsed seconds", f"{self.elapsed:.2f}"))
        rows.append(("result", "PASS" if self.passed else "FAIL"))
        width = max(len(label) for label, _ in rows)
        return "\n".join(f"{label.ljust(width)}  {value}" for label, value in rows)


def _verdict_string(cert: Any) -> str:
    if isinstance(cert, NotOptimal):
        return f"NotOptimal:{cert.reason}"
    return cert.case_tag


def _bound(g: Graph) -> int:
    s = summarize(g)
    return 2 * s.cyclomatic + s.pendant_count - 1


def check_graph(
    g: Graph, rules: RecognizerRules = DEFAULT_RULES
) -> VerificationReport:
    """Run the bound, equivalence, and eigenvalue-form checks on one
    connected non-cycle graph with at least one edge."""
    report = VerificationReport()
    s = summarize(g)
    if not s.connected or s.is_cycle or g.edge_count == 0:
        return report
    report.graphs_checked = 1
    g6 = to_graph6(g)
    line = line_graph(g).line
    bound = _bound(g)
    line_poly = char_poly(line)

    for cls in eig_classes(line):
        if cls.multiplicity > bound:
            report.bound_violations.append(
                BoundViolation(g6, cls.factor.coeffs, cls.multiplicity, bound)
            )
        if cls.multiplicity == bound:
            residual = cls.factor
            for lam in candidate_pairs(residual.degree):
                psi = lam.minimal_polynomial
                if psi.degree > residual.degree:
                    continue
                if residual(2) % psi(2) == 0 and divides(psi, residual):
                    residual = div_exact(residual, psi)
                if residual.degree == 0:
                    break
            if residual.degree > 0:
                report.lambda_form_failures.append(
                    LambdaFormFailure(
                        g6, cls.factor.coeffs, cls.multiplicity, residual.coeffs
                    )
                )

    for lam in candidate_pairs(g.edge_count):
        cert = optimal_certificate(g, lam, rules)
        mult = multiplicity_in_poly(line_poly, lam)
        report.candidates_checked += 1
        if is_optimal(cert) != (mult == bound):
            report.equivalence_failures.append(
                EquivalenceFailure(g6, lam, _verdict_string(cert), mult, bound)
            )
    return report


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("LGMULT_WORKERS", "1")))
    except ValueError:
        return 1


def verify_graphs(
    graphs: Iterable[Graph],
    rules: RecognizerRules = DEFAULT_RULES,
    stop_after: int | None = None,
) -> VerificationReport:
    """Check every connected non-cycle graph in the stream.

    Cycles, disconnected graphs, and edgeless graphs are skipped.  With
    ``stop_after`` set, the sweep ends early once that many equivalence
    failures have accumulated (useful for mutation self-tests).  The
    LGMULT_WORKERS environment variable turns on process-parallel
    checking; the merged report order matches the input order either way.
    """
    report = VerificationReport()
    started = time.monotonic()
    workers = _worker_count()
    if workers > 1 and stop_after is None:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            for sub in pool.imap(
                partial(check_graph, rules=rules), graphs, chunksize=64
            ):
                report.merge(sub)
    else:
        for g in graphs:
            report.merge(check_graph(g, rules))
            if (
                stop_after is not None
                and len(report.equivalence_failures) >= stop_after
            ):
                break
    report.elapsed = time.monotonic() - started
    return report


def verify_main_theorem(
    max_n: int,
    rules: RecognizerRules = DEFAULT_RULES,
    stop_after: int | None = None,
) -> VerificationReport:
    """Sweep all connected non-cycle graphs on 2..max_n vertices."""
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")

    def stream() -> Iterable[Graph]:
        for n in range(2, max_n + 1):
            yield from enumerate_connected(n)

    return verify_graphs(stream(), rules, stop_after)


# ---------------------------------------------------------------------------
# reduction identities


def _record(report: VerificationReport, name: str, detail: dict[str, Any]) -> None:
    report.lemma_failures.setdefault(name, []).append(LemmaFailure(name, detail))


def _skip(report: VerificationReport, name: str) -> None:
    report.lemma_skips[name] = report.lemma_skips.get(name, 0) + 1


def _check_path_deletion(
    report: VerificationReport, g: Graph, lams: Sequence[Eigenvalue]
) -> None:
    """Deleting a pendant path drops the line-graph multiplicity by at
    most one."""
    paths = pendant_paths(g)
    if not paths:
        return
    h, _ = delete_pendant_path(g, paths[0])
    f_g = char_poly(line_graph(g).line)
    f_h = char_poly(line_graph(h).line) if h.edge_count else IntPoly.one()
    g6 = to_graph6(g)
    for lam in lams:
        m_g = multiplicity_in_poly(f_g, lam)
        if m_g == 0:
            continue
        m_h = multiplicity_in_poly(f_h, lam)
        if m_g > m_h + 1:
            _record(
                report,
                "path_deletion",
                {
                    "graph6": g6,
                    "lambda": _lam_json(lam),
                    "with_path": m_g,
                    "without_path": m_h,
                },
            )


def _check_bridge(
    report: VerificationReport, g: Graph, lams: Sequence[Eigenvalue]
) -> None:
    """Bridge identity: if lam is an eigenvalue of the u-side whose
    multiplicity drops by one when u is removed, then removing the far
    endpoint v raises the whole graph's multiplicity by one.  Pairs
    where the hypothesis fails are counted as skips."""
    s = summarize(g)
    if not s.bridges:
        return
    g6 = to_graph6(g)
    for u, v in s.bridges:
        cut = delete_edge(g, (u, v))
        for a, b in ((u, v), (v, u)):
            side_vertices = _component_of(cut, a)
            side, _ = induced_subgraph(g, side_vertices)
            side_minus, _ = induced_subgraph(
                g, [w for w in side_vertices if w != a]
            )
            minus_b, _ = induced_subgraph(
                g, [w for w in range(g.vertex_count) if w != b]
            )
            f_side = char_poly(side)
            f_side_minus = char_poly(side_minus)
            f_g = char_poly(g)
            f_minus_b = char_poly(minus_b)
            for lam in lams:
                m_side = multiplicity_in_poly(f_side, lam)
                if m_side == 0 or m_side != multiplicity_in_poly(f_side_minus, lam) + 1:
                    _skip(report, "bridge")
                    continue
                if multiplicity_in_poly(f_minus_b, lam) != multiplicity_in_poly(f_g, lam) + 1:
                    _record(
                        report,
                        "bridge",
                        {
                            "graph6": g6,
                            "bridge": [a, b],
                            "lambda": _lam_json(lam),
                        },
                    )


def _component_of(g: Graph, v: int) -> list[int]:
    seen = {v}
    queue = [v]
    while queue:
        u = queue.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def _check_path_absorption(
    report: VerificationReport, h: Graph, w: int, t: int, lam: Eigenvalue
) -> None:
    """Gluing a path of t*b vertices onto w by one end leaves the
    multiplicity equal to that of the host minus w."""
    extra = t * lam.b - 1
    edges = list(h.edges)
    prev = w
    for i in range(extra):
        edges.append((prev, h.vertex_count + i))
        prev = h.vertex_count + i
    glued = build_graph(h.vertex_count + extra, edges)
    host_minus, _ = induced_subgraph(
        h, [x for x in range(h.vertex_count) if x != w]
    )
    m_glued = multiplicity(glued, lam)
    m_host = multiplicity(host_minus, lam)
    if m_glued != m_host:
        _record(
            report,
            "path_absorption",
            {
                "graph6": to_graph6(h),
                "vertex": w,
                "t": t,
                "lambda": _lam_json(lam),
                "glued": m_glued,
                "host_minus_vertex": m_host,
            },
        )


def _check_probe_equivalence(
    report: VerificationReport, g: Graph, lams: Sequence[Eigenvalue]
) -> None:
    """Optimality holds exactly when all three edge-reduction conditions
    hold, for connected non-cycle graphs with a cycle."""
    s = summarize(g)
    if not s.connected or s.is_cycle or s.cyclomatic == 0:
        return
    bound = _bound(g)
    f_line = char_poly(line_graph(g).line)
    g6 = to_graph6(g)
    for lam in lams:
        probe = edge_reduction_probe(g, lam)
        optimal = multiplicity_in_poly(f_line, lam) == bound
        if optimal != probe.all_ok:
            _record(
                report,
                "probe_equivalence",
                {
                    "graph6": g6,
                    "lambda": _lam_json(lam),
                    "optimal": optimal,
                    "probe": {
                        "edge": list(probe.edge),
                        "mult_drop_ok": probe.mult_drop_ok,
                        "sub_optimal_ok": probe.sub_optimal_ok,
                        "pendant_increment_ok": probe.pendant_increment_ok,
                    },
                },
            )


def _random_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    return [(rng.randrange(i), i) for i in range(1, n)]


def _random_connected(
    rng: random.Random, n: int, extra_edges: int
) -> Graph:
    edges = set(_random_tree(rng, n))
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    rng.shuffle(non_edges)
    edges.update(non_edges[:extra_edges])
    return build_graph(n, sorted(edges))


def _sample_candidates(
    rng: random.Random, degree: int, count: int
) -> list[Eigenvalue]:
    pool = list(candidate_pairs(degree))
    if len(pool) <= count:
        return pool
    return sorted(rng.sample(pool, count), key=lambda e: (e.b, e.a))


def verify_lemmas(
    max_n: int = 7, samples: int = 1000, seed: int = 0
) -> VerificationReport:
    """Check the four reduction identities on the enumerated corpus and
    on seeded random composites.

    The corpus part sweeps every candidate eigenvalue; each composite
    samples at most 25 candidates so a thousand samples per identity
    stay affordable on one core.
    """
    report = VerificationReport()
    started = time.monotonic()
    rng = random.Random(seed)
    small_pool = [lam for lam in candidate_pairs(6) if lam.b <= 6]

    for n in range(2, max_n + 1):
        for g in enumerate_connected(n):
            lams = candidate_pairs(g.edge_count)
            _check_path_deletion(report, g, lams)
            _check_probe_equivalence(report, g, lams)
            report.graphs_checked += 1
    for n in range(2, min(max_n, 6) + 1):
        for g in enumerate_connected(n):
            _check_bridge(report, g, small_pool)
    for n in range(2, min(max_n, 5) + 1):
        for h in enumerate_connected(n):
            for w in range(h.vertex_count):
                for lam in small_pool:
                    if lam.b <= 4:
                        _check_path_absorption(report, h, w, 1, lam)

    for _ in range(samples):
        g = _random_connected(rng, rng.randint(4, 9), rng.randint(0, 2))
        while not pendant_paths(g):
            g = _random_connected(rng, rng.randint(4, 9), rng.randint(0, 2))
        _check_path_deletion(
            report, g, _sample_candidates(rng, g.edge_count, 25)
        )

    for _ in range(samples):
        g = _random_connected(rng, rng.randint(3, 9), rng.randint(0, 2))
        while not summarize(g).bridges:
            g = _random_connected(rng, rng.randint(3, 9), rng.randint(0, 2))
        _check_bridge(report, g, [rng.choice(small_pool)])

    for _ in range(samples):
        h = _random_connected(rng, rng.randint(2, 8), rng.randint(0, 2))
        _check_path_absorption(
            report,
            h,
            rng.randrange(h.vertex_count),
            rng.randint(1, 2),
            rng.choice(small_pool),
        )

    for _ in range(samples):
        g = _random_connected(rng, rng.randint(4, 9), rng.randint(1, 2))
        while summarize(g).is_cycle:
            g = _random_connected(rng, rng.randint(4, 9), rng.randint(1, 2))
        _check_probe_equivalence(
            report, g, _sample_candidates(rng, g.edge_count, 25)
        )

    for name in LEMMA_NAMES:
        report.lemma_failures.setdefault(name, [])
    report.elapsed = time.monotonic() - started
    return report


def verify_congruence_laws(
    max_path: int = 200, max_cycle: int = 120, max_b: int = 12
) -> list[dict[str, Any]]:
    """Exact eigenvalue-membership laws for paths and cycles.

    For lam = (a, b): paths P_k contain lam exactly when k = b-1 (mod b),
    always with multiplicity one; cycles C_k contain it with multiplicity
    two exactly when b divides k (a even) or 2b divides k (a odd).
    """
    failures: list[dict[str, Any]] = []
    lams = [
        Eigenvalue(a, b)
        for b in range(2, max_b + 1)
        for a in range(1, b)
        if math.gcd(a, b) == 1
    ]
    for lam in lams:
        for k in range(1, max_path + 1):
            expected = 1 if k % lam.b == lam.b - 1 else 0
            got = multiplicity_in_poly(path_char_poly(k), lam)
            if got != expected:
                failures.append(
                    {"shape": "path", "k": k, "lambda": _lam_json(lam),
                     "expected": expected, "got": got}
                )
        modulus = lam.b if lam.a % 2 == 0 else 2 * lam.b
        for k in range(3, max_cycle + 1):
            expected = 2 if k % modulus == 0 else 0
            got = multiplicity_in_poly(cycle_char_poly(k), lam)
            if got != expected:
                failures.append(
                    {"shape": "cycle", "k": k, "lambda": _lam_json(lam),
                     "expected": expected, "got": got}
                )
    return failures


def verify_block_agreement(max_n: int = 13) -> list[dict[str, Any]]:
    """Compare the line-graph block-distance conditions with the tree
    pendant-pair congruence on every tree with at least three pendants."""
    failures: list[dict[str, Any]] = []
    for n in range(4, max_n + 1):
        for t in enumerate_trees(n):
            if summarize(t).pendant_count < 3:
                continue
            blocks = block_structure(line_graph(t).line)
            for lam in candidate_pairs(t.edge_count):
                if lam.a % 2 or lam.b % 2 == 0:
                    continue
                via_blocks = theorem31_conditions(blocks, lam)
                via_pendants = is_optimal(tree_certificate(t, lam))
                if via_blocks != via_pendants:
                    failures.append(
                        {
                            "graph6": to_graph6(t),
                            "lambda": _lam_json(lam),
                            "block_conditions": via_blocks,
                            "pendant_congruence": via_pendants,
                        }
                    )
    return failures


def cross_check(g: Graph) -> bool:
    """Agreement of the three multiplicity routes on one graph."""
    return not cross_check_detail(g)


def cross_check_detail(g: Graph) -> list[dict[str, Any]]:
    """Disagreements between the polynomial, nullity, and numeric
    multiplicity routes over every candidate eigenvalue of g.

    The numeric route abstains (returns None) when a spectrum value
    lands inside the guard band between the counting tolerance and the
    minimum-gap threshold; an abstention is not a disagreement.
    """
    failures: list[dict[str, Any]] = []
    if g.vertex_count == 0:
        return failures
    f = char_poly(g)
    spectrum = numeric_spectrum(g)
    for lam in candidate_pairs(g.vertex_count):
        via_poly = multiplicity_in_poly(f, lam)
        via_nullity = annihilator_dimension(g, lam)
        via_numeric = numeric_multiplicity(spectrum, lam)
        if via_poly != via_nullity or (
            via_numeric is not None and via_numeric != via_poly
        ):
            failures.append(
                {
                    "lambda": _lam_json(lam),
                    "polynomial": via_poly,
                    "nullity": via_nullity,
                    "numeric": via_numeric,
                }
            )
    return failures
