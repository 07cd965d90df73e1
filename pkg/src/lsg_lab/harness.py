"""Claim verification harness.

Evaluates a catalog of structural claims about large sum graphs over corpora
of finite modules, gating each claim on its hypotheses and reporting
counterexample witnesses when a conclusion fails.

Claim catalog (ids are stable interface keys):

  T2.4     null graph  <=>  module cocyclic
  T2.5     empty graph <=> exactly two atoms whose quotients are finitely
           cogenerated and uniform
  T2.6     disconnected <=> exactly two atoms <=> two disjoint complete
           components
  T2.7     connected => diameter <= 2
  T2.8     has a cycle => girth = 3
  T2.9     connected => no cut vertex
  T2.10    never a complete n-partite graph (n >= 2 parts)
  P2.11i   no vertex is adjacent to every other vertex
  P2.11ii  never a complete graph
  T2.12i   pendant vertex <=> two atoms, two disjoint complete components,
           one of which has exactly 2 vertices
  T2.12ii  never a star graph
  T2.13a   nested vertices have containment-antitone degrees
  T2.13b   r-regular => two atoms and exactly 2r + 2 vertices
  P3.1i    non-empty graph => clique number >= number of atoms
  P3.1iii  clique number >= 2^(atoms - 1) - 1
  T3.3     domination number = 2
  T3.4     independence number = number of atoms

Every claim assumes a nonzero comultiplication module; every id except T2.4
further assumes the graph is non-null.  Structural hypotheses (connected, has
a cycle, regular, non-empty) gate individual ids.  The counterexample catalog
re-evaluates the conclusions on modules that fail the comultiplication
hypothesis, demonstrating why that hypothesis is needed.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field

from .graph import (
    DEFAULT_WORK_CAP,
    INF,
    Graph,
    GraphInvariants,
    LargeSumGraph,
    build_graph,
    compute_invariants,
)
from .modules import (
    Caps,
    DEFAULT_CAPS,
    FiniteModule,
    SizeCapError,
    Submodule,
    build_module,
    parse_module_spec,
    quotient_module,
)
from .predicates import (
    is_finitely_cogenerated,
    is_uniform,
    predicate_report,
)

__all__ = [
    "CatalogEntry",
    "CatalogReport",
    "CorpusSpec",
    "ModuleAnalysis",
    "SuiteReport",
    "THEOREM_IDS",
    "THEOREM_STATEMENTS",
    "catalog_report_json_dict",
    "check_theorem",
    "counterexample_catalog",
    "run_suite",
    "suite_report_csv",
    "suite_report_json_dict",
    "verdict_json_dict",
]

THEOREM_IDS: tuple[str, ...] = (
    "T2.4",
    "T2.5",
    "T2.6",
    "T2.7",
    "T2.8",
    "T2.9",
    "T2.10",
    "P2.11i",
    "P2.11ii",
    "T2.12i",
    "T2.12ii",
    "T2.13a",
    "T2.13b",
    "P3.1i",
    "P3.1iii",
    "T3.3",
    "T3.4",
)

THEOREM_STATEMENTS: dict[str, str] = {
    "T2.4": "the graph is null iff the module is cocyclic",
    "T2.5": "the graph is empty iff there are exactly two minimal submodules "
            "with finitely cogenerated uniform quotients",
    "T2.6": "disconnected iff exactly two minimal submodules iff two disjoint "
            "complete components",
    "T2.7": "a connected graph has diameter at most 2",
    "T2.8": "a graph containing a cycle has girth 3",
    "T2.9": "a connected graph has no cut vertex",
    "T2.10": "the graph is never complete n-partite (n >= 2)",
    "P2.11i": "no vertex is adjacent to every other vertex",
    "P2.11ii": "the graph is never complete",
    "T2.12i": "a pendant vertex exists iff there are exactly two minimal "
              "submodules and the two complete components include one with "
              "exactly 2 vertices",
    "T2.12ii": "the graph is never a star",
    "T2.13a": "if one vertex contains another, the smaller has at least the "
              "degree of the larger (adjacency is downward closed)",
    "T2.13b": "an r-regular graph has exactly two minimal submodules and "
              "2r + 2 vertices",
    "P3.1i": "in a non-empty graph the clique number is at least the number "
             "of minimal submodules",
    "P3.1iii": "the clique number is at least 2^(minimals - 1) - 1",
    "T3.3": "the domination number is exactly 2",
    "T3.4": "the independence number equals the number of minimal submodules",
}


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one claim on one module.

    ``holds`` is set exactly when the claim was applicable and the check came
    to a definite answer; ``inconclusive`` marks an exact-search abort.
    ``witness`` is present exactly when the claim was applicable and failed.
    """

    theorem_id: str
    module_spec: str
    applicable: bool
    holds: bool | None
    inconclusive: bool = False
    reason: str | None = None
    witness: dict | None = None
    details: dict | None = None


@dataclass(frozen=True)
class CorpusSpec:
    """A family of module specs to sweep.

    ``family`` is one of ``cyclic`` (Z:n for 2 <= n <= max_n),
    ``two_factor`` (Z:d1,d2 for 2 <= d1 <= d2 <= max_d), or ``explicit``
    (the given spec strings).  ``include_mod_ring`` additionally runs each
    module over the ring Z/exp(M).
    """

    family: str = "cyclic"
    max_n: int = 500
    max_d: int = 12
    specs: tuple[str, ...] = ()
    include_mod_ring: bool = False

    def generate(self) -> tuple[str, ...]:
        if self.family == "cyclic":
            base = [f"Z:{n}" for n in range(2, self.max_n + 1)]
        elif self.family == "two_factor":
            base = [
                f"Z:{d1},{d2}"
                for d1 in range(2, self.max_d + 1)
                for d2 in range(d1, self.max_d + 1)
            ]
        elif self.family == "explicit":
            base = list(self.specs)
        else:
            raise ValueError(f"unknown corpus family {self.family!r}")
        if not self.include_mod_ring:
            return tuple(base)
        out = []
        for spec in base:
            out.append(spec)
            ring, orders = parse_module_spec(spec)
            if ring.is_integers:
                exponent = 1
                for d in orders:
                    exponent = exponent * d // _gcd(exponent, d)
                out.append(f"Z/{exponent}:{','.join(map(str, orders))}")
        return tuple(out)

    def describe(self) -> dict:
        out: dict = {"family": self.family}
        if self.family == "cyclic":
            out["max_n"] = self.max_n
        elif self.family == "two_factor":
            out["max_d"] = self.max_d
        else:
            out["specs"] = list(self.specs)
        out["include_mod_ring"] = self.include_mod_ring
        return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class ModuleAnalysis:
    """Everything the claim checks need for one module, computed once."""

    def __init__(self, module: FiniteModule, work_cap: int = DEFAULT_WORK_CAP):
        self.module = module
        self.spec = module.spec_string
        self.work_cap = work_cap
        self.report = predicate_report(module)
        self.lsg: LargeSumGraph = build_graph(module)
        self.inv: GraphInvariants = compute_invariants(
            self.lsg.graph, work_cap, abort_mode="mark"
        )
        self.min_count = len(self.report.minimal_submodules)

    @classmethod
    def from_spec(
        cls,
        spec: str,
        caps: Caps = DEFAULT_CAPS,
        work_cap: int = DEFAULT_WORK_CAP,
    ) -> "ModuleAnalysis":
        ring, orders = parse_module_spec(spec)
        return cls(build_module(ring, orders, caps), work_cap)

    # -- helpers used by several conclusions ------------------------------

    def vertex_brief(self, index: int) -> dict:
        return {"id": index, **self.lsg.vertices[index].brief()}

    def two_complete_components(self) -> bool:
        comps = self.inv.components
        return len(comps) == 2 and all(
            self._complete_induced(comp) for comp in comps
        )

    def _complete_induced(self, verts) -> bool:
        g = self.lsg.graph
        return all(
            g.has_edge(a, b) for a, b in itertools.combinations(verts, 2)
        )

    def components_split_by_atom_containment(self) -> bool | None:
        """When there are exactly two atoms and two components: whether the
        components are exactly the vertices containing each atom."""
        if self.min_count != 2 or self.inv.component_count != 2:
            return None
        s1, s2 = self.report.minimal_submodules
        part1 = frozenset(
            i for i, v in enumerate(self.lsg.vertices)
            if s1.element_set <= v.element_set
        )
        part2 = frozenset(
            i for i, v in enumerate(self.lsg.vertices)
            if s2.element_set <= v.element_set
        )
        actual = {frozenset(c) for c in self.inv.components}
        return actual == {part1, part2}

    def atom_sum_family_is_clique(self, skip: int) -> bool:
        """Whether the sums over nonempty subsets of the atoms minus the one
        at position ``skip`` form a clique of size 2^(atoms-1) - 1."""
        atoms = list(self.report.minimal_submodules)
        others = atoms[:skip] + atoms[skip + 1 :]
        family: set[Submodule] = set()
        for r in range(1, len(others) + 1):
            for combo in itertools.combinations(others, r):
                total = combo[0]
                for sub in combo[1:]:
                    total = total.sum(sub)
                family.add(total)
        expected = 2 ** (len(atoms) - 1) - 1
        if len(family) != expected:
            return False
        index = self.lsg._index
        if any(sub not in index for sub in family):
            return False
        ids = sorted(index[sub] for sub in family)
        return all(
            self.lsg.graph.has_edge(a, b)
            for a, b in itertools.combinations(ids, 2)
        )


# -- conclusion evaluators ---------------------------------------------------
# Each returns (holds, witness, details); holds None means the required exact
# invariant was aborted, which the caller reports as inconclusive.


def _c_t24(a: ModuleAnalysis):
    null = a.lsg.is_null
    cocyclic = a.report.is_cocyclic
    details = {"null_graph": null, "cocyclic": cocyclic}
    return null == cocyclic, None if null == cocyclic else details, details


def _c_t25(a: ModuleAnalysis):
    empty = a.inv.edge_count == 0
    details: dict = {"empty_graph": empty, "min_count": a.min_count}
    rhs = False
    if a.min_count == 2:
        uniform_flags, fc_flags = [], []
        for atom in a.report.minimal_submodules:
            q = quotient_module(a.module, atom).module
            uniform_flags.append(is_uniform(q))
            fc_flags.append(is_finitely_cogenerated(q))
        rhs = all(uniform_flags) and all(fc_flags)
        details["quotients_uniform"] = uniform_flags
        details["quotients_finitely_cogenerated"] = fc_flags
    holds = empty == rhs
    return holds, None if holds else details, details


def _c_t26(a: ModuleAnalysis):
    disconnected = a.inv.component_count > 1
    two_atoms = a.min_count == 2
    two_cc = a.two_complete_components()
    holds = disconnected == two_atoms and two_atoms == two_cc
    details = {
        "disconnected": disconnected,
        "two_minimal_submodules": two_atoms,
        "two_complete_components": two_cc,
        "min_count": a.min_count,
    }
    split = a.components_split_by_atom_containment()
    if split is not None:
        details["components_are_atom_containment_classes"] = split
    return holds, None if holds else details, details


def _c_t27(a: ModuleAnalysis):
    diam = a.inv.diameter
    holds = diam <= 2
    witness = None
    if not holds:
        witness = {"diameter": "inf" if diam == INF else diam}
        pair = _farthest_pair(a.lsg.graph)
        if pair is not None:
            u, v, d = pair
            witness["pair"] = [a.vertex_brief(u), a.vertex_brief(v)]
            witness["distance"] = "inf" if d == INF else d
    return holds, witness, {"diameter": "inf" if diam == INF else diam}


def _farthest_pair(graph: Graph):
    from .graph import _bfs_distances

    best = None
    for u in range(graph.n):
        dist = _bfs_distances(graph, u)
        for v in range(u + 1, graph.n):
            d = dist.get(v, INF)
            if best is None or d > best[2]:
                best = (u, v, d)
    return best


def _c_t28(a: ModuleAnalysis):
    g = a.inv.girth
    holds = g == 3
    details = {"girth": "inf" if g == INF else g}
    return holds, None if holds else details, details


def _c_t29(a: ModuleAnalysis):
    cut = a.inv.cut_vertices
    holds = len(cut) == 0
    witness = None if holds else {"cut_vertices": [a.vertex_brief(v) for v in cut]}
    return holds, witness, {"cut_vertex_count": len(cut)}


def _c_t210(a: ModuleAnalysis):
    cm = a.inv.is_complete_multipartite
    holds = not cm
    witness = None
    if not holds:
        witness = {"part_sizes": [len(p) for p in a.inv.multipartite_parts]}
    return holds, witness, {"complete_multipartite": cm}


def _c_p211i(a: ModuleAnalysis):
    universal = [
        v for v in range(a.lsg.graph.n)
        if a.lsg.graph.degree(v) == a.lsg.graph.n - 1
    ]
    holds = not universal
    witness = None if holds else {"universal_vertex": a.vertex_brief(universal[0])}
    return holds, witness, {"has_universal_vertex": bool(universal)}


def _c_p211ii(a: ModuleAnalysis):
    holds = not a.inv.is_complete
    return holds, None if holds else {"complete": True}, {"complete": a.inv.is_complete}


def _c_t212i(a: ModuleAnalysis):
    lhs = len(a.inv.pendant_vertices) > 0
    two_cc = a.two_complete_components()
    size_two = any(len(c) == 2 for c in a.inv.components)
    rhs = a.min_count == 2 and two_cc and size_two
    holds = lhs == rhs
    details = {
        "pendant_exists": lhs,
        "min_count": a.min_count,
        "two_complete_components": two_cc,
        "component_of_size_two": size_two,
    }
    return holds, None if holds else details, details


def _is_star(a: ModuleAnalysis) -> bool:
    n = a.lsg.graph.n
    if n < 2 or not a.inv.connected:
        return False
    seq = a.inv.degree_sequence
    return seq[0] == n - 1 and all(d == 1 for d in seq[1:])


def _c_t212ii(a: ModuleAnalysis):
    star = _is_star(a)
    return not star, {"star": True} if star else None, {"star": star}


def _c_t213a(a: ModuleAnalysis):
    # Non-largeness is downward closed, so a neighbor of the larger vertex is
    # a neighbor of the smaller one: containment reverses degrees.
    g = a.lsg.graph
    verts = a.lsg.vertices
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if i == j or not (u.element_set < v.element_set):
                continue
            if g.degree(j) > g.degree(i):
                witness = {
                    "inner": a.vertex_brief(i),
                    "outer": a.vertex_brief(j),
                    "degrees": [g.degree(i), g.degree(j)],
                }
                return False, witness, None
    return True, None, None


def _c_t213b(a: ModuleAnalysis):
    r = a.inv.regularity
    n = a.lsg.graph.n
    holds = a.min_count == 2 and n == 2 * r + 2
    details = {"regularity": r, "vertex_count": n, "min_count": a.min_count}
    return holds, None if holds else details, details


def _c_p31i(a: ModuleAnalysis):
    omega = a.inv.clique_number
    if omega is None:
        return None, None, None
    holds = omega >= a.min_count
    details = {"clique_number": omega, "min_count": a.min_count}
    return holds, None if holds else details, details


def _c_p31iii(a: ModuleAnalysis):
    omega = a.inv.clique_number
    if omega is None:
        return None, None, None
    bound = 2 ** (a.min_count - 1) - 1
    holds = omega >= bound
    details = {
        "clique_number": omega,
        "bound": bound,
        "atom_sum_family_is_clique": [
            a.atom_sum_family_is_clique(i) for i in range(a.min_count)
        ],
    }
    return holds, None if holds else dict(details), details


def _c_t33(a: ModuleAnalysis):
    gamma = a.inv.domination_number
    if gamma is None:
        return None, None, None
    holds = gamma == 2
    details = {"domination_number": gamma, "at_most_two": gamma <= 2}
    return holds, None if holds else details, details


def _c_t34(a: ModuleAnalysis):
    alpha = a.inv.independence_number
    if alpha is None:
        return None, None, None
    holds = alpha == a.min_count
    details = {"independence_number": alpha, "min_count": a.min_count}
    return holds, None if holds else details, details


_CONCLUSIONS = {
    "T2.4": _c_t24,
    "T2.5": _c_t25,
    "T2.6": _c_t26,
    "T2.7": _c_t27,
    "T2.8": _c_t28,
    "T2.9": _c_t29,
    "T2.10": _c_t210,
    "P2.11i": _c_p211i,
    "P2.11ii": _c_p211ii,
    "T2.12i": _c_t212i,
    "T2.12ii": _c_t212ii,
    "T2.13a": _c_t213a,
    "T2.13b": _c_t213b,
    "P3.1i": _c_p31i,
    "P3.1iii": _c_p31iii,
    "T3.3": _c_t33,
    "T3.4": _c_t34,
}


def _structural_gate(a: ModuleAnalysis, theorem_id: str) -> str | None:
    """Reason the claim's structural hypotheses fail, or None."""
    if theorem_id in ("T2.7", "T2.9") and not a.inv.connected:
        return "graph is not connected"
    if theorem_id == "T2.8" and a.inv.girth == INF:
        return "graph contains no cycle"
    if theorem_id == "T2.13b" and not a.inv.is_regular:
        return "graph is not regular"
    if theorem_id == "P3.1i" and a.inv.edge_count == 0:
        return "graph is empty"
    return None


def _verdict_for(
    a: ModuleAnalysis, theorem_id: str, require_comultiplication: bool = True
) -> TheoremVerdict:
    if theorem_id not in _CONCLUSIONS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    def na(reason: str) -> TheoremVerdict:
        return TheoremVerdict(theorem_id, a.spec, False, None, reason=reason)

    if a.module.order == 1:
        return na("zero module")
    if require_comultiplication and not a.report.is_comultiplication:
        return na("module is not a comultiplication module")
    if theorem_id != "T2.4" and a.lsg.is_null:
        return na("null graph")
    reason = _structural_gate(a, theorem_id)
    if reason is not None:
        return na(reason)
    holds, witness, details = _CONCLUSIONS[theorem_id](a)
    if holds is None:
        return TheoremVerdict(
            theorem_id, a.spec, True, None,
            inconclusive=True, reason="exact search aborted",
        )
    return TheoremVerdict(
        theorem_id, a.spec, True, holds, witness=witness, details=details
    )


def check_theorem(
    theorem_id: str,
    module: FiniteModule | str,
    caps: Caps = DEFAULT_CAPS,
    work_cap: int = DEFAULT_WORK_CAP,
) -> TheoremVerdict:
    """Evaluate one claim on one module (a FiniteModule or a spec string)."""
    if isinstance(module, str):
        analysis = ModuleAnalysis.from_spec(module, caps, work_cap)
    else:
        analysis = ModuleAnalysis(module, work_cap)
    return _verdict_for(analysis, theorem_id)


# -- suite and catalog -------------------------------------------------------


@dataclass
class SuiteReport:
    corpus: dict
    theorem_ids: tuple[str, ...]
    verdicts: list[TheoremVerdict]
    modules: list[dict]
    errors: list[dict]
    summary: dict


@dataclass
class CatalogEntry:
    module_spec: str
    order: int
    witness: dict
    conclusions: list[dict]
    failed: list[str]


@dataclass
class CatalogReport:
    corpus: dict
    entries: list[CatalogEntry]
    summary: dict


def _normalize_ids(theorem_ids) -> tuple[str, ...]:
    if theorem_ids is None:
        return THEOREM_IDS
    wanted = list(theorem_ids)
    unknown = [t for t in wanted if t not in _CONCLUSIONS]
    if unknown:
        raise ValueError(f"unknown theorem ids: {', '.join(unknown)}")
    return tuple(t for t in THEOREM_IDS if t in wanted)


def _module_row(a: ModuleAnalysis, violations: int) -> dict:
    inv = a.inv
    def opt(v):
        return "" if v is None else ("inf" if v == INF else v)
    return {
        "module": a.spec,
        "order": a.module.order,
        "comultiplication": a.report.is_comultiplication,
        "minCount": a.min_count,
        "vertexCount": inv.vertex_count,
        "edgeCount": inv.edge_count,
        "connected": opt(inv.connected),
        "diameter": opt(inv.diameter),
        "girth": opt(inv.girth),
        "omega": opt(inv.clique_number),
        "alpha": opt(inv.independence_number),
        "gamma": opt(inv.domination_number),
        "violations": violations,
    }


def run_suite(
    corpus: CorpusSpec,
    theorem_ids=None,
    caps: Caps = DEFAULT_CAPS,
    work_cap: int = DEFAULT_WORK_CAP,
) -> SuiteReport:
    """Evaluate the selected claims over every module of the corpus.

    Per-module failures to build (size caps) are isolated: they are recorded
    under ``errors`` and the sweep continues.
    """
    ids = _normalize_ids(theorem_ids)
    verdicts: list[TheoremVerdict] = []
    rows: list[dict] = []
    errors: list[dict] = []
    for spec in corpus.generate():
        try:
            analysis = ModuleAnalysis.from_spec(spec, caps, work_cap)
        except (SizeCapError, ValueError) as exc:
            errors.append({"module": spec, "error": str(exc)})
            continue
        module_verdicts = [_verdict_for(analysis, tid) for tid in ids]
        verdicts.extend(module_verdicts)
        violations = sum(1 for v in module_verdicts if v.holds is False)
        rows.append(_module_row(analysis, violations))
    applicable = sum(1 for v in verdicts if v.applicable)
    summary = {
        "modules": len(rows),
        "checks": len(verdicts),
        "applicable": applicable,
        "holds": sum(1 for v in verdicts if v.holds is True),
        "violations": sum(1 for v in verdicts if v.holds is False),
        "inconclusive": sum(1 for v in verdicts if v.inconclusive),
        "not_applicable": len(verdicts) - applicable,
        "module_errors": len(errors),
    }
    return SuiteReport(
        corpus=corpus.describe(),
        theorem_ids=ids,
        verdicts=verdicts,
        modules=rows,
        errors=errors,
        summary=summary,
    )


def counterexample_catalog(
    corpus: CorpusSpec,
    theorem_ids=None,
    caps: Caps = DEFAULT_CAPS,
    work_cap: int = DEFAULT_WORK_CAP,
) -> CatalogReport:
    """For every module that is not a comultiplication module: record the
    double-annihilator witness, then evaluate each claim's conclusion anyway
    (keeping structural gates) and record which conclusions fail."""
    from .modules import annihilator_in_module, annihilator_in_ring

    ids = _normalize_ids(theorem_ids)
    entries: list[CatalogEntry] = []
    errors: list[dict] = []
    for spec in corpus.generate():
        try:
            analysis = ModuleAnalysis.from_spec(spec, caps, work_cap)
        except (SizeCapError, ValueError) as exc:
            errors.append({"module": spec, "error": str(exc)})
            continue
        if analysis.report.is_comultiplication:
            continue
        witness_sub = analysis.report.comultiplication_witness
        closure = annihilator_in_module(
            analysis.module, annihilator_in_ring(witness_sub)
        )
        witness = {
            "submodule": witness_sub.brief(),
            "annihilator": str(witness_sub.annihilator),
            "double_annihilator": closure.brief(),
        }
        conclusions = []
        failed = []
        for tid in ids:
            verdict = _verdict_for(analysis, tid, require_comultiplication=False)
            if not verdict.applicable:
                status = "not_applicable"
            elif verdict.inconclusive:
                status = "inconclusive"
            elif verdict.holds:
                status = "holds"
            else:
                status = "fails"
                failed.append(tid)
            entry = {"theorem": tid, "status": status}
            if verdict.reason:
                entry["reason"] = verdict.reason
            if verdict.witness:
                entry["witness"] = verdict.witness
            conclusions.append(entry)
        entries.append(
            CatalogEntry(
                module_spec=spec,
                order=analysis.module.order,
                witness=witness,
                conclusions=conclusions,
                failed=failed,
            )
        )
    summary = {
        "modules_scanned": len(corpus.generate()),
        "non_comultiplication": len(entries),
        "module_errors": len(errors),
    }
    return CatalogReport(corpus=corpus.describe(), entries=entries, summary=summary)


# -- serialization -----------------------------------------------------------


def verdict_json_dict(v: TheoremVerdict) -> dict:
    return {
        "theorem": v.theorem_id,
        "module": v.module_spec,
        "applicable": v.applicable,
        "holds": v.holds,
        "inconclusive": v.inconclusive,
        "reason": v.reason,
        "witness": v.witness,
        "details": v.details,
    }


def suite_report_json_dict(report: SuiteReport, meta: dict | None = None) -> dict:
    out = {
        "corpus": report.corpus,
        "theorems": list(report.theorem_ids),
        "verdicts": [verdict_json_dict(v) for v in report.verdicts],
        "modules": report.modules,
        "errors": report.errors,
        "summary": report.summary,
    }
    if meta is not None:
        out["meta"] = meta
    return out


CSV_COLUMNS = (
    "module",
    "order",
    "comultiplication",
    "minCount",
    "vertexCount",
    "edgeCount",
    "connected",
    "diameter",
    "girth",
    "omega",
    "alpha",
    "gamma",
    "violations",
)


def suite_report_csv(report: SuiteReport) -> str:
    """Per-module summary table with the stable column set."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in report.modules:
        writer.writerow({k: _csv_value(row[k]) for k in CSV_COLUMNS})
    return buf.getvalue()


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def catalog_report_json_dict(report: CatalogReport, meta: dict | None = None) -> dict:
    out = {
        "corpus": report.corpus,
        "entries": [
            {
                "module": e.module_spec,
                "order": e.order,
                "comultiplication": False,
                "witness": e.witness,
                "conclusions": e.conclusions,
                "failed": e.failed,
            }
            for e in report.entries
        ],
        "summary": report.summary,
    }
    if meta is not None:
        out["meta"] = meta
    return out
