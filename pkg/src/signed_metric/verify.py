"""Theorem sweeps: closed forms and predicates checked against the solver.

Every check is registered under a short theorem id and runs over a set of
*instances*.  An instance is a text encoding of a signed graph, either a
family member (``cycle:5:+-+-+``, signs in canonical edge order) or an
explicit graph (``graph:4:0-1+,1-2-,2-3+``).  Encodings are replayable:
:func:`replay` rebuilds a single verdict from ``(theorem_id, encoding)``.

Report lines are ``theorem_id TAB encoding TAB PASS|FAIL TAB detail``,
sorted by encoding within each theorem.
"""

from __future__ import annotations

import heapq
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Optional, TextIO

from .core import SignedGraph, build, negate, sign_char
from .distance import SignedDistanceMatrix, signed_distances
from .errors import CapExceeded, FormulaNotApplicable, UnknownTheorem
from .families import (
    FAMILIES,
    complete_dimension_bounds,
    cycle_dim1_predicate,
    family_edges,
    family_graph,
    family_order,
    star_dimension,
    unsigned_wheel_dimension,
    wheel_center_condition,
    wheel_compatible_predicate,
)
from .oracles import compatible_by_cycles
from .resolve import DEFAULT_CAP, ResolutionResult, all_bases, is_resolving, metric_dimension
from .trees import (
    is_path,
    signed_tree_bounds,
    signed_tree_dimension,
    tree_profile,
    unsigned_tree_dimension,
)

EXHAUSTIVE_LIMIT = 1 << 16
DEFAULT_SAMPLES = 10_000
INHERITANCE_SAMPLES = 5


# -- instances ----------------------------------------------------------------

def encode_family(family: str, n: int, signs) -> str:
    return f"{family}:{n}:{''.join(sign_char(s) for s in signs)}"


def encode_graph(g: SignedGraph) -> str:
    body = ",".join(f"{u}-{v}{sign_char(s)}" for u, v, s in g.signed_edges())
    return f"graph:{g.n}:{body}"


def decode_instance(encoding: str) -> tuple[SignedGraph, Optional[str], Optional[int]]:
    """``(graph, family, n)``; ``family`` and ``n`` are ``None`` for explicit graphs."""
    kind, n_text, body = encoding.split(":", 2)
    n = int(n_text)
    if kind == "graph":
        edges = []
        for item in filter(None, body.split(",")):
            u, rest = item.split("-", 1)
            edges.append((int(u), int(rest[:-1]), rest[-1]))
        return build(n, edges), None, None
    if kind not in FAMILIES:
        raise ValueError(f"unknown instance kind {kind!r}")
    return family_graph(kind, n, list(body)), kind, n


class Instance:
    """Lazily computed facts about one encoded graph, shared across checks."""

    def __init__(self, encoding: str):
        self.encoding = encoding
        self.graph, self.family, self.n = decode_instance(encoding)

    @cached_property
    def dm(self) -> SignedDistanceMatrix:
        return signed_distances(self.graph)

    @cached_property
    def compatible(self) -> bool:
        return self.dm.first_incompatible() is None

    @cached_property
    def result(self) -> ResolutionResult:
        return metric_dimension(self.graph, dm=self.dm)

    @property
    def dim(self) -> int:
        return self.result.dimension

    @cached_property
    def minimum_bases(self) -> list[tuple[int, ...]]:
        return all_bases(self.graph, self.dim, dm=self.dm)


# -- instance sources ---------------------------------------------------------

def _all_signatures(m: int):
    return product((1, -1), repeat=m)


def _random_signatures(m: int, count: int, rng: random.Random):
    for _ in range(count):
        yield tuple(rng.choice((1, -1)) for _ in range(m))


def _is_balanced_cycle(signs) -> bool:
    p = 1
    for s in signs:
        p *= s
    return p > 0


def _select(family: str, n: int, select: str, signs) -> bool:
    if select == "all":
        return True
    if select == "homogeneous":
        return len(set(signs)) == 1
    if select == "all_negative":
        return all(s < 0 for s in signs)
    if select == "all_positive":
        return all(s > 0 for s in signs)
    if select == "cycle_compatible":
        return n % 2 == 1 or _is_balanced_cycle(signs)
    if select == "center_condition":
        if n == 6:
            return all(s > 0 for s in signs)
        spokes = dict(zip(range(1, n + 1), signs[n:]))
        return wheel_center_condition(spokes, n)
    raise ValueError(select)


@dataclass(frozen=True)
class FamilySource:
    family: str
    n_lo: int
    n_hi: int
    select: str = "all"

    def name(self) -> str:
        return self.family

    def sizes(self, cap: int, n: Optional[int]) -> list[int]:
        if n is not None:
            # the spoke condition only exists for small wheels
            hi = self.n_hi if self.select == "center_condition" else n
            return [n] if self.n_lo <= n <= hi else []
        return list(range(self.n_lo, min(self.n_hi, cap) + 1))

    def instances(self, cap: int, n: Optional[int], rng: random.Random, samples: int):
        for size in self.sizes(cap, n):
            m = len(family_edges(self.family, size))
            if self.select in ("homogeneous", "all_negative", "all_positive"):
                candidates: Iterable = [(1,) * m, (-1,) * m]
            elif 2 ** m <= EXHAUSTIVE_LIMIT:
                candidates = _all_signatures(m)
            else:
                candidates = _random_signatures(m, samples, rng)
            for signs in candidates:
                if _select(self.family, size, self.select, signs):
                    yield encode_family(self.family, size, signs)

    def exhaustive(self, cap: int, n: Optional[int]) -> bool:
        if self.select in ("homogeneous", "all_negative", "all_positive"):
            return True
        return all(2 ** len(family_edges(self.family, s)) <= EXHAUSTIVE_LIMIT for s in self.sizes(cap, n))


def random_connected_graph(rng: random.Random, n: int) -> SignedGraph:
    """Random spanning tree plus each remaining pair with probability 1/3."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < 1 / 3:
                edges.add((u, v))
    return build(n, [(u, v, rng.choice((1, -1))) for u, v in sorted(edges)])


def random_tree(rng: random.Random, n: int, signed: bool = True) -> SignedGraph:
    """Uniform labelled tree on ``n`` vertices (Pruefer decoding)."""
    if n == 1:
        return build(1, [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build(n, [(u, v, rng.choice((1, -1)) if signed else 1) for u, v in edges])


@dataclass(frozen=True)
class RandomGraphSource:
    n_lo: int
    n_hi: int
    count: int
    compatible_only: bool = False

    def name(self) -> str:
        return "graph"

    def instances(self, cap: int, n: Optional[int], rng: random.Random, samples: int):
        hi = min(self.n_hi, cap) if n is None else n
        lo = self.n_lo if n is None else n
        if hi < lo:
            return
        made = attempts = 0
        while made < self.count and attempts < 50 * self.count:
            attempts += 1
            g = random_connected_graph(rng, rng.randint(lo, hi))
            if self.compatible_only and signed_distances(g).first_incompatible() is not None:
                continue
            made += 1
            yield encode_graph(g)

    def exhaustive(self, cap, n) -> bool:
        return False


@dataclass(frozen=True)
class RandomTreeSource:
    n_lo: int
    n_hi: int
    count: int
    signed: bool = True

    def name(self) -> str:
        return "tree"

    def instances(self, cap: int, n: Optional[int], rng: random.Random, samples: int):
        hi = min(self.n_hi, cap) if n is None else n
        lo = self.n_lo if n is None else n
        if hi < max(lo, 4):
            return
        made = 0
        while made < self.count:
            g = random_tree(rng, rng.randint(max(lo, 4), hi), self.signed)
            if is_path(g):
                continue
            made += 1
            yield encode_graph(g)

    def exhaustive(self, cap, n) -> bool:
        return False


# -- checks -------------------------------------------------------------------

Verdict = tuple[bool, str]
VACUOUS_INCOMPATIBLE: Verdict = (True, "vacuous: incompatible")


def _check_cycle_criterion(inst: Instance) -> Verdict:
    by_pairs = inst.compatible
    by_cycles = compatible_by_cycles(inst.graph, inst.dm)
    return by_pairs == by_cycles, f"pairwise={by_pairs} cycles={by_cycles}"


def _check_inheritance(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    g = inst.graph
    k = inst.result.dim_underlying
    candidates = _underlying_bases(g.n, g.edges, k)
    rng = random.Random(inst.encoding)
    chosen = rng.sample(candidates, min(INHERITANCE_SAMPLES, len(candidates)))
    bad = [W for W in chosen if not is_resolving(g, inst.dm, W)]
    if bad:
        return False, f"underlying resolving set {list(bad[0])} fails"
    return True, f"{len(chosen)} underlying resolving sets resolve"


_UNDERLYING_BASES: dict = {}


def _underlying_bases(n: int, edges: tuple, k: int) -> list[tuple[int, ...]]:
    key = (n, edges, k)
    if key not in _UNDERLYING_BASES:
        g = SignedGraph(n, edges, (1,) * len(edges))
        _UNDERLYING_BASES[key] = all_bases(g, k)
    return _UNDERLYING_BASES[key]


def _check_bounds(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    r = inst.result
    n = inst.graph.n
    ok = 1 <= r.dimension <= r.dim_underlying <= n - 1 and r.mdd >= 0
    return ok, f"dim={r.dimension} dim_underlying={r.dim_underlying} n={n}"


def _check_negation(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    neg = negate(inst.graph)
    neg_dm = signed_distances(neg)
    if neg_dm.first_incompatible() is not None:
        return False, "negation is incompatible"
    d_neg = metric_dimension(neg, dm=neg_dm).dimension
    return inst.dim == d_neg, f"dim={inst.dim} dim_negated={d_neg}"


def _expect_dim(expected: Callable[[Instance], int]):
    def check(inst: Instance) -> Verdict:
        if not inst.compatible:
            return VACUOUS_INCOMPATIBLE
        want = expected(inst)
        return inst.dim == want, f"dim={inst.dim} expected={want}"
    return check


def _check_complete(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    lo, hi = complete_dimension_bounds(inst.graph)
    return lo <= inst.dim <= hi, f"dim={inst.dim} bounds=({lo},{hi})"


def _check_cycle_dim1(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    pred = cycle_dim1_predicate(inst.graph, inst.dm)
    return pred.dim1 == (inst.dim == 1), f"predicate={pred.dim1} witness={pred.witness_vertex} dim={inst.dim}"


def _check_wheel_compat(inst: Instance) -> Verdict:
    pred, witness = wheel_compatible_predicate(inst.graph)
    return pred == inst.compatible, f"predicate={pred} pairwise={inst.compatible} witness={witness}"


def _check_wheel_lower(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    return inst.dim >= 2, f"dim={inst.dim}"


def _check_wheel_center(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    with_center = [b for b in inst.minimum_bases if 0 in b]
    detail = f"dim={inst.dim} bases={len(inst.minimum_bases)} with_center={len(with_center)}"
    if inst.n > 6:
        return not with_center, detail + (f" e.g. {list(with_center[0])}" if with_center else "")
    return bool(with_center), detail


def _check_wheel_mdd(inst: Instance) -> Verdict:
    if not inst.compatible:
        return VACUOUS_INCOMPATIBLE
    return inst.result.mdd in (0, 1), f"mdd={inst.result.mdd}"


def _check_unsigned_tree(inst: Instance) -> Verdict:
    want = unsigned_tree_dimension(tree_profile(inst.graph))
    return inst.dim == want, f"dim={inst.dim} formula={want}"


def _check_signed_tree(inst: Instance) -> Verdict:
    try:
        want = signed_tree_dimension(inst.graph)
    except FormulaNotApplicable as exc:
        return True, f"vacuous: formula not applicable at {exc.vertex}"
    return inst.dim == want, f"dim={inst.dim} formula={want}"


def _check_tree_bounds(inst: Instance) -> Verdict:
    lo, hi = signed_tree_bounds(inst.graph)
    p = tree_profile(inst.graph)
    raw_lo = unsigned_tree_dimension(p) - p.ext
    ok = lo <= inst.dim <= hi and raw_lo <= inst.dim and inst.result.mdd <= p.ext
    return ok, f"dim={inst.dim} bounds=({lo},{hi}) ext={p.ext}"


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: str
    description: str
    expected: str
    check: Callable[[Instance], Verdict]
    sources: tuple = field(default_factory=tuple)


_SOLVED_SOURCES = (
    FamilySource("path", 2, 10),
    FamilySource("cycle", 3, 9),
    FamilySource("cycle", 10, 11, "all_negative"),
    FamilySource("star", 3, 8),
    FamilySource("complete", 3, 5),
    FamilySource("complete", 6, 7, "homogeneous"),
    FamilySource("wheel", 3, 7),
    RandomGraphSource(3, 8, 300, compatible_only=True),
    RandomTreeSource(4, 14, 100),
)

REGISTRY: dict[str, TheoremCheck] = {
    c.theorem_id: c
    for c in (
        TheoremCheck(
            "T1.1", "pairwise compatibility agrees with the negative even cycle criterion",
            "compatible iff no negative C_2k has an antipodal pair at distance k",
            _check_cycle_criterion,
            (RandomGraphSource(4, 7, 200), FamilySource("cycle", 4, 8),
             FamilySource("wheel", 4, 6), FamilySource("complete", 4, 5)),
        ),
        TheoremCheck(
            "T2.1", "resolving sets of the underlying graph resolve the signed graph",
            "sampled underlying bases resolve", _check_inheritance, _SOLVED_SOURCES,
        ),
        TheoremCheck(
            "T2.2", "dimension bounds", "1 <= dim <= dim_underlying <= n-1",
            _check_bounds, _SOLVED_SOURCES,
        ),
        TheoremCheck(
            "T2.3", "negation leaves the dimension unchanged", "dim(g) == dim(-g)",
            _check_negation, _SOLVED_SOURCES,
        ),
        TheoremCheck(
            "C2.4", "homogeneous complete graphs", "dim == n-1",
            _expect_dim(lambda inst: inst.graph.n - 1),
            (FamilySource("complete", 3, 7, "homogeneous"),),
        ),
        TheoremCheck(
            "C2.5", "all-negative cycles", "dim == 2",
            _expect_dim(lambda inst: 2), (FamilySource("cycle", 3, 11, "all_negative"),),
        ),
        TheoremCheck(
            "T-complete", "signed complete graph bounds", "dim within complete_dimension_bounds",
            _check_complete, (FamilySource("complete", 3, 5),),
        ),
        TheoremCheck(
            "T-path", "signed paths", "dim == 1",
            _expect_dim(lambda inst: 1), (FamilySource("path", 2, 10),),
        ),
        TheoremCheck(
            "T-cycle", "dimension-one signed cycles", "predicate iff dim == 1",
            _check_cycle_dim1, (FamilySource("cycle", 3, 9, "cycle_compatible"),),
        ),
        TheoremCheck(
            "T-star", "signed stars", "dim == star_dimension",
            _expect_dim(lambda inst: star_dimension(inst.graph)), (FamilySource("star", 3, 8),),
        ),
        TheoremCheck(
            "T3.1", "unsigned wheels", "dim == unsigned_wheel_dimension(n)",
            _expect_dim(lambda inst: unsigned_wheel_dimension(inst.n)),
            (FamilySource("wheel", 3, 12, "all_positive"),),
        ),
        TheoremCheck(
            "T3.3", "wheel compatibility via 4-cycles through the center",
            "predicate iff pairwise compatible", _check_wheel_compat,
            (FamilySource("wheel", 4, 7),),
        ),
        TheoremCheck(
            "L3.2", "no single vertex resolves a signed wheel", "dim >= 2",
            _check_wheel_lower, (FamilySource("wheel", 3, 7),),
        ),
        TheoremCheck(
            "T3.4", "central vertex in minimum bases of signed wheels",
            "n <= 6: some basis contains 0 (constructed signatures); n > 6: none does",
            _check_wheel_center,
            (FamilySource("wheel", 3, 6, "center_condition"), FamilySource("wheel", 7, 7)),
        ),
        TheoremCheck(
            "T3.5", "dimensional difference of signed wheels", "mdd in {0, 1}",
            _check_wheel_mdd, (FamilySource("wheel", 3, 7),),
        ),
        TheoremCheck(
            "T4.1", "unsigned trees", "dim == leaves-based formula",
            _check_unsigned_tree, (RandomTreeSource(4, 14, 100, signed=False),),
        ),
        TheoremCheck(
            "T4.3", "signed trees with special vertices of terminal degree != 2",
            "dim == dim(T) - |special|", _check_signed_tree, (RandomTreeSource(4, 14, 300),),
        ),
        TheoremCheck(
            "B4.4", "signed tree bounds", "dim(T) - ext(T) <= dim <= dim(T)",
            _check_tree_bounds, (RandomTreeSource(4, 14, 300),),
        ),
    )
}


# -- sweeps -------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationCase:
    theorem_id: str
    instance: str
    expected: str
    observed: str
    passed: bool

    def line(self) -> str:
        return f"{self.theorem_id}\t{self.instance}\t{'PASS' if self.passed else 'FAIL'}\t{self.observed}"


@dataclass
class SweepReport:
    theorem_id: str
    cases: list[VerificationCase]
    runtime: float
    sweep_mode: str

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def failures(self) -> list[VerificationCase]:
        return [c for c in self.cases if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.cases]


def _source_cap(source, caps: dict[str, int]) -> int:
    return caps.get(source.name(), caps.get("*", 10 ** 6))


def _normalise_caps(size_limits) -> dict[str, int]:
    if size_limits is None:
        return {}
    if isinstance(size_limits, int):
        size_limits = {"*": size_limits}
    caps = dict(size_limits)
    for name, cap in caps.items():
        order = family_order(name, cap) if name in FAMILIES else cap
        if order > DEFAULT_CAP:
            raise CapExceeded(f"cap {cap} for {name} gives {order} vertices, above solver cap {DEFAULT_CAP}")
    return caps


def _run_one(check: TheoremCheck, instance: str, cache: dict) -> VerificationCase:
    inst = cache.get(instance)
    if inst is None:
        inst = cache[instance] = Instance(instance)
    passed, detail = check.check(inst)
    return VerificationCase(check.theorem_id, instance, check.expected, detail, passed)


def run_theorem(theorem_id: str, size_limits=None, seed: int = 0, family: str | None = None,
                n: int | None = None, samples: int = DEFAULT_SAMPLES,
                cache: dict | None = None) -> SweepReport:
    if theorem_id not in REGISTRY:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}; known: {', '.join(REGISTRY)}")
    check = REGISTRY[theorem_id]
    caps = _normalise_caps(size_limits)
    sources = [s for s in check.sources if family is None or s.name() == family]
    if family is not None and not sources:
        raise UnknownTheorem(f"{theorem_id} has no sweep over family {family!r}")
    if n is not None:
        for s in sources:
            order = family_order(s.name(), n) if s.name() in FAMILIES else n
            if order > DEFAULT_CAP:
                raise CapExceeded(f"n={n} gives {order} vertices, above solver cap {DEFAULT_CAP}")
    if cache is None:
        cache = {}

    start = time.perf_counter()
    encodings: set[str] = set()
    exhaustive = True
    for i, source in enumerate(sources):
        rng = random.Random(f"{seed}/{theorem_id}/{i}")
        cap = _source_cap(source, caps)
        encodings.update(source.instances(cap, n, rng, samples))
        exhaustive = exhaustive and source.exhaustive(cap, n)
    cases = [_run_one(check, e, cache) for e in sorted(encodings)]
    mode = "exhaustive" if exhaustive else f"random(seed={seed}, samples={samples})"
    return SweepReport(theorem_id, cases, time.perf_counter() - start, mode)


def run_suite(theorem_ids: Iterable[str] | None = None, size_limits=None, seed: int = 0,
              family: str | None = None, n: int | None = None,
              samples: int = DEFAULT_SAMPLES) -> list[SweepReport]:
    """Run the named checks (all registered ones when ``theorem_ids`` is None)."""
    ids = list(REGISTRY) if theorem_ids is None else list(theorem_ids)
    for tid in ids:
        if tid not in REGISTRY:
            raise UnknownTheorem(f"unknown theorem id {tid!r}; known: {', '.join(REGISTRY)}")
    cache: dict = {}
    return [run_theorem(t, size_limits, seed, family, n, samples, cache) for t in ids]


def replay(theorem_id: str, encoding: str) -> VerificationCase:
    if theorem_id not in REGISTRY:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    return _run_one(REGISTRY[theorem_id], encoding, {})


def write_reports(reports: Iterable[SweepReport], out: TextIO) -> None:
    for report in reports:
        for line in report.lines():
            out.write(line + "\n")


# -- spectra ------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    family: str
    n: int
    histogram: dict[int, int]
    incompatible: int
    sweep_mode: str

    @property
    def total(self) -> int:
        return sum(self.histogram.values()) + self.incompatible


def spectrum(family: str, n: int, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> Spectrum:
    """Histogram of metric dimension over the family's signatures."""
    order = family_order(family, n)
    if order > DEFAULT_CAP:
        raise CapExceeded(f"{family} {n} has {order} vertices, above solver cap {DEFAULT_CAP}")
    m = len(family_edges(family, n))
    if 2 ** m <= EXHAUSTIVE_LIMIT:
        signatures: Iterable = _all_signatures(m)
        mode = "exhaustive"
    else:
        signatures = _random_signatures(m, samples, random.Random(f"{seed}/spectrum/{family}/{n}"))
        mode = f"random(seed={seed}, samples={samples})"
    hist: Counter = Counter()
    incompatible = 0
    for signs in signatures:
        g = family_graph(family, n, signs)
        dm = signed_distances(g)
        if dm.first_incompatible() is not None:
            incompatible += 1
            continue
        hist[metric_dimension(g, dm=dm).dimension] += 1
    return Spectrum(family, n, dict(sorted(hist.items())), incompatible, mode)
