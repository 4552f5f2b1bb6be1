"""The adjacency graphs of real K3 involutions and real cubic fourfolds.

Edges are identified with (origin, element-class) pairs; endpoints are
resolved by the (r, d, type) key arithmetic, never by manipulating rank-22
involution matrices.  The K4 graph reuses the K3 vertex keys plus the single
sentinel vertex ``irr``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .lattice import (
    GramLattice,
    LatticeError,
    LatticeVector,
    direct_sum,
    from_summands,
    inner,
    is_even,
    make_standard,
    norm,
    orthogonal_sublattice,
    rescale,
    signature,
    sublattice_coordinates,
    twist,
)
from .finite_forms import (
    discriminant_group,
    discriminant_quadratic,
    lattices_equivalent,
    parity,
)
from .catalog import Catalog, CatalogError, K3Vertex, VertexKey
from .elements import (
    ElementClass,
    classify_element,
    enumerate_vectors,
    exists_class,
)

IRR_ID = "irr"


class StructuralError(RuntimeError):
    """A built graph violates one of its structural guarantees."""


@dataclass(frozen=True)
class EdgeLabel:
    origin: VertexKey
    cls: ElementClass
    square: int  # -2 for K3 edges, 6 for K4 edges


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    label: EdgeLabel


@dataclass(frozen=True)
class DeformationGraph:
    kind: str  # "k3" | "k4"
    vertex_ids: Tuple[str, ...]
    edges: Tuple[GraphEdge, ...]

    def out_edges(self, vid: str) -> Tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.src == vid)

    def in_edges(self, vid: str) -> Tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.dst == vid)

    def edge(self, src: str, cls: ElementClass) -> Optional[GraphEdge]:
        for e in self.edges:
            if e.src == src and e.label.cls is cls:
                return e
        return None

    def is_connected(self) -> bool:
        if not self.vertex_ids:
            return True
        adj: Dict[str, List[str]] = {v: [] for v in self.vertex_ids}
        for e in self.edges:
            adj[e.src].append(e.dst)
            adj[e.dst].append(e.src)
        seen = {self.vertex_ids[0]}
        stack = [self.vertex_ids[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertex_ids)


@dataclass(frozen=True)
class K4VertexData:
    key: str
    mminus: GramLattice
    source: str  # the corresponding K3 vertex id, or "irr"


# The lattice identification of the irregular K4 vertex: -M_- = U(2) + 3D4.
IRR_MINUS_SUMMANDS: Tuple[str, ...] = ("U(2)", "D4", "D4", "D4")

_CLASS_ORDER = (ElementClass.ODD, ElementClass.WU, ElementClass.EVEN_NON_WU)


def terminal_key(origin: VertexKey, cls: ElementClass) -> VertexKey:
    """Endpoint key of an edge: r grows by 1, d moves by the class, Wu lands on type I."""
    r, d, _ = origin
    if cls is ElementClass.ODD:
        return VertexKey(r + 1, d + 1, "II")
    if cls is ElementClass.WU:
        return VertexKey(r + 1, d - 1, "I")
    return VertexKey(r + 1, d - 1, "II")


def _check_graph(g: DeformationGraph, max_out: int = 3) -> None:
    ids = set(g.vertex_ids)
    pairs = set()
    unordered = set()
    outdeg: Dict[str, int] = {}
    for e in g.edges:
        if e.src not in ids or e.dst not in ids:
            raise StructuralError(f"{g.kind}: edge {e.src}->{e.dst} leaves the vertex set")
        if e.src == e.dst:
            raise StructuralError(f"{g.kind}: graph-loop at {e.src}")
        if (e.src, e.dst) in pairs or frozenset((e.src, e.dst)) in unordered:
            raise StructuralError(f"{g.kind}: multiple edges between {e.src} and {e.dst}")
        pairs.add((e.src, e.dst))
        unordered.add(frozenset((e.src, e.dst)))
        outdeg[e.src] = outdeg.get(e.src, 0) + 1
        if outdeg[e.src] > max_out:
            raise StructuralError(f"{g.kind}: out-degree of {e.src} exceeds {max_out}")
    if not g.is_connected():
        raise StructuralError(f"{g.kind}: graph is not connected")


def build_k3_graph(catalog: Catalog) -> DeformationGraph:
    """All 75 vertices; one edge per (vertex, class) with a square -2 element."""
    edges: List[GraphEdge] = []
    for v in catalog:
        for cls in _CLASS_ORDER:
            if not exists_class(v, 0, cls):
                continue
            key = terminal_key(v.key, cls)
            try:
                dst = catalog.lookup(key)
            except CatalogError:
                raise StructuralError(
                    f"k3: edge from {v.vid} with class {cls.value} resolves to "
                    f"missing key {tuple(key)}"
                ) from None
            edges.append(GraphEdge(v.vid, dst.vid, EdgeLabel(v.key, cls, -2)))
    g = DeformationGraph("k3", catalog.ids(), tuple(edges))
    _check_graph(g)
    return g


def build_k4_graph(catalog: Catalog) -> Tuple[DeformationGraph, Dict[str, K4VertexData]]:
    """K3 keys minus [8S]_I plus the sentinel irregular vertex, square-6 edges."""
    vertex_ids = tuple(vid for vid in catalog.ids() if vid != "[8S]_I") + (IRR_ID,)
    edges: List[GraphEdge] = []
    for v in catalog:
        if v.vid == "[8S]_I":
            continue
        for cls in _CLASS_ORDER:
            if not exists_class(v, 1, cls):
                continue
            if v.vid == "[3S]" and cls is ElementClass.WU:
                edges.append(GraphEdge(v.vid, IRR_ID, EdgeLabel(v.key, cls, 6)))
                continue
            key = terminal_key(v.key, cls)
            try:
                dst = catalog.lookup(key)
            except CatalogError:
                raise StructuralError(
                    f"k4: edge from {v.vid} with class {cls.value} resolves to "
                    f"missing key {tuple(key)} outside the designated irregular case"
                ) from None
            if dst.vid not in vertex_ids:
                raise StructuralError(
                    f"k4: edge from {v.vid} terminates at removed vertex {dst.vid}"
                )
            edges.append(GraphEdge(v.vid, dst.vid, EdgeLabel(v.key, cls, 6)))
    g = DeformationGraph("k4", vertex_ids, tuple(edges))
    _check_graph(g)
    data: Dict[str, K4VertexData] = {}
    for vid in vertex_ids:
        if vid == IRR_ID:
            mm = rescale(from_summands(IRR_MINUS_SUMMANDS, "U(2)+3D4"), -1)
            data[vid] = K4VertexData(vid, mm, IRR_ID)
        else:
            v = catalog.by_id(vid)
            data[vid] = K4VertexData(vid, rescale(v.lplus, -1), vid)
    _validate_irr(data[IRR_ID], catalog)
    return g, data


def _validate_irr(irr: K4VertexData, catalog: Catalog) -> None:
    neg = rescale(irr.mminus, -1)
    if signature(neg) != (1, 13):
        raise StructuralError("irr: -M_- must have signature (1, 13)")
    dg = discriminant_group(neg)
    if not dg.is_two_periodic or dg.rank != 8:
        raise StructuralError("irr: -M_- must have 2-periodic discriminant of rank 8")
    if parity(discriminant_quadratic(neg)) != "even":
        raise StructuralError("irr: -M_- must carry an even discriminant form")
    for v in catalog:
        if lattices_equivalent(neg, v.lplus) == "yes":
            raise StructuralError(f"irr: -M_- is equivalent to L+({v.vid})")


# ---------------------------------------------------------------------------
# regular subgraphs and the graph isomorphism F
# ---------------------------------------------------------------------------

@dataclass
class FReport:
    vertices: int
    edges: int
    bijective: bool
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bijective and not self.mismatches


def regular_subgraphs_and_F(k3: DeformationGraph, k4: DeformationGraph) -> FReport:
    """Drop the irregular vertex and edge on each side; F is the key identity.

    Verifies that F is a bijection on the 74 regular vertices and on all
    regular edges, preserving orientation and class.
    """
    k3_vertices = set(k3.vertex_ids) - {"[8S]_I"}
    k4_vertices = set(k4.vertex_ids) - {IRR_ID}
    mismatches: List[str] = []
    if k3_vertices != k4_vertices:
        extra3 = sorted(k3_vertices - k4_vertices)
        extra4 = sorted(k4_vertices - k3_vertices)
        mismatches.append(f"vertex sets differ: k3-only {extra3}, k4-only {extra4}")
    k3_star = {
        (e.src, e.label.cls, e.dst)
        for e in k3.edges
        if e.src != "[8S]_I" and e.dst != "[8S]_I"
    }
    k4_star = {
        (e.src, e.label.cls, e.dst)
        for e in k4.edges
        if e.src != IRR_ID and e.dst != IRR_ID
    }
    for item in sorted(k3_star - k4_star, key=str):
        mismatches.append(f"k3 edge without k4 correspondent: {item}")
    for item in sorted(k4_star - k3_star, key=str):
        mismatches.append(f"k4 edge without k3 correspondent: {item}")
    bij = not mismatches and len(k3_star) == len(k4_star)
    return FReport(len(k3_vertices), len(k3_star), bij, mismatches)


def k4_equals_k3_after_swap(k3: DeformationGraph, k4: DeformationGraph) -> bool:
    """K4 is K3 minus ([7S] -Wu-> [8S]_I, vertex [8S]_I) plus ([3S] -Wu-> irr)."""
    k3_e = {(e.src, e.label.cls, e.dst) for e in k3.edges}
    k4_e = {(e.src, e.label.cls, e.dst) for e in k4.edges}
    removed = {("[7S]", ElementClass.WU, "[8S]_I")}
    added = {("[3S]", ElementClass.WU, IRR_ID)}
    return (
        k3_e - removed == k4_e - added
        and removed <= k3_e
        and added <= k4_e
        and set(k4.vertex_ids) == (set(k3.vertex_ids) - {"[8S]_I"}) | {IRR_ID}
    )


# ---------------------------------------------------------------------------
# flips and flip cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlipTriple:
    """An orthogonal pair h, v in L-(c) with h^2 = 6, v^2 = -2."""

    h: LatticeVector
    v: LatticeVector

    def __post_init__(self) -> None:
        if self.h.ambient.gram != self.v.ambient.gram:
            raise LatticeError("flip pair must share one ambient lattice")
        if norm(self.h) != 6:
            raise LatticeError(f"h^2 = {norm(self.h)} != 6")
        if norm(self.v) != -2:
            raise LatticeError(f"v^2 = {norm(self.v)} != -2")
        if inner(self.h, self.v) != 0:
            raise LatticeError("h and v are not orthogonal")

    @property
    def ambient(self) -> GramLattice:
        return self.h.ambient


def flip(t: FlipTriple) -> FlipTriple:
    """The flip involution (h, v) -> (2h - 3v, h - 2v) in the same ambient."""
    h2 = t.h.scale(2) - t.v.scale(3)
    v2 = t.h - t.v.scale(2)
    return FlipTriple(h2, v2)


def find_flip_triple(v: K3Vertex, bound: int = 3, limit: int = 40) -> Optional[FlipTriple]:
    """Bounded search for an orthogonal (h, v) pair in L-(c), or None."""
    hs = enumerate_vectors(v.lminus, 6, bound, limit)
    vs = enumerate_vectors(v.lminus, -2, bound, limit)
    for h in hs:
        for w in vs:
            if inner(h, w) == 0:
                return FlipTriple(h, w)
    return None


@dataclass
class FlipCycleReport:
    origin: str
    identities: List[bool]
    detail: List[str]

    @property
    def ok(self) -> bool:
        return all(self.identities) and len(self.identities) == 4


def verify_flip_cycle(
    c: K3Vertex, t: FlipTriple, k4: DeformationGraph, catalog: Catalog
) -> FlipCycleReport:
    """Check the four endpoint identities of the quadrilateral spanned by (c, h, v).

    The cycle runs over the K4 edges labelled by h and 2h-3v at c and by the
    push-forwards of those classes at the two K3 neighbours c_v and c_{v2}.
    """
    if t.ambient.gram != c.lminus.gram:
        raise LatticeError("flip triple does not live in L-(c)")
    h1, v1 = t.h, t.v
    flipped = flip(t)
    h2, v2 = flipped.h, flipped.v
    detail: List[str] = []
    identities: List[bool] = []

    cls_h1 = classify_element(c.lminus, h1)
    cls_h2 = classify_element(c.lminus, h2)
    cls_v1 = classify_element(c.lminus, v1)
    cls_v2 = classify_element(c.lminus, v2)

    def k4_edge(src: str, cls: ElementClass) -> Optional[GraphEdge]:
        e = k4.edge(src, cls)
        if e is None:
            detail.append(f"missing K4 edge ({src}, {cls.value})")
        return e

    # identity 1: w[c,h1] = w[c,h2]; both edges emanate from [c]
    e1 = k4_edge(c.vid, cls_h1)
    e2 = k4_edge(c.vid, cls_h2)
    identities.append(e1 is not None and e2 is not None and e1.src == e2.src == c.vid)

    # the two K3 neighbours c_{v1}, c_{v2}
    cv1 = catalog.lookup(terminal_key(c.key, cls_v1))
    cv2 = catalog.lookup(terminal_key(c.key, cls_v2))

    # push h1 into L-(c_{v1}) = v1-perp and h2 into L-(c_{v2}) = v2-perp
    sub1 = orthogonal_sublattice(c.lminus, v1)
    h1_in_sub = sub1.vector(sublattice_coordinates(c.lminus, v1, h1))
    cls_h1_sub = classify_element(sub1, h1_in_sub)
    sub2 = orthogonal_sublattice(c.lminus, v2)
    h2_in_sub = sub2.vector(sublattice_coordinates(c.lminus, v2, h2))
    cls_h2_sub = classify_element(sub2, h2_in_sub)

    # identity 2: w_(+)[c,h1] = w[c_{v2},h2]
    e_cv2 = k4_edge(cv2.vid, cls_h2_sub)
    identities.append(e1 is not None and e_cv2 is not None and e1.dst == e_cv2.src == cv2.vid)

    # identity 3: w_(+)[c,h2] = w[c_{v1},h1]
    e_cv1 = k4_edge(cv1.vid, cls_h1_sub)
    identities.append(e2 is not None and e_cv1 is not None and e2.dst == e_cv1.src == cv1.vid)

    # identity 4: w_(+)[c_{v1},h1] = w_(+)[c_{v2},h2]
    identities.append(
        e_cv1 is not None and e_cv2 is not None and e_cv1.dst == e_cv2.dst
    )
    return FlipCycleReport(c.vid, identities, detail)


# ---------------------------------------------------------------------------
# basic cycles
# ---------------------------------------------------------------------------

@dataclass
class BasicCycle:
    origin: str
    even_cls: ElementClass
    edges_pos: Tuple[Tuple[str, ElementClass], ...]  # traversed forwards
    edges_neg: Tuple[Tuple[str, ElementClass], ...]  # traversed backwards
    regular: bool


@dataclass
class BasicCycleReport:
    cycles: List[BasicCycle]
    all_regular: bool
    cycle_rank: int  # |E| - |V| + 1 of the K3 graph
    incidence_rank: int
    incidence_divisors: Tuple[int, ...]

    @property
    def count_matches_rank(self) -> bool:
        return len(self.cycles) == self.cycle_rank

    @property
    def full_rank(self) -> bool:
        return self.incidence_rank == len(self.cycles)


def basic_cycles_regular(k3: DeformationGraph, catalog: Catalog) -> BasicCycleReport:
    """Enumerate the basic cycles (odd + even edge pairs) and test regularity.

    A basic cycle at [c] uses the odd edge and one even-class edge [c,v2];
    it is regular when the even terminal admits an odd element of square 6.
    The two parallel paths are chased through the graph, so the report also
    certifies that they land on one common vertex.
    """
    cycles: List[BasicCycle] = []
    all_regular = True
    for vid in k3.vertex_ids:
        v = catalog.by_id(vid)
        odd_edge = k3.edge(vid, ElementClass.ODD)
        if odd_edge is None:
            continue
        for even_cls in (ElementClass.WU, ElementClass.EVEN_NON_WU):
            even_edge = k3.edge(vid, even_cls)
            if even_edge is None:
                continue
            cv1 = odd_edge.dst  # terminal of the odd edge
            cv2 = even_edge.dst
            # path 1: odd edge, then the even class (never Wu downstairs)
            second1 = k3.edge(cv1, ElementClass.EVEN_NON_WU)
            # path 2: even edge, then odd
            second2 = k3.edge(cv2, ElementClass.ODD)
            if second1 is None or second2 is None or second1.dst != second2.dst:
                raise StructuralError(
                    f"basic cycle at {vid} via {even_cls.value} does not close"
                )
            regular = exists_class(catalog.by_id(cv2), 1, ElementClass.ODD)
            all_regular = all_regular and regular
            cycles.append(
                BasicCycle(
                    vid,
                    even_cls,
                    ((vid, ElementClass.ODD), (cv1, ElementClass.EVEN_NON_WU)),
                    ((vid, even_cls), (cv2, ElementClass.ODD)),
                    regular,
                )
            )
    edge_index = {(e.src, e.label.cls): i for i, e in enumerate(k3.edges)}
    rows = []
    for cyc in cycles:
        row = [0] * len(k3.edges)
        for key in cyc.edges_pos:
            row[edge_index[key]] += 1
        for key in cyc.edges_neg:
            row[edge_index[key]] -= 1
        rows.append(row)
    rank = _rational_rank(rows)
    divisors = _snf_divisors(rows)
    cycle_rank = len(k3.edges) - len(k3.vertex_ids) + 1
    return BasicCycleReport(cycles, all_regular, cycle_rank, rank, divisors)


def _rational_rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        sel = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        p = m[rank][c]
        m[rank] = [x / p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def _snf_divisors(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    from .finite_forms import smith_normal_form

    if not rows:
        return ()
    _, d, _ = smith_normal_form(rows)
    out = []
    for i in range(min(len(d), len(d[0]))):
        if d[i][i] != 0:
            out.append(d[i][i])
    return tuple(out)


# ---------------------------------------------------------------------------
# K4 eigenlattice synthesis
# ---------------------------------------------------------------------------

def synthesize_k4_plus(
    c: K3Vertex, h: LatticeVector, check_brown: bool = False
) -> GramLattice:
    """The positive K4 eigenlattice M_+ = t_w((-L_-) + Z) with w = h + 2e.

    Checks all postconditions: w^2 = -2 before twisting, M_+ odd with
    signature (rank L_-, 1), discriminant rank d, and H = h + 3e of square 3
    orthogonal to w.

    ``check_brown`` additionally builds the discriminant quadratic form of
    M_+ from a characteristic vector of M_+ itself and verifies the van der
    Blij congruence sigma - w_c^2 = Brown mod 8.  It is off by default: a
    characteristic vector of M_+ alone need not induce the same form as one
    characteristic for the whole ambient lattice.
    """
    if h.ambient.gram != c.lminus.gram:
        raise LatticeError("h must live in L-(c)")
    if norm(h) != 6:
        raise LatticeError(f"h^2 = {norm(h)} != 6")
    ambient = direct_sum(rescale(c.lminus, -1), make_standard("<1>"))
    w = ambient.vector(tuple(h.coords) + (2,))
    big_h = ambient.vector(tuple(h.coords) + (3,))
    if norm(w) != -2:
        raise StructuralError(f"{c.vid}: w^2 = {norm(w)} != -2")
    if norm(big_h) != 3 or inner(w, big_h) != 0:
        raise StructuralError(f"{c.vid}: H^2 = 3 and w._|_.H postcondition failed")
    mplus = twist(ambient, w)
    if is_even(mplus):
        raise StructuralError(f"{c.vid}: M_+ must be odd")
    expect_sig = (c.lminus.rank, 1)
    if signature(mplus) != expect_sig:
        raise StructuralError(
            f"{c.vid}: signature(M_+) = {signature(mplus)} != {expect_sig}"
        )
    dg = discriminant_group(mplus)
    if dg.rank != c.d or not dg.is_two_periodic:
        raise StructuralError(
            f"{c.vid}: rank(discr M_+) = {dg.rank} != d = {c.d}"
        )
    if check_brown:
        from .lattice import find_characteristic
        from .finite_forms import brown_invariant

        wc = find_characteristic(mplus)
        form = discriminant_quadratic(mplus, wc)
        sp, sm = signature(mplus)
        if (sp - sm - norm(wc) - brown_invariant(form)) % 8 != 0:
            raise StructuralError(f"{c.vid}: van der Blij congruence failed for M_+")
    return GramLattice(mplus.rank, mplus.gram, f"M+{c.vid}", None)


# ---------------------------------------------------------------------------
# per-edge lattice checks
# ---------------------------------------------------------------------------

@dataclass
class StructuralReport:
    verified: int
    undecidable: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def structural_checks(
    k3: DeformationGraph, k4: DeformationGraph, catalog: Catalog
) -> StructuralReport:
    """Eigenlattice bookkeeping along every K3 edge.

    Odd edges satisfy L+(origin) + <-2> = L+(terminal); even edges satisfy
    L-(terminal) + <-2> = L-(origin), both up to the finite-form oracle.
    """
    rep = StructuralReport(0)
    minus2 = make_standard("<-2>")
    for e in k3.edges:
        o = catalog.by_id(e.src)
        t = catalog.by_id(e.dst)
        if e.label.cls is ElementClass.ODD:
            verdict = lattices_equivalent(direct_sum(o.lplus, minus2), t.lplus)
            desc = f"odd edge {e.src}->{e.dst}: L+(o)+<-2> vs L+(t)"
        else:
            verdict = lattices_equivalent(direct_sum(t.lminus, minus2), o.lminus)
            desc = f"{e.label.cls.value} edge {e.src}->{e.dst}: L-(t)+<-2> vs L-(o)"
        if verdict == "yes":
            rep.verified += 1
        elif verdict == "undecidable":
            rep.undecidable.append(desc)
        else:
            rep.failures.append(desc)
    return rep


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def graph_json_dict(g: DeformationGraph, catalog: Catalog) -> dict:
    vertices = []
    for vid in g.vertex_ids:
        if vid == IRR_ID:
            # the synthesized lattice -M_- has signature (1,13), d = 8, even form
            vertices.append({"id": IRR_ID, "r": 14, "d": 8, "type": "I"})
        else:
            v = catalog.by_id(vid)
            vertices.append({"id": vid, "r": v.r, "d": v.d, "type": v.vtype})
    edges = [
        {"from": e.src, "to": e.dst, "class": e.label.cls.value} for e in g.edges
    ]
    return {"schema": "k4graph/1", "kind": g.kind, "vertices": vertices, "edges": edges}


_EDGE_STYLE = {
    ElementClass.ODD: "solid",
    ElementClass.WU: "bold",
    ElementClass.EVEN_NON_WU: "dashed",
}


def graph_dot(g: DeformationGraph, catalog: Catalog) -> str:
    lines = [f"digraph {g.kind} {{"]
    for vid in g.vertex_ids:
        if vid == IRR_ID:
            lines.append(
                f'  "{vid}" [label="K4-irr", shape=box, style=filled];'
            )
            continue
        v = catalog.by_id(vid)
        label = vid.replace("[", "").replace("]", "")
        if v.vtype == "I":
            lines.append(f'  "{vid}" [label="{label}", shape=box, style=filled];')
        else:
            lines.append(f'  "{vid}" [label="{label}", shape=circle];')
    for e in g.edges:
        lines.append(f'  "{e.src}" -> "{e.dst}" [style={_EDGE_STYLE[e.label.cls]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
