"""Invariant suites behind `k4graph verify` and the acceptance tests.

Each suite returns a SuiteResult with human-readable failure strings; the
CLI exit status is the conjunction.  The suites are deterministic (seeded
randomness only) and reasonably fast: the full run takes a few seconds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .lattice import (
    GramLattice,
    direct_sum,
    from_summands,
    inner,
    is_even,
    make_standard,
    norm,
    rescale,
    reflect,
    signature,
    twist,
    find_characteristic,
    gram_apply,
    STANDARD_GRAMS,
)
from .finite_forms import (
    brown_invariant,
    discriminant_quadratic,
    forms_isomorphic,
    lattices_equivalent,
    parity,
    smith_normal_form,
)
from .catalog import Catalog, build_catalog, coords_rd
from .elements import (
    ElementClass,
    classify_element,
    construct_witness,
    exists_class,
    search_witness,
)
from . import graphs as G


@dataclass
class SuiteResult:
    name: str
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message: str) -> None:
        if not cond:
            self.failures.append(message)


# ---------------------------------------------------------------------------

def _random_unimodular(rng: random.Random, n: int) -> List[List[int]]:
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


def _congruent(gram, u) -> GramLattice:
    n = len(gram)
    ug = [[sum(u[i][k] * gram[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    out = [[sum(ug[i][k] * u[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    return GramLattice.from_rows(out)


def suite_lattice() -> SuiteResult:
    res = SuiteResult("lattice")
    rng = random.Random(20080514)
    golden_sig = {
        "<1>": (1, 0), "<2>": (1, 0), "<-2>": (0, 1),
        "U": (1, 1), "U(2)": (1, 1),
        "D4": (0, 4), "E7": (0, 7), "E8": (0, 8), "E8(2)": (0, 8),
    }
    golden_det = {
        "<1>": 1, "<2>": 2, "<-2>": 2, "U": 1, "U(2)": 4,
        "D4": 4, "E7": 2, "E8": 1, "E8(2)": 256,
    }
    for name in STANDARD_GRAMS:
        lat = make_standard(name)
        res.check(signature(lat) == golden_sig[name], f"signature of {name}")
        _, d, _ = smith_normal_form(lat.gram)
        det = 1
        for i in range(lat.rank):
            det *= d[i][i]
        res.check(det == golden_det[name], f"|det| of {name}")
        res.check(is_even(lat) == (name != "<1>"), f"evenness of {name}")
    k3 = from_summands(("U", "U", "U", "E8", "E8"))
    res.check(signature(k3) == (3, 19), "K3 lattice signature (3,19)")
    res.check(
        signature(from_summands(("U(2)", "D4", "D4", "D4"))) == (1, 13),
        "U(2)+3D4 signature (1,13)",
    )
    # signature is congruence-invariant
    for trial in range(5):
        u = _random_unimodular(rng, 6)
        lat = from_summands(("U", "<2>", "<-2>", "U"))
        res.check(
            signature(_congruent(lat.gram, u)) == signature(lat),
            f"congruence invariance, trial {trial}",
        )
    # reflection and twist algebra on a small indefinite lattice
    lat = from_summands(("U", "<-2>", "<2>"))
    vecs = [lat.vector([rng.randrange(-3, 4) for _ in range(4)]) for _ in range(30)]
    roots = [v for v in vecs if norm(v) in (2, -2)]
    for v in roots[:6]:
        res.check(reflect(v, v).coords == (-v).coords, "s_v(v) = -v")
        for x in vecs[:8]:
            sx, sy = reflect(v, x), reflect(v, reflect(v, x))
            res.check(sy.coords == x.coords, "s_v is an involution")
            for y in vecs[:4]:
                res.check(
                    inner(reflect(v, x), reflect(v, y)) == inner(x, y),
                    "s_v preserves the form",
                )
        tw = twist(lat, v)
        res.check(twist(tw, tw.vector(v.coords)).gram == lat.gram, "twist is an involution")
        sp, sm = signature(lat)
        expect = (sp + 1, sm - 1) if norm(v) == -2 else (sp - 1, sm + 1)
        res.check(signature(tw) == expect, "twist moves one inertia unit")
        _, d0, _ = smith_normal_form(lat.gram)
        _, d1, _ = smith_normal_form(tw.gram)
        det0 = det1 = 1
        for i in range(lat.rank):
            det0 *= d0[i][i]
            det1 *= d1[i][i]
        res.check(det0 == det1, "twist preserves |det|")
    # the K4 lattice: twist of (-K3) + <1> at w = h + 2e
    amb = direct_sum(rescale(k3, -1), make_standard("<1>"))
    wc = [0] * 23
    wc[0], wc[1], wc[22] = 1, 3, 2
    w = amb.vector(wc)
    res.check(norm(w) == -2, "w = h + 2e has square -2")
    m = twist(amb, w)
    res.check(signature(m) == (21, 2), "K4 lattice signature (21,2)")
    res.check(not is_even(m), "K4 lattice is odd")
    _, dm, _ = smith_normal_form(m.gram)
    res.check(all(dm[i][i] == 1 for i in range(23)), "K4 lattice is unimodular")
    wch = find_characteristic(m)
    gw = gram_apply(m, wch.coords)
    res.check(
        all((gw[i] - m.gram[i][i]) % 2 == 0 for i in range(23)),
        "characteristic vector of the K4 lattice",
    )
    return res


def suite_forms() -> SuiteResult:
    res = SuiteResult("forms")
    rng = random.Random(1746)
    for trial in range(25):
        n = rng.randrange(1, 5)
        m = rng.randrange(1, 5)
        mat = [[rng.randrange(-9, 10) for _ in range(m)] for _ in range(n)]
        u, d, v = smith_normal_form(mat)
        prod = [
            [sum(u[i][a] * mat[a][b] * v[b][j] for a in range(n) for b in range(m))
             for j in range(m)]
            for i in range(n)
        ]
        res.check(prod == [list(r) for r in d], f"SNF round-trip, trial {trial}")
        for i in range(min(n, m) - 1):
            if d[i][i] and d[i + 1][i + 1] % d[i][i]:
                res.failures.append(f"SNF divisibility chain, trial {trial}")
    golden_brown = {"<2>": 1, "<-2>": 7, "U(2)": 0, "D4": 4, "E8(2)": 0}
    for name, expect in golden_brown.items():
        f = discriminant_quadratic(make_standard(name))
        res.check(brown_invariant(f) == expect, f"Brown of discr {name}")
        res.check(
            brown_invariant(f.negate()) == (-expect) % 8, f"Brown of -discr {name}"
        )
    fu2 = discriminant_quadratic(make_standard("U(2)"))
    res.check(fu2.qvals == (0, 0) and fu2.bvals[0][1] == 1, "U(2) discriminant form")
    res.check(parity(fu2) == "even", "U(2) form is even")
    res.check(parity(discriminant_quadratic(make_standard("<2>"))) == "odd", "<2> form is odd")
    # Milgram on the standard lattices with 2-periodic discriminants
    for name in ("<2>", "<-2>", "U", "U(2)", "D4", "E8", "E8(2)"):
        lat = make_standard(name)
        sp, sm = signature(lat)
        res.check(
            (sp - sm - brown_invariant(discriminant_quadratic(lat))) % 8 == 0,
            f"Milgram congruence for {name}",
        )
    res.check(
        lattices_equivalent(make_standard("<1>"), make_standard("<1>")) == "undecidable",
        "odd lattices are out of oracle scope",
    )
    res.check(
        forms_isomorphic(
            discriminant_quadratic(make_standard("<2>")),
            discriminant_quadratic(make_standard("<-2>")),
        ) is False,
        "<2> and <-2> discriminant forms differ",
    )
    return res


def suite_catalog(catalog: Optional[Catalog] = None) -> SuiteResult:
    res = SuiteResult("catalog")
    cat = catalog if catalog is not None else build_catalog()
    res.check(len(cat) == 75, f"catalog has {len(cat)} entries, expected 75")
    principal = [v for v in cat if v.top.kind == "spheres" and not v.top.subscript_I]
    res.check(len(principal) == 64, "64 principal-series entries")
    res.check(len(cat) - len(principal) == 11, "11 exceptional entries")
    keys = {v.key for v in cat}
    res.check(len(keys) == 75, "vertex keys are pairwise distinct")
    seen_plus = set()
    for v in cat:
        res.check(v.lplus.rank + v.lminus.rank == 22, f"{v.vid}: rank sum")
        res.check(signature(v.lplus)[0] == 1, f"{v.vid}: sigma+(L+) = 1")
        res.check(signature(v.lminus)[0] == 2, f"{v.vid}: sigma+(L-) = 2")
        fp = discriminant_quadratic(v.lplus)
        fm = discriminant_quadratic(v.lminus)
        res.check(fp.d == fm.d == v.d, f"{v.vid}: discriminant ranks")
        res.check(parity(fp) == parity(fm), f"{v.vid}: anti-isometric parities")
        bp, bm = brown_invariant(fp), brown_invariant(fm)
        res.check((bp + bm) % 8 == 0, f"{v.vid}: Brown sum is 0 mod 8")
        for lat, b in ((v.lplus, bp), (v.lminus, bm)):
            sp, sm = signature(lat)
            res.check((sp - sm - b) % 8 == 0, f"{v.vid}: Milgram congruence")
        res.check(coords_rd(v) == (v.r, v.d), f"{v.vid}: coordinates")
        inv = (signature(v.lplus), fp.d, parity(fp), bp)
        res.check(inv not in seen_plus, f"{v.vid}: duplicate L+ invariants")
        seen_plus.add(inv)
    res.check(
        sorted(v.vid for v in cat if v.kS_flag) == sorted(f"[{k}S]" for k in range(1, 11)),
        "kS family flags",
    )
    return res


def suite_predicates(catalog: Optional[Catalog] = None) -> SuiteResult:
    res = SuiteResult("predicates")
    cat = catalog if catalog is not None else build_catalog()
    for v in cat:
        for n in (0, 1):
            for cls in ElementClass:
                if exists_class(v, n, cls):
                    x = construct_witness(v, n, cls)
                    res.check(norm(x) == 8 * n - 2, f"{v.vid} n={n} {cls.value}: witness norm")
                    res.check(
                        classify_element(v.lminus, x) is cls,
                        f"{v.vid} n={n} {cls.value}: witness class",
                    )
                    res.check(
                        classify_element(v.lminus, -x) is cls,
                        f"{v.vid} n={n} {cls.value}: class is sign-invariant",
                    )
                elif v.lminus.rank <= 12:
                    hit = search_witness(v.lminus, 8 * n - 2, cls, bound=3)
                    res.check(
                        hit is None,
                        f"{v.vid} n={n} {cls.value}: predicate false but search found {hit}",
                    )
    return res


def suite_graphs(catalog: Optional[Catalog] = None) -> SuiteResult:
    res = SuiteResult("graphs")
    cat = catalog if catalog is not None else build_catalog()
    try:
        k3 = G.build_k3_graph(cat)
        k4, k4data = G.build_k4_graph(cat)
    except G.StructuralError as exc:
        res.failures.append(str(exc))
        return res
    res.check(len(k3.vertex_ids) == 75, "K3 graph has 75 vertices")
    res.check(len(k4.vertex_ids) == 75, "K4 graph has 75 vertices")
    terminals = sorted(v for v in k3.vertex_ids if not k3.out_edges(v))
    res.check(terminals == ["[10S]", "[8S]_I"], f"K3 terminal vertices: {terminals}")
    for e in k3.edges:
        o, t = cat.by_id(e.src), cat.by_id(e.dst)
        res.check(t.r == o.r + 1, f"edge {e.src}->{e.dst}: r increment")
        if e.label.cls is ElementClass.ODD:
            res.check(t.d == o.d + 1, f"edge {e.src}->{e.dst}: odd d increment")
            res.check(t.vtype == "II", f"edge {e.src}->{e.dst}: odd terminal type")
        else:
            res.check(t.d == o.d - 1, f"edge {e.src}->{e.dst}: even d decrement")
            expect = "I" if e.label.cls is ElementClass.WU else "II"
            res.check(t.vtype == expect, f"edge {e.src}->{e.dst}: terminal type")
    wu7 = k3.edge("[7S]", ElementClass.WU)
    res.check(wu7 is not None and wu7.dst == "[8S]_I", "Wu edge [7S] -> [8S]_I")
    res.check(
        [(e.src, e.label.cls.value) for e in k3.in_edges("[8S]_I")] == [("[7S]", "wu")],
        "unique edge into [8S]_I",
    )
    irr_in = [(e.src, e.label.cls) for e in k4.in_edges(G.IRR_ID)]
    res.check(irr_in == [("[3S]", ElementClass.WU)], "unique irregular K4 edge [3S] -> irr")
    res.check(not k4.out_edges(G.IRR_ID), "irr has no outgoing edges")
    frep = G.regular_subgraphs_and_F(k3, k4)
    res.check(frep.ok and frep.vertices == 74, "F is a bijection on 74 regular vertices")
    res.check(frep.edges == len(k3.edges) - 1, "F covers all regular edges")
    res.check(G.k4_equals_k3_after_swap(k3, k4), "K4 is K3 after the one-edge swap")
    # irregular vertex lattice identification
    neg = rescale(k4data[G.IRR_ID].mminus, -1)
    res.check(signature(neg) == (1, 13), "irr: signature (1,13)")
    f = discriminant_quadratic(neg)
    res.check(f.d == 8 and parity(f) == "even", "irr: even discriminant of rank 8")
    res.check(
        all(lattices_equivalent(neg, v.lplus) == "no" for v in cat),
        "irr: -M_- differs from every catalog L+",
    )
    # flip cycles wherever a bounded search finds an orthogonal pair
    found = 0
    for v in cat:
        t = G.find_flip_triple(v, bound=3, limit=40)
        if t is None:
            continue
        found += 1
        f2 = G.flip(G.flip(t))
        res.check(
            f2.h.coords == t.h.coords and f2.v.coords == t.v.coords,
            f"{v.vid}: flip is an involution",
        )
        rep = G.verify_flip_cycle(v, t, k4, cat)
        res.check(rep.ok, f"{v.vid}: flip cycle identities {rep.identities} {rep.detail}")
    res.check(found > 0, "at least one flip pair must be found")
    res.notes.append(f"flip cycles verified at {found} vertices")
    # basic cycles
    br = G.basic_cycles_regular(k3, cat)
    res.check(br.all_regular, "all basic cycles are regular")
    res.check(br.count_matches_rank, f"{len(br.cycles)} basic cycles vs cycle rank {br.cycle_rank}")
    res.check(br.full_rank, "basic-cycle incidence matrix has full rational rank")
    res.notes.append(
        f"basic cycles: {len(br.cycles)}, incidence divisors all 1: "
        f"{set(br.incidence_divisors) == {1}}"
    )
    sr = G.structural_checks(k3, k4, cat)
    res.check(sr.ok, f"structural failures: {sr.failures[:3]}")
    res.notes.append(
        f"structural checks: {sr.verified} verified, {len(sr.undecidable)} undecidable"
    )
    return res


def suite_synthesis(catalog: Optional[Catalog] = None) -> SuiteResult:
    res = SuiteResult("synthesis")
    cat = catalog if catalog is not None else build_catalog()
    count = 0
    for v in cat:
        for cls in ElementClass:
            if not exists_class(v, 1, cls):
                continue
            h = construct_witness(v, 1, cls)
            try:
                G.synthesize_k4_plus(v, h)
            except G.StructuralError as exc:
                res.failures.append(str(exc))
                continue
            count += 1
    res.check(count > 0, "no synthesis cases ran")
    res.notes.append(f"synthesized M+ for {count} (vertex, class) pairs")
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "lattice": suite_lattice,
    "forms": suite_forms,
    "catalog": suite_catalog,
    "predicates": suite_predicates,
    "graphs": suite_graphs,
    "synthesis": suite_synthesis,
}


def run_suites(names: Optional[List[str]] = None) -> List[SuiteResult]:
    selected = names if names else list(SUITES)
    cat = None
    results = []
    for name in selected:
        fn = SUITES[name]
        if name in ("catalog", "predicates", "graphs", "synthesis"):
            if cat is None:
                cat = build_catalog()
            results.append(fn(cat))
        else:
            results.append(fn())
    return results
