"""Odd / Wu / even-non-Wu classification of eigenlattice elements.

The arithmetic existence predicate is the authority used by the graph
builders; explicit witnesses and the bounded enumeration are test oracles.
The bounded search walks the standard-block decomposition of a catalog
eigenlattice and prunes on achievable norm intervals, norm congruences,
and per-block class capabilities, so a "none" answer on the catalog
lattices is cheap even at rank 12.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .lattice import (
    GramLattice,
    LatticeError,
    LatticeVector,
    gram_apply,
    make_standard,
    norm,
    signature,
)
from .finite_forms import discriminant_group
from .catalog import K3Vertex


class ElementClass(enum.Enum):
    ODD = "odd"
    WU = "wu"
    EVEN_NON_WU = "even-non-wu"


class SearchBudgetError(RuntimeError):
    """The bounded enumeration outgrew its budget; reduce rank or bound."""


class WitnessError(RuntimeError):
    """A predicate promised a witness the constructions could not deliver."""


DEFAULT_BUDGET = 10**8
BUDGET_ENV = "K4GRAPH_SEARCH_BUDGET"


def search_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise SearchBudgetError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise SearchBudgetError(f"{BUDGET_ENV} must be positive")
    return value


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _disc_data(l: GramLattice):
    disc = discriminant_group(l)
    if not disc.is_two_periodic:
        raise LatticeError("classification needs a 2-periodic discriminant")
    # 2*b(g_i, g_j) mod 2 for the generator lifts
    d = disc.rank
    pair = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            val = Fraction(0)
            for a in range(l.rank):
                if disc.lifts[i][a] == 0:
                    continue
                for b in range(l.rank):
                    if l.gram[a][b] != 0 and disc.lifts[j][b] != 0:
                        val += disc.lifts[i][a] * l.gram[a][b] * disc.lifts[j][b]
            half = val * 2
            pair[i][j] = int(half) % 2
    return disc, pair


def classify_element(lminus: GramLattice, x: LatticeVector) -> ElementClass:
    """Classify a nonzero element of an eigenlattice as odd, Wu, or even-non-Wu."""
    if x.ambient.gram != lminus.gram:
        raise LatticeError("element does not live in the given lattice")
    if x.is_zero():
        raise LatticeError("cannot classify the zero vector")
    gx = gram_apply(lminus, x.coords)
    if any(v % 2 for v in gx):
        return ElementClass.ODD
    disc, pair = _disc_data(lminus)
    # x/2 is in the dual; Wu iff b(x/2, g) = b(g, g) for every generator g
    for j, g in enumerate(disc.lifts):
        half_b = sum(Fraction(gx[a]) * g[a] for a in range(lminus.rank))  # = 2<x/2, g>
        if int(half_b) % 2 != pair[j][j]:
            return ElementClass.EVEN_NON_WU
    return ElementClass.WU


# ---------------------------------------------------------------------------
# existence predicates
# ---------------------------------------------------------------------------

def exists_class(v: K3Vertex, n: int, cls: ElementClass) -> bool:
    """Does L-(c) contain an element of square 8n-2 in the given class?

    Decided purely from the diagonal component (s, t) and the [kS]/[8S]_I
    special cases; constant time, total.
    """
    if n not in (0, 1):
        raise ValueError("n must be 0 or 1")
    s, t = v.diag_s, v.diag_t
    if cls is ElementClass.ODD:
        return not (v.kS_flag or v.vid == "[8S]_I")
    if cls is ElementClass.WU:
        if v.kS_flag:
            return (s - t) % 8 == (4 * n - 1) % 8
        return (s - t) % 4 == 3
    if cls is ElementClass.EVEN_NON_WU:
        return t > 1 or (t == 1 and (s - t) % 4 != 3)
    raise ValueError(f"unknown class {cls!r}")


# ---------------------------------------------------------------------------
# block infrastructure for witnesses and bounded search
# ---------------------------------------------------------------------------

def _block_offsets(names: Sequence[str]) -> List[int]:
    offs = []
    pos = 0
    for name in names:
        offs.append(pos)
        pos += make_standard(name).rank
    return offs


def _embed(total_rank: int, pieces: Sequence[Tuple[int, Sequence[int]]]) -> List[int]:
    out = [0] * total_rank
    for off, coords in pieces:
        for i, c in enumerate(coords):
            out[off + i] = c
    return out


class _BlockData:
    """Per standard block: classification parities and norm congruence data."""

    def __init__(self, name: str):
        self.name = name
        lat = make_standard(name)
        self.lat = lat
        self.rank = lat.rank
        self.gram = lat.gram
        disc, pair = _disc_data(lat)
        # characteristic class of the block's discriminant bilinear form,
        # solved over GF(2): sum_i c_i b(g_i, g_j) = b(g_j, g_j)
        d = disc.rank
        rows = [[pair[i][j] for i in range(d)] + [pair[j][j]] for j in range(d)]
        coeffs = _gf2_solve(rows, d)
        if coeffs is None:
            raise LatticeError(f"no characteristic class for block {name}")
        wl = [Fraction(0)] * self.rank
        for i, c in enumerate(coeffs):
            if c:
                wl = [a + b for a, b in zip(wl, disc.lifts[i])]
        # Wu-compatible vectors are exactly 2*w + 2Z^r: a parity pattern
        self.wu_parities = tuple(int(2 * q) % 2 for q in wl)
        wsq = Fraction(0)
        for i in range(self.rank):
            for j in range(self.rank):
                wsq += wl[i] * self.gram[i][j] * wl[j]
        self.wu_norm_mod8 = int(4 * wsq) % 8  # valid since the block is even
        # congruence d | x^2 for all block vectors
        self.norm_gcd = _norm_gcd(self.gram)
        # congruence on norms of even block vectors, from a generating set of
        # the even sublattice: 2e_i together with lifts of ker(G mod 2)
        self.even_norm_gcd = self._even_norm_gcd()
        self.even_gram = all(self.gram[i][i] % 2 == 0 for i in range(self.rank))
        # crude achievable-norm interval scale: |x^2| <= bound^2 * sum |g_ij|
        self.abs_scale = sum(abs(x) for row in self.gram for x in row)
        sig = signature(lat)
        self.neg_definite = sig[0] == 0
        self.pos_definite = sig[1] == 0
        # capabilities within any window containing the basis vectors
        self.can_odd = any(x % 2 for row in self.gram for x in row)
        self.can_even_nonwu = self._probe_even_nonwu()
        self._ldl = None

    def _even_norm_gcd(self) -> int:
        r = self.rank
        gens = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
        # GF(2) kernel of the Gram matrix, lifted with 0/1 coordinates
        rows = [[self.gram[i][j] & 1 for j in range(r)] for i in range(r)]
        piv_row_of_col = {}
        rr = 0
        for c in range(r):
            sel = next((i for i in range(rr, r) if rows[i][c]), None)
            if sel is None:
                continue
            rows[rr], rows[sel] = rows[sel], rows[rr]
            for i in range(r):
                if i != rr and rows[i][c]:
                    rows[i] = [x ^ y for x, y in zip(rows[i], rows[rr])]
            piv_row_of_col[c] = rr
            rr += 1
        free_cols = [c for c in range(r) if c not in piv_row_of_col]
        for fc in free_cols:
            vec = [0] * r
            vec[fc] = 1
            for c, i in piv_row_of_col.items():
                if rows[i][fc]:
                    vec[c] = 1
            gens.append(vec)
        g = 0
        for a in range(len(gens)):
            for b in range(a, len(gens)):
                val = sum(
                    gens[a][i] * self.gram[i][j] * gens[b][j]
                    for i in range(r)
                    for j in range(r)
                )
                g = _gcd(g, val if a == b else 2 * val)
        return g if g else 1

    def _probe_even_nonwu(self) -> bool:
        for coords in _iter_box(self.rank, 1):
            gx = [sum(self.gram[i][j] * coords[j] for j in range(self.rank))
                  for i in range(self.rank)]
            if any(v % 2 for v in gx):
                continue
            if any((c - p) % 2 for c, p in zip(coords, self.wu_parities)):
                return True
        return False

    def norm_bounds(self, bound: int) -> Tuple[int, int]:
        m = bound * bound * self.abs_scale
        if self.neg_definite:
            return (-m, 0)
        if self.pos_definite:
            return (0, m)
        return (-m, m)

    def ldl(self) -> Tuple[List[Fraction], List[List[Fraction]]]:
        """LDL^T of the positively-oriented form: x^T P x = sum_k d_k w_k^2.

        Here w_k = x_k + sum_{i>k} L[i][k] x_i, so fixing coordinates from the
        last to the first determines the terms k = r-1, r-2, ... one by one.
        """
        if self._ldl is None:
            r = self.rank
            sign = -1 if self.neg_definite else 1
            a = [[Fraction(sign * self.gram[i][j]) for j in range(r)] for i in range(r)]
            diag: List[Fraction] = []
            lower = [[Fraction(0)] * r for _ in range(r)]
            for k in range(r):
                dk = a[k][k] - sum(diag[m] * lower[k][m] ** 2 for m in range(k))
                diag.append(dk)
                lower[k][k] = Fraction(1)
                for i in range(k + 1, r):
                    val = a[i][k] - sum(diag[m] * lower[i][m] * lower[k][m] for m in range(k))
                    lower[i][k] = val / dk
            self._ldl = (diag, lower)
        return self._ldl


@lru_cache(maxsize=None)
def _block_data(name: str) -> _BlockData:
    return _BlockData(name)


def _gf2_solve(rows: List[List[int]], n: int) -> Optional[List[int]]:
    m = len(rows)
    mat = [row[:] for row in rows]
    piv = []
    r = 0
    for c in range(n):
        sel = next((i for i in range(r, m) if mat[i][c]), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        for i in range(m):
            if i != r and mat[i][c]:
                mat[i] = [x ^ y for x, y in zip(mat[i], mat[r])]
        piv.append(c)
        r += 1
    for i in range(r, m):
        if mat[i][n]:
            return None
    out = [0] * n
    for i, c in enumerate(piv):
        out[c] = mat[i][n]
    return out


def _norm_gcd(gram) -> int:
    g = 0
    r = len(gram)
    for i in range(r):
        g = _gcd(g, gram[i][i])
        for j in range(i + 1, r):
            g = _gcd(g, 2 * gram[i][j])
    return g if g else 1


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _iter_box(rank: int, bound: int) -> Iterator[Tuple[int, ...]]:
    vals = _value_order(bound)
    def rec(k: int, acc: List[int]) -> Iterator[Tuple[int, ...]]:
        if k == rank:
            yield tuple(acc)
            return
        for v in vals:
            acc.append(v)
            yield from rec(k + 1, acc)
            acc.pop()
    yield from rec(0, [])


def _value_order(bound: int) -> List[int]:
    # deterministic enumeration order: 0, 1, -1, 2, -2, ...
    out = [0]
    for v in range(1, bound + 1):
        out.extend((v, -v))
    return out


# ---------------------------------------------------------------------------
# bounded search
# ---------------------------------------------------------------------------

@dataclass
class _SearchState:
    visited: int = 0
    budget: int = DEFAULT_BUDGET

    def tick(self) -> None:
        self.visited += 1
        if self.visited > self.budget:
            raise SearchBudgetError(
                "enumeration budget exceeded; reduce the rank or the bound"
            )


def _block_vectors(
    block: _BlockData,
    bound: int,
    lo: int,
    hi: int,
    parities: Optional[Tuple[int, ...]],
    state: _SearchState,
) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """Block vectors with norm in [lo, hi], optionally with fixed coordinate parities.

    Definite blocks are walked tail-first with monotone partial-sum pruning;
    rank <= 2 indefinite blocks are enumerated outright.
    """
    r = block.rank
    vals = _value_order(bound)
    if block.neg_definite or block.pos_definite:
        sign = -1 if block.neg_definite else 1
        diag, lower = block.ldl()
        cap = Fraction(max(abs(lo), abs(hi)))

        def rec(depth: int, acc: List[int], partial: Fraction) -> Iterator[Tuple[Tuple[int, ...], int]]:
            # acc holds x_{r-1}, x_{r-2}, ...; at this depth coordinate k is fixed
            if depth == r:
                n = sign * partial
                if lo <= n <= hi:
                    coords = tuple(reversed(acc))
                    yield coords, int(n)
                return
            k = r - 1 - depth
            for v in vals:
                if parities is not None and (v - parities[k]) % 2:
                    continue
                state.tick()
                w = Fraction(v) + sum(
                    lower[i][k] * acc[r - 1 - i] for i in range(k + 1, r) if lower[i][k]
                )
                p2 = partial + diag[k] * w * w
                if p2 > cap:
                    continue
                acc.append(v)
                yield from rec(depth + 1, acc, p2)
                acc.pop()

        yield from rec(0, [], Fraction(0))
        return

    def rec_flat(k: int, acc: List[int]) -> Iterator[Tuple[Tuple[int, ...], int]]:
        if k == r:
            n = 0
            for i in range(r):
                row = block.gram[i]
                n += acc[i] * sum(row[j] * acc[j] for j in range(r))
            if lo <= n <= hi:
                yield tuple(acc), n
            return
        for v in vals:
            if parities is not None and (v - parities[k]) % 2:
                continue
            state.tick()
            acc.append(v)
            yield from rec_flat(k + 1, acc)
            acc.pop()

    yield from rec_flat(0, [])


def _block_is_even(block: _BlockData, coords: Sequence[int]) -> bool:
    for i in range(block.rank):
        if sum(block.gram[i][j] * coords[j] for j in range(block.rank)) % 2:
            return False
    return True


def _block_is_wu(block: _BlockData, coords: Sequence[int]) -> bool:
    return all((c - p) % 2 == 0 for c, p in zip(coords, block.wu_parities))


def _search_blocks(
    names: Sequence[str],
    target: int,
    cls: Optional[ElementClass],
    bound: int,
    state: _SearchState,
    collect: Optional[int] = None,
) -> Iterator[Tuple[int, ...]]:
    """DFS over the block decomposition; yields full coordinate vectors."""
    blocks = [_block_data(name) for name in names]
    nblocks = len(blocks)
    bounds = [b.norm_bounds(bound) for b in blocks]
    # suffix aggregates for interval and congruence pruning
    suf_lo = [0] * (nblocks + 1)
    suf_hi = [0] * (nblocks + 1)
    suf_gcd = [0] * (nblocks + 1)
    suf_even_gcd = [0] * (nblocks + 1)
    suf_wu_off = [0] * (nblocks + 1)
    suf_wu_exact = [True] * (nblocks + 1)  # wu norms fixed mod 8 on even blocks
    suf_can_odd = [False] * (nblocks + 1)
    suf_can_enw = [False] * (nblocks + 1)
    for i in range(nblocks - 1, -1, -1):
        suf_lo[i] = suf_lo[i + 1] + bounds[i][0]
        suf_hi[i] = suf_hi[i + 1] + bounds[i][1]
        suf_gcd[i] = _gcd(suf_gcd[i + 1], blocks[i].norm_gcd)
        suf_even_gcd[i] = _gcd(suf_even_gcd[i + 1], blocks[i].even_norm_gcd)
        suf_wu_off[i] = (suf_wu_off[i + 1] + blocks[i].wu_norm_mod8) % 8
        suf_wu_exact[i] = suf_wu_exact[i + 1] and blocks[i].even_gram
        suf_can_odd[i] = suf_can_odd[i + 1] or blocks[i].can_odd
        suf_can_enw[i] = suf_can_enw[i + 1] or blocks[i].can_even_nonwu

    found = 0

    def feasible(i: int, rem: int, odd_seen: bool, wu_all: bool) -> bool:
        if not (suf_lo[i] <= rem <= suf_hi[i]):
            return False
        if cls is ElementClass.WU and suf_wu_exact[i]:
            if (rem - suf_wu_off[i]) % 8 != 0:
                return False
        elif cls is ElementClass.EVEN_NON_WU:
            g = suf_even_gcd[i]
            if g > 1 and rem % g != 0:
                return False
        elif cls is not ElementClass.WU:
            g = suf_gcd[i]
            if g > 1 and rem % g != 0:
                return False
        if cls is ElementClass.ODD and not odd_seen and not suf_can_odd[i]:
            return False
        if cls is ElementClass.EVEN_NON_WU and wu_all and not suf_can_enw[i]:
            return False
        return True

    def rec(i: int, rem: int, odd_seen: bool, wu_all: bool, prefix: List[Tuple[int, ...]]):
        nonlocal found
        if i == nblocks:
            if rem != 0:
                return
            if cls is ElementClass.ODD and not odd_seen:
                return
            if cls is ElementClass.WU and not wu_all:
                return
            if cls is ElementClass.EVEN_NON_WU and wu_all:
                return
            flat: List[int] = []
            for c in prefix:
                flat.extend(c)
            found += 1
            yield tuple(flat)
            return
        b = blocks[i]
        lo = max(bounds[i][0], rem - suf_hi[i + 1])
        hi = min(bounds[i][1], rem - suf_lo[i + 1])
        if lo > hi:
            return
        parities = b.wu_parities if cls is ElementClass.WU else None
        for coords, n in _block_vectors(b, bound, lo, hi, parities, state):
            o2 = odd_seen
            w2 = wu_all
            if cls is not ElementClass.WU:
                if not _block_is_even(b, coords):
                    if cls is ElementClass.EVEN_NON_WU:
                        continue
                    o2 = True
                    w2 = False
                elif not _block_is_wu(b, coords):
                    w2 = False
            if not feasible(i + 1, rem - n, o2, w2):
                continue
            prefix.append(coords)
            yield from rec(i + 1, rem - n, o2, w2, prefix)
            prefix.pop()
            if collect is not None and found >= collect:
                return

    if feasible(0, target, False, True):
        yield from rec(0, target, False, True, [])


def search_witness(
    lminus: GramLattice,
    target_square: int,
    cls: ElementClass,
    bound: int,
    budget: Optional[int] = None,
    restrict_rank: int = 12,
) -> Optional[LatticeVector]:
    """First vector with the requested square and class, or None within bound.

    Enumeration is deterministic: blocks left to right, coordinate values in
    the order 0, 1, -1, 2, -2, ...; definite blocks are walked tail-first.  A
    "none" answer is evidence, not proof.  Lattices of rank above
    ``restrict_rank`` are searched on the leading standard summands only.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    state = _SearchState(budget=budget if budget is not None else search_budget())
    if lminus.summands is None:
        if (2 * bound + 1) ** lminus.rank > state.budget:
            raise SearchBudgetError(
                "enumeration budget exceeded; reduce the rank or the bound"
            )
        for coords in _iter_box(lminus.rank, bound):
            vec = lminus.vector(coords)
            if vec.is_zero():
                continue
            if norm(vec) == target_square and classify_element(lminus, vec) is cls:
                return vec
        return None
    names = list(lminus.summands)
    used = names
    if lminus.rank > restrict_rank:
        used = []
        total = 0
        for name in names:
            r = make_standard(name).rank
            if total + r > restrict_rank:
                break
            used.append(name)
            total += r
    used_rank = sum(make_standard(n).rank for n in used)
    # pinned tail blocks hold the zero vector; the zero block is even, and it
    # is Wu-compatible only where the block characteristic class vanishes
    tail_wu_ok = all(
        not any(_block_data(n).wu_parities) for n in names[len(used):]
    )
    if cls is ElementClass.WU and not tail_wu_ok:
        return None  # the pinned zero tail already fails the Wu parity pattern
    for coords in _search_blocks(used, target_square, cls, bound, state):
        full = list(coords) + [0] * (lminus.rank - used_rank)
        vec = lminus.vector(full)
        if cls is ElementClass.EVEN_NON_WU or cls is ElementClass.WU:
            # the pinned tail can flip Wu-compatibility of the full vector
            if classify_element(lminus, vec) is not cls:
                continue
        return vec
    return None


def enumerate_vectors(
    l: GramLattice,
    target_square: int,
    bound: int,
    limit: int,
    budget: Optional[int] = None,
    restrict_rank: int = 12,
) -> List[LatticeVector]:
    """Up to ``limit`` vectors of the given square, any class, deterministic order."""
    state = _SearchState(budget=budget if budget is not None else search_budget())
    out: List[LatticeVector] = []
    if l.summands is None:
        if (2 * bound + 1) ** l.rank > state.budget:
            raise SearchBudgetError(
                "enumeration budget exceeded; reduce the rank or the bound"
            )
        for coords in _iter_box(l.rank, bound):
            vec = l.vector(coords)
            if not vec.is_zero() and norm(vec) == target_square:
                out.append(vec)
                if len(out) >= limit:
                    break
        return out
    names = list(l.summands)
    used = names
    if l.rank > restrict_rank:
        used, total = [], 0
        for name in names:
            r = make_standard(name).rank
            if total + r > restrict_rank:
                break
            used.append(name)
            total += r
    used_rank = sum(make_standard(n).rank for n in used)
    for coords in _search_blocks(used, target_square, None, bound, state, collect=limit):
        full = list(coords) + [0] * (l.rank - used_rank)
        out.append(l.vector(full))
        if len(out) >= limit:
            break
    return out


# ---------------------------------------------------------------------------
# constructive witnesses
# ---------------------------------------------------------------------------

def construct_witness(v: K3Vertex, n: int, cls: ElementClass) -> LatticeVector:
    """An explicit x in L-(c) with x^2 = 8n-2 of the requested class.

    Follows the constructive case analysis behind the existence predicates;
    every returned vector is re-checked with classify_element.
    """
    if not exists_class(v, n, cls):
        raise WitnessError(f"{v.vid}: no {cls.value} element of square {8 * n - 2}")
    target = 8 * n - 2
    names = v.lminus_summands
    lat = v.lminus
    offs = _block_offsets(names)

    def block_index(name: str, skip: int = 0) -> Optional[int]:
        seen = 0
        for i, nm in enumerate(names):
            if nm == name:
                if seen == skip:
                    return i
                seen += 1
        return None

    x: Optional[LatticeVector] = None
    if cls is ElementClass.ODD:
        iu = block_index("U")
        if iu is not None:
            x = lat.vector(_embed(lat.rank, [(offs[iu], (1, 4 * n - 1))]))
        else:
            i2 = block_index("<2>")
            ie8 = block_index("E8")
            if i2 is not None and ie8 is not None:
                # 2n*e_+ plus (2n-1) times a simple root of E8
                x = lat.vector(
                    _embed(lat.rank, [(offs[i2], (2 * n,)), (offs[ie8], (2 * n - 1,) + (0,) * 7)])
                )
            else:
                iu2 = block_index("U(2)")
                id4 = block_index("D4")
                if iu2 is not None and id4 is not None:
                    x = lat.vector(
                        _embed(lat.rank, [(offs[iu2], (1, 2 * n)), (offs[id4], (1, 0, 0, 0))])
                    )
    elif cls is ElementClass.EVEN_NON_WU:
        x = _even_witness(v, n)
        if x is not None and classify_element(lat, x) is not ElementClass.EVEN_NON_WU:
            x = None  # construction landed on a Wu element; fall back to search
    elif cls is ElementClass.WU:
        x = _wu_witness(v, n)

    if x is None:
        x = search_witness(lat, target, cls, bound=3)
    if x is None:
        raise WitnessError(f"witness construction failed for {v.vid}, n={n}, {cls.value}")
    if norm(x) != target or classify_element(lat, x) is not cls:
        raise WitnessError(f"constructed witness is wrong for {v.vid}, n={n}, {cls.value}")
    return x


def _even_witness(v: K3Vertex, n: int) -> Optional[LatticeVector]:
    lat = v.lminus
    names = v.lminus_summands
    offs = _block_offsets(names)
    s, t = v.diag_s, v.diag_t
    if t < 1:
        return None
    if s >= 1:
        # (k+1, k) across the first <2> and first <-2>, k = 2n-1
        k = 2 * n - 1
        i2 = names.index("<2>")
        im2 = names.index("<-2>")
        return lat.vector(_embed(lat.rank, [(offs[i2], (k + 1,)), (offs[im2], (k,))]))
    if "U" in names:
        im2 = names.index("<-2>")
        iu = names.index("U")
        return lat.vector(_embed(lat.rank, [(offs[im2], (1,)), (offs[iu], (2, 2 * n))]))
    return None


def _wu_witness(v: K3Vertex, n: int) -> Optional[LatticeVector]:
    lat = v.lminus
    names = v.lminus_summands
    offs = _block_offsets(names)
    s, t = v.diag_s, v.diag_t
    target = 8 * n - 2
    if v.kS_flag:
        # all-odd coordinate vectors are exactly the Wu candidates here
        base = 2 * (s - t)
        need = target - base
        if need % 16 != 0:
            return None
        # bump coordinates from 1 to higher odd values: slot i adds or
        # subtracts 8*m*(m+1) when raised to 2m+1
        for coords in _odd_bumps(s, t, need):
            return lat.vector(_embed(lat.rank, [(0, coords)]))
        return None
    if (s - t) % 4 != 3:
        return None
    diag = (1,) * (s + t)
    if "U" in names:
        iu = names.index("U")
        k, rem = divmod(target - 2 * (s - t), 8)
        assert rem == 0
        return lat.vector(_embed(lat.rank, [(0, diag), (offs[iu], (2, 2 * k))]))
    if "E8" in names and s >= 1:
        # (3,1,...,1) on the diagonal plus twice a pair of orthogonal roots
        ie8 = names.index("E8")
        diag3 = (3,) + (1,) * (s + t - 1)
        base = 2 * (s - t) + 16
        need = (base - target) // 8
        if need not in (0, 1, 2) or (base - target) % 8 != 0:
            return None
        # simple roots 1 and 3 of the fixed E8 basis are orthogonal
        e8 = [0] * 8
        if need >= 1:
            e8[1] = 2
        if need == 2:
            e8[3] = 2
        return lat.vector(_embed(lat.rank, [(0, diag3), (offs[ie8], tuple(e8))]))
    return None


def _odd_bumps(s: int, t: int, need: int) -> Iterator[Tuple[int, ...]]:
    """All-odd diagonal vectors (values 1/3/5) hitting base + need exactly."""
    from itertools import product

    for vals in product((1, 3, 5), repeat=s + t):
        delta = 0
        for i, val in enumerate(vals):
            step = val * val - 1  # 0, 8, 24
            delta += 2 * step if i < s else -2 * step
        if delta == need:
            yield vals
