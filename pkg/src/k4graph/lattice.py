"""Exact integer lattices: Gram matrices, standard constructors, and core operations.

Everything here is arbitrary-precision integer (or rational) arithmetic.  No
floating point is used anywhere: signatures come from exact symmetric
elimination, orthogonal complements from exact integer column reduction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

Gram = Tuple[Tuple[int, ...], ...]


class LatticeError(ValueError):
    """Raised for ill-formed lattices, vectors, or unsatisfiable preconditions."""


def _freeze(rows: Iterable[Iterable[int]]) -> Gram:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class GramLattice:
    """A finite-rank integer symmetric bilinear form given by its Gram matrix.

    ``summands`` optionally records the ordered standard-block decomposition
    ("<2>", "U", "E8", ...) when the lattice was assembled from named pieces;
    bounded vector searches exploit it, everything else ignores it.
    """

    rank: int
    gram: Gram
    label: str = ""
    summands: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise LatticeError("rank must be non-negative")
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            raise LatticeError("gram matrix shape does not match rank")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeError(f"gram matrix is not symmetric at ({i},{j})")

    @classmethod
    def empty(cls) -> "GramLattice":
        return cls(0, (), "0", ())

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[int]],
        label: str = "",
        summands: Optional[Tuple[str, ...]] = None,
    ) -> "GramLattice":
        gram = _freeze(rows)
        return cls(len(gram), gram, label, summands)

    def vector(self, coords: Iterable[int]) -> "LatticeVector":
        return LatticeVector(tuple(int(c) for c in coords), self)

    def basis_vector(self, i: int) -> "LatticeVector":
        coords = [0] * self.rank
        coords[i] = 1
        return self.vector(coords)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "rank": self.rank,
            "gram": [[_json_int(x) for x in row] for row in self.gram],
        }

    @classmethod
    def from_json(cls, text: str) -> "GramLattice":
        obj = json.loads(text)
        rows = [[int(x) for x in row] for row in obj["gram"]]
        lat = cls.from_rows(rows, obj.get("label", ""))
        if lat.rank != obj["rank"]:
            raise LatticeError("serialized rank disagrees with gram size")
        return lat


_SAFE_INT = 2**53


def _json_int(x: int):
    # Exact integers ride as decimal strings once they leave the 53-bit range.
    return x if abs(x) < _SAFE_INT else str(x)


@dataclass(frozen=True)
class LatticeVector:
    """An integer coordinate vector in a fixed ambient GramLattice basis."""

    coords: Tuple[int, ...]
    ambient: GramLattice

    def __post_init__(self) -> None:
        if len(self.coords) != self.ambient.rank:
            raise LatticeError("vector length does not match ambient rank")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-c for c in self.coords), self.ambient)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        _check_same_ambient(self, other)
        return LatticeVector(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.ambient
        )

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        _check_same_ambient(self, other)
        return LatticeVector(
            tuple(a - b for a, b in zip(self.coords, other.coords)), self.ambient
        )

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector(tuple(k * c for c in self.coords), self.ambient)


def _check_same_ambient(x: LatticeVector, y: LatticeVector) -> None:
    if x.ambient.gram != y.ambient.gram:
        raise LatticeError("vectors live in different ambient lattices")


# ---------------------------------------------------------------------------
# standard lattices
# ---------------------------------------------------------------------------

def _tree_cartan(rank: int, edges: Sequence[Tuple[int, int]]) -> Gram:
    # Negated Cartan matrix of a simply-laced Dynkin tree: roots of square -2.
    m = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = -2
    for i, j in edges:
        m[i][j] = 1
        m[j][i] = 1
    return _freeze(m)


# Fixed root bases, committed as constants.  D4/E7/E8 use the star-shaped
# tree with node 0 at the branch point and arms listed in increasing length.
_D4_EDGES = ((0, 1), (0, 2), (0, 3))
_E7_EDGES = ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6))
_E8_EDGES = ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7))

STANDARD_GRAMS: dict[str, Gram] = {
    "<1>": ((1,),),
    "<2>": ((2,),),
    "<-2>": ((-2,),),
    "U": ((0, 1), (1, 0)),
    "U(2)": ((0, 2), (2, 0)),
    "D4": _tree_cartan(4, _D4_EDGES),
    "E7": _tree_cartan(7, _E7_EDGES),
    "E8": _tree_cartan(8, _E8_EDGES),
    "E8(2)": tuple(tuple(2 * x for x in row) for row in _tree_cartan(8, _E8_EDGES)),
}


def make_standard(name: str) -> GramLattice:
    """Build one of the named standard lattices on its fixed documented basis."""
    try:
        gram = STANDARD_GRAMS[name]
    except KeyError:
        raise LatticeError(f"unknown standard lattice {name!r}") from None
    return GramLattice(len(gram), gram, name, (name,))


def direct_sum(a: GramLattice, b: GramLattice) -> GramLattice:
    """Block-diagonal sum; ranks add, labels concatenate."""
    n, m = a.rank, b.rank
    rows = []
    for i in range(n):
        rows.append(tuple(a.gram[i]) + (0,) * m)
    for j in range(m):
        rows.append((0,) * n + tuple(b.gram[j]))
    if not a.label:
        label = b.label
    elif not b.label:
        label = a.label
    else:
        label = f"{a.label}+{b.label}"
    summands = None
    if a.summands is not None and b.summands is not None:
        summands = a.summands + b.summands
    return GramLattice(n + m, _freeze(rows), label, summands)


def direct_sum_all(parts: Sequence[GramLattice]) -> GramLattice:
    out = GramLattice.empty()
    for p in parts:
        out = direct_sum(out, p)
    return out


def from_summands(names: Sequence[str], label: str = "") -> GramLattice:
    """Direct sum of named standard lattices, remembering the block structure."""
    lat = direct_sum_all([make_standard(n) for n in names])
    if label:
        lat = GramLattice(lat.rank, lat.gram, label, lat.summands)
    return lat


def rescale(l: GramLattice, k: int) -> GramLattice:
    """Multiply the form by a nonzero integer k; rescale(l, -1) is -L."""
    if k == 0:
        raise LatticeError("rescaling factor must be nonzero")
    gram = tuple(tuple(k * x for x in row) for row in l.gram)
    label = f"{l.label}({k})" if l.label else ""
    return GramLattice(l.rank, gram, label, None)


# ---------------------------------------------------------------------------
# bilinear form, signature, parity
# ---------------------------------------------------------------------------

def gram_apply(l: GramLattice, coords: Sequence[int]) -> Tuple[int, ...]:
    """The dual coordinates G·x of a vector."""
    return tuple(
        sum(l.gram[i][j] * coords[j] for j in range(l.rank)) for i in range(l.rank)
    )


def inner(x: LatticeVector, y: LatticeVector) -> int:
    """Exact inner product x^T·gram·y."""
    _check_same_ambient(x, y)
    gx = gram_apply(x.ambient, x.coords)
    return sum(g * c for g, c in zip(gx, y.coords))


def norm(x: LatticeVector) -> int:
    return inner(x, x)


def inertia(l: GramLattice) -> Tuple[int, int, int]:
    """Exact inertia (positive, negative, zero) by symmetric integer elimination.

    Congruence steps scale by |pivot| and subtract, which keeps everything in
    integers; zero-diagonal blocks are handled by the standard hyperbolic
    row+column addition.  A gcd reduction after every step keeps entries small.
    """
    n = l.rank
    a = [list(row) for row in l.gram]
    pos = neg = zero = 0
    k = 0
    while k < n:
        piv = None
        for i in range(k, n):
            if a[i][i] != 0:
                piv = i
                break
        if piv is None:
            off = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                zero += n - k
                break
            i, j = off
            for t in range(k, n):
                a[i][t] += a[j][t]
            for t in range(k, n):
                a[t][i] += a[t][j]
            piv = i
        if piv != k:
            a[piv], a[k] = a[k], a[piv]
            for row in a:
                row[piv], row[k] = row[k], row[piv]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        ap, sgn = abs(p), (1 if p > 0 else -1)
        sub = [
            [ap * a[i][j] - sgn * a[i][k] * a[k][j] for j in range(k + 1, n)]
            for i in range(k + 1, n)
        ]
        g = 0
        for row in sub:
            for x in row:
                g = _gcd(g, x)
        if g > 1:
            sub = [[x // g for x in row] for row in sub]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = sub[i - k - 1][j - k - 1]
        k += 1
    return pos, neg, zero


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def signature(l: GramLattice) -> Tuple[int, int]:
    """Exact inertia indices (sigma_+, sigma_-); errors on degenerate input."""
    pos, neg, zero = inertia(l)
    if zero:
        raise LatticeError("gram matrix is degenerate")
    return pos, neg


def is_degenerate(l: GramLattice) -> bool:
    return inertia(l)[2] > 0


def is_even(l: GramLattice) -> bool:
    """True iff every square is even, i.e. every diagonal Gram entry is."""
    return all(l.gram[i][i] % 2 == 0 for i in range(l.rank))


# ---------------------------------------------------------------------------
# reflections and twists
# ---------------------------------------------------------------------------

def reflect(v: LatticeVector, x: LatticeVector) -> LatticeVector:
    """Reflection s_v(x) in a (+2)- or (-2)-vector v."""
    _check_same_ambient(v, x)
    nv = norm(v)
    if nv not in (2, -2):
        raise LatticeError(f"reflection vector must have square +-2, got {nv}")
    b = inner(x, v)
    if nv == 2:
        return x - v.scale(b)
    return x + v.scale(b)


def twist(l: GramLattice, v: LatticeVector) -> GramLattice:
    """The v-twist: the unique form with q'(v) = -q(v), q' = q on v-perp.

    On the fixed basis the new Gram matrix is G -+ (Gv)(Gv)^T, which equals
    gram·S_v and is symmetric on the nose.
    """
    if v.ambient.gram != l.gram:
        raise LatticeError("twist vector does not live in the given lattice")
    nv = norm(v)
    if nv not in (2, -2):
        raise LatticeError(f"twist vector must have square +-2, got {nv}")
    gv = gram_apply(l, v.coords)
    s = 1 if nv == -2 else -1
    gram = tuple(
        tuple(l.gram[i][j] + s * gv[i] * gv[j] for j in range(l.rank))
        for i in range(l.rank)
    )
    label = f"t({l.label})" if l.label else ""
    return GramLattice(l.rank, gram, label, None)


# ---------------------------------------------------------------------------
# characteristic vectors and orthogonal complements
# ---------------------------------------------------------------------------

def find_characteristic(l: GramLattice) -> LatticeVector:
    """Some w with <w,x> = x^2 mod 2 for all x, via a GF(2) solve of G·w = diag G."""
    n = l.rank
    rows = [[l.gram[i][j] & 1 for j in range(n)] + [l.gram[i][i] & 1] for i in range(n)]
    pivots = []
    r = 0
    for c in range(n):
        sel = None
        for i in range(r, n):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(n):
            if i != r and rows[i][c]:
                rows[i] = [(x ^ y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if rows[i][n]:
            raise LatticeError("no integral characteristic vector")
    w = [0] * n
    for i, c in enumerate(pivots):
        w[c] = rows[i][n]
    return l.vector(w)


def _row_kernel_basis(c: Sequence[int]) -> list[list[int]]:
    """Integral basis of {x : sum c_i x_i = 0} via unimodular column reduction."""
    n = len(c)
    row = list(c)
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # columns of V
    # Sweep gcd into position 0 by column operations, mirrored on V.
    while True:
        nz = [j for j in range(n) if row[j] != 0]
        if not nz:
            return [[v[i][j] for i in range(n)] for j in range(n)]
        if len(nz) == 1:
            j = nz[0]
            if j != 0:
                row[0], row[j] = row[j], row[0]
                for i in range(n):
                    v[i][0], v[i][j] = v[i][j], v[i][0]
            break
        # reduce the entry of largest absolute value by the smallest nonzero
        jmin = min(nz, key=lambda j: abs(row[j]))
        for j in nz:
            if j == jmin:
                continue
            q = row[j] // row[jmin]
            if q:
                row[j] -= q * row[jmin]
                for i in range(n):
                    v[i][j] -= q * v[i][jmin]
    return [[v[i][j] for i in range(n)] for j in range(1, n)]


def orthogonal_sublattice(l: GramLattice, v: LatticeVector) -> GramLattice:
    """Gram matrix of {x in L : <x,v> = 0} on an integral basis."""
    if v.ambient.gram != l.gram:
        raise LatticeError("vector does not live in the given lattice")
    if v.is_zero():
        raise LatticeError("orthogonal complement of the zero vector")
    c = gram_apply(l, v.coords)
    if all(x == 0 for x in c):
        raise LatticeError("vector pairs trivially with the whole lattice")
    basis = _row_kernel_basis(c)
    gram = [
        [
            sum(
                basis[a][i] * l.gram[i][j] * basis[b][j]
                for i in range(l.rank)
                for j in range(l.rank)
            )
            for b in range(len(basis))
        ]
        for a in range(len(basis))
    ]
    label = f"perp({l.label})" if l.label else ""
    return GramLattice.from_rows(gram, label)


def sublattice_coordinates(
    l: GramLattice, v: LatticeVector, x: LatticeVector
) -> Tuple[int, ...]:
    """Coordinates of x in the basis used by orthogonal_sublattice(l, v).

    x must pair to zero with v; the complement basis is primitive, so the
    coordinates are integers.
    """
    if inner(x, v) != 0:
        raise LatticeError("vector is not orthogonal to v")
    c = gram_apply(l, v.coords)
    basis = _row_kernel_basis(c)
    # Solve B y = x over the rationals; B has full column rank.
    from fractions import Fraction

    n = l.rank
    m = len(basis)
    aug = [[Fraction(basis[b][i]) for b in range(m)] + [Fraction(x.coords[i])] for i in range(n)]
    row = 0
    piv_cols = []
    for col in range(m):
        sel = None
        for i in range(row, n):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        p = aug[row][col]
        aug[row] = [q / p for q in aug[row]]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        piv_cols.append(col)
        row += 1
    for i in range(row, n):
        if aug[i][m] != 0:
            raise LatticeError("vector is not in the orthogonal sublattice span")
    y = [Fraction(0)] * m
    for i, col in enumerate(piv_cols):
        y[col] = aug[i][m]
    out = []
    for q in y:
        if q.denominator != 1:
            raise LatticeError("vector is not an integral combination of the complement basis")
        out.append(int(q))
    return tuple(out)
