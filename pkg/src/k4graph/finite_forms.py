"""Discriminant groups and finite quadratic forms on 2-elementary groups.

Finite-form values are stored integrally in half-units: a quadratic value
``k`` means q = k/2 in Q/2Z (so k lives mod 4), a bilinear value ``m`` means
b = m/2 in Q/Z (m lives mod 2).  The Brown invariant is computed by the exact
Gauss sum over the whole group, matched against the eight possible eighth
roots of unity times 2^(d/2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .lattice import (
    GramLattice,
    LatticeVector,
    LatticeError,
    gram_apply,
    is_even,
    signature,
)

IntMatrix = Tuple[Tuple[int, ...], ...]


class FormError(ValueError):
    """Raised for malformed or out-of-scope finite forms."""


def _freeze(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Exact Smith normal form: returns (U, D, V) with U·m·V = D.

    D is diagonal with d_i | d_{i+1} and non-negative entries; U and V are
    unimodular.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q*row_j, mirrored on U
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q*col_j, mirrored on V
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            v[r][i] -= q * v[r][j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    n = min(rows, cols)
    for s in range(n):
        # move a nonzero entry of least magnitude into the pivot slot
        while True:
            best = None
            for i in range(s, rows):
                for j in range(s, cols):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            if i != s:
                swap_rows(s, i)
            if j != s:
                swap_cols(s, j)
            # clear the pivot row and column
            done = True
            for i in range(s + 1, rows):
                if a[i][s] != 0:
                    row_op(i, s, a[i][s] // a[s][s])
                    if a[i][s] != 0:
                        done = False
            for j in range(s + 1, cols):
                if a[s][j] != 0:
                    col_op(j, s, a[s][j] // a[s][s])
                    if a[s][j] != 0:
                        done = False
            if not done:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(s + 1, rows):
                for j in range(s + 1, cols):
                    if a[i][j] % a[s][s] != 0:
                        offender = i
                        break
                if offender:
                    break
            if offender is None:
                break
            row_op(s, offender, -1)  # add offending row to pivot row, re-reduce
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            u[s] = [-x for x in u[s]]
    return _freeze(u), _freeze(a), _freeze(v)


# ---------------------------------------------------------------------------
# discriminant groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGroup:
    """L*/L presented by elementary divisors with rational generator lifts."""

    divisors: Tuple[int, ...]
    lifts: Tuple[Tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    @property
    def is_two_periodic(self) -> bool:
        return all(d == 2 for d in self.divisors)

    @property
    def rank(self) -> int:
        return len(self.divisors)


def discriminant_group(l: GramLattice) -> DiscriminantGroup:
    """Elementary divisors and generator lifts of L*/L from the SNF of the Gram."""
    if l.rank == 0:
        return DiscriminantGroup((), ())
    u, d, v = smith_normal_form(l.gram)
    divisors = []
    lifts = []
    for i in range(l.rank):
        di = d[i][i]
        if di == 0:
            raise LatticeError("gram matrix is degenerate")
        if di == 1:
            continue
        divisors.append(di)
        lifts.append(tuple(Fraction(v[r][i], di) for r in range(l.rank)))
    return DiscriminantGroup(tuple(divisors), tuple(lifts))


def _frac_inner(l: GramLattice, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for i in range(l.rank):
        if x[i] == 0:
            continue
        for j in range(l.rank):
            if y[j] != 0 and l.gram[i][j] != 0:
                total += x[i] * l.gram[i][j] * y[j]
    return total


# ---------------------------------------------------------------------------
# finite quadratic forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteQuadraticForm:
    """A quadratic form q: (Z/2)^d -> Q/2Z with bilinear form b -> Q/Z.

    qvals[i] stores 2·q(g_i) mod 4 and bvals[i][j] stores 2·b(g_i,g_j) mod 2
    for a fixed generating set g_1..g_d.
    """

    d: int
    qvals: Tuple[int, ...]
    bvals: IntMatrix

    def __post_init__(self) -> None:
        if len(self.qvals) != self.d or len(self.bvals) != self.d:
            raise FormError("value tables do not match rank d")
        for i in range(self.d):
            if len(self.bvals[i]) != self.d:
                raise FormError("bilinear table is not square")
            if not 0 <= self.qvals[i] < 4:
                raise FormError("quadratic values must be reduced mod 4")
            for j in range(self.d):
                if self.bvals[i][j] not in (0, 1):
                    raise FormError("bilinear values must be reduced mod 2")
                if self.bvals[i][j] != self.bvals[j][i]:
                    raise FormError("bilinear table is not symmetric")
            if self.qvals[i] % 2 != self.bvals[i][i]:
                raise FormError("q mod Z must agree with b on the diagonal")

    def q_of(self, x: Sequence[int]) -> int:
        """2·q(sum x_i g_i) mod 4 via the quadratic extension rule."""
        total = 0
        idx = [i for i in range(self.d) if x[i] % 2]
        for a, i in enumerate(idx):
            total += self.qvals[i]
            for j in idx[a + 1:]:
                total += 2 * self.bvals[i][j]
        return total % 4

    def b_of(self, x: Sequence[int], y: Sequence[int]) -> int:
        """2·b(x, y) mod 2."""
        total = 0
        for i in range(self.d):
            if x[i] % 2 == 0:
                continue
            for j in range(self.d):
                if y[j] % 2:
                    total += self.bvals[i][j]
        return total % 2

    def negate(self) -> "FiniteQuadraticForm":
        return FiniteQuadraticForm(
            self.d,
            tuple((-k) % 4 for k in self.qvals),
            self.bvals,
        )

    def to_json(self) -> str:
        return json.dumps(
            {"d": self.d, "qvals": list(self.qvals), "bvals": [list(r) for r in self.bvals]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "FiniteQuadraticForm":
        obj = json.loads(text)
        return cls(obj["d"], tuple(obj["qvals"]), _freeze(obj["bvals"]))


TRIVIAL_FORM = FiniteQuadraticForm(0, (), ())


def discriminant_quadratic(
    l: GramLattice, w: Optional[LatticeVector] = None
) -> FiniteQuadraticForm:
    """The discriminant quadratic form of a lattice with 2-periodic discriminant.

    For even l the canonical q(x+L) = x^2 mod 2Z is used and w must be omitted
    or a characteristic vector anyway; for odd l a characteristic w in L is
    required and q(x+L) = x^2 + <w,x> mod 2Z.
    """
    disc = discriminant_group(l)
    if not disc.is_two_periodic:
        raise FormError("form out of scope: discriminant is not 2-periodic")
    if is_even(l):
        # canonical q(x+L) = x^2 mod 2Z; a supplied w is not used
        wc = None
    else:
        if w is None:
            raise FormError("odd lattice needs a characteristic vector")
        _check_characteristic(l, w)
        wc = w.coords
    d = disc.rank
    qvals = []
    for g in disc.lifts:
        val = _frac_inner(l, g, g)
        if wc is not None:
            val += sum(Fraction(wc[i]) * gi for i, gi in enumerate(_dual_pair(l, g)))
        k = val * 2
        if k.denominator != 1:
            raise FormError("quadratic value is not half-integral; malformed input")
        qvals.append(int(k) % 4)
    bvals = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            val = _frac_inner(l, disc.lifts[i], disc.lifts[j]) * 2
            if val.denominator != 1:
                raise FormError("bilinear value is not half-integral; malformed input")
            bvals[i][j] = bvals[j][i] = int(val) % 2
    return FiniteQuadraticForm(d, tuple(qvals), _freeze(bvals))


def _dual_pair(l: GramLattice, g: Sequence[Fraction]) -> List[Fraction]:
    return [
        sum(Fraction(l.gram[i][j]) * g[j] for j in range(l.rank)) for i in range(l.rank)
    ]


def _check_characteristic(l: GramLattice, w: LatticeVector) -> None:
    if w.ambient.gram != l.gram:
        raise FormError("characteristic vector lives in the wrong lattice")
    gw = gram_apply(l, w.coords)
    for i in range(l.rank):
        if (gw[i] - l.gram[i][i]) % 2 != 0:
            raise FormError("supplied vector is not characteristic")


def parity(f: FiniteQuadraticForm) -> str:
    """'even' iff b(x,x) vanishes identically, i.e. all q values are integral."""
    return "even" if all(k % 2 == 0 for k in f.qvals) else "odd"


def brown_invariant(f: FiniteQuadraticForm, limit: int = 12) -> int:
    """Brown invariant mod 8 via the exact Gauss sum over all 2^d elements."""
    if f.d > limit:
        raise FormError(f"group of rank {f.d} exceeds the enumeration limit {limit}")
    d = f.d
    # incremental subset sums: k(S | {j}) = k(S) + q_j + 2*b(S, g_j)
    kvals = [0] * (1 << d)
    rowmask = [
        sum((f.bvals[j][i] & 1) << i for i in range(d)) for j in range(d)
    ]
    re_part, im_part = 1, 0  # the empty subset contributes i^0
    for x in range(1, 1 << d):
        j = (x & -x).bit_length() - 1
        y = x ^ (1 << j)
        k = (kvals[y] + f.qvals[j] + 2 * ((y & rowmask[j]).bit_count() & 1)) & 3
        kvals[x] = k
        if k == 0:
            re_part += 1
        elif k == 1:
            im_part += 1
        elif k == 2:
            re_part -= 1
        else:
            im_part -= 1
    # match (re, im) against 2^(d/2) · exp(i·pi·B/4)
    if d % 2 == 0:
        mag = 1 << (d // 2)
        table = {(mag, 0): 0, (0, mag): 2, (-mag, 0): 4, (0, -mag): 6}
    else:
        mag = 1 << ((d - 1) // 2)
        table = {
            (mag, mag): 1,
            (-mag, mag): 3,
            (-mag, -mag): 5,
            (mag, -mag): 7,
        }
    try:
        return table[(re_part, im_part)]
    except KeyError:
        raise FormError(
            f"Gauss sum {re_part}+{im_part}i is not sqrt(|G|) times an 8th root of unity; "
            "malformed form"
        ) from None


def forms_isomorphic(a: FiniteQuadraticForm, b: FiniteQuadraticForm) -> bool:
    """2-elementary finite quadratic forms are classified by (rank, parity, Brown)."""
    if a.d != b.d or parity(a) != parity(b):
        return False
    return brown_invariant(a) == brown_invariant(b)


def lattices_equivalent(a: GramLattice, b: GramLattice) -> str:
    """Isomorphism oracle for even lattices with 2-periodic discriminants.

    Returns "yes"/"no" when both inputs are even, non-degenerate, 2-periodic
    and either indefinite or definite of rank <= 2; otherwise "undecidable".
    """
    for l in (a, b):
        if not is_even(l):
            return "undecidable"
        try:
            sig = signature(l)
        except LatticeError:
            return "undecidable"
        if min(sig) == 0 and l.rank > 2:
            return "undecidable"
        if not discriminant_group(l).is_two_periodic:
            return "undecidable"
    if signature(a) != signature(b):
        return "no"
    return "yes" if forms_isomorphic(
        discriminant_quadratic(a), discriminant_quadratic(b)
    ) else "no"
