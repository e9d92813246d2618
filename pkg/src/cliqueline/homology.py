"""Integer reduced simplicial homology via boundary matrices and Smith normal form.

All arithmetic is over Python's arbitrary-precision integers, so ranks and
torsion are exact.  The degree-0 boundary matrix is the augmentation map,
which makes every profile reduced from the start.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import Complex, Simplex, euler_characteristic, f_vector, induced_subcomplex


@dataclass(frozen=True)
class BoundaryMatrix:
    """Boundary operator from d-chains to (d-1)-chains in the sorted face bases."""

    rows: tuple[Simplex, ...]
    cols: tuple[Simplex, ...]
    entries: tuple[tuple[int, ...], ...]


def boundary_matrix(k: Complex, d: int) -> BoundaryMatrix:
    """Entries are (-1)^i for dropping the i-th vertex of a sorted d-face.

    For d = 0 the rows are the single empty simplex, i.e. the augmentation.
    """
    if d < 0:
        raise ValueError("boundary dimension must be nonnegative")
    rows = tuple(k.faces(d - 1))
    cols = tuple(k.faces(d))
    row_index = {s: i for i, s in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            entries[row_index[sub]][j] = -1 if i % 2 else 1
    return BoundaryMatrix(rows, cols, tuple(tuple(r) for r in entries))


def compose_is_zero(outer: BoundaryMatrix, inner: BoundaryMatrix) -> bool:
    """Check the chain-complex law: the composite of consecutive boundaries vanishes."""
    a, b = outer.entries, inner.entries
    if not a or not b:
        return True
    cols = len(b[0]) if b else 0
    for i in range(len(a)):
        for j in range(cols):
            if sum(a[i][t] * b[t][j] for t in range(len(b))) != 0:
                return False
    return True


@dataclass(frozen=True)
class SNFResult:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix."""

    rank: int
    factors: tuple[int, ...]


def _entries_of(m) -> list[list[int]]:
    entries = m.entries if isinstance(m, BoundaryMatrix) else m
    return [list(map(int, row)) for row in entries]


def smith_normal_form(m) -> SNFResult:
    """Diagonalize by unimodular row/column operations; exact over the integers.

    Pivots are chosen smallest-in-absolute-value; leftover remainders swap in
    as strictly smaller pivots, so the elimination terminates.  Divisibility
    of the diagonal is restored afterwards by gcd/lcm passes.
    """
    a = _entries_of(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate the smallest nonzero entry of the trailing submatrix
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        while True:
            p = a[t][t]
            swapped = False
            for i in range(t + 1, rows):
                v = a[i][t]
                if not v:
                    continue
                q = v // p
                if q:
                    ai, at = a[i], a[t]
                    for j in range(t, cols):
                        ai[j] -= q * at[j]
                if a[i][t]:  # remainder strictly smaller than |p|: re-pivot
                    a[t], a[i] = a[i], a[t]
                    swapped = True
                    break
            if swapped:
                continue
            for j in range(t + 1, cols):
                v = a[t][j]
                if not v:
                    continue
                q = v // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    swapped = True
                    break
            if not swapped:
                break
        t += 1
    diag = [abs(a[i][i]) for i in range(t)]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            if diag[i + 1] % diag[i]:
                g = math.gcd(diag[i], diag[i + 1])
                diag[i], diag[i + 1] = g, diag[i] * diag[i + 1] // g
                changed = True
    return SNFResult(rank=len(diag), factors=tuple(diag))


# ---------------------------------------------------------------------------
# homology profiles


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers and torsion invariant factors per dimension 0..dim.

    The empty complex is the sentinel with no entries at all; its only reduced
    homology sits in degree -1 (see ``betti_at``).
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def is_empty_complex(self) -> bool:
        return not self.betti

    def betti_at(self, d: int) -> int:
        if d == -1:
            return 1 if self.is_empty_complex else 0
        return self.betti[d] if 0 <= d < len(self.betti) else 0

    def torsion_at(self, d: int) -> tuple[int, ...]:
        return self.torsion[d] if 0 <= d < len(self.torsion) else ()

    @property
    def torsion_free(self) -> bool:
        return all(not t for t in self.torsion)

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def _used_component_count(k: Complex) -> int:
    verts = k.used_vertices()
    parent = {v: v for v in verts}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in k.faces(1):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in verts})


def reduced_homology(k: Complex) -> HomologyProfile:
    """Reduced integer homology of k in every dimension."""
    top = k.dim
    if top < 0:
        return HomologyProfile((), ())
    fv = f_vector(k)
    snf = [smith_normal_form(boundary_matrix(k, d)) for d in range(top + 1)]
    ranks = [s.rank for s in snf] + [0]
    betti = tuple(fv[d] - ranks[d] - ranks[d + 1] for d in range(top + 1))
    torsion = tuple(
        tuple(x for x in snf[d + 1].factors if x > 1) if d + 1 <= top else ()
        for d in range(top + 1)
    )
    # redundant oracles: component count and the Euler-Poincare identity
    assert betti[0] == _used_component_count(k) - 1, "rank computation disagrees with union-find"
    assert euler_characteristic(k) == 1 + sum((-1) ** d * b for d, b in enumerate(betti)), \
        "Euler-Poincare identity violated"
    return HomologyProfile(betti, torsion)


def pad_profile(p: HomologyProfile, length: int) -> HomologyProfile:
    """Extend a profile with zero degrees up to the given length."""
    extra = length - len(p.betti)
    if extra <= 0:
        return p
    return HomologyProfile(p.betti + (0,) * extra, p.torsion + ((),) * extra)


def profiles_equal(a: HomologyProfile, b: HomologyProfile) -> bool:
    """Degree-wise equality, padding trailing zero dimensions; the empty-complex
    sentinel only matches itself."""
    if a.is_empty_complex != b.is_empty_complex:
        return False
    n = max(len(a.betti), len(b.betti))
    return pad_profile(a, n) == pad_profile(b, n)


def wedge_profile(k: Complex, dims: Iterable[int]) -> bool:
    """Homological shadow of "wedge of spheres in the given dimensions":
    connected, torsion-free, and no reduced homology outside ``dims``.

    The empty complex never qualifies.
    """
    prof = reduced_homology(k)
    if prof.is_empty_complex:
        return False
    allowed = set(dims)
    if not prof.torsion_free:
        return False
    return all(b == 0 for d, b in enumerate(prof.betti) if d not in allowed)


@dataclass(frozen=True)
class LerayCheck:
    """Outcome of a Leray bound scan over induced subcomplexes.

    ``exhaustive`` is False when only a sampled budget of subsets was scanned,
    which is reported distinctly from a refutation.  ``all_fields`` records
    whether torsion also vanished one degree below the bound, which upgrades
    the integer certificate to one valid over every field.
    """

    passed: bool
    witness: tuple[int, ...] | None
    exhaustive: bool
    all_fields: bool

    @property
    def condition(self) -> str:
        return "integer+all-fields" if self.all_fields else "integer"


def leray_bound_check(k: Complex, d: int, budget: int | None = None,
                      seed: int = 0) -> LerayCheck:
    """Check that every induced subcomplex has vanishing reduced homology
    (free part and torsion) in degrees >= d.

    Exhaustive over all subsets of used vertices when there are at most 14;
    larger complexes need a sampling ``budget``.  Witnesses are minimal:
    subsets are scanned by size, then lexicographically.
    """
    used = k.used_vertices()
    subsets: Iterable[tuple[int, ...]]
    if len(used) <= 14:
        exhaustive = True
        subsets = (c for size in range(d + 1, len(used) + 1)
                   for c in itertools.combinations(used, size))
    elif budget is not None:
        exhaustive = False
        rng = random.Random(seed)
        subsets = (tuple(sorted(rng.sample(used, rng.randint(d + 1, len(used)))))
                   for _ in range(budget))
    else:
        raise ValueError("more than 14 used vertices: supply a sampling budget")
    all_fields = True
    for vs in subsets:
        prof = reduced_homology(induced_subcomplex(k, vs))
        bad = any(prof.betti_at(i) or prof.torsion_at(i)
                  for i in range(d, len(prof.betti)))
        if bad:
            return LerayCheck(False, tuple(vs), exhaustive, False)
        if prof.torsion_at(d - 1):
            all_fields = False
    return LerayCheck(True, None, exhaustive, all_fields)
