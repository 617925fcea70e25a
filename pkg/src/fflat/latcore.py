"""Exact integer lattice engine.

Lattices are given by an explicit basis (rows of an integer matrix inside an
ambient Z^m).  Every invariant is carried as an exact integer: norms and
determinants are stored squared (norm^2, det^2 = det(Gram)), so no irrational
value ever appears in the correctness path.  Rational intermediates (LLL,
Gram-Schmidt data for enumeration) use fractions.Fraction; floating point is
never consulted.

Algorithms:
  * Hermite / Smith normal forms by integer row (and column) reduction, with
    unimodular transforms on request.
  * Determinants by Bareiss fraction-free elimination.
  * Short vectors by Fincke-Pohst branch-and-bound over an LLL-reduced basis,
    walking each coordinate outward from its real center so no square roots
    are needed.
  * Successive minima by greedy independent selection from the sorted
    enumeration, which attains the minima exactly.
"""

from __future__ import annotations

import functools

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ResourceLimitError

Vec = tuple[int, ...]
Matrix = tuple[Vec, ...]

DEFAULT_ENUM_CAP = 1_000_000


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def norm2(v: Sequence[int]) -> int:
    return sum(a * a for a in v)


def gram_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(dot(r, s) for s in rows) for r in rows)


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def row_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            col += 1
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pv = work[rank][col]
        for i in range(rank + 1, len(work)):
            ci = work[i][col]
            if ci:
                work[i] = [x * pv - ci * y for x, y in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class IntegerLattice:
    """A full set of independent basis rows inside Z^ambient_dim."""

    basis: Matrix
    ambient_dim: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        basis = tuple(tuple(int(x) for x in row) for row in self.basis)
        object.__setattr__(self, "basis", basis)
        for row in basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis row length does not match ambient dimension")
        if self.labels is not None and len(self.labels) != self.ambient_dim:
            raise ValueError("one label per ambient coordinate expected")
        if basis and bareiss_det(gram_matrix(basis)) == 0:
            raise ValueError("basis rows are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def to_json_dict(self) -> dict:
        d = {
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "basis": [list(row) for row in self.basis],
        }
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "IntegerLattice":
        labels = tuple(d["labels"]) if "labels" in d and d["labels"] is not None else None
        return cls(
            basis=tuple(tuple(int(x) for x in row) for row in d["basis"]),
            ambient_dim=int(d["ambient_dim"]),
            labels=labels,
        )


@dataclass(frozen=True)
class GramData:
    gram: Matrix
    det2: int


def gram_and_det2(lattice: IntegerLattice) -> GramData:
    """Gram matrix B*B^T and its exact determinant (the squared lattice determinant)."""
    g = gram_matrix(lattice.basis)
    d2 = bareiss_det(g)
    if d2 <= 0:
        raise ValueError("rank-deficient basis")
    return GramData(gram=g, det2=d2)


def det2(lattice: IntegerLattice) -> int:
    return gram_and_det2(lattice).det2


# ----------------------------------------------------------------------------
# Normal forms
# ----------------------------------------------------------------------------


def _hnf_inplace(rows: list[list[int]], transform: list[list[int]] | None) -> None:
    m = len(rows)
    if m == 0:
        return
    ncols = len(rows[0])

    def swap(i: int, j: int) -> None:
        rows[i], rows[j] = rows[j], rows[i]
        if transform is not None:
            transform[i], transform[j] = transform[j], transform[i]

    def addmul(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
        if transform is not None:
            transform[i] = [a - q * b for a, b in zip(transform[i], transform[j])]

    def negate(i: int) -> None:
        rows[i] = [-a for a in rows[i]]
        if transform is not None:
            transform[i] = [-a for a in transform[i]]

    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, m) if rows[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][c]), i))
            if i0 != r:
                swap(r, i0)
            done = True
            for i in range(r + 1, m):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    addmul(i, r, q)
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < m and rows[r][c] != 0:
            if rows[r][c] < 0:
                negate(r)
            for i in range(r):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    if q:
                        addmul(i, r, q)
            r += 1
            if r == m:
                break


def hnf(rows: Sequence[Sequence[int]]) -> Matrix:
    """Canonical row-style Hermite normal form (zero rows collected at the bottom)."""
    work = [list(r) for r in rows]
    _hnf_inplace(work, None)
    return tuple(tuple(r) for r in work)


def hnf_transform(rows: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """(H, U) with H = U * A in HNF and U unimodular."""
    work = [list(r) for r in rows]
    u = [[int(i == j) for j in range(len(work))] for i in range(len(work))]
    _hnf_inplace(work, u)
    return tuple(tuple(r) for r in work), tuple(tuple(r) for r in u)


@functools.lru_cache(maxsize=512)
def _hnf_transform_cached(rows: Matrix) -> tuple[Matrix, Matrix]:
    return hnf_transform(rows)


def hnf_basis(rows: Sequence[Sequence[int]]) -> Matrix:
    """Nonzero rows of the HNF: the canonical basis of the row span."""
    return tuple(row for row in hnf(rows) if any(row))


def left_kernel(rows: Sequence[Sequence[int]]) -> Matrix:
    """Basis of the integer left kernel {v : v * A = 0}."""
    h, u = hnf_transform(rows)
    return tuple(u[i] for i in range(len(h)) if not any(h[i]))


def snf(rows: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: (D, U, V) with D = U * A * V diagonal, d_1 | d_2 | ...."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_addmul(i: int, j: int, q: int) -> None:
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_addmul(i: int, j: int, q: int) -> None:
        # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def row_swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # Find a nonzero pivot in the remaining submatrix.
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        while True:
            # Clear column t.
            changed = False
            for i in range(m):
                if i != t and a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_addmul(i, t, q)
                    if a[i][t] != 0:
                        row_swap(i, t)
                        changed = True
            if changed:
                continue
            # Clear row t.
            for j in range(n):
                if j != t and a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_addmul(j, t, q)
                    if a[t][j] != 0:
                        col_swap(j, t)
                        changed = True
                        break
            if not changed:
                break
        if a[t][t] < 0:
            row_negate(t)
        # Divisibility fix-up: d_t must divide every remaining entry.
        fixed = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    row_addmul(t, i, -1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1
    return (
        tuple(tuple(r) for r in a),
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in v),
    )


def snf_diagonal(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    d, _, _ = snf(rows)
    k = min(len(d), len(d[0]) if d else 0)
    return tuple(d[i][i] for i in range(k) if d[i][i] != 0)


# ----------------------------------------------------------------------------
# Membership, equality, index
# ----------------------------------------------------------------------------


def solve_coords(lattice: IntegerLattice, v: Sequence[int]) -> Vec | None:
    """Integer coordinates x with x * basis = v, or None if v is not in the lattice."""
    if len(v) != lattice.ambient_dim:
        raise ValueError("vector dimension mismatch")
    h, u = _hnf_transform_cached(lattice.basis)
    rem = [int(x) for x in v]
    y = [0] * len(h)
    for k, row in enumerate(h):
        pivot_col = next((c for c, x in enumerate(row) if x), None)
        if pivot_col is None:
            continue
        if rem[pivot_col] % row[pivot_col] != 0:
            return None
        q = rem[pivot_col] // row[pivot_col]
        y[k] = q
        if q:
            rem = [a - q * b for a, b in zip(rem, row)]
    if any(rem):
        return None
    n = len(lattice.basis)
    return tuple(sum(y[k] * u[k][i] for k in range(n)) for i in range(n))


def contains(lattice: IntegerLattice, v: Sequence[int]) -> bool:
    return solve_coords(lattice, v) is not None


def lattice_equal(a: IntegerLattice, b: IntegerLattice) -> bool:
    if a.ambient_dim != b.ambient_dim:
        return False
    return hnf_basis(a.basis) == hnf_basis(b.basis)


def index_in(sub: IntegerLattice, sup: IntegerLattice) -> int:
    """The index [sup : sub] for a finite-index sublattice of equal rank."""
    if sub.rank != sup.rank:
        raise ValueError("index requires equal ranks")
    coeffs = []
    for row in sub.basis:
        c = solve_coords(sup, row)
        if c is None:
            raise ValueError("not a sublattice")
        coeffs.append(c)
    d = abs(bareiss_det(coeffs))
    if d == 0:
        raise ValueError("degenerate coefficient matrix")
    return d


# ----------------------------------------------------------------------------
# LLL reduction (exact rationals, delta = 3/4 by default)
# ----------------------------------------------------------------------------


def _gso(rows: Sequence[Vec]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Gram-Schmidt data: (mu, B) with B[i] = |b_i^*|^2, exact."""
    n = len(rows)
    mu = [[Fraction(0)] * n for _ in range(n)]
    b_star: list[list[Fraction]] = []
    B: list[Fraction] = []
    for i in range(n):
        cur = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu_ij = Fraction(sum(Fraction(x) * y for x, y in zip(rows[i], b_star[j])), 1) / B[j]
            mu[i][j] = mu_ij
            cur = [c - mu_ij * s for c, s in zip(cur, b_star[j])]
        b_star.append(cur)
        B.append(sum(c * c for c in cur))
        if B[i] == 0:
            raise ValueError("basis rows are linearly dependent")
    return mu, B


def lll_reduce(lattice: IntegerLattice, delta: Fraction = Fraction(3, 4)) -> IntegerLattice:
    """Lovasz-reduced basis of the same lattice, computed with exact rationals."""
    n = lattice.rank
    if n <= 1:
        return lattice
    b = [list(row) for row in lattice.basis]
    mu, B = _gso([tuple(r) for r in b])
    half = Fraction(1, 2)

    def size_reduce(k: int, l: int) -> None:
        if abs(mu[k][l]) > half:
            q = int((mu[k][l] + half).__floor__())
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            mu[k][l] -= q
            for j in range(l):
                mu[k][j] -= q * mu[l][j]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            # Swap b_k and b_{k-1}, updating the GSO data in place.
            mu_k = mu[k][k - 1]
            big = B[k] + mu_k * mu_k * B[k - 1]
            mu[k][k - 1] = mu_k * B[k - 1] / big
            B[k] = B[k - 1] * B[k] / big
            B[k - 1] = big
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - mu_k * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return IntegerLattice(
        basis=tuple(tuple(r) for r in b),
        ambient_dim=lattice.ambient_dim,
        labels=lattice.labels,
    )


# ----------------------------------------------------------------------------
# Short vector enumeration (Fincke-Pohst)
# ----------------------------------------------------------------------------


def _canonical_sign(v: Vec) -> Vec:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def enumerate_short(
    lattice: IntegerLattice,
    bound2: int | Fraction,
    max_results: int = DEFAULT_ENUM_CAP,
) -> list[Vec]:
    """All nonzero lattice vectors with |v|^2 <= bound2, one of each +-pair.

    Output is duplicate-free and sorted lexicographically; each vector is
    sign-normalized so its first nonzero entry is positive.  Exceeding
    `max_results` raises ResourceLimitError rather than truncating.
    """
    bound = Fraction(bound2)
    if bound < 1:
        return []
    red = lll_reduce(lattice)
    rows = red.basis
    n = len(rows)
    if n == 0:
        return []
    mu, B = _gso(rows)
    found: set[Vec] = set()
    x = [0] * n

    def emit() -> None:
        v = [0] * red.ambient_dim
        for i in range(n):
            xi = x[i]
            if xi:
                row = rows[i]
                for j in range(red.ambient_dim):
                    v[j] += xi * row[j]
        if any(v):
            found.add(_canonical_sign(tuple(v)))
            if len(found) > max_results:
                raise ResourceLimitError(
                    f"short-vector enumeration exceeded cap of {max_results}"
                )

    def descend(i: int, remaining: Fraction) -> None:
        if i < 0:
            emit()
            return
        center = sum(x[j] * mu[j][i] for j in range(i + 1, n))
        # Smallest integer >= -center.
        start = -((center.numerator) // (center.denominator))
        xi = start
        while True:
            t = xi + center
            used = B[i] * t * t
            if used > remaining:
                break
            x[i] = xi
            descend(i - 1, remaining - used)
            xi += 1
        xi = start - 1
        while True:
            t = xi + center
            used = B[i] * t * t
            if used > remaining:
                break
            x[i] = xi
            descend(i - 1, remaining - used)
            xi -= 1
        x[i] = 0

    descend(n - 1, bound)
    return sorted(found)


def minimum2(lattice: IntegerLattice) -> int:
    """Exact squared minimum distance."""
    red = lll_reduce(lattice)
    ub = min(norm2(row) for row in red.basis)
    vecs = enumerate_short(lattice, ub)
    return min(norm2(v) for v in vecs)


def minimal_vectors(lattice: IntegerLattice) -> list[Vec]:
    """All minimal vectors, one of each +-pair, canonically ordered."""
    m2 = minimum2(lattice)
    return [v for v in enumerate_short(lattice, m2) if norm2(v) == m2]


def kissing_number(lattice: IntegerLattice) -> int:
    return 2 * len(minimal_vectors(lattice))


class _IndependentSet:
    """Incremental rational-rank tracker using fraction-free elimination."""

    def __init__(self) -> None:
        self.echelon: list[list[int]] = []

    def try_add(self, v: Sequence[int]) -> bool:
        work = list(v)
        for row in self.echelon:
            pivot_col = next(c for c, x in enumerate(row) if x)
            if work[pivot_col]:
                pv = row[pivot_col]
                cv = work[pivot_col]
                work = [x * pv - cv * y for x, y in zip(work, row)]
        if not any(work):
            return False
        self.echelon.append(work)
        return True

    @property
    def rank(self) -> int:
        return len(self.echelon)


@dataclass(frozen=True)
class MinimaProfile:
    """Successive minima lambda_i^2 with witnessing independent vectors."""

    lambda2: tuple[int, ...]
    witnesses: Matrix


def successive_minima2(lattice: IntegerLattice, max_results: int = DEFAULT_ENUM_CAP) -> MinimaProfile:
    """Exact successive minima by greedy selection from the sorted enumeration."""
    n = lattice.rank
    bound = minimum2(lattice)
    while True:
        vecs = enumerate_short(lattice, bound, max_results=max_results)
        vecs.sort(key=lambda v: (norm2(v), v))
        tracker = _IndependentSet()
        lam: list[int] = []
        wit: list[Vec] = []
        for v in vecs:
            if tracker.try_add(v):
                lam.append(norm2(v))
                wit.append(v)
                if len(lam) == n:
                    return MinimaProfile(lambda2=tuple(lam), witnesses=tuple(wit))
        bound *= 2


def is_well_rounded(lattice: IntegerLattice) -> bool:
    """True iff the minimal vectors span the full rational span of the lattice."""
    return row_rank(minimal_vectors(lattice)) == lattice.rank


def minimal_vector_basis(
    lattice: IntegerLattice, max_nodes: int = 2_000_000
) -> IntegerLattice | None:
    """A basis of the lattice consisting of minimal vectors, or None.

    The backtracking search runs over the (sign-normalized) minimal vectors
    only; None is conclusive because the search is exhaustive.  A subset of n
    independent minimal vectors is a basis iff its coefficient matrix against
    the given basis has determinant +-1.
    """
    n = lattice.rank
    mins = minimal_vectors(lattice)
    if row_rank(mins) < n:
        return None
    coords = [solve_coords(lattice, v) for v in mins]
    assert all(c is not None for c in coords)
    nodes = 0

    chosen: list[int] = []

    def search(start: int, tracker: _IndependentSet) -> list[int] | None:
        nonlocal nodes
        if len(chosen) == n:
            mat = [coords[i] for i in chosen]
            if abs(bareiss_det(mat)) == 1:
                return list(chosen)
            return None
        if len(mins) - start < n - len(chosen):
            return None
        for i in range(start, len(mins)):
            nodes += 1
            if nodes > max_nodes:
                raise ResourceLimitError("minimal-vector basis search exceeded node cap")
            branch = _IndependentSet()
            branch.echelon = [row[:] for row in tracker.echelon]
            if not branch.try_add(mins[i]):
                continue
            chosen.append(i)
            result = search(i + 1, branch)
            if result is not None:
                return result
            chosen.pop()
        return None

    picked = search(0, _IndependentSet())
    if picked is None:
        return None
    return IntegerLattice(
        basis=tuple(mins[i] for i in picked),
        ambient_dim=lattice.ambient_dim,
        labels=lattice.labels,
    )


# ----------------------------------------------------------------------------
# Dual lattice short-vector counts
# ----------------------------------------------------------------------------


def _adjugate(matrix: Sequence[Sequence[int]]) -> Matrix:
    n = len(matrix)
    if n == 0:
        return ()
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [matrix[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            sign = -1 if (i + j) % 2 else 1
            adj[j][i] = sign * bareiss_det(minor)
    return tuple(tuple(r) for r in adj)


def dual_short_vector_count(
    lattice: IntegerLattice,
    bound2_numerator: int,
    bound2_denominator: int,
    max_results: int = DEFAULT_ENUM_CAP,
) -> int:
    """Number of dual-lattice vectors w != 0 with |w|^2 <= num/den (both signs).

    The dual is rescaled by det^2 to an integer lattice (adj(Gram) * basis
    spans det^2 * dual), then enumerated with the correspondingly rescaled
    rational bound.
    """
    if bound2_denominator <= 0 or bound2_numerator <= 0:
        raise ValueError("bound must be positive")
    gd = gram_and_det2(lattice)
    adj = _adjugate(gd.gram)
    n = lattice.rank
    scaled_rows = tuple(
        tuple(
            sum(adj[i][k] * lattice.basis[k][j] for k in range(n))
            for j in range(lattice.ambient_dim)
        )
        for i in range(n)
    )
    scaled = IntegerLattice(basis=scaled_rows, ambient_dim=lattice.ambient_dim)
    bound = Fraction(bound2_numerator * gd.det2 * gd.det2, bound2_denominator)
    vecs = enumerate_short(scaled, bound, max_results=max_results)
    return 2 * len(vecs)
