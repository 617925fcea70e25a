"""Automorphism groups of the lattices and the subgroups induced by curves.

Three engines live here:

  * a deterministic Schreier-Sims stabilizer chain for exact permutation
    group orders,
  * a coordinate-permutation stabilizer search (which permutations of the
    ambient coordinates map the lattice onto itself), found level by level
    so the full group is never enumerated element by element,
  * a Gram-compatible backtracking count of the full isometry group: once a
    basis is fixed, isometries correspond exactly to tuples of lattice
    vectors with matching pairwise inner products, so counting leaves of the
    compatible-assignment tree counts isometries, -Id included.

The remaining functions verify the curve-induced subgroups (translations and
group automorphisms for elliptic lattices, Moebius maps for the rational
lattice, ramified/inert coordinate permutations for hyperelliptic ones)
directly against lattice membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .curves import FiniteAbelianGroup, PlaceEmbedding, PlaceSystem
from .errors import ResourceLimitError
from .latcore import (
    IntegerLattice,
    contains,
    lll_reduce,
    minimal_vector_basis,
    minimal_vectors,
    norm2,
    enumerate_short,
)

Perm = tuple[int, ...]

PERM_STABILIZER_MAX_DIM = 14
ISOMETRY_MAX_RANK = 12


class StabilizerCheckError(RuntimeError):
    """An induced map that a theorem promises to be an automorphism failed the check."""


def identity_perm(m: int) -> Perm:
    return tuple(range(m))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)[i] = p[q[i]]; q acts first."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse_perm(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def apply_perm(p: Perm, v: Sequence[int]) -> tuple[int, ...]:
    """Move coordinate i to coordinate p[i]."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[p[i]] = x
    return tuple(out)


def perm_stabilizes(lattice: IntegerLattice, p: Perm) -> bool:
    return all(contains(lattice, apply_perm(p, row)) for row in lattice.basis)


def schreier_sims_order(generators: Iterable[Perm], degree: int | None = None) -> int:
    """Exact order of the permutation group generated by `generators`."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            return 1
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise ValueError("generators must be permutations of equal degree")
    ident = identity_perm(degree)
    gens = sorted(set(g for g in gens if g != ident))
    if not gens:
        return 1
    base_point = next(i for i in range(degree) if any(g[i] != i for g in gens))
    orbit = {base_point: ident}
    queue = [base_point]
    while queue:
        x = queue.pop()
        tx = orbit[x]
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit[y] = compose(g, tx)
                queue.append(y)
    stab_gens = set()
    for x, tx in orbit.items():
        for g in gens:
            ty = orbit[g[x]]
            schreier = compose(inverse_perm(ty), compose(g, tx))
            if schreier != ident:
                stab_gens.add(schreier)
    return len(orbit) * schreier_sims_order(stab_gens, degree)


@dataclass(frozen=True)
class PermutationGroup:
    """Generators plus the exact order computed from a stabilizer chain."""

    degree: int
    generators: tuple[Perm, ...]
    order: int

    @classmethod
    def from_generators(cls, degree: int, generators: Iterable[Perm]) -> "PermutationGroup":
        gens = tuple(sorted(set(tuple(g) for g in generators)))
        return cls(degree=degree, generators=gens, order=schreier_sims_order(gens, degree))


# ----------------------------------------------------------------------------
# Coordinate-permutation stabilizer
# ----------------------------------------------------------------------------


def perm_stabilizer(
    lattice: IntegerLattice, max_dim: int = PERM_STABILIZER_MAX_DIM
) -> PermutationGroup:
    """All coordinate permutations mapping the lattice onto itself.

    Works down a stabilizer chain with base (0, 1, ..., m-1): for each level
    the orbit of that coordinate under the pointwise stabilizer of the
    earlier ones is found by searching for a single completing permutation
    per candidate image.  The order is the product of the orbit sizes and the
    coset representatives generate the group.

    Backtracking is pruned with permutation-invariant data from the minimal
    vectors: a coordinate can only map to a coordinate whose entry multiset
    (and pairwise two-column multisets) agree.
    """
    m = lattice.ambient_dim
    if m > max_dim:
        raise ResourceLimitError(
            f"permutation stabilizer guarded at ambient dimension {max_dim}"
        )
    mins = minimal_vectors(lattice)
    signed = [v for v in mins] + [tuple(-x for x in v) for v in mins]
    col_key = [tuple(sorted(v[i] for v in signed)) for i in range(m)]
    pair_key: dict[tuple[int, int], tuple] = {}
    for i in range(m):
        for j in range(m):
            pair_key[(i, j)] = tuple(sorted((v[i], v[j]) for v in signed))
    signed_set = set(signed)

    def full_check(p: Perm) -> bool:
        if any(apply_perm(p, v) not in signed_set for v in signed):
            return False
        return perm_stabilizes(lattice, p)

    def extend(prefix: list[int]) -> Perm | None:
        """Any lattice automorphism whose first len(prefix) images match, else None."""
        used = set(prefix)
        k = len(prefix)
        if k == m:
            p = tuple(prefix)
            return p if full_check(p) else None
        for j in range(m):
            if j in used:
                continue
            if col_key[k] != col_key[j]:
                continue
            if any(pair_key[(i, k)] != pair_key[(prefix[i], j)] for i in range(k)):
                continue
            result = extend(prefix + [j])
            if result is not None:
                return result
        return None

    order = 1
    gens: list[Perm] = []
    for level in range(m):
        orbit = 0
        for j in range(m):
            if j == level:
                orbit += 1  # the identity always extends
                continue
            p = extend(list(range(level)) + [j])
            if p is not None:
                orbit += 1
                gens.append(p)
        order *= orbit
    return PermutationGroup(degree=m, generators=tuple(sorted(set(gens))), order=order)


# ----------------------------------------------------------------------------
# Full isometry group order
# ----------------------------------------------------------------------------


def factorized(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class IsometryReport:
    order: int
    factored: tuple[tuple[int, int], ...]
    includes_minus_id: bool

    def to_json_dict(self) -> dict:
        return {
            "order": str(self.order),
            "factored": [[p, e] for p, e in self.factored],
            "includes_minus_id": self.includes_minus_id,
        }


def _short_basis(lattice: IntegerLattice) -> IntegerLattice:
    """A basis made of short vectors: minimal vectors when possible, else LLL."""
    try:
        mb = minimal_vector_basis(lattice, max_nodes=200_000)
    except ResourceLimitError:
        mb = None
    return mb if mb is not None else lll_reduce(lattice)


def isometry_group_order(
    lattice: IntegerLattice,
    max_rank: int = ISOMETRY_MAX_RANK,
    max_shell: int = 40_000,
) -> IsometryReport:
    """Exact order of the full isometry group Aut(L), -Id included.

    Fix a short basis b_1..b_n.  An isometry is exactly a choice of lattice
    vectors w_1..w_n with <w_i, w_j> = <b_i, b_j> for all i, j: such a tuple
    defines a linear map sending L into L with unimodular coefficient matrix,
    hence onto L.  The count of Gram-compatible tuples is found by
    backtracking over shells of vectors of the required norms, filtering the
    candidate lists for later positions by inner products as each position is
    assigned.
    """
    n = lattice.rank
    if n > max_rank:
        raise ResourceLimitError(f"isometry search guarded at rank {max_rank}")
    base = _short_basis(lattice)
    rows = base.basis
    gram = [[sum(a * b for a, b in zip(r, s)) for s in rows] for r in rows]
    shells: dict[int, list[tuple[int, ...]]] = {}
    for nu in sorted(set(gram[i][i] for i in range(n))):
        half = enumerate_short(lattice, nu, max_results=max_shell)
        full = [v for v in half if norm2(v) == nu]
        shells[nu] = full + [tuple(-x for x in v) for v in full]
    all_cands = sorted(set(v for vs in shells.values() for v in vs))
    index_of = {v: i for i, v in enumerate(all_cands)}
    n_cand = len(all_cands)
    if n_cand > max_shell:
        raise ResourceLimitError("isometry candidate shells exceed the cap")
    dots = [[0] * n_cand for _ in range(n_cand)]
    for i in range(n_cand):
        vi = all_cands[i]
        row = dots[i]
        for j in range(i, n_cand):
            d = sum(a * b for a, b in zip(vi, all_cands[j]))
            row[j] = d
            dots[j][i] = d
    position_cands = [
        [index_of[v] for v in shells[gram[i][i]]] for i in range(n)
    ]

    def count(level: int, cands: list[list[int]]) -> int:
        if level == n:
            return 1
        total = 0
        grow = gram[level]
        for ci in cands[0]:
            row = dots[ci]
            nxt: list[list[int]] = []
            ok = True
            for offset, later in enumerate(cands[1:], start=level + 1):
                want = grow[offset]
                filtered = [cj for cj in later if row[cj] == want]
                if not filtered:
                    ok = False
                    break
                nxt.append(filtered)
            if ok:
                total += count(level + 1, nxt)
        return total

    order = count(0, position_cands)
    return IsometryReport(
        order=order,
        factored=factorized(order),
        includes_minus_id=all(contains(lattice, tuple(-x for x in row)) for row in lattice.basis),
    )


# ----------------------------------------------------------------------------
# Automorphisms of finite abelian groups
# ----------------------------------------------------------------------------


def hillar_rhea_order(group: FiniteAbelianGroup) -> int:
    """Order of Aut(G) by the closed-form prime-local formulas (rank <= 2)."""
    if group.rank > 2:
        raise ValueError("closed-form order implemented for rank <= 2 groups")
    if group.rank == 0:
        return 1

    def phi(n: int) -> int:
        return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)

    primes = set()
    for nf in group.factors:
        primes.update(p for p, _ in factorized(nf))
    total = 1
    for p in sorted(primes):
        exps = sorted(
            next((e for q, e in factorized(nf) if q == p), 0) for nf in group.factors
        )
        if group.rank == 1:
            e2 = exps[-1]
            total *= phi(p**e2)
            continue
        e1, e2 = exps
        if e1 == 0:
            total *= phi(p**e2)
        elif e1 == e2:
            total *= phi(p**e1) ** 2 * p ** (2 * e1 - 1) * (p + 1)
        else:
            total *= phi(p**e1) * phi(p**e2) * p ** (2 * e1 - 1) * p
    return total


def abelian_automorphism_group(
    group: FiniteAbelianGroup, max_order: int = 10_000
) -> tuple[tuple[tuple[tuple[int, ...], ...], ...], int]:
    """All automorphisms of a rank <= 2 group, as generator-image matrices.

    Brute force over candidate images of the standard generators (each must
    have the exact order of its factor), keeping the bijective maps.  The
    resulting order is asserted against the closed-form count.
    """
    if group.rank > 2:
        raise ResourceLimitError("automorphism enumeration guarded at rank 2")
    if group.order > max_order:
        raise ResourceLimitError(f"automorphism enumeration guarded at order {max_order}")
    if group.rank == 0:
        return ((),), 1
    elements = list(group.elements())
    candidates_per_factor = [
        [e for e in elements if group.element_order(e) == nf] for nf in group.factors
    ]
    autos: list[tuple[tuple[int, ...], ...]] = []
    if group.rank == 1:
        for a in candidates_per_factor[0]:
            autos.append((a,))
    else:
        full = set(elements)
        for a in candidates_per_factor[0]:
            for b in candidates_per_factor[1]:
                image = set()
                for i in range(group.factors[0]):
                    ia = group.scale(a, i)
                    for j in range(group.factors[1]):
                        image.add(group.add(ia, group.scale(b, j)))
                if image == full:
                    autos.append((a, b))
    order = len(autos)
    assert order == hillar_rhea_order(group)
    return tuple(autos), order


def apply_group_automorphism(
    group: FiniteAbelianGroup,
    auto: tuple[tuple[int, ...], ...],
    element: tuple[int, ...],
) -> tuple[int, ...]:
    out = group.identity()
    for coeff, gen_image in zip(element, auto):
        out = group.add(out, group.scale(gen_image, coeff))
    return out


# ----------------------------------------------------------------------------
# Curve-induced subgroups
# ----------------------------------------------------------------------------


def elliptic_subgroup_check(
    lattice: IntegerLattice,
    group: FiniteAbelianGroup,
    embedding: PlaceEmbedding,
) -> int:
    """Verify the translation / group-automorphism subgroup of an elliptic lattice.

    Every translation x -> x + q and every automorphism of the point group
    permutes the places, hence the coordinates; each induced permutation must
    stabilize the lattice (a failure would falsify the subgroup theorem).
    Returns the exact order of the generated permutation group and asserts it
    equals |G| * |Aut(G)|.
    """
    images = embedding.images
    index_of = {img: i for i, img in enumerate(images)}
    if len(index_of) != len(images):
        raise ValueError("elliptic embedding must be a bijection onto the point group")
    perms: list[Perm] = []
    for q in group.elements():
        perms.append(tuple(index_of[group.add(img, q)] for img in images))
    autos, aut_order = abelian_automorphism_group(group)
    for auto in autos:
        perms.append(
            tuple(index_of[apply_group_automorphism(group, auto, img)] for img in images)
        )
    for p in perms:
        if not perm_stabilizes(lattice, p):
            raise StabilizerCheckError(
                f"induced permutation {p} does not stabilize the lattice"
            )
    order = schreier_sims_order(perms, len(images))
    expected = group.order * aut_order
    if order != expected:
        raise StabilizerCheckError(
            f"induced subgroup has order {order}, expected {expected}"
        )
    return order


def mobius_induced_perms(q: int) -> PermutationGroup:
    """Permutations of the q+1 rational places induced by x -> (ax+b)/(cx+d).

    Coordinate 0 is the infinite place, coordinate 1+t the place x = t.
    Asserts the group has order q^3 - q (so only the identity map fixes every
    place) and that every permutation stabilizes the degree-zero hyperplane
    lattice A_q.
    """
    from .builders import root_lattice_a

    if q > 50:
        raise ResourceLimitError("Moebius enumeration guarded at q <= 50")
    from .fieldpoly import PrimeField

    fld = PrimeField(q)  # validates q prime (and odd, which the lattices need)
    INF = -1

    def act(a: int, b: int, c: int, d: int, t: int) -> int:
        if t == INF:
            return INF if c == 0 else a * fld.inv(c) % q
        den = (c * t + d) % q
        if den == 0:
            return INF
        return (a * t + b) * fld.inv(den) % q

    def coord(t: int) -> int:
        return 0 if t == INF else 1 + t

    perms = set()
    points = [INF] + list(range(q))
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (a * d - b * c) % q == 0:
                        continue
                    perm = [0] * (q + 1)
                    for t in points:
                        perm[coord(t)] = coord(act(a, b, c, d, t))
                    perms.add(tuple(perm))
    expected = q**3 - q
    if len(perms) != expected:
        raise StabilizerCheckError(
            f"induced Moebius permutations number {len(perms)}, expected {expected}"
        )
    a_q = root_lattice_a(q)
    for p in perms:
        if not perm_stabilizes(a_q, p):
            raise StabilizerCheckError("a Moebius permutation failed to stabilize A_q")
    pg = PermutationGroup.from_generators(q + 1, perms)
    assert pg.order == expected
    return pg


def hyperelliptic_subgroup_check(
    lattice: IntegerLattice, system: PlaceSystem
) -> int:
    """Verify the ramified/inert permutation subgroup of a split ramified+inert lattice.

    Checks that every transposition within the 2g+2 ramified coordinates
    (infinity included) and within the s inert coordinates stabilizes the
    lattice, and that every ramified-with-inert transposition does not.
    Returns (2g+2)! * s!.
    """
    m = lattice.ambient_dim
    ram_idx = [
        i for i, p in enumerate(system.places) if p.kind in ("infinity", "ramified")
    ]
    inert_idx = [i for i, p in enumerate(system.places) if p.kind == "inert"]
    if len(ram_idx) + len(inert_idx) != m:
        raise ValueError("system must consist of ramified and inert places only")

    def transposition(i: int, j: int) -> Perm:
        p = list(range(m))
        p[i], p[j] = p[j], p[i]
        return tuple(p)

    for idx_set in (ram_idx, inert_idx):
        for a in range(len(idx_set)):
            for b in range(a + 1, len(idx_set)):
                p = transposition(idx_set[a], idx_set[b])
                if not perm_stabilizes(lattice, p):
                    raise StabilizerCheckError(
                        f"transposition {idx_set[a]}<->{idx_set[b]} must stabilize the lattice"
                    )
    for i in ram_idx:
        for j in inert_idx:
            if perm_stabilizes(lattice, transposition(i, j)):
                raise StabilizerCheckError(
                    f"mixing transposition {i}<->{j} must not stabilize the lattice"
                )
    return math.factorial(len(ram_idx)) * math.factorial(len(inert_idx))
