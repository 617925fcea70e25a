import itertools
import math
import random
from fractions import Fraction

import pytest

from fflat.builders import barnes_lattice, root_lattice_a, scale
from fflat.errors import ResourceLimitError
from fflat.latcore import (
    IntegerLattice,
    bareiss_det,
    contains,
    det2,
    dual_short_vector_count,
    enumerate_short,
    gram_and_det2,
    hnf,
    hnf_basis,
    hnf_transform,
    index_in,
    is_well_rounded,
    kissing_number,
    lattice_equal,
    left_kernel,
    lll_reduce,
    minimal_vector_basis,
    minimal_vectors,
    minimum2,
    norm2,
    row_rank,
    snf,
    solve_coords,
    successive_minima2,
)

PAPER_F11_BASIS = (
    (-7, 1, 1, 1, 1, 1, 1, 1, 0, 0),
    (-2, 0, 2, 0, 0, 0, 0, 0, 0, 0),
    (-2, 0, 0, 2, 0, 0, 0, 0, 0, 0),
    (-2, 0, 0, 0, 2, 0, 0, 0, 0, 0),
    (-2, 0, 0, 0, 0, 2, 0, 0, 0, 0),
    (-2, 0, 0, 0, 0, 0, 2, 0, 0, 0),
    (-2, 0, 0, 0, 0, 0, 0, 2, 0, 0),
    (-2, 0, 0, 0, 0, 0, 0, 0, 2, 0),
    (-2, 0, 0, 0, 0, 0, 0, 0, 0, 2),
)


def random_lattice(rng, rank, ambient):
    while True:
        rows = tuple(tuple(rng.randint(-3, 3) for _ in range(ambient)) for _ in range(rank))
        try:
            return IntegerLattice(rows, ambient)
        except ValueError:
            continue


def box_enumerate(lattice, bound2):
    # Coefficient box from the dual-basis (Cramer) bound: c_i^2 <= bound2 * (G^-1)_ii.
    from fflat.latcore import _adjugate, _canonical_sign

    gd = gram_and_det2(lattice)
    adj = _adjugate(gd.gram)
    limits = []
    for i in range(lattice.rank):
        num = bound2 * adj[i][i]
        k = math.isqrt(num // gd.det2)
        while (k + 1) ** 2 * gd.det2 <= num:
            k += 1
        limits.append(k)
    out = set()
    for cs in itertools.product(*(range(-k, k + 1) for k in limits)):
        v = tuple(
            sum(c * row[j] for c, row in zip(cs, lattice.basis))
            for j in range(lattice.ambient_dim)
        )
        if any(v) and norm2(v) <= bound2:
            out.add(_canonical_sign(v))
    return sorted(out)


def test_lattice_rejects_dependent_rows():
    with pytest.raises(ValueError):
        IntegerLattice(((1, -1, 0), (2, -2, 0)), 3)


def test_hnf_identity_and_canonical():
    assert hnf(((1, 0), (0, 1))) == ((1, 0), (0, 1))
    h, u = hnf_transform(((2, 4), (6, 8)))
    mult = tuple(
        tuple(sum(u[i][k] * ((2, 4), (6, 8))[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )
    assert mult == h
    assert abs(bareiss_det(u)) == 1


def test_snf_examples():
    d, u, v = snf(((2, 4), (6, 8)))
    assert (d[0][0], d[1][1]) == (2, 4)
    # basis of 2A_n in A_n coordinates is 2I, so the SNF is diag(2, ..., 2)
    n = 4
    an = root_lattice_a(n)
    coords = [solve_coords(an, row) for row in scale(an, 2).basis]
    d2, _, _ = snf(tuple(coords))
    assert [d2[i][i] for i in range(n)] == [2] * n
    assert math.prod(d2[i][i] for i in range(n)) == 2**n


def test_snf_transform_consistency():
    rng = random.Random(5)
    for _ in range(25):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = tuple(tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(m))
        d, u, v = snf(a)
        ua = [[sum(u[i][k] * a[k][j] for k in range(m)) for j in range(n)] for i in range(m)]
        uav = [[sum(ua[i][k] * v[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
        assert tuple(tuple(r) for r in uav) == d
        for i in range(min(m, n) - 1):
            if d[i][i] and d[i + 1][i + 1]:
                assert d[i + 1][i + 1] % d[i][i] == 0


def test_left_kernel():
    rows = ((1, 1), (2, 2), (0, 1))
    ker = left_kernel(rows)
    assert len(ker) == 1
    v = ker[0]
    assert all(sum(v[i] * rows[i][j] for i in range(3)) == 0 for j in range(2))


def test_gram_det2_named_lattices():
    for n in (2, 3, 4, 6):
        assert det2(root_lattice_a(n)) == n + 1
        assert det2(barnes_lattice(n)) == (n + 1) ** 3
        assert det2(scale(root_lattice_a(n), 2)) == 4**n * (n + 1)
    gd = gram_and_det2(root_lattice_a(2))
    assert gd.gram == ((2, -1), (-1, 2))


def test_contains_examples():
    twoa4 = scale(root_lattice_a(4), 2)
    assert contains(twoa4, twoa4.basis[0])
    assert not contains(twoa4, (1, -1, 0, 0, 0))
    assert contains(twoa4, (2, -2, 0, 0, 0))
    with pytest.raises(ValueError):
        contains(twoa4, (1, 2, 3))


def test_index_examples():
    for n in (2, 3, 5):
        assert index_in(scale(root_lattice_a(n), 2), root_lattice_a(n)) == 2**n
    a3 = root_lattice_a(3)
    assert lattice_equal(a3, a3)
    with pytest.raises(ValueError):
        index_in(root_lattice_a(3), scale(root_lattice_a(3), 2))


def test_lll_preserves_lattice_and_det2():
    lat = IntegerLattice(PAPER_F11_BASIS, 10)
    red = lll_reduce(lat)
    assert lattice_equal(lat, red)
    assert det2(lat) == det2(red)
    # first row of the raw basis has norm^2 = 56; reduction must shorten it
    assert max(norm2(r) for r in red.basis) < 56


def test_enumerate_short_a2():
    vecs = enumerate_short(root_lattice_a(2), 2)
    assert len(vecs) == 3
    assert kissing_number(root_lattice_a(2)) == 6


def test_enumerate_short_2an_below_minimum():
    for n in (3, 5):
        assert enumerate_short(scale(root_lattice_a(n), 2), 7) == []


def test_enumerate_cap_trips():
    with pytest.raises(ResourceLimitError):
        enumerate_short(root_lattice_a(8), 20, max_results=10)


def test_enumeration_matches_box_oracle():
    rng = random.Random(123)
    for _ in range(20):
        rank = rng.randint(2, 5)
        lat = random_lattice(rng, rank, rank + rng.randint(0, 2))
        bound = rng.randint(3, 25)
        assert enumerate_short(lat, bound) == box_enumerate(lat, bound)


def test_minimum_and_kissing_an():
    for n in (2, 3, 4, 5, 6):
        an = root_lattice_a(n)
        assert minimum2(an) == 2
        assert kissing_number(an) == n * (n + 1)


def test_successive_minima_an():
    prof = successive_minima2(root_lattice_a(5))
    assert prof.lambda2 == (2,) * 5
    assert row_rank(prof.witnesses) == 5
    assert all(norm2(w) == l for w, l in zip(prof.witnesses, prof.lambda2))


def test_successive_minima_scaling():
    rng = random.Random(9)
    lat = random_lattice(rng, 3, 4)
    base = successive_minima2(lat).lambda2
    doubled = successive_minima2(scale(lat, 2)).lambda2
    assert doubled == tuple(4 * x for x in base)


def test_well_rounded():
    assert is_well_rounded(root_lattice_a(4))
    assert is_well_rounded(scale(root_lattice_a(4), 2))


def test_minimal_vector_basis_an():
    for n in (2, 4):
        mb = minimal_vector_basis(root_lattice_a(n))
        assert mb is not None
        assert lattice_equal(mb, root_lattice_a(n))
        assert all(norm2(r) == 2 for r in mb.basis)


def test_minimal_vector_basis_paper_lattice():
    lat = IntegerLattice(PAPER_F11_BASIS, 10)
    mb = minimal_vector_basis(lat)
    assert mb is not None
    assert lattice_equal(mb, lat)
    assert all(norm2(r) == 8 for r in mb.basis)


def dual_count_brute(lattice, num, den):
    # Direct rational enumeration of the dual over a coefficient box.
    from fflat.latcore import _adjugate

    gd = gram_and_det2(lattice)
    adj = _adjugate(gd.gram)
    n = lattice.rank
    dual_rows = [
        [
            Fraction(
                sum(adj[i][k] * lattice.basis[k][j] for k in range(n)), gd.det2
            )
            for j in range(lattice.ambient_dim)
        ]
        for i in range(n)
    ]
    bound = Fraction(num, den)
    count = 0
    # Dual vectors are integer combinations of the dual basis; the Gram of the
    # dual is G^-1, whose diagonal bounds the coefficients as in the primal case.
    limit = 4  # ample for the small ranks used here
    for cs in itertools.product(range(-limit, limit + 1), repeat=n):
        if not any(cs):
            continue
        v = [
            sum(Fraction(c) * dual_rows[i][j] for i, c in enumerate(cs))
            for j in range(lattice.ambient_dim)
        ]
        if sum(x * x for x in v) <= bound:
            count += 1
    return count


def test_dual_count_an_star():
    for n in (2, 3, 4, 5, 6):
        got = dual_short_vector_count(root_lattice_a(n), n, n + 1)
        assert got == 2 * (n + 1)
        assert got == dual_count_brute(root_lattice_a(n), n, n + 1)


def test_dual_count_scaling_sanity():
    lat = root_lattice_a(3)
    assert dual_short_vector_count(scale(lat, 2), 3, 1) == dual_short_vector_count(
        lat, 12, 1
    )


def test_hnf_basis_strips_zero_rows():
    rows = ((1, -1, 0), (0, 1, -1), (1, 0, -1))
    assert len(hnf_basis(rows)) == 2
