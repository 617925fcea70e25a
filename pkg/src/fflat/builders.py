"""Constructors for the named lattices and every function-field lattice in scope.

The generator route takes the principal divisors of x - alpha, x - beta and
(when f splits) u and spans their image vectors.  The class-group route cuts
the kernel lattice

    L_G(S) = { x in Z^{n+1} : sum x_i = 0, d_i | x_i,
               sum (x_i / d_i) * s_i = 0 in G }

out of the degree-zero hyperplane, where s_i is the class of
[P_i - deg(P_i) * P_inf] and d_i = deg(P_i).  With all degrees 1 this is the
classical kernel-lattice construction for a finite abelian group; the d_i
twist encodes degree-weighted coordinates exactly.  The two routes must
agree, which is the strongest cross-check this module offers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .curves import (
    SELECTOR_ALL_RATIONAL,
    SELECTOR_ELLIPTIC,
    SELECTOR_RAMIFIED_INERT,
    SELECTOR_RATIONAL,
    FiniteAbelianGroup,
    HyperellipticModel,
    PlaceSystem,
    elliptic_point_group,
    jacobian_group,
    two_torsion_classes,
)
from .latcore import IntegerLattice, hnf_basis, left_kernel

TAG_X_MINUS_ALPHA = "x_minus_alpha"
TAG_X_MINUS_BETA = "x_minus_beta"
TAG_U = "u"
TAG_GROUP_RELATION = "group_relation"

# Degree of the pole divisor of each generator function: x - alpha and
# x - beta have a double pole at infinity; u has a pole of order 2g+1.
GENERATOR_POLE_DEGREE = {TAG_X_MINUS_ALPHA: 2, TAG_X_MINUS_BETA: 2}


@dataclass(frozen=True)
class GeneratorVector:
    """A lattice vector together with the function it is the image of."""

    vector: tuple[int, ...]
    tag: str
    index: int | None = None

    def __post_init__(self) -> None:
        if sum(self.vector) != 0:
            raise ValueError("generator vectors come from degree-zero divisors")

    @property
    def pole_degree(self) -> int | None:
        if self.tag in GENERATOR_POLE_DEGREE:
            return GENERATOR_POLE_DEGREE[self.tag]
        if self.tag == TAG_U:
            return -min(self.vector)  # 2g+1, read off the infinity coordinate
        return None


@dataclass(frozen=True)
class LatticeBundle:
    lattice: IntegerLattice
    places: PlaceSystem
    generators: tuple[GeneratorVector, ...]
    model: HyperellipticModel | None = None


def root_lattice_a(n: int) -> IntegerLattice:
    """A_n: integer vectors in Z^{n+1} with zero coordinate sum."""
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    rows = []
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = 1
        row[i + 1] = -1
        rows.append(tuple(row))
    return IntegerLattice(basis=tuple(rows), ambient_dim=n + 1)


def scale(lattice: IntegerLattice, c: int) -> IntegerLattice:
    if c < 1:
        raise ValueError("scale factor must be >= 1")
    return IntegerLattice(
        basis=tuple(tuple(c * x for x in row) for row in lattice.basis),
        ambient_dim=lattice.ambient_dim,
        labels=lattice.labels,
    )


def kernel_lattice(
    group: FiniteAbelianGroup,
    images: Sequence[tuple[int, ...]],
    degrees: Sequence[int] | None = None,
    labels: Sequence[str] | None = None,
) -> IntegerLattice:
    """The degree-weighted kernel lattice of a place embedding.

    Substituting x_i = d_i * y_i turns the two conditions into integer linear
    relations on y (one over Z for the degree, one mod n_j per invariant
    factor), whose solution lattice is the left kernel of a stacked relation
    matrix.
    """
    n_places = len(images)
    if degrees is None:
        degrees = [1] * n_places
    if len(degrees) != n_places:
        raise ValueError("one degree per place expected")
    if images and tuple(images[0]) != group.identity():
        raise ValueError("images[0] must be the identity class")
    k = len(group.factors)
    rows: list[tuple[int, ...]] = []
    for i in range(n_places):
        rows.append((degrees[i],) + tuple(images[i]))
    for j, modulus in enumerate(group.factors):
        rows.append((0,) + tuple(modulus if a == j else 0 for a in range(k)))
    kernel = left_kernel(rows)
    y_basis = [row[:n_places] for row in kernel]
    x_basis = [
        tuple(degrees[i] * row[i] for i in range(n_places)) for row in y_basis
    ]
    basis = hnf_basis(x_basis)
    return IntegerLattice(
        basis=basis,
        ambient_dim=n_places,
        labels=tuple(labels) if labels is not None else None,
    )


def barnes_lattice(n: int) -> IntegerLattice:
    """B_n: vectors of A_n with sum i * v_i = 0 mod n+1."""
    if n < 2:
        raise ValueError("B_n needs n >= 2")
    group = FiniteAbelianGroup((n + 1,))
    images = [(i % (n + 1),) for i in range(n + 1)]
    return kernel_lattice(group, images)


def phi_vector(
    model: HyperellipticModel,
    system: PlaceSystem,
    tag: str,
    index: int = 0,
) -> GeneratorVector:
    """Image vector of a generator of the unit group supported on the system.

    x - alpha_i has divisor 2P_i - 2P_inf; x - beta_j has Q_j - 2P_inf (with
    the degree-2 weight making the Q_j coordinate 2); when f splits, u has
    divisor P_2 + ... + P_{2g+2} - (2g+1) P_inf.  Constants and the unit
    exponents map to zero and are not represented.
    """
    m = len(system.places)
    vec = [0] * m
    if tag == TAG_X_MINUS_ALPHA:
        pos = [i for i, p in enumerate(system.places) if p.kind == "ramified"]
        coord = pos[index]
        vec[0] = -2
        vec[coord] = 2
    elif tag == TAG_X_MINUS_BETA:
        pos = [i for i, p in enumerate(system.places) if p.kind == "inert"]
        coord = pos[index]
        vec[0] = -2
        vec[coord] = 2
    elif tag == TAG_U:
        if system.r != 2 * model.genus + 2:
            raise ValueError("u is supported on the system only when f splits")
        vec[0] = -(2 * model.genus + 1)
        for i, p in enumerate(system.places):
            if p.kind == "ramified":
                vec[i] = 1
    else:
        raise ValueError(f"unknown generator tag {tag!r}")
    return GeneratorVector(vector=tuple(vec), tag=tag, index=index)


def _ramified_inert_generators(
    model: HyperellipticModel, system: PlaceSystem
) -> tuple[GeneratorVector, ...]:
    gens = []
    n_ram = sum(1 for p in system.places if p.kind == "ramified")
    n_inert = sum(1 for p in system.places if p.kind == "inert")
    for i in range(n_ram):
        gens.append(phi_vector(model, system, TAG_X_MINUS_ALPHA, i))
    for j in range(n_inert):
        gens.append(phi_vector(model, system, TAG_X_MINUS_BETA, j))
    if system.r == 2 * model.genus + 2:
        gens.append(phi_vector(model, system, TAG_U))
    return tuple(gens)


def build_ff_lattice(
    selector: str,
    model: HyperellipticModel | None = None,
    n: int | None = None,
) -> LatticeBundle:
    """Build the function-field lattice for a selector.

    "rational" takes n and returns A_n (any n+1 rational places of the
    rational function field give exactly A_n).  "ramified-inert" spans the
    generator vectors.  "elliptic" and "all-rational" cut the kernel lattice
    of the class-group embedding.
    """
    if selector == SELECTOR_RATIONAL:
        if n is None:
            raise ValueError("rational selector needs n")
        system = PlaceSystem.rational(n)
        lattice = IntegerLattice(
            basis=root_lattice_a(n).basis,
            ambient_dim=n + 1,
            labels=system.labels,
        )
        gens = tuple(
            GeneratorVector(vector=row, tag=TAG_GROUP_RELATION, index=i)
            for i, row in enumerate(lattice.basis)
        )
        return LatticeBundle(lattice=lattice, places=system, generators=gens)

    if model is None:
        raise ValueError(f"selector {selector!r} needs a curve model")

    if selector == SELECTOR_RAMIFIED_INERT:
        system = PlaceSystem.ramified_inert(model)
        if len(system.places) < 2:
            raise ValueError("place system is too small to carry a lattice")
        gens = _ramified_inert_generators(model, system)
        basis = hnf_basis([g.vector for g in gens])
        lattice = IntegerLattice(
            basis=basis, ambient_dim=len(system.places), labels=system.labels
        )
        if lattice.rank != len(system.places) - 1:
            raise AssertionError("generators must span a corank-1 lattice")
        return LatticeBundle(lattice=lattice, places=system, generators=gens, model=model)

    if selector == SELECTOR_ELLIPTIC:
        if model.genus != 1:
            raise ValueError("elliptic selector requires genus 1")
        group, embedding = elliptic_point_group(model)
        system = PlaceSystem.all_rational(model)
        lattice = kernel_lattice(
            group, embedding.images, degrees=[1] * len(system.places), labels=system.labels
        )
        gens = tuple(
            GeneratorVector(vector=row, tag=TAG_GROUP_RELATION, index=i)
            for i, row in enumerate(lattice.basis)
        )
        return LatticeBundle(lattice=lattice, places=system, generators=gens, model=model)

    if selector == SELECTOR_ALL_RATIONAL:
        system = PlaceSystem.all_rational(model)
        jac = jacobian_group(model)
        embedding = jac.embedding_for(system)
        lattice = kernel_lattice(
            jac.group, embedding.images, degrees=[1] * len(system.places), labels=system.labels
        )
        gens = tuple(
            GeneratorVector(vector=row, tag=TAG_GROUP_RELATION, index=i)
            for i, row in enumerate(lattice.basis)
        )
        return LatticeBundle(lattice=lattice, places=system, generators=gens, model=model)

    raise ValueError(f"unknown selector {selector!r}")


def oracle_build_ramified_inert(model: HyperellipticModel) -> IntegerLattice:
    """Class-group-kernel construction of the ramified+inert lattice.

    When f splits the subgroup generated by the ramified classes is the known
    (Z/2)^{2g} with its standard embedding; otherwise it is extracted from
    the enumerated class group.  Serves as the independent oracle for the
    generator-based builder.
    """
    system = PlaceSystem.ramified_inert(model)
    if system.r == 2 * model.genus + 2:
        group, embedding = two_torsion_classes(model)
        return kernel_lattice(
            group, embedding.images, degrees=system.degrees, labels=system.labels
        )
    jac = jacobian_group(model)
    place_images = jac.embedding_for(system).images
    for img in place_images:
        if jac.group.element_order(img) > 2:
            raise AssertionError("ramified classes must be two-torsion")
    # The subgroup generated by the place classes, rebuilt as an abstract
    # (Z/2)^k with explicit coordinates (inert classes are already trivial).
    k = 0
    span: dict[tuple[int, ...], tuple[int, ...]] = {jac.group.identity(): ()}
    for img in place_images:
        if img in span:
            continue
        span = {elem: coord + (0,) for elem, coord in span.items()} | {
            jac.group.add(elem, img): coord + (1,) for elem, coord in span.items()
        }
        k += 1
    group = FiniteAbelianGroup((2,) * k) if k else FiniteAbelianGroup(())
    images = tuple(span[img] for img in place_images)
    return kernel_lattice(group, images, degrees=system.degrees, labels=system.labels)


def h0_from_index(index: int, degrees: Sequence[int]) -> int:
    """Recover h_0 from [A_n : L] = (prod d_i / gcd d_i) * h_0."""
    import math

    prod = math.prod(degrees)
    g = math.gcd(*degrees)
    weight = prod // g
    if index % weight != 0:
        raise ValueError("index is not a multiple of the degree weight")
    return index // weight
