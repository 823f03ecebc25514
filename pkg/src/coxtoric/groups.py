"""Diagonalizable subgroups of the standard torus and monomial matrices.

A closed subgroup of (K*)^m is encoded by the lattice of characters that
vanish on it (the relation lattice); the saturation of that lattice cuts
out the identity component and the torsion of its cokernel is the group
of components.  The finite linear parts that normalize the diagonal torus
are fixed here, as a modeling choice, to be monomial matrices: coordinate
permutations combined with root-of-unity scalings, the latter represented
purely by exponents in Q/Z (no cyclotomic arithmetic).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import HypothesisError, ShapeError
from .intlin import (
    IntMatrix,
    Vector,
    cokernel_invariants,
    kernel_basis,
    lattice_canonical_form,
    lattice_membership,
    smith_normal_form,
    vector_gcd,
)


@dataclass(frozen=True)
class DiagonalizableSubgroup:
    """Subgroup of (K*)^ambient cut out by the column lattice of `relations`."""

    ambient: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.rows != self.ambient:
            raise ShapeError(
                f"relation lattice lives in Z^{self.relations.rows}, ambient is {self.ambient}")

    @property
    def dimension(self) -> int:
        return self.ambient - self.relations.rank()

    def is_connected(self) -> bool:
        _, torsion = cokernel_invariants(self.relations)
        return torsion == ()

    def canonical_relations(self) -> IntMatrix:
        return lattice_canonical_form(self.relations)

    @staticmethod
    def full_torus(ambient: int) -> DiagonalizableSubgroup:
        return DiagonalizableSubgroup(ambient, IntMatrix.zero(ambient, 0))


@dataclass(frozen=True)
class WeightAction:
    """Diagonal torus action on K^m: column i is the character scaling z_i."""

    torus_rank: int
    weights: IntMatrix

    def __post_init__(self):
        if self.weights.rows != self.torus_rank:
            raise ShapeError(
                f"weight matrix has {self.weights.rows} rows, torus rank is {self.torus_rank}")


@dataclass(frozen=True)
class MonomialMatrix:
    """Permutation-plus-scaling automorphism of K^m.

    Coordinate hyperplane V(z_i) is sent to V(z_{perm[i]}); scalars[i] is
    the exponent q of the root of unity multiplying coordinate i of the
    output, as an element of Q/Z reduced into [0, 1).
    """

    perm: tuple[int, ...]
    scalars: tuple[Fraction, ...]

    def __post_init__(self):
        m = len(self.perm)
        if sorted(self.perm) != list(range(m)):
            raise ShapeError(f"{self.perm} is not a permutation of 0..{m - 1}")
        if len(self.scalars) != m:
            raise ShapeError("need one scalar exponent per coordinate")
        object.__setattr__(self, "scalars", tuple(Fraction(s) % 1 for s in self.scalars))

    @property
    def size(self) -> int:
        return len(self.perm)

    @staticmethod
    def identity(m: int) -> MonomialMatrix:
        return MonomialMatrix(tuple(range(m)), (Fraction(0),) * m)

    def _perm_inverse(self) -> tuple[int, ...]:
        inv = [0] * self.size
        for i, p in enumerate(self.perm):
            inv[p] = i
        return tuple(inv)

    def compose(self, other: MonomialMatrix) -> MonomialMatrix:
        """self after other."""
        if self.size != other.size:
            raise ShapeError("monomial matrices of different sizes")
        inv = self._perm_inverse()
        perm = tuple(self.perm[other.perm[i]] for i in range(self.size))
        scalars = tuple(self.scalars[i] + other.scalars[inv[i]] for i in range(self.size))
        return MonomialMatrix(perm, scalars)

    def inverse(self) -> MonomialMatrix:
        inv = self._perm_inverse()
        scalars = tuple(-self.scalars[self.perm[i]] for i in range(self.size))
        return MonomialMatrix(inv, scalars)

    def order(self) -> int:
        ident = MonomialMatrix.identity(self.size)
        power = self
        n = 1
        while power != ident:
            power = power.compose(self)
            n += 1
        return n


@dataclass(frozen=True)
class HyperplanePermutationReport:
    pi: tuple[int, ...]
    fixes_zero_support: bool
    permutes_positive_support: bool


def subgroup_from_weights(action: WeightAction) -> DiagonalizableSubgroup:
    """Closure of the image of the torus in (K*)^m under the diagonal action."""
    m = action.weights.cols
    relations = IntMatrix.from_columns(kernel_basis(action.weights), rows=m)
    return DiagonalizableSubgroup(m, relations)


def is_effective(action: WeightAction) -> bool:
    """Whether the weight columns generate the full character lattice of the
    torus, i.e. the action has trivial kernel."""
    return cokernel_invariants(action.weights) == (0, ())


def classify_quotient(group: DiagonalizableSubgroup) -> Vector | None:
    """Classify the quotient of K^m by a connected codimension-one subtorus.

    The invariant monomials form the rank-one lattice of characters
    vanishing on the subgroup.  If its primitive generator a (up to sign)
    is componentwise nonnegative, the quotient map is the single monomial
    z^a, with relatively prime nonnegative exponents: returns a.  Otherwise
    there are no nonconstant invariant monomials with nonnegative exponents
    and the quotient is a point: returns None.
    """
    m = group.ambient
    if group.dimension != m - 1:
        raise HypothesisError(
            f"subgroup has dimension {group.dimension}, expected {m - 1}")
    if not group.is_connected():
        raise HypothesisError("subgroup is not connected")
    gen = group.canonical_relations().column(0)
    if all(x >= 0 for x in gen):
        return gen
    if all(x <= 0 for x in gen):
        return tuple(-x for x in gen)
    return None


def contains_coordinate_subtorus(group: DiagonalizableSubgroup, i: int) -> bool:
    """Whether the one-parameter subgroup in coordinate i lies in the group
    (all defining characters vanish on it)."""
    if not 0 <= i < group.ambient:
        raise ShapeError(f"coordinate {i} out of range for ambient {group.ambient}")
    return all(group.relations.entries[i][j] == 0 for j in range(group.relations.cols))


def commutes_with_torus(g: MonomialMatrix, group: DiagonalizableSubgroup) -> bool:
    """Whether conjugation by the monomial matrix preserves the diagonal
    subgroup, i.e. its coordinate permutation maps the relation lattice to
    itself.

    This is the normalizer condition; see centralizes_torus for elementwise
    commutation, which is strictly stronger.
    """
    if g.size != group.ambient:
        raise ShapeError("monomial matrix size does not match ambient rank")
    inv = g._perm_inverse()
    permuted = IntMatrix.from_columns(
        [tuple(col[inv[i]] for i in range(g.size))
         for col in group.relations.columns()],
        rows=group.ambient)
    return lattice_canonical_form(permuted) == group.canonical_relations()


def centralizes_torus(g: MonomialMatrix, group: DiagonalizableSubgroup) -> bool:
    """Whether the monomial matrix commutes elementwise with the subgroup.

    Elementwise commutation forces t_{perm(i)} = t_i for every group element
    t, i.e. every comparison character e_i - e_{perm(i)} must vanish on the
    subgroup, which happens exactly when it lies in the relation lattice.
    """
    if g.size != group.ambient:
        raise ShapeError("monomial matrix size does not match ambient rank")
    for i, pi in enumerate(g.perm):
        if pi == i:
            continue
        chi = [0] * g.size
        chi[i] += 1
        chi[pi] -= 1
        if not lattice_membership(group.relations, chi):
            return False
    return True


def hyperplane_permutation_report(g: MonomialMatrix, exponents: Sequence[int]) -> HyperplanePermutationReport:
    """How the monomial matrix permutes coordinate hyperplanes relative to
    the support of a quotient monomial z^exponents (exponents >= 0)."""
    if len(exponents) != g.size:
        raise ShapeError("exponent vector length does not match matrix size")
    if any(a < 0 for a in exponents):
        raise HypothesisError("exponent vector must be componentwise nonnegative")
    zero = [i for i, a in enumerate(exponents) if a == 0]
    positive = {i for i, a in enumerate(exponents) if a > 0}
    return HyperplanePermutationReport(
        pi=g.perm,
        fixes_zero_support=all(g.perm[i] == i for i in zero),
        permutes_positive_support={g.perm[i] for i in positive} == positive,
    )


def character_root_isogeny(xi: Sequence[int], d: int) -> tuple[IntMatrix, Vector]:
    """An isogeny kappa of the torus with kappa^T * xi = d * xi0.

    Construction: a unimodular U sends xi to (g, 0, ..., 0) with g = gcd(xi);
    kappa^T = diag(d / gcd(d, g), 1, ..., 1) * U then satisfies the identity
    with xi0 integral, and |det kappa| = d / gcd(d, g), which is minimal.
    For xi = 0 the identity matrix works with xi0 = 0.
    """
    if d < 1:
        raise ValueError(f"isogeny exponent d must be >= 1, got {d}")
    r = len(xi)
    if r < 1:
        raise ShapeError("character must live in a torus of rank >= 1")
    xi = tuple(int(x) for x in xi)
    g = vector_gcd(xi)
    if g == 0:
        return IntMatrix.identity(r), (0,) * r
    snf = smith_normal_form(IntMatrix.from_columns([xi], rows=r))
    u = snf.U
    if snf.V.entries[0][0] == -1:
        u = IntMatrix.from_rows(
            [tuple(-x for x in u.row(0))] + [u.row(i) for i in range(1, r)])
    assert u.apply(xi) == (g,) + (0,) * (r - 1)
    factor = d // gcd(d, g)
    kappa_t = IntMatrix.diagonal([factor] + [1] * (r - 1)) @ u
    image = kappa_t.apply(xi)
    assert all(x % d == 0 for x in image)
    xi0 = tuple(x // d for x in image)
    return kappa_t.transpose(), xi0


def decompose_subgroup(group: DiagonalizableSubgroup) -> tuple[int, tuple[int, ...]]:
    """(torus rank, cyclic component orders in divisibility order) of the
    decomposition into a torus times finite cyclic groups."""
    return cokernel_invariants(group.relations)
