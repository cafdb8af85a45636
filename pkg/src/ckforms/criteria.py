"""Executable necessary/sufficient tests: the rank inequalities, the
dimension equality for cocompactness, and the exact Weyl-orbit properness
criterion for explicitly embedded split subspaces.

The embedded checker trusts the caller that the two subspaces really are
the (conjugated) maximally split abelian subspaces of the subgroups in
question; producing those coordinates for an abstract embedding is the
caller's responsibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import ReductiveDescriptor, derived_invariants
from .errors import DimensionMismatch
from .linalg import (
    Vector,
    frac,
    is_zero,
    kernel_basis,
    primitive,
    reduced_basis,
    vadd,
    vscale,
    zero_vector,
)
from .rootspace import RootSystem, check_dimension, require_in_span
from .weyl import DEFAULT_CAP, WeylElement, dominant_representative, enumerate_weyl, is_antipodal

OBSTRUCTION_FOUND = "ObstructionFound"
NO_OBSTRUCTION = "NoObstruction"


@dataclass(frozen=True)
class Subspace:
    """Subspace of the ambient space of a root system, inside the root span.

    A reduced basis is computed once by exact elimination; `dim` is its size.
    """

    system: RootSystem
    spanning_vectors: tuple[Vector, ...]
    basis: tuple[Vector, ...] = field(init=False, compare=False)
    dim: int = field(init=False, compare=False)

    def __post_init__(self):
        for v in self.spanning_vectors:
            check_dimension(self.system, v)
            require_in_span(self.system, v)
        basis = reduced_basis(self.spanning_vectors)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "dim", len(basis))


def subspace_from_text(text: str, system: RootSystem) -> Subspace:
    """Parse the plain-text subspace format: '#' comment lines, one
    spanning vector per non-comment line, entries integers or 'p/q'."""
    vectors = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        vectors.append(tuple(frac(tok) for tok in line.split()))
    return Subspace(system=system, spanning_vectors=tuple(vectors))


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: int
    passed: bool


@dataclass(frozen=True)
class PropernessReport:
    checks: tuple[Check, ...]
    overall: str


def necessary_conditions(
    g: ReductiveDescriptor, h: ReductiveDescriptor, l: ReductiveDescriptor
) -> PropernessReport:
    """Rank inequalities that any proper action must satisfy, regardless of
    the embedding.  A failed check rules the action out; passing means only
    that these tests found no obstruction."""
    gi, hi, li = derived_invariants(g), derived_invariants(h), derived_invariants(l)
    checks = (
        Check("real_rank", li.rank_R + hi.rank_R, gi.rank_R,
              li.rank_R + hi.rank_R <= gi.rank_R),
        Check("ahyp_rank", li.ahyp + hi.ahyp, gi.ahyp,
              li.ahyp + hi.ahyp <= gi.ahyp),
    )
    overall = NO_OBSTRUCTION if all(c.passed for c in checks) else OBSTRUCTION_FOUND
    return PropernessReport(checks=checks, overall=overall)


@dataclass(frozen=True)
class CocompactReport:
    d_g: int
    d_h: int
    d_l: int
    equal: bool
    required_d: int


def cocompact_dimension_check(
    g: ReductiveDescriptor, h: ReductiveDescriptor, l: ReductiveDescriptor
) -> CocompactReport:
    """Exact dimension test: given a proper action, the double coset space
    is compact iff d(l) + d(h) = d(g).  `required_d` is d(g) - d(h), the
    value d(l) would have to hit."""
    d_g = derived_invariants(g).d
    d_h = derived_invariants(h).d
    d_l = derived_invariants(l).d
    return CocompactReport(
        d_g=d_g, d_h=d_h, d_l=d_l,
        equal=(d_l + d_h == d_g),
        required_d=d_g - d_h,
    )


@dataclass(frozen=True)
class ProperCheck:
    proper: bool
    w_index: int | None = None
    element: WeylElement | None = None
    witness: Vector | None = None

    @property
    def verdict(self) -> str:
        return "Proper" if self.proper else "NotProper"


def check_proper_embedded(
    system_g: RootSystem,
    a_h: Subspace,
    a_l: Subspace,
    cap: int = DEFAULT_CAP,
) -> ProperCheck:
    """Exact orbit test over the whole Weyl group.

    Proper iff every group element w keeps w.(a_l) intersecting a_h only
    in zero, decided by an exact rank computation on the stacked bases.
    On failure, reports the first offending w in canonical enumeration
    order together with a nonzero witness vector in the intersection,
    normalized to a primitive integer vector with positive leading entry.
    """
    for sub, name in ((a_h, "a_h"), (a_l, "a_l")):
        if sub.system != system_g:
            raise DimensionMismatch(f"{name} was built against system "
                                    f"{sub.system.label}, not {system_g.label}")
    if a_h.dim == 0 or a_l.dim == 0:
        return ProperCheck(proper=True)
    for idx, w in enumerate(enumerate_weyl(system_g, cap)):
        moved = [w.apply(b) for b in a_l.basis]
        cols = list(a_h.basis) + moved
        rows = [tuple(col[i] for col in cols) for i in range(system_g.ambient_dim)]
        kernel = kernel_basis(rows)
        if kernel:
            coeffs = kernel[0]
            witness = zero_vector(system_g.ambient_dim)
            for c, b in zip(coeffs[: a_h.dim], a_h.basis):
                witness = vadd(witness, vscale(c, b))
            assert not is_zero(witness)
            return ProperCheck(proper=False, w_index=idx, element=w,
                               witness=primitive(witness))
    return ProperCheck(proper=True)


@dataclass(frozen=True)
class AntipodalReport:
    antipodal: bool
    dominant_rep: Vector


def antipodal_orbit_check(system_g: RootSystem, x: Vector) -> AntipodalReport:
    """Whether the orbit of x is antipodal in the ambient system, plus the
    dominant representative naming the orbit."""
    return AntipodalReport(
        antipodal=is_antipodal(system_g, x),
        dominant_rep=dominant_representative(system_g, x),
    )
