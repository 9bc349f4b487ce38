"""Indeterminacy subgroups of Z, quotient maps, and sufficient conditions for a Z-valued invariant.

A subgroup of ``Z`` is ``dZ`` for a unique ``d >= 0``: ``d = 0`` is the zero
subgroup (so the quotient is ``Z`` itself) and ``d = 1`` is all of ``Z`` (the
quotient is trivial).

For the implemented surfaces the subgroups are exact:

* plane and punctured plane: the ambient surface is not closed, so every
  loop family ``S^1 x S^1 -> M`` has degree 0 and the homology classes of loops
  pair trivially; ``A = B = 0``.
* flat torus, loop class ``(m, n)``: a family with circle-direction class
  ``(a, b)`` has degree ``m*b - n*a`` (the determinant of the induced map on
  ``H_1``), and the intersection pairing of ``(m, n)`` with ``(a, b)`` is the
  same number.  Both subgroups are therefore ``gcd(m, n) Z``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .surface import ComponentDesc


@dataclass(frozen=True)
class QuotientInt:
    """An element of ``Z / dZ`` (``d = 0`` meaning ``Z``), stored reduced to ``[0, d)``."""

    modulus: int
    value: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be >= 0")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __add__(self, other: QuotientInt) -> QuotientInt:
        self._check(other)
        return QuotientInt(self.modulus, self.value + other.value)

    def __sub__(self, other: QuotientInt) -> QuotientInt:
        self._check(other)
        return QuotientInt(self.modulus, self.value - other.value)

    def __neg__(self) -> QuotientInt:
        return QuotientInt(self.modulus, -self.value)

    def _check(self, other: QuotientInt) -> None:
        if other.modulus != self.modulus:
            raise ValueError(f"cannot combine Z/{self.modulus} with Z/{other.modulus}")

    def smallest_abs(self) -> int:
        """``min |z|`` over integers ``z`` in this class."""
        if self.modulus == 0:
            return abs(self.value)
        return min(self.value, self.modulus - self.value)

    @property
    def group(self) -> str:
        return group_name(self.modulus)

    def __str__(self) -> str:
        return f"{self.value} in {self.group}"


def group_name(d: int) -> str:
    if d == 0:
        return "Z"
    if d == 1:
        return "0"
    return f"Z/{d}Z"


@dataclass(frozen=True)
class Subgroup:
    """The subgroup ``dZ`` of the integers."""

    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("d must be >= 0")

    def __contains__(self, z: int) -> bool:
        return z == 0 if self.d == 0 else z % self.d == 0

    @property
    def quotient_name(self) -> str:
        return group_name(self.d)


def _class_gcd(comp: ComponentDesc) -> int:
    if not comp.surface.is_torus:
        return 0
    m, n = comp.torus_class
    return math.gcd(abs(m), abs(n))


def subgroup_A(comp: ComponentDesc) -> Subgroup:
    """Degrees of loop families in the component ``comp``."""
    return Subgroup(_class_gcd(comp))


def subgroup_B(comp: ComponentDesc) -> Subgroup:
    """Intersection pairings of the component's loop class with all of ``H_1(M)``."""
    return Subgroup(_class_gcd(comp))


def sum_subgroups(a: Subgroup, b: Subgroup) -> Subgroup:
    return Subgroup(math.gcd(a.d, b.d))


def quotient_project(a: Subgroup, z: int) -> QuotientInt:
    return QuotientInt(a.d, z)


@dataclass(frozen=True)
class ManifoldMeta:
    """Homological data about the source ``N`` and the target ``M`` plus asserted hypotheses.

    ``betti_N`` and ``betti_M`` list Betti numbers from degree 0 upward;
    missing entries count as 0.  The ``pi1_*`` and curvature flags are
    hypotheses the caller asserts; nothing here can derive them.
    ``class_finite_order`` asserts that the component's maps send the
    fundamental class of ``N`` to a finite-order homology class.
    """

    betti_N: tuple[int, ...]
    betti_M: tuple[int, ...]
    M_closed: bool
    component_null_homotopic: bool = False
    N_is_sphere: bool = False
    M_is_rational_homology_sphere: bool = False
    pi1_trivial_image: bool = False
    pi1_infinite_no_finite_index_Z: bool = False
    negatively_curved_closed: bool = False
    class_finite_order: bool = False

    def __post_init__(self):
        object.__setattr__(self, "betti_N", tuple(int(b) for b in self.betti_N))
        object.__setattr__(self, "betti_M", tuple(int(b) for b in self.betti_M))
        if not self.betti_N or not self.betti_M:
            raise ValueError("Betti lists must be nonempty")
        if self.betti_N[0] != 1 or self.betti_M[0] != 1:
            raise ValueError("N and M must be connected (b_0 = 1)")
        if any(b < 0 for b in self.betti_N + self.betti_M):
            raise ValueError("Betti numbers are nonnegative")


@dataclass(frozen=True)
class ConditionVerdict:
    held: bool
    by_assertion: bool = False
    witness: int | None = None  # the degree i that makes a Betti condition hold
    note: str = ""


@dataclass(frozen=True)
class ConditionsReport:
    conditions: dict[int, ConditionVerdict] = field(default_factory=dict)
    finite_order_class: bool = False

    @property
    def A_is_Z(self) -> bool:
        return any(v.held for v in self.conditions.values())

    @property
    def verdict(self) -> str:
        """``"Z"`` when some condition guarantees a Z-valued invariant, else ``"inconclusive"``.

        The conditions are sufficient only, so inconclusive does not mean the
        subgroup is nonzero.
        """
        return "Z" if self.A_is_Z else "inconclusive"

    @property
    def B_is_Z(self) -> bool:
        return self.A_is_Z and self.finite_order_class

    def to_dict(self) -> dict:
        return {
            "conditions": {
                str(i): {"held": v.held, "by_assertion": v.by_assertion,
                         "witness": v.witness, "note": v.note}
                for i, v in sorted(self.conditions.items())
            },
            "A_trivial": self.A_is_Z,
            "A_verdict": self.verdict,
            "moving_point_group_is_Z": self.B_is_Z,
            "group_A_quotient": "Z" if self.A_is_Z else "unknown",
            "group_B_quotient": "Z" if self.B_is_Z else "unknown",
        }


def _betti(bs: tuple[int, ...], i: int) -> int:
    return bs[i] if 0 <= i < len(bs) else 0


def check_conditions(meta: ManifoldMeta) -> ConditionsReport:
    top = max(len(meta.betti_M), len(meta.betti_N) + 1)
    bn, bm = meta.betti_N, meta.betti_M

    c1 = next((i for i in range(1, top)
               if _betti(bn, i) + _betti(bn, i - 1) < _betti(bm, i)), None)
    c2 = None
    if meta.component_null_homotopic:
        c2 = next((i for i in range(1, top) if _betti(bn, i - 1) < _betti(bm, i)), None)
    c3 = (meta.N_is_sphere and meta.component_null_homotopic
          and not meta.M_is_rational_homology_sphere)
    c4 = meta.pi1_trivial_image and meta.pi1_infinite_no_finite_index_Z
    c5 = meta.negatively_curved_closed

    conditions = {
        0: ConditionVerdict(not meta.M_closed, note="M is not closed"),
        1: ConditionVerdict(c1 is not None, witness=c1,
                            note="b_i(N) + b_(i-1)(N) < b_i(M)"),
        2: ConditionVerdict(c2 is not None, witness=c2,
                            note="null-homotopic component and b_(i-1)(N) < b_i(M)"),
        3: ConditionVerdict(c3, note="N a sphere, null-homotopic component, "
                                     "M not a rational homology sphere"),
        4: ConditionVerdict(c4, by_assertion=True,
                            note="trivial image on pi_1, pi_1(M) infinite without a "
                                 "finite-index Z"),
        5: ConditionVerdict(c5, by_assertion=True,
                            note="closed with a negatively curved metric"),
    }
    finite = meta.class_finite_order or meta.component_null_homotopic
    return ConditionsReport(conditions, finite_order_class=finite)
