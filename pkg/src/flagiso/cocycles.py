"""Roots of unity as exponents mod m, and 2-cocycles on subgroup supports.

A scalar is never a float: an element of mu_m is its exponent, an integer mod
m.  A cocycle sigma on a support subgroup H stores the exponent table of its
values, normalized so that sigma(e,h) = sigma(h,e) = 1 (exponent 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Mapping

from .errors import InvalidInput
from .groups import Subgroup
from .modlinalg import solve_congruences

__all__ = [
    "RootScalar",
    "Cocycle",
    "Corrector",
    "validate_cocycle",
    "trivial_cocycle",
    "cohomologous",
    "is_corrector",
    "transport",
]


@dataclass(frozen=True)
class RootScalar:
    """A root of unity in mu_order, stored as its exponent."""

    exp: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise InvalidInput(f"root order must be >= 1, got {self.order}")
        object.__setattr__(self, "exp", self.exp % self.order)

    @classmethod
    def one(cls, order: int = 1) -> RootScalar:
        return cls(0, order)

    def embed(self, new_order: int) -> RootScalar:
        if new_order % self.order:
            raise InvalidInput(f"cannot embed mu_{self.order} into mu_{new_order}")
        return RootScalar(self.exp * (new_order // self.order), new_order)

    def __mul__(self, other: RootScalar) -> RootScalar:
        m = lcm(self.order, other.order)
        return RootScalar(self.embed(m).exp + other.embed(m).exp, m)

    def inv(self) -> RootScalar:
        return RootScalar(-self.exp, self.order)

    def is_one(self) -> bool:
        return self.exp == 0


@dataclass(frozen=True)
class Cocycle:
    """A normalized 2-cocycle on ``support`` with values in mu_order.

    ``values[i][j]`` is the exponent of sigma(h_i, h_j) where h_i, h_j run over
    ``support.members`` in order.  Use validate_cocycle to construct.
    """

    support: Subgroup
    order: int
    values: tuple[tuple[int, ...], ...]
    _pos: dict[int, int] = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        self._pos.update({h: i for i, h in enumerate(self.support.members)})

    def val(self, a: int, b: int) -> int:
        """Exponent of sigma(a, b); a, b are parent-group element indices."""
        return self.values[self._pos[a]][self._pos[b]]

    def scalar(self, a: int, b: int) -> RootScalar:
        return RootScalar(self.val(a, b), self.order)


def trivial_cocycle(support: Subgroup, order: int = 1) -> Cocycle:
    n = len(support.members)
    return validate_cocycle(support, order, [[0] * n for _ in range(n)])


def validate_cocycle(support: Subgroup, order: int, values) -> Cocycle:
    """Check shape, normalization, and the cocycle identity on all triples."""
    if order < 1:
        raise InvalidInput(f"root order must be >= 1, got {order}", code="cocycle-shape")
    members = support.members
    n = len(members)
    if len(values) != n or any(len(row) != n for row in values):
        raise InvalidInput(
            f"cocycle table must be {n}x{n} following the support order",
            code="cocycle-shape",
        )
    tbl = []
    for row in values:
        out = []
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidInput(f"cocycle exponent {v!r} is not an integer", code="cocycle-shape")
            out.append(v % order)
        tbl.append(tuple(out))
    coc = Cocycle(support, order, tuple(tbl))
    grp = support.group
    e = grp.identity
    name = grp.name_of
    for h in members:
        if coc.val(e, h) or coc.val(h, e):
            raise InvalidInput(
                f"cocycle not normalized at ({name(e)},{name(h)})", code="cocycle-not-normalized"
            )
    for a in members:
        for b in members:
            ab = grp.mul(a, b)
            v_ab = coc.val(a, b)
            for c in members:
                # sigma(a,b) sigma(ab,c) = sigma(b,c) sigma(a,bc)
                lhs = (v_ab + coc.val(ab, c)) % order
                rhs = (coc.val(b, c) + coc.val(a, grp.mul(b, c))) % order
                if lhs != rhs:
                    raise InvalidInput(
                        "cocycle identity fails at triple "
                        f"({name(a)},{name(b)},{name(c)})",
                        code="cocycle-identity",
                    )
    return coc


@dataclass(frozen=True)
class Corrector:
    """A map mu: support -> mu_order, the scaling part of x_h -> mu(h) x'_h."""

    support: Subgroup
    order: int
    exps: tuple[int, ...]  # by support position

    def __post_init__(self):
        if len(self.exps) != len(self.support.members):
            raise InvalidInput("corrector length must match support size")
        object.__setattr__(self, "exps", tuple(v % self.order for v in self.exps))

    @classmethod
    def from_map(cls, support: Subgroup, order: int, exp_of: Mapping[int, int] | Callable[[int], int]) -> Corrector:
        get = exp_of.__getitem__ if isinstance(exp_of, Mapping) else exp_of
        return cls(support, order, tuple(get(h) for h in support.members))

    def exp_of(self, h: int) -> int:
        return self.exps[self.support.position_of(h)]

    def scalar_of(self, h: int) -> RootScalar:
        return RootScalar(self.exp_of(h), self.order)

    def embed(self, new_order: int) -> Corrector:
        if new_order % self.order:
            raise InvalidInput(f"cannot embed mu_{self.order} into mu_{new_order}")
        k = new_order // self.order
        return Corrector(self.support, new_order, tuple(v * k for v in self.exps))

    def inv(self) -> Corrector:
        return Corrector(self.support, self.order, tuple(-v for v in self.exps))


def _check_same_support(sigma: Cocycle, tau: Cocycle) -> None:
    if sigma.support.group != tau.support.group or sigma.support.members != tau.support.members:
        raise InvalidInput("cocycles live on different supports", code="support-mismatch")


def cohomologous(sigma: Cocycle, tau: Cocycle) -> Corrector | None:
    """A corrector mu making x_h -> mu(h) x'_h an isomorphism K^sigma[H] -> K^tau[H].

    Both cocycles are embedded into mu_lcm and the exponent system
    u(a) + u(b) - u(ab) = s(a,b) - t(a,b) (mod lcm) is solved exactly; None
    means the cocycles are not cohomologous.
    """
    _check_same_support(sigma, tau)
    sub = sigma.support
    grp = sub.group
    members = sub.members
    L = lcm(sigma.order, tau.order)
    ks, kt = L // sigma.order, L // tau.order
    e = grp.identity
    unknowns = [h for h in members if h != e]
    col = {h: i for i, h in enumerate(unknowns)}

    rows: list[list[int]] = []
    rhs: list[int] = []
    for a in unknowns:
        for b in unknowns:
            coeff = [0] * len(unknowns)
            coeff[col[a]] += 1
            coeff[col[b]] += 1
            ab = grp.mul(a, b)
            if ab != e:
                coeff[col[ab]] -= 1
            rows.append(coeff)
            rhs.append(ks * sigma.val(a, b) - kt * tau.val(a, b))
    sol = solve_congruences(rows, rhs, L)
    if sol is None:
        return None
    exps = {e: 0}
    exps.update({h: sol[col[h]] for h in unknowns})
    mu = Corrector.from_map(sub, L, exps)
    assert is_corrector(mu, sigma, tau), "solver returned a non-corrector"
    return mu


def is_corrector(mu: Corrector, sigma: Cocycle, tau: Cocycle) -> bool:
    """Exact check of sigma(a,b) mu(ab) = mu(a) mu(b) tau(a,b) on all pairs."""
    _check_same_support(sigma, tau)
    if mu.support.group != sigma.support.group or mu.support.members != sigma.support.members:
        return False
    grp = sigma.support.group
    L = lcm(mu.order, sigma.order, tau.order)
    km, ks, kt = L // mu.order, L // sigma.order, L // tau.order
    for a in sigma.support.members:
        for b in sigma.support.members:
            lhs = ks * sigma.val(a, b) + km * mu.exp_of(grp.mul(a, b))
            rhs = km * (mu.exp_of(a) + mu.exp_of(b)) + kt * tau.val(a, b)
            if (lhs - rhs) % L:
                return False
    return True


def transport(sigma: Cocycle, alpha: Mapping[int, int], target: Subgroup) -> Cocycle:
    """The cocycle sigma' on ``target`` with sigma'(alpha(h), alpha(h')) = sigma(h, h').

    ``alpha`` must be a bijective homomorphism from sigma's support onto
    ``target`` (element indices of the respective parent groups).
    """
    src = sigma.support
    if sorted(alpha.keys()) != list(src.members):
        raise InvalidInput("transport map domain must be the source support", code="bad-isomorphism")
    if sorted(alpha.values()) != list(target.members):
        raise InvalidInput("transport map must be onto the target support", code="bad-isomorphism")
    gs, gt = src.group, target.group
    for a in src.members:
        for b in src.members:
            if alpha[gs.mul(a, b)] != gt.mul(alpha[a], alpha[b]):
                raise InvalidInput(
                    "transport map is not a homomorphism at "
                    f"({gs.name_of(a)},{gs.name_of(b)})",
                    code="bad-isomorphism",
                )
    pos_t = {h: i for i, h in enumerate(target.members)}
    n = len(target.members)
    tbl = [[0] * n for _ in range(n)]
    for a in src.members:
        for b in src.members:
            tbl[pos_t[alpha[a]]][pos_t[alpha[b]]] = sigma.val(a, b)
    return validate_cocycle(target, sigma.order, tbl)
