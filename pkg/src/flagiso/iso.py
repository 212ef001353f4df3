"""Isomorphism and equivalence decisions with checkable witnesses.

YES answers carry an explicit monomial map (basis element to scalar times
basis element) that verify_witness re-checks exhaustively; NO answers carry
either a separating invariant or an exhausted-search certificate.  The degree
tuple relation underlying every isomorphism witness is

    tuple'[i] = tuple[sigma[i]] * h[sigma[i]] * g        (all i)

with g the flag shift, sigma a block-preserving permutation (target position
to source position), and h correctors in the division support.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm

from .algebras import BasisElem, GradedAlgebra, invariants, realize
from .cocycles import Corrector, is_corrector
from .config import classify_budget
from .division import GradedDivisionAlgebra, iso_division, shift_conjugate, equiv_division
from .errors import BudgetExceeded, GroupMismatch, InvalidInput, UnsupportedInput
from .groups import Group, left_coset
from .presentations import BlockShape, FlagPresentation, make_presentation

__all__ = [
    "ISOMORPHIC",
    "NOT_ISOMORPHIC",
    "EQUIVALENT",
    "NOT_EQUIVALENT",
    "INCONCLUSIVE",
    "Verdict",
    "InvariantMismatch",
    "SearchExhausted",
    "IsoWitness",
    "WitnessReport",
    "EquivWitness",
    "iso_pairs",
    "iso_algebras",
    "build_witness",
    "verify_witness",
    "invert_witness",
    "compose_witness",
    "equiv_check",
    "equiv_elementary",
    "verify_equiv_witness",
    "classify",
    "Classification",
    "canonical_form",
]

ISOMORPHIC = "ISOMORPHIC"
NOT_ISOMORPHIC = "NOT_ISOMORPHIC"
EQUIVALENT = "EQUIVALENT"
NOT_EQUIVALENT = "NOT_EQUIVALENT"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class InvariantMismatch:
    """A computable invariant separating the two inputs."""

    detail: str


@dataclass(frozen=True)
class SearchExhausted:
    """The complete criterion search failed; records what was searched."""

    shifts_tried: int
    detail: str
    invariant_mismatch: InvariantMismatch | None = None


@dataclass
class Verdict:
    kind: str
    witness: IsoWitness | None = None
    equiv_witness: EquivWitness | None = None
    certificate: InvariantMismatch | SearchExhausted | None = None
    reason: str | None = None


@dataclass
class IsoWitness:
    """Checkable isomorphism data plus the monomial map it induces."""

    source: FlagPresentation
    target: FlagPresentation
    shift: int
    sigma: tuple[int, ...]  # target position -> source position
    correctors: tuple[int, ...]  # by source position, in supp D
    mu: Corrector  # corrector for shift_conjugate(D, shift) vs D'
    scalar_order: int
    mapping: dict[BasisElem, tuple[BasisElem, int]] = field(repr=False)


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    checked_pairs: int
    failures: tuple[str, ...]


# -- witness construction ------------------------------------------------------


def _validate_witness_data(
    p: FlagPresentation,
    p2: FlagPresentation,
    shift: int,
    sigma: tuple[int, ...],
    correctors: tuple[int, ...],
    mu: Corrector,
) -> None:
    if p.group != p2.group:
        raise GroupMismatch("witness endpoints are graded by different groups")
    grp = p.group
    if p.shape != p2.shape:
        raise InvalidInput("invalid witness data: block shapes differ", code="invalid-witness-data")
    n = p.shape.n
    if not 0 <= shift < grp.size:
        raise InvalidInput("invalid witness data: shift out of range", code="invalid-witness-data")
    if sorted(sigma) != list(range(n)):
        raise InvalidInput(
            "invalid witness data: sigma is not a permutation", code="invalid-witness-data"
        )
    if any(p.shape.block_of(i) != p.shape.block_of(sigma[i]) for i in range(n)):
        raise InvalidInput(
            "invalid witness data: sigma does not preserve blocks", code="invalid-witness-data"
        )
    sup = set(p.division.support.members)
    if len(correctors) != n or any(h not in sup for h in correctors):
        raise InvalidInput(
            "invalid witness data: correctors must lie in the division support",
            code="invalid-witness-data",
        )
    for i in range(n):
        k = sigma[i]
        want = grp.mul(grp.mul(p.degrees[k], correctors[k]), shift)
        if p2.degrees[i] != want:
            raise InvalidInput(
                f"invalid witness data: tuple relation fails at position {i + 1}: "
                f"{grp.name_of(p2.degrees[i])} != {grp.name_of(want)}",
                code="invalid-witness-data",
            )
    shifted = shift_conjugate(p.division, shift)
    if shifted.support.members != p2.division.support.members:
        raise InvalidInput(
            "invalid witness data: the shift does not carry the support onto the target support",
            code="invalid-witness-data",
        )
    if mu.support.members != p2.division.support.members:
        raise InvalidInput(
            "invalid witness data: corrector support differs from the target support",
            code="invalid-witness-data",
        )
    if not is_corrector(mu, shifted.cocycle, p2.division.cocycle):
        raise InvalidInput(
            "invalid witness data: mu is not a corrector for the shifted cocycle pair",
            code="invalid-witness-data",
        )


def _derive_mapping(
    p: FlagPresentation,
    p2: FlagPresentation,
    shift: int,
    sigma: tuple[int, ...],
    correctors: tuple[int, ...],
    mu: Corrector,
    alg: GradedAlgebra,
) -> tuple[dict[BasisElem, tuple[BasisElem, int]], int]:
    """The monomial map of the pair isomorphism determined by the witness data.

    With a_k = g^-1 h_k^-1 g and c = g^-1 h g, basis element (k,l,h) goes to
    (sigma^-1 k, sigma^-1 l, a_k c a_l^-1) scaled by
    mu(c) * sigma'(a_k, c) * sigma'(a_k c, a_l^-1) / sigma'(a_l, a_l^-1).
    """
    grp = p.group
    n = p.shape.n
    m2 = p2.division.order
    order = lcm(p.division.order, m2, mu.order)
    k2 = order // m2
    km = order // mu.order
    coc2 = p2.division.cocycle
    inv_sigma = [0] * n
    for i, s in enumerate(sigma):
        inv_sigma[s] = i
    a_of = [grp.conj(grp.inv(h), shift) for h in correctors]
    ainv_of = [grp.inv(a) for a in a_of]
    mapping: dict[BasisElem, tuple[BasisElem, int]] = {}
    for b in alg.basis:
        k, l, h = b
        c = grp.conj(h, shift)
        a = a_of[k]
        binv = ainv_of[l]
        ac = grp.mul(a, c)
        exp = km * mu.exp_of(c) + k2 * (
            coc2.val(a, c) + coc2.val(ac, binv) - coc2.val(a_of[l], binv)
        )
        target = BasisElem(inv_sigma[k], inv_sigma[l], grp.mul(ac, binv))
        mapping[b] = (target, exp % order)
    return mapping, order


def build_witness(
    p: FlagPresentation,
    p2: FlagPresentation,
    shift,
    sigma,
    correctors,
    mu: Corrector,
) -> IsoWitness:
    """Assemble and fully populate a witness; rejects data violating the relation."""
    from .division import _as_index

    grp = p.group
    shift_i = _as_index(grp, shift)
    sigma_t = tuple(sigma)
    corr_t = tuple(_as_index(grp, h) for h in correctors)
    _validate_witness_data(p, p2, shift_i, sigma_t, corr_t, mu)
    alg = realize(p)
    mapping, order = _derive_mapping(p, p2, shift_i, sigma_t, corr_t, mu, alg)
    return IsoWitness(p, p2, shift_i, sigma_t, corr_t, mu, order, mapping)


def verify_witness(alg: GradedAlgebra, alg2: GradedAlgebra, w: IsoWitness) -> WitnessReport:
    """Exhaustive exact check: bijective on bases, degree-preserving, multiplicative."""
    failures: list[str] = []
    basis = alg.basis
    dim = len(basis)
    if set(w.mapping) != set(basis):
        return WitnessReport(False, 0, ("map is not defined on exactly the source basis",))
    if dim != len(alg2.basis):
        return WitnessReport(False, 0, ("algebras have different dimensions",))

    order = w.scalar_order
    m1, m2 = alg.order, alg2.order
    if order % m1 or order % m2:
        return WitnessReport(False, 0, (f"scalar order {order} does not embed both mu_{m1} and mu_{m2}",))
    k1, k2 = order // m1, order // m2

    img_pos = [0] * dim
    img_exp = [0] * dim
    for pos, b in enumerate(basis):
        tgt, exp = w.mapping[b]
        tpos = alg2.index.get(tgt)
        if tpos is None:
            failures.append(f"image of {tuple(b)} is not a basis element: {tuple(tgt)}")
            continue
        img_pos[pos] = tpos
        img_exp[pos] = exp % order
    if failures:
        return WitnessReport(False, 0, tuple(failures))
    if len(set(img_pos)) != dim:
        failures.append("map is not injective on basis elements")
        return WitnessReport(False, 0, tuple(failures))

    for pos in range(dim):
        if alg2.degree[img_pos[pos]] != alg.degree[pos]:
            grp = alg.group
            failures.append(
                f"degree mismatch at {tuple(basis[pos])}: "
                f"{grp.name_of(alg.degree[pos])} -> {grp.name_of(alg2.degree[img_pos[pos]])}"
            )
    if failures:
        return WitnessReport(False, 0, tuple(failures))

    rows = [b.row for b in basis]
    cols = [b.col for b in basis]
    rows2 = [b.row for b in alg2.basis]
    cols2 = [b.col for b in alg2.basis]
    checked = 0
    for p1 in range(dim):
        c1 = cols[p1]
        ip1 = img_pos[p1]
        ic1 = cols2[ip1]
        e1 = img_exp[p1]
        for q in range(dim):
            src_zero = c1 != rows[q]
            tgt_zero = ic1 != rows2[img_pos[q]]
            checked += 1
            if src_zero:
                if not tgt_zero:
                    failures.append(
                        f"zero product {tuple(basis[p1])} * {tuple(basis[q])} maps to a nonzero product"
                    )
                continue
            if tgt_zero:
                failures.append(
                    f"nonzero product {tuple(basis[p1])} * {tuple(basis[q])} maps to a zero product"
                )
                continue
            s_exp, s_pos = alg.product_pos(p1, q)
            t_exp, t_pos = alg2.product_pos(ip1, img_pos[q])
            if t_pos != img_pos[s_pos]:
                failures.append(
                    f"product routing differs at {tuple(basis[p1])} * {tuple(basis[q])}"
                )
                continue
            lhs = k1 * s_exp + img_exp[s_pos]
            rhs = e1 + img_exp[q] + k2 * t_exp
            if (lhs - rhs) % order:
                failures.append(
                    f"scalar mismatch at {tuple(basis[p1])} * {tuple(basis[q])}: "
                    f"exponent {lhs % order} != {rhs % order} (mod {order})"
                )
    return WitnessReport(not failures, checked, tuple(failures))


def invert_witness(w: IsoWitness) -> IsoWitness:
    """Witness for the inverse isomorphism, built from inverted data."""
    p, p2 = w.source, w.target
    grp = p.group
    g = w.shift
    n = p.shape.n
    new_sigma = [0] * n
    for i in range(n):
        new_sigma[w.sigma[i]] = i
    new_corr = [0] * n
    for i in range(n):  # indexed by old target positions
        new_corr[i] = grp.conj(grp.inv(w.correctors[w.sigma[i]]), g)
    new_mu = Corrector.from_map(
        p.division.support,
        w.mu.order,
        lambda h: -w.mu.exp_of(grp.conj(h, g)),
    )
    return build_witness(p2, p, grp.inv(g), tuple(new_sigma), tuple(new_corr), new_mu)


def compose_witness(w1: IsoWitness, w2: IsoWitness) -> IsoWitness:
    """Witness for the composite isomorphism source(w1) -> target(w2)."""
    if w1.target != w2.source:
        raise InvalidInput("witnesses do not compose: endpoints differ", code="invalid-witness-data")
    p = w1.source
    grp = p.group
    n = p.shape.n
    g = grp.mul(w1.shift, w2.shift)
    sigma = tuple(w1.sigma[w2.sigma[i]] for i in range(n))
    inv_sigma1 = [0] * n
    for i in range(n):
        inv_sigma1[w1.sigma[i]] = i
    corr = [0] * n
    g1inv = grp.inv(w1.shift)
    for k in range(n):
        mid = inv_sigma1[k]  # position in w1.target matched to source position k
        corr[k] = grp.mul(w1.correctors[k], grp.conj(w2.correctors[mid], g1inv))
    order = lcm(w1.mu.order, w2.mu.order)
    k1, k2 = order // w1.mu.order, order // w2.mu.order
    g2inv = grp.inv(w2.shift)
    mu = Corrector.from_map(
        w2.target.division.support,
        order,
        lambda c: k1 * w1.mu.exp_of(grp.conj(c, g2inv)) + k2 * w2.mu.exp_of(c),
    )
    return build_witness(p, w2.target, g, sigma, tuple(corr), mu)


# -- isomorphism decisions -----------------------------------------------------


def _match_blockwise(
    grp: Group,
    support,
    src_degrees: tuple[int, ...],
    tgt_shifted: tuple[int, ...],
    blocks: list[range],
) -> list[int] | None:
    """Blockwise multiset matching of left cosets; sigma[target pos] = source pos.

    Cosets are compared through canonical (minimal) representatives; within a
    coset class, ascending target positions pair with ascending source
    positions, which makes the returned permutation deterministic.
    """
    n = len(src_degrees)
    sigma = [0] * n
    for block in blocks:
        src_buckets: dict[int, list[int]] = {}
        tgt_buckets: dict[int, list[int]] = {}
        for i in block:
            src_buckets.setdefault(left_coset(src_degrees[i], support)[0], []).append(i)
            tgt_buckets.setdefault(left_coset(tgt_shifted[i], support)[0], []).append(i)
        if set(src_buckets) != set(tgt_buckets):
            return None
        for rep, src_ids in src_buckets.items():
            tgt_ids = tgt_buckets[rep]
            if len(src_ids) != len(tgt_ids):
                return None
            for t_i, s_i in zip(tgt_ids, src_ids):
                sigma[t_i] = s_i
    return sigma


def _solve_correctors(
    grp: Group, p: FlagPresentation, p2: FlagPresentation, shift: int, sigma: list[int]
) -> tuple[int, ...]:
    ginv = grp.inv(shift)
    corr = [grp.identity] * p.shape.n
    for i in range(p.shape.n):
        k = sigma[i]
        corr[k] = grp.mul(grp.inv(p.degrees[k]), grp.mul(p2.degrees[i], ginv))
    return tuple(corr)


def _checked_isomorphic(p: FlagPresentation, p2: FlagPresentation, w: IsoWitness) -> Verdict:
    report = verify_witness(realize(p), realize(p2), w)
    if not report.ok:
        raise AssertionError(
            f"engine produced a witness that fails verification: {report.failures[:3]}"
        )
    return Verdict(ISOMORPHIC, witness=w)


def iso_pairs(p: FlagPresentation, p2: FlagPresentation) -> Verdict:
    """Isomorphism of pairs (D, V): no shift, full-tuple coset matching.

    The block structure of the inputs is disregarded; the emitted witness is
    built on single-block copies of the presentations.
    """
    if p.group != p2.group:
        raise GroupMismatch("pairs are graded by different groups")
    grp = p.group
    n, n2 = len(p.degrees), len(p2.degrees)
    if n != n2:
        return Verdict(
            NOT_ISOMORPHIC,
            certificate=InvariantMismatch(f"module ranks differ: {n} vs {n2}"),
        )
    flat = make_presentation(p.division, (n,), p.degrees)
    flat2 = make_presentation(p2.division, (n,), p2.degrees)
    mu = iso_division(p.division, p2.division)
    if mu is None:
        return Verdict(
            NOT_ISOMORPHIC,
            certificate=SearchExhausted(
                shifts_tried=1,
                detail="pair isomorphism admits no shift; division parts are not isomorphic",
            ),
        )
    sigma = _match_blockwise(
        grp, p.division.support, flat.degrees, flat2.degrees, flat.shape.block_positions()
    )
    if sigma is None:
        return Verdict(
            NOT_ISOMORPHIC,
            certificate=SearchExhausted(
                shifts_tried=1,
                detail="full-tuple left-coset multisets differ",
            ),
        )
    corr = _solve_correctors(grp, flat, flat2, grp.identity, sigma)
    w = build_witness(flat, flat2, grp.identity, tuple(sigma), corr, mu)
    return _checked_isomorphic(flat, flat2, w)


def iso_algebras(p: FlagPresentation, p2: FlagPresentation) -> Verdict:
    """Graded isomorphism decision for flag algebras over a common group.

    Searches every shift g in ascending element order; for each, requires the
    shifted division part to be isomorphic to the target's and the blockwise
    left-coset multisets to match.  The first success yields a verified
    witness; exhaustion yields a certificate, with a separating invariant
    attached when one exists.
    """
    if p.group != p2.group:
        raise GroupMismatch("presentations are graded by different groups")
    grp = p.group
    if p.shape != p2.shape:
        return Verdict(
            NOT_ISOMORPHIC,
            certificate=InvariantMismatch(
                f"block shapes differ: {p.shape.blocks} vs {p2.shape.blocks}"
            ),
        )
    blocks = p.shape.block_positions()
    support = p.division.support
    for g in grp.elements():
        mu = iso_division(shift_conjugate(p.division, g), p2.division)
        if mu is None:
            continue
        ginv = grp.inv(g)
        shifted_tgt = tuple(grp.mul(d, ginv) for d in p2.degrees)
        sigma = _match_blockwise(grp, support, p.degrees, shifted_tgt, blocks)
        if sigma is None:
            continue
        corr = _solve_correctors(grp, p, p2, g, sigma)
        w = build_witness(p, p2, g, tuple(sigma), corr, mu)
        return _checked_isomorphic(p, p2, w)

    inv1 = invariants(realize(p))
    inv2 = invariants(realize(p2))
    mismatch = None
    if inv1 != inv2:
        mismatch = InvariantMismatch(_separate(grp, inv1, inv2))
    return Verdict(
        NOT_ISOMORPHIC,
        certificate=SearchExhausted(
            shifts_tried=grp.size,
            detail=(
                f"searched all {grp.size} shifts with blockwise coset matching "
                f"over a support of size {len(support.members)}"
            ),
            invariant_mismatch=mismatch,
        ),
    )


def _separate(grp: Group, inv1, inv2) -> str:
    d1, d2 = inv1.dims_map(), inv2.dims_map()
    for u in sorted(set(d1) | set(d2)):
        a, b = d1.get(u, 0), d2.get(u, 0)
        if a != b:
            return f"dim at degree {grp.name_of(u)}: {a} vs {b}"
    for (c, r1), (_, r2) in zip(inv1.radical_dims, inv2.radical_dims):
        if r1 != r2:
            return f"radical power {c} dimension profile differs"
    return "graded invariants differ"


# -- equivalence ---------------------------------------------------------------


@dataclass
class EquivWitness:
    """Degree relabeling data: lam on tuple values, sigma[source pos] = target pos."""

    source: FlagPresentation
    target: FlagPresentation
    lam: dict[int, int]
    sigma: tuple[int, ...]
    component_map: dict[int, int]


def equiv_check(p: FlagPresentation, p2: FlagPresentation) -> Verdict:
    """Necessary conditions for graded equivalence; never answers Equivalent.

    Checks block shapes, division-part equivalence, and the existence of a
    bijection between blockwise coset-class profiles.  All conditions passing
    is Inconclusive by design: for nontrivial division parts the criterion is
    one-directional.
    """
    if p.shape != p2.shape:
        return Verdict(
            NOT_EQUIVALENT,
            reason=f"block shapes differ: {p.shape.blocks} vs {p2.shape.blocks}",
        )
    if equiv_division(p.division, p2.division) is None:
        return Verdict(NOT_EQUIVALENT, reason="division parts are not equivalent")
    prof1 = _class_profiles(p)
    prof2 = _class_profiles(p2)
    if sorted(prof1.values()) != sorted(prof2.values()):
        return Verdict(
            NOT_EQUIVALENT,
            reason=(
                "blockwise coset-class profiles do not match: "
                f"{sorted(prof1.values())} vs {sorted(prof2.values())}"
            ),
        )
    return Verdict(
        INCONCLUSIVE,
        reason="all necessary conditions hold; the criterion is not decisive here",
    )


def _class_profiles(p: FlagPresentation) -> dict[int, tuple[int, ...]]:
    """Per distinct left coset of the support, its count in each block."""
    reps = [left_coset(d, p.division.support)[0] for d in p.degrees]
    blocks = p.shape.block_positions()
    out: dict[int, tuple[int, ...]] = {}
    for rep in sorted(set(reps)):
        out[rep] = tuple(sum(1 for i in blk if reps[i] == rep) for blk in blocks)
    return out


def equiv_elementary(p: FlagPresentation, p2: FlagPresentation) -> Verdict:
    """Full equivalence decision for elementary gradings (trivial division parts).

    Searches bijections lam between the degree-value sets, subject to: lam
    preserves blockwise multiplicity vectors, and whenever two in-algebra
    positions give equal degree g_i g_j^-1, their lam-images give equal
    degrees.  Quantification is over positions whose elementary matrices lie
    in the algebra (row block <= column block).  Any found witness is verified
    component-onto-component before being returned.
    """
    if not p.division.is_trivial() or not p2.division.is_trivial():
        raise UnsupportedInput("equivalence decision requires trivial division parts")
    if p.shape != p2.shape:
        return Verdict(
            NOT_EQUIVALENT,
            reason=f"block shapes differ: {p.shape.blocks} vs {p2.shape.blocks}",
        )
    g1, g2 = p.group, p2.group
    n = p.shape.n
    blocks = p.shape.block_positions()
    vals1 = sorted(set(p.degrees))
    vals2 = sorted(set(p2.degrees))
    if len(vals1) != len(vals2):
        return Verdict(
            NOT_EQUIVALENT,
            reason=f"degree value sets have different sizes: {len(vals1)} vs {len(vals2)}",
        )

    def count_vec(degrees: tuple[int, ...], v: int) -> tuple[int, ...]:
        return tuple(sum(1 for i in blk if degrees[i] == v) for blk in blocks)

    cv1 = {v: count_vec(p.degrees, v) for v in vals1}
    cv2 = {v: count_vec(p2.degrees, v) for v in vals2}
    if sorted(cv1.values()) != sorted(cv2.values()):
        return Verdict(
            NOT_EQUIVALENT,
            reason="blockwise multiplicity profiles of the degree values differ",
        )

    block_of = [p.shape.block_of(i) for i in range(n)]
    pairs = sorted(
        {
            (p.degrees[i], p.degrees[j])
            for i in range(n)
            for j in range(n)
            if block_of[i] <= block_of[j]
        }
    )

    def coincidence_ok(lam: dict[int, int]) -> bool:
        seen: dict[int, int] = {}
        for a, b in pairs:
            if a not in lam or b not in lam:
                continue
            u = g1.mul(a, g1.inv(b))
            w = g2.mul(lam[a], g2.inv(lam[b]))
            if seen.setdefault(u, w) != w:
                return False
        return True

    candidate_failed = False
    branches = 0

    def search(pos: int, lam: dict[int, int], used: set[int]) -> Verdict | None:
        nonlocal candidate_failed, branches
        if pos == len(vals1):
            witness = _assemble_equiv_witness(p, p2, dict(lam), blocks)
            report = verify_equiv_witness(realize(p), realize(p2), witness)
            if report.ok:
                return Verdict(EQUIVALENT, equiv_witness=witness)
            candidate_failed = True
            return None
        v = vals1[pos]
        for w in vals2:
            if w in used or cv2[w] != cv1[v]:
                continue
            branches += 1
            lam[v] = w
            if coincidence_ok(lam):
                found = search(pos + 1, lam, used | {w})
                if found is not None:
                    return found
            del lam[v]
        return None

    found = search(0, {}, set())
    if found is not None:
        return found
    if candidate_failed:
        raise AssertionError(
            "internal: a degree bijection satisfied the coincidence condition "
            "but its induced map failed verification"
        )
    return Verdict(
        NOT_EQUIVALENT,
        reason=(
            "no degree bijection satisfies the coincidence condition "
            f"(searched {branches} assignments)"
        ),
    )


def _assemble_equiv_witness(
    p: FlagPresentation, p2: FlagPresentation, lam: dict[int, int], blocks: list[range]
) -> EquivWitness:
    g1, g2 = p.group, p2.group
    n = p.shape.n
    sigma = [0] * n
    for blk in blocks:
        slots: dict[int, list[int]] = {}
        for j in blk:
            slots.setdefault(p2.degrees[j], []).append(j)
        for i in blk:  # ascending source positions take ascending target slots
            sigma[i] = slots[lam[p.degrees[i]]].pop(0)
    block_of = [p.shape.block_of(i) for i in range(n)]
    component_map: dict[int, int] = {}
    for i in range(n):
        for j in range(n):
            if block_of[i] <= block_of[j]:
                u = g1.mul(p.degrees[i], g1.inv(p.degrees[j]))
                w = g2.mul(lam[p.degrees[i]], g2.inv(lam[p.degrees[j]]))
                component_map.setdefault(u, w)
    return EquivWitness(p, p2, lam, tuple(sigma), component_map)


def verify_equiv_witness(
    alg: GradedAlgebra, alg2: GradedAlgebra, ew: EquivWitness
) -> WitnessReport:
    """Check that e_ij -> e'_{sigma(i) sigma(j)} maps components onto components."""
    failures: list[str] = []
    sigma = ew.sigma
    if sorted(sigma) != list(range(len(sigma))):
        return WitnessReport(False, 0, ("sigma is not a permutation",))
    if alg.dim != alg2.dim:
        return WitnessReport(False, 0, ("algebras have different dimensions",))
    e1 = alg.group.identity
    e2 = alg2.group.identity
    img_degree: dict[int, int] = {}
    checked = 0
    for pos, b in enumerate(alg.basis):
        if b.sup != e1:
            return WitnessReport(False, 0, ("nontrivial division part in equivalence check",))
        target = BasisElem(sigma[b.row], sigma[b.col], e2)
        tpos = alg2.index.get(target)
        if tpos is None:
            failures.append(f"image of e_{b.row + 1}{b.col + 1} leaves the algebra")
            continue
        checked += 1
        u = alg.degree[pos]
        w = alg2.degree[tpos]
        if img_degree.setdefault(u, w) != w:
            failures.append(
                f"component at degree {alg.group.name_of(u)} is split across target degrees"
            )
    if failures:
        return WitnessReport(False, checked, tuple(failures))
    if len(set(img_degree.values())) != len(img_degree):
        failures.append("two components merge into one target degree")
    dims1: dict[int, int] = {}
    dims2: dict[int, int] = {}
    for d in alg.degree:
        dims1[d] = dims1.get(d, 0) + 1
    for d in alg2.degree:
        dims2[d] = dims2.get(d, 0) + 1
    for u, w in img_degree.items():
        if dims1[u] != dims2.get(w, 0):
            failures.append(
                f"component dimensions differ: {dims1[u]} at {alg.group.name_of(u)} "
                f"vs {dims2.get(w, 0)} at {alg2.group.name_of(w)}"
            )
    for u, cm in ew.component_map.items():
        if img_degree.get(u) != cm:
            failures.append("stated component map disagrees with the induced map")
            break
    return WitnessReport(not failures, checked, tuple(failures))


# -- classification ------------------------------------------------------------


@dataclass
class Classification:
    group: Group
    shape: BlockShape
    division: GradedDivisionAlgebra
    representatives: tuple[tuple[int, ...], ...]
    orbit_sizes: tuple[int, ...]
    total: int

    @property
    def count(self) -> int:
        return len(self.representatives)


def _admissible_shifts(division: GradedDivisionAlgebra) -> list[int]:
    """Shifts g whose conjugate-shifted division part is isomorphic to the original.

    These are exactly the shifts available when deciding isomorphism between
    two presentations sharing the division part; for abelian groups or trivial
    cocycles this is all of G.
    """
    grp = division.group
    return [
        g
        for g in grp.elements()
        if iso_division(shift_conjugate(division, g), division) is not None
    ]


def canonical_form(p: FlagPresentation, shifts: list[int] | None = None) -> tuple[int, ...]:
    """Lexicographically minimal tuple over shift, block permutation, coset correction."""
    grp = p.group
    if shifts is None:
        shifts = _admissible_shifts(p.division)
    support = p.division.support
    rep_of = [left_coset(x, support)[0] for x in grp.elements()]
    blocks = p.shape.block_positions()
    best: tuple[int, ...] | None = None
    for g in shifts:
        cand: list[int] = []
        for blk in blocks:
            cand.extend(sorted(rep_of[grp.mul(p.degrees[i], g)] for i in blk))
        tup = tuple(cand)
        if best is None or tup < best:
            best = tup
    assert best is not None
    return best


def classify(
    group: Group,
    blocks,
    division: GradedDivisionAlgebra,
    budget: int | None = None,
) -> Classification:
    """Orbit representatives of all |G|^n degree tuples, by canonical form."""
    if division.group != group:
        raise GroupMismatch("division part lives over a different group")
    shape = blocks if isinstance(blocks, BlockShape) else BlockShape(tuple(blocks))
    n = shape.n
    total = group.size**n
    limit = classify_budget(budget)
    if total > limit:
        raise BudgetExceeded(
            f"enumeration of {group.size}^{n} = {total} tuples exceeds budget {limit}"
        )
    shifts = _admissible_shifts(division)
    buckets: dict[tuple[int, ...], int] = {}
    for tup in itertools.product(range(group.size), repeat=n):
        p = FlagPresentation(division, shape, tup)
        key = canonical_form(p, shifts)
        buckets[key] = buckets.get(key, 0) + 1
    reps = tuple(sorted(buckets))
    return Classification(
        group, shape, division, reps, tuple(buckets[r] for r in reps), total
    )
