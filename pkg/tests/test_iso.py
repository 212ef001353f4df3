import random

import pytest

from flagiso import (
    ISOMORPHIC,
    NOT_ISOMORPHIC,
    BasisElem,
    Corrector,
    GradedDivisionAlgebra,
    GroupMismatch,
    InvalidInput,
    InvariantMismatch,
    IsoWitness,
    SearchExhausted,
    Subgroup,
    build_abelian,
    build_witness,
    compose_witness,
    invert_witness,
    iso_algebras,
    iso_pairs,
    make_presentation,
    pauli,
    realize,
    shift_conjugate,
    subgroup_closure,
    trivial_division,
    validate_cocycle,
    verify_witness,
)

# -- helpers -----------------------------------------------------------------


def sign_division(grp, generator):
    """Order-two support with x_h^2 = -1."""
    sub = subgroup_closure(grp, [generator])
    assert len(sub.members) == 2
    tbl = [[0, 0], [0, 1]]
    return GradedDivisionAlgebra(validate_cocycle(sub, 2, tbl))


def random_transform(rng, p):
    """A flag-preserving rewrite of p: shift, in-block shuffle, coset rewrites."""
    grp = p.group
    members = p.division.support.members
    g = rng.randrange(grp.size)
    degrees = list(p.degrees)
    out = []
    for blk in p.shape.block_positions():
        entries = [degrees[i] for i in blk]
        rng.shuffle(entries)
        out.extend(grp.mul(grp.mul(d, rng.choice(members)), g) for d in entries)
    return make_presentation(shift_conjugate(p.division, g), p.shape.blocks, out)


# -- worked decisions ---------------------------------------------------------


def test_two_step_flags_over_z2():
    grp = build_abelian([2])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1], [0, 1])
    q = make_presentation(d, [1, 1], [1, 0])
    v = iso_algebras(p, q)
    assert v.kind == ISOMORPHIC
    w = v.witness
    assert w.shift == 1
    assert w.sigma == (0, 1)
    assert w.correctors == (0, 0)
    report = verify_witness(realize(p), realize(q), w)
    assert report.ok and report.checked_pairs == 9


def test_self_isomorphism_is_the_identity_witness():
    grp = build_abelian([2])
    p = make_presentation(trivial_division(grp), [1, 1], [0, 1])
    v = iso_algebras(p, p)
    assert v.kind == ISOMORPHIC
    w = v.witness
    assert w.shift == grp.identity
    assert w.sigma == (0, 1)
    assert all(exp == 0 for _, exp in w.mapping.values())


def test_sigma_convention_maps_target_to_source():
    z4 = build_abelian([4])
    d = trivial_division(z4)
    p = make_presentation(d, [2], [0, 1])
    q = make_presentation(d, [2], [1, 0])
    v = iso_algebras(p, q)
    assert v.kind == ISOMORPHIC
    w = v.witness
    assert w.shift == 0
    assert w.sigma == (1, 0)  # target position 0 is matched to source position 1
    assert w.mapping[BasisElem(0, 0, 0)] == (BasisElem(1, 1, 0), 0)


def test_nontrivial_correctors_inside_support():
    z4 = build_abelian([4])
    d = sign_division(z4, 2)
    p = make_presentation(d, [1, 1], [0, 2])
    q = make_presentation(d, [1, 1], [0, 0])
    v = iso_algebras(p, q)
    assert v.kind == ISOMORPHIC
    assert v.witness.shift == 0
    assert v.witness.correctors == (0, 2)
    assert verify_witness(realize(p), realize(q), v.witness).ok


def test_cohomologous_division_parts_are_isomorphic():
    grp = build_abelian([2])
    sub = Subgroup(grp, (0, 1))
    plain = GradedDivisionAlgebra(validate_cocycle(sub, 4, [[0, 0], [0, 0]]))
    minus = GradedDivisionAlgebra(validate_cocycle(sub, 4, [[0, 0], [0, 2]]))
    p = make_presentation(plain, [1, 1], [0, 1])
    q = make_presentation(minus, [1, 1], [0, 1])
    v = iso_algebras(p, q)
    assert v.kind == ISOMORPHIC
    assert v.witness.mu.exp_of(1) in (1, 3)  # 2u = -2 (mod 4)
    assert verify_witness(realize(p), realize(q), v.witness).ok


def test_chain_flags_over_z3_not_isomorphic():
    grp = build_abelian([3])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1], [0, 1])
    q = make_presentation(d, [1, 1], [0, 2])
    v = iso_algebras(p, q)
    assert v.kind == NOT_ISOMORPHIC
    cert = v.certificate
    assert isinstance(cert, SearchExhausted)
    assert cert.shifts_tried == 3
    assert "searched all 3 shifts" in cert.detail
    assert cert.invariant_mismatch == InvariantMismatch("dim at degree (1): 0 vs 1")


def test_shape_mismatch_certificate():
    grp = build_abelian([2])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1], [0, 1])
    q = make_presentation(d, [2], [0, 1])
    v = iso_algebras(p, q)
    assert v.kind == NOT_ISOMORPHIC
    assert v.certificate == InvariantMismatch("block shapes differ: (1, 1) vs (2,)")


def test_cross_group_raises():
    p = make_presentation(trivial_division(build_abelian([2])), [1], [0])
    q = make_presentation(trivial_division(build_abelian([3])), [1], [0])
    with pytest.raises(GroupMismatch):
        iso_algebras(p, q)
    with pytest.raises(GroupMismatch):
        iso_pairs(p, q)


def test_same_invariants_yet_not_isomorphic_gets_bare_exhaustion():
    # (e,e,a) and (e,a,a) over Z_4 share every dimension invariant, but the
    # entry pattern (x,x,y) cannot be translated onto (x,y,y)
    grp = build_abelian([4])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1, 1], [0, 0, 1])
    q = make_presentation(d, [1, 1, 1], [0, 1, 1])
    from flagiso import invariants

    assert invariants(realize(p)) == invariants(realize(q))
    v = iso_algebras(p, q)
    assert v.kind == NOT_ISOMORPHIC
    assert v.certificate.shifts_tried == 4
    assert v.certificate.invariant_mismatch is None


# -- pair decisions -------------------------------------------------------------


def test_pairs_rank_mismatch():
    grp = build_abelian([2])
    d = trivial_division(grp)
    p = make_presentation(d, [1], [0])
    q = make_presentation(d, [1, 1], [0, 1])
    v = iso_pairs(p, q)
    assert v.kind == NOT_ISOMORPHIC
    assert v.certificate == InvariantMismatch("module ranks differ: 1 vs 2")


def test_pairs_ignore_blocks():
    grp = build_abelian([2])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1], [0, 1])
    q = make_presentation(d, [2], [1, 0])
    assert iso_algebras(p, q).kind == NOT_ISOMORPHIC  # shapes differ
    v = iso_pairs(p, q)
    assert v.kind == ISOMORPHIC
    assert v.witness.source.shape.blocks == (2,)  # flattened copies
    assert verify_witness(
        realize(v.witness.source), realize(v.witness.target), v.witness
    ).ok


def test_pairs_full_support_cosets_always_match():
    grp = build_abelian([2, 2])
    d = pauli(2, grp, [2, 1])
    p = make_presentation(d, [2], [0, 2])
    q = make_presentation(d, [2], [1, 3])
    v = iso_pairs(p, q)
    assert v.kind == ISOMORPHIC


def test_pairs_division_class_blocks():
    grp = build_abelian([2, 2])
    d = pauli(2, grp, [2, 1])
    plain = GradedDivisionAlgebra(
        validate_cocycle(d.support, 2, [[0] * 4 for _ in range(4)])
    )
    p = make_presentation(d, [1], [0])
    q = make_presentation(plain, [1], [0])
    v = iso_pairs(p, q)
    assert v.kind == NOT_ISOMORPHIC
    assert isinstance(v.certificate, SearchExhausted)
    assert v.certificate.shifts_tried == 1
    assert "not isomorphic" in v.certificate.detail


def test_pairs_coset_mismatch():
    z4 = build_abelian([4])
    d = sign_division(z4, 2)
    p = make_presentation(d, [1], [0])
    q = make_presentation(d, [1], [1])
    v = iso_pairs(p, q)
    assert v.kind == NOT_ISOMORPHIC
    assert "left-coset multisets differ" in v.certificate.detail


# -- witness construction and verification ------------------------------------------


def z2_witness():
    grp = build_abelian([2])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1], [0, 1])
    q = make_presentation(d, [1, 1], [1, 0])
    return p, q, iso_algebras(p, q).witness


def test_build_witness_rejects_bad_sigma():
    p, q, w = z2_witness()
    with pytest.raises(InvalidInput) as ei:
        build_witness(p, q, w.shift, (0, 0), w.correctors, w.mu)
    assert ei.value.code == "invalid-witness-data"
    assert "permutation" in str(ei.value)


def test_build_witness_rejects_block_violating_sigma():
    grp = build_abelian([2])
    d = trivial_division(grp)
    p = make_presentation(d, [1, 1], [0, 0])
    mu = Corrector(d.support, 1, (0,))
    with pytest.raises(InvalidInput) as ei:
        build_witness(p, p, 0, (1, 0), (0, 0), mu)
    assert "preserve blocks" in str(ei.value)


def test_build_witness_rejects_foreign_correctors():
    p, q, w = z2_witness()
    with pytest.raises(InvalidInput) as ei:
        build_witness(p, q, w.shift, w.sigma, (0, 1), w.mu)  # 1 is outside supp {e}
    assert "division support" in str(ei.value)


def test_build_witness_rejects_broken_tuple_relation():
    p, q, w = z2_witness()
    with pytest.raises(InvalidInput) as ei:
        build_witness(p, q, 0, w.sigma, w.correctors, w.mu)  # wrong shift
    assert "tuple relation fails at position 1" in str(ei.value)


def test_build_witness_rejects_non_corrector():
    grp = build_abelian([2, 2])
    d = pauli(2, grp, [2, 1])
    p = make_presentation(d, [1], [0])
    bad_mu = Corrector(d.support, 2, (0, 1, 0, 0))  # not a character of the support
    with pytest.raises(InvalidInput) as ei:
        build_witness(p, p, 0, (0,), (0,), bad_mu)
    assert "not a corrector" in str(ei.value)


def test_build_witness_rejects_wrong_mu_support():
    p, q, w = z2_witness()
    other = Corrector(Subgroup(p.group, (0, 1)), 1, (0, 0))
    with pytest.raises(InvalidInput) as ei:
        build_witness(p, q, w.shift, w.sigma, w.correctors, other)
    assert "support" in str(ei.value)


def test_verify_rejects_scalar_corruption():
    p, q, w = z2_witness()
    bad_map = dict(w.mapping)
    key = next(iter(bad_map))
    tgt, exp = bad_map[key]
    bad_map[key] = (tgt, exp + 1)
    bad = IsoWitness(
        w.source, w.target, w.shift, w.sigma, w.correctors, w.mu, 2, bad_map
    )
    report = verify_witness(realize(p), realize(q), bad)
    assert not report.ok
    assert any("scalar mismatch" in f for f in report.failures)


def test_verify_rejects_degree_corruption():
    p, q, w = z2_witness()
    bad_map = dict(w.mapping)
    bad_map[BasisElem(0, 1, 0)] = (BasisElem(0, 0, 0), 0)  # off-diagonal to diagonal
    bad = IsoWitness(
        w.source, w.target, w.shift, w.sigma, w.correctors, w.mu, w.scalar_order, bad_map
    )
    report = verify_witness(realize(p), realize(q), bad)
    assert not report.ok
    assert any("injective" in f or "degree mismatch" in f for f in report.failures)


def test_verify_rejects_partial_map():
    p, q, w = z2_witness()
    bad_map = dict(w.mapping)
    bad_map.pop(next(iter(bad_map)))
    bad = IsoWitness(
        w.source, w.target, w.shift, w.sigma, w.correctors, w.mu, w.scalar_order, bad_map
    )
    report = verify_witness(realize(p), realize(q), bad)
    assert not report.ok
    assert "exactly the source basis" in report.failures[0]


def test_verify_rejects_non_embedding_scalar_order():
    grp = build_abelian([2, 2])
    d = pauli(2, grp, [2, 1])
    p = make_presentation(d, [1], [0])
    zero = Corrector(d.support, 2, (0, 0, 0, 0))
    w = build_witness(p, p, 0, (0,), (0,), zero)
    bad = IsoWitness(
        w.source, w.target, w.shift, w.sigma, w.correctors, w.mu, 3, dict(w.mapping)
    )
    report = verify_witness(realize(p), realize(p), bad)
    assert not report.ok
    assert "does not embed" in report.failures[0]


# -- scalar ambiguity ------------------------------------------------------------


def test_character_twists_give_distinct_valid_witnesses():
    grp = build_abelian([2, 2])
    d = pauli(2, grp, [2, 1])
    p = make_presentation(d, [1], [0])
    alg = realize(p)
    zero = Corrector(d.support, 2, (0, 0, 0, 0))
    chi = Corrector(d.support, 2, (0, 1, 0, 1))  # the character trivial on u
    w0 = build_witness(p, p, 0, (0,), (0,), zero)
    w1 = build_witness(p, p, 0, (0,), (0,), chi)
    assert verify_witness(alg, alg, w0).ok
    assert verify_witness(alg, alg, w1).ok
    assert w0.mapping != w1.mapping  # same combinatorics, different scalars


# -- inversion and composition ------------------------------------------------------


def test_invert_witness_z2():
    p, q, w = z2_witness()
    wi = invert_witness(w)
    assert wi.source is q and wi.target is p
    assert wi.shift == p.group.inv(w.shift)
    assert verify_witness(realize(q), realize(p), wi).ok


def test_compose_with_inverse_is_identity_shift():
    p, q, w = z2_witness()
    wi = invert_witness(w)
    round_trip = compose_witness(w, wi)
    assert round_trip.source is p and round_trip.target is p
    assert round_trip.shift == p.group.identity
    assert verify_witness(realize(p), realize(p), round_trip).ok


def test_compose_rejects_endpoint_mismatch():
    p, q, w = z2_witness()
    with pytest.raises(InvalidInput) as ei:
        compose_witness(w, w)
    assert ei.value.code == "invalid-witness-data"


def test_invert_and_compose_randomized():
    rng = random.Random(6021)
    grp = build_abelian([4])
    divisions = [trivial_division(grp), sign_division(grp, 2)]
    for trial in range(12):
        d = divisions[trial % 2]
        n = rng.randint(2, 4)
        cut = rng.randint(1, n - 1)
        blocks = (cut, n - cut)
        p = make_presentation(d, blocks, [rng.randrange(4) for _ in range(n)])
        q = random_transform(rng, p)
        r = random_transform(rng, q)
        v1 = iso_algebras(p, q)
        v2 = iso_algebras(q, r)
        assert v1.kind == ISOMORPHIC and v2.kind == ISOMORPHIC
        w1, w2 = v1.witness, v2.witness
        assert verify_witness(realize(q), realize(p), invert_witness(w1)).ok
        chained = compose_witness(w1, w2)
        assert chained.target.degrees == r.degrees
        assert verify_witness(realize(p), realize(r), chained).ok


def test_transform_batch_over_klein_pauli():
    rng = random.Random(40961)
    grp = build_abelian([2, 2])
    d = pauli(2, grp, [2, 1])
    for _ in range(8):
        n = rng.randint(1, 3)
        blocks = tuple(1 for _ in range(n))
        p = make_presentation(d, blocks, [rng.randrange(4) for _ in range(n)])
        q = random_transform(rng, p)
        v = iso_algebras(p, q)
        assert v.kind == ISOMORPHIC
        assert verify_witness(realize(p), realize(q), v.witness).ok


def test_decisions_are_deterministic():
    grp = build_abelian([4])
    d = sign_division(grp, 2)
    p = make_presentation(d, [1, 1], [0, 1])
    q = make_presentation(d, [1, 1], [2, 3])
    v1 = iso_algebras(p, q)
    v2 = iso_algebras(p, q)
    assert v1.kind == v2.kind
    if v1.kind == ISOMORPHIC:
        assert v1.witness.shift == v2.witness.shift
        assert v1.witness.sigma == v2.witness.sigma
        assert v1.witness.mapping == v2.witness.mapping
