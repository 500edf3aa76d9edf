import random

from resatlas.formats import derive_ranks
from resatlas.kacmoody import TpqrGraph
from resatlas.rings import (
    MuIndex,
    dictionary_crosscheck,
    hilbert_truncation,
    homology_weights,
    in_ra,
    in_rspec,
    kstar_terms,
    lambda_from_sigma_tau,
    mu_enumerate,
    ra_component,
    ra_enumerate,
    ra_general_component,
    rspec_component,
    semigroup_generators,
)

FMT_D4 = derive_ranks([1, 4, 4, 1])
FMT_E6 = derive_ranks([2, 6, 5, 1])


def test_ra_component_a1_anchor():
    quad = ra_component(MuIndex(a=1, b=0, c=0), FMT_D4)
    assert quad.weights == ((1,), (0, 0, 0, -1), (0, 0, 0, 0), (0,))
    assert in_ra(MuIndex(a=1, b=0, c=0), FMT_D4)


def test_b1_in_rspec_not_ra():
    mu = MuIndex(a=0, b=1, c=0)
    assert not in_ra(mu, FMT_D4)   # A = -1
    assert in_rspec(mu, FMT_D4)


def test_dominance_iff_a_nonnegative():
    for a in (-2, -1, 0, 1, 2):
        mu = MuIndex(a=a, b=1, c=1, beta=(1,))
        quad = ra_component(mu, FMT_D4)
        assert quad.dominant == (a >= 0)


def test_general_formula_agrees_with_length3():
    rng = random.Random(5)
    for _ in range(100):
        mu = MuIndex(
            a=rng.randint(0, 4),
            b=rng.randint(0, 4),
            c=rng.randint(0, 4),
            beta=tuple(sorted((rng.randint(0, 3) for _ in range(2)), reverse=True)),
        )
        quad = ra_component(mu, FMT_D4)
        general = ra_general_component([mu.c, mu.b, mu.a], [mu.gamma, mu.beta, mu.alpha], FMT_D4)
        assert tuple(general) == (quad.w0, quad.w1, quad.w2, quad.w3)


def test_ra_enumeration_counts_and_injectivity():
    comps = ra_enumerate(FMT_D4, 4)  # internal asserts cover injectivity
    assert len(comps) == 67
    assert all(quad.dominant for _, quad in comps)


def test_mu_enumerate_deterministic():
    a = mu_enumerate(FMT_D4, 3)
    b = mu_enumerate(FMT_D4, 3)
    assert a == b
    assert all(m.a >= 0 for m in a)


def test_homology_minimal_generator():
    rep = homology_weights(FMT_D4, 2, 4)  # H_{j-1} = H_1
    assert rep.minimal_generator == ((-1,), (1, 1, 0, 0), (0, 0, 0, 0), (0,))
    assert len(rep.components) == 24


def test_homology_dominance_filter():
    rep0 = homology_weights(FMT_D4, 2, 0)
    assert rep0.components == []


def test_rspec_component_anchor():
    mu = MuIndex(a=2, b=1, c=3, beta=(2, 1))
    comp = rspec_component(mu, FMT_D4)
    g = TpqrGraph(2, 2, 2)
    assert g.labels_as_dict(comp.lam) == {"u": 1, "x1": 1, "y1": 1, "z1": 2}


def test_lambda_round_trip_orientations_agree_short_arm():
    g = TpqrGraph(2, 2, 2)
    # r = 2: the z-arm has no extra vertices, both orientations coincide
    lam1 = lambda_from_sigma_tau(g, (3,), (2, 1, 1, 0), 5)
    lam2 = lambda_from_sigma_tau(g, (3,), (2, 1, 1, 0), 5, z_arm_ascending=True)
    assert lam1 == lam2


def test_generator_families_d4():
    fams = semigroup_generators(FMT_D4)
    assert [f.number for f in fams] == [1, 2, 3, 4, 5, 6]
    by_num = {f.number: f for f in fams}
    assert not by_num[1].present and not by_num[5].present  # r_3 = r_1 = 1
    assert by_num[2].present and by_num[4].present and by_num[6].present
    assert len(by_num[3].members) == 2  # beta = (1), (1,1)


def test_kstar_terms_structure():
    fmt = FMT_D4
    ks = kstar_terms((2,), (3, 2, 1, 0), 2, fmt)
    assert ks.bottom == ((2,), (3, 2, 1, 0))
    assert ks.middle == ((4,), (5, 4, 1, 0))
    assert ks.u == 2  # tau_2 + 1 - tau_3 = 2 + 1 - 1
    assert ks.top_s is None  # r_3 = 1


def test_kstar_top_s_present_when_r3_ge_2():
    fmt = derive_ranks([1, 5, 6, 2])
    ks = kstar_terms((3, 1), (2, 2, 1, 1, 0), 1, fmt)
    assert ks.top_s is not None
    assert ks.s == 3 + 1 - 1


def test_dictionary_crosscheck_random():
    rng = random.Random(99)
    for fmt in (FMT_D4, FMT_E6):
        r1, r2, r3 = fmt.r
        for _ in range(10):
            sigma = tuple(sorted((rng.randint(0, 3) for _ in range(r3)), reverse=True))
            tau = tuple(sorted((rng.randint(0, 3) for _ in range(r1 + r2)), reverse=True))
            t = rng.randint(1, 3)
            assert dictionary_crosscheck(sigma, tau, t, fmt)


def test_dictionary_crosscheck_detects_breakage():
    assert not dictionary_crosscheck((1,), (1, 1, 0, 0), 1, FMT_D4, break_u_by=1)


def test_hilbert_truncation_anchors():
    table = hilbert_truncation(FMT_D4, 2)
    assert table[(1, 0, 0, 0, 0, 0)] == 32
    assert table[(0, 1, 0, 0, 0, 0)] == 8
    assert table[(0, 0, 0, 0, 0, 0)] == 1
