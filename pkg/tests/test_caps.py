from verlinde_gl.caps import (
    cap_diagram,
    dual_simple,
    dual_simple_label,
    hat,
    kac_composition,
    lowest_weight,
    p_set,
    projective_filtration,
    projective_word,
    replay_word,
    sigma_to_standard,
    standard_to_sigma,
)
from verlinde_gl.diagrams import encode, render_ascii
from verlinde_gl.enumeration import super_suite
from verlinde_gl.superweights import (
    SuperShape,
    SuperWeight,
    atypicality,
    beta,
    casimir_scalar,
    dominance_leq,
    is_typical,
    super_weight,
)

FIG = super_weight(11, (18, 18, 15, 12, 12), (-13, -13, -17, -18))
ZERO5 = super_weight(5, (0,), (0,))


def test_cap_diagram_figure():
    cd = cap_diagram(encode(FIG))
    assert tuple(cd.caps) == ((9, 0), (6, 1))
    assert sorted(cd.free_circles) == [3, 5]
    assert cd.cap_label_twist(0) == (-1, 1)
    assert cd.cap_label_twist(1) == (-1, 1)
    from verlinde_gl.caps import is_inner, render_caps

    assert is_inner(cd, 0) and not is_inner(cd, 1)
    assert render_caps(cd) == "caps: 9->0(inner), 6->1 free: 3,5"


def test_cap_diagram_typical_and_small():
    cd = cap_diagram(encode(super_weight(5, (1,), (0,))))
    assert cd.caps == ()
    assert sorted(cd.free_circles) == [2, 3, 4]
    # xoooo has four circles; the cap 0->1 consumes one, leaving three free.
    cd = cap_diagram(encode(ZERO5))
    assert tuple(cd.caps) == ((0, 1),)
    assert sorted(cd.free_circles) == [2, 3, 4]


def test_p_set_figure():
    got = {render_ascii(encode(a), 3) for a in p_set(FIG)}
    assert got == {
        "o<ox>>x<oo> @3 t1^-3 t2^2",
        "o<ox>>o<xo> @3 t1^-4 t2^3",
        "o<oo>>x<ox> @3 t1^-4 t2^3",
        "o<oo>>o<xx> @3 t1^-5 t2^4",
    }


def test_p_set_typical_and_small():
    lam = super_weight(5, (1,), (0,))
    assert p_set(lam) == {lam}
    ps = p_set(ZERO5)
    assert {a.vector for a in ps} == {(0, 0), (1, -1)}


def test_projective_filtration():
    lam = super_weight(5, (1,), (0,))
    assert projective_filtration(lam) == {lam: 1}
    table = projective_filtration(FIG)
    assert len(table) == 4 and set(table.values()) == {1}
    assert len(projective_filtration(ZERO5)) == 2


def test_kac_composition():
    lam = super_weight(5, (1,), (0,))
    assert kac_composition(lam) == {lam}
    tau = next(a for a in p_set(ZERO5) if a != ZERO5)
    assert ZERO5 in kac_composition(tau)
    # Full swap of the figure weight contains the figure weight.
    h = hat(FIG)
    assert FIG in kac_composition(h)


def test_hat():
    h = hat(FIG)
    assert h.mu == (19, 19, 15, 15, 15)
    assert h.nu == (-15, -15, -17, -22)
    # Central-character linkage between the weight and its hat image.
    assert casimir_scalar(h).residue == casimir_scalar(FIG).residue
    assert h.degree == FIG.degree
    d = encode(h)
    assert (d.s, d.r) == (5, 4)
    lam = super_weight(5, (1,), (0,))
    assert hat(lam) == lam
    assert hat(ZERO5).vector == (1, -1)


def test_lowest_weight():
    assert lowest_weight(FIG) == ((15, 15, 11, 11, 11), (-10, -10, -12, -17))
    lam = super_weight(5, (1,), (0,))
    assert lowest_weight(lam) == ((0,), (1,))
    # Typical case: plain beta subtraction.
    b = beta(lam.shape)
    assert lowest_weight(lam) == ((lam.mu[0] - b[0],), (lam.nu[0] - b[1],))


def test_dual_simple():
    assert dual_simple(FIG) == ((-15, -15, -11, -11, -11), (10, 10, 12, 17))
    lbl = dual_simple_label(FIG)
    assert lbl.mu == (-11, -11, -11, -15, -15)
    assert lbl.nu == (17, 12, 10, 10)
    # Involution on an enumerated window, through the dominant label.
    for m, n, mu, nu in super_suite(5, window=(-2, 2)):
        lam = SuperWeight(SuperShape(m, n, 5), mu, nu)
        assert dual_simple_label(dual_simple_label(lam)) == lam


def test_projective_word_typical():
    lam = super_weight(5, (1,), (0,))
    base, word = projective_word(lam)
    assert base == lam and word == ()


def test_projective_word_small():
    base, word = projective_word(ZERO5)
    assert is_typical(base)
    assert len(word) == 1 and word[0][0] == "E"
    got = replay_word(base, word)
    assert got == {a: 1 for a in p_set(ZERO5)}


def test_projective_word_figure():
    base, word = projective_word(FIG)
    assert is_typical(base)
    got = replay_word(base, word)
    assert got == {a: 1 for a in p_set(FIG)}


def test_sigma_maps():
    lam = super_weight(5, (1,), (0,))
    assert standard_to_sigma(lam).vector == (0, 1)
    assert sigma_to_standard(standard_to_sigma(lam)) == lam
    assert standard_to_sigma(FIG).mu == (15, 15, 11, 11, 11)
    assert standard_to_sigma(FIG).nu == (-10, -10, -12, -17)
    assert sigma_to_standard(standard_to_sigma(FIG)) == FIG


def test_sigma_roundtrip_p7_window():
    for m, n, mu, nu in super_suite(7, window=(-2, 2)):
        lam = SuperWeight(SuperShape(m, n, 7), mu, nu)
        assert sigma_to_standard(standard_to_sigma(lam)) == lam


def test_p_set_invariants_window():
    for m, n, mu, nu in super_suite(5, window=(-3, 3)):
        lam = SuperWeight(SuperShape(m, n, 5), mu, nu)
        ps = p_set(lam)
        assert len(ps) == 2 ** atypicality(lam)
        cas = casimir_scalar(lam).residue
        for alpha in ps:
            assert alpha.degree == lam.degree
            assert casimir_scalar(alpha).residue == cas
            assert dominance_leq(lam, alpha)
            if alpha != lam:
                assert sum(alpha.mu) > sum(lam.mu)


def test_bgg_duality_window():
    for m, n, mu, nu in super_suite(5, window=(-2, 2)):
        lam = SuperWeight(SuperShape(m, n, 5), mu, nu)
        for alpha in p_set(lam):
            assert lam in kac_composition(alpha)


def test_hat_injective_on_strata():
    seen: dict[tuple, SuperWeight] = {}
    for m, n, mu, nu in super_suite(5, window=(-2, 2)):
        lam = SuperWeight(SuperShape(m, n, 5), mu, nu)
        key = (m, n, atypicality(lam), hat(lam))
        assert seen.setdefault(key, lam) == lam
