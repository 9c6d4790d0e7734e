"""Acceptance suite.

One test per acceptance criterion; each enforces exact equality (no
tolerances anywhere) plus the stated wall-clock budget and prints a
pass line.  Run with ``pytest tests/test_acceptance.py -v``.
"""
import random
import time
from fractions import Fraction
from math import gcd

from netmap.halfspace import Kind, exclusion_halfspace
from netmap.lattice import mat_inverse_unimodular, mat_mul
from netmap.nonsep import (
    FinAbGroup,
    SymmetricFour,
    constant_teich_check,
    coset_numbers,
    cyclic_pairs,
    degree2_refutation,
    is_nonseparating,
    is_nonseparating_in_subgroup,
    search_nonseparating,
    translate_by_involution,
    verify_nonexistence,
)
from netmap.obstruction import certificate_for_slopes, check_certificate
from netmap.pullback import analyze_slope
from netmap.slope import Slope
from netmap.slopefn import pullback_slope, pullback_slope_via_residues
from netmap.symmetry import (
    Mobius,
    consistency_suite,
    induced_map_domain,
    induced_map_range,
    sublattice_matrix,
    twist_equation,
    twist_matrix,
)

F = Fraction


def sweep_slopes(bound):
    out = [Slope(1, 0)]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if gcd(p, q) == 1:
                out.append(Slope(p, q))
    return out


def report(n, label, started):
    print(f"criterion {n} ({label}): PASS in {time.perf_counter() - started:.2f}s")


TABLE1 = [
    ("1/1", 10, (0, 0, 1, 1), 1, 0, 0),
    ("2/1", 2, (0, 1, 4, 5), 3, 2, 0),
    ("1/3", 2, (0, 2, 3, 5), 1, 4, 0),
    ("1/4", 5, (0, 0, 2, 2), 2, 0, 0),
    ("-1/2", 1, (0, 2, 8, 10), 6, 4, 0),
    ("3/4", 1, (0, 0, 6, 6), 6, 0, 4),
    ("7/6", 1, (0, 4, 6, 10), 2, 8, 0),
    ("1/8", 1, (0, 0, 2, 2), 2, 0, 8),
]

TABLE2 = [
    ("3/4", (0, 0), 1),
    ("1/4", (0, 0), 5),
    ("-1/2", (2, 0), 2),
    ("1/2", (0, 0), 3),
    ("3/2", (0, 0), 1),
    ("1/3", (2, 0), 4),
    ("0/1", (0, 0), 2),
    ("1/1", (0, 0), 6),
]

TABLE3 = [
    ("-1/2", "0", F(6), F(2), F(6), True),
    ("-1/4", "1/6", F(2, 5), F(32, 3), F(1000, 9), True),
    ("1/8", "1/4", F(2), F(0), F(32), False),
    ("1/4", "1/2", F(2, 5), F(-16, 3), F(40, 9), True),
    ("1/3", "0", F(1, 2), F(-3), F(1, 2), True),
    ("7/16", "1/4", F(6), F(-88, 43), F(864, 1849), True),
    ("1/2", "1/3", F(2, 5), F(-4, 3), F(10, 9), True),
    ("3/4", "1/2", F(6), F(0), F(8, 3), True),
]


def test_criterion_1_pullback_table(main_pres):
    started = time.perf_counter()
    for text, d, cs, ess, per, null in TABLE1:
        m = analyze_slope(main_pres, Slope.parse(text))
        assert (m.d, m.coset_numbers, m.essential, m.peripheral, m.null_homotopic) == (
            d, cs, ess, per, null
        )
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(1, "pullback table, 8 residue classes", started)


def test_criterion_2_segment_table(main_pres):
    started = time.perf_counter()
    from netmap.slopefn import find_segment

    for text, base, t in TABLE2:
        s = Slope.parse(text)
        v, w = find_segment(main_pres, s)
        assert v == base
        assert (w[0] - v[0], w[1] - v[1]) == (t * s.q, t * s.p)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(2, "segment table, 8 residue classes", started)


def test_criterion_3_oracle_equivalence(main_pres):
    started = time.perf_counter()
    slopes = sweep_slopes(50)
    assert len(slopes) > 2900
    for s in slopes:
        assert pullback_slope(main_pres, s) == pullback_slope_via_residues(s)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    report(3, f"zigzag equals closed form on {len(slopes)} slopes", started)


def test_criterion_4_worked_values(main_pres):
    started = time.perf_counter()
    assert pullback_slope(main_pres, Slope.of(1, 4)) == Slope(1, 2)
    assert pullback_slope(main_pres, Slope.of(3, 2)) == Slope(1, 1)
    assert pullback_slope(main_pres, Slope(1, 0)) == Slope(1, 0)
    for text, image, *_ in TABLE3:
        assert str(pullback_slope(main_pres, Slope.parse(text))) == image
    report(4, "worked slope images incl. half-space table column", started)


def test_criterion_5_functional_identities(main_pres):
    started = time.perf_counter()
    for s in sweep_slopes(50):
        image = pullback_slope(main_pres, s)
        assert pullback_slope(main_pres, s.shift(5)) == image.shift(2)
        reflected = Slope.of(-(s.p + s.q), s.q) if s.q else Slope(1, 0)
        assert pullback_slope(main_pres, reflected) == -image
    report(5, "shift and reflection identities to height 50", started)


def test_criterion_6_halfspace_table(main_pres):
    started = time.perf_counter()
    for text, image, delta, center, radius_sq, bounded in TABLE3:
        h = exclusion_halfspace(main_pres, Slope.parse(text))
        assert h.delta == delta
        assert h.center == center
        assert h.radius.square().as_fraction() == radius_sq
        assert (h.kind is Kind.INSIDE_CIRCLE) == bounded
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(6, "half-space centres and radii, 8 rows", started)


def test_criterion_7_no_obstruction_certificate(main_pres):
    started = time.perf_counter()
    eight = [Slope.parse(t) for t, *_ in TABLE3]
    six = [Slope.parse(t) for t, *_ in TABLE3 if t not in ("-1/2", "7/16")]
    for family in (eight, six):
        cert, obstruction = certificate_for_slopes(main_pres, family)
        assert obstruction is None
        assert cert is not None
        assert cert.verdict.certifiable
        assert check_certificate(main_pres, cert)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    report(7, "re-verified certificates from 8 and 6 half-spaces", started)


def test_criterion_8_twist_equation(main_pres):
    started = time.perf_counter()
    eq = twist_equation(main_pres, Slope(1, 0))
    assert eq.inner_power == 5 and eq.outer_power == 2
    assert eq.inner.matrix() == eq.outer.matrix() == ((1, 0), (-2, 1))

    rng = random.Random(1860)
    count = 0
    while count < 1000:
        p, q = rng.randint(-80, 80), rng.randint(-80, 80)
        if (p, q) == (0, 0):
            continue
        s = Slope.of(p, q)
        p, q = s.p, s.q
        count += 1
        # Completion with p*sc - q*rc = 1, then the conjugation identity.
        g, a, b = _xgcd(p, -q)
        m = ((-q, -a), (p, b))
        conj = mat_mul(mat_mul(m, ((1, 2), (0, 1))), mat_inverse_unimodular(m))
        assert conj == twist_matrix(s).matrix()
    report(8, "twist equation and 1000 conjugation identities", started)


def _xgcd(a, b):
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def test_criterion_9_affine_equations(main_pres):
    started = time.perf_counter()
    shear, flip = ((1, 0), (5, 1)), ((-1, 0), (1, 1))
    assert induced_map_range(shear) == Mobius(1, 0, 5, 1)  # z/(5z+1)
    assert sublattice_matrix(main_pres, shear) == ((1, 0), (2, 1))
    assert induced_map_domain(main_pres, shear, (0, 0)) == Mobius(1, 0, 2, 1)
    # conj z / (conj z - 1) and -conj z
    assert induced_map_range(flip) == Mobius(1, 0, 1, -1, conjugating=True)
    assert induced_map_domain(main_pres, flip, (0, 0)) == Mobius(
        1, 0, 0, -1, conjugating=True
    )
    suite = consistency_suite(main_pres, [(shear, (0, 0)), (flip, (0, 0))], 30)
    assert suite.passed
    report(9, f"affine equations; consistency on {suite.checked} slopes", started)


def test_criterion_10_nonseparating_suite(main_pres, double_pres):
    started = time.perf_counter()
    g42 = FinAbGroup(4, 2)
    h42 = SymmetricFour(((0, 0), (1, 0), (2, 0), (1, 1)))
    fours = {coset_numbers(g42, h42, p) for p in cyclic_pairs(g42) if len(p.subgroup) == 4}
    twos = {coset_numbers(g42, h42, p) for p in cyclic_pairs(g42) if len(p.subgroup) == 2}
    assert fours == {(0, 0, 0, 1)} and twos == {(0, 1, 1, 2)}
    assert is_nonseparating(g42, h42)

    g66 = FinAbGroup(6, 6)
    h66 = SymmetricFour(((0, 2), (2, 0), (2, 2), (2, 4)))
    assert {coset_numbers(g66, h66, p) for p in cyclic_pairs(g66)} == {(0, 2, 2, 2)}
    assert is_nonseparating(g66, h66)

    # Translate lemma, exhaustively over small groups.
    for group in (FinAbGroup(4, 2), FinAbGroup(4, 4), FinAbGroup(2, 8)):
        involutions = [
            h for h in group.elements() if group.add(h, h) == group.zero()
        ]
        for subset in search_nonseparating(group):
            for shift in involutions:
                assert is_nonseparating(
                    group, translate_by_involution(group, subset, shift)
                )

    # Subgroup lemma on the double-cover embedding.
    g44 = FinAbGroup(4, 4)
    sub = frozenset((x, y) for x in range(4) for y in (0, 2))
    h44 = SymmetricFour(((0, 0), (1, 0), (2, 0), (1, 2)))
    assert is_nonseparating_in_subgroup(g44, sub, h44)
    assert is_nonseparating(g44, h44)

    for d in (3, 5, 7, 15):
        assert verify_nonexistence(FinAbGroup(2, 2 * d))

    refutation = degree2_refutation()
    assert refutation.entries and refutation.realizable == ()

    assert constant_teich_check(double_pres)
    assert not constant_teich_check(main_pres)
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    report(10, "nonseparating subset suite", started)


def test_criterion_11_horoball_equivariance(main_pres):
    started = time.perf_counter()
    generators = [(((-1, 0), (0, 1)), True), (((1, 1), (0, 1)), False),
                  (((0, -1), (1, 0)), False)]
    rng = random.Random(214)
    for _ in range(100):
        x = F(rng.randint(-50, 50), rng.randint(1, 16))
        y = F(rng.randint(1, 50), rng.randint(1, 16))
        p, q = rng.randint(-9, 9), rng.randint(-9, 9)
        if (p, q) == (0, 0):
            q = 1
        g = gcd(p, q)
        p, q = p // g, q // g
        for (mat, conjugating) in generators:
            (a, b), (c, d) = mat
            pp, qq = a * p + b * q, c * p + d * q
            yy = -y if conjugating else y
            nre, nim = a * x + b, a * yy
            dre, dim = c * x + d, c * yy
            den = dre * dre + dim * dim
            x2 = (nre * dre + nim * dim) / den
            y2 = (nim * dre - nre * dim) / den
            lhs = y2 / ((qq * x2 - pp) ** 2 + (qq * y2) ** 2)
            rhs = y / ((q * x - p) ** 2 + (q * y) ** 2)
            assert lhs == rhs

    for text, image, delta, center, radius_sq, bounded in TABLE3:
        h = exclusion_halfspace(main_pres, Slope.parse(text))
        if h.slope.p == 0 or h.image_slope.p == 0:
            continue
        rhs = (h.center + F(h.slope.q, h.slope.p)) * (
            h.center + F(h.image_slope.q, h.image_slope.p)
        )
        assert h.radius.square().as_fraction() == rhs
    report(11, "horoball equivariance and inversion identity", started)
