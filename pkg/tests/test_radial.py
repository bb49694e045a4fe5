from hypothesis import given

from conftest import angle_order, brute_cross, gp_sets
from fixtures import NINE_MINUS5, PARABOLA
from quadholes.generate import generate
from quadholes.radial import minus_count, radial_order, signature_sequence


def brute_signs(pts, lab):
    def inside(p, a, b, c):
        s = [brute_cross(a, b, p), brute_cross(b, c, p), brute_cross(c, a, p)]
        return all(v > 0 for v in s) or all(v < 0 for v in s)
    p0 = pts[lab[0]]
    return "".join("+" if inside(pts[lab[i]], p0, pts[lab[i - 1]], pts[lab[i + 1]]) else "-"
                   for i in range(2, len(lab) - 1))


def test_radial_examples():
    pts = [(0, 0), (-1, 1), (0, 2), (1, 1)]
    R = radial_order(pts)
    assert R.origin == 0 and R.order == (1, 2, 3)
    R = radial_order([(0, 0), (1, 1), (-1, 1)])
    assert R.labels == (0, 2, 1)


def test_bottommost_tie_break_by_x():
    R = radial_order([(5, 0), (2, 0), (3, 4)])
    assert R.origin == 1


@given(gp_sets(3, 15))
def test_radial_order_matches_angle_sort(pts):
    assert list(radial_order(pts).labels) == angle_order(pts)


@given(gp_sets(4, 15))
def test_signature_matches_brute_force(pts):
    R = radial_order(pts)
    assert str(signature_sequence(R, pts)) == brute_signs(pts, R.labels)


def test_convex_position_is_all_minus():
    for seed in range(5):
        pts = generate("convex", 8, seed)
        assert str(signature_sequence(radial_order(pts), pts)) == "-" * 5


def test_single_plus_and_counts():
    # p2 strictly inside triangle p0 p1 p3
    pts = [(0, 0), (-10, 10), (0, 3), (10, 10)]
    assert str(signature_sequence(radial_order(pts), pts)) == "+"
    assert minus_count("------") == 6
    assert str(signature_sequence(radial_order(PARABOLA), PARABOLA)) == "+" * 9


def test_runs_and_reversal():
    sig = signature_sequence(radial_order(NINE_MINUS5), NINE_MINUS5)
    assert str(sig) == "+-----"
    assert [(r.sign, r.start, r.length) for r in sig.runs] == [("+", 2, 1), ("-", 3, 5)]
    R = radial_order(NINE_MINUS5)
    Rr = R.reversed()
    assert Rr.labels == (R.labels[0],) + R.labels[:0:-1]
    assert str(signature_sequence(Rr, NINE_MINUS5)) == str(sig)[::-1]
    assert R.without(1, 2).labels == (R.labels[0],) + R.labels[3:]
    assert R.prefix(5).labels == R.labels[:5]
