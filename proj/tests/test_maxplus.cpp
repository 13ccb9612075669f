#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "trop/families.hpp"

using namespace trop;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(7, 2) / Rational(7, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5).abs() == Rational(5));
    CHECK(Rational(5, 7).str() == "5/7");
    CHECK(Rational(-3).str() == "-3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5/2") == Rational(5, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse(" 10/4 ") == Rational(5, 2));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK_THROWS(Rational::parse("a"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/2/3"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational overflow is detected") {
    Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_NOTHROW(big - big);
    CHECK((big / Rational(2)) * Rational(2) == big);
}

TEST_CASE("tropical determinant 2x2") {
    auto d = trop_det2(Rational(0), Rational(-4), Rational(-4), Rational(0));
    CHECK(d.value == Rational(0));
    CHECK(d.attain_count == 1);

    d = trop_det2(Rational(0), Rational(0), Rational(0), Rational(0));
    CHECK(d.value == Rational(0));
    CHECK(d.attain_count == 2);

    // Drum minor on rows {1,3}, columns {1,2}: both diagonal sums are -10.
    Matrix4 drum = families::registry("drum");
    d = trop_det2(drum.at(0, 0), drum.at(0, 1), drum.at(2, 0), drum.at(2, 1));
    CHECK(d.value == Rational(-10));
    CHECK(d.attain_count == 2);
}

TEST_CASE("tropical determinant sizes and errors") {
    std::vector<Rational> m3{Rational(0), Rational(-1), Rational(-1), Rational(-1), Rational(0),
                             Rational(-1), Rational(-1), Rational(-1), Rational(0)};
    auto d3 = trop_det(m3, 3);
    CHECK(d3.value == Rational(0));
    CHECK(d3.attain_count == 1);

    auto d4 = trop_det(families::registry("b15"));
    CHECK(d4.attain_count == 1); // b15 satisfies the hypotheses, so it is regular

    CHECK_THROWS_AS(trop_det(m3, 1), std::invalid_argument);
    CHECK_THROWS_AS(trop_det(m3, 5), std::invalid_argument);
    CHECK_THROWS_AS(trop_det(m3, 2), std::invalid_argument); // wrong entry count

    testing::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> e;
        int n = static_cast<int>(rng.integer(2, 4));
        for (int k = 0; k < n * n; ++k) e.push_back(rng.rational(-6, 6));
        CHECK(trop_det(e, n).attain_count >= 1);
    }
}

TEST_CASE("kleene star predicate") {
    CHECK(is_kleene_star(Matrix4::zero()).ok);
    CHECK(is_kleene_star(families::registry("drum")).ok);

    Matrix4 bad = Matrix4::zero();
    bad.at(0, 1) = Rational(1);
    auto check = is_kleene_star(bad);
    CHECK_FALSE(check.ok);
    bool found = false;
    for (const auto& v : check.violations) found |= v.i == 0 && v.j == 0 && v.k == 1;
    CHECK(found); // a[1][2] + a[2][1] > a[1][1]
}

TEST_CASE("kleene closure") {
    CHECK(kleene_closure(Matrix4::zero()).matrix() == Matrix4::zero());

    // Fixed point on an existing Kleene star.
    Matrix4 k = families::gamma_delta(Rational(1), Rational(1), Rational(2));
    CHECK(kleene_closure(k).matrix() == k);

    // Path through index 4 beats the direct entry and the 2-step path.
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = i == j ? Rational(0) : Rational(-1);
    m.at(0, 2) = Rational(-10);
    m.at(0, 1) = Rational(-2);
    m.at(1, 2) = Rational(-2);
    KleeneMatrix closed = kleene_closure(m);
    CHECK(closed.at(0, 2) == Rational(-2));

    Matrix4 pos = Matrix4::zero();
    pos.at(1, 0) = Rational(1, 2);
    CHECK_THROWS_AS(kleene_closure(pos), std::invalid_argument);

    Matrix4 diag = Matrix4::zero();
    diag.at(2, 2) = Rational(-1);
    CHECK_THROWS_AS(kleene_closure(diag), std::invalid_argument);
}

TEST_CASE("kleene closure properties on random inputs") {
    testing::Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = i == j ? Rational(0) : Rational(-rng.integer(0, 9));
        KleeneMatrix closed = kleene_closure(m);
        CHECK(is_kleene_star(closed.matrix()).ok);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(m.at(i, j) <= closed.at(i, j));
        CHECK(kleene_closure(closed.matrix()).matrix() == closed.matrix());
        CHECK(maxplus_product(closed.matrix(), closed.matrix()) == closed.matrix());
    }
}

TEST_CASE("chart normalization") {
    Matrix4 left = families::penta555_left({Rational(2), Rational(2), Rational(2)},
                                           {Rational(1), Rational(1), Rational(1)}, Rational(7),
                                           Rational(8), Rational(9));
    CHECK(normalize_chart(left) == left); // fourth row already zero

    Matrix4 drum = families::registry("drum");
    Matrix4 chart = normalize_chart(drum);
    Vec4 col1 = chart.col(0);
    CHECK(col1 == Vec4{Rational(10), Rational(6), Rational(4), Rational(0)});
    for (int j = 0; j < 4; ++j) CHECK(chart.at(3, j).is_zero());

    testing::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = rng.rational(-9, 9);
        Matrix4 a0 = normalize_chart(m);
        for (int j = 0; j < 4; ++j) {
            Rational shift = m.at(3, j);
            for (int i = 0; i < 4; ++i) CHECK(a0.at(i, j) == m.at(i, j) - shift);
        }
    }
}

TEST_CASE("tropical distance") {
    ProjectivePoint p = ProjectivePoint::from_chart(Rational(6), Rational(3), Rational(3));
    ProjectivePoint q = ProjectivePoint::from_chart(Rational(0), Rational(-3), Rational(3));
    CHECK(tdist(p, p) == Rational(0));
    CHECK(tdist(p, q) == Rational(6));

    // A single differing coordinate: tropical and Euclidean agree.
    ProjectivePoint r = ProjectivePoint::from_chart(Rational(6), Rational(3), Rational(9, 2));
    CHECK(tdist(p, r) == Rational(3, 2));
    CHECK(euclid_sq(p, r) == Rational(9, 4));
}

TEST_CASE("tropical distance is a metric") {
    testing::Rng rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        ProjectivePoint a = rng.point(), b = rng.point(), c = rng.point();
        CHECK(tdist(a, b) >= Rational(0));
        CHECK(tdist(a, b) == tdist(b, a));
        CHECK(tdist(a, c) <= tdist(a, b) + tdist(b, c));
        CHECK((tdist(a, b).is_zero()) == (a == b));
    }
}

TEST_CASE("projective normalization") {
    ProjectivePoint p = ProjectivePoint::from_homogeneous({Rational(1), Rational(2), Rational(3), Rational(1)});
    CHECK(p[3].is_zero());
    CHECK(p[0] == Rational(0));
    ProjectivePoint q = ProjectivePoint::from_homogeneous({Rational(0), Rational(1), Rational(2), Rational(0)});
    CHECK(p == q);
}

TEST_CASE("cached minors and adiffs of a validated star") {
    KleeneMatrix a = KleeneMatrix::validate(families::registry("b15"));
    for (int rp = 0; rp < 6; ++rp)
        for (int cp = 0; cp < 6; ++cp) {
            int k = kPairs[rp][0], l = kPairs[rp][1];
            int i = kPairs[cp][0], j = kPairs[cp][1];
            auto expect = trop_det2(a.at(k, i), a.at(k, j), a.at(l, i), a.at(l, j));
            CHECK(a.minor(rp, cp).value == expect.value);
            CHECK(a.minor(rp, cp).attain_count == expect.attain_count);
            CHECK(a.adiff(rp, cp) == ((a.at(k, i) + a.at(l, j)) - (a.at(k, j) + a.at(l, i))).abs());
            // Symmetry conventions: order inside each pair is irrelevant.
            CHECK(a.adiff(k, l, i, j) == a.adiff(l, k, i, j));
            CHECK(a.adiff(k, l, i, j) == a.adiff(k, l, j, i));
            CHECK(a.adiff(k, l, i, j) == a.adiff(l, k, j, i));
        }
    CHECK_THROWS_AS(KleeneMatrix::validate([] {
                        Matrix4 bad = Matrix4::zero();
                        bad.at(1, 2) = Rational(3);
                        return bad;
                    }()),
                    std::invalid_argument);
}
