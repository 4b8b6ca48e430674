#include <doctest.h>

#include "kdyck/graded.hpp"
#include "kdyck/maps.hpp"
#include "kdyck/tableau.hpp"

using namespace kdyck;

namespace {

QTPolynomial q_plus_t() {
    QTPolynomial p;
    p.add_term(1, 0, 1);
    p.add_term(0, 1, 1);
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    QTPolynomial square = q_plus_t() * q_plus_t();
    QTPolynomial expected;
    expected.add_term(2, 0, 1);
    expected.add_term(1, 1, 2);
    expected.add_term(0, 2, 1);
    CHECK(square == expected);

    QTPolynomial zero = q_plus_t() - q_plus_t();
    CHECK(zero.is_zero());
    CHECK(zero.to_string() == "0");

    QTPolynomial cancel;
    cancel.add_term(3, 2, 5);
    cancel.add_term(3, 2, -5);
    CHECK(cancel.is_zero());

    CHECK_THROWS_AS(QTPolynomial::monomial(-1, 0), std::invalid_argument);
    CHECK(QTPolynomial::monomial(1, 1, 0).is_zero());
}

TEST_CASE("swapping and symmetry") {
    CHECK(q_plus_t().swapped() == q_plus_t());
    SymmetryResult sym = symmetry_check(q_plus_t());
    CHECK(sym.symmetric);
    CHECK(sym.difference.is_zero());

    QTPolynomial skew = QTPolynomial::monomial(2, 0);
    SymmetryResult askew = symmetry_check(skew);
    CHECK_FALSE(askew.symmetric);
    QTPolynomial expected;
    expected.add_term(2, 0, 1);
    expected.add_term(0, 2, -1);
    CHECK(askew.difference == expected);
}

TEST_CASE("canonical text") {
    CHECK(q_plus_t().to_string() == "t + q");
    CHECK(QTPolynomial::monomial(0, 0, 7).to_string() == "7");
    CHECK(QTPolynomial::monomial(2, 1, -3).to_string() == "-3*q^2*t");

    QTPolynomial difference;
    difference.add_term(4, 1, -1);
    difference.add_term(1, 4, 1);
    difference.add_term(3, 1, 1);
    difference.add_term(1, 3, -1);
    CHECK(difference.to_string() == "-q*t^3 + q*t^4 + q^3*t - q^4*t");
}

TEST_CASE("json round trip") {
    QTPolynomial poly;
    poly.add_term(0, 3, mpz_class("1267650600228229401496703205376"));  // 2^100
    poly.add_term(2, 1, -4);
    CHECK(QTPolynomial::from_terms_json(poly.terms_json()) == poly);
    CHECK(poly.terms_json()[0]["c"] == "1267650600228229401496703205376");
}

TEST_CASE("statistic registry") {
    for (Statistic stat : all_statistics())
        CHECK(statistic_from_name(statistic_name(stat)) == stat);
    CHECK_THROWS_AS(statistic_from_name("ddinv"), std::invalid_argument);
}

TEST_CASE("graded polynomials") {
    CHECK(graded_poly(enumerate_paths(KVector({1, 1})), Statistic::Area, Statistic::Depth) ==
          q_plus_t());
    CHECK(graded_poly(enumerate_paths(KVector({6})), Statistic::Area, Statistic::Depth) ==
          QTPolynomial::monomial(0, 0));

    QTPolynomial catalan3 =
        graded_poly(enumerate_paths(KVector({1, 1, 1})), Statistic::Area, Statistic::Depth);
    CHECK(catalan3.coefficient_sum() == 5);
    CHECK(symmetry_check(catalan3).symmetric);
}

TEST_CASE("class polynomials") {
    CHECK(symmetry_check(class_poly(KVector({1, 3}), Statistic::Area, Statistic::Depth))
              .symmetric);

    // A constant-vector class has a single rearrangement, so a prefixed
    // class polynomial is just the single-vector polynomial.
    CHECK(class_poly(KVector({2, 2}), Statistic::Area, Statistic::Depth, 3) ==
          graded_poly(enumerate_paths(KVector({3, 2, 2})), Statistic::Area, Statistic::Depth));

    CHECK_THROWS_AS(
        class_poly(KVector({1, 1}), Statistic::Area, Statistic::Depth, std::nullopt,
                   EnumerationOptions{3}),
        std::invalid_argument);
}

TEST_CASE("area-depth equals area-bounce for short vectors") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            std::vector<DyckPath> paths = enumerate_paths(KVector({i, j}));
            CHECK(graded_poly(paths, Statistic::Area, Statistic::Depth) ==
                  graded_poly(paths, Statistic::Area, Statistic::Bounce));
        }
    for (int a = 1; a <= 3; ++a)
        for (int c = 1; c <= 3; ++c) {
            std::vector<DyckPath> paths = enumerate_paths(KVector({a, 1, c}));
            CHECK(graded_poly(paths, Statistic::Area, Statistic::Depth) ==
                  graded_poly(paths, Statistic::Area, Statistic::Bounce));
        }
}

TEST_CASE("symmetric families") {
    // (a, b, ..., b, c) vectors are symmetric in (area, depth).
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                CHECK(symmetry_check(graded_poly(enumerate_paths(KVector({a, b, c})),
                                                 Statistic::Area, Statistic::Depth))
                          .symmetric);
            }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                CHECK(symmetry_check(graded_poly(enumerate_paths(KVector({a, b, b, c})),
                                                 Statistic::Area, Statistic::Depth))
                          .symmetric);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                CHECK(symmetry_check(graded_poly(enumerate_paths(KVector({a, b, b, b, c})),
                                                 Statistic::Area, Statistic::Depth))
                          .symmetric);
}

TEST_CASE("prefixed class polynomials are symmetric") {
    for (int a = 1; a <= 4; ++a)
        for (int m = 1; m <= 6; ++m)
            for (const KVector& shape : partitions_of(m))
                CHECK(symmetry_check(
                          class_poly(shape, Statistic::Area, Statistic::Depth, a))
                          .symmetric);
}

TEST_CASE("last part does not change the polynomial") {
    QTPolynomial base =
        graded_poly(enumerate_paths(KVector({2, 1, 1})), Statistic::Area, Statistic::Depth);
    for (int last = 2; last <= 4; ++last)
        CHECK(graded_poly(enumerate_paths(KVector({2, 1, last})), Statistic::Area,
                          Statistic::Depth) == base);
}

TEST_CASE("closed-form series") {
    QTPolynomial expected;  // the five paths of D_(1,1,1)
    expected.add_term(3, 0, 1);
    expected.add_term(2, 1, 1);
    expected.add_term(1, 1, 1);
    expected.add_term(1, 2, 1);
    expected.add_term(0, 3, 1);
    CHECK(closed_form_abc(1, 1, 1) == expected);
    CHECK(closed_form_abc(1, 1, 1).coefficient_sum() == 5);

    for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
        QTPolynomial at_one = closed_form_abc(a, b, 1);
        CHECK(closed_form_abc(a, b, 4) == at_one);
        CHECK(at_one == graded_poly(enumerate_paths(KVector({a, b, 1})), Statistic::Area,
                                    Statistic::Depth));
    }

    CHECK_THROWS_AS(closed_form_abc(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_abc(1, 13, 1), std::invalid_argument);
}
