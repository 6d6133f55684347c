#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wreath/error.hpp"

using namespace testsupport;

TEST_CASE("rational parsing and canonical printing") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(rational_str(parse_rational("-3/6")) == "-1/2");
    CHECK(parse_rational("7") == 7);
    CHECK(rational_str(Rational(0)) == "0");
    CHECK(rational_str(Rational(5, 1)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("a/2"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 7) == 0);
}

TEST_CASE("exact linear algebra") {
    Mat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    CHECK(rank(m) == 1);

    Mat id = Mat::identity(3);
    CHECK(rank(id) == 3);
    CHECK(id.apply(qv({"1", "2", "3"})) == qv({"1", "2", "3"}));

    // 2x2 system with a unique solution.
    Mat a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = parse_rational("-1");
    auto x = solve(a, qv({"3", "1"}));
    REQUIRE(x.has_value());
    CHECK(*x == qv({"2", "1"}));

    // Inconsistent system.
    CHECK_FALSE(solve(m, qv({"1", "0"})).has_value());
}

TEST_CASE("bracket on sl2 and Heisenberg") {
    const LieAlgebra alg = sl2();
    CHECK(bracket(alg, unit(3, 1), unit(3, 2)) == qv({"1", "0", "0"})); // [e,f] = h
    CHECK(bracket(alg, unit(3, 0), unit(3, 1)) == qv({"0", "2", "0"})); // [h,e] = 2e

    const LieAlgebra h = heisenberg();
    CHECK(bracket(h, unit(3, 0), unit(3, 1)) == unit(3, 2));
    CHECK(is_zero(bracket(h, unit(3, 0), unit(3, 2))));

    Sampler sampler(7);
    for (int i = 0; i < 10; ++i) {
        const Vec x = sampler.vector(3);
        CHECK(is_zero(bracket(alg, x, x)));
    }
    CHECK_THROWS_AS(bracket(alg, qv({"1", "0"}), unit(3, 0)), Error);
}

TEST_CASE("ad matrices") {
    const LieAlgebra h = heisenberg();
    const Mat ad_e1 = ad(h, unit(3, 0));
    CHECK(ad_e1.apply(unit(3, 1)) == unit(3, 2)); // e2 -> e3
    CHECK(is_zero(ad_e1.apply(unit(3, 0))));
    CHECK(is_zero(ad_e1.apply(unit(3, 2))));

    CHECK(ad(h, zero_vec(3)) == Mat(3, 3));

    const LieAlgebra s = sl2();
    const Mat ad_h = ad(s, unit(3, 0));
    Mat expected(3, 3);
    expected.at(1, 1) = 2;
    expected.at(2, 2) = parse_rational("-2");
    CHECK(ad_h == expected);

    // Linearity in y.
    Sampler sampler(11);
    for (int i = 0; i < 5; ++i) {
        const Vec y1 = sampler.vector(3), y2 = sampler.vector(3);
        const Rational c = sampler.rational();
        const Mat lhs = ad(s, add(scale(c, y1), y2));
        const Mat rhs = scale(c, ad(s, y1)) + ad(s, y2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("check_lie_algebra catches violations") {
    CHECK(check_lie_algebra(sl2()).ok());
    CHECK(check_lie_algebra(heisenberg()).ok());
    CHECK(check_lie_algebra(solvable2()).ok());
    CHECK(check_lie_algebra(solvable3()).ok());

    // [e1,e2] = e3 but [e2,e1] = e3.
    std::vector<Rational> broken(27, Rational(0));
    broken[(0 * 3 + 1) * 3 + 2] = 1;
    broken[(1 * 3 + 0) * 3 + 2] = 1;
    const LieAlgebra asym("broken", {"e1", "e2", "e3"}, broken);
    const auto report = check_lie_algebra(asym);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("antisymmetry") != std::string::npos);
    CHECK(report.violations.front().find("(e1, e2)") != std::string::npos);

    // sl2-like table with [e,f] = h + e fails Jacobi.
    const LieAlgebra bad = LieAlgebra::from_pairs("bad", {"h", "e", "f"},
                                                  {{0, 1, qv({"0", "2", "0"})},
                                                   {0, 2, qv({"0", "0", "-2"})},
                                                   {1, 2, qv({"1", "1", "0"})}});
    const auto bad_report = check_lie_algebra(bad);
    REQUIRE_FALSE(bad_report.ok());
    CHECK(bad_report.violations.front().find("Jacobi") != std::string::npos);
}

TEST_CASE("quotient of Heisenberg by its center") {
    const LieAlgebra h = heisenberg();
    const QuotientResult qr = quotient(h, {unit(3, 2)});
    CHECK(qr.quotient.dim() == 2);
    CHECK(qr.quotient.labels() == std::vector<std::string>{"e1", "e2"});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(is_zero(qr.quotient.basis_bracket(i, j)));
    // Projection onto the first two coordinates.
    CHECK(qr.projection.apply(qv({"5", "7", "9"})) == qv({"5", "7"}));
    // p vanishes on the ideal and has full rank.
    CHECK(is_zero(qr.projection.apply(unit(3, 2))));
    CHECK(rank(qr.projection) == 2);
}

TEST_CASE("quotient requires an ideal and independent vectors") {
    CHECK_THROWS_AS(quotient(sl2(), {unit(3, 1)}), Error); // span(e) is not an ideal
    CHECK_THROWS_AS(quotient(heisenberg(), {unit(3, 2), scale(Rational(2), unit(3, 2))}), Error);

    // Abelian algebras: every subspace is an ideal, all quotients abelian.
    const LieAlgebra ab = LieAlgebra::abelian("ab3", 3);
    const QuotientResult qr = quotient(ab, {qv({"1", "1", "0"})});
    CHECK(qr.quotient.dim() == 2);
    CHECK(check_lie_algebra(qr.quotient).ok());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(is_zero(qr.quotient.basis_bracket(i, j)));
}

TEST_CASE("quotient projection is a homomorphism") {
    // Non-coordinate ideal inside solvable3: span(e1 + e2) is an ideal.
    const LieAlgebra s3 = solvable3();
    const QuotientResult qr = quotient(s3, {qv({"1", "1", "0"})});
    CHECK(qr.quotient.dim() == 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Vec lhs = qr.projection.apply(s3.basis_bracket(i, j));
            const Vec rhs = bracket(qr.quotient, qr.projection.apply(unit(3, i)),
                                    qr.projection.apply(unit(3, j)));
            CHECK(lhs == rhs);
        }
}
