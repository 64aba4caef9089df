#include "doctest_main.hpp"

#include "rf/error.hpp"
#include "rf/schwarzenberger.hpp"

#include <random>

using namespace rf;

namespace {

using P2 = MPoly<Rational>;

LaurentPoly2 poly(std::initializer_list<std::tuple<int, int, long>> terms, int k = 0)
{
    P2 p(2);
    for (const auto& [i, j, c] : terms) p.add_term({i, j}, Rational(c));
    return {p, k};
}

Rational power(const Rational& x, int e)
{
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= x;
    return e < 0 ? Rational(1) / r : r;
}

// Value of poly(u, v) / v^k at a rational point.
Rational evaluate(const LaurentPoly2& f, const Rational& u, const Rational& v)
{
    Rational s = 0;
    for (const auto& [e, c] : f.poly().terms()) s += c * power(u, e[0]) * power(v, e[1]);
    return s / power(v, f.v_denominator());
}

// (s^k - t^k) / (s - t) computed directly.
Rational divided_difference(const Rational& s, const Rational& t, int k) { return (power(s, k) - power(t, k)) / (s - t); }

// A at u = s + t, v = st from the closed form 1/(s-t) [[s^b - t^b, st(s^(b-1) - t^(b-1))], [s^(b+1) - t^(b+1), st(s^b - t^b)]].
std::array<std::array<Rational, 2>, 2> closed_form(const Rational& s, const Rational& t, int b)
{
    const Rational st = s * t;
    return {{{divided_difference(s, t, b), st * divided_difference(s, t, b - 1)},
             {divided_difference(s, t, b + 1), st * divided_difference(s, t, b)}}};
}

LaurentPoly2 random_laurent(std::mt19937& rng)
{
    std::uniform_int_distribution<int> exp(0, 4), coeff(-6, 6), den(0, 3), count(1, 5);
    P2 p(2);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) p.add_term({exp(rng), exp(rng)}, Rational(coeff(rng)));
    return {p, den(rng)};
}

}  // namespace

TEST_CASE("hom_sym small values")
{
    CHECK(hom_sym(0).is_zero());
    CHECK(hom_sym(1) == LaurentPoly2::constant(1));
    CHECK(hom_sym(2) == LaurentPoly2::u());
    CHECK(hom_sym(3) == poly({{2, 0, 1}, {0, 1, -1}}));
    CHECK_THROWS_AS(hom_sym(-1), DomainError);
}

TEST_CASE("hom_sym expands the divided differences for k up to 20")
{
    // Substitute u = s + t, v = st and compare P_k (s - t) with s^k - t^k.
    const P2 s = P2::var(2, 0), t = P2::var(2, 1);
    const std::vector<P2> images{s + t, s * t};
    for (int k = 0; k <= 20; ++k) {
        const LaurentPoly2 pk = hom_sym(k);
        REQUIRE(pk.v_denominator() == 0);
        const P2 lhs = pk.poly().substitute(images) * (s - t);
        CHECK_MESSAGE(lhs == s.pow(k) - t.pow(k), "k = " << k);
    }
}

TEST_CASE("Schwarzenberger matrix for b = 1 and b = 2")
{
    const LaurentPoly2 u = LaurentPoly2::u(), v = LaurentPoly2::v();
    const Mat2Laurent a1 = schwarzenberger_matrix(1);
    CHECK(a1[0][0] == LaurentPoly2::constant(1));
    CHECK(a1[0][1].is_zero());
    CHECK(a1[1][0] == u);
    CHECK(a1[1][1] == v);
    CHECK(determinant(a1) == v);

    const Mat2Laurent a2 = schwarzenberger_matrix(2);
    CHECK(a2[0][0] == u);
    CHECK(a2[0][1] == v);
    CHECK(a2[1][0] == u * u - v);
    CHECK(a2[1][1] == u * v);
    CHECK(determinant(a2) == v * v);
    CHECK_THROWS_AS(schwarzenberger_matrix(0), DomainError);
}

TEST_CASE("determinant is v^b for b in 1..12")
{
    for (int b = 1; b <= 12; ++b) CHECK(determinant(schwarzenberger_matrix(b)) == LaurentPoly2::v_power(b));
}

TEST_CASE("matrix entries agree with the closed form in s and t")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int b = 1; b <= 12; ++b) {
        const Mat2Laurent a = schwarzenberger_matrix(b);
        for (int trial = 0; trial < 6; ++trial) {
            const Rational s = rat(num(rng), den(rng)), t = rat(num(rng), den(rng));
            if (s == t || s == 0 || t == 0) continue;
            const auto expected = closed_form(s, t, b);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(evaluate(a[i][j], s + t, s * t) == expected[i][j]);
        }
    }
}

TEST_CASE("gluing identity for b = 1..12")
{
    const GluingVerdict g1 = verify_gluing(1);
    CHECK(g1.holds);
    CHECK(g1.product == scalar_identity(Rational(1)));
    const GluingVerdict g2 = verify_gluing(2);
    CHECK(g2.holds);
    CHECK(g2.product == scalar_identity(Rational(-1)));
    for (int b = 1; b <= 12; ++b) {
        const GluingVerdict g = verify_gluing(b);
        CHECK(g.determinant_ok);
        CHECK(g.expected_sign == (b % 2 == 1 ? 1 : -1));
        CHECK_MESSAGE(g.holds, "b = " << b);
        CHECK(g.product == scalar_identity(Rational(b % 2 == 1 ? 1 : -1)));
    }
}

TEST_CASE("gluing identity agrees with the closed form under s -> -1/s, t -> -1/t")
{
    // u' = -u/v and v' = 1/v correspond to the roots -1/s and -1/t.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    for (int b = 1; b <= 12; ++b) {
        for (int trial = 0; trial < 4; ++trial) {
            const Rational s = rat(num(rng), den(rng)), t = rat(num(rng), den(rng));
            if (s == t || s == 0 || t == 0) continue;
            const auto a = closed_form(s, t, b);
            const auto c = closed_form(Rational(-1) / s, Rational(-1) / t, b);
            const Rational sign = b % 2 == 1 ? 1 : -1;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    const Rational entry = a[i][0] * c[0][j] + a[i][1] * c[1][j];
                    CHECK(entry == (i == j ? sign : Rational(0)));
                }
        }
    }
}

TEST_CASE("Laurent arithmetic keeps reduced form and the gluing substitution is an involution")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly2 f = random_laurent(rng), g = random_laurent(rng);
        for (const LaurentPoly2& h : {f, g, f + g, f - g, f * g, f.gluing_substitution()}) {
            if (h.v_denominator() == 0) continue;
            bool v_divides = true;
            for (const auto& [e, c] : h.poly().terms()) v_divides = v_divides && e[1] > 0;
            CHECK_FALSE(v_divides);
        }
        CHECK(f.gluing_substitution().gluing_substitution() == f);
        CHECK((f * g).gluing_substitution() == f.gluing_substitution() * g.gluing_substitution());
        const Rational u = rat(num(rng), den(rng)), v = rat(num(rng) == 0 ? 1 : num(rng), den(rng));
        if (v == 0) continue;
        CHECK(evaluate(f * g, u, v) == evaluate(f, u, v) * evaluate(g, u, v));
        CHECK(evaluate(f + g, u, v) == evaluate(f, u, v) + evaluate(g, u, v));
        CHECK(evaluate(f.gluing_substitution(), u, v) == evaluate(f, -u / v, Rational(1) / v));
    }
}
