#include "doctest_main.hpp"

#include "random_values.hpp"
#include "rf/cyclotomic.hpp"
#include "rf/hompoly.hpp"
#include "rf/linalg.hpp"
#include "rf/parse.hpp"
#include "rf/projmat.hpp"

#include <random>

using namespace rf;

namespace {

const Cyclotomic I = Cyclotomic::i();

HomPoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("rational normal form")
{
    Rational q = rat(6, -4);
    CHECK(numer(q) == -3);
    CHECK(denom(q) == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(parse_rational("10/4") == rat(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(15) == std::vector<long long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
    for (int n = 1; n <= 60; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) - 1 == euler_phi(n));
}

TEST_CASE("roots of unity")
{
    for (int n : {3, 5, 8, 10, 12, 16}) {
        CHECK(Cyclotomic::zeta(n).pow(n) == Cyclotomic(1));
        Cyclotomic sum(0);
        for (int k = 0; k < n; ++k) sum += Cyclotomic::zeta(n, k);
        CHECK(sum.is_zero());
    }
    CHECK(I * I == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(6).is_rational() == false);
    auto idx = Cyclotomic::zeta(8, 3).root_of_unity_index();
    REQUIRE(idx);
    CHECK(Cyclotomic::zeta(idx->first, idx->second) == Cyclotomic::zeta(8, 3));
    CHECK_FALSE((Cyclotomic(1) + 2 * I).root_of_unity_index());
    CHECK_FALSE(Cyclotomic(2).root_of_unity_index());
}

TEST_CASE("conjugate examples")
{
    CHECK(I.conjugate() == -I);
    CHECK(Cyclotomic(rat(3, 5)).conjugate() == Cyclotomic(rat(3, 5)));
    const Cyclotomic phi = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, -1);
    CHECK(phi.conjugate() == phi);
    CHECK(phi * phi == 1 - phi);
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int na = std::vector<int>{3, 4, 5, 8, 12}[trial % 5];
        const int nb = std::vector<int>{4, 5, 6, 8, 10}[(trial / 5) % 5];
        const Cyclotomic a = testing::random_cyclotomic(rng, na);
        const Cyclotomic b = testing::random_cyclotomic(rng, nb);
        const Cyclotomic c = testing::random_cyclotomic(rng, na);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK(a.conjugate().conjugate() == a);
    }
}

TEST_CASE("cross-conductor equality")
{
    std::mt19937 rng(11);
    for (int n : {3, 4, 5, 8}) {
        for (int k : {2, 3, 4}) {
            const Cyclotomic a = testing::random_cyclotomic(rng, n);
            const Cyclotomic b = a.embed(n * k);
            CHECK(b.conductor() % n == 0);
            CHECK(a == b);
        }
    }
    CHECK(Cyclotomic::zeta(3) == Cyclotomic::zeta(6, 2));
    CHECK(Cyclotomic::zeta(4) == Cyclotomic::zeta(8, 2));
}

TEST_CASE("square roots of rationals")
{
    for (long m : {2L, 3L, 5L, 6L, 7L, 12L, -1L, -3L, 50L}) {
        const Cyclotomic r = cyclotomic_sqrt(Rational(m));
        CHECK(r * r == Cyclotomic(m));
    }
    const Cyclotomic r = cyclotomic_sqrt(rat(3, 7));
    CHECK(r * r == Cyclotomic(rat(3, 7)));
}

TEST_CASE("compose examples")
{
    const HomPoly f = P("u0^5*u1 - u0*u1^5");
    CHECK(compose(f, mat2(I, 0, 0, -I)) == f);
    CHECK(compose(P("u0^2"), mat2(0, 1, 1, 0)) == P("u1^2"));
    std::mt19937 rng(3);
    const HomPoly g = testing::random_hompoly(rng, 6, 8);
    CHECK(compose(g, mat2(1, 0, 0, 1)) == g);
}

TEST_CASE("compose respects the group action")
{
    std::mt19937 rng(5);
    const std::vector<Mat2> mats = {
        mat2(Cyclotomic::zeta(8), 0, 0, Cyclotomic::zeta(8, -1)),
        mat2(0, I, I, 0),
        mat2(0, 1, -1, 0),
        mat2(1 - I, 1 - I, -1 - I, 1 + I),
        mat2(Cyclotomic::zeta(5) + Cyclotomic::zeta(5, -1), 1, 1, -Cyclotomic::zeta(5) - Cyclotomic::zeta(5, -1)),
    };
    for (int trial = 0; trial < 10; ++trial) {
        const HomPoly g = testing::random_hompoly(rng, 2 + trial % 5, 4);
        const Mat2& m1 = mats[static_cast<std::size_t>(trial) % mats.size()];
        const Mat2& m2 = mats[static_cast<std::size_t>(trial + 2) % mats.size()];
        const Mat2 prod = m1 * m2;
        CHECK(compose(g, prod) == compose(compose(g, m1), m2));
    }
}

TEST_CASE("from_factors")
{
    const Cyclotomic one(1), zero(0);
    CHECK(from_factors({{{zero, one}, 1}, {{one, zero}, 1}}, one) == P("u0*u1"));
    const HomPoly d = from_factors({{{one, one}, 1}, {{one, -one}, 1}}, one);
    CHECK((d == P("u0^2 - u1^2") || d == P("u1^2 - u0^2")));
    CHECK(from_factors({{{zero, one}, 3}, {{one, zero}, 5}}, one) == P("u0^3*u1^5"));
    CHECK_THROWS_AS(from_factors({{{zero, one}, 1}}, zero), DomainError);
    CHECK_THROWS_AS(from_factors({{{zero, one}, 1}, {{zero, 2 * one}, 2}}, one), DomainError);
}

TEST_CASE("from_factors then division recovers multiplicities")
{
    const std::vector<std::pair<P1Point, int>> fs = {
        {{Cyclotomic(0), Cyclotomic(1)}, 2},
        {{Cyclotomic(1), Cyclotomic(0)}, 3},
        {{Cyclotomic(1), I}, 1},
        {{Cyclotomic::zeta(5), Cyclotomic(1)}, 4},
    };
    const HomPoly g = from_factors(fs, Cyclotomic(7));
    CHECK(g.degree() == 10);
    for (const auto& [pt, m] : fs) {
        const HomPoly lin = HomPoly::linear(pt.q, -pt.p);
        HomPoly cur = g;
        int count = 0;
        while (auto q = cur.divide(lin)) {
            cur = *q;
            ++count;
        }
        CHECK(count == m);
    }
    auto rs = root_structure(g);
    CHECK(rs.distinct_roots() == 4);
    CHECK(rs.multiplicities() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("square_test")
{
    auto v = square_test(P("(u0^2 + u1^2)^2"));
    CHECK(v.is_square);
    REQUIRE(v.root);
    const HomPoly r = *v.root;
    CHECK((r == P("u0^2 + u1^2") || r == P("-u0^2 - u1^2")));
    CHECK_FALSE(square_test(P("u0^3*u1^3")).is_square);
    CHECK_FALSE(square_test(P("u0^5*u1 - u0*u1^5")).is_square);
    const HomPoly f = P("u0^5*u1 - u0*u1^5");
    const auto gcd = UPoly<Cyclotomic>::gcd(f.dehomogenize(), f.derivative_u0().dehomogenize());
    CHECK(gcd.degree() == 0);
    auto w = square_test(P("3*u0^2*u1^4"));
    CHECK(w.is_square);
    CHECK(w.scale * (*w.root * *w.root) == P("3*u0^2*u1^4"));
    CHECK_THROWS_AS(square_test(HomPoly(4)), DomainError);
}

TEST_CASE("projective matrices")
{
    const ProjMat2 a(mat2(2, 4, 6, 10));
    CHECK(a.matrix()(0, 0) == Cyclotomic(1));
    CHECK(ProjMat2(a.matrix()) == a);
    CHECK(ProjMat2(mat2(0, I, I, 0)) == ProjMat2(mat2(0, 1, 1, 0)));
    CHECK((a * a.inverse()).is_identity());
    CHECK_THROWS_AS(ProjMat2(mat2(1, 2, 2, 4)), DomainError);
    CHECK_THROWS_AS(SL2Mat(mat2(2, 0, 0, 1)), DomainError);
    CHECK(SL2Mat(mat2(I, 0, 0, -I)).matrix()(1, 1) == -I);
}

TEST_CASE("exact linear algebra")
{
    MatQ a(3, 3);
    a << 2, 1, 1, 1, 3, 2, 1, 0, 0;
    CHECK(determinant<Rational>(a) == Rational(-1));
    VecQ b(3);
    b << 4, 5, 6;
    auto x = solve<Rational>(a, b);
    REQUIRE(x);
    CHECK((a * *x - b).isZero(Rational(0)) == true);
    MatQ s(2, 3);
    s << 1, 2, 3, 2, 4, 6;
    auto k = kernel<Rational>(s);
    CHECK(k.cols() == 2);
    CHECK((s * k).isZero(Rational(0)) == true);
}

TEST_CASE("parse_poly")
{
    const HomPoly f = P("u0^5*u1 - u0*u1^5");
    CHECK(f.degree() == 6);
    CHECK(f.terms().size() == 2);
    CHECK(f.coeff(5) == Cyclotomic(1));
    CHECK(f.coeff(1) == Cyclotomic(-1));
    const HomPoly z = P("zeta(8)*u0^4 + u1^4");
    CHECK(z.coeff(4) == Cyclotomic::zeta(8));
    try {
        P("u0^2 + u1");
        FAIL("expected an error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("{2, 1}") != std::string::npos);
    }
    CHECK_THROWS_AS(P("u0 - u0"), DomainError);
    CHECK_THROWS_AS(P("u0 + * u1"), DomainError);
    CHECK(P("3/5*u0 + i*u1").coeff(1) == Cyclotomic(rat(3, 5)));
}

TEST_CASE("render and parse round trip")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = std::vector<int>{1, 3, 4, 5, 8, 12, 16}[static_cast<std::size_t>(trial) % 7];
        const HomPoly g = testing::random_hompoly(rng, 1 + trial % 7, n);
        CHECK(parse_poly(g.to_string()) == g);
    }
}
