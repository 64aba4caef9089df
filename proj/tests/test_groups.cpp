#include "doctest_main.hpp"

#include "random_values.hpp"
#include "rf/groups.hpp"
#include "rf/parse.hpp"

#include <random>
#include <set>

using namespace rf;

namespace {

std::vector<std::string> names(const std::vector<CohomologyClass>& classes)
{
    std::vector<std::string> out;
    for (const auto& c : classes) out.push_back(c.name);
    return out;
}

std::set<std::string> expected_h1(const GroupLabel& g)
{
    switch (g.kind) {
    case GroupLabel::Kind::A:
        if (g.l % 2 == 1) return {"I2"};
        return {"I2", "omega" + std::to_string(2 * g.l)};
    case GroupLabel::Kind::D:
        if (g.l % 2 == 1) return {"I2", "f"};
        return {"I2", "omega" + std::to_string(2 * g.l), "f", "h"};
    case GroupLabel::Kind::E6: return {"I2", "h"};
    case GroupLabel::Kind::E7: return {"I2", "omega8", "h"};
    case GroupLabel::Kind::E8: return {"I2", "h"};
    }
    return {};
}

std::vector<GroupLabel> table_labels()
{
    std::vector<GroupLabel> out;
    for (int l = 1; l <= 8; ++l) out.push_back(GroupLabel::A(l));
    for (int l = 2; l <= 8; ++l) out.push_back(GroupLabel::D(l));
    out.push_back(GroupLabel::E6());
    out.push_back(GroupLabel::E7());
    out.push_back(GroupLabel::E8());
    return out;
}

// Orbit counting: |Z1 / ~| = (1/|G|) * sum over b of #{a : b^{-1} a conj(b) = a}.
int burnside_count(const FiniteProjGroup& g)
{
    const auto z1 = cocycles(g);
    int fixed = 0;
    for (const auto& b : g.elements)
        for (const auto& a : z1)
            if (b.inverse() * a * b.conjugate() == a) ++fixed;
    REQUIRE(fixed % g.order() == 0);
    return fixed / g.order();
}

}  // namespace

TEST_CASE("catalog orders")
{
    CHECK(catalog(GroupLabel::E8()).order() == 60);
    CHECK(catalog(GroupLabel::A(3)).order() == 3);
    CHECK(catalog(GroupLabel::D(2)).order() == 4);
    CHECK(catalog(GroupLabel::E6()).order() == 12);
    CHECK(catalog(GroupLabel::E7()).order() == 24);
    for (int l = 1; l <= 10; ++l) CHECK(catalog(GroupLabel::A(l)).order() == l);
    for (int l = 2; l <= 10; ++l) CHECK(catalog(GroupLabel::D(l)).order() == 2 * l);
    CHECK_THROWS_AS(GroupLabel::A(0), DomainError);
    CHECK_THROWS_AS(GroupLabel::D(1), DomainError);
    CHECK(GroupLabel::parse("D12").name() == "D12");
    CHECK_THROWS_AS(GroupLabel::parse("F4"), DomainError);
}

TEST_CASE("closure examples")
{
    CHECK(close({{"omega4", omega(4)}}).order() == 2);
    CHECK(close({{"f", gen_f()}}).order() == 2);
    CHECK(close({{"omega4", omega(4)}, {"f", gen_f()}, {"alpha", gen_alpha()}}).order() == 12);
    const Mat2 infinite = mat2(1, 1, 0, 1);
    CHECK_THROWS_AS(close({{"t", infinite}}), DomainError);
    CHECK_THROWS_AS(close({{"t", infinite}}, 10), DomainError);
}

TEST_CASE("closure is a group")
{
    for (const auto& label : table_labels()) {
        const auto g = catalog(label);
        CHECK(g.elements.front().is_identity());
        for (const auto& a : g.elements) {
            CHECK(g.contains(a.inverse()));
            for (const auto& b : g.elements) CHECK(g.contains(a * b));
        }
    }
}

TEST_CASE("catalog groups are stable under conjugation")
{
    for (const auto& label : table_labels()) CHECK(catalog(label).is_gamma_stable());
}

TEST_CASE("h1 table")
{
    for (const auto& label : table_labels()) {
        CAPTURE(label.name());
        const auto g = catalog(label);
        const auto classes = h1(g);
        const auto got = names(classes);
        CHECK(std::set<std::string>(got.begin(), got.end()) == expected_h1(label));
        CHECK(got.size() == expected_h1(label).size());
        CHECK(got.front() == "I2");
        CHECK(static_cast<int>(classes.size()) == burnside_count(g));
    }
    CHECK(names(h1(catalog(GroupLabel::E7()))) == std::vector<std::string>{"I2", "omega8", "h"});
    CHECK(names(h1(catalog(GroupLabel::A(5)))) == std::vector<std::string>{"I2"});
}

TEST_CASE("h1 partitions the cocycles")
{
    for (const auto& label : table_labels()) {
        const auto g = catalog(label);
        const auto z1 = cocycles(g);
        const auto classes = h1(g);
        std::size_t total = 0;
        for (const auto& c : classes) total += c.members.size();
        CHECK(total == z1.size());
        for (const auto& a : z1) {
            int hits = 0;
            for (const auto& c : classes)
                for (const auto& m : c.members)
                    if (m == a) ++hits;
            CHECK(hits == 1);
        }
        for (const auto& c : classes) {
            CHECK(c.representative.conjugate() == c.representative.inverse());
            for (const auto& m : c.members) CHECK(ProjMat2::compare_in(c.representative, m, g.conductor()) <= 0);
        }
    }
}

TEST_CASE("h1 rejects groups not stable under conjugation")
{
    const Mat2 p = mat2(1, Cyclotomic::i(), 0, 1);
    const Mat2 r = p * mat2(1, 0, 0, Cyclotomic::zeta(3)) * adjugate(p);
    const auto twisted = close({{"r", r}});
    CHECK(twisted.order() == 3);
    CHECK_FALSE(twisted.is_gamma_stable());
    CHECK_THROWS_AS(h1(twisted), DomainError);
}

TEST_CASE("semi_invariant examples")
{
    const auto e7 = catalog(GroupLabel::E7());
    auto s = semi_invariant(parse_poly("u0^8 + 14*u0^4*u1^4 + u1^8"), e7);
    CHECK(s.yes);
    for (const auto& c : s.characters) CHECK(c == Cyclotomic(1));
    for (int l = 1; l <= 6; ++l) {
        auto t = semi_invariant(parse_poly("u0*u1"), catalog(GroupLabel::A(l)));
        CHECK(t.yes);
        CHECK(t.characters[0] == Cyclotomic(1));
    }
    auto u = semi_invariant(parse_poly("u0^5*u1 - u0*u1^5"), e7);
    CHECK(u.yes);
    CHECK(e7.generators[0].name == "omega8");
    CHECK(u.characters[0] == Cyclotomic(-1));
    CHECK_FALSE(semi_invariant(parse_poly("u0^3*u1 + u1^4"), e7).yes);
}

TEST_CASE("semi-invariance extends from generators to all elements")
{
    const std::vector<std::pair<GroupLabel, const char*>> cases = {
        {GroupLabel::E7(), "u0^8 + 14*u0^4*u1^4 + u1^8"},
        {GroupLabel::E7(), "u0^5*u1 - u0*u1^5"},
        {GroupLabel::E6(), "u0^5*u1 - u0*u1^5"},
        {GroupLabel::E6(), "u0^12 - 33*u0^8*u1^4 - 33*u0^4*u1^8 + u1^12"},
        {GroupLabel::E7(), "u0^17*u1 - 34*u0^13*u1^5 + 34*u0^5*u1^13 - u0*u1^17"},
        {GroupLabel::E8(), "u0^20 - 228*u0^15*u1^5 + 494*u0^10*u1^10 + 228*u0^5*u1^15 + u1^20"},
        {GroupLabel::E8(), "u0^11*u1 + 11*u0^6*u1^6 - u0*u1^11"},
        {GroupLabel::D(3), "u0^6 + u1^6"},
        {GroupLabel::A(4), "u0^4 + u1^4"},
    };
    for (const auto& [label, text] : cases) {
        CAPTURE(text);
        const auto g = catalog(label);
        const HomPoly p = parse_poly(text);
        const auto s = semi_invariant(p, g);
        CHECK(s.yes);
        for (const auto& e : g.elements) CHECK(semi_invariance_factor(p, e.matrix()).has_value());
    }
}
