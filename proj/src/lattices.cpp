#include "rf/lattices.hpp"

#include "rf/error.hpp"

#include <cstdlib>

namespace rf {

namespace {

using Row = std::vector<Rational>;

Row ints(std::initializer_list<long> v)
{
    Row out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Row unit(std::size_t n, std::size_t i)
{
    Row out(n, Rational(0));
    out[i] = 1;
    return out;
}

void require(bool ok, const FamilyId& f, const std::string& condition)
{
    if (!ok) throw DomainError(f.name() + " is outside the family domain: " + condition);
}

void require_arity(const FamilyId& f, std::size_t n)
{
    if (f.params.size() != n)
        throw DomainError(f.family_name() + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name, const char* what)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw DomainError(std::string("unknown ") + what + " class " + name);
}

// Partial model: the cone generators form the curve basis and only their
// K-values are recorded.
LatticeModel ray_model(const FamilyId& f, const std::vector<std::string>& rays, const std::vector<Rational>& k,
                       const std::vector<std::optional<std::string>>& contractions)
{
    LatticeModel m;
    m.family = f;
    m.curve_basis = rays;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        m.named_curves[rays[i]] = unit(rays.size(), i);
        m.cone_generators.push_back({rays[i], unit(rays.size(), i), contractions[i]});
        m.k_dots[rays[i]] = k[i];
    }
    return m;
}

LatticeModel fabc_model(const FamilyId& f)
{
    const long a = f.param(0), b = f.param(1), c = f.param(2);
    LatticeModel m;
    m.family = f;
    m.full_table = true;
    m.divisor_basis = {"H_z0", "H_y0", "H_x0"};
    m.curve_basis = {"l1", "l2", "l3"};
    m.pairing = {ints({1, -a, c}), ints({0, 1, -b}), ints({0, 0, 1})};
    m.canonical = ints({-(a * (b + 1) + 2 - c), -(b + 2), -2});
    m.named_curves = {{"l1", ints({1, 0, 0})}, {"l2", ints({0, 1, 0})}, {"l3", ints({0, 0, 1})}, {"l4", ints({1, 0, -c})}};

    const std::string q3 = "structure morphism q: X -> F_" + std::to_string(a);
    std::optional<std::string> q2;
    if (b == 0 && a == std::labs(c) && a != 0) q2 = "P1-bundle q2: X -> F_" + std::to_string(std::labs(c));
    if (c <= 0) m.cone_generators.push_back({"l1", m.named_curves["l1"], std::nullopt});
    else m.cone_generators.push_back({"l4", m.named_curves["l4"], std::nullopt});
    m.cone_generators.push_back({"l2", m.named_curves["l2"], q2});
    m.cone_generators.push_back({"l3", m.named_curves["l3"], q3});

    auto sym = [&](const std::string& x, const std::string& y, const Row& v) {
        m.divisor_products[{x, y}] = v;
        m.divisor_products[{y, x}] = v;
    };
    sym("H_z0", "H_z0", ints({0, 0, 0}));
    sym("H_z0", "H_y0", ints({0, 0, 1}));
    sym("H_z0", "H_x0", ints({0, 1, 0}));
    sym("H_y0", "H_y0", ints({0, 0, -a}));
    sym("H_y0", "H_x0", ints({1, 0, 0}));
    sym("H_x0", "H_x0", ints({-b, c - a * b, 0}));

    if (b == 0 && a == std::labs(c)) {
        if (a == 0)
            m.notes.push_back("boundary case a = |c| = b = 0: X = (P1)^3 and the symmetric group permutes the rays l1, l2, l3");
        else
            m.notes.push_back("boundary case a = |c|, b = 0: an involution swaps the extremal rays l2 and l3");
    }
    return m;
}

LatticeModel wb_model(const FamilyId& f)
{
    const long b = f.param(0);
    LatticeModel m;
    m.family = f;
    m.full_table = true;
    m.divisor_basis = {"F", "S"};
    m.curve_basis = {"f", "l"};
    m.pairing = {ints({0, 1}), {Rational(1), rat(1 - 2 * b, 2)}};
    m.canonical = {rat(-(2 * b + 3), 2), Rational(-2)};
    m.named_curves = {{"f", ints({1, 0})}, {"l", ints({0, 1})}};
    m.cone_generators.push_back({"f", m.named_curves["f"], "structure morphism q: W_b -> P(1,1,2)"});
    m.cone_generators.push_back({"l", m.named_curves["l"], std::nullopt});
    return m;
}

}  // namespace

FamilyId FamilyId::make(const std::string& family, const std::vector<int>& params)
{
    static const std::map<std::string, Kind> kinds = {{"Fabc", Kind::Fabc}, {"Pb", Kind::Pb}, {"Uabc", Kind::Uabc},
                                                      {"Sb", Kind::Sb},     {"Vb", Kind::Vb}, {"Wb", Kind::Wb},
                                                      {"Rmn", Kind::Rmn},   {"Qg", Kind::Qg}};
    auto it = kinds.find(family);
    if (it == kinds.end()) throw DomainError("unknown family " + family);
    FamilyId f{it->second, params};
    static const std::map<Kind, std::size_t> arity = {{Kind::Fabc, 3}, {Kind::Pb, 1}, {Kind::Uabc, 3}, {Kind::Sb, 1},
                                                      {Kind::Vb, 1},   {Kind::Wb, 1}, {Kind::Rmn, 2},  {Kind::Qg, 1}};
    require_arity(f, arity.at(f.kind));
    return f;
}

std::string FamilyId::family_name() const
{
    switch (kind) {
    case Kind::Fabc: return "Fabc";
    case Kind::Pb: return "Pb";
    case Kind::Uabc: return "Uabc";
    case Kind::Sb: return "Sb";
    case Kind::Vb: return "Vb";
    case Kind::Wb: return "Wb";
    case Kind::Rmn: return "Rmn";
    case Kind::Qg: return "Qg";
    }
    return "";
}

std::string FamilyId::name() const
{
    std::string out = family_name() + "(";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    return out + ")";
}

FamilyId normalize(const FamilyId& f)
{
    FamilyId out = FamilyId::make(f.family_name(), f.params);
    auto& p = out.params;
    switch (out.kind) {
    case FamilyId::Kind::Fabc:
        p[0] = std::abs(p[0]);
        if (p[1] < 0) {
            p[1] = -p[1];
            p[2] = -p[2];
        }
        break;
    case FamilyId::Kind::Pb: p[0] = std::abs(p[0]); break;
    case FamilyId::Kind::Uabc: {
        const int a = p[0], b = p[1], c = p[2];
        require(a >= 1 && b >= 1 && c >= 2, out, "a, b >= 1 and c >= 2");
        require((c - 2) % a == 0 && (c - 2) / a <= b, out, "c = a*k + 2 with 0 <= k <= b");
        break;
    }
    case FamilyId::Kind::Sb: require(p[0] >= -1, out, "b >= -1"); break;
    case FamilyId::Kind::Vb: require(p[0] >= 1, out, "b >= 1"); break;
    case FamilyId::Kind::Wb: require(p[0] >= 2, out, "b >= 2"); break;
    case FamilyId::Kind::Rmn: require(p[0] >= p[1] && p[1] >= 0, out, "m >= n >= 0"); break;
    case FamilyId::Kind::Qg: require(p[0] >= 1, out, "n >= 1"); break;
    }
    return out;
}

LatticeModel model(const FamilyId& family)
{
    const FamilyId f = normalize(family);
    LatticeModel m;
    const auto q = [](const std::string& s) { return std::optional<std::string>(s); };
    switch (f.kind) {
    case FamilyId::Kind::Fabc: m = fabc_model(f); break;
    case FamilyId::Kind::Wb: m = wb_model(f); break;
    case FamilyId::Kind::Pb: {
        const int b = f.param(0);
        require(b >= 2, f, "the effective cone of P_b is tabulated for b >= 2");
        m = ray_model(f, {"f", "l"}, {Rational(-2), Rational(b - 3)}, {q("structure morphism q: P_b -> P2"), std::nullopt});
        break;
    }
    case FamilyId::Kind::Uabc: {
        const int a = f.param(0), c = f.param(2);
        const int k = (c - 2) / a;
        if (c > 2)
            m = ray_model(f, {"f", "s", "l"}, {Rational(-2), Rational(f.param(1) - 2), Rational(a * (k + 1))},
                          {q("structure morphism q: X -> F_" + std::to_string(a)), std::nullopt, std::nullopt});
        else
            m = ray_model(f, {"f", "s", "r"}, {Rational(-2), Rational(f.param(1) - 2), Rational(a - 2)},
                          {q("structure morphism q: X -> F_" + std::to_string(a)), std::nullopt, std::nullopt});
        break;
    }
    case FamilyId::Kind::Sb: {
        const int b = f.param(0);
        require(b >= 2, f, "the effective cone of S_b is tabulated for b >= 2");
        m = ray_model(f, {"f", "s1"}, {Rational(-2), Rational(b - 3)}, {q("structure morphism q: S_b -> P2"), std::nullopt});
        break;
    }
    case FamilyId::Kind::Vb: throw DomainError(f.name() + ": no effective cone or canonical intersections are tabulated for V_b");
    case FamilyId::Kind::Rmn:
        m = ray_model(f, {"f", "l"}, {Rational(-3), Rational(f.param(0) + f.param(1) - 2)},
                      {q("structure morphism q: R_(m,n) -> P1"), std::nullopt});
        break;
    case FamilyId::Kind::Qg:
        m = ray_model(f, {"f", "h"}, {Rational(-2), Rational(f.param(0) - 2)},
                      {q("structure morphism pi_g: Q_g -> P1"), std::nullopt});
        break;
    }
    if (m.full_table) {
        for (const auto& [name, coords] : m.named_curves) m.k_dots[name] = pairing(m, m.canonical, coords);
    }
    if (!(family == f)) m.notes.insert(m.notes.begin(), "normalized from " + family.name());
    return m;
}

Rational pairing(const LatticeModel& m, const std::vector<Rational>& divisor, const std::vector<Rational>& curve)
{
    if (!m.full_table) throw DomainError(m.family.name() + " has no tabulated intersection form");
    if (divisor.size() != m.divisor_basis.size() || curve.size() != m.curve_basis.size())
        throw DomainError("coordinate vector does not match the model bases");
    Rational out = 0;
    for (std::size_t i = 0; i < curve.size(); ++i)
        for (std::size_t j = 0; j < divisor.size(); ++j) out += curve[i] * m.pairing[i][j] * divisor[j];
    return out;
}

Rational pairing(const LatticeModel& m, const std::string& divisor, const std::string& curve)
{
    auto c = m.named_curves.find(curve);
    if (c == m.named_curves.end()) throw DomainError("unknown curve class " + curve);
    if (divisor == "K") {
        auto k = m.k_dots.find(curve);
        if (k == m.k_dots.end()) throw DomainError("no canonical intersection recorded for " + curve);
        return k->second;
    }
    if (!m.full_table) throw DomainError(m.family.name() + " has no tabulated intersection form");
    const std::size_t d = index_of(m.divisor_basis, divisor, "divisor");
    return pairing(m, unit(m.divisor_basis.size(), d), c->second);
}

std::vector<Rational> divisor_product(const LatticeModel& m, const std::string& d1, const std::string& d2)
{
    index_of(m.divisor_basis, d1, "divisor");
    index_of(m.divisor_basis, d2, "divisor");
    auto it = m.divisor_products.find({d1, d2});
    if (it == m.divisor_products.end()) throw DomainError(m.family.name() + " has no tabulated product " + d1 + "." + d2);
    return it->second;
}

std::vector<KNegativeRay> k_negative_rays(const LatticeModel& m)
{
    std::vector<KNegativeRay> out;
    for (const auto& g : m.cone_generators) {
        const Rational k = m.k_dots.at(g.name);
        if (k < 0) out.push_back({g, k});
    }
    return out;
}

bool in_theorem_list(const FamilyId& family)
{
    const FamilyId f = normalize(family);
    switch (f.kind) {
    case FamilyId::Kind::Fabc: {
        const int a = f.param(0), b = f.param(1), c = f.param(2);
        if (a == 1) return false;
        if (a == 0 && b == 1 && c == -1) return true;
        if (a == 0 && c != 1 && b >= 2 && b >= std::abs(c)) return true;
        if (-a < c && c < a * (b - 1)) return true;
        return b == 0 && c == 0;
    }
    case FamilyId::Kind::Pb: return f.param(0) >= 2;
    case FamilyId::Kind::Uabc: {
        const int a = f.param(0), b = f.param(1), c = f.param(2);
        if (a == 1) return c < b;
        return c - 2 < a * b && c - 2 != a * (b - 1);
    }
    case FamilyId::Kind::Sb: return f.param(0) == 1 || f.param(0) >= 3;
    case FamilyId::Kind::Vb: return f.param(0) >= 3;
    case FamilyId::Kind::Wb: return true;
    case FamilyId::Kind::Rmn: {
        const int m = f.param(0), n = f.param(1);
        if (m == 1 && n == 0) return false;
        return m == n || m > 2 * n;
    }
    case FamilyId::Kind::Qg: return f.param(0) >= 2;
    }
    return false;
}

bool in_theorem_list(const HomPoly& g)
{
    if (g.is_zero()) throw DomainError("zero polynomial");
    if (g.degree() % 2 != 0) throw DomainError("Q_g needs g of even degree");
    int odd = 0;
    for (int mult : root_structure(g).multiplicities())
        if (mult % 2 == 1) ++odd;
    return odd >= 4;
}

std::string to_string(AutComponents::Kind k)
{
    switch (k) {
    case AutComponents::Kind::Connected: return "connected";
    case AutComponents::Kind::TwoComponents: return "two_components";
    case AutComponents::Kind::ProductWithS3: return "product_with_S3";
    }
    return "";
}

AutComponents aut_component_count(const FamilyId& family)
{
    const FamilyId f = normalize(family);
    using K = AutComponents::Kind;
    switch (f.kind) {
    case FamilyId::Kind::Fabc: {
        const int a = f.param(0), b = f.param(1), c = f.param(2);
        if (a == 0 && b == 0 && c == 0) return {K::ProductWithS3, "(PGL₂)³ ⋊ S₃", std::nullopt};
        const std::string semi = "Aut⁰(X) ⋊ Z/2Z";
        if (a == 0 && b != 0 && b == c) return {K::TwoComponents, semi, "[x₁:x₀; z₀:z₁; y₀:y₁]"};
        if (a == 0 && b != 0 && b == -c) return {K::TwoComponents, semi, "[x₀:x₁; z₀:z₁; y₀:y₁]"};
        if (b == 0 && a != 0 && a == c) return {K::TwoComponents, semi, "[y₀:y₁; x₁:x₀; z₀:z₁]"};
        if (b == 0 && a != 0 && a == -c) return {K::TwoComponents, semi, "[y₀:y₁; x₀:x₁; z₀:z₁]"};
        return {K::Connected, "Aut⁰(X)", std::nullopt};
    }
    case FamilyId::Kind::Sb:
        if (f.param(0) == 1) return {K::TwoComponents, "PGL₃ ⋊ Z/2Z", std::nullopt};
        if (f.param(0) >= 2) return {K::Connected, "PGL₂", std::nullopt};
        return {K::Connected, "Aut⁰(X)", std::nullopt};
    case FamilyId::Kind::Vb:
        if (f.param(0) == 1) return {K::TwoComponents, "PGL₃ ⋊ Z/2Z", std::nullopt};
        return {K::Connected, "Aut⁰(X)", std::nullopt};
    case FamilyId::Kind::Qg:
        throw DomainError("the component group of Aut(Q_g) depends on g through its symmetry group F");
    case FamilyId::Kind::Pb:
    case FamilyId::Kind::Uabc:
    case FamilyId::Kind::Wb:
    case FamilyId::Kind::Rmn: return {K::Connected, "Aut⁰(X)", std::nullopt};
    }
    return {};
}

}  // namespace rf
