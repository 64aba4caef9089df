#pragma once

#include "rf/hompoly.hpp"
#include "rf/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rf {

struct FamilyId {
    enum class Kind { Fabc, Pb, Uabc, Sb, Vb, Wb, Rmn, Qg };
    Kind kind = Kind::Fabc;
    std::vector<int> params;

    static FamilyId fabc(int a, int b, int c) { return {Kind::Fabc, {a, b, c}}; }
    static FamilyId pb(int b) { return {Kind::Pb, {b}}; }
    static FamilyId uabc(int a, int b, int c) { return {Kind::Uabc, {a, b, c}}; }
    static FamilyId sb(int b) { return {Kind::Sb, {b}}; }
    static FamilyId vb(int b) { return {Kind::Vb, {b}}; }
    static FamilyId wb(int b) { return {Kind::Wb, {b}}; }
    static FamilyId rmn(int m, int n) { return {Kind::Rmn, {m, n}}; }
    static FamilyId qg(int n) { return {Kind::Qg, {n}}; }

    // Family names as used on the command line: Fabc, Pb, Uabc, Sb, Vb, Wb, Rmn, Qg.
    static FamilyId make(const std::string& family, const std::vector<int>& params);

    int param(std::size_t i) const { return params.at(i); }
    std::string family_name() const;
    // "Fabc(1,2,0)"
    std::string name() const;

    friend bool operator==(const FamilyId& x, const FamilyId& y) { return x.kind == y.kind && x.params == y.params; }
};

// Checks the parameter domain of the family and brings Fabc to a, b >= 0 and
// Pb to b >= 0 through the isomorphisms F_a^{b,c} = F_{-a}^{b,c} = F_a^{-b,-c}
// and P_b = P_{-b}.
FamilyId normalize(const FamilyId& f);

struct ConeGenerator {
    std::string name;
    std::vector<Rational> coords;            // in the curve basis
    std::optional<std::string> contraction;  // stated contraction of the ray, if any
};

struct LatticeModel {
    FamilyId family;
    // Full models carry the divisor basis, the curve-by-divisor pairing and the
    // canonical class. Partial models carry only the cone and the K-values.
    bool full_table = false;
    std::vector<std::string> divisor_basis;
    std::vector<std::string> curve_basis;
    std::vector<std::vector<Rational>> pairing;  // pairing[curve][divisor]
    std::vector<Rational> canonical;             // in the divisor basis
    std::map<std::string, std::vector<Rational>> named_curves;  // in the curve basis
    std::vector<ConeGenerator> cone_generators;
    std::map<std::string, Rational> k_dots;
    // Products of two basis divisors as curve classes, when tabulated.
    std::map<std::pair<std::string, std::string>, std::vector<Rational>> divisor_products;
    std::vector<std::string> notes;
};

LatticeModel model(const FamilyId& family);

// D . C for a basis divisor D (or "K") and a named curve C.
Rational pairing(const LatticeModel& m, const std::string& divisor, const std::string& curve);
// D . C for a divisor and a curve given by coordinates in the two bases.
Rational pairing(const LatticeModel& m, const std::vector<Rational>& divisor, const std::vector<Rational>& curve);
// D1 . D2 as a curve class, when the model tabulates it.
std::vector<Rational> divisor_product(const LatticeModel& m, const std::string& d1, const std::string& d2);

struct KNegativeRay {
    ConeGenerator ray;
    Rational k_dot;
};
std::vector<KNegativeRay> k_negative_rays(const LatticeModel& m);

bool in_theorem_list(const FamilyId& family);
// Q_g is in the list when g has at least four roots of odd multiplicity.
bool in_theorem_list(const HomPoly& g);

struct AutComponents {
    enum class Kind { Connected, TwoComponents, ProductWithS3 };
    Kind kind = Kind::Connected;
    std::string group;
    std::optional<std::string> involution;
};
std::string to_string(AutComponents::Kind k);

AutComponents aut_component_count(const FamilyId& family);

}  // namespace rf
