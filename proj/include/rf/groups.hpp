#pragma once

#include "rf/hompoly.hpp"
#include "rf/projmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rf {

struct GroupLabel {
    enum class Kind { A, D, E6, E7, E8 };
    Kind kind = Kind::A;
    int l = 1;

    static GroupLabel A(int l);
    static GroupLabel D(int l);
    static GroupLabel E6() { return {Kind::E6, 0}; }
    static GroupLabel E7() { return {Kind::E7, 0}; }
    static GroupLabel E8() { return {Kind::E8, 0}; }

    // Accepts "A<l>", "D<l>", "E6", "E7", "E8".
    static GroupLabel parse(const std::string& text);

    std::string name() const;
    int order() const;
    void validate() const;

    friend bool operator==(const GroupLabel& a, const GroupLabel& b)
    {
        return a.kind == b.kind && (a.kind == Kind::E6 || a.kind == Kind::E7 || a.kind == Kind::E8 || a.l == b.l);
    }
};

// Standard generators of the catalog groups.
Mat2 omega(int two_l);  // diag(zeta_{2l}, zeta_{2l}^{-1})
Mat2 gen_f();           // [[0, i], [i, 0]]
Mat2 gen_h();           // [[0, 1], [-1, 0]]
Mat2 gen_alpha();       // [[1-i, 1-i], [-1-i, 1+i]]
Mat2 gen_beta();        // [[z+1/z, 1], [1, -z-1/z]], z = zeta_5

// m divided by a given square root of det(m), so that the result lies in SL2.
Mat2 sl2_lift(const Mat2& m, const Cyclotomic& root_of_det);

struct NamedMatrix {
    std::string name;
    Mat2 lift;
};

class FiniteProjGroup {
public:
    std::optional<GroupLabel> label;
    std::vector<ProjMat2> elements;     // elements[0] is the identity
    std::vector<NamedMatrix> generators;  // catalog generators are stored as determinant-one lifts

    int order() const { return static_cast<int>(elements.size()); }
    // Common conductor of all entries of all elements.
    int conductor() const;
    std::optional<std::size_t> index_of(const ProjMat2& m) const;
    bool contains(const ProjMat2& m) const { return index_of(m).has_value(); }
    bool is_gamma_stable() const;
};

constexpr int kDefaultClosureBound = 256;

FiniteProjGroup close(const std::vector<NamedMatrix>& generators, int bound = kDefaultClosureBound);
// Determinant-one lifts of the standard generators, without closing the group.
std::vector<NamedMatrix> catalog_generators(const GroupLabel& label);
FiniteProjGroup catalog(const GroupLabel& label);

struct CohomologyClass {
    ProjMat2 representative;         // least member in the lexicographic order
    std::string name;                // I2, omega<2l>, f, h when one of those lies in the class
    std::vector<ProjMat2> members;   // all cocycles in the class
};

// Cocycles a with conj(a) = a^{-1}, modulo a ~ b^{-1} a conj(b). Classes
// containing I2, omega<2l>, f, h come first in that order, then the rest by
// representative.
std::vector<ProjMat2> cocycles(const FiniteProjGroup& group);
std::vector<CohomologyClass> h1(const FiniteProjGroup& group);

struct SemiInvariance {
    bool yes = false;
    std::vector<Cyclotomic> characters;  // compose(g, lift) = character * g, per generator
};

// Returns lambda with compose(g, m) = lambda * g, if any.
std::optional<Cyclotomic> semi_invariance_factor(const HomPoly& g, const Mat2& m);
SemiInvariance semi_invariant(const HomPoly& g, const FiniteProjGroup& group);

}  // namespace rf
