#pragma once

#include "rf/antiregular.hpp"
#include "rf/groups.hpp"
#include "rf/hompoly.hpp"
#include "rf/projmat.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rf {

// Umemura quadric fibration x0^2 - x1*x2 - g(u0,u1)*x3^2 = 0 with deg g = 2n.
struct QgInstance {
    HomPoly g;
    int n = 1;
    std::optional<std::vector<std::pair<P1Point, int>>> factored_roots;

    // Validates: nonzero, even degree, not a square, factored roots consistent with g.
    static QgInstance make(const HomPoly& g, std::optional<std::vector<std::pair<P1Point, int>>> roots = std::nullopt);
};

struct FLabel {
    enum class Kind { Finite, Gm, GmSemidirectZ2 };
    Kind kind = Kind::Finite;
    GroupLabel group;  // meaningful for Finite only

    static FLabel finite(const GroupLabel& l) { return {Kind::Finite, l}; }
    static FLabel gm() { return {Kind::Gm, {}}; }
    static FLabel gm_semidirect_z2() { return {Kind::GmSemidirectZ2, {}}; }
    // "A3", "E7", "Gm", "GmSemidirectZ2"
    static FLabel parse(const std::string& text);

    bool is_finite() const { return kind == Kind::Finite; }
    std::string name() const;

    friend bool operator==(const FLabel& a, const FLabel& b)
    {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.group == b.group);
    }
};

FLabel detect_symmetry(const QgInstance& q);

// Symmetries of an explicitly factored root set, found by sending three roots to
// every ordered triple of roots with the same multiplicities. The label is the
// abstract type read off from the order and the element orders.
struct MobiusSearchResult {
    FiniteProjGroup group;
    FLabel label;
};
MobiusSearchResult mobius_symmetry_search(const QgInstance& q);

enum class Realizability { Realizable, NotRealizable, Undecidable };

struct RealizabilityResult {
    Realizability status = Realizability::NotRealizable;
    Cyclotomic lambda;
    SL2Mat phi;
    std::string detail;

    bool realizable() const { return status == Realizability::Realizable; }
};

// Searches lambda, phi with lambda * compose(g, phi) real: translation to the
// reduced form, then a diagonal phase alpha solving alpha^(4(s-r)) = conj(c_s)/c_s.
RealizabilityResult realizable(const HomPoly& g);

enum class Parity { Even, Odd };

struct FormCounts {
    int rational = 0;
    int unknown = 0;
    int no_real_points = 0;
    std::optional<std::string> note;

    int total() const { return rational + unknown + no_real_points; }
};

FormCounts form_counts(Parity parity, const FLabel& f);

enum class RationalityStatus { Rational, Unknown, NoRealPoints };
enum class Aut0 { PGL2R, SO3R, PGL2RxGmR, SO3RxGmR, Unspecified };

std::string to_string(RationalityStatus s);
std::string to_string(Aut0 a);

struct FormDescriptor {
    std::string family;  // W, X, Y, Z; Q, Q', T, T' for two roots; H over the class [h]
    int index = 0;
    std::string over_class;
    std::optional<HomPoly> g_i;
    RationalityStatus status = RationalityStatus::Unknown;
    Aut0 aut0 = Aut0::Unspecified;
    bool merged = false;       // W_i = X_i or Y_i = Z_i for n odd
    std::string merged_with;   // name of the partner form when merged

    std::string name() const;
    // Defining equation, absent over [h].
    std::optional<std::string> equation() const;
};

struct RealFormReport {
    QgInstance instance;
    HomPoly real_g;             // the real polynomial the forms are built from
    std::optional<RealizabilityResult> realization;  // present when g was not real
    FLabel f;
    std::vector<FormDescriptor> forms;
    std::vector<std::string> notes;

    FormCounts counts() const;
};

RealFormReport enumerate_forms(const QgInstance& q);

// Invariant generators f1, f2, f3 and, for a twisted class, their replacements.
struct InvariantTwist {
    std::array<HomPoly, 3> f;
    std::array<HomPoly, 3> twisted;
};
std::array<HomPoly, 3> invariant_generators(const GroupLabel& label);
InvariantTwist twisted_generators(const GroupLabel& label, const std::string& class_name);

// Coefficients of g = p(f1, f2, f3) over the monomials T1^a T2^b T3^c of the
// right weighted degree, with lexicographically first pivots.
struct InvariantExpression {
    std::vector<std::array<int, 3>> monomials;
    std::vector<Cyclotomic> coeffs;
    std::vector<std::vector<Cyclotomic>> syzygies;  // kernel of the evaluation map in this degree
};
std::optional<InvariantExpression> express_in_invariants(const HomPoly& g, const std::array<HomPoly, 3>& f);
HomPoly evaluate(const InvariantExpression& p, const std::array<HomPoly, 3>& f);

// Ambient P(O^3 + O(n)) with coordinates x0..x3, u0, u1, and the equation
// x0^2 - x1*x2 - g*x3^2 (or the sum of squares variant).
GradedAmbient qg_ambient(int n);
Poly qg_equation(const HomPoly& g, bool sum_of_squares = false, int sign = -1);
Poly to_ambient(const HomPoly& g, int nvars, int u0_index);

struct RealStructureVerdict {
    int index = 0;
    MonomialAntiregularMap map;
    InvolutionVerdict check;
    Cyclotomic x3_scale = Cyclotomic(1);  // coefficient of conj(x3), 1 unless g has a nontrivial character

    bool valid() const { return check.valid(); }
};

// Builds mu_index (1..11) on Q_g and verifies it. The parameter l selects the
// rotation used by mu_5; by default it comes from the detected symmetry group.
RealStructureVerdict check_real_structure(int index, const QgInstance& q, std::optional<int> l = std::nullopt);
bool real_structure_applicable(int index, const QgInstance& q, std::optional<int> l = std::nullopt);

struct PsiVerdict {
    bool identity_holds = false;
    int n = 0;
    int n_prime = 0;
    std::string detail;
};

// psi_h: [x0:x1:x2:x3;u] -> [h*x0 : h*x1 : h*x2 : x3; u] from Q_g to Q_{g h^2}.
PsiVerdict check_psi_h(const HomPoly& g, const HomPoly& h);
// psi_{h1} after psi_{h2} agrees with psi_{h1 h2} as a pullback of equations.
bool check_psi_composition(const HomPoly& g, const HomPoly& h1, const HomPoly& h2);

}  // namespace rf
