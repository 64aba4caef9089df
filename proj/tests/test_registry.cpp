#include "doctest_main.hpp"

#include "rf/error.hpp"
#include "rf/linalg.hpp"
#include "rf/parse.hpp"
#include "rf/registry.hpp"

#include <Eigen/Eigenvalues>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace rf;
using namespace rf::forms;

namespace {

const Registry& reg() { return default_registry(); }

std::vector<FamilyId> family_grid()
{
    std::vector<FamilyId> out;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = -5; c <= 5; ++c) out.push_back(FamilyId::fabc(a, b, c));
    for (int b = 0; b <= 4; ++b) out.push_back(FamilyId::pb(b));
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= m; ++n) out.push_back(FamilyId::rmn(m, n));
    for (int b = 1; b <= 7; ++b) out.push_back(FamilyId::sb(b));
    for (int b = 1; b <= 4; ++b) out.push_back(FamilyId::vb(b));
    for (int b = 2; b <= 5; ++b) out.push_back(FamilyId::wb(b));
    out.push_back(FamilyId::uabc(1, 2, 3));
    out.push_back(FamilyId::uabc(2, 2, 4));
    out.push_back(FamilyId::qg(2));
    return out;
}

std::vector<FormList> all_lists()
{
    std::vector<FormList> out;
    for (const auto& f : family_grid()) out.push_back(reg().forms_of(f));
    for (const auto& k : reg().threefold_keys()) out.push_back(reg().forms_of_threefold(k));
    return out;
}

const FormDescriptor& by_tag(const FormList& l, const std::string& tag)
{
    for (const auto& f : l.forms)
        if (f.tag == tag) return f;
    FAIL("missing tag " << tag);
    throw std::logic_error("unreachable");
}

// Signature from floating-point eigenvalues, used as an independent oracle on
// small integer matrices whose eigenvalues are well separated from zero.
Signature eigen_signature(const MatQ& g)
{
    Eigen::MatrixXd d(g.rows(), g.cols());
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) d(i, j) = g(i, j).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
    Signature s;
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        const double e = es.eigenvalues()(i);
        if (e > 1e-9)
            ++s.positives;
        else if (e < -1e-9)
            ++s.negatives;
        else
            ++s.radical;
    }
    return s;
}

MatQ random_invertible(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (;;) {
        MatQ p(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) = rat(num(rng), den(rng));
        if (rank(p) == n) return p;
    }
}

Poly in_vars(const std::string& text, const std::vector<std::string>& names) { return parse_expression(text, names); }

}  // namespace

TEST_CASE("registry loads with a verified checksum")
{
    const std::string path = RF_DEFAULT_REGISTRY;
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(reg().digest() == sha256_hex(os.str()));
    CHECK(reg().version() == 1);
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    const auto dir = std::filesystem::temp_directory_path() / "rf_registry_test";
    std::filesystem::create_directories(dir);
    const auto copy = dir / "forms_registry.json";
    std::filesystem::copy_file(path, copy, std::filesystem::copy_options::overwrite_existing);
    std::filesystem::copy_file(path + ".sha256", copy.string() + ".sha256", std::filesystem::copy_options::overwrite_existing);
    CHECK_NOTHROW(Registry::load(copy.string()));
    {
        std::ofstream out(copy, std::ios::app);
        out << " ";
    }
    CHECK_THROWS_AS(Registry::load(copy.string()), VerificationError);
    std::filesystem::remove(copy.string() + ".sha256");
    CHECK_THROWS_AS(Registry::load(copy.string()), DomainError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("S_1 has three real forms")
{
    const FormList l = forms_of(FamilyId::sb(1));
    REQUIRE(l.forms.size() == 3);
    const auto& split = by_tag(l, "split");
    CHECK(split.rational == Tri::Yes);
    CHECK(split.aut0.render() == "PGL3R");
    const auto& tilde = by_tag(l, "tilde");
    CHECK(tilde.rational == Tri::Yes);
    CHECK(tilde.has_real_points == Tri::Yes);
    CHECK(tilde.aut0.render() == "PSU(1,2)");
    const auto& hat = by_tag(l, "hat");
    CHECK(hat.has_real_points == Tri::No);
    CHECK(hat.aut0.render() == "PSU(3)");
    CHECK(l.complete);
}

TEST_CASE("S_b parity rule for b = 2..7")
{
    for (int b = 2; b <= 7; ++b) {
        const FormList l = forms_of(FamilyId::sb(b));
        REQUIRE(l.forms.size() == 2);
        const auto& split = by_tag(l, "split");
        CHECK(split.rational == Tri::Yes);
        CHECK(split.aut0.render() == "PGL2R");
        const auto& tilde = by_tag(l, "tilde");
        CHECK(tilde.aut0.render() == "SO3R");
        CHECK(tilde.name == "S~_{" + std::to_string(b) + ",R}");
        if (b % 2 == 1) {
            CHECK(tilde.rational == Tri::Yes);
            CHECK(tilde.has_real_points == Tri::Yes);
        } else {
            CHECK(tilde.rational == Tri::No);
            CHECK(tilde.has_real_points == Tri::No);
        }
    }
    CHECK(by_tag(forms_of(FamilyId::sb(4)), "tilde").has_real_points == Tri::No);
    CHECK_THROWS_AS(forms_of(FamilyId::sb(0)), DomainError);
}

TEST_CASE("Q3 forms and their quadrics")
{
    const FormList l = reg().forms_of_threefold("Q3");
    REQUIRE(l.forms.size() == 3);
    const std::map<std::string, std::pair<Tri, Signature>> expected{
        {"Q(3,2)", {Tri::Yes, {3, 2, 0}}}, {"Q(4,1)", {Tri::Yes, {4, 1, 0}}}, {"Q(5,0)", {Tri::No, {5, 0, 0}}}};
    for (const auto& f : l.forms) {
        const auto& [rational, sig] = expected.at(f.tag);
        CHECK(f.rational == rational);
        REQUIRE(f.quadric);
        CHECK(signature(QuadForm::diagonal(*f.quadric)) == sig);
    }
    CHECK(by_tag(l, "Q(3,2)").aut0.render() == "SO(3,2)");
    CHECK(by_tag(l, "Q(4,1)").aut0.render() == "SO(4,1)");
}

TEST_CASE("(P1)^3 has six forms, exactly the r = 0 ones rational")
{
    const FormList l = forms_of(FamilyId::fabc(0, 0, 0));
    REQUIRE(l.forms.size() == 6);
    std::set<std::array<int, 3>> seen;
    int rational = 0;
    for (const auto& f : l.forms) {
        int p = 0, q = 0, r = 0;
        REQUIRE(std::sscanf(f.tag.c_str(), "Z(%d,%d,%d)", &p, &q, &r) == 3);
        CHECK(2 * p + q + r == 3);
        seen.insert({p, q, r});
        CHECK((f.rational == Tri::Yes) == (r == 0));
        CHECK((f.has_real_points == Tri::Yes) == (r == 0));
        if (f.rational == Tri::Yes) ++rational;
        CHECK(f.aut0.factors.size() == static_cast<std::size_t>(p + q + r));
    }
    CHECK(rational == 2);
    std::set<std::array<int, 3>> all;
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int r = 0; r <= 3; ++r)
                if (2 * p + q + r == 3) all.insert({p, q, r});
    CHECK(seen == all);
}

TEST_CASE("F_0^{b,c} forms follow b = |c|")
{
    for (int b = 1; b <= 5; ++b) {
        const FormList g = forms_of(FamilyId::fabc(0, b, -b));
        REQUIRE(g.forms.size() == 2);
        CHECK(by_tag(g, "G").name == "G_" + std::to_string(b));
        CHECK(by_tag(g, "G").aut0.kind == Aut0Label::Kind::Extension);
        CHECK(by_tag(g, "G").aut0.text.find("N = (" + std::to_string(b + 1) + ")^2") != std::string::npos);
        const FormList h = forms_of(FamilyId::fabc(0, b, b));
        REQUIRE(h.forms.size() == 3);
        CHECK(by_tag(h, "H").name == "H_" + std::to_string(b));
        CHECK(by_tag(h, "H").aut0.text.find("S^1") != std::string::npos);
        CHECK(by_tag(h, "theta-prime").has_real_points == Tri::No);
        for (int c = -6; c <= 6; ++c) {
            if (c == b || c == -b) continue;
            const FormList o = forms_of(FamilyId::fabc(0, b, c));
            REQUIRE(o.forms.size() == 1);
            CHECK(std::find(o.notes.begin(), o.notes.end(), "no nontrivial form with a real point") != o.notes.end());
        }
    }
    CHECK(forms_of(FamilyId::fabc(0, -2, 2)).forms.size() == 2);
    CHECK(forms_of(FamilyId::fabc(0, -2, 2)).source == "Fabc(0,2,-2)");
}

TEST_CASE("families with a single form with a real point")
{
    for (const auto& f : {FamilyId::pb(3), FamilyId::uabc(1, 2, 3), FamilyId::vb(2), FamilyId::wb(4)}) {
        const FormList l = forms_of(f);
        REQUIRE(l.forms.size() == 1);
        CHECK(l.forms[0].rational == Tri::Yes);
        CHECK(std::find(l.notes.begin(), l.notes.end(), "the trivial form is the only rational form") != l.notes.end());
    }
    CHECK(forms_of(FamilyId::pb(0)).forms.size() == 2);
    CHECK(forms_of(FamilyId::rmn(4, 2)).forms.size() == 2);
    CHECK(forms_of(FamilyId::rmn(3, 2)).forms.size() == 1);
    CHECK(forms_of(FamilyId::fabc(2, 1, 4)).forms.size() == 2);
    CHECK(forms_of(FamilyId::fabc(2, 1, 3)).forms.size() == 1);
    CHECK(forms_of(FamilyId::fabc(3, 1, 4)).forms.size() == 1);
    for (const auto& k : {"Y5", "X12"}) {
        const FormList l = reg().forms_of_threefold(k);
        REQUIRE(l.forms.size() == 2);
        for (const auto& f : l.forms) CHECK(f.rational == Tri::Yes);
    }
    CHECK(reg().forms_of_threefold("P1112").forms.size() == 1);
    CHECK(reg().forms_of_threefold("P1123").forms.size() == 1);
    CHECK_THROWS_AS(reg().forms_of_threefold("P4"), DomainError);
}

TEST_CASE("rational forms have real points and ids round-trip")
{
    int count = 0;
    for (const auto& l : all_lists()) {
        std::set<std::string> ids;
        for (const auto& f : l.forms) {
            if (f.rational == Tri::Yes) CHECK(f.has_real_points == Tri::Yes);
            if (f.has_real_points == Tri::No) CHECK(f.rational == Tri::No);
            CHECK(ids.insert(f.id).second);
            CHECK(reg().find_form(f.id).name == f.name);
            ++count;
        }
    }
    CHECK(count == 479);
}

TEST_CASE("every stored real structure passes verify_involution")
{
    int checked = 0;
    for (const auto& l : all_lists())
        for (const auto& f : l.forms) {
            if (!f.real_structure) continue;
            const StructureVerdict v = verify_involution(*f.real_structure);
            CHECK_MESSAGE(v.valid, f.id << ": " << v.detail);
            ++checked;
        }
    CHECK(checked > 300);
}

TEST_CASE("theta for G_b and H_b with b <= 5")
{
    for (int b = 1; b <= 5; ++b) {
        for (const auto& [c, tag] : {std::pair{-b, "G"}, std::pair{b, "H"}}) {
            const FormDescriptor f = reg().find_form(FamilyId::fabc(0, b, c).name() + "/" + tag);
            REQUIRE(f.real_structure);
            const StructureVerdict v = verify_involution(*f.real_structure);
            CHECK(v.valid);
            REQUIRE(v.involution);
            CHECK(v.involution->grading_ok);
            CHECK(v.involution->involutive);
        }
    }
    CHECK(reg().find_form("Fabc(0,1,-1)/G").real_structure->formula() ==
          "[conj(x0):conj(x1); conj(z0):conj(z1); conj(y0):conj(y1)]");
    CHECK(reg().find_form("Fabc(0,1,1)/theta-prime").real_structure->formula() ==
          "[-conj(x1):conj(x0); conj(z0):conj(z1); conj(y0):conj(y1)]");
}

TEST_CASE("swapping the base rulings respects the grading exactly when b = |c|")
{
    // On F_0^{b,c}, exchanging y and z while fixing x is well defined iff b = -c,
    // and exchanging y and z together with x0, x1 is well defined iff b = c.
    for (int b = 1; b <= 5; ++b)
        for (int c = -5; c <= 5; ++c) {
            CoordinateStructure fix{"Fabc", {0, b, c}, {{"y0", "z0"}, {"y1", "z1"}, {"z0", "y0"}, {"z1", "y1"}}};
            CHECK(verify_involution(fix).involution->grading_ok == (b == -c));
            CoordinateStructure swap = fix;
            swap.images["x0"] = "x1";
            swap.images["x1"] = "x0";
            CHECK(verify_involution(swap).involution->grading_ok == (b == c));
        }
}

TEST_CASE("conic twists are involutions exactly for even weights")
{
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= m; ++n) {
            CoordinateStructure s{"Rmn", {m, n}, {{"y0", "-y1"}, {"y1", "y0"}}};
            const StructureVerdict v = verify_involution(s);
            CHECK(v.involution->grading_ok);
            CHECK(v.valid == (m % 2 == 0 && n % 2 == 0));
        }
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = -4; c <= 4; ++c) {
                CoordinateStructure s{"Fabc", {a, b, c}, {{"z0", "-z1"}, {"z1", "z0"}}};
                CHECK(verify_involution(s).valid == (a % 2 == 0 && c % 2 == 0));
            }
}

TEST_CASE("the three structures on S_1 preserve the incidence equation")
{
    const FormList l = forms_of(FamilyId::sb(1));
    for (const auto& f : l.forms) {
        REQUIRE(f.real_structure);
        const StructureVerdict v = verify_involution(*f.real_structure);
        CHECK(v.valid);
        REQUIRE(v.involution);
        CHECK(v.involution->preserves_equations);
        REQUIRE(v.involution->equation_scalars.size() == 1);
        CHECK(v.involution->equation_scalars[0] == Cyclotomic(1));
    }
    CHECK(by_tag(l, "tilde").real_structure->formula() ==
          "[-conj(y0):conj(y1):conj(y2); -conj(x0):conj(x1):conj(x2)]");

    // Independent expansion: the pullback of sum x_i y_i under the S~ structure.
    const Ambient a = make_ambient("S1", {});
    const auto& names = a.graded.names;
    const MonomialAntiregularMap m = to_map(a, *by_tag(l, "tilde").real_structure);
    CHECK(pullback(a.equations[0], m) == in_vars("x0*y0 + x1*y1 + x2*y2", names));

    // A sign on one side only is not an involution.
    CoordinateStructure bad{"S1", {}, {{"x0", "-y0"}, {"x1", "y1"}, {"x2", "y2"}, {"y0", "x0"}, {"y1", "x1"}, {"y2", "x2"}}};
    CHECK_FALSE(verify_involution(bad).valid);
    CHECK_FALSE(verify_involution(bad).involution->involutive);
    // A structure that does not preserve the equation.
    CoordinateStructure skew{"S1", {}, {{"x0", "-x0"}}};
    CHECK_FALSE(verify_involution(skew).involution->preserves_equations);
}

TEST_CASE("Schwarzenberger structures are checked by the gluing identity")
{
    for (int b = 2; b <= 7; ++b) {
        const FormDescriptor f = reg().find_form("Sb(" + std::to_string(b) + ")/tilde");
        REQUIRE(f.real_structure);
        const StructureVerdict v = verify_involution(*f.real_structure);
        CHECK(v.valid);
        CHECK(v.method == "gluing");
    }
}

TEST_CASE("torus forms")
{
    CHECK(torus_forms(1) == std::vector<TorusShape>{{0, 1, 0}, {0, 0, 1}});
    CHECK(torus_forms(2) == std::vector<TorusShape>{{1, 0, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(tori_conjugate({1, 0, 1}, {1, 0, 1}));
    CHECK_FALSE(tori_conjugate({1, 0, 1}, {0, 2, 1}));
    CHECK_THROWS_AS(torus_forms(0), DomainError);
    CHECK(TorusShape{1, 2, 0}.label() == "R_{C/R}(G_m) x S^1^2");
    for (int d = 1; d <= 12; ++d) {
        const auto t = torus_forms(d);
        int expected = 0;
        for (int p = 0; 2 * p <= d; ++p) expected += d - 2 * p + 1;
        CHECK(static_cast<int>(t.size()) == expected);
        std::set<std::array<int, 3>> distinct;
        for (const auto& s : t) {
            CHECK(s.dimension() == d);
            CHECK(s.p >= 0);
            CHECK(s.q >= 0);
            CHECK(s.r >= 0);
            distinct.insert({s.p, s.q, s.r});
        }
        CHECK(distinct.size() == t.size());
        for (const auto& x : t)
            for (const auto& y : t) CHECK(tori_conjugate(x, y) == (&x == &y));
    }
}

TEST_CASE("signature examples")
{
    CHECK(signature(QuadForm::diagonal({1, 1, 1, -1, -1})) == Signature{3, 2, 0});
    const std::vector<std::string> abcde{"a", "b", "c", "d", "e"};
    CHECK(signature(QuadForm::from_polynomial(in_vars("4*a*d - b^2 - c^2", abcde))) == Signature{1, 3, 1});
    const std::vector<std::string> x{"x0", "x1", "x2"};
    CHECK(signature(QuadForm::from_polynomial(in_vars("x0^2 - x1*x2", x))) == Signature{2, 1, 0});
    // x1 = p + q, x2 = p - q turns x0^2 - x1 x2 into x0^2 - p^2 + q^2.
    const std::vector<std::string> xpq{"x0", "p", "q"};
    const Poly sub = in_vars("x0^2 - x1*x2", x).substitute({in_vars("x0", xpq), in_vars("p + q", xpq), in_vars("p - q", xpq)});
    CHECK(sub == in_vars("x0^2 - p^2 + q^2", xpq));
    MatQ h(2, 2);
    h << Rational(0), Rational(1), Rational(1), Rational(0);
    CHECK(signature(QuadForm::from_gram(h)) == Signature{1, 1, 0});
    CHECK(signature(QuadForm::from_gram(MatQ::Zero(3, 3))) == Signature{0, 0, 3});
    MatQ ns(2, 2);
    ns << Rational(1), Rational(2), Rational(3), Rational(4);
    CHECK_THROWS_AS(QuadForm::from_gram(ns), DomainError);
    CHECK_THROWS_AS(QuadForm::from_polynomial(in_vars("x0^3", x)), DomainError);
}

TEST_CASE("signature is congruence invariant and matches eigenvalue signs")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 6), zero(0, 3);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = dim(rng);
        MatQ g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                // Sparse diagonals exercise the hyperbolic-pair branch.
                const Rational v = (i == j && zero(rng) > 0) ? Rational(0) : Rational(entry(rng));
                g(i, j) = v;
                g(j, i) = v;
            }
        const QuadForm q = QuadForm::from_gram(g);
        const Diagonalization d = diagonalize(q);
        const MatQ dg = d.transform.transpose() * g * d.transform;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(dg(i, j) == (i == j ? d.diagonal[static_cast<std::size_t>(i)] : Rational(0)));
        CHECK(rank(d.transform) == n);
        const Signature s = signature(q);
        CHECK(s.positives + s.negatives + s.radical == n);
        CHECK(s.positives + s.negatives == rank(g));
        CHECK(signature(q.congruent(random_invertible(rng, n))) == s);
        CHECK(eigen_signature(g) == s);
    }
}

TEST_CASE("links from the catalogued forms")
{
    for (int b = 2; b <= 6; ++b) {
        const auto g = links_from(reg().find_form(FamilyId::fabc(0, b, -b).name() + "/G"));
        REQUIRE(g.size() == 1);
        CHECK(g[0].type == LinkType::None);
        const auto h = links_from(reg().find_form(FamilyId::fabc(0, b, b).name() + "/H"));
        REQUIRE(h.size() == 1);
        CHECK(h[0].type == LinkType::None);
    }
    const auto g1 = links_from(reg().find_form("Fabc(0,1,-1)/G"));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].type == LinkType::Divisorial);
    CHECK(g1[0].target == "Q^{1,3}");
    CHECK(g1[0].witness_formula == "[x0*y0*z0 : x0*y0*z1 : x0*y1*z0 : x0*y1*z1 : x1]");
    const auto h1 = links_from(reg().find_form("Fabc(0,1,1)/H"));
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].target == "P3_R");
    for (int b = 3; b <= 9; b += 2) {
        const auto s = links_from(reg().find_form("Sb(" + std::to_string(b) + ")/tilde"));
        REQUIRE(s.size() == 1);
        CHECK(s[0].type == LinkType::II);
        CHECK(s[0].count == 1);
        CHECK(s[0].target == "S~_{" + std::to_string(b) + ",R}");
    }
    CHECK(links_from(reg().find_form("Sb(1)/tilde"))[0].type == LinkType::None);
    for (const auto& id : {"Q3/Q(3,2)", "Q3/Q(4,1)", "Y5/split", "Y5/twisted", "X12/split", "X12/twisted"})
        CHECK(links_from(reg().find_form(id))[0].type == LinkType::None);
    const auto z3 = links_from(reg().find_form("Fabc(0,0,0)/Z(0,3,0)"));
    CHECK(z3[0].type == LinkType::IV);
    CHECK(z3[0].count == 2);
    CHECK(links_from(reg().find_form("Fabc(0,0,0)/Z(1,1,0)"))[0].count == 1);
    CHECK(links_from(reg().find_form("Qg(2)/U"))[0].witness == "psi_h");
    CHECK_THROWS_AS(links_from(reg().find_form("Sb(2)/tilde")), DomainError);
    CHECK_THROWS_AS(links_from(reg().find_form("Fabc(0,0,0)/Z(0,0,3)")), DomainError);
    CHECK_THROWS_AS(reg().find_form("Sb(3)/nothing"), DomainError);
}

TEST_CASE("G_1 witness: image on ad - bc and signature (1,3)")
{
    // Independent expansion of the image relation.
    const std::vector<std::string> v{"x0", "x1", "y0", "y1", "z0", "z1"};
    const Poly rel = in_vars("(x0*y0*z0)*(x0*y1*z1) - (x0*y0*z1)*(x0*y1*z0)", v);
    CHECK(rel.is_zero());

    const WitnessVerdict w = reg().verify_witness("g1_quadric");
    for (const auto& c : w.checks) CHECK_MESSAGE(c.ok, c.name << " " << c.detail);
    CHECK(w.valid);
    REQUIRE(w.signature);
    CHECK(*w.signature == Signature{1, 3, 1});
}

TEST_CASE("H_1 witness: two-sided inverse on the chart")
{
    const WitnessVerdict w = reg().verify_witness("h1_projective");
    for (const auto& c : w.checks) CHECK_MESSAGE(c.ok, c.name << " " << c.detail);
    CHECK(w.valid);
    REQUIRE(w.inverse.size() == 6);
    CHECK(w.inverse[0] == "(1)");
    CHECK(w.inverse[1] == "(1)");
    CHECK(w.inverse[2] == "(1)*A");
    CHECK(w.inverse[5] == "(1)*D");

    // Independent check of F o G on the target: [1:1; A:B; C:D] goes back to [A:B:C:D].
    const std::vector<std::string> t{"A", "B", "C", "D"};
    const std::vector<Poly> g{in_vars("1", t), in_vars("1", t), in_vars("A", t), in_vars("B", t), in_vars("C", t), in_vars("D", t)};
    const std::vector<std::string> src{"x0", "x1", "y0", "y1", "z0", "z1"};
    const std::vector<std::string> comps{"x0*y0", "x0*y1", "x1*z0", "x1*z1"};
    for (std::size_t k = 0; k < comps.size(); ++k) CHECK(in_vars(comps[k], src).substitute(g) == Poly::var(4, static_cast<int>(k)));
}

TEST_CASE("psi_h witness over ten sample pairs")
{
    const WitnessVerdict w = reg().verify_witness("psi_h");
    int samples = 0, quadratic = 0;
    for (const auto& c : w.checks) {
        CHECK_MESSAGE(c.ok, c.name << " " << c.detail);
        if (c.name.rfind("psi_h: ", 0) == 0) {
            ++samples;
            if (c.name.find("^2", c.name.find("h = ")) != std::string::npos) ++quadratic;
        }
    }
    CHECK(w.valid);
    CHECK(samples == 10);
    CHECK(quadratic >= 3);
}

TEST_CASE("every stored link witness passes verify_witness")
{
    std::set<std::string> seen;
    for (const auto& l : all_lists())
        for (const auto& f : l.forms) {
            std::vector<LinkDescriptor> links;
            try {
                links = links_from(f);
            } catch (const DomainError&) {
                continue;
            }
            for (const auto& k : links) {
                CHECK(k.source == f.id);
                if (!k.witness || seen.count(*k.witness)) continue;
                seen.insert(*k.witness);
                CHECK(verify_witness(k).valid);
            }
        }
    CHECK(seen == std::set<std::string>{"g1_quadric", "h1_projective", "psi_h"});
    std::vector<std::string> keys = reg().witness_keys();
    CHECK(std::set<std::string>(keys.begin(), keys.end()) == seen);
}

TEST_CASE("registry text errors")
{
    CHECK_THROWS_AS(Registry::from_text("{"), DomainError);
    CHECK_THROWS_AS(Registry::from_text("{\"format\": \"other\"}"), DomainError);
}
