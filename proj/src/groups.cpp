#include "rf/groups.hpp"

#include "rf/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace rf {

namespace {

const Cyclotomic kI = Cyclotomic::i();

Cyclotomic golden_conjugate() { return Cyclotomic::zeta(5) + Cyclotomic::zeta(5, -1); }

}  // namespace

GroupLabel GroupLabel::A(int l)
{
    GroupLabel g{Kind::A, l};
    g.validate();
    return g;
}

GroupLabel GroupLabel::D(int l)
{
    GroupLabel g{Kind::D, l};
    g.validate();
    return g;
}

void GroupLabel::validate() const
{
    if (kind == Kind::A && l < 1) throw DomainError("A_l requires l >= 1");
    if (kind == Kind::D && l < 2) throw DomainError("D_l requires l >= 2");
}

GroupLabel GroupLabel::parse(const std::string& text)
{
    if (text == "E6") return E6();
    if (text == "E7") return E7();
    if (text == "E8") return E8();
    if (text.size() >= 2 && (text[0] == 'A' || text[0] == 'D')) {
        const std::string digits = text.substr(1);
        if (digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw DomainError("malformed group label '" + text + "'");
        const int l = std::stoi(digits);
        return text[0] == 'A' ? A(l) : D(l);
    }
    throw DomainError("unknown group label '" + text + "' (expected A<l>, D<l>, E6, E7, E8)");
}

std::string GroupLabel::name() const
{
    switch (kind) {
    case Kind::A: return "A" + std::to_string(l);
    case Kind::D: return "D" + std::to_string(l);
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
    }
    return "";
}

int GroupLabel::order() const
{
    switch (kind) {
    case Kind::A: return l;
    case Kind::D: return 2 * l;
    case Kind::E6: return 12;
    case Kind::E7: return 24;
    case Kind::E8: return 60;
    }
    return 0;
}

Mat2 omega(int two_l) { return mat2(Cyclotomic::zeta(two_l), 0, 0, Cyclotomic::zeta(two_l, -1)); }

Mat2 gen_f() { return mat2(0, kI, kI, 0); }

Mat2 gen_h() { return mat2(0, 1, -1, 0); }

Mat2 gen_alpha() { return mat2(1 - kI, 1 - kI, -1 - kI, 1 + kI); }

Mat2 gen_beta()
{
    const Cyclotomic p = golden_conjugate();
    return mat2(p, 1, 1, -p);
}

Mat2 sl2_lift(const Mat2& m, const Cyclotomic& root_of_det)
{
    if (root_of_det * root_of_det != det(m)) throw VerificationError("sl2_lift: wrong square root of the determinant");
    const Cyclotomic s = root_of_det.inverse();
    return mat2(m(0, 0) * s, m(0, 1) * s, m(1, 0) * s, m(1, 1) * s);
}

int FiniteProjGroup::conductor() const
{
    int n = 1;
    for (const auto& e : elements) n = std::lcm(n, e.conductor());
    return n;
}

std::optional<std::size_t> FiniteProjGroup::index_of(const ProjMat2& m) const
{
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (elements[k] == m) return k;
    return std::nullopt;
}

bool FiniteProjGroup::is_gamma_stable() const
{
    return std::all_of(elements.begin(), elements.end(), [this](const ProjMat2& e) { return contains(e.conjugate()); });
}

FiniteProjGroup close(const std::vector<NamedMatrix>& generators, int bound)
{
    FiniteProjGroup g;
    g.generators = generators;
    g.elements.push_back(ProjMat2::identity());
    std::vector<ProjMat2> gens;
    for (const auto& nm : generators) gens.emplace_back(nm.lift);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const ProjMat2 x = g.elements[queue.front()];
        queue.pop_front();
        for (const auto& s : gens) {
            ProjMat2 y = x * s;
            if (g.contains(y)) continue;
            if (static_cast<int>(g.elements.size()) >= bound)
                throw DomainError("group closure exceeds bound " + std::to_string(bound) + "; generators do not generate a finite group of that size");
            g.elements.push_back(std::move(y));
            queue.push_back(g.elements.size() - 1);
        }
    }
    return g;
}

std::vector<NamedMatrix> catalog_generators(const GroupLabel& label)
{
    label.validate();
    std::vector<NamedMatrix> gens;
    switch (label.kind) {
    case GroupLabel::Kind::A:
        gens = {{"omega" + std::to_string(2 * label.l), omega(2 * label.l)}};
        break;
    case GroupLabel::Kind::D:
        gens = {{"omega" + std::to_string(2 * label.l), omega(2 * label.l)}, {"f", gen_f()}};
        break;
    case GroupLabel::Kind::E6:
        gens = {{"omega4", omega(4)}, {"f", gen_f()}, {"alpha", sl2_lift(gen_alpha(), 2)}};
        break;
    case GroupLabel::Kind::E7:
        gens = {{"omega8", omega(8)}, {"f", gen_f()}, {"alpha", sl2_lift(gen_alpha(), 2)}};
        break;
    case GroupLabel::Kind::E8:
        gens = {{"omega10", omega(10)}, {"h", gen_h()}, {"beta", sl2_lift(gen_beta(), kI * (Cyclotomic::zeta(20, 3) + Cyclotomic::zeta(20, -3)))}};
        break;
    }
    return gens;
}

FiniteProjGroup catalog(const GroupLabel& label)
{
    FiniteProjGroup g = close(catalog_generators(label));
    g.label = label;
    if (g.order() != label.order())
        throw VerificationError("catalog group " + label.name() + " closed to " + std::to_string(g.order()) + " elements");
    return g;
}

std::vector<ProjMat2> cocycles(const FiniteProjGroup& group)
{
    std::vector<ProjMat2> out;
    for (const auto& a : group.elements)
        if (a.conjugate() == a.inverse()) out.push_back(a);
    return out;
}

std::vector<CohomologyClass> h1(const FiniteProjGroup& group)
{
    if (!group.is_gamma_stable()) throw DomainError("h1: group is not stable under complex conjugation");
    const int m = group.conductor();
    const auto z1 = cocycles(group);
    std::vector<ProjMat2> inverses, conjugates;
    for (const auto& b : group.elements) {
        inverses.push_back(b.inverse());
        conjugates.push_back(b.conjugate());
    }

    std::vector<CohomologyClass> classes;
    std::vector<bool> done(z1.size(), false);
    for (std::size_t k = 0; k < z1.size(); ++k) {
        if (done[k]) continue;
        CohomologyClass cls;
        for (std::size_t j = 0; j < group.elements.size(); ++j) {
            const ProjMat2 t = inverses[j] * z1[k] * conjugates[j];
            if (std::none_of(cls.members.begin(), cls.members.end(), [&t](const ProjMat2& x) { return x == t; }))
                cls.members.push_back(t);
        }
        for (std::size_t j = k; j < z1.size(); ++j)
            if (std::any_of(cls.members.begin(), cls.members.end(), [&](const ProjMat2& x) { return x == z1[j]; })) done[j] = true;
        cls.representative = *std::min_element(cls.members.begin(), cls.members.end(), [m](const ProjMat2& a, const ProjMat2& b) {
            return ProjMat2::compare_in(a, b, m) < 0;
        });
        classes.push_back(std::move(cls));
    }

    std::vector<NamedMatrix> candidates{{"I2", mat2(1, 0, 0, 1)}};
    if (group.label) {
        const auto& lb = *group.label;
        if (lb.kind == GroupLabel::Kind::A || lb.kind == GroupLabel::Kind::D)
            candidates.push_back({"omega" + std::to_string(2 * lb.l), omega(2 * lb.l)});
        if (lb.kind == GroupLabel::Kind::E7) candidates.push_back({"omega8", omega(8)});
    }
    candidates.push_back({"f", gen_f()});
    candidates.push_back({"h", gen_h()});
    for (const auto& gen : group.generators)
        if (gen.name.rfind("omega", 0) == 0) candidates.push_back(gen);
    int unnamed = 0;
    std::vector<std::size_t> rank(classes.size(), candidates.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        auto& cls = classes[k];
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const ProjMat2 cand(candidates[c].lift);
            if (std::any_of(cls.members.begin(), cls.members.end(), [&cand](const ProjMat2& x) { return x == cand; })) {
                cls.name = candidates[c].name;
                rank[k] = c;
                break;
            }
        }
        if (cls.name.empty()) cls.name = "class" + std::to_string(++unnamed);
    }

    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        return ProjMat2::compare_in(classes[a].representative, classes[b].representative, m) < 0;
    });
    std::vector<CohomologyClass> sorted;
    for (auto k : order) sorted.push_back(std::move(classes[k]));
    return sorted;
}

std::optional<Cyclotomic> semi_invariance_factor(const HomPoly& g, const Mat2& m)
{
    if (g.is_zero()) throw DomainError("semi-invariance of the zero polynomial");
    const HomPoly c = compose(g, m);
    const auto& [e, lead] = *g.terms().rbegin();
    const Cyclotomic lambda = c.coeff(e) / lead;
    if (lambda.is_zero() || c != lambda * g) return std::nullopt;
    return lambda;
}

SemiInvariance semi_invariant(const HomPoly& g, const FiniteProjGroup& group)
{
    SemiInvariance s;
    for (const auto& gen : group.generators) {
        auto lambda = semi_invariance_factor(g, gen.lift);
        if (!lambda) return SemiInvariance{};
        s.characters.push_back(*lambda);
    }
    s.yes = true;
    return s;
}

}  // namespace rf
