#include "rf/qg.hpp"

#include "rf/error.hpp"
#include "rf/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <sstream>

namespace rf {

namespace {

using i128 = __int128;

constexpr long kMaxPhaseModulus = 100000;

const Cyclotomic kI = Cyclotomic::i();

HomPoly hom(int degree, std::initializer_list<std::pair<int, long>> terms)
{
    std::map<int, Cyclotomic> t;
    for (const auto& [e, c] : terms) t[e] = Cyclotomic(c);
    return HomPoly(degree, t);
}

Integer binomial(int n, int k)
{
    Integer r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

Cyclotomic integer_value(const Integer& z) { return Cyclotomic(Rational(z)); }

// u0^2 + u1^2
HomPoly sum_of_squares_u() { return hom(2, {{2, 1}, {0, 1}}); }

std::optional<Cyclotomic> ratio(const HomPoly& a, const HomPoly& b)
{
    if (b.is_zero() || a.degree() != b.degree()) return std::nullopt;
    const auto& [e, c] = *b.terms().rbegin();
    const Cyclotomic r = a.coeff(e) / c;
    if (r.is_zero() || a != r * b) return std::nullopt;
    return r;
}

// Square root of a root of unity, as a root of unity.
Cyclotomic root_of_unity_sqrt(const Cyclotomic& z)
{
    auto idx = z.root_of_unity_index();
    if (!idx) throw DomainError("character " + z.to_string() + " is not a root of unity");
    return Cyclotomic::zeta(2 * idx->first, idx->second);
}

bool same_point(const P1Point& a, const P1Point& b) { return (a.p * b.q - a.q * b.p).is_zero(); }

P1Point apply(const Mat2& m, const P1Point& x)
{
    return {m(0, 0) * x.p + m(0, 1) * x.q, m(1, 0) * x.p + m(1, 1) * x.q};
}

// Matrix sending [1:0], [0:1], [1:1] to a, b, c.
Mat2 frame(const P1Point& a, const P1Point& b, const P1Point& c)
{
    const Mat2 m = mat2(a.p, b.p, a.q, b.q);
    const Cyclotomic d = det(m);
    if (d.is_zero()) throw DomainError("frame points coincide");
    const Mat2 adj = adjugate(m);
    const Cyclotomic s = (adj(0, 0) * c.p + adj(0, 1) * c.q) / d;
    const Cyclotomic t = (adj(1, 0) * c.p + adj(1, 1) * c.q) / d;
    return mat2(s * a.p, t * b.p, s * a.q, t * b.q);
}

int projective_order(const ProjMat2& m)
{
    ProjMat2 p = m;
    for (int k = 1; k <= 1000; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    throw DomainError("element of infinite order in a Mobius symmetry search");
}

std::vector<std::pair<P1Point, int>> distinct_roots(const std::vector<std::pair<P1Point, int>>& roots)
{
    std::vector<std::pair<P1Point, int>> out;
    for (const auto& [pt, m] : roots) {
        if (pt.p.is_zero() && pt.q.is_zero()) throw DomainError("[0:0] is not a point of P^1");
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return same_point(e.first, pt); });
        if (it == out.end())
            out.emplace_back(pt, m);
        else
            it->second += m;
    }
    return out;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    i128 r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const i128 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw DomainError("no modular inverse");
    return static_cast<std::int64_t>(((s0 % m) + m) % m);
}

// y = r mod m; combines with y = r2 mod m2 when compatible.
bool crt_merge(std::int64_t& r, std::int64_t& m, std::int64_t r2, std::int64_t m2)
{
    const std::int64_t g = std::gcd(m, m2);
    if (((r2 - r) % g + g) % g != 0) return false;
    const std::int64_t mg = m / g, m2g = m2 / g;
    const i128 l = static_cast<i128>(mg) * m2;
    if (l > kMaxPhaseModulus) throw DomainError("phase system modulus exceeds " + std::to_string(kMaxPhaseModulus));
    i128 k = static_cast<i128>((r2 - r) / g) % m2g;
    if (m2g > 1) k = (k * mod_inverse(mg % m2g, m2g)) % m2g;
    else k = 0;
    if (k < 0) k += m2g;
    i128 y = (static_cast<i128>(r) + static_cast<i128>(m) * k) % l;
    if (y < 0) y += l;
    r = static_cast<std::int64_t>(y);
    m = static_cast<std::int64_t>(l);
    return true;
}

std::string label_list(const std::vector<GroupLabel>& ls)
{
    std::string s;
    for (const auto& l : ls) s += (s.empty() ? "" : ", ") + l.name();
    return s;
}

bool generators_in(const GroupLabel& small, const FiniteProjGroup& big)
{
    for (const auto& gen : catalog_generators(small))
        if (!big.contains(ProjMat2(gen.lift))) return false;
    return true;
}

struct TwoRootData {
    int a = 0;
    int b = 0;
};

TwoRootData two_root_multiplicities(const QgInstance& q)
{
    std::vector<int> mult;
    if (q.factored_roots) {
        for (const auto& [pt, m] : distinct_roots(*q.factored_roots)) mult.push_back(m);
        std::sort(mult.begin(), mult.end());
    } else {
        mult = root_structure(q.g).multiplicities();
    }
    if (mult.size() != 2) return {};
    return {mult[0], mult[1]};
}

int distinct_root_count(const QgInstance& q)
{
    if (q.factored_roots) return static_cast<int>(distinct_roots(*q.factored_roots).size());
    return root_structure(q.g).distinct_roots();
}

// Matrix M with M * conj(M)^{-1} projectively equal to the named cocycle.
Mat2 splitting_matrix(const std::string& class_name)
{
    if (class_name == "f") return mat2(1, kI, kI, 1);
    if (class_name.rfind("omega", 0) == 0) {
        const int k = std::stoi(class_name.substr(5));
        return mat2(Cyclotomic::zeta(2 * k), 0, 0, Cyclotomic::zeta(2 * k, -1));
    }
    throw DomainError("no splitting matrix for class " + class_name);
}

int rotation_l(const FLabel& f)
{
    if (!f.is_finite()) throw DomainError("mu5 needs a finite symmetry group with a rotation");
    switch (f.group.kind) {
    case GroupLabel::Kind::A:
    case GroupLabel::Kind::D:
        return f.group.l;
    case GroupLabel::Kind::E6:
        return 2;
    case GroupLabel::Kind::E7:
        return 4;
    case GroupLabel::Kind::E8:
        return 5;
    }
    return 1;
}

int form_r(const GroupLabel& l)
{
    switch (l.kind) {
    case GroupLabel::Kind::A:
        return l.l % 2 == 1 ? 1 : 2;
    case GroupLabel::Kind::D:
        return l.l % 2 == 1 ? 2 : 3;
    case GroupLabel::Kind::E6:
    case GroupLabel::Kind::E8:
        return 1;
    case GroupLabel::Kind::E7:
        return 2;
    }
    return 1;
}

bool has_h_class(const GroupLabel& l)
{
    return (l.kind == GroupLabel::Kind::D && l.l % 2 == 0) || l.kind == GroupLabel::Kind::E6 ||
           l.kind == GroupLabel::Kind::E7 || l.kind == GroupLabel::Kind::E8;
}

bool merges_for_odd(const GroupLabel& l) { return !(l.kind == GroupLabel::Kind::A && l.l % 2 == 1); }

const std::string kTwoRootsNote =
    "two-roots enumeration: six classes (Q1, T1 over mu1; Q2, Q'2, T2, T'2 over mu8) with statuses (3,2,1); "
    "the summary table lists (2,2,-) for this row and the summarizing statement names four forms while "
    "claiming two; the enumeration is reported as is";

}  // namespace

QgInstance QgInstance::make(const HomPoly& g, std::optional<std::vector<std::pair<P1Point, int>>> roots)
{
    if (g.is_zero()) throw DomainError("g is zero");
    if (g.degree() < 2 || g.degree() % 2 != 0)
        throw DomainError("g must have even positive degree, got " + std::to_string(g.degree()));
    if (square_test(g).is_square) throw DomainError("g is a square");
    if (roots) {
        int total = 0;
        for (const auto& [pt, m] : *roots) {
            if (m <= 0) throw DomainError("root multiplicities must be positive");
            total += m;
        }
        if (total != g.degree()) throw DomainError("factored roots do not account for the degree of g");
        if (!ratio(g, from_factors(*roots, Cyclotomic(1)))) throw DomainError("factored roots do not match g");
    }
    return QgInstance{g, g.degree() / 2, std::move(roots)};
}

FLabel FLabel::parse(const std::string& text)
{
    if (text == "Gm") return gm();
    if (text == "GmSemidirectZ2") return gm_semidirect_z2();
    return finite(GroupLabel::parse(text));
}

std::string FLabel::name() const
{
    switch (kind) {
    case Kind::Gm:
        return "Gm";
    case Kind::GmSemidirectZ2:
        return "GmSemidirectZ2";
    case Kind::Finite:
        break;
    }
    return group.name();
}

FLabel detect_symmetry(const QgInstance& q)
{
    if (square_test(q.g).is_square) throw DomainError("g is a square");
    const int roots = distinct_root_count(q);
    if (roots == 2) {
        const auto m = two_root_multiplicities(q);
        return m.a == m.b ? FLabel::gm_semidirect_z2() : FLabel::gm();
    }
    if (roots < 2) throw DomainError("g has fewer than two distinct roots");

    std::vector<GroupLabel> candidates;
    for (int l = 2; l <= 2 * q.n; ++l) {
        candidates.push_back(GroupLabel::A(l));
        candidates.push_back(GroupLabel::D(l));
    }
    candidates.push_back(GroupLabel::E6());
    candidates.push_back(GroupLabel::E7());
    candidates.push_back(GroupLabel::E8());

    std::vector<GroupLabel> positive;
    for (const auto& c : candidates) {
        bool ok = true;
        for (const auto& gen : catalog_generators(c)) {
            if (!semi_invariance_factor(q.g, gen.lift)) {
                ok = false;
                break;
            }
        }
        if (ok) positive.push_back(c);
    }
    if (positive.empty()) return FLabel::finite(GroupLabel::A(1));

    const auto best = *std::max_element(positive.begin(), positive.end(),
                                        [](const GroupLabel& a, const GroupLabel& b) { return a.order() < b.order(); });
    const FiniteProjGroup big = catalog(best);
    std::vector<GroupLabel> outside;
    for (const auto& c : positive)
        if (!(c == best) && !generators_in(c, big)) outside.push_back(c);
    if (!outside.empty())
        throw DomainError("ambiguous symmetry: " + best.name() + " and " + label_list(outside) +
                          " are semi-invariance groups not contained in one another");
    return FLabel::finite(best);
}

MobiusSearchResult mobius_symmetry_search(const QgInstance& q)
{
    if (!q.factored_roots) throw DomainError("Mobius search needs factored roots");
    const auto roots = distinct_roots(*q.factored_roots);
    const std::size_t k = roots.size();
    if (k < 3) throw DomainError("Mobius search needs at least three distinct roots");

    const Mat2 src = frame(roots[0].first, roots[1].first, roots[2].first);
    const Mat2 src_inv = adjugate(src);
    std::vector<ProjMat2> found;
    for (std::size_t a = 0; a < k; ++a) {
        if (roots[a].second != roots[0].second) continue;
        for (std::size_t b = 0; b < k; ++b) {
            if (b == a || roots[b].second != roots[1].second) continue;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == a || c == b || roots[c].second != roots[2].second) continue;
                const Mat2 m = (frame(roots[a].first, roots[b].first, roots[c].first) * src_inv).eval();
                bool permutes = true;
                for (const auto& [pt, mult] : roots) {
                    const P1Point image = apply(m, pt);
                    auto it = std::find_if(roots.begin(), roots.end(),
                                           [&](const auto& e) { return same_point(e.first, image); });
                    if (it == roots.end() || it->second != mult) {
                        permutes = false;
                        break;
                    }
                }
                if (!permutes) continue;
                const ProjMat2 pm(m);
                if (std::find(found.begin(), found.end(), pm) == found.end()) found.push_back(pm);
            }
        }
    }

    MobiusSearchResult out;
    out.group.elements.push_back(ProjMat2::identity());
    for (const auto& m : found)
        if (!m.is_identity()) out.group.elements.push_back(m);
    const int order = out.group.order();
    int max_order = 1;
    for (const auto& m : out.group.elements) max_order = std::max(max_order, projective_order(m));

    if (max_order == order) {
        out.label = FLabel::finite(GroupLabel::A(order));
    } else if (order % 2 == 0 && max_order == order / 2 && order >= 4) {
        out.label = FLabel::finite(GroupLabel::D(order / 2));
    } else if (order == 12 && max_order == 3) {
        out.label = FLabel::finite(GroupLabel::E6());
    } else if (order == 24 && max_order == 4) {
        out.label = FLabel::finite(GroupLabel::E7());
    } else if (order == 60 && max_order == 5) {
        out.label = FLabel::finite(GroupLabel::E8());
    } else {
        throw VerificationError("Mobius search found a group of order " + std::to_string(order) +
                                " outside the finite subgroup list");
    }
    out.group.label = out.label.group;
    return out;
}

RealizabilityResult realizable(const HomPoly& g)
{
    if (g.is_zero()) throw DomainError("g is zero");
    if (g.degree() % 2 != 0) throw DomainError("g must have even degree");
    RealizabilityResult res;
    res.phi = SL2Mat();
    const int d = g.degree();

    auto finish = [&](const Cyclotomic& lambda, const Mat2& phi, const std::string& how) {
        const HomPoly image = lambda * compose(g, phi);
        if (!image.is_real())
            throw VerificationError("realizability witness failed: " + image.to_string() + " is not real");
        res.status = Realizability::Realizable;
        res.lambda = lambda;
        res.phi = SL2Mat(phi);
        res.detail = how;
        return res;
    };

    if (g.is_real()) return finish(Cyclotomic(1), Mat2::Identity(), "g is real");
    if (g.terms().size() == 1) return finish(g.terms().begin()->second.inverse(), Mat2::Identity(), "monomial");

    const int r = g.terms().rbegin()->first;
    const Cyclotomic cr = g.coeff(r);
    const Cyclotomic t = r > 0 ? -g.coeff(r - 1) / (Cyclotomic(static_cast<long>(r)) * cr) : Cyclotomic(0);
    const Mat2 T = mat2(1, t, 0, 1);
    const HomPoly reduced = cr.inverse() * compose(g, T);

    // Solve the congruence system in exponents of zeta_L.
    std::int64_t L = 1;
    for (const auto& [s, c] : reduced.terms()) {
        if (s == r) continue;
        auto idx = (c.conjugate() / c).root_of_unity_index();
        if (!idx) {
            res.status = Realizability::Undecidable;
            res.detail = "undecidable within cyclotomic scalars: phase ratio of the coefficient " + c.to_string() +
                         " is not a root of unity";
            return res;
        }
        L = std::lcm(L, std::llabs(4 * static_cast<std::int64_t>(s - r)) * idx->first);
        if (L > kMaxPhaseModulus) throw DomainError("phase system modulus exceeds " + std::to_string(kMaxPhaseModulus));
    }
    std::int64_t x = 0, xm = 1;
    for (const auto& [s, c] : reduced.terms()) {
        if (s == r) continue;
        auto idx = (c.conjugate() / c).root_of_unity_index();
        // alpha = zeta_L^x: alpha^{4(s-r)} = zeta_L^{4(s-r) x} must equal zeta_m^k = zeta_L^{k L/m}.
        const std::int64_t a = (((4 * static_cast<std::int64_t>(s - r)) % L) + L) % L;
        const std::int64_t b = static_cast<std::int64_t>(idx->second) * (L / idx->first) % L;
        const std::int64_t gcd = std::gcd(a, L);
        if (b % gcd != 0) {
            res.status = Realizability::NotRealizable;
            res.detail = "phase equations alpha^(4(s-r)) = conj(c_s)/c_s have no common root of unity solution";
            return res;
        }
        const std::int64_t Lg = L / gcd;
        const std::int64_t sol = Lg == 1 ? 0 : static_cast<std::int64_t>(static_cast<i128>(b / gcd) * mod_inverse(a / gcd, Lg) % Lg);
        if (!crt_merge(x, xm, sol, Lg)) {
            res.status = Realizability::NotRealizable;
            res.detail = "phase equations alpha^(4(s-r)) = conj(c_s)/c_s have no common root of unity solution";
            return res;
        }
    }

    const Cyclotomic alpha = Cyclotomic::zeta(static_cast<int>(L), x);
    const Mat2 phi = (T * mat2(alpha, 0, 0, alpha.inverse())).eval();
    const Cyclotomic lambda = cr.inverse() * alpha.pow(d - 2 * r);
    std::ostringstream how;
    how << "translation t = " << t.to_string() << ", phase alpha = zeta(" << L << ")^" << x;
    return finish(lambda, phi, how.str());
}

FormCounts form_counts(Parity parity, const FLabel& f)
{
    FormCounts c;
    switch (f.kind) {
    case FLabel::Kind::Gm:
        c.rational = 1;
        c.unknown = 1;
        return c;
    case FLabel::Kind::GmSemidirectZ2:
        c.rational = 3;
        c.unknown = 2;
        c.no_real_points = 1;
        c.note = kTwoRootsNote;
        return c;
    case FLabel::Kind::Finite:
        break;
    }
    f.group.validate();
    const int r = form_r(f.group);
    const bool merge = parity == Parity::Odd && merges_for_odd(f.group);
    c.rational = merge ? r : 2 * r;
    c.unknown = merge ? r : 2 * r;
    c.no_real_points = has_h_class(f.group) ? 4 : 0;
    return c;
}

std::string to_string(RationalityStatus s)
{
    switch (s) {
    case RationalityStatus::Rational:
        return "rational";
    case RationalityStatus::Unknown:
        return "unknown";
    case RationalityStatus::NoRealPoints:
        return "no_real_points";
    }
    return "unknown";
}

std::string to_string(Aut0 a)
{
    switch (a) {
    case Aut0::PGL2R:
        return "PGL2R";
    case Aut0::SO3R:
        return "SO3R";
    case Aut0::PGL2RxGmR:
        return "PGL2RxGmR";
    case Aut0::SO3RxGmR:
        return "SO3RxGmR";
    case Aut0::Unspecified:
        return "unspecified";
    }
    return "unspecified";
}

std::string FormDescriptor::name() const { return family + std::to_string(index); }

std::optional<std::string> FormDescriptor::equation() const
{
    if (!g_i) return std::nullopt;
    const bool squares = family == "Y" || family == "Z" || family == "T" || family == "T'";
    const bool plus = family == "X" || family == "Z" || family == "Q'" || family == "T'";
    std::string s = squares ? "x0^2 + x1^2 + x2^2" : "x0^2 - x1*x2";
    s += plus ? " + (" : " - (";
    s += g_i->to_string() + ")*x3^2";
    return s;
}

FormCounts RealFormReport::counts() const
{
    FormCounts c;
    for (const auto& f : forms) {
        switch (f.status) {
        case RationalityStatus::Rational:
            ++c.rational;
            break;
        case RationalityStatus::Unknown:
            ++c.unknown;
            break;
        case RationalityStatus::NoRealPoints:
            ++c.no_real_points;
            break;
        }
    }
    return c;
}

std::array<HomPoly, 3> invariant_generators(const GroupLabel& label)
{
    label.validate();
    const int l = label.l;
    switch (label.kind) {
    case GroupLabel::Kind::A:
        return {HomPoly::monomial(1, 2 * l, 0), HomPoly::monomial(1, 1, 1), HomPoly::monomial(1, 0, 2 * l)};
    case GroupLabel::Kind::D: {
        const HomPoly u0u1 = HomPoly::monomial(1, 1, 1);
        const HomPoly diff_l = HomPoly::monomial(1, l, 0) - HomPoly::monomial(1, 0, l);
        if (l % 2 == 1)
            return {u0u1.pow(2), HomPoly::monomial(1, 2 * l, 0) - HomPoly::monomial(1, 0, 2 * l), u0u1 * diff_l.pow(2)};
        return {u0u1.pow(2), diff_l.pow(2), u0u1 * (HomPoly::monomial(1, 2 * l, 0) - HomPoly::monomial(1, 0, 2 * l))};
    }
    case GroupLabel::Kind::E6:
        return {hom(6, {{5, 1}, {1, -1}}), hom(8, {{8, 1}, {4, 14}, {0, 1}}),
                hom(12, {{12, 1}, {8, -33}, {4, -33}, {0, 1}})};
    case GroupLabel::Kind::E7:
        return {hom(8, {{8, 1}, {4, 14}, {0, 1}}), hom(12, {{10, 1}, {6, -2}, {2, 1}}),
                hom(18, {{17, 1}, {13, -34}, {5, 34}, {1, -1}})};
    case GroupLabel::Kind::E8:
        return {hom(12, {{11, 1}, {6, 11}, {1, -1}}), hom(20, {{20, 1}, {15, -228}, {10, 494}, {5, 228}, {0, 1}}),
                hom(30, {{30, 1}, {25, 522}, {20, -10005}, {10, -10005}, {5, -522}, {0, 1}})};
    }
    throw DomainError("unknown group label");
}

InvariantTwist twisted_generators(const GroupLabel& label, const std::string& class_name)
{
    InvariantTwist out;
    out.f = invariant_generators(label);
    const int l = label.l;
    const auto& f = out.f;
    const HomPoly q = sum_of_squares_u();
    const std::string omega_name = "omega" + std::to_string(2 * l);

    auto even_sum = [&]() {
        HomPoly s(2 * l);
        for (int k = 0; k <= l; ++k) {
            const Integer c = (k % 2 == 0 ? 1 : -1) * binomial(2 * l, 2 * k);
            s = s + HomPoly::monomial(integer_value(c), 2 * (l - k), 2 * k);
        }
        return s;
    };
    auto odd_sum = [&]() {
        HomPoly s(2 * l);
        for (int k = 0; k <= l - 1; ++k) {
            const Integer c = (k % 2 == 0 ? 1 : -1) * binomial(2 * l, 2 * k + 1);
            s = s + HomPoly::monomial(integer_value(c), 2 * (l - k) - 1, 2 * k + 1);
        }
        return s;
    };

    if (label.kind == GroupLabel::Kind::A && l % 2 == 0 && class_name == omega_name) {
        out.twisted = {-f[0], f[1], -f[2]};
        return out;
    }
    if (label.kind == GroupLabel::Kind::D && l % 2 == 1 && class_name == "f") {
        const Cyclotomic il1 = kI.pow(l + 1);
        out.twisted = {-q.pow(2), Cyclotomic(2) * even_sum(),
                       -(Cyclotomic(2) * il1) * q.pow(l + 1) - Cyclotomic(2) * (q * odd_sum())};
        return out;
    }
    if (label.kind == GroupLabel::Kind::D && l % 2 == 0 && class_name == omega_name) {
        const HomPoly sum_l = HomPoly::monomial(1, l, 0) + HomPoly::monomial(1, 0, l);
        out.twisted = {f[0], -sum_l.pow(2), -f[2]};
        return out;
    }
    if (label.kind == GroupLabel::Kind::D && l % 2 == 0 && class_name == "f") {
        const Cyclotomic il = kI.pow(l);
        out.twisted = {-q.pow(2), -(Cyclotomic(2) * il) * q.pow(l) + Cyclotomic(2) * even_sum(),
                       -Cyclotomic(2) * (q * odd_sum())};
        return out;
    }
    if (label.kind == GroupLabel::Kind::E7 && class_name == "omega8") {
        out.twisted = {hom(8, {{8, -1}, {4, 14}, {0, -1}}), hom(12, {{10, -1}, {6, -2}, {2, -1}}),
                       hom(18, {{17, 1}, {13, 34}, {5, -34}, {1, -1}})};
        return out;
    }
    throw DomainError("no twisted invariant generators for class " + class_name + " of " + label.name());
}

std::optional<InvariantExpression> express_in_invariants(const HomPoly& g, const std::array<HomPoly, 3>& f)
{
    const int d = g.degree();
    InvariantExpression out;
    const int d0 = f[0].degree(), d1 = f[1].degree(), d2 = f[2].degree();
    for (int a = 0; a * d0 <= d; ++a)
        for (int b = 0; a * d0 + b * d1 <= d; ++b) {
            const int rest = d - a * d0 - b * d1;
            if (rest % d2 == 0) out.monomials.push_back({a, b, rest / d2});
        }
    if (out.monomials.empty()) return std::nullopt;

    const int cols = static_cast<int>(out.monomials.size());
    Mat<Cyclotomic> m(d + 1, cols);
    for (int j = 0; j < cols; ++j) {
        const auto& e = out.monomials[static_cast<std::size_t>(j)];
        const HomPoly v = f[0].pow(e[0]) * f[1].pow(e[1]) * f[2].pow(e[2]);
        for (int k = 0; k <= d; ++k) m(k, j) = v.coeff(k);
    }
    Vec<Cyclotomic> rhs(d + 1);
    for (int k = 0; k <= d; ++k) rhs(k) = g.coeff(k);
    auto sol = solve<Cyclotomic>(m, rhs);
    if (!sol) return std::nullopt;
    for (int j = 0; j < cols; ++j) out.coeffs.push_back((*sol)(j));
    const Mat<Cyclotomic> ker = kernel<Cyclotomic>(m);
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        std::vector<Cyclotomic> v;
        for (Eigen::Index r = 0; r < ker.rows(); ++r) v.push_back(ker(r, c));
        out.syzygies.push_back(std::move(v));
    }
    return out;
}

HomPoly evaluate(const InvariantExpression& p, const std::array<HomPoly, 3>& f)
{
    std::optional<HomPoly> sum;
    for (std::size_t j = 0; j < p.monomials.size(); ++j) {
        const auto& e = p.monomials[j];
        const HomPoly term = p.coeffs[j] * (f[0].pow(e[0]) * f[1].pow(e[1]) * f[2].pow(e[2]));
        sum = sum ? *sum + term : term;
    }
    if (!sum) throw DomainError("empty invariant expression");
    return *sum;
}

namespace {

// Sum of syzygy coefficients times twisted monomials; zero when the twist respects the relation.
bool syzygies_hold(const InvariantExpression& p, const std::array<HomPoly, 3>& twisted)
{
    for (const auto& s : p.syzygies) {
        InvariantExpression e{p.monomials, s, {}};
        if (!evaluate(e, twisted).is_zero()) return false;
    }
    return true;
}

FormDescriptor descriptor(const std::string& family, int index, const std::string& over, std::optional<HomPoly> gi,
                          RationalityStatus status, Aut0 aut0)
{
    FormDescriptor d;
    d.family = family;
    d.index = index;
    d.over_class = over;
    d.g_i = std::move(gi);
    d.status = status;
    d.aut0 = aut0;
    return d;
}

}  // namespace

RealFormReport enumerate_forms(const QgInstance& q)
{
    RealFormReport rep{q, q.g, std::nullopt, FLabel{}, {}, {}};
    if (!q.g.is_real()) {
        auto w = realizable(q.g);
        if (!w.realizable()) throw DomainError("g admits no real form: " + w.detail);
        rep.real_g = w.lambda * compose(q.g, w.phi);
        rep.realization = w;
        rep.notes.push_back("g replaced by the real polynomial lambda*g(phi(u)) = " + rep.real_g.to_string());
    }
    const QgInstance rq = rep.realization ? QgInstance::make(rep.real_g) : q;
    rep.f = detect_symmetry(rq);
    const int n = rq.n;

    if (!rep.f.is_finite()) {
        const auto m = two_root_multiplicities(rq);
        if (rep.f.kind == FLabel::Kind::Gm) {
            const HomPoly g0 = HomPoly::monomial(1, m.a, m.b);
            rep.forms.push_back(descriptor("Q", 1, "mu1", g0, RationalityStatus::Rational, Aut0::PGL2RxGmR));
            rep.forms.push_back(descriptor("T", 1, "mu1", g0, RationalityStatus::Unknown, Aut0::SO3RxGmR));
        } else {
            const HomPoly g0 = HomPoly::monomial(1, n, n);
            const HomPoly g8 = sum_of_squares_u().pow(n);
            rep.forms.push_back(descriptor("Q", 1, "mu1", g0, RationalityStatus::Rational, Aut0::PGL2RxGmR));
            rep.forms.push_back(descriptor("T", 1, "mu1", g0, RationalityStatus::Unknown, Aut0::SO3RxGmR));
            rep.forms.push_back(descriptor("Q", 2, "mu8", g8, RationalityStatus::Rational, Aut0::PGL2RxGmR));
            rep.forms.push_back(descriptor("Q'", 2, "mu8", g8, RationalityStatus::Rational, Aut0::PGL2RxGmR));
            rep.forms.push_back(descriptor("T", 2, "mu8", g8, RationalityStatus::Unknown, Aut0::SO3RxGmR));
            rep.forms.push_back(descriptor("T'", 2, "mu8", g8, RationalityStatus::NoRealPoints, Aut0::SO3RxGmR));
            rep.notes.push_back(kTwoRootsNote);
        }
        rep.notes.push_back("equations are given in normalized coordinates with roots at 0 and infinity (mu1) or at +-i (mu8)");
        return rep;
    }

    const GroupLabel label = rep.f.group;
    const FiniteProjGroup group = catalog(label);
    const auto classes = h1(group);
    const bool merge = n % 2 == 1 && merges_for_odd(label);
    int index = 0, h_forms = 0;
    for (const auto& cls : classes) {
        if (cls.name.empty()) throw VerificationError("unnamed cohomology class for " + label.name());
        if (cls.name == "h") {
            h_forms += 4;
            continue;
        }
        ++index;
        HomPoly gi = rq.g;
        if (cls.name != "I2") {
            const auto tw = twisted_generators(label, cls.name);
            const auto p = express_in_invariants(rq.g, tw.f);
            if (p) {
                if (!syzygies_hold(*p, tw.twisted))
                    throw VerificationError("twisted generators violate a syzygy of " + label.name());
                gi = evaluate(*p, tw.twisted);
            } else {
                // g is semi-invariant with a nontrivial character: twist by the splitting matrix directly.
                const HomPoly c = compose(rq.g, splitting_matrix(cls.name));
                const auto kappa = ratio(c.conjugate(), c);
                if (!kappa) throw VerificationError("twisted polynomial has no real multiple");
                gi = root_of_unity_sqrt(*kappa) * c;
                rep.notes.push_back("g" + std::to_string(index) + " over [" + cls.name +
                                    "] is not a polynomial in the invariant generators; computed as a real multiple of g composed with the splitting matrix");
            }
            if (!gi.is_real()) throw VerificationError("twisted polynomial g" + std::to_string(index) + " is not real");
        }
        const std::string i = std::to_string(index);
        auto w = descriptor("W", index, cls.name, gi, RationalityStatus::Rational, Aut0::PGL2R);
        auto y = descriptor("Y", index, cls.name, gi, RationalityStatus::Unknown, Aut0::SO3R);
        if (merge) {
            w.merged = true;
            w.merged_with = "X" + i;
            y.merged = true;
            y.merged_with = "Z" + i;
            rep.forms.push_back(w);
            rep.forms.push_back(y);
        } else {
            rep.forms.push_back(w);
            rep.forms.push_back(descriptor("X", index, cls.name, gi, RationalityStatus::Rational, Aut0::PGL2R));
            rep.forms.push_back(y);
            rep.forms.push_back(descriptor("Z", index, cls.name, gi, RationalityStatus::Unknown, Aut0::SO3R));
        }
    }
    for (int k = 1; k <= h_forms; ++k)
        rep.forms.push_back(descriptor("H", k, "h", std::nullopt, RationalityStatus::NoRealPoints, Aut0::Unspecified));

    const FormCounts expected = form_counts(n % 2 == 0 ? Parity::Even : Parity::Odd, rep.f);
    const FormCounts got = rep.counts();
    if (got.rational != expected.rational || got.unknown != expected.unknown || got.no_real_points != expected.no_real_points)
        throw VerificationError("enumerated forms disagree with form_counts for " + rep.f.name());
    return rep;
}

GradedAmbient qg_ambient(int n)
{
    return GradedAmbient{{"x0", "x1", "x2", "x3", "u0", "u1"}, {{1, 0}, {1, 0}, {1, 0}, {1, -n}, {0, 1}, {0, 1}}};
}

Poly to_ambient(const HomPoly& g, int nvars, int u0_index)
{
    Poly out(nvars);
    for (const auto& [e, c] : g.terms()) {
        Poly::Exponent ex(static_cast<std::size_t>(nvars), 0);
        ex[static_cast<std::size_t>(u0_index)] = e;
        ex[static_cast<std::size_t>(u0_index + 1)] = g.degree() - e;
        out.add_term(ex, c);
    }
    return out;
}

Poly qg_equation(const HomPoly& g, bool sum_of_squares, int sign)
{
    const int nv = 6;
    auto x = [&](int i) { return Poly::var(nv, i); };
    Poly quad = sum_of_squares ? x(0) * x(0) + x(1) * x(1) + x(2) * x(2) : x(0) * x(0) - x(1) * x(2);
    const Poly gx = to_ambient(g, nv, 4) * x(3) * x(3);
    return sign < 0 ? quad - gx : quad + gx;
}

RealStructureVerdict check_real_structure(int index, const QgInstance& q, std::optional<int> l)
{
    if (index < 1 || index > 11) throw DomainError("real structure index must be in 1..11");
    enum { X0, X1, X2, X3, U0, U1 };
    RealStructureVerdict v;
    v.index = index;
    v.map = MonomialAntiregularMap::conjugation(6);
    auto& m = v.map;

    const bool tau = index == 3 || index == 4 || index == 10 || index == 11;
    const bool sigma = index == 2 || index == 3 || index == 9 || index == 10;

    std::optional<Mat2> u_map;  // u -> u_map * conj(u)
    std::string u_name;
    switch (index) {
    case 5: {
        const int ll = l ? *l : rotation_l(detect_symmetry(q));
        if (ll < 1) throw DomainError("mu5 needs l >= 1");
        u_map = mat2(Cyclotomic::zeta(2 * ll), 0, 0, Cyclotomic::zeta(2 * ll, -1));
        u_name = "omega" + std::to_string(2 * ll);
        break;
    }
    case 6:
        u_map = gen_f();
        u_name = "f";
        break;
    case 7:
        if (q.n % 2 != 0)
            throw DomainError("applicability precondition violated: mu7 squares to x3 -> -x3 on the ambient when n is odd");
        u_map = gen_h();
        u_name = "h";
        break;
    case 8:
    case 9:
    case 10:
    case 11:
        u_map = mat2(0, 1, 1, 0);
        u_name = "the swap of u0 and u1";
        break;
    default:
        break;
    }

    if (u_map) {
        const Mat2& M = *u_map;
        for (int r = 0; r < 2; ++r) {
            const int c = M(r, 0).is_zero() ? 1 : 0;
            if (!M(r, 1 - c).is_zero()) throw DomainError("u-part of the structure must be monomial");
            m.send(U0 + r, U0 + c, M(r, c));
        }
        const HomPoly moved = compose(q.g.conjugate(), conjugate(M));
        auto lambda = ratio(moved, q.g);
        if (!lambda)
            throw DomainError("applicability precondition violated: g is not semi-invariant under " + u_name);
        if (*lambda != Cyclotomic(1)) v.x3_scale = root_of_unity_sqrt(*lambda);
    }
    Cyclotomic x3 = v.x3_scale;
    if (sigma) x3 = -x3;
    m.send(X3, X3, x3);
    if (tau) {
        m.send(X0, X0, -1);
        m.send(X1, X2, 1);
        m.send(X2, X1, 1);
    }
    v.check = verify_antiregular(qg_ambient(q.n), m, {qg_equation(q.g)});
    return v;
}

bool real_structure_applicable(int index, const QgInstance& q, std::optional<int> l)
{
    try {
        check_real_structure(index, q, l);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

namespace {

void check_link_factor(const HomPoly& h)
{
    if (h.degree() < 1) throw DomainError("psi_h needs deg h >= 1");
    if (!h.is_real()) throw DomainError("h must be real");
    if (h.degree() > 2) throw DomainError("h reducible over R: degree " + std::to_string(h.degree()));
    if (h.degree() == 2) {
        for (const auto& [e, c] : h.terms())
            if (!c.is_rational()) throw DomainError("quadratic h must have rational coefficients");
        const Rational a = h.coeff(2).rational_value(), b = h.coeff(1).rational_value(), c = h.coeff(0).rational_value();
        if (b * b - 4 * a * c >= 0) throw DomainError("h reducible over R: nonnegative discriminant");
    }
}

std::vector<Poly> psi_images(const HomPoly& h)
{
    const int nv = 6;
    const Poly hp = to_ambient(h, nv, 4);
    std::vector<Poly> images;
    for (int i = 0; i < 3; ++i) images.push_back(hp * Poly::var(nv, i));
    for (int i = 3; i < 6; ++i) images.push_back(Poly::var(nv, i));
    return images;
}

}  // namespace

PsiVerdict check_psi_h(const HomPoly& g, const HomPoly& h)
{
    check_link_factor(h);
    if (!g.is_real()) throw DomainError("g must be real");
    const HomPoly gh2 = g * h.pow(2);
    if (square_test(gh2).is_square) throw DomainError("g*h^2 is a square");
    PsiVerdict v;
    v.n = g.degree() / 2;
    // The x3 weight relative to h*x_i drops by deg h.
    v.n_prime = v.n + h.degree();
    if (gh2.degree() != 2 * v.n_prime) throw VerificationError("degree bookkeeping mismatch");
    const Poly lhs = qg_equation(gh2).substitute(psi_images(h));
    const Poly rhs = to_ambient(h.pow(2), 6, 4) * qg_equation(g);
    v.identity_holds = lhs == rhs;
    v.detail = v.identity_holds ? "pullback equals h^2 times the equation of Q_g" : "pullback identity fails";
    return v;
}

bool check_psi_composition(const HomPoly& g, const HomPoly& h1, const HomPoly& h2)
{
    if (h1.degree() < 1 || h2.degree() < 1) throw DomainError("psi_h needs deg h >= 1");
    const HomPoly h = h1 * h2;
    const Poly target = qg_equation(g * h.pow(2));
    const Poly stepwise = target.substitute(psi_images(h1)).substitute(psi_images(h2));
    const Poly direct = target.substitute(psi_images(h));
    return stepwise == direct && direct == to_ambient(h.pow(2), 6, 4) * qg_equation(g);
}

}  // namespace rf
