#include "rf/hompoly.hpp"

#include "rf/error.hpp"

#include <algorithm>
#include <sstream>

namespace rf {

HomPoly::HomPoly(int degree) : d_(degree)
{
    if (degree < 0) throw DomainError("negative degree");
}

HomPoly::HomPoly(int degree, std::map<int, Cyclotomic> terms) : d_(degree)
{
    if (degree < 0) throw DomainError("negative degree");
    for (auto& [e, c] : terms) {
        if (e < 0 || e > degree) throw DomainError("term exponent outside 0..degree");
        if (!c.is_zero()) t_.emplace(e, std::move(c));
    }
}

HomPoly HomPoly::monomial(const Cyclotomic& c, int e0, int e1)
{
    return HomPoly(e0 + e1, {{e0, c}});
}

HomPoly HomPoly::linear(const Cyclotomic& a, const Cyclotomic& b)
{
    return HomPoly(1, {{1, a}, {0, b}});
}

Cyclotomic HomPoly::coeff(int e0) const
{
    auto it = t_.find(e0);
    return it == t_.end() ? Cyclotomic(0) : it->second;
}

bool HomPoly::is_real() const
{
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.is_real(); });
}

HomPoly HomPoly::conjugate() const
{
    std::map<int, Cyclotomic> m;
    for (const auto& [e, c] : t_) m.emplace(e, c.conjugate());
    return HomPoly(d_, std::move(m));
}

HomPoly HomPoly::derivative_u0() const
{
    if (d_ == 0) return HomPoly(0);
    std::map<int, Cyclotomic> m;
    for (const auto& [e, c] : t_)
        if (e > 0) m.emplace(e - 1, c * Cyclotomic(static_cast<long>(e)));
    return HomPoly(d_ - 1, std::move(m));
}

HomPoly HomPoly::pow(int e) const
{
    if (e < 0) throw DomainError("negative power of a polynomial");
    HomPoly r = constant(Cyclotomic(1)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

UPoly<Cyclotomic> HomPoly::dehomogenize() const
{
    std::vector<Cyclotomic> v(static_cast<std::size_t>(d_) + 1, Cyclotomic(0));
    for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e)] = c;
    return UPoly<Cyclotomic>(std::move(v));
}

HomPoly HomPoly::homogenize(const UPoly<Cyclotomic>& p, int degree)
{
    if (p.degree() > degree) throw DomainError("homogenization degree too small");
    std::map<int, Cyclotomic> m;
    for (int k = 0; k <= p.degree(); ++k) m.emplace(k, p.coeff(k));
    return HomPoly(degree, std::move(m));
}

std::optional<HomPoly> HomPoly::divide(const HomPoly& h) const
{
    if (h.is_zero()) throw DomainError("division by the zero polynomial");
    if (h.d_ > d_) return is_zero() ? std::optional<HomPoly>(HomPoly(0)) : std::nullopt;
    auto [q, r] = UPoly<Cyclotomic>::divmod(dehomogenize(), h.dehomogenize());
    if (!r.is_zero() || q.degree() > d_ - h.d_) return std::nullopt;
    return homogenize(q, d_ - h.d_);
}

HomPoly operator+(const HomPoly& a, const HomPoly& b)
{
    if (a.is_zero() && a.d_ != b.d_) return b;
    if (b.is_zero() && a.d_ != b.d_) return a;
    if (a.d_ != b.d_) throw DomainError("adding homogeneous polynomials of different degrees");
    std::map<int, Cyclotomic> m = a.t_;
    for (const auto& [e, c] : b.t_) {
        auto it = m.find(e);
        if (it == m.end())
            m.emplace(e, c);
        else
            it->second += c;
    }
    return HomPoly(a.d_, std::move(m));
}

HomPoly operator-(const HomPoly& a) { return Cyclotomic(-1) * a; }

HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }

HomPoly operator*(const HomPoly& a, const HomPoly& b)
{
    std::map<int, Cyclotomic> m;
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            auto [it, fresh] = m.try_emplace(ea + eb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    return HomPoly(a.d_ + b.d_, std::move(m));
}

HomPoly operator*(const Cyclotomic& s, const HomPoly& a)
{
    std::map<int, Cyclotomic> m;
    for (const auto& [e, c] : a.t_) m.emplace(e, s * c);
    return HomPoly(a.d_, std::move(m));
}

bool operator==(const HomPoly& a, const HomPoly& b)
{
    if (a.is_zero() && b.is_zero()) return true;
    if (a.d_ != b.d_ || a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    for (auto ib = b.t_.begin(); ib != b.t_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

namespace {

std::string monomial_text(int e0, int e1)
{
    std::string s;
    auto add = [&s](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    add("u0", e0);
    add("u1", e1);
    return s;
}

}  // namespace

std::string HomPoly::to_string() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const int e0 = it->first, e1 = d_ - it->first;
        const std::string mono = monomial_text(e0, e1);
        Cyclotomic c = it->second;
        bool neg = false;
        std::string ctext;
        if (c.is_rational()) {
            neg = c.rational_value() < 0;
            if (neg) c = -c;
            ctext = c.to_string();
            if (ctext == "1" && !mono.empty()) ctext.clear();
        } else {
            ctext = "(" + c.to_string() + ")";
        }
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        os << ctext;
        if (!ctext.empty() && !mono.empty()) os << "*";
        os << mono;
    }
    return os.str();
}

HomPoly compose(const HomPoly& g, const Mat2& m)
{
    const int d = g.degree();
    const HomPoly x = HomPoly::linear(m(0, 0), m(0, 1));
    const HomPoly y = HomPoly::linear(m(1, 0), m(1, 1));
    std::vector<HomPoly> xp{HomPoly::constant(Cyclotomic(1))}, yp{HomPoly::constant(Cyclotomic(1))};
    for (int k = 1; k <= d; ++k) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    HomPoly out(d);
    for (const auto& [e, c] : g.terms())
        out = out + c * (xp[static_cast<std::size_t>(e)] * yp[static_cast<std::size_t>(d - e)]);
    return out;
}

HomPoly from_factors(const std::vector<std::pair<P1Point, int>>& factors, const Cyclotomic& scalar)
{
    if (scalar.is_zero()) throw DomainError("from_factors: zero scalar");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& [pi, mi] = factors[i];
        if (mi < 1) throw DomainError("from_factors: multiplicities must be positive");
        if (pi.p.is_zero() && pi.q.is_zero()) throw DomainError("from_factors: [0:0] is not a point");
        for (std::size_t j = 0; j < i; ++j) {
            const auto& pj = factors[j].first;
            if (pi.p * pj.q == pj.p * pi.q) throw DomainError("from_factors: repeated point");
        }
    }
    HomPoly out = HomPoly::constant(scalar);
    for (const auto& [pt, mult] : factors) {
        const HomPoly lin = pt.q.is_zero() ? HomPoly::linear(0, 1) : HomPoly::linear(1, -pt.p / pt.q);
        out = out * lin.pow(mult);
    }
    return out;
}

int RootStructure::distinct_roots() const
{
    int n = multiplicity_at_infinity > 0 ? 1 : 0;
    for (const auto& f : squarefree) n += f.degree();
    return n;
}

std::vector<int> RootStructure::multiplicities() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < squarefree.size(); ++i)
        for (int k = 0; k < squarefree[i].degree(); ++k) out.push_back(static_cast<int>(i) + 1);
    if (multiplicity_at_infinity > 0) out.push_back(multiplicity_at_infinity);
    std::sort(out.begin(), out.end());
    return out;
}

RootStructure root_structure(const HomPoly& g)
{
    if (g.is_zero()) throw DomainError("root structure of the zero polynomial");
    RootStructure rs;
    const auto G = g.dehomogenize();
    rs.multiplicity_at_infinity = g.degree() - G.degree();
    rs.squarefree = UPoly<Cyclotomic>::squarefree(G);
    return rs;
}

SquareVerdict square_test(const HomPoly& g)
{
    if (g.is_zero()) throw DomainError("square_test: zero polynomial");
    SquareVerdict v;
    const RootStructure rs = root_structure(g);
    if (rs.multiplicity_at_infinity % 2 != 0) return v;
    for (std::size_t i = 0; i < rs.squarefree.size(); ++i)
        if ((i + 1) % 2 == 1 && rs.squarefree[i].degree() > 0) return v;
    v.is_square = true;
    UPoly<Cyclotomic> r = UPoly<Cyclotomic>::constant(Cyclotomic(1));
    for (std::size_t i = 1; i < rs.squarefree.size(); i += 2)
        for (std::size_t k = 0; k < (i + 1) / 2; ++k) r = r * rs.squarefree[i];
    const Cyclotomic lead = g.dehomogenize().lead();
    Cyclotomic s(1);
    if (lead.is_rational()) {
        s = cyclotomic_sqrt(lead.rational_value());
    } else if (auto idx = lead.root_of_unity_index()) {
        s = Cyclotomic::zeta(2 * idx->first, idx->second);
    } else {
        v.scale = lead;
    }
    v.root = HomPoly::homogenize(r * s, g.degree() / 2);
    const HomPoly check = v.scale * (*v.root * *v.root);
    if (check != g) throw VerificationError("square_test: reconstructed square root does not square back");
    return v;
}

}  // namespace rf
