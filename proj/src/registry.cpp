#include "rf/registry.hpp"

#include "rf/error.hpp"
#include "rf/linalg.hpp"
#include "rf/parse.hpp"
#include "rf/qg.hpp"
#include "rf/schwarzenberger.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rf::forms {

using json = nlohmann::json;

struct Registry::Data {
    json doc;
};

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string strip_spaces(const std::string& s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::optional<int> parse_int(const std::string& s)
{
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
    return std::stoi(s);
}

using Params = std::map<std::string, int>;

// Integer expressions of the registry: 3, b, -c, |c|, b+1, m-2.
std::optional<int> eval_expr(const std::string& raw, const Params& params)
{
    const std::string s = strip_spaces(raw);
    if (auto v = parse_int(s)) return v;
    auto lookup = [&params](const std::string& name) -> std::optional<int> {
        auto it = params.find(name);
        if (it == params.end()) return std::nullopt;
        return it->second;
    };
    if (s.size() >= 3 && s.front() == '|' && s.back() == '|') {
        auto v = lookup(s.substr(1, s.size() - 2));
        if (!v) return std::nullopt;
        return std::abs(*v);
    }
    if (s.size() >= 2 && s.front() == '-' && is_identifier(s.substr(1))) {
        auto v = lookup(s.substr(1));
        if (!v) return std::nullopt;
        return -*v;
    }
    const auto op = s.find_first_of("+-", 1);
    if (op != std::string::npos) {
        auto v = lookup(s.substr(0, op));
        auto k = parse_int(s.substr(op + 1));
        if (!v || !k) return std::nullopt;
        return s[op] == '+' ? *v + *k : *v - *k;
    }
    return lookup(s);
}

int require_expr(const std::string& s, const Params& params)
{
    auto v = eval_expr(s, params);
    if (!v) throw DomainError("registry: cannot evaluate '" + s + "'");
    return *v;
}

bool eval_atom(const std::string& raw, const Params& params)
{
    const std::string s = trim(raw);
    for (const char* parity : {" even", " odd"}) {
        const std::string suffix(parity);
        if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
            const int v = require_expr(s.substr(0, s.size() - suffix.size()), params);
            return (v % 2 == 0) == (suffix == " even");
        }
    }
    for (const char* op : {">=", "<=", "==", "!=", ">", "<"}) {
        const auto at = s.find(op);
        if (at == std::string::npos) continue;
        const std::string o(op);
        const int l = require_expr(s.substr(0, at), params);
        const int r = require_expr(s.substr(at + o.size()), params);
        if (o == ">=") return l >= r;
        if (o == "<=") return l <= r;
        if (o == "==") return l == r;
        if (o == "!=") return l != r;
        if (o == ">") return l > r;
        return l < r;
    }
    throw DomainError("registry: malformed condition '" + s + "'");
}

bool eval_condition(const std::string& s, const Params& params)
{
    std::size_t start = 0;
    for (;;) {
        const auto at = s.find(" or ", start);
        if (eval_atom(s.substr(start, at == std::string::npos ? std::string::npos : at - start), params)) return true;
        if (at == std::string::npos) return false;
        start = at + 4;
    }
}

bool all_hold(const json& when, const Params& params)
{
    return std::all_of(when.begin(), when.end(), [&](const json& c) { return eval_condition(c.get<std::string>(), params); });
}

// Replaces {expr} by its value; braces whose content is not an expression stay literal.
std::string instantiate(const std::string& text, const Params& params)
{
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '{') {
            const auto close = text.find('}', i);
            if (close != std::string::npos) {
                const std::string inner = text.substr(i + 1, close - i - 1);
                if (inner.find('{') == std::string::npos) {
                    if (auto v = eval_expr(inner, params)) {
                        out += std::to_string(*v);
                        i = close + 1;
                        continue;
                    }
                }
            }
        }
        out += text[i++];
    }
    return out;
}

Params params_of(const FamilyId& f)
{
    static const std::map<FamilyId::Kind, std::vector<std::string>> names{
        {FamilyId::Kind::Fabc, {"a", "b", "c"}}, {FamilyId::Kind::Pb, {"b"}},   {FamilyId::Kind::Uabc, {"a", "b", "c"}},
        {FamilyId::Kind::Sb, {"b"}},             {FamilyId::Kind::Vb, {"b"}},   {FamilyId::Kind::Wb, {"b"}},
        {FamilyId::Kind::Rmn, {"m", "n"}},       {FamilyId::Kind::Qg, {"n"}},
    };
    Params p;
    const auto& n = names.at(f.kind);
    for (std::size_t k = 0; k < n.size(); ++k) p[n[k]] = f.params.at(k);
    return p;
}

Tri parse_tri(const std::string& s)
{
    if (s == "yes") return Tri::Yes;
    if (s == "no") return Tri::No;
    if (s == "unknown") return Tri::Unknown;
    throw DomainError("registry: bad yes/no/unknown value '" + s + "'");
}

Aut0Label parse_aut0(const json& j, const Params& params)
{
    static const std::map<std::string, Aut0Label::Kind> kinds{
        {"named", Aut0Label::Kind::Named},         {"product", Aut0Label::Kind::Product}, {"extension", Aut0Label::Kind::Extension},
        {"split", Aut0Label::Kind::Split},         {"unspecified", Aut0Label::Kind::Unspecified},
    };
    Aut0Label a;
    auto it = kinds.find(j.at("kind").get<std::string>());
    if (it == kinds.end()) throw DomainError("registry: unknown aut0 kind");
    a.kind = it->second;
    a.text = instantiate(j.value("text", ""), params);
    for (const auto& f : j.value("factors", json::array())) a.factors.push_back(f.get<std::string>());
    return a;
}

std::map<std::string, std::string> parse_images(const json& j)
{
    std::map<std::string, std::string> m;
    for (const auto& [k, v] : j.items()) m[k] = v.get<std::string>();
    return m;
}

FormDescriptor make_form(const json& t, const std::string& source, const std::optional<FamilyId>& family,
                         const std::string& threefold, const Params& params)
{
    FormDescriptor f;
    f.tag = t.at("tag").get<std::string>();
    f.id = source + "/" + f.tag;
    f.family = family;
    f.threefold = threefold;
    f.name = instantiate(t.at("name").get<std::string>(), params);
    f.description = instantiate(t.value("description", ""), params);
    f.has_real_points = parse_tri(t.at("has_real_points").get<std::string>());
    f.rational = parse_tri(t.at("rational").get<std::string>());
    f.aut0 = parse_aut0(t.at("aut0"), params);
    if (t.contains("real_structure")) {
        const auto& rs = t.at("real_structure");
        CoordinateStructure s;
        s.ambient = rs.at("ambient").get<std::string>();
        if (rs.contains("ambient_params"))
            s.ambient_params = rs.at("ambient_params").get<std::vector<int>>();
        else if (family)
            s.ambient_params = family->params;
        s.images = parse_images(rs.value("images", json::object()));
        f.real_structure = s;
    }
    if (t.contains("quadric")) {
        std::vector<Rational> d;
        for (const auto& x : t.at("quadric")) d.emplace_back(x.get<int>());
        f.quadric = d;
    }
    return f;
}

FamilyId parse_family_name(const std::string& text)
{
    const auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') throw DomainError("malformed family name '" + text + "'");
    std::vector<int> params;
    std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto v = parse_int(trim(item));
        if (!v) throw DomainError("malformed family parameter '" + item + "'");
        params.push_back(*v);
    }
    return FamilyId::make(text.substr(0, open), params);
}

LinkType parse_link_type(const std::string& s)
{
    static const std::map<std::string, LinkType> types{{"I", LinkType::I},   {"II", LinkType::II},
                                                       {"III", LinkType::III}, {"IV", LinkType::IV},
                                                       {"divisorial", LinkType::Divisorial}, {"none", LinkType::None}};
    auto it = types.find(s);
    if (it == types.end()) throw DomainError("registry: unknown link type '" + s + "'");
    return it->second;
}

Poly parse_in(const std::string& text, const std::vector<std::string>& names) { return parse_expression(text, names); }

// (coefficient, variable index) of an image such as "-x1" or "i*y0".
std::pair<Cyclotomic, int> parse_image(const std::string& text, const GradedAmbient& a)
{
    const Poly p = parse_in(text, a.names);
    if (p.size() != 1 || p.total_degree() != 1) throw DomainError("structure image '" + text + "' is not c * coordinate");
    const auto& [e, c] = *p.terms().begin();
    const auto at = std::find(e.begin(), e.end(), 1);
    return {c, static_cast<int>(at - e.begin())};
}

std::string coefficient_prefix(const Cyclotomic& c)
{
    if (c == Cyclotomic(1)) return "";
    if (c == Cyclotomic(-1)) return "-";
    if (c == Cyclotomic::i()) return "i*";
    if (c == -Cyclotomic::i()) return "-i*";
    return "(" + c.to_string() + ")*";
}

// Weight vector of a polynomial all of whose terms share one multidegree.
std::optional<std::vector<int>> multidegree(const Poly& p, const GradedAmbient& a)
{
    std::optional<std::vector<int>> out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> w(static_cast<std::size_t>(a.rank()), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += e[i] * a.weights[i][j];
        if (out && *out != w) return std::nullopt;
        out = w;
    }
    return out;
}

std::vector<std::string> split_formula(const std::string& formula)
{
    std::string body = trim(formula);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') return {};
    body = body.substr(1, body.size() - 2);
    std::vector<std::string> out;
    std::string cur;
    for (char c : body) {
        if (c == ':' || c == ';') {
            out.push_back(strip_spaces(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip_spaces(cur));
    return out;
}

GradedAmbient projective_space(const std::vector<std::string>& names)
{
    GradedAmbient a;
    a.names = names;
    a.weights.assign(names.size(), std::vector<int>{1});
    return a;
}

MonomialAntiregularMap map_on(const GradedAmbient& a, const std::map<std::string, std::string>& images)
{
    MonomialAntiregularMap m = MonomialAntiregularMap::conjugation(a.nvars());
    for (const auto& [name, image] : images) {
        const auto [c, j] = parse_image(image, a);
        m.send(a.index(name), j, c);
    }
    return m;
}

void add_check(WitnessVerdict& v, const std::string& name, bool ok, const std::string& detail = "")
{
    v.checks.push_back({name, ok, detail});
}

// Components F_k of a map between toric ambients must share one multidegree,
// and F o theta = mu o F with one common scalar.
void check_map_basics(WitnessVerdict& v, const json& w, const Ambient& src, const GradedAmbient& tgt,
                      std::vector<Poly>& comps)
{
    std::vector<std::string> texts;
    for (const auto& c : w.at("components")) {
        texts.push_back(c.get<std::string>());
        comps.push_back(parse_in(texts.back(), src.graded.names));
    }
    std::vector<std::string> stripped;
    for (const auto& t : texts) stripped.push_back(strip_spaces(t));
    add_check(v, "formula lists the components", split_formula(w.at("formula").get<std::string>()) == stripped);
    add_check(v, "component count matches the target", static_cast<int>(comps.size()) == tgt.nvars());

    std::optional<std::vector<int>> deg;
    bool same = true;
    for (const auto& c : comps) {
        auto d = multidegree(c, src.graded);
        if (!d || (deg && *deg != *d)) same = false;
        if (d) deg = d;
    }
    add_check(v, "components share one multidegree", same);

    const MonomialAntiregularMap theta = map_on(src.graded, parse_images(w.at("source_structure")));
    const InvolutionVerdict tv = verify_antiregular(src.graded, theta, src.equations);
    add_check(v, "source structure is a real structure", tv.valid(), tv.detail);
    const MonomialAntiregularMap mu = map_on(tgt, parse_images(w.at("target_structure")));
    std::vector<Poly> tgt_eqs;
    if (w.contains("target_equation")) tgt_eqs.push_back(parse_in(w.at("target_equation").get<std::string>(), tgt.names));
    const InvolutionVerdict mv = verify_antiregular(tgt, mu, tgt_eqs);
    add_check(v, "target structure is a real structure", mv.valid(), mv.detail);

    bool equivariant = static_cast<int>(comps.size()) == tgt.nvars();
    std::optional<Cyclotomic> common;
    for (std::size_t k = 0; equivariant && k < comps.size(); ++k) {
        const auto j = static_cast<std::size_t>(mu.perm[k]);
        const Poly lhs = pullback(comps[k], theta);
        const Poly rhs = mu.coeffs[k].conjugate() * comps[j];
        auto r = Poly::scalar_ratio(lhs, rhs);
        if (!r || (common && *common != *r)) equivariant = false;
        common = r;
    }
    add_check(v, "map intertwines the real structures", equivariant);
}

void verify_g1(WitnessVerdict& v, const json& w)
{
    const auto& src_record = w.at("source");
    const Ambient src = make_ambient("Fabc", src_record.at("params").get<std::vector<int>>());
    const auto names = w.at("target_coordinates").get<std::vector<std::string>>();
    const GradedAmbient tgt = projective_space(names);
    std::vector<Poly> comps;
    check_map_basics(v, w, src, tgt, comps);

    const Poly eq = parse_in(w.at("target_equation").get<std::string>(), names);
    add_check(v, "image lies on the target quadric", comps.size() == names.size() && eq.substitute(comps).is_zero());

    std::vector<Poly> real_coords;
    for (const auto& n : names) real_coords.push_back(parse_in(w.at("real_coordinates").at(n).get<std::string>(), names));
    const Poly real_eq = eq.substitute(real_coords);
    bool rational = true;
    for (const auto& [e, c] : real_eq.terms()) rational = rational && c.is_rational();
    add_check(v, "quadric has real coefficients in real coordinates", rational, real_eq.to_string(names, [](const Cyclotomic& c) { return c.to_string(); }));

    const auto expected_raw = w.at("signature").get<std::vector<int>>();
    const Signature expected{expected_raw.at(0), expected_raw.at(1), expected_raw.at(2)};
    if (rational) {
        const Signature s = signature(QuadForm::from_polynomial(real_eq));
        v.signature = s;
        add_check(v, "signature of the real quadric", s == expected, s.to_string());
    }
    const Signature stated = signature(QuadForm::from_polynomial(parse_in(w.at("real_quadric").get<std::string>(), names)));
    add_check(v, "signature of the stated quadric", stated == expected, stated.to_string());
}

void verify_h1(WitnessVerdict& v, const json& w)
{
    const Ambient src = make_ambient("Fabc", w.at("source").at("params").get<std::vector<int>>());
    const auto tnames = w.at("target_coordinates").get<std::vector<std::string>>();
    const GradedAmbient tgt = projective_space(tnames);
    std::vector<Poly> comps;
    check_map_basics(v, w, src, tgt, comps);

    const int n = src.graded.nvars(), m = tgt.nvars();
    const auto slice = w.at("slice").get<std::vector<std::string>>();
    const auto chart = w.at("chart").get<std::vector<std::string>>();
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (std::find(slice.begin(), slice.end(), src.graded.names[static_cast<std::size_t>(i)]) == slice.end()) rest.push_back(i);

    // Restrict to the slice where the slice coordinates equal 1.
    std::vector<Poly> on_slice_subst;
    for (int i = 0; i < n; ++i) {
        const bool in_slice = std::find(slice.begin(), slice.end(), src.graded.names[static_cast<std::size_t>(i)]) != slice.end();
        on_slice_subst.push_back(in_slice ? Poly::constant(n, Cyclotomic(1)) : Poly::var(n, i));
    }
    MatQ lin = MatQ::Zero(m, static_cast<Eigen::Index>(rest.size()));
    bool linear = static_cast<int>(comps.size()) == m;
    for (int k = 0; linear && k < m; ++k) {
        const Poly r = comps[static_cast<std::size_t>(k)].substitute(on_slice_subst);
        for (const auto& [e, c] : r.terms()) {
            int deg = 0, at = -1;
            for (int i = 0; i < n; ++i)
                if (e[static_cast<std::size_t>(i)] > 0) {
                    deg += e[static_cast<std::size_t>(i)];
                    at = i;
                }
            const auto pos = std::find(rest.begin(), rest.end(), at);
            if (deg != 1 || !c.is_rational() || pos == rest.end()) {
                linear = false;
                break;
            }
            lin(k, pos - rest.begin()) = c.rational_value();
        }
    }
    add_check(v, "map is linear on the slice", linear);
    const bool square = linear && lin.rows() == lin.cols();
    const bool invertible = square && rank<Rational>(lin) == lin.rows();
    add_check(v, "slice map is invertible", invertible);
    if (!invertible) return;

    MatQ aug(m, 2 * m);
    aug.leftCols(m) = lin;
    aug.rightCols(m) = MatQ::Identity(m, m);
    const MatQ inv = row_reduce<Rational>(aug).rref.rightCols(m);

    // Inverse: slice coordinates -> 1, remaining coordinates -> inv * target.
    std::vector<Poly> g;
    for (int i = 0; i < n; ++i) {
        const auto pos = std::find(rest.begin(), rest.end(), i);
        if (pos == rest.end()) {
            g.push_back(Poly::constant(m, Cyclotomic(1)));
            continue;
        }
        Poly p(m);
        for (int k = 0; k < m; ++k) p = p + Poly::var(m, k, Cyclotomic(inv(pos - rest.begin(), k)));
        g.push_back(p);
    }
    for (const auto& p : g) v.inverse.push_back(p.to_string(tnames, [](const Cyclotomic& c) { return c.to_string(); }));

    // F o G is the identity of the target up to one scalar.
    bool fg = true;
    std::optional<Cyclotomic> common;
    for (int k = 0; k < m && fg; ++k) {
        auto r = Poly::scalar_ratio(comps[static_cast<std::size_t>(k)].substitute(g), Poly::var(m, k));
        if (!r || (common && *common != *r)) fg = false;
        common = r;
    }
    add_check(v, "F o G is the identity", fg);

    // G o F is the identity of the source up to a torus element with monomial
    // entries, invertible where the chart coordinates do not vanish.
    const int k = src.graded.rank();
    MatQ wts(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) wts(i, j) = Rational(src.graded.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    MatQ expo(n, n);
    bool monomial = true;
    for (int i = 0; i < n && monomial; ++i) {
        const Poly q = g[static_cast<std::size_t>(i)].substitute(comps);
        if (q.size() != 1 || q.terms().begin()->second != Cyclotomic(1)) {
            monomial = false;
            break;
        }
        const auto& e = q.terms().begin()->first;
        for (int j = 0; j < n; ++j) expo(i, j) = Rational(e[static_cast<std::size_t>(j)] - (i == j ? 1 : 0));
    }
    bool gf = monomial;
    std::vector<std::string> inverted;
    for (int col = 0; gf && col < n; ++col) {
        auto t = solve<Rational>(wts, VecQ(expo.col(col)));
        if (!t) {
            gf = false;
            break;
        }
        for (int j = 0; j < k; ++j) gf = gf && is_integer((*t)(j));
    }
    for (int col = 0; gf && col < n; ++col) {
        bool negative = false;
        for (int i = 0; i < n; ++i) negative = negative || expo(i, col) < 0;
        const std::string& name = src.graded.names[static_cast<std::size_t>(col)];
        if (negative) {
            inverted.push_back(name);
            if (std::find(chart.begin(), chart.end(), name) == chart.end()) gf = false;
        }
    }
    std::string detail;
    for (const auto& s : inverted) detail += (detail.empty() ? "divides by " : ", ") + s;
    add_check(v, "G o F is the identity on the chart", gf, detail);
}

bool irreducible_over_r(const HomPoly& h)
{
    if (!h.is_real()) return false;
    if (h.degree() == 1) return true;
    if (h.degree() != 2) return false;
    const Rational a = h.coeff(2).rational_value(), b = h.coeff(1).rational_value(), c = h.coeff(0).rational_value();
    return b * b - 4 * a * c < 0;
}

void verify_psi(WitnessVerdict& v, const json& w)
{
    add_check(v, "formula is psi_h", strip_spaces(w.at("formula").get<std::string>()) == "[h*x0:h*x1:h*x2:x3;u0:u1]");
    for (const auto& s : w.at("samples")) {
        const std::string gt = s.at("g").get<std::string>(), ht = s.at("h").get<std::string>();
        const HomPoly g = parse_poly(gt), h = parse_poly(ht);
        const std::string label = "g = " + gt + ", h = " + ht;
        add_check(v, "h irreducible over R: " + label, irreducible_over_r(h));
        const PsiVerdict pv = check_psi_h(g, h);
        add_check(v, "psi_h: " + label, pv.identity_holds && pv.n_prime == pv.n + h.degree(), pv.detail);
    }
}

std::string hex(const unsigned char* d, unsigned len)
{
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(d[i]);
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: break;
    }
    return "unknown";
}

std::string to_string(Aut0Label::Kind k)
{
    switch (k) {
    case Aut0Label::Kind::Named: return "named";
    case Aut0Label::Kind::Product: return "product";
    case Aut0Label::Kind::Extension: return "extension";
    case Aut0Label::Kind::Split: return "split";
    case Aut0Label::Kind::Unspecified: break;
    }
    return "unspecified";
}

std::string Aut0Label::render() const
{
    if (kind == Kind::Product) {
        std::string out;
        for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f;
        return out;
    }
    return text.empty() ? "unspecified" : text;
}

std::string to_string(LinkType t)
{
    switch (t) {
    case LinkType::I: return "I";
    case LinkType::II: return "II";
    case LinkType::III: return "III";
    case LinkType::IV: return "IV";
    case LinkType::Divisorial: return "divisorial";
    case LinkType::None: break;
    }
    return "none";
}

std::string TorusShape::label() const
{
    std::vector<std::string> parts;
    auto add = [&parts](int e, const std::string& g) {
        if (e == 1) parts.push_back(g);
        if (e > 1) parts.push_back(g + "^" + std::to_string(e));
    };
    add(p, "R_{C/R}(G_m)");
    add(q, "S^1");
    add(r, "G_{m,R}");
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : " x ") + s;
    return out;
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw VerificationError("SHA-256 computation failed");
    return hex(md, len);
}

Ambient make_ambient(const std::string& kind, const std::vector<int>& params)
{
    Ambient a;
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw DomainError("ambient " + kind + " needs " + std::to_string(k) + " parameters");
    };
    if (kind == "Fabc") {
        need(3);
        const int pa = params[0], pb = params[1], pc = params[2];
        a.graded.names = {"x0", "x1", "y0", "y1", "z0", "z1"};
        a.graded.weights = {{1, -pb, 0}, {1, 0, -pc}, {0, 1, -pa}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}};
        a.groups = {{"x0", "x1"}, {"y0", "y1"}, {"z0", "z1"}};
    } else if (kind == "Rmn") {
        need(2);
        a.graded.names = {"x0", "x1", "x2", "y0", "y1"};
        a.graded.weights = {{1, -params[0]}, {1, -params[1]}, {1, 0}, {0, 1}, {0, 1}};
        a.groups = {{"x0", "x1", "x2"}, {"y0", "y1"}};
    } else if (kind == "S1") {
        a.graded.names = {"x0", "x1", "x2", "y0", "y1", "y2"};
        a.graded.weights = {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
        a.groups = {{"x0", "x1", "x2"}, {"y0", "y1", "y2"}};
        a.equations.push_back(a.graded.var("x0") * a.graded.var("y0") + a.graded.var("x1") * a.graded.var("y1") +
                              a.graded.var("x2") * a.graded.var("y2"));
    } else {
        throw DomainError("no toric ambient named " + kind);
    }
    return a;
}

MonomialAntiregularMap to_map(const Ambient& ambient, const CoordinateStructure& s)
{
    return map_on(ambient.graded, s.images);
}

std::string CoordinateStructure::formula() const
{
    if (ambient == "Schwarzenberger")
        return "gamma~ built from A(u,v) with b = " + (ambient_params.empty() ? std::string("?") : std::to_string(ambient_params.front()));
    const Ambient a = make_ambient(ambient, ambient_params);
    const MonomialAntiregularMap m = to_map(a, *this);
    std::string out = "[";
    for (std::size_t gi = 0; gi < a.groups.size(); ++gi) {
        if (gi > 0) out += "; ";
        for (std::size_t k = 0; k < a.groups[gi].size(); ++k) {
            if (k > 0) out += ":";
            const auto i = static_cast<std::size_t>(a.graded.index(a.groups[gi][k]));
            out += coefficient_prefix(m.coeffs[i]) + "conj(" + a.graded.names[static_cast<std::size_t>(m.perm[i])] + ")";
        }
    }
    return out + "]";
}

StructureVerdict verify_involution(const CoordinateStructure& s)
{
    StructureVerdict v;
    if (s.ambient == "Schwarzenberger") {
        v.method = "gluing";
        if (s.ambient_params.size() != 1 || s.ambient_params[0] < 1) throw DomainError("Schwarzenberger structure needs b >= 1");
        const GluingVerdict g = verify_gluing(s.ambient_params[0]);
        v.valid = g.holds && g.determinant_ok;
        v.detail = v.valid ? "A(u,v) A(-u/v,1/v) = " + std::to_string(g.expected_sign) + " I"
                           : "gluing identity fails: " + to_string(g.product);
        return v;
    }
    v.method = "monomial";
    const Ambient a = make_ambient(s.ambient, s.ambient_params);
    const InvolutionVerdict iv = verify_antiregular(a.graded, to_map(a, s), a.equations);
    v.valid = iv.valid();
    v.detail = iv.detail;
    v.involution = iv;
    return v;
}

std::vector<TorusShape> torus_forms(int d)
{
    if (d < 1) throw DomainError("torus dimension must be positive");
    std::vector<TorusShape> out;
    for (int p = d / 2; p >= 0; --p)
        for (int q = d - 2 * p; q >= 0; --q) out.push_back({p, q, d - 2 * p - q});
    return out;
}

bool tori_conjugate(const TorusShape& t1, const TorusShape& t2) { return t1 == t2; }

Registry Registry::from_text(const std::string& text)
{
    Registry r;
    auto d = std::make_shared<Data>();
    try {
        d->doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("registry is not valid JSON: ") + e.what());
    }
    if (d->doc.value("format", "") != "rf-forms-registry") throw DomainError("registry has the wrong format tag");
    r.data_ = std::move(d);
    r.digest_ = sha256_hex(text);
    return r;
}

Registry Registry::load(const std::string& path)
{
    const std::string text = read_file(path);
    std::string stored;
    {
        std::istringstream in(read_file(path + ".sha256"));
        in >> stored;
    }
    std::transform(stored.begin(), stored.end(), stored.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const std::string actual = sha256_hex(text);
    if (stored != actual) throw VerificationError("registry checksum mismatch for " + path + ": expected " + stored + ", found " + actual);
    return from_text(text);
}

int Registry::version() const { return data_->doc.at("version").get<int>(); }

FormList Registry::forms_of(const FamilyId& raw) const
{
    const FamilyId family = normalize(raw);
    const Params params = params_of(family);
    for (const auto& fam : data_->doc.at("families")) {
        if (fam.at("family").get<std::string>() != family.family_name()) continue;
        for (const auto& c : fam.at("cases")) {
            if (!all_hold(c.at("when"), params)) continue;
            FormList out;
            out.source = family.name();
            out.complete = c.at("complete").get<bool>();
            for (const auto& n : c.at("notes")) out.notes.push_back(instantiate(n.get<std::string>(), params));
            for (const auto& t : c.at("forms")) out.forms.push_back(make_form(t, family.name(), family, "", params));
            return out;
        }
        break;
    }
    throw DomainError("no classified real forms for " + family.name());
}

FormList Registry::forms_of_threefold(const std::string& key) const
{
    for (const auto& t : data_->doc.at("threefolds")) {
        if (t.at("key").get<std::string>() != key) continue;
        FormList out;
        out.source = key;
        out.complete = t.at("complete").get<bool>();
        for (const auto& n : t.at("notes")) out.notes.push_back(n.get<std::string>());
        for (const auto& f : t.at("forms")) out.forms.push_back(make_form(f, key, std::nullopt, key, {}));
        return out;
    }
    throw DomainError("unknown threefold " + key);
}

std::vector<std::string> Registry::threefold_keys() const
{
    std::vector<std::string> out;
    for (const auto& t : data_->doc.at("threefolds")) out.push_back(t.at("key").get<std::string>());
    return out;
}

FormDescriptor Registry::find_form(const std::string& id) const
{
    const auto slash = id.find('/');
    if (slash == std::string::npos) throw DomainError("form id '" + id + "' has no '/'");
    const std::string source = id.substr(0, slash), tag = id.substr(slash + 1);
    const FormList list = source.find('(') == std::string::npos ? forms_of_threefold(source) : forms_of(parse_family_name(source));
    for (const auto& f : list.forms)
        if (f.tag == tag) return f;
    throw DomainError("unknown form " + id);
}

std::vector<LinkDescriptor> Registry::links_from(const FormDescriptor& form) const
{
    Params params;
    if (form.family) params = params_of(*form.family);
    std::vector<LinkDescriptor> out;
    for (const auto& l : data_->doc.at("links")) {
        const auto& s = l.at("source");
        if (s.at("tag").get<std::string>() != form.tag) continue;
        if (form.family) {
            if (!s.contains("family") || s.at("family").get<std::string>() != form.family->family_name()) continue;
            if (!all_hold(s.at("when"), params)) continue;
        } else if (!s.contains("threefold") || s.at("threefold").get<std::string>() != form.threefold) {
            continue;
        }
        LinkDescriptor d;
        d.source = form.id;
        d.type = parse_link_type(l.at("type").get<std::string>());
        d.count = l.value("count", 0);
        d.target = instantiate(l.value("target", ""), params);
        d.description = l.value("description", "");
        if (l.contains("witness")) {
            d.witness = l.at("witness").get<std::string>();
            d.witness_formula = data_->doc.at("witnesses").at(*d.witness).at("formula").get<std::string>();
        }
        out.push_back(d);
    }
    if (out.empty()) throw DomainError("links from " + form.id + " are not catalogued");
    return out;
}

WitnessVerdict Registry::verify_witness(const std::string& key) const
{
    const auto& ws = data_->doc.at("witnesses");
    if (!ws.contains(key)) throw DomainError("unknown witness " + key);
    const auto& w = ws.at(key);
    WitnessVerdict v;
    v.witness = key;
    if (key == "g1_quadric")
        verify_g1(v, w);
    else if (key == "h1_projective")
        verify_h1(v, w);
    else if (key == "psi_h")
        verify_psi(v, w);
    else
        throw DomainError("no verifier for witness " + key);
    v.valid = !v.checks.empty() && std::all_of(v.checks.begin(), v.checks.end(), [](const Check& c) { return c.ok; });
    return v;
}

WitnessVerdict Registry::verify_witness(const LinkDescriptor& link) const
{
    if (!link.witness) throw DomainError("link from " + link.source + " has no witness");
    return verify_witness(*link.witness);
}

std::vector<std::string> Registry::witness_keys() const
{
    std::vector<std::string> out;
    for (const auto& [k, w] : data_->doc.at("witnesses").items()) out.push_back(k);
    return out;
}

const Registry& default_registry()
{
    static const Registry r = Registry::load(RF_DEFAULT_REGISTRY);
    return r;
}

FormList forms_of(const FamilyId& family) { return default_registry().forms_of(family); }
std::vector<LinkDescriptor> links_from(const FormDescriptor& form) { return default_registry().links_from(form); }
WitnessVerdict verify_witness(const LinkDescriptor& link) { return default_registry().verify_witness(link); }

}  // namespace rf::forms
