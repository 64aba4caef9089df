#include "report.hpp"

#include "rf/error.hpp"
#include "rf/parse.hpp"
#include "rf/schwarzenberger.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace rf::report {

namespace {

using forms::Check;

Json check_json(const std::string& name, bool ok, const std::string& detail = "")
{
    return {{"name", name}, {"ok", ok}, {"detail", detail}};
}

Json rationals(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rf::to_string(x));
    return out;
}

std::string realizability_name(Realizability r)
{
    switch (r) {
    case Realizability::Realizable: return "realizable";
    case Realizability::NotRealizable: return "not_realizable";
    case Realizability::Undecidable: return "undecidable";
    }
    return "";
}

Json counts_json(const FormCounts& c)
{
    Json out = {{"rational", c.rational}, {"unknown", c.unknown}, {"no_real_points", c.no_real_points}, {"total", c.total()}};
    if (c.note) out["note"] = *c.note;
    return out;
}

Json form_json(const forms::FormDescriptor& f)
{
    Json out = {{"id", f.id},
                {"name", f.name},
                {"tag", f.tag},
                {"description", f.description},
                {"has_real_points", forms::to_string(f.has_real_points)},
                {"rational", forms::to_string(f.rational)},
                {"aut0", f.aut0.render()},
                {"aut0_kind", forms::to_string(f.aut0.kind)},
                {"real_structure", nullptr}};
    if (f.real_structure) out["real_structure"] = f.real_structure->formula();
    if (f.quadric) {
        out["quadric"] = rationals(*f.quadric);
        out["signature"] = signature(QuadForm::diagonal(*f.quadric)).to_string();
    }
    return out;
}

Json form_list_json(const forms::FormList& l)
{
    Json out = {{"source", l.source}, {"complete", l.complete}, {"notes", l.notes}, {"forms", Json::array()}};
    for (const auto& f : l.forms) out["forms"].push_back(form_json(f));
    return out;
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

int burnside_count(const FiniteProjGroup& g)
{
    const auto z1 = cocycles(g);
    int fixed = 0;
    for (const auto& b : g.elements)
        for (const auto& a : z1)
            if (b.inverse() * a * b.conjugate() == a) ++fixed;
    return fixed / g.order();
}

void h1_checks(Json& checks)
{
    for (const auto& label : table_labels()) {
        const auto g = catalog(label);
        const auto classes = h1(g);
        std::vector<std::string> got;
        for (const auto& c : classes) got.push_back(c.name);
        auto expected = expected_h1_names(label);
        std::sort(expected.begin(), expected.end());
        std::vector<std::string> sorted = got;
        std::sort(sorted.begin(), sorted.end());
        std::string shown;
        for (const auto& n : got) shown += (shown.empty() ? "" : ",") + n;
        checks.push_back(check_json("h1 " + label.name() + " classes", sorted == expected, "[" + shown + "]"));
        const int orbits = burnside_count(g);
        checks.push_back(check_json("h1 " + label.name() + " orbit count", orbits == static_cast<int>(classes.size()),
                                    std::to_string(orbits) + " orbits"));
    }
}

void qg_table_checks(Json& checks)
{
    for (const auto& w : qg_witnesses()) {
        const auto q = QgInstance::make(parse_poly(w.poly));
        const FLabel f = detect_symmetry(q);
        checks.push_back(check_json("qg " + w.poly + " symmetry", f == FLabel::finite(w.label), f.name()));
        const auto rep = enumerate_forms(q);
        const Parity parity = q.n % 2 == 0 ? Parity::Even : Parity::Odd;
        const auto expected = form_counts(parity, rep.f);
        const auto got = rep.counts();
        const bool same = got.rational == expected.rational && got.unknown == expected.unknown &&
                          got.no_real_points == expected.no_real_points;
        std::ostringstream os;
        os << "(" << got.rational << "," << got.unknown << "," << got.no_real_points << ") vs (" << expected.rational
           << "," << expected.unknown << "," << expected.no_real_points << ")";
        checks.push_back(check_json("qg " + w.poly + " counts", same, os.str()));

        int plain = 0, over_h = 0;
        for (const auto& c : h1(catalog(w.label))) (c.name == "h" ? over_h : plain) += 1;
        const bool a_odd = w.label.kind == GroupLabel::Kind::A && w.label.l % 2 == 1;
        const int fibers = (parity == Parity::Even || a_odd ? 4 : 2) * plain + 4 * over_h;
        checks.push_back(check_json("qg " + w.poly + " fiber sizes", fibers == expected.total(),
                                    std::to_string(fibers) + " forms over H1"));
    }
}

void schwarzenberger_checks(Json& checks, int b_max)
{
    for (int b = 1; b <= b_max; ++b) {
        const GluingVerdict v = verify_gluing(b);
        checks.push_back(check_json("gluing b=" + std::to_string(b), v.holds && v.determinant_ok,
                                    "product " + to_string(v.product)));
    }
}

void lattice_checks(Json& checks, int b_max)
{
    int failures = 0, tuples = 0;
    std::string first;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = -6; c <= 6; ++c) {
                ++tuples;
                const auto m = model(FamilyId::fabc(a, b, c));
                bool ok = m.k_dots.at("l1") == a - c - 2 && m.k_dots.at("l2") == b - 2 && m.k_dots.at("l3") == -2 &&
                          m.k_dots.at("l4") == a + c - 2;
                const auto& l1 = m.named_curves.at("l1");
                const auto& l3 = m.named_curves.at("l3");
                const auto& l4 = m.named_curves.at("l4");
                for (std::size_t i = 0; i < l4.size(); ++i) ok = ok && l4[i] == l1[i] - Rational(c) * l3[i];
                if (!ok) {
                    ++failures;
                    if (first.empty()) first = m.family.name();
                }
            }
    checks.push_back(check_json("Fabc K-values and l4 = l1 - c l3 on " + std::to_string(tuples) + " tuples", failures == 0,
                                failures == 0 ? "" : "first failure at " + first));
    for (int b = 2; b <= std::max(2, b_max); ++b) {
        const auto m = model(FamilyId::wb(b));
        const bool ok = m.k_dots.at("f") == -2 && m.k_dots.at("l") == Rational(b) - rat(5, 2) &&
                        m.canonical == std::vector<Rational>{rat(-(2 * b + 3), 2), Rational(-2)};
        checks.push_back(check_json("Wb(" + std::to_string(b) + ") canonical class", ok));
    }
}

void witness_checks(Json& checks, const forms::Registry& reg)
{
    for (const auto& key : reg.witness_keys()) {
        const auto v = reg.verify_witness(key);
        for (const auto& c : v.checks) checks.push_back(check_json("[" + key + "] " + c.name, c.ok, c.detail));
        checks.push_back(check_json("witness " + key, v.valid));
    }
}

std::vector<FamilyId> structure_grid(int b_max)
{
    std::vector<FamilyId> out;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = -4; c <= 4; ++c) out.push_back(FamilyId::fabc(a, b, c));
    for (int b = 5; b <= b_max; ++b) {
        out.push_back(FamilyId::fabc(0, b, -b));
        out.push_back(FamilyId::fabc(0, b, b));
    }
    for (int b = 0; b <= 3; ++b) out.push_back(FamilyId::pb(b));
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= m; ++n) out.push_back(FamilyId::rmn(m, n));
    for (int b = 1; b <= b_max; ++b) out.push_back(FamilyId::sb(b));
    return out;
}

void involution_checks(Json& checks, int b_max, const forms::Registry& reg)
{
    const std::vector<std::string> corpus = {
        "u0*u1", "u0^3*u1^5", "u0^2 + u1^2", "u0^4 + 2*u0^2*u1^2 + 3*u1^4", "u0^5*u1 - u0*u1^5",
        "u0^8 + 14*u0^4*u1^4 + u1^8", "u0^6 + 2*u0^3*u1^3 + 3*u1^6", "u0^4 + 3*u0^3*u1 + 2*u1^4",
        "u0^11*u1 + 11*u0^6*u1^6 - u0*u1^11", "u0^2*u1^2 + 2*(u0^2 - u1^2)^2",
    };
    for (const auto& s : corpus) {
        const auto q = QgInstance::make(parse_poly(s));
        for (int k = 1; k <= 11; ++k) {
            if (!real_structure_applicable(k, q)) continue;
            const auto v = check_real_structure(k, q);
            checks.push_back(check_json("mu" + std::to_string(k) + " on " + s, v.valid(), v.check.detail));
        }
    }
    std::vector<forms::FormList> lists;
    for (const auto& f : structure_grid(b_max)) lists.push_back(reg.forms_of(f));
    for (const auto& k : reg.threefold_keys()) lists.push_back(reg.forms_of_threefold(k));
    for (const auto& l : lists)
        for (const auto& f : l.forms) {
            if (!f.real_structure) continue;
            const auto v = forms::verify_involution(*f.real_structure);
            checks.push_back(check_json("structure " + f.id, v.valid, v.method + (v.detail.empty() ? "" : ": " + v.detail)));
        }
}

std::string pad(const std::string& s, std::size_t w)
{
    // Width counts code points so that Unicode labels line up.
    std::size_t n = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++n;
    return s + std::string(w > n ? w - n : 0, ' ');
}

std::size_t width(const std::string& s)
{
    std::size_t n = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++n;
    return n;
}

std::string table(const std::vector<std::string>& headers, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w(headers.size());
    for (std::size_t j = 0; j < headers.size(); ++j) w[j] = width(headers[j]);
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size() && j < w.size(); ++j) w[j] = std::max(w[j], width(r[j]));
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            const std::string cell = j < r.size() ? r[j] : "";
            os << (j ? " | " : "") << (j + 1 == w.size() ? cell : pad(cell, w[j]));
        }
        os << "\n";
    };
    line(headers);
    for (std::size_t j = 0; j < w.size(); ++j) os << (j ? "-+-" : "") << std::string(w[j], '-');
    os << "\n";
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string text(const Json& v)
{
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

Suite parse_suite(const std::string& text)
{
    static const std::vector<std::pair<std::string, Suite>> names = {
        {"h1", Suite::H1},           {"qg-table", Suite::QgTable},       {"schwarzenberger", Suite::Schwarzenberger},
        {"lattices", Suite::Lattices}, {"witnesses", Suite::Witnesses}, {"involutions", Suite::Involutions},
        {"all", Suite::All}};
    for (const auto& [n, s] : names)
        if (n == text) return s;
    throw DomainError("unknown suite: " + text);
}

std::string to_string(Suite s)
{
    switch (s) {
    case Suite::H1: return "h1";
    case Suite::QgTable: return "qg-table";
    case Suite::Schwarzenberger: return "schwarzenberger";
    case Suite::Lattices: return "lattices";
    case Suite::Witnesses: return "witnesses";
    case Suite::Involutions: return "involutions";
    case Suite::All: return "all";
    }
    return "";
}

std::vector<std::string> expected_h1_names(const GroupLabel& g)
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

std::vector<QgWitness> qg_witnesses()
{
    return {
        {"u0^4 + 3*u0^3*u1 + 2*u1^4", GroupLabel::A(1)},
        {"u0^6 + u0^5*u1 + 2*u0*u1^5 + 5*u1^6", GroupLabel::A(1)},
        {"u0^4 + 2*u0^2*u1^2 + 3*u1^4", GroupLabel::A(2)},
        {"u0^5*u1 + 2*u0^3*u1^3 + 3*u0*u1^5", GroupLabel::A(2)},
        {"u0^7*u1 + 2*u0^4*u1^4 + 3*u0*u1^7", GroupLabel::A(3)},
        {"u0^6 + 2*u0^3*u1^3 + 3*u1^6", GroupLabel::A(3)},
        {"u0^8 + 2*u0^4*u1^4 + 3*u1^8", GroupLabel::A(4)},
        {"u0^9*u1 + 2*u0^5*u1^5 + 3*u0*u1^9", GroupLabel::A(4)},
        {"u0^2*u1^2 + 2*(u0^2 - u1^2)^2", GroupLabel::D(2)},
        {"u0*u1*(u0^4 - u1^4)*(u0^2*u1^2 + 2*(u0^2 - u1^2)^2)", GroupLabel::D(2)},
        {"(u0^6 - u1^6)^2 + u0^2*u1^2*u0*u1*(u0^3 - u1^3)^2", GroupLabel::D(3)},
        {"(u0^6 - u1^6)*(u0*u1*(u0^3 - u1^3)^2 + u0^4*u1^4)", GroupLabel::D(3)},
        {"(u0^4 - u1^4)^2 + 3*u0^4*u1^4", GroupLabel::D(4)},
        {"u0*u1*(u0^8 - u1^8)*((u0^4 - u1^4)^2 + 3*u0^4*u1^4)", GroupLabel::D(4)},
        {"(u0^5*u1 - u0*u1^5)^3 + (u0^5*u1 - u0*u1^5)*(u0^12 - 33*u0^8*u1^4 - 33*u0^4*u1^8 + u1^12)", GroupLabel::E6()},
        {"u0^8 + 14*u0^4*u1^4 + u1^8", GroupLabel::E7()},
        {"u0^5*u1 - u0*u1^5", GroupLabel::E7()},
        {"u0^11*u1 + 11*u0^6*u1^6 - u0*u1^11", GroupLabel::E8()},
    };
}

Json h1_report(const GroupLabel& group)
{
    const auto g = catalog(group);
    const auto classes = h1(g);
    Json out = {{"group", group.name()}, {"order", g.order()}, {"cocycles", cocycles(g).size()}, {"classes", Json::array()},
                {"representatives", Json::array()}, {"sizes", Json::array()}};
    for (const auto& c : classes) {
        out["classes"].push_back(c.name);
        out["representatives"].push_back(c.representative.to_string());
        out["sizes"].push_back(c.members.size());
    }
    return out;
}

Json qg_report(const HomPoly& g)
{
    const auto q = QgInstance::make(g);
    const auto rep = enumerate_forms(q);
    const Parity parity = q.n % 2 == 0 ? Parity::Even : Parity::Odd;
    Json out = {{"g", g.to_string()},
                {"degree", g.degree()},
                {"n", q.n},
                {"parity", parity == Parity::Even ? "even" : "odd"},
                {"F", rep.f.name()},
                {"real_g", rep.real_g.to_string()},
                {"realization", nullptr},
                {"forms", Json::array()},
                {"counts", counts_json(rep.counts())},
                {"table_counts", counts_json(form_counts(parity, rep.f))},
                {"notes", rep.notes}};
    if (rep.realization) {
        const auto& r = *rep.realization;
        out["realization"] = {{"status", realizability_name(r.status)},
                              {"lambda", r.lambda.to_string()},
                              {"phi", r.phi.to_string()},
                              {"detail", r.detail}};
    }
    for (const auto& f : rep.forms) {
        Json j = {{"name", f.name()},
                  {"family", f.family},
                  {"index", f.index},
                  {"class", f.over_class},
                  {"status", to_string(f.status)},
                  {"aut0", to_string(f.aut0)},
                  {"merged", f.merged},
                  {"g_i", nullptr},
                  {"equation", nullptr}};
        if (f.merged) j["merged_with"] = f.merged_with;
        if (f.g_i) j["g_i"] = f.g_i->to_string();
        if (auto e = f.equation()) j["equation"] = *e;
        out["forms"].push_back(j);
    }
    return out;
}

Json lattice_report(const FamilyId& family)
{
    const FamilyId f = normalize(family);
    Json out = {{"family", f.name()}, {"in_theorem_list", in_theorem_list(f)}, {"aut_components", nullptr}, {"model", nullptr}};
    try {
        const auto a = aut_component_count(f);
        out["aut_components"] = {{"kind", to_string(a.kind)}, {"group", a.group}, {"involution", nullptr}};
        if (a.involution) out["aut_components"]["involution"] = *a.involution;
    } catch (const DomainError& e) {
        out["aut_components_note"] = e.what();
    }
    try {
        const auto m = model(f);
        Json j = {{"full_table", m.full_table},
                  {"divisor_basis", m.divisor_basis},
                  {"curve_basis", m.curve_basis},
                  {"pairing", Json::array()},
                  {"canonical", rationals(m.canonical)},
                  {"named_curves", Json::object()},
                  {"cone_generators", Json::array()},
                  {"k_dots", Json::object()},
                  {"k_negative_rays", Json::array()},
                  {"divisor_products", Json::array()},
                  {"notes", m.notes}};
        for (const auto& row : m.pairing) j["pairing"].push_back(rationals(row));
        for (const auto& [name, v] : m.named_curves) j["named_curves"][name] = rationals(v);
        for (const auto& g : m.cone_generators) {
            Json c = {{"name", g.name}, {"coords", rationals(g.coords)}, {"contraction", nullptr}};
            if (g.contraction) c["contraction"] = *g.contraction;
            j["cone_generators"].push_back(c);
        }
        for (const auto& [name, k] : m.k_dots) j["k_dots"][name] = rf::to_string(k);
        for (const auto& r : k_negative_rays(m)) j["k_negative_rays"].push_back(Json{{"name", r.ray.name}, {"k_dot", rf::to_string(r.k_dot)}});
        for (const auto& [pair, v] : m.divisor_products)
            j["divisor_products"].push_back({{"d1", pair.first}, {"d2", pair.second}, {"class", rationals(v)}});
        out["model"] = j;
    } catch (const DomainError& e) {
        out["model_note"] = e.what();
    }
    return out;
}

Json forms_report(const forms::Registry& reg, const FamilyId& family) { return form_list_json(reg.forms_of(family)); }

Json threefold_forms_report(const forms::Registry& reg, const std::string& key) { return form_list_json(reg.forms_of_threefold(key)); }

Json links_report(const forms::Registry& reg, const std::string& form_id)
{
    const auto form = reg.find_form(form_id);
    Json out = {{"form", form.id}, {"name", form.name}, {"links", Json::array()}};
    for (const auto& l : reg.links_from(form)) {
        Json j = {{"type", forms::to_string(l.type)},
                  {"count", l.count},
                  {"target", l.target},
                  {"description", l.description},
                  {"witness", nullptr},
                  {"witness_formula", nullptr},
                  {"witness_valid", nullptr}};
        if (l.witness) {
            j["witness"] = *l.witness;
            j["witness_valid"] = reg.verify_witness(l).valid;
        }
        if (l.witness_formula) j["witness_formula"] = *l.witness_formula;
        out["links"].push_back(j);
    }
    return out;
}

Json torus_report(int d)
{
    Json out = {{"dimension", d}, {"tori", Json::array()}};
    for (const auto& t : forms::torus_forms(d)) out["tori"].push_back({{"p", t.p}, {"q", t.q}, {"r", t.r}, {"label", t.label()}});
    out["count"] = out["tori"].size();
    return out;
}

Json verify_report(Suite suite, const SuiteOptions& options)
{
    if (options.b_max < 1) throw DomainError("--b-max must be at least 1");
    Json checks = Json::array();
    const bool all = suite == Suite::All;
    if (all || suite == Suite::H1) h1_checks(checks);
    if (all || suite == Suite::QgTable) qg_table_checks(checks);
    if (all || suite == Suite::Schwarzenberger) schwarzenberger_checks(checks, options.b_max);
    if (all || suite == Suite::Lattices) lattice_checks(checks, options.b_max);
    const auto& reg = options.registry ? *options.registry : forms::default_registry();
    if (all || suite == Suite::Witnesses) witness_checks(checks, reg);
    if (all || suite == Suite::Involutions) involution_checks(checks, options.b_max, reg);
    int passed = 0;
    for (const auto& c : checks) passed += c["ok"].get<bool>() ? 1 : 0;
    const int failed = static_cast<int>(checks.size()) - passed;
    return {{"suite", to_string(suite)}, {"b_max", options.b_max}, {"checks", checks}, {"passed", passed}, {"failed", failed},
            {"ok", failed == 0}};
}

std::string render_h1(const Json& r)
{
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < r["classes"].size(); ++k)
        rows.push_back({text(r["classes"][k]), text(r["representatives"][k]), text(r["sizes"][k])});
    std::ostringstream os;
    os << "H1(Gamma, " << text(r["group"]) << "), |F| = " << text(r["order"]) << ", " << text(r["cocycles"]) << " cocycles\n";
    os << table({"class", "representative", "cocycles"}, rows);
    return os.str();
}

std::string render_qg(const Json& r)
{
    std::ostringstream os;
    os << "Q_g with g = " << text(r["g"]) << " (n = " << text(r["n"]) << ", " << text(r["parity"]) << ")\n";
    os << "F = " << text(r["F"]) << "\n";
    if (!r["realization"].is_null())
        os << "realization: " << text(r["realization"]["status"]) << ", lambda = " << text(r["realization"]["lambda"])
           << ", phi = " << text(r["realization"]["phi"]) << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : r["forms"])
        rows.push_back({text(f["name"]), text(f["class"]), text(f["status"]), text(f["aut0"]),
                        f["merged"].get<bool>() ? "= " + text(f["merged_with"]) : "", text(f["equation"])});
    os << table({"form", "class", "status", "Aut0", "merged", "equation"}, rows);
    const auto& c = r["counts"];
    os << "rational " << text(c["rational"]) << ", ? " << text(c["unknown"]) << ", w/o real points " << text(c["no_real_points"])
       << ", total " << text(c["total"]) << "\n";
    for (const auto& n : r["notes"]) os << "note: " << text(n) << "\n";
    return os.str();
}

std::string render_lattice(const Json& r)
{
    std::ostringstream os;
    os << text(r["family"]) << ": in theorem list " << (r["in_theorem_list"].get<bool>() ? "yes" : "no") << "\n";
    if (!r["aut_components"].is_null()) {
        os << "Aut: " << text(r["aut_components"]["kind"]) << ", " << text(r["aut_components"]["group"]);
        if (!r["aut_components"]["involution"].is_null()) os << ", involution " << text(r["aut_components"]["involution"]);
        os << "\n";
    }
    const Json& m = r["model"];
    if (m.is_null()) {
        os << "no lattice model: " << text(r["model_note"]) << "\n";
        return os.str();
    }
    if (m["full_table"].get<bool>()) {
        std::vector<std::string> headers{"curve"};
        for (const auto& d : m["divisor_basis"]) headers.push_back(text(d));
        headers.push_back("K");
        std::vector<std::vector<std::string>> rows;
        for (const auto& [name, coords] : m["named_curves"].items()) {
            std::vector<std::string> row{name};
            for (std::size_t d = 0; d < m["divisor_basis"].size(); ++d) {
                Rational s = 0;
                for (std::size_t c = 0; c < coords.size(); ++c)
                    s += Rational(coords[c].get<std::string>()) * Rational(m["pairing"][c][d].get<std::string>());
                row.push_back(rf::to_string(s));
            }
            row.push_back(m["k_dots"].contains(name) ? text(m["k_dots"][name]) : "");
            rows.push_back(row);
        }
        os << table(headers, rows);
        os << "K = ";
        for (std::size_t d = 0; d < m["divisor_basis"].size(); ++d)
            os << (d ? " + " : "") << "(" << text(m["canonical"][d]) << ")" << text(m["divisor_basis"][d]);
        os << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [name, k] : m["k_dots"].items()) rows.push_back({name, text(k)});
        os << table({"curve", "K"}, rows);
    }
    std::vector<std::vector<std::string>> cone;
    for (const auto& g : m["cone_generators"]) cone.push_back({text(g["name"]), text(g["contraction"])});
    os << "cone generators\n" << table({"ray", "contraction"}, cone);
    os << "K-negative rays:";
    for (const auto& k : m["k_negative_rays"]) os << " " << text(k["name"]) << " (" << text(k["k_dot"]) << ")";
    os << "\n";
    for (const auto& n : m["notes"]) os << "note: " << text(n) << "\n";
    return os.str();
}

std::string render_forms(const Json& r)
{
    std::ostringstream os;
    os << "real forms of " << text(r["source"]) << (r["complete"].get<bool>() ? "" : " (list not known to be complete)") << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : r["forms"])
        rows.push_back({text(f["name"]), text(f["has_real_points"]), text(f["rational"]), text(f["aut0"]), text(f["real_structure"])});
    os << table({"form", "real points", "rational", "Aut0", "real structure"}, rows);
    for (const auto& n : r["notes"]) os << "note: " << text(n) << "\n";
    return os.str();
}

std::string render_links(const Json& r)
{
    std::ostringstream os;
    os << "links from " << text(r["name"]) << " [" << text(r["form"]) << "]\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& l : r["links"])
        rows.push_back({text(l["type"]), text(l["count"]), text(l["target"]), text(l["witness"]),
                        l["witness_valid"].is_null() ? "-" : (l["witness_valid"].get<bool>() ? "valid" : "INVALID")});
    os << table({"type", "count", "target", "witness", "check"}, rows);
    for (const auto& l : r["links"]) os << "- " << text(l["description"]) << "\n";
    return os.str();
}

std::string render_torus(const Json& r)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : r["tori"]) rows.push_back({text(t["p"]), text(t["q"]), text(t["r"]), text(t["label"])});
    std::ostringstream os;
    os << text(r["count"]) << " real forms of G_m^" << text(r["dimension"]) << "\n";
    os << table({"p", "q", "r", "torus"}, rows);
    return os.str();
}

std::string render_verify(const Json& r)
{
    std::ostringstream os;
    for (const auto& c : r["checks"]) {
        os << (c["ok"].get<bool>() ? "ok   " : "FAIL ") << text(c["name"]);
        if (!c["ok"].get<bool>() && !c["detail"].get<std::string>().empty()) os << "  [" << text(c["detail"]) << "]";
        os << "\n";
    }
    os << "suite " << text(r["suite"]) << ": " << text(r["passed"]) << " passed, " << text(r["failed"]) << " failed\n";
    return os.str();
}

}  // namespace rf::report
