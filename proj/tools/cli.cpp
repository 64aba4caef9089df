#include "cli.hpp"
#include "report.hpp"

#include "rf/error.hpp"
#include "rf/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <optional>

using namespace rf;
using report::Json;

namespace {

enum class Format { Json, Text };

struct FamilyArgs {
    std::string family;
    std::map<char, std::optional<int>> values{{'a', {}}, {'b', {}}, {'c', {}}, {'m', {}}, {'n', {}}};

    void attach(CLI::App* cmd, bool required)
    {
        auto* opt = cmd->add_option("--family", family, "Fabc, Pb, Uabc, Sb, Vb, Wb, Rmn or Qg");
        if (required) opt->required();
        for (auto& [name, value] : values) cmd->add_option(std::string("--") + name, value);
    }

    FamilyId resolve() const
    {
        static const std::map<std::string, std::string> params = {{"Fabc", "abc"}, {"Uabc", "abc"}, {"Pb", "b"}, {"Sb", "b"},
                                                                  {"Vb", "b"},     {"Wb", "b"},     {"Rmn", "mn"}, {"Qg", "n"}};
        auto it = params.find(family);
        if (it == params.end()) throw DomainError("unknown family " + family);
        std::vector<int> out;
        for (char p : it->second) {
            const auto& v = values.at(p);
            if (!v) throw DomainError("family " + family + " needs --" + std::string(1, p));
            out.push_back(*v);
        }
        for (const auto& [name, value] : values)
            if (value && it->second.find(name) == std::string::npos)
                throw DomainError("family " + family + " takes no --" + std::string(1, name));
        return FamilyId::make(family, out);
    }
};

void emit(std::ostream& out, const Json& r, Format format, std::string (*render)(const Json&))
{
    if (format == Format::Json)
        out << r.dump(2) << "\n";
    else
        out << render(r);
}

int fail(std::ostream& out, std::ostream& err, Format format, const std::string& kind, const std::string& message, int code)
{
    if (format == Format::Json) out << Json{{"error", kind}, {"message", message}}.dump(2) << "\n";
    err << kind << " error: " << message << "\n";
    return code;
}

}  // namespace

int rf::cli::run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Real forms of rational Mori fiber spaces: cohomology, lattices, registries and verification"};
    app.require_subcommand(1);
    std::string format_name = "json";
    app.add_option("--format", format_name, "json or text")->check(CLI::IsMember({"json", "text"}));
    std::string registry_path;
    app.add_option("--registry", registry_path, "forms registry data file, checked against its .sha256");

    std::string group;
    auto* h1_cmd = app.add_subcommand("h1", "Galois cohomology H1 of a finite subgroup of PGL2");
    h1_cmd->add_option("--group", group, "A<l>, D<l>, E6, E7 or E8")->required();

    std::string poly;
    auto* qg_cmd = app.add_subcommand("classify-qg", "Real forms of the quadric fibration Q_g");
    qg_cmd->add_option("--poly", poly, "homogeneous polynomial in u0, u1")->required();

    FamilyArgs lattice_args;
    auto* lattice_cmd = app.add_subcommand("lattice", "Intersection data and extremal rays of a family");
    lattice_args.attach(lattice_cmd, true);

    FamilyArgs forms_args;
    std::string threefold;
    auto* forms_cmd = app.add_subcommand("forms", "Catalogued real forms of a family or a named threefold");
    forms_args.attach(forms_cmd, false);
    forms_cmd->add_option("--threefold", threefold, "P3, Q3, P1112, P1123, Y5 or X12");

    std::string form_id;
    auto* links_cmd = app.add_subcommand("links", "Sarkisov links from a catalogued real form");
    links_cmd->add_option("--form", form_id, "form id such as Fabc(0,1,-1)/G")->required();

    std::string suite_name = "all";
    report::SuiteOptions suite_options;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite_name)
        ->check(CLI::IsMember({"h1", "qg-table", "schwarzenberger", "lattices", "witnesses", "involutions", "all"}));
    verify_cmd->add_option("--b-max", suite_options.b_max, "largest b for the parametric checks");

    int dimension = 0;
    auto* torus_cmd = app.add_subcommand("torus", "Real forms of the split torus of a given dimension");
    torus_cmd->add_option("d,--d", dimension, "dimension")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const Format format = format_name == "text" ? Format::Text : Format::Json;
    try {
        std::optional<forms::Registry> loaded;
        if (!registry_path.empty()) loaded = forms::Registry::load(registry_path);
        const forms::Registry& reg = loaded ? *loaded : forms::default_registry();
        suite_options.registry = &reg;
        if (*h1_cmd) {
            emit(out, report::h1_report(GroupLabel::parse(group)), format, report::render_h1);
        } else if (*qg_cmd) {
            emit(out, report::qg_report(parse_poly(poly)), format, report::render_qg);
        } else if (*lattice_cmd) {
            emit(out, report::lattice_report(lattice_args.resolve()), format, report::render_lattice);
        } else if (*forms_cmd) {
            if (threefold.empty() == forms_args.family.empty())
                throw DomainError("forms needs exactly one of --family and --threefold");
            emit(out, threefold.empty() ? report::forms_report(reg, forms_args.resolve()) : report::threefold_forms_report(reg, threefold),
                 format, report::render_forms);
        } else if (*links_cmd) {
            emit(out, report::links_report(reg, form_id), format, report::render_links);
        } else if (*verify_cmd) {
            const Json r = report::verify_report(report::parse_suite(suite_name), suite_options);
            emit(out, r, format, report::render_verify);
            return r["ok"].get<bool>() ? 0 : 3;
        } else if (*torus_cmd) {
            emit(out, report::torus_report(dimension), format, report::render_torus);
        }
    } catch (const DomainError& e) {
        return fail(out, err, format, "domain", e.what(), 2);
    } catch (const VerificationError& e) {
        return fail(out, err, format, "verification", e.what(), 3);
    }
    return 0;
}
