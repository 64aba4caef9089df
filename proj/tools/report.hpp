#pragma once

#include "rf/groups.hpp"
#include "rf/lattices.hpp"
#include "rf/qg.hpp"
#include "rf/registry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rf::report {

using Json = nlohmann::json;

enum class Suite { H1, QgTable, Schwarzenberger, Lattices, Witnesses, Involutions, All };

// "h1", "qg-table", "schwarzenberger", "lattices", "witnesses", "involutions", "all"
Suite parse_suite(const std::string& text);
std::string to_string(Suite s);

struct SuiteOptions {
    int b_max = 12;
    const forms::Registry* registry = nullptr;  // default registry when null
};

Json h1_report(const GroupLabel& group);
Json qg_report(const HomPoly& g);
Json lattice_report(const FamilyId& family);
Json forms_report(const forms::Registry& reg, const FamilyId& family);
Json threefold_forms_report(const forms::Registry& reg, const std::string& key);
Json links_report(const forms::Registry& reg, const std::string& form_id);
Json torus_report(int d);
// {"suite", "checks": [{"name", "ok", "detail"}], "passed", "failed", "ok"}
Json verify_report(Suite suite, const SuiteOptions& options = {});

// Human-readable tables rendered from the same report objects.
std::string render_h1(const Json& r);
std::string render_qg(const Json& r);
std::string render_lattice(const Json& r);
std::string render_forms(const Json& r);
std::string render_links(const Json& r);
std::string render_torus(const Json& r);
std::string render_verify(const Json& r);

// Expected named cohomology classes of the catalog groups.
std::vector<std::string> expected_h1_names(const GroupLabel& group);

// Witness polynomials for each catalog label, one for each parity of n.
struct QgWitness {
    std::string poly;
    GroupLabel label;
};
std::vector<QgWitness> qg_witnesses();

}  // namespace rf::report
