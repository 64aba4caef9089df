#include "doctest_main.hpp"

#include "cli.hpp"
#include "report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rf;
using report::Json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> keys(const Json& j)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : j.items()) out.push_back(k);
    return out;
}

bool keys_sorted(const Json& j)
{
    if (j.is_object()) {
        const auto k = keys(j);
        if (!std::is_sorted(k.begin(), k.end())) return false;
        for (const auto& [name, v] : j.items())
            if (!keys_sorted(v)) return false;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (!keys_sorted(v)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("h1 for E7")
{
    const auto r = run({"h1", "--group", "E7"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["classes"] == Json::array({"I2", "omega8", "h"}));
    CHECK(j["group"] == "E7");
    CHECK(j["order"] == 24);
    CHECK(j["sizes"].size() == 3);
    const auto text = run({"--format", "text", "h1", "--group", "D4"});
    CHECK(text.code == 0);
    CHECK(text.out.find("omega8") != std::string::npos);
    CHECK(text.out.find("h ") != std::string::npos);
}

TEST_CASE("classify-qg on the E7 octic")
{
    const auto r = run({"classify-qg", "--poly", "u0^8+14*u0^4*u1^4+u1^8"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["F"] == "E7");
    CHECK(j["forms"].size() == 12);
    CHECK(j["n"] == 4);
    CHECK(j["counts"] == Json{{"rational", 4}, {"unknown", 4}, {"no_real_points", 4}, {"total", 12}});
    CHECK(j["counts"] == j["table_counts"]);
    CHECK(j["forms"][4]["g_i"] == "-u0^8 + 14*u0^4*u1^4 - u1^8");
    CHECK(j["realization"].is_null());
}

TEST_CASE("classify-qg realizes a non-real input first")
{
    const auto r = run({"classify-qg", "--poly", "u0^3*u1 + i*u0*u1^3"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["realization"]["status"] == "realizable");
    CHECK(j["F"] == "D2");
}

TEST_CASE("domain errors exit with code 2")
{
    const auto nonhom = run({"classify-qg", "--poly", "u0^2 + u1"});
    CHECK(nonhom.code == 2);
    CHECK(nonhom.json()["error"] == "domain");
    CHECK(nonhom.json()["message"].get<std::string>().find("{2, 1}") != std::string::npos);
    CHECK(run({"classify-qg", "--poly", "u0^2 + * u1"}).code == 2);
    CHECK(run({"classify-qg", "--poly", "(u0 + u1)^2"}).code == 2);
    CHECK(run({"h1", "--group", "F4"}).code == 2);
    CHECK(run({"h1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"lattice", "--family", "Fabc", "--a", "1"}).code == 2);
    CHECK(run({"lattice", "--family", "Sb", "--b", "2", "--c", "1"}).code == 2);
    CHECK(run({"forms", "--family", "Sb", "--b", "0"}).code == 2);
    CHECK(run({"forms"}).code == 2);
    CHECK(run({"links", "--form", "Sb(2)/tilde"}).code == 2);
    CHECK(run({"torus", "0"}).code == 2);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
    CHECK(run({"verify", "--suite", "schwarzenberger", "--b-max", "0"}).code == 2);
    CHECK(run({"--format", "xml", "torus", "2"}).code == 2);
}

TEST_CASE("lattice, forms, links and torus reports")
{
    const Json l = run({"lattice", "--family", "Fabc", "--a", "1", "--b", "2", "--c", "0"}).json();
    CHECK(l["family"] == "Fabc(1,2,0)");
    CHECK(l["model"]["k_dots"]["l1"] == "-1");
    CHECK(l["model"]["k_dots"]["l4"] == "-1");
    const Json v = run({"lattice", "--family", "Vb", "--b", "2"}).json();
    CHECK(v["model"].is_null());
    CHECK(v.contains("model_note"));

    const Json s = run({"forms", "--family", "Sb", "--b", "3"}).json();
    REQUIRE(s["forms"].size() == 2);
    CHECK(s["forms"][1]["rational"] == "yes");
    const Json q = run({"forms", "--threefold", "Q3"}).json();
    CHECK(q["forms"][0]["signature"] == "(3,2,0)");

    const Json g1 = run({"links", "--form", "Fabc(0,1,-1)/G"}).json();
    REQUIRE(g1["links"].size() == 1);
    CHECK(g1["links"][0]["type"] == "divisorial");
    CHECK(g1["links"][0]["witness_valid"] == true);

    const Json t = run({"torus", "--d", "4"}).json();
    CHECK(t["count"] == 9);
    CHECK(t["tori"][0] == Json{{"p", 2}, {"q", 0}, {"r", 0}, {"label", "R_{C/R}(G_m)^2"}});
}

TEST_CASE("verify suites")
{
    const auto s = run({"verify", "--suite", "schwarzenberger", "--b-max", "5"});
    REQUIRE(s.code == 0);
    CHECK(s.json()["checks"].size() == 5);
    CHECK(s.json()["ok"] == true);
    const auto all = run({"verify", "--suite", "all"});
    CHECK(all.code == 0);
    CHECK(all.json()["failed"] == 0);
    CHECK(all.json()["passed"].get<int>() > 500);
    for (const auto& name : {"h1", "qg-table", "lattices", "witnesses", "involutions"}) {
        CAPTURE(name);
        const auto r = run({"verify", "--suite", name, "--b-max", "4"});
        CHECK(r.code == 0);
        CHECK(r.json()["checks"].size() > 0);
    }
    const auto text = run({"--format", "text", "verify", "--suite", "schwarzenberger", "--b-max", "2"});
    CHECK(text.out.find("ok   gluing b=2") != std::string::npos);
    CHECK(text.out.find("2 passed, 0 failed") != std::string::npos);
}

TEST_CASE("a registry file that fails its checksum exits with code 3")
{
    const auto dir = std::filesystem::temp_directory_path() / "rf_cli_test";
    std::filesystem::create_directories(dir);
    const auto copy = dir / "forms_registry.json";
    const std::string data = RF_DATA_DIR;
    std::filesystem::copy_file(data + "/forms_registry.json", copy, std::filesystem::copy_options::overwrite_existing);
    std::filesystem::copy_file(data + "/forms_registry.json.sha256", copy.string() + ".sha256",
                               std::filesystem::copy_options::overwrite_existing);
    CHECK(run({"--registry", copy.string(), "forms", "--threefold", "P3"}).code == 0);
    CHECK(run({"--registry", copy.string(), "verify", "--suite", "witnesses"}).code == 0);
    {
        std::ofstream out(copy, std::ios::app);
        out << "\n";
    }
    const auto r = run({"--registry", copy.string(), "forms", "--threefold", "P3"});
    CHECK(r.code == 3);
    CHECK(r.json()["error"] == "verification");
    std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic with sorted keys")
{
    const std::vector<std::vector<std::string>> commands = {
        {"h1", "--group", "D6"},
        {"classify-qg", "--poly", "u0^5*u1 - u0*u1^5"},
        {"lattice", "--family", "Wb", "--b", "3"},
        {"forms", "--family", "Fabc", "--a", "0", "--b", "0", "--c", "0"},
        {"links", "--form", "Qg(2)/U"},
        {"verify", "--suite", "involutions", "--b-max", "3"},
        {"torus", "5"},
    };
    for (const auto& c : commands) {
        CAPTURE(c[0]);
        const auto a = run(c), b = run(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(keys_sorted(a.json()));
        std::vector<std::string> t = c;
        t.insert(t.begin(), {"--format", "text"});
        const auto ta = run(t), tb = run(t);
        CHECK(ta.code == 0);
        CHECK(ta.out == tb.out);
        CHECK_FALSE(ta.out.empty());
    }
}
