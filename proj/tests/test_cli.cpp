#include <fstream>
#include <sstream>

#include "doctest.h"
#include "twistseq/cli/commands.hpp"

using namespace twistseq::cli;

namespace {

std::string data(const std::string& name) { return std::string(TWISTSEQ_DATA_DIR) + "/" + name; }
std::string fixture(const std::string& name) { return std::string(TWISTSEQ_FIXTURE_DIR) + "/" + name; }

std::string read(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

RunConfig config(std::string command, std::string path, std::vector<std::string> spheres = {}) {
    RunConfig c;
    c.command = std::move(command);
    c.category_path = std::move(path);
    c.spheres = std::move(spheres);
    c.format = Format::json;
    return c;
}

struct Golden {
    std::string file;
    RunConfig cfg;
    int status;
};

std::vector<Golden> goldens() {
    std::vector<Golden> g;
    g.push_back({"validate_sphere2", config("validate", data("sphere2.afc")), 0});
    auto v = config("validate", data("a2chain.afc"));
    v.max_order = 6;
    g.push_back({"validate_a2chain", v, 0});
    g.push_back({"validate_mutated", config("validate", fixture("a2chain_mutated.afc")), 1});
    g.push_back({"validate_bad_degree", config("validate", fixture("bad_degree.afc")), 2});
    g.push_back({"build_sphere2", config("build", data("sphere2.afc"), {"L"}), 0});
    g.push_back({"build_a2chain", config("build", data("a2chain.afc"), {"L1", "L2"}), 0});
    g.push_back({"check_sphere2", config("check", data("sphere2.afc"), {"L"}), 0});
    g.push_back({"check_a2chain", config("check", data("a2chain.afc"), {"L1", "L2"}), 0});
    g.push_back({"check_mutated", config("check", fixture("a2chain_mutated.afc"), {"L1", "L2"}), 1});
    auto les = config("les", data("sphere2.afc"), {"L"});
    les.pair = {"L", "L"};
    g.push_back({"les_sphere2", les, 0});
    les = config("les", data("a2chain.afc"), {"L1", "L2"});
    les.pair = {"L1", "L2"};
    g.push_back({"les_a2chain", les, 0});
    g.push_back({"hochschild_sphere2", config("hochschild", data("sphere2.afc"), {"L"}), 0});
    auto hh = config("hochschild", data("a2chain.afc"), {"L1", "L2"});
    hh.cap = 3;
    g.push_back({"hochschild_a2chain", hh, 0});
    return g;
}

}  // namespace

TEST_CASE("golden reports") {
    for (const auto& g : goldens()) {
        CAPTURE(g.file);
        const auto r = run(g.cfg);
        CHECK(r.status == g.status);
        CHECK(render(r, Format::json) == read(std::string(TWISTSEQ_GOLDEN_DIR) + "/" + g.file + ".json"));
    }
}

TEST_CASE("reports carry the schema and a status") {
    const auto r = run(config("build", data("a2chain.afc"), {"L1", "L2"}));
    CHECK(r.report["schema"] == schema_version);
    CHECK(r.report["status"] == "pass");
    const auto& pairs = r.report["pairs"];
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0]["dims"]["E"] == 7);
    CHECK(pairs[0]["dims"]["G"][2] == 9);
    CHECK(pairs[3]["pair"][0] == "L2");

    auto at = config("build", data("a2chain.afc"), {"L1", "L2"});
    at.at = {"L2", "L2"};
    const auto r2 = run(at);
    REQUIRE(r2.report["pairs"].size() == 1);
    CHECK(r2.report["pairs"][0]["dims"]["E"] == 7);

    const auto s = run(config("build", data("sphere2.afc"), {"L"}));
    CHECK(s.report["pairs"][0]["dims"]["E"] == 4);
    CHECK(s.report["pairs"][0]["dims"]["L"][0] == 4);
}

TEST_CASE("input errors give status 2 before any computation") {
    CHECK(run(config("validate", data("missing.afc"))).status == input_error);
    CHECK(run(config("frobnicate", data("sphere2.afc"))).status == input_error);
    CHECK(run(config("build", data("sphere2.afc"))).status == input_error);
    CHECK(run(config("build", data("sphere2.afc"), {"X"})).status == input_error);
    CHECK(run(config("les", data("sphere2.afc"), {"L"})).status == input_error);
    auto bad = config("les", data("sphere2.afc"), {"L"});
    bad.pair = {"L", "Q"};
    CHECK(run(bad).status == input_error);
    auto cap = config("hochschild", data("sphere2.afc"), {"L"});
    cap.cap = -1;
    CHECK(run(cap).status == input_error);
    auto bound = config("check", data("sphere2.afc"), {"L"});
    bound.bound = 0;
    CHECK(run(bound).status == input_error);
    const auto r = run(config("validate", fixture("bad_degree.afc")));
    CHECK(r.report["error"].get<std::string>().find("line 7") != std::string::npos);
}

TEST_CASE("text rendering") {
    auto c = config("validate", data("sphere2.afc"));
    c.format = Format::text;
    const std::string t = render(run(c), Format::text);
    CHECK(t.find("status: pass") != std::string::npos);
    CHECK(t.find("order=2  chains=4  violations=0") != std::string::npos);
}
