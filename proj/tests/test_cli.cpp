#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = f4rep::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_json(const std::string &stem)
{
    return std::filesystem::temp_directory_path() / ("f4rep_test_" + stem + ".json");
}

json read_json(const std::filesystem::path &p)
{
    std::ifstream in(p);
    return json::parse(in);
}

} // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"singular"}).code == 2);
    CHECK(run({"singular", "--degree", "-1"}).code == 2);
    CHECK(run({"verify", "nothing"}).code == 2);
    CHECK(run({"harmonic", "--degree", "1"}).code == 2);
    CHECK(run({"identity", "--order", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("parse fills the configuration")
{
    std::ostringstream out, err;
    int code = -1;
    const auto cfg = f4rep::cli::parse({"--seed", "7", "singular", "--degree", "3", "--json", "x.json"}, out, err, code);
    REQUIRE(cfg.has_value());
    CHECK(code == 0);
    CHECK(cfg->command == "singular");
    CHECK(cfg->degree == 3);
    CHECK(cfg->seed == 7);
    CHECK(cfg->json_path == std::optional<std::string>("x.json"));
}

TEST_CASE("dim")
{
    const Outcome r = run({"dim", "0", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "26\n");
    CHECK(run({"dim", "5", "5"}).out == "106938703872\n");
    const Outcome t = run({"dim", "1", "1", "--table"});
    CHECK(t.code == 0);
    CHECK(t.out == "k l dim\n0 0 1\n0 1 26\n1 0 273\n1 1 4096\n");
}

TEST_CASE("singular report and JSON schema")
{
    const auto path = temp_json("singular");
    const Outcome r = run({"singular", "--degree", "2", "--json", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("degree 2: total 3, predicted 3") != std::string::npos);
    CHECK(r.out.find("weight (0,0,0,2) dim 1") != std::string::npos);
    const json doc = read_json(path);
    CHECK(doc["degree"] == 2);
    CHECK(doc["predicted"] == 3);
    CHECK(doc["total"] == 3);
    CHECK(doc["all_positive_annihilate"] == true);
    CHECK(doc["products_span"] == true);
    REQUIRE(doc["entries"].size() == 3);
    const json &first = doc["entries"][0];
    CHECK(first["weight"] == json::array({0, 0, 0, 2}));
    CHECK(first["dim"] == 1);
    REQUIRE(first["basis"].size() == 1);
    const json &term = first["basis"][0][0];
    CHECK(term.contains("exp"));
    CHECK(term.contains("num"));
    CHECK(term.contains("den"));
    std::filesystem::remove(path);
}

TEST_CASE("output is deterministic")
{
    CHECK(run({"singular", "--degree", "3"}).out == run({"singular", "--degree", "3"}).out);
    CHECK(run({"--seed", "1", "verify", "lattice"}).out == run({"--seed", "1", "verify", "lattice"}).out);
}

TEST_CASE("identity")
{
    const auto path = temp_json("identity");
    const Outcome r = run({"identity", "--order", "12", "--json", path.string()});
    CHECK(r.code == 0);
    const json doc = read_json(path);
    CHECK(doc["order"] == 12);
    CHECK(doc["pass"] == true);
    CHECK(doc["first_mismatch"].is_null());
    CHECK(doc["rhs"].size() == 13);
    CHECK(doc["rhs"][1] == "2");
    std::filesystem::remove(path);
}

TEST_CASE("errata, branch and harmonic")
{
    const Outcome e = run({"errata"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("4 mismatched entries", 0) == 0);
    CHECK(run({"branch", "--degree", "6"}).code == 0);
    const Outcome h = run({"harmonic", "--degree", "5"});
    CHECK(h.code == 0);
    CHECK(h.out.find("bound 4, harmonic witnesses 4") != std::string::npos);
}

TEST_CASE("verify suites")
{
    const Outcome r = run({"verify", "lattice"});
    CHECK(r.code == 0);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("export")
{
    const Outcome r = run({"export", "roots"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.size() == 72);
    const auto path = temp_json("structure");
    const Outcome s = run({"export", "structure", "--json", path.string()});
    CHECK(s.code == 0);
    const json st = read_json(path);
    CHECK(st.size() > 0);
    CHECK(st[0].contains("terms"));
    std::filesystem::remove(path);
}
