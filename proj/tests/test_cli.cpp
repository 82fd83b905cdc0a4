#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SEPVARS_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("minsep command") {
    auto r = run("--format json minsep --poly \"x^2 - x*y + y^2\"");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["separable"] == true);
    CHECK(doc["f"] == "x^3");
    CHECK(doc["g"] == "-y^3");
    CHECK(doc["N"] == 3);

    auto r2 = run("minsep --poly \"x^3 + x^2*y + x*y^2 + y^3 + y^2\"");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("separable: false") != std::string::npos);

    auto r3 = run("is-separable --poly \"x*y - 1\"");
    CHECK(r3.exit_code == 0);
    CHECK(r3.out.find("not separable") != std::string::npos);
}

TEST_CASE("separate command") {
    auto r = run("--format json separate --gens \"x - y\"");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["generators"].size() == 1);
    CHECK(doc["generators"][0]["f"] == "x");
    CHECK(doc["generators"][0]["g"] == "y");
    CHECK(doc["a"]["f"] == "x");
    CHECK(doc["certificates"][0] == "t");

    auto r2 = run("--verify --format json separate --gens "
                  "\"(x^2 - x*y + y^2)*(x^3 - 2*x*y^2 - 1); (x^2 - x*y + y^2)*(y^3 - 2*x^2*y - 1)\"");
    CHECK(r2.exit_code == 0);
    const json doc2 = json::parse(r2.out);
    CHECK(doc2["generators"].size() == 5);
    CHECK(doc2["certificates"].size() == 5);
    CHECK(doc2["a"]["f"] == "x^3");
    CHECK(doc2["a"]["g"] == "-y^3");

    // structured output is stable across runs
    auto r3 = run("--verify --format json separate --gens "
                  "\"(x^2 - x*y + y^2)*(x^3 - 2*x*y^2 - 1); (x^2 - x*y + y^2)*(y^3 - 2*x^2*y - 1)\"");
    CHECK(r2.out == r3.out);
}

TEST_CASE("separate from file") {
    const char* path = "/tmp/sepvars_cli_gens.txt";
    {
        std::ofstream f(path);
        f << "# worked zero-dimensional example\n"
          << "x^2*y^2 - 1\n"
          << "y^5 + y^3 + x*y^2 + x  # second generator\n";
    }
    auto r = run(std::string("--format json separate --file ") + path);
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["generators"].size() == 29);
    CHECK(doc["a"].is_null());
    std::remove(path);
}

TEST_CASE("oracle commands") {
    auto r = run("--format json oracle separable --poly \"x^2 + x*y + y^2\" --max-deg 1");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["found"] == true);
    CHECK(doc["cofactor"] == "x - y");
    CHECK(doc["multiple"] == "x^3 - y^3");

    auto r2 = run("--format json oracle slice --gens \"x - y\" --max-deg 2");
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["dimension"] == 3);
}

TEST_CASE("sepset commands") {
    auto r = run("sepset check --m 6 --n 6 --points \"(0,0),(1,1),(2,2),(3,3),(4,4),(5,5)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("separated: true") != std::string::npos);

    auto r2 = run("--format json sepset closure --m 6 --n 6 --points "
                  "\"(2,0),(3,1),(4,2),(5,3),(0,4),(1,5),(4,0),(5,1),(0,2),(1,3),(2,4),(3,5)\"");
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["points"].size() == 18);
}

TEST_CASE("project command") {
    auto r = run("--format json --vars \"x,y1,y2\" project --poly \"x^2 + x*y1*y2 + y1^2 + y2^2\" "
                 "--xi \"x->x\" --eta \"y1->y, y2->2\"");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["possibly_separable"] == false);
    CHECK(doc["verdict"] == "not separable");
    CHECK(doc["image"] == "x^2 + 2*x*y + y^2 + 4");

    auto r2 = run("--format json --vars \"x,y1,y2\" project --poly \"x^2 + x*y1 + y1^2 + y2^4\" "
                  "--xi \"x->x\" --eta \"y1->y^2, y2->y\"");
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["possibly_separable"] == false);
}

TEST_CASE("selftest and error paths") {
    auto r = run("selftest --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("selftest ok") != std::string::npos);

    // usage errors exit 1
    CHECK(run("minsep --poly \"x +\"").exit_code == 1);
    CHECK(run("minsep --poly \"x^2 + 1\"").exit_code == 1);
    CHECK(run("separate").exit_code == 1);
    CHECK(run("no-such-command").exit_code != 0);

    // unknown variable mentions position
    auto bad = run("minsep --poly \"x - q*y\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("unknown variable") != std::string::npos);
}
