#include "modcount/cli.hpp"

#include "modcount/errors.hpp"
#include "modcount/json_io.hpp"
#include "modcount/moduli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace modcount;

namespace {
std::string run_to_string(const std::vector<std::string>& argv, int expect_code = 0) {
    Command cmd = parse_command(argv);
    std::ostringstream out;
    int code = run_command(cmd, out);
    CHECK(code == expect_code);
    return out.str();
}
} // namespace

TEST_SUITE("cli_io") {

TEST_CASE("command parsing") {
    Command count = parse_command({"count", "--genus", "1", "--lengths", "4"});
    CHECK(count.verb == "count");
    CHECK(count.genus == 1);
    CHECK(count.lengths == std::vector<long long>{4});

    Command vpf = parse_command({"vpf", "count", "--matrix", "1,2,2;1,0,0", "--b", "7,3"});
    CHECK(vpf.verb == "vpf");
    CHECK(vpf.subverb == "count");
    CHECK(vpf.matrix == std::vector<std::vector<long long>>{{1, 2, 2}, {1, 0, 0}});
    CHECK(vpf.b == std::vector<long long>{7, 3});
    CHECK(vpf.strict);

    CHECK_THROWS_AS(parse_command({"count", "--genus", "-1"}), UsageError);
    CHECK_THROWS_AS(parse_command({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_command({"count"}), UsageError); // missing flags
    CHECK_THROWS_AS(parse_command({"vpf", "count", "--matrix", "1,x;1,0", "--b", "1,1"}),
                    UsageError);
}

TEST_CASE("count and euler rendering") {
    CHECK(run_to_string({"count", "--genus", "0", "--lengths", "2,2,2,2", "--method", "belyi"}) ==
          "3\n");
    CHECK(run_to_string({"count", "--genus", "1", "--lengths", "4"}) == "1/4\n");
    CHECK(run_to_string({"euler", "--genus", "2", "--boundaries", "1", "--method", "zeta"}) ==
          "1/120\n");
    CHECK(run_to_string({"vpf", "count", "--matrix", "1,2,2;1,0,0", "--b", "7,3"}) == "1\n");
    CHECK(run_to_string({"vpf", "index", "--matrix", "2,2,2"}) == "2\n");
    CHECK(run_to_string({"hurwitz", "trace", "--degree", "4", "--classes", "4;2,2;4"}) == "1/4\n");
    CHECK(run_to_string({"hz", "--genus", "2", "--length", "8"}) == "21/8\n");
}

TEST_CASE("frontier errors surface as FrontierError") {
    Command cmd = parse_command({"count", "--genus", "0", "--lengths", "8,6", "--method", "belyi"});
    std::ostringstream out;
    CHECK_THROWS_AS(run_command(cmd, out), FrontierError);
}

TEST_CASE("poly output is deterministic json") {
    std::string first = run_to_string({"poly", "--genus", "1", "--boundaries", "1", "--format", "json"});
    std::string second = run_to_string({"poly", "--genus", "1", "--boundaries", "1", "--format", "json"});
    CHECK(first == second);
    nlohmann::json parsed = nlohmann::json::parse(first);
    QuasiPolynomial qp = quasipolynomial_from_json(parsed);
    CHECK(qp.evaluate({4}) == Rational(1, 4));
    CHECK(parsed.at("vars") == 1);
}

TEST_CASE("quasi-polynomial file round trip") {
    const QuasiPolynomial& qp = lattice_count_quasipolynomial(0, 4);
    auto path = std::filesystem::temp_directory_path() / "modcount_qp_roundtrip.json";
    save_quasipolynomial(qp, path.string());
    QuasiPolynomial loaded = load_quasipolynomial(path.string());
    CHECK(loaded == qp);
    CHECK(loaded.evaluate({2, 2, 2, 2}) == Rational(3));
    // byte-identical re-serialization
    CHECK(to_json(loaded).dump(2) == to_json(qp).dump(2));
    std::remove(path.string().c_str());
}

TEST_CASE("laplace compare-form emits the diff schema") {
    std::string text = run_to_string({"laplace", "series", "--genus", "1", "--boundaries", "1",
                                      "--order", "9", "--compare-form"});
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("matched") == true);
    CHECK(j.at("first_mismatch").is_null());

    std::string diff = run_to_string({"laplace", "series", "--genus", "0", "--boundaries", "4",
                                      "--order", "6", "--compare-form"});
    nlohmann::json jd = nlohmann::json::parse(diff);
    if (!jd.at("matched").get<bool>()) {
        CHECK(jd.at("first_mismatch").contains("exp"));
        CHECK(jd.at("first_mismatch").contains("lhs"));
        CHECK(jd.at("first_mismatch").contains("rhs"));
    }
}

TEST_CASE("MODCOUNT_CACHE overrides --cache-dir") {
    auto env_dir = std::filesystem::temp_directory_path() / "modcount_env_cache";
    auto flag_dir = std::filesystem::temp_directory_path() / "modcount_flag_cache";
    std::filesystem::remove_all(env_dir);
    std::filesystem::remove_all(flag_dir);
    setenv("MODCOUNT_CACHE", env_dir.string().c_str(), 1);
    run_to_string({"poly", "--genus", "0", "--boundaries", "3", "--cache-dir", flag_dir.string()});
    unsetenv("MODCOUNT_CACHE");
    CHECK(std::filesystem::exists(env_dir / "N_g0_n3.json"));
    CHECK(!std::filesystem::exists(flag_dir / "N_g0_n3.json"));
    // cached file evaluates identically to the in-memory value
    QuasiPolynomial qp = load_quasipolynomial((env_dir / "N_g0_n3.json").string());
    CHECK(qp.evaluate({2, 2, 2}) == Rational(1));
    std::filesystem::remove_all(env_dir);
    set_cache_directory("");
}

TEST_CASE("fatgraph analysis through the CLI") {
    std::string text = run_to_string(
        {"fatgraphs", "--graph", "2;(0 1 2 3);(0 2)(1 3);1", "--format", "json"});
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("genus") == 1);
    CHECK(j.at("aut_order") == 4);
    CHECK(j.at("incidence") == nlohmann::json::array({{2, 2}}));
}

} // TEST_SUITE
