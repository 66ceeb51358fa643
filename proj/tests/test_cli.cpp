#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "oracles.hpp"

// Drives the installed command-line binary end to end.  LOCFAC_CLI_PATH
// is injected by the build so the test always runs the binary from the
// same build tree.

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_payload = "") {
    std::string cmd;
    if (!stdin_payload.empty())
        cmd += "printf '%s' '" + stdin_payload + "' | ";
    cmd += std::string(LOCFAC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

json run_json(const std::string& args, int expect_exit = 0,
              const std::string& stdin_payload = "") {
    const auto res = run(args, stdin_payload);
    CAPTURE(args);
    CAPTURE(res.out);
    REQUIRE(res.exit_code == expect_exit);
    return json::parse(res.out);
}

} // namespace

TEST_CASE("count: both methods, extensions, and the error path") {
    auto j = run_json("count --a 1 --b 1 --p 7");
    CHECK(j["count"] == "5");
    CHECK(j["trace"] == "3");
    CHECK(j["r"] == 1);
    CHECK(j["method"] == "charsum"); // auto resolves away from p = 3
    CHECK(j["curve"]["discriminant"] == "-496");

    j = run_json("count --a 1 --b 1 --p 7 --method naive");
    CHECK(j["count"] == "5");
    CHECK(j["method"] == "naive");

    j = run_json("count --a 1 --b 1 --p 3");
    CHECK(j["method"] == "naive"); // auto prefers enumeration at p = 3

    j = run_json("count --a 1 --b 1 --p 5 --r 3");
    CHECK(j["count"] == "108");
    CHECK(j["method"] == "extension");
    CHECK(j["trace"] == "-3");

    j = run_json("count --a 0 --b 0 --p 7", 2);
    CHECK(j["error"]["code"] == "bad_reduction");

    j = run_json("count --a 1 --b 1 --p 2", 2);
    CHECK(j["error"]["code"] == "even_prime");

    j = run_json("count --a 1 --b 1 --p 15", 2);
    CHECK(j["error"]["code"] == "even_or_composite_modulus");
}

TEST_CASE("local factor assembly with expansion verification") {
    auto j = run_json("local-zeta --a 1 --b 1 --p 7 --verify 5");
    CHECK(j["q"] == "7");
    CHECK(j["dim"] == 1);
    REQUIRE(j["factors"].size() == 3);
    CHECK(j["factors"][0]["coeffs"] == json::array({"1", "-1"}));
    CHECK(j["factors"][1]["coeffs"] == json::array({"1", "-3", "7"}));
    CHECK(j["factors"][2]["coeffs"] == json::array({"1", "-7"}));
    CHECK(j["expansion_matches_counts"] == true);
    CHECK(j["verified_degrees"] == 5);
}

TEST_CASE("K-group extraction") {
    auto j = run_json("k-theory --matrix [[4]]");
    CHECK(j["k0_torsion"] == json::array({"3"}));
    CHECK(j["k0_free_rank"] == 0);
    CHECK(j["k1_rank"] == 0);
    CHECK(j["display"] == "K0 = Z^0 + Z/3, K1 = Z^0");

    j = run_json("k-theory --matrix [[2]]");
    CHECK(j["k0_torsion"] == json::array());

    j = run_json("k-theory --matrix [[1,-1],[0,1]]", 2);
    CHECK(j["error"]["code"] == "negative_entry");
}

TEST_CASE("Smith form verb, inline, via stdin, and fuzzing") {
    auto j = run_json("snf --matrix [[2,4],[6,8]]");
    CHECK(j["diagonal"] == json::array({"2", "4"}));
    CHECK(j["verified"] == true);

    j = run_json("snf --stdin", 0, "[[2,4],[6,8]]");
    CHECK(j["diagonal"] == json::array({"2", "4"}));

    // global flags parse after the verb as well
    j = run_json("snf --fuzz 25 --seed 42");
    CHECK(j["fuzz_checked"] == 25);
    CHECK(j["all_ok"] == true);
}

TEST_CASE("irreducibility verb") {
    CHECK(run_json("irreducible --matrix [[1,1],[1,0]]")["irreducible"] ==
          true);
    CHECK(run_json("irreducible --matrix [[0,1],[1,0]]")["irreducible"] ==
          false);
}

TEST_CASE("companion realization verb") {
    auto j = run_json("markov --poly 1,-2,11 --q 11");
    CHECK(j["matrix"] == json::array({json::array({"0", "-11"}),
                                      json::array({"1", "2"})}));
    CHECK(j["entrywise_nonnegative"] == false);
    CHECK(j["prime_power"] == "11");
    CHECK(j["charpoly"]["coeffs"] == json::array({"11", "-2", "1"}));

    j = run_json("markov --poly 2,1 --q 2", 2);
    CHECK(j["error"]["code"] == "non_unit_constant_term");
}

TEST_CASE("corner charpoly sequence verb") {
    auto j = run_json(
        "truncate --op '{\"kind\":\"sparse\",\"entries\":[[1,1,2]]}' "
        "--sizes 3,5,7");
    CHECK(j["stabilizing"] == true);
    CHECK(j["raw_equal"] == false);
    CHECK(j["persistent_factor"]["coeffs"] == json::array({"-2", "1"}));
    CHECK(j["sizes"] == json::array({3, 5, 7}));
}

TEST_CASE("mutation verbs: single steps, membership, closure") {
    auto j = run_json("mutate --b [[0,1],[-1,0]] --directions 1");
    CHECK(j["steps"] == 1);
    REQUIRE(j["vars"].size() == 2);

    j = run_json("laurent --b [[0,1],[-1,0]] --directions 1,2,1,2,1");
    CHECK(j["all_laurent"] == true);
    for (const auto& f : j["laurent"]) CHECK(f == true);

    j = run_json("closure --b [[0,1],[-1,0]]");
    CHECK(j["clusters"] == 5);
    CHECK(j["depth"] == 2);
    CHECK(j["variable_count"] == 5);
    CHECK(j["all_laurent"] == true);
    CHECK(j["truncated"] == false);

    j = run_json("closure --b [[0,2,-2],[-2,0,2],[2,-2,0]] --budget 7");
    CHECK(j["clusters"] == 7);
    CHECK(j["truncated"] == true);

    j = run_json("mutate --b [[0,1],[1,0]] --directions 1", 2);
    CHECK(j["error"]["code"] == "not_skew_symmetric");
}

TEST_CASE("special function verbs") {
    auto j = run_json("gamma --kind r --s 2");
    CHECK(std::abs(j["value"]["re"].get<double>() - oracles::kGammaR2) <
          1e-12);
    CHECK(std::abs(j["value"]["im"].get<double>()) < 1e-15);

    j = run_json("gamma --kind c --s 2.5,1.5");
    CHECK(std::abs(j["value"]["re"].get<double>() -
                   oracles::kGammaC25p15i.real()) < 1e-12);

    j = run_json("zeta --s 2");
    CHECK(std::abs(j["value"]["re"].get<double>() - oracles::kZeta2) < 2e-9);

    j = run_json("zeta --s 1", 2);
    CHECK(j["error"]["code"] == "pole_at_one");

    j = run_json("zeta --s 2,60", 2);
    CHECK(j["error"]["code"] == "convergence_domain");

    j = run_json("completed --s 2");
    CHECK(std::abs(j["value"]["re"].get<double>() - oracles::kCompleted2) <
          2e-9);

    j = run_json("char-inf --i 1 --s 3 --check");
    CHECK(std::abs(j["value"]["re"].get<double>() - oracles::kChar1At3) <
          2e-9);
    CHECK(j["routes_consistent"] == true);
    CHECK(j["routes_excluded"] == false);
    CHECK(j["routes_rel_err"].get<double>() <= 1e-10);

    j = run_json("zeros --lo 10 --hi 30");
    CHECK(j["count"] == 3);
    REQUIRE(j["ordinates"].size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(std::abs(j["ordinates"][k].get<double>() -
                       oracles::kZeros1030[k]) <= 1e-6);

    j = run_json("regdet --offset 1 --scale 6.283185307179586");
    CHECK(j["agreement"].get<double>() < 1e-8);
    CHECK(std::abs(j["value"]["re"].get<double>() - 6.2831853071795864769) <
          1e-7);
}

TEST_CASE("product and identity verbs") {
    auto j = run_json("euler --a 1 --b 1 --s 3 --bound 200");
    CHECK(j["bad_primes"] == json::array({2, 31}));
    CHECK(j["primes_used"] == 44);
    CHECK(j["tail_bound"].get<double>() < 0.05);
    CHECK(j["value"]["re"].get<double>() > 1.0);

    j = run_json("l-function --a 1 --b 1 --s 2 --bound 100");
    CHECK(j["value"]["re"].get<double>() > 0.0);

    j = run_json("identity-check --a 1 --b 1 --s 3 --bound 50");
    CHECK(j["ok"] == true);
    CHECK(j["primes_checked"] == 13);
    CHECK(j["failed_primes"] == json::array());

    j = run_json(
        "identity-check --a 1 --b 1 --s 3 --bound 50 --inject-p 13 "
        "--inject-delta 1");
    CHECK(j["ok"] == false);
    CHECK(j["failed_primes"] == json::array({13}));
    CHECK(j["injected_prime"] == 13);
}

TEST_CASE("table rendering stays human-readable") {
    auto res = run("count --a 1 --b 1 --p 7 --format table");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("count: 5") != std::string::npos);
    CHECK(res.out.find("trace: 3") != std::string::npos);

    res = run("snf --matrix [[2,4],[6,8]] --format table");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[2 0]") != std::string::npos);
    CHECK(res.out.find("[0 4]") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").exit_code == 2);               // missing verb
    CHECK(run("no-such-verb").exit_code == 2);   // unknown verb
    CHECK(run("count --no-such-flag 1").exit_code == 2);
    CHECK(run("zeros --lo x --hi 20").exit_code == 2); // unparsable number
    // malformed JSON payload
    const auto j = run_json("snf --matrix [[2,4],[6]", 2);
    CHECK(j["error"]["code"] == "parse");
}
