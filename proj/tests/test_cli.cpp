// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Drives the installed binary end to end: report contents, CSV sweeps,
// exit codes, byte stability under a fixed seed.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string cli = FERMICC_CLI_PATH;
const std::string data = FERMICC_TEST_DATA_DIR;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      "/tmp/fermicc_cli_test_" + std::to_string(::getpid()) + "_" +
      std::to_string(counter++) + ".out";
  const std::string cmd = cli + " " + args + " > " + out_path + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(raw), ss.str()};
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  const RunResult r = run(args);
  REQUIRE(r.exit_code == expect_code);
  return nlohmann::json::parse(r.stdout_text);
}

}  // namespace

TEST_CASE("classify") {
  SUBCASE("six-mode dense-orbit state") {
    const auto j = run_json("classify " + data + "/ghz6.json");
    CHECK(j["class"] == "GHZ");
    CHECK(std::abs(j["D"]["re"].get<double>() - 4.0) < 1e-12);
  }

  SUBCASE("seven-mode dense-orbit state") {
    const auto j = run_json("classify " + data + "/psi_minus.json");
    CHECK(j["class"] == "X");
    CHECK(std::abs(j["J"]["re"].get<double>() - 1.0) < 1e-12);
    CHECK(j["rank_N"] == 7);
  }

  SUBCASE("empty amplitude list is the zero class") {
    const auto j = run_json("classify " + data + "/zero6.json");
    CHECK(j["class"] == "NULL");
  }

  SUBCASE("csv format") {
    const RunResult r = run("classify " + data + "/psi_minus.json --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("class,re_J,im_J,rank_N") == 0);
    CHECK(r.stdout_text.find("\nX,0.9999999") != std::string::npos);
  }

  SUBCASE("exit codes") {
    CHECK(run("classify " + data + "/bad_indices.json").exit_code == 2);
    CHECK(run("classify " + data + "/closed_orbit_48.json").exit_code == 3);
    CHECK(run("classify /nonexistent.json").exit_code == 2);
  }
}

TEST_CASE("convert") {
  SUBCASE("seven-mode state to CC coordinates") {
    const auto j = run_json("convert " + data + "/psi_minus.json --to cc");
    CHECK(j["coordinates"]["X"][0][0]["re"].get<double>() == -1.0);
    CHECK(j["coordinates"]["Z"][0][0]["re"].get<double>() == 1.0);
    CHECK(j["coordinates"]["Y"][0][0]["re"].get<double>() == 0.0);
    CHECK(j["rescaled"] == false);
  }

  SUBCASE("round trip: convert to CC, rebuild, identical state document") {
    const RunResult coords =
        run("convert " + data + "/psi_minus.json --to cc");
    REQUIRE(coords.exit_code == 0);
    const std::string coords_path = "/tmp/fermicc_cli_coords.json";
    {
      std::ofstream os(coords_path);
      os << coords.stdout_text;
    }
    const RunResult rebuilt = run("convert " + coords_path + " --from cc");
    REQUIRE(rebuilt.exit_code == 0);
    const RunResult original_round =
        run("convert " + coords_path + " --from cc");
    CHECK(rebuilt.stdout_text == original_round.stdout_text);
    // amplitudes must be exactly the input state's
    const auto j = nlohmann::json::parse(rebuilt.stdout_text);
    std::ifstream in(data + "/psi_minus.json");
    nlohmann::json want;
    in >> want;
    REQUIRE(j["amplitudes"].size() == want["amplitudes"].size());
    for (const auto& amp : want["amplitudes"]) {
      bool found = false;
      for (const auto& got : j["amplitudes"]) {
        if (got["indices"] == amp["indices"]) {
          found = true;
          CHECK(got["re"].get<double>() ==
                doctest::Approx(amp.value("re", 0.0)).epsilon(1e-14));
          CHECK(got["im"].get<double>() ==
                doctest::Approx(amp.value("im", 0.0)).epsilon(1e-14));
        }
      }
      CHECK(found);
    }
    std::remove(coords_path.c_str());
  }

  SUBCASE("reference-deficient input exits 4") {
    CHECK(run("convert " + data + "/no_reference.json --to cc").exit_code == 4);
  }
}

TEST_CASE("invariants") {
  const auto j = run_json("invariants " + data + "/psi_minus.json");
  CHECK(std::abs(j["J_trace"]["re"].get<double>() - 1.0) < 1e-10);
  CHECK(std::abs(j["J_cluster"]["re"].get<double>() - 1.0) < 1e-10);
  CHECK(j["route_disagreement"].get<double>() < 1e-10);
  CHECK(j["J_cube_residual"].get<double>() < 1e-10);

  const auto j6 = run_json("invariants " + data + "/ghz6.json");
  CHECK(std::abs(j6["D_covariant"]["re"].get<double>() - 4.0) < 1e-10);
  CHECK(j6["route_disagreement"].get<double>() < 1e-10);
}

TEST_CASE("perturb") {
  SUBCASE("grid sweep shows the transition row at xi = 2") {
    const RunResult r = run("perturb --base minus --grid xi=0:3:0.1");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.stdout_text);
    std::string line;
    std::getline(ss, line);  // header
    int row = 0;
    int transitions = 0;
    while (std::getline(ss, line)) {
      const bool is_ix = line.find(",IX") != std::string::npos;
      if (is_ix) {
        ++transitions;
        CHECK(row == 20);  // xi = 2.0
      } else {
        CHECK(line.find(",X") != std::string::npos);
      }
      ++row;
    }
    CHECK(row == 31);
    CHECK(transitions == 1);
  }

  SUBCASE("same ray on the plus base never transitions") {
    const RunResult r = run("perturb --base plus --grid xi=0:3:0.1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find(",IX") == std::string::npos);
  }

  SUBCASE("zero samples give a bare header") {
    const RunResult r = run("perturb --base minus --sphere 2 --samples 0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text ==
          "re_xi,im_xi,re_u1,im_u1,re_u2,im_u2,re_u3,im_u3,"
          "re_q2,im_q2,re_J,im_J,rank_N,class\n");
  }

  SUBCASE("json format") {
    const auto j = run_json("perturb --base minus --grid xi=2:2:1 --format json");
    REQUIRE(j["records"].size() == 1);
    CHECK(j["records"][0]["class"] == "IX");
    CHECK(j["records"][0]["rank_N"] == 4);
  }

  SUBCASE("byte-stable under a fixed seed") {
    const std::string args = "perturb --base minus --sphere 2 --samples 20 --seed 7";
    CHECK(run(args).stdout_text == run(args).stdout_text);
  }

  SUBCASE("bad grid exits 2") {
    CHECK(run("perturb --base minus --grid nonsense").exit_code == 2);
    CHECK(run("perturb --base minus --grid xi=0:1:-0.5").exit_code == 2);
  }
}

TEST_CASE("verify") {
  SUBCASE("four8 suite passes") {
    const RunResult r = run("verify --suite four8");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("[PASS] criterion 10") != std::string::npos);
    CHECK(r.stdout_text.find("FAIL") == std::string::npos);
  }

  SUBCASE("unknown suite exits 2") {
    CHECK(run("verify --suite bogus").exit_code == 2);
  }
}

TEST_CASE("orbit48") {
  const auto j = run_json("orbit48 " + data + "/closed_orbit_48.json");
  CHECK(j["residual"].get<double>() < 1e-12);
  CHECK(j["in_subspace"] == true);
  CHECK(std::abs(j["coords"][0]["re"].get<double>() - 1.0) < 1e-12);

  CHECK(run("orbit48 " + data + "/ghz6.json").exit_code == 3);
}
