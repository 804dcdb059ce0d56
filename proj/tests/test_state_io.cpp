// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermicc/rng.hpp"
#include "fermicc/six_mode.hpp"
#include "fermicc/state_io.hpp"

using namespace fermicc;
using nlohmann::json;

TEST_CASE("state parsing") {
  SUBCASE("well-formed state") {
    const json j = {{"fermions", 3},
                    {"modes", 6},
                    {"amplitudes",
                     {{{"indices", {1, 2, 3}}, {"re", 1.0}, {"im", 0.0}},
                      {{"indices", {4, 5, 6}}, {"re", 0.0}, {"im", -2.0}}}}};
    const AntisymTensor t = state_from_json(j);
    CHECK(t.get(1, 2, 3) == cplx(1.0));
    CHECK(t.get(4, 5, 6) == cplx(0.0, -2.0));
    CHECK(t.get(1, 2, 4) == cplx(0.0));
  }

  SUBCASE("omitted re or im default to zero") {
    const json j = {{"fermions", 3},
                    {"modes", 6},
                    {"amplitudes", {{{"indices", {1, 2, 3}}, {"im", 0.5}}}}};
    CHECK(state_from_json(j).get(1, 2, 3) == cplx(0.0, 0.5));
  }

  SUBCASE("rejections") {
    const json base = {{"fermions", 3}, {"modes", 6}};
    json j = base;
    j["amplitudes"] = {{{"indices", {3, 2, 1}}, {"re", 1.0}}};
    CHECK_THROWS_AS((void)state_from_json(j), state_format_error);

    j["amplitudes"] = {{{"indices", {1, 1, 2}}, {"re", 1.0}}};
    CHECK_THROWS_AS((void)state_from_json(j), state_format_error);

    j["amplitudes"] = {{{"indices", {1, 2, 3}}, {"re", 1.0}},
                       {{"indices", {1, 2, 3}}, {"re", 2.0}}};
    CHECK_THROWS_AS((void)state_from_json(j), state_format_error);

    j["amplitudes"] = {{{"indices", {1, 2, 9}}, {"re", 1.0}}};
    CHECK_THROWS_AS((void)state_from_json(j), state_format_error);

    j["amplitudes"] = {{{"indices", {1, 2}}, {"re", 1.0}}};
    CHECK_THROWS_AS((void)state_from_json(j), state_format_error);

    CHECK_THROWS_AS((void)state_from_json(json{{"fermions", 5}, {"modes", 6}}),
                    state_format_error);
    CHECK_THROWS_AS((void)state_from_json(json::array()), state_format_error);
  }

  SUBCASE("round trip through JSON") {
    Rng rng(111);
    const AntisymTensor t = rng.tensor(3, 7);
    const AntisymTensor back = state_from_json(state_to_json(t));
    CHECK(max_abs_diff(t, back) == 0.0);
  }
}

TEST_CASE("reports carry the tolerance and version") {
  const json r6 = report_json(classify6(ghz6()));
  CHECK(r6["class"] == "GHZ");
  CHECK(r6["tolerance"] == 1e-9);
  CHECK(r6["version"] == std::string(library_version));
  CHECK(r6["D"]["re"].get<double>() == doctest::Approx(4.0));

  const json cc = cc_to_json(SixModeCC{});
  CHECK(cc["X"].size() == 3);
  CHECK(cc["X"][0][0]["re"] == 0.0);
}
