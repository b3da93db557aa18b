// Copyright 2026 The qpic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpic/gates.hpp"
#include "qpic/heisenberg.hpp"
#include "qpic/scenarios.hpp"
#include "test_helpers.hpp"

using namespace qpic;

namespace {

bool throws_mentioning(const std::string& text, const std::string& needle) {
  try {
    Circuit::parse(text);
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("circuit text round-trips, including kick angles") {
  Circuit c(3, {GateOp::h(1), GateOp::cz(0, 1), GateOp::phase(0, M_PI),
                GateOp::phase(2, 0.1234567890123456789), GateOp::cx(2, 0)});
  CHECK(Circuit::parse(c.str()) == c);

  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    const Circuit random = random_circuit(rng, 2 + rng.next_u64() % 4, 12);
    CHECK(Circuit::parse(random.str()) == random);
  }
}

TEST_CASE("circuit grammar: directives, comments, inferred width") {
  const Circuit c = Circuit::parse("# entangler\n\nqubits 3\nH 1\nCZ 0 1  # comment\n");
  CHECK(c.n == 3);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0] == GateOp::h(1));

  // width inferred from the largest index when no directive is given
  CHECK(Circuit::parse("CZ 0 2\n").n == 3);
  CHECK(Circuit::parse("").n == 1);
  CHECK(Circuit::parse("phase 0 1.5\n").gates[0].kind == GateKind::Phase);
}

TEST_CASE("circuit parse errors name the offending line") {
  CHECK(throws_mentioning("H 0\nFLIP 1\n", "line 2"));
  CHECK(throws_mentioning("H 0\nFLIP 1\n", "FLIP"));
  CHECK(throws_mentioning("H 0 1\n", "line 1"));
  CHECK(throws_mentioning("PHASE 0\n", "PHASE"));
  CHECK(throws_mentioning("PHASE 0 abc\n", "angle"));
  CHECK(throws_mentioning("CZ 1 1\n", "distinct"));
  CHECK(throws_mentioning("H x\n", "index"));
  CHECK(throws_mentioning("H -1\n", "index"));
  CHECK(throws_mentioning("qubits 1\nH 1\n", "out of range"));
  CHECK(throws_mentioning("qubits 2\nqubits 2\n", "duplicate"));
}

TEST_CASE("gate inverses undo themselves in the dense oracle") {
  Rng rng(72);
  for (int i = 0; i < 30; ++i) {
    const Circuit c = random_circuit(rng, 2, 1);
    const GateOp g = c.gates[0];
    const dense::Matrix u = g.full_unitary(2);
    const dense::Matrix v = g.inverse().full_unitary(2);
    CHECK(dense::max_abs_diff(v * u, dense::Matrix::Identity(4, 4)) <= 1e-12);
  }
  const dense::Matrix s = GateOp::s(0).full_unitary(1);
  const dense::Matrix s_inv = GateOp::s(0).inverse().full_unitary(1);
  CHECK(dense::max_abs_diff(s_inv * s, dense::Matrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("reports render deterministically") {
  ScenarioOptions options;
  const std::string a = run_scenario("cz-entangler", options).to_json().dump(2);
  const std::string b = run_scenario("cz-entangler", options).to_json().dump(2);
  CHECK(a == b);

  options.seed = 9;
  options.samples = 200;
  const std::string c = run_scenario("chsh", options).to_json().dump(2);
  const std::string d = run_scenario("chsh", options).to_json().dump(2);
  CHECK(c == d);
}

TEST_CASE("scenario names are stable and unknown names are rejected") {
  CHECK(scenario_names().size() == 7);
  CHECK_THROWS_AS(run_scenario("nope", ScenarioOptions{}), std::invalid_argument);
}

TEST_CASE("backend comparison agrees on the entangled stabilizers") {
  const Circuit c = Circuit::parse("qubits 2\nCZ 0 1\n");
  const auto observables =
      parse_named_observables("sxz = 1*XZ\nszx = 1*ZX\nsyy = 1*YY\n");
  const Report report = run_backend_comparison(c, "++", observables);
  CHECK(report.pass());
  for (const auto& row : report.extra["expectations"]) {
    CHECK(std::abs(row["schrodinger"][0].get<double>() - 1.0) <= 1e-9);
  }
}

TEST_CASE("backend comparison flags dimension mismatches") {
  const Circuit c = Circuit::parse("qubits 2\nCZ 0 1\n");
  CHECK_THROWS_AS(run_backend_comparison(c, "+", {}), std::invalid_argument);
  const auto observables = parse_named_observables("a = 1*X\n");
  CHECK_THROWS_AS(run_backend_comparison(c, "++", observables), std::invalid_argument);
}
