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

#include "qpic/classical.hpp"
#include "qpic/rng.hpp"

using namespace qpic;
using namespace qpic::classical;

TEST_CASE("equal masses swap the momenta exactly") {
  const PhaseSpaceSample s{0.0, 3.25, 1.0, -1.5};
  const PhaseSpaceSample out = collide(s, 1.0, 1.0);
  CHECK(out.p1 == s.p2);
  CHECK(out.p2 == s.p1);
  CHECK(out.q1 == s.q1);
  CHECK(out.q2 == s.q2);
}

TEST_CASE("no relative motion means no collision effect") {
  // equal masses, equal momenta
  const PhaseSpaceSample s{-1.0, 0.75, 2.0, 0.75};
  const PhaseSpaceSample out = collide(s, 2.0, 2.0);
  CHECK(std::abs(out.p1 - s.p1) <= 1e-15);
  CHECK(std::abs(out.p2 - s.p2) <= 1e-15);

  // unequal masses, equal velocities
  const PhaseSpaceSample t{-1.0, 2.0 * 0.75, 2.0, 5.0 * 0.75};
  const PhaseSpaceSample out2 = collide(t, 2.0, 5.0);
  CHECK(std::abs(out2.p1 - t.p1) <= 1e-12);
  CHECK(std::abs(out2.p2 - t.p2) <= 1e-12);
}

TEST_CASE("a very heavy resting partner acts as a wall") {
  const PhaseSpaceSample s{0.0, 0.5, 1.0, 0.0};
  const PhaseSpaceSample out = collide(s, 1.0, 1e6);
  CHECK(std::abs(out.p1 + s.p1) <= 1e-6);
  // exact closed form at p2 = 0: p1' = p1 (m1 - m2) / (m1 + m2)
  CHECK(out.p1 == s.p1 * (1.0 - 1e6) / (1.0 + 1e6));
}

TEST_CASE("collisions conserve momentum and kinetic energy per sample") {
  Rng rng(61);
  for (int i = 0; i < 2000; ++i) {
    const double m1 = rng.uniform(0.1, 10.0);
    const double m2 = rng.uniform(0.1, 10.0);
    const PhaseSpaceSample s{rng.gaussian(), rng.gaussian(0, 2), rng.gaussian(),
                             rng.gaussian(0, 2)};
    const PhaseSpaceSample out = collide(s, m1, m2);
    CHECK(std::abs((out.p1 + out.p2) - (s.p1 + s.p2)) <= 1e-12);
    const double e0 = s.p1 * s.p1 / (2 * m1) + s.p2 * s.p2 / (2 * m2);
    const double e1 = out.p1 * out.p1 / (2 * m1) + out.p2 * out.p2 / (2 * m2);
    CHECK(std::abs(e1 - e0) <= 1e-10 * std::max(1.0, e0));
  }
}

TEST_CASE("free flight moves positions linearly and composes in t") {
  const PhaseSpaceSample s{0.0, 1.0, 5.0, -2.0};
  CHECK(free_flight(s, 1.0, 1.0, 0.0).q1 == s.q1);
  const PhaseSpaceSample moved = free_flight(s, 1.0, 1.0, 2.0);
  CHECK(std::abs(moved.q1 - 2.0) <= 1e-15);
  CHECK(moved.p1 == s.p1);

  const PhaseSpaceSample two_steps =
      free_flight(free_flight(s, 1.0, 2.0, 0.75), 1.0, 2.0, 1.25);
  const PhaseSpaceSample one_step = free_flight(s, 1.0, 2.0, 2.0);
  CHECK(std::abs(two_steps.q1 - one_step.q1) <= 1e-12);
  CHECK(std::abs(two_steps.q2 - one_step.q2) <= 1e-12);
}

TEST_CASE("preconditions: masses, time, ensembles") {
  const PhaseSpaceSample s{0, 0, 0, 0};
  CHECK_THROWS_AS(collide(s, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(collide(s, 1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(free_flight(s, 1.0, 1.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(evolve_ensemble(Ensemble{}, 1.0), std::invalid_argument);
  EnsembleConfig empty;
  empty.samples = 0;
  CHECK_THROWS_AS(draw_ensemble(empty), std::invalid_argument);
}

TEST_CASE("seeded draws are reproducible and order-independent") {
  EnsembleConfig config;
  config.samples = 1000;
  config.seed = 77;
  const Ensemble a = draw_ensemble(config);
  const Ensemble b = draw_ensemble(config);
  for (std::size_t i = 0; i < config.samples; ++i) {
    CHECK(a.samples[i].q1 == b.samples[i].q1);
    CHECK(a.samples[i].p2 == b.samples[i].p2);
  }
  config.seed = 78;
  const Ensemble c = draw_ensemble(config);
  CHECK(c.samples[0].q1 != a.samples[0].q1);
}

TEST_CASE("initial cross covariances vanish at the sampling tolerance") {
  EnsembleConfig config;
  config.samples = 100000;
  config.seed = 5;
  const Ensemble e = draw_ensemble(config);
  const auto cov = covariance(e);
  const double sigma[4] = {config.q1.stddev, config.p1.stddev, config.q2.stddev,
                           config.p2.stddev};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(cov[i][i] - sigma[i] * sigma[i]) <=
          5.0 * sigma[i] * sigma[i] / std::sqrt(static_cast<double>(config.samples) / 2));
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double se = sigma[i] * sigma[j] / std::sqrt(static_cast<double>(config.samples));
      CHECK(std::abs(cov[i][j]) <= 4.0 * se);
      CHECK(cov[i][j] == cov[j][i]);
    }
  }
}

TEST_CASE("the collision builds perfect momentum correlation with the partner's draw") {
  EnsembleConfig config;
  config.samples = 100000;
  config.seed = 6;
  const Ensemble initial = draw_ensemble(config);
  const Ensemble evolved = evolve_ensemble(initial, 1.0);
  CHECK(std::abs(paired_correlation(evolved, 1, initial, 3) - 1.0) <= 1e-12);
  CHECK(std::abs(paired_correlation(evolved, 3, initial, 1) - 1.0) <= 1e-12);
}

TEST_CASE("position-momentum cross covariance grows linearly in flight time") {
  EnsembleConfig config;
  config.samples = 50000;
  config.seed = 7;
  const Ensemble initial = draw_ensemble(config);
  const double var_p2 = paired_covariance(initial, 3, initial, 3);
  const double base = paired_covariance(initial, 0, initial, 3);
  for (double t : {1.0, 2.0, 4.0}) {
    const Ensemble at_t = evolve_ensemble(initial, t);
    const double observed = paired_covariance(at_t, 0, initial, 3);
    CHECK(std::abs(observed - (base + t * var_p2 / config.m1)) <= 1e-9);
  }
}

TEST_CASE("ensemble dumps are one labelled row per sample") {
  EnsembleConfig config;
  config.samples = 3;
  const std::string text = dump(draw_ensemble(config));
  CHECK(text.rfind("q1 p1 q2 p2\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}
