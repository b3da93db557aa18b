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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qpic::classical {

/// One c-number draw: two particles on a line.
struct PhaseSpaceSample {
  double q1, p1, q2, p2;
};

/// Independent Gaussian draws per coordinate; the initial distribution
/// factorizes between the particles (and between q and p).
struct GaussianSpec {
  double mean = 0.0;
  double stddev = 1.0;
};

struct EnsembleConfig {
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  double m1 = 1.0;
  double m2 = 1.0;
  GaussianSpec q1{-5.0, 1.0};
  GaussianSpec p1{+1.0, 1.0};
  GaussianSpec q2{+5.0, 1.0};
  GaussianSpec p2{-1.0, 1.0};
};

struct Ensemble {
  std::vector<PhaseSpaceSample> samples;
  double m1 = 1.0;
  double m2 = 1.0;
  std::uint64_t seed = 0;
};

/// Seeded product-form initial ensemble. Sample i is drawn from a stream
/// split by (seed, i), so the ensemble does not depend on draw order.
Ensemble draw_ensemble(const EnsembleConfig& config);

/// Elastic collision: momenta jump by conservation of momentum and
/// kinetic energy, positions are continuous through the instant.
///   p1' = ((m1 - m2) p1 + 2 m1 p2) / (m1 + m2)
///   p2' = ((m2 - m1) p2 + 2 m2 p1) / (m1 + m2)
PhaseSpaceSample collide(const PhaseSpaceSample& s, double m1, double m2);

/// Ballistic drift: q_i += (p_i / m_i) t, momenta unchanged.
PhaseSpaceSample free_flight(const PhaseSpaceSample& s, double m1, double m2, double t);

/// Collide every sample at t0, then free-fly for time t.
Ensemble evolve_ensemble(const Ensemble& e, double t);

/// Sample covariance (unbiased) of (q1, p1, q2, p2).
std::array<std::array<double, 4>, 4> covariance(const Ensemble& e);

/// Pearson correlation between coordinate `a` of `x` and coordinate `b` of
/// `y`, paired sample-by-sample. Coordinates: 0=q1, 1=p1, 2=q2, 3=p2.
double paired_correlation(const Ensemble& x, std::size_t a, const Ensemble& y, std::size_t b);

/// Unbiased covariance across two ensembles, paired sample-by-sample.
double paired_covariance(const Ensemble& x, std::size_t a, const Ensemble& y, std::size_t b);

/// Delimited text columns "q1 p1 q2 p2", one sample per line.
std::string dump(const Ensemble& e);

}  // namespace qpic::classical
