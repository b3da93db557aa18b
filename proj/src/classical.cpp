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

#include "qpic/classical.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qpic/rng.hpp"

namespace qpic::classical {

namespace {

void check_masses(double m1, double m2) {
  if (!(m1 > 0.0) || !(m2 > 0.0)) {
    throw std::invalid_argument("masses must be positive");
  }
}

double coordinate(const PhaseSpaceSample& s, std::size_t index) {
  switch (index) {
    case 0: return s.q1;
    case 1: return s.p1;
    case 2: return s.q2;
    case 3: return s.p2;
    default: throw std::invalid_argument("coordinate index must be 0..3");
  }
}

}  // namespace

Ensemble draw_ensemble(const EnsembleConfig& config) {
  if (config.samples == 0) {
    throw std::invalid_argument("ensemble needs at least one sample");
  }
  check_masses(config.m1, config.m2);
  Ensemble e;
  e.m1 = config.m1;
  e.m2 = config.m2;
  e.seed = config.seed;
  e.samples.resize(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    Rng rng = Rng::split(config.seed, i);
    e.samples[i] = {
        rng.gaussian(config.q1.mean, config.q1.stddev),
        rng.gaussian(config.p1.mean, config.p1.stddev),
        rng.gaussian(config.q2.mean, config.q2.stddev),
        rng.gaussian(config.p2.mean, config.p2.stddev),
    };
  }
  return e;
}

PhaseSpaceSample collide(const PhaseSpaceSample& s, double m1, double m2) {
  check_masses(m1, m2);
  const double total = m1 + m2;
  return {
      s.q1,
      ((m1 - m2) * s.p1 + 2.0 * m1 * s.p2) / total,
      s.q2,
      ((m2 - m1) * s.p2 + 2.0 * m2 * s.p1) / total,
  };
}

PhaseSpaceSample free_flight(const PhaseSpaceSample& s, double m1, double m2, double t) {
  check_masses(m1, m2);
  if (t < 0.0) {
    throw std::invalid_argument("flight time must be nonnegative");
  }
  return {s.q1 + (s.p1 / m1) * t, s.p1, s.q2 + (s.p2 / m2) * t, s.p2};
}

Ensemble evolve_ensemble(const Ensemble& e, double t) {
  if (e.samples.empty()) {
    throw std::invalid_argument("ensemble is empty");
  }
  Ensemble out = e;
  for (PhaseSpaceSample& s : out.samples) {
    s = free_flight(collide(s, e.m1, e.m2), e.m1, e.m2, t);
  }
  return out;
}

std::array<std::array<double, 4>, 4> covariance(const Ensemble& e) {
  if (e.samples.size() < 2) {
    throw std::invalid_argument("covariance needs at least two samples");
  }
  const double n = static_cast<double>(e.samples.size());
  std::array<double, 4> mean{};
  for (const PhaseSpaceSample& s : e.samples) {
    for (std::size_t i = 0; i < 4; ++i) mean[i] += coordinate(s, i);
  }
  for (double& m : mean) m /= n;

  std::array<std::array<double, 4>, 4> cov{};
  for (const PhaseSpaceSample& s : e.samples) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        cov[i][j] += (coordinate(s, i) - mean[i]) * (coordinate(s, j) - mean[j]);
      }
    }
  }
  for (auto& row : cov) {
    for (double& c : row) c /= (n - 1.0);
  }
  return cov;
}

double paired_correlation(const Ensemble& x, std::size_t a, const Ensemble& y, std::size_t b) {
  if (x.samples.size() != y.samples.size() || x.samples.size() < 2) {
    throw std::invalid_argument("paired correlation needs equal-sized ensembles");
  }
  const double n = static_cast<double>(x.samples.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    mx += coordinate(x.samples[i], a);
    my += coordinate(y.samples[i], b);
  }
  mx /= n;
  my /= n;
  double cxy = 0.0, cxx = 0.0, cyy = 0.0;
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    const double dx = coordinate(x.samples[i], a) - mx;
    const double dy = coordinate(y.samples[i], b) - my;
    cxy += dx * dy;
    cxx += dx * dx;
    cyy += dy * dy;
  }
  return cxy / std::sqrt(cxx * cyy);
}

double paired_covariance(const Ensemble& x, std::size_t a, const Ensemble& y, std::size_t b) {
  if (x.samples.size() != y.samples.size() || x.samples.size() < 2) {
    throw std::invalid_argument("paired covariance needs equal-sized ensembles");
  }
  const double n = static_cast<double>(x.samples.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    mx += coordinate(x.samples[i], a);
    my += coordinate(y.samples[i], b);
  }
  mx /= n;
  my /= n;
  double cxy = 0.0;
  for (std::size_t i = 0; i < x.samples.size(); ++i) {
    cxy += (coordinate(x.samples[i], a) - mx) * (coordinate(y.samples[i], b) - my);
  }
  return cxy / (n - 1.0);
}

std::string dump(const Ensemble& e) {
  std::string out = "q1 p1 q2 p2\n";
  char buf[160];
  for (const PhaseSpaceSample& s : e.samples) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g\n", s.q1, s.p1, s.q2, s.p2);
    out += buf;
  }
  return out;
}

}  // namespace qpic::classical
