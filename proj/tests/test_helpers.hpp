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

#include <vector>

#include "qpic/dense.hpp"
#include "qpic/gates.hpp"
#include "qpic/pauli.hpp"
#include "qpic/rng.hpp"
#include "qpic/statevector.hpp"

namespace qpic::test {

inline PauliString random_string(Rng& rng, std::size_t n) {
  std::vector<Letter> letters(n);
  for (std::size_t q = 0; q < n; ++q) {
    letters[q] = static_cast<Letter>(rng.next_u64() % 4);
  }
  return PauliString(std::move(letters), static_cast<int>(rng.next_u64() % 4));
}

inline PauliSum random_sum(Rng& rng, std::size_t n, std::size_t terms) {
  PauliSum s(n);
  for (std::size_t i = 0; i < terms; ++i) {
    s.add_term(random_string(rng, n),
               Complex{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
  }
  return s;
}

inline PauliSum random_hermitian_sum(Rng& rng, std::size_t n, std::size_t terms) {
  PauliSum s(n);
  for (std::size_t i = 0; i < terms; ++i) {
    PauliString word = random_string(rng, n).with_phase_exp(0);
    s.add_term(word, Complex{rng.uniform(-2.0, 2.0), 0.0});
  }
  return s;
}

/// Haar-ish random pure state from complex Gaussian amplitudes.
inline StateVector random_state(Rng& rng, std::size_t n) {
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm_sq = 0.0;
  for (Complex& a : amps) {
    a = {rng.gaussian(), rng.gaussian()};
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Complex& a : amps) a *= scale;
  return StateVector(n, std::move(amps));
}

/// Oracle-side circuit unitary, built purely from Kronecker placement.
inline dense::Matrix circuit_unitary(const Circuit& c) {
  const auto dim = static_cast<Eigen::Index>(1) << c.n;
  dense::Matrix u = dense::Matrix::Identity(dim, dim);
  for (const GateOp& g : c.gates) {
    u = g.full_unitary(c.n) * u;
  }
  return u;
}

/// Oracle-side expectation <psi|O|psi> through Eigen only.
inline Complex dense_expectation(const StateVector& psi, const PauliSum& obs) {
  const dense::Vector v = to_dense(psi);
  return (v.adjoint() * dense::to_dense(obs) * v)(0, 0);
}

}  // namespace qpic::test
