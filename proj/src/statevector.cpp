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

#include "qpic/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpic {

namespace {

constexpr std::size_t kMaxQubits = 24;  // 16M amplitudes; plenty for desk scale

std::size_t checked_dim(std::size_t n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("state-vector qubit count out of range");
  }
  return std::size_t{1} << n;
}

// Bit position of qubit q inside a basis index (qubit 0 = MSB).
inline std::size_t bit_shift(std::size_t n, std::size_t q) { return n - 1 - q; }

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n), amplitudes_(checked_dim(n), Complex{0.0, 0.0}) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dim(n)) {
    throw std::invalid_argument("amplitude count must be 2^n");
  }
}

StateVector StateVector::from_ket(std::string_view ket) {
  if (ket.size() >= 2 && ket.front() == '|' && ket.back() == '>') {
    ket = ket.substr(1, ket.size() - 2);
  }
  if (ket.empty()) {
    throw std::invalid_argument("empty ket");
  }
  const std::size_t n = ket.size();
  std::vector<Complex> amps(checked_dim(n), Complex{0.0, 0.0});
  amps[0] = 1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Build the product state one qubit at a time over the full index space.
  for (std::size_t q = 0; q < n; ++q) {
    Complex a0, a1;
    switch (ket[q]) {
      case '0': a0 = 1.0; a1 = 0.0; break;
      case '1': a0 = 0.0; a1 = 1.0; break;
      case '+': a0 = inv_sqrt2; a1 = inv_sqrt2; break;
      case '-': a0 = inv_sqrt2; a1 = -inv_sqrt2; break;
      default:
        throw std::invalid_argument(std::string("ket characters must be 0,1,+,-; got '") +
                                    ket[q] + "'");
    }
    const std::size_t mask = std::size_t{1} << bit_shift(n, q);
    for (std::size_t b = amps.size(); b-- > 0;) {
      if (b & mask) {
        amps[b] = amps[b & ~mask] * a1;
      }
    }
    for (std::size_t b = 0; b < amps.size(); ++b) {
      if (!(b & mask)) amps[b] *= a0;
    }
  }
  return StateVector(n, std::move(amps));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector apply_gate(const StateVector& state, const GateOp& g) {
  const std::size_t n = state.num_qubits();
  g.validate(n);
  const dense::Matrix u = g.local_unitary();
  const std::size_t k = g.support.size();
  const std::size_t block = std::size_t{1} << k;

  std::vector<std::size_t> masks(k);
  for (std::size_t j = 0; j < k; ++j) {
    // support[j] is the most significant sub-index bit first
    masks[j] = std::size_t{1} << bit_shift(n, g.support[j]);
  }
  std::size_t support_mask = 0;
  for (std::size_t m : masks) support_mask |= m;

  std::vector<Complex> out = state.amplitudes();
  std::vector<std::size_t> idx(block);
  std::vector<Complex> scratch(block);
  for (std::size_t base = 0; base < out.size(); ++base) {
    if (base & support_mask) continue;
    for (std::size_t s = 0; s < block; ++s) {
      std::size_t b = base;
      for (std::size_t j = 0; j < k; ++j) {
        if ((s >> (k - 1 - j)) & 1) b |= masks[j];
      }
      idx[s] = b;
      scratch[s] = out[b];
    }
    for (std::size_t r = 0; r < block; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < block; ++c) {
        acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * scratch[c];
      }
      out[idx[r]] = acc;
    }
  }
  return StateVector(n, std::move(out));
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
  const std::size_t n = state.num_qubits();
  if (p.num_qubits() != n) {
    throw std::invalid_argument("PauliString length does not match state");
  }
  std::size_t flip_mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    Letter l = p.letter(q);
    if (l == Letter::X || l == Letter::Y) {
      flip_mask |= std::size_t{1} << bit_shift(n, q);
    }
  }
  std::vector<Complex> out(state.dim(), Complex{0.0, 0.0});
  const Complex base_phase = p.phase();
  for (std::size_t b = 0; b < state.dim(); ++b) {
    Complex c = base_phase * state.amplitude(b);
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (b >> bit_shift(n, q)) & 1;
      switch (p.letter(q)) {
        case Letter::I:
        case Letter::X:
          break;
        case Letter::Y:
          c *= bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
          break;
        case Letter::Z:
          if (bit) c = -c;
          break;
      }
    }
    out[b ^ flip_mask] += c;
  }
  return StateVector(n, std::move(out));
}

StateVector run_circuit(const Circuit& c, const StateVector& initial) {
  if (c.n != initial.num_qubits()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  StateVector state = initial;
  for (const GateOp& g : c.gates) {
    state = apply_gate(state, g);
  }
  return state;
}

Complex expectation(const StateVector& state, const PauliString& obs) {
  StateVector transformed = apply_pauli(state, obs);
  return overlap(state, transformed);
}

Complex expectation(const StateVector& state, const PauliSum& obs) {
  if (obs.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("observable and state qubit counts differ");
  }
  Complex total{0.0, 0.0};
  for (const auto& [word, c] : obs.terms()) {
    std::vector<Letter> letters;
    letters.reserve(word.size());
    for (char ch : word) letters.push_back(letter_from_char(ch));
    total += c * expectation(state, PauliString(std::move(letters)));
  }
  return total;
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("state qubit counts differ");
  }
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return acc;
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(overlap(a, b));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b) {
  return overlap_magnitude(a, b) >= 1.0 - kPhaseEqTol;
}

dense::Matrix reduced_density_matrix(const StateVector& state,
                                     const std::vector<std::size_t>& keep) {
  const std::size_t n = state.num_qubits();
  if (keep.empty()) {
    throw std::invalid_argument("keep set must be nonempty");
  }
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("keep set has duplicates");
  }
  if (kept.back() >= n) {
    throw std::invalid_argument("keep index out of range");
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const std::size_t kdim = std::size_t{1} << kept.size();
  const std::size_t tdim = std::size_t{1} << traced.size();
  auto assemble = [&](std::size_t kbits, std::size_t tbits) {
    std::size_t b = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if ((kbits >> (kept.size() - 1 - j)) & 1) b |= std::size_t{1} << bit_shift(n, kept[j]);
    }
    for (std::size_t j = 0; j < traced.size(); ++j) {
      if ((tbits >> (traced.size() - 1 - j)) & 1) b |= std::size_t{1} << bit_shift(n, traced[j]);
    }
    return b;
  };

  dense::Matrix rho = dense::Matrix::Zero(static_cast<Eigen::Index>(kdim),
                                          static_cast<Eigen::Index>(kdim));
  for (std::size_t r = 0; r < kdim; ++r) {
    for (std::size_t c = 0; c < kdim; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t = 0; t < tdim; ++t) {
        acc += state.amplitude(assemble(r, t)) * std::conj(state.amplitude(assemble(c, t)));
      }
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return rho;
}

dense::Vector to_dense(const StateVector& state) {
  dense::Vector v(static_cast<Eigen::Index>(state.dim()));
  for (std::size_t i = 0; i < state.dim(); ++i) {
    v(static_cast<Eigen::Index>(i)) = state.amplitude(i);
  }
  return v;
}

dense::Matrix projector(const StateVector& state) {
  dense::Vector v = to_dense(state);
  return v * v.adjoint();
}

}  // namespace qpic
