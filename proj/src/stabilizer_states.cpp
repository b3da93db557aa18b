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

#include "qpic/stabilizer_states.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "qpic/conjugation.hpp"
#include "qpic/dense.hpp"

namespace qpic {

namespace {

// All 2^n group elements from n generators, exact phases included.
std::vector<PauliString> group_elements(const std::vector<PauliString>& generators) {
  const std::size_t n = generators[0].num_qubits();
  std::vector<PauliString> elements{PauliString::identity(n)};
  for (const PauliString& g : generators) {
    const std::size_t count = elements.size();
    for (std::size_t i = 0; i < count; ++i) {
      elements.push_back(elements[i] * g);
    }
  }
  return elements;
}

std::string group_key(std::vector<PauliString> elements) {
  std::vector<std::string> texts;
  texts.reserve(elements.size());
  for (const PauliString& e : elements) texts.push_back(e.str());
  std::sort(texts.begin(), texts.end());
  std::string key;
  for (const std::string& t : texts) {
    key += t;
    key += ';';
  }
  return key;
}

// Greedy independent subset via a reduced F2 basis over the (x|z) encoding.
std::vector<PauliString> extract_generators(const std::vector<PauliString>& elements,
                                            std::size_t n) {
  // basis rows are kept fully reduced: distinct pivots, and no row has a
  // one in another row's pivot column
  std::vector<std::pair<std::size_t, std::vector<int>>> basis;
  std::vector<PauliString> generators;
  for (const PauliString& e : elements) {
    if (generators.size() == n) break;
    std::vector<int> row(2 * n, 0);
    for (std::size_t q = 0; q < n; ++q) {
      Letter l = e.letter(q);
      if (l == Letter::X || l == Letter::Y) row[q] = 1;
      if (l == Letter::Z || l == Letter::Y) row[n + q] = 1;
    }
    for (const auto& [pivot, b] : basis) {
      if (row[pivot]) {
        for (std::size_t c = 0; c < row.size(); ++c) row[c] ^= b[c];
      }
    }
    auto lead = std::find(row.begin(), row.end(), 1);
    if (lead == row.end()) continue;  // dependent on the basis so far
    const auto pivot = static_cast<std::size_t>(lead - row.begin());
    for (auto& [p, b] : basis) {
      if (b[pivot]) {
        for (std::size_t c = 0; c < row.size(); ++c) b[c] ^= row[c];
      }
    }
    basis.emplace_back(pivot, std::move(row));
    generators.push_back(e);
  }
  if (generators.size() != n) {
    throw std::logic_error("stabilizer group has deficient rank");
  }
  return generators;
}

}  // namespace

std::vector<StabilizerState> enumerate_stabilizer_states(std::size_t n) {
  if (n == 0 || n > 5) {
    throw std::invalid_argument("stabilizer enumeration supported for 1 <= n <= 5");
  }

  std::vector<GateOp> moves;
  for (std::size_t q = 0; q < n; ++q) {
    moves.push_back(GateOp::h(q));
    moves.push_back(GateOp::s(q));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      moves.push_back(GateOp::cz(a, b));
    }
  }

  std::vector<PauliString> start;
  for (std::size_t q = 0; q < n; ++q) {
    start.push_back(PauliString::single(n, q, Letter::Z));
  }

  std::vector<StabilizerState> states;
  std::unordered_set<std::string> seen;
  std::deque<std::vector<PauliString>> frontier;  // element lists

  auto visit = [&](std::vector<PauliString> elements) {
    std::string key = group_key(elements);
    if (!seen.insert(std::move(key)).second) return;
    states.push_back({extract_generators(elements, n)});
    frontier.push_back(std::move(elements));
  };

  visit(group_elements(start));
  while (!frontier.empty()) {
    std::vector<PauliString> elements = std::move(frontier.front());
    frontier.pop_front();
    for (const GateOp& g : moves) {
      std::vector<PauliString> moved;
      moved.reserve(elements.size());
      for (const PauliString& e : elements) {
        moved.push_back(conjugate_string_clifford(e, g, ConjugationDirection::Schrodinger));
      }
      visit(std::move(moved));
    }
  }
  return states;
}

FactoredState to_factored(const StabilizerState& s) {
  return FactoredState::init_from_strings(s.generators);
}

StateVector to_statevector(const StabilizerState& s) {
  const std::size_t n = s.generators[0].num_qubits();
  dense::Matrix rho = dense::to_dense(expand(to_factored(s)));
  dense::Vector v = dense::top_eigenvector(rho);
  std::vector<Complex> amps(v.data(), v.data() + v.size());
  return StateVector(n, std::move(amps));
}

}  // namespace qpic
