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

#include "qpic/product_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpic {

namespace {

// F2 rank of the symplectic (x|z) rows; full rank means independent.
std::size_t symplectic_rank(const std::vector<PauliString>& strings) {
  if (strings.empty()) return 0;
  const std::size_t n = strings[0].num_qubits();
  std::vector<std::vector<int>> rows;
  for (const PauliString& s : strings) {
    std::vector<int> row(2 * n, 0);
    for (std::size_t q = 0; q < n; ++q) {
      Letter l = s.letter(q);
      if (l == Letter::X || l == Letter::Y) row[q] = 1;
      if (l == Letter::Z || l == Letter::Y) row[n + q] = 1;
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t c = 0; c < 2 * n; ++c) rows[r][c] ^= rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

bool supports_intersect(const PauliSum& sum, const std::vector<std::size_t>& qubits) {
  for (const auto& [word, c] : sum.terms()) {
    (void)c;
    for (std::size_t q : qubits) {
      if (word[q] != 'I') return true;
    }
  }
  return false;
}

}  // namespace

FactoredState FactoredState::init_plus(std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("init_plus needs n >= 1");
  }
  std::vector<PauliString> generators;
  generators.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    generators.push_back(PauliString::single(n, q, Letter::X));
  }
  return init_from_strings(generators);
}

FactoredState FactoredState::from_ket(std::string_view ket) {
  if (ket.size() >= 2 && ket.front() == '|' && ket.back() == '>') {
    ket = ket.substr(1, ket.size() - 2);
  }
  if (ket.empty()) {
    throw std::invalid_argument("empty ket");
  }
  const std::size_t n = ket.size();
  std::vector<PauliString> generators;
  for (std::size_t q = 0; q < n; ++q) {
    switch (ket[q]) {
      case '0': generators.push_back(PauliString::single(n, q, Letter::Z)); break;
      case '1': generators.push_back(PauliString::single(n, q, Letter::Z, 2)); break;
      case '+': generators.push_back(PauliString::single(n, q, Letter::X)); break;
      case '-': generators.push_back(PauliString::single(n, q, Letter::X, 2)); break;
      default:
        throw std::invalid_argument(std::string("ket characters must be 0,1,+,-; got '") +
                                    ket[q] + "'");
    }
  }
  return init_from_strings(generators);
}

FactoredState FactoredState::init_from_strings(const std::vector<PauliString>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("need at least one generator");
  }
  const std::size_t n = generators[0].num_qubits();
  if (generators.size() != n) {
    throw std::invalid_argument("need exactly n generators for a pure n-qubit state");
  }
  for (const PauliString& g : generators) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("generator lengths differ");
    }
    if (!g.is_hermitian()) {
      throw std::invalid_argument("generator " + g.str() + " is not Hermitian");
    }
    if (g.is_identity_word()) {
      throw std::invalid_argument("identity is not a valid generator");
    }
  }
  for (std::size_t a = 0; a < generators.size(); ++a) {
    for (std::size_t b = a + 1; b < generators.size(); ++b) {
      if (!commutes(generators[a], generators[b])) {
        throw std::invalid_argument("generators " + generators[a].str() + " and " +
                                    generators[b].str() + " do not commute");
      }
    }
  }
  if (symplectic_rank(generators) != generators.size()) {
    throw std::invalid_argument("generators are dependent");
  }

  FactoredState s;
  s.n_ = n;
  for (const PauliString& g : generators) {
    s.generators_.push_back(PauliSum::from_string(g));
  }
  s.provenance_.assign(n, {});
  return s;
}

bool generator_changed(const PauliSum& before, const PauliSum& after) {
  PauliString a = PauliString::identity(before.num_qubits());
  PauliString b = a;
  if (before.as_single_string(a) && after.as_single_string(b)) {
    return !(a == b);
  }
  return !before.approx_equal(after, kZeroTol);
}

FactoredState evolve(const FactoredState& s, const GateOp& g) {
  g.validate(s.n_);
  FactoredState out = s;
  ++out.seq_;
  for (std::size_t j = 0; j < out.generators_.size(); ++j) {
    if (!supports_intersect(out.generators_[j], g.support)) {
      continue;  // a gate cannot touch letters outside its support
    }
    PauliSum moved = conjugate(out.generators_[j], g, ConjugationDirection::Schrodinger);
    if (generator_changed(out.generators_[j], moved)) {
      out.generators_[j] = std::move(moved);
      out.provenance_[j].push_back({out.seq_, g});
    }
  }
  return out;
}

FactoredState evolve(const FactoredState& s, const Circuit& c) {
  if (c.n != s.num_qubits()) {
    throw std::invalid_argument("circuit and state qubit counts differ");
  }
  FactoredState out = s;
  for (const GateOp& g : c.gates) {
    out = evolve(out, g);
  }
  return out;
}

PauliSum expand(const FactoredState& s) {
  PauliSum result = PauliSum::identity(s.num_qubits());
  for (const PauliSum& g : s.generators()) {
    result = result * (Complex{0.5, 0.0} * (PauliSum::identity(s.num_qubits()) + g));
  }
  return result;
}

std::vector<std::size_t> changed_factors(const FactoredState& before,
                                         const FactoredState& after) {
  if (before.num_qubits() != after.num_qubits() ||
      before.factor_count() != after.factor_count()) {
    throw std::invalid_argument("factored states have different shapes");
  }
  std::vector<std::size_t> changed;
  for (std::size_t j = 0; j < before.factor_count(); ++j) {
    if (generator_changed(before.generator(j), after.generator(j))) {
      changed.push_back(j);
    }
  }
  return changed;
}

Complex factored_expectation(const FactoredState& s, const PauliSum& obs) {
  if (obs.num_qubits() != s.num_qubits()) {
    throw std::invalid_argument("observable and state qubit counts differ");
  }
  const PauliSum rho = expand(s);
  // tr(w w') = 2^n only when the words match, so the trace pairs terms up.
  const double dim = static_cast<double>(std::size_t{1} << s.num_qubits());
  Complex acc{0.0, 0.0};
  for (const auto& [word, c] : rho.terms()) {
    acc += c * obs.coeff(word) * dim;
  }
  return acc;
}

std::string FactoredState::str() const {
  std::string out;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    out += std::to_string(j) + ": " + generators_[j].str() + " | provenance:";
    for (std::size_t r = 0; r < provenance_[j].size(); ++r) {
      out += r == 0 ? " " : ", ";
      out += std::to_string(provenance_[j][r].seq) + ":" + provenance_[j][r].gate.str();
    }
    out += "\n";
  }
  return out;
}

FactoredState FactoredState::parse(std::string_view text) {
  FactoredState s;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_seq = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto fail = [&](const std::string& what) -> void {
      throw std::invalid_argument("factored-state line " + std::to_string(line_no) + ": " +
                                  what);
    };

    std::size_t colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'j: ...'");
    std::size_t index = 0;
    try {
      index = std::stoul(line.substr(0, colon));
    } catch (const std::exception&) {
      fail("bad factor index");
    }
    if (index != s.generators_.size()) fail("factor indices must be consecutive from 0");

    const std::string marker = " | provenance:";
    std::size_t sep = line.find(marker, colon);
    if (sep == std::string::npos) fail("missing provenance marker");
    s.generators_.push_back(PauliSum::parse(line.substr(colon + 1, sep - colon - 1)));

    std::vector<ProvenanceRecord> records;
    std::string prov = line.substr(sep + marker.size());
    std::size_t pos = 0;
    while (pos < prov.size()) {
      while (pos < prov.size() && (prov[pos] == ' ' || prov[pos] == ',')) ++pos;
      if (pos >= prov.size()) break;
      std::size_t entry_end = prov.find(',', pos);
      if (entry_end == std::string::npos) entry_end = prov.size();
      std::string entry = prov.substr(pos, entry_end - pos);
      pos = entry_end;
      std::size_t c = entry.find(':');
      if (c == std::string::npos) fail("provenance entry needs 'seq:GATE'");
      ProvenanceRecord rec;
      try {
        rec.seq = std::stoul(entry.substr(0, c));
      } catch (const std::exception&) {
        fail("bad provenance sequence number");
      }
      Circuit one = Circuit::parse(entry.substr(c + 1));
      if (one.gates.size() != 1) fail("provenance entry needs exactly one gate");
      rec.gate = one.gates[0];
      max_seq = std::max(max_seq, rec.seq);
      records.push_back(std::move(rec));
    }
    s.provenance_.push_back(std::move(records));
  }
  if (s.generators_.empty()) {
    throw std::invalid_argument("factored-state text has no factors");
  }
  s.n_ = s.generators_[0].num_qubits();
  for (const PauliSum& g : s.generators_) {
    if (g.num_qubits() != s.n_) {
      throw std::invalid_argument("factored-state generators have mixed lengths");
    }
  }
  s.seq_ = max_seq;
  return s;
}

}  // namespace qpic
