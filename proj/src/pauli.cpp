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

#include "qpic/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace qpic {

namespace {

// Letterwise product: out_letter[a][b] and the power of i it contributes.
// XY = iZ, YZ = iX, ZX = iY; reversed order picks up i^3.
constexpr Letter kProdLetter[4][4] = {
    /* I */ {Letter::I, Letter::X, Letter::Y, Letter::Z},
    /* X */ {Letter::X, Letter::I, Letter::Z, Letter::Y},
    /* Y */ {Letter::Y, Letter::Z, Letter::I, Letter::X},
    /* Z */ {Letter::Z, Letter::Y, Letter::X, Letter::I},
};
constexpr int kProdPhase[4][4] = {
    /* I */ {0, 0, 0, 0},
    /* X */ {0, 0, 1, 3},
    /* Y */ {0, 3, 0, 1},
    /* Z */ {0, 1, 3, 0},
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_coeff(Complex c) {
  if (c.imag() == 0.0) {
    return format_real(c.real());
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "(%.17g%+.17gi)", c.real(), c.imag());
  return buf;
}

}  // namespace

char letter_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  throw std::logic_error("bad Letter");
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'I': return Letter::I;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'Z': return Letter::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

Complex phase_from_exp(int phase_exp) {
  switch (((phase_exp % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(std::vector<Letter> letters, int phase_exp)
    : letters_(std::move(letters)), phase_exp_(((phase_exp % 4) + 4) % 4) {
  if (letters_.empty()) {
    throw std::invalid_argument("PauliString needs at least one qubit");
  }
}

PauliString PauliString::identity(std::size_t n) {
  return PauliString(std::vector<Letter>(n, Letter::I));
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, Letter l, int phase_exp) {
  if (qubit >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  std::vector<Letter> letters(n, Letter::I);
  letters[qubit] = l;
  return PauliString(std::move(letters), phase_exp);
}

PauliString PauliString::parse(std::string_view text) {
  int phase_exp = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase_exp = 2;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      phase_exp += 1;
      ++pos;
    }
  }
  if (pos >= text.size()) {
    throw std::invalid_argument("PauliString text has no letters: '" + std::string(text) + "'");
  }
  std::vector<Letter> letters;
  for (; pos < text.size(); ++pos) {
    letters.push_back(letter_from_char(text[pos]));
  }
  return PauliString(std::move(letters), phase_exp);
}

bool PauliString::is_identity_word() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l == Letter::I; });
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> result;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (letters_[q] != Letter::I) result.push_back(q);
  }
  return result;
}

std::string PauliString::word() const {
  std::string w;
  w.reserve(letters_.size());
  for (Letter l : letters_) w.push_back(letter_char(l));
  return w;
}

std::string PauliString::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_exp_] + word();
}

PauliString PauliString::with_phase_exp(int phase_exp) const {
  return PauliString(letters_, phase_exp);
}

PauliString PauliString::with_letter(std::size_t q, Letter l) const {
  std::vector<Letter> letters = letters_;
  letters.at(q) = l;
  return PauliString(std::move(letters), phase_exp_);
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("PauliString length mismatch");
  }
  std::vector<Letter> letters(a.num_qubits());
  int phase_exp = a.phase_exp() + b.phase_exp();
  for (std::size_t q = 0; q < letters.size(); ++q) {
    auto la = static_cast<int>(a.letter(q));
    auto lb = static_cast<int>(b.letter(q));
    letters[q] = kProdLetter[la][lb];
    phase_exp += kProdPhase[la][lb];
  }
  return PauliString(std::move(letters), phase_exp);
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("PauliString length mismatch");
  }
  int anticommuting = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    Letter la = a.letter(q);
    Letter lb = b.letter(q);
    if (la != Letter::I && lb != Letter::I && la != lb) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

PauliSum::PauliSum(std::size_t n) : n_(n) {
  if (n == 0) {
    throw std::invalid_argument("PauliSum needs at least one qubit");
  }
}

PauliSum PauliSum::identity(std::size_t n) {
  PauliSum s(n);
  s.add_term(std::string(n, 'I'), 1.0);
  return s;
}

PauliSum PauliSum::from_string(const PauliString& s, Complex scale) {
  PauliSum sum(s.num_qubits());
  sum.add_term(s, scale);
  return sum;
}

Complex PauliSum::coeff(std::string_view word) const {
  auto it = terms_.find(std::string(word));
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void PauliSum::prune(const std::string& word) {
  auto it = terms_.find(word);
  if (it != terms_.end() && std::abs(it->second) < kZeroTol) {
    terms_.erase(it);
  }
}

PauliSum& PauliSum::add_term(const std::string& word, Complex c) {
  if (word.size() != n_) {
    throw std::invalid_argument("word length does not match qubit count");
  }
  for (char ch : word) letter_from_char(ch);
  terms_[word] += c;
  prune(word);
  return *this;
}

PauliSum& PauliSum::add_term(const PauliString& s, Complex scale) {
  if (s.num_qubits() != n_) {
    throw std::invalid_argument("PauliString length does not match PauliSum");
  }
  terms_[s.word()] += s.phase() * scale;
  prune(s.word());
  return *this;
}

PauliSum PauliSum::adjoint() const {
  PauliSum result(n_);
  for (const auto& [word, c] : terms_) {
    result.add_term(word, std::conj(c));
  }
  return result;
}

bool PauliSum::is_hermitian(double tol) const {
  return max_term_diff(adjoint()) <= tol;
}

std::vector<std::size_t> PauliSum::support() const {
  std::set<std::size_t> acc;
  for (const auto& [word, c] : terms_) {
    (void)c;
    for (std::size_t q = 0; q < word.size(); ++q) {
      if (word[q] != 'I') acc.insert(q);
    }
  }
  return {acc.begin(), acc.end()};
}

bool PauliSum::as_single_string(PauliString& out) const {
  if (terms_.size() != 1) return false;
  const auto& [word, c] = *terms_.begin();
  for (int p = 0; p < 4; ++p) {
    if (c == phase_from_exp(p)) {
      std::vector<Letter> letters;
      for (char ch : word) letters.push_back(letter_from_char(ch));
      out = PauliString(std::move(letters), p);
      return true;
    }
  }
  return false;
}

std::string PauliSum::str() const {
  if (terms_.empty()) {
    return "0*" + std::string(n_, 'I');
  }
  std::string out;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    Complex shown = c;
    if (first) {
      first = false;
    } else if (c.imag() == 0.0 && c.real() < 0) {
      out += " - ";
      shown = -c;
    } else {
      out += " + ";
    }
    out += format_coeff(shown) + "*" + word;
  }
  return out;
}

bool PauliSum::operator==(const PauliSum& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  return n_ == other.n_ && max_term_diff(other) <= tol;
}

double PauliSum::max_term_diff(const PauliSum& other) const {
  double max_diff = 0.0;
  for (const auto& [word, c] : terms_) {
    max_diff = std::max(max_diff, std::abs(c - other.coeff(word)));
  }
  for (const auto& [word, c] : other.terms_) {
    max_diff = std::max(max_diff, std::abs(c - coeff(word)));
  }
  return max_diff;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("PauliSum length mismatch");
  }
  PauliSum result = a;
  for (const auto& [word, c] : b.terms()) {
    result.add_term(word, c);
  }
  return result;
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) {
  return a + Complex{-1.0, 0.0} * b;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("PauliSum length mismatch");
  }
  const std::size_t n = a.num_qubits();
  PauliSum result(n);
  for (const auto& [wa, ca] : a.terms()) {
    std::vector<Letter> la(n);
    for (std::size_t q = 0; q < n; ++q) la[q] = letter_from_char(wa[q]);
    for (const auto& [wb, cb] : b.terms()) {
      std::vector<Letter> letters(n);
      int phase_exp = 0;
      for (std::size_t q = 0; q < n; ++q) {
        auto ia = static_cast<int>(la[q]);
        auto ib = static_cast<int>(letter_from_char(wb[q]));
        letters[q] = kProdLetter[ia][ib];
        phase_exp += kProdPhase[ia][ib];
      }
      result.add_term(PauliString(std::move(letters), phase_exp), ca * cb);
    }
  }
  return result;
}

PauliSum operator*(Complex c, const PauliSum& a) {
  PauliSum result(a.num_qubits());
  for (const auto& [word, coeff] : a.terms()) {
    result.add_term(word, c * coeff);
  }
  return result;
}

namespace {

// Parser for the PauliSum text form. Kept local; errors carry the offset.
struct SumParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("PauliSum parse error at offset " + std::to_string(pos) +
                                ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  double parse_real() {
    skip_ws();
    const char* begin = text.data() + pos;
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos += static_cast<std::size_t>(end - begin);
    return value;
  }

  Complex parse_coeff() {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      double re = parse_real();
      double im = parse_real();  // sign is part of the literal, e.g. "+0.25"
      skip_ws();
      if (pos >= text.size() || text[pos] != 'i') fail("expected 'i' in complex coefficient");
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return {re, im};
    }
    return {parse_real(), 0.0};
  }

  std::string parse_word() {
    skip_ws();
    std::string word;
    while (pos < text.size() && std::string_view("IXYZ").find(text[pos]) != std::string_view::npos) {
      word.push_back(text[pos]);
      ++pos;
    }
    if (word.empty()) fail("expected a Pauli word over IXYZ");
    return word;
  }

  bool starts_coeff() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || c == '.' || c == '-' || c == '+' ||
           (c >= '0' && c <= '9');
  }
};

}  // namespace

PauliSum PauliSum::parse(std::string_view text) {
  SumParser p{text};
  double sign = 1.0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<std::pair<std::string, Complex>> parsed;

  if (p.at_end()) p.fail("empty PauliSum text");
  while (!p.at_end()) {
    Complex c{1.0, 0.0};
    if (p.starts_coeff()) {
      c = p.parse_coeff();
      p.skip_ws();
      if (p.pos < p.text.size() && p.text[p.pos] == '*') {
        ++p.pos;
      } else {
        p.fail("expected '*' after coefficient");
      }
    }
    std::string word = p.parse_word();
    if (have_n && word.size() != n) p.fail("inconsistent word lengths");
    n = word.size();
    have_n = true;
    parsed.emplace_back(word, sign * c);

    p.skip_ws();
    if (p.pos >= p.text.size()) break;
    if (p.text[p.pos] == '+') {
      sign = 1.0;
      ++p.pos;
    } else if (p.text[p.pos] == '-') {
      sign = -1.0;
      ++p.pos;
    } else {
      p.fail("expected '+' or '-' between terms");
    }
    if (p.at_end()) p.fail("dangling separator");
  }

  PauliSum result(n);
  for (const auto& [word, c] : parsed) {
    result.add_term(word, c);
  }
  return result;
}

}  // namespace qpic
