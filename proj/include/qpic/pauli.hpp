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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qpic {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are dropped from a PauliSum.
inline constexpr double kZeroTol = 1e-12;

/// Largest qubit count the dense verification oracle will expand.
inline constexpr std::size_t kDenseCap = 10;

/// Single-qubit Pauli letter. Qubit 0 is always the leftmost tensor factor.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

/// i^phase_exp as an exact unit complex (components in {-1, 0, 1}).
Complex phase_from_exp(int phase_exp);

/// A signed/phased tensor word over {I,X,Y,Z}: i^phase_exp * l_0 (x) ... (x) l_{n-1}.
///
/// The phase exponent is kept as an integer mod 4, so all products of
/// strings are exact; no floating point enters until a string is folded
/// into a PauliSum or expanded to a dense matrix.
class PauliString {
 public:
  explicit PauliString(std::vector<Letter> letters, int phase_exp = 0);

  static PauliString identity(std::size_t n);
  static PauliString single(std::size_t n, std::size_t qubit, Letter l, int phase_exp = 0);

  /// Parses "[+|-|+i|-i]LETTERS", e.g. "-XZ" for -X(x)Z. Round-trips with str().
  static PauliString parse(std::string_view text);

  std::size_t num_qubits() const { return letters_.size(); }
  Letter letter(std::size_t q) const { return letters_.at(q); }
  const std::vector<Letter>& letters() const { return letters_; }
  int phase_exp() const { return phase_exp_; }
  Complex phase() const { return phase_from_exp(phase_exp_); }

  /// Hermitian iff the phase is +1 or -1.
  bool is_hermitian() const { return phase_exp_ % 2 == 0; }
  bool is_identity_word() const;

  /// Indices carrying a non-identity letter.
  std::vector<std::size_t> support() const;

  /// The letters alone as text, e.g. "XZ" (phase not included).
  std::string word() const;
  /// Full textual form with explicit sign, e.g. "+XZ", "-iYY".
  std::string str() const;

  PauliString with_phase_exp(int phase_exp) const;
  PauliString with_letter(std::size_t q, Letter l) const;

  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<Letter> letters_;
  int phase_exp_;  // in {0,1,2,3}
};

/// Group product with exact phase bookkeeping (XY = iZ and cyclic).
PauliString operator*(const PauliString& a, const PauliString& b);

/// True iff ab == ba; the strings must have equal length.
bool commutes(const PauliString& a, const PauliString& b);

/// A complex linear combination of Pauli words in canonical form: each
/// word appears at most once and coefficients below kZeroTol are pruned.
/// String phases are folded into the coefficients.
class PauliSum {
 public:
  explicit PauliSum(std::size_t n);

  static PauliSum zero(std::size_t n) { return PauliSum(n); }
  static PauliSum identity(std::size_t n);
  static PauliSum from_string(const PauliString& s, Complex scale = 1.0);

  /// Parses the "coeff*WORD +/- ..." form emitted by str(). Complex
  /// coefficients use "(re+imi)". Bare words mean coefficient 1.
  static PauliSum parse(std::string_view text);

  std::size_t num_qubits() const { return n_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::string, Complex>& terms() const { return terms_; }
  Complex coeff(std::string_view word) const;

  PauliSum& add_term(const std::string& word, Complex c);
  PauliSum& add_term(const PauliString& s, Complex scale = 1.0);

  PauliSum adjoint() const;
  bool is_hermitian(double tol = kZeroTol) const;
  std::vector<std::size_t> support() const;

  /// True iff the sum is a single word with coefficient 1 or a phase i^k;
  /// fills `out` with the equivalent string when so.
  bool as_single_string(PauliString& out) const;

  std::string str() const;

  bool operator==(const PauliSum& other) const;
  bool approx_equal(const PauliSum& other, double tol) const;
  /// Largest |coefficient difference| over the union of the two term sets.
  double max_term_diff(const PauliSum& other) const;

 private:
  std::size_t n_;
  std::map<std::string, Complex> terms_;  // canonical: sorted words, pruned

  void prune(const std::string& word);
};

PauliSum operator+(const PauliSum& a, const PauliSum& b);
PauliSum operator-(const PauliSum& a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);
PauliSum operator*(Complex c, const PauliSum& a);

}  // namespace qpic
