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

#include "qpic/dense.hpp"

#include <stdexcept>

namespace qpic::dense {

namespace {

void check_cap(std::size_t n) {
  if (n > kDenseCap) {
    throw std::invalid_argument("dense oracle capped at " + std::to_string(kDenseCap) +
                                " qubits, got " + std::to_string(n));
  }
}

}  // namespace

Matrix letter_matrix(Letter l) {
  Matrix m(2, 2);
  const Complex i{0.0, 1.0};
  switch (l) {
    case Letter::I: m << 1, 0, 0, 1; break;
    case Letter::X: m << 0, 1, 1, 0; break;
    case Letter::Y: m << 0, -i, i, 0; break;
    case Letter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix to_dense(const PauliString& s) {
  check_cap(s.num_qubits());
  Matrix out = letter_matrix(s.letter(0));
  for (std::size_t q = 1; q < s.num_qubits(); ++q) {
    out = kron(out, letter_matrix(s.letter(q)));
  }
  return s.phase() * out;
}

Matrix to_dense(const PauliSum& s) {
  check_cap(s.num_qubits());
  const auto dim = static_cast<Eigen::Index>(1) << s.num_qubits();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [word, c] : s.terms()) {
    std::vector<Letter> letters;
    letters.reserve(word.size());
    for (char ch : word) letters.push_back(letter_from_char(ch));
    out += c * to_dense(PauliString(std::move(letters)));
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue solve failed");
  }
  return solver.eigenvalues();
}

Vector top_eigenvector(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvector solve failed");
  }
  return solver.eigenvectors().col(m.rows() - 1);
}

double commutator_norm(const Matrix& a, const Matrix& b) {
  return (a * b - b * a).cwiseAbs().maxCoeff();
}

}  // namespace qpic::dense
