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

#include <Eigen/Dense>

#include "qpic/pauli.hpp"

// Dense-matrix verification oracle. Everything in here is built from
// Kronecker products and Eigen decompositions only, so it stays
// independent of the string-algebra and statevector code paths it checks.
namespace qpic::dense {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Standard 2x2 matrix of a single letter.
Matrix letter_matrix(Letter l);

Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker expansion, qubit 0 leftmost. Throws for n > kDenseCap.
Matrix to_dense(const PauliString& s);
Matrix to_dense(const PauliSum& s);

double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

bool is_hermitian(const Matrix& m, double tol);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

/// Unit eigenvector for the largest eigenvalue of a Hermitian matrix.
Vector top_eigenvector(const Matrix& m);

/// ||ab - ba|| (max-abs entry of the commutator).
double commutator_norm(const Matrix& a, const Matrix& b);

}  // namespace qpic::dense
