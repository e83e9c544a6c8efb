// Copyright 2026 the heatcount authors
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

#ifndef HEATCOUNT_LINALG_HPP
#define HEATCOUNT_LINALG_HPP

#include "heatcount/types.hpp"

#include <functional>

namespace heatcount {

double frobenius_norm(const Matrix& m);
double frobenius_norm(const Operator& op);

bool is_hermitian(const Matrix& m, double tolerance = tol::structural);
bool is_unitary(const Matrix& m, double tolerance = tol::structural);

/// Kronecker product; the factorization of the result is the concatenation of
/// the operands' factorizations.
Operator tensor_product(const Operator& a, const Operator& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Trace out every tensor factor except `keep`.
Operator partial_trace(const Operator& op, int keep);

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors orthonormal columns.
struct EigenSystem {
  Eigen::VectorXd values;
  Matrix vectors;
};
EigenSystem eigensystem_hermitian(const Matrix& m);

/// f(H) for Hermitian H, evaluated on the spectrum.
Matrix hermitian_function(const Matrix& h,
                          const std::function<Complex(double)>& f);

/// e^{s H} for Hermitian H and real s.
Matrix exp_hermitian(const Matrix& h, double s);

/// Unitary propagator e^{-i H t} of a Hermitian Hamiltonian.
Operator propagator(const Operator& h, double t);

Matrix identity_like(const Operator& op);

}  // namespace heatcount

#endif  // HEATCOUNT_LINALG_HPP
