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

#include "heatcount/linalg.hpp"

#include <cmath>

namespace heatcount {

double frobenius_norm(const Matrix& m) { return m.norm(); }
double frobenius_norm(const Operator& op) { return op.mat.norm(); }

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const Matrix delta =
      m * m.adjoint() - Matrix::Identity(m.rows(), m.cols());
  return delta.norm() <= tolerance;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator tensor_product(const Operator& a, const Operator& b) {
  std::vector<int> dims = a.space.dims();
  dims.insert(dims.end(), b.space.dims().begin(), b.space.dims().end());
  return Operator(kron(a.mat, b.mat), HilbertSpace(dims));
}

Operator partial_trace(const Operator& op, int keep) {
  const HilbertSpace& hs = op.space;
  if (hs.factors() < 2)
    throw std::invalid_argument("partial_trace: need at least two factors");
  if (keep < 0 || keep >= hs.factors())
    throw std::invalid_argument("partial_trace: subsystem index out of range");

  const std::vector<int>& dims = hs.dims();
  const int kept = dims[static_cast<std::size_t>(keep)];
  const int total = hs.total();

  // Row-major strides of the composite index.
  std::vector<int> stride(dims.size());
  int s = 1;
  for (int k = hs.factors() - 1; k >= 0; --k) {
    stride[static_cast<std::size_t>(k)] = s;
    s *= dims[static_cast<std::size_t>(k)];
  }
  const int keep_stride = stride[static_cast<std::size_t>(keep)];
  const int rest = total / kept;

  // Enumerate the traced multi-index and add the kept-by-kept block.
  Matrix out = Matrix::Zero(kept, kept);
  for (int r = 0; r < rest; ++r) {
    // Expand r into a composite offset with the kept factor set to zero.
    int rem = r;
    int offset = 0;
    for (int k = hs.factors() - 1; k >= 0; --k) {
      if (k == keep) continue;
      const int d = dims[static_cast<std::size_t>(k)];
      offset += (rem % d) * stride[static_cast<std::size_t>(k)];
      rem /= d;
    }
    for (int i = 0; i < kept; ++i)
      for (int j = 0; j < kept; ++j)
        out(i, j) += op.mat(offset + i * keep_stride, offset + j * keep_stride);
  }
  return Operator(std::move(out), HilbertSpace::single(kept));
}

EigenSystem eigensystem_hermitian(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix hermitian_function(const Matrix& h,
                          const std::function<Complex(double)>& f) {
  const EigenSystem es = eigensystem_hermitian(h);
  Vector fd(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k) fd(k) = f(es.values(k));
  return es.vectors * fd.asDiagonal() * es.vectors.adjoint();
}

Matrix exp_hermitian(const Matrix& h, double s) {
  return hermitian_function(h, [s](double x) { return std::exp(s * x); });
}

Operator propagator(const Operator& h, double t) {
  if (!is_hermitian(h.mat))
    throw std::invalid_argument("propagator: Hamiltonian must be Hermitian");
  const Matrix u = hermitian_function(
      h.mat, [t](double e) { return std::exp(Complex(0.0, -e * t)); });
  return Operator(u, h.space);
}

Matrix identity_like(const Operator& op) {
  return Matrix::Identity(op.dim(), op.dim());
}

}  // namespace heatcount
