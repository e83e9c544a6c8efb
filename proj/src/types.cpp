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

#include "heatcount/types.hpp"

#include "heatcount/linalg.hpp"

#include <cmath>
#include <sstream>

namespace heatcount {

double Beta::tanh_of(double x) const {
  if (is_infinite()) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
  }
  return std::tanh(value_ * x);
}

std::string Beta::str() const {
  if (is_infinite()) return "inf";
  std::ostringstream os;
  os << value_;
  return os.str();
}

HilbertSpace::HilbertSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty())
    throw std::invalid_argument("HilbertSpace: at least one factor required");
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("HilbertSpace: dims must be >= 1");
    total_ *= d;
  }
}

Operator::Operator(Matrix matrix, HilbertSpace hs)
    : mat(std::move(matrix)), space(std::move(hs)) {
  if (mat.rows() != mat.cols())
    throw std::invalid_argument("Operator: matrix must be square");
  if (mat.rows() != space.total())
    throw std::invalid_argument(
        "Operator: matrix dimension does not match the space factorization");
}

DensityMatrix::DensityMatrix(Matrix matrix, HilbertSpace hs)
    : DensityMatrix(Operator(std::move(matrix), std::move(hs))) {}

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
  const Matrix& m = op_.mat;
  if (!is_hermitian(m))
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol::structural ||
      std::abs(m.trace().imag()) > tol::structural)
    throw std::invalid_argument("DensityMatrix: trace must be 1");
  const EigenSystem es = eigensystem_hermitian(m);
  if (es.values.minCoeff() < -tol::structural)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

}  // namespace heatcount
