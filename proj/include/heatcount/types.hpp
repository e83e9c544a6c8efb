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

#ifndef HEATCOUNT_TYPES_HPP
#define HEATCOUNT_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatcount {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when a computation breaks down numerically (eigensolver failure,
/// coefficient pole inside an integration window, non-finite result).
/// Precondition violations throw std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tol {
// Structural validations (Hermiticity, unitarity, trace, positivity).
inline constexpr double structural = 1e-10;
// Exact-arithmetic identities checked in floating point.
inline constexpr double identity = 1e-12;
}  // namespace tol

/// Inverse temperature. Zero temperature is a distinguished value rather than
/// a large float so that e^{beta E} never has to be formed from it.
class Beta {
 public:
  explicit Beta(double value) : value_(value) {
    if (!(value >= 0.0))
      throw std::invalid_argument("Beta: inverse temperature must be >= 0");
  }

  static Beta infinite() {
    Beta b(0.0);
    b.value_ = std::numeric_limits<double>::infinity();
    return b;
  }

  bool is_infinite() const { return std::isinf(value_); }

  double value() const {
    if (is_infinite())
      throw std::invalid_argument("Beta: finite value required");
    return value_;
  }

  /// tanh(beta * x), valid also at zero temperature.
  double tanh_of(double x) const;

  std::string str() const;

 private:
  double value_;
};

/// Ordered tensor factorization of a Hilbert space.
class HilbertSpace {
 public:
  explicit HilbertSpace(std::vector<int> dims);
  static HilbertSpace single(int dim) { return HilbertSpace({dim}); }

  const std::vector<int>& dims() const { return dims_; }
  int factors() const { return static_cast<int>(dims_.size()); }
  int total() const { return total_; }
  int dim(int k) const { return dims_.at(static_cast<std::size_t>(k)); }

  bool operator==(const HilbertSpace& other) const {
    return dims_ == other.dims_;
  }

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

/// Dense complex square matrix tagged with the factorization of the space it
/// acts on. Used for Hamiltonians, unitaries, Kraus operators and projectors.
struct Operator {
  Operator(Matrix matrix, HilbertSpace hs);

  int dim() const { return static_cast<int>(mat.rows()); }

  Matrix mat;
  HilbertSpace space;
};

/// Hermitian, positive semidefinite, unit-trace operator. Invariants are
/// checked on construction at the structural tolerance.
class DensityMatrix {
 public:
  DensityMatrix(Matrix matrix, HilbertSpace hs);
  explicit DensityMatrix(Operator op);

  const Operator& op() const { return op_; }
  const Matrix& matrix() const { return op_.mat; }
  const HilbertSpace& space() const { return op_.space; }
  int dim() const { return op_.dim(); }

 private:
  Operator op_;
};

/// Gibbs state of an environment Hamiltonian together with the quantities the
/// rest of the code keeps asking for.
struct ThermalState {
  DensityMatrix rho;
  Beta beta;
  double partition_fn;   // at beta = infinity: the ground-space degeneracy
  double ground_weight;  // largest eigenvalue of rho
};

}  // namespace heatcount

#endif  // HEATCOUNT_TYPES_HPP
