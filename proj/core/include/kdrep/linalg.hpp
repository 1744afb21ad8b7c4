// Copyright 2026 The kdrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace kdrep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Kronecker product. Composite index of (i, j) is i * b.rows() + j.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr[a b] without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

bool all_finite(const ComplexMatrix& m);
bool is_square(const ComplexMatrix& m);

/// max |m - m^dagger| entrywise.
double hermiticity_residual(const ComplexMatrix& m);

/// Eigenvalues of the Hermitian part of m, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// max |m - I| entrywise.
double identity_residual(const ComplexMatrix& m);

/// max |a - b| entrywise; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Outer product |ket><bra|.
ComplexMatrix ket_bra(const ComplexVector& ket, const ComplexVector& bra);

/// Computational basis vector e_k in dimension d.
ComplexVector basis_vector(std::size_t d, std::size_t k);

/// Throws DimensionError when d is zero or exceeds max_dim.
void check_dimension(std::size_t d, std::size_t max_dim);

}  // namespace kdrep
