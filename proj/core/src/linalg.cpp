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

#include "kdrep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kdrep/errors.hpp"

namespace kdrep {

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index br = b.rows();
    const Eigen::Index bc = b.cols();
    ComplexMatrix out(a.rows() * br, a.cols() * bc);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * br, j * bc, br, bc) = a(i, j) * b;
        }
    }
    return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionError("trace_product: shapes do not allow Tr[a b]");
    }
    // Tr[ab] = sum_ij a_ij b_ji
    return (a.array() * b.transpose().array()).sum();
}

bool all_finite(const ComplexMatrix& m) {
    return m.array().real().allFinite() && m.array().imag().allFinite();
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols(); }

double hermiticity_residual(const ComplexMatrix& m) {
    if (!is_square(m)) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double identity_residual(const ComplexMatrix& m) {
    if (!is_square(m)) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix ket_bra(const ComplexVector& ket, const ComplexVector& bra) { return ket * bra.adjoint(); }

ComplexVector basis_vector(std::size_t d, std::size_t k) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return v;
}

void check_dimension(std::size_t d, std::size_t max_dim) {
    if (d == 0) throw DimensionError("dimension must be positive");
    if (d > max_dim) {
        throw DimensionError("dimension " + std::to_string(d) + " exceeds the configured maximum " +
                             std::to_string(max_dim));
    }
}

}  // namespace kdrep
