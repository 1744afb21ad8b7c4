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

#include "kdrep/frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kdrep/errors.hpp"

namespace kdrep {

namespace {

// Amplitudes below this are treated as zero when fixing the phase convention.
constexpr double kPhaseCutoff = 1e-10;

void check_orthonormal(const ComplexMatrix& basis, const Tolerances& tol, const char* which) {
    const double res = identity_residual(basis.adjoint() * basis);
    if (res > tol.validation) {
        throw ValidationError(std::string(which) + " is not orthonormal (residual " + std::to_string(res) + ")",
                              res);
    }
}

}  // namespace

void canonicalize_phases(ComplexMatrix& basis) {
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        for (Eigen::Index r = 0; r < basis.rows(); ++r) {
            const Complex z = basis(r, c);
            const double mag = std::abs(z);
            if (mag > kPhaseCutoff) {
                basis.col(c) *= std::conj(z) / mag;
                basis(r, c) = Complex(basis(r, c).real(), 0.0);
                break;
            }
        }
    }
}

BasisPair::BasisPair(ComplexMatrix basis_a, ComplexMatrix basis_a_prime, const Tolerances& tol,
                     PhaseConvention phases)
    : a_(std::move(basis_a)), a_prime_(std::move(basis_a_prime)) {
    if (!is_square(a_) || !is_square(a_prime_) || a_.rows() != a_prime_.rows() || a_.rows() == 0) {
        throw DimensionError("basis pair needs two d x d matrices of equal size");
    }
    check_dimension(dim(), tol.max_dim);
    if (!all_finite(a_) || !all_finite(a_prime_)) throw ValidationError("basis pair has non-finite entries");
    check_orthonormal(a_, tol, "basis a");
    check_orthonormal(a_prime_, tol, "basis a'");
    if (phases == PhaseConvention::canonical) {
        canonicalize_phases(a_);
        canonicalize_phases(a_prime_);
    }
    // overlaps_(i, i') = <a'_{i'}|a_i>
    overlaps_ = (a_prime_.adjoint() * a_).transpose();
    min_overlap_ = overlaps_.cwiseAbs().minCoeff();
}

BasisPair BasisPair::computational_fourier(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix f(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(r * c) / static_cast<double>(d);
            f(r, c) = s * std::polar(1.0, angle);
        }
    }
    // Exact entries for the qubit case keep golden outputs clean.
    if (d == 2) f << s, s, s, -s;
    Tolerances tol;
    tol.max_dim = std::max(tol.max_dim, d);
    return BasisPair(ComplexMatrix::Identity(n, n), f, tol);
}

KdFrame KdFrame::build(const BasisPair& pair, const Tolerances& tol) {
    if (pair.min_overlap() < tol.overlap_floor) {
        throw OrthogonalPairError("basis pair has |<a'|a>| = " + std::to_string(pair.min_overlap()) +
                                      " below the overlap floor " + std::to_string(tol.overlap_floor),
                                  pair.min_overlap());
    }
    KdFrame f;
    const std::size_t d = pair.dim();
    f.dim_ = d;
    f.factors_ = {pair};
    f.min_overlap_ = pair.min_overlap();
    f.frame_.reserve(d * d);
    f.dual_.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        const ComplexVector ai = pair.a(i);
        for (std::size_t ip = 0; ip < d; ++ip) {
            const ComplexVector api = pair.a_prime(ip);
            const Complex ov = pair.overlap(i, ip);
            const ComplexMatrix kb = ket_bra(api, ai);
            f.frame_.push_back(kb * ov);
            f.dual_.push_back(ket_bra(ai, api) / ov);
        }
    }
    return f;
}

std::vector<std::size_t> KdFrame::system_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(factors_.size());
    for (const auto& p : factors_) dims.push_back(p.dim());
    return dims;
}

std::vector<std::pair<std::size_t, std::size_t>> KdFrame::labels(std::size_t k) const {
    if (k >= size()) throw DimensionError("frame index out of range");
    std::vector<std::pair<std::size_t, std::size_t>> out(factors_.size());
    for (std::size_t s = factors_.size(); s-- > 0;) {
        const std::size_t d = factors_[s].dim();
        const std::size_t local = k % (d * d);
        k /= d * d;
        out[s] = {local / d, local % d};
    }
    return out;
}

bool KdFrame::same_as(const KdFrame& other) const {
    if (this == &other) return true;
    if (dim_ != other.dim_ || factors_.size() != other.factors_.size()) return false;
    for (std::size_t s = 0; s < factors_.size(); ++s) {
        if (factors_[s].basis_a() != other.factors_[s].basis_a() ||
            factors_[s].basis_a_prime() != other.factors_[s].basis_a_prime()) {
            return false;
        }
    }
    return true;
}

FramePtr make_frame(const BasisPair& pair, const Tolerances& tol) {
    return std::make_shared<const KdFrame>(KdFrame::build(pair, tol));
}

KdFrame tensor_frame(const KdFrame& a, const KdFrame& b) {
    KdFrame f;
    f.dim_ = a.dim() * b.dim();
    f.factors_ = a.factors_;
    f.factors_.insert(f.factors_.end(), b.factors_.begin(), b.factors_.end());
    f.min_overlap_ = std::min(a.min_overlap(), b.min_overlap());
    f.frame_.reserve(a.size() * b.size());
    f.dual_.reserve(a.size() * b.size());
    for (std::size_t p = 0; p < a.size(); ++p) {
        for (std::size_t q = 0; q < b.size(); ++q) {
            f.frame_.push_back(tensor(a.frame_op(p), b.frame_op(q)));
            f.dual_.push_back(tensor(a.dual_op(p), b.dual_op(q)));
        }
    }
    return f;
}

FramePtr tensor_frame(const std::vector<FramePtr>& factors) {
    if (factors.empty()) throw DimensionError("tensor_frame needs at least one factor");
    FramePtr acc = factors.front();
    for (std::size_t s = 1; s < factors.size(); ++s) {
        acc = std::make_shared<const KdFrame>(tensor_frame(*acc, *factors[s]));
    }
    return acc;
}

Complex frame_sum_trace(const KdFrame& frame, const ComplexMatrix& o) {
    if (static_cast<std::size_t>(o.rows()) != frame.dim() || static_cast<std::size_t>(o.cols()) != frame.dim()) {
        throw DimensionError("frame_sum_trace: operator does not match frame dimension");
    }
    Complex sum = 0.0;
    for (const auto& f : frame.frame_ops()) sum += trace_product(f, o);
    return sum;
}

ComplexMatrix duality_matrix(const KdFrame& frame) {
    const auto n = static_cast<Eigen::Index>(frame.size());
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = trace_product(frame.frame_op(static_cast<std::size_t>(r)), frame.dual_op(static_cast<std::size_t>(c)));
        }
    }
    return m;
}

}  // namespace kdrep
