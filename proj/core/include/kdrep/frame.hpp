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

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "kdrep/config.hpp"
#include "kdrep/linalg.hpp"

namespace kdrep {

enum class PhaseConvention {
    /// Rotate each basis vector so its first nonzero amplitude is real positive.
    canonical,
    as_given,
};

/// Two orthonormal bases {|a_i>} and {|a'_{i'}>} of one system, stored as the
/// columns of two d x d matrices.
class BasisPair {
public:
    /// Throws DimensionError on shape mismatch, ValidationError when either
    /// basis fails orthonormality by more than `tol.validation`. Admissibility
    /// (nonzero overlaps) is checked when a frame is built, not here.
    BasisPair(ComplexMatrix basis_a, ComplexMatrix basis_a_prime, const Tolerances& tol = {},
              PhaseConvention phases = PhaseConvention::canonical);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(a_.rows()); }
    const ComplexMatrix& basis_a() const noexcept { return a_; }
    const ComplexMatrix& basis_a_prime() const noexcept { return a_prime_; }
    ComplexVector a(std::size_t i) const { return a_.col(static_cast<Eigen::Index>(i)); }
    ComplexVector a_prime(std::size_t ip) const { return a_prime_.col(static_cast<Eigen::Index>(ip)); }

    /// <a'_{i'}|a_i>, stored at (i, i').
    Complex overlap(std::size_t i, std::size_t ip) const {
        return overlaps_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(ip));
    }
    const ComplexMatrix& overlaps() const noexcept { return overlaps_; }
    double min_overlap() const noexcept { return min_overlap_; }

    /// Computational basis paired with its Fourier transform (Z/X for d = 2).
    static BasisPair computational_fourier(std::size_t d);

private:
    ComplexMatrix a_;
    ComplexMatrix a_prime_;
    ComplexMatrix overlaps_;
    double min_overlap_ = 0.0;
};

/// Rotates every column of `basis` in place to the canonical phase.
void canonicalize_phases(ComplexMatrix& basis);

/// A Kirkwood-Dirac frame {F_k} and its dual {D_k}, Tr[F_k D_l] = delta_kl.
///
/// For a single system the index of (i, i') is k = i * d + i'. A composite
/// frame over systems S_1, ..., S_n uses the row-major product of the
/// per-system indices, k = ((k_1 * d_2^2 + k_2) * d_3^2 + k_3) ...
class KdFrame {
public:
    /// F_{i,i'} = |a'_{i'}><a_i| <a'_{i'}|a_i>, D_{i,i'} = |a_i><a'_{i'}| / <a'_{i'}|a_i>.
    /// Throws OrthogonalPairError when min |overlap| < tol.overlap_floor.
    static KdFrame build(const BasisPair& pair, const Tolerances& tol = {});

    std::size_t dim() const noexcept { return dim_; }
    /// Number of frame elements, dim()^2.
    std::size_t size() const noexcept { return frame_.size(); }
    bool is_composite() const noexcept { return factors_.size() > 1; }

    const std::vector<BasisPair>& factors() const noexcept { return factors_; }
    std::vector<std::size_t> system_dims() const;

    const ComplexMatrix& frame_op(std::size_t k) const { return frame_.at(k); }
    const ComplexMatrix& dual_op(std::size_t k) const { return dual_.at(k); }
    const std::vector<ComplexMatrix>& frame_ops() const noexcept { return frame_; }
    const std::vector<ComplexMatrix>& dual_ops() const noexcept { return dual_; }

    /// Per-system (i, i') labels of composite index k.
    std::vector<std::pair<std::size_t, std::size_t>> labels(std::size_t k) const;

    /// Smallest |<a'|a>| over all factors.
    double min_overlap() const noexcept { return min_overlap_; }

    /// Same factor bases, compared exactly.
    bool same_as(const KdFrame& other) const;

private:
    friend KdFrame tensor_frame(const KdFrame& a, const KdFrame& b);
    KdFrame() = default;

    std::size_t dim_ = 0;
    std::vector<BasisPair> factors_;
    std::vector<ComplexMatrix> frame_;
    std::vector<ComplexMatrix> dual_;
    double min_overlap_ = 0.0;
};

using FramePtr = std::shared_ptr<const KdFrame>;

FramePtr make_frame(const BasisPair& pair, const Tolerances& tol = {});

/// Composite frame with F = F_a (x) F_b and D = D_a (x) D_b.
KdFrame tensor_frame(const KdFrame& a, const KdFrame& b);
FramePtr tensor_frame(const std::vector<FramePtr>& factors);

/// sum_k Tr[F_k o]; equals Tr[o] for every frame.
Complex frame_sum_trace(const KdFrame& frame, const ComplexMatrix& o);

/// Matrix of Tr[F_row D_col]; the identity for a valid frame.
ComplexMatrix duality_matrix(const KdFrame& frame);

}  // namespace kdrep
