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

#include <span>

#include "kdrep/config.hpp"
#include "kdrep/frame.hpp"
#include "kdrep/linalg.hpp"
#include "kdrep/quantum.hpp"

namespace kdrep {

/// mu(k | rho) = Tr[F_k rho].
struct KdStateVector {
    FramePtr frame;
    ComplexVector entries;
};

/// xi(E | k) = Tr[E D_k].
struct KdEffectVector {
    FramePtr frame;
    ComplexVector entries;
};

/// Gamma(l | k) = Tr[F_l E(D_k)], rows indexed by the output frame.
struct KdChannelMatrix {
    FramePtr frame_in;
    FramePtr frame_out;
    ComplexMatrix entries;
    TraceClass trace_class = TraceClass::preserving;
};

KdStateVector represent_state(const DensityOperator& rho, FramePtr frame);
/// Any square operator, not just states. Used for linearity and region sweeps.
KdStateVector represent_operator(const ComplexMatrix& op, FramePtr frame);
KdEffectVector represent_effect(const ComplexMatrix& effect, FramePtr frame);
KdChannelMatrix represent_channel(const KrausChannel& ch, FramePtr frame_in, FramePtr frame_out);

/// sum_k mu_k D_k.
ComplexMatrix reconstruct_state(const KdStateVector& mu);
/// sum_k xi_k F_k.
ComplexMatrix reconstruct_effect(const KdEffectVector& xi);

/// The linear map X -> sum_{l,k} Gamma(l|k) Tr[F_k X] D_l rebuilt from a
/// channel matrix.
class ReconstructedMap {
public:
    explicit ReconstructedMap(KdChannelMatrix gamma);
    ComplexMatrix operator()(const ComplexMatrix& x) const;
    std::size_t dim_in() const noexcept { return gamma_.frame_in->dim(); }
    std::size_t dim_out() const noexcept { return gamma_.frame_out->dim(); }

private:
    KdChannelMatrix gamma_;
};

ReconstructedMap reconstruct_channel(const KdChannelMatrix& gamma);

/// xi^T Gamma_n ... Gamma_1 mu, with `gammas` in application order.
///
/// Returns the complex value so callers can inspect the imaginary residue.
/// Throws FrameChainError when consecutive frames do not match.
Complex predict(const KdEffectVector& xi, std::span<const KdChannelMatrix> gammas,
                const KdStateVector& mu);

/// <post|E|pre> / <post|pre>. Throws OrthogonalPrePostError when
/// |<post|pre>| < tol.overlap_floor.
Complex weak_value(const ComplexMatrix& effect, const ComplexVector& pre, const ComplexVector& post,
                   const Tolerances& tol = {});

/// Polar form of a KD value, phase in (-pi, pi].
struct KdPoint {
    double magnitude = 0.0;
    double phase = 0.0;

    static KdPoint from_complex(Complex z);
};

/// 1 - 3 |Delta|^{2/3} + 2 |Delta| cos(phi). Nonnegative for every KD value
/// of every state in every frame.
double region_check(const KdPoint& p);

}  // namespace kdrep
