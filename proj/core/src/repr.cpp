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

#include "kdrep/repr.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kdrep/errors.hpp"

namespace kdrep {

namespace {

void require_frame(const FramePtr& frame) {
    if (!frame) throw ValidationError("representation requires a frame");
}

void require_square(const ComplexMatrix& m, std::size_t d, const char* what) {
    if (static_cast<std::size_t>(m.rows()) != d || static_cast<std::size_t>(m.cols()) != d) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(d) + "x" + std::to_string(d) +
                             ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

KdStateVector represent_operator(const ComplexMatrix& op, FramePtr frame) {
    require_frame(frame);
    require_square(op, frame->dim(), "represent_state");
    ComplexVector mu(static_cast<Eigen::Index>(frame->size()));
    for (std::size_t k = 0; k < frame->size(); ++k) {
        mu(static_cast<Eigen::Index>(k)) = trace_product(frame->frame_op(k), op);
    }
    return {std::move(frame), std::move(mu)};
}

KdStateVector represent_state(const DensityOperator& rho, FramePtr frame) {
    return represent_operator(rho.matrix(), std::move(frame));
}

KdEffectVector represent_effect(const ComplexMatrix& effect, FramePtr frame) {
    require_frame(frame);
    require_square(effect, frame->dim(), "represent_effect");
    ComplexVector xi(static_cast<Eigen::Index>(frame->size()));
    for (std::size_t k = 0; k < frame->size(); ++k) {
        xi(static_cast<Eigen::Index>(k)) = trace_product(effect, frame->dual_op(k));
    }
    return {std::move(frame), std::move(xi)};
}

KdChannelMatrix represent_channel(const KrausChannel& ch, FramePtr frame_in, FramePtr frame_out) {
    require_frame(frame_in);
    require_frame(frame_out);
    if (ch.dim_in() != frame_in->dim() || ch.dim_out() != frame_out->dim()) {
        throw DimensionError("represent_channel: channel is " + std::to_string(ch.dim_in()) + " -> " +
                             std::to_string(ch.dim_out()) + ", frames are " + std::to_string(frame_in->dim()) +
                             " -> " + std::to_string(frame_out->dim()));
    }
    const auto rows = static_cast<Eigen::Index>(frame_out->size());
    const auto cols = static_cast<Eigen::Index>(frame_in->size());
    ComplexMatrix gamma(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        const ComplexMatrix image = apply_channel(ch, frame_in->dual_op(static_cast<std::size_t>(c)));
        for (Eigen::Index r = 0; r < rows; ++r) {
            gamma(r, c) = trace_product(frame_out->frame_op(static_cast<std::size_t>(r)), image);
        }
    }
    return {std::move(frame_in), std::move(frame_out), std::move(gamma), ch.trace_class()};
}

ComplexMatrix reconstruct_state(const KdStateVector& mu) {
    require_frame(mu.frame);
    if (static_cast<std::size_t>(mu.entries.size()) != mu.frame->size()) {
        throw DimensionError("reconstruct_state: entry count does not match frame");
    }
    const auto n = static_cast<Eigen::Index>(mu.frame->dim());
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < mu.frame->size(); ++k) rho += mu.entries(static_cast<Eigen::Index>(k)) * mu.frame->dual_op(k);
    return rho;
}

ComplexMatrix reconstruct_effect(const KdEffectVector& xi) {
    require_frame(xi.frame);
    if (static_cast<std::size_t>(xi.entries.size()) != xi.frame->size()) {
        throw DimensionError("reconstruct_effect: entry count does not match frame");
    }
    const auto n = static_cast<Eigen::Index>(xi.frame->dim());
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < xi.frame->size(); ++k) e += xi.entries(static_cast<Eigen::Index>(k)) * xi.frame->frame_op(k);
    return e;
}

ReconstructedMap::ReconstructedMap(KdChannelMatrix gamma) : gamma_(std::move(gamma)) {
    require_frame(gamma_.frame_in);
    require_frame(gamma_.frame_out);
    if (static_cast<std::size_t>(gamma_.entries.rows()) != gamma_.frame_out->size() ||
        static_cast<std::size_t>(gamma_.entries.cols()) != gamma_.frame_in->size()) {
        throw DimensionError("channel matrix shape does not match its frames");
    }
}

ComplexMatrix ReconstructedMap::operator()(const ComplexMatrix& x) const {
    const KdStateVector in = represent_operator(x, gamma_.frame_in);
    return reconstruct_state(KdStateVector{gamma_.frame_out, gamma_.entries * in.entries});
}

ReconstructedMap reconstruct_channel(const KdChannelMatrix& gamma) { return ReconstructedMap(gamma); }

Complex predict(const KdEffectVector& xi, std::span<const KdChannelMatrix> gammas, const KdStateVector& mu) {
    require_frame(xi.frame);
    require_frame(mu.frame);
    FramePtr current = mu.frame;
    ComplexVector v = mu.entries;
    for (std::size_t n = 0; n < gammas.size(); ++n) {
        const auto& g = gammas[n];
        require_frame(g.frame_in);
        if (!g.frame_in->same_as(*current)) {
            throw FrameChainError("predict: channel " + std::to_string(n) +
                                  " expects a different input frame than the one supplied");
        }
        v = g.entries * v;
        current = g.frame_out;
    }
    if (!xi.frame->same_as(*current)) {
        throw FrameChainError("predict: effect frame does not match the final frame");
    }
    return (xi.entries.transpose() * v)(0);
}

Complex weak_value(const ComplexMatrix& effect, const ComplexVector& pre, const ComplexVector& post,
                   const Tolerances& tol) {
    if (pre.size() != post.size() || effect.rows() != pre.size() || effect.cols() != pre.size()) {
        throw DimensionError("weak_value: operand dimensions differ");
    }
    const Complex denom = post.dot(pre);  // <post|pre>
    if (std::abs(denom) < tol.overlap_floor) {
        throw OrthogonalPrePostError("weak_value: |<post|pre>| = " + std::to_string(std::abs(denom)) +
                                         " below the overlap floor",
                                     std::abs(denom));
    }
    return post.dot(effect * pre) / denom;
}

KdPoint KdPoint::from_complex(Complex z) {
    KdPoint p{std::abs(z), std::arg(z)};
    if (p.phase <= -std::numbers::pi) p.phase += 2.0 * std::numbers::pi;
    return p;
}

double region_check(const KdPoint& p) {
    return 1.0 - 3.0 * std::cbrt(p.magnitude * p.magnitude) + 2.0 * p.magnitude * std::cos(p.phase);
}

}  // namespace kdrep
