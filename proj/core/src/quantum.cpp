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

#include "kdrep/quantum.hpp"

#include <cmath>
#include <string>

#include "kdrep/errors.hpp"

namespace kdrep {

namespace {

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!all_finite(m)) throw ValidationError(std::string(what) + ": non-finite entry");
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix rho, const Tolerances& tol) : rho_(std::move(rho)) {
    if (!is_square(rho_) || rho_.rows() == 0) throw DimensionError("density operator must be square");
    check_dimension(dim(), tol.max_dim);
    require_finite(rho_, "density operator");
    const double herm = hermiticity_residual(rho_);
    if (herm > tol.validation) throw ValidationError("density operator is not Hermitian", herm);
    const double tr_err = std::abs(rho_.trace() - Complex(1.0));
    if (tr_err > tol.validation) throw ValidationError("density operator does not have unit trace", tr_err);
    const double min_eig = hermitian_eigenvalues(rho_).minCoeff();
    if (min_eig < -tol.validation) {
        throw ValidationError("density operator is not positive semidefinite", -min_eig);
    }
}

DensityOperator DensityOperator::pure(const ComplexVector& psi, const Tolerances& tol) {
    const double n = psi.norm();
    if (n == 0.0) throw ValidationError("pure state vector is zero");
    const ComplexVector u = psi / n;
    return DensityOperator(u * u.adjoint(), tol);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(d));
}

Povm::Povm(std::vector<ComplexMatrix> effects, const Tolerances& tol) : dim_(0), effects_(std::move(effects)) {
    if (effects_.empty()) throw ValidationError("POVM has no effects");
    dim_ = static_cast<std::size_t>(effects_.front().rows());
    check_dimension(dim_, tol.max_dim);
    const auto n = static_cast<Eigen::Index>(dim_);
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& e : effects_) {
        if (e.rows() != n || e.cols() != n) throw DimensionError("POVM effects have inconsistent shapes");
        require_finite(e, "POVM effect");
        const double herm = hermiticity_residual(e);
        if (herm > tol.validation) throw ValidationError("POVM effect is not Hermitian", herm);
        const RealVector ev = hermitian_eigenvalues(e);
        if (ev.minCoeff() < -tol.validation || ev.maxCoeff() > 1.0 + tol.validation) {
            const double excess = std::max(-ev.minCoeff(), ev.maxCoeff() - 1.0);
            throw ValidationError("POVM effect spectrum outside [0, 1]", excess);
        }
        sum += e;
    }
    const double res = identity_residual(sum);
    if (res > tol.validation) throw ValidationError("POVM effects do not sum to the identity", res);
}

Povm Povm::from_basis(const ComplexMatrix& basis, const Tolerances& tol) {
    std::vector<ComplexMatrix> effects;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        effects.push_back(basis.col(k) * basis.col(k).adjoint());
    }
    return Povm(std::move(effects), tol);
}

std::string_view to_string(TraceClass tc) {
    switch (tc) {
        case TraceClass::preserving:
            return "trace-preserving";
        case TraceClass::decreasing:
            return "trace-decreasing";
        case TraceClass::unconstrained:
            return "unconstrained";
    }
    return "unknown";
}

TraceClass trace_class_from_string(std::string_view s) {
    if (s == "trace-preserving") return TraceClass::preserving;
    if (s == "trace-decreasing") return TraceClass::decreasing;
    if (s == "unconstrained") return TraceClass::unconstrained;
    throw ValidationError("unknown trace class '" + std::string(s) + "'");
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, TraceClass tc, Unchecked)
    : dim_in_(0), dim_out_(0), trace_class_(tc), kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw ValidationError("channel has no Kraus operators");
    dim_out_ = static_cast<std::size_t>(kraus_.front().rows());
    dim_in_ = static_cast<std::size_t>(kraus_.front().cols());
    for (const auto& k : kraus_) {
        if (static_cast<std::size_t>(k.rows()) != dim_out_ || static_cast<std::size_t>(k.cols()) != dim_in_) {
            throw DimensionError("Kraus operators have inconsistent shapes");
        }
    }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, TraceClass tc, const Tolerances& tol)
    : KrausChannel(std::move(kraus), tc, Unchecked{}) {
    check_dimension(dim_in_, tol.max_dim);
    check_dimension(dim_out_, tol.max_dim);
    for (const auto& k : kraus_) require_finite(k, "Kraus operator");
    switch (trace_class_) {
        case TraceClass::preserving: {
            const double res = completeness_residual();
            if (res > tol.validation) {
                throw ValidationError("channel labelled trace-preserving fails Kraus completeness (residual " +
                                          std::to_string(res) + ")",
                                      res);
            }
            break;
        }
        case TraceClass::decreasing: {
            const double top = hermitian_eigenvalues(completeness()).maxCoeff();
            if (top > 1.0 + tol.validation) {
                throw ValidationError("trace-decreasing channel has sum K^dagger K above the identity", top - 1.0);
            }
            break;
        }
        case TraceClass::unconstrained:
            break;
    }
}

KrausChannel KrausChannel::identity(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return KrausChannel({ComplexMatrix::Identity(n, n)}, TraceClass::preserving, Unchecked{});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u, const Tolerances& tol) {
    return KrausChannel({u}, TraceClass::preserving, tol);
}

KrausChannel KrausChannel::fully_depolarizing(std::size_t d) {
    // K_{jk} = |j><k| / sqrt(d)
    std::vector<ComplexMatrix> ops;
    const auto n = static_cast<Eigen::Index>(d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            ComplexMatrix m = ComplexMatrix::Zero(n, n);
            m(j, k) = s;
            ops.push_back(std::move(m));
        }
    }
    return KrausChannel(std::move(ops), TraceClass::preserving, Unchecked{});
}

KrausChannel KrausChannel::swap(std::size_t dim_a, std::size_t dim_b) {
    const auto da = static_cast<Eigen::Index>(dim_a);
    const auto db = static_cast<Eigen::Index>(dim_b);
    ComplexMatrix s = ComplexMatrix::Zero(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < db; ++j) {
            s(j * da + i, i * db + j) = 1.0;
        }
    }
    return KrausChannel({s}, TraceClass::preserving, Unchecked{});
}

ComplexMatrix KrausChannel::completeness() const {
    const auto n = static_cast<Eigen::Index>(dim_in_);
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& k : kraus_) sum.noalias() += k.adjoint() * k;
    return sum;
}

double KrausChannel::completeness_residual() const { return identity_residual(completeness()); }

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho) {
    if (static_cast<std::size_t>(rho.rows()) != ch.dim_in() || static_cast<std::size_t>(rho.cols()) != ch.dim_in()) {
        throw DimensionError("apply_channel: input is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", channel expects " + std::to_string(ch.dim_in()));
    }
    const auto n = static_cast<Eigen::Index>(ch.dim_out());
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (const auto& k : ch.kraus_ops()) out.noalias() += k * rho * k.adjoint();
    return out;
}

KrausChannel adjoint_channel(const KrausChannel& ch) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(ch.kraus_ops().size());
    for (const auto& k : ch.kraus_ops()) ops.push_back(k.adjoint());
    return KrausChannel(std::move(ops), TraceClass::unconstrained, KrausChannel::Unchecked{});
}

namespace {

TraceClass combined_class(TraceClass a, TraceClass b) {
    if (a == TraceClass::unconstrained || b == TraceClass::unconstrained) return TraceClass::unconstrained;
    if (a == TraceClass::preserving && b == TraceClass::preserving) return TraceClass::preserving;
    return TraceClass::decreasing;
}

}  // namespace

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
    if (first.dim_out() != second.dim_in()) throw DimensionError("compose: intermediate dimensions differ");
    std::vector<ComplexMatrix> ops;
    ops.reserve(first.kraus_ops().size() * second.kraus_ops().size());
    for (const auto& k2 : second.kraus_ops()) {
        for (const auto& k1 : first.kraus_ops()) ops.push_back(k2 * k1);
    }
    return KrausChannel(std::move(ops), combined_class(first.trace_class(), second.trace_class()),
                        KrausChannel::Unchecked{});
}

KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(a.kraus_ops().size() * b.kraus_ops().size());
    for (const auto& ka : a.kraus_ops()) {
        for (const auto& kb : b.kraus_ops()) ops.push_back(tensor(ka, kb));
    }
    return KrausChannel(std::move(ops), combined_class(a.trace_class(), b.trace_class()), KrausChannel::Unchecked{});
}

KrausChannel channel_sum(const std::vector<KrausChannel>& branches, TraceClass tc, const Tolerances& tol) {
    std::vector<ComplexMatrix> ops;
    for (const auto& br : branches) ops.insert(ops.end(), br.kraus_ops().begin(), br.kraus_ops().end());
    return KrausChannel(std::move(ops), tc, tol);
}

namespace gates {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix hadamard() {
    ComplexMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

}  // namespace gates

}  // namespace kdrep
