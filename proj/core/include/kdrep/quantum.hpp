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
#include <string_view>
#include <vector>

#include "kdrep/config.hpp"
#include "kdrep/linalg.hpp"

namespace kdrep {

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix rho, const Tolerances& tol = {});

    static DensityOperator pure(const ComplexVector& psi, const Tolerances& tol = {});
    static DensityOperator maximally_mixed(std::size_t d);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
    const ComplexMatrix& matrix() const noexcept { return rho_; }

private:
    ComplexMatrix rho_;
};

/// A validated POVM: Hermitian effects with spectra in [0, 1] summing to 1.
class Povm {
public:
    explicit Povm(std::vector<ComplexMatrix> effects, const Tolerances& tol = {});

    /// Projective measurement onto the columns of an orthonormal basis.
    static Povm from_basis(const ComplexMatrix& basis, const Tolerances& tol = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return effects_.size(); }
    const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
    const ComplexMatrix& effect(std::size_t k) const { return effects_.at(k); }

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> effects_;
};

enum class TraceClass {
    preserving,
    decreasing,
    /// No completeness constraint. Produced by adjoint_channel, whose result
    /// is unital rather than trace-preserving.
    unconstrained,
};

std::string_view to_string(TraceClass tc);
/// Accepts "trace-preserving", "trace-decreasing" and "unconstrained".
TraceClass trace_class_from_string(std::string_view s);

/// A completely positive map in Kraus form, rho -> sum_k K_k rho K_k^dagger.
class KrausChannel {
public:
    /// Validates shapes and, depending on `tc`, Kraus completeness. A
    /// preserving channel whose sum K^dagger K deviates from the identity by
    /// more than the tolerance throws ValidationError carrying the residual.
    KrausChannel(std::vector<ComplexMatrix> kraus, TraceClass tc, const Tolerances& tol = {});

    static KrausChannel identity(std::size_t d);
    static KrausChannel unitary(const ComplexMatrix& u, const Tolerances& tol = {});
    /// rho -> Tr[rho] I/d.
    static KrausChannel fully_depolarizing(std::size_t d);
    /// A (x) B -> B (x) A.
    static KrausChannel swap(std::size_t dim_a, std::size_t dim_b);

    std::size_t dim_in() const noexcept { return dim_in_; }
    std::size_t dim_out() const noexcept { return dim_out_; }
    TraceClass trace_class() const noexcept { return trace_class_; }
    const std::vector<ComplexMatrix>& kraus_ops() const noexcept { return kraus_; }

    /// sum_k K_k^dagger K_k.
    ComplexMatrix completeness() const;
    /// max |sum_k K_k^dagger K_k - I| entrywise.
    double completeness_residual() const;

private:
    struct Unchecked {};
    KrausChannel(std::vector<ComplexMatrix> kraus, TraceClass tc, Unchecked);

    friend KrausChannel adjoint_channel(const KrausChannel&);
    friend KrausChannel compose(const KrausChannel&, const KrausChannel&);
    friend KrausChannel tensor_channel(const KrausChannel&, const KrausChannel&);

    std::size_t dim_in_;
    std::size_t dim_out_;
    TraceClass trace_class_;
    std::vector<ComplexMatrix> kraus_;
};

/// sum_k K_k rho K_k^dagger. Throws DimensionError on shape mismatch.
ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho);

/// Kraus operators {K_k^dagger}; the Heisenberg-picture map.
KrausChannel adjoint_channel(const KrausChannel& ch);

/// second o first.
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b);

/// Sum of the maps, as a Kraus family (concatenation). Used for instruments.
KrausChannel channel_sum(const std::vector<KrausChannel>& branches, TraceClass tc,
                         const Tolerances& tol = {});

/// Pauli matrices and a few fixed states used throughout examples and tests.
namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
}  // namespace gates

}  // namespace kdrep
