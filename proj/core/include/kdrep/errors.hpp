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

#include <stdexcept>
#include <string>

namespace kdrep {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree, or a dimension is outside the allowed range.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An object violates its defining invariants (not Hermitian, not a POVM, ...).
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, double residual = 0.0)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Representations built on different frames were chained together.
class FrameChainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Base for every "overlap below the floor" condition.
class AdmissibilityError : public Error {
public:
    AdmissibilityError(const std::string& what, double min_overlap)
        : Error(what), min_overlap_(min_overlap) {}
    double min_overlap() const noexcept { return min_overlap_; }

private:
    double min_overlap_;
};

/// Some <a'_{i'}|a_i> is (numerically) zero, so no KD frame exists.
class OrthogonalPairError : public AdmissibilityError {
public:
    using AdmissibilityError::AdmissibilityError;
};

/// Weak value requested with <post|pre> (numerically) zero.
class OrthogonalPrePostError : public AdmissibilityError {
public:
    using AdmissibilityError::AdmissibilityError;
};

/// A decoded parameter vector lands on an inadmissible basis pair.
class OverlapFloorViolation : public AdmissibilityError {
public:
    using AdmissibilityError::AdmissibilityError;
};

}  // namespace kdrep
