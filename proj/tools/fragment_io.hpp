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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "kdrep/config.hpp"
#include "kdrep/frame.hpp"
#include "kdrep/verify.hpp"

namespace kdrep::io {

inline constexpr int kSchemaVersion = 1;

/// Malformed or unreadable input. Maps to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SystemSpec {
    std::string name;
    std::size_t dim = 0;
};

struct FrameSpec {
    std::string name;
    std::string system;
    BasisPair pair;
};

/// In-memory form of a fragment file. See README for the schema.
struct FragmentFile {
    int schema_version = kSchemaVersion;
    std::vector<SystemSpec> systems;
    std::vector<FrameSpec> frames;
    Fragment fragment;
    /// The document as read, for re-emitting with substituted frames.
    nlohmann::json source;
};

/// Throws ParseError for syntax/shape problems and the library's
/// DimensionError / ValidationError for semantic ones.
FragmentFile parse_fragment(const nlohmann::json& doc, const Tolerances& tol);
FragmentFile load_fragment(const std::filesystem::path& path, const Tolerances& tol);

/// Picks one frame per system: the first frame whose name is listed in
/// `selectors`, else the first frame declared for that system, else the
/// computational/Fourier pair. Returns the composite (tensor) frame and the
/// names used.
struct FrameChoice {
    FramePtr frame;
    std::vector<std::string> names;
};
FrameChoice select_frame(const FragmentFile& file, const std::vector<std::string>& selectors, const Tolerances& tol);

nlohmann::json complex_to_json(Complex z);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Basis vectors (matrix columns) as a list of vectors.
nlohmann::json basis_to_json(const ComplexMatrix& basis);
nlohmann::json frame_spec_to_json(const std::string& name, const std::string& system, const BasisPair& pair);

Complex complex_from_json(const nlohmann::json& j, const std::string& where);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);
ComplexMatrix basis_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace kdrep::io
