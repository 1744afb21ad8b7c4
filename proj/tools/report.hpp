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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kdrep/config.hpp"
#include "kdrep/frame.hpp"

namespace kdrep::report {

/// Shortest stable text for a double: 15 significant digits, integers get a
/// trailing ".0", negative zero prints as "0.0".
std::string format_number(double x);

/// "i" for a single system, "i_1:i_2:..." for a composite frame.
std::pair<std::string, std::string> frame_labels(const KdFrame& frame, std::size_t k);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);
    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Run metadata. The timestamp is the only field that varies between runs.
nlohmann::json metadata(const std::string& command, std::optional<std::uint64_t> seed, const Tolerances& tol);

/// Files are written only after every one of them has been rendered, each
/// through a temporary name and a rename.
struct OutputFile {
    std::string name;
    std::string contents;
};
void write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files);

}  // namespace kdrep::report
