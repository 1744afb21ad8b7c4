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

#include "report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace kdrep::report {

std::string format_number(double x) {
    if (x == 0.0) return "0.0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".einn") == std::string::npos) s += ".0";
    return s;
}

std::pair<std::string, std::string> frame_labels(const KdFrame& frame, std::size_t k) {
    std::string i;
    std::string ip;
    for (const auto& [a, b] : frame.labels(k)) {
        if (!i.empty()) {
            i += ':';
            ip += ':';
        }
        i += std::to_string(a);
        ip += std::to_string(b);
    }
    return {i, ip};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw std::logic_error("csv row width does not match header");
    rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
    std::string out;
    append_line(out, header_);
    for (const auto& row : rows_) append_line(out, row);
    return out;
}

nlohmann::json metadata(const std::string& command, std::optional<std::uint64_t> seed, const Tolerances& tol) {
    nlohmann::json meta{{"command", command},
                        {"tolerances",
                         {{"validation", tol.validation},
                          {"overlap_floor", tol.overlap_floor},
                          {"nonnegativity", tol.nonnegativity},
                          {"max_dim", tol.max_dim}}},
                        {"timestamp", utc_timestamp()}};
    meta["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return meta;
}

void write_outputs(const std::filesystem::path& dir, const std::vector<OutputFile>& files) {
    std::filesystem::create_directories(dir);
    for (const auto& f : files) {
        const auto target = dir / f.name;
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
            out << f.contents;
            if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
        std::filesystem::rename(tmp, target);
    }
}

}  // namespace kdrep::report
