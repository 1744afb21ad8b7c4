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

#include "fragment_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kdrep/errors.hpp"

namespace kdrep::io {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

const json& optional_array(const json& doc, const char* key) {
    static const json empty = json::array();
    if (!doc.contains(key)) return empty;
    const json& v = doc.at(key);
    if (!v.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    return v;
}

std::vector<ComplexMatrix> matrices_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of matrices");
    std::vector<ComplexMatrix> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(matrix_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

}  // namespace

Complex complex_from_json(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ParseError(where + ": complex scalars are [re, im] arrays");
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ParseError(where + ": matrices are non-empty arrays of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw ParseError(where + ": matrix rows must be non-empty arrays");
    const std::size_t cols = j[0].size();
    ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw ParseError(where + ": ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

ComplexMatrix basis_from_json(const json& j, const std::string& where) {
    // A list of vectors; vector k becomes column k.
    const ComplexMatrix rows = matrix_from_json(j, where);
    return rows.transpose();
}

json complex_to_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json basis_to_json(const ComplexMatrix& basis) { return matrix_to_json(basis.transpose()); }

json frame_spec_to_json(const std::string& name, const std::string& system, const BasisPair& pair) {
    return json{{"name", name},
                {"system", system},
                {"basis_a", basis_to_json(pair.basis_a())},
                {"basis_a_prime", basis_to_json(pair.basis_a_prime())}};
}

FragmentFile parse_fragment(const json& doc, const Tolerances& tol) {
    if (!doc.is_object()) throw ParseError("fragment file must be a JSON object");
    FragmentFile file;
    file.source = doc;
    if (doc.contains("schema_version")) {
        if (!doc["schema_version"].is_number_integer()) throw ParseError("schema_version must be an integer");
        file.schema_version = doc["schema_version"].get<int>();
        if (file.schema_version != kSchemaVersion) {
            throw ParseError("unsupported schema_version " + std::to_string(file.schema_version));
        }
    }

    std::set<std::string> names;
    for (const auto& s : optional_array(doc, "systems")) {
        const std::string name = require_string(s, "name", "systems");
        const json& dim = require(s, "dim", "systems." + name);
        if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
            throw ParseError("systems." + name + ".dim must be a positive integer");
        }
        if (!names.insert(name).second) throw ParseError("duplicate system name '" + name + "'");
        file.systems.push_back({name, dim.get<std::size_t>()});
        file.fragment.system_dims.push_back(dim.get<std::size_t>());
    }
    if (!file.systems.empty()) check_dimension(file.fragment.dim(), tol.max_dim);

    for (const auto& f : optional_array(doc, "frames")) {
        const std::string name = require_string(f, "name", "frames");
        std::string system;
        if (f.contains("system")) {
            system = require_string(f, "system", "frames." + name);
        } else if (file.systems.size() == 1) {
            system = file.systems.front().name;
        } else {
            throw ParseError("frames." + name + ": 'system' is required with several systems");
        }
        const auto it = std::find_if(file.systems.begin(), file.systems.end(),
                                     [&](const SystemSpec& s) { return s.name == system; });
        if (it == file.systems.end()) throw ParseError("frames." + name + ": unknown system '" + system + "'");
        BasisPair pair(basis_from_json(require(f, "basis_a", "frames." + name), "frames." + name + ".basis_a"),
                       basis_from_json(require(f, "basis_a_prime", "frames." + name), "frames." + name + ".basis_a_prime"),
                       tol);
        if (pair.dim() != it->dim) {
            throw DimensionError("frame '" + name + "' has dimension " + std::to_string(pair.dim()) + " but system '" +
                                 system + "' has " + std::to_string(it->dim));
        }
        file.frames.push_back({name, system, std::move(pair)});
    }

    for (const auto& s : optional_array(doc, "states")) {
        const std::string name = require_string(s, "name", "states");
        file.fragment.states.push_back(
            {name, DensityOperator(matrix_from_json(require(s, "matrix", "states." + name), "states." + name), tol)});
    }
    for (const auto& m : optional_array(doc, "measurements")) {
        const std::string name = require_string(m, "name", "measurements");
        file.fragment.measurements.push_back(
            {name, Povm(matrices_from_json(require(m, "effects", "measurements." + name), "measurements." + name), tol)});
    }
    for (const auto& c : optional_array(doc, "channels")) {
        const std::string name = require_string(c, "name", "channels");
        const TraceClass tc = c.contains("trace_class")
                                  ? trace_class_from_string(require_string(c, "trace_class", "channels." + name))
                                  : TraceClass::preserving;
        try {
            file.fragment.channels.push_back(
                {name, KrausChannel(matrices_from_json(require(c, "kraus", "channels." + name), "channels." + name), tc, tol)});
        } catch (const ValidationError& e) {
            throw ValidationError("channels." + name + ": " + e.what(), e.residual());
        }
    }
    for (const auto& inst : optional_array(doc, "instruments")) {
        const std::string name = require_string(inst, "name", "instruments");
        Instrument out{name, {}};
        const json& branches = require(inst, "branches", "instruments." + name);
        if (!branches.is_array()) throw ParseError("instruments." + name + ".branches must be an array");
        for (const auto& b : branches) {
            const std::string bname = require_string(b, "name", "instruments." + name + ".branches");
            const std::string where = "instruments." + name + "." + bname;
            const TraceClass tc = b.contains("trace_class") ? trace_class_from_string(require_string(b, "trace_class", where))
                                                            : TraceClass::decreasing;
            out.branches.push_back({bname, KrausChannel(matrices_from_json(require(b, "kraus", where), where), tc, tol)});
        }
        file.fragment.instruments.push_back(std::move(out));
    }
    file.fragment.validate(tol);
    return file;
}

FragmentFile load_fragment(const std::filesystem::path& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return parse_fragment(doc, tol);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

FrameChoice select_frame(const FragmentFile& file, const std::vector<std::string>& selectors, const Tolerances& tol) {
    for (const auto& sel : selectors) {
        const bool known = std::any_of(file.frames.begin(), file.frames.end(),
                                       [&](const FrameSpec& f) { return f.name == sel; });
        if (!known) throw ValidationError("no frame named '" + sel + "'");
    }
    FrameChoice choice;
    std::vector<FramePtr> parts;
    for (const auto& sys : file.systems) {
        const FrameSpec* picked = nullptr;
        for (const auto& f : file.frames) {
            if (f.system != sys.name) continue;
            if (std::find(selectors.begin(), selectors.end(), f.name) != selectors.end()) {
                picked = &f;
                break;
            }
            if (!picked) picked = &f;
        }
        if (picked) {
            parts.push_back(make_frame(picked->pair, tol));
            choice.names.push_back(picked->name);
        } else {
            Tolerances wide = tol;
            parts.push_back(make_frame(BasisPair::computational_fourier(sys.dim), wide));
            choice.names.push_back("computational-fourier");
        }
    }
    if (!parts.empty()) choice.frame = tensor_frame(parts);
    return choice;
}

}  // namespace kdrep::io
