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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fragment_io.hpp"
#include "kdrep/errors.hpp"
#include "kdrep/repr.hpp"
#include "kdrep/search.hpp"
#include "kdrep/verify.hpp"
#include "report.hpp"

namespace kdrep::cli {

using nlohmann::json;
using report::CsvTable;
using report::format_number;

namespace {

constexpr double kModulusSlack = 1e-12;

struct Common {
    std::string out_dir = ".";
    std::vector<std::string> frames;
};

struct RepresentArgs {
    Common common;
    std::string input;
};

struct VerifyArgs {
    Common common;
    std::string input;
    bool random = false;
    std::size_t dim = 2;
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    double tol = 1e-9;
};

struct CertifyArgs {
    Common common;
    std::string input;
    double tol = 1e-9;
};

struct SearchArgs {
    Common common;
    std::string input;
    std::string mode = "nonneg";
    std::size_t restarts = 20;
    std::uint64_t seed = 0;
    std::size_t max_iters = 4000;
    std::size_t dim = 2;
    std::string optimizer = "nelder-mead";
};

Tolerances base_tolerances() {
    Tolerances tol;
    if (const char* env = std::getenv("KDREP_MAX_DIM"); env && *env) {
        std::size_t v = 0;
        const char* end = env + std::char_traits<char>::length(env);
        const auto res = std::from_chars(env, end, v);
        if (res.ec != std::errc{} || res.ptr != end || v < 2) {
            throw io::ParseError(std::string("KDREP_MAX_DIM must be an integer >= 2, got '") + env + "'");
        }
        tol.max_dim = v;
    }
    return tol;
}

json complex_vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(io::complex_to_json(v(i)));
    return out;
}

json frame_to_json(const KdFrame& frame, const std::vector<std::string>& names) {
    json factors = json::array();
    for (const auto& f : frame.factors()) {
        factors.push_back({{"dim", f.dim()},
                           {"min_overlap", f.min_overlap()},
                           {"basis_a", io::basis_to_json(f.basis_a())},
                           {"basis_a_prime", io::basis_to_json(f.basis_a_prime())}});
    }
    return {{"names", names}, {"dim", frame.dim()}, {"size", frame.size()}, {"min_overlap", frame.min_overlap()},
            {"factors", std::move(factors)}};
}

std::string kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::state: return "state";
        case ObjectKind::effect: return "effect";
        case ObjectKind::channel: return "channel";
        case ObjectKind::instrument_branch: return "instrument_branch";
    }
    return "unknown";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

io::FrameChoice require_frame(const io::FragmentFile& file, const Common& c, const Tolerances& tol) {
    if (file.systems.empty()) throw DimensionError("fragment declares no systems");
    return io::select_frame(file, c.frames, tol);
}

// ---------------------------------------------------------------- represent

int cmd_represent(const RepresentArgs& a, Tolerances tol, std::ostream& out) {
    const io::FragmentFile file = io::load_fragment(a.input, tol);
    const io::FrameChoice choice = require_frame(file, a.common, tol);
    const KdFrame& frame = *choice.frame;
    const auto objects = represent_fragment(file.fragment, choice.frame);

    CsvTable vectors({"object", "i", "i'", "re", "im"});
    CsvTable channels({"object", "i", "i'", "j", "j'", "re", "im"});
    json listed = json::array();
    for (const auto& o : objects) {
        listed.push_back({{"id", o.id}, {"kind", kind_name(o.kind)}, {"trace_class", to_string(o.trace_class)}});
        if (o.kind == ObjectKind::state || o.kind == ObjectKind::effect) {
            for (Eigen::Index r = 0; r < o.entries.rows(); ++r) {
                const auto [i, ip] = report::frame_labels(frame, static_cast<std::size_t>(r));
                const Complex z = o.entries(r, 0);
                vectors.add_row({o.id, i, ip, format_number(z.real()), format_number(z.imag())});
            }
        } else {
            for (Eigen::Index c = 0; c < o.entries.cols(); ++c) {
                const auto [i, ip] = report::frame_labels(frame, static_cast<std::size_t>(c));
                for (Eigen::Index r = 0; r < o.entries.rows(); ++r) {
                    const auto [j, jp] = report::frame_labels(frame, static_cast<std::size_t>(r));
                    const Complex z = o.entries(r, c);
                    channels.add_row({o.id, i, ip, j, jp, format_number(z.real()), format_number(z.imag())});
                }
            }
        }
    }
    const NegativityReport neg = negativity_measures(objects);
    json summary{{"meta", report::metadata("represent", std::nullopt, tol)},
                 {"input", a.input},
                 {"frame", frame_to_json(frame, choice.names)},
                 {"objects", std::move(listed)},
                 {"total_negativity", neg.total_negativity},
                 {"total_imaginarity", neg.total_imaginarity}};

    report::write_outputs(a.common.out_dir, {{"represent.csv", vectors.str()},
                                             {"represent_channels.csv", channels.str()},
                                             {"represent.json", dump(summary)}});
    out << "represented " << objects.size() << " objects in frame " << join(choice.names, " x ") << " ("
        << frame.size() << " elements)\n";
    return exit_code::ok;
}

// ------------------------------------------------------------------- verify

struct SuiteRow {
    std::string suite;
    CheckResult check;
};

void region_rows(std::vector<SuiteRow>& rows, double min_margin, double max_modulus, double tol) {
    rows.push_back({"region", {"min_margin", min_margin >= -tol, min_margin}});
    rows.push_back({"region", {"max_modulus", max_modulus <= 1.0 + kModulusSlack, max_modulus}});
}

bool wants(const std::string& suite, const char* name) { return suite == "all" || suite == name; }

int cmd_verify(const VerifyArgs& a, Tolerances tol, std::ostream& out) {
    std::vector<SuiteRow> rows;
    json details = json::object();

    if (a.random) {
        if (!a.input.empty()) throw ValidationError("--random does not take an input file");
        check_dimension(a.dim, tol.max_dim);
        SuiteOptions opts;
        opts.dim = a.dim;
        opts.trials = a.trials;
        opts.seed = a.seed;
        opts.tol = a.tol;
        opts.tolerances = tol;
        if (wants(a.suite, "functoriality")) {
            for (auto& c : random_functoriality_suite(opts)) rows.push_back({"functoriality", std::move(c)});
        }
        if (wants(a.suite, "normalization")) {
            for (auto& c : random_normalization_suite(opts)) rows.push_back({"normalization", std::move(c)});
        }
        if (wants(a.suite, "region")) {
            const RegionSweep sweep = random_region_sweep(opts);
            region_rows(rows, sweep.min_margin, sweep.max_modulus, a.tol);
            details["region"] = {{"points", sweep.points},
                                 {"min_margin", sweep.min_margin},
                                 {"max_modulus", sweep.max_modulus},
                                 {"min_real", sweep.min_real},
                                 {"max_imag", sweep.max_imag}};
        }
    } else {
        if (a.input.empty()) throw ValidationError("verify needs an input file or --random");
        const io::FragmentFile file = io::load_fragment(a.input, tol);
        const io::FrameChoice choice = require_frame(file, a.common, tol);
        const Fragment& fr = file.fragment;
        if (wants(a.suite, "functoriality")) {
            rows.push_back({"functoriality", verify_identity_channel(choice.frame, a.tol)});
            for (const auto& first : fr.channels) {
                for (const auto& second : fr.channels) {
                    CheckResult c =
                        verify_sequential(first.value, second.value, choice.frame, choice.frame, choice.frame, a.tol);
                    c.name = "sequential:" + first.name + ">" + second.name;
                    rows.push_back({"functoriality", std::move(c)});
                }
            }
            const auto& factors = choice.frame->factors();
            if (factors.size() == 2) {
                CheckResult c = verify_swap(make_frame(factors[0], tol), make_frame(factors[1], tol), a.tol);
                rows.push_back({"functoriality", std::move(c)});
            }
        }
        if (wants(a.suite, "normalization")) {
            for (auto& c : verify_normalization(fr, choice.frame, a.tol).checks) {
                rows.push_back({"normalization", std::move(c)});
            }
        }
        if (wants(a.suite, "region")) {
            double min_margin = 1.0;
            double max_modulus = 0.0;
            std::size_t points = 0;
            for (const auto& s : fr.states) {
                const ComplexVector mu = represent_state(s.value, choice.frame).entries;
                for (Eigen::Index k = 0; k < mu.size(); ++k) {
                    min_margin = std::min(min_margin, region_check(KdPoint::from_complex(mu(k))));
                    max_modulus = std::max(max_modulus, std::abs(mu(k)));
                    ++points;
                }
            }
            region_rows(rows, min_margin, max_modulus, a.tol);
            details["region"] = {{"points", points}, {"min_margin", min_margin}, {"max_modulus", max_modulus}};
        }
        details["frame"] = frame_to_json(*choice.frame, choice.names);
    }

    CsvTable table({"suite", "check", "passed", "value"});
    json checks = json::array();
    bool all_passed = true;
    for (const auto& r : rows) {
        all_passed = all_passed && r.check.passed;
        table.add_row({r.suite, r.check.name, r.check.passed ? "true" : "false", format_number(r.check.max_deviation)});
        checks.push_back({{"suite", r.suite},
                          {"check", r.check.name},
                          {"passed", r.check.passed},
                          {"value", r.check.max_deviation}});
    }
    json summary{{"meta", report::metadata("verify", a.random ? std::optional(a.seed) : std::nullopt, tol)},
                 {"mode", a.random ? "random" : "file"},
                 {"suite", a.suite},
                 {"tolerance", a.tol},
                 {"passed", all_passed},
                 {"checks", std::move(checks)},
                 {"details", std::move(details)}};
    if (a.random) {
        summary["dim"] = a.dim;
        summary["trials"] = a.trials;
    } else {
        summary["input"] = a.input;
    }
    report::write_outputs(a.common.out_dir, {{"verify.csv", table.str()}, {"verify.json", dump(summary)}});

    for (const auto& r : rows) {
        out << (r.check.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.check.name
            << " value=" << format_number(r.check.max_deviation) << '\n';
    }
    out << (all_passed ? "all checks passed\n" : "some checks failed\n");
    return all_passed ? exit_code::ok : exit_code::check_failed;
}

// ------------------------------------------------------------------ certify

json entry_ref_to_json(const EntryRef& e, const KdFrame& frame) {
    const auto [i, ip] = report::frame_labels(frame, e.row);
    json j{{"object", e.object}, {"row", e.row}, {"i", i}, {"i'", ip}, {"value", io::complex_to_json(e.value)}};
    if (e.column) {
        const auto [ci, cip] = report::frame_labels(frame, *e.column);
        j["column"] = *e.column;
        j["j"] = i;
        j["j'"] = ip;
        j["i"] = ci;
        j["i'"] = cip;
    }
    return j;
}

int cmd_certify(const CertifyArgs& a, Tolerances tol, std::ostream& out) {
    if (!(a.tol >= 0.0)) throw ValidationError("--tol must be nonnegative");
    const io::FragmentFile file = io::load_fragment(a.input, tol);
    const io::FrameChoice choice = require_frame(file, a.common, tol);
    Tolerances ctol = tol;
    ctol.nonnegativity = a.tol;
    const CertificationReport cert = certify(file.fragment, choice.frame, ctol);
    const NegativityReport neg = negativity_measures(file.fragment, choice.frame);

    const auto& sub = cert.substochasticity;
    json cert_json{{"verdict", to_string(cert.verdict)},
                   {"tolerance", cert.tolerance},
                   {"max_abs_imag", cert.max_abs_imag},
                   {"min_real_entry", cert.min_real_entry},
                   {"worst_offender", cert.worst_offender ? entry_ref_to_json(*cert.worst_offender, *choice.frame)
                                                          : json(nullptr)},
                   {"substochasticity",
                    {{"evaluated", sub.evaluated},
                     {"passed", sub.passed},
                     {"state_error", sub.state_error},
                     {"effect_error", sub.effect_error},
                     {"channel_error", sub.channel_error},
                     {"allowance", sub.allowance}}}};
    json per_object = json::array();
    CsvTable table({"object", "negativity", "imaginarity"});
    for (const auto& o : neg.per_object) {
        per_object.push_back({{"id", o.id}, {"negativity", o.negativity}, {"imaginarity", o.imaginarity}});
        table.add_row({o.id, format_number(o.negativity), format_number(o.imaginarity)});
    }
    json summary{{"meta", report::metadata("certify", std::nullopt, ctol)},
                 {"input", a.input},
                 {"frame", frame_to_json(*choice.frame, choice.names)},
                 {"certification", std::move(cert_json)},
                 {"negativity",
                  {{"total_negativity", neg.total_negativity},
                   {"total_imaginarity", neg.total_imaginarity},
                   {"per_object", std::move(per_object)}}}};
    report::write_outputs(a.common.out_dir, {{"certify.csv", table.str()}, {"certify.json", dump(summary)}});

    out << "verdict: " << to_string(cert.verdict) << '\n'
        << "max_abs_imag: " << format_number(cert.max_abs_imag) << '\n'
        << "min_real_entry: " << format_number(cert.min_real_entry) << '\n';
    if (cert.worst_offender) {
        const auto& w = *cert.worst_offender;
        out << "worst entry: " << w.object << " row " << w.row;
        if (w.column) out << " column " << *w.column;
        out << " = " << format_number(w.value.real()) << (w.value.imag() < 0 ? " - " : " + ")
            << format_number(std::abs(w.value.imag())) << "i\n";
    }
    return cert.verdict == Verdict::nonnegative ? exit_code::ok : exit_code::negative;
}

// ------------------------------------------------------------------- search

SearchConfig search_config(const SearchArgs& a, const Tolerances& tol) {
    SearchConfig cfg;
    cfg.restarts = a.restarts;
    cfg.max_iters = a.max_iters;
    cfg.seed = a.seed;
    cfg.tolerances = tol;
    cfg.optimizer = a.optimizer == "random" ? SearchOptimizer::random_search : SearchOptimizer::nelder_mead;
    return cfg;
}

CsvTable trace_table(const SearchResult& r) {
    CsvTable t({"restart", "best_value"});
    for (std::size_t i = 0; i < r.trace.size(); ++i) t.add_row({std::to_string(i), format_number(r.trace[i])});
    return t;
}

std::string complex_text(Complex z) {
    return format_number(z.real()) + (z.imag() < 0 ? "-" : "+") + format_number(std::abs(z.imag())) + "i";
}

void print_basis(std::ostream& out, const char* label, const ComplexMatrix& basis) {
    out << label << ":\n";
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        out << "  [";
        for (Eigen::Index r = 0; r < basis.rows(); ++r) out << (r ? ", " : "") << complex_text(basis(r, c));
        out << "]\n";
    }
}

int cmd_search_nonneg(const SearchArgs& a, const Tolerances& tol, std::ostream& out) {
    if (a.input.empty()) throw ValidationError("--mode nonneg needs an input fragment");
    const io::FragmentFile file = io::load_fragment(a.input, tol);
    if (file.systems.empty()) throw DimensionError("fragment declares no systems");
    SearchConfig cfg = search_config(a, tol);
    cfg.objective = SearchObjective::fragment_negativity;
    const SearchResult r = search_nonnegative(file.fragment, cfg);
    const bool found = r.best_objective <= tol.nonnegativity && r.best_frame;

    std::vector<report::OutputFile> files;
    json summary{{"meta", report::metadata("search", a.seed, tol)},
                 {"mode", a.mode},
                 {"input", a.input},
                 {"restarts", a.restarts},
                 {"max_iters", a.max_iters},
                 {"best_objective", r.best_objective},
                 {"witness_found", found},
                 {"heuristic", true},
                 {"evaluations", r.evaluations},
                 {"trace", r.trace},
                 {"best_params", r.best_params}};
    if (r.best_frame) {
        std::vector<std::string> names;
        json frames = json::array();
        const auto& factors = r.best_frame->factors();
        for (std::size_t s = 0; s < factors.size(); ++s) {
            const std::string& sys = file.systems[s].name;
            names.push_back("witness-" + sys);
            frames.push_back(io::frame_spec_to_json(names.back(), sys, factors[s]));
        }
        summary["frame"] = frame_to_json(*r.best_frame, names);
        if (found) {
            json witness = file.source;
            witness["schema_version"] = io::kSchemaVersion;
            witness["frames"] = std::move(frames);
            files.push_back({"witness_fragment.json", dump(witness)});
        }
    }
    files.push_back({"search.csv", trace_table(r).str()});
    files.push_back({"search.json", dump(summary)});
    report::write_outputs(a.common.out_dir, files);

    out << "best objective: " << format_number(r.best_objective) << '\n';
    if (found) {
        out << "nonnegative frame found; written to witness_fragment.json\n";
        for (const auto& f : r.best_frame->factors()) {
            print_basis(out, "basis_a", f.basis_a());
            print_basis(out, "basis_a_prime", f.basis_a_prime());
        }
    } else {
        out << "no nonnegative frame found (this does not prove none exists)\n";
    }
    return exit_code::ok;
}

int cmd_search_extremal(const SearchArgs& a, const Tolerances& tol, std::ostream& out) {
    if (!a.input.empty()) throw ValidationError("extremal modes take --dim, not an input fragment");
    check_dimension(a.dim, tol.max_dim);
    SearchConfig cfg = search_config(a, tol);
    const ExtremalMode mode = a.mode == "min-real" ? ExtremalMode::min_real : ExtremalMode::max_imag;
    cfg.objective = mode == ExtremalMode::min_real ? SearchObjective::min_real_entry : SearchObjective::max_imag_entry;
    const SearchResult r = search_extremal(mode, a.dim, cfg);

    json summary{{"meta", report::metadata("search", a.seed, tol)},
                 {"mode", a.mode},
                 {"dim", a.dim},
                 {"restarts", a.restarts},
                 {"max_iters", a.max_iters},
                 {"best_value", r.best_objective},
                 {"evaluations", r.evaluations},
                 {"trace", r.trace},
                 {"best_params", r.best_params},
                 {"observed",
                  {{"points", r.observed.points},
                   {"min_real", r.observed.min_real},
                   {"max_imag", r.observed.max_imag},
                   {"max_modulus", r.observed.max_modulus},
                   {"min_region_margin", r.observed.min_region_margin}}}};
    if (r.best_frame) summary["frame"] = frame_to_json(*r.best_frame, {"best"});
    if (r.best_state) summary["state"] = complex_vector_to_json(*r.best_state);
    if (r.best_entry && r.best_frame) {
        const auto [i, ip] = report::frame_labels(*r.best_frame, *r.best_entry);
        summary["entry"] = {{"index", *r.best_entry}, {"i", i}, {"i'", ip}};
    }
    report::write_outputs(a.common.out_dir, {{"search.csv", trace_table(r).str()}, {"search.json", dump(summary)}});

    out << "best value: " << format_number(r.best_objective) << '\n';
    if (r.best_entry && r.best_frame) {
        const auto [i, ip] = report::frame_labels(*r.best_frame, *r.best_entry);
        out << "entry: (" << i << ", " << ip << ")\n";
    }
    if (r.best_state) {
        out << "state: [";
        for (Eigen::Index k = 0; k < r.best_state->size(); ++k) out << (k ? ", " : "") << complex_text((*r.best_state)(k));
        out << "]\n";
    }
    if (r.best_frame) {
        const auto& f = r.best_frame->factors().front();
        print_basis(out, "basis_a", f.basis_a());
        print_basis(out, "basis_a_prime", f.basis_a_prime());
    }
    return exit_code::ok;
}

int cmd_search(const SearchArgs& a, const Tolerances& tol, std::ostream& out) {
    return a.mode == "nonneg" ? cmd_search_nonneg(a, tol, out) : cmd_search_extremal(a, tol, out);
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--frame", c.frames, "Frame name to use (repeat per system)");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kirkwood-Dirac frame representations of quantum processes", "kdrep"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "kdrep 0.1.0");

    RepresentArgs rep;
    auto* represent = app.add_subcommand("represent", "Write mu/xi/Gamma tables for a fragment");
    represent->add_option("input", rep.input, "Fragment file")->required();
    add_common(represent, rep.common);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Run structural checks on a fragment or random instances");
    verify->add_option("input", ver.input, "Fragment file");
    verify->add_flag("--random", ver.random, "Use randomly sampled instances");
    verify->add_option("--dim", ver.dim, "Dimension for --random")->capture_default_str();
    verify->add_option("--suite", ver.suite, "Check suite")
        ->check(CLI::IsMember({"functoriality", "normalization", "region", "all"}))
        ->capture_default_str();
    verify->add_option("--seed", ver.seed, "Random seed")->capture_default_str();
    verify->add_option("--trials", ver.trials, "Trials per check")->capture_default_str();
    verify->add_option("--tol", ver.tol, "Pass threshold on deviations")->capture_default_str();
    add_common(verify, ver.common);

    CertifyArgs cer;
    auto* cert = app.add_subcommand("certify", "Decide whether a fragment is nonnegative in a frame");
    cert->add_option("input", cer.input, "Fragment file")->required();
    cert->add_option("--tol", cer.tol, "Allowed -Re and |Im| per entry")->capture_default_str();
    add_common(cert, cer.common);

    SearchArgs sea;
    auto* search = app.add_subcommand("search", "Search basis pairs for nonnegative or extremal frames");
    search->add_option("input", sea.input, "Fragment file (nonneg mode)");
    search->add_option("--mode", sea.mode, "Search objective")
        ->check(CLI::IsMember({"nonneg", "min-real", "max-imag"}))
        ->capture_default_str();
    search->add_option("--restarts", sea.restarts, "Independent restarts")->check(CLI::PositiveNumber)->capture_default_str();
    search->add_option("--seed", sea.seed, "Random seed")->capture_default_str();
    search->add_option("--max-iters", sea.max_iters, "Iterations per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--dim", sea.dim, "Dimension for extremal modes")->capture_default_str();
    search->add_option("--optimizer", sea.optimizer, "Local optimizer")
        ->check(CLI::IsMember({"nelder-mead", "random"}))
        ->capture_default_str();
    add_common(search, sea.common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::parse;
    }

    const Tolerances tol = base_tolerances();
    if (represent->parsed()) return cmd_represent(rep, tol, out);
    if (verify->parsed()) return cmd_verify(ver, tol, out);
    if (cert->parsed()) return cmd_certify(cer, tol, out);
    return cmd_search(sea, tol, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const AdmissibilityError& e) {
        err << "inadmissible frame: " << e.what() << " (min overlap " << format_number(e.min_overlap()) << ")\n";
        return exit_code::admissibility;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << " (residual " << format_number(e.residual()) << ")\n";
        return exit_code::validation;
    } catch (const DimensionError& e) {
        err << "dimension error: " << e.what() << '\n';
        return exit_code::validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::check_failed;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace kdrep::cli
