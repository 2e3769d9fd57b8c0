// Copyright 2026 The CSM Authors
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

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csm/error.hpp"
#include "csm/gleason.hpp"
#include "csm/io/json_io.hpp"
#include "csm/partition.hpp"
#include "csm/rng.hpp"
#include "csm/simulate.hpp"
#include "csm/topology.hpp"
#include "csm/uhlhorn.hpp"

#ifndef CSM_VERSION
#define CSM_VERSION "dev"
#endif

namespace csm::cli {
namespace {

using io::Json;

// A path is "ok" when both endpoint errors and the unitarity deviation stay
// at or below this bound.
constexpr double kPathBound = 1e-9;

enum class Format { Json, Text };

struct RunConfig {
    std::uint64_t seed = 0;
    double tolerance_abs = Tolerance::kDefault;
    Format format = Format::Json;

    Tolerance tolerance() const { return Tolerance(tolerance_abs); }
};

struct Outcome {
    Json report;
    int code = kSuccess;
};

// --- text rendering -------------------------------------------------------

void write_scalar(const Json &j, std::ostream &out) {
    if (j.is_number_float()) {
        out << std::setprecision(10) << j.get<double>();
    } else if (j.is_string()) {
        out << j.get<std::string>();
    } else {
        out << j.dump();
    }
}

void write_inline(const Json &j, std::ostream &out) {
    if (j.is_array()) {
        out << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0) {
                out << ", ";
            }
            write_inline(j[i], out);
        }
        out << ']';
    } else {
        write_scalar(j, out);
    }
}

void write_text(const Json &j, const std::string &prefix, std::ostream &out) {
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            write_text(value, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    if (j.is_array() && !j.empty() && j[0].is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            write_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out << prefix << ": ";
    write_inline(j, out);
    out << '\n';
}

void emit(const Json &report, Format format, std::ostream &out) {
    if (format == Format::Json) {
        out << report.dump(2) << '\n';
    } else {
        write_text(report, "", out);
    }
}

Json optional_json(const std::optional<Json> &j) {
    return j ? *j : Json(nullptr);
}

// --- commands -------------------------------------------------------------

Outcome cmd_born(const RunConfig &cfg, const std::string &density_path,
                 const std::string &context_path) {
    const auto tol = cfg.tolerance();
    const auto rho = io::parse_density(io::load_json_file(density_path), tol);
    const auto context = io::parse_context(io::load_json_file(context_path), tol);
    const RealVector probs = context_distribution(rho, context, tol);
    Json modalities = Json::array();
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        modalities.push_back(probs(i));
    }
    return {Json{{"command", "born"},
                 {"dim", context.dim()},
                 {"context", context.label()},
                 {"probabilities", modalities},
                 {"sum", probs.sum()}},
            kSuccess};
}

Outcome cmd_gleason_fit(const RunConfig &cfg, const std::string &samples_path) {
    const auto tol = cfg.tolerance();
    const Json doc = io::load_json_file(samples_path);
    Json report{{"command", "gleason-fit"}};
    std::vector<gleason::FrameSample> samples;
    if (doc.is_object() && doc.contains("contexts")) {
        const auto grouped = io::parse_context_values(doc, tol);
        const auto validation = gleason::validate_frame_function(grouped, tol);
        report["validation"] = Json{{"max_deviation", validation.max_deviation},
                                    {"worst_context", validation.worst_context},
                                    {"passed", validation.passed}};
        if (!validation.passed) {
            return {report, kNegative};
        }
        for (const auto &entry : grouped) {
            for (std::size_t i = 0; i < entry.context.size(); ++i) {
                samples.push_back({entry.context.projector(i), entry.values[i]});
            }
        }
    } else {
        samples = io::parse_frame_samples(doc);
    }
    const auto fit = gleason::reconstruct_density(samples, tol);
    const auto pure = gleason::born_case_check(fit.rho, tol);
    report["dim"] = fit.rho.dim();
    report["sample_count"] = samples.size();
    report["rho"] = io::to_json(fit.rho.matrix());
    report["residual_rms"] = fit.residual_rms;
    report["design_rank"] = fit.design_rank;
    report["condition_number"] = fit.condition_number;
    report["psd_correction"] = fit.psd_correction;
    report["pure_state"] =
        pure ? io::to_json(pure->representative()) : Json(nullptr);
    return {report, kSuccess};
}

Json witness_json(const uhlhorn::TransformClassification &c) {
    if (!c.witness) {
        return nullptr;
    }
    const auto &w = *c.witness;
    return Json{{"indices", w.indices},
                {"source_invariant", io::to_json(w.source_invariant)},
                {"target_invariant", io::to_json(w.target_invariant)}};
}

Outcome cmd_uhlhorn(const RunConfig &cfg, const std::string &raymap_path) {
    const auto tol = cfg.tolerance();
    const auto map = io::parse_raymap(io::load_json_file(raymap_path), tol);
    Json report{{"command", "uhlhorn"}, {"dim", map.dim()}, {"pair_count", map.pairs().size()}};

    const auto check = uhlhorn::check_orthogonality_preserving(map, tol);
    Json ortho{{"preserving", check.preserving}, {"counterexample", nullptr}};
    if (check.counterexample) {
        const auto &v = *check.counterexample;
        ortho["counterexample"] = Json{{"pair", {v.first, v.second}},
                                       {"source_norm", v.source_norm},
                                       {"target_norm", v.target_norm}};
    }
    report["orthogonality"] = ortho;
    if (!check) {
        return {report, kNegative};
    }

    const auto classification = uhlhorn::classify_transform(map, tol);
    report["classification"] = Json{{"verdict", uhlhorn::to_string(classification.verdict)},
                                    {"witness", witness_json(classification)}};
    if (classification.verdict == uhlhorn::Branch::Neither) {
        return {report, kNegative};
    }
    try {
        const auto fit = uhlhorn::fit_transform(map, tol);
        report["fit"] = Json{{"matrix", io::to_json(fit.transform.matrix())},
                             {"antiunitary", fit.transform.antiunitary()},
                             {"branch_ambiguous", fit.branch_ambiguous},
                             {"fiduciary", fit.fiduciary_label},
                             {"residual", fit.residual}};
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::FitFailed) {
            throw;
        }
        report["fit"] = Json{{"error", e.what()}};
        return {report, kNegative};
    }
    return {report, kSuccess};
}

Outcome cmd_ks(const RunConfig &cfg, const std::string &instance_path) {
    const auto inst = partition::load_ks_instance(
        io::parse_ks_document(io::load_json_file(instance_path)), cfg.tolerance());
    const auto result = partition::search_assignment(inst);
    const bool unsat = result.status == partition::SatStatus::Unsat;
    std::optional<Json> certificate;
    if (result.certificate) {
        certificate = Json{{"kind", "parity"},
                           {"basis_count", result.certificate->basis_count},
                           {"multiplicities", result.certificate->multiplicities}};
    }
    std::optional<Json> assignment;
    if (result.assignment) {
        assignment = Json(*result.assignment);
    }
    return {Json{{"command", "ks"},
                 {"dim", inst.dim()},
                 {"vector_count", inst.vector_count()},
                 {"basis_count", inst.basis_count()},
                 {"status", unsat ? "UNSAT" : "SAT"},
                 {"nodes_explored", result.nodes_explored},
                 {"certificate", optional_json(certificate)},
                 {"assignment", optional_json(assignment)}},
            unsat ? kSuccess : kNegative};
}

topology::Permutation load_permutation(const std::string &arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        try {
            return io::parse_permutation(Json::parse(arg));
        } catch (const Json::parse_error &e) {
            throw Error(ErrorKind::MalformedDocument, std::string("permutation: ") + e.what());
        }
    }
    return io::parse_permutation(io::load_json_file(arg));
}

Outcome cmd_perm_path(const RunConfig &, const std::string &permutation, int steps,
                      bool emit_samples) {
    const auto sigma = load_permutation(permutation);
    if (steps < 2) {
        throw Error(ErrorKind::InvalidArgument, "--steps must be at least 2");
    }
    const auto path = topology::unitary_path_to_identity(sigma, steps);
    const auto obstruction = topology::orthogonal_obstruction(sigma);
    const bool ok = path.endpoint_errors.first <= kPathBound &&
                    path.endpoint_errors.second <= kPathBound &&
                    path.max_unitarity_deviation <= kPathBound;
    Json unitary{{"steps", path.steps},
                 {"endpoint_errors", {path.endpoint_errors.first, path.endpoint_errors.second}},
                 {"max_unitarity_deviation", path.max_unitarity_deviation},
                 {"max_step_distance", path.max_step_distance},
                 {"generator", io::to_json(path.generator)},
                 {"path_ok", ok}};
    if (emit_samples) {
        Json samples = Json::array();
        for (const auto &u : path.samples) {
            samples.push_back(io::to_json(u));
        }
        unitary["samples"] = samples;
    } else {
        unitary["endpoints"] = Json{{"start", io::to_json(path.samples.front())},
                                    {"end", io::to_json(path.samples.back())}};
    }
    return {Json{{"command", "perm-path"},
                 {"permutation", io::to_json(sigma)},
                 {"sign", sigma.sign()},
                 {"unitary_path", unitary},
                 {"orthogonal", {{"det_sign", obstruction.det_sign},
                                 {"connected_in_orthogonal_group",
                                  obstruction.connected_in_orthogonal_group}}}},
            ok ? kSuccess : kNegative};
}

Outcome cmd_simulate(const RunConfig &cfg, const std::string &initial_path,
                     const std::string &contexts_path, std::uint64_t repeats) {
    if (repeats == 0) {
        throw Error(ErrorKind::InvalidArgument, "--repeats must be positive");
    }
    const auto tol = cfg.tolerance();
    const auto initial = io::parse_projector(io::load_json_file(initial_path));
    const auto contexts = io::parse_context_list(io::load_json_file(contexts_path), tol);
    std::vector<std::vector<std::uint64_t>> counts;
    for (const auto &c : contexts) {
        counts.emplace_back(c.size(), 0);
    }
    const CounterRng root(cfg.seed);
    Json log = Json::array();
    for (std::uint64_t r = 0; r < repeats; ++r) {
        const auto records = simulate_sequence(initial, contexts, root.split(r).key(), tol);
        for (std::size_t step = 0; step < records.size(); ++step) {
            ++counts[step][static_cast<std::size_t>(records[step].outcome)];
            if (r == 0) {
                log.push_back({{"context", records[step].context_label},
                               {"outcome", records[step].outcome}});
            }
        }
    }
    Json frequencies = Json::array();
    for (const auto &row : counts) {
        Json f = Json::array();
        for (auto c : row) {
            f.push_back(static_cast<double>(c) / static_cast<double>(repeats));
        }
        frequencies.push_back(f);
    }
    return {Json{{"command", "simulate"},
                 {"seed", cfg.seed},
                 {"repeats", repeats},
                 {"dim", initial.dim()},
                 {"outcome_log", log},
                 {"counts", counts},
                 {"frequencies", frequencies}},
            kSuccess};
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Contexts, modalities and the Born rule: numerical checks", "csm"};
    app.set_version_flag("--version", std::string("csm ") + CSM_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "json";
    app.add_option("--tol", cfg.tolerance_abs, "Absolute tolerance for approximate equality")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed of the counter-based generator")->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::function<Outcome()> action;

    std::string density_path, context_path;
    auto *born = app.add_subcommand("born", "Born probabilities Tr(ρP) over a context");
    born->add_option("density", density_path, "Density operator JSON")->required();
    born->add_option("context", context_path, "Context JSON")->required();
    born->callback([&] { action = [&] { return cmd_born(cfg, density_path, context_path); }; });

    std::string samples_path;
    auto *gleason_fit = app.add_subcommand("gleason-fit", "Reconstruct ρ from frame-function samples");
    gleason_fit->add_option("samples", samples_path, "Frame-sample JSON")->required();
    gleason_fit->callback([&] { action = [&] { return cmd_gleason_fit(cfg, samples_path); }; });

    std::string raymap_path;
    auto *uhl = app.add_subcommand("uhlhorn", "Certify and fit an orthogonality-preserving ray map");
    uhl->add_option("raymap", raymap_path, "Ray-map JSON")->required();
    uhl->callback([&] { action = [&] { return cmd_uhlhorn(cfg, raymap_path); }; });

    std::string instance_path;
    auto *ks = app.add_subcommand("ks", "Search for a noncontextual {0,1} valuation");
    ks->add_option("instance", instance_path, "KS instance JSON")->required();
    ks->callback([&] { action = [&] { return cmd_ks(cfg, instance_path); }; });

    std::string permutation;
    int steps = 101;
    bool emit_samples = false;
    auto *perm = app.add_subcommand("perm-path", "Unitary path from I to a permutation matrix");
    perm->add_option("permutation", permutation, "Permutation JSON file or inline JSON")->required();
    perm->add_option("--steps", steps, "Number of path samples")->capture_default_str();
    perm->add_flag("--emit-samples", emit_samples, "Include every sample matrix");
    perm->callback(
        [&] { action = [&] { return cmd_perm_path(cfg, permutation, steps, emit_samples); }; });

    std::string initial_path, contexts_path;
    std::uint64_t repeats = 1;
    auto *sim = app.add_subcommand("simulate", "Sequential measurement with the repeatability update");
    sim->add_option("initial", initial_path, "Initial projector JSON")->required();
    sim->add_option("contexts", contexts_path, "Context or context-list JSON")->required();
    sim->add_option("--repeats", repeats, "Independent runs to aggregate")->capture_default_str();
    sim->callback([&] {
        action = [&] { return cmd_simulate(cfg, initial_path, contexts_path, repeats); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion &) {
        out << app.version() << '\n';
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "csm: " << e.what() << '\n';
        return kUsage;
    }

    cfg.format = format == "text" ? Format::Text : Format::Json;
    try {
        (void)cfg.tolerance();
        const Outcome outcome = action();
        emit(outcome.report, cfg.format, out);
        return outcome.code;
    } catch (const Error &e) {
        err << "csm: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "csm: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace csm::cli
