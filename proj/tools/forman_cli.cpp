// forman: build a combinatorial vector field from sampled vector data.
//
//   forman gen --model intro --out intro.csv
//   forman run intro.csv --complex cubical --alpha 0.9 --out report.json
//   forman verify intro.csv --report report.json

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "forman/datagen.hpp"
#include "forman/error.hpp"
#include "forman/field_io.hpp"
#include "forman/pipeline.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitInvalid = 3;

struct GenOptions {
    std::string model = "intro";
    std::string out;
    std::string preset = "desk";
    std::size_t n = 0;
    double dt = 0.0;
};

struct RunOptions {
    std::string input;
    std::string complex = "delaunay2d";
    std::string gradient = "off";
    std::string backend = "bipartite";
    std::string landmarks;
    std::string relation;
    std::string out;
    std::string dot;
    std::string arrows;
};

struct VerifyOptions {
    std::string input;
    std::string report;
    std::string landmarks;
    std::string relation;
};

forman::PipelineInputs load_inputs(const std::string& input, const std::string& landmarks,
                                   const std::string& relation)
{
    forman::PipelineInputs in;
    in.field = forman::read_field_csv(input);
    if (!landmarks.empty()) in.landmarks = forman::read_points_csv(landmarks, 'y');
    if (!relation.empty()) in.relation = forman::read_relation_csv(relation);
    return in;
}

int do_gen(const GenOptions& o)
{
    forman::FieldSample sample;
    if (o.model == "lorenz") {
        const bool desk = o.preset == "desk";
        if (!desk && o.preset != "full") throw forman::ParameterError("preset must be desk or full");
        const std::size_t n = o.n ? o.n : (desk ? forman::kLorenzDeskPoints : forman::kLorenzDefaultPoints);
        const double dt = o.dt > 0.0 ? o.dt : (desk ? forman::kLorenzDeskStep : forman::kLorenzDefaultStep);
        sample = forman::gen_lorenz_trajectory(forman::lorenz_default_start(), dt, n);
    } else {
        sample = forman::gen_grid_field(o.model);
    }
    if (o.out.empty() || o.out == "-")
        forman::write_field_csv(std::cout, sample);
    else
        forman::write_field_csv(o.out, sample);
    return 0;
}

int do_run(const RunOptions& o, forman::PipelineConfig config)
{
    config.complex_kind = forman::parse_complex_kind(o.complex);
    config.gradient_mode = forman::parse_gradient_mode(o.gradient);
    if (o.backend == "bipartite")
        config.backend = forman::Backend::bipartite;
    else if (o.backend == "bnb")
        config.backend = forman::Backend::branch_and_bound;
    else
        throw forman::ParameterError("backend must be bipartite or bnb");
    config.validate();

    const auto analysis = forman::run_pipeline(config, load_inputs(o.input, o.landmarks, o.relation));
    const std::string report = forman::report_json(analysis);
    if (o.out.empty() || o.out == "-")
        std::cout << report;
    else
        forman::write_text(o.out, report);
    if (!o.dot.empty()) forman::write_text(o.dot, forman::flow_dot(analysis));
    if (!o.arrows.empty()) forman::write_text(o.arrows, forman::arrows_csv(analysis));

    std::cerr << "cells " << analysis.complex.size() << ", pairs " << analysis.costs.pairs.size() << ", matched "
              << analysis.matching.pairs.size() << ", critical " << analysis.matching.critical.size()
              << ", cycles " << analysis.recurrence.cycles.size() << ", objective "
              << forman::format_number(analysis.matching.objective) << '\n';
    if (!analysis.verification.ok()) {
        std::cerr << "verification failed: " << analysis.verification.summary() << '\n';
        return kExitInvalid;
    }
    return 0;
}

int do_verify(const VerifyOptions& o)
{
    const auto stored = forman::parse_report(forman::read_text(o.report));
    const auto rt = forman::verify_report(stored, load_inputs(o.input, o.landmarks, o.relation));
    if (!rt.verification.ok() || !rt.consistent) {
        std::cerr << "verification failed: " << rt.detail << '\n';
        return kExitInvalid;
    }
    std::cerr << "ok: " << stored.matching.pairs.size() << " pairs, " << stored.matching.critical.size()
              << " critical cells\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorial vector fields from sampled vector data"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a sample field as CSV");
    gen_cmd->add_option("--model", gen.model, "intro, lotka_volterra, sink, linear:a,b,c,d or lorenz")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Output CSV (stdout when omitted)");
    gen_cmd->add_option("--preset", gen.preset, "Lorenz preset: desk (300 points, dt 0.02) or full (1000 points, dt 0.2)")->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "Lorenz point count (overrides the preset)");
    gen_cmd->add_option("--dt", gen.dt, "Lorenz Euler step (overrides the preset)");

    RunOptions run;
    forman::PipelineConfig config;
    auto* run_cmd = app.add_subcommand("run", "Build, solve and analyse");
    run_cmd->add_option("input", run.input, "Field CSV with header x1..xd,v1..vd")->required();
    run_cmd->add_option("--complex", run.complex, "delaunay2d, cubical or dowker")->capture_default_str();
    run_cmd->add_option("--alpha", config.alpha, "Cost of a critical cell, in [0, 2]")->capture_default_str();
    run_cmd->add_option("--subdivide", config.subdivide, "Rounds of barycentric subdivision")
        ->capture_default_str();
    run_cmd->add_option("--gradient", run.gradient, "off, sweep or constraints")->capture_default_str();
    run_cmd->add_option("--side", config.side, "Cubical lattice pitch (inferred when 0)")->capture_default_str();
    run_cmd->add_flag("--voxelize", config.voxelize, "Bin scattered samples into lattice cubes of pitch --side");
    run_cmd->add_option("--radius", config.radius, "Dowker relation radius");
    run_cmd->add_option("--landmarks", run.landmarks, "Dowker landmark CSV with header y1..yd");
    run_cmd->add_option("--relation", run.relation, "Dowker 0/1 matrix, landmarks by samples");
    run_cmd->add_option("--backend", run.backend, "bipartite or bnb")->capture_default_str();
    run_cmd->add_option("--max-nodes", config.max_nodes, "Branch and bound node limit (0: none)");
    run_cmd->add_option("--out", run.out, "Report JSON (stdout when omitted)");
    run_cmd->add_option("--dot", run.dot, "Flow graph in DOT");
    run_cmd->add_option("--arrows", run.arrows, "Matched pairs as barycenter segments, CSV");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a stored report against its input");
    verify_cmd->add_option("input", verify.input, "Field CSV the report was made from")->required();
    verify_cmd->add_option("--report", verify.report, "Report JSON")->required();
    verify_cmd->add_option("--landmarks", verify.landmarks, "Dowker landmark CSV");
    verify_cmd->add_option("--relation", verify.relation, "Dowker 0/1 matrix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_cmd) return do_gen(gen);
        if (*run_cmd) return do_run(run, config);
        if (*verify_cmd) return do_verify(verify);
    } catch (const forman::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
