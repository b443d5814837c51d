#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "forman/complex.hpp"
#include "forman/cost.hpp"
#include "forman/datagen.hpp"
#include "forman/dynamics.hpp"
#include "forman/gradient.hpp"
#include "forman/solver.hpp"
#include "forman/vector_assignment.hpp"

namespace forman {

enum class ComplexKind { delaunay2d, cubical, dowker };
enum class GradientMode { off, sweep, constraints };

std::string to_string(ComplexKind kind);
std::string to_string(GradientMode mode);
/// Throws ParameterError for an unknown name.
ComplexKind parse_complex_kind(const std::string& name);
GradientMode parse_gradient_mode(const std::string& name);

struct PipelineConfig {
    ComplexKind complex_kind = ComplexKind::delaunay2d;
    double alpha = 0.9;
    /// Rounds of barycentric subdivision before solving.
    int subdivide = 0;
    GradientMode gradient_mode = GradientMode::off;
    /// Cubical lattice pitch; 0 infers the smallest coordinate gap.
    double side = 0.0;
    /// Cubical only: bin scattered samples into occupied lattice cubes.
    bool voxelize = false;
    /// Dowker metric relation radius; used when no relation matrix is given.
    double radius = 0.0;
    Backend backend = Backend::bipartite;
    /// Node limit for branch and bound (constraints mode, or that backend).
    std::size_t max_nodes = 0;

    /// Throws ParameterError when a field is out of range on its own.
    void validate() const;
};

/// Data consumed by one run. Landmarks and relation only matter for Dowker.
struct PipelineInputs {
    FieldSample field;
    std::vector<Vector> landmarks;
    std::vector<std::vector<bool>> relation;
};

struct Analysis {
    PipelineConfig config;
    CellComplex complex;
    VectorAssignment vectors;
    CostModel costs;
    std::size_t num_variables = 0;
    /// Alpha the final matching was solved at (differs from config in sweep mode).
    double alpha_used = 0.0;
    Matching matching;
    VerificationReport verification;
    CycleReport recurrence;
    GradientCheck gradient;
    bool sweep_fallback = false;
    std::size_t constraints_added = 0;
};

/// Builds the complex, assigns vectors, solves and analyses.
Analysis run_pipeline(const PipelineConfig& config, const PipelineInputs& inputs);

/// Builds the complex and its vectors exactly as run_pipeline does.
std::pair<CellComplex, VectorAssignment> build_complex(const PipelineConfig& config, const PipelineInputs& inputs);

/// Deterministic JSON report (fixed key order, 9 significant digits).
std::string report_json(const Analysis& analysis);
/// Flow graph in Graphviz DOT, one node per cell.
std::string flow_dot(const Analysis& analysis);
/// One row per matched pair: lower, upper and both barycenters.
std::string arrows_csv(const Analysis& analysis);

/// Matching and echoed config stored in a report.
struct StoredReport {
    PipelineConfig config;
    Matching matching;
    std::vector<std::size_t> critical_census;
    /// Multi-cell components as sorted cell lists.
    std::vector<std::vector<CellId>> cycles;
};

/// Throws ParseError for a malformed report.
StoredReport parse_report(const std::string& json_text);

/// Result of checking a stored report against a rebuilt complex.
struct RoundTrip {
    VerificationReport verification;
    /// Census and multi-cell components recomputed from the stored matching
    /// agree with the stored ones.
    bool consistent = false;
    std::string detail;
};

RoundTrip verify_report(const StoredReport& report, const PipelineInputs& inputs);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace forman
