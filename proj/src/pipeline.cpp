#include "forman/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "forman/builders.hpp"
#include "forman/field_io.hpp"
#include "forman/subdivision.hpp"

namespace forman {

using Json = nlohmann::ordered_json;

namespace {

// Rounds to the 9 significant digits the report promises; the JSON writer
// then prints the shortest text for the rounded value.
double rounded(double v)
{
    return std::strtod(format_number(v).c_str(), nullptr);
}

double infer_side(std::span<const Vector> points)
{
    double side = 0.0;
    if (points.empty()) return side;
    for (Eigen::Index k = 0; k < points.front().size(); ++k) {
        std::vector<double> xs;
        for (const auto& p : points) xs.push_back(p[k]);
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 1; i < xs.size(); ++i) {
            const double gap = xs[i] - xs[i - 1];
            if (gap > 1e-12 * std::max(1.0, std::abs(xs[i])) && (side == 0.0 || gap < side)) side = gap;
        }
    }
    if (side == 0.0) throw DegenerateInputError("cannot infer a lattice pitch from a single coordinate value");
    return side;
}

std::vector<double> sweep_grid(double top)
{
    std::vector<double> grid{top};
    for (double a : default_alpha_grid())
        if (a < top - 1e-12) grid.push_back(a);
    return grid;
}

Json config_json(const PipelineConfig& c)
{
    Json j;
    j["complex"] = to_string(c.complex_kind);
    j["alpha"] = rounded(c.alpha);
    j["subdivide"] = c.subdivide;
    j["gradient"] = to_string(c.gradient_mode);
    j["side"] = rounded(c.side);
    j["voxelize"] = c.voxelize;
    j["radius"] = rounded(c.radius);
    j["backend"] = c.backend == Backend::bipartite ? "bipartite" : "branch_and_bound";
    j["max_nodes"] = c.max_nodes;
    return j;
}

}  // namespace

std::string to_string(ComplexKind kind)
{
    switch (kind) {
    case ComplexKind::delaunay2d: return "delaunay2d";
    case ComplexKind::cubical: return "cubical";
    case ComplexKind::dowker: return "dowker";
    }
    return "unknown";
}

std::string to_string(GradientMode mode)
{
    switch (mode) {
    case GradientMode::off: return "off";
    case GradientMode::sweep: return "sweep";
    case GradientMode::constraints: return "constraints";
    }
    return "unknown";
}

ComplexKind parse_complex_kind(const std::string& name)
{
    if (name == "delaunay2d") return ComplexKind::delaunay2d;
    if (name == "cubical") return ComplexKind::cubical;
    if (name == "dowker") return ComplexKind::dowker;
    throw ParameterError("unknown complex kind '" + name + "'");
}

GradientMode parse_gradient_mode(const std::string& name)
{
    if (name == "off") return GradientMode::off;
    if (name == "sweep") return GradientMode::sweep;
    if (name == "constraints") return GradientMode::constraints;
    throw ParameterError("unknown gradient mode '" + name + "'");
}

void PipelineConfig::validate() const
{
    if (!(alpha >= 0.0 && alpha <= 2.0)) throw ParameterError("alpha must lie in [0, 2]");
    if (subdivide < 0) throw ParameterError("subdivide must be >= 0");
    if (!(side >= 0.0) || !std::isfinite(side)) throw ParameterError("side must be >= 0");
    if (!(radius >= 0.0) || !std::isfinite(radius)) throw ParameterError("radius must be >= 0");
    if (voxelize && complex_kind != ComplexKind::cubical) throw ParameterError("voxelize needs the cubical complex");
    if (voxelize && side <= 0.0) throw ParameterError("voxelize needs an explicit side");
    if (subdivide > 0 && complex_kind == ComplexKind::cubical)
        throw UnsupportedKindError("barycentric subdivision of a cubical complex is not supported");
}

std::pair<CellComplex, VectorAssignment> build_complex(const PipelineConfig& config, const PipelineInputs& inputs)
{
    config.validate();
    const auto& field = inputs.field;
    if (field.points.size() != field.vectors.size()) throw ParameterError("points and vectors differ in length");
    if (field.points.empty()) throw DegenerateInputError("no samples");
    const auto d = field.points.front().size();

    CellComplex complex;
    VectorAssignment vectors;
    switch (config.complex_kind) {
    case ComplexKind::delaunay2d: {
        if (d != 2) throw ParameterError("delaunay2d needs planar data, got dimension " + std::to_string(d));
        complex = delaunay_2d(field.points);
        vectors = assign_vertex_average(complex, field.vectors);
        break;
    }
    case ComplexKind::cubical: {
        if (d != 2 && d != 3) throw ParameterError("cubical needs dimension 2 or 3, got " + std::to_string(d));
        if (config.voxelize) {
            auto voxels = voxel_grid(field.points, field.vectors, config.side);
            complex = std::move(voxels.complex);
            vectors = assign_vertex_average(complex, voxels.vertex_vectors);
        } else {
            const double side = config.side > 0.0 ? config.side : infer_side(field.points);
            complex = cubical_grid(field.points, side);
            vectors = assign_vertex_average(complex, field.vectors);
        }
        break;
    }
    case ComplexKind::dowker: {
        if (inputs.landmarks.empty()) throw ParameterError("dowker needs landmarks");
        DowkerComplex dc;
        if (!inputs.relation.empty()) {
            if (inputs.relation.size() != inputs.landmarks.size() ||
                inputs.relation.front().size() != field.points.size())
                throw ParameterError("relation must have one row per landmark and one column per sample");
            dc = dowker_complex(inputs.landmarks, inputs.relation);
        } else {
            if (config.radius <= 0.0) throw ParameterError("dowker needs a positive radius or a relation");
            dc = dowker_complex(field.points, inputs.landmarks, config.radius);
        }
        complex = std::move(dc.complex);
        vectors = assign_dowker_average(complex, dc.witnesses, field.vectors);
        break;
    }
    }
    for (int round = 0; round < config.subdivide; ++round) {
        auto [sub, sub_vectors] = barycentric_subdivision(complex, vectors);
        complex = std::move(sub);
        vectors = std::move(sub_vectors);
    }
    return {std::move(complex), std::move(vectors)};
}

Analysis run_pipeline(const PipelineConfig& config, const PipelineInputs& inputs)
{
    Analysis a;
    a.config = config;
    std::tie(a.complex, a.vectors) = build_complex(config, inputs);
    a.costs = build_cost_model(a.complex, a.vectors, config.alpha);
    a.alpha_used = config.alpha;

    switch (config.gradient_mode) {
    case GradientMode::off: {
        const auto problem = build_problem(a.costs, a.complex);
        a.num_variables = problem.variables.size();
        a.matching = config.backend == Backend::bipartite
                         ? solve_bipartite(problem)
                         : solve_branch_and_bound(problem, {}, {config.max_nodes});
        break;
    }
    case GradientMode::sweep: {
        const auto grid = sweep_grid(config.alpha);
        auto sweep = alpha_sweep(a.complex, a.vectors, grid, config.backend);
        a.alpha_used = sweep.alpha;
        a.sweep_fallback = sweep.fallback;
        a.matching = std::move(sweep.matching);
        a.costs = a.costs.with_alpha(a.alpha_used);
        a.num_variables = a.costs.pairs.size() + a.complex.size();
        break;
    }
    case GradientMode::constraints: {
        const auto problem = build_problem(a.costs, a.complex);
        a.num_variables = problem.variables.size();
        auto result = solve_gradient_constrained(problem, a.complex, {config.max_nodes});
        a.constraints_added = result.constraints.size();
        a.matching = std::move(result.matching);
        break;
    }
    }
    a.matching.objective = evaluate(a.matching, a.costs);
    a.verification = verify_matching(a.complex, a.matching);
    if (a.verification.ok()) {
        a.recurrence = classify_recurrence(a.complex, multiflow(a.complex, a.matching));
        a.gradient = is_gradient(a.complex, a.matching);
    }
    return a;
}

std::string report_json(const Analysis& a)
{
    Json j;
    j["config_echo"] = config_json(a.config);

    Json complex;
    complex["kind"] = a.complex.kind() == CellKind::simplex ? "simplicial" : "cubical";
    complex["ambient_dim"] = a.complex.ambient_dim();
    complex["dimension"] = a.complex.dimension();
    complex["cells"] = a.complex.size();
    complex["counts"] = a.complex.counts_per_dim();
    complex["euler_characteristic"] = a.complex.euler_characteristic();
    j["complex"] = complex;

    j["problem"] = {{"N", a.complex.size()}, {"m", a.costs.pairs.size()}, {"variables", a.num_variables}};

    const auto terms = objective_decomposition(a.matching, a.costs);
    j["objective"] = {{"total", rounded(a.matching.objective)},
                      {"matched", terms.matched},
                      {"cosine_sum", rounded(terms.cosine_sum)},
                      {"critical", terms.critical},
                      {"alpha", rounded(a.alpha_used)}};

    Json pairs = Json::array();
    for (const auto& p : a.matching.pairs) pairs.push_back({{"lower", p.lower}, {"upper", p.upper}});
    j["matching"] = pairs;
    j["critical"] = a.matching.critical;
    j["census"] = a.recurrence.critical_census;

    Json scc = Json::array();
    for (const auto& c : a.recurrence.cycles) {
        scc.push_back({{"id", c.id},
                       {"size", c.cells.size()},
                       {"d", c.d},
                       {"dims", c.dims},
                       {"self_intersections", c.self_intersections},
                       {"cells", c.cells}});
    }
    j["scc"] = scc;

    Json gradient;
    gradient["mode"] = to_string(a.config.gradient_mode);
    gradient["is_gradient"] = a.gradient.gradient;
    gradient["alpha_used"] = rounded(a.alpha_used);
    gradient["sweep_fallback"] = a.sweep_fallback;
    gradient["constraints_added"] = a.constraints_added;
    gradient["witness_cycle"] = a.gradient.cycle;
    j["gradient"] = gradient;

    j["verification"] = {{"ok", a.verification.ok()}, {"summary", a.verification.summary()}};
    return j.dump(2) + "\n";
}

std::string flow_dot(const Analysis& a)
{
    std::ostringstream os;
    os << "digraph flow {\n";
    const auto& flow_roles = a.recurrence.scc.component_of;
    std::vector<char> critical(a.complex.size(), 0);
    for (CellId c : a.matching.critical) critical[c] = 1;
    for (const auto& cell : a.complex.cells()) {
        os << "  c" << cell.id << " [label=\"" << cell.id << "\\nd" << cell.dim << "\"";
        if (critical[cell.id]) os << ", shape=doublecircle";
        if (!flow_roles.empty()) os << ", group=s" << flow_roles[cell.id];
        os << "];\n";
    }
    if (a.verification.ok()) {
        const auto flow = multiflow(a.complex, a.matching);
        for (std::size_t c = 0; c < flow.size(); ++c)
            for (CellId t : flow.successors[c]) os << "  c" << c << " -> c" << t << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string arrows_csv(const Analysis& a)
{
    std::ostringstream os;
    const auto d = static_cast<std::size_t>(a.complex.ambient_dim());
    os << "lower,upper";
    for (std::size_t k = 1; k <= d; ++k) os << ",from" << k;
    for (std::size_t k = 1; k <= d; ++k) os << ",to" << k;
    os << '\n';
    for (const auto& p : a.matching.pairs) {
        const Vector from = a.complex.barycenter(p.lower);
        const Vector to = a.complex.barycenter(p.upper);
        os << p.lower << ',' << p.upper;
        for (std::size_t k = 0; k < d; ++k) os << ',' << format_number(from[k]);
        for (std::size_t k = 0; k < d; ++k) os << ',' << format_number(to[k]);
        os << '\n';
    }
    return os.str();
}

StoredReport parse_report(const std::string& json_text)
{
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    StoredReport r;
    try {
        const auto& c = j.at("config_echo");
        r.config.complex_kind = parse_complex_kind(c.at("complex").get<std::string>());
        r.config.alpha = c.at("alpha").get<double>();
        r.config.subdivide = c.at("subdivide").get<int>();
        r.config.gradient_mode = parse_gradient_mode(c.at("gradient").get<std::string>());
        r.config.side = c.at("side").get<double>();
        r.config.voxelize = c.at("voxelize").get<bool>();
        r.config.radius = c.at("radius").get<double>();
        r.config.backend = c.at("backend").get<std::string>() == "bipartite" ? Backend::bipartite
                                                                              : Backend::branch_and_bound;
        r.config.max_nodes = c.at("max_nodes").get<std::size_t>();
        for (const auto& p : j.at("matching"))
            r.matching.pairs.push_back({p.at("lower").get<CellId>(), p.at("upper").get<CellId>()});
        r.matching.critical = j.at("critical").get<std::vector<CellId>>();
        r.matching.objective = j.at("objective").at("total").get<double>();
        r.critical_census = j.at("census").get<std::vector<std::size_t>>();
        for (const auto& s : j.at("scc")) r.cycles.push_back(s.at("cells").get<std::vector<CellId>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return r;
}

RoundTrip verify_report(const StoredReport& report, const PipelineInputs& inputs)
{
    RoundTrip rt;
    const auto [complex, vectors] = build_complex(report.config, inputs);
    rt.verification = verify_matching(complex, report.matching);
    if (!rt.verification.ok()) {
        rt.detail = rt.verification.summary();
        return rt;
    }
    const auto rec = classify_recurrence(complex, multiflow(complex, report.matching));
    std::vector<std::vector<CellId>> cycles;
    for (const auto& c : rec.cycles) cycles.push_back(c.cells);
    if (rec.critical_census != report.critical_census) {
        rt.detail = "critical census differs from the stored report";
    } else if (cycles != report.cycles) {
        rt.detail = "multi-cell components differ from the stored report";
    } else {
        rt.consistent = true;
    }
    return rt;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("failed writing '" + path + "'");
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace forman
