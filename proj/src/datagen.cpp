#include "forman/datagen.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "forman/error.hpp"

namespace forman {

namespace {

Vector planar(double x, double y)
{
    Vector v(2);
    v << x, y;
    return v;
}

void require_planar(const Vector& p)
{
    if (p.size() != 2) throw ParameterError("planar model evaluated at a point of dimension " + std::to_string(p.size()));
}

bool parse_linear(const std::string& model, double (&m)[4])
{
    const std::string prefix = "linear:";
    if (model.rfind(prefix, 0) != 0) return false;
    std::istringstream in(model.substr(prefix.size()));
    char sep = 0;
    for (int k = 0; k < 4; ++k) {
        if (k > 0 && !(in >> sep && sep == ',')) throw ParameterError("linear model needs four comma-separated values");
        if (!(in >> m[k])) throw ParameterError("linear model needs four comma-separated values");
    }
    if (!(in >> std::ws).eof()) throw ParameterError("trailing text after linear model coefficients");
    return true;
}

}  // namespace

Vector intro_field(const Vector& p)
{
    require_planar(p);
    const double x = p[0], y = p[1];
    const double s = x * x + y * y;
    const double r = (s - 4.0) * (s - 1.0);
    return planar(-y + x * r, x + y * r);
}

Vector lotka_volterra_field(const Vector& p)
{
    require_planar(p);
    const double x = p[0], y = p[1];
    return planar((0.4 - 0.01 * y) * x, (0.005 * x - 0.3) * y);
}

Vector sink_field(const Vector& p)
{
    require_planar(p);
    return -p;
}

Vector lorenz_field(const Vector& p)
{
    if (p.size() != 3) throw ParameterError("Lorenz system needs a point in R^3");
    const double x = p[0], y = p[1], z = p[2];
    Vector v(3);
    v << 10.0 * (y - x), 28.0 * x - x * z - y, x * y - (8.0 / 3.0) * z;
    return v;
}

GridSpec default_grid(const std::string& model)
{
    if (model == "intro") return {0.22, 0.44, -8, 16};
    if (model == "lotka_volterra") return {0.0, 10.0, 0, 9};
    if (model == "sink") return {0.0, 1.0, 0, 0};
    if (model.rfind("linear:", 0) == 0) return {0.0, 1.0, -4, 9};
    throw ParameterError("unknown model '" + model + "'");
}

FieldSample gen_grid_field(const std::string& model, const GridSpec& grid)
{
    FieldSample s;
    if (model == "sink") {
        // Two triangles, x and its reflection x'.
        for (auto [x, y] : {std::pair{-1.0, -1.0}, {1.0, -1.0}, {0.0, 2.0}, {1.0, 1.0}, {-1.0, 1.0}, {0.0, -2.0}}) {
            s.points.push_back(planar(x, y));
            s.vectors.push_back(sink_field(s.points.back()));
        }
        return s;
    }

    double m[4];
    Vector (*field)(const Vector&) = nullptr;
    const bool linear = parse_linear(model, m);
    if (!linear) {
        if (model == "intro")
            field = intro_field;
        else if (model == "lotka_volterra")
            field = lotka_volterra_field;
        else
            throw ParameterError("unknown model '" + model + "'");
    }
    if (grid.count < 0 || !(grid.pitch > 0.0)) throw ParameterError("grid needs count >= 0 and pitch > 0");

    for (int i = grid.first; i < grid.first + grid.count; ++i) {
        for (int j = grid.first; j < grid.first + grid.count; ++j) {
            const Vector p = planar(grid.origin + grid.pitch * i, grid.origin + grid.pitch * j);
            s.points.push_back(p);
            s.vectors.push_back(linear ? planar(m[0] * p[0] + m[1] * p[1], m[2] * p[0] + m[3] * p[1]) : field(p));
        }
    }
    return s;
}

FieldSample gen_grid_field(const std::string& model)
{
    return gen_grid_field(model, default_grid(model));
}

FieldSample gen_lorenz_trajectory(const Vector& x0, double dt, std::size_t n)
{
    if (n < 1) throw ParameterError("trajectory needs at least one point");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ParameterError("time step must be positive");
    if (x0.size() != 3 || !x0.allFinite()) throw ParameterError("Lorenz start must be a finite point in R^3");

    FieldSample s;
    Vector x = x0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector v = lorenz_field(x);
        if (!x.allFinite() || !v.allFinite()) {
            std::cerr << "warning: Lorenz trajectory diverged; kept " << i << " of " << n << " points\n";
            break;
        }
        s.points.push_back(x);
        s.vectors.push_back(v);
        x = x + dt * v;
    }
    return s;
}

}  // namespace forman
