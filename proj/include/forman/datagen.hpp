#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forman/complex.hpp"

namespace forman {

/// Sample points with the vector observed at each, parallel lists.
struct FieldSample {
    std::vector<Vector> points;
    std::vector<Vector> vectors;
};

/// Right-hand sides of the planar models.
Vector intro_field(const Vector& p);          // -y + x r, x + y r with r = (x^2+y^2-4)(x^2+y^2-1)
Vector lotka_volterra_field(const Vector& p);  // (0.4 - 0.01 y) x, (0.005 x - 0.3) y
Vector sink_field(const Vector& p);            // -x, -y
Vector lorenz_field(const Vector& p);          // sigma 10, rho 28, beta 8/3

/// Square grid origin + pitch * (i, j) for i, j in [first, first + count).
struct GridSpec {
    double origin = 0.0;
    double pitch = 1.0;
    int first = 0;
    int count = 0;
};

/// Sample grid used by each named model.
GridSpec default_grid(const std::string& model);

/// `model` is one of intro, lotka_volterra, sink, or linear:a,b,c,d for the
/// field (a x + b y, c x + d y). The sink model ignores the grid and returns
/// its six fixed sample points. Throws ParameterError for an unknown name.
FieldSample gen_grid_field(const std::string& model, const GridSpec& grid);
FieldSample gen_grid_field(const std::string& model);

/// Forward Euler trajectory x_{i+1} = x_i + dt * f(x_i) of the Lorenz system,
/// n points, each paired with f at that point. Stops early, with a warning on
/// stderr, before the first non-finite state or vector.
/// Throws ParameterError unless n >= 1 and dt > 0.
FieldSample gen_lorenz_trajectory(const Vector& x0, double dt, std::size_t n);

inline const Vector& lorenz_default_start()
{
    static const Vector x0 = (Vector(3) << 0.0, 1.0, 1.05).finished();
    return x0;
}

inline constexpr double kLorenzDefaultStep = 0.2;
inline constexpr std::size_t kLorenzDefaultPoints = 1000;
/// Desk-scale preset: enough points to trace the attractor at a step Euler
/// can follow.
inline constexpr double kLorenzDeskStep = 0.02;
inline constexpr std::size_t kLorenzDeskPoints = 300;

}  // namespace forman
