#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "fracknot/piecewise.hpp"

namespace fracknot {

using RealFn = std::function<double(double)>;

/// Quadrature / outer-difference configuration for the integral engines.
/// panels: composite Gauss-Legendre panels per smooth sub-interval (>= 16).
/// diff_step: outer finite-difference step as a fraction of the domain
/// length, in [1e-8, 1e-2].
struct QuadSpec {
    int panels = 256;
    double diff_step = 1e-4;
};

/// Uniform sampling grid: start, start+step, ..., not overshooting stop.
struct GridSpec {
    double start;
    double stop;
    double step;
};

/// Grunwald-Letnikov estimate of the left Jumarie derivative:
///   h^{-alpha} sum_{r=0..n} w_r [f(t - r h) - f(a)],  n = round((t-a)/h).
/// Requires 0 < alpha < 1 and n >= 32.
double gl_derivative(const RealFn& f, double alpha, double a, double t, double h);

/// Riemann-Liouville fractional integral of positive order:
///   (1/Gamma(order)) int_a^t (t - tau)^{order-1} f(tau) dtau.
/// For order < 1 the kernel singularity is removed by the substitution
/// u = (t - tau)^order; breakpoints (interior kinks of f) split the
/// quadrature into smooth pieces.
double rl_integral(const RealFn& f, double order, double a, double t,
                   const QuadSpec& spec = {}, std::span<const double> breakpoints = {});

/// Left Jumarie derivative by singularity-removed quadrature of
/// F(y) = (1/Gamma(1-alpha)) int_a^y (y-xi)^{-alpha} [f(xi) - f(a)] dxi
/// followed by the central difference (F(x+d) - F(x-d)) / 2d with
/// d = diff_step * (b - a). Throws std::domain_error when x-d <= a or
/// x+d > b; shrink diff_step near the boundaries.
double jumarie_left_numeric(const RealFn& f, double alpha, double a, double b, double x,
                            const QuadSpec& spec = {},
                            std::span<const double> breakpoints = {});

/// Right-sided mirror of jumarie_left_numeric with kernel (xi - x)^{-alpha}
/// and offset f(b).
double jumarie_right_numeric(const RealFn& f, double alpha, double a, double b, double x,
                             const QuadSpec& spec = {},
                             std::span<const double> breakpoints = {});

/// Left Riemann-Liouville derivative via the exact offset relation
///   RL = Jumarie + f(a) (x-a)^{-alpha} / Gamma(1-alpha),  0 < alpha < 1.
double rl_left_derivative(const RealFn& f, double alpha, double a, double b, double x,
                          const QuadSpec& spec = {},
                          std::span<const double> breakpoints = {});

/// Mirror relation RL = Jumarie + f(b) (b-x)^{-alpha} / Gamma(1-alpha).
double rl_right_derivative(const RealFn& f, double alpha, double a, double b, double x,
                           const QuadSpec& spec = {},
                           std::span<const double> breakpoints = {});

/// Caputo derivative for 0 < alpha < 1 from the caller-supplied f':
///   (1/Gamma(1-alpha)) int_a^t (t-tau)^{-alpha} f'(tau) dtau.
double caputo_derivative(const RealFn& f_prime, double alpha, double a, double t,
                         const QuadSpec& spec = {},
                         std::span<const double> breakpoints = {});

// Piecewise overloads: domain, knots and (for Caputo) the exact segment
// derivative are taken from the function model.
double gl_derivative(const PiecewiseFunction& f, double alpha, double t, double h);
double jumarie_left_numeric(const PiecewiseFunction& f, double alpha, double x,
                            const QuadSpec& spec = {});
double jumarie_right_numeric(const PiecewiseFunction& f, double alpha, double x,
                             const QuadSpec& spec = {});
double rl_left_derivative(const PiecewiseFunction& f, double alpha, double x,
                          const QuadSpec& spec = {});
double rl_right_derivative(const PiecewiseFunction& f, double alpha, double x,
                           const QuadSpec& spec = {});
double caputo_derivative(const PiecewiseFunction& f, double alpha, double t,
                         const QuadSpec& spec = {});

/// Values of fn at start, start+step, ..., clamped at stop.
/// The grid may not exceed 1e7 points.
std::vector<std::pair<double, double>> sample_grid(const RealFn& fn, const GridSpec& grid);

}  // namespace fracknot
