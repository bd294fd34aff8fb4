#include "fracknot/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracknot/specialfn.hpp"

namespace fracknot {

namespace {

constexpr int kGaussOrder = 16;
constexpr long kMaxGlSteps = 20'000'000;
constexpr double kMaxGridPoints = 1e7;

struct GaussRule {
    std::array<double, kGaussOrder> node;
    std::array<double, kGaussOrder> weight;
};

// Nodes of the Legendre polynomial by Newton iteration; weights
// 2 / ((1 - z^2) P_n'(z)^2).
GaussRule make_gauss_rule() {
    GaussRule rule{};
    const int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            deriv = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / deriv;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        rule.node[i] = -z;
        rule.node[n - 1 - i] = z;
        rule.weight[i] = rule.weight[n - 1 - i] = 2.0 / ((1.0 - z * z) * deriv * deriv);
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

template <typename Fn>
double integrate_panels(const Fn& g, double lo, double hi, int panels) {
    const GaussRule& rule = gauss_rule();
    const double h = (hi - lo) / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * h;
        double panel = 0.0;
        for (int i = 0; i < kGaussOrder; ++i)
            panel += rule.weight[i] * g(mid + 0.5 * h * rule.node[i]);
        acc += panel;
    }
    return acc * 0.5 * h;
}

// Composite rule over [lo, hi] split at the cut points (clipped to the open
// interval), `panels` panels per smooth piece.
template <typename Fn>
double integrate_with_cuts(const Fn& g, double lo, double hi,
                           std::span<const double> cuts, int panels) {
    std::vector<double> edges{lo};
    for (double c : cuts)
        if (c > lo && c < hi) edges.push_back(c);
    std::sort(edges.begin(), edges.end());
    edges.push_back(hi);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        acc += integrate_panels(g, edges[i], edges[i + 1], panels);
    return acc;
}

void validate(const QuadSpec& spec) {
    if (spec.panels < 16) throw std::invalid_argument("quad spec: panels must be >= 16");
    if (!(spec.diff_step >= 1e-8 && spec.diff_step <= 1e-2))
        throw std::invalid_argument("quad spec: diff_step must lie in [1e-8, 1e-2]");
}

void validate_order(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("numeric: derivative order must lie in (0, 1)");
}

// (1/Gamma(order)) int_t^b (xi - t)^{order-1} f(xi) dxi, the mirror image of
// rl_integral, used by the right-sided engines.
double rl_integral_right(const RealFn& f, double order, double t, double b,
                         const QuadSpec& spec, std::span<const double> breakpoints) {
    if (!(order > 0.0)) throw std::domain_error("rl_integral: order must be positive");
    if (!(b > t)) throw std::domain_error("rl_integral: empty interval");
    double raw;
    if (order < 1.0) {
        // u = (xi - t)^order removes the endpoint singularity
        const double inv = 1.0 / order;
        auto g = [&](double u) { return f(t + std::pow(u, inv)); };
        std::vector<double> cuts;
        for (double k : breakpoints)
            if (k > t && k < b) cuts.push_back(std::pow(k - t, order));
        raw = integrate_with_cuts(g, 0.0, std::pow(b - t, order), cuts, spec.panels) / order;
    } else {
        auto g = [&](double xi) { return f(xi) * std::pow(xi - t, order - 1.0); };
        raw = integrate_with_cuts(g, t, b, breakpoints, spec.panels);
    }
    return raw / gamma(order);
}

// F(y) of the left Jumarie definition: I^{1-alpha}[f - f(a)](y).
double left_offset_integral(const RealFn& f, double alpha, double a, double y,
                            const QuadSpec& spec, std::span<const double> breakpoints) {
    const double fa = f(a);
    auto g = [&](double xi) { return f(xi) - fa; };
    return rl_integral(g, 1.0 - alpha, a, y, spec, breakpoints);
}

// Right counterpart: (1/Gamma(1-alpha)) int_y^b (xi-y)^{-alpha} [f(b)-f(xi)] dxi.
double right_offset_integral(const RealFn& f, double alpha, double y, double b,
                             const QuadSpec& spec, std::span<const double> breakpoints) {
    const double fb = f(b);
    auto g = [&](double xi) { return fb - f(xi); };
    return rl_integral_right(g, 1.0 - alpha, y, b, spec, breakpoints);
}

void check_difference_window(double a, double b, double x, double delta) {
    if (x - delta <= a || x + delta > b)
        throw std::domain_error(
            "numeric: x +- diff_step*(b-a) leaves [a, b]; shrink diff_step near boundaries");
}

RealFn piecewise_fn(const PiecewiseFunction& f) {
    // clamp against fp round-off when quadrature nodes map to ~a or ~b
    return [&f](double x) {
        const double lo = f.a(), hi = f.b();
        return f.evaluate(x < lo ? lo : (x > hi ? hi : x));
    };
}

}  // namespace

double gl_derivative(const RealFn& f, double alpha, double a, double t, double h) {
    validate_order(alpha);
    if (!(t > a)) throw std::domain_error("gl_derivative: t must exceed a");
    if (!(h > 0.0)) throw std::domain_error("gl_derivative: step must be positive");
    const long n = std::lround((t - a) / h);
    if (n < 32) throw std::domain_error("gl_derivative: fewer than 32 steps");
    if (n > kMaxGlSteps) throw std::invalid_argument("gl_derivative: step too small");
    const double step = (t - a) / static_cast<double>(n);
    const std::vector<double> w = gl_weights(alpha, static_cast<std::size_t>(n));
    const double fa = f(a);
    double acc = 0.0;
    for (long r = 0; r <= n; ++r) {
        const double xi = r == n ? a : t - static_cast<double>(r) * step;
        acc += w[static_cast<std::size_t>(r)] * (f(xi) - fa);
    }
    return acc * std::pow(step, -alpha);
}

double rl_integral(const RealFn& f, double order, double a, double t,
                   const QuadSpec& spec, std::span<const double> breakpoints) {
    validate(spec);
    if (!(order > 0.0)) throw std::domain_error("rl_integral: order must be positive");
    if (!(t > a)) throw std::domain_error("rl_integral: t must exceed a");
    double raw;
    if (order < 1.0) {
        // u = (t - tau)^order; the kernel becomes constant in u
        const double inv = 1.0 / order;
        auto g = [&](double u) { return f(t - std::pow(u, inv)); };
        std::vector<double> cuts;
        for (double k : breakpoints)
            if (k > a && k < t) cuts.push_back(std::pow(t - k, order));
        raw = integrate_with_cuts(g, 0.0, std::pow(t - a, order), cuts, spec.panels) / order;
    } else {
        auto g = [&](double tau) { return f(tau) * std::pow(t - tau, order - 1.0); };
        raw = integrate_with_cuts(g, a, t, breakpoints, spec.panels);
    }
    return raw / gamma(order);
}

double jumarie_left_numeric(const RealFn& f, double alpha, double a, double b, double x,
                            const QuadSpec& spec, std::span<const double> breakpoints) {
    validate(spec);
    validate_order(alpha);
    if (!(a < b)) throw std::domain_error("numeric: empty interval");
    const double delta = spec.diff_step * (b - a);
    check_difference_window(a, b, x, delta);
    const double hi = left_offset_integral(f, alpha, a, x + delta, spec, breakpoints);
    const double lo = left_offset_integral(f, alpha, a, x - delta, spec, breakpoints);
    return (hi - lo) / (2.0 * delta);
}

double jumarie_right_numeric(const RealFn& f, double alpha, double a, double b, double x,
                             const QuadSpec& spec, std::span<const double> breakpoints) {
    validate(spec);
    validate_order(alpha);
    if (!(a < b)) throw std::domain_error("numeric: empty interval");
    const double delta = spec.diff_step * (b - a);
    check_difference_window(a, b, x, delta);
    const double hi = right_offset_integral(f, alpha, x + delta, b, spec, breakpoints);
    const double lo = right_offset_integral(f, alpha, x - delta, b, spec, breakpoints);
    // f_R = -(d/dx) of the offset integral; sign fixed by the worked
    // right-sided results (e.g. f = x - c gives +(b-x)^{1-alpha}/Gamma(2-alpha))
    return -(hi - lo) / (2.0 * delta);
}

double rl_left_derivative(const RealFn& f, double alpha, double a, double b, double x,
                          const QuadSpec& spec, std::span<const double> breakpoints) {
    const double jum = jumarie_left_numeric(f, alpha, a, b, x, spec, breakpoints);
    return jum + f(a) * std::pow(x - a, -alpha) / gamma(1.0 - alpha);
}

double rl_right_derivative(const RealFn& f, double alpha, double a, double b, double x,
                           const QuadSpec& spec, std::span<const double> breakpoints) {
    const double jum = jumarie_right_numeric(f, alpha, a, b, x, spec, breakpoints);
    return jum + f(b) * std::pow(b - x, -alpha) / gamma(1.0 - alpha);
}

double caputo_derivative(const RealFn& f_prime, double alpha, double a, double t,
                         const QuadSpec& spec, std::span<const double> breakpoints) {
    validate_order(alpha);
    // I^{1-alpha}[f'] -- rl_integral already removes the (t-tau)^{-alpha}
    // singularity for orders below one
    return rl_integral(f_prime, 1.0 - alpha, a, t, spec, breakpoints);
}

double gl_derivative(const PiecewiseFunction& f, double alpha, double t, double h) {
    return gl_derivative(piecewise_fn(f), alpha, f.a(), t, h);
}

double jumarie_left_numeric(const PiecewiseFunction& f, double alpha, double x,
                            const QuadSpec& spec) {
    return jumarie_left_numeric(piecewise_fn(f), alpha, f.a(), f.b(), x, spec, f.knots());
}

double jumarie_right_numeric(const PiecewiseFunction& f, double alpha, double x,
                             const QuadSpec& spec) {
    return jumarie_right_numeric(piecewise_fn(f), alpha, f.a(), f.b(), x, spec, f.knots());
}

double rl_left_derivative(const PiecewiseFunction& f, double alpha, double x,
                          const QuadSpec& spec) {
    return rl_left_derivative(piecewise_fn(f), alpha, f.a(), f.b(), x, spec, f.knots());
}

double rl_right_derivative(const PiecewiseFunction& f, double alpha, double x,
                           const QuadSpec& spec) {
    return rl_right_derivative(piecewise_fn(f), alpha, f.a(), f.b(), x, spec, f.knots());
}

double caputo_derivative(const PiecewiseFunction& f, double alpha, double t,
                         const QuadSpec& spec) {
    auto f_prime = [&f](double tau) {
        const double lo = f.a(), hi = f.b();
        const double x = tau < lo ? lo : (tau > hi ? hi : tau);
        return f.segment(f.segment_index(x)).derivative(x, 1);
    };
    return caputo_derivative(f_prime, alpha, f.a(), t, spec, f.knots());
}

std::vector<std::pair<double, double>> sample_grid(const RealFn& fn, const GridSpec& grid) {
    if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) || !std::isfinite(grid.step))
        throw std::invalid_argument("grid: non-finite bound");
    if (!(grid.start < grid.stop)) throw std::invalid_argument("grid: start must precede stop");
    if (!(grid.step > 0.0)) throw std::invalid_argument("grid: step must be positive");
    const double ratio = (grid.stop - grid.start) / grid.step;
    if (ratio > kMaxGridPoints) throw std::invalid_argument("grid: too large");
    const long count = static_cast<long>(std::floor(ratio + 1e-9));
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long i = 0; i <= count; ++i) {
        const double x = std::min(grid.start + static_cast<double>(i) * grid.step, grid.stop);
        out.emplace_back(x, fn(x));
    }
    return out;
}

}  // namespace fracknot
