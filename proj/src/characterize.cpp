#include "fracknot/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracknot {

namespace {

// max |p'| of one segment over [lo, hi]; p' has degree <= 2
double segment_slope_max(const Polynomial& p, double lo, double hi) {
    double best = std::max(std::fabs(p.derivative(lo, 1)), std::fabs(p.derivative(hi, 1)));
    const auto& c = p.coefficients();
    if (c.size() == 4 && c[3] != 0.0) {
        const double vertex = -c[2] / (3.0 * c[3]);  // root of p''
        if (vertex > lo && vertex < hi)
            best = std::max(best, std::fabs(p.derivative(vertex, 1)));
    }
    return best;
}

std::size_t knot_index_of(const PiecewiseFunction& f, double x) {
    for (std::size_t i = 0; i < f.knots().size(); ++i) {
        if (std::fabs(x - f.knots()[i]) <= 1e-9 * (1.0 + std::fabs(f.knots()[i]))) return i;
    }
    throw std::invalid_argument("indicator: x is not a knot of the function");
}

KnotFinding make_finding(const PiecewiseFunction& f, std::size_t idx, double left,
                         double right) {
    KnotFinding out;
    out.x = f.knots()[idx];
    out.slope_jump = f.derivative_jump(idx, 1);
    out.left_value = left;
    out.right_value = right;
    out.indicator = left - right;
    return out;
}

}  // namespace

double max_slope_magnitude(const PiecewiseFunction& f) {
    double best = 0.0;
    double lo = f.a();
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        const double hi = i < f.knots().size() ? f.knots()[i] : f.b();
        best = std::max(best, segment_slope_max(f.segment(i), lo, hi));
        lo = hi;
    }
    return best;
}

double default_threshold(const PiecewiseFunction& f) {
    return 1e-6 * max_slope_magnitude(f);
}

std::vector<double> detect_knots(const PiecewiseFunction& f, double threshold) {
    if (!(threshold >= 0.0)) throw std::invalid_argument("detect_knots: threshold must be >= 0");
    std::vector<double> out;
    for (std::size_t i = 0; i < f.knots().size(); ++i) {
        if (std::fabs(f.derivative_jump(i, 1)) > threshold) out.push_back(f.knots()[i]);
    }
    return out;
}

KnotFinding phase_indicator(const PiecewiseFunction& f, double alpha, double x) {
    const std::size_t idx = knot_index_of(f, x);
    const auto order = FractionalOrder::derivative(alpha);
    const double k = f.knots()[idx];
    const double left = jumarie_left_closed(f, order).evaluate(k);
    const double right = jumarie_right_closed(f, order).evaluate(k);
    return make_finding(f, idx, left, right);
}

KnotFinding phase_indicator_numeric(const PiecewiseFunction& f, double alpha, double x,
                                    const QuadSpec& spec) {
    const std::size_t idx = knot_index_of(f, x);
    const double k = f.knots()[idx];
    const double span = f.b() - f.a();
    // keep both extrapolation points and the difference window inside [a, b]
    const double eps =
        std::min({0.02 * span, (k - f.a()) / 3.0, (f.b() - k) / 3.0});
    const double l1 = jumarie_left_numeric(f, alpha, k - eps, spec);
    const double l2 = jumarie_left_numeric(f, alpha, k - 2.0 * eps, spec);
    const double r1 = jumarie_right_numeric(f, alpha, k + eps, spec);
    const double r2 = jumarie_right_numeric(f, alpha, k + 2.0 * eps, spec);
    return make_finding(f, idx, 2.0 * l1 - l2, 2.0 * r1 - r2);
}

TransitionReport characterize_function(const PiecewiseFunction& f, double alpha,
                                       std::optional<double> threshold,
                                       IndicatorEngine engine, std::string source) {
    const double thr = threshold.value_or(default_threshold(f));
    const std::vector<double> knots = detect_knots(f, thr);

    TransitionReport report;
    report.alpha = alpha;
    report.source = std::move(source);
    report.engine = engine;

    if (engine == IndicatorEngine::closed_form) {
        // build the two expressions once and evaluate them per knot
        const auto order = FractionalOrder::derivative(alpha);
        const FracExpression left = jumarie_left_closed(f, order);
        const FracExpression right = jumarie_right_closed(f, order);
        for (double k : knots) {
            std::size_t idx = knot_index_of(f, k);
            report.findings.push_back(make_finding(f, idx, left.evaluate(k), right.evaluate(k)));
        }
    } else {
        (void)FractionalOrder::derivative(alpha);  // validate the order up front
        for (double k : knots)
            report.findings.push_back(phase_indicator_numeric(f, alpha, k));
    }
    return report;
}

TransitionReport characterize_signal(const SampleSeries& samples, double alpha,
                                     std::optional<double> threshold, double slope_tolerance,
                                     IndicatorEngine engine, std::string source) {
    const PiecewiseFunction f = from_samples(samples, slope_tolerance);
    return characterize_function(f, alpha, threshold, engine, std::move(source));
}

}  // namespace fracknot
