#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracknot/closedform.hpp"
#include "fracknot/numeric.hpp"
#include "fracknot/piecewise.hpp"

namespace fracknot {

enum class IndicatorEngine { closed_form, numeric };

/// One non-differentiable point: its location, the slope jump across it,
/// the left/right fractional derivatives there and their difference.
/// indicator is stored as left_value - right_value.
struct KnotFinding {
    double x;
    double slope_jump;
    double left_value;
    double right_value;
    double indicator;
};

struct TransitionReport {
    double alpha;
    std::string source;
    IndicatorEngine engine;
    std::vector<KnotFinding> findings;  // ordered by x
};

/// Largest |f'| over the whole domain (segment-wise exact).
double max_slope_magnitude(const PiecewiseFunction& f);

/// Detection threshold used when the caller does not supply one:
/// 1e-6 * max slope magnitude. Ignores merge residue from from_samples
/// while keeping genuine kinks.
double default_threshold(const PiecewiseFunction& f);

/// Knots of f whose first-derivative jump exceeds threshold in magnitude,
/// ascending.
std::vector<double> detect_knots(const PiecewiseFunction& f, double threshold);

/// Left/right closed-form derivatives of f at the knot x and their
/// difference. Throws std::invalid_argument when x is not a knot of f.
KnotFinding phase_indicator(const PiecewiseFunction& f, double alpha, double x);

/// Numeric counterpart: the quadrature engines cannot central-difference
/// across the kink, so both sides are evaluated at x -+ {eps, 2 eps} with
/// eps = 0.02 (b - a) and linearly extrapolated to the knot.
KnotFinding phase_indicator_numeric(const PiecewiseFunction& f, double alpha, double x,
                                    const QuadSpec& spec = {});

TransitionReport characterize_function(const PiecewiseFunction& f, double alpha,
                                       std::optional<double> threshold,
                                       IndicatorEngine engine = IndicatorEngine::closed_form,
                                       std::string source = {});

/// from_samples -> detect_knots -> per-knot indicator.
TransitionReport characterize_signal(const SampleSeries& samples, double alpha,
                                     std::optional<double> threshold, double slope_tolerance,
                                     IndicatorEngine engine = IndicatorEngine::closed_form,
                                     std::string source = {});

}  // namespace fracknot
