#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fracknot/characterize.hpp"
#include "fracknot/closedform.hpp"
#include "fracknot/piecewise.hpp"

namespace fracknot::io {

/// Decimal with up to 10 significant digits ("%.10g"); used by every
/// serializer so identical inputs always produce identical bytes.
std::string format_number(double v);

/// Function JSON:
///   {"domain": [a, b], "knots": [k1, ...], "segments": [[c0, c1, ...], ...]}
/// with segments.length = knots.length + 1.
PiecewiseFunction parse_function_json(const std::string& text);
std::string function_to_json(const PiecewiseFunction& f);

/// Signal CSV: header "x,y", one sample per line, x strictly increasing.
SampleSeries parse_signal_csv(const std::string& text);

/// {"side": ..., "alpha": ..., "regions": [{"from", "to", "terms": [...]}]}
std::string expression_to_json(const FracExpression& e);

/// {"alpha", "source", "engine", "findings": [...]}, findings sorted by x.
std::string report_to_json(const TransitionReport& r);

/// Two-column grid CSV with header "x,value".
std::string grid_to_csv(const std::vector<std::pair<double, double>>& points);

std::string read_file(const std::string& path);

/// Writes via a temporary file in the same directory plus rename, so a
/// failing run never leaves a partial file at path.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace fracknot::io
