#pragma once

#include <string>
#include <vector>

#include "fracknot/piecewise.hpp"

namespace fracknot {

/// Number of built-in reference functions.
int reference_example_count();

/// Built-in kinked reference functions on [0, 1], ids 1..5:
///   1: |x - 1/2|
///   2: 10x + 4 / 17 - 16x          (V5 peak shape, translated to [0, 1])
///   3: 30x + 4 / 34 - 30x
///   4: 4x^2 + 2x + 2 / 5 - 2x
///   5: 4x^2 + 3 / 5 - 4x^2
PiecewiseFunction reference_example(int id);

/// The untranslated variant of example 2 on [2, 3].
PiecewiseFunction reference_example2_raw();

/// A published closed form whose stated value disagrees with its own
/// derivation. verified_* is the derivation-consistent result, confirmed
/// independently by the discretization and quadrature engines.
struct Discrepancy {
    int example;
    std::string item;
    std::string printed_form;
    std::string verified_form;
    double alpha;
    double at_x;
    double printed_value;
    double verified_value;
    std::string note;
};

/// The four known discrepancies, with both values evaluated at alpha.
std::vector<Discrepancy> known_discrepancies(double alpha);

}  // namespace fracknot
