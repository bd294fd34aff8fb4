#pragma once

#include <vector>

#include "fracknot/piecewise.hpp"

namespace fracknot {

enum class OrderRole { derivative, integral };

/// Validated fractional order: a derivative order requires 0 < alpha < 1,
/// an integration order requires alpha < 0.
class FractionalOrder {
public:
    static FractionalOrder derivative(double alpha);
    static FractionalOrder integral(double alpha);

    double alpha() const { return alpha_; }
    OrderRole role() const { return role_; }

private:
    FractionalOrder(double alpha, OrderRole role) : alpha_(alpha), role_(role) {}
    double alpha_;
    OrderRole role_;
};

enum class Side { left, right };

/// One summand c * (x - center)^exponent (left side) respectively
/// c * (center - x)^exponent (right side).
struct FracTerm {
    double coefficient;
    double center;
    double exponent;
};

/// Term sum valid between two consecutive knots of the source function.
struct FracRegion {
    double from;
    double to;
    std::vector<FracTerm> terms;
};

/// Closed-form fractional derivative of a piecewise polynomial for one fixed
/// order. All exponents are j - alpha with j in 1..3, hence positive, so the
/// expression is finite and continuous on the closed domain; adjacent regions
/// agree at their shared knot.
class FracExpression {
public:
    FracExpression(Side side, double alpha, std::vector<FracRegion> regions);

    double evaluate(double x) const;
    double operator()(double x) const { return evaluate(x); }

    Side side() const { return side_; }
    double alpha() const { return alpha_; }
    const std::vector<FracRegion>& regions() const { return regions_; }
    double domain_begin() const { return regions_.front().from; }
    double domain_end() const { return regions_.back().to; }

private:
    Side side_;
    double alpha_;
    std::vector<FracRegion> regions_;
};

/// Fractional power rule: Gamma(g+1)/Gamma(g+1-alpha) * (t-a)^(g-alpha).
/// Requires g > -1, g + 1 - alpha > 0 and t > a; alpha < 0 is integration.
double power_rule(double gamma_exp, double alpha, double a, double t);

/// Left Jumarie derivative of f as a knot-jump expansion: base terms from
/// the first segment's derivatives at a plus, per knot, terms weighted by
/// the derivative jumps across it. The value of f at a never appears.
FracExpression jumarie_left_closed(const PiecewiseFunction& f, const FractionalOrder& order);

/// Right-sided mirror expansion anchored at b.
FracExpression jumarie_right_closed(const PiecewiseFunction& f, const FractionalOrder& order);

}  // namespace fracknot
