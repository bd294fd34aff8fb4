#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fracknot {

/// Highest segment degree the piecewise model accepts.
inline constexpr int kMaxDegree = 3;

/// Relative tolerance for the continuity check at knots.
inline constexpr double kContinuityTol = 1e-9;

/// Polynomial in the global monomial basis: value(x) = sum_j c_j x^j.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    double value(double x) const;

    /// order-th derivative at x; order 0 returns the value itself.
    double derivative(double x, int order) const;

    /// q with q(x) = p(x + shift); coefficients re-expanded binomially.
    Polynomial translated(double shift) const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coeffs_; }

private:
    std::vector<double> coeffs_{0.0};
};

/// (x, y) samples with strictly increasing x; at least two points.
class SampleSeries {
public:
    explicit SampleSeries(std::vector<std::pair<double, double>> points);

    const std::vector<std::pair<double, double>>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<std::pair<double, double>> points_;
};

/// Continuous piecewise polynomial on a closed interval [a, b]:
/// strictly increasing interior knots and one segment per inter-knot
/// region, all in the global monomial basis. Construction validates
/// ordering, the degree cap and continuity at every knot; the model is
/// immutable afterwards.
class PiecewiseFunction {
public:
    PiecewiseFunction(double a, double b, std::vector<double> knots,
                      std::vector<Polynomial> segments);

    double a() const { return a_; }
    double b() const { return b_; }
    const std::vector<double>& knots() const { return knots_; }
    std::size_t segment_count() const { return segments_.size(); }
    const Polynomial& segment(std::size_t i) const { return segments_[i]; }

    /// Index of the active segment; at a knot the left segment is used.
    std::size_t segment_index(double x) const;

    /// Value at x in [a, b]; throws std::domain_error outside.
    double evaluate(double x) const;
    double operator()(double x) const { return evaluate(x); }

    /// Jump p_right^(order)(k) - p_left^(order)(k) across knot knot_index.
    /// order must be in 1..3; throws std::out_of_range for a bad index.
    double derivative_jump(std::size_t knot_index, int order) const;

    /// g on [a-shift, b-shift] with g(x) = f(x+shift) pointwise.
    PiecewiseFunction translate(double shift) const;

private:
    double a_ = 0.0;
    double b_ = 1.0;
    std::vector<double> knots_;
    std::vector<Polynomial> segments_;
};

/// Piecewise-linear interpolant through the samples. Consecutive gaps whose
/// slopes differ by at most slope_tolerance are merged into a single chord
/// segment; knots are the sample abscissae where merging stops.
PiecewiseFunction from_samples(const SampleSeries& samples, double slope_tolerance);

/// Mirror image about the domain midpoint: g(x) = f(a + b - x) on [a, b].
/// The right Jumarie derivative of f at x equals minus the left Jumarie
/// derivative of the mirror at a + b - x, which turns left-sided engines
/// into right-sided ones.
PiecewiseFunction reflected(const PiecewiseFunction& f);

}  // namespace fracknot
