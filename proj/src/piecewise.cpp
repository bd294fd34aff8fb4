#include "fracknot/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracknot {

namespace {

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial: empty coefficient list");
    if (!all_finite(coeffs_)) throw std::invalid_argument("polynomial: non-finite coefficient");
}

double Polynomial::value(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::derivative(double x, int order) const {
    if (order < 0) throw std::domain_error("polynomial: negative derivative order");
    if (order == 0) return value(x);
    if (order > degree()) return 0.0;
    // differentiate the coefficient list `order` times, then Horner
    std::vector<double> c(coeffs_.begin() + order, coeffs_.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        double fac = 1.0;
        for (int k = 0; k < order; ++k) fac *= static_cast<double>(i + order - k);
        c[i] *= fac;
    }
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::translated(double shift) const {
    if (!std::isfinite(shift)) throw std::invalid_argument("polynomial: non-finite shift");
    const int d = degree();
    std::vector<double> out(coeffs_.size(), 0.0);
    // p(x + s) = sum_j c_j sum_{i<=j} C(j,i) s^{j-i} x^i
    for (int j = 0; j <= d; ++j) {
        double binom = 1.0;
        double spow = 1.0;
        for (int i = j; i >= 0; --i) {
            out[i] += coeffs_[j] * binom * spow;
            binom *= static_cast<double>(i) / static_cast<double>(j - i + 1);
            spow *= shift;
        }
    }
    return Polynomial(std::move(out));
}

SampleSeries::SampleSeries(std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("samples: need at least two points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].first) || !std::isfinite(points_[i].second))
            throw std::invalid_argument("samples: non-finite value");
        if (i > 0 && !(points_[i].first > points_[i - 1].first))
            throw std::invalid_argument("samples: x must be strictly increasing");
    }
}

PiecewiseFunction::PiecewiseFunction(double a, double b, std::vector<double> knots,
                                     std::vector<Polynomial> segments)
    : a_(a), b_(b), knots_(std::move(knots)), segments_(std::move(segments)) {
    if (!std::isfinite(a_) || !std::isfinite(b_) || !(a_ < b_))
        throw std::invalid_argument("piecewise: domain must satisfy a < b");
    if (!all_finite(knots_)) throw std::invalid_argument("piecewise: non-finite knot");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!(knots_[i] > a_ && knots_[i] < b_))
            throw std::invalid_argument("piecewise: knot outside open domain");
        if (i > 0 && !(knots_[i] > knots_[i - 1]))
            throw std::invalid_argument("piecewise: knots must be strictly increasing");
    }
    if (segments_.size() != knots_.size() + 1)
        throw std::invalid_argument("piecewise: need knots.size() + 1 segments");
    for (const auto& s : segments_) {
        if (s.degree() > kMaxDegree)
            throw std::invalid_argument("piecewise: segment degree exceeds 3");
    }
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        const double left = segments_[i].value(knots_[i]);
        const double right = segments_[i + 1].value(knots_[i]);
        if (std::fabs(left - right) > kContinuityTol * (1.0 + std::fabs(left)))
            throw std::invalid_argument("piecewise: segments disagree at knot " +
                                        std::to_string(knots_[i]));
    }
}

std::size_t PiecewiseFunction::segment_index(double x) const {
    // count of knots strictly below x; at a knot this picks the left segment
    return static_cast<std::size_t>(
        std::lower_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
}

double PiecewiseFunction::evaluate(double x) const {
    if (!(x >= a_ && x <= b_)) throw std::domain_error("piecewise: x outside [a, b]");
    return segments_[segment_index(x)].value(x);
}

double PiecewiseFunction::derivative_jump(std::size_t knot_index, int order) const {
    if (knot_index >= knots_.size()) throw std::out_of_range("piecewise: bad knot index");
    if (order < 1 || order > kMaxDegree)
        throw std::domain_error("piecewise: jump order must be in 1..3");
    const double k = knots_[knot_index];
    return segments_[knot_index + 1].derivative(k, order) -
           segments_[knot_index].derivative(k, order);
}

PiecewiseFunction PiecewiseFunction::translate(double shift) const {
    std::vector<double> knots = knots_;
    for (auto& k : knots) k -= shift;
    std::vector<Polynomial> segs;
    segs.reserve(segments_.size());
    for (const auto& s : segments_) segs.push_back(s.translated(shift));
    return PiecewiseFunction(a_ - shift, b_ - shift, std::move(knots), std::move(segs));
}

PiecewiseFunction from_samples(const SampleSeries& samples, double slope_tolerance) {
    if (!(slope_tolerance >= 0.0))
        throw std::invalid_argument("from_samples: tolerance must be >= 0");
    const auto& pts = samples.points();

    std::vector<double> knots;
    std::vector<Polynomial> segments;
    std::size_t run_start = 0;
    double prev_slope = 0.0;

    auto flush_run = [&](std::size_t run_end) {
        // chord through the run's endpoints
        const auto [x0, y0] = pts[run_start];
        const auto [x1, y1] = pts[run_end];
        const double m = (y1 - y0) / (x1 - x0);
        segments.push_back(Polynomial({y0 - m * x0, m}));
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double slope = (pts[i + 1].second - pts[i].second) /
                             (pts[i + 1].first - pts[i].first);
        if (i > run_start && std::fabs(slope - prev_slope) > slope_tolerance) {
            flush_run(i);
            knots.push_back(pts[i].first);
            run_start = i;
        }
        prev_slope = slope;
    }
    flush_run(pts.size() - 1);

    return PiecewiseFunction(pts.front().first, pts.back().first, std::move(knots),
                             std::move(segments));
}

PiecewiseFunction reflected(const PiecewiseFunction& f) {
    const double s = f.a() + f.b();
    std::vector<double> knots;
    knots.reserve(f.knots().size());
    for (std::size_t i = f.knots().size(); i-- > 0;) knots.push_back(s - f.knots()[i]);

    std::vector<Polynomial> segments;
    segments.reserve(f.segment_count());
    for (std::size_t i = f.segment_count(); i-- > 0;) {
        // p(s - x) = sum_j c_j sum_i C(j,i) s^{j-i} (-x)^i
        const auto& c = f.segment(i).coefficients();
        std::vector<double> out(c.size(), 0.0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            double binom = 1.0;
            for (std::size_t k = 0; k <= j; ++k) {
                const double spow = std::pow(s, static_cast<double>(j - k));
                out[k] += c[j] * binom * spow * ((k % 2 == 0) ? 1.0 : -1.0);
                binom *= static_cast<double>(j - k) / static_cast<double>(k + 1);
            }
        }
        segments.emplace_back(std::move(out));
    }
    return PiecewiseFunction(f.a(), f.b(), std::move(knots), std::move(segments));
}

}  // namespace fracknot
