#include "fracknot/closedform.hpp"

#include <cmath>
#include <stdexcept>

#include "fracknot/specialfn.hpp"

namespace fracknot {

FractionalOrder FractionalOrder::derivative(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("order: derivative order must lie in (0, 1)");
    return FractionalOrder(alpha, OrderRole::derivative);
}

FractionalOrder FractionalOrder::integral(double alpha) {
    if (!(alpha < 0.0)) throw std::domain_error("order: integration order must be negative");
    return FractionalOrder(alpha, OrderRole::integral);
}

FracExpression::FracExpression(Side side, double alpha, std::vector<FracRegion> regions)
    : side_(side), alpha_(alpha), regions_(std::move(regions)) {
    if (regions_.empty()) throw std::invalid_argument("expression: no regions");
    for (std::size_t i = 0; i < regions_.size(); ++i) {
        if (!(regions_[i].from < regions_[i].to))
            throw std::invalid_argument("expression: empty region");
        if (i > 0 && regions_[i].from != regions_[i - 1].to)
            throw std::invalid_argument("expression: regions not contiguous");
    }
}

double FracExpression::evaluate(double x) const {
    if (!(x >= domain_begin() && x <= domain_end()))
        throw std::domain_error("expression: x outside domain");
    std::size_t r = 0;
    while (x > regions_[r].to) ++r;  // at a shared boundary the left region wins
    double acc = 0.0;
    for (const auto& t : regions_[r].terms) {
        double d = side_ == Side::left ? x - t.center : t.center - x;
        if (d < 0.0) d = 0.0;  // fp guard at region boundaries
        acc += t.coefficient * std::pow(d, t.exponent);
    }
    return acc;
}

double power_rule(double gamma_exp, double alpha, double a, double t) {
    if (!(gamma_exp > -1.0)) throw std::domain_error("power_rule: exponent must exceed -1");
    if (!(gamma_exp + 1.0 - alpha > 0.0))
        throw std::domain_error("power_rule: exponent + 1 - alpha must be positive");
    if (!(t > a)) throw std::domain_error("power_rule: t must exceed a");
    return gamma(gamma_exp + 1.0) / gamma(gamma_exp + 1.0 - alpha) *
           std::pow(t - a, gamma_exp - alpha);
}

namespace {

double require_derivative_order(const FractionalOrder& order) {
    if (order.role() != OrderRole::derivative)
        throw std::domain_error("closed form: requires a derivative order in (0, 1)");
    return order.alpha();
}

std::vector<FracRegion> make_regions(const PiecewiseFunction& f) {
    std::vector<FracRegion> regions(f.segment_count());
    double lo = f.a();
    for (std::size_t r = 0; r < regions.size(); ++r) {
        const double hi = r < f.knots().size() ? f.knots()[r] : f.b();
        regions[r].from = lo;
        regions[r].to = hi;
        lo = hi;
    }
    return regions;
}

}  // namespace

FracExpression jumarie_left_closed(const PiecewiseFunction& f, const FractionalOrder& order) {
    const double alpha = require_derivative_order(order);
    auto regions = make_regions(f);

    // The truncated-power decomposition of a continuous piecewise polynomial,
    //   f(x) = f(a) + sum_j p0^(j)(a)/j! (x-a)^j
    //               + sum_k sum_j jump_k^(j)/j! (x-k)_+^j,
    // maps term-wise under the left Jumarie derivative:
    //   (x-c)_+^j  ->  j!/Gamma(j+1-alpha) (x-c)_+^{j-alpha},
    // and the constant f(a) is annihilated by the offset.
    for (int j = 1; j <= kMaxDegree; ++j) {
        const double d = f.segment(0).derivative(f.a(), j);
        if (d == 0.0) continue;
        const FracTerm term{d / gamma(j + 1.0 - alpha), f.a(), j - alpha};
        for (auto& region : regions) region.terms.push_back(term);
    }
    for (std::size_t k = 0; k < f.knots().size(); ++k) {
        for (int j = 1; j <= kMaxDegree; ++j) {
            const double jump = f.derivative_jump(k, j);
            if (jump == 0.0) continue;
            const FracTerm term{jump / gamma(j + 1.0 - alpha), f.knots()[k], j - alpha};
            for (std::size_t r = k + 1; r < regions.size(); ++r)
                regions[r].terms.push_back(term);
        }
    }
    return FracExpression(Side::left, alpha, std::move(regions));
}

FracExpression jumarie_right_closed(const PiecewiseFunction& f, const FractionalOrder& order) {
    const double alpha = require_derivative_order(order);
    auto regions = make_regions(f);

    // Mirror expansion: with g(u) = f(b-u) the right derivative satisfies
    // f_R(x) = -g_L(b-x), which gives base terms (-1)^{j+1} q^(j)(b) at b and
    // jump terms (-1)^j jump_k^(j) at each knot, active for x left of it.
    const Polynomial& last = f.segment(f.segment_count() - 1);
    for (int j = 1; j <= kMaxDegree; ++j) {
        const double d = last.derivative(f.b(), j);
        if (d == 0.0) continue;
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        const FracTerm term{sign * d / gamma(j + 1.0 - alpha), f.b(), j - alpha};
        for (auto& region : regions) region.terms.push_back(term);
    }
    for (std::size_t k = 0; k < f.knots().size(); ++k) {
        for (int j = 1; j <= kMaxDegree; ++j) {
            const double jump = f.derivative_jump(k, j);
            if (jump == 0.0) continue;
            const double sign = (j % 2 == 1) ? -1.0 : 1.0;
            const FracTerm term{sign * jump / gamma(j + 1.0 - alpha), f.knots()[k], j - alpha};
            for (std::size_t r = 0; r <= k; ++r) regions[r].terms.push_back(term);
        }
    }
    return FracExpression(Side::right, alpha, std::move(regions));
}

}  // namespace fracknot
