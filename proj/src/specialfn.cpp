#include "fracknot/specialfn.hpp"

#include <cmath>
#include <stdexcept>

namespace fracknot {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kSqrtTwoPi = 2.5066282746310002;

// Valid for x >= 0.5; smaller arguments are lifted with Gamma(x) = Gamma(x+1)/x.
double lanczos(double x) {
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (int k = 1; k < 9; ++k) series += kLanczos[k] / (z + k);
    const double t = z + 7.5;
    return kSqrtTwoPi * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: argument must be positive");
    if (x < 0.5) return lanczos(x + 1.0) / x;
    return lanczos(x);
}

double beta(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("beta: arguments must be positive");
    return gamma(p) * gamma(q) / gamma(p + q);
}

std::vector<double> gl_weights(double alpha, std::size_t n) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("gl_weights: order must lie in (0, 1)");
    std::vector<double> w(n + 1);
    w[0] = 1.0;
    for (std::size_t r = 1; r <= n; ++r) {
        const double rr = static_cast<double>(r);
        w[r] = w[r - 1] * ((rr - 1.0 - alpha) / rr);
    }
    return w;
}

}  // namespace fracknot
