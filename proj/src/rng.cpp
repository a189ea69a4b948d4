#include "gibbs/rng.hpp"

#include <cmath>

#include "gibbs/errors.hpp"

namespace gibbs {

double sample_exponential(RngStream& rng) { return -std::log(rng.uniform_open()); }

double sample_normal(RngStream& rng) {
    // Box-Muller, no caching of the second variate: one draw consumes a
    // fixed number of uniforms, which keeps sequences reproducible.
    const double r = std::sqrt(2.0 * sample_exponential(rng));
    const double theta = 6.283185307179586476925286766559 * rng.uniform();
    return r * std::cos(theta);
}

double sample_gamma(double shape, RngStream& rng) {
    if (!(shape > 0.0)) throw DomainError("sample_gamma: shape must be > 0");
    if (shape < 1.0) {
        // boost to shape+1, then scale back by U^{1/shape}
        const double g = sample_gamma(shape + 1.0, rng);
        return g * std::pow(rng.uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = sample_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double sample_beta(double a, double b, RngStream& rng) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("sample_beta: parameters must be > 0");
    const double x = sample_gamma(a, rng);
    const double y = sample_gamma(b, rng);
    return x / (x + y);
}

}  // namespace gibbs
