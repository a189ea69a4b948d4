#include "gibbs/stable.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gibbs/errors.hpp"
#include "gibbs/quadrature.hpp"

namespace gibbs {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// exp() argument beyond which the result is +inf / below which it is 0
constexpr double kExpOverflow = 700.0;

}  // namespace

StableIndex::StableIndex(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0) || !std::isfinite(alpha))
        throw DomainError("StableIndex: alpha must lie in (0,1), got " +
                          std::to_string(alpha));
}

double stable_log_zolotarev_a(double u, StableIndex alpha) {
    const double a = alpha.value();
    return (a * std::log(std::sin(a * u)) +
            (1.0 - a) * std::log(std::sin((1.0 - a) * u)) - std::log(std::sin(u))) /
           (1.0 - a);
}

double stable_pdf(double x, StableIndex alpha, double abs_tol) {
    if (!(x > 0.0)) throw DomainError("stable_pdf: x must be > 0");
    const double a = alpha.value();

    // x^{-alpha/(1-alpha)}, the rate multiplying A(u) in the exponent
    const double rate = std::pow(x, -a / (1.0 - a));
    const double log_prefactor =
        std::log(a / ((1.0 - a) * kPi)) - std::log(x) / (1.0 - a);

    // A(u) is increasing, so A(0+) * rate already saturating exp() means the
    // whole integrand has underflowed: the density is 0 to double precision.
    const double log_a_min =
        (a * std::log(a) + (1.0 - a) * std::log(1.0 - a)) / (1.0 - a);
    if (rate * std::exp(log_a_min) > kExpOverflow + 50.0) return 0.0;

    const auto integrand = [a, rate, alpha](double u) {
        const double log_A = stable_log_zolotarev_a(u, alpha);
        if (log_A > kExpOverflow) return 0.0;  // A -> inf near u = pi
        const double A = std::exp(log_A);
        const double exponent = log_A - rate * A;
        return exponent < -kExpOverflow - 50.0 ? 0.0 : std::exp(exponent);
    };

    const double prefactor = std::exp(log_prefactor);
    const QuadratureResult quad = integrate_adaptive(
        integrand, 0.0, kPi, abs_tol / std::max(prefactor, 1e-300), 1e-12);
    if (!quad.converged)
        throw NumericError("stable_pdf: quadrature did not converge",
                           quad.error * prefactor);
    return prefactor * quad.value;
}

double sample_positive_stable(StableIndex alpha, RngStream& rng) {
    const double a = alpha.value();
    const double u = kPi * rng.uniform_open();
    const double e = sample_exponential(rng);
    return std::exp((1.0 - a) / a *
                    (stable_log_zolotarev_a(u, alpha) - std::log(e)));
}

namespace {

// One exponentially tilted draw by plain rejection; expects tilt^alpha <= ~1
// so the acceptance probability exp(-tilt^alpha) stays near exp(-1).
double tilted_rejection(StableIndex alpha, double tilt, RngStream& rng,
                        std::uint64_t& proposals) {
    for (;;) {
        const double t = sample_positive_stable(alpha, rng);
        ++proposals;
        if (rng.uniform() < std::exp(-tilt * t)) return t;
    }
}

double exp_tilted_impl(StableIndex alpha, double tilt, RngStream& rng,
                       std::uint64_t* rejections) {
    if (tilt == 0.0) return sample_positive_stable(alpha, rng);

    const double a = alpha.value();
    const double tilt_alpha = std::pow(tilt, a);
    // Split into m components so each carries tilt^alpha / m <= 1:
    //   X = m^{-1/alpha} * sum of m draws tilted at tilt * m^{-1/alpha}.
    const std::uint64_t m =
        tilt_alpha <= 1.0 ? 1 : static_cast<std::uint64_t>(std::ceil(tilt_alpha));
    const double sub_tilt = tilt * std::pow(static_cast<double>(m), -1.0 / a);

    std::uint64_t proposals = 0;
    double sum = 0.0;
    for (std::uint64_t j = 0; j < m; ++j)
        sum += tilted_rejection(alpha, sub_tilt, rng, proposals);
    if (rejections) *rejections += proposals - 1;
    return sum * std::pow(static_cast<double>(m), -1.0 / a);
}

}  // namespace

double sample_exp_tilted_stable(StableIndex alpha, double tilt, RngStream& rng,
                                std::uint64_t* rejections) {
    if (!(tilt >= 0.0))
        throw DomainError("sample_exp_tilted_stable: tilt must be >= 0");
    if (tilt > 1e8)
        throw DomainError("sample_exp_tilted_stable: tilt > 1e8 refused");
    return exp_tilted_impl(alpha, tilt, rng, rejections);
}

double sample_poly_tilted_stable(StableIndex alpha, int k, RngStream& rng,
                                 std::uint64_t* rejections) {
    if (k < 1) throw DomainError("sample_poly_tilted_stable: k must be >= 1");
    const double g = sample_gamma(static_cast<double>(k), rng);
    return exp_tilted_impl(alpha, std::pow(g, 1.0 / alpha.value()), rng, rejections);
}

std::int64_t sample_zeta(double sigma, RngStream& rng) {
    if (!(sigma > 1.0)) throw DomainError("sample_zeta: sigma must be > 1");
    const double s = sigma - 1.0;
    const double b = std::pow(2.0, s);
    // values past the int64 range are re-drawn; tail mass O(x^{-s}) there
    const double max_representable = 4.6e18;
    for (;;) {
        const double u = rng.uniform_open();
        const double v = rng.uniform();
        const double x = std::floor(std::pow(u, -1.0 / s));
        if (!(x >= 1.0) || x > max_representable) continue;
        const double t = std::pow(1.0 + 1.0 / x, s);
        if (v * x * (t - 1.0) / (b - 1.0) <= t / b)
            return static_cast<std::int64_t>(x);
    }
}

}  // namespace gibbs
