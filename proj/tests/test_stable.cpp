#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gibbs/errors.hpp"
#include "gibbs/rng.hpp"
#include "gibbs/stable.hpp"
#include "test_support.hpp"

using namespace gibbs;

namespace {

// Levy closed form: f_{1/2}(x) = x^{-3/2} exp(-1/(4x)) / (2 sqrt(pi)) under
// the exp(-s^alpha) Laplace normalization.
double levy_pdf(double x) {
    return std::pow(x, -1.5) * std::exp(-1.0 / (4.0 * x)) /
           (2.0 * std::sqrt(M_PI));
}

double levy_cdf(double x) { return std::erfc(1.0 / (2.0 * std::sqrt(x))); }

// 0.01-level asymptotic critical value of the one-sample KS statistic
constexpr double kKsCritical001 = 1.62762;

}  // namespace

TEST_SUITE_BEGIN("stable");

TEST_CASE("pdf matches the Levy closed form at alpha = 1/2") {
    const StableIndex alpha(0.5);
    // log-spaced sweep of [0.05, 20]
    for (int i = 0; i <= 120; ++i) {
        const double x = 0.05 * std::pow(400.0, i / 120.0);
        const double expected = levy_pdf(x);
        const double got = stable_pdf(x, alpha);
        CHECK(std::fabs(got - expected) <= 1e-8 * expected);
    }
    CHECK(stable_pdf(1.0, alpha) == doctest::Approx(0.2196956).epsilon(1e-6));
}

TEST_CASE("pdf domain and small-x limit") {
    const StableIndex alpha(0.5);
    CHECK_THROWS_AS(stable_pdf(0.0, alpha), DomainError);
    CHECK_THROWS_AS(stable_pdf(-1.0, alpha), DomainError);
    CHECK(stable_pdf(1e-3, alpha) < 1e-80);
    CHECK(stable_pdf(1e-3, alpha) <= stable_pdf(1e-2, alpha));
}

TEST_CASE("pdf integrates to one at alpha = 0.75") {
    // independent integrator: boost exp_sinh over (0, inf)
    const StableIndex alpha(0.75);
    boost::math::quadrature::exp_sinh<double> integrator;
    const double total = integrator.integrate(
        [&](double x) { return stable_pdf(x, alpha, 1e-12); }, 1e-10);
    CHECK(std::fabs(total - 1.0) <= 1e-8);
}

TEST_CASE("stable index validation") {
    CHECK_THROWS_AS(StableIndex(0.0), DomainError);
    CHECK_THROWS_AS(StableIndex(1.0), DomainError);
    CHECK_THROWS_AS(StableIndex(-0.3), DomainError);
}

TEST_CASE("positive stable sampler satisfies its Laplace transform") {
    const StableIndex alpha(0.5);
    RngStream rng(314, 1);
    const int n = 100000;
    std::vector<double> transformed(n);
    for (auto& t : transformed)
        t = std::exp(-sample_positive_stable(alpha, rng));
    const auto ms = testsupport::mean_and_se(transformed);
    CHECK(std::fabs(ms.mean - std::exp(-1.0)) < 4.0 * ms.se);
}

TEST_CASE("degenerate transform argument s = 0") {
    const StableIndex alpha(0.5);
    RngStream rng(314, 2);
    for (int i = 0; i < 100; ++i)
        CHECK(std::exp(-0.0 * sample_positive_stable(alpha, rng)) == 1.0);
}

TEST_CASE("alpha = 1/2 samples follow the Levy law (KS at level 0.01)") {
    const StableIndex alpha(0.5);
    RngStream rng(314, 3);
    const int n = 100000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = sample_positive_stable(alpha, rng);
    const double d = testsupport::ks_statistic(std::move(xs), levy_cdf);
    CHECK(d < kKsCritical001 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("tilt = 0 falls through to the untilted sampler bit for bit") {
    const StableIndex alpha(0.6);
    RngStream a(99, 4), b(99, 4);
    for (int i = 0; i < 100; ++i)
        CHECK(sample_exp_tilted_stable(alpha, 0.0, a) ==
              sample_positive_stable(alpha, b));
}

TEST_CASE("tilted sampler satisfies the tilted Laplace transform") {
    // E[e^{-sX}] = exp(c^a - (c+s)^a); full grid runs in the acceptance suite
    struct Case {
        double alpha, c, s;
    };
    const Case cases[] = {{0.25, 1.0, 0.5}, {0.5, 1.0, 1.0}, {0.75, 3.0, 2.0}};
    int stream = 10;
    for (const auto& tc : cases) {
        const StableIndex alpha(tc.alpha);
        RngStream rng(314, static_cast<std::uint64_t>(stream++));
        const int n = 100000;
        std::vector<double> transformed(n);
        for (auto& t : transformed)
            t = std::exp(-tc.s * sample_exp_tilted_stable(alpha, tc.c, rng));
        const auto ms = testsupport::mean_and_se(transformed);
        const double expected =
            std::exp(std::pow(tc.c, tc.alpha) - std::pow(tc.c + tc.s, tc.alpha));
        CHECK(std::fabs(ms.mean - expected) < 4.0 * ms.se);
    }
}

TEST_CASE("acceptance rate decreases as the tilt grows") {
    const StableIndex alpha(0.5);
    const int n = 10000;

    const auto acceptance = [&](double tilt, std::uint64_t stream) {
        RngStream rng(555, stream);
        std::uint64_t rejections = 0;
        for (int i = 0; i < n; ++i)
            sample_exp_tilted_stable(alpha, tilt, rng, &rejections);
        return static_cast<double>(n) / static_cast<double>(n + rejections);
    };

    const double at_1 = acceptance(1.0, 20);
    const double at_100 = acceptance(100.0, 21);
    CHECK(at_100 < at_1);
    CHECK(at_1 > 0.3);     // ~ e^{-1}
    CHECK(at_100 < 0.06);  // ~ 1/(10 e)
}

TEST_CASE("tilt guardrails") {
    const StableIndex alpha(0.5);
    RngStream rng(1, 1);
    CHECK_THROWS_AS(sample_exp_tilted_stable(alpha, -0.1, rng), DomainError);
    CHECK_THROWS_AS(sample_exp_tilted_stable(alpha, 2e8, rng), DomainError);
}

TEST_CASE("poly-tilted negative moment matches the Gamma-ratio formula") {
    // E[X^{-alpha}] = Gamma(k alpha + 1) (k + 1) / Gamma((k+1) alpha + 1);
    // at k=1, alpha=1/2 this is sqrt(pi)
    const double expected_k1 = std::exp(std::lgamma(1.5) + std::log(2.0) -
                                        std::lgamma(2.0));
    CHECK(expected_k1 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    const StableIndex alpha(0.5);
    RngStream rng(777, 1);
    const int n = 100000;
    std::vector<double> moments(n);
    for (auto& m : moments)
        m = std::pow(sample_poly_tilted_stable(alpha, 1, rng), -0.5);
    const auto ms = testsupport::mean_and_se(moments);
    CHECK(std::fabs(ms.mean - std::sqrt(M_PI)) < 4.0 * ms.se);
}

TEST_CASE("poly-tilted density integrates to one at alpha = 0.5, k = 2") {
    const StableIndex alpha(0.5);
    const double log_norm = std::lgamma(2.0 * 0.5 + 1.0) - std::lgamma(3.0);
    boost::math::quadrature::exp_sinh<double> integrator;
    const double total = integrator.integrate(
        [&](double x) {
            return std::exp(log_norm - std::log(x)) * stable_pdf(x, alpha, 1e-12);
        },
        1e-9);
    CHECK(std::fabs(total - 1.0) <= 1e-6);
    // normalizing constant at k=1: Gamma(1.5)/Gamma(2) = sqrt(pi)/2
    CHECK(std::exp(std::lgamma(1.5) - std::lgamma(2.0)) ==
          doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-12));
}

TEST_CASE("zeta pmf ratio P(2)/P(1) = 2^{-1.5}") {
    RngStream rng(4242, 0);
    const int n = 1000000;
    std::int64_t ones = 0, twos = 0;
    for (int i = 0; i < n; ++i) {
        const std::int64_t z = sample_zeta(1.5, rng);
        ones += z == 1;
        twos += z == 2;
    }
    const double ratio = static_cast<double>(twos) / static_cast<double>(ones);
    // conservative delta-method SE for a ratio of multinomial counts
    const double se =
        ratio * std::sqrt(1.0 / static_cast<double>(twos) +
                          1.0 / static_cast<double>(ones));
    CHECK(std::fabs(ratio - std::pow(2.0, -1.5)) < 4.0 * se);
}

TEST_CASE("zeta at large sigma concentrates on 1") {
    RngStream rng(4242, 1);
    const int n = 100000;
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += sample_zeta(20.0, rng) == 1;
    CHECK(static_cast<double>(ones) / n > 0.999);
}

TEST_CASE("zeta rejects sigma <= 1") {
    RngStream rng(1, 0);
    CHECK_THROWS_AS(sample_zeta(1.0, rng), DomainError);
    CHECK_THROWS_AS(sample_zeta(0.5, rng), DomainError);
}

TEST_CASE("zeta goodness of fit on support truncated at 50") {
    RngStream rng(4242, 2);
    const int n = 100000;
    const double sigma = 1.5;

    std::vector<double> observed(50, 0.0);  // bins 1..49 plus the >= 50 tail
    for (int i = 0; i < n; ++i) {
        const std::int64_t z = sample_zeta(sigma, rng);
        observed[static_cast<std::size_t>(std::min<std::int64_t>(z, 50) - 1)] += 1;
    }

    // normalized pmf with the tail mass from Euler-Maclaurin:
    // sum_{z>=N} z^{-s} ~ N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12
    const double tail = 2.0 / std::sqrt(50.0) + 0.5 * std::pow(50.0, -1.5) +
                        sigma * std::pow(50.0, -2.5) / 12.0;
    double total = tail;
    for (int z = 1; z <= 49; ++z) total += std::pow(z, -sigma);
    std::vector<double> expected(50);
    for (int z = 1; z <= 49; ++z)
        expected[static_cast<std::size_t>(z - 1)] = n * std::pow(z, -sigma) / total;
    expected[49] = n * tail / total;

    const double stat = testsupport::chi_square_statistic(observed, expected);
    CHECK(stat < 74.919);  // chi-square(49) 0.99 quantile
}

TEST_CASE("samplers are deterministic given the stream") {
    const StableIndex alpha(0.4);
    RngStream a(8, 8), b(8, 8);
    for (int i = 0; i < 20; ++i) {
        CHECK(sample_positive_stable(alpha, a) == sample_positive_stable(alpha, b));
        CHECK(sample_exp_tilted_stable(alpha, 2.5, a) ==
              sample_exp_tilted_stable(alpha, 2.5, b));
        CHECK(sample_poly_tilted_stable(alpha, 3, a) ==
              sample_poly_tilted_stable(alpha, 3, b));
        CHECK(sample_zeta(1.5, a) == sample_zeta(1.5, b));
    }
}

TEST_SUITE_END();
