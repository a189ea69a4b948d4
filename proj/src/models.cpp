#include "gibbs/models.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gibbs/errors.hpp"
#include "gibbs/incomplete_gamma.hpp"
#include "gibbs/multiprecision.hpp"

namespace gibbs {

namespace {

void check_state(int n, int k, const char* where) {
    if (n < 1 || k < 1 || k > n)
        throw DomainError(std::string(where) + ": need 1 <= k <= n, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace

GibbsModel::GibbsModel(StableIndex alpha, Tilt tilt)
    : alpha_(alpha), tilt_(std::move(tilt)) {
    const double a = alpha_.value();
    if (const auto* pd = std::get_if<PoissonDirichletTilt>(&tilt_)) {
        if (!(pd->theta > -a))
            throw DomainError("GibbsModel: theta must exceed -alpha");
    } else if (const auto* gg = std::get_if<GeneralizedGammaTilt>(&tilt_)) {
        if (!(gg->tau >= 0.0)) throw DomainError("GibbsModel: tau must be >= 0");
    } else if (const auto* gen = std::get_if<GenericTilt>(&tilt_)) {
        if (!gen->h || !gen->h_prime)
            throw DomainError("GibbsModel: generic tilt needs h and h'");
    }
}

GibbsModel GibbsModel::poisson_dirichlet(double alpha, double theta) {
    return GibbsModel(StableIndex(alpha), PoissonDirichletTilt{theta});
}

GibbsModel GibbsModel::generalized_gamma(double alpha, double tau) {
    return GibbsModel(StableIndex(alpha), GeneralizedGammaTilt{tau});
}

GibbsModel GibbsModel::stable(double alpha) {
    return GibbsModel(StableIndex(alpha), StableTilt{});
}

GibbsModel GibbsModel::generic(double alpha, std::function<double(double)> h,
                               std::function<double(double)> h_prime) {
    return GibbsModel(StableIndex(alpha),
                      GenericTilt{std::move(h), std::move(h_prime)});
}

double GibbsModel::log_h(double t) const {
    if (!(t > 0)) throw DomainError("GibbsModel::log_h: t must be > 0");
    const double a = alpha_.value();
    return std::visit(
        [&](const auto& tilt) -> double {
            using T = std::decay_t<decltype(tilt)>;
            if constexpr (std::is_same_v<T, PoissonDirichletTilt>) {
                if (tilt.theta == 0.0) return 0.0;  // limiting stable case
                // lgamma returns log|Gamma|; the signs of Gamma(theta) and
                // Gamma(theta/alpha) agree on theta in (-alpha, 0)
                return std::log(a) + std::lgamma(tilt.theta) -
                       std::lgamma(tilt.theta / a) - tilt.theta * std::log(t);
            } else if constexpr (std::is_same_v<T, GeneralizedGammaTilt>) {
                return std::pow(tilt.tau, a) - tilt.tau * t;
            } else if constexpr (std::is_same_v<T, StableTilt>) {
                return 0.0;
            } else {
                const double h = tilt.h(t);
                if (!(h > 0.0))
                    throw DomainError("GibbsModel::log_h: h(t) must be > 0");
                return std::log(h);
            }
        },
        tilt_);
}

double phi_h(const GibbsModel& model, double t) {
    if (!(t > 0)) throw DomainError("phi_h: t must be > 0");
    return std::visit(
        [&](const auto& tilt) -> double {
            using T = std::decay_t<decltype(tilt)>;
            if constexpr (std::is_same_v<T, PoissonDirichletTilt>) {
                return tilt.theta;
            } else if constexpr (std::is_same_v<T, GeneralizedGammaTilt>) {
                return tilt.tau * t;
            } else if constexpr (std::is_same_v<T, StableTilt>) {
                return 0.0;
            } else {
                const double h = tilt.h(t);
                if (!(h > 0.0)) throw DomainError("phi_h: h(t) must be > 0");
                return -t * tilt.h_prime(t) / h;
            }
        },
        model.tilt());
}

LogValue pd_log_v(int n, int k, double alpha, double theta) {
    check_state(n, k, "pd_log_v");
    StableIndex idx(alpha);
    if (!(theta > -alpha)) throw DomainError("pd_log_v: theta must exceed -alpha");

    // Kahan-compensated sums keep the V-ratio identities at machine precision
    // even for n in the hundreds.
    double num = 0.0, num_c = 0.0;
    for (int i = 1; i < k; ++i) {
        const double y = std::log(theta + i * alpha) - num_c;
        const double s = num + y;
        num_c = (s - num) - y;
        num = s;
    }
    double den = 0.0, den_c = 0.0;
    for (int i = 1; i < n; ++i) {
        const double y = std::log(theta + i) - den_c;
        const double s = den + y;
        den_c = (s - den) - y;
        den = s;
    }
    return LogValue::from_log(num - den);
}

LogValue ngg_log_v_series(int n, int k, double alpha, double tau,
                          int precision_digits) {
    check_state(n, k, "ngg_log_v_series");
    StableIndex idx(alpha);
    if (!(tau >= 0.0)) throw DomainError("ngg_log_v_series: tau must be >= 0");
    if (precision_digits < 1)
        throw DomainError("ngg_log_v_series: precision_digits must be >= 1");

    if (tau == 0.0)
        return LogValue::from_log((k - 1) * std::log(alpha) + std::lgamma(k) -
                                  std::lgamma(n));

    PrecisionGuard guard(static_cast<unsigned>(precision_digits));
    const BigFloat alpha_mp(alpha), tau_mp(tau);
    const BigFloat b = pow(tau_mp, alpha_mp);  // tau^alpha

    BigFloat sum = 0, max_abs = 0;
    BigFloat coeff = 1;  // C(n-1, i) * tau^i, alternating sign applied below
    for (int i = 0; i < n; ++i) {
        const BigFloat a_i = k - i / alpha_mp;
        const BigFloat term = coeff * upper_incomplete_gamma(a_i, b);
        if (i % 2 == 0)
            sum += term;
        else
            sum -= term;
        if (abs(term) > max_abs) max_abs = abs(term);
        coeff *= tau_mp * (n - 1 - i) / (i + 1);
    }

    const BigFloat threshold = max_abs * pow(BigFloat(10), -precision_digits / 2.0);
    if (!(sum > threshold))
        throw PrecisionError(
            PrecisionError::Kind::kInsufficientDigits,
            "ngg_log_v_series: alternating series cancelled below 10^{-digits/2} "
            "of its largest summand (n=" + std::to_string(n) +
                ", k=" + std::to_string(k) + ", digits=" +
                std::to_string(precision_digits) + "); raise precision_digits");

    const BigFloat log_v =
        (k - 1) * log(alpha_mp) + b - lgamma(BigFloat(n)) + log(sum);
    return LogValue::from_log(static_cast<double>(log_v));
}

double ngg_predictive_weight_exact(int n, int k, double alpha, double tau,
                                   int precision_digits) {
    check_state(n, k, "ngg_predictive_weight_exact");
    if (tau == 0.0) return alpha * k / n;  // stable case, exact

    const LogValue v_up = ngg_log_v_series(n + 1, k, alpha, tau, precision_digits);
    const LogValue v = ngg_log_v_series(n, k, alpha, tau, precision_digits);
    const double weight = 1.0 - (n - alpha * k) * log_ratio_to_linear(v_up, v);
    if (!(weight > 0.0 && weight < 1.0))
        throw PrecisionError(
            PrecisionError::Kind::kWeightOutOfRange,
            "ngg_predictive_weight_exact: weight " + std::to_string(weight) +
                " outside (0,1) at n=" + std::to_string(n) + ", k=" +
                std::to_string(k) + ", digits=" + std::to_string(precision_digits) +
                "; raise precision_digits or use the Monte Carlo backend",
            weight);
    return weight;
}

}  // namespace gibbs
